"""Finite carriers with a partial binary operation.

A structure is a finite set of labels plus a product table.  The table's key
set *is* the relation that marks which ordered pairs may be multiplied: a
pair either has a product or the product is undefined, there is no third
state.  Everything is immutable after construction and all iteration runs in
label-sorted order, so results (and violation witnesses downstream) are
reproducible.

Text format (UTF-8, line oriented, ``#`` starts a comment):

    elements: a b c
    op: a b -> c

One ``elements:`` line, one ``op:`` line per defined product.  Labels are
non-whitespace tokens not containing ``#``.  Duplicate op keys are a parse
error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import DomainError, ParseError

Pair = tuple[str, str]


def _check_label(label: str) -> str:
    if not label or "#" in label or any(ch.isspace() for ch in label):
        raise DomainError(
            f"bad label {label!r}: labels are non-empty tokens without '#' or whitespace"
        )
    return label


@dataclass(frozen=True)
class Witness:
    """A concrete axiom violation: axiom name plus the elements breaking it.

    ``elements`` holds one to three labels; ``detail`` is a short reason code
    such as ``"U={b}"`` or ``"(6,4) undefined"``.
    """

    axiom: str
    elements: tuple[str, ...]
    detail: str = ""


@dataclass(frozen=True)
class Verdict:
    """Outcome of an axiom check; falsy exactly when a witness exists."""

    ok: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.ok


OK = Verdict(True)


def fail(axiom: str, elements: Iterable, detail: str = "") -> Verdict:
    return Verdict(False, Witness(axiom, tuple(str(e) for e in elements), detail))


@dataclass(frozen=True)
class LocalitySet:
    """A carrier with a bare relation and no products (e.g. a quiver's arrows)."""

    elements: tuple[str, ...]
    relation: frozenset[Pair]

    def __post_init__(self):
        labels = tuple(_check_label(x) for x in self.elements)
        if len(set(labels)) != len(labels):
            raise DomainError("duplicate element labels")
        object.__setattr__(self, "elements", tuple(sorted(labels)))
        carrier = set(labels)
        for a, b in self.relation:
            if a not in carrier or b not in carrier:
                raise DomainError(f"relation pair ({a},{b}) uses labels outside the carrier")
        object.__setattr__(self, "relation", frozenset(self.relation))


@dataclass(frozen=True)
class FinitePartialMagma:
    """Finite carrier, relation and product table (the table's keys are the relation).

    ``escapes`` carries sub-structure closure violations: pairs that were
    related in an ambient structure but whose product left the chosen subset.
    It is metadata only and does not take part in equality.
    """

    elements: tuple[str, ...]
    table: dict[Pair, str]
    escapes: tuple[tuple[Pair, str], ...] = field(default=(), compare=False)

    def __post_init__(self):
        labels = tuple(_check_label(x) for x in self.elements)
        if not labels:
            raise DomainError("empty carrier")
        if len(set(labels)) != len(labels):
            raise DomainError("duplicate element labels")
        object.__setattr__(self, "elements", tuple(sorted(labels)))
        carrier = set(labels)
        clean: dict[Pair, str] = {}
        for key in sorted(self.table):
            a, b = key
            c = self.table[key]
            if a not in carrier or b not in carrier:
                raise DomainError(f"table key ({a},{b}) uses labels outside the carrier")
            if c not in carrier:
                raise DomainError(f"product {a}*{b} = {c} lies outside the carrier")
            clean[key] = c
        object.__setattr__(self, "table", clean)
        object.__setattr__(self, "escapes", tuple(self.escapes))

    @property
    def relation(self) -> frozenset[Pair]:
        return frozenset(self.table)

    def pairs(self) -> list[Pair]:
        return sorted(self.table)

    def is_total(self) -> bool:
        return len(self.table) == len(self.elements) ** 2

    def _check_subset(self, U: Iterable[str]) -> frozenset[str]:
        U = frozenset(U)
        stray = U - set(self.elements)
        if stray:
            raise DomainError(f"elements outside the carrier: {sorted(stray)}")
        return U

    def product(self, a: str, b: str) -> str | None:
        """Product of a defined pair, or None when (a, b) is unrelated."""
        self._check_subset((a, b))
        return self.table.get((a, b))

    def left_polar(self, U: Iterable[str]) -> frozenset[str]:
        """Elements related on the left to everything in U (all of them when U is empty)."""
        U = self._check_subset(U)
        return frozenset(x for x in self.elements if all((x, u) in self.table for u in U))

    def right_polar(self, U: Iterable[str]) -> frozenset[str]:
        """Elements related on the right to everything in U (all of them when U is empty)."""
        U = self._check_subset(U)
        return frozenset(x for x in self.elements if all((u, x) in self.table for u in U))

    def sub_structure(self, A: Iterable[str]) -> "FinitePartialMagma":
        """Restriction to A: related pairs of A whose product stays in A.

        Pairs whose product leaves A are dropped from the relation and kept
        in ``escapes`` so closure checks can report them.
        """
        A = self._check_subset(A)
        if not A:
            raise DomainError("restriction subset must be nonempty")
        kept: dict[Pair, str] = {}
        escaped: list[tuple[Pair, str]] = []
        for (a, b), c in self.table.items():
            if a in A and b in A:
                if c in A:
                    kept[(a, b)] = c
                else:
                    escaped.append(((a, b), c))
        return FinitePartialMagma(tuple(sorted(A)), kept, escapes=tuple(escaped))


def full_relation_magma(elements: Iterable[str], product: Callable[[str, str], str]) -> FinitePartialMagma:
    """Total structure: every ordered pair related, products from ``product``."""
    labels = tuple(sorted(elements))
    table = {(a, b): product(a, b) for a in labels for b in labels}
    return FinitePartialMagma(labels, table)


def parse_magma(text: str) -> FinitePartialMagma:
    """Parse the magma text format."""
    elements: tuple[str, ...] | None = None
    table: dict[Pair, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            if elements is not None:
                raise ParseError(f"line {lineno}: repeated elements line")
            elements = tuple(line[len("elements:"):].split())
            if not elements:
                raise ParseError(f"line {lineno}: elements line lists no labels")
        elif line.startswith("op:"):
            toks = line[len("op:"):].split()
            if len(toks) != 4 or toks[2] != "->":
                raise ParseError(f"line {lineno}: expected 'op: a b -> c'")
            a, b, _, c = toks
            if (a, b) in table:
                raise ParseError(f"line {lineno}: duplicate op key ({a},{b})")
            table[(a, b)] = c
        else:
            raise ParseError(f"line {lineno}: unrecognized line {line!r}")
    if elements is None:
        raise ParseError("missing elements line")
    try:
        return FinitePartialMagma(elements, table)
    except DomainError as exc:
        raise ParseError(str(exc)) from exc


def serialize_magma(m: FinitePartialMagma) -> str:
    lines = ["elements: " + " ".join(m.elements)]
    for (a, b) in m.pairs():
        lines.append(f"op: {a} {b} -> {m.table[(a, b)]}")
    return "\n".join(lines) + "\n"
