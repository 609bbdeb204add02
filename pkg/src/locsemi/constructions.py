"""Building new structures from old ones.

Identity and zero adjunction, generated closures, zero-completion of a
partial product to a total one, and restriction of a total semigroup to a
partial one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, NotAssociative, ParseError, PreconditionError
from .magma import OK, FinitePartialMagma, Verdict, fail, parse_magma, serialize_magma


def adjoin_identity(m: FinitePartialMagma, label: str) -> FinitePartialMagma:
    """Adjoin a fresh two-sided identity, related to everything and to itself."""
    if label in m.elements:
        raise DomainError(f"label {label!r} already in carrier")
    table = dict(m.table)
    table[(label, label)] = label
    for a in m.elements:
        table[(label, a)] = a
        table[(a, label)] = a
    return FinitePartialMagma(m.elements + (label,), table)


def adjoin_zero(m: FinitePartialMagma, label: str) -> FinitePartialMagma:
    """Adjoin a fresh two-sided zero, related to everything and to itself."""
    if label in m.elements:
        raise DomainError(f"label {label!r} already in carrier")
    table = dict(m.table)
    table[(label, label)] = label
    for a in m.elements:
        table[(label, a)] = label
        table[(a, label)] = label
    return FinitePartialMagma(m.elements + (label,), table)


def generated_sub_locality_semigroup(m: FinitePartialMagma, A: Iterable[str]) -> frozenset[str]:
    """Least superset of A closed under products of its related pairs.

    Fixpoint of one-step closure; terminates because the carrier is finite.
    The relation used at each step is the ambient one restricted to the
    current subset.
    """
    B = set(m._check_subset(A))
    if not B:
        raise DomainError("generating subset must be nonempty")
    while True:
        new = {c for (a, b), c in m.table.items() if a in B and b in B and c not in B}
        if not new:
            return frozenset(B)
        B |= new


@dataclass(frozen=True)
class SemigroupWithZero:
    """A total operation table with a designated absorbing zero label."""

    magma: FinitePartialMagma
    zero: str

    def __post_init__(self):
        if self.zero not in self.magma.elements:
            raise DomainError(f"zero label {self.zero!r} not in carrier")

    def product(self, a: str, b: str) -> str:
        return self.magma.table[(a, b)]


def _associativity_violation(m: FinitePartialMagma):
    """First triple (lex order) where the total table fails to associate, or None."""
    t = m.table
    for x, y, z in itertools.product(m.elements, repeat=3):
        lhs = t[(t[(x, y)], z)]
        rhs = t[(x, t[(y, z)])]
        if lhs != rhs:
            return (x, y, z), lhs, rhs
    return None


def complete_to_semigroup_with_zero(m: FinitePartialMagma, zero: str = "0") -> SemigroupWithZero:
    """Totalize the product by sending every unrelated pair to a fresh zero.

    The result is verified associative by brute force over all triples of the
    extended carrier; for refined inputs this cannot fail, for anything else
    the first breaking triple is raised as NotAssociative.
    """
    if zero in m.elements:
        raise DomainError(f"zero label {zero!r} already in carrier")
    elements = m.elements + (zero,)
    table: dict[tuple[str, str], str] = {}
    for a in elements:
        for b in elements:
            table[(a, b)] = m.table.get((a, b), zero)
    total = FinitePartialMagma(elements, table)
    broken = _associativity_violation(total)
    if broken is not None:
        triple, lhs, rhs = broken
        raise NotAssociative(triple, lhs, rhs)
    return SemigroupWithZero(total, zero)


def is_strong_semigroup_with_zero(t: SemigroupWithZero) -> Verdict:
    """A triple product is nonzero exactly when both adjacent products are nonzero."""
    m = t.magma
    if not m.is_total():
        raise PreconditionError("operation table is not total")
    broken = _associativity_violation(m)
    if broken is not None:
        triple, lhs, rhs = broken
        raise PreconditionError(
            f"not associative at ({','.join(triple)}): {lhs} != {rhs}")
    zero = t.zero
    for a in m.elements:
        if m.table[(zero, a)] != zero or m.table[(a, zero)] != zero:
            raise PreconditionError(f"designated zero {zero!r} does not absorb {a!r}")
    tab = m.table
    for a, b, c in itertools.product(m.elements, repeat=3):
        ab, bc = tab[(a, b)], tab[(b, c)]
        abc = tab[(ab, c)]
        if (abc != zero) != (ab != zero and bc != zero):
            side = "nonzero" if abc != zero else "zero"
            return fail("strong-zero", (a, b, c),
                        f"product {side} but factors {ab},{bc}")
    return OK


def partial_from_semigroup(t: FinitePartialMagma, A: Iterable[str]) -> FinitePartialMagma:
    """Restrict a total semigroup to A, relating pairs whose product stays in A.

    The output always satisfies the partial associative law: with a, b, c in
    A and ab, bc in A, both (ab)c and a(bc) equal the same ambient product,
    so the two memberships agree.
    """
    if not t.is_total():
        raise PreconditionError("operation table is not total")
    broken = _associativity_violation(t)
    if broken is not None:
        triple, lhs, rhs = broken
        raise PreconditionError(
            f"not associative at ({','.join(triple)}): {lhs} != {rhs}")
    A = t._check_subset(A)
    if not A:
        raise DomainError("subset must be nonempty")
    table = {}
    for a in sorted(A):
        for b in sorted(A):
            c = t.table[(a, b)]
            if c in A:
                table[(a, b)] = c
    return FinitePartialMagma(tuple(sorted(A)), table)


def serialize_semigroup_with_zero(t: SemigroupWithZero) -> str:
    return f"zero: {t.zero}\n" + serialize_magma(t.magma)


def parse_semigroup_with_zero(text: str) -> SemigroupWithZero:
    zero = None
    rest = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line.startswith("zero:"):
            if zero is not None:
                raise ParseError("repeated zero line")
            toks = line[len("zero:"):].split()
            if len(toks) != 1:
                raise ParseError("expected 'zero: <label>'")
            zero = toks[0]
        else:
            rest.append(raw)
    if zero is None:
        raise ParseError("missing zero line")
    magma = parse_magma("\n".join(rest))
    try:
        return SemigroupWithZero(magma, zero)
    except DomainError as exc:
        raise ParseError(str(exc)) from exc
