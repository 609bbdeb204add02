"""Directed multigraphs, path enumeration and composition, and the free
extension of arrow maps into refined targets.

A path carries its own source, target and arrow-label sequence, so
composition needs no quiver context.  Trivial paths (one per vertex, length
zero) compose as neutral elements on matching endpoints.  Path labels are
``e_<vertex>`` for trivial paths and the ``*``-joined arrow names otherwise.

Quiver text format (UTF-8, ``#`` comments):

    vertices: x y z
    arrow: alpha x y
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .errors import (CapacityError, CompositionUndefined, DomainError,
                     ParseError, PreconditionError)
from .magma import OK, FinitePartialMagma, LocalitySet, Verdict, fail, _check_label
from .checks import is_refined_locality_semigroup

Arrow = tuple[str, str, str]  # (name, source vertex, target vertex)


@dataclass(frozen=True)
class Path:
    """Trivial path at a vertex (no arrows) or a chain of composable arrows."""

    source: str
    target: str
    arrows: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.arrows and self.source != self.target:
            raise DomainError("trivial path must start and end at the same vertex")

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def label(self) -> str:
        return f"e_{self.source}" if not self.arrows else "*".join(self.arrows)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        verts = tuple(_check_label(v) for v in self.vertices)
        if len(set(verts)) != len(verts):
            raise DomainError("duplicate vertex labels")
        object.__setattr__(self, "vertices", tuple(sorted(verts)))
        vset = set(verts)
        names = set()
        arrows = []
        for name, s, t in self.arrows:
            _check_label(name)
            if name in names:
                raise DomainError(f"duplicate arrow label {name!r}")
            names.add(name)
            if s not in vset or t not in vset:
                raise DomainError(f"arrow {name}: endpoint not a declared vertex")
            arrows.append((name, s, t))
        object.__setattr__(self, "arrows", tuple(sorted(arrows)))
        object.__setattr__(self, "_endpoints", {a[0]: (a[1], a[2]) for a in arrows})

    def source(self, arrow: str) -> str:
        return self._endpoints[arrow][0]

    def target(self, arrow: str) -> str:
        return self._endpoints[arrow][1]

    def trivial_path(self, vertex: str) -> Path:
        if vertex not in self.vertices:
            raise DomainError(f"unknown vertex {vertex!r}")
        return Path(vertex, vertex)

    def path(self, arrow_labels: Iterable[str]) -> Path:
        """Build a nonempty path from arrow labels, validating the chain."""
        labels = tuple(arrow_labels)
        if not labels:
            raise DomainError("use trivial_path for length-zero paths")
        for name in labels:
            if name not in self._endpoints:
                raise DomainError(f"unknown arrow {name!r}")
        for prev, nxt in zip(labels, labels[1:]):
            if self.target(prev) != self.source(nxt):
                raise CompositionUndefined(
                    f"arrows {prev},{nxt} do not chain: "
                    f"{self.target(prev)} != {self.source(nxt)}")
        return Path(self.source(labels[0]), self.target(labels[-1]), labels)

    def paths_of_length(self, n: int) -> list[Path]:
        """All paths of exactly length n, label-sorted."""
        if n < 0:
            raise DomainError("length must be nonnegative")
        if n == 0:
            return [self.trivial_path(v) for v in self.vertices]
        out = [Path(s, t, (name,)) for name, s, t in self.arrows]
        for _ in range(n - 1):
            out = [Path(p.source, t, p.arrows + (name,))
                   for p in out for name, s, t in self.arrows if s == p.target]
        return sorted(out, key=lambda p: p.label)

    def paths_upto(self, max_len: int, capacity: int = 10000) -> list[Path]:
        out: list[Path] = []
        for k in range(max_len + 1):
            out.extend(self.paths_of_length(k))
            if len(out) > capacity:
                raise CapacityError(f"more than {capacity} paths up to length {max_len}")
        return out

    def arrow_locality_set(self) -> LocalitySet:
        """The arrows, related when the first one's target meets the second one's source."""
        names = tuple(a[0] for a in self.arrows)
        rel = frozenset((x, y) for x in names for y in names
                        if self.target(x) == self.source(y))
        return LocalitySet(names, rel)

    def is_acyclic(self) -> bool:
        """True when no oriented cycle exists (multi-edges are irrelevant here)."""
        succ: dict[str, set[str]] = {v: set() for v in self.vertices}
        for _, s, t in self.arrows:
            succ[s].add(t)
        state: dict[str, int] = {}  # 0 visiting, 1 done

        def visit(v: str) -> bool:
            state[v] = 0
            for w in succ[v]:
                if state.get(w) == 0:
                    return False
                if w not in state and not visit(w):
                    return False
            state[v] = 1
            return True

        return all(v in state or visit(v) for v in self.vertices)

    def longest_path_length(self) -> int | None:
        """Length of the longest path, or None for cyclic quivers."""
        if not self.is_acyclic():
            return None
        best = 0
        frontier = self.paths_of_length(1)
        length = 1
        while frontier:
            best = length
            length += 1
            frontier = self.paths_of_length(length)
        return best


def compose(p: Path, q: Path) -> Path:
    """Concatenate two paths when the first one ends where the second starts."""
    if p.target != q.source:
        raise CompositionUndefined(
            f"target {p.target} of {p.label} != source {q.source} of {q.label}")
    return Path(p.source, q.target, p.arrows + q.arrows)


def materialize_path_magma(q: Quiver, max_len: int,
                           capacity: int = 10000) -> tuple[FinitePartialMagma, list[tuple[str, str]]]:
    """All paths up to max_len as a finite structure under composition.

    Pairs with matching endpoints whose composite would exceed max_len are
    excluded from the relation and returned as the boundary list; when the
    boundary is empty the structure is the exact path semigroup of the
    quiver.  Class verdicts on truncations with a nonempty boundary are
    advisory only.
    """
    if max_len < 0:
        raise DomainError("max_len must be nonnegative")
    paths = sorted(q.paths_upto(max_len, capacity), key=lambda p: p.label)
    labels = [p.label for p in paths]
    if len(set(labels)) != len(labels):
        raise DomainError("path labels collide; rename arrows or vertices")
    table: dict[tuple[str, str], str] = {}
    boundary: list[tuple[str, str]] = []
    for p in paths:
        for r in paths:
            if p.target != r.source:
                continue
            if p.length + r.length <= max_len:
                table[(p.label, r.label)] = compose(p, r).label
            else:
                boundary.append((p.label, r.label))
    return FinitePartialMagma(tuple(labels), table), sorted(boundary)


def _check_arrow_map(q: Quiver, s: FinitePartialMagma, f: Mapping[str, str]) -> None:
    refined = is_refined_locality_semigroup(s)
    if not refined:
        w = refined.witness
        raise PreconditionError(
            f"target is not refined: {w.axiom} at ({','.join(w.elements)})")
    missing = [a[0] for a in q.arrows if a[0] not in f]
    if missing:
        raise DomainError(f"arrow map not total, missing {missing}")
    stray = sorted({f[a[0]] for a in q.arrows} - set(s.elements))
    if stray:
        raise DomainError(f"arrow map values outside target carrier: {stray}")
    for x, _, _ in q.arrows:
        for y, _, _ in q.arrows:
            if q.target(x) == q.source(y) and (f[x], f[y]) not in s.table:
                raise PreconditionError(
                    f"not a locality map: arrows ({x},{y}) land on "
                    f"unrelated pair ({f[x]},{f[y]})")


def free_extension(q: Quiver, s: FinitePartialMagma,
                   f: Mapping[str, str]) -> Callable[[Path], str]:
    """Extend an arrow map into a refined target over all nonempty paths.

    The extension folds the arrow decomposition left to right; every
    intermediate pair is related because the target is refined and f is a
    locality map on the arrows, which is asserted as the fold runs.  Trivial
    paths are outside the extension's domain.
    """
    _check_arrow_map(q, s, f)
    table = s.table

    def fbar(p: Path) -> str:
        if p.length == 0:
            raise DomainError("extension undefined on trivial paths")
        unknown = [a for a in p.arrows if a not in f]
        if unknown:
            raise DomainError(f"path uses arrows outside the map: {unknown}")
        acc = f[p.arrows[0]]
        for name in p.arrows[1:]:
            nxt = f[name]
            assert (acc, nxt) in table, "intermediate pair unrelated in refined target"
            acc = table[(acc, nxt)]
        return acc

    return fbar


def _fold_values(table: Mapping[tuple[str, str], str], vals: tuple[str, ...]) -> frozenset[str]:
    """Values of every full parenthesization of vals under the table."""

    @lru_cache(maxsize=None)
    def go(seq: tuple[str, ...]) -> frozenset[str]:
        if len(seq) == 1:
            return frozenset(seq)
        out = set()
        for i in range(1, len(seq)):
            for u in go(seq[:i]):
                for v in go(seq[i:]):
                    out.add(table[(u, v)])
        return frozenset(out)

    return go(vals)


def verify_free_property(q: Quiver, s: FinitePartialMagma, f: Mapping[str, str],
                         max_len: int, capacity: int = 10000) -> Verdict:
    """Check the extension behaves as the unique homomorphism up to max_len.

    (a) it restricts to f on the arrows, (b) it is a locality homomorphism on
    every composable pair of nonempty paths whose composite stays within
    max_len, and (c) its value is independent of fold order, which pins any
    homomorphism agreeing with f on arrows to the same values.
    """
    fbar = free_extension(q, s, f)
    paths = [p for p in q.paths_upto(max_len, capacity) if p.length > 0]
    for p in paths:
        if p.length == 1 and fbar(p) != f[p.arrows[0]]:
            return fail("free-arrow-restriction", (p.label,),
                        f"{fbar(p)}!={f[p.arrows[0]]}")
    for p, r in itertools.product(paths, repeat=2):
        if p.target != r.source or p.length + r.length > max_len:
            continue
        u, v = fbar(p), fbar(r)
        if (u, v) not in s.table:
            return fail("free-hom-relation", (p.label, r.label), f"({u},{v}) undefined")
        if s.table[(u, v)] != fbar(compose(p, r)):
            return fail("free-hom-product", (p.label, r.label),
                        f"{s.table[(u, v)]}!={fbar(compose(p, r))}")
    for p in paths:
        vals = _fold_values(s.table, tuple(f[a] for a in p.arrows))
        if vals != {fbar(p)}:
            return fail("free-fold-order", (p.label,), f"values {sorted(vals)}")
    return OK


def parse_quiver(text: str) -> Quiver:
    vertices: tuple[str, ...] | None = None
    arrows: list[Arrow] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if vertices is not None:
                raise ParseError(f"line {lineno}: repeated vertices line")
            vertices = tuple(line[len("vertices:"):].split())
            if not vertices:
                raise ParseError(f"line {lineno}: vertices line lists no labels")
        elif line.startswith("arrow:"):
            toks = line[len("arrow:"):].split()
            if len(toks) != 3:
                raise ParseError(f"line {lineno}: expected 'arrow: name source target'")
            arrows.append((toks[0], toks[1], toks[2]))
        else:
            raise ParseError(f"line {lineno}: unrecognized line {line!r}")
    if vertices is None:
        raise ParseError("missing vertices line")
    try:
        return Quiver(vertices, tuple(arrows))
    except DomainError as exc:
        raise ParseError(str(exc)) from exc


def serialize_quiver(q: Quiver) -> str:
    lines = ["vertices: " + " ".join(q.vertices)]
    for name, s, t in q.arrows:
        lines.append(f"arrow: {name} {s} {t}")
    return "\n".join(lines) + "\n"
