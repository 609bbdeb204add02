"""Axiom-class checkers returning verdicts with violation witnesses.

Every checker scans tuples in a fixed deterministic order: strictly
increasing tuples first (lexicographically), then all remaining tuples
(lexicographically).  The first violation found becomes the witness, so
reported counterexamples prefer distinct generic elements over degenerate
repeats, and reports are stable across runs.

The scan bodies are written against bare accessors (element list, relation
test, product function) so the same logic drives both finite tables here and
the bounded scans of predicate-defined structures.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import CapacityError, DomainError
from .magma import OK, FinitePartialMagma, Verdict, Witness, fail

Rel = Callable[[object, object], bool]
Mul = Callable[[object, object], object]


def _triples(elems: Sequence):
    yield from itertools.combinations(elems, 3)
    for t in itertools.product(elems, repeat=3):
        if not (t[0] < t[1] < t[2]):
            yield t


def _ordered_pairs(elems: Sequence):
    yield from itertools.combinations(elems, 2)
    for p in itertools.product(elems, repeat=2):
        if not p[0] < p[1]:
            yield p


# ---------------------------------------------------------------------------
# scan bodies, generic over (elements, related, product)

def _polar_closure_violation(elems, rel: Rel, mul: Mul) -> Verdict:
    # left closure: a, b both related into c and (a,b) related force (ab, c) related
    for a, b, c in _triples(elems):
        if rel(a, c) and rel(b, c) and rel(a, b) and not rel(mul(a, b), c):
            return fail("left-polar-closure", (a, b, c), f"U={{{c}}}")
    # right closure: c related into a, b and (a,b) related force (c, ab) related
    for a, b, c in _triples(elems):
        if rel(c, a) and rel(c, b) and rel(a, b) and not rel(c, mul(a, b)):
            return fail("right-polar-closure", (a, b, c), f"U={{{c}}}")
    return OK


def _locality_violation(elems, rel: Rel, mul: Mul) -> Verdict:
    v = _polar_closure_violation(elems, rel, mul)
    if not v:
        return v
    # both regrouped products are defined once the closures hold
    for a, b, c in _triples(elems):
        if rel(a, b) and rel(b, c) and rel(a, c):
            lhs = mul(mul(a, b), c)
            rhs = mul(a, mul(b, c))
            if lhs != rhs:
                return fail("locality-assoc", (a, b, c), f"{lhs}!={rhs}")
    return OK


def _strong_violation(elems, rel: Rel, mul: Mul) -> Verdict:
    for a, b, c in _triples(elems):
        if rel(a, b) and rel(b, c):
            ab, bc = mul(a, b), mul(b, c)
            if not rel(ab, c):
                return fail("strong-left", (a, b, c), f"({ab},{c}) undefined")
            if not rel(a, bc):
                return fail("strong-right", (a, b, c), f"({a},{bc}) undefined")
            lhs, rhs = mul(ab, c), mul(a, bc)
            if lhs != rhs:
                return fail("strong-assoc", (a, b, c), f"{lhs}!={rhs}")
    return OK


def _refined_violation(elems, rel: Rel, mul: Mul) -> Verdict:
    for a, b, c in _triples(elems):
        if rel(a, b):
            ab = mul(a, b)
            if rel(b, c) != rel(ab, c):
                if rel(b, c):
                    detail = f"({b},{c}) defined but ({ab},{c}) undefined"
                else:
                    detail = f"({ab},{c}) defined but ({b},{c}) undefined"
                return fail("refined-left", (a, b, c), detail)
    for a, b, c in _triples(elems):
        if rel(b, c):
            bc = mul(b, c)
            if rel(a, b) != rel(a, bc):
                if rel(a, b):
                    detail = f"({a},{b}) defined but ({a},{bc}) undefined"
                else:
                    detail = f"({a},{bc}) defined but ({a},{b}) undefined"
                return fail("refined-right", (a, b, c), detail)
    # membership transfers hold, so both sides below are defined
    for a, b, c in _triples(elems):
        if rel(a, b) and rel(b, c):
            lhs = mul(mul(a, b), c)
            rhs = mul(a, mul(b, c))
            if lhs != rhs:
                return fail("refined-assoc", (a, b, c), f"{lhs}!={rhs}")
    return OK


def _partial_violation(elems, rel: Rel, mul: Mul) -> Verdict:
    for a, b, c in _triples(elems):
        if rel(a, b) and rel(b, c):
            ab, bc = mul(a, b), mul(b, c)
            left_in, right_in = rel(ab, c), rel(a, bc)
            if left_in != right_in:
                if right_in:
                    detail = f"({ab},{c}) undefined, ({a},{bc}) defined"
                else:
                    detail = f"({a},{bc}) undefined, ({ab},{c}) defined"
                return fail("partial-membership", (a, b, c), detail)
            if left_in:
                lhs, rhs = mul(ab, c), mul(a, bc)
                if lhs != rhs:
                    return fail("partial-assoc", (a, b, c), f"{lhs}!={rhs}")
    return OK


def _transitive_violation(elems, rel: Rel) -> Verdict:
    for a, b, c in _triples(elems):
        if rel(a, b) and rel(b, c) and not rel(a, c):
            return fail("transitivity", (a, b, c), f"({a},{c}) undefined")
    return OK


def _sided_elements(elems, rel: Rel, mul: Mul, want) -> tuple[tuple, tuple, tuple]:
    left = tuple(
        e for e in elems if all(rel(e, a) and mul(e, a) == want(e, a) for a in elems)
    )
    right = tuple(
        e for e in elems if all(rel(a, e) and mul(a, e) == want(e, a) for a in elems)
    )
    both = tuple(e for e in left if e in right)
    return left, right, both


# ---------------------------------------------------------------------------
# public checkers on finite structures

def _accessors(m: FinitePartialMagma):
    table = m.table
    return m.elements, (lambda a, b: (a, b) in table), (lambda a, b: table[(a, b)])


def polar_closure_singletons(m: FinitePartialMagma) -> Verdict:
    """Left and right polar closure, reduced to singleton subsets.

    Sufficient for all subsets because the polar of U is the intersection of
    the polars of its singletons; check_polar_closure_subsets is the literal
    exponential evaluation kept as a cross-validation oracle.
    """
    return _polar_closure_violation(*_accessors(m))


def check_polar_closure_subsets(m: FinitePartialMagma) -> Verdict:
    """Literal polar closure over every subset of the carrier (2^n scan)."""
    n = len(m.elements)
    if n > 16:
        raise CapacityError(f"subset scan needs carrier <= 16, got {n}")
    for size in range(1, n + 1):
        for U in itertools.combinations(m.elements, size):
            desc = "U={" + ",".join(U) + "}"
            lp = m.left_polar(U)
            for a, b in _ordered_pairs(sorted(lp)):
                c = m.table.get((a, b))
                if c is not None and c not in lp:
                    return fail("left-polar-closure", (a, b), desc)
            rp = m.right_polar(U)
            for a, b in _ordered_pairs(sorted(rp)):
                c = m.table.get((a, b))
                if c is not None and c not in rp:
                    return fail("right-polar-closure", (a, b), desc)
    return OK


def is_locality_semigroup(m: FinitePartialMagma) -> Verdict:
    """Polar closures (singleton reduction) plus associativity on pairwise-related triples."""
    return _locality_violation(*_accessors(m))


def is_strong_locality_semigroup(m: FinitePartialMagma) -> Verdict:
    """Two chained related pairs force both regrouped products, defined and equal."""
    return _strong_violation(*_accessors(m))


def is_refined_locality_semigroup(m: FinitePartialMagma) -> Verdict:
    """Strong, with biconditional membership transfer on both sides."""
    return _refined_violation(*_accessors(m))


def is_partial_semigroup(m: FinitePartialMagma) -> Verdict:
    """(ab,c) related iff (a,bc) related, products equal when both are defined."""
    return _partial_violation(*_accessors(m))


def is_transitive(m: FinitePartialMagma) -> Verdict:
    elems, rel, _ = _accessors(m)
    return _transitive_violation(elems, rel)


def find_identities(m: FinitePartialMagma) -> tuple[tuple, tuple, tuple]:
    """(left, right, two-sided) identity elements, each list label-sorted.

    Uniqueness is not assumed; the lists may hold several elements.
    """
    elems, rel, mul = _accessors(m)
    return _sided_elements(elems, rel, mul, lambda e, a: a)


def find_zeros(m: FinitePartialMagma) -> tuple[tuple, tuple, tuple]:
    """(left, right, two-sided) zero elements, each list label-sorted."""
    elems, rel, mul = _accessors(m)
    return _sided_elements(elems, rel, mul, lambda e, a: e)


def is_locality_map(src, dst, phi: Mapping[str, str]) -> Verdict:
    """True when phi carries every related pair of src to a related pair of dst.

    src and dst only need ``elements`` and ``relation`` attributes, so bare
    locality sets (e.g. a quiver's arrows) work as well as full structures.
    """
    missing = [e for e in src.elements if e not in phi]
    if missing:
        raise DomainError(f"map not total, missing {missing}")
    stray = sorted({phi[e] for e in src.elements} - set(dst.elements))
    if stray:
        raise DomainError(f"map values outside target carrier: {stray}")
    dst_rel = dst.relation
    for a, b in sorted(src.relation):
        if (phi[a], phi[b]) not in dst_rel:
            return fail("locality-map", (a, b), f"({phi[a]},{phi[b]}) undefined")
    return OK


def is_locality_homomorphism(m1: FinitePartialMagma, m2: FinitePartialMagma,
                             phi: Mapping[str, str]) -> Verdict:
    """Locality map that also carries every defined product to the product of images."""
    v = is_locality_map(m1, m2, phi)
    if not v:
        return v
    for a, b in m1.pairs():
        lhs = phi[m1.table[(a, b)]]
        rhs = m2.table[(phi[a], phi[b])]
        if lhs != rhs:
            return fail("hom-product", (a, b), f"{lhs}!={rhs}")
    return OK


def _check_nonempty_subset(m: FinitePartialMagma, A) -> frozenset[str]:
    A = m._check_subset(A)
    if not A:
        raise DomainError("subset must be nonempty")
    return A


def is_sub_locality_semigroup(m: FinitePartialMagma, A: Iterable[str]) -> Verdict:
    """Products of related pairs inside A stay inside A."""
    A = _check_nonempty_subset(m, A)
    for a, b in _ordered_pairs(sorted(A)):
        c = m.table.get((a, b))
        if c is not None and c not in A:
            return fail("sub-closure", (a, b), f"product {c} escapes")
    return OK


def is_left_locality_ideal(m: FinitePartialMagma, A: Iterable[str]) -> Verdict:
    """Products s*a with a in A land in A, for every related (s, a)."""
    A = _check_nonempty_subset(m, A)
    for s, a in _ordered_pairs(m.elements):
        if a in A:
            c = m.table.get((s, a))
            if c is not None and c not in A:
                return fail("left-ideal", (s, a), f"product {c} escapes")
    return OK


def is_right_locality_ideal(m: FinitePartialMagma, A: Iterable[str]) -> Verdict:
    """Products a*s with a in A land in A, for every related (a, s)."""
    A = _check_nonempty_subset(m, A)
    for a, s in _ordered_pairs(m.elements):
        if a in A:
            c = m.table.get((a, s))
            if c is not None and c not in A:
                return fail("right-ideal", (a, s), f"product {c} escapes")
    return OK


def is_locality_ideal(m: FinitePartialMagma, A: Iterable[str]) -> Verdict:
    v = is_left_locality_ideal(m, A)
    if not v:
        return v
    return is_right_locality_ideal(m, A)


# ---------------------------------------------------------------------------
# aggregate classification

@dataclass(frozen=True)
class ClassReport:
    """All five class verdicts plus identity and zero element lists.

    ``bound`` is set on bounded scans of predicate-defined structures, in
    which case every verdict is quantified over the sliced elements only.
    """

    locality: Verdict
    strong: Verdict
    refined: Verdict
    partial: Verdict
    transitive: Verdict
    left_identities: tuple[str, ...]
    right_identities: tuple[str, ...]
    identities: tuple[str, ...]
    left_zeros: tuple[str, ...]
    right_zeros: tuple[str, ...]
    zeros: tuple[str, ...]
    bound: int | None = None

    def flags(self) -> tuple[bool, bool, bool, bool, bool]:
        return (self.locality.ok, self.strong.ok, self.refined.ok,
                self.partial.ok, self.transitive.ok)

    def render(self) -> str:
        parts = ["CLASS"]
        if self.bound is not None:
            parts.append(f"bound={self.bound}")
        for name, v in (("locality", self.locality), ("strong", self.strong),
                        ("refined", self.refined), ("partial", self.partial),
                        ("transitive", self.transitive)):
            parts.append(render_verdict(name, v))
        parts.append("identities=" + ",".join(self.identities))
        parts.append("zeros=" + ",".join(self.zeros))
        return " ".join(parts)


_PAIR_SHAPED = {
    "strong-left", "strong-right", "strong-assoc",
    "partial-membership", "partial-assoc",
    "refined-left", "refined-right", "refined-assoc",
    "transitivity",
}


def format_witness(w: Witness) -> str:
    e = w.elements
    if w.axiom in ("left-polar-closure", "right-polar-closure"):
        return f"{w.detail} via ({','.join(e)})"
    if w.axiom in _PAIR_SHAPED and len(e) == 3:
        return f"({e[0]},{e[1]}),({e[1]},{e[2]})"
    body = f"({','.join(e)})"
    return f"{body} {w.detail}" if w.detail else body


def render_verdict(name: str, v: Verdict) -> str:
    if v.ok:
        return f"{name}=yes"
    return f"{name}=no[witness: {v.witness.axiom} {format_witness(v.witness)}]"


def _assemble_report(elems, rel, mul, bound=None) -> ClassReport:
    locality = _locality_violation(elems, rel, mul)
    strong = _strong_violation(elems, rel, mul)
    refined = _refined_violation(elems, rel, mul)
    partial = _partial_violation(elems, rel, mul)
    transitive = _transitive_violation(elems, rel)
    li, ri, ident = _sided_elements(elems, rel, mul, lambda e, a: a)
    lz, rz, zero = _sided_elements(elems, rel, mul, lambda e, a: e)
    # class inclusions that hold for every structure; violations are bugs
    assert not refined.ok or strong.ok
    assert not strong.ok or (locality.ok and partial.ok)
    assert not (transitive.ok and locality.ok) or partial.ok
    s = lambda xs: tuple(str(x) for x in xs)
    return ClassReport(locality, strong, refined, partial, transitive,
                       s(li), s(ri), s(ident), s(lz), s(rz), s(zero), bound)


def classify(m: FinitePartialMagma) -> ClassReport:
    """Run every class predicate and the identity/zero searches."""
    elems, rel, mul = _accessors(m)
    return _assemble_report(elems, rel, mul)


# ---------------------------------------------------------------------------
# witness replay

def replay_witness(m: FinitePartialMagma, w: Witness) -> bool:
    """Re-evaluate the named axiom on the witness elements; True if it still violates."""
    rel = lambda a, b: (a, b) in m.table
    mul = lambda a, b: m.table.get((a, b))
    if len(w.elements) != 3:
        return False
    a, b, c = w.elements
    if w.axiom == "left-polar-closure":
        return (rel(a, c) and rel(b, c) and rel(a, b) and not rel(mul(a, b), c))
    if w.axiom == "right-polar-closure":
        return (rel(c, a) and rel(c, b) and rel(a, b) and not rel(c, mul(a, b)))
    if w.axiom == "locality-assoc":
        if not (rel(a, b) and rel(b, c) and rel(a, c)):
            return False
        lhs = mul(mul(a, b), c) if rel(mul(a, b), c) else None
        rhs = mul(a, mul(b, c)) if rel(a, mul(b, c)) else None
        return lhs is not None and rhs is not None and lhs != rhs
    if w.axiom.startswith("strong"):
        if not (rel(a, b) and rel(b, c)):
            return False
        ab, bc = mul(a, b), mul(b, c)
        if w.axiom == "strong-left":
            return not rel(ab, c)
        if w.axiom == "strong-right":
            return not rel(a, bc)
        return rel(ab, c) and rel(a, bc) and mul(ab, c) != mul(a, bc)
    if w.axiom == "refined-left":
        return rel(a, b) and rel(b, c) != rel(mul(a, b), c)
    if w.axiom == "refined-right":
        return rel(b, c) and rel(a, b) != rel(a, mul(b, c))
    if w.axiom == "refined-assoc":
        if not (rel(a, b) and rel(b, c)):
            return False
        ab, bc = mul(a, b), mul(b, c)
        return rel(ab, c) and rel(a, bc) and mul(ab, c) != mul(a, bc)
    if w.axiom == "partial-membership":
        if not (rel(a, b) and rel(b, c)):
            return False
        return rel(mul(a, b), c) != rel(a, mul(b, c))
    if w.axiom == "partial-assoc":
        if not (rel(a, b) and rel(b, c)):
            return False
        ab, bc = mul(a, b), mul(b, c)
        return rel(ab, c) and rel(a, bc) and mul(ab, c) != mul(a, bc)
    if w.axiom == "transitivity":
        return rel(a, b) and rel(b, c) and not rel(a, c)
    raise DomainError(f"cannot replay axiom {w.axiom!r}")


def replay_subset_witness(m: FinitePartialMagma, A: Iterable[str], w: Witness) -> bool:
    """Replay a sub-structure or ideal witness against the subset it targeted."""
    A = frozenset(A)
    if len(w.elements) != 2:
        return False
    x, y = w.elements
    c = m.table.get((x, y))
    if c is None:
        return False
    if w.axiom == "sub-closure":
        return x in A and y in A and c not in A
    if w.axiom == "left-ideal":
        return y in A and c not in A
    if w.axiom == "right-ideal":
        return x in A and c not in A
    raise DomainError(f"cannot replay axiom {w.axiom!r}")
