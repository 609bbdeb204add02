"""Predicate-defined (possibly infinite) structures and their bounded checks.

The built-ins are the coprimality structures on the positive naturals (with
and without an adjoined zero), plain natural multiplication, and the finite
power-set structures under inclusion.  Bounded scans quantify over a finite
slice but evaluate the relation and the product exactly, so products falling
outside the slice are still tested honestly.  A positive bounded verdict
means "no counterexample within the bound", never a theorem; negative
verdicts carry exact witnesses that persist at every larger bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .errors import CapacityError, DomainError
from .magma import OK, FinitePartialMagma, Verdict, fail
from .checks import ClassReport, _assemble_report


def gcd(a: int, b: int) -> int:
    """Greatest common divisor by the remainder loop."""
    while b:
        a, b = b, a % b
    return abs(a)


def totient(n: int) -> int:
    """Count of 1 <= k <= n coprime to n, by direct counting.

    Deliberately not computed through factorization, so it can serve as an
    oracle independent of multiplicativity.
    """
    if n < 1:
        raise DomainError("totient needs a positive integer")
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@dataclass(frozen=True)
class PredicateMagma:
    """An intensional structure: membership, relation and product as functions.

    ``slice_elements`` maps a bound to the finite element list used by
    bounded scans; the product must be defined whenever the relation test
    passes on sliced elements.
    """

    description: str
    contains: Callable[[Any], bool]
    related: Callable[[Any, Any], bool]
    product: Callable[[Any, Any], Any]
    slice_elements: Callable[[int], list] | None = None


def coprime_magma() -> PredicateMagma:
    """Positive naturals under multiplication, related when coprime."""
    return PredicateMagma(
        description="positive naturals, coprime pairs, multiplication",
        contains=lambda a: isinstance(a, int) and a >= 1,
        related=lambda a, b: gcd(a, b) == 1,
        product=lambda a, b: a * b,
        slice_elements=lambda bound: list(range(1, bound + 1)),
    )


def coprime_with_zero() -> PredicateMagma:
    """Naturals with zero adjoined: zero pairs are related and absorb."""
    return PredicateMagma(
        description="naturals, coprime or zero pairs, multiplication",
        contains=lambda a: isinstance(a, int) and a >= 0,
        related=lambda a, b: a == 0 or b == 0 or gcd(a, b) == 1,
        product=lambda a, b: a * b,
        slice_elements=lambda bound: list(range(0, bound + 1)),
    )


def natural_multiplication() -> PredicateMagma:
    """Positive naturals under multiplication with the full relation."""
    return PredicateMagma(
        description="positive naturals, full relation, multiplication",
        contains=lambda a: isinstance(a, int) and a >= 1,
        related=lambda a, b: True,
        product=lambda a, b: a * b,
        slice_elements=lambda bound: list(range(1, bound + 1)),
    )


def bounded_magma(p: PredicateMagma, bound: int) -> FinitePartialMagma:
    """Finite restriction of a predicate structure to its slice at ``bound``.

    Related pairs whose product leaves the slice are dropped from the
    relation and recorded as escapes, mirroring sub_structure.
    """
    if p.slice_elements is None:
        raise DomainError("structure has no bounded slicer")
    elems = p.slice_elements(bound)
    labels = {e: str(e) for e in elems}
    inside = set(elems)
    table: dict[tuple[str, str], str] = {}
    escapes: list[tuple[tuple[str, str], str]] = []
    for a in elems:
        for b in elems:
            if p.related(a, b):
                c = p.product(a, b)
                if c in inside:
                    table[(labels[a], labels[b])] = labels[c]
                else:
                    escapes.append(((labels[a], labels[b]), str(c)))
    return FinitePartialMagma(tuple(labels.values()), table, escapes=tuple(escapes))


def powerset_magma(base: set, op: str) -> FinitePartialMagma:
    """All subsets of ``base``, related by inclusion, under union or intersection.

    Subset labels look like ``{1,3}`` with the empty set spelled ``{}``.
    """
    if op not in ("union", "intersection"):
        raise DomainError(f"op must be union or intersection, not {op!r}")
    items = sorted(base, key=str)
    if len(items) > 4:
        raise CapacityError("power set supported for base sets of size <= 4")
    subsets = []
    for mask in range(1 << len(items)):
        subsets.append(frozenset(x for i, x in enumerate(items) if mask >> i & 1))
    label = lambda s: "{" + ",".join(str(x) for x in sorted(s, key=str)) + "}"
    combine = frozenset.union if op == "union" else frozenset.intersection
    table = {}
    for a in subsets:
        for b in subsets:
            if a <= b:
                table[(label(a), label(b))] = label(combine(a, b))
    return FinitePartialMagma(tuple(label(s) for s in subsets), table)


def sampled_classify(p: PredicateMagma, bound: int) -> ClassReport:
    """Class verdicts quantified over the slice at ``bound``.

    The relation and products are evaluated exactly even when a product
    exceeds the bound.  Identity and zero searches quantify over the slice.
    """
    if p.slice_elements is None:
        raise DomainError("structure has no bounded slicer")
    elems = sorted(p.slice_elements(bound))
    return _assemble_report(elems, p.related, p.product, bound=bound)


def totient_hom_check(bound: int) -> Verdict:
    """totient(ab) == totient(a) * totient(b) for every coprime a, b with ab <= bound."""
    if bound < 2:
        raise DomainError("bound must be at least 2")
    for a in range(1, bound + 1):
        for b in range(1, bound // a + 1):
            if gcd(a, b) == 1 and totient(a * b) != totient(a) * totient(b):
                return fail("totient-multiplicative", (a, b),
                            f"phi({a * b})={totient(a * b)} != {totient(a)}*{totient(b)}")
    return OK
