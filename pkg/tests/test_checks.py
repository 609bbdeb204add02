import random

import pytest
from hypothesis import given

from locsemi import (CapacityError, DomainError, FinitePartialMagma,
                     bounded_magma, check_polar_closure_subsets, classify,
                     coprime_magma, find_identities, find_zeros,
                     full_relation_magma, is_left_locality_ideal,
                     is_locality_homomorphism, is_locality_ideal,
                     is_locality_map, is_locality_semigroup,
                     is_partial_semigroup, is_refined_locality_semigroup,
                     is_right_locality_ideal, is_strong_locality_semigroup,
                     is_sub_locality_semigroup, is_transitive,
                     materialize_path_magma, polar_closure_singletons,
                     powerset_magma, replay_subset_witness, replay_witness,
                     totient)
from locsemi.enumeration import decode_magma, search_space_size
from locsemi.fixtures import fixture_magma, fixture_quiver

from strategies import magmas, random_magma

EX3_6 = fixture_magma("ex3_6")
EX3_8 = fixture_magma("ex3_8")
PSG = fixture_magma("ex3_psg_not_lsg")
EX4_3 = fixture_magma("ex4_3")
EMPTY = FinitePartialMagma(("a", "b"), {})


def test_locality_fixtures():
    assert is_locality_semigroup(EX3_8)
    v = is_locality_semigroup(PSG)
    assert not v
    assert v.witness.axiom == "left-polar-closure"
    assert v.witness.elements == ("b", "b", "b")
    assert v.witness.detail == "U={b}"
    assert is_locality_semigroup(EMPTY)


def test_subset_closure_fixtures():
    assert check_polar_closure_subsets(EX3_8)
    v = check_polar_closure_subsets(PSG)
    assert not v and v.witness.detail == "U={b}"
    assert check_polar_closure_subsets(EMPTY)
    big = FinitePartialMagma(tuple(f"x{i:02d}" for i in range(17)), {})
    with pytest.raises(CapacityError):
        check_polar_closure_subsets(big)


def _singleton_vs_subsets(m):
    assert bool(polar_closure_singletons(m)) == bool(check_polar_closure_subsets(m))


def test_singleton_reduction_exhaustive_n2():
    for n in (1, 2):
        for code in range(search_space_size(n)):
            _singleton_vs_subsets(decode_magma(n, code))


def test_singleton_reduction_random_corpus():
    rng = random.Random(20240817)
    for labels in (("a", "b", "c"), ("a", "b", "c", "d"), ("a", "b", "c", "d", "e")):
        for _ in range(120):
            _singleton_vs_subsets(random_magma(rng, labels))


def test_strong_fixtures():
    v = is_strong_locality_semigroup(EX3_6)
    assert not v
    assert v.witness.axiom == "strong-left"
    assert v.witness.elements == ("1", "0", "1")
    assert is_strong_locality_semigroup(EX4_3)
    assert is_strong_locality_semigroup(EMPTY)


def test_refined_fixtures():
    v = is_refined_locality_semigroup(EX4_3)
    assert not v
    assert v.witness.axiom == "refined-left"
    assert v.witness.elements == ("a", "b", "a")
    path_magma, _ = materialize_path_magma(fixture_quiver("ex2_17_quiver"), 2)
    assert is_refined_locality_semigroup(path_magma)
    total = full_relation_magma(("0", "1"), lambda a, b: str((int(a) + int(b)) % 2))
    assert is_refined_locality_semigroup(total)


def test_partial_fixtures():
    assert is_partial_semigroup(EX3_6)
    v = is_partial_semigroup(EX3_8)
    assert not v
    assert v.witness.axiom == "partial-membership"
    assert v.witness.elements == ("1", "0", "1")
    assert is_partial_semigroup(PSG)


def test_transitive_fixtures():
    assert is_transitive(powerset_magma({1, 2}, "union"))
    v = is_transitive(EX3_8)
    assert not v and v.witness.elements == ("1", "0", "1")
    assert is_transitive(full_relation_magma(("a",), lambda a, b: "a"))


def test_identities_and_zeros():
    pu = powerset_magma({1, 2}, "union")
    left, right, both = find_identities(pu)
    assert left == ("{}",) and both == ()
    pi = powerset_magma({1, 2}, "intersection")
    lz, rz, z = find_zeros(pi)
    assert lz == ("{}",) and z == ()
    assert find_identities(EMPTY) == ((), (), ())
    assert find_zeros(EMPTY) == ((), (), ())
    assert find_identities(EX3_6)[2] == ("0",)


def test_locality_map_and_homomorphism():
    ident = {x: x for x in EX3_8.elements}
    assert is_locality_homomorphism(EX3_8, EX3_8, ident)

    from locsemi import natural_multiplication
    m1 = bounded_magma(coprime_magma(), 30)
    m2 = bounded_magma(natural_multiplication(), 30)
    phi = {str(k): str(totient(k)) for k in range(1, 31)}
    assert is_locality_homomorphism(m1, m2, phi)
    # spot value from the totient oracle
    assert phi["12"] == "4" and totient(3) * totient(4) == 4

    with pytest.raises(DomainError):
        is_locality_map(EX3_8, EX3_8, {"0": "0"})
    with pytest.raises(DomainError):
        is_locality_map(EX3_8, EX3_8, {"0": "0", "1": "7"})


def test_locality_map_failure_has_witness():
    dst = FinitePartialMagma(("a", "b"), {("a", "a"): "a"})
    phi = {"0": "a", "1": "b"}
    v = is_locality_map(EX3_8, dst, phi)
    assert not v and v.witness.axiom == "locality-map"


def test_hom_product_failure():
    swap = {"0": "1", "1": "0"}
    # swap is a locality map on the symmetric part but breaks products
    m = FinitePartialMagma(("0", "1"),
                           {("0", "0"): "0", ("0", "1"): "0",
                            ("1", "0"): "0", ("1", "1"): "0"})
    v = is_locality_homomorphism(m, m, swap)
    assert not v and v.witness.axiom == "hom-product"


def test_sub_and_ideal_fixtures():
    slice12 = bounded_magma(coprime_magma(), 12)
    odds = frozenset(str(k) for k in range(1, 13, 2))
    assert is_sub_locality_semigroup(slice12, odds)
    v = is_left_locality_ideal(slice12, odds)
    assert not v
    assert v.witness.elements == ("2", "3")
    assert "6" in v.witness.detail
    assert not is_right_locality_ideal(slice12, odds)
    assert not is_locality_ideal(slice12, odds)

    pu = powerset_magma({1, 2}, "union")
    contains1 = frozenset(l for l in pu.elements if "1" in l)
    assert is_sub_locality_semigroup(pu, contains1)
    assert is_locality_ideal(pu, contains1)

    assert is_sub_locality_semigroup(EX3_8, EX3_8.elements)
    assert is_locality_ideal(EX3_8, EX3_8.elements)
    with pytest.raises(DomainError):
        is_sub_locality_semigroup(EX3_8, set())


def test_right_polar_closure_witness():
    # left closures hold; (c,a),(c,b),(a,b) related but (c, a*b)=(c,c) is not
    m = FinitePartialMagma(("a", "b", "c"),
                           {("c", "a"): "a", ("c", "b"): "a", ("a", "b"): "c"})
    v = is_locality_semigroup(m)
    assert not v
    assert v.witness.axiom == "right-polar-closure"
    assert v.witness.elements == ("a", "b", "c")
    assert v.witness.detail == "U={c}"
    assert replay_witness(m, v.witness)
    sub = check_polar_closure_subsets(m)
    assert not sub and sub.witness.axiom == "right-polar-closure"


def test_strong_right_witness():
    m = FinitePartialMagma(("a", "b", "c"),
                           {("a", "b"): "a", ("b", "c"): "a", ("a", "c"): "a"})
    v = is_strong_locality_semigroup(m)
    assert not v
    assert v.witness.axiom == "strong-right"
    assert v.witness.elements == ("a", "b", "c")
    assert replay_witness(m, v.witness)


def test_associativity_failure_witnesses():
    # full relation, so every membership clause passes and only products differ
    m = full_relation_magma(("a", "b"), lambda a, b: "b" if a == "a" else "a")
    cases = (
        (is_locality_semigroup, "locality-assoc"),
        (is_strong_locality_semigroup, "strong-assoc"),
        (is_refined_locality_semigroup, "refined-assoc"),
        (is_partial_semigroup, "partial-assoc"),
    )
    for check, axiom in cases:
        v = check(m)
        assert not v and v.witness.axiom == axiom, (axiom, v.witness)
        assert replay_witness(m, v.witness)


def test_classify_fixture_patterns():
    r = classify(EX3_6)
    assert r.flags() == (True, False, False, True, False)
    r = classify(EX4_3)
    assert (r.strong.ok, r.refined.ok) == (True, False)
    r = classify(EMPTY)
    assert r.flags() == (True, True, True, True, True)


def test_classify_line_format():
    line = classify(EX3_6).render()
    assert line.startswith("CLASS ")
    assert "locality=yes" in line
    assert "strong=no[witness: strong-left (1,0),(0,1)]" in line


def test_ex3_6_locality_flag_matches_independent_scan():
    # independent oracle: direct evaluation of the three locality conditions
    t = EX3_6.table
    elems = EX3_6.elements
    rel = lambda a, b: (a, b) in t
    ok = True
    for a in elems:
        for b in elems:
            for c in elems:
                if rel(a, c) and rel(b, c) and rel(a, b) and not rel(t[(a, b)], c):
                    ok = False
                if rel(c, a) and rel(c, b) and rel(a, b) and not rel(c, t[(a, b)]):
                    ok = False
                if rel(a, b) and rel(b, c) and rel(a, c):
                    if t[(t[(a, b)], c)] != t[(a, t[(b, c)])]:
                        ok = False
    assert ok is True
    assert bool(is_locality_semigroup(EX3_6)) == ok


@given(magmas(max_n=3))
def test_classify_inclusion_chain(m):
    r = classify(m)
    if r.refined.ok:
        assert r.strong.ok
    if r.strong.ok:
        assert r.locality.ok and r.partial.ok
    if r.transitive.ok and r.locality.ok:
        assert r.partial.ok


def test_witness_replay_exhaustive_n2():
    for code in range(search_space_size(2)):
        m = decode_magma(2, code)
        r = classify(m)
        for v in (r.locality, r.strong, r.refined, r.partial, r.transitive):
            if not v.ok:
                assert replay_witness(m, v.witness), (code, v.witness)


@given(magmas(max_n=4))
def test_witness_replay_random(m):
    r = classify(m)
    for v in (r.locality, r.strong, r.refined, r.partial, r.transitive):
        if not v.ok:
            assert replay_witness(m, v.witness)


def test_subset_witness_replay():
    slice12 = bounded_magma(coprime_magma(), 12)
    odds = frozenset(str(k) for k in range(1, 13, 2))
    for check in (is_left_locality_ideal, is_right_locality_ideal):
        v = check(slice12, odds)
        assert not v
        assert replay_subset_witness(slice12, odds, v.witness)
    v = is_sub_locality_semigroup(slice12, {"2", "3"})
    assert not v
    assert replay_subset_witness(slice12, {"2", "3"}, v.witness)
