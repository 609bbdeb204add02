import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locsemi import (CapacityError, DomainError, census, classify,
                     decode_magma, encode_magma, enumerate_magmas,
                     find_witness, format_census_table, sample_census,
                     sample_magmas, search_space_size)
from locsemi.enumeration import (_iter_tables, _singleton_closure,
                                 _subset_closure, _table_flags)
from locsemi import check_polar_closure_subsets, polar_closure_singletons


def test_search_space_sizes():
    assert search_space_size(1) == 2
    assert search_space_size(2) == 81
    assert search_space_size(3) == 262144


def test_enumerate_n1():
    ms = list(enumerate_magmas(1))
    assert len(ms) == 2
    assert ms[0].table == {}
    assert ms[1].table == {("a", "a"): "a"}


def test_enumerate_n2_count():
    assert sum(1 for _ in enumerate_magmas(2)) == 81


def test_enumerate_capacity():
    with pytest.raises(CapacityError):
        next(iter(enumerate_magmas(4)))


def test_sampling_is_seeded():
    a = [encode_magma(m) for m in sample_magmas(4, 20, seed=7)]
    b = [encode_magma(m) for m in sample_magmas(4, 20, seed=7)]
    c = [encode_magma(m) for m in sample_magmas(4, 20, seed=8)]
    assert a == b and a != c


@given(st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, search_space_size(n) - 1))))
def test_decode_encode_round_trip(nc):
    n, code = nc
    assert encode_magma(decode_magma(n, code)) == code


def test_decode_bounds():
    with pytest.raises(DomainError):
        decode_magma(2, 81)
    with pytest.raises(DomainError):
        decode_magma(5, 0)


def test_kernel_matches_checkers_exhaustive_small():
    for n in (1, 2):
        for code, t in _iter_tables(n):
            m = decode_magma(n, code)
            assert classify(m).flags() == _table_flags(n, t), (n, code)
            assert bool(polar_closure_singletons(m)) == _singleton_closure(n, t)
            assert bool(check_polar_closure_subsets(m)) == _subset_closure(n, t)


def test_kernel_matches_checkers_stride_n3():
    for code in range(0, search_space_size(3), 1013):
        rem, t = code, []
        for _ in range(9):
            t.append(rem % 4 - 1)
            rem //= 4
        m = decode_magma(3, code)
        assert classify(m).flags() == _table_flags(3, t), code
        assert bool(check_polar_closure_subsets(m)) == _subset_closure(3, t)


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, search_space_size(n) - 1))))
def test_kernel_matches_checkers_random(nc):
    n, code = nc
    base = n + 1
    rem, t = code, []
    for _ in range(n * n):
        t.append(rem % base - 1)
        rem //= base
    assert classify(decode_magma(n, code)).flags() == _table_flags(n, t)


def _rows_by_pattern(rows):
    return {r.pattern: r for r in rows}


def test_census_totals_small():
    rows1 = census(1)
    assert sum(r.count for r in rows1) == 2
    rows2 = census(2)
    assert sum(r.count for r in rows2) == 81


def test_census_witness_regions_n2():
    pats = [tuple(ch != "-" for ch in r.pattern) for r in census(2)]
    # locality, strong, refined, partial, transitive
    assert any(p[0] and not p[3] for p in pats)          # locality, not partial
    assert any(p[3] and not p[0] for p in pats)          # partial, not locality
    assert any(p[1] and not p[2] for p in pats)          # strong, not refined
    assert any(p[0] and p[3] and not p[1] for p in pats)  # locality+partial, not strong


def test_census_respects_inclusion_chain():
    for n in (1, 2):
        for r in census(n):
            loc, strong, refined, partial, trans = (ch != "-" for ch in r.pattern)
            assert not refined or strong
            assert not strong or (loc and partial)
            assert not (trans and loc) or partial


def test_census_witnesses_match_their_pattern():
    from locsemi import parse_magma
    for r in census(2):
        flags = classify(parse_magma(r.witness)).flags()
        assert r.pattern == "".join(
            l if f else "-" for l, f in zip("LSRPT", flags))
        assert encode_magma(parse_magma(r.witness)) == r.witness_code


def test_census_parallel_determinism():
    assert census(2, jobs=1) == census(2, jobs=2) == census(2, jobs=3)


def test_census_dedup_counts_bounded_by_raw():
    raw = _rows_by_pattern(census(2))
    dedup = _rows_by_pattern(census(2, dedup=True))
    assert set(raw) == set(dedup)
    for pattern, row in dedup.items():
        assert row.count <= raw[pattern].count
    # isomorphism classes of the diagonal-relation pair structures collapse
    assert sum(r.count for r in dedup.values()) < 81


def test_census_capacity():
    with pytest.raises(CapacityError):
        census(4)


def test_sample_census_seeded():
    a = sample_census(4, 200, seed=3)
    assert a == sample_census(4, 200, seed=3)
    assert sum(r.count for r in a) == 200


def test_find_witness_patterns():
    found = find_witness({"locality": True, "partial": True, "strong": False}, 2)
    assert found is not None
    rep = classify(found)
    assert rep.locality.ok and rep.partial.ok and not rep.strong.ok

    assert find_witness({"refined": True, "locality": False}, 2) is None

    first = find_witness({}, 2)
    assert first == decode_magma(2, 0)
    assert first.table == {}

    with pytest.raises(DomainError):
        find_witness({"shiny": True}, 2)
    with pytest.raises(CapacityError):
        find_witness({}, 4)


def test_format_census_table():
    text = format_census_table(census(2))
    assert "pattern=LSRPT count=16 code=0" in text
    assert text.splitlines()[0].startswith("pattern")
