"""Exhaustive generation and classification of all small partial structures.

A structure on n elements is an n*n-digit number in base n+1: digit 0 means
the cell is undefined, digit k means the product is element k-1.  Enumeration
is counting, which gives exact coverage of the (n+1)**(n*n) search space,
deterministic order, and trivial range partitioning for parallel runs.

The per-code classification below works on a flat int table (-1 for
undefined cells) instead of constructing FinitePartialMagma values; its
verdicts are pinned to the public checkers by the test suite.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Iterator, Mapping

from .errors import CapacityError, DomainError
from .magma import FinitePartialMagma, serialize_magma

_LETTERS = ("a", "b", "c", "d")
_FLAG_NAMES = ("locality", "strong", "refined", "partial", "transitive")
_FLAG_LETTERS = "LSRPT"

EXHAUSTIVE_MAX = 3


def search_space_size(n: int) -> int:
    return (n + 1) ** (n * n)


def decode_magma(n: int, code: int) -> FinitePartialMagma:
    """The magma at position ``code`` in enumeration order."""
    if not 1 <= n <= len(_LETTERS):
        raise DomainError(f"carrier size must be 1..{len(_LETTERS)}")
    if not 0 <= code < search_space_size(n):
        raise DomainError(f"code {code} out of range for n={n}")
    labels = _LETTERS[:n]
    base = n + 1
    table = {}
    for i in range(n):
        for j in range(n):
            digit = code // base ** (i * n + j) % base
            if digit:
                table[(labels[i], labels[j])] = labels[digit - 1]
    return FinitePartialMagma(labels, table)


def encode_magma(m: FinitePartialMagma) -> int:
    """Inverse of decode_magma on its own carrier labels (any labels accepted)."""
    labels = m.elements
    n = len(labels)
    index = {x: i for i, x in enumerate(labels)}
    base = n + 1
    code = 0
    for (a, b), c in m.table.items():
        code += (index[c] + 1) * base ** (index[a] * n + index[b])
    return code


def _iter_tables(n: int, start: int = 0, stop: int | None = None):
    """Yield (code, table) for codes in [start, stop); the table list is reused."""
    base = n + 1
    cells = n * n
    total = search_space_size(n)
    if stop is None:
        stop = total
    t = []
    rem = start
    for _ in range(cells):
        t.append(rem % base - 1)
        rem //= base
    for code in range(start, stop):
        yield code, t
        i = 0
        while i < cells:
            t[i] += 1
            if t[i] < n:
                break
            t[i] = -1
            i += 1


# ---------------------------------------------------------------------------
# flat-table classification kernel

def _singleton_closure(n: int, t: list[int]) -> bool:
    rng = range(n)
    for a in rng:
        an = a * n
        for b in rng:
            ab = t[an + b]
            if ab < 0:
                continue
            bn = b * n
            abn = ab * n
            for c in rng:
                if t[an + c] >= 0 and t[bn + c] >= 0 and t[abn + c] < 0:
                    return False
                cn = c * n
                if t[cn + a] >= 0 and t[cn + b] >= 0 and t[cn + ab] < 0:
                    return False
    return True


def _subset_closure(n: int, t: list[int]) -> bool:
    """Literal polar closure over every subset, on bitmask subsets."""
    rng = range(n)
    for U in range(1, 1 << n):
        us = [u for u in rng if U >> u & 1]
        left = [x for x in rng if all(t[x * n + u] >= 0 for u in us)]
        lset = set(left)
        for a in left:
            an = a * n
            for b in left:
                ab = t[an + b]
                if ab >= 0 and ab not in lset:
                    return False
        right = [x for x in rng if all(t[u * n + x] >= 0 for u in us)]
        rset = set(right)
        for a in right:
            an = a * n
            for b in right:
                ab = t[an + b]
                if ab >= 0 and ab not in rset:
                    return False
    return True


def _locality_flag(n: int, t: list[int]) -> bool:
    if not _singleton_closure(n, t):
        return False
    rng = range(n)
    for a in rng:
        an = a * n
        for b in rng:
            ab = t[an + b]
            if ab < 0:
                continue
            bn = b * n
            for c in rng:
                bc = t[bn + c]
                if bc >= 0 and t[an + c] >= 0 and t[ab * n + c] != t[an + bc]:
                    return False
    return True


def _strong_flag(n: int, t: list[int]) -> bool:
    rng = range(n)
    for a in rng:
        an = a * n
        for b in rng:
            ab = t[an + b]
            if ab < 0:
                continue
            bn = b * n
            abn = ab * n
            for c in rng:
                bc = t[bn + c]
                if bc < 0:
                    continue
                x = t[abn + c]
                if x < 0 or x != t[an + bc]:
                    return False
    return True


def _refined_flag(n: int, t: list[int]) -> bool:
    rng = range(n)
    for a in rng:
        an = a * n
        for b in rng:
            ab = t[an + b]
            if ab < 0:
                continue
            bn = b * n
            abn = ab * n
            for c in rng:
                if (t[bn + c] >= 0) != (t[abn + c] >= 0):
                    return False
    for b in rng:
        bn = b * n
        for c in rng:
            bc = t[bn + c]
            if bc < 0:
                continue
            for a in rng:
                an = a * n
                if (t[an + b] >= 0) != (t[an + bc] >= 0):
                    return False
    for a in rng:
        an = a * n
        for b in rng:
            ab = t[an + b]
            if ab < 0:
                continue
            bn = b * n
            for c in rng:
                bc = t[bn + c]
                if bc >= 0 and t[ab * n + c] != t[an + bc]:
                    return False
    return True


def _partial_flag(n: int, t: list[int]) -> bool:
    rng = range(n)
    for a in rng:
        an = a * n
        for b in rng:
            ab = t[an + b]
            if ab < 0:
                continue
            bn = b * n
            abn = ab * n
            for c in rng:
                bc = t[bn + c]
                if bc < 0:
                    continue
                x = t[abn + c]
                y = t[an + bc]
                if (x >= 0) != (y >= 0):
                    return False
                if x >= 0 and x != y:
                    return False
    return True


def _transitive_flag(n: int, t: list[int]) -> bool:
    rng = range(n)
    for a in rng:
        an = a * n
        for b in rng:
            if t[an + b] < 0:
                continue
            bn = b * n
            for c in rng:
                if t[bn + c] >= 0 and t[an + c] < 0:
                    return False
    return True


def _table_flags(n: int, t: list[int]) -> tuple[bool, bool, bool, bool, bool]:
    return (_locality_flag(n, t), _strong_flag(n, t), _refined_flag(n, t),
            _partial_flag(n, t), _transitive_flag(n, t))


def _canonical_code(n: int, t: list[int], perms, powers) -> int:
    best = None
    for perm in perms:
        code = 0
        for i in range(n):
            pin = perm[i] * n
            for j in range(n):
                v = t[i * n + j]
                if v >= 0:
                    code += (perm[v] + 1) * powers[pin + perm[j]]
        if best is None or code < best:
            best = code
    return best


# ---------------------------------------------------------------------------
# public operations

def scan_flags(n: int) -> Iterator[tuple[int, tuple[bool, bool, bool, bool, bool]]]:
    """(code, flags) for every structure of carrier size n, in enumeration order."""
    if n > EXHAUSTIVE_MAX:
        raise CapacityError(
            f"exhaustive scan supported for n <= {EXHAUSTIVE_MAX}; use sampling for n={n}")
    for code, t in _iter_tables(n):
        yield code, _table_flags(n, t)


def enumerate_magmas(n: int) -> Iterator[FinitePartialMagma]:
    """Every structure of carrier size n exactly once, in enumeration order."""
    if n > EXHAUSTIVE_MAX:
        raise CapacityError(
            f"exhaustive enumeration supported for n <= {EXHAUSTIVE_MAX}; "
            f"use sample_magmas for n={n}")
    for code in range(search_space_size(n)):
        yield decode_magma(n, code)


def sample_magmas(n: int, count: int, seed: int) -> Iterator[FinitePartialMagma]:
    """``count`` structures drawn uniformly (with replacement) from size n."""
    rng = random.Random(seed)
    total = search_space_size(n)
    for _ in range(count):
        yield decode_magma(n, rng.randrange(total))


@dataclass(frozen=True)
class CensusRow:
    """One flag pattern: its mask, how many structures carry it, and the first one.

    ``pattern`` positions are locality, strong, refined, partial, transitive
    (letters L, S, R, P, T; '-' when the flag is off).  ``witness`` is the
    serialized first structure in enumeration order, ``witness_code`` its
    position.
    """

    pattern: str
    count: int
    witness_code: int
    witness: str


def _pattern_string(flags) -> str:
    return "".join(l if f else "-" for l, f in zip(_FLAG_LETTERS, flags))


def _census_range(n: int, start: int, stop: int) -> dict:
    out: dict[tuple, list[int]] = {}
    for code, t in _iter_tables(n, start, stop):
        flags = _table_flags(n, t)
        row = out.get(flags)
        if row is None:
            out[flags] = [1, code]
        else:
            row[0] += 1
    return out


def _rows_from_tally(n: int, tally: Mapping[tuple, list[int]]) -> list[CensusRow]:
    rows = []
    for flags, (count, code) in tally.items():
        rows.append(CensusRow(_pattern_string(flags), count, code,
                              serialize_magma(decode_magma(n, code))))
    return sorted(rows, key=lambda r: r.pattern)


def census(n: int, jobs: int = 1, dedup: bool = False) -> list[CensusRow]:
    """Classify every structure of size n and aggregate by flag pattern.

    With dedup=True, counts are of isomorphism classes (minimal code over all
    carrier permutations); the raw counts are the ones that sum to the
    closed-form search-space size.  Parallel runs partition the code range;
    the merge keeps the minimal witness code, so results do not depend on the
    worker count.  Dedup runs serially.
    """
    if n > EXHAUSTIVE_MAX:
        raise CapacityError(
            f"exhaustive census supported for n <= {EXHAUSTIVE_MAX}; "
            f"use sample_census for n={n}")
    total = search_space_size(n)
    if dedup:
        perms = list(itertools.permutations(range(n)))
        base = n + 1
        powers = [base ** k for k in range(n * n)]
        seen: dict[tuple, set[int]] = {}
        for code, t in _iter_tables(n):
            canon = _canonical_code(n, t, perms, powers)
            seen.setdefault(_table_flags(n, t), set()).add(canon)
        tally = {flags: [len(codes), min(codes)] for flags, codes in seen.items()}
        return _rows_from_tally(n, tally)
    if jobs <= 1 or total < 4 * jobs:
        return _rows_from_tally(n, _census_range(n, 0, total))
    bounds = [total * k // jobs for k in range(jobs + 1)]
    chunks = [(n, bounds[k], bounds[k + 1]) for k in range(jobs)]
    with get_context("fork").Pool(jobs) as pool:
        parts = pool.starmap(_census_range, chunks)
    merged: dict[tuple, list[int]] = {}
    for part in parts:
        for flags, (count, code) in part.items():
            row = merged.get(flags)
            if row is None:
                merged[flags] = [count, code]
            else:
                row[0] += count
                row[1] = min(row[1], code)
    return _rows_from_tally(n, merged)


def sample_census(n: int, count: int, seed: int) -> list[CensusRow]:
    """Census over ``count`` random codes; counts are sample tallies, not totals."""
    rng = random.Random(seed)
    total = search_space_size(n)
    base = n + 1
    cells = n * n
    tally: dict[tuple, list[int]] = {}
    for _ in range(count):
        code = rng.randrange(total)
        rem = code
        t = []
        for _ in range(cells):
            t.append(rem % base - 1)
            rem //= base
        flags = _table_flags(n, t)
        row = tally.get(flags)
        if row is None:
            tally[flags] = [1, code]
        else:
            row[0] += 1
            row[1] = min(row[1], code)
    return _rows_from_tally(n, tally)


def parse_flag_pattern(wanted: Mapping[str, bool]) -> dict[int, bool]:
    """Validate a partial flag assignment keyed by flag name."""
    positions = {}
    for name, value in wanted.items():
        if name not in _FLAG_NAMES:
            raise DomainError(f"unknown flag {name!r}; flags are {_FLAG_NAMES}")
        positions[_FLAG_NAMES.index(name)] = bool(value)
    return positions


def find_witness(pattern: Mapping[str, bool], n: int) -> FinitePartialMagma | None:
    """First structure in enumeration order matching every specified flag."""
    wanted = parse_flag_pattern(pattern)
    if n > EXHAUSTIVE_MAX:
        raise CapacityError(f"witness search supported for n <= {EXHAUSTIVE_MAX}")
    for code, t in _iter_tables(n):
        flags = _table_flags(n, t)
        if all(flags[pos] == val for pos, val in wanted.items()):
            return decode_magma(n, code)
    return None


def format_census_table(rows: list[CensusRow]) -> str:
    """Aligned table plus one machine-readable line per pattern."""
    lines = [f"{'pattern':<8} {'count':>10} {'code':>10}"]
    for r in rows:
        lines.append(f"{r.pattern:<8} {r.count:>10} {r.witness_code:>10}")
    lines.append(f"{'total':<8} {sum(r.count for r in rows):>10}")
    for r in rows:
        lines.append(f"pattern={r.pattern} count={r.count} code={r.witness_code}")
    return "\n".join(lines)
