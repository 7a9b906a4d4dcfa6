import math
from fractions import Fraction
from itertools import product as cartesian

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multiplier_ideals.howald import Interval
from multiplier_ideals.johnson import (
    DeterminantalShape,
    det_exponents,
    det_jumping_candidates,
    det_lct,
    det_multiplier_ideal,
    minor_generators,
    partitions,
    symbolic_power_expansion,
)

from oracles import partition_counts

S452 = DeterminantalShape(4, 5, 2)
S453 = DeterminantalShape(4, 5, 3)


def test_shape_validation():
    for bad in [(0, 3, 1), (2, 2, 3), (3, 3, 0)]:
        with pytest.raises(ValueError):
            DeterminantalShape(*bad)


def test_exponents_4x5():
    assert det_exponents(S452, 10) == [1, -1]
    assert det_exponents(S452, 11) == [3, 0]
    assert det_exponents(S453, 6) == [-1, 1, 1]
    with pytest.raises(ValueError):
        det_exponents(S452, -1)


def test_multiplier_ideals_4x5():
    J10 = det_multiplier_ideal(S452, 10)
    assert J10.factors == ((1, 1),)
    J11 = det_multiplier_ideal(S452, 11)
    assert J11.factors == ((1, 3),)
    assert "I_1^3" in J11.containment_note()
    J6 = det_multiplier_ideal(S453, 6)
    assert J6.factors == ((2, 1), (3, 1))
    assert "equals I_3" in J6.containment_note()
    assert det_multiplier_ideal(S453, 5).is_unit()


def test_lct_values():
    assert det_lct(S452) == 10
    assert det_lct(S453) == 6
    assert det_lct(DeterminantalShape(1, 1, 1)) == 1


def brute_candidates(shape, interval, step_den=60):
    """Scan a fine grid for points where some exponent with value >= 1 increases."""
    found = {}
    hi = interval.hi
    grid = [Fraction(k, step_den) for k in range(0, int(hi * step_den) + 1)]
    for prev, c in zip(grid, grid[1:]):
        a0, a1 = det_exponents(shape, prev), det_exponents(shape, c)
        idx = tuple(i for i, (x, y) in enumerate(zip(a0, a1), 1) if y > x and y >= 1)
        if idx and c in interval:
            found[c] = idx
    return sorted(found.items())


def test_jumping_candidate_examples():
    got = det_jumping_candidates(S452, Interval(0, 11))
    assert got == [(Fraction(10), (1,)), (Fraction(21, 2), (1,)), (Fraction(11), (1,))]
    assert got == brute_candidates(S452, Interval(0, 11))
    got = det_jumping_candidates(S453, Interval(0, 6))
    assert got == [(Fraction(6), (2, 3))]
    assert det_jumping_candidates(S453, Interval(0, 5)) == []


@pytest.mark.parametrize("m, n, r", [(2, 3, 2), (3, 3, 2), (3, 4, 3), (4, 5, 3), (2, 2, 1)])
def test_candidates_match_grid_scan(m, n, r):
    shape = DeterminantalShape(m, n, r)
    interval = Interval(0, det_lct(shape) + 3)
    assert det_jumping_candidates(shape, interval) == brute_candidates(shape, interval)


def test_partitions_order():
    assert list(partitions(3)) == [(3,), (2, 1), (1, 1, 1)]
    assert list(partitions(1)) == [(1,)]


def test_expansion_examples():
    big = DeterminantalShape(4, 4, 4)
    assert symbolic_power_expansion(big, 1, 2).terms == ((2,), (1, 1))
    assert symbolic_power_expansion(big, 3, 1).terms == ((3,),)
    assert symbolic_power_expansion(big, 2, 3).terms == ((4,), (3, 2), (2, 2, 2))
    small = DeterminantalShape(2, 3, 2)
    assert symbolic_power_expansion(small, 2, 2).terms == ((2, 2),)
    with pytest.raises(ValueError):
        symbolic_power_expansion(big, 2, 0)


def test_expansion_counts_and_weights():
    p = partition_counts(8)
    big = DeterminantalShape(10, 10, 10)
    for i in (1, 2, 3):
        for a in range(1, 9):
            exp = symbolic_power_expansion(big, i, a)
            assert len(exp.terms) == p[a]
            assert all(sum(s - (i - 1) for s in t) == a for t in exp.terms)


def det_brute(shape, rows, cols, point):
    """Determinant of the selected submatrix via Fraction elimination."""
    a = [[Fraction(point[(i - 1) * shape.n + j - 1]) for j in cols] for i in rows]
    det = Fraction(1)
    k = len(a)
    for c in range(k):
        piv = next((r for r in range(c, k) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, k):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def test_minor_examples():
    two = DeterminantalShape(2, 2, 2)
    (g,) = minor_generators(two)
    assert g.format(two) == "x_1_1*x_2_2 - x_1_2*x_2_1"
    assert len(minor_generators(S453)) == 40
    ones = minor_generators(DeterminantalShape(3, 3, 1))
    assert len(ones) == 9
    assert sorted(g.terms[0][1].index(1) for g in ones) == list(range(9))


@pytest.mark.parametrize("m, n", list(cartesian(range(1, 6), range(1, 6))))
def test_minor_counts(m, n):
    for r in range(1, min(m, n) + 1):
        if math.factorial(r) * math.comb(m, r) * math.comb(n, r) > 20000:
            continue
        gens = minor_generators(DeterminantalShape(m, n, r))
        assert len(gens) == math.comb(m, r) * math.comb(n, r)
        for g in gens:
            assert len(g.terms) == math.factorial(r)
            if r >= 2:
                assert sum(s for s, _ in g.terms) == 0
            for _, v in g.terms:
                assert sum(v) == r


def test_minor_polynomials_evaluate_to_determinants():
    shape = DeterminantalShape(3, 4, 3)
    point = [3, -1, 4, 1, 5, -9, 2, 6, 5, 3, -5, 8]
    for g in minor_generators(shape):
        value = sum(s * math.prod(point[t] for t, e in enumerate(v) if e) for s, v in g.terms)
        assert value == det_brute(shape, g.rows, g.cols, point)


shapes = st.tuples(st.integers(1, 5), st.integers(1, 5)).flatmap(
    lambda mn: st.integers(1, min(mn)).map(lambda r: DeterminantalShape(mn[0], mn[1], r))
)


@settings(max_examples=60, deadline=None)
@given(shapes, st.fractions(0, 30, max_denominator=12), st.fractions(0, 30, max_denominator=12))
def test_exponents_monotone(shape, c1, c2):
    lo, hi = sorted((c1, c2))
    assert all(a <= b for a, b in zip(det_exponents(shape, lo), det_exponents(shape, hi)))


@settings(max_examples=60, deadline=None)
@given(shapes)
def test_lct_is_first_candidate(shape):
    t = det_lct(shape)
    cands = det_jumping_candidates(shape, Interval(0, t + 2))
    assert cands[0][0] == t
    assert det_multiplier_ideal(shape, t * Fraction(999, 1000)).is_unit()
    assert not det_multiplier_ideal(shape, t).is_unit()
