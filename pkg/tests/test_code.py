import math
import random
from itertools import combinations

import pytest

from ellcode import linalg
from ellcode.curve import INFINITY, Point
from ellcode.code import (CodeError, LinearCode, ScalingVector,
                          mds_subset_check, subset_sum_counts,
                          subset_sum_counts_exhaustive)


@pytest.fixture(scope="module")
def code16(cert16, e16):
    return cert16.code(e16)


def test_rref_canonical(f25):
    rows = [[1, 2, 3, 4], [2, 4, 1, 3], [3, 1, 4, 2]]
    red, pivots = linalg.rref([list(r) for r in rows], f25)
    again, _ = linalg.rref([list(r) for r in red], f25)
    assert red == again
    for i, c in enumerate(pivots):
        assert red[i][c] == 1
        assert all(red[j][c] == 0 for j in range(len(red)) if j != i)


def test_dual_orthogonality_and_dims(code16, f16):
    d = code16.dual()
    assert (d.n, d.k) == (8, 4)
    assert code16.k + d.k == code16.n
    prod = linalg.mat_mul([list(r) for r in code16.matrix],
                          [list(c) for c in zip(*d.matrix)], f16)
    assert all(v == 0 for row in prod for v in row)


def test_dual_is_involution(code16):
    assert code16.dual().dual().same_code(code16)


def test_full_and_zero_codes(f16):
    full = LinearCode(f16, [[1 if i == j else 0 for j in range(3)]
                            for i in range(3)])
    zero = full.dual()
    assert zero.k == 0 and zero.n == 3
    assert zero.dual().same_code(full)
    with pytest.raises(CodeError):
        LinearCode(f16, [])


def test_hull_examples(code16, f16):
    assert code16.hull_dim() == 0
    u = ScalingVector(f16, [4, 4, 3, 3, 2, 2, 5, 5])
    assert code16.scale(u).hull_dim() == 4


def test_hull_of_dual_matches(code16):
    assert code16.dual().hull_dim() == code16.hull_dim()


def test_min_distance_examples(code16, f16):
    assert code16.min_distance() == 5
    rep = LinearCode(f16, [[1] * 6])
    assert rep.min_distance() == 6


def test_min_distance_budget(f25):
    big = LinearCode(f25, [[1 if i == j else 0 for j in range(12)]
                           for i in range(6)])
    with pytest.raises(CodeError):
        big.min_distance(budget=2 ** 20)


def test_scale_identities(code16, f16):
    ones = ScalingVector.ones(f16, 8)
    assert code16.scale(ones).same_code(code16)
    v = ScalingVector(f16, [3, 7, 2, 9, 11, 4, 6, 13])
    assert code16.scale(v).scale(v.inverse()).same_code(code16)
    assert code16.scale(v).weight_distribution() == code16.weight_distribution()


def test_scaling_vector_rejects_zero(f16):
    with pytest.raises(CodeError):
        ScalingVector(f16, [1, 0, 1])


def test_scale_length_mismatch(code16, f16):
    with pytest.raises(CodeError):
        code16.scale(ScalingVector(f16, [1, 1]))


def test_same_code(code16, f16):
    assert code16.same_code(code16)
    assert not code16.same_code(code16.dual())
    with pytest.raises(CodeError):
        code16.same_code(LinearCode(f16, [[1, 1]]))


def test_iso_dual_identity_via_scale(cert16, code16, f16):
    v = ScalingVector(f16, cert16.scaling_v)
    assert code16.scale(v).same_code(code16.dual())


def test_mds_subset_check_construction(cert16, e16, f16):
    st = e16.group_structure()
    pts = cert16.point_objects(e16)
    q1 = Point(f16.element(0), f16.element(11))
    assert mds_subset_check(pts, st, 4, q1) == 0
    count_zero = mds_subset_check(pts, st, 4, INFINITY)
    # pairs of inverse pairs alone give C(4,2) = 6 such subsets
    assert count_zero >= 6
    exhaustive = sum(
        1 for combo in combinations(pts, 4)
        if _group_sum(e16, combo) == INFINITY)
    assert count_zero == exhaustive
    assert mds_subset_check(pts, st, 0, INFINITY) == 1


def _group_sum(curve, pts):
    acc = INFINITY
    for p in pts:
        acc = curve.add(acc, p)
    return acc


def test_mds_subset_check_rejects_duplicates(cert16, e16):
    st = e16.group_structure()
    pts = cert16.point_objects(e16)
    with pytest.raises(CodeError):
        mds_subset_check(pts + [pts[0]], st, 4, INFINITY)


def test_dp_matches_exhaustive_random_groups():
    rng = random.Random(5)
    for _ in range(25):
        d1 = rng.choice([1, 2, 3, 4, 6])
        d2 = rng.choice([4, 6, 9, 12])
        n = rng.randrange(6, 17)
        k = rng.randrange(0, n + 1)
        coords = [(rng.randrange(d1), rng.randrange(d2)) for _ in range(n)]
        assert subset_sum_counts(coords, k, d1, d2) == \
            subset_sum_counts_exhaustive(coords, k, d1, d2)


def test_dp_total_count_is_binomial():
    coords = [(0, i % 7) for i in range(16)]
    counts = subset_sum_counts(coords, 8, 1, 7)
    assert sum(counts) == math.comb(16, 8)


def test_min_distance_vs_dp_consistency(e25, f25):
    # brute-forceable construction instances: d = n-k+1 iff DP count is 0
    from ellcode import ConstructionInput, construct2
    cert = construct2(ConstructionInput(e25, 4, 2))
    code = cert.code(e25)
    assert cert.mds_subset_count == 0
    assert code.min_distance() == code.n - code.k + 1


def test_singleton_bound_random_codes(f25):
    rng = random.Random(2)
    for _ in range(10):
        k, n = rng.randrange(1, 4), rng.randrange(4, 8)
        rows = [[rng.randrange(25) for _ in range(n)] for _ in range(k)]
        code = LinearCode(f25, rows, n=n)
        if code.k == 0:
            continue
        assert code.min_distance() <= code.n - code.k + 1


def test_mds_weight_count(code16, f16):
    # A_{n-k+1} = (q-1) C(n, k-1) for MDS codes
    wd = code16.weight_distribution()
    assert wd[5] == 15 * math.comb(8, 3)


def test_hull_gram_vs_stacked_on_scaled_codes(code16, f16):
    rng = random.Random(9)
    for _ in range(6):
        u = ScalingVector(f16, [rng.randrange(1, 16) for _ in range(8)])
        scaled = code16.scale(u)
        g = linalg.gram([list(r) for r in scaled.matrix], f16)
        h_gram = scaled.k - linalg.rank(g, f16)
        stacked = [list(r) for r in scaled.matrix] + \
            [list(r) for r in scaled.dual().matrix]
        h_stack = scaled.n - linalg.rank(stacked, f16)
        assert h_gram == h_stack == scaled.hull_dim()
