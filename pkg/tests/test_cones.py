import random
from fractions import Fraction

import pytest

from matsemi import (Cone, Matrix, Ray, canonical_ray, contains, dual,
                     extreme_rays, is_invariant, properness)
from matsemi.cones import _nonneg_combination
from _fx import M, ones


def frac_rays(k):
    return [r.v for r in k.rays]


def orthant(n):
    return Cone.of(n, [[1 if i == j else 0 for i in range(n)]
                       for j in range(n)])


def random_cone(rng, n, nrays):
    rays = []
    while len(rays) < nrays:
        v = [rng.randint(-3, 3) for _ in range(n)]
        if any(v):
            rays.append(v)
    return Cone.of(n, rays)


def random_pointed_cone(rng, n, nrays):
    for _ in range(50):
        k = random_cone(rng, n, nrays)
        if properness(k).is_pointed:
            return k
    raise AssertionError("could not sample a pointed cone")


def test_canonical_ray():
    assert canonical_ray([2, -4]) == (Fraction(1, 2), Fraction(-1))
    assert canonical_ray([Fraction(1, 3)]) == (Fraction(1),)
    with pytest.raises(ValueError):
        canonical_ray([0, 0])


def test_ray_and_cone_validation():
    with pytest.raises(ValueError):
        Ray((Fraction(2),))  # not canonical
    k = Cone.of(2, [[2, 0], [1, 0], [0, 3]])
    assert frac_rays(k) == [(Fraction(0), Fraction(1)),
                            (Fraction(1), Fraction(0))]
    with pytest.raises(ValueError):
        Cone(2, (Ray((Fraction(1), Fraction(0))),
                 Ray((Fraction(1), Fraction(0)))))


def test_dual_orthant_fixed_point():
    for n in range(2, 6):
        assert frac_rays(dual(orthant(n))) == frac_rays(orthant(n))


def test_dual_of_zero_cone_is_everything():
    z = Cone.of(3, [])
    d = dual(z)
    # +-e_i for each axis
    assert len(d.rays) == 6
    for v in [(1, 0, 0), (-1, 0, 0), (3, -2, 1)]:
        assert contains(d, v)


def test_dual_halfline_has_lineality():
    k = Cone.of(2, [[1, 0]])
    d = dual(k)
    assert set(frac_rays(d)) == {
        (Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(1)),
        (Fraction(0), Fraction(-1)),
    }
    rep = properness(d)
    assert not rep.is_pointed and rep.is_solid


def test_dual_of_full_line_is_orthogonal_complement():
    k = Cone.of(2, [[1, 1], [-1, -1]])
    d = dual(k)
    assert set(frac_rays(d)) == {
        (Fraction(1), Fraction(-1)),
        (Fraction(-1), Fraction(1)),
    }


def test_dual_known_order_cone():
    K3 = Cone.of(3, [[1, 0, 0], [0, 1, 0], [0, 1, 1]])
    want = sorted([
        (Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
        (Fraction(0), Fraction(1), Fraction(-1)),
    ])
    assert frac_rays(dual(K3)) == want


def test_dual_inequalities_hold_exactly():
    rng = random.Random(91)
    for _ in range(60):
        n = rng.randint(1, 4)
        k = random_cone(rng, n, rng.randint(1, 5))
        d = dual(k)
        for r in k.rays:
            for c in d.rays:
                assert sum(a * b for a, b in zip(r.v, c.v)) >= 0


def test_double_dual_restores_extreme_rays():
    rng = random.Random(92)
    for _ in range(60):
        n = rng.randint(2, 4)
        k = random_pointed_cone(rng, n, rng.randint(1, 5))
        dd = dual(dual(k))
        assert properness(dd).is_pointed
        got = sorted(r.v for r in extreme_rays(dd))
        want = sorted(r.v for r in extreme_rays(k))
        assert got == want


def test_properness_cases():
    rep = properness(Cone.of(2, [[1, 0], [0, 1]]))
    assert rep.is_pointed and rep.is_solid and rep.is_proper
    rep = properness(Cone.of(2, [[1, 0]]))
    assert rep.is_pointed and not rep.is_solid
    rep = properness(Cone.of(2, [[1, 0], [-1, 0], [0, 1]]))
    assert not rep.is_pointed and rep.is_solid
    rep = properness(Cone.of(2, []))
    assert rep.is_pointed and not rep.is_solid


def test_extreme_rays_prunes_redundant():
    k = Cone.of(2, [[1, 0], [1, 1], [0, 1], [1, 2]])
    ext = sorted(r.v for r in extreme_rays(k))
    assert ext == [(Fraction(0), Fraction(1)), (Fraction(1), Fraction(0))]
    with pytest.raises(ValueError):
        extreme_rays(Cone.of(2, [[1, 0], [-1, 0]]))


def test_extreme_rays_of_zero_cone_is_empty():
    assert extreme_rays(Cone.of(2, [])) == ()


def test_contains_agrees_with_simplex_certificate():
    rng = random.Random(93)
    for _ in range(120):
        n = rng.randint(1, 4)
        k = random_cone(rng, n, rng.randint(1, 5))
        v = tuple(Fraction(rng.randint(-4, 4)) for _ in range(n))
        via_dual = contains(k, v)
        via_simplex = _nonneg_combination([r.v for r in k.rays], v) is not None
        assert via_dual == via_simplex


def test_nonneg_combination_is_exact():
    cols = [(Fraction(1), Fraction(0)), (Fraction(1), Fraction(1))]
    coeffs = _nonneg_combination(cols, (Fraction(3), Fraction(2)))
    assert coeffs == [Fraction(1), Fraction(2)]
    assert _nonneg_combination(cols, (Fraction(-1), Fraction(0))) is None
    assert _nonneg_combination([], (Fraction(0),)) == []
    assert _nonneg_combination([], (Fraction(1),)) is None


def test_is_invariant_known():
    K = Cone.of(2, [[1, 0], [1, 1]])
    assert is_invariant(M([[1, -1], [0, 0]]), K)
    assert not is_invariant(M([[0, 0], [1, -1]]), K)
    assert is_invariant(ones(2), orthant(2))
    with pytest.raises(ValueError):
        is_invariant(M([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), K)
    from matsemi import Scalar
    with pytest.raises(ValueError):
        is_invariant(Matrix.from_rows([[Scalar(0, 1), 0], [0, 1]]), K)


def test_invariance_matches_membership_of_images():
    rng = random.Random(94)
    for _ in range(60):
        n = rng.randint(1, 3)
        k = random_cone(rng, n, rng.randint(1, 4))
        m = M([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        want = all(
            contains(k, tuple(
                sum(m.entry(i, j).re * r.v[j] for j in range(n))
                for i in range(n)))
            for r in k.rays)
        assert is_invariant(m, k) == want
