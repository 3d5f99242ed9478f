import random
from fractions import Fraction
from itertools import permutations, product
from math import comb, cos, pi, sin

import numpy as np
import pytest

from tdesign.configspace import ConfigurationError, WeightedPointSet, antipodal_half_indices
from tdesign.constructions import cross_polytope, e8_roots, regular_polygon, two_octagons
from tdesign.polyspace import gegenbauer, monomials_up_to
from tdesign.surd import QuadraticSurd
from tdesign.verify import (
    classify_tightness,
    cross_shell_zero_check,
    design_residuals,
    design_strength,
    dim_P_e_S,
    dim_P_star_e_S,
    dual_identity_residual,
    intersection_numbers,
    kernel_identity_residuals,
    moeller_bound,
    radial_basis,
)


def rotation(theta):
    return np.array([[cos(theta), -sin(theta)], [sin(theta), cos(theta)]])


# ------------------------------------------------------------- residuals

def test_octagon_design_residuals(octagons):
    rep = design_residuals(octagons, 9)
    assert rep.passed and rep.max_residual <= 1e-12
    bad = design_residuals(octagons, 10)
    assert not bad.passed and bad.per_degree[10] > 1e-3
    assert bad.strength() == 9


def test_degree_ten_residual_value(octagons):
    # x^10 is the worst offender; compare with a direct computation
    pts, w = octagons.as_array(), np.array(octagons.weights)
    lhs = float(np.sum(w * pts[:, 0] ** 10))
    avg = 63 / 256  # average of cos^10 on the circle
    rhs = (8 * 1 * 1 + 8 * 2**10 / 256) * avg
    assert design_residuals(octagons, 10).per_degree[10] >= abs(lhs - rhs) - 1e-12


@pytest.mark.parametrize("m", range(3, 13))
def test_polygon_is_m_minus_1_design(m):
    cfg = regular_polygon(m)
    assert design_residuals(cfg, m - 1).passed
    assert not design_residuals(cfg, m).passed


@pytest.mark.parametrize("n", [2, 3, 5])
def test_cross_polytope_strength(n):
    assert design_strength(cross_polytope(n), 4) == 3


def test_exact_backend_gives_exact_zero():
    rep = design_residuals(cross_polytope(3), 3)
    assert rep.backend == "rational" and rep.max_residual == 0
    four = design_residuals(cross_polytope(3), 4).per_degree[4]
    assert four == 2 - Fraction(6 * 3, 15)  # x1^4: point side 2, measure side 6 * 3/15


def test_e8_strength():
    e8 = e8_roots()
    assert design_strength(e8, 8) == 7
    assert classify_tightness(e8, 7).label == "tight on 1 sphere"


def test_origin_weight_counts_in_degree_zero():
    cfg = WeightedPointSet.from_points([(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)], [5, 1, 1, 1, 1])
    assert design_residuals(cfg, 3).passed


def test_rotation_invariance(octagons):
    rng = np.random.default_rng(7)
    for theta in rng.uniform(0, 2 * pi, 5):
        assert design_residuals(octagons.transformed(rotation(theta)), 9).max_residual <= 1e-12


@pytest.mark.parametrize("s", [0.5, 3.0])
def test_scaling_covariance(octagons, s):
    scaled = octagons.scaled(s)
    assert design_residuals(scaled, 9).passed
    assert not design_residuals(scaled, 10).passed


def test_residual_monotone_in_degree(octagons):
    rep = design_residuals(octagons, 11)
    assert rep.strength() == 9
    assert all(rep.degree_passed(d) for d in range(10))


# ---------------------------------------------------------------- bounds

def _rank_oracle(n, p, e, parity_only, seed=0):
    """Rank of monomial evaluations at random points on p concentric spheres."""
    rng = np.random.default_rng(seed)
    radii = 1 + np.arange(p) * 0.7
    monos = [m.exponents for m in monomials_up_to(n, e)
             if not parity_only or (sum(m.exponents) - e) % 2 == 0]
    rows = []
    for r in radii:
        pts = rng.normal(size=(3 * len(monos), n))
        pts = r * pts / np.linalg.norm(pts, axis=1, keepdims=True)
        for x in pts:
            rows.append([np.prod(x ** np.array(m)) for m in monos])
    return np.linalg.matrix_rank(np.array(rows), tol=1e-8)


@pytest.mark.parametrize("n,p,e", [(2, 2, 4), (3, 2, 4), (3, 3, 3), (4, 1, 3), (2, 3, 5), (3, 2, 2)])
def test_dimension_formulas_against_rank(n, p, e):
    assert dim_P_star_e_S(n, p, e) == _rank_oracle(n, p, e, True)
    assert dim_P_e_S(n, p, e) == _rank_oracle(n, p, e, False)


@pytest.mark.parametrize("n", range(2, 12))
def test_p2_e4_closed_form(n):
    assert dim_P_star_e_S(n, 2, 4) == comb(n + 3, 4) + comb(n + 1, 2)
    assert moeller_bound(n, 2, 9) == n * (n + 1) * (n * n + 5 * n + 18) // 12
    assert moeller_bound(n, 1, 7) == n * (n + 1) * (n + 2) // 3


def test_bound_examples():
    assert dim_P_star_e_S(2, 2, 4) == 8 and moeller_bound(2, 2, 9) == 16
    assert dim_P_star_e_S(8, 1, 3) == 120 and moeller_bound(8, 1, 7) == 240
    assert moeller_bound(4, 3, 9, True) == 2 * dim_P_star_e_S(4, 3, 4) - 1
    assert moeller_bound(4, 3, 9, False) == 2 * dim_P_star_e_S(4, 3, 4)
    assert moeller_bound(3, 2, 4) == dim_P_e_S(3, 2, 2)


def test_tightness_labels(octagons):
    assert classify_tightness(octagons, 9).label == "tight on 2 spheres"
    nine = classify_tightness(regular_polygon(9), 7)
    assert nine.status == "design" and nine.bound == 8
    assert classify_tightness(regular_polygon(5), 7).status == "not-a-design"


# ------------------------------------------------------------ radial basis

def test_single_shell_basis():
    cfg = cross_polytope(3, r=2, w=Fraction(1, 3))
    basis = radial_basis(cfg, 2)
    assert basis.pair(0, 4, 4) == 1 / (6 * Fraction(1, 3) * 4**2)
    assert dual_identity_residual(cfg, 2) == 0


def test_octagon_gram_identity(octagons):
    g = np.array(radial_basis(octagons, 0).gram())
    assert np.abs(g - np.eye(2)).max() <= 1e-12


def _random_shell(rng, n):
    """Signed permutations of a random rational vector: a rational shell of equal norms."""
    base = [Fraction(rng.randint(1, 9), rng.randint(1, 5)) for _ in range(n)]
    pts = set()
    for perm in permutations(base):
        for signs in product((1, -1), repeat=n):
            pts.add(tuple(s * c for s, c in zip(signs, perm)))
    pts = sorted(pts)
    k = rng.randint(1, len(pts))
    return rng.sample(pts, k)


def test_dual_identity_exact_on_random_rational_configurations():
    rng = random.Random(99)
    done = 0
    while done < 100:
        n = rng.randint(2, 3)
        p = 2 if done < 50 else 3
        shells = [_random_shell(rng, n) for _ in range(p)]
        norms = [sum(c * c for c in s[0]) for s in shells]
        if len(set(norms)) < p:
            continue
        pts, ws = [], []
        for s in shells:
            w = Fraction(rng.randint(1, 20), rng.randint(1, 20))
            pts += s
            ws += [w] * len(s)
        if len(set(pts)) < len(pts):
            continue
        cfg = WeightedPointSet.from_points(pts, ws)
        for l in range(0, 5):
            assert dual_identity_residual(cfg, l) == 0
        b = radial_basis(cfg, 1)
        assert b.inner(b.coeffs[0], b.coeffs[1]) == 0
        done += 1


@pytest.mark.parametrize("l", [0, 2, 4])
def test_dual_identity_octagon(octagons, l):
    assert dual_identity_residual(octagons, l) <= 1e-12


def test_dual_identity_requires_constant_weights():
    cfg = WeightedPointSet.from_points([(1, 0), (-1, 0)], [1, 2])
    with pytest.raises(ConfigurationError):
        dual_identity_residual(cfg, 0)


# ------------------------------------------------------- kernel identities

def test_octagon_zero_check(octagons):
    rep = cross_shell_zero_check(octagons)
    assert len(rep.gammas) == 4
    assert rep.max_abs_q4 <= 1e-12
    assert set(rep.identity_residuals) == {"X1", "X2", "X1,X1", "X2,X2", "X1,X2"}
    assert max(rep.identity_residuals.values()) <= 1e-10


def test_q41_at_cos_pi_8_exact():
    c2 = (2 + QuadraticSurd.sqrt(2)) / 4
    assert gegenbauer(2, 4).in_square()(c2) == 0


def test_kernel_identities_on_random_halves(octagons):
    antipode = {i: (i + 4) % 8 + 8 * (i // 8) for i in range(16)}
    rng = random.Random(5)
    for _ in range(5):
        half, seen = [], set()
        for i in rng.sample(range(16), 16):
            if i not in seen:
                half.append(i)
                seen |= {i, antipode[i]}
        res = kernel_identity_residuals(octagons, 4, half)
        assert max(res.values()) <= 1e-10


def test_perturbed_octagon_fails_zero_check():
    cfg = two_octagons(1, 2, 1)
    pts = [tuple(p) for p in cfg.as_array()]
    x, y = pts[0]
    pts[0] = (x * cos(0.01) - y * sin(0.01), x * sin(0.01) + y * cos(0.01))
    bad = WeightedPointSet.from_points(pts, cfg.weights)
    assert max(abs(float(gegenbauer(2, 4)(g))) for g in
               [bad.dot(0, j) / 2 for j in range(8, 16)]) > 1e-4
    assert not design_residuals(bad, 9).passed


def test_intersection_numbers_octagon(octagons):
    table = intersection_numbers(octagons, 0, 1)
    assert table.regular
    assert list(table.counts.values()) == [2, 2, 2, 2]


def test_intersection_numbers_cross_polytope():
    table = intersection_numbers(cross_polytope(4), 0, 0)
    assert table.regular and table.counts == {-1: 1, 0: 6}


def test_deleted_point_breaks_regularity(octagons):
    cfg = octagons.subset([i for i in range(16) if i != 9])
    assert not intersection_numbers(cfg, 0, 1).regular


def test_half_indices_default(octagons):
    assert len(antipodal_half_indices(octagons)) == 8
