from fractions import Fraction

import pytest

from tdesign.configspace import ConfigurationError, RATIONAL, inner_product_profile, is_antipodal
from tdesign.constructions import ConstructionSpec, cross_polytope, e8_roots, regular_polygon, two_octagons
from tdesign.verify import design_strength, moeller_bound


def test_two_octagons_shape(octagons):
    assert len(octagons) == 16
    assert octagons.partition.counts == (8, 8)
    assert octagons.weights[8] == pytest.approx(1 / 256)


def test_two_octagons_swapped_radii():
    cfg = two_octagons(2, 1, 1)
    assert cfg.weights[8] == pytest.approx(256)
    assert design_strength(cfg, 12) == 9


def test_two_octagons_equal_radii_rejected():
    with pytest.raises(ConfigurationError):
        two_octagons(1, 1, 1)


@pytest.mark.parametrize("m,strength", [(8, 7), (3, 2), (4, 3)])
def test_polygon_strength(m, strength):
    assert design_strength(regular_polygon(m), 10) == strength


def test_square_is_antipodal():
    assert is_antipodal(regular_polygon(4))[0]


def test_e8_roots():
    e8 = e8_roots()
    assert len(e8) == 240 == 8 * 9 * 10 // 3
    assert e8.backend == RATIONAL
    assert all(e8.norm_squared(i) == 2 for i in range(240))
    assert set(inner_product_profile(e8).within[0]) == {-1, Fraction(-1, 2), 0, Fraction(1, 2)}
    assert moeller_bound(8, 1, 7) == 240


def test_cross_polytope_exact():
    cp = cross_polytope(3, r=Fraction(1, 2))
    assert cp.backend == RATIONAL and len(cp) == 6


def test_construction_spec_build():
    assert len(ConstructionSpec("regular_polygon", {"m": 6}).build()) == 6
    with pytest.raises(ValueError):
        ConstructionSpec("dodecahedron").build()
