"""Generators for concrete designs used as fixtures and examples."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import cos, pi, sin, sqrt

from .configspace import FLOAT, RATIONAL, ConfigurationError, WeightedPointSet

KINDS = ("two_octagons", "regular_polygon", "cross_polytope", "e8_roots")


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    params: dict = field(default_factory=dict)

    def build(self) -> WeightedPointSet:
        if self.kind not in KINDS:
            raise ValueError(f"unknown construction {self.kind!r}; expected one of {KINDS}")
        return globals()[self.kind](**self.params)


def _polygon_points(m: int, r: float, offset: float = 0.0) -> list[tuple[float, float]]:
    step = 2 * pi / m
    return [(r * cos(k * step + offset), r * sin(k * step + offset)) for k in range(m)]


def two_octagons(r1: float = 1.0, r2: float = 2.0, w1: float = 1.0) -> WeightedPointSet:
    """Two concentric regular octagons rotated by pi/8 against each other.

    The outer ring gets weight w1 * (r1/r2)**8, which balances the degree-8
    moments; the result is a tight 9-design on two spheres in the plane.
    """
    r1, r2, w1 = float(r1), float(r2), float(w1)
    if r1 <= 0 or r2 <= 0 or w1 <= 0:
        raise ConfigurationError("radii and weight must be positive")
    if r1 == r2:
        raise ConfigurationError("the two octagons need distinct radii")
    inner = _polygon_points(8, r1)
    outer = _polygon_points(8, r2, offset=pi / 8)
    w2 = (r1 / r2) ** 8 * w1
    return WeightedPointSet(2, tuple(inner + outer), (w1,) * 8 + (w2,) * 8, FLOAT,
                            name=f"two_octagons(r1={r1}, r2={r2}, w1={w1})")


def regular_polygon(m: int, r: float = 1.0, w: float = 1.0) -> WeightedPointSet:
    if m < 3:
        raise ConfigurationError(f"a polygon needs m >= 3 vertices, got {m}")
    if r <= 0 or w <= 0:
        raise ConfigurationError("radius and weight must be positive")
    pts = _polygon_points(m, float(r))
    return WeightedPointSet(2, tuple(pts), (float(w),) * m, FLOAT, name=f"regular_polygon(m={m})")


def cross_polytope(n: int, r=1, w=1) -> WeightedPointSet:
    """The 2n points +-r e_i, exact when r and w are rational."""
    if n < 2:
        raise ConfigurationError(f"cross-polytope needs n >= 2, got {n}")
    pts = []
    for i in range(n):
        for s in (1, -1):
            v = [0] * n
            v[i] = s * r
            pts.append(tuple(v))
    exact = isinstance(r, (int, Fraction)) and isinstance(w, (int, Fraction))
    return WeightedPointSet(n, tuple(pts), (w,) * (2 * n), RATIONAL if exact else FLOAT,
                            name=f"cross_polytope(n={n})")


def e8_roots(unit: bool = False) -> WeightedPointSet:
    """The 240 roots of E8.

    By default the roots have their natural norm sqrt(2), which keeps every
    coordinate rational; ``unit=True`` rescales to the unit sphere (floats).
    """
    pts: list[tuple] = []
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [Fraction(0)] * 8
            v[i], v[j] = Fraction(si), Fraction(sj)
            pts.append(tuple(v))
    half = Fraction(1, 2)
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            pts.append(tuple(s * half for s in signs))
    if unit:
        scale = 1 / sqrt(2)
        return WeightedPointSet(8, tuple(tuple(float(c) * scale for c in p) for p in pts),
                                (1.0,) * len(pts), FLOAT, name="e8_roots(unit)")
    return WeightedPointSet(8, tuple(pts), (Fraction(1),) * len(pts), RATIONAL, name="e8_roots")
