"""Surface-averaged monomial moments on spheres centred at the origin."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .polyspace import Monomial, Polynomial


@dataclass(frozen=True)
class ShellMeasure:
    """Total weight ``mass`` spread uniformly over the sphere of radius sqrt(radius_squared).

    The radius is carried squared so rational configurations stay rational.
    """

    radius_squared: Fraction | float
    mass: Fraction | float

    def __post_init__(self) -> None:
        if not self.radius_squared > 0:
            raise ValueError(f"radius must be positive, got r^2={self.radius_squared}")
        if not self.mass > 0:
            raise ValueError(f"mass must be positive, got {self.mass}")

    @classmethod
    def from_radius(cls, radius, mass) -> "ShellMeasure":
        return cls(radius * radius, mass)


def _double_factorial_odd(k: int) -> int:
    """(k)!! for odd k >= -1."""
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


@lru_cache(maxsize=None)
def _average(n: int, exponents: tuple[int, ...]) -> Fraction:
    if any(a % 2 for a in exponents):
        return Fraction(0)
    num = 1
    for a in exponents:
        num *= _double_factorial_odd(a - 1)
    den = 1
    for j in range(1, sum(exponents) // 2 + 1):
        den *= n + 2 * j - 2
    return Fraction(num, den)


def sphere_monomial_average(n: int, m: Monomial | Sequence[int]) -> Fraction:
    """Mean of ``x**a`` over the unit sphere S^{n-1}.

    Zero when any exponent is odd, otherwise
    prod (a_i - 1)!! / prod_{j=1..k} (n + 2j - 2) with 2k = |a|.
    """
    exps = m.exponents if isinstance(m, Monomial) else tuple(int(a) for a in m)
    if len(exps) != n:
        raise ValueError(f"monomial has arity {len(exps)}, sphere lives in R^{n}")
    return _average(n, exps)


def measure_side(shells: Sequence[ShellMeasure], f: Polynomial | Monomial):
    """Sum over shells of mass * surface average of f on that shell.

    Exact when every radius_squared and mass is rational; odd-degree terms
    vanish, so only even powers of the radius ever appear.
    """
    if not shells:
        raise ValueError("need at least one shell")
    if isinstance(f, Monomial):
        f = Polynomial(f.arity, {f: 1})
    n = f.arity
    total = Fraction(0)
    for mono, coeff in f.terms.items():
        avg = sphere_monomial_average(n, mono)
        if not avg:
            continue
        half = mono.degree // 2
        for shell in shells:
            total = total + shell.mass * shell.radius_squared**half * coeff * avg
    return total
