"""Exact polynomial arithmetic and Gegenbauer polynomials.

Everything here works over :class:`fractions.Fraction`; no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, Mapping, Sequence

Rational = Fraction | int


def hom_dim(n: int, l: int) -> int:
    """Number of monomials of degree exactly ``l`` in ``n`` variables."""
    if n < 1:
        raise ValueError(f"dimension must be positive, got {n}")
    if l < 0:
        return 0
    return comb(n + l - 1, l)


def harm_dim(n: int, l: int) -> int:
    """Dimension of the harmonic homogeneous polynomials of degree ``l``."""
    return hom_dim(n, l) - (hom_dim(n, l - 2) if l >= 2 else 0)


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(a) for a in self.exponents)
        if any(a < 0 for a in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @property
    def arity(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __call__(self, point: Sequence):
        if len(point) != self.arity:
            raise ValueError(f"point has arity {len(point)}, monomial expects {self.arity}")
        value = 1
        for x, a in zip(point, self.exponents):
            if a:
                value = value * x**a
        return value

    def __mul__(self, other: "Monomial") -> "Monomial":
        if other.arity != self.arity:
            raise ValueError("arity mismatch")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        parts = []
        for i, a in enumerate(self.exponents, start=1):
            if a == 1:
                parts.append(f"x{i}")
            elif a > 1:
                parts.append(f"x{i}^{a}")
        return "*".join(parts) or "1"


def monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    """Yield every exponent vector of total degree ``d``, lexicographically descending."""

    def rec(i: int, left: int, prefix: tuple[int, ...]):
        if i == n - 1:
            yield prefix + (left,)
            return
        for a in range(left, -1, -1):
            yield from rec(i + 1, left - a, prefix + (a,))

    if n < 1:
        raise ValueError("need at least one variable")
    for exps in rec(0, d, ()):
        yield Monomial(exps)


def monomials_up_to(n: int, t: int) -> Iterator[Monomial]:
    for d in range(t + 1):
        yield from monomials_of_degree(n, d)


class Polynomial:
    """Sparse multivariate polynomial with rational coefficients."""

    __slots__ = ("_arity", "_terms")

    def __init__(self, arity: int, terms: Mapping[Monomial, Rational] | None = None):
        self._arity = arity
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            if mono.arity != arity:
                raise ValueError(f"monomial {mono} does not have arity {arity}")
            c = Fraction(coeff)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
        self._terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: Rational = 1) -> "Polynomial":
        mono = Monomial(tuple(exponents))
        return cls(mono.arity, {mono: coeff})

    @classmethod
    def constant(cls, arity: int, value: Rational) -> "Polynomial":
        return cls(arity, {Monomial((0,) * arity): value})

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    @property
    def degree(self) -> int:
        return max((m.degree for m in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.arity != self.arity:
                raise ValueError("arity mismatch")
            return other
        return Polynomial.constant(self.arity, Fraction(other))

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Polynomial(self.arity, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.arity, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            return Polynomial(self.arity, {m: c * v for m, v in self._terms.items()})
        other = self._coerce(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return Polynomial(self.arity, terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self._terms.items())))

    def __call__(self, point: Sequence):
        if len(point) != self.arity:
            raise ValueError(f"point has arity {len(point)}, polynomial expects {self.arity}")
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            total = total + coeff * mono(point)
        return total

    def __repr__(self) -> str:
        if not self._terms:
            return "Polynomial(0)"
        body = " + ".join(f"{c}*{m}" for m, c in sorted(self._terms.items(), reverse=True))
        return f"Polynomial({body})"


class UnivariatePoly:
    """Dense univariate polynomial, coefficients in ascending degree."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Sequence[Rational] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def x(cls) -> "UnivariatePoly":
        return cls((0, 1))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, k: int) -> Fraction:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    def _coerce(self, other) -> "UnivariatePoly":
        return other if isinstance(other, UnivariatePoly) else UnivariatePoly((other,))

    def __add__(self, other) -> "UnivariatePoly":
        other = self._coerce(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return UnivariatePoly([self.coeff(k) + other.coeff(k) for k in range(size)])

    __radd__ = __add__

    def __neg__(self) -> "UnivariatePoly":
        return UnivariatePoly([-c for c in self._coeffs])

    def __sub__(self, other) -> "UnivariatePoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UnivariatePoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UnivariatePoly":
        if not isinstance(other, UnivariatePoly):
            c = Fraction(other)
            return UnivariatePoly([c * a for a in self._coeffs])
        if self.is_zero() or other.is_zero():
            return UnivariatePoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return UnivariatePoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "UnivariatePoly":
        return self * (1 / Fraction(other))

    def __eq__(self, other) -> bool:
        if isinstance(other, UnivariatePoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == UnivariatePoly((other,))._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element (Fraction, float, surd, ...)."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UnivariatePoly":
        return UnivariatePoly([k * c for k, c in enumerate(self._coeffs)][1:])

    def parity(self) -> int | None:
        """0 if even, 1 if odd, None if mixed (the zero polynomial counts as even)."""
        odd = any(c for k, c in enumerate(self._coeffs) if k % 2)
        even = any(c for k, c in enumerate(self._coeffs) if k % 2 == 0)
        if odd and even:
            return None
        return 1 if odd else 0

    def in_square(self) -> "UnivariatePoly":
        """For an even polynomial p(x) return q with p(x) = q(x**2)."""
        if self.parity() != 0:
            raise ValueError("polynomial is not even")
        return UnivariatePoly(self._coeffs[::2])

    def integrate(self, lo: Rational, hi: Rational) -> Fraction:
        anti = UnivariatePoly([0] + [c / (k + 1) for k, c in enumerate(self._coeffs)])
        return anti(Fraction(hi)) - anti(Fraction(lo))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if k == 0:
                body = f"{mag}"
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"UnivariatePoly({str(self)})"


def evaluate(poly: UnivariatePoly | Polynomial, point):
    """Evaluate either polynomial kind exactly."""
    if isinstance(poly, Polynomial):
        if not isinstance(point, (list, tuple)):
            point = (point,)
        return poly(point)
    if isinstance(point, (list, tuple)):
        if len(point) != 1:
            raise ValueError("univariate polynomial takes one coordinate")
        point = point[0]
    return poly(point)


@lru_cache(maxsize=None)
def gegenbauer(n: int, l: int) -> UnivariatePoly:
    """Gegenbauer polynomial Q_{l,n-1} for the sphere S^{n-1}.

    Built with the classical three-term recurrence in lambda = (n-2)/2
    (Chebyshev T_l when n = 2) and rescaled so Q_l(1) = harm_dim(n, l).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if l < 0:
        raise ValueError(f"degree must be non-negative, got {l}")
    x = UnivariatePoly.x()
    lam = Fraction(n - 2, 2)
    prev, cur = UnivariatePoly((1,)), (x if lam == 0 else x * (2 * lam))
    if l == 0:
        raw = prev
    else:
        for k in range(2, l + 1):
            if lam == 0:
                nxt = x * cur * 2 - prev
            else:
                nxt = (x * cur * (2 * (k + lam - 1)) - prev * (k + 2 * lam - 2)) / k
            prev, cur = cur, nxt
        raw = cur
    return raw * (Fraction(harm_dim(n, l)) / raw(Fraction(1)))


def gegenbauer_q4_closed_form(n: int) -> UnivariatePoly:
    """n(n+6)/24 * ((n+4)(n+2) x^4 - 6(n+2) x^2 + 3)."""
    scale = Fraction(n * (n + 6), 24)
    return UnivariatePoly((3, 0, -6 * (n + 2), 0, (n + 4) * (n + 2))) * scale
