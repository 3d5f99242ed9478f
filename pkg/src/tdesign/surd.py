"""Exact real quadratic surds ``a + b*sqrt(d)``.

Comparisons never round.  Mixing two surds with unrelated radicands is
allowed for ordering (via exact repeated squaring) but not for arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, isqrt
from numbers import Rational as _Rational

import mpmath

_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % q for q in range(2, isqrt(p) + 1))]


def integer_sqrt(v: int) -> tuple[int, bool]:
    """Return ``(floor(sqrt(v)), v is a perfect square)``."""
    if v < 0:
        raise ValueError(f"negative argument {v}")
    s = isqrt(v)
    return s, s * s == v


def _split_square(d: int) -> tuple[int, int]:
    """d = s**2 * rest with small square factors pulled into s."""
    s, exact = integer_sqrt(d)
    if exact:
        return s, 1
    outer = 1
    for p in _SMALL_PRIMES:
        pp = p * p
        if pp > d:
            break
        while d % pp == 0:
            d //= pp
            outer *= p
    s, exact = integer_sqrt(d)
    if exact:
        return outer * s, 1
    return outer, d


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_sum_of_roots(u: Fraction, v: Fraction, d1: int, w: Fraction = Fraction(0), d2: int = 0) -> int:
    """Exact sign of ``u + v*sqrt(d1) + w*sqrt(d2)``."""
    u, v, w = Fraction(u), Fraction(v), Fraction(w)
    if d1 == 0:
        v = Fraction(0)
    if d2 == 0:
        w = Fraction(0)
    if not w:
        return _sign_single(u, v, d1)
    if not v:
        return _sign_single(u, w, d2)
    # s = v*sqrt(d1) + w*sqrt(d2); s**2 = v^2 d1 + w^2 d2 + 2vw sqrt(d1 d2)
    s_sign = _sign_single(Fraction(0), v, d1) if _sign(v) == _sign(w) else \
        _sign(v * v * d1 - w * w * d2) * _sign(v)
    if not u:
        return s_sign
    if s_sign == 0 or _sign(u) == s_sign:
        return _sign(u)
    # opposite signs: compare u^2 with s^2
    diff = _sign_single(v * v * d1 + w * w * d2 - u * u, 2 * v * w, d1 * d2)
    return s_sign if diff > 0 else (_sign(u) if diff < 0 else 0)


def _sign_single(a: Fraction, b: Fraction, d: int) -> int:
    if d == 0 or not b:
        return _sign(a)
    sa, sb = _sign(a), _sign(b)
    if sa == 0 or sa == sb:
        return sb if sa == 0 else sa
    return sa * _sign(a * a - b * b * d)


class QuadraticSurd:
    """The real number ``a + b*sqrt(d)`` with rational ``a, b`` and integer ``d >= 0``.

    ``d`` is kept free of small square factors; perfect squares collapse
    into the rational part so ``b == 0`` whenever the value is rational.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 0):
        a, b, d = Fraction(a), Fraction(b), int(d)
        if d < 0:
            raise ValueError(f"radicand must be non-negative, got {d}")
        if b and d:
            outer, rest = _split_square(d)
            b *= outer
            if rest == 1:
                a, b, d = a + b, Fraction(0), 0
            else:
                d = rest
        if not b or not d:
            b, d = Fraction(0), 0
        self.a, self.b, self.d = a, b, d

    @classmethod
    def sqrt(cls, r) -> "QuadraticSurd":
        """Principal square root of a non-negative rational."""
        r = Fraction(r)
        if r < 0:
            raise ValueError(f"square root of negative {r}")
        return cls(0, Fraction(1, r.denominator), r.numerator * r.denominator)

    @classmethod
    def coerce(cls, x) -> "QuadraticSurd":
        if isinstance(x, QuadraticSurd):
            return x
        if isinstance(x, (int, _Rational)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to QuadraticSurd")

    def is_rational(self) -> bool:
        return self.d == 0

    def to_fraction(self) -> Fraction:
        if self.d:
            raise ValueError(f"{self} is irrational")
        return self.a

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a^2 - b^2 d."""
        return self.a * self.a - self.b * self.b * self.d

    def _align(self, other: "QuadraticSurd") -> tuple[int, Fraction, Fraction]:
        """Common radicand for arithmetic; returns (d, b_self, b_other)."""
        if not other.d:
            return self.d, self.b, Fraction(0)
        if not self.d:
            return other.d, Fraction(0), other.b
        if self.d == other.d:
            return self.d, self.b, other.b
        root, exact = integer_sqrt(self.d * other.d)
        if not exact:
            raise ValueError(f"radicands {self.d} and {other.d} generate different fields")
        # sqrt(other.d) = root / self.d * sqrt(self.d)
        return self.d, self.b, other.b * Fraction(root, self.d)

    def __add__(self, other) -> "QuadraticSurd":
        try:
            other = QuadraticSurd.coerce(other)
        except TypeError:
            return NotImplemented
        d, b1, b2 = self._align(other)
        return QuadraticSurd(self.a + other.a, b1 + b2, d)

    __radd__ = __add__

    def __neg__(self) -> "QuadraticSurd":
        return QuadraticSurd(-self.a, -self.b, self.d)

    def __pos__(self) -> "QuadraticSurd":
        return self

    def __sub__(self, other) -> "QuadraticSurd":
        try:
            other = QuadraticSurd.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QuadraticSurd":
        return QuadraticSurd.coerce(other) - self

    def __mul__(self, other) -> "QuadraticSurd":
        try:
            other = QuadraticSurd.coerce(other)
        except TypeError:
            return NotImplemented
        d, b1, b2 = self._align(other)
        return QuadraticSurd(self.a * other.a + b1 * b2 * d, self.a * b2 + b1 * other.a, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticSurd":
        nrm = self.norm()
        if not nrm:
            raise ZeroDivisionError("inverse of zero")
        return QuadraticSurd(self.a / nrm, -self.b / nrm, self.d)

    def __truediv__(self, other) -> "QuadraticSurd":
        try:
            other = QuadraticSurd.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "QuadraticSurd":
        return QuadraticSurd.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "QuadraticSurd":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = QuadraticSurd(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def sign(self) -> int:
        return _sign_single(self.a, self.b, self.d)

    def compare(self, other) -> int:
        """-1, 0, 1 for self <, ==, > other; radicands may differ."""
        other = QuadraticSurd.coerce(other)
        return sign_sum_of_roots(self.a - other.a, self.b, self.d, -other.b, other.d)

    def __eq__(self, other) -> bool:
        try:
            return self.compare(other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __le__(self, other) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other) -> bool:
        return self.compare(other) >= 0

    def __hash__(self) -> int:
        if not self.d:
            return hash(self.a)
        # b^2 d is invariant under moving square factors between b and d
        return hash((self.a, self.b * self.b * self.d, _sign(self.b)))

    def __abs__(self) -> "QuadraticSurd":
        return -self if self.sign() < 0 else self

    def floor(self) -> int:
        """Exact floor."""
        if not self.d:
            return floor(self.a)
        # approximate from an integer square root, then correct exactly
        scale = 1 << 64
        b2d = self.b * self.b * self.d
        root = Fraction(isqrt(floor(b2d * scale * scale)), scale)
        guess = floor(self.a + (root if self.b > 0 else -root))
        while self.compare(guess) < 0:
            guess -= 1
        while self.compare(guess + 1) >= 0:
            guess += 1
        return guess

    def ceil(self) -> int:
        return -(-self).floor()

    def is_integer(self) -> bool:
        return not self.d and self.a.denominator == 1

    def __float__(self) -> float:
        return float(self.to_mpf(80))

    def to_mpf(self, prec: int = 200) -> mpmath.mpf:
        with mpmath.workprec(prec + 20):
            val = mpmath.mpf(self.a.numerator) / self.a.denominator
            if self.d:
                val += mpmath.mpf(self.b.numerator) / self.b.denominator * mpmath.sqrt(self.d)
            return +val

    def __repr__(self) -> str:
        if not self.d:
            return f"QuadraticSurd({self.a})"
        return f"QuadraticSurd({self.a} + {self.b}*sqrt({self.d}))"

    def __str__(self) -> str:
        if not self.d:
            return str(self.a)
        tail = f"{abs(self.b)}*sqrt({self.d})" if abs(self.b) != 1 else f"sqrt({self.d})"
        if not self.a:
            return ("-" if self.b < 0 else "") + tail
        return f"{self.a} {'-' if self.b < 0 else '+'} {tail}"
