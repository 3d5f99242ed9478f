"""Exact per-dimension exclusion of tight 9-designs on two concentric spheres.

Notation: ``n`` is the dimension, ``N`` (or ``N1``/``N2``) a shell size,
``P = (n+1)(n+2)`` and ``c = n(n+3)``.  The discriminant

    D(n, N) = n^2 (n+1)(n+2)(n+3)^2 - 8n(n+1)(n+5) N + 24 N^2

is positive for every n >= 2, and the ratio function is

    F(n, N) = (2N - c) sqrt(P D) / (2 D).

A shell with 5 inner-product values needs -1/2 + F(n, N) to be an integer;
every test below reduces that to integer arithmetic.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import isqrt

import mpmath

from .polyspace import UnivariatePoly, gegenbauer
from .surd import QuadraticSurd, integer_sqrt, sign_sum_of_roots

PREC = 200


# ---------------------------------------------------------------- Pell side

@dataclass(frozen=True)
class PellInfo:
    n: int
    k: int

    @property
    def k_even(self) -> bool:
        return self.k % 2 == 0


def pell_admissible(n: int) -> PellInfo | None:
    """k with 6(n+1)(n+2) = (6k)^2, or None when that is not a perfect square."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    v = 6 * (n + 1) * (n + 2)
    s, square = integer_sqrt(v)
    if not square:
        return None
    assert s % 6 == 0, s
    return PellInfo(n, s // 6)


def pell_square_dimensions_scan(n_lo: int, n_hi: int) -> list[int]:
    return [n for n in range(max(n_lo, 2), n_hi + 1) if pell_admissible(n) is not None]


def pell_square_dimensions_recurrence(n_lo: int, n_hi: int) -> list[int]:
    """Same set via u^2 - 6 v^2 = 1 with u = 2n + 3, v = 2k.

    (n+1)(n+2) = 6k^2 is equivalent to (2n+3)^2 - 24 k^2 = 1; solutions are
    powers of the fundamental unit 5 + 2 sqrt(6).
    """
    out = []
    u, v = 5, 2
    while True:
        n = (u - 3) // 2
        if n > n_hi:
            return out
        if n >= max(n_lo, 2):
            out.append(n)
        u, v = 5 * u + 12 * v, 2 * u + 5 * v


def enumerate_admissible(n_lo: int, n_hi: int, method: str = "recurrence") -> list[int]:
    """Dimensions where 6(n+1)(n+2) = 36k^2 with k even (both Case I gates)."""
    if not 2 <= n_lo <= n_hi:
        raise ValueError(f"bad range [{n_lo}, {n_hi}]")
    if method == "scan":
        squares = pell_square_dimensions_scan(n_lo, n_hi)
    elif method == "recurrence":
        squares = pell_square_dimensions_recurrence(n_lo, n_hi)
    else:
        raise ValueError(f"unknown method {method!r}")
    return [n for n in squares if pell_admissible(n).k_even]


# ------------------------------------------------------------- cardinalities

def tight9_cardinality(n: int) -> int:
    """|X| = n(n+1)(n^2+5n+18)/12 for a tight 9-design on 2 spheres."""
    num = n * (n + 1) * (n * n + 5 * n + 18)
    q, r = divmod(num, 12)
    assert r == 0, f"non-integral cardinality at n={n}"
    return q


def tight7_spherical(n: int) -> int:
    """n(n+1)(n+2)/3, the size of a tight spherical 7-design."""
    return n * (n + 1) * (n + 2) // 3


def n2_upper(n: int) -> int:
    """n(n+1)(n^2+n+10)/12 = |X| - n(n+1)(n+2)/3."""
    return tight9_cardinality(n) - tight7_spherical(n)


def decreasing_threshold(n: int) -> Fraction:
    """F(n, .) decreases on [n(n+1)(n+3)/4, oo)."""
    return Fraction(n * (n + 1) * (n + 3), 4)


# -------------------------------------------------------- Gegenbauer zeros

def gamma_squared(n: int) -> tuple[QuadraticSurd, QuadraticSurd]:
    """The two values of x^2 at which Q_{4,n-1} vanishes, larger first."""
    root = QuadraticSurd.sqrt(6 * (n + 1) * (n + 2))
    den = (n + 4) * (n + 2)
    return (3 * n + 6 + root) / den, (3 * n + 6 - root) / den


def two_value_exclusion(n: int) -> Fraction:
    """Q_{4,n-1} at x^2 = 1/n; non-zero means n*gamma^2 != 1 for every zero gamma."""
    value = gegenbauer(n, 4).in_square()(Fraction(1, n))
    if value == 0:
        raise ArithmeticError(f"certificate failure: Q_4 vanishes at x^2 = 1/n for n={n}")
    return value


def gamma_class_sizes(n: int, N2: int) -> tuple[QuadraticSurd, QuadraticSurd]:
    """Points of X2 at inner product gamma_1 (resp. gamma_3) from a fixed point of X1.

    N2 (1 - n g3^2) / (2n (g1^2 - g3^2)) and N2 (n g1^2 - 1) / (2n (g1^2 - g3^2)).
    """
    g1, g3 = gamma_squared(n)
    den = 2 * n * (g1 - g3)
    return N2 * (1 - n * g3) / den, N2 * (n * g1 - 1) / den


def gamma1_class_size_closed(n: int, N2: int) -> QuadraticSurd:
    """(3n^2 + 3n - (n-2) sqrt(6(n+1)(n+2))) N2 / (12 n (n+1))."""
    root = QuadraticSurd.sqrt(6 * (n + 1) * (n + 2))
    return (3 * n * n + 3 * n - (n - 2) * root) * N2 / (12 * n * (n + 1))


def class_size_forces_square(n: int) -> bool:
    """True when an integral class size is impossible unless 6(n+1)(n+2) is a square.

    The irrational part of the gamma_1 class size is -(n-2) N2 / (12n(n+1)) sqrt(6P),
    non-zero for n >= 3, so integrality forces sqrt(6P) to be rational.
    """
    return n >= 3 and pell_admissible(n) is None and not gamma1_class_size_closed(n, 1).is_rational()


# ---------------------------------------------------------- annihilators

def discriminant(n: int, N: int) -> int:
    return n * n * (n + 1) * (n + 2) * (n + 3) ** 2 - 8 * n * (n + 1) * (n + 5) * N + 24 * N * N


@dataclass(frozen=True)
class Annihilator:
    n: int
    N: int
    which: str
    poly: UnivariatePoly
    roots_squared: tuple[QuadraticSurd, QuadraticSurd]  # (larger, smaller)


def annihilator_poly(n: int, N: int) -> UnivariatePoly:
    """(n+4)(n+2)(N-n^2-n) x^4 + (n+2)(n^3+6n^2+5n-6N) x^2 + 3N - n^3 - 3n^2 - 2n."""
    return UnivariatePoly((
        3 * N - n**3 - 3 * n * n - 2 * n,
        0,
        (n + 2) * (n**3 + 6 * n * n + 5 * n - 6 * N),
        0,
        (n + 4) * (n + 2) * (N - n * n - n),
    ))


def annihilator(n: int, N: int, which: str = "a") -> Annihilator:
    """Quartic whose zeros are the non-trivial inner products of a 5-distance shell of size N.

    ``which`` only labels the shell ("a" for X1, "b" for X2); the polynomial
    is the same function of N.
    """
    if which not in ("a", "b"):
        raise ValueError(f"which must be 'a' or 'b', got {which!r}")
    if N <= n * n + n:
        raise ValueError(f"need N > n^2 + n, got N={N} at n={n}")
    D = discriminant(n, N)
    if D <= 0:
        raise ValueError(f"no real root pair: D={D}")
    root = QuadraticSurd.sqrt((n + 1) * (n + 2) * D)
    lin = (n + 2) * (6 * N - n * (n + 1) * (n + 5))
    den = 2 * (n + 4) * (n + 2) * (N - n * n - n)
    return Annihilator(n, N, which, annihilator_poly(n, N), ((lin + root) / den, (lin - root) / den))


# -------------------------------------------------------------- F(n, N)

def F_value(n: int, N) -> QuadraticSurd:
    N = Fraction(N)
    D = discriminant(n, N)
    if D <= 0:
        raise ValueError(f"D(n, N) must be positive, got {D}")
    P = (n + 1) * (n + 2)
    return (2 * N - n * n - 3 * n) / (2 * D) * QuadraticSurd.sqrt(P * D)


def F_squared(n: int, N) -> Fraction:
    """(2N - c)^2 P / (4D), exactly."""
    N = Fraction(N)
    D = discriminant(n, N)
    return (2 * N - n * n - 3 * n) ** 2 * (n + 1) * (n + 2) / (4 * D)


def F_compare(n: int, N, q) -> int:
    """Sign of F(n, N) - q for a rational or surd q."""
    return F_value(n, N).compare(q)


def ratio_from_roots(big: QuadraticSurd, small: QuadraticSurd) -> QuadraticSurd:
    """(1 - big) / (big - small) for squared inner products big > small."""
    return (1 - big) / (big - small)


def _to_mpf(x) -> mpmath.mpf:
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def F_derivative(n: int, x) -> mpmath.mpf:
    """Closed-form dF/dx (numeric)."""
    with mpmath.workprec(PREC):
        n, x = mpmath.mpf(n), _to_mpf(x)
        D = n**2 * (n + 2) * (n + 1) * (n + 3) ** 2 - 8 * n * (n + 5) * (n + 1) * x + 24 * x**2
        num = (n - 1) * (n + 4) * (n + 2) * (n + 1) * (n**3 + 4 * n**2 + 3 * n - 4 * x) * n
        return num / mpmath.sqrt((n + 2) * (n + 1) * D**3)


def F_numeric(n: int, x) -> mpmath.mpf:
    with mpmath.workprec(PREC):
        n, x = mpmath.mpf(n), _to_mpf(x)
        D = n**2 * (n + 1) * (n + 2) * (n + 3) ** 2 - 8 * n * (n + 1) * (n + 5) * x + 24 * x**2
        return (2 * x - n**2 - 3 * n) * mpmath.sqrt((n + 1) * (n + 2) * D) / (2 * D)


def F_at_upper_closed(n: int) -> QuadraticSurd:
    """F(n, n(n+1)(n^2+n+10)/12) = sqrt(6)(n^2+3n+8) / (12 sqrt(n^2-n+4))."""
    return (n * n + 3 * n + 8) * QuadraticSurd.sqrt(Fraction(6, n * n - n + 4)) / 12


def F_at_half_closed(n: int) -> QuadraticSurd:
    """F(n, |X|/2) = sqrt(6(n+2)) (n^2+7n+18) / (12 sqrt(n^3+5n^2+16n+36))."""
    return (n * n + 7 * n + 18) * QuadraticSurd.sqrt(Fraction(6 * (n + 2), n**3 + 5 * n * n + 16 * n + 36)) / 12


def half_integer_index(n: int, N) -> int | None:
    """m >= 0 with -1/2 + F(n, N) = m, else None.  Pure integer arithmetic."""
    N = Fraction(N)
    if 2 * N <= n * n + 3 * n:
        return None
    four_f2 = 4 * F_squared(n, N)  # = (2m+1)^2 when F = m + 1/2
    if four_f2.denominator != 1:
        return None
    s, square = integer_sqrt(four_f2.numerator)
    if not square or s % 2 == 0:
        return None
    return (s - 1) // 2


def integrality_solutions(n: int, m: int) -> list[int]:
    """Integers N with -1/2 + F(n, N) = m.

    Squaring gives (2m+1)^2 D(n, N) = (2N - c)^2 P, a quadratic in N; we keep
    its integer roots with 2N > c (where F is positive) and D > 0.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    P = (n + 1) * (n + 2)
    c = n * (n + 3)
    q = (2 * m + 1) ** 2
    a = 4 * P - 24 * q
    b = -4 * P * c + 8 * q * n * (n + 1) * (n + 5)
    c0 = P * c * c * (1 - q)
    roots: list[Fraction] = []
    if a == 0:
        if b:
            roots.append(Fraction(-c0, b))
    else:
        disc = b * b - 4 * a * c0
        if disc >= 0:
            s, square = integer_sqrt(disc)
            if square:
                roots.extend({Fraction(-b + s, 2 * a), Fraction(-b - s, 2 * a)})
    out = []
    for r in roots:
        if r.denominator != 1:
            continue
        N = r.numerator
        if N > 0 and 2 * N > c and discriminant(n, N) > 0:
            out.append(N)
    return sorted(out)


def integrality_roots_numeric(n: int, m: int) -> list[mpmath.mpf]:
    """Real roots of the same quadratic (numeric), for cross-checks."""
    P = (n + 1) * (n + 2)
    c = n * (n + 3)
    q = (2 * m + 1) ** 2
    a = 4 * P - 24 * q
    b = -4 * P * c + 8 * q * n * (n + 1) * (n + 5)
    c0 = P * c * c * (1 - q)
    with mpmath.workprec(PREC):
        disc = mpmath.mpf(b * b - 4 * a * c0)
        if disc < 0:
            return []
        r = mpmath.sqrt(disc)
        return sorted(x for x in ((-b + r) / (2 * a), (-b - r) / (2 * a)) if 2 * x > c)


# --------------------------------------------------- closed forms (numeric)

def _common(n):
    n = mpmath.mpf(n)
    s6 = mpmath.sqrt(6 * (n + 1) * (n + 2))
    r = mpmath.sqrt((n + 2) * (n + 1))
    q = mpmath.sqrt((n + 4) * (n + 1))
    return n, s6, r, q, mpmath.sqrt(6)


@dataclass(frozen=True)
class CandidatePair:
    n: int
    eps: int
    N2: mpmath.mpf
    N1: mpmath.mpf
    N2_integral: bool
    N1_integral: bool


def _closed_N2(n, eps):
    n, s6, r, q, rt6 = _common(n)
    return n / (36 * (2 * n**2 + 6 * n + 1)) * (
        9 * (n + 3) * (n + 1) * (n**2 + 6 * n + 2)
        + (n - 1) * (n + 4) * (n + 2) * (n + 1) * s6
        + eps * (n - 1) * (rt6 * (n**2 + 3 * n - 1) + 3 * r) * q * mpmath.sqrt((n + 5) * (n + 1) - s6))


def _closed_N1(n, eps):
    n, s6, r, q, rt6 = _common(n)
    return n / (36 * (2 * n**2 + 6 * n + 1)) * (
        3 * n * (n + 1) * (2 * n**3 + 13 * n**2 + 40 * n + 53)
        - (n - 1) * (n + 4) * (n + 2) * (n + 1) * s6
        - eps * (n - 1) * (rt6 * (n**2 + 3 * n - 1) + 3 * r) * q * mpmath.sqrt((n + 5) * (n + 1) - s6))


def candidate_N2_N1(n: int, eps: int = 1) -> CandidatePair:
    """Closed-form shell sizes forced by -1/2 + F(n, N2) = k/2 (numeric cross-check only)."""
    info = pell_admissible(n)
    if info is None:
        raise ValueError(f"n={n} is not Pell-admissible")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    with mpmath.workprec(PREC):
        N2, N1 = _closed_N2(n, eps), _closed_N1(n, eps)
    m = info.k // 2 if info.k_even else None

    def integral(x):
        z = int(mpmath.nint(x))
        return m is not None and half_integer_index(n, z) == m and abs(x - z) < Fraction(1, 10**6)

    return CandidatePair(n, eps, N2, N1, integral(N2), integral(N1))


def _radicand_positive(n: int, const: int, mult: int) -> bool:
    """Exact sign test for n^2 + 6n + const - mult * sqrt(6(n+1)(n+2)) > 0."""
    return sign_sum_of_roots(Fraction(n * n + 6 * n + const), Fraction(-mult), 6 * (n + 1) * (n + 2)) > 0


def K_closed(n: int, eps: int = 1) -> mpmath.mpf:
    """Root of -1/2 + F(n, x) = sqrt(6P)/12 + 2.

    The inner radical carries the factor sqrt((n+4)(n+1)), as in the
    companion formulas for N2 and G; without it the value does not solve
    the defining equation.
    """
    if not _radicand_positive(n, -67, 5):
        raise ValueError(f"negative radicand in K at n={n}")
    with mpmath.workprec(PREC):
        n_, s6, r, q, rt6 = _common(n)
        return n_ / (60 * (6 * n_**2 + 18 * n_ - 213)) * (
            45 * (n_ + 1) * (n_**3 + 9 * n_**2 - 28 * n_ - 234)
            + (n_ - 1) * (n_ + 4) * (n_ + 2) * (n_ + 1) * s6
            + eps * (n_ - 1) * (rt6 * (n_**2 + 3 * n_ - 73) + 15 * r) * q
            * mpmath.sqrt(n_**2 + 6 * n_ - 67 - 5 * s6))


def G_closed(n: int, eps: int = 1) -> mpmath.mpf:
    """Root of -1/2 + F(n, x) = sqrt(6P)/12 + 1 (prefactor n / (36 (6n^2+18n-69)))."""
    if not _radicand_positive(n, -19, 3):
        raise ValueError(f"negative radicand in G at n={n}")
    with mpmath.workprec(PREC):
        n_, s6, r, q, rt6 = _common(n)
        return n_ / (36 * (6 * n_**2 + 18 * n_ - 69)) * (
            27 * (n_ + 1) * (n_**3 + 9 * n_**2 + 4 * n_ - 74)
            + (n_ - 1) * (n_ + 4) * (n_ + 2) * (n_ + 1) * s6
            + eps * (n_ - 1) * (rt6 * (n_**2 + 3 * n_ - 25) + 9 * r)
            * mpmath.sqrt((n_ + 4) * (n_ + 1) * (n_**2 + 6 * n_ - 19 - 3 * s6)))


def K_closed_as_printed(n: int, eps: int = 1) -> mpmath.mpf:
    """Variant without the sqrt((n+4)(n+1)) factor on the epsilon term; not a root, kept for comparison."""
    with mpmath.workprec(PREC):
        n_, s6, r, q, rt6 = _common(n)
        return K_closed(n, eps) - n_ / (60 * (6 * n_**2 + 18 * n_ - 213)) * eps * (n_ - 1) * (
            rt6 * (n_**2 + 3 * n_ - 73) + 15 * r) * (q - 1) * mpmath.sqrt(n_**2 + 6 * n_ - 67 - 5 * s6)


def G_closed_as_printed(n: int, eps: int = 1) -> mpmath.mpf:
    """Variant with prefactor n / (6n^2+18n-69): 36 times the true root, kept for comparison."""
    with mpmath.workprec(PREC):
        return 36 * G_closed(n, eps)


def brace_N1_minus_K(n) -> mpmath.mpf:
    """The bracketed factor of N1 - K+ (N1 - K+ = n(n-1)/(180(2n^2+6n+1)(2n^2+6n-71)) * brace)."""
    with mpmath.workprec(PREC):
        n, s6, r, q, rt6 = _common(n)
        return (15 * (n + 2) * (n + 1) * (4 * n**4 + 28 * n**3 - 76 * n**2 - 442 * n - 351)
                - 6 * (n + 4) * (n + 2) * (n + 1) * (2 * n**2 + 6 * n - 59) * s6
                - (2 * n**2 + 6 * n + 1) * (rt6 * (n**2 + 3 * n - 73) + 15 * r) * q
                * mpmath.sqrt(n**2 + 6 * n - 67 - 5 * s6)
                - 5 * (2 * n**2 + 6 * n - 71) * (rt6 * (n**2 + 3 * n - 1) + 3 * r) * q
                * mpmath.sqrt(n**2 + 6 * n + 5 - s6))


def brace_G_minus_N1(n) -> mpmath.mpf:
    """The bracketed factor of G+ - N1 (G+ - N1 = n(n-1)/(108(2n^2+6n+1)(2n^2+6n-23)) * brace)."""
    with mpmath.workprec(PREC):
        n, s6, r, q, rt6 = _common(n)
        return (-9 * (n + 2) * (n + 1) * (4 * n**4 + 28 * n**3 + 20 * n**2 - 106 * n - 111)
                + 4 * (n + 4) * (n + 2) * (n + 1) * (2 * n**2 + 6 * n - 17) * s6
                + (2 * n**2 + 6 * n + 1) * (rt6 * (n**2 + 3 * n - 25) + 9 * r)
                * mpmath.sqrt((n + 4) * (n + 1) * (n**2 + 6 * n - 19 - 3 * s6))
                + 3 * (2 * n**2 + 6 * n - 23) * (rt6 * (n**2 + 3 * n - 1) + 3 * r)
                * mpmath.sqrt((n + 4) * (n + 1) * (n**2 + 6 * n + 5 - s6)))


def brace_prefactors(n) -> tuple[mpmath.mpf, mpmath.mpf]:
    with mpmath.workprec(PREC):
        n = mpmath.mpf(n)
        return (n * (n - 1) / (180 * (2 * n**2 + 6 * n + 1) * (2 * n**2 + 6 * n - 71)),
                n * (n - 1) / (108 * (2 * n**2 + 6 * n + 1) * (2 * n**2 + 6 * n - 23)))


@dataclass(frozen=True)
class Thresholds:
    n: int
    K_plus: mpmath.mpf
    G_plus: mpmath.mpf
    decreasing_from: Fraction


def thresholds_K_G(n: int) -> Thresholds:
    return Thresholds(n, K_closed(n, 1), G_closed(n, 1), decreasing_threshold(n))


def _compare_with_level(n: int, N, extra: Fraction) -> int:
    """sign(N - x*) where x* >= n(n+1)(n+3)/4 solves F(n, x*) = sqrt(6P)/12 + extra.

    F decreases past the threshold, so above it N > x* iff F(n, N) < level.
    """
    P6 = 6 * (n + 1) * (n + 2)
    T = decreasing_threshold(n)

    def f_minus_level(x) -> int:
        f = F_value(n, x)
        return sign_sum_of_roots(-extra + f.a, f.b, f.d, Fraction(-1, 12), P6)

    if f_minus_level(T) <= 0:
        raise ValueError(f"level not attained on the decreasing branch at n={n}")
    N = Fraction(N)
    if N <= T:
        return -1
    return -f_minus_level(N)


def compare_with_K(n: int, N) -> int:
    """Exact sign of N - K+."""
    return _compare_with_level(n, N, Fraction(5, 2))


def compare_with_G(n: int, N) -> int:
    """Exact sign of N - G+."""
    return _compare_with_level(n, N, Fraction(3, 2))


# ------------------------------------------------------------ certificates

@dataclass
class CaseIReport:
    n: int
    cardinality: int
    pell_square: bool
    k: int | None
    m_window: tuple[int, int] | None = None
    n2_range: tuple[int, int] | None = None
    n2_candidates: dict[int, list[int]] = field(default_factory=dict)
    surviving_pairs: list[tuple[int, int]] = field(default_factory=list)
    failed_step: int | None = None
    log: list[str] = field(default_factory=list)

    @property
    def excluded(self) -> bool:
        return not self.surviving_pairs and self.failed_step is not None

    @property
    def verdict(self) -> str:
        return "excluded" if self.excluded else "counterexample candidate"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["n2_candidates"] = {str(m): v for m, v in self.n2_candidates.items()}
        d["verdict"] = self.verdict
        return d


STEP_NAMES = {
    1: "6(n+1)(n+2) is not a perfect square",
    2: "k is odd",
    3: "empty m-window",
    4: "no integral N2",
    5: "no integral N1 partner",
}


def m_window(n: int, lo: int, hi: int) -> tuple[int, int]:
    """Integers m with -1/2 + F in [F(hi), F(lo)] - 1/2, widened by one on each side."""
    f_lo, f_hi = F_value(n, hi), F_value(n, lo)  # F decreases on the range
    low = (f_lo - Fraction(1, 2)).ceil() - 1
    high = (f_hi - Fraction(1, 2)).floor() + 1
    return max(low, 0), high


def case1_certify(n: int) -> CaseIReport:
    """Both shells 5-distance sets: |X2| >= |X1| > n(n+1)(n+2)/3."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    X = tight9_cardinality(n)
    info = pell_admissible(n)
    rep = CaseIReport(n, X, info is not None, info.k if info else None)
    if info is None:
        rep.failed_step = 1
        rep.log.append(f"6(n+1)(n+2) = {6 * (n + 1) * (n + 2)} is not a perfect square")
        return rep
    if not info.k_even:
        rep.failed_step = 2
        rep.log.append(f"k = {info.k} is odd: -1/2 + F(n,N2) lies strictly between (k-1)/2 and (k+1)/2")
        return rep
    lo, hi = -(-X // 2), n2_upper(n)
    rep.n2_range = (lo, hi)
    rep.m_window = m_window(n, lo, hi)
    m0, m1 = rep.m_window
    rep.log.append(f"N2 in [{lo}, {hi}], m in [{m0}, {m1}] (k/2 = {info.k // 2})")
    if m0 > m1:
        rep.failed_step = 3
        return rep
    for m in range(m0, m1 + 1):
        sols = [N for N in integrality_solutions(n, m) if lo <= N <= hi]
        if sols:
            rep.n2_candidates[m] = sols
        roots = ", ".join(mpmath.nstr(r, 25) for r in integrality_roots_numeric(n, m))
        rep.log.append(f"m={m}: real roots [{roots}], integral N2 in range {sols}")
    if not rep.n2_candidates:
        rep.failed_step = 4
        return rep
    tight = tight7_spherical(n)
    for m, sols in sorted(rep.n2_candidates.items()):
        for N2 in sols:
            N1 = X - N2
            if N1 <= tight:
                rep.log.append(f"N2={N2}: N1={N1} <= n(n+1)(n+2)/3")
                continue
            m1_ = half_integer_index(n, N1)
            if m1_ is None:
                rep.log.append(f"N2={N2}: -1/2 + F(n, N1={N1}) is not an integer")
                continue
            rep.surviving_pairs.append((N1, N2))
            rep.log.append(f"N2={N2}, N1={N1}: both integral (m2={m}, m1={m1_})")
    if not rep.surviving_pairs:
        rep.failed_step = 5
    return rep


@dataclass
class CaseIIReport:
    n: int
    sqrt_n4_over_3: int | None  # the integer root when (n+4)/3 is a perfect square
    disc_square: bool  # whether 6n^2 - 6n + 24 is a perfect square
    remainder: int  # 48(n-1) mod (n^2 - n + 4)
    failed_step: int | None

    @property
    def divisible(self) -> bool:
        return self.remainder == 0

    @property
    def excluded(self) -> bool:
        return self.failed_step is not None

    @property
    def verdict(self) -> str:
        return "excluded" if self.excluded else "counterexample candidate"

    def to_dict(self) -> dict:
        d = asdict(self)
        d.update(divisible=self.divisible, verdict=self.verdict)
        return d


CASE2_STEPS = {1: "sqrt((n+4)/3) is not an integer", 2: "(n^2-n+4) does not divide 48(n-1)"}


def sqrt_n4_over_3(n: int) -> int | None:
    q, r = divmod(n + 4, 3)
    if r:
        return None
    s, square = integer_sqrt(q)
    return s if square else None


def case2_certify(n: int) -> CaseIIReport:
    """X1 a tight spherical 7-design, |X2| = n(n+1)(n^2+n+10)/12.

    -1/2 + (n^2+3n+8) / (2 sqrt(6n^2-6n+24)) must be an integer, so
    (n^2+3n+8)^2 / (n^2-n+4) = n^2 + 7n + 28 + 48(n-1)/(n^2-n+4) must be one.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    root = sqrt_n4_over_3(n)
    disc_square = integer_sqrt(6 * n * n - 6 * n + 24)[1]
    modulus = n * n - n + 4
    remainder = 48 * (n - 1) % modulus
    if n >= 48:
        assert 0 < 48 * (n - 1) < modulus, n
    step = 1 if root is None else (2 if remainder else None)
    return CaseIIReport(n, root, disc_square, remainder, step)


def case2_ratio(n: int) -> QuadraticSurd:
    """-1/2 + (n^2+3n+8) / (2 sqrt(6n^2-6n+24))."""
    return (n * n + 3 * n + 8) / (2 * QuadraticSurd.sqrt(6 * n * n - 6 * n + 24)) - Fraction(1, 2)
