"""Design verification, Moeller bounds, radial bases and kernel identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm, sqrt
from typing import Sequence

import numpy as np

from .configspace import (
    ConfigurationError,
    WeightedPointSet,
    antipodal_half_indices,
    inner_product_profile,
)
from .moments import sphere_monomial_average
from .polyspace import Monomial, gegenbauer, harm_dim, monomials_up_to

DEFAULT_FLOAT_TOL = 1e-9


def _as_float(x) -> float:
    return float(x)


@dataclass
class DesignReport:
    degree: int
    backend: str
    tolerance: float
    max_residual: Fraction | float
    worst_monomial: tuple[int, ...] | None
    per_degree: dict[int, Fraction | float]
    passed: bool

    def degree_passed(self, d: int) -> bool:
        r = self.per_degree[d]
        return r == 0 if self.backend == "rational" else r <= self.tolerance

    def strength(self) -> int:
        """Largest s <= degree such that every degree up to s passes (-1 if none)."""
        s = -1
        for d in range(self.degree + 1):
            if not self.degree_passed(d):
                break
            s = d
        return s

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "backend": self.backend,
            "tolerance": self.tolerance if self.backend == "float" else 0,
            "max_residual": _as_float(self.max_residual),
            "max_residual_exact": str(self.max_residual) if self.backend == "rational" else None,
            "worst_monomial": list(self.worst_monomial) if self.worst_monomial else None,
            "per_degree": {str(d): _as_float(r) for d, r in sorted(self.per_degree.items())},
            "passed": self.passed,
        }


def _monomial_values(cfg: WeightedPointSet, t: int, columns: np.ndarray):
    """Map exponent tuple -> array of monomial values over all points, built incrementally."""
    n = cfg.dimension
    ones = np.ones(len(cfg), dtype=columns.dtype)
    values = {(0,) * n: ones}
    for mono in monomials_up_to(n, t):
        exps = mono.exponents
        if exps in values:
            continue
        k = max(i for i, a in enumerate(exps) if a)
        parent = list(exps)
        parent[k] -= 1
        values[exps] = values[tuple(parent)] * columns[:, k]
    return values


def _exact_point_sides(cfg: WeightedPointSet, t: int) -> dict[tuple[int, ...], Fraction]:
    denom = lcm(*(c.denominator for p in cfg.coords for c in p)) if len(cfg) else 1
    ints = [[int(c * denom) for c in p] for p in cfg.coords]
    bound = max((abs(v) for row in ints for v in row), default=0)
    safe = len(cfg) * max(bound, 1) ** max(t, 1) < 2**62
    columns = np.array(ints, dtype=np.int64 if safe else object).reshape(len(cfg), cfg.dimension)
    groups: dict[Fraction, list[int]] = {}
    for i, w in enumerate(cfg.weights):
        groups.setdefault(w, []).append(i)
    group_idx = [(w, np.array(idx)) for w, idx in groups.items()]
    out = {}
    for exps, vals in _monomial_values(cfg, t, columns).items():
        total = sum((w * int(vals[idx].sum()) for w, idx in group_idx), Fraction(0))
        out[exps] = total / Fraction(denom) ** sum(exps)
    return out


def _measure_value(cfg: WeightedPointSet, exps: tuple[int, ...]):
    part = cfg.partition
    deg = sum(exps)
    total = cfg.zero()
    if deg == 0:
        total = total + sum((cfg.weights[i] for i in part.origin), cfg.zero())
    avg = sphere_monomial_average(cfg.dimension, exps)
    if not avg:
        return total
    if not cfg.exact:
        avg = float(avg)
    for r2, mass in zip(part.radii_squared, part.masses):
        total = total + mass * r2 ** (deg // 2) * avg
    return total


def design_residuals(cfg: WeightedPointSet, t: int, tolerance: float = DEFAULT_FLOAT_TOL) -> DesignReport:
    """Residual |sum_x w(x) m(x) - measure side| for every monomial m of degree <= t."""
    if t < 0:
        raise ValueError("degree must be non-negative")
    if len(cfg) == 0:
        raise ConfigurationError("empty configuration")
    if cfg.exact:
        point = _exact_point_sides(cfg, t)
    else:
        weights = np.asarray(cfg.weights, dtype=float)
        point = {e: float(weights @ v) for e, v in _monomial_values(cfg, t, cfg.as_array()).items()}
    per_degree: dict[int, Fraction | float] = {d: cfg.zero() for d in range(t + 1)}
    worst, worst_val = None, cfg.zero()
    for exps, lhs in point.items():
        res = abs(lhs - _measure_value(cfg, exps))
        d = sum(exps)
        if res > per_degree[d]:
            per_degree[d] = res
        if worst is None or res > worst_val:
            worst, worst_val = exps, res
    passed = worst_val == 0 if cfg.exact else worst_val <= tolerance
    return DesignReport(t, cfg.backend, tolerance, worst_val, worst, per_degree, passed)


def design_strength(cfg: WeightedPointSet, t_max: int, tolerance: float = DEFAULT_FLOAT_TOL) -> int:
    return design_residuals(cfg, t_max, tolerance).strength()


def dim_P_star_e_S(n: int, p: int, e: int) -> int:
    """dim of parity-e polynomials of degree <= e restricted to p concentric spheres."""
    if n < 1 or p < 1:
        raise ValueError("need n >= 1 and p >= 1")
    total = 0
    for j in range(min(p - 1, e // 2) + 1):
        total += sum(harm_dim(n, l) for l in range(e - 2 * j, -1, -2))
    return total


def dim_P_e_S(n: int, p: int, e: int) -> int:
    if n < 1 or p < 1:
        raise ValueError("need n >= 1 and p >= 1")
    total = 0
    for j in range(min(p - 1, e // 2) + 1):
        total += sum(harm_dim(n, l) for l in range(e - 2 * j + 1))
    return total


def moeller_bound(n: int, p: int, t: int, origin_in_X: bool = False) -> int:
    if t < 0:
        raise ValueError("degree must be non-negative")
    e, odd = divmod(t, 2)
    if not odd:
        return dim_P_e_S(n, p, e)
    bound = 2 * dim_P_star_e_S(n, p, e)
    if e % 2 == 0 and origin_in_X:
        bound -= 1
    return bound


@dataclass
class Tightness:
    status: str  # "not-a-design" | "design" | "tight"
    degree: int
    shells: int
    size: int
    bound: int
    strength: int

    @property
    def label(self) -> str:
        if self.status == "tight":
            return f"tight on {self.shells} sphere{'s' if self.shells != 1 else ''}"
        return self.status

    def to_dict(self) -> dict:
        return {"status": self.status, "label": self.label, "degree": self.degree, "shells": self.shells,
                "size": self.size, "bound": self.bound, "strength": self.strength}


def classify_tightness(cfg: WeightedPointSet, t: int, tolerance: float = DEFAULT_FLOAT_TOL,
                       report: DesignReport | None = None) -> Tightness:
    part = cfg.partition
    p = part.p + (1 if part.has_origin else 0)
    bound = moeller_bound(cfg.dimension, p, t, part.has_origin)
    if report is None or report.degree < t:
        report = design_residuals(cfg, t, tolerance)
    strength = report.strength()
    if strength < t:
        status = "not-a-design"
    elif len(cfg) == bound:
        status = "tight"
    else:
        status = "design"
    return Tightness(status, t, p, len(cfg), bound, strength)


@dataclass
class RadialBasis:
    """Orthonormal basis g_{l,j} of radial polynomials on the shells.

    ``coeffs[j][i]`` is the coefficient of |x|^{2i} in the unnormalised
    orthogonal polynomial h_j; g_{l,j} = h_j / sqrt(norms_squared[j]).
    Products g_j(a) g_j(b) are therefore rational on the exact backend.
    """

    l: int
    radii_squared: tuple
    masses: tuple
    coeffs: list[list]
    norms_squared: list
    exact: bool

    @property
    def p(self) -> int:
        return len(self.radii_squared)

    def h(self, j: int, r2):
        return sum((c * r2**i for i, c in enumerate(self.coeffs[j])), Fraction(0) if self.exact else 0.0)

    def g(self, j: int, r2) -> float:
        return float(self.h(j, r2)) / sqrt(float(self.norms_squared[j]))

    def pair(self, j: int, r2a, r2b):
        """g_{l,j}(a) * g_{l,j}(b), exactly when the backend allows."""
        return self.h(j, r2a) * self.h(j, r2b) / self.norms_squared[j]

    def kernel(self, r2a, r2b, jmax: int | None = None):
        top = self.p - 1 if jmax is None else min(jmax, self.p - 1)
        return sum((self.pair(j, r2a, r2b) for j in range(top + 1)), Fraction(0) if self.exact else 0.0)

    def inner(self, f: Sequence, g: Sequence):
        zero = Fraction(0) if self.exact else 0.0
        total = zero
        for r2, mass in zip(self.radii_squared, self.masses):
            fv = sum((c * r2**i for i, c in enumerate(f)), zero)
            gv = sum((c * r2**i for i, c in enumerate(g)), zero)
            total = total + mass * r2**self.l * fv * gv
        return total

    def gram(self) -> list[list]:
        """Gram matrix of the normalised basis (float)."""
        return [[float(self.inner(self.coeffs[a], self.coeffs[b]))
                 / sqrt(float(self.norms_squared[a]) * float(self.norms_squared[b]))
                 for b in range(self.p)] for a in range(self.p)]


def radial_basis(cfg: WeightedPointSet, l: int, tolerance: float = DEFAULT_FLOAT_TOL) -> RadialBasis:
    """Gram-Schmidt on 1, |x|^2, ..., |x|^{2(p-1)} under <f,g>_l = sum w |x|^{2l} f g."""
    part = cfg.partition
    if part.has_origin:
        raise ConfigurationError("radial basis needs the origin excluded")
    p = part.p
    if p == 0:
        raise ConfigurationError("empty configuration")
    basis = RadialBasis(l, part.radii_squared, part.masses, [], [], cfg.exact)
    zero = Fraction(0) if cfg.exact else 0.0
    for j in range(p):
        vec = [zero] * p
        vec[j] = zero + 1
        for k in range(j):
            proj = basis.inner(vec, basis.coeffs[k]) / basis.norms_squared[k]
            vec = [a - proj * b for a, b in zip(vec, basis.coeffs[k])]
        nrm = basis.inner(vec, vec)
        if (nrm == 0) if cfg.exact else (nrm <= tolerance * tolerance):
            raise ConfigurationError("degenerate Gram matrix: fewer distinct radii than shells")
        basis.coeffs.append(vec)
        basis.norms_squared.append(nrm)
    return basis


def dual_identity_residual(cfg: WeightedPointSet, l: int):
    """max_{nu,mu} |sum_j g_{l,j}(r_nu) g_{l,j}(r_mu) - delta/(N_nu w_nu r_nu^{2l})|."""
    part = cfg.partition
    if any(w is None for w in part.constant_weights):
        raise ConfigurationError("weights must be constant on each shell")
    basis = radial_basis(cfg, l)
    worst = cfg.zero()
    for a, r2a in enumerate(part.radii_squared):
        for b, r2b in enumerate(part.radii_squared):
            target = 1 / (part.counts[a] * part.constant_weights[a] * r2a**l) if a == b else cfg.zero()
            worst = max(worst, abs(basis.kernel(r2a, r2b) - target))
    return worst


def _scaled_gegenbauer(n: int, l: int, dot, r2x, r2y):
    """(r_x r_y)^l Q_l(dot / (r_x r_y)) written without square roots."""
    q = gegenbauer(n, l)
    total = 0
    for k, c in enumerate(q.coefficients):
        if c:
            total = total + c * dot**k * (r2x * r2y) ** ((l - k) // 2)
    return total


@dataclass
class ZeroCheckReport:
    gammas: list
    q4_values: list
    max_abs_q4: float
    identity_residuals: dict[str, float]
    exact: bool

    def to_dict(self) -> dict:
        return {"gammas": [float(g) for g in self.gammas], "q4_values": [float(v) for v in self.q4_values],
                "max_abs_q4": self.max_abs_q4, "identity_residuals": self.identity_residuals}


def kernel_identity_residuals(cfg: WeightedPointSet, e: int = 4,
                              half: Sequence[int] | None = None) -> dict[str, float]:
    """Residuals of the reproducing-kernel identities on an antipodal half.

    For an antipodal tight (2e+1)-design the kernel
    sum_{l = e mod 2} (r_x r_y)^l Q_l(cos) sum_j g_{l,j}(r_x) g_{l,j}(r_y),
    with g built on the half, equals delta_{x,y} / w(x) on that half.
    Keys name the shell pattern: diagonal ``"X1"``, off-diagonal ``"X1,X1"``,
    and cross-shell ``"X1,X2"``.
    """
    idx = list(half) if half is not None else antipodal_half_indices(cfg)
    sub = cfg.subset(idx)
    part = sub.partition
    n = cfg.dimension
    bases = {l: radial_basis(sub, l) for l in range(e % 2, e + 1, 2)}
    shell_of = {i: part.shell_of(i) for i in range(len(sub))}
    norms = [sub.norm_squared(i) for i in range(len(sub))]
    out: dict[str, float] = {}
    for x in range(len(sub)):
        for y in range(x, len(sub)):
            sx, sy = shell_of[x], shell_of[y]
            dot = sub.dot(x, y)
            total = sub.zero()
            for l, basis in bases.items():
                k = basis.kernel(norms[x], norms[y], jmax=(e - l) // 2)
                total = total + _scaled_gegenbauer(n, l, dot, norms[x], norms[y]) * k
            target = 1 / sub.weights[x] if x == y else 0
            if x == y:
                key = f"X{sx + 1}"
            elif sx == sy:
                key = f"X{sx + 1},X{sx + 1}"
            else:
                key = f"X{min(sx, sy) + 1},X{max(sx, sy) + 1}"
            out[key] = max(out.get(key, 0.0), float(abs(total - target)))
    return out


def cross_shell_zero_check(cfg: WeightedPointSet, half: Sequence[int] | None = None) -> ZeroCheckReport:
    """Evaluate Q_{4,n-1} on A(X1, X2) and the kernel identities of a 2-shell design."""
    part = cfg.partition
    if part.p != 2:
        raise ConfigurationError(f"expected 2 shells, found {part.p}")
    gammas = list(inner_product_profile(cfg).cross[(0, 1)])
    q4 = gegenbauer(cfg.dimension, 4)
    q4_sq = q4.in_square()
    values = [q4_sq(g * g) for g in gammas]
    residuals = kernel_identity_residuals(cfg, 4, half)
    return ZeroCheckReport(gammas, values, max(float(abs(v)) for v in values), residuals, cfg.exact)


@dataclass
class IntersectionTable:
    base_shell: int
    target_shell: int
    classes: tuple
    per_point: dict[int, tuple[int, ...]]
    regular: bool

    @property
    def counts(self) -> dict | None:
        """class value -> count, when the counts do not depend on the base point."""
        if not self.regular or not self.per_point:
            return None
        row = next(iter(self.per_point.values()))
        return dict(zip(self.classes, row))


def intersection_numbers(cfg: WeightedPointSet, base: int, target: int) -> IntersectionTable:
    """Per base point of shell ``base``, how many points of ``target`` sit at each inner-product class."""
    part = cfg.partition
    profile = inner_product_profile(cfg)
    if base == target:
        classes = profile.within[base]
    else:
        classes = profile.cross[(min(base, target), max(base, target))]
    r2b, r2t = part.radii_squared[base], part.radii_squared[target]
    per_point = {}
    for x in part.members[base]:
        row = [0] * len(classes)
        for y in part.members[target]:
            if x == y:
                continue
            dot = cfg.dot(x, y)
            if cfg.exact:
                val = (dot * dot) / (r2b * r2t)
                # classes are ordered; match by square then sign
                hits = [i for i, c in enumerate(classes) if c * c == val and (c > 0) == (dot > 0) and (c < 0) == (dot < 0)]
            else:
                val = dot / sqrt(r2b * r2t)
                hits = [min(range(len(classes)), key=lambda i: abs(classes[i] - val))]
                if abs(classes[hits[0]] - val) > 10 * cfg.tol:
                    hits = []
            if len(hits) != 1:
                raise ConfigurationError(f"inner product {val} matches no class")
            row[hits[0]] += 1
        per_point[x] = tuple(row)
    regular = len(set(per_point.values())) <= 1
    return IntersectionTable(base, target, classes, per_point, regular)
