"""Weighted point sets on concentric spheres.

Two scalar backends share one comparison contract: ``"rational"`` stores
:class:`~fractions.Fraction` coordinates and compares exactly, ``"float"``
stores Python floats and compares with an absolute tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import sqrt
from typing import Iterable, Sequence

import numpy as np

from .moments import ShellMeasure
from .surd import QuadraticSurd

RATIONAL = "rational"
FLOAT = "float"
DEFAULT_TOL = 1e-9


class ConfigurationError(ValueError):
    """Raised when a point set violates the data-model invariants."""


@dataclass(frozen=True, eq=False)
class WeightedPointSet:
    dimension: int
    coords: tuple[tuple, ...]
    weights: tuple
    backend: str = RATIONAL
    tol: float = DEFAULT_TOL
    name: str = ""

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ConfigurationError(f"dimension must be positive, got {self.dimension}")
        if self.backend not in (RATIONAL, FLOAT):
            raise ConfigurationError(f"unknown backend {self.backend!r}")
        if len(self.coords) != len(self.weights):
            raise ConfigurationError("one weight per point required")
        conv = Fraction if self.backend == RATIONAL else float
        coords = tuple(tuple(conv(c) for c in pt) for pt in self.coords)
        weights = tuple(conv(w) for w in self.weights)
        for pt in coords:
            if len(pt) != self.dimension:
                raise ConfigurationError(f"point {pt} does not have arity {self.dimension}")
        for w in weights:
            if not w > 0:
                raise ConfigurationError(f"weights must be positive, got {w}")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "weights", weights)
        if self.backend == RATIONAL:
            if len(set(coords)) != len(coords):
                raise ConfigurationError("duplicate points")
        elif len(coords) > 1:
            arr = np.asarray(coords, dtype=float)
            gaps = np.abs(arr[:, None, :] - arr[None, :, :]).max(axis=2)
            np.fill_diagonal(gaps, np.inf)
            if gaps.min() <= self.tol:
                raise ConfigurationError("duplicate points (within tolerance)")

    @classmethod
    def from_points(cls, points: Iterable[Sequence], weights: Iterable | None = None,
                    backend: str | None = None, tol: float = DEFAULT_TOL, name: str = "") -> "WeightedPointSet":
        pts = [tuple(p) for p in points]
        if not pts:
            raise ConfigurationError("cannot infer the dimension of an empty point set")
        ws = list(weights) if weights is not None else [1] * len(pts)
        if backend is None:
            exact = all(isinstance(c, (int, Fraction)) for p in pts for c in p) and \
                all(isinstance(w, (int, Fraction)) for w in ws)
            backend = RATIONAL if exact else FLOAT
        return cls(len(pts[0]), tuple(pts), tuple(ws), backend, tol, name)

    @classmethod
    def empty(cls, dimension: int, backend: str = RATIONAL) -> "WeightedPointSet":
        return cls(dimension, (), (), backend)

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def exact(self) -> bool:
        return self.backend == RATIONAL

    def zero(self):
        return Fraction(0) if self.exact else 0.0

    def is_zero(self, value) -> bool:
        return value == 0 if self.exact else abs(value) <= self.tol

    def same(self, a, b) -> bool:
        return self.is_zero(a - b)

    def dot(self, i: int, j: int):
        return sum((a * b for a, b in zip(self.coords[i], self.coords[j])), self.zero())

    def norm_squared(self, i: int):
        return self.dot(i, i)

    def as_array(self) -> np.ndarray:
        return np.asarray([[float(c) for c in p] for p in self.coords], dtype=float).reshape(len(self), self.dimension)

    def to_float(self) -> "WeightedPointSet":
        if not self.exact:
            return self
        return WeightedPointSet(self.dimension, tuple(tuple(float(c) for c in p) for p in self.coords),
                                tuple(float(w) for w in self.weights), FLOAT, self.tol, self.name)

    def subset(self, indices: Iterable[int]) -> "WeightedPointSet":
        idx = list(indices)
        return WeightedPointSet(self.dimension, tuple(self.coords[i] for i in idx),
                                tuple(self.weights[i] for i in idx), self.backend, self.tol, self.name)

    def transformed(self, matrix: np.ndarray) -> "WeightedPointSet":
        """Apply a linear map (float backend result)."""
        arr = self.as_array() @ np.asarray(matrix, dtype=float).T
        return WeightedPointSet(self.dimension, tuple(map(tuple, arr.tolist())),
                                tuple(float(w) for w in self.weights), FLOAT, self.tol, self.name)

    def scaled(self, s) -> "WeightedPointSet":
        return WeightedPointSet(self.dimension, tuple(tuple(s * c for c in p) for p in self.coords),
                                self.weights, self.backend, self.tol, self.name)

    @cached_property
    def partition(self) -> "ShellPartition":
        return partition_shells(self)


@dataclass(frozen=True)
class ShellPartition:
    radii_squared: tuple
    members: tuple[tuple[int, ...], ...]
    masses: tuple
    constant_weights: tuple  # per shell: the common weight, or None when weights vary
    origin: tuple[int, ...] = field(default=())

    @property
    def p(self) -> int:
        return len(self.radii_squared)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(m) for m in self.members)

    @property
    def has_origin(self) -> bool:
        return bool(self.origin)

    def shell_of(self, index: int) -> int:
        for s, mem in enumerate(self.members):
            if index in mem:
                return s
        raise KeyError(index)

    def measures(self) -> list[ShellMeasure]:
        return [ShellMeasure(r2, m) for r2, m in zip(self.radii_squared, self.masses)]


def partition_shells(cfg: WeightedPointSet) -> ShellPartition:
    """Group points by squared norm; points at the origin are flagged, not shelled."""
    norms = [cfg.norm_squared(i) for i in range(len(cfg))]
    origin = tuple(i for i, r2 in enumerate(norms) if cfg.is_zero(r2))
    rest = sorted((i for i in range(len(cfg)) if i not in origin), key=lambda i: norms[i])
    groups: list[list[int]] = []
    for i in rest:
        if groups and cfg.same(norms[groups[-1][0]], norms[i]):
            groups[-1].append(i)
        else:
            groups.append([i])
    radii, members, masses, consts = [], [], [], []
    for g in groups:
        vals = [norms[i] for i in g]
        radii.append(vals[0] if cfg.exact else sum(vals) / len(vals))
        members.append(tuple(sorted(g)))
        ws = [cfg.weights[i] for i in g]
        masses.append(sum(ws, cfg.zero()))
        consts.append(ws[0] if all(cfg.same(w, ws[0]) for w in ws) else None)
    return ShellPartition(tuple(radii), tuple(members), tuple(masses), tuple(consts), origin)


def merge(*configs: WeightedPointSet) -> WeightedPointSet:
    """Union of point sets with a common dimension and backend."""
    first = configs[0]
    coords = tuple(p for c in configs for p in c.coords)
    weights = tuple(w for c in configs for w in c.weights)
    backend = RATIONAL if all(c.exact for c in configs) else FLOAT
    return WeightedPointSet(first.dimension, coords, weights, backend, first.tol, first.name)


@dataclass(frozen=True)
class InnerProductProfile:
    within: dict[int, tuple]
    cross: dict[tuple[int, int], tuple]

    def sizes(self) -> dict:
        out = {f"A(X{i + 1})": len(v) for i, v in self.within.items()}
        out.update({f"A(X{i + 1},X{j + 1})": len(v) for (i, j), v in self.cross.items()})
        return out


def _normalized(cfg: WeightedPointSet, i: int, j: int, r2i, r2j):
    dot = cfg.dot(i, j)
    if cfg.exact:
        val = QuadraticSurd(dot) / QuadraticSurd.sqrt(r2i * r2j)
        return val.a if val.is_rational() else val
    return min(1.0, max(-1.0, dot / sqrt(r2i * r2j)))


def _dedupe(values: list, cfg: WeightedPointSet) -> tuple:
    if not values:
        return ()
    values = sorted(values)
    if cfg.exact:
        out = [values[0]]
        for v in values[1:]:
            if v != out[-1]:
                out.append(v)
        return tuple(out)
    gap = 10 * cfg.tol
    clusters = [[values[0]]]
    for v in values[1:]:
        if v - clusters[-1][-1] <= gap:
            clusters[-1].append(v)
        else:
            clusters.append([v])
    return tuple(sum(c) / len(c) for c in clusters)


def inner_product_profile(cfg: WeightedPointSet) -> InnerProductProfile:
    """Sorted sets of normalised inner products within and across shells."""
    part = cfg.partition
    within, cross = {}, {}
    for s, mem in enumerate(part.members):
        r2 = part.radii_squared[s]
        vals = [_normalized(cfg, i, j, r2, r2) for a, i in enumerate(mem) for j in mem[a + 1:]]
        within[s] = _dedupe(vals, cfg)
    for s in range(part.p):
        for t in range(s + 1, part.p):
            r2s, r2t = part.radii_squared[s], part.radii_squared[t]
            vals = [_normalized(cfg, i, j, r2s, r2t) for i in part.members[s] for j in part.members[t]]
            cross[(s, t)] = _dedupe(vals, cfg)
    return InnerProductProfile(within, cross)


def _negation_index(cfg: WeightedPointSet) -> list[int | None]:
    if cfg.exact:
        lookup = {p: i for i, p in enumerate(cfg.coords)}
        return [lookup.get(tuple(-c for c in p)) for p in cfg.coords]
    arr = cfg.as_array()
    out: list[int | None] = []
    for row in arr:
        gaps = np.abs(arr + row).max(axis=1)
        j = int(np.argmin(gaps))
        out.append(j if gaps[j] <= cfg.tol else None)
    return out


def is_antipodal(cfg: WeightedPointSet) -> tuple[bool, dict[int, int] | None]:
    """Whether X = -X with matching weights; returns the involution when it is."""
    neg = _negation_index(cfg)
    pairing: dict[int, int] = {}
    for i, j in enumerate(neg):
        if j is None or j == i or not cfg.same(cfg.weights[i], cfg.weights[j]):
            return False, None
        pairing[i] = j
    return True, pairing


def _lex_positive(cfg: WeightedPointSet, pt: tuple) -> bool:
    for c in pt:
        if not cfg.is_zero(c):
            return c > 0
    return False


def antipodal_half_indices(cfg: WeightedPointSet) -> list[int]:
    ok, pairing = is_antipodal(cfg)
    if not ok:
        raise ConfigurationError("point set is not antipodal")
    return [i for i in range(len(cfg)) if _lex_positive(cfg, cfg.coords[i])]


def antipodal_half(cfg: WeightedPointSet) -> WeightedPointSet:
    """The lexicographically positive representative of every pair {x, -x}."""
    return cfg.subset(antipodal_half_indices(cfg))
