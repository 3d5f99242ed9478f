"""Range certificates: run both exclusion cases over an interval of dimensions."""

from __future__ import annotations

import hashlib
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .nonexistence import (
    CaseIIReport,
    CaseIReport,
    case1_certify,
    case2_certify,
    integer_sqrt,
    sqrt_n4_over_3,
)

GLOBAL_EXCLUDED = "no tight 9-design on 2 spheres in range"
GLOBAL_CANDIDATE = "counterexample candidate"


@dataclass
class RangeCertificate:
    """Aggregated verdicts for every n in [n_lo, n_hi].

    Full reports are kept for every n whose 6(n+1)(n+2) is a perfect square
    and for every n passing the first Case II test; all other n are excluded
    at step 1 of both cases and appear only in the step histograms and in
    ``digest``, a SHA-256 over the per-n lines ``"n c1 c2"``.
    """

    n_lo: int
    n_hi: int
    admissible: list[int]
    pell_squares: list[int]
    case1_steps: dict[int, int]
    case2_steps: dict[int, int]
    case1_reports: dict[int, CaseIReport]
    case2_reports: dict[int, CaseIIReport]
    failures: list[int]
    digest: str
    engine_version: str = __version__
    elapsed: float | None = field(default=None, compare=False)

    @property
    def verdict(self) -> str:
        return GLOBAL_CANDIDATE if self.failures else GLOBAL_EXCLUDED

    @property
    def excluded(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "range": [self.n_lo, self.n_hi],
            "verdict": self.verdict,
            "admissible": self.admissible,
            "pell_squares": self.pell_squares,
            "case1_steps": {str(k): v for k, v in sorted(self.case1_steps.items())},
            "case2_steps": {str(k): v for k, v in sorted(self.case2_steps.items())},
            "case1_reports": {str(n): r.to_dict() for n, r in sorted(self.case1_reports.items())},
            "case2_reports": {str(n): r.to_dict() for n, r in sorted(self.case2_reports.items())},
            "failures": self.failures,
            "digest": self.digest,
            "engine_version": self.engine_version,
        }
        if timing and self.elapsed is not None:
            out["elapsed_seconds"] = self.elapsed
        return out


def _certify_block(bounds: tuple[int, int]):
    """Per-n (n, c1 step, c2 step) plus full reports where they carry information."""
    lo, hi = bounds
    rows, c1_full, c2_full = [], {}, {}
    for n in range(lo, hi + 1):
        if integer_sqrt(6 * (n + 1) * (n + 2))[1]:
            rep1 = case1_certify(n)
            c1_full[n] = rep1
            s1 = rep1.failed_step if rep1.excluded else 0
        else:
            s1 = 1
        if sqrt_n4_over_3(n) is not None:
            rep2 = case2_certify(n)
            c2_full[n] = rep2
            s2 = rep2.failed_step if rep2.excluded else 0
        else:
            s2 = 1
        rows.append((n, s1, s2))
    return rows, c1_full, c2_full


def _blocks(n_lo: int, n_hi: int, parts: int) -> list[tuple[int, int]]:
    size = max(1, -(-(n_hi - n_lo + 1) // parts))
    return [(a, min(a + size - 1, n_hi)) for a in range(n_lo, n_hi + 1, size)]


def certify_range(n_lo: int, n_hi: int, workers: int = 1) -> RangeCertificate:
    """Exclude every n in [n_lo, n_hi]; the result does not depend on ``workers``."""
    if not 3 <= n_lo <= n_hi:
        raise ValueError(f"need 3 <= n_lo <= n_hi, got [{n_lo}, {n_hi}]")
    start = time.perf_counter()
    workers = max(1, int(workers))
    blocks = _blocks(n_lo, n_hi, workers * 4 if workers > 1 else 1)
    if workers == 1:
        results = [_certify_block(b) for b in blocks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_certify_block, blocks))
    sha = hashlib.sha256()
    c1_steps: dict[int, int] = {}
    c2_steps: dict[int, int] = {}
    c1_full: dict[int, CaseIReport] = {}
    c2_full: dict[int, CaseIIReport] = {}
    failures = []
    for rows, r1, r2 in results:  # blocks are already in ascending n
        c1_full.update(r1)
        c2_full.update(r2)
        for n, s1, s2 in rows:
            sha.update(f"{n} {s1} {s2}\n".encode())
            c1_steps[s1] = c1_steps.get(s1, 0) + 1
            c2_steps[s2] = c2_steps.get(s2, 0) + 1
            if s1 == 0 or s2 == 0:
                failures.append(n)
    squares = sorted(c1_full)
    admissible = [n for n in squares if c1_full[n].failed_step != 2]
    return RangeCertificate(n_lo, n_hi, admissible, squares, c1_steps, c2_steps, c1_full, c2_full,
                            failures, sha.hexdigest(), elapsed=time.perf_counter() - start)


def default_workers() -> int:
    env = os.environ.get("TDL_JOBS")
    return int(env) if env else 1
