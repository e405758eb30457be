"""Generalized Wright functions, their k-deformation, and pFq.

A Wright spec carries rows (a_i, alpha_i) over (b_j, beta_j) and evaluates

    sum_n  prod_i Gamma(a_i + alpha_i n) / prod_j Gamma(b_j + beta_j n) * z^n / n!

with Gamma replaced by Gamma_k(., k_scale) for the deformed variant; the
k_scale = 1 case degenerates to the classical function through the identical
code path.  Entire-function evaluation requires the margin
Delta = sum beta_j - sum alpha_i > -1, checked at construction; the
conditionally convergent boundary Delta = -1 is rejected rather than
special-cased.  All offsets must stay positive along the series, which for
n >= 0 means positive offsets and nonnegative weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .kbessel import SeriesResult, _accumulate
from .kgamma import log_k_gamma

__all__ = [
    "WrightSpec",
    "convergence_margin",
    "eval_wright",
    "eval_k_wright",
    "eval_pfq",
    "wright_pfq_reduction_check",
]


def _as_rows(rows, side: str) -> tuple[tuple[float, float], ...]:
    out = []
    for row in rows:
        try:
            off, wt = row
        except (TypeError, ValueError):
            raise DomainError(f"{side} rows must be (offset, weight) pairs, got {row!r}") from None
        off = float(off)
        wt = float(wt)
        if not (math.isfinite(off) and math.isfinite(wt)):
            raise DomainError(f"{side} row not finite: {row!r}")
        if not off > 0:
            raise DomainError(f"{side} offset must be positive, got {off!r}")
        if wt < 0:
            raise DomainError(f"{side} weight must be nonnegative, got {wt!r}")
        out.append((off, wt))
    return tuple(out)


@dataclass(frozen=True)
class WrightSpec:
    upper: tuple[tuple[float, float], ...]
    lower: tuple[tuple[float, float], ...]
    k_scale: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "upper", _as_rows(self.upper, "upper"))
        object.__setattr__(self, "lower", _as_rows(self.lower, "lower"))
        object.__setattr__(self, "k_scale", float(self.k_scale))
        if not (math.isfinite(self.k_scale) and self.k_scale > 0):
            raise DomainError(f"k_scale must be positive, got {self.k_scale!r}")
        # Gamma_k(a + wn) = k^((a+wn)/k - 1) Gamma((a+wn)/k), so the series
        # behaves like a plain Wright series with weights w/k_scale and the
        # entirety threshold scales accordingly.
        margin = convergence_margin(self)
        if not margin > -self.k_scale:
            raise DomainError(
                f"convergence margin sum(beta) - sum(alpha) = {margin!r} "
                f"must exceed {-self.k_scale!r} for entire-function evaluation"
            )


def convergence_margin(s: WrightSpec) -> float:
    """Delta = sum of lower weights - sum of upper weights."""
    return math.fsum(wt for _, wt in s.lower) - math.fsum(wt for _, wt in s.upper)


def _term_log(s: WrightSpec, n: int) -> float:
    """log of the n-th term with z^n stripped out."""
    lg = -math.lgamma(n + 1.0)
    for off, wt in s.upper:
        lg += log_k_gamma(off + wt * n, s.k_scale)
    for off, wt in s.lower:
        lg -= log_k_gamma(off + wt * n, s.k_scale)
    return lg


def _term_value(s: WrightSpec, z: float, n: int) -> float:
    """n-th term including z^n / n!; diagnostics helper."""
    if z == 0.0:
        return math.exp(_term_log(s, 0)) if n == 0 else 0.0
    v = math.exp(_term_log(s, n) + n * math.log(abs(z)))
    return -v if (z < 0 and n % 2) else v


def _wright_pairs(s: WrightSpec, z: float, max_terms: int):
    lz = math.log(abs(z))
    cur = _term_log(s, 0)
    for n in range(max_terms):
        nxt = _term_log(s, n + 1)
        t = math.exp(cur + n * lz)
        if z < 0 and n % 2:
            t = -t
        yield t, math.exp(nxt - cur + lz)
        cur = nxt


def eval_k_wright(
    s: WrightSpec, z: float, tol: float = 1e-10, max_terms: int = 400
) -> SeriesResult:
    """Evaluate the Gamma_k-deformed Wright series at real z."""
    if not (isinstance(z, (int, float)) and math.isfinite(z)):
        raise DomainError(f"argument must be a finite real, got {z!r}")
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    max_terms = int(max_terms)
    if max_terms < 1:
        raise DomainError(f"max_terms must be >= 1, got {max_terms!r}")
    z = float(z)
    if z == 0.0:
        return SeriesResult(math.exp(_term_log(s, 0)), 1, 0.0, True)
    value, terms, tail, converged = _accumulate(_wright_pairs(s, z, max_terms), tol, max_terms)
    return SeriesResult(value, terms, tail, converged)


def eval_wright(s: WrightSpec, z: float, tol: float = 1e-10, max_terms: int = 400) -> SeriesResult:
    """Classical Wright series; requires a spec with k_scale = 1."""
    if s.k_scale != 1.0:
        raise DomainError(f"classical evaluation needs k_scale = 1, got {s.k_scale!r}")
    return eval_k_wright(s, z, tol=tol, max_terms=max_terms)


def _ratio_tail_bound(upper, dens, z: float, n: int) -> float:
    """Bound on every term ratio from index n on.

    Each paired factor (a+m)/(d+m) moves monotonically toward 1 for m >= n,
    so max(|current|, 1) bounds its whole tail; unpaired denominators only
    shrink the ratio further.  dens must be positive.
    """
    rho = abs(z)
    for j, aj in enumerate(upper):
        rho *= max(abs(aj + n) / (dens[j] + n), 1.0)
    for d in dens[len(upper):]:
        rho /= d + n
    return rho


def _pfq_pairs(upper, lower, z: float, max_terms: int):
    dens = list(lower) + [1.0]
    t = 1.0
    for n in range(max_terms):
        r = z / (n + 1.0)
        for aj in upper:
            r *= aj + n
        for bj in lower:
            r /= bj + n
        # r == 0 means a Pochhammer factor hit zero: exact termination
        rho = 0.0 if r == 0.0 else _ratio_tail_bound(upper, dens, z, n)
        yield t, rho
        t *= r


def eval_pfq(
    upper, lower, z: float, tol: float = 1e-10, max_terms: int = 400
) -> SeriesResult:
    """Generalized hypergeometric sum_n prod (a_j)_n / prod (b_j)_n * z^n / n!.

    Converges for p <= q everywhere and for p = q + 1 inside |z| < 1; other
    shapes are rejected.  Lower parameters must avoid nonpositive integers.
    """
    upper = [float(v) for v in upper]
    lower = [float(v) for v in lower]
    if not all(math.isfinite(v) for v in upper + lower):
        raise DomainError("hypergeometric parameters must be finite")
    if not (isinstance(z, (int, float)) and math.isfinite(z)):
        raise DomainError(f"argument must be a finite real, got {z!r}")
    z = float(z)
    p, q = len(upper), len(lower)
    if p > q + 1:
        raise DomainError(f"series diverges for p > q + 1 (p={p}, q={q})")
    if p == q + 1 and not abs(z) < 1.0:
        raise DomainError(f"p = q + 1 requires |z| < 1, got z={z!r}")
    for bj in lower:
        if bj <= 0 and bj == math.floor(bj):
            raise DomainError(f"lower parameter {bj!r} is a nonpositive integer")
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    max_terms = int(max_terms)
    if max_terms < 1:
        raise DomainError(f"max_terms must be >= 1, got {max_terms!r}")
    value, terms, tail, converged = _accumulate(
        _pfq_pairs(upper, lower, z, max_terms), tol, max_terms
    )
    return SeriesResult(value, terms, tail, converged)


def _weight1_pairs(upper, lower, z: float, max_terms: int):
    def term_log(n: int) -> float:
        lg = -math.lgamma(n + 1.0)
        for a in upper:
            lg += math.lgamma(a + n)
        for b in lower:
            lg -= math.lgamma(b + n)
        return lg

    dens = list(lower) + [1.0]
    lz = math.log(abs(z))
    cur = term_log(0)
    for n in range(max_terms):
        t = math.exp(cur + n * lz)
        if z < 0 and n % 2:
            t = -t
        yield t, _ratio_tail_bound(upper, dens, z, n)
        cur = term_log(n + 1)


def wright_pfq_reduction_check(upper, lower, z: float, tol: float = 1e-12, max_terms: int = 400) -> float:
    """Relative gap between the all-weights-1 Wright series and the scaled pFq.

    With unit weights the Wright series equals
    (prod Gamma(a_i) / prod Gamma(b_j)) * pFq; returns the relative
    discrepancy between the two independently summed sides.
    """
    upper = [float(v) for v in upper]
    lower = [float(v) for v in lower]
    scale = math.exp(
        math.fsum(math.lgamma(a) for a in upper) - math.fsum(math.lgamma(b) for b in lower)
    )
    rhs = scale * eval_pfq(upper, lower, z, tol=tol, max_terms=max_terms).value
    if len(upper) == len(lower) + 1:
        # The weight-1 margin is exactly -1 here, so WrightSpec refuses to
        # construct; the series still converges inside |z| < 1 (enforced by
        # the pFq side), so sum it term by term.
        if any(v <= 0 for v in upper + lower):
            raise DomainError("reduction check needs positive parameters")
        if z == 0.0:
            lhs = scale
        else:
            lhs, _, _, _ = _accumulate(
                _weight1_pairs(upper, lower, float(z), max_terms), tol, max_terms
            )
    else:
        spec = WrightSpec(
            tuple((a, 1.0) for a in upper), tuple((b, 1.0) for b in lower), 1.0
        )
        lhs = eval_wright(spec, z, tol=tol, max_terms=max_terms).value
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)
