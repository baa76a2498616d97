"""Adaptive quadrature machinery shared by all spectral and geometric integrals.

The workhorse is a vectorized global-adaptive Gauss-Kronrod (G7/K15) scheme:
the integrand is called on arrays of nodes, the worst interval is bisected
until the summed error estimate meets the requested tolerance.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

# G7/K15 nodes and weights on [-1, 1] (QUADPACK constants).
_XK = np.array([
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,
    0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759,
    0.991455371120813,
])
_WK = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979,
    0.022935322010529,
])
_WG = np.array([
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
    0.381830050505119, 0.279705391489277, 0.129484966168870,
])
_GAUSS_IDX = np.arange(1, 15, 2)  # Gauss points are the odd Kronrod nodes
_EPS = float(np.finfo(float).eps)


class Estimate(NamedTuple):
    """An integral value with its error estimate."""

    value: float
    error: float


class ToleranceError(RuntimeError):
    """Tolerance not reached within the subdivision budget.

    Carries the best estimate obtained so far in ``estimate``.
    """

    def __init__(self, msg: str, estimate: Estimate):
        super().__init__(msg)
        self.estimate = estimate


class BracketError(RuntimeError):
    """A root could not be bracketed in the search interval."""


@dataclass(frozen=True)
class PhiEvalPolicy:
    """Evaluation policy for the oscillatory pair kernel.

    Below ``switch_threshold`` the cancellation-safe power series with
    ``series_terms`` terms is used; above it, the closed form.
    ``working_precision`` (decimal digits) is used by the extended-precision
    reference evaluator in validation only.
    """

    switch_threshold: float = 0.5
    series_terms: int = 12
    working_precision: int = 50

    def __post_init__(self):
        if not (0 < self.switch_threshold <= 1.5):
            raise ValueError("switch_threshold must be in (0, 1.5]")
        if not (4 <= self.series_terms <= 16):
            raise ValueError("series_terms must be in [4, 16]")


@dataclass(frozen=True)
class QuadratureSpec:
    """Error contract for every integral: tolerances, budgets, MC sampling."""

    rel_tol: float = 1e-6
    abs_tol: float = 1e-30
    max_subdivisions: int = 4000
    phi_policy: PhiEvalPolicy = field(default_factory=PhiEvalPolicy)
    mc_samples: int = 200_000
    rng_seed: int = 20260809

    def __post_init__(self):
        if not (0.0 < self.rel_tol <= 1e-2):
            raise ValueError("rel_tol must be in (0, 1e-2]")
        if self.mc_samples < 10_000:
            raise ValueError("mc_samples must be at least 1e4")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


def _gk_panel(f: Callable, a: np.ndarray, b: np.ndarray):
    """G7/K15 on a batch of intervals; returns (kronrod, |k - gauss|, resabs)."""
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    x = mid[:, None] + half[:, None] * _XK[None, :]
    y = np.asarray(f(x.ravel()), dtype=float).reshape(x.shape)
    k = half * (y @ _WK)
    g = half * ((y[:, _GAUSS_IDX]) @ _WG)
    resabs = np.abs(half) * (np.abs(y) @ _WK)
    return k, np.abs(k - g), resabs


def adaptive_gk(f: Callable, a: float, b: float, rel_tol: float = 1e-10,
                abs_tol: float = 0.0, max_subdivisions: int = 4000,
                initial_panels: int = 1) -> Estimate:
    """Globally adaptive G7/K15 integration of ``f`` over [a, b].

    ``f`` must accept a 1-D ndarray and return one.  The error criterion is
    global (summed over intervals), so oscillatory integrands whose panels
    cancel are handled correctly; ``initial_panels`` pre-splits the range for
    such cases.  Raises :class:`ToleranceError` (with the best estimate
    attached) if the target is not met within ``max_subdivisions`` interval
    bisections.
    """
    if a == b:
        return Estimate(0.0, 0.0)
    initial_panels = max(1, min(initial_panels, max_subdivisions))
    edges = np.linspace(a, b, initial_panels + 1)
    vals, errs, resabs = _gk_panel(f, edges[:-1], edges[1:])
    # heap of (-err, counter, a, b, val); counter breaks ties deterministically
    heap = [(-errs[i], float(i), edges[i], edges[i + 1], vals[i])
            for i in range(initial_panels)]
    heapq.heapify(heap)
    total_val = float(vals.sum())
    total_err = float(errs.sum())
    total_abs = float(resabs.sum())
    count = initial_panels
    while count < max_subdivisions:
        # matching QUADPACK, do not chase error below the roundoff floor of
        # the absolute integral
        tol = max(abs_tol, rel_tol * abs(total_val), 100.0 * _EPS * total_abs)
        if total_err <= tol:
            break
        neg_err, _, ia, ib, ival = heapq.heappop(heap)
        im = 0.5 * (ia + ib)
        v2, e2, _ = _gk_panel(f, np.array([ia, im]), np.array([im, ib]))
        total_val += v2.sum() - ival
        total_err += e2.sum() + neg_err  # neg_err = -old error
        count += 1
        heapq.heappush(heap, (-e2[0], float(count), ia, im, v2[0]))
        heapq.heappush(heap, (-e2[1], count + 0.5, im, ib, v2[1]))
    else:
        est = Estimate(float(total_val), float(total_err))
        raise ToleranceError(
            f"integral did not converge in {max_subdivisions} subdivisions "
            f"(estimate {est.value:.6e} +- {est.error:.2e})", est)
    return Estimate(float(total_val), float(total_err))


def gl_nodes(a: float, b: float, panels: int, order: int = 12):
    """Composite Gauss-Legendre nodes/weights on [a, b]."""
    x, w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(a, b, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def composite_gl(f: Callable, a: float, b: float, panels: int,
                 order: int = 12) -> float:
    """Fixed composite Gauss-Legendre quadrature (no error estimate)."""
    x, w = gl_nodes(a, b, panels, order)
    return float(np.sum(np.asarray(f(x), dtype=float) * w))


def refine_gl(f: Callable, a: float, b: float, rel_tol: float,
              start_panels: int = 16, order: int = 12,
              max_panels: int = 1 << 20) -> Estimate:
    """Panel-doubling Gauss-Legendre with a difference-based error estimate.

    Used where the integrand is smooth but the adaptive heap would be
    overkill (profile moments, dimensionless ratio integrals).
    """
    prev = composite_gl(f, a, b, start_panels, order)
    panels = start_panels * 2
    while panels <= max_panels:
        cur = composite_gl(f, a, b, panels, order)
        err = abs(cur - prev)
        if err <= rel_tol * max(abs(cur), 1e-300):
            return Estimate(cur, err)
        prev = cur
        panels *= 2
    raise ToleranceError("panel refinement exceeded budget",
                         Estimate(prev, abs(prev)))


def bisect_then_secant(f: Callable[[float], float], lo: float, hi: float,
                       rel_tol: float = 1e-12, bisect_iters: int = 60,
                       secant_iters: int = 12) -> float:
    """Bracketed scalar root: bisection to safety, secant polish at the end."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0:
        raise BracketError(f"no sign change on [{lo:g}, {hi:g}]")
    for _ in range(bisect_iters):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if flo * fmid < 0:
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
        if hi - lo <= rel_tol * max(abs(lo), abs(hi)):
            break
    x0, x1 = lo, hi
    f0, f1 = flo, fhi
    for _ in range(secant_iters):
        if f1 == f0:
            break
        x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
        if not (lo <= x2 <= hi) or not math.isfinite(x2):
            break
        x0, f0, x1, f1 = x1, f1, x2, f(x2)
        if abs(x1 - x0) <= rel_tol * max(abs(x1), 1e-300):
            break
    return x1
