"""Adaptive quadrature and bracketed root finding.

The quadrature engine is a global-adaptive Gauss-Kronrod 7-15 rule: the
interval with the largest error estimate is bisected until the summed
error meets the relative tolerance.  Kronrod nodes are strictly interior
to each panel, so integrand singularities placed on panel edges (via the
``breakpoints`` argument) are never evaluated; integrable endpoint
singularities such as logs converge by plain bisection.
"""

from __future__ import annotations

import heapq
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

# 15-point Kronrod abscissae (positive half) and weights, with the
# embedded 7-point Gauss weights on the odd-index nodes.
_XGK = (
    0.9914553711208126,
    0.9491079123427585,
    0.8648644233597691,
    0.7415311855993944,
    0.5860872354676911,
    0.4058451513773972,
    0.2077849550078985,
    0.0,
)
_WGK = (
    0.022935322010529224,
    0.06309209262997855,
    0.10479001032225018,
    0.14065325971552592,
    0.1690047266392679,
    0.19035057806478542,
    0.20443294007529889,
    0.20948214108472782,
)
_WG = (
    0.12948496616886969,
    0.27970539148927664,
    0.3818300505051189,
    0.4179591836734694,
)

_MAX_DEPTH = 60


@dataclass(frozen=True)
class QuadratureResult:
    """Outcome of an adaptive integration.

    value is the best estimate, error_estimate the summed local error,
    evaluations the number of integrand calls, and converged tells
    whether the requested tolerance was actually reached.
    """

    value: float
    error_estimate: float
    evaluations: int
    converged: bool


@dataclass(frozen=True)
class Bracket:
    """An interval [lo, hi] on which a function changes sign."""

    lo: float
    hi: float


def _kronrod_panel(
    f: Callable[[float], float], lo: float, hi: float
) -> tuple[float, float, int]:
    """One GK7-15 pass over [lo, hi] -> (value, error, n_evals)."""
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    fc = f(center)
    if not math.isfinite(fc):
        raise ValueError(f"integrand returned {fc} at x = {center}")
    resk = _WGK[7] * fc
    resg = _WG[3] * fc
    resabs = _WGK[7] * abs(fc)
    values = [fc]
    for i in range(7):
        dx = half * _XGK[i]
        x1 = center - dx
        x2 = center + dx
        # on ulp-wide panels the outer nodes can round onto the edges;
        # keep them strictly interior so breakpoints are never evaluated
        if x1 <= lo:
            x1 = math.nextafter(lo, hi)
        if x2 >= hi:
            x2 = math.nextafter(hi, lo)
        f1 = f(x1)
        f2 = f(x2)
        if not math.isfinite(f1):
            raise ValueError(f"integrand returned {f1} at x = {x1}")
        if not math.isfinite(f2):
            raise ValueError(f"integrand returned {f2} at x = {x2}")
        s = f1 + f2
        resk += _WGK[i] * s
        resabs += _WGK[i] * (abs(f1) + abs(f2))
        if i % 2 == 1:
            resg += _WG[i // 2] * s
        values.append(f1)
        values.append(f2)
    mean = 0.5 * resk
    resasc = _WGK[7] * abs(fc - mean)
    for i in range(7):
        resasc += _WGK[i] * (abs(values[1 + 2 * i] - mean) + abs(values[2 + 2 * i] - mean))
    resasc *= abs(half)
    value = resk * half
    err = abs((resk - resg) * half)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    return value, err, 15


def integrate_adaptive(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    breakpoints: Sequence[float] = (),
    rel_tol: float = 1e-10,
) -> QuadratureResult:
    """Integrate f over [lo, hi] with known awkward points split out.

    Parameters
    ----------
    f : callable
        Integrand; must return finite floats (NaN/inf raise ValueError
        with the offending abscissa in the message).
    breakpoints : sequence of float
        Abscissae (singularities, kinks, discontinuities) that become
        panel boundaries; they are never passed to f.
    rel_tol : float
        Target on error/|value|.  If bisection bottoms out (depth 60)
        before reaching it, the best estimate is still returned with
        ``converged=False``.
    """
    if hi == lo:
        return QuadratureResult(0.0, 0.0, 0, True)
    if hi < lo:
        r = integrate_adaptive(f, hi, lo, breakpoints, rel_tol)
        return QuadratureResult(-r.value, r.error_estimate, r.evaluations, r.converged)
    edges = [lo]
    for x in sorted(set(breakpoints)):
        if edges[-1] < x < hi:
            edges.append(x)
    edges.append(hi)

    total = 0.0
    total_err = 0.0
    evals = 0
    heap: list[tuple[float, int, float, float, float, float, int]] = []
    counter = 0
    for a, b in zip(edges[:-1], edges[1:]):
        v, e, n = _kronrod_panel(f, a, b)
        total += v
        total_err += e
        evals += n
        heapq.heappush(heap, (-e, counter, a, b, v, e, 0))
        counter += 1

    floor = 1e-300
    while total_err > rel_tol * max(abs(total), floor):
        neg_e, _, a, b, v, e, depth = heapq.heappop(heap)
        if depth >= _MAX_DEPTH:
            heapq.heappush(heap, (neg_e, counter, a, b, v, e, depth))
            return QuadratureResult(total, total_err, evals, False)
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            heapq.heappush(heap, (neg_e, counter, a, b, v, e, _MAX_DEPTH))
            counter += 1
            continue
        v1, e1, n1 = _kronrod_panel(f, a, mid)
        v2, e2, n2 = _kronrod_panel(f, mid, b)
        total += v1 + v2 - v
        total_err += e1 + e2 - e
        evals += n1 + n2
        heapq.heappush(heap, (-e1, counter, a, mid, v1, e1, depth + 1))
        counter += 1
        heapq.heappush(heap, (-e2, counter, mid, b, v2, e2, depth + 1))
        counter += 1
    return QuadratureResult(total, total_err, evals, True)


def scan_sign_changes(
    g: Callable[[float], float], grid: Sequence[float]
) -> list[Bracket]:
    """Walk a grid and collect intervals on which g strictly changes sign.

    Grid points where g is NaN (e.g. kinematically invalid abscissae)
    are skipped; a warning reports how many were dropped.  A bracket is
    only emitted between two consecutive valid points with g of strictly
    opposite sign.
    """
    brackets: list[Bracket] = []
    n_bad = 0
    prev_x = None
    prev_g = None
    for x in grid:
        val = g(x)
        if val is None or math.isnan(val):
            n_bad += 1
            continue
        if prev_g is not None and (prev_g < 0.0 < val or val < 0.0 < prev_g):
            brackets.append(Bracket(lo=prev_x, hi=x))
        prev_x = x
        prev_g = val
    if n_bad:
        warnings.warn(f"sign scan skipped {n_bad} grid points with undefined values")
    return brackets


def find_root_bracketed(
    g: Callable[[float], float], br: Bracket, x_tol: float = 1e-12
) -> float:
    """Brent's method on a sign-changing bracket.

    The iterate never leaves [br.lo, br.hi].  Convergence is declared
    when the interval shrinks below x_tol * max(1, |x|).
    """
    a, b = br.lo, br.hi
    fa, fb = g(a), g(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0.0) == (fb > 0.0):
        raise ValueError(f"bracket [{a}, {b}] does not change sign")
    c, fc = a, fa
    d = e = b - a
    for _ in range(200):
        if (fb > 0.0) == (fc > 0.0):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 0.5 * x_tol * max(1.0, abs(b))
        xm = 0.5 * (c - b)
        if abs(xm) <= tol1 or fb == 0.0:
            return b
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * xm * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            p = abs(p)
            if 2.0 * p < min(3.0 * xm * q - abs(tol1 * q), abs(e * q)):
                e = d
                d = p / q
            else:
                d = xm
                e = d
        else:
            d = xm
            e = d
        a, fa = b, fb
        if abs(d) > tol1:
            b += d
        else:
            b += tol1 if xm > 0.0 else -tol1
        fb = g(b)
    return b
