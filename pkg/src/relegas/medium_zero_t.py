"""Closed-form medium response at zero temperature.

With a sharp Fermi sea the occupation integrals of the finite-T module
collapse to elementary functions.  The imaginary parts become cubic
bracket differences over the active part of the kinematic window; the
real parts reduce to boundary terms (U), a density term (W), and a
biquadratic-denominator piece (Z) built from the two master integrals

    I_j = \\int_0^{t_F} t^j dt / (fC t^4 + fB t^2 + fA),   j = 0, 2,

with t_F = y_F/x_F the Fermi velocity.  On the real branch (gamma2 > 0)
the denominator has real roots t_-, t_+, which lie inside (0, t_F)
whenever the point absorbs; the printed two-log antiderivative then
evaluates the integrals in the principal-value sense.  All Z evaluations
below go through difference-quotient forms that stay accurate when the
two roots collide (a -> 0 or gamma2 -> 0).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .kinematics import (
    FermiSurface,
    InternalConsistencyError,
    KinematicPoint,
    RegionLabel,
    classify_region,
    zero_t_subregion,
)
from .medium_finite_t import ResponseScalars, r1, r2
from .occupation import MediumState
from .vacuum import c_star

_EDGE_TOL = 1e-14


class SubregionBoundaryError(ValueError):
    """Point sits exactly on a subregion boundary where the closed real
    parts are individually log-divergent (their sum is finite but not
    computable in double precision there)."""


@dataclass(frozen=True)
class ZeroTCoefficients:
    """Polynomial coefficients of the zero-temperature Z terms.

    M_*, N_* build the quartic numerators n(s) = M + N (1 - s); C_B and
    C_D are the constant weights of the Z pieces; frakA, frakB, frakC
    are the biquadratic denominator coefficients fA + fB t^2 + fC t^4
    of the master integrals.
    """

    M_B: float
    N_B: float
    M_D: float
    N_D: float
    C_B: float
    C_D: float
    frakA: float
    frakB: float
    frakC: float


def zero_t_coefficients(p: KinematicPoint) -> ZeroTCoefficients:
    """Coefficients entering Z_B and Z_D at the kinematic point p."""
    a2 = p.a * p.a
    b2 = p.b * p.b
    d2 = p.d2
    d4 = d2 * d2
    m_b = -2.0 * a2 * (1.0 + 4.0 * b2) - (1.0 - 2.0 * b2 - 2.0 * a2 * (2.0 - p.gamma2)) * d2
    n_b = -d4 * (1.0 - 2.0 * b2)
    m_d = 2.0 * a2 * (1.0 + p.gamma2) - d2
    n_d = -d4
    return ZeroTCoefficients(
        M_B=m_b,
        N_B=n_b,
        M_D=m_d,
        N_D=n_d,
        C_B=1.0 / 3.0,
        C_D=0.5 * (1.0 + 2.0 * p.c2),
        frakA=(d2 + 1.0) ** 2 - 4.0 * a2,
        frakB=-2.0 * (d2 * (d2 + 1.0) - 2.0 * a2),
        frakC=d4,
    )


def _edge_log(t: float, t_fermi: float) -> float:
    """log|t_F - t| - log(t_F + t), stable for t << t_F."""
    if abs(t_fermi - t) <= _EDGE_TOL * max(1.0, t_fermi):
        raise SubregionBoundaryError(
            f"denominator root t = {t} collides with the Fermi velocity {t_fermi}"
        )
    if t < 0.5 * t_fermi:
        return math.log1p(-2.0 * t / (t_fermi + t))
    return math.log(abs(t_fermi - t)) - math.log(t_fermi + t)


@dataclass(frozen=True)
class _RealBranchPieces:
    # difference-quotient building blocks: d_g ~ dG/ds, g_bar ~ mean G,
    # s_bar ~ mean squared root, with G(t) = edge_log(t)/(2 t)
    d_g: float
    g_bar: float
    s_bar: float
    frak_c: float


def _real_branch_pieces(p: KinematicPoint, t_fermi: float) -> _RealBranchPieces:
    d2 = p.d2
    frak_c = d2 * d2
    g = math.sqrt(p.gamma2)
    t0_sq = (d2 * (d2 + 1.0) - 2.0 * p.a * p.a) / frak_c
    delta_s = 4.0 * p.a * p.b * g / frak_c
    if delta_s == 0.0:
        # coincident roots (a = 0): use the s-derivative of G directly
        if t0_sq <= 0.0:
            raise InternalConsistencyError(
                f"degenerate root t0^2 = {t0_sq} is not positive at (a, b) = ({p.a}, {p.b})"
            )
        t0 = math.sqrt(t0_sq)
        gap = t_fermi * t_fermi - t0_sq
        if abs(gap) <= _EDGE_TOL * max(1.0, t_fermi * t_fermi):
            raise SubregionBoundaryError(
                f"degenerate root t0 = {t0} collides with the Fermi velocity {t_fermi}"
            )
        log0 = _edge_log(t0, t_fermi)
        d_g = -t_fermi / (2.0 * t0_sq * gap) - log0 / (4.0 * t0 * t0_sq)
        return _RealBranchPieces(d_g=d_g, g_bar=log0 / (2.0 * t0), s_bar=t0_sq, frak_c=frak_c)
    tp_sq = t0_sq + 0.5 * delta_s
    tm_sq = t0_sq - 0.5 * delta_s
    if tp_sq <= 0.0 or tm_sq <= 0.0:
        raise InternalConsistencyError(
            f"real-branch roots t+^2 = {tp_sq}, t-^2 = {tm_sq} must be positive"
        )
    tp = math.sqrt(tp_sq)
    tm = math.sqrt(tm_sq)
    log_p = _edge_log(tp, t_fermi)
    log_m = _edge_log(tm, t_fermi)
    delta_t = delta_s / (tp + tm)
    # (log_p - log_m)/delta_t, recast through atanh when the roots are close
    u = t_fermi * t_fermi - tp * tm
    v = t_fermi * delta_t
    if abs(v) < 0.5 * abs(u):
        d_log = -2.0 * math.atanh(v / u) / delta_t
    else:
        d_log = (log_p - log_m) / delta_t
    d_g = (d_log / (2.0 * tp) - log_m / (2.0 * tp * tm)) / (tp + tm)
    g_bar = 0.5 * (log_p / (2.0 * tp) + log_m / (2.0 * tm))
    return _RealBranchPieces(d_g=d_g, g_bar=g_bar, s_bar=0.5 * (tp_sq + tm_sq), frak_c=frak_c)


def _complex_branch_pieces(
    p: KinematicPoint, t_fermi: float
) -> tuple[float, float, float, float]:
    """(lg, at, t_r, m2) of the complex-root antiderivative."""
    d2 = p.d2
    frak_c = d2 * d2
    g_abs = math.sqrt(-p.gamma2)
    root_sq = complex(
        (d2 * (d2 + 1.0) - 2.0 * p.a * p.a) / frak_c,
        2.0 * p.a * p.b * g_abs / frak_c,
    )
    t_c = cmath.sqrt(root_sq)
    t_r = t_c.real
    t_i = abs(t_c.imag)
    m2 = abs(root_sq)
    if t_r <= 0.0 or t_i <= 0.0:
        raise InternalConsistencyError(
            f"complex root {t_c} must have positive real and imaginary parts"
        )
    tf2 = t_fermi * t_fermi
    lg = math.log((tf2 + 2.0 * t_r * t_fermi + m2) / (tf2 - 2.0 * t_r * t_fermi + m2))
    at = (2.0 * t_r / t_i) * (
        math.atan((t_fermi + t_r) / t_i) + math.atan((t_fermi - t_r) / t_i)
    )
    return lg, at, t_r, m2


def integrals_Ij(p: KinematicPoint, fs: FermiSurface) -> tuple[float, float]:
    """Master integrals (I0, I2) over the Fermi ball.

    On the real branch with a root inside (0, t_F) the returned value is
    the principal-value/finite-part evaluation of the antiderivative;
    this is exactly what the physical Z combinations require.
    """
    if fs.xF < 1.0:
        raise ValueError(f"Fermi energy xF = {fs.xF} must be >= 1")
    t_fermi = fs.yF / fs.xF
    if t_fermi == 0.0:
        return 0.0, 0.0
    if p.gamma2 >= 0.0:
        pieces = _real_branch_pieces(p, t_fermi)
        i0 = pieces.d_g / pieces.frak_c
        i2 = (pieces.s_bar * pieces.d_g + pieces.g_bar) / pieces.frak_c
        return i0, i2
    lg, at, t_r, m2 = _complex_branch_pieces(p, t_fermi)
    frak_c = p.d2 * p.d2
    denom = 8.0 * frak_c * t_r
    return (lg + at) / (denom * m2), (-lg + at) / denom


def _z_combination(p: KinematicPoint, fs: FermiSurface, m_coef: float, n_coef: float) -> float:
    """(M + N) I0 - N I2 through cancellation-safe groupings."""
    t_fermi = fs.yF / fs.xF
    if t_fermi == 0.0:
        return 0.0
    if p.gamma2 >= 0.0:
        pieces = _real_branch_pieces(p, t_fermi)
        n_at_sbar = m_coef + n_coef * (1.0 - pieces.s_bar)
        return (n_at_sbar * pieces.d_g - n_coef * pieces.g_bar) / pieces.frak_c
    lg, at, t_r, m2 = _complex_branch_pieces(p, t_fermi)
    frak_c = p.d2 * p.d2
    coef_lg = (m_coef + n_coef) / m2 + n_coef
    coef_at = (m_coef + n_coef * (1.0 - m2)) / m2
    return (coef_lg * lg + coef_at * at) / (8.0 * frak_c * t_r)


def im_B_zero(p: KinematicPoint, fs: FermiSurface, ms: MediumState) -> float:
    """Absorptive part of B at T = 0 (closed cubic bracket).

    The bracket difference P(x_u) - P(x_l) with P(x) = (x +- a)^3 - 3 b^2 x
    is evaluated through the exact identity
    P(u + delta) - P(u) = delta (3 v^2 + 3 delta v + delta^2 - 3 b^2),
    v = u +- a, which has no cancellation for narrow windows.
    """
    sub = zero_t_subregion(p, fs)
    if sub.label == "NONE":
        return 0.0
    region = classify_region(p)
    shift = p.a if region is RegionLabel.I else -p.a
    u = sub.x_lower
    delta = sub.x_upper - sub.x_lower
    v = u + shift
    bracket = delta * (3.0 * v * v + 3.0 * delta * v + delta * delta - 3.0 * p.b * p.b)
    return -ms.e2 / (48.0 * math.pi * p.b * p.c2) * bracket


def im_D_zero(p: KinematicPoint, fs: FermiSurface, ms: MediumState) -> float:
    """Absorptive part of D at T = 0 (proportional to the window length)."""
    sub = zero_t_subregion(p, fs)
    if sub.label == "NONE":
        return 0.0
    length = sub.x_upper - sub.x_lower
    return -ms.e2 * (1.0 + 2.0 * p.c2) / (32.0 * math.pi * p.b * p.c2) * length


def _guard_fermi_logs(p: KinematicPoint, fs: FermiSurface) -> None:
    # the U terms evaluate r1, r2 at the Fermi surface; a vanishing log
    # argument there means the window edge sits exactly on the surface
    x = fs.xF
    y = fs.yF
    scale = max(1.0, (p.a * x) ** 2, p.c2 * p.c2, (p.b * y) ** 2)
    args = (
        (p.c2 - p.b * y) ** 2 - (p.a * x) ** 2,
        (p.c2 + p.b * y) ** 2 - (p.a * x) ** 2,
        p.c2 * p.c2 - (p.a * x - p.b * y) ** 2,
        p.c2 * p.c2 - (p.a * x + p.b * y) ** 2,
    )
    for arg in args:
        if abs(arg) <= _EDGE_TOL * scale:
            raise SubregionBoundaryError(
                f"(a, b) = ({p.a}, {p.b}) has a window edge on the Fermi surface xF = {x}"
            )


def re_B_zero(p: KinematicPoint, fs: FermiSurface, ms: MediumState) -> float:
    """Dispersive part of B at T = 0 in closed form (U + W + Z pieces)."""
    classify_region(p)
    if fs.yF == 0.0:
        return 0.0
    _guard_fermi_logs(p, fs)
    x = fs.xF
    y = fs.yF
    coef = zero_t_coefficients(p)
    u_term = x / (12.0 * p.b) * (
        (x * x + 3.0 * p.c2) * r1(x, p) + 6.0 * p.a * x * r2(x, p)
    )
    w_term = (2.0 / 3.0) * (x * y - p.b * p.b * math.log(x + y))
    z_term = coef.C_B * _z_combination(p, fs, coef.M_B, coef.N_B)
    return -ms.e2 / (4.0 * math.pi**2 * p.c2) * (u_term + w_term + z_term)


def re_D_zero(p: KinematicPoint, fs: FermiSurface, ms: MediumState) -> float:
    """Dispersive part of D at T = 0 in closed form (U + W + Z pieces)."""
    classify_region(p)
    if fs.yF == 0.0:
        return 0.0
    _guard_fermi_logs(p, fs)
    x = fs.xF
    y = fs.yF
    coef = zero_t_coefficients(p)
    u_term = x * (1.0 + 2.0 * p.c2) / (8.0 * p.b) * r1(x, p)
    w_term = 0.5 * (x * y + 2.0 * p.c2 * math.log(x + y))
    z_term = coef.C_D * _z_combination(p, fs, coef.M_D, coef.N_D)
    return -ms.e2 / (4.0 * math.pi**2 * p.c2) * (u_term + w_term + z_term)


def scalars_zero_t(
    p: KinematicPoint, fs: FermiSurface, ms: MediumState, include_vacuum: bool = True
) -> ResponseScalars:
    """All four response scalars at p from the T = 0 closed forms."""
    b_val = complex(re_B_zero(p, fs, ms), im_B_zero(p, fs, ms))
    d_val = complex(re_D_zero(p, fs, ms), im_D_zero(p, fs, ms))
    a_val = d_val + (1.0 + 3.0 * p.c2 / (2.0 * p.b * p.b)) * b_val
    c_val = c_star(p.c2, ms).value if include_vacuum else 0.0j
    return ResponseScalars(B=b_val, D=d_val, A=a_val, C=c_val)
