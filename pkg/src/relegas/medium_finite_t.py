"""Medium contributions to the response at finite temperature.

The thermal parts of the two independent medium scalars (written B and D
throughout, with A the dependent combination and C the vacuum scalar)
are one-dimensional integrals over the fermion energy x = E/m weighted
by the occupation n_F(x).

Real parts integrate n_F against smooth kernels built from the two log
ratios r1 and r2; on the real branch (gamma2 > 0) those logs have
integrable singularities at the kinematic window edges, which are handed
to the quadrature engine as breakpoints.  Imaginary parts are integrals
of polynomial kernels over the part of the kinematic window below the
occupation cutoff; they vanish identically in region II, where no real
absorption process exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .kinematics import KinematicPoint, RegionLabel, classify_region, kinematic_window
from .numerics import integrate_adaptive
from .occupation import MediumState, n_fermi, x_cutoff
from .vacuum import c_star


@dataclass(frozen=True)
class ResponseScalars:
    """The four scalar amplitudes of the polarization tensor.

    B and D are the independent medium scalars, C is the vacuum scalar,
    and A = D + (1 + 3*c2/(2*b**2)) * B is carried for convenience.
    When built with include_vacuum=False, C is exactly 0.
    """

    B: complex
    D: complex
    A: complex
    C: complex


def r1(x: float, p: KinematicPoint) -> float:
    """First log kernel, log|((c2-b*y)^2 - a^2 x^2)/((c2+b*y)^2 - a^2 x^2)|.

    Vanishes at the mass shell x = 1 and decays like 1/x**2 at large x.
    It does not vanish at a = 0: its static limit carries the entire
    Thomas-Fermi screening response.
    """
    y = math.sqrt(x * x - 1.0)
    num = (p.c2 - p.b * y) ** 2 - (p.a * x) ** 2
    den = (p.c2 + p.b * y) ** 2 - (p.a * x) ** 2
    return _log_ratio(num, den)


def r2(x: float, p: KinematicPoint) -> float:
    """Second log kernel, (1/2) log|(c2^2 - (a x - b y)^2)/(c2^2 - (a x + b y)^2)|.

    Odd under a -> -a, hence identically zero at a = 0.
    """
    y = math.sqrt(x * x - 1.0)
    num = p.c2 * p.c2 - (p.a * x - p.b * y) ** 2
    den = p.c2 * p.c2 - (p.a * x + p.b * y) ** 2
    return 0.5 * _log_ratio(num, den)


def _log_ratio(num: float, den: float) -> float:
    # the ratio crosses zero/inf at the window edges; quadrature never
    # lands exactly there, but guard the log anyway
    anum = abs(num)
    aden = abs(den)
    if anum < 1e-300:
        anum = 1e-300
    if aden < 1e-300:
        aden = 1e-300
    return math.log(anum) - math.log(aden)


def _breakpoints(p: KinematicPoint, ms: MediumState, hi: float) -> list[float]:
    """Interior awkward abscissae: window edges (real branch) + Fermi edge."""
    pts: list[float] = []
    if p.gamma2 > 0.0:
        g = math.sqrt(p.gamma2)
        for xs in (abs(p.a - p.b * g), p.a + p.b * g):
            if 1.0 < xs < hi:
                pts.append(xs)
    if 1.0 < ms.xi < hi:
        pts.append(ms.xi)
    return sorted(set(pts))


def im_scalars(p: KinematicPoint, ms: MediumState) -> tuple[float, float]:
    """Absorptive parts (Im B, Im D) of the medium scalars.

    Region II returns (0.0, 0.0) exactly.  Elsewhere the kernels are

        Im B: (x + a)**2 - b**2   in region I,
              (x - a)**2 - b**2   in region III,
        Im D: 1,

    integrated with weight n_F over the kinematic window, with overall
    factors -e2/(16 pi b c2) and -e2 (1 + 2 c2)/(32 pi b c2).
    """
    region = classify_region(p)
    if region is RegionLabel.II:
        return 0.0, 0.0
    lower, upper = kinematic_window(p)
    pts = _breakpoints(p, ms, upper)
    if region is RegionLabel.I:
        def kernel(x: float) -> float:
            return n_fermi(x, ms) * ((x + p.a) ** 2 - p.b * p.b)
    else:
        def kernel(x: float) -> float:
            return n_fermi(x, ms) * ((x - p.a) ** 2 - p.b * p.b)
    res_k = integrate_adaptive(kernel, lower, upper, breakpoints=pts)
    res_1 = integrate_adaptive(lambda x: n_fermi(x, ms), lower, upper, breakpoints=pts)
    im_b = -ms.e2 / (16.0 * math.pi * p.b * p.c2) * res_k.value
    im_d = -ms.e2 * (1.0 + 2.0 * p.c2) / (32.0 * math.pi * p.b * p.c2) * res_1.value
    return im_b, im_d


def re_scalars(
    p: KinematicPoint, ms: MediumState, rel_tol: float = 1e-10
) -> tuple[float, float]:
    """Dispersive parts (Re B, Re D) of the medium scalars.

    Re B = -e2/(4 pi^2 c2) * (R + R_B) and Re D = -e2/(4 pi^2 c2) *
    (R + R_D), where R integrates n_F * y (the density-like moment),
    R_B integrates n_F * ((x^2 + c2) r1 + 4 a x r2)/(4 b) and R_D
    integrates n_F * r1 * (1 + 2 c2)/(8 b), all over x in [1, cutoff].
    """
    classify_region(p)  # reject light-cone / threshold input early
    hi = x_cutoff(ms)
    if hi <= 1.0:
        return 0.0, 0.0
    pts = _breakpoints(p, ms, hi)

    def f_r(x: float) -> float:
        return n_fermi(x, ms) * math.sqrt(x * x - 1.0)

    def f_rb(x: float) -> float:
        return n_fermi(x, ms) * (
            (x * x + p.c2) * r1(x, p) + 4.0 * p.a * x * r2(x, p)
        )

    def f_rd(x: float) -> float:
        return n_fermi(x, ms) * r1(x, p)

    big_r = integrate_adaptive(f_r, 1.0, hi, breakpoints=pts, rel_tol=rel_tol).value
    r_b = integrate_adaptive(f_rb, 1.0, hi, breakpoints=pts, rel_tol=rel_tol).value / (4.0 * p.b)
    r_d = integrate_adaptive(f_rd, 1.0, hi, breakpoints=pts, rel_tol=rel_tol).value * (
        (1.0 + 2.0 * p.c2) / (8.0 * p.b)
    )
    pref = -ms.e2 / (4.0 * math.pi**2 * p.c2)
    return pref * (big_r + r_b), pref * (big_r + r_d)


def scalars(
    p: KinematicPoint, ms: MediumState, include_vacuum: bool = True
) -> ResponseScalars:
    """All four response scalars at p via the finite-T quadratures."""
    re_b, re_d = re_scalars(p, ms)
    im_b, im_d = im_scalars(p, ms)
    b_val = complex(re_b, im_b)
    d_val = complex(re_d, im_d)
    a_val = d_val + (1.0 + 3.0 * p.c2 / (2.0 * p.b * p.b)) * b_val
    c_val = c_star(p.c2, ms).value if include_vacuum else 0.0j
    return ResponseScalars(B=b_val, D=d_val, A=a_val, C=c_val)
