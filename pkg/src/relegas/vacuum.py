"""One-loop vacuum polarization scalar of the electron-positron field.

The renormalized vacuum contribution depends on the probe only through
c2 = a**2 - b**2 and changes analytic character twice: it is real for
spacelike momenta (c2 < 0) and below the pair threshold (0 < c2 < 1),
and acquires a positive absorptive part for c2 > 1 where real pair
creation opens up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .kinematics import LIGHT_CONE_CUT, PAIR_THRESHOLD_CUT, LightConeError, PairThresholdError
from .occupation import MediumState

# below this |c2| the closed form loses digits to cancellation and a
# series in s = c2/(1 - c2) takes over
_SERIES_SWITCH = 0.05


@dataclass(frozen=True)
class VacuumScalar:
    """Value of the vacuum scalar together with its analytic branch.

    branch is "spacelike" (c2 < 0), "subthreshold" (0 < c2 < 1) or
    "above_threshold" (c2 > 1, complex value).
    """

    value: complex
    branch: str


def _bracket_series(c2: float) -> float:
    # bracket = 1/3 + 2*(1 + 1/(2 c2))*(h*arccot(h) - 1) expanded about
    # c2 = 0 via s = c2/(1-c2); leading behaviour is -4 s / 5
    s = c2 / (1.0 - c2)
    sum1 = 0.0
    sum2 = 0.0
    term = 1.0
    n = 0
    while True:
        n += 1
        term *= -s
        add1 = term / (2 * n + 1)
        add2 = -term / (2 * n + 3)
        sum1 += add1
        sum2 += add2
        if abs(add1) + abs(add2) < 1e-18 * (abs(sum1) + abs(sum2) + 1e-30):
            break
        if n > 200:
            break
    return -s / 3.0 + 2.0 * sum1 + sum2 / (1.0 - c2)


def c_star(c2: float, ms: MediumState) -> VacuumScalar:
    """Vacuum polarization scalar at squared invariant c2.

    Requires |c2| >= 1e-9 (off the light cone) and |c2 - 1| > 1e-12
    (off the pair threshold).  The prefactor is -e2/(12 pi**2); above
    threshold the imaginary part is positive, as passivity demands.
    """
    if not math.isfinite(c2):
        raise ValueError(f"c2 = {c2} must be finite")
    if abs(c2) < LIGHT_CONE_CUT:
        raise LightConeError(f"|c2| = {abs(c2):.3e} is on the light cone")
    if abs(c2 - 1.0) <= PAIR_THRESHOLD_CUT:
        raise PairThresholdError(f"c2 = {c2!r} sits on the pair threshold")
    pref = -ms.e2 / (12.0 * math.pi**2)
    u = 1.0 + 1.0 / (2.0 * c2)

    if abs(c2) <= _SERIES_SWITCH:
        branch = "spacelike" if c2 < 0.0 else "subthreshold"
        return VacuumScalar(value=complex(pref * _bracket_series(c2), 0.0), branch=branch)
    if c2 < 0.0:
        k = math.sqrt(1.0 - 1.0 / c2)
        hcot = 0.5 * k * math.log((k + 1.0) / (k - 1.0))
        bracket = 1.0 / 3.0 + 2.0 * u * (hcot - 1.0)
        return VacuumScalar(value=complex(pref * bracket, 0.0), branch="spacelike")
    if c2 < 1.0:
        h = math.sqrt(1.0 / c2 - 1.0)
        hcot = h * math.atan(1.0 / h)
        bracket = 1.0 / 3.0 + 2.0 * u * (hcot - 1.0)
        return VacuumScalar(value=complex(pref * bracket, 0.0), branch="subthreshold")
    kappa = math.sqrt(1.0 - 1.0 / c2)
    re_bracket = 1.0 / 3.0 + 2.0 * u * (kappa * math.atanh(kappa) - 1.0)
    im_bracket = -math.pi * kappa * u
    return VacuumScalar(value=pref * complex(re_bracket, im_bracket), branch="above_threshold")
