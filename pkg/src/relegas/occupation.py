"""Thermal state of the gas and Fermi-Dirac occupation numbers.

Temperature and chemical potential are measured in electron masses:
t = k_B T / m and xi = mu / m.  The occupation that enters every medium
integral is the sum of the electron and positron distributions,

    n_F(x) = 1/(exp((x - xi)/t) + 1) + 1/(exp((x + xi)/t) + 1),

evaluated at the dimensionless fermion energy x = E/m >= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .kinematics import FermiSurface, fermi_surface

FINE_STRUCTURE_DEFAULT = 1.0 / 137.036

# exp argument beyond which the Fermi factor under/overflows a double
_EXP_CLIP = 700.0


@dataclass(frozen=True)
class MediumState:
    """Temperature, chemical potential and coupling of the gas.

    Attributes
    ----------
    t : float
        Dimensionless temperature k_B T / m, >= 0.
    xi : float
        Dimensionless chemical potential mu / m.  At t = 0 it must be
        >= 1; xi = 1 describes an empty Fermi sea (pure vacuum).
    alpha : float
        Fine-structure constant; the squared coupling is e2 = 4*pi*alpha.
    """

    t: float
    xi: float
    alpha: float = FINE_STRUCTURE_DEFAULT

    def __post_init__(self) -> None:
        if self.t < 0.0 or not math.isfinite(self.t):
            raise ValueError(f"temperature t = {self.t} must be >= 0")
        if not math.isfinite(self.xi):
            raise ValueError("chemical potential must be finite")
        if self.t == 0.0 and self.xi < 1.0:
            raise ValueError(
                f"a zero-temperature state needs xi >= 1, got xi = {self.xi}"
            )
        if self.alpha <= 0.0:
            raise ValueError(f"coupling alpha = {self.alpha} must be positive")

    @property
    def e2(self) -> float:
        return 4.0 * math.pi * self.alpha

    @property
    def is_degenerate(self) -> bool:
        return self.t == 0.0

    @property
    def fermi_surface(self) -> FermiSurface:
        """Fermi surface of the t = 0 state (xF = xi)."""
        if self.t != 0.0:
            raise ValueError("fermi_surface is defined only at t = 0")
        return fermi_surface(self.xi)


def _fermi_factor(arg: float) -> float:
    # 1/(exp(arg) + 1) with clipping so exp never overflows
    if arg > _EXP_CLIP:
        return 0.0
    if arg < -_EXP_CLIP:
        return 1.0
    return 1.0 / (math.exp(arg) + 1.0)


def n_fermi(x: float, ms: MediumState) -> float:
    """Combined electron + positron occupation at energy x = E/m.

    At t = 0 this is the unit step of the Fermi sea, with the half-way
    value 0.5 exactly at x = xi.  Always within [0, 2].
    """
    if ms.t == 0.0:
        if x < ms.xi:
            return 1.0
        if x == ms.xi:
            return 0.5
        return 0.0
    return _fermi_factor((x - ms.xi) / ms.t) + _fermi_factor((x + ms.xi) / ms.t)


def x_cutoff(ms: MediumState) -> float:
    """Upper energy cut beyond which n_F is numerically zero.

    At t = 0 the occupation vanishes identically above xi.  At t > 0 the
    tails die like exp(-(x -|xi|)/t); forty thermal widths past the
    larger of the mass shell and |xi| pushes them below 1e-16.
    """
    if ms.t == 0.0:
        return ms.xi
    return max(1.0, abs(ms.xi)) + 40.0 * ms.t
