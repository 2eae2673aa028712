"""Dimensionless kinematics of an electromagnetic probe in an electron gas.

Frequency and momentum transfer enter through the dimensionless pair

    a = omega / (2 m),    b = |q| / (2 m),

with m the electron mass.  Everything else is derived from these two:
``c2 = a**2 - b**2`` fixes whether the four-momentum is spacelike or
timelike, ``gamma2 = 1 - 1/c2`` is the squared boost parameter of the
decay kinematics, and ``d2 = a**2 - b**2*gamma2`` collects the
combination that controls the momentum-space integrals.

The (a, b) quarter-plane splits into three regions:

* region I   (``c2 < 0``):  spacelike, electron-hole absorption,
* region II  (``0 < c2 < 1``): timelike below pair threshold, transparent,
* region III (``c2 > 1``):  timelike above the electron-positron
  pair-creation threshold.

At zero temperature the absorptive regions I and III further split into
the subregions A-D depending on how the kinematic window of participating
fermion energies sits relative to the Fermi surface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

LIGHT_CONE_CUT = 1e-9
PAIR_THRESHOLD_CUT = 1e-12
BOUNDARY_TOL = 1e-12


class InvalidPointError(ValueError):
    """Base class for kinematically unusable (a, b) input."""


class LightConeError(InvalidPointError):
    """Raised when (a, b) sits on (or hugs) the light cone a = b."""


class PairThresholdError(InvalidPointError):
    """Raised when c2 is too close to the pair-creation threshold c2 = 1."""


class InternalConsistencyError(RuntimeError):
    """An internal cross-check that should hold by algebra has failed."""


@dataclass(frozen=True)
class KinematicPoint:
    """A probe four-momentum in dimensionless variables.

    Attributes
    ----------
    a : float
        omega / 2m, must be >= 0.
    b : float
        |q| / 2m, must be > 0.
    c2 : float
        a**2 - b**2.
    gamma2 : float
        1 - 1/c2; positive in regions I and III (real branch),
        negative in region II (complex branch).
    d2 : float
        a**2 - b**2*gamma2 = c2 + b**2/c2.
    """

    a: float
    b: float
    c2: float
    gamma2: float
    d2: float

    @property
    def gamma(self) -> float:
        """sqrt(gamma2); only meaningful on the real branch."""
        if self.gamma2 < 0.0:
            raise ValueError("gamma is imaginary for 0 < c2 < 1")
        return math.sqrt(self.gamma2)


class RegionLabel(Enum):
    I = "I"
    II = "II"
    III = "III"


@dataclass(frozen=True)
class FermiSurface:
    """Zero-temperature Fermi surface in electron-mass units.

    xF is the Fermi energy over m (>= 1), yF = sqrt(xF**2 - 1) the Fermi
    momentum over m.
    """

    xF: float
    yF: float


def fermi_surface(xF: float) -> FermiSurface:
    """Build a FermiSurface from the dimensionless Fermi energy xF >= 1."""
    if xF < 1.0:
        raise ValueError(f"Fermi energy xF = {xF} must be >= 1")
    return FermiSurface(xF=xF, yF=math.sqrt(xF * xF - 1.0))


@dataclass(frozen=True)
class SubregionLabel:
    """Zero-temperature absorption classification of a kinematic point.

    label is one of "A", "B", "C", "D" or "NONE".  For an absorbing
    point, (x_lower, x_upper) is the active range of fermion energies
    x = E/m that contribute; for "NONE" both are nan.
    """

    label: str
    x_lower: float
    x_upper: float


def derive_point(a: float, b: float) -> KinematicPoint:
    """Validate (a, b) and derive the dependent kinematic quantities.

    Parameters
    ----------
    a, b : float
        Dimensionless frequency and momentum transfer.  Requires a >= 0,
        b > 0, and |a**2 - b**2| >= 1e-9 (points on the light cone are
        rejected because gamma2 and d2 blow up there).
    """
    if not (b > 0.0) or not math.isfinite(b):
        raise InvalidPointError(f"momentum transfer b = {b} must be positive")
    if a < 0.0 or not math.isfinite(a):
        raise InvalidPointError(f"frequency a = {a} must be >= 0")
    c2 = a * a - b * b
    if abs(c2) < LIGHT_CONE_CUT:
        raise LightConeError(
            f"(a, b) = ({a}, {b}) is on the light cone: |c2| = {abs(c2):.3e}"
        )
    gamma2 = 1.0 - 1.0 / c2
    d2 = c2 + b * b / c2
    return KinematicPoint(a=a, b=b, c2=c2, gamma2=gamma2, d2=d2)


def classify_region(p: KinematicPoint) -> RegionLabel:
    """Classify a point into region I, II or III of the (a, b) plane."""
    if abs(p.c2) < LIGHT_CONE_CUT:
        raise LightConeError(f"|c2| = {abs(p.c2):.3e} is on the light cone")
    if abs(p.c2 - 1.0) <= PAIR_THRESHOLD_CUT:
        raise PairThresholdError(
            f"c2 = {p.c2!r} sits on the pair-creation threshold c2 = 1"
        )
    if p.c2 < 0.0:
        return RegionLabel.I
    if p.c2 < 1.0:
        return RegionLabel.II
    return RegionLabel.III


def kinematic_window(p: KinematicPoint) -> tuple[float, float]:
    """Energy window (x_lower, x_upper) of fermions that can absorb at p.

    Only defined on the real branch (gamma2 > 0, i.e. regions I and III);
    there the window is (|a - b*gamma|, a + b*gamma) and its lower edge
    always lies above the mass shell x = 1.
    """
    if p.gamma2 <= 0.0:
        raise ValueError("kinematic window requires gamma2 > 0")
    g = math.sqrt(p.gamma2)
    lower = abs(p.a - p.b * g)
    upper = p.a + p.b * g
    if lower < 1.0 - 1e-9:
        raise InternalConsistencyError(
            f"window lower edge {lower} fell below the mass shell"
        )
    return lower, upper


def zero_t_subregion(p: KinematicPoint, fs: FermiSurface) -> SubregionLabel:
    """Locate p among the T = 0 absorption subregions A-D.

    A: the whole window lies inside the Fermi sea (region I);
    B: the window straddles the Fermi surface (region I);
    C, D: same split for the pair-creation window (region III);
    NONE: no absorption (window empty of occupied states, or region II).

    Boundary membership uses a tolerance of 1e-12 on window edges.
    """
    region = classify_region(p)
    if region is RegionLabel.II:
        return SubregionLabel(label="NONE", x_lower=math.nan, x_upper=math.nan)
    lower, upper = kinematic_window(p)
    if lower >= fs.xF - BOUNDARY_TOL:
        return SubregionLabel(label="NONE", x_lower=math.nan, x_upper=math.nan)
    if upper <= fs.xF + BOUNDARY_TOL:
        label = "A" if region is RegionLabel.I else "C"
        return SubregionLabel(label=label, x_lower=lower, x_upper=upper)
    label = "B" if region is RegionLabel.I else "D"
    return SubregionLabel(label=label, x_lower=lower, x_upper=fs.xF)


def region_boundaries(fs: FermiSurface, a: float) -> dict[str, float]:
    """Boundary curves b(a) of the T = 0 subregion map.

    For a fixed Fermi surface, returns the b values at which the window
    edges cross the Fermi surface:

    * ``b_plus``, ``b_minus``    solve  b*gamma - a = xF  (onset/offset of
      electron-hole absorption in region I),
    * ``bbar_plus``, ``bbar_minus`` solve  b*gamma + a = xF  (A/B and C/D
      splits for a < xF),
    * ``bprime_plus``, ``bprime_minus`` solve  a - b*gamma = xF  (pair
      window onset for a > xF).

    Entries are omitted when the square-root argument is negative (the
    curve does not exist at this a).  The bbar/bprime expressions share
    one square root and differ only in sign placement.
    """
    if a < 0.0:
        raise ValueError(f"frequency a = {a} must be >= 0")
    half = 0.5 * fs.yF
    out: dict[str, float] = {}
    arg_outer = half * half + a * (fs.xF + a)
    if arg_outer >= 0.0:
        root = math.sqrt(arg_outer)
        out["b_plus"] = half + root
        out["b_minus"] = -half + root
    arg_inner = half * half - a * (fs.xF - a)
    if arg_inner >= 0.0:
        root = math.sqrt(arg_inner)
        out["bbar_plus"] = half + root
        out["bbar_minus"] = half - root
        out["bprime_plus"] = half + root
        out["bprime_minus"] = -half + root
    return out
