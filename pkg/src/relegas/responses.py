"""Response tensors, plasmon dispersion, and metamaterial classification.

The four scalars (B, D, A, C) combine into the dielectric tensors of the
gas.  For wave propagation only two combinations matter: the
longitudinal permittivity eps_L (zeros are longitudinal plasmons) and
the transverse combination nu_L (nu_L = -1 marks transverse plasmons).
A metamaterial band is a frequency window where the real parts of both
are simultaneously negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .kinematics import (
    InternalConsistencyError,
    InvalidPointError,
    KinematicPoint,
    RegionLabel,
    SubregionLabel,
    classify_region,
    derive_point,
    zero_t_subregion,
)
from .medium_finite_t import ResponseScalars, scalars
from .medium_zero_t import SubregionBoundaryError, scalars_zero_t
from .numerics import find_root_bracketed, scan_sign_changes
from .occupation import MediumState

_DUAL_PATH_TOL = 1e-12


@dataclass(frozen=True)
class ResponseTensors:
    """Permittivity combinations of the magnetized-free gas.

    eps_prime = -nu_prime and tau = sigma hold identically; both members
    of each pair are assembled through different arithmetic and serve as
    an internal consistency check.
    """

    eps: complex
    nu: complex
    eps_prime: complex
    nu_prime: complex
    tau: complex
    sigma: complex
    eps_L: complex
    nu_L: complex


def scalars_at(
    a: float, b: float, ms: MediumState, include_vacuum: bool = True
) -> tuple[KinematicPoint, ResponseScalars]:
    """Response scalars at (a, b): closed forms at t = 0, quadrature else."""
    p = derive_point(a, b)
    if ms.is_degenerate:
        s = scalars_zero_t(p, ms.fermi_surface, ms, include_vacuum=include_vacuum)
    else:
        s = scalars(p, ms, include_vacuum=include_vacuum)
    return p, s


def assemble(s: ResponseScalars, p: KinematicPoint) -> ResponseTensors:
    """Combine the scalars into the permittivity tensors at p.

    The longitudinal/transverse combinations are cross-checked against
    their two independent compositions; disagreement beyond 1e-12
    (relative) raises InternalConsistencyError.
    """
    a2 = p.a * p.a
    b2 = p.b * p.b
    c2 = p.c2
    eps = 1.0 + (2.0 - a2 / c2) * s.C + s.A + (1.0 - a2 / b2) * s.B
    nu = 1.0 + (2.0 + b2 / c2) * s.C + s.A - 2.0 * (a2 / b2) * s.B
    eps_prime = (b2 / c2) * s.C - s.A
    nu_prime = (s.A * c2 - b2 * s.C) / c2
    tau = (p.a / p.b) * ((b2 / c2) * s.C - s.B)
    sigma = (p.a * p.b / c2) * s.C - (p.a / p.b) * s.B

    eps_l = 1.0 + s.C - (c2 / b2) * s.B
    nu_l = 1.0 + 2.0 * s.C + 2.0 * s.D + (c2 / b2) * s.B
    eps_l_sum = eps + eps_prime
    nu_l_sum = nu + nu_prime
    for direct, summed, name in (
        (eps_l, eps_l_sum, "eps_L"),
        (nu_l, nu_l_sum, "nu_L"),
    ):
        if abs(direct - summed) > _DUAL_PATH_TOL * max(1.0, abs(direct)):
            raise InternalConsistencyError(
                f"{name} composition mismatch: {direct!r} vs {summed!r}"
            )
    return ResponseTensors(
        eps=eps,
        nu=nu,
        eps_prime=eps_prime,
        nu_prime=nu_prime,
        tau=tau,
        sigma=sigma,
        eps_L=eps_l,
        nu_L=nu_l,
    )


def tensors_at(
    a: float, b: float, ms: MediumState, include_vacuum: bool = True
) -> tuple[KinematicPoint, RegionLabel, SubregionLabel | None, ResponseTensors]:
    """Full evaluation at (a, b): point, region, T=0 subregion, tensors."""
    p, s = scalars_at(a, b, ms, include_vacuum=include_vacuum)
    region = classify_region(p)
    sub = zero_t_subregion(p, ms.fermi_surface) if ms.is_degenerate else None
    return p, region, sub, assemble(s, p)


def plasma_frequency_estimate(ms: MediumState) -> float:
    """Leading-order plasma frequency a_e of a cold gas.

    At t = 0 the small-b limit of eps_L = 0 gives
    a_e**2 = e2 * yF**3 / (12 pi**2 xF); the transverse condition
    nu_L = -1 approaches the same frequency as b -> 0.  Used to seed
    dispersion search ranges.
    """
    fs = ms.fermi_surface
    return math.sqrt(ms.e2 * fs.yF**3 / (12.0 * math.pi**2 * fs.xF))


@dataclass(frozen=True)
class RootSample:
    """One dispersion root: mode condition satisfied at (b, root_a)."""

    b: float
    root_a: float
    residual: float
    im_at_root: float


@dataclass(frozen=True)
class DispersionBranch:
    """Plasmon branch over a b grid with its b -> 0 extrapolation.

    samples holds the smallest positive root found for each b (b values
    with no root are simply absent); plasma_frequency is the quadratic-
    in-b**2 extrapolation of root_a through the three smallest sampled b
    (nan when fewer than three roots exist).
    """

    mode: str
    samples: tuple[RootSample, ...]
    plasma_frequency: float


def _mode_gap(mode: str, a: float, b: float, ms: MediumState, include_vacuum: bool) -> float:
    # longitudinal zero: Re eps_L = 0; transverse zero: Re nu_L = -1
    try:
        _, _, _, tens = tensors_at(a, b, ms, include_vacuum=include_vacuum)
    except (InvalidPointError, SubregionBoundaryError):
        return math.nan
    if mode == "longitudinal":
        return tens.eps_L.real
    return tens.nu_L.real + 1.0


def dispersion(
    mode: str,
    b_grid: Sequence[float],
    ms: MediumState,
    a_search_range: tuple[float, float],
    n_scan: int = 160,
    include_vacuum: bool = True,
) -> DispersionBranch:
    """Trace a plasmon branch over b_grid.

    For each b the mode condition is scanned on n_scan points across
    a_search_range, every sign change is refined by Brent's method, and
    the smallest positive root is kept.  Kinematically invalid scan
    points (light cone, pair threshold, subregion boundaries) are
    skipped as NaN.
    """
    if mode not in ("longitudinal", "transverse"):
        raise ValueError(f"unknown dispersion mode {mode!r}")
    a_lo, a_hi = a_search_range
    if not (0.0 <= a_lo < a_hi):
        raise ValueError(f"bad search range ({a_lo}, {a_hi})")
    samples: list[RootSample] = []
    for b in b_grid:
        def gap(a: float, _b: float = b) -> float:
            return _mode_gap(mode, a, _b, ms, include_vacuum)

        step = (a_hi - a_lo) / n_scan
        grid = [a_lo + i * step for i in range(n_scan + 1)]
        brackets = scan_sign_changes(gap, grid)
        roots = []
        for br in brackets:
            root = find_root_bracketed(gap, br)
            if root <= 0.0:
                continue
            # a sign change across the light cone is a pole, not a zero:
            # there the refined point has a larger residual than the
            # bracket edges (or none at all)
            g_root = gap(root)
            g_edges = min(abs(gap(br.lo)), abs(gap(br.hi)))
            if math.isnan(g_root) or abs(g_root) >= g_edges:
                continue
            roots.append(root)
        if not roots:
            continue
        root = min(roots)
        try:
            _, _, _, tens = tensors_at(root, b, ms, include_vacuum=include_vacuum)
        except (InvalidPointError, SubregionBoundaryError):
            continue
        im_val = tens.eps_L.imag if mode == "longitudinal" else tens.nu_L.imag
        residual = tens.eps_L.real if mode == "longitudinal" else tens.nu_L.real + 1.0
        samples.append(RootSample(b=b, root_a=root, residual=residual, im_at_root=im_val))
    plasma = _extrapolate_to_zero_b(samples)
    return DispersionBranch(mode=mode, samples=tuple(samples), plasma_frequency=plasma)


def _extrapolate_to_zero_b(samples: Sequence[RootSample]) -> float:
    """Quadratic fit of root_a in b**2 through the three smallest b."""
    if len(samples) < 3:
        return math.nan
    pts = sorted(samples, key=lambda s: s.b)[:3]
    s1, s2, s3 = ((s.b * s.b, s.root_a) for s in pts)
    # exact interpolation: a(b2) = p0 + p1 b2 + p2 b2^2, want p0
    x1, y1 = s1
    x2, y2 = s2
    x3, y3 = s3
    denom = (x1 - x2) * (x1 - x3) * (x2 - x3)
    if denom == 0.0:
        return math.nan
    p0 = (
        y1 * x2 * x3 * (x2 - x3)
        - y2 * x1 * x3 * (x1 - x3)
        + y3 * x1 * x2 * (x1 - x2)
    ) / denom
    return p0


@dataclass(frozen=True)
class GridCell:
    """One (a, b) cell of a metamaterial scan.

    Skipped cells (invalid kinematics) carry NaN fields and a reason;
    metamaterial marks Re eps_L < 0 and Re nu_L < 0 simultaneously.
    """

    a: float
    b: float
    region: str
    subregion: str
    re_eps_L: float
    im_eps_L: float
    re_nu_L: float
    im_nu_L: float
    metamaterial: bool
    reason: str


def evaluate_cell(
    a: float, b: float, ms: MediumState, include_vacuum: bool = True
) -> GridCell:
    """Evaluate one scan cell, trapping invalid kinematics into a reason."""
    try:
        _, region, sub, tens = tensors_at(a, b, ms, include_vacuum=include_vacuum)
    except (InvalidPointError, SubregionBoundaryError) as exc:
        return GridCell(
            a=a,
            b=b,
            region="",
            subregion="",
            re_eps_L=math.nan,
            im_eps_L=math.nan,
            re_nu_L=math.nan,
            im_nu_L=math.nan,
            metamaterial=False,
            reason=str(exc),
        )
    meta = tens.eps_L.real < 0.0 and tens.nu_L.real < 0.0
    return GridCell(
        a=a,
        b=b,
        region=region.value,
        subregion=sub.label if sub is not None else "",
        re_eps_L=tens.eps_L.real,
        im_eps_L=tens.eps_L.imag,
        re_nu_L=tens.nu_L.real,
        im_nu_L=tens.nu_L.imag,
        metamaterial=meta,
        reason="",
    )


def metamaterial_scan(
    a_grid: Sequence[float],
    b_grid: Sequence[float],
    ms: MediumState,
    include_vacuum: bool = True,
) -> list[GridCell]:
    """Classify every (a, b) cell of a grid, row-major in b then a."""
    return [
        evaluate_cell(a, b, ms, include_vacuum=include_vacuum)
        for b in b_grid
        for a in a_grid
    ]
