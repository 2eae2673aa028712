import math
import random

from relegas import LightConeError, PairThresholdError, derive_point


def rel_err(got: float, want: float) -> float:
    return abs(got - want) / max(1e-300, abs(want))


def draw_valid_point(rng: random.Random, a_max: float = 3.0, b_max: float = 3.0,
                     c2_margin: float = 1e-3):
    """Rejection-sample an (a, b) point away from the light cone and the
    pair threshold."""
    while True:
        a = rng.uniform(0.01, a_max)
        b = rng.uniform(0.01, b_max)
        c2 = a * a - b * b
        if abs(c2) < c2_margin or abs(c2 - 1.0) < c2_margin:
            continue
        try:
            return derive_point(a, b)
        except (LightConeError, PairThresholdError):
            continue


def complex_rel_err(got: complex, want: complex) -> float:
    return abs(got - want) / max(1e-300, abs(want))


def assert_finite(x: float) -> None:
    assert math.isfinite(x)
