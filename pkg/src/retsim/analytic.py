"""Closed-form Landau-Zener reference values.

These expressions serve as oracles for the numerical propagation: the
coherent single-transit probability, its fully-dephased limits, and the
sequential-transit yield for a packet that bounces between the wells an odd
number of times with no return after reaching a minimum.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple


def diabatic_prob(delta: float) -> float:
    """Coherent probability of staying on the diabatic surface: exp(-2 pi delta)."""
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    return math.exp(-2.0 * math.pi * delta)


class DephasedLimits(NamedTuple):
    tunnel_limit: float
    passage_threshold: float


def dephased_limit_prob(delta: float) -> DephasedLimits:
    """Infinitely-strong-dephasing limits of the single transit.

    ``tunnel_limit`` is the surviving transfer probability to the other
    surface, (1 - exp(-4 pi delta)) / 2; ``passage_threshold`` is the
    complementary diabatic-passage population, (1 + exp(-4 pi delta)) / 2.
    """
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    e4 = math.exp(-4.0 * math.pi * delta)
    return DephasedLimits(tunnel_limit=0.5 * (1.0 - e4), passage_threshold=0.5 * (1.0 + e4))


def sequential_yield(n: int, delta: float) -> float:
    """Trans-well yield after an odd number ``n`` of crossing transits.

    The packet reaches the trans side on transit 1, 3, 5, ... and each round
    trip multiplies the surviving amplitude by the hop probability squared:

        P_n = q * sum_{i=0}^{(n-1)/2} (1 - q)^{2i},   q = exp(-2 pi delta).
    """
    if not isinstance(n, (int,)) or isinstance(n, bool):
        raise ValueError("n must be an integer")
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be an odd count >= 1, got {n}")
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    q = diabatic_prob(delta)
    p = 1.0 - q
    return q * sum(p ** (2 * i) for i in range((n - 1) // 2 + 1))


def single_transit_prob(
    gamma: float,
    delta: float,
    model: Callable[[float, float], float] | None = None,
) -> float:
    """Single-transit diabatic passage at measurement rate ``gamma``.

    Only the two exact limits are built in: the coherent value at gamma = 0
    and the dephased passage threshold as gamma -> infinity.  In between, the
    default is a crude logistic placeholder in log(gamma) with a 1 fs^-1
    half-saturation scale -- NOT a published result, just a smooth curve
    connecting the limits for plotting.  Supply ``model(gamma, delta)`` to use
    a proper open-system Landau-Zener interpolation instead.
    """
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    if model is not None:
        return model(gamma, delta)
    lo = diabatic_prob(delta)
    hi = dephased_limit_prob(delta).passage_threshold
    if gamma == 0.0:
        return lo
    # placeholder interpolation; saturates at the dephased threshold
    s = gamma / (gamma + 1.0)
    return lo + (hi - lo) * s
