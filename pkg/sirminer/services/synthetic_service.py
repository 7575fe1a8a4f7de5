"""Synthetic pairs with planted strong windows.

Planted windows carry a constant product of polarity * (tau + margin); every
other timestamp has |x*y| <= background_amplitude < tau, except the single
guard timestamp flanking each window. Guards are weak enough that no strong
interval can reach past a window, so the planted set is exactly the optimal
SIR once windows are at least l_min long and separated by a weak timestamp.
"""

import numpy as np
from pydantic import ValidationError
from typing import List, Tuple
import logging

from sirminer.exceptions import SpecError
from sirminer.schemas.core_schemas import Interval
from sirminer.schemas.io_schemas import PlantedWindow, SynthSpec
from sirminer.services.series import TimeSeriesPair

logger = logging.getLogger(__name__)

def _check_spec(spec: SynthSpec, tau: float):
    if spec.planted_margin <= 0:
        raise SpecError(f"planted margin must be positive, got {spec.planted_margin}")
    if not spec.background_amplitude < tau:
        raise SpecError(f"background amplitude {spec.background_amplitude} must stay below tau={tau}")

    windows = sorted((window.interval for window in spec.planted), key=lambda iv: (iv.s, iv.e))
    for iv in windows:
        if iv.e > spec.n - 1:
            raise SpecError(f"planted window {iv} exceeds n={spec.n}")
    for first, second in zip(windows, windows[1:]):
        if first.overlaps(second):
            raise SpecError(f"planted windows {first} and {second} overlap")

def generate_synthetic(spec: SynthSpec, tau: float) -> Tuple[TimeSeriesPair, List[Interval]]:
    """Deterministic in spec.seed; returns the pair and the planted windows in order"""
    _check_spec(spec, tau)
    rng = np.random.default_rng(spec.seed)
    n = spec.n

    products = rng.uniform(-spec.background_amplitude, spec.background_amplitude, size=n)

    strong = tau + spec.planted_margin
    excess = sum(window.interval.length * spec.planted_margin for window in spec.planted)
    guard = tau - excess - 1.0

    for window in spec.planted:
        iv = window.interval
        products[iv.s:iv.e + 1] = window.polarity * strong
    planted_mask = np.zeros(n, dtype=bool)
    for window in spec.planted:
        planted_mask[window.interval.s:window.interval.e + 1] = True
    for window in spec.planted:
        iv = window.interval
        for t in (iv.s - 1, iv.e + 1):
            if 0 <= t < n and not planted_mask[t]:
                products[t] = window.polarity * guard

    # split each product into x and y with a random-magnitude x
    x = rng.uniform(0.5, 2.0, size=n) * rng.choice([-1.0, 1.0], size=n)
    y = products / x

    truth = sorted((window.interval for window in spec.planted), key=lambda iv: (iv.s, iv.e))
    logger.debug(f"Generated synthetic pair n={n}, seed={spec.seed}, planted={[str(iv) for iv in truth]}")
    return TimeSeriesPair(x, y), truth

def parse_plants(text: str, polarity: int = 1) -> List[PlantedWindow]:
    """Parse "S:E[,S:E...]" into planted windows"""
    windows = []
    if not text:
        return windows
    for token in text.split(","):
        try:
            start, end = token.split(":")
            windows.append(PlantedWindow(interval=Interval(s=int(start), e=int(end)), polarity=polarity))
        except (ValueError, ValidationError) as e:
            raise SpecError(f"bad planted window '{token}': {str(e)}") from e
    return windows

def spaced_windows(n: int, count: int, length: int, rng: np.random.Generator, gap: int = 2) -> List[Interval]:
    """
    Place `count` windows of `length` at random, each in its own block of the
    series, at least `gap` timestamps apart.
    """
    if count <= 0:
        return []
    block = n // count
    if block < length + gap:
        raise SpecError(f"cannot fit {count} windows of length {length} into n={n}")

    windows = []
    for index in range(count):
        lo = index * block + gap
        hi = (index + 1) * block - length
        start = int(rng.integers(lo, hi + 1)) if hi >= lo else index * block
        windows.append(Interval(s=start, e=start + length - 1))
    return windows

def random_spec(rng: np.random.Generator, n: int, l_min: int, max_windows: int = 3,
                margin: float = 0.5, background: float = 0.2, polarity: int = 1) -> SynthSpec:
    """Random spec whose windows are >= l_min long and separated by weak timestamps"""
    windows: List[Interval] = []
    cursor = int(rng.integers(0, 3))
    for _ in range(int(rng.integers(0, max_windows + 1))):
        length = int(rng.integers(l_min, 2 * l_min + 1))
        if cursor + length > n:
            break
        windows.append(Interval(s=cursor, e=cursor + length - 1))
        cursor += length + int(rng.integers(1, 4))

    return SynthSpec(
        n=n,
        planted=[PlantedWindow(interval=iv, polarity=polarity) for iv in windows],
        background_amplitude=background,
        planted_margin=margin + float(rng.uniform(0.0, 1.0)),
        seed=int(rng.integers(0, 2**63 - 1)),
    )
