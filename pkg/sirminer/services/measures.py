import numpy as np
from dataclasses import dataclass
from typing import Dict, List, Optional, Any
import math
import logging

from sirminer.exceptions import BoundsError, DegenerateError, MeasureNotQualified
from sirminer.schemas.core_schemas import Interval, MeasureKind
from sirminer.services.series import TimeSeriesPair

logger = logging.getLogger(__name__)

LEFT = "left"
RIGHT = "right"

def require_qualifying(measure: MeasureKind) -> MeasureKind:
    measure = MeasureKind(measure)
    if not measure.is_qualifying:
        raise MeasureNotQualified(f"measure '{measure.value}' cannot be used for interval mining")
    return measure

def point_value(measure: MeasureKind, xt: float, yt: float) -> float:
    """Strength of a single timestamp"""
    measure = require_qualifying(measure)
    if measure is MeasureKind.AP:
        return xt * yt
    if measure is MeasureKind.NAP:
        return -(xt * yt)
    return -((xt - yt) ** 2)

def point_values(measure: MeasureKind, pair: TimeSeriesPair) -> np.ndarray:
    """Vectorised point_value over the whole pair"""
    measure = require_qualifying(measure)
    if measure is MeasureKind.AP:
        return pair.x * pair.y
    if measure is MeasureKind.NAP:
        return np.negative(pair.x * pair.y)
    return np.negative((pair.x - pair.y) ** 2)

class StrengthTable:
    """
    Point values of one (pair, measure).
    total(s, e) is the correctly rounded sum of points[s..e], so it depends
    only on the interval's own values and every caller gets the same bits
    for the same (s, e).
    """

    __slots__ = ("measure", "n", "points")

    def __init__(self, measure: MeasureKind, pair: TimeSeriesPair):
        self.measure = measure
        self.n = pair.n
        self.points: List[float] = point_values(measure, pair).tolist()

    def total(self, s: int, e: int) -> float:
        if s == e:
            return self.points[s]
        return math.fsum(self.points[s:e + 1])

    def value(self, s: int, e: int) -> float:
        return self.total(s, e) / (e - s + 1)

def strength_table(measure: MeasureKind, pair: TimeSeriesPair) -> StrengthTable:
    measure = require_qualifying(measure)
    table = pair.cache.get(measure)
    if table is None:
        table = StrengthTable(measure, pair)
        pair.cache[measure] = table
    return table

def _check_bounds(pair: TimeSeriesPair, s: int, e: int):
    if s < 0 or e > pair.n - 1 or s > e:
        raise BoundsError(f"interval [{s},{e}] outside [0,{pair.n - 1}]")

def interval_value(measure: MeasureKind, pair: TimeSeriesPair, iv: Interval) -> float:
    """Mean point value over [s, e]; the canonical strength evaluator"""
    _check_bounds(pair, iv.s, iv.e)
    return strength_table(measure, pair).value(iv.s, iv.e)

@dataclass(frozen=True)
class RunningState:
    measure: MeasureKind
    s: int
    e: int
    acc: float

    @property
    def length(self) -> int:
        return self.e - self.s + 1

    @property
    def strength(self) -> float:
        return self.acc / (self.e - self.s + 1)

def start_state(measure: MeasureKind, pair: TimeSeriesPair, t: int) -> RunningState:
    _check_bounds(pair, t, t)
    table = strength_table(measure, pair)
    return RunningState(measure=table.measure, s=t, e=t, acc=table.points[t])

def extend_state(state: RunningState, direction: str, pair: TimeSeriesPair) -> RunningState:
    """Grow the interval by one timestamp in O(1); acc is a running sum from the anchor"""
    if direction == RIGHT:
        s, e = state.s, state.e + 1
    elif direction == LEFT:
        s, e = state.s - 1, state.e
    else:
        raise ValueError(f"unknown direction '{direction}'")

    if s < 0 or e > pair.n - 1:
        raise BoundsError(f"cannot extend [{state.s},{state.e}] {direction} within n={pair.n}")

    points = strength_table(state.measure, pair).points
    acc = state.acc + points[e] if direction == RIGHT else points[s] + state.acc
    return RunningState(measure=state.measure, s=s, e=e, acc=acc)

def check_betweenness(measure: MeasureKind, pair: TimeSeriesPair, s: int, m: int, e: int,
                      tolerance: float = 1e-9) -> Optional[Dict[str, Any]]:
    """Return None when rel[s,e] lies between rel[s,m] and rel[m+1,e], else the counterexample"""
    if not (s <= m < e):
        raise BoundsError(f"need s <= m < e, got ({s},{m},{e})")
    _check_bounds(pair, s, e)

    table = strength_table(measure, pair)
    left = table.value(s, m)
    right = table.value(m + 1, e)
    whole = table.value(s, e)

    if min(left, right) - tolerance <= whole <= max(left, right) + tolerance:
        return None

    logger.warning(f"Betweenness violated for {measure.value} at ({s},{m},{e})")
    return {"s": s, "m": m, "e": e, "left": left, "right": right, "whole": whole}

def pearson_full(pair: TimeSeriesPair) -> float:
    """Pearson correlation over the whole pair, used for candidate filtering"""
    if pair.n < 2:
        raise DegenerateError("correlation needs at least two timestamps")
    if np.ptp(pair.x) == 0.0 or np.ptp(pair.y) == 0.0:
        raise DegenerateError("constant series has no correlation")

    dx = pair.x - pair.x.mean()
    dy = pair.y - pair.y.mean()
    sxx = float(np.dot(dx, dx))
    syy = float(np.dot(dy, dy))

    if sxx == 0.0 or syy == 0.0:
        raise DegenerateError("constant series has no correlation")

    corr = float(np.dot(dx, dy)) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, corr))
