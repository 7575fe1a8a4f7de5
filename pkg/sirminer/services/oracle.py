from pydantic import BaseModel, ConfigDict, Field
from typing import Dict, List, Optional, Tuple
import logging

from sirminer.config import ORACLE_MAX_N
from sirminer.exceptions import BudgetExceeded
from sirminer.schemas.core_schemas import Interval, MeasureKind, MiningParams, SirSolution
from sirminer.services.measures import interval_value, require_qualifying
from sirminer.services.series import TimeSeriesPair
from sirminer.services.validation_service import validate_params

logger = logging.getLogger(__name__)

class OracleBudget(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_n: int = Field(ORACLE_MAX_N, ge=1)

    def check(self, n: int):
        if n > self.max_n:
            raise BudgetExceeded(f"oracle accepts n <= {self.max_n}, got n={n}")

def _strong_by_start(pair: TimeSeriesPair, params: MiningParams) -> Dict[int, List[Tuple[int, float]]]:
    """Qualifying intervals straight from the definition, grouped by start"""
    by_start: Dict[int, List[Tuple[int, float]]] = {s: [] for s in range(pair.n)}
    for s in range(pair.n):
        for e in range(s + params.l_min - 1, pair.n):
            strength = interval_value(params.measure, pair, Interval(s=s, e=e))
            if strength >= params.tau:
                by_start[s].append((e, strength))
    return by_start

def brute_force_solve(pair: TimeSeriesPair, params: MiningParams,
                      budget: Optional[OracleBudget] = None) -> SirSolution:
    """
    Exhaustive search over every non-overlapping set of qualifying intervals.
    Among equal sum-lengths the winner is the set whose intervals, read from the
    right as (e, s) pairs, are lexicographically smallest: the same set the DP
    backtrack picks by preferring skips and then the smallest start.
    """
    budget = budget or OracleBudget()
    budget.check(pair.n)
    require_qualifying(params.measure)
    validate_params(params, pair.n)

    n = pair.n
    by_start = _strong_by_start(pair, params)

    # coverable[p]: timestamps in [p, n-1] inside at least one qualifying interval
    covered = [False] * n
    for s, ends in by_start.items():
        for e, _ in ends:
            for t in range(s, e + 1):
                covered[t] = True
    coverable = [0] * (n + 1)
    for p in range(n - 1, -1, -1):
        coverable[p] = coverable[p + 1] + (1 if covered[p] else 0)

    best_total = -1
    best_key: Tuple = ()
    best_chosen: List[Tuple[int, int, float]] = []
    chosen: List[Tuple[int, int, float]] = []

    def search(p: int, total: int):
        nonlocal best_total, best_key, best_chosen
        if total + coverable[min(p, n)] < best_total:
            return
        if p >= n:
            key = tuple((e, s) for s, e, _ in reversed(chosen))
            if total > best_total or key < best_key:
                best_total, best_key, best_chosen = total, key, list(chosen)
            return

        for e, strength in by_start[p]:
            chosen.append((p, e, strength))
            search(e + 1, total + e - p + 1)
            chosen.pop()
        search(p + 1, total)

    search(0, 0)
    return SirSolution.from_selection(params, best_chosen, n=n)

def naive_weakness(pair: TimeSeriesPair, measure: MeasureKind, tau: float,
                   budget: Optional[OracleBudget] = None,
                   enforce_budget: bool = True) -> Tuple[List[bool], List[bool]]:
    """Left/right weakness evaluated literally over every interval, O(n^2)"""
    if enforce_budget:
        (budget or OracleBudget()).check(pair.n)
    require_qualifying(measure)

    n = pair.n
    strong = [[False] * n for _ in range(n)]
    for s in range(n):
        for e in range(s, n):
            strong[s][e] = interval_value(measure, pair, Interval(s=s, e=e)) >= tau

    left_weak = [all(not strong[a][t - 1] for a in range(t)) for t in range(n)]
    right_weak = [all(not strong[t][e] for e in range(t, n)) for t in range(n)]
    return left_weak, right_weak
