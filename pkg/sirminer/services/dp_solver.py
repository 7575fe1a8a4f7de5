from typing import List, Tuple
import logging

from sirminer.schemas.core_schemas import Interval, MiningParams, SirSolution
from sirminer.services.measures import RIGHT, extend_state, require_qualifying, start_state, strength_table
from sirminer.services.series import TimeSeriesPair
from sirminer.services.validation_service import validate_params

logger = logging.getLogger(__name__)

# backtracking marker for "timestamp left uncovered"
SKIP = -1

def solve_range(pair: TimeSeriesPair, params: MiningParams, lo: int, hi: int) -> List[Tuple[int, int, float]]:
    """
    Weighted interval scheduling over timestamps lo..hi (inclusive), interval
    length as weight. best[j] is the optimal sum-length of the prefix
    [lo, lo+j-1]. Ties prefer leaving the last timestamp uncovered, then the
    smallest start.

    Each start s is anchored once and its running sum grown rightwards, so an
    interval's strength never depends on values before s. Candidates are
    pushed forward into reach[]; best[j] is final by the time s = lo+j is
    anchored.

    Returns the selected (s, e, strength) triples in ascending order.
    """
    table = strength_table(params.measure, pair)
    points = table.points
    tau, l_min = params.tau, params.l_min

    size = hi - lo + 1
    best = [0] * (size + 1)
    take = [SKIP] * (size + 1)
    # best candidate ending at lo+k-1 and its (smallest) start
    reach = [-1] * (size + 1)
    reach_start = [SKIP] * (size + 1)

    def settle(j: int):
        if reach[j] > best[j - 1]:
            best[j], take[j] = reach[j], reach_start[j]
        else:
            best[j], take[j] = best[j - 1], SKIP

    for s in range(lo, hi + 1):
        j = s - lo
        if j > 0:
            settle(j)
        base = best[j]

        acc = 0.0
        for e in range(s, hi + 1):
            acc += points[e]
            length = e - s + 1
            if length >= l_min and acc / length >= tau:
                k = e - lo + 1
                if base + length > reach[k]:
                    reach[k] = base + length
                    reach_start[k] = s

    settle(size)

    selected = []
    j = size
    while j > 0:
        s = take[j]
        if s == SKIP:
            j -= 1
            continue
        e = lo + j - 1
        selected.append((s, e, table.value(s, e)))
        j = s - lo

    selected.reverse()
    return selected

def solve_dp(pair: TimeSeriesPair, params: MiningParams) -> SirSolution:
    """Optimal SIR by dynamic programming over the full series, O(n^2)"""
    require_qualifying(params.measure)
    validate_params(params, pair.n)

    selected = solve_range(pair, params, 0, pair.n - 1)
    solution = SirSolution.from_selection(params, selected, n=pair.n)
    logger.debug(f"DP solved n={pair.n}: {len(selected)} intervals, SL={solution.sum_length}")
    return solution

def enumerate_strong_intervals(pair: TimeSeriesPair, params: MiningParams) -> List[Tuple[Interval, float]]:
    """All intervals of length >= l_min with strength >= tau, sorted by (s, e)"""
    require_qualifying(params.measure)
    validate_params(params, pair.n)

    found = []
    for s in range(pair.n):
        state = start_state(params.measure, pair, s)
        while True:
            if state.length >= params.l_min and state.strength >= params.tau:
                found.append((Interval(s=state.s, e=state.e), state.strength))
            if state.e == pair.n - 1:
                break
            state = extend_state(state, RIGHT, pair)

    return found
