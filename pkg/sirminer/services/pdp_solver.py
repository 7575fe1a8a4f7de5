from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple
import logging

from sirminer.schemas.core_schemas import Interval, MeasureKind, MiningParams, PartitionStats, SirSolution, WeaknessProfile
from sirminer.services.dp_solver import solve_range
from sirminer.services.measures import LEFT, RIGHT, extend_state, require_qualifying, start_state
from sirminer.services.series import TimeSeriesPair
from sirminer.services.validation_service import validate_params

logger = logging.getLogger(__name__)

def _boundary_scan(pair: TimeSeriesPair, measure: MeasureKind, tau: float, forward: bool) -> Tuple[List[bool], int]:
    """
    Single scan over the series in scan order (left-to-right when forward,
    right-to-left otherwise). flags[u] for u in 0..n is True when no strong
    interval ends just before scan position u. Positions are scan-relative:
    scan position u is timestamp u going forward, n-1-u going backward.

    Returns (flags, timestamps visited).
    """
    n = pair.n
    grow = RIGHT if forward else LEFT

    def at(u: int) -> int:
        return u if forward else n - 1 - u

    flags = [False] * (n + 1)
    flags[0] = True  # nothing precedes the first position
    visits = 0
    anchor = 0

    while anchor < n:
        state = start_state(measure, pair, at(anchor))
        visits += 1

        if state.strength < tau:
            # weak singleton after a weak position keeps the next one weak
            flags[anchor + 1] = True
            anchor += 1
            continue

        # streak: [anchor, u] is strong, so u+1 is not weak
        u = anchor
        while True:
            if u + 1 >= n:
                anchor = n
                break
            state = extend_state(state, grow, pair)
            u += 1
            visits += 1
            if state.strength < tau:
                # first weak extension: u itself still follows a strong
                # interval, u+1 does not
                flags[u + 1] = True
                anchor = u + 1
                break

    return flags, visits

def left_weak_scan(pair: TimeSeriesPair, measure: MeasureKind, tau: float) -> List[bool]:
    """left_weak[t] is True when every interval ending at t-1 is weak"""
    require_qualifying(measure)
    flags, _ = _boundary_scan(pair, measure, tau, forward=True)
    return flags[:pair.n]

def right_weak_scan(pair: TimeSeriesPair, measure: MeasureKind, tau: float) -> List[bool]:
    """right_weak[t] is True when every interval starting at t is weak"""
    require_qualifying(measure)
    flags, _ = _boundary_scan(pair, measure, tau, forward=False)
    return [flags[pair.n - t] for t in range(pair.n)]

def partition_points(left_weak: List[bool], right_weak: List[bool]) -> List[int]:
    if len(left_weak) != len(right_weak):
        raise ValueError(f"flag lengths differ: {len(left_weak)} vs {len(right_weak)}")
    return [t for t in range(1, len(left_weak)) if left_weak[t] and right_weak[t]]

def weakness_profile(pair: TimeSeriesPair, measure: MeasureKind, tau: float) -> WeaknessProfile:
    require_qualifying(measure)
    forward, forward_visits = _boundary_scan(pair, measure, tau, forward=True)
    backward, backward_visits = _boundary_scan(pair, measure, tau, forward=False)

    left_weak = forward[:pair.n]
    right_weak = [backward[pair.n - t] for t in range(pair.n)]

    return WeaknessProfile(
        left_weak=left_weak,
        right_weak=right_weak,
        partition_points=partition_points(left_weak, right_weak),
        visits=forward_visits + backward_visits,
    )

def segments(n: int, cuts: List[int], l_min: int) -> PartitionStats:
    """Maximal segments between cuts; segments shorter than l_min are skipped"""
    bounds = [0] + list(cuts) + [n]
    pieces = [Interval(s=start, e=end - 1) for start, end in zip(bounds, bounds[1:]) if end > start]
    solved = sum(1 for piece in pieces if piece.length >= l_min)

    return PartitionStats(
        segments=pieces,
        solved_segments=solved,
        skipped_segments=len(pieces) - solved,
        max_partition_k=max((piece.length for piece in pieces), default=0),
    )

def solve_pdp_detailed(pair: TimeSeriesPair, params: MiningParams,
                       workers: int = 1) -> Tuple[SirSolution, WeaknessProfile, PartitionStats]:
    """
    Partitioned DP: cut at timestamps that are both left- and right-weak,
    then solve each segment independently.
    """
    require_qualifying(params.measure)
    validate_params(params, pair.n)

    profile = weakness_profile(pair, params.measure, params.tau)
    stats = segments(pair.n, profile.partition_points, params.l_min)
    jobs = [piece for piece in stats.segments if piece.length >= params.l_min]

    def solve_piece(piece: Interval):
        return solve_range(pair, params, piece.s, piece.e)

    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(solve_piece, jobs))
    else:
        results = [solve_piece(piece) for piece in jobs]

    selected = [triple for result in results for triple in result]
    solution = SirSolution.from_selection(params, selected, n=pair.n)

    logger.debug(
        f"PDP solved n={pair.n}: {len(profile.partition_points)} cuts, "
        f"{stats.solved_segments} segments solved, k={stats.max_partition_k}, SL={solution.sum_length}"
    )
    return solution, profile, stats

def solve_pdp(pair: TimeSeriesPair, params: MiningParams, workers: int = 1) -> SirSolution:
    solution, _, _ = solve_pdp_detailed(pair, params, workers=workers)
    return solution
