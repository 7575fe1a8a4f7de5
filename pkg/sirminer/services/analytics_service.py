import numpy as np
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple
import logging

from sirminer.config import settings
from sirminer.exceptions import DegenerateError, ParamError, SirError
from sirminer.schemas.core_schemas import MeasureKind, MiningParams, SirSolution
from sirminer.schemas.io_schemas import ActivityProfile, BatchRecord, SweepCell
from sirminer.services.dp_solver import solve_dp
from sirminer.services.measures import pearson_full
from sirminer.services.oracle import brute_force_solve
from sirminer.services.pdp_solver import solve_pdp
from sirminer.services.series import PairSet, TimeSeriesPair
from sirminer.services.validation_service import validate_params

logger = logging.getLogger(__name__)

SOLVERS: Dict[str, Callable[[TimeSeriesPair, MiningParams], SirSolution]] = {
    "dp": solve_dp,
    "pdp": solve_pdp,
    "oracle": brute_force_solve,
}

def resolve_solver(name: str) -> Callable[[TimeSeriesPair, MiningParams], SirSolution]:
    try:
        return SOLVERS[name]
    except KeyError:
        raise ParamError(f"unknown solver '{name}', expected one of {sorted(SOLVERS)}")

class AnalyticsService:
    """
    Batch mining across candidate pairs and activity scoring of the mined SIRs
    """

    def __init__(self, workers: int = None):
        self.workers = workers or settings.batch_workers

    def filter_pairs(self, pairset: PairSet, max_abs_corr: float,
                     errors: Optional[List[Tuple[str, str]]] = None) -> PairSet:
        """Keep pairs whose full-length correlation is strictly weaker than max_abs_corr"""
        kept = []
        for pair_id, pair in pairset:
            try:
                corr = pearson_full(pair)
            except DegenerateError as e:
                logger.warning(f"Pair {pair_id} excluded: {str(e)}")
                if errors is not None:
                    errors.append((pair_id, str(e)))
                continue

            if abs(corr) < max_abs_corr:
                kept.append((pair_id, pair))
            else:
                logger.debug(f"Pair {pair_id} excluded, |corr|={abs(corr):.3f}")

        logger.info(f"🔎 Kept {len(kept)} of {len(pairset)} pairs with |corr| < {max_abs_corr}")
        return PairSet(kept)

    def mine_batch(self, pairset: PairSet, params: MiningParams, solver: str = "pdp",
                   workers: int = None) -> List[BatchRecord]:
        """One solution per pair, in input order; failures are recorded, not raised"""
        if len(pairset) == 0:
            return []
        validate_params(params, pairset.n)
        solve = resolve_solver(solver)
        workers = workers or self.workers

        def mine_one(item: Tuple[str, TimeSeriesPair]) -> BatchRecord:
            pair_id, pair = item
            try:
                return BatchRecord(id=pair_id, solution=solve(pair, params))
            except SirError as e:
                logger.error(f"Mining failed for pair {pair_id}: {str(e)}")
                return BatchRecord(id=pair_id, error=str(e))

        logger.info(f"⛏️ Mining {len(pairset)} pairs with {solver} ({workers} workers)")
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                records = list(executor.map(mine_one, pairset.pairs))
        else:
            records = [mine_one(item) for item in pairset.pairs]

        failed = sum(1 for record in records if record.error is not None)
        logger.info(f"✅ Batch finished: {len(records) - failed} solved, {failed} failed")
        return records

    def interval_activity_scores(self, solutions: Sequence[SirSolution], n: int, w: int) -> ActivityProfile:
        """
        score[t] is the fraction of solutions with one selected interval
        covering the whole window [t, t+w-1]
        """
        if w < 1 or w > n:
            raise ParamError(f"window length {w} outside [1, {n}]")
        if not solutions:
            raise ParamError("activity scores need at least one solution")

        n_windows = n - w + 1
        counts = np.zeros(n_windows, dtype=np.int64)

        for solution in solutions:
            active = np.zeros(n_windows + 1, dtype=np.int64)
            for iv in solution.intervals:
                if iv.e > n - 1:
                    raise ParamError(f"interval {iv} exceeds series length {n}")
                if iv.length >= w:
                    active[iv.s] += 1
                    active[iv.e - w + 2] -= 1
            counts += np.cumsum(active[:n_windows]) > 0

        return ActivityProfile(window_len=w, scores=(counts / len(solutions)).tolist())

    def activity_scan(self, solutions: Sequence[SirSolution], n: int,
                      windows: Sequence[int]) -> Dict[int, ActivityProfile]:
        return {w: self.interval_activity_scores(solutions, n, w) for w in windows}

    def top_anomalous_windows(self, profile: ActivityProfile, k: int) -> List[Tuple[int, float]]:
        if k < 1:
            raise ParamError(f"k must be at least 1, got {k}")
        ranked = sorted(enumerate(profile.scores), key=lambda item: (-item[1], item[0]))
        return ranked[:k]

    def sweep_params(self, pair: TimeSeriesPair, measure: MeasureKind, taus: Sequence[float],
                     lmins: Sequence[int], solver: str = "pdp") -> List[SweepCell]:
        """Optimal sum-length over a tau x l_min grid"""
        solve = resolve_solver(solver)
        cells = []
        for tau in taus:
            for l_min in lmins:
                solution = solve(pair, MiningParams(measure=measure, tau=tau, l_min=l_min))
                cells.append(SweepCell(
                    tau=tau,
                    l_min=l_min,
                    sum_length=solution.sum_length,
                    intervals=len(solution.intervals),
                ))
        return cells

    def batch_summary(self, records: Sequence[BatchRecord]) -> Dict:
        solved = [record.solution for record in records if record.solution is not None]
        summary = {
            "pairs": len(records),
            "solved": len(solved),
            "failed": len(records) - len(solved),
            "mean_sum_length": float(np.mean([sol.sum_length for sol in solved])) if solved else 0.0,
            "with_relationship": sum(1 for sol in solved if sol.intervals),
        }
        coverages = [sol.coverage for sol in solved if sol.coverage is not None]
        summary["mean_coverage"] = float(np.mean(coverages)) if coverages else 0.0
        return summary

# Global analytics service
_analytics_service = None

def get_analytics_service() -> AnalyticsService:
    """Get or create global analytics service"""
    global _analytics_service
    if _analytics_service is None:
        _analytics_service = AnalyticsService()
    return _analytics_service
