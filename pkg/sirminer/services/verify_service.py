import io
import numpy as np
from pydantic import BaseModel, Field
from typing import Any, Dict, List, Optional, Tuple
import logging

from sirminer.config import settings
from sirminer.schemas.core_schemas import Interval, MeasureKind, MiningParams
from sirminer.services.dp_solver import solve_dp
from sirminer.services.measures import interval_value
from sirminer.services.oracle import OracleBudget, brute_force_solve, naive_weakness
from sirminer.services.pdp_solver import left_weak_scan, partition_points, right_weak_scan, solve_pdp
from sirminer.services.series import TimeSeriesPair
from sirminer.services.validation_service import validate_solution
from sirminer.utils.io_utils import write_pair_csv
from sirminer.utils.performance_utils import measure_time

logger = logging.getLogger(__name__)

class Mismatch(BaseModel):
    case: int
    check: str
    detail: str
    params: Dict[str, Any]
    reproducer_csv: str

class VerifyReport(BaseModel):
    seed: int
    cases: int
    mismatches: List[Mismatch] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

def random_case(rng: np.random.Generator, max_n: int) -> Tuple[TimeSeriesPair, MiningParams]:
    """
    Small integer instance: point strengths in {-3..3} for AP; for MSE squared
    differences in {0,1,4,9} thresholded at MSE <= 0.5 or <= 1.0 (tau negated).
    """
    n = int(rng.integers(4, max_n + 1))
    measure = MeasureKind.AP if rng.random() < 0.5 else MeasureKind.MSE
    threshold = float(rng.choice([0.5, 1.0]))
    l_min = int(rng.choice([2, 3]))

    if measure is MeasureKind.AP:
        x = rng.choice([-1.0, 1.0], size=n)
        y = rng.integers(-3, 4, size=n).astype(float) * x
        tau = threshold
    else:
        x = rng.integers(-3, 4, size=n).astype(float)
        y = x + rng.integers(-3, 4, size=n).astype(float)
        tau = -threshold

    return TimeSeriesPair(x, y), MiningParams(measure=measure, tau=tau, l_min=l_min)

def crossing_strong_interval(pair: TimeSeriesPair, params: MiningParams, cut: int) -> Optional[Interval]:
    """A strong interval [s, e] with s < cut <= e, if any"""
    for s in range(cut):
        for e in range(cut, pair.n):
            iv = Interval(s=s, e=e)
            if interval_value(params.measure, pair, iv) >= params.tau:
                return iv
    return None

def check_case(pair: TimeSeriesPair, params: MiningParams, budget: OracleBudget) -> List[Tuple[str, str]]:
    failures = []

    dp = solve_dp(pair, params)
    pdp = solve_pdp(pair, params)
    oracle = brute_force_solve(pair, params, budget=budget)

    if not (dp.sum_length == pdp.sum_length == oracle.sum_length):
        failures.append(("sum_length", f"dp={dp.sum_length} pdp={pdp.sum_length} oracle={oracle.sum_length}"))
    if dp.spans() != oracle.spans():
        failures.append(("tie_rule", f"dp={dp.spans()} oracle={oracle.spans()}"))

    for name, solution in (("dp", dp), ("pdp", pdp), ("oracle", oracle)):
        violations = validate_solution(solution, pair, params)
        if violations:
            failures.append((f"valid_{name}", "; ".join(violations)))

    left, right = left_weak_scan(pair, params.measure, params.tau), right_weak_scan(pair, params.measure, params.tau)
    naive_left, naive_right = naive_weakness(pair, params.measure, params.tau, budget=budget)
    if left != naive_left:
        failures.append(("left_weak", f"scan={left} naive={naive_left}"))
    if right != naive_right:
        failures.append(("right_weak", f"scan={right} naive={naive_right}"))

    for cut in partition_points(left, right):
        crossing = crossing_strong_interval(pair, params, cut)
        if crossing is not None:
            failures.append(("partition", f"cut {cut} fragments strong interval {crossing}"))

    return failures

@measure_time("verify")
def run_verification(cases: int = None, max_n: int = None, seed: int = 0) -> VerifyReport:
    """Cross-check oracle, DP, PDP and both scans on seeded random instances"""
    cases = cases or settings.verify_cases
    max_n = max_n or settings.oracle_max_n
    budget = OracleBudget(max_n=max_n)
    rng = np.random.default_rng(seed)
    report = VerifyReport(seed=seed, cases=cases)

    logger.info(f"🔬 Verifying {cases} random cases (n <= {max_n}, seed={seed})")
    for case in range(cases):
        pair, params = random_case(rng, max_n)
        for check, detail in check_case(pair, params, budget):
            buffer = io.StringIO()
            write_pair_csv(pair, buffer)
            report.mismatches.append(Mismatch(
                case=case,
                check=check,
                detail=detail,
                params=params.to_dict(),
                reproducer_csv=buffer.getvalue(),
            ))
            logger.error(f"❌ Case {case} failed {check}: {detail}")

    if report.ok:
        logger.info(f"✅ All {cases} cases agree")
    return report
