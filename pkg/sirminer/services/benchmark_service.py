import numpy as np
import pandas as pd
from typing import List, Sequence
import logging

from sirminer.config import settings
from sirminer.exceptions import ParamError
from sirminer.schemas.core_schemas import MeasureKind, MiningParams
from sirminer.schemas.io_schemas import BenchReport, BenchRow, PlantedWindow, SynthSpec
from sirminer.services.dp_solver import solve_dp
from sirminer.services.pdp_solver import solve_pdp_detailed
from sirminer.services.synthetic_service import generate_synthetic, spaced_windows
from sirminer.services.validation_service import validate_params
from sirminer.utils.performance_utils import Stopwatch, machine_info, measure_time

logger = logging.getLogger(__name__)

PLANTED_MEASURES = (MeasureKind.AP, MeasureKind.NAP)

def loglog_slope(lengths: Sequence[int], times_ms: Sequence[float]) -> float:
    """Least-squares slope of log(time) against log(length)"""
    slope, _ = np.polyfit(np.log(np.asarray(lengths, dtype=float)), np.log(np.asarray(times_ms, dtype=float)), 1)
    return float(slope)

def bench_pairs(length: int, count: int, params: MiningParams, seed: int,
                density: float = None, planted_length: int = None) -> List:
    """Synthetic pairs with a fixed planted density, so partitions stay short at any length"""
    density = settings.bench_planted_density if density is None else density
    planted_length = planted_length or max(settings.bench_planted_length, params.l_min)
    polarity = -1 if params.measure is MeasureKind.NAP else 1

    rng = np.random.default_rng([seed, length])
    windows_per_pair = max(1, int(round(density * length / planted_length)))

    pairs = []
    for _ in range(count):
        windows = spaced_windows(length, windows_per_pair, planted_length, rng)
        spec = SynthSpec(
            n=length,
            planted=[PlantedWindow(interval=iv, polarity=polarity) for iv in windows],
            background_amplitude=min(0.2, params.tau / 2),
            planted_margin=0.5,
            seed=int(rng.integers(0, 2**63 - 1)),
        )
        pair, _ = generate_synthetic(spec, params.tau)
        pairs.append(pair)
    return pairs

@measure_time("benchmark")
def run_benchmark(lengths: Sequence[int], pairs_per_length: int, params: MiningParams,
                  seed: int, density: float = None) -> BenchReport:
    """
    Time DP and PDP on the same synthetic batch at each length (solver calls
    only, single thread, one discarded warm-up per length) and fit log-log slopes.
    """
    lengths = list(lengths)
    if len(lengths) < 3:
        raise ParamError(f"need at least 3 lengths to fit a slope, got {len(lengths)}")
    if any(b <= a for a, b in zip(lengths, lengths[1:])):
        raise ParamError("benchmark lengths must be strictly increasing")
    if pairs_per_length < 1:
        raise ParamError("pairs_per_length must be at least 1")
    if params.measure not in PLANTED_MEASURES:
        raise ParamError(f"benchmark pairs are planted for ap or nap, not {params.measure.value}")
    if params.tau <= 0:
        raise ParamError(f"benchmark tau must be positive, got {params.tau}")
    for length in lengths:
        validate_params(params, length)

    logger.info(f"🏁 Benchmark over lengths {lengths}, {pairs_per_length} pairs each, seed={seed}")
    rows = []
    for length in lengths:
        pairs = bench_pairs(length, pairs_per_length, params, seed, density=density)

        # warm-up, discarded
        solve_dp(pairs[0], params)
        solve_pdp_detailed(pairs[0], params)

        dp_clock, pdp_clock = Stopwatch(), Stopwatch()
        max_k = 0
        for index, pair in enumerate(pairs):
            with dp_clock:
                dp_solution = solve_dp(pair, params)
            with pdp_clock:
                pdp_solution, _, stats = solve_pdp_detailed(pair, params)
            max_k = max(max_k, stats.max_partition_k)

            if dp_solution.sum_length != pdp_solution.sum_length:
                logger.error(
                    f"❌ DP/PDP disagree at length {length}, pair {index}: "
                    f"{dp_solution.sum_length} vs {pdp_solution.sum_length}"
                )

        row = BenchRow(
            length=length,
            pairs=len(pairs),
            dp_total_ms=max(dp_clock.total_ms, 1e-6),
            pdp_total_ms=max(pdp_clock.total_ms, 1e-6),
            max_partition_k=max_k,
        )
        logger.info(f"   n={length}: DP {row.dp_total_ms:.1f} ms, PDP {row.pdp_total_ms:.1f} ms, k={max_k}")
        rows.append(row)

    dp_times = [row.dp_total_ms for row in rows]
    dp_monotone = all(b >= a for a, b in zip(dp_times, dp_times[1:]))
    if not dp_monotone:
        logger.warning("⚠️ DP timings are not monotone in length (timer noise?)")

    report = BenchReport(
        rows=rows,
        dp_slope=loglog_slope(lengths, dp_times),
        pdp_slope=loglog_slope(lengths, [row.pdp_total_ms for row in rows]),
        dp_monotone=dp_monotone,
        machine=machine_info(),
    )
    logger.info(f"📈 Fitted slopes: DP {report.dp_slope:.2f}, PDP {report.pdp_slope:.2f}")
    return report

def report_frame(report: BenchReport) -> pd.DataFrame:
    return pd.DataFrame([row.model_dump() for row in report.rows])
