import pandas as pd
import logging

from sirminer.api.options import STANDARDIZE_CHOICES, add_mining_options
from sirminer.config import settings
from sirminer.exceptions import SirError
from sirminer.schemas.core_schemas import SirSolution
from sirminer.schemas.io_schemas import BatchRecord
from sirminer.services.analytics_service import get_analytics_service
from sirminer.services.series import PairSet, TimeSeriesPair
from sirminer.services.validation_service import make_params
from sirminer.utils.io_utils import load_csv, load_pairs_csv, read_jsonl, standardize, write_frame, write_jsonl

logger = logging.getLogger(__name__)

def batch(args) -> int:
    dataset = load_csv(args.series)
    params = make_params(args.measure, args.tau, args.lmin)
    analytics = get_analytics_service()

    failed = []
    candidates = []
    for a, b in load_pairs_csv(args.pairs):
        pair_id = f"{a}:{b}"
        try:
            pair = TimeSeriesPair(standardize(dataset.column(a), args.standardize),
                                  standardize(dataset.column(b), args.standardize))
            candidates.append((pair_id, pair))
        except SirError as e:
            logger.warning(f"Pair {pair_id} skipped: {str(e)}")
            failed.append(BatchRecord(id=pair_id, error=str(e)))

    filter_errors = []
    kept = analytics.filter_pairs(PairSet(candidates), args.max_corr, errors=filter_errors)
    failed.extend(BatchRecord(id=pair_id, error=message) for pair_id, message in filter_errors)

    records = analytics.mine_batch(kept, params, solver=args.solver, workers=args.workers)
    write_jsonl([record.to_dict() for record in records + failed], args.out)

    summary = analytics.batch_summary(records + failed)
    logger.info(f"📊 Batch summary: {summary}")
    return 0

def events(args) -> int:
    analytics = get_analytics_service()
    solutions = []
    for row in read_jsonl(args.solutions):
        if "solution" in row:
            solutions.append(SirSolution.from_dict(row["solution"]))

    profile = analytics.interval_activity_scores(solutions, args.n, args.window)
    frame = pd.DataFrame({"window_start": range(profile.n_windows), "score": profile.scores})
    write_frame(frame, args.out)
    logger.info(f"✅ Activity over {len(solutions)} solutions, window {args.window} -> {args.out}")

    for start, score in analytics.top_anomalous_windows(profile, args.top):
        print(f"{start},{score}")
    return 0

def register(subparsers):
    parser = subparsers.add_parser("batch", help="filter candidate pairs and mine each one")
    parser.add_argument("--series", required=True)
    parser.add_argument("--pairs", required=True)
    parser.add_argument("--max-corr", type=float, default=settings.max_abs_corr)
    add_mining_options(parser, settings)
    parser.add_argument("--solver", choices=["dp", "pdp"], default="pdp")
    parser.add_argument("--standardize", choices=STANDARDIZE_CHOICES, default=settings.batch_standardize,
                        help="monthly removes each calendar month's mean, then z-scores")
    parser.add_argument("--workers", type=int, default=settings.batch_workers)
    parser.add_argument("--out", required=True)
    parser.set_defaults(handler=batch)

    parser = subparsers.add_parser("events", help="window activity scores from batch results")
    parser.add_argument("--solutions", required=True)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--window", type=int, default=settings.activity_window)
    parser.add_argument("--top", type=int, default=settings.top_windows)
    parser.add_argument("--out", required=True)
    parser.set_defaults(handler=events)
