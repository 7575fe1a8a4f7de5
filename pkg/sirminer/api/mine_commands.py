import json
import pandas as pd
import logging

from sirminer.api.options import add_mining_options, float_list, int_list, MEASURE_CHOICES, STANDARDIZE_CHOICES
from sirminer.config import settings
from sirminer.schemas.core_schemas import MeasureKind
from sirminer.services.analytics_service import get_analytics_service, resolve_solver
from sirminer.services.pdp_solver import weakness_profile
from sirminer.services.series import TimeSeriesPair
from sirminer.services.validation_service import make_params, validate_params
from sirminer.utils.io_utils import load_csv, standardize, write_frame, write_json


logger = logging.getLogger(__name__)

def _load_pair(args) -> TimeSeriesPair:
    dataset = load_csv(args.input)
    x = standardize(dataset.column(args.x), args.standardize)
    y = standardize(dataset.column(args.y), args.standardize)
    return TimeSeriesPair(x, y)

def mine(args) -> int:
    pair = _load_pair(args)
    params = make_params(args.measure, args.tau, args.lmin)
    validate_params(params, pair.n)

    logger.info(f"🎯 Mining {args.x} vs {args.y} (n={pair.n}) with {args.solver}, {params.to_dict()}")
    solution = resolve_solver(args.solver)(pair, params)
    write_json(solution.to_dict(), args.out)
    logger.info(f"✅ {len(solution.intervals)} intervals, SL={solution.sum_length} -> {args.out}")

    if args.dump_weakness:
        profile = weakness_profile(pair, params.measure, params.tau)
        print(json.dumps(profile.to_dict()))
    return 0

def sweep(args) -> int:
    pair = _load_pair(args)
    cells = get_analytics_service().sweep_params(
        pair, MeasureKind(args.measure), float_list(args.taus), int_list(args.lmins), solver=args.solver
    )
    write_frame(pd.DataFrame([cell.model_dump() for cell in cells]), args.out)
    logger.info(f"✅ Sweep of {len(cells)} settings -> {args.out}")
    return 0

def register(subparsers):
    parser = subparsers.add_parser("mine", help="optimal SIR for one pair of columns")
    parser.add_argument("--input", required=True)
    parser.add_argument("--x", required=True)
    parser.add_argument("--y", required=True)
    add_mining_options(parser, settings)
    parser.add_argument("--solver", choices=["dp", "pdp", "oracle"], default="pdp")
    parser.add_argument("--standardize", choices=STANDARDIZE_CHOICES, default="none")
    parser.add_argument("--dump-weakness", action="store_true", help="print left/right weakness and cuts as JSON")
    parser.add_argument("--out", required=True)
    parser.set_defaults(handler=mine)

    parser = subparsers.add_parser("sweep", help="sum-length over a tau x lmin grid")
    parser.add_argument("--input", required=True)
    parser.add_argument("--x", required=True)
    parser.add_argument("--y", required=True)
    parser.add_argument("--measure", choices=MEASURE_CHOICES, default=settings.default_measure)
    parser.add_argument("--taus", required=True, help="comma-separated thresholds")
    parser.add_argument("--lmins", required=True, help="comma-separated minimum lengths")
    parser.add_argument("--solver", choices=["dp", "pdp"], default="pdp")
    parser.add_argument("--standardize", choices=STANDARDIZE_CHOICES, default="none")
    parser.add_argument("--out", required=True)
    parser.set_defaults(handler=sweep)
