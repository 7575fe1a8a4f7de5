import json
import logging

from sirminer.api.options import PLANTED_MEASURES, add_mining_options, int_list
from sirminer.config import settings
from sirminer.schemas.core_schemas import MeasureKind
from sirminer.schemas.io_schemas import SynthSpec
from sirminer.services.benchmark_service import report_frame, run_benchmark
from sirminer.services.synthetic_service import generate_synthetic, parse_plants
from sirminer.services.validation_service import make_params
from sirminer.utils.io_utils import write_frame, write_json, write_pair_csv

logger = logging.getLogger(__name__)

def synth(args) -> int:
    polarity = -1 if args.measure == MeasureKind.NAP.value else 1
    spec = SynthSpec(
        n=args.n,
        planted=parse_plants(args.plant, polarity=polarity),
        background_amplitude=args.background,
        planted_margin=args.margin,
        seed=args.seed,
    )
    logger.info(f"🧪 Generating synthetic pair n={spec.n}, seed={spec.seed}")
    pair, truth = generate_synthetic(spec, args.tau)
    write_pair_csv(pair, args.out)

    if args.truth:
        write_json({"planted": [{"s": iv.s, "e": iv.e} for iv in truth], "spec": json.loads(spec.model_dump_json())},
                   args.truth)
    logger.info(f"✅ Wrote {args.out}")
    return 0

def bench(args) -> int:
    params = make_params(args.measure, args.tau, args.lmin)
    report = run_benchmark(int_list(args.lengths), args.pairs_per_length, params, args.seed)
    write_frame(report_frame(report), args.out)
    if args.report:
        write_json(report.model_dump(), args.report)

    print(f"dp_slope={report.dp_slope:.3f} pdp_slope={report.pdp_slope:.3f}")
    return 0

def register(subparsers):
    parser = subparsers.add_parser(
        "synth", help="synthetic pair with planted strong windows",
        description="Writes a pair whose background stays within --background and whose planted windows "
                    "are strong for --tau. Each window is flanked by a guard timestamp on every side that has room, "
                    "pulled far below tau so no optimal interval can grow past the window. Guard values "
                    "therefore exceed the background amplitude.")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--plant", default="", help="S:E[,S:E...] inclusive windows")
    parser.add_argument("--tau", type=float, default=settings.default_tau)
    parser.add_argument("--margin", type=float, default=0.5)
    parser.add_argument("--background", type=float, default=0.2)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--measure", choices=PLANTED_MEASURES, default="ap", help="measure the windows are planted for")
    parser.add_argument("--out", required=True)
    parser.add_argument("--truth")
    parser.set_defaults(handler=synth)

    parser = subparsers.add_parser("bench", help="DP vs PDP scaling benchmark")
    parser.add_argument("--lengths", default=",".join(str(n) for n in settings.bench_lengths))
    parser.add_argument("--pairs-per-length", type=int, default=settings.bench_pairs_per_length)
    add_mining_options(parser, settings, measures=PLANTED_MEASURES)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", required=True)
    parser.add_argument("--report", help="optional JSON report with slopes and machine info")
    parser.set_defaults(handler=bench)
