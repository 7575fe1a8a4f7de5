import logging

from sirminer.config import settings
from sirminer.services.verify_service import run_verification

logger = logging.getLogger(__name__)

EXIT_MISMATCH = 3

def verify(args) -> int:
    report = run_verification(cases=args.cases, max_n=args.max_n, seed=args.seed)
    if report.ok:
        print(f"ok: {report.cases} cases, seed={report.seed}")
        return 0

    # smallest failing instance is the most useful reproducer
    worst = min(report.mismatches, key=lambda mismatch: len(mismatch.reproducer_csv))
    print(f"mismatch: {len(report.mismatches)} failed checks, seed={report.seed}")
    print(f"# case={worst.case} check={worst.check} params={worst.params}")
    print(f"# {worst.detail}")
    print(worst.reproducer_csv, end="")
    return EXIT_MISMATCH

def register(subparsers):
    parser = subparsers.add_parser("verify", help="oracle / DP / PDP / scan equivalence on random cases")
    parser.add_argument("--cases", type=int, default=settings.verify_cases)
    parser.add_argument("--max-n", type=int, default=settings.oracle_max_n)
    parser.add_argument("--seed", type=int, default=0)
    parser.set_defaults(handler=verify)
