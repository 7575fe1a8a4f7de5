import logging
import sys
from pydantic import ValidationError
from typing import List, Optional

# Import routers
from sirminer.api import batch_commands, mine_commands, synth_commands, verify_commands
from sirminer.api.options import CommandParser
from sirminer.config import settings
from sirminer.exceptions import SirError

logger = logging.getLogger(__name__)

ROUTERS = [mine_commands, batch_commands, synth_commands, verify_commands]

def build_parser() -> CommandParser:
    parser = CommandParser(
        prog="sirminer",
        description="Optimal sub-interval relationships between pairs of time series",
    )
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CommandParser)

    # Include command routers
    for router in ROUTERS:
        router.register(subparsers)
    return parser

def configure_logging(verbose: bool = False):
    logging.basicConfig(
        level=logging.DEBUG if verbose else settings.log_level,
        format=settings.log_format,
        stream=sys.stderr,
    )

def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SirError as e:
        configure_logging()
        logger.error(str(e))
        return e.exit_code

    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except SirError as e:
        logger.error(f"❌ {args.command} failed: {str(e)}")
        return e.exit_code
    except ValidationError as e:
        logger.error(f"❌ {args.command} rejected its parameters: {str(e)}")
        return 1
    except OSError as e:
        logger.error(f"❌ {args.command} failed: {str(e)}")
        return 2

if __name__ == "__main__":
    sys.exit(main())
