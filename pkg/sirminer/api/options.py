import argparse
from typing import List

from sirminer.exceptions import ParamError
from sirminer.schemas.core_schemas import MeasureKind, QUALIFYING_MEASURES

MEASURE_CHOICES = sorted(measure.value for measure in QUALIFYING_MEASURES)
# measures whose strength is a point product, the only kind synthetic windows are planted for
PLANTED_MEASURES = [MeasureKind.AP.value, MeasureKind.NAP.value]
STANDARDIZE_CHOICES = ["none", "zscore", "monthly"]

class CommandParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as ParamError (exit code 1)"""

    def error(self, message):
        raise ParamError(f"{self.prog}: {message}")

def int_list(text: str) -> List[int]:
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise ParamError(f"expected comma-separated integers, got '{text}'")

def float_list(text: str) -> List[float]:
    try:
        return [float(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise ParamError(f"expected comma-separated numbers, got '{text}'")

def add_mining_options(parser: argparse.ArgumentParser, settings, measures: List[str] = MEASURE_CHOICES):
    parser.add_argument("--measure", choices=measures, default=settings.default_measure)
    parser.add_argument("--tau", type=float, default=settings.default_tau)
    parser.add_argument("--lmin", type=int, default=settings.default_lmin)
