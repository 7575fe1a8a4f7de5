from pydantic import ValidationError
from typing import List
import math
import logging

from sirminer.exceptions import ParamError
from sirminer.schemas.core_schemas import Interval, MeasureKind, MiningParams, SirSolution
from sirminer.services.measures import interval_value
from sirminer.services.series import TimeSeriesPair

logger = logging.getLogger(__name__)

def make_params(measure: str, tau: float, l_min: int) -> MiningParams:
    """Build MiningParams, reporting bad values as ParamError"""
    try:
        return MiningParams(measure=MeasureKind(measure), tau=tau, l_min=l_min)
    except (ValidationError, ValueError) as e:
        raise ParamError(f"invalid mining parameters: {str(e)}") from e

def validate_params(params: MiningParams, n: int) -> bool:
    if params.l_min < 1:
        raise ParamError(f"l_min must be at least 1, got {params.l_min}")
    if not math.isfinite(params.tau):
        raise ParamError(f"tau must be finite, got {params.tau}")
    if params.l_min > n:
        raise ParamError(f"l_min={params.l_min} exceeds series length {n}")
    return True

def validate_solution(sol: SirSolution, pair: TimeSeriesPair, params: MiningParams) -> List[str]:
    """
    Check a solution against the SIR definition.
    Returns the violated clauses; an empty list means a valid SIR.
    """
    violations: List[str] = []

    if len(sol.strengths) != len(sol.intervals):
        violations.append("strength_count")

    previous: Interval = None
    for index, iv in enumerate(sol.intervals):
        if iv.e > pair.n - 1:
            violations.append(f"bounds {iv}")
            previous = iv
            continue

        if previous is not None:
            if iv.s < previous.s:
                violations.append(f"unsorted {previous} {iv}")
            if iv.overlaps(previous):
                violations.append(f"overlap {previous} {iv}")

        if iv.length < params.l_min:
            violations.append(f"short {iv}")

        strength = interval_value(params.measure, pair, iv)
        if not strength >= params.tau:
            violations.append(f"weak {iv}")
        if index < len(sol.strengths) and abs(sol.strengths[index] - strength) > 1e-9:
            violations.append(f"strength_mismatch {iv}")

        previous = iv

    if sol.sum_length != sum(iv.length for iv in sol.intervals):
        violations.append("sum_length")

    if violations:
        logger.debug(f"Solution violates {len(violations)} clause(s): {violations}")
    return violations
