import numpy as np
import pytest

from sirminer.schemas.core_schemas import MeasureKind, MiningParams
from sirminer.services.dp_solver import solve_dp
from sirminer.services.oracle import OracleBudget, brute_force_solve
from sirminer.services.pdp_solver import solve_pdp
from sirminer.services.series import TimeSeriesPair
from sirminer.services.validation_service import validate_solution
from sirminer.services.verify_service import check_case, random_case, run_verification

def test_seeded_random_cases_agree():
    report = run_verification(cases=1000, max_n=18, seed=20240611)
    assert report.ok, report.mismatches[:3]
    assert report.cases == 1000

def test_single_case_has_no_failures(rng):
    pair, params = random_case(rng, 12)
    assert check_case(pair, params, OracleBudget(max_n=12)) == []

def test_sum_length_monotone_in_parameters():
    seed = 11
    rng = np.random.default_rng(seed)
    for _ in range(200):
        pair, params = random_case(rng, 18)
        base = solve_dp(pair, params).sum_length

        if params.l_min < pair.n:
            longer = params.model_copy(update={"l_min": params.l_min + 1})
            assert solve_dp(pair, longer).sum_length <= base, f"seed={seed}"
        stricter = params.model_copy(update={"tau": params.tau + 0.5})
        assert solve_pdp(pair, stricter).sum_length <= base, f"seed={seed}"

@pytest.mark.parametrize("solver", [solve_dp, solve_pdp])
def test_solvers_are_deterministic(rng, solver):
    pair, params = random_case(rng, 18)
    assert solver(pair, params) == solver(pair, params)

def test_all_solvers_find_interval_behind_large_outlier():
    # products [-1e16, 0.5, 0.5, 0.5]
    pair = TimeSeriesPair([-1e8, 1, 1, 1], [1e8, 0.5, 0.5, 0.5])
    params = MiningParams(measure=MeasureKind.AP, tau=0.5, l_min=3)

    for solution in (solve_dp(pair, params), solve_pdp(pair, params), brute_force_solve(pair, params)):
        assert solution.spans() == [(1, 3)]
        assert solution.sum_length == 3
        assert solution.strengths == [0.5]
        assert validate_solution(solution, pair, params) == []
