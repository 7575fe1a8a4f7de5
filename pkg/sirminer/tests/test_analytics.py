import pytest

from sirminer.exceptions import ParamError
from sirminer.schemas.core_schemas import Interval, MeasureKind, MiningParams, SirSolution
from sirminer.schemas.io_schemas import ActivityProfile, PlantedWindow, SynthSpec
from sirminer.services.analytics_service import AnalyticsService, get_analytics_service, resolve_solver
from sirminer.services.measures import pearson_full
from sirminer.services.series import PairSet, TimeSeriesPair
from sirminer.services.synthetic_service import generate_synthetic
from sirminer.tests.helpers import pair_from_products

AP_PARAMS = MiningParams(measure=MeasureKind.AP, tau=1.0, l_min=2)

def solution_with(*spans, n=None):
    return SirSolution.from_selection(AP_PARAMS, [(s, e, 1.0) for s, e in spans], n=n)

@pytest.fixture
def analytics():
    return AnalyticsService(workers=2)

def test_singleton_service():
    assert get_analytics_service() is get_analytics_service()

def test_unknown_solver():
    with pytest.raises(ParamError):
        resolve_solver("greedy")

def test_filter_keeps_uncorrelated_pairs(analytics):
    uncorrelated = TimeSeriesPair([1, 2, 3, 4], [1, -1, -1, 1])
    identical = TimeSeriesPair([1, 2, 3, 4], [1, 2, 3, 4])
    kept = analytics.filter_pairs(PairSet([("u", uncorrelated), ("i", identical)]), 0.25)
    assert kept.ids() == ["u"]

def test_filter_threshold_is_strict(analytics):
    pair = TimeSeriesPair([1, 2, 3, 4, 5], [2, 1, 4, 3, 6])
    corr = abs(pearson_full(pair))
    assert analytics.filter_pairs(PairSet([("p", pair)]), corr).ids() == []
    assert analytics.filter_pairs(PairSet([("p", pair)]), corr + 1e-9).ids() == ["p"]

def test_filter_records_constant_series(analytics):
    errors = []
    kept = analytics.filter_pairs(PairSet([("c", TimeSeriesPair([1, 1, 1], [1, 2, 3]))]), 0.5, errors=errors)
    assert len(kept) == 0
    assert [pair_id for pair_id, _ in errors] == ["c"]

def test_mine_batch_keeps_input_order(analytics):
    pairs = [(f"p{index}", pair_from_products([2.0] * (index + 2) + [-9.0] * (8 - index))) for index in range(6)]
    records = analytics.mine_batch(PairSet(pairs), AP_PARAMS, solver="dp")

    assert [record.id for record in records] == [f"p{index}" for index in range(6)]
    assert [record.solution.sum_length for record in records] == [index + 2 for index in range(6)]

def test_mine_batch_records_failures(analytics):
    pairs = PairSet([("a", pair_from_products([2.0] * 4)), ("b", pair_from_products([2.0, 2.0, 0.0, 0.0]))])
    records = analytics.mine_batch(pairs, AP_PARAMS, solver="oracle")
    assert all(record.error is None for record in records)

    params = MiningParams(measure=MeasureKind.PEARSON, tau=0.5, l_min=2)
    records = analytics.mine_batch(pairs, params, solver="pdp", workers=1)
    assert [record.error is not None for record in records] == [True, True]
    assert records[0].to_dict().keys() == {"id", "error"}

def test_empty_batch(analytics):
    assert analytics.mine_batch(PairSet([]), AP_PARAMS) == []

def test_activity_scores_examples(analytics):
    profile = analytics.interval_activity_scores([solution_with((2, 8))], 10, 3)
    assert profile.scores == [0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0]
    assert profile.n_windows == 8

    profile = analytics.interval_activity_scores([solution_with((0, 4)), solution_with((3, 9))], 10, 5)
    assert profile.scores == [0.5, 0.0, 0.0, 0.5, 0.5, 0.5]

def test_activity_requires_whole_window_inside_one_interval(analytics):
    # [0,2] and [3,5] together cover [1,4] but neither covers it alone
    profile = analytics.interval_activity_scores([solution_with((0, 2), (3, 5))], 6, 4)
    assert profile.scores == [0.0, 0.0, 0.0]

def test_activity_rejects_bad_input(analytics):
    with pytest.raises(ParamError):
        analytics.interval_activity_scores([solution_with((0, 1))], 5, 6)
    with pytest.raises(ParamError):
        analytics.interval_activity_scores([solution_with((0, 1))], 5, 0)
    with pytest.raises(ParamError):
        analytics.interval_activity_scores([], 5, 2)
    with pytest.raises(ParamError):
        analytics.interval_activity_scores([solution_with((3, 7))], 5, 2)

def test_activity_scan_per_window(analytics):
    profiles = analytics.activity_scan([solution_with((0, 4))], 10, [1, 5])
    assert profiles[1].scores[:5] == [1.0] * 5
    assert profiles[5].scores[0] == 1.0

def test_top_windows(analytics):
    profile = analytics.interval_activity_scores([solution_with((2, 4)), solution_with((3, 5))], 8, 2)
    assert analytics.top_anomalous_windows(profile, 3) == [(3, 1.0), (2, 0.5), (4, 0.5)]
    with pytest.raises(ParamError):
        analytics.top_anomalous_windows(profile, 0)

def test_planted_event_detected_across_pairs(analytics):
    pairs = []
    for index in range(100):
        planted = [PlantedWindow(interval=Interval(s=50, e=61))] if index < 30 else []
        pair, _ = generate_synthetic(SynthSpec(n=120, planted=planted, seed=index), 1.0)
        pairs.append((f"p{index}", pair))

    params = MiningParams(measure=MeasureKind.AP, tau=1.0, l_min=6)
    records = analytics.mine_batch(PairSet(pairs), params)
    profile = analytics.interval_activity_scores([record.solution for record in records], 120, 6)

    peak = max(profile.scores[50:57])
    assert peak >= 0.3
    assert all(score == pytest.approx(0.3) for score in profile.scores[50:57])
    off_window = [score for start, score in enumerate(profile.scores) if start < 50 or start > 56]
    assert max(off_window) <= 0.05
    assert analytics.top_anomalous_windows(profile, 1)[0][0] == 50

def test_sweep_is_monotone(analytics, w1_pair):
    cells = analytics.sweep_params(w1_pair, MeasureKind.AP, [0.5, 1.0, 2.5], [1, 2, 3])
    by_setting = {(cell.tau, cell.l_min): cell.sum_length for cell in cells}

    assert len(cells) == 9
    assert by_setting[(1.0, 2)] == 4
    assert by_setting[(2.5, 1)] == 0
    for tau in (0.5, 1.0, 2.5):
        assert by_setting[(tau, 1)] >= by_setting[(tau, 2)] >= by_setting[(tau, 3)]

def test_batch_summary(analytics):
    pairs = PairSet([("a", pair_from_products([2.0] * 4)), ("b", pair_from_products([0.0] * 4))])
    summary = analytics.batch_summary(analytics.mine_batch(pairs, AP_PARAMS))

    assert summary["pairs"] == 2
    assert summary["solved"] == 2
    assert summary["with_relationship"] == 1
    assert summary["mean_sum_length"] == 2.0
    assert summary["mean_coverage"] == 0.5

def test_activity_documented_cases(analytics):
    profile = analytics.interval_activity_scores([solution_with((0, 7)), solution_with((0, 3))], 10, 6)
    assert profile.scores[0] == 0.5

    assert analytics.interval_activity_scores([solution_with(), solution_with()], 10, 3).scores == [0.0] * 8
    for w in (1, 4, 10):
        assert analytics.interval_activity_scores([solution_with((0, 9))], 10, w).scores == [1.0] * (11 - w)

def test_activity_ignores_solution_order(analytics, rng):
    solutions = []
    for _ in range(12):
        s = int(rng.integers(0, 20))
        solutions.append(solution_with((s, int(rng.integers(s, 30)))))
    forward = analytics.interval_activity_scores(solutions, 30, 4)
    backward = analytics.interval_activity_scores(solutions[::-1], 30, 4)
    assert forward.scores == backward.scores

def test_top_windows_tie_rules(analytics):
    profile = ActivityProfile(window_len=1, scores=[0.1, 0.9, 0.9])
    assert analytics.top_anomalous_windows(profile, 1) == [(1, 0.9)]
    assert analytics.top_anomalous_windows(profile, 5) == [(1, 0.9), (2, 0.9), (0, 0.1)]
    uniform = ActivityProfile(window_len=1, scores=[0.2] * 6)
    assert [start for start, _ in analytics.top_anomalous_windows(uniform, 3)] == [0, 1, 2]

def test_batch_solvers_agree_and_are_deterministic(analytics, rng):
    pairs = PairSet([(f"p{index}", TimeSeriesPair(rng.normal(size=80), rng.normal(size=80))) for index in range(10)])
    params = MiningParams(measure=MeasureKind.NAP, tau=0.5, l_min=3)

    dp = analytics.mine_batch(pairs, params, solver="dp")
    pdp = analytics.mine_batch(pairs, params, solver="pdp", workers=4)
    assert [r.solution.sum_length for r in dp] == [r.solution.sum_length for r in pdp]
    assert analytics.mine_batch(pairs, params, solver="pdp", workers=1) == pdp
