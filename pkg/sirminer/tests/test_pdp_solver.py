import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from sirminer.schemas.core_schemas import MeasureKind, MiningParams
from sirminer.services.dp_solver import solve_dp
from sirminer.services.oracle import naive_weakness
from sirminer.services.pdp_solver import (
    left_weak_scan, partition_points, right_weak_scan, segments, solve_pdp, solve_pdp_detailed, weakness_profile,
)
from sirminer.services.series import TimeSeriesPair
from sirminer.tests.helpers import pair_from_products, true_indices

AP = MeasureKind.AP

def test_worked_instance_scans(w1_pair):
    left = left_weak_scan(w1_pair, AP, 1.0)
    right = right_weak_scan(w1_pair, AP, 1.0)

    assert true_indices(left) == {0, 3, 4}
    assert true_indices(right) == {2, 3}
    assert partition_points(left, right) == [3]

def test_worked_instance_segments(w1_pair, w1_params):
    solution, profile, stats = solve_pdp_detailed(w1_pair, w1_params)

    assert [(iv.s, iv.e) for iv in stats.segments] == [(0, 2), (3, 5)]
    assert stats.solved_segments == 2
    assert stats.max_partition_k == 3
    assert solution.spans() == [(0, 1), (4, 5)]
    assert profile.to_dict() == {"left_weak": [0, 3, 4], "right_weak": [2, 3], "cuts": [3]}

def test_all_weak_series():
    pair = pair_from_products([0.0] * 6)
    left = left_weak_scan(pair, AP, 1.0)
    right = right_weak_scan(pair, AP, 1.0)

    assert all(left) and all(right)
    assert partition_points(left, right) == [1, 2, 3, 4, 5]
    assert solve_pdp(pair, MiningParams(measure=AP, tau=1.0, l_min=2)).intervals == []

def test_short_strong_series():
    pair = pair_from_products([2.0, 2.0])
    assert true_indices(left_weak_scan(pair, AP, 1.0)) == {0}
    assert true_indices(right_weak_scan(pair, AP, 1.0)) == set()

def test_all_strong_series_has_no_cuts():
    pair = pair_from_products([2.0] * 6)
    profile = weakness_profile(pair, AP, 1.0)
    assert profile.partition_points == []
    assert solve_pdp(pair, MiningParams(measure=AP, tau=1.0, l_min=2)).spans() == [(0, 5)]

def test_single_timestamp():
    pair = pair_from_products([2.0])
    assert left_weak_scan(pair, AP, 1.0) == [True]
    assert right_weak_scan(pair, AP, 1.0) == [False]
    assert solve_pdp(pair, MiningParams(measure=AP, tau=1.0, l_min=1)).spans() == [(0, 0)]

def test_segments_skip_short_pieces():
    stats = segments(10, [2, 3, 8], 3)
    assert [(iv.s, iv.e) for iv in stats.segments] == [(0, 1), (2, 2), (3, 7), (8, 9)]
    assert stats.solved_segments == 1
    assert stats.skipped_segments == 3
    assert stats.max_partition_k == 5

def test_each_scan_visits_every_timestamp_once(rng):
    pair = TimeSeriesPair(rng.normal(size=200), rng.normal(size=200))
    for tau in (-1.0, 0.0, 0.5, 2.0):
        assert weakness_profile(pair, AP, tau).visits == 2 * pair.n

@hyp_settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(min_value=-3, max_value=3), min_size=1, max_size=18),
       st.sampled_from([0.5, 1.0, 2.0]))
def test_scans_match_literal_definition(products, tau):
    pair = pair_from_products(products)
    naive_left, naive_right = naive_weakness(pair, AP, tau)
    assert left_weak_scan(pair, AP, tau) == naive_left
    assert right_weak_scan(pair, AP, tau) == naive_right

@hyp_settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(min_value=-3, max_value=3), min_size=2, max_size=18))
def test_right_scan_mirrors_left_scan_of_reversed_pair(products):
    pair = pair_from_products(products)
    n = pair.n
    right = right_weak_scan(pair, AP, 1.0)
    left_of_reversed = left_weak_scan(pair.reversed(), AP, 1.0)
    assert all(right[t] == left_of_reversed[n - t] for t in range(1, n))

@hyp_settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(min_value=-3, max_value=3), min_size=2, max_size=18))
def test_weak_point_after_weak_position_stays_weak(products):
    pair = pair_from_products(products)
    left, _ = naive_weakness(pair, AP, 1.0)
    for t in range(pair.n - 1):
        if left[t] and products[t] < 1.0:
            assert left[t + 1]

@hyp_settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(min_value=-3, max_value=3), min_size=2, max_size=18))
def test_first_weak_extension_marks_next_position(products):
    pair = pair_from_products(products)
    left, _ = naive_weakness(pair, AP, 1.0)
    n = pair.n
    for t in range(n):
        if not left[t]:
            continue
        # first e where the mean of products[t..e] drops below 1
        weak_end = next((e for e in range(t, n) if sum(products[t:e + 1]) < e - t + 1), None)
        if weak_end is not None and weak_end + 1 < n:
            assert left[weak_end + 1]

def test_parallel_segments_match_serial(rng):
    products = np.where(rng.random(400) < 0.3, 2.0, -1.0)
    pair = pair_from_products(products)
    params = MiningParams(measure=AP, tau=1.0, l_min=3)

    serial = solve_pdp(pair, params)
    parallel = solve_pdp(pair, params, workers=4)
    assert parallel == serial
    assert serial.sum_length == solve_dp(pair, params).sum_length

@pytest.mark.parametrize("measure", [MeasureKind.AP, MeasureKind.NAP, MeasureKind.MSE])
def test_pdp_equals_dp_on_random_pairs(measure):
    seed = 31
    rng = np.random.default_rng(seed)
    for _ in range(50):
        n = int(rng.integers(10, 120))
        pair = TimeSeriesPair(rng.integers(-3, 4, size=n).astype(float), rng.integers(-3, 4, size=n).astype(float))
        tau = -2.0 if measure is MeasureKind.MSE else 1.0
        params = MiningParams(measure=measure, tau=tau, l_min=int(rng.integers(1, 5)))
        assert solve_pdp(pair, params).sum_length == solve_dp(pair, params).sum_length, f"seed={seed}"
