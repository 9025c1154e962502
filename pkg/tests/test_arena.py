import json
import os

import pytest

from cutgame.arena import (
    SearchBudget,
    cutter_value_threshold,
    emit_trace,
    exact_value,
    marker_value_bound,
    play_game,
    ply_record,
    read_trace,
    refined_value_bound,
    switch_value_bound,
    verify_cutter_bound,
    verify_marker_bound,
    verify_refined,
)

ALLOWED_TRANSITIONS = {
    (1, "A"), (1, "B"), (1, "C"),
    (2, "D"),
    (3, "A"),
    (4, "A"), (4, "B"), (4, "C"),
    (5, "A"), (6, "A"), (7, "A"),
    (8, "A"), (8, "B"), (8, "C"),
    (9, "A"), (10, "A"), (11, "A"), (12, "A"),
}


def test_bound_formulas():
    assert [marker_value_bound(n) for n in range(5)] == [3, 4, 6, 7, 8]
    assert [cutter_value_threshold(n) for n in range(4)] == [2, 4, 5, 6]
    assert [refined_value_bound(n) for n in (1, 2, 3)] == [3, 5, 6]
    assert switch_value_bound(4) == 5


def test_marker_bound_small():
    for g0 in (0, 1, 2):
        report = verify_marker_bound(g0)
        assert report.verdict == "pass", report.failure
        assert report.max_value_seen <= report.bound
        assert set(report.transitions_seen) <= ALLOWED_TRANSITIONS
        assert report.details["max_ply_depth"] <= report.bound + 1


def test_cutter_bound_exhaustive_small():
    for g0, threshold in ((0, 2), (1, 4)):
        report = verify_cutter_bound(g0)
        assert report.verdict == "pass", report.failure
        assert report.bound == threshold


def test_cutter_bound_sampled_deterministic():
    budget = SearchBudget(marker_sampling="random", sample_plays=200, seed=42)
    a = verify_cutter_bound(2, budget)
    b = verify_cutter_bound(2, budget)
    assert a.verdict == "pass"
    assert a.to_json() == b.to_json()


def test_exact_values():
    assert exact_value(0) == 2
    assert exact_value(1) == 4


def test_exact_value_memo_oracle():
    for g0 in (0, 1):
        assert exact_value(g0, use_memo=True) == exact_value(g0, use_memo=False)


def test_refined_small():
    for g0 in (1, 2, 3):
        report = verify_refined(g0)
        assert report.verdict == "pass", report.failure
        assert report.max_value_seen <= report.bound
        assert report.details["seed_potential"] == "-3/1"


def test_refined_switch_at_four():
    report = verify_refined(4)
    assert report.verdict == "pass", report.failure
    assert report.details.get("switches", 0) >= 1


def test_budget_exhaustion_is_inconclusive():
    report = verify_marker_bound(2, SearchBudget(max_states=3))
    assert report.verdict == "inconclusive"
    report = verify_cutter_bound(1, SearchBudget(max_states=3))
    assert report.verdict == "inconclusive"
    assert exact_value(1, SearchBudget(max_states=3)) == "inconclusive"


def test_report_roundtrip():
    report = verify_marker_bound(1)
    data = json.loads(report.to_json())
    assert data["verdict"] == "pass"
    assert data["g0"] == 1
    assert data["budget"]["max_states"] == 2_000_000


def test_trace_roundtrip(tmp_path):
    records, outcome = play_game(1, marker="auto", cutter="auto")
    path = os.path.join(tmp_path, "trace.jsonl")
    emit_trace(records, path)
    back = read_trace(path)
    assert back == records
    assert len(back) == len(records)
    emit_trace([], path)
    assert read_trace(path) == []
    assert os.path.getsize(path) == 0


def test_refined_trace_first_line(tmp_path):
    records, _ = play_game(3, marker="auto", cutter="auto", refined=True)
    path = os.path.join(tmp_path, "t.jsonl")
    emit_trace(records, path)
    first = read_trace(path)[0]
    assert first["ply"] == 0
    assert first["value"] == 3
    assert first["potential"] == "-3/1"


def test_play_random_vs_random_reproducible():
    a = play_game(2, marker="random", cutter="random", seed=9)
    b = play_game(2, marker="random", cutter="random", seed=9)
    assert a == b


def test_ply_record_fields():
    from cutgame.core import empty_state

    rec = ply_record(0, None, None, None, empty_state(2))
    assert set(rec) == {"ply", "mover", "mark", "reply", "value", "genus", "potential", "canonical_key"}
    assert rec["potential"] == "0/1"


@pytest.mark.slow
def test_exact_value_two_handles():
    # the theorems bracket the genus-2 value to {5, 6}; the solver pins 5
    assert exact_value(2, SearchBudget(max_states=30_000_000)) == 5


@pytest.mark.slow
def test_marker_bound_full_depth():
    for g0 in (5, 6, 7, 8, 9):
        report = verify_marker_bound(g0)
        assert report.verdict == "pass", (g0, report.failure)
        assert set(report.transitions_seen) <= ALLOWED_TRANSITIONS
    # by genus nine every arrow of the automaton has fired
    assert set(verify_marker_bound(9).transitions_seen) == {
        (1, "A"), (1, "B"), (2, "D"), (3, "A"), (4, "A"), (4, "C"),
        (5, "A"), (6, "A"), (7, "A"), (8, "A"), (8, "B"), (9, "A"),
        (10, "A"), (11, "A"), (12, "A"),
    }


@pytest.mark.slow
def test_refined_rebind_full_game():
    report = verify_refined(7)
    assert report.verdict == "pass", report.failure
    assert report.details.get("rebinds", 0) >= 1
    assert report.details.get("switches", 0) >= 1
