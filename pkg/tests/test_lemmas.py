"""Property suites for the potential-accounting lemmas and forcing rules.

The quick versions run a few thousand cases each; the acceptance module
re-runs them at the full ten-thousand-case floor.
"""

import random

from fuzz import (
    fuzz_limited_choice,
    fuzz_move_a,
    fuzz_move_bc,
    fuzz_move_d,
    fuzz_nesting_contribution,
    fuzz_nesting_discard,
    fuzz_no_choice,
    fuzz_value_increase,
)

QUICK = 2_000


def test_amalgamation_never_raises_potential():
    assert fuzz_move_d(random.Random(101), QUICK) >= QUICK


def test_genus_burn_potential_bounds():
    assert fuzz_move_a(random.Random(102), QUICK) >= QUICK


def test_poor_arc_discard_never_raises_potential():
    assert fuzz_move_bc(random.Random(103), QUICK) >= QUICK


def test_nesting_discard_preserves_potential():
    assert fuzz_nesting_discard(random.Random(104), QUICK) >= QUICK


def test_nesting_contribution_is_three_halves():
    assert fuzz_nesting_contribution(random.Random(105), QUICK) >= QUICK


def test_gathered_isolated_label_cannot_be_dropped():
    assert fuzz_limited_choice(random.Random(106), QUICK) >= QUICK


def test_separating_marks_force_the_genus_burn():
    assert fuzz_no_choice(random.Random(107), QUICK) >= QUICK


def test_legal_replies_raise_value_by_one():
    assert fuzz_value_increase(random.Random(108), QUICK) >= QUICK


def test_value_increase_exhaustive_small_states():
    from fuzz import exhaustive_value_increase

    assert exhaustive_value_increase(4) == 3643


def test_value_increase_exhaustive_six_edges():
    from fuzz import exhaustive_value_increase

    assert exhaustive_value_increase(6) == 104305
