"""Adversarial verification of the value bounds and an exact solver.

Four drivers, one per claim:

* ``verify_marker_bound``: the marker's strategy keeps the value at or
  below ``floor(4*g0/3 + 10/3)`` against every legal restricted-cutter
  reply, with the configuration automaton closed under all transitions.
* ``verify_cutter_bound``: the cutter's potential-guarding strategy
  reaches value ``ceil(4*g0/3 + 2)`` against every marker, the potential
  never rising along the way.
* ``exact_value``: threshold minimax over canonical forms for the least
  value bound the marker can force while ending the game.
* ``verify_refined``: the seeded variant holds value at
  ``floor(4*g0/3 + 7/3)`` or exits to the cops game at
  ``floor(4*g0/3 - 1/3)`` with genus one.

Every ply of every explored play is audited: value rises by exactly one,
potentials move the right way, and the marker's bindings survive an
independent re-classification.  Budget exhaustion yields the distinct
verdict ``inconclusive``, never a silent pass.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .core import GameState, MarkedState, empty_state, enumerate_marker_moves, value
from .equivalence import History, canonical_key, legal_replies, start_history
from .potential import state_potential
from .strategy import (
    BoundingPhase,
    CAP_CONFIGS,
    ACTIVE_SUM_CAP,
    MarkerStrategy,
    PreparatoryPhase,
    SeedPhase,
    StrategyError,
    SwitchToCops,
    classify_configuration,
    cutter_move,
    verify_bindings,
)

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


def marker_value_bound(g0: int) -> int:
    return (4 * g0 + 10) // 3


def cutter_value_threshold(g0: int) -> int:
    return -((-4 * g0 - 6) // 3)


def refined_value_bound(g0: int) -> int:
    return (4 * g0 + 7) // 3


def switch_value_bound(g0: int) -> int:
    return (4 * g0 - 1) // 3


@dataclass(frozen=True)
class SearchBudget:
    """Exploration limits; the random mode records its seed in reports."""

    max_depth: Optional[int] = None
    max_states: int = 2_000_000
    marker_sampling: str = "exhaustive"
    sample_plays: int = 10_000
    seed: int = 0

    def resolved_depth(self, natural_bound: int) -> int:
        return self.max_depth if self.max_depth is not None else natural_bound + 1


@dataclass
class VerificationReport:
    g0: int
    mode: str
    bound: int
    max_value_seen: int = 0
    states_explored: int = 0
    terminal_plays: int = 0
    verdict: str = INCONCLUSIVE
    witness: Optional[list] = None
    failure: Optional[str] = None
    budget: Optional[SearchBudget] = None
    transitions_seen: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "g0": self.g0,
            "mode": self.mode,
            "opponent_model": "restricted-cutter",
            "bound": self.bound,
            "max_value_seen": self.max_value_seen,
            "states_explored": self.states_explored,
            "terminal_plays": self.terminal_plays,
            "verdict": self.verdict,
            "witness": self.witness,
            "failure": self.failure,
            "budget": None
            if self.budget is None
            else {
                "max_depth": self.budget.max_depth,
                "max_states": self.budget.max_states,
                "marker_sampling": self.budget.marker_sampling,
                "sample_plays": self.budget.sample_plays,
                "seed": self.budget.seed,
            },
            "transitions_seen": {f"{k[0]}-{k[1]}": v for k, v in sorted(self.transitions_seen.items())},
            "details": self.details,
        }
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _mark_json(marked: MarkedState) -> dict:
    def point(p):
        return list(p) if p is not None else "dummy"

    return {"v": point(marked.v), "w": point(marked.w), "same_dummy": marked.same_dummy}


def ply_record(ply: int, mover: Optional[str], marked: Optional[MarkedState],
               reply_kind: Optional[str], state: GameState) -> dict:
    p = state_potential(state)
    return {
        "ply": ply,
        "mover": mover,
        "mark": None if marked is None else _mark_json(marked),
        "reply": reply_kind,
        "value": value(state),
        "genus": state.genus,
        "potential": f"{p.numerator}/{p.denominator}",
        "canonical_key": str(canonical_key(state)),
    }


class _BudgetExceeded(Exception):
    pass


def _phase_name(phase) -> str:
    if isinstance(phase, PreparatoryPhase):
        return f"preparatory({phase.non_a_replies})"
    if isinstance(phase, SeedPhase):
        return "seed"
    return f"configuration {phase.config}"


def _check_bounding_state(state: GameState, phase: BoundingPhase, refined: bool) -> Optional[str]:
    """Audit one bounding-phase node; returns a failure message or None."""
    try:
        verify_bindings(state, phase, allow_pseudo=refined)
    except StrategyError as exc:
        return f"binding audit failed in configuration {phase.config}: {exc}"
    active = tuple(ac.cycle for ac in phase.actives)
    independent = classify_configuration(active, state, allow_pseudo=refined)
    if independent != phase.config:
        return f"classifier saw configuration {independent}, strategy claims {phase.config}"
    from .potential import component_potential, positive_component_sum

    for ci in range(len(state.cycles)):
        if ci not in active and component_potential(state, ci) > 0:
            return f"passive cycle {ci} has positive potential"
    total = positive_component_sum(state)
    if total > ACTIVE_SUM_CAP:
        return f"active potential sum {total} exceeds the cap"
    if total == ACTIVE_SUM_CAP and phase.config not in CAP_CONFIGS:
        return f"active potential sum at cap in configuration {phase.config}"
    return None


def _run_marker(g0: int, budget: SearchBudget, refined: bool) -> VerificationReport:
    bound = refined_value_bound(g0) if refined else marker_value_bound(g0)
    mode = "refined" if refined else "marker_bound"
    report = VerificationReport(g0=g0, mode=mode, bound=bound, budget=budget)
    strat = MarkerStrategy(refined=refined)
    if refined:
        if g0 < 1:
            report.verdict = FAIL
            report.failure = "the seeded game needs starting genus at least one"
            return report
        root = GameState(((0, 1, 0, 2),), genus=g0 - 1, initial_genus=g0, next_label=3)
        seed_p = state_potential(root)
        report.details["seed_potential"] = f"{seed_p.numerator}/{seed_p.denominator}"
        report.details["switch_bound"] = switch_value_bound(g0)
    else:
        root = empty_state(g0)
    max_depth = budget.resolved_depth(bound)

    def fail(msg: str, trace: tuple) -> None:
        report.verdict = FAIL
        report.failure = msg
        report.witness = list(trace)

    stack = [(root, start_history(root), strat.initial_phase(root), (ply_record(0, None, None, None, root),))]
    while stack:
        state, hist, phase, trace = stack.pop()
        report.states_explored += 1
        if report.states_explored > budget.max_states:
            report.verdict = INCONCLUSIVE
            report.failure = "state budget exhausted"
            report.details["frontier"] = len(stack) + 1
            return report
        v = value(state)
        report.max_value_seen = max(report.max_value_seen, v)
        report.details["max_ply_depth"] = max(report.details.get("max_ply_depth", 0), len(trace) - 1)
        if v > bound:
            fail(f"value {v} exceeds bound {bound}", trace)
            return report
        if len(trace) - 1 > max_depth:
            report.verdict = INCONCLUSIVE
            report.failure = "depth budget exhausted"
            return report
        if isinstance(phase, BoundingPhase):
            msg = _check_bounding_state(state, phase, refined)
            if msg is not None:
                fail(msg, trace)
                return report
        try:
            marked = strat.mark(phase, state)
        except StrategyError as exc:
            fail(f"marking failed in {_phase_name(phase)}: {exc}", trace)
            return report
        legal = legal_replies(hist, marked)
        if not legal:
            report.terminal_plays += 1
            continue
        expected = strat.expected(phase)
        p_now = state_potential(state)
        for reply in legal:
            step = trace + (ply_record(len(trace), "cutter", marked, reply.kind, reply.next),)
            if reply.kind not in expected:
                fail(f"{_phase_name(phase)} met an unexpected kind-{reply.kind} reply", step)
                return report
            if value(reply.next) != v + 1:
                fail("value did not increase by one", step)
                return report
            try:
                nxt = strat.advance(phase, state, reply)
            except (StrategyError, KeyError) as exc:
                fail(f"transition from {_phase_name(phase)} on kind {reply.kind}: {exc}", step)
                return report
            if isinstance(phase, BoundingPhase):
                report.transitions_seen[(phase.config, reply.kind)] = (
                    report.transitions_seen.get((phase.config, reply.kind), 0) + 1
                )
                if state_potential(reply.next) < p_now:
                    fail("potential decreased during the bounding phase", step)
                    return report
            if isinstance(phase, SeedPhase) and state_potential(reply.next) < p_now:
                fail("potential decreased after the seed split", step)
                return report
            if isinstance(nxt, SwitchToCops):
                report.terminal_plays += 1
                report.max_value_seen = max(report.max_value_seen, nxt.value)
                report.details.setdefault("switches", 0)
                report.details["switches"] += 1
                if nxt.genus != 1 or nxt.value > switch_value_bound(g0):
                    fail(
                        f"switch to cops at value {nxt.value}, genus {nxt.genus}",
                        step,
                    )
                    return report
                continue
            if isinstance(nxt, BoundingPhase) and isinstance(phase, BoundingPhase) and nxt.config == 2 and phase.config == 1 and refined and reply.next.genus == 4:
                report.details["rebinds"] = report.details.get("rebinds", 0) + 1
            if isinstance(nxt, BoundingPhase) and not isinstance(phase, BoundingPhase):
                if state_potential(reply.next) < Fraction(-5):
                    fail("potential below -5 at the end of the preparatory phase", step)
                    return report
            stack.append((reply.next, hist.extended(reply.next), nxt, step))
    report.verdict = PASS
    return report


def verify_marker_bound(g0: int, budget: Optional[SearchBudget] = None) -> VerificationReport:
    """Play the marker strategy against every legal reply, asserting the
    value bound and the automaton's closure throughout."""
    return _run_marker(g0, budget or SearchBudget(), refined=False)


def verify_refined(g0: int, budget: Optional[SearchBudget] = None) -> VerificationReport:
    """Seeded-game verification: value stays within the refined bound or
    the play exits to the cops game at genus one."""
    return _run_marker(g0, budget or SearchBudget(), refined=True)


def verify_cutter_bound(g0: int, budget: Optional[SearchBudget] = None) -> VerificationReport:
    """Play the potential-guarding cutter against the marker.

    Exhaustive mode branches over every marker mark; sampling mode plays
    ``budget.sample_plays`` random marker games.  Every play must reach
    the threshold value before the cutter runs out of legal replies, and
    the potential must never rise.
    """
    budget = budget or SearchBudget()
    threshold = cutter_value_threshold(g0)
    report = VerificationReport(g0=g0, mode="cutter_bound", bound=threshold, budget=budget)
    max_depth = budget.resolved_depth(threshold)

    def fail(msg: str, trace: tuple) -> None:
        report.verdict = FAIL
        report.failure = msg
        report.witness = list(trace)

    def step_play(state, hist, marked, trace):
        """One cutter response; returns (next state tuple) or None on failure."""
        legal = legal_replies(hist, marked)
        if not legal:
            report.terminal_plays += 1
            fail(f"game ended at value {value(state)} below threshold {threshold}", trace)
            return None
        reply, anomaly = cutter_move(hist, marked)
        nxt = reply.next
        step = trace + (ply_record(len(trace), "cutter", marked, reply.kind, nxt),)
        if anomaly:
            fail("cutter had no potential-non-increasing reply", step)
            return None
        if state_potential(nxt) > state_potential(state):
            fail("potential increased under the cutter strategy", step)
            return None
        if value(nxt) != value(state) + 1:
            fail("value did not increase by one", step)
            return None
        return nxt, hist.extended(nxt), step

    root = empty_state(g0)
    if budget.marker_sampling == "exhaustive":
        stack = [(root, start_history(root), (ply_record(0, None, None, None, root),))]
        while stack:
            state, hist, trace = stack.pop()
            report.states_explored += 1
            if report.states_explored > budget.max_states:
                report.verdict = INCONCLUSIVE
                report.failure = "state budget exhausted"
                return report
            report.max_value_seen = max(report.max_value_seen, value(state))
            if value(state) >= threshold:
                report.terminal_plays += 1
                continue
            if len(trace) - 1 > max_depth:
                report.verdict = INCONCLUSIVE
                report.failure = "depth budget exhausted"
                return report
            for marked in enumerate_marker_moves(state):
                out = step_play(state, hist, marked, trace)
                if out is None:
                    return report
                stack.append(out)
    else:
        rng = random.Random(budget.seed)
        for _ in range(budget.sample_plays):
            state, hist, trace = root, start_history(root), (ply_record(0, None, None, None, root),)
            while value(state) < threshold:
                report.states_explored += 1
                if report.states_explored > budget.max_states:
                    report.verdict = INCONCLUSIVE
                    report.failure = "state budget exhausted"
                    return report
                marked = rng.choice(enumerate_marker_moves(state))
                out = step_play(state, hist, marked, trace)
                if out is None:
                    return report
                state, hist, trace = out
                report.max_value_seen = max(report.max_value_seen, value(state))
            report.terminal_plays += 1
    report.verdict = PASS
    return report


def exact_value(g0: int, budget: Optional[SearchBudget] = None, use_memo: bool = True) -> Union[int, str]:
    """Smallest value bound the marker can force while ending the game.

    Threshold iteration over a minimax with canonical-form memoization:
    the marker needs a mark leaving the restricted cutter without legal
    replies, all other replies staying capped recursively.  Since legal
    play raises the value each turn, legality depends only on the current
    state, which keeps the memo key to the canonical form alone; the
    memo-off mode cross-checks that.
    """
    budget = budget or SearchBudget()
    counter = {"states": 0}

    def can_cap(state: GameState, hist: History, t: int, memo: dict) -> bool:
        if value(state) > t:
            return False
        key = canonical_key(state)
        if use_memo and key in memo:
            return memo[key]
        counter["states"] += 1
        if counter["states"] > budget.max_states:
            raise _BudgetExceeded()
        result = False
        for marked in enumerate_marker_moves(state):
            legal = legal_replies(hist, marked)
            if not legal:
                result = True
                break
            if value(state) + 1 > t:
                continue
            if all(can_cap(r.next, hist.extended(r.next), t, memo) for r in legal):
                result = True
                break
        if use_memo:
            memo[key] = result
        return result

    root = empty_state(g0)
    try:
        for t in range(marker_value_bound(g0) + 1):
            if can_cap(root, start_history(root), t, {}):
                return t
    except _BudgetExceeded:
        return INCONCLUSIVE
    return INCONCLUSIVE


def play_game(
    g0: int,
    marker: str = "auto",
    cutter: str = "auto",
    seed: int = 0,
    refined: bool = False,
    max_plies: Optional[int] = None,
) -> tuple[list[dict], dict]:
    """One full play; returns (ply records, outcome summary).

    ``marker``/``cutter`` are ``"auto"`` (the packaged strategies) or
    ``"random"`` (uniform legal choices from the given seed).
    """
    rng = random.Random(seed)
    strat = MarkerStrategy(refined=refined) if marker == "auto" else None
    if refined:
        state = GameState(((0, 1, 0, 2),), genus=g0 - 1, initial_genus=g0, next_label=3)
    else:
        state = empty_state(g0)
    hist = start_history(state)
    phase = strat.initial_phase(state) if strat else None
    records = [ply_record(0, None, None, None, state)]
    limit = max_plies if max_plies is not None else 4 * g0 + 16
    outcome: dict = {"result": "ply_limit", "plies": 0}
    for ply in range(1, limit + 1):
        if strat:
            marked = strat.mark(phase, state)
        else:
            marked = rng.choice(enumerate_marker_moves(state))
        legal = legal_replies(hist, marked)
        if not legal:
            outcome = {"result": "cutter_stuck", "plies": ply - 1}
            break
        if cutter == "auto":
            reply, _ = cutter_move(hist, marked)
        else:
            reply = rng.choice(legal)
        records.append(ply_record(ply, "cutter", marked, reply.kind, reply.next))
        if strat:
            nxt = strat.advance(phase, state, reply)
            if isinstance(nxt, SwitchToCops):
                outcome = {"result": "switch_to_cops", "plies": ply, "value": nxt.value, "genus": nxt.genus}
                state = reply.next
                break
            phase = nxt
        state = reply.next
        hist = hist.extended(state)
        outcome = {"result": "ply_limit", "plies": ply}
    outcome["final_value"] = value(state)
    outcome["final_genus"] = state.genus
    return records, outcome


def emit_trace(records: list[dict], path: str) -> None:
    """JSON-lines trace, one record per line, stable field order."""
    fields = ["ply", "mover", "mark", "reply", "value", "genus", "potential", "canonical_key"]
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps({k: rec[k] for k in fields}) + "\n")


def read_trace(path: str) -> list[dict]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(json.loads(line))
    return out
