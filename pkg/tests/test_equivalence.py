import random

import pytest

from cutgame.core import GameState, MarkedState, cutter_replies, empty_state, enumerate_marker_moves
from cutgame.equivalence import (
    History,
    canonical_key,
    contract_edge,
    equivalence_witness,
    equivalent,
    legal_replies,
    precedes,
    reductions,
    reply_loses_label,
    start_history,
)

from fuzz import random_marked, random_state


def test_contract_examples():
    seed = GameState(((0, 1, 0, 2),), 1, 1, 3)
    assert contract_edge(seed, (0, 1)).cycles == ((0, 0, 2),)
    loop = GameState(((0,),), 0, 0, 1)
    assert contract_edge(loop, (0, 0)).cycles == ()
    two = GameState(((0, 1),), 0, 0, 2)
    assert contract_edge(two, (0, 0)).cycles == ((1,),)
    with pytest.raises(ValueError):
        contract_edge(two, (5, 0))


def test_canonical_key_examples():
    a = GameState(((0, 1),), 3, 5, 2)
    b = GameState(((7, 9),), 3, 9, 10)
    assert canonical_key(a) == canonical_key(b)
    rot1 = GameState(((0, 1, 0, 2),), 2, 2, 3)
    rot2 = GameState(((0, 2, 0, 1),), 2, 2, 3)
    assert canonical_key(rot1) == canonical_key(rot2)
    assert canonical_key(GameState(((0, 1),), 2, 5, 2)) != canonical_key(GameState(((0, 1),), 3, 5, 2))


def test_canonical_component_order_invariance():
    a = GameState(((0, 1), (2, 3, 2)), 1, 1, 4)
    b = GameState(((5, 9, 5), (7, 0)), 1, 1, 10)
    assert equivalent(a, b)


def test_orientation_not_identified():
    # (0,1,2) read forwards vs backwards: inequivalent labelled cycles
    a = GameState(((0, 1, 2), (0, 1, 2)), 0, 0, 3)
    b = GameState(((0, 1, 2), (2, 1, 0)), 0, 0, 3)
    assert not equivalent(a, b)


def test_witness_roundtrip_fuzz():
    rng = random.Random(11)
    for _ in range(10_000):
        state = random_state(rng)
        labels = sorted({l for c in state.cycles for l in c})
        perm = labels[:]
        rng.shuffle(perm)
        mapping = dict(zip(labels, perm))
        cycles = []
        for cyc in state.cycles:
            r = rng.randrange(len(cyc))
            cycles.append(tuple(mapping[l] for l in cyc[r:] + cyc[:r]))
        rng.shuffle(cycles)
        other = GameState(tuple(cycles), state.genus, state.initial_genus, state.next_label)
        assert canonical_key(state) == canonical_key(other)
        phi = equivalence_witness(state, other)
        assert phi is not None
        relabelled = GameState(
            tuple(tuple(phi[l] for l in cyc) for cyc in state.cycles),
            state.genus,
            state.initial_genus,
            state.next_label,
        )
        assert canonical_key(relabelled) == canonical_key(other)


def test_precedes_examples():
    seed = GameState(((0, 1, 0, 2), (3, 4)), 2, 3, 5)
    small = GameState(((0, 2),), 1, 3, 5)
    assert precedes(small, seed)
    assert precedes(seed, seed)
    bigger = GameState(((0, 1, 0, 2, 5),), 2, 3, 6)
    assert not precedes(bigger, seed)
    # a label bijection is allowed
    renamed = GameState(((9, 8),), 2, 3, 10)
    assert precedes(renamed, seed)


def test_precedes_genus_mask():
    a = GameState(((0, 1),), 2, 3, 2)
    b = GameState(((0, 1),), 1, 3, 2)
    assert precedes(b, a)  # reductions may lower the counter
    assert not precedes(a, b)


def test_precedes_against_bruteforce():
    rng = random.Random(13)
    for _ in range(300):
        earlier = random_state(rng, max_labels=3)
        candidate = random_state(rng, max_labels=3)
        if candidate.genus > earlier.genus:
            continue
        brute = any(
            equivalent(
                GameState(red, candidate.genus, earlier.initial_genus, earlier.next_label),
                GameState(candidate.cycles, candidate.genus, earlier.initial_genus, earlier.next_label),
            )
            for red in reductions(earlier)
        )
        assert precedes(candidate, earlier) == brute, (candidate, earlier)


def test_precedes_reflexive_transitive_fuzz():
    rng = random.Random(17)
    for _ in range(300):
        s0 = random_state(rng, max_labels=4)
        assert precedes(s0, s0)
        if s0.edge_count() == 0:
            continue
        edges = list(s0.edges())
        s1 = contract_edge(s0, rng.choice(edges))
        assert precedes(s1, s0)
        if s1.edge_count():
            s2 = contract_edge(s1, rng.choice(list(s1.edges())))
            assert precedes(s2, s1)
            assert precedes(s2, s0)  # transitivity along the chain


def test_kind_c_reduction_is_illegal():
    # gathering an isolated label with the label on the kept-away side
    state = GameState(((0, 1, 0, 2),), 1, 1, 3)
    hist = start_history(state)
    marked = MarkedState(state, (0, 3), (0, 0))  # arcs: (2) and (0,1,0)
    kinds = {r.kind for r in legal_replies(hist, marked)}
    assert "C" not in kinds  # dropping the lone short edge loses its label
    assert "B" not in kinds  # dropping the long arc loses two labels
    assert kinds == {"A"}


def test_legal_replies_history_filter():
    state = empty_state(0)
    hist = start_history(state)
    marked = MarkedState(state, None, None, same_dummy=True)
    kinds = {r.kind for r in legal_replies(hist, marked)}
    assert kinds == {"B", "C"}


def test_label_loss_equals_restricted_legality_exhaustive():
    # over every proper state with at most four edges: a reply is legal
    # against the current state alone iff it loses no label
    from fuzz import all_proper_states

    checked = 0
    for state in all_proper_states(4):
        hist = start_history(state)
        for marked in enumerate_marker_moves(state):
            legal = legal_replies(hist, marked)
            for reply in cutter_replies(marked):
                assert (reply in legal) == (not reply_loses_label(state, reply))
                checked += 1
    assert checked > 4_000


def test_label_loss_equals_restricted_legality_on_plays():
    rng = random.Random(19)
    for _ in range(120):
        state = empty_state(rng.randint(0, 2))
        hist = start_history(state)
        for _ply in range(6):
            marked = random_marked(rng, state)
            legal = legal_replies(hist, marked)
            for reply in cutter_replies(marked):
                expected = not reply_loses_label(state, reply)
                assert (reply in legal) == expected, (state, marked.v, marked.w, reply.kind)
            if not legal:
                break
            reply = rng.choice(legal)
            state = reply.next
            hist = hist.extended(state)


def test_legal_replies_respects_older_states():
    # an artificial history whose older state dominates the current one:
    # a reply recreating that older state (up to relabelling) is illegal
    # even though it loses nothing relative to the current state
    older = GameState(((0,), (1,)), 1, 1, 2)
    current = GameState(((0,),), 1, 1, 2)
    hist = History((older, current))
    marked = MarkedState(current, None, None, same_dummy=True)
    kinds = {r.kind for r in legal_replies(hist, marked)}
    # B/C would produce two loops with distinct labels, equivalent to the
    # older state; only the genus burn escapes the history
    assert "B" not in kinds and "C" not in kinds
    assert "A" in kinds


def test_history_keys():
    s0 = empty_state(1)
    h = start_history(s0)
    assert h.keys == (canonical_key(s0),)
    s1 = GameState(((0,),), 1, 1, 1)
    h2 = h.extended(s1)
    assert h2.current is s1
    assert len(h2.keys) == 2
