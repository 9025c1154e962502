"""The conserved potential of game states, and nesting paths.

An edge on a segment is worth 3/2 when its label occurs nowhere else in
the state, 3/4 when it touches a same-labelled edge inside the segment,
and 1/2 otherwise.  A segment's potential is the edge sum minus 2 (a
trivial segment is worth -2), and the state potential combines burned
genus, value and the positive component potentials:

    p = 4*(g0 - g) - 3*value + sum of positive component potentials

All arithmetic is exact; denominators never exceed 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import Edge, GameState, value

GATHERS = "gathers"
SEPARATES = "separates"
NEITHER = "neither"


@dataclass(frozen=True)
class Segment:
    """A contiguous run of edges on one cycle.

    ``positions`` lists edge positions in path order.  ``closed`` marks a
    whole component (adjacency wraps around); an opened cycle passed as a
    path keeps ``closed=False`` so its two end edges do not touch.
    """

    cycle: int
    positions: tuple[int, ...]
    closed: bool = False

    @staticmethod
    def whole_cycle(state: GameState, ci: int) -> "Segment":
        return Segment(ci, tuple(range(len(state.cycles[ci]))), closed=True)

    def __len__(self) -> int:
        return len(self.positions)


def edge_potential(edge: Edge, segment: Segment, state: GameState) -> Fraction:
    """Potential of one edge within a segment of the state."""
    ci, pos = edge
    if ci != segment.cycle or pos not in segment.positions:
        raise ValueError(f"edge {edge} not on segment")
    label = state.label_of(edge)
    counts = state.label_counts()
    if counts[label] == 1:
        return Fraction(3, 2)
    idx = segment.positions.index(pos)
    neighbours = []
    if idx > 0:
        neighbours.append(segment.positions[idx - 1])
    if idx + 1 < len(segment.positions):
        neighbours.append(segment.positions[idx + 1])
    if segment.closed and len(segment.positions) > 1:
        if idx == 0:
            neighbours.append(segment.positions[-1])
        if idx == len(segment.positions) - 1:
            neighbours.append(segment.positions[0])
    if any(state.cycles[ci][p] == label for p in set(neighbours) - {pos}):
        return Fraction(3, 4)
    return Fraction(1, 2)


def segment_potential(segment: Optional[Segment], state: GameState) -> Fraction:
    """-2 plus the edge potentials; a trivial segment is worth -2."""
    total = Fraction(-2)
    if segment is None:
        return total
    for pos in segment.positions:
        total += edge_potential((segment.cycle, pos), segment, state)
    return total


def component_potential(state: GameState, ci: int) -> Fraction:
    return segment_potential(Segment.whole_cycle(state, ci), state)


def positive_component_sum(state: GameState) -> Fraction:
    total = Fraction(0)
    for ci in range(len(state.cycles)):
        p = component_potential(state, ci)
        if p > 0:
            total += p
    return total


def state_potential(state: GameState) -> Fraction:
    base = Fraction(4 * (state.initial_genus - state.genus) - 3 * value(state))
    return base + positive_component_sum(state)


def _cycle_matches_xtzt(cycle: tuple[int, ...], x: int, z: int) -> bool:
    """Whether the cycle reads (x, t, z, t) for some label t, up to
    rotation."""
    if len(cycle) != 4:
        return False
    for r in range(4):
        rot = cycle[r:] + cycle[:r]
        if rot[0] == x and rot[2] == z and rot[1] == rot[3] and rot[1] not in (x, z):
            return True
    return False


def is_nesting_path(segment: Segment, state: GameState, allow_pseudo: bool = False,
                    _visited: Optional[frozenset] = None) -> bool:
    """Whether the segment is a nesting path.

    Base case: a single edge whose label is uniquely appearing.  Recursive
    case: labels (x, y, z), none isolated, where x and z also sit on a
    cycle reading (x, t, z, t) and y's other edge lies on a cycle made of
    that edge plus a nesting path.

    ``allow_pseudo`` additionally accepts a three-edge run (x, m, x) whose
    outer label is isolated on its cycle — the stand-in used when a path
    plays the role of a uniquely appearing edge.
    """
    labels = [state.cycles[segment.cycle][p] for p in segment.positions]
    counts = state.label_counts()

    if len(labels) == 1:
        return counts[labels[0]] == 1

    if len(labels) != 3:
        return False

    if allow_pseudo and labels[0] == labels[2] and labels[0] != labels[1]:
        occurrences = [
            (ci, p)
            for ci, cyc in enumerate(state.cycles)
            for p, lab in enumerate(cyc)
            if lab == labels[0]
        ]
        if all(ci == segment.cycle for ci, _ in occurrences):
            return True

    x, y, z = labels
    if len({x, y, z}) != 3:
        return False
    # non-isolated: each label must occur on a second, different cycle
    for lab in (x, y, z):
        others = {ci for ci, cyc in enumerate(state.cycles) for l in cyc if l == lab}
        if others == {segment.cycle}:
            return False

    has_anchor = any(
        ci != segment.cycle and _cycle_matches_xtzt(cyc, x, z)
        for ci, cyc in enumerate(state.cycles)
    )
    if not has_anchor:
        return False

    visited = _visited or frozenset()
    for ci, cyc in enumerate(state.cycles):
        if ci == segment.cycle:
            continue
        for p, lab in enumerate(cyc):
            if lab != y or (ci, p) in visited:
                continue
            rest = tuple(q % len(cyc) for q in range(p + 1, p + len(cyc)))
            if not rest:
                continue
            inner = Segment(ci, rest)
            if is_nesting_path(inner, state, allow_pseudo, visited | {(ci, p)}):
                return True
    return False


def mark_relation(state: GameState, ci: int, v_pos: int, w_pos: int, labels: tuple[int, ...]) -> str:
    """Classify a vertex pair against one or two labels of its cycle.

    The pair *gathers* a label when all its edges sit on one of the two
    arcs; it *separates* two labels when each arc holds exactly one of
    them.
    """
    from .core import split_cycle

    cyc = state.cycles[ci]
    for lab in labels:
        if lab not in cyc:
            raise ValueError(f"label {lab} absent from cycle {ci}")
    p, q = split_cycle(cyc, v_pos, w_pos)
    side_p = {cyc[i] for i in p}
    side_q = {cyc[i] for i in q}

    def gathered(lab: int) -> bool:
        return not (lab in side_p and lab in side_q)

    if len(labels) == 1:
        return GATHERS if gathered(labels[0]) else NEITHER
    a, b = labels
    if gathered(a) and gathered(b):
        a_side = a in side_p
        b_side = b in side_p
        if a_side != b_side:
            return SEPARATES
        return GATHERS
    if gathered(a) or gathered(b):
        return GATHERS
    return NEITHER
