"""Game states and moves of the combinatorial boundary-cutting game.

A game state is a finite collection of directed, edge-labelled cycles
(the boundary cycles) together with a genus counter.  Labels are plain
integers drawn from a per-state monotone allocator; a state is *proper*
when no label occurs on more than two edges.  One full turn consists of
the marker choosing two points (vertices of the cycles, or up to two
fresh "dummy" points) and the cutter answering with one of four replies
that reassemble the cycles around the marked points.

Everything in this module is immutable; states and replies can be shared
freely between threads or search branches.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Literal, Optional

# A vertex is addressed positionally: (cycle_index, i) is the vertex at the
# tail of edge i, i.e. between edges i-1 and i of that cycle.  A cycle of
# length L has exactly L vertices.
Vertex = tuple[int, int]
Edge = tuple[int, int]  # same addressing: (cycle_index, edge_position)

ReplyKind = Literal["A", "B", "C", "D"]

UNIQUELY_APPEARING = "uniquely_appearing"
ISOLATED_TWICE = "isolated_twice"
SPLIT_ACROSS_CYCLES = "split_across_cycles"
ABSENT = "absent"


@dataclass(frozen=True)
class GameState:
    """Immutable game state: labelled directed cycles plus a genus counter.

    ``cycles`` holds one tuple of integer labels per boundary cycle, read
    in cycle orientation.  ``genus`` may only decrease during play and
    never exceeds ``initial_genus``.  ``next_label`` is the fresh-label
    allocator; every label present is strictly below it.
    """

    cycles: tuple[tuple[int, ...], ...]
    genus: int
    initial_genus: int
    next_label: int = 0

    def edges(self) -> Iterator[Edge]:
        for ci, cyc in enumerate(self.cycles):
            for pos in range(len(cyc)):
                yield (ci, pos)

    def vertices(self) -> Iterator[Vertex]:
        return self.edges()

    def label_of(self, edge: Edge) -> int:
        return self.cycles[edge[0]][edge[1]]

    def edge_count(self) -> int:
        return sum(len(c) for c in self.cycles)

    def label_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for cyc in self.cycles:
            for lab in cyc:
                counts[lab] = counts.get(lab, 0) + 1
        return counts


def empty_state(g0: int) -> GameState:
    """The starting state: no cycles, genus counter at ``g0``."""
    return GameState(cycles=(), genus=g0, initial_genus=g0, next_label=0)


def value(state: GameState) -> int:
    """Number of distinct labels present in the state."""
    return len({lab for cyc in state.cycles for lab in cyc})


def label_status(state: GameState, label: int) -> str:
    """Classify how a label occurs: on one edge, twice on one cycle,
    on two different cycles, or not at all."""
    hits = [ci for ci, cyc in enumerate(state.cycles) for lab in cyc if lab == label]
    if not hits:
        return ABSENT
    if len(hits) == 1:
        return UNIQUELY_APPEARING
    return ISOLATED_TWICE if hits[0] == hits[1] else SPLIT_ACROSS_CYCLES


def uniquely_appearing_labels(state: GameState) -> set[int]:
    counts = state.label_counts()
    return {lab for lab, n in counts.items() if n == 1}


@dataclass(frozen=True)
class MarkedState:
    """A game state with the marker's chosen pair of points.

    ``v`` and ``w`` are vertex references or ``None`` for a dummy point.
    ``same_dummy`` distinguishes one dummy chosen twice from two distinct
    dummies; it may only be set when both points are dummies.
    """

    state: GameState
    v: Optional[Vertex]
    w: Optional[Vertex]
    same_dummy: bool = False

    def __post_init__(self) -> None:
        if self.same_dummy and not (self.v is None and self.w is None):
            raise ValueError("same_dummy requires both marks to be dummies")
        for p in (self.v, self.w):
            if p is not None:
                ci, pos = p
                if not (0 <= ci < len(self.state.cycles)):
                    raise ValueError(f"mark references missing cycle {ci}")
                if not (0 <= pos < len(self.state.cycles[ci])):
                    raise ValueError(f"mark references missing vertex {p}")

    def same_component(self) -> bool:
        if self.v is None and self.w is None:
            return self.same_dummy
        if self.v is None or self.w is None:
            return False
        return self.v[0] == self.w[0]


def enumerate_marker_moves(state: GameState) -> list[MarkedState]:
    """All unordered marker choices: vertex pairs (repeats allowed), one
    vertex plus a dummy, the same dummy twice, and two distinct dummies."""
    verts = list(state.vertices())
    moves = [MarkedState(state, v, w) for v, w in itertools.combinations_with_replacement(verts, 2)]
    moves.extend(MarkedState(state, v, None) for v in verts)
    moves.append(MarkedState(state, None, None, same_dummy=True))
    moves.append(MarkedState(state, None, None, same_dummy=False))
    return moves


def split_cycle(cycle: tuple[int, ...], v_pos: int, w_pos: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a cycle at two of its vertices into the arc positions.

    Returns ``(P, P_prime)`` as tuples of edge positions: ``P`` runs from
    ``v`` forward to ``w``, ``P_prime`` from ``w`` back round to ``v``.
    When ``v_pos == w_pos`` the first arc is the whole cycle opened at
    that vertex and the second is trivial.
    """
    n = len(cycle)
    if not (0 <= v_pos < n and 0 <= w_pos < n):
        raise ValueError("vertex not on cycle")
    if v_pos == w_pos:
        return tuple((v_pos + i) % n for i in range(n)), ()
    p = tuple(i % n for i in range(v_pos, v_pos + (w_pos - v_pos) % n))
    q = tuple(i % n for i in range(w_pos, w_pos + (v_pos - w_pos) % n))
    return p, q


@dataclass(frozen=True)
class CutterReply:
    """One cutter reply and the state it produces.

    Provenance fields record how the new state's cycles were assembled so
    that callers can trace every surviving edge:

    * ``source_cycles``: the marked cycle index (and the second one for
      kind D); dummies contribute ``None``.
    * ``path`` / ``path_prime``: edge positions of the two split arcs on
      their source cycles.
    * ``derived``: indices of the freshly assembled cycles in ``next``
      (``C_hat_1`` and/or ``C_hat_2``, or the amalgam for kind D).
    * ``edge_map``: pairs ``(old_edge, new_edge)`` for every edge of the
      previous state that survives into ``next``.
    * ``new_edges``: positions of the new edge(s) carrying ``new_label``.
    """

    kind: ReplyKind
    new_label: int
    next: GameState
    source_cycles: tuple[Optional[int], ...]
    path: tuple[int, ...]
    path_prime: tuple[int, ...]
    derived: tuple[int, ...]
    edge_map: tuple[tuple[Edge, Edge], ...]
    new_edges: tuple[Edge, ...]
    bar_genus: Optional[int] = None
    bar_components: Optional[tuple[int, ...]] = None

    def edge_map_dict(self) -> dict[Edge, Edge]:
        return dict(self.edge_map)

    def cycle_map(self) -> dict[int, int]:
        """Where each surviving old cycle index landed in ``next``."""
        out: dict[int, int] = {}
        for (oci, _), (nci, _) in self.edge_map:
            out.setdefault(oci, nci)
        return out


def _surviving_indices(n_cycles: int, removed: tuple[int, ...]) -> list[int]:
    return [ci for ci in range(n_cycles) if ci not in removed]


def _assemble(
    state: GameState,
    kind: ReplyKind,
    removed: tuple[int, ...],
    new_cycles: list[list[tuple[Optional[Edge], int]]],
    new_genus: int,
    marked: MarkedState,
    path: tuple[int, ...],
    path_prime: tuple[int, ...],
    kept_components: Optional[tuple[int, ...]] = None,
    bar_genus: Optional[int] = None,
) -> CutterReply:
    """Build the next state plus provenance.  ``new_cycles`` lists, per
    derived cycle, (source edge or None for a fresh edge, label)."""
    keep = _surviving_indices(len(state.cycles), removed)
    if kept_components is not None:
        keep = [ci for ci in keep if ci in kept_components]
    cycles: list[tuple[int, ...]] = [state.cycles[ci] for ci in keep]
    edge_map: list[tuple[Edge, Edge]] = []
    for nci, oci in enumerate(keep):
        edge_map.extend(((oci, p), (nci, p)) for p in range(len(state.cycles[oci])))
    derived = []
    new_edges: list[Edge] = []
    for spec in new_cycles:
        nci = len(cycles)
        derived.append(nci)
        cycles.append(tuple(lab for _, lab in spec))
        for pos, (src, _) in enumerate(spec):
            if src is None:
                new_edges.append((nci, pos))
            else:
                edge_map.append((src, (nci, pos)))
    next_state = GameState(
        cycles=tuple(cycles),
        genus=new_genus,
        initial_genus=state.initial_genus,
        next_label=state.next_label + 1,
    )
    return CutterReply(
        kind=kind,
        new_label=state.next_label,
        next=next_state,
        source_cycles=tuple(p[0] if p is not None else None for p in (marked.v, marked.w)),
        path=path,
        path_prime=path_prime,
        derived=tuple(derived),
        edge_map=tuple(edge_map),
        new_edges=tuple(new_edges),
        bar_genus=bar_genus,
        bar_components=kept_components,
    )


def _component_subsets(indices: list[int]) -> Iterator[tuple[int, ...]]:
    for r in range(len(indices) + 1):
        yield from itertools.combinations(indices, r)


def cutter_replies(marked: MarkedState, unrestricted: bool = False) -> list[CutterReply]:
    """All cutter replies to a marked state.

    With the restricted convention (the default) the untouched cycles are
    kept in full and the genus counter is left alone for kinds B and C.
    ``unrestricted=True`` additionally generates the generalized variants:
    any union of untouched components may be kept, and kinds B and C may
    lower the genus counter to any value.
    """
    state = marked.state
    label = state.next_label

    if marked.same_component():
        if marked.v is None:  # one dummy marked twice: both arcs trivial
            ci: Optional[int] = None
            path: tuple[int, ...] = ()
            path_prime: tuple[int, ...] = ()
        else:
            ci = marked.v[0]
            path, path_prime = split_cycle(state.cycles[ci], marked.v[1], marked.w[1])
        removed = () if ci is None else (ci,)
        src = lambda p: None if ci is None else state.cycles[ci][p]  # noqa: E731
        c_hat_1 = [((ci, p), src(p)) for p in path] + [(None, label)]
        c_hat_2 = [((ci, p), src(p)) for p in path_prime] + [(None, label)]
        survivors = _surviving_indices(len(state.cycles), removed)

        replies: list[CutterReply] = []

        def emit(kind: ReplyKind, parts: list[list], genus: int, kept=None, bar_genus=None) -> None:
            replies.append(
                _assemble(state, kind, removed, parts, genus, marked, path, path_prime, kept, bar_genus)
            )

        if unrestricted:
            for kept in _component_subsets(survivors):
                if state.genus >= 1:
                    emit("A", [c_hat_1, c_hat_2], state.genus - 1, kept)
                for bar_g in range(state.genus + 1):
                    emit("B", [c_hat_1], bar_g, kept, bar_g)
                    emit("C", [c_hat_2], bar_g, kept, bar_g)
        else:
            if state.genus >= 1:
                emit("A", [c_hat_1, c_hat_2], state.genus - 1)
            emit("B", [c_hat_1], state.genus)
            emit("C", [c_hat_2], state.genus)
        return replies

    # Different components (a vertex may be a dummy, or both are distinct
    # dummies): the cutter has no choice, the two cycles amalgamate.
    removed_list: list[int] = []
    if marked.v is not None:
        cv = marked.v[0]
        path, _ = split_cycle(state.cycles[cv], marked.v[1], marked.v[1])
        removed_list.append(cv)
        p_edges = [((cv, p), state.cycles[cv][p]) for p in path]
    else:
        path = ()
        p_edges = []
    if marked.w is not None:
        cw = marked.w[0]
        path_prime, _ = split_cycle(state.cycles[cw], marked.w[1], marked.w[1])
        removed_list.append(cw)
        q_edges = [((cw, p), state.cycles[cw][p]) for p in path_prime]
    else:
        path_prime = ()
        q_edges = []
    amalgam = p_edges + [(None, label)] + q_edges + [(None, label)]
    return [
        _assemble(state, "D", tuple(removed_list), [amalgam], state.genus, marked, path, path_prime)
    ]


@dataclass(frozen=True)
class Violation:
    rule: str
    detail: str


def validate(state: GameState) -> Optional[Violation]:
    """Check properness, cycle well-formedness, label-allocator consistency
    and the genus range.  Returns the first violation found, else None."""
    for ci, cyc in enumerate(state.cycles):
        if len(cyc) == 0:
            return Violation("cycle", f"cycle {ci} is empty")
    counts = state.label_counts()
    for lab, n in counts.items():
        if n > 2:
            return Violation("properness", f"label {lab} appears on {n} edges")
        if lab >= state.next_label or lab < 0:
            return Violation("labels", f"label {lab} outside allocator range")
    if not (0 <= state.genus <= state.initial_genus):
        return Violation("genus range", f"genus {state.genus} not in [0, {state.initial_genus}]")
    return None
