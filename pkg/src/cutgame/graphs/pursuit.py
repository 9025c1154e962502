"""Exact cop numbers by retrograde analysis of the pursuit game.

Positions are (cop multiset, robber vertex, side to move).  Capture
positions seed the win set; the attractor kernel then iterates: a
cop-move position is winning when some joint cop move wins, a
robber-move position when every robber option loses.  The cops choose
their placement first and move first, and may share vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..kernels import attractor
from .graph import Graph, is_connected


class StateSpaceError(RuntimeError):
    """The position space exceeds the configured budget."""


@dataclass(frozen=True)
class PursuitPosition:
    cops: tuple[int, ...]  # sorted multiset
    robber: int
    to_move: str  # "cops" | "robber"

    def captured(self) -> bool:
        return self.robber in self.cops


def _cop_multisets(n: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations_with_replacement(range(n), k))


def _joint_moves(g: Graph, cops: tuple[int, ...]) -> set[tuple[int, ...]]:
    choices = [tuple(g.neighbours(c)) + (c,) for c in cops]
    return {tuple(sorted(m)) for m in itertools.product(*choices)}


def cop_win_positions(g: Graph, k: int, max_positions: int = 5_000_000) -> tuple[dict, bytearray]:
    """Win set over all positions for ``k`` cops.  Returns the position
    index map and win flags."""
    multisets = _cop_multisets(g.n, k)
    total = len(multisets) * g.n * 2
    if total > max_positions:
        raise StateSpaceError(f"{total} positions exceed the budget {max_positions}")
    index: dict[tuple[tuple[int, ...], int, int], int] = {}
    positions: list[tuple[tuple[int, ...], int, int]] = []
    for cops in multisets:
        for r in range(g.n):
            for side in (0, 1):  # 0 = cops to move, 1 = robber to move
                index[(cops, r, side)] = len(positions)
                positions.append((cops, r, side))
    kinds = bytearray(len(positions))
    wins = bytearray(len(positions))
    indptr = [0]
    succs: list[int] = []
    for cops, r, side in positions:
        kinds[len(indptr) - 1] = 0 if side == 0 else 1
        if r in cops:
            wins[len(indptr) - 1] = 1
            indptr.append(len(succs))
            continue
        if side == 0:
            for mv in sorted(_joint_moves(g, cops)):
                succs.append(index[(mv, r, 1)])
        else:
            for r2 in tuple(g.neighbours(r)) + (r,):
                succs.append(index[(cops, r2, 0)])
        indptr.append(len(succs))
    wins = attractor(kinds, indptr, succs, wins)
    return index, wins


def cop_win(g: Graph, k: int, max_positions: int = 5_000_000) -> bool:
    """Whether ``k`` cops catch the robber on ``g`` under optimal play."""
    if k < 1:
        raise ValueError("at least one cop is required")
    if not is_connected(g):
        raise ValueError("the pursuit game needs a connected graph")
    index, wins = cop_win_positions(g, k, max_positions)
    for cops in _cop_multisets(g.n, k):
        if all(wins[index[(cops, r, 0)]] for r in range(g.n)):
            return True
    return False


def cop_number(g: Graph, k_max: int, max_positions: int = 5_000_000) -> int:
    """Least ``k <= k_max`` with a winning cop strategy."""
    for k in range(1, k_max + 1):
        if cop_win(g, k, max_positions):
            return k
    raise ValueError(f"no winning strategy with up to {k_max} cops")
