"""Exact orientable genus of small graphs via rotation systems.

A rotation system (a cyclic order of incident darts at each vertex)
determines an embedding; tracing the face orbits and applying Euler's
formula ``V - E + F = 2 - 2g`` gives its genus.  The minimum over all
rotation systems is the graph's genus.  The sweep fixes one dart per
vertex, permutes the rest, and stops early once the lower bound from
edge counts and planarity is met.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import networkx as nx

from ..kernels import genus_sweep
from .graph import Graph, is_connected


class RotationBudgetError(RuntimeError):
    """Too many rotation systems for an exact sweep."""


@dataclass(frozen=True)
class GenusResult:
    genus: int
    systems_checked: int
    swept_all: bool
    lower_bound: int


def rotation_system_count(g: Graph) -> int:
    total = 1
    for v in range(g.n):
        total *= math.factorial(max(0, g.degree(v) - 1))
    return total


def _darts(g: Graph) -> tuple[list[int], list[list[int]], list[int]]:
    """Dart arrays: per-vertex out-dart lists and the reversal map."""
    degrees = [g.degree(v) for v in range(g.n)]
    vertex_darts: list[list[int]] = [[] for _ in range(g.n)]
    rev: list[int] = []
    for i, (u, v) in enumerate(g.edge_pairs()):
        d_uv, d_vu = 2 * i, 2 * i + 1
        vertex_darts[u].append(d_uv)
        vertex_darts[v].append(d_vu)
        rev.extend((d_vu, d_uv))
    return degrees, vertex_darts, rev


def is_planar(g: Graph) -> bool:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_pairs())
    return nx.check_planarity(h)[0]


def genus_lower_bound(g: Graph) -> int:
    """Euler-formula edge bound, raised to one for non-planar graphs."""
    if g.n >= 3:
        lb = max(0, -(-(g.edge_count() - 3 * g.n + 6) // 6))
    else:
        lb = 0
    if lb == 0 and not is_planar(g):
        lb = 1
    return lb


def genus_exact(g: Graph, max_systems: int = 10_000_000) -> GenusResult:
    """Exact genus by exhaustive rotation sweep with early stopping.

    Raises :class:`RotationBudgetError` when the rotation count exceeds
    ``max_systems`` and the lower bound was not reached first; callers
    with larger graphs must declare the genus in corpus metadata.
    """
    if not is_connected(g):
        raise ValueError("genus sweep needs a connected graph")
    if g.edge_count() == 0:
        return GenusResult(0, 0, True, 0)
    lb = genus_lower_bound(g)
    degrees, vertex_darts, rev = _darts(g)
    best, checked, swept_all = genus_sweep(degrees, vertex_darts, rev, lb, max_systems)
    if best <= lb:
        return GenusResult(best, checked, swept_all, lb)
    if not swept_all:
        raise RotationBudgetError(
            f"{rotation_system_count(g)} rotation systems exceed the budget {max_systems}"
        )
    return GenusResult(best, checked, swept_all, lb)


def embedding_exists(g: Graph, genus: int, max_systems: int = 10_000_000) -> bool:
    """Whether some rotation system embeds ``g`` with at most ``genus``
    handles (an upper-bound witness that stops at the first hit)."""
    if g.edge_count() == 0:
        return genus >= 0
    degrees, vertex_darts, rev = _darts(g)
    best, _, swept_all = genus_sweep(degrees, vertex_darts, rev, genus, max_systems)
    if best <= genus:
        return True
    if not swept_all:
        raise RotationBudgetError("budget exhausted before finding an embedding")
    return False
