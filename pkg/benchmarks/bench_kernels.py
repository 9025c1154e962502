"""Benchmark: compiled kernels against the pure-Python fallbacks.

Runs the rotation-system genus sweep and the pursuit attractor on fixed
inputs with both backends and prints a comparison table.  The attractor
rows time the fixpoint iteration alone, on a prebuilt transition graph.

    python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import itertools
import time

from cutgame import _kernels_py
from cutgame.graphs.genus import _darts
from cutgame.graphs.graph import complete_bipartite, complete_graph, petersen_graph, toroidal_grid

try:
    from cutgame import _kernels as _compiled
except ImportError:
    _compiled = None


def _time(thunk, repeat: int = 3) -> tuple[float, object]:
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = thunk()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_genus() -> list[tuple[str, float, float]]:
    rows = []
    cases = [
        ("genus: K5 full sweep (7776 systems)", complete_graph(5), -1, 10**8),
        ("genus: K33 full sweep (64)", complete_bipartite(3, 3), -1, 10**8),
        ("genus: petersen full sweep (1024)", petersen_graph(), -1, 10**8),
        ("genus: torus 3x3, stop at genus 1", toroidal_grid(3, 3), 1, 10**7),
    ]
    for name, g, lb, budget in cases:
        degrees, vd, rev = _darts(g)
        t_py, r_py = _time(lambda: _kernels_py.genus_sweep(degrees, vd, rev, lb, budget), repeat=1)
        if _compiled is not None:
            t_c, r_c = _time(lambda: _compiled.genus_sweep(degrees, vd, rev, lb, budget), repeat=1)
            assert r_py == r_c, (name, r_py, r_c)
        else:
            t_c = float("nan")
        rows.append((name, t_py, t_c))
    return rows


def _pursuit_graph(g, k: int):
    """The AND/OR transition structure of the k-cop pursuit game."""
    multisets = list(itertools.combinations_with_replacement(range(g.n), k))
    index = {}
    positions = []
    for cops in multisets:
        for r in range(g.n):
            for side in (0, 1):
                index[(cops, r, side)] = len(positions)
                positions.append((cops, r, side))
    kinds = bytearray(len(positions))
    wins = bytearray(len(positions))
    indptr = [0]
    succs: list[int] = []
    for i, (cops, r, side) in enumerate(positions):
        kinds[i] = side
        if r in cops:
            wins[i] = 1
            indptr.append(len(succs))
            continue
        if side == 0:
            choices = [tuple(g.neighbours(c)) + (c,) for c in cops]
            for mv in sorted({tuple(sorted(m)) for m in itertools.product(*choices)}):
                succs.append(index[(mv, r, 1)])
        else:
            for r2 in tuple(g.neighbours(r)) + (r,):
                succs.append(index[(cops, r2, 0)])
        indptr.append(len(succs))
    return bytes(kinds), indptr, succs, wins


def bench_attractor() -> list[tuple[str, float, float]]:
    rows = []
    for name, g, k in [
        ("attractor: petersen, 3 cops", petersen_graph(), 3),
        ("attractor: torus 4x4, 2 cops", toroidal_grid(4, 4), 2),
        ("attractor: torus 4x4, 3 cops", toroidal_grid(4, 4), 3),
    ]:
        kinds, indptr, succs, wins = _pursuit_graph(g, k)
        t_py, w_py = _time(lambda: _kernels_py.attractor(kinds, indptr, succs, bytearray(wins)))
        if _compiled is not None:
            t_c, w_c = _time(lambda: _compiled.attractor(kinds, indptr, succs, bytearray(wins)))
            assert bytes(w_py) == bytes(w_c), name
        else:
            t_c = float("nan")
        rows.append((f"{name} ({len(kinds)} positions)", t_py, t_c))
    return rows


def main() -> None:
    print(f"compiled backend available: {_compiled is not None}")
    print(f"{'case':<48}{'python':>11}{'cython':>11}{'speedup':>9}")
    for name, t_py, t_c in bench_genus() + bench_attractor():
        ratio = t_py / t_c if t_c and t_c == t_c else float("nan")
        print(f"{name:<48}{t_py*1000:>9.1f}ms{t_c*1000:>9.1f}ms{ratio:>8.1f}x")


if __name__ == "__main__":
    main()
