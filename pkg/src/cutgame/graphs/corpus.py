"""Corpus handling: graph6 files with JSON sidecar metadata.

A corpus directory holds ``*.g6`` files, one graph6 line per graph.  An
optional sidecar ``<stem>.json`` carries a list of per-line objects
``{"name", "declared_genus", "expected_cop_number"}``.  Graphs whose
rotation count exceeds the sweep budget must declare their genus.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Optional

from .bounds import check_bounds
from .genus import genus_exact, rotation_system_count
from .graph import Graph
from .graph6 import emit_graph6, parse_graph6
from .pursuit import cop_number


@dataclass
class CorpusEntry:
    name: str
    graph: Graph
    declared_genus: Optional[int] = None
    expected_cop_number: Optional[int] = None


def load_corpus(directory: str) -> list[CorpusEntry]:
    entries: list[CorpusEntry] = []
    for fname in sorted(os.listdir(directory)):
        if not fname.endswith(".g6"):
            continue
        stem = fname[: -len(".g6")]
        with open(os.path.join(directory, fname), "r", encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
        meta = [{} for _ in lines]
        sidecar = os.path.join(directory, stem + ".json")
        if os.path.exists(sidecar):
            with open(sidecar, "r", encoding="utf-8") as fh:
                meta_list = json.load(fh)
            for i, m in enumerate(meta_list[: len(lines)]):
                meta[i] = m
        for i, line in enumerate(lines):
            m = meta[i]
            entries.append(
                CorpusEntry(
                    name=m.get("name", f"{stem}[{i}]"),
                    graph=parse_graph6(line),
                    declared_genus=m.get("declared_genus"),
                    expected_cop_number=m.get("expected_cop_number"),
                )
            )
    return entries


def write_corpus(directory: str, entries: list[CorpusEntry], stem: str = "corpus") -> None:
    os.makedirs(directory, exist_ok=True)
    with open(os.path.join(directory, stem + ".g6"), "w", encoding="utf-8") as fh:
        for e in entries:
            fh.write(emit_graph6(e.graph) + "\n")
    meta = [
        {
            "name": e.name,
            "declared_genus": e.declared_genus,
            "expected_cop_number": e.expected_cop_number,
        }
        for e in entries
    ]
    with open(os.path.join(directory, stem + ".json"), "w", encoding="utf-8") as fh:
        json.dump(meta, fh, indent=1)


def bundled_corpus() -> list[CorpusEntry]:
    """The corpus shipped with the package: complete graphs, cycles,
    paths, the Petersen graph, K33, a toroidal grid and a wheel."""
    from .graph import (
        complete_bipartite,
        complete_graph,
        cycle_graph,
        path_graph,
        petersen_graph,
        toroidal_grid,
    )

    entries = [
        CorpusEntry("K2", complete_graph(2), 0, 1),
        CorpusEntry("K3", complete_graph(3), 0, 1),
        CorpusEntry("K4", complete_graph(4), 0, 1),
        CorpusEntry("K5", complete_graph(5), 1, 1),
        CorpusEntry("K33", complete_bipartite(3, 3), 1, 2),
        CorpusEntry("C4", cycle_graph(4), 0, 2),
        CorpusEntry("C5", cycle_graph(5), 0, 2),
        CorpusEntry("C6", cycle_graph(6), 0, 2),
        CorpusEntry("C7", cycle_graph(7), 0, 2),
        CorpusEntry("C8", cycle_graph(8), 0, 2),
        CorpusEntry("P5", path_graph(5), 0, 1),
        CorpusEntry("P10", path_graph(10), 0, 1),
        CorpusEntry("star6", Graph.from_edges(7, [(0, i) for i in range(1, 7)]), 0, 1),
        CorpusEntry("petersen", petersen_graph(), 1, 3),
        CorpusEntry("torus33", toroidal_grid(3, 3), 1, 2),
        CorpusEntry(
            "wheel6",
            Graph.from_edges(7, [(i, (i % 6) + 1) for i in range(1, 7)] + [(0, i) for i in range(1, 7)]),
            0,
            1,
        ),
        CorpusEntry("cube", Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)]), 0, 2),
    ]
    return entries


@dataclass
class CorpusReport:
    entries: list = field(default_factory=list)
    ok: bool = True

    def to_dict(self) -> dict:
        return {"ok": self.ok, "entries": self.entries}


def check_corpus(
    entries: list[CorpusEntry],
    k_max: int = 4,
    max_systems: int = 2_000_000,
    max_positions: int = 5_000_000,
) -> CorpusReport:
    """Run the cop and genus oracles over a corpus and check every bound.

    The genus is computed exactly when the rotation sweep fits the
    budget and cross-checked against any declared value; over-budget
    graphs must declare theirs (the report marks them ``declared``).
    """
    report = CorpusReport()
    for entry in entries:
        item: dict = {"name": entry.name, "n": entry.graph.n, "edges": entry.graph.edge_count()}
        try:
            cop = cop_number(entry.graph, k_max, max_positions)
        except Exception as exc:
            item["error"] = f"cop oracle failed: {exc}"
            report.ok = False
            report.entries.append(item)
            continue
        item["cop_number"] = cop
        if entry.expected_cop_number is not None and cop != entry.expected_cop_number:
            item["error"] = f"cop oracle found {cop}, metadata says {entry.expected_cop_number}"
            report.ok = False
            report.entries.append(item)
            continue
        if rotation_system_count(entry.graph) <= max_systems:
            genus = genus_exact(entry.graph, max_systems).genus
            item["genus"] = genus
            item["genus_source"] = "exact"
            if entry.declared_genus is not None and genus != entry.declared_genus:
                item["error"] = f"genus oracle found {genus}, metadata says {entry.declared_genus}"
                report.ok = False
                report.entries.append(item)
                continue
        elif entry.declared_genus is not None:
            genus = entry.declared_genus
            item["genus"] = genus
            item["genus_source"] = "declared"
        else:
            item["error"] = "rotation budget exceeded and no declared genus"
            report.ok = False
            report.entries.append(item)
            continue
        bounds = check_bounds(entry.name, genus, cop)
        item["bounds"] = bounds.to_dict()
        if not bounds.ok:
            report.ok = False
        report.entries.append(item)
    return report
