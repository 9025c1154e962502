"""Cop-number versus genus bound checks."""

from __future__ import annotations

from dataclasses import dataclass, field


def improved_bound(genus: int) -> int:
    """floor(4g/3 + 10/3)."""
    return (4 * genus + 10) // 3


def classical_bound(genus: int) -> int:
    """floor(3g/2) + 3."""
    return 3 * genus // 2 + 3


@dataclass
class BoundReport:
    name: str
    genus: int
    cop_number: int
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "genus": self.genus,
            "cop_number": self.cop_number,
            "checks": dict(self.checks),
            "ok": self.ok,
        }


def check_bounds(name: str, genus: int, cop: int) -> BoundReport:
    """Assert the genus-based cop bounds for one graph.

    A failure here would contradict a proven bound, so callers surface
    it loudly instead of tolerating it.
    """
    report = BoundReport(name=name, genus=genus, cop_number=cop)
    report.checks[f"cop <= {improved_bound(genus)} (4g/3 + 10/3)"] = cop <= improved_bound(genus)
    report.checks[f"cop <= {classical_bound(genus)} (3g/2 + 3)"] = cop <= classical_bound(genus)
    if genus <= 1:
        report.checks["cop <= 3 (low genus)"] = cop <= 3
    return report
