"""Differential testing of the polynomial deciders against the exhaustive
game oracle, over the exhaustive small-instance enumeration.

Besides the central zero-mismatch check, the runner keeps a ledger of
instances where the loose ladder readings (future-good entry without an
empty standing set; surplus pools spanning bad candidates; destructive bar
at a tie) disagree with the implemented deciders: those are exactly the
places where the implemented ladders intentionally deviate, and the oracle
arbitrates.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass, field

from . import kernel
from .decider import (
    decide_online_control_cases,
    decide_with_loose,
)
from .enumeration import EnumerationBounds, enumerate_instances
from .errors import SizeLimitError
from .game import solve_forced_win
from .model import ControlInstance, is_constructive
from .serialize import store_instance


@dataclass(frozen=True, slots=True)
class Mismatch:
    instance: ControlInstance
    decider: bool
    oracle: bool
    cases: tuple[tuple[str, bool, str], ...]


@dataclass(slots=True)
class LadderDiscrepancy:
    count: int = 0
    examples: list[ControlInstance] = field(default_factory=list)


@dataclass(slots=True)
class DiffReport:
    bounds: EnumerationBounds
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    guard_skipped: int = 0
    wall_time: float = 0.0
    discrepancies: dict[str, LadderDiscrepancy] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> dict:
        """Report content without the wall clock (reproducible part)."""
        return {
            "bounds": {
                "max_candidates": self.bounds.max_candidates,
                "max_voters": self.bounds.max_voters,
                "variants": list(self.bounds.variants),
            },
            "checked": self.checked,
            "guard_skipped": self.guard_skipped,
            "mismatches": [
                {
                    "instance": store_instance(mm.instance),
                    "decider": mm.decider,
                    "oracle": mm.oracle,
                    "cases": [list(row) for row in mm.cases],
                }
                for mm in self.mismatches
            ],
            "loose_ladder_disagreements": {
                site: d.count for site, d in sorted(self.discrepancies.items())
            },
        }

    def to_dict(self) -> dict:
        out = self.summary()
        out["wall_time_seconds"] = round(self.wall_time, 3)
        return out


def _discrepancy_site(instance: ControlInstance) -> str:
    _, cases = decide_online_control_cases(instance, validate=False)
    labels = {case for _, _, case in cases}
    kind = "constructive" if is_constructive(instance.variant) else "destructive"
    for label in ("no-good-cowinner", "surplus"):
        if label in labels:
            return f"{kind}:{label}"
    return f"{kind}:other"


def run_diff(
    bounds: EnumerationBounds,
    *,
    guard: int = 10**8,
    engine: str = "auto",
    collect_discrepancies: bool = True,
    max_examples: int = 5,
    progress: Callable[[int], None] | None = None,
) -> DiffReport:
    """Compare decide_online_control with solve_forced_win on every
    enumerated instance.  Oracle runs that exceed the guard are recorded and
    skipped, never fatal."""
    report = DiffReport(bounds=bounds)
    started = time.perf_counter()
    fast = engine != "pure"
    for instance in enumerate_instances(bounds):
        report.checked += 1
        if progress is not None and report.checked % 100000 == 0:
            progress(report.checked)
        m = len(instance.candidates)
        n = instance.num_voters
        estimate = 2
        for t in range(instance.current_index + 1, m):
            estimate *= 2 * (t + 1) ** n
        if estimate > guard:
            report.guard_skipped += 1
            continue
        if fast and kernel.supports(instance):
            oracle = kernel.solve_instance(instance)
        else:
            try:
                oracle = solve_forced_win(
                    instance, guard=guard, engine=engine, validate=False
                ).forced_win
            except SizeLimitError:
                report.guard_skipped += 1
                continue
        decider, loose = decide_with_loose(instance)
        if decider != oracle:
            _, cases = decide_online_control_cases(instance, validate=False)
            report.mismatches.append(
                Mismatch(instance=instance, decider=decider, oracle=oracle, cases=cases)
            )
        if collect_discrepancies and loose != decider:
            site = _discrepancy_site(instance)
            entry = report.discrepancies.setdefault(site, LadderDiscrepancy())
            entry.count += 1
            if len(entry.examples) < max_examples:
                entry.examples.append(instance)
    report.wall_time = time.perf_counter() - started
    return report
