"""Benchmark: compiled search kernel vs the pure-Python twin vs the
reference solver, on fixed workloads.

Usage: python benchmarks/bench_kernel.py [--quick]
"""

import argparse
import time

from seqcontrol import kernel
from seqcontrol.enumeration import EnumerationBounds, enumerate_instances
from seqcontrol.game import GameState, solve_forced_win

BACKENDS = ["compiled", "pure-python"]


def have_backend(name: str) -> bool:
    if name == "pure-python":
        return True
    try:
        from seqcontrol import _kernel  # noqa: F401
    except ImportError:
        return False
    return True


def sweep_workload(max_cands: int, max_voters: int):
    return list(enumerate_instances(EnumerationBounds(max_cands, max_voters)))


def deep_workload(count: int):
    """Full games from the first reveal, three voters, mixed roles and
    budgets: these force wide universe verification instead of an early
    cutoff."""
    from seqcontrol.model import ControlInstance

    cands = ("c1", "c2", "c3", "c4")
    out = []
    for good_size in (1, 2, 3):
        for budget in (1, 2, 3):
            good = cands[-good_size:]
            rest = cands[: len(cands) - good_size]
            out.append(
                ControlInstance(
                    variant="CCDC",
                    candidates=cands,
                    num_voters=3,
                    presentation=cands,
                    current_index=0,
                    budget=budget,
                    sigma=good + rest,
                    d=good[-1],
                    decisions=(),
                    votes=(("c1",), ("c1",), ("c1",)),
                )
            )
            if len(out) == count:
                return out
    return out


def time_backend(name: str, states) -> float:
    start = time.perf_counter()
    for state in states:
        kernel.solve_with(name, state)
    return time.perf_counter() - start


def time_reference(states) -> float:
    start = time.perf_counter()
    for state in states:
        solve_forced_win(state, engine="pure", validate=False)
    return time.perf_counter() - start


def run(quick: bool) -> None:
    print(f"active backend at import: {kernel.BACKEND}")
    workloads = {
        "breadth (every instance, 3 candidates / 2 voters)": sweep_workload(
            3, 1 if quick else 2
        ),
        "depth (full games, 4 candidates / 3 voters)": deep_workload(
            4 if quick else 12
        ),
    }
    for label, instances in workloads.items():
        states = [GameState(inst) for inst in instances]
        print(f"\n{label}: {len(states)} solves")
        times = {}
        for backend in BACKENDS:
            if not have_backend(backend):
                print(f"  {backend:>12}: not built, skipped")
                continue
            times[backend] = time_backend(backend, states)
            print(f"  {backend:>12}: {times[backend]:8.3f}s")
        reference = time_reference(states)
        print(f"  {'reference':>12}: {reference:8.3f}s  (full-featured pure solver)")
        if "compiled" in times and "pure-python" in times:
            print(
                f"  compiled speedup: {times['pure-python'] / times['compiled']:.1f}x "
                f"over pure twin, {reference / times['compiled']:.1f}x over reference"
            )


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true")
    run(parser.parse_args().quick)
