"""Exhaustive enumeration of validated snapshots up to size bounds.

Candidate names are canonicalized to c1..cm with the presentation order
fixed to that spelling, and vote profiles are produced as multisets (one
sorted representative per profile): every other instance is isomorphic to a
yielded one by renaming candidates or permuting voters, and all semantics
are invariant under both.  Role assignments are enumerated as the distinct
good/bad partitions reachable through sigma/d choices, each realized by one
canonical (sigma, d) pair.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .model import (
    ADDED,
    ADDITION_VARIANTS,
    DCDC_HT,
    DCDC_NHT,
    DELETED,
    IN,
    KEPT,
    NOT_ADDED,
    VARIANTS,
    ControlInstance,
    is_constructive,
)


@dataclass(frozen=True, slots=True)
class EnumerationBounds:
    max_candidates: int
    max_voters: int
    variants: tuple[str, ...] = VARIANTS

    def __post_init__(self):
        if self.max_candidates < 1:
            raise ValueError("bounds need at least one candidate")
        if self.max_voters < 0:
            raise ValueError("negative voter bound")
        for v in self.variants:
            if v not in VARIANTS:
                raise ValueError(f"unknown variant {v!r}")


def canonical_candidates(m: int) -> tuple[str, ...]:
    return tuple(f"c{i}" for i in range(1, m + 1))


def role_assignments(
    variant: str, candidates: Sequence[str]
) -> Iterator[tuple[tuple[str, ...], str]]:
    """One canonical (sigma, d) per distinct good/bad partition.

    Constructive: the good set is any nonempty subset (d is its
    sigma-minimum).  Destructive: the bad set is any nonempty subset (d is
    its sigma-maximum).
    """
    constructive = is_constructive(variant)
    for size in range(1, len(candidates) + 1):
        for chosen in itertools.combinations(candidates, size):
            rest = tuple(c for c in candidates if c not in chosen)
            if constructive:
                sigma = chosen + rest
                yield sigma, chosen[-1]
            else:
                sigma = rest + chosen
                yield sigma, chosen[0]


def _legal_histories(
    variant: str,
    decided: Sequence[str],
    bad: frozenset[str],
    spoilers: frozenset[str] | None,
    budget: int,
) -> Iterator[tuple[str, ...]]:
    if variant in ADDITION_VARIANTS:
        per_candidate = [
            (NOT_ADDED, ADDED) if c in spoilers else (IN,) for c in decided
        ]
        for flags in itertools.product(*per_candidate):
            if sum(1 for f in flags if f == ADDED) <= budget:
                yield flags
        return
    for flags in itertools.product((KEPT, DELETED), repeat=len(decided)):
        if sum(1 for f in flags if f == DELETED) > budget:
            continue
        if variant in (DCDC_HT, DCDC_NHT):
            deleted_bad = {
                c for c, f in zip(decided, flags) if f == DELETED and c in bad
            }
            if variant == DCDC_HT and deleted_bad:
                continue
            if variant == DCDC_NHT and bad and bad <= deleted_bad:
                continue
        yield flags


def _vote_profiles(prefix: Sequence[str], num_voters: int):
    orders = tuple(itertools.permutations(prefix))
    return itertools.combinations_with_replacement(orders, num_voters)


def enumerate_instances(bounds: EnumerationBounds) -> Iterator[ControlInstance]:
    """Yield every canonical validated snapshot within the bounds: all roster
    sizes, role partitions, spoiler subsets, budgets, presentation positions,
    legal histories, voter counts, and vote profiles."""
    for m in range(1, bounds.max_candidates + 1):
        candidates = canonical_candidates(m)
        for variant in bounds.variants:
            addition = variant in ADDITION_VARIANTS
            spoiler_sets: Iterator[frozenset[str] | None]
            if addition:
                spoiler_sets = (
                    frozenset(s)
                    for size in range(0, m + 1)
                    for s in itertools.combinations(candidates, size)
                )
            else:
                spoiler_sets = iter((None,))
            for spoilers in spoiler_sets:
                max_budget = len(spoilers) if addition else m
                for sigma, d in role_assignments(variant, candidates):
                    bad = frozenset(candidates) - frozenset(
                        sigma[: sigma.index(d) + (1 if is_constructive(variant) else 0)]
                    )
                    for budget in range(0, max_budget + 1):
                        for current_index in range(m):
                            decided = candidates[:current_index]
                            prefix = candidates[: current_index + 1]
                            for flags in _legal_histories(
                                variant, decided, bad, spoilers, budget
                            ):
                                for n in range(bounds.max_voters + 1):
                                    for profile in _vote_profiles(prefix, n):
                                        yield ControlInstance(
                                            variant=variant,
                                            candidates=candidates,
                                            num_voters=n,
                                            presentation=candidates,
                                            current_index=current_index,
                                            budget=budget,
                                            sigma=sigma,
                                            d=d,
                                            decisions=flags,
                                            votes=profile,
                                            spoilers=spoilers,
                                            system="plurality",
                                        )


def count_instances(bounds: EnumerationBounds) -> int:
    return sum(1 for _ in enumerate_instances(bounds))
