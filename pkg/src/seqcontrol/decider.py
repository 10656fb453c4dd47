"""Polynomial-time forced-win deciders for online plurality control.

The top level branches over the at most two legal decisions on the current
candidate; each branch leaves a pure situation (standing set, masked scores,
counts of unrevealed good/bad candidates, remaining budget) that the
constructive or destructive analysis settles directly.  The exhaustive
oracle in :mod:`seqcontrol.game` is the arbiter of record for every case of
these ladders; the differential harness checks the two agree on every small
instance.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from .errors import ContractError
from .model import (
    ACTION_TO_FLAG,
    ADDED,
    DCAC,
    DCDC_HT,
    DELETED,
    DELETION_VARIANTS,
    ControlInstance,
    RoleMap,
    check_valid,
    is_addition,
    is_constructive,
    legal_chair_actions,
    standing_from_flags,
)


@dataclass(frozen=True, slots=True)
class PureSituation:
    """The post-decision state the ladders analyze: the current candidate is
    no longer special.

    ``b`` counts unrevealed bad candidates the chair cannot freely keep out
    (all of them in deletion variants, the qualified ones in addition
    variants); ``g`` the corresponding unrevealed good candidates.  The
    ``*_spoiler`` counts track spoilers separately for addition variants.
    """

    variant: str
    num_voters: int
    roles: RoleMap
    standing: tuple[str, ...]
    scores: Mapping[str, int]
    b: int
    b_spoiler: int
    g: int
    g_spoiler: int
    k_rem: int

    @property
    def all_revealed(self) -> bool:
        return self.b + self.b_spoiler + self.g + self.g_spoiler == 0


@dataclass(frozen=True, slots=True)
class SurplusPool:
    """High-scoring standing good candidates whose first-place votes the
    universe must shed onto incoming good candidates."""

    members: tuple[str, ...]
    total: int
    absorbers: int


def pure_situation(instance: ControlInstance, action: str) -> PureSituation:
    """The situation left after taking ``action`` on the current candidate."""
    inst = instance
    flags = inst.decisions + (ACTION_TO_FLAG[action],)
    standing = standing_from_flags(inst.variant, inst.revealed, flags, inst.spoilers)
    sset = frozenset(standing)
    scores = dict.fromkeys(standing, 0)
    for vote in inst.votes:
        for c in vote:
            if c in sset:
                scores[c] += 1
                break
    deletion = inst.variant in DELETION_VARIANTS
    spent = DELETED if deletion else ADDED
    used = sum(1 for f in flags if f == spent)
    roles = inst.roles()
    b = b_spoiler = g = g_spoiler = 0
    spoilers = inst.spoilers or frozenset()
    for c in inst.unrevealed:
        bad = c in roles.bad
        spoiler = not deletion and c in spoilers
        if bad:
            if spoiler:
                b_spoiler += 1
            else:
                b += 1
        elif spoiler:
            g_spoiler += 1
        else:
            g += 1
    return PureSituation(
        variant=inst.variant,
        num_voters=inst.num_voters,
        roles=roles,
        standing=standing,
        scores=scores,
        b=b,
        b_spoiler=b_spoiler,
        g=g,
        g_spoiler=g_spoiler,
        k_rem=inst.budget - used,
    )


def _cowinners(sit: PureSituation) -> tuple[str, ...]:
    if not sit.standing:
        return ()
    top = max(sit.scores.values())
    return tuple(c for c in sit.standing if sit.scores[c] == top)


def _good_can_enter(sit: PureSituation) -> bool:
    """Can some unrevealed good candidate be made standing?"""
    if is_addition(sit.variant):
        return sit.g >= 1 or (sit.g_spoiler >= 1 and sit.k_rem >= 1)
    return sit.g >= 1


def _future_bads_excludable(sit: PureSituation) -> bool:
    if is_addition(sit.variant):
        return sit.b == 0
    return sit.b <= sit.k_rem


def surplus_pool(sit: PureSituation, threshold: int, spare: int) -> SurplusPool:
    members = tuple(
        c
        for c in sit.standing
        if c in sit.roles.good and sit.scores[c] >= threshold
    )
    total = sum(sit.scores[c] for c in members)
    return SurplusPool(members, total, len(members) + sit.g - spare)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _constructive_case(sit: PureSituation) -> tuple[bool, str]:
    good = sit.roles.good
    if sit.num_voters == 0:
        win = any(c in good for c in sit.standing) or _good_can_enter(sit)
        return win, "zero-voters"
    good_cowins = any(c in good for c in _cowinners(sit))
    if sit.all_revealed:
        return good_cowins, "all-revealed"
    if not good_cowins:
        # With a nonempty standing set some bad candidate holds the strict
        # maximum and the universe can freeze every score by burying all
        # later reveals, so entry of future goods only helps from scratch.
        win = (
            not sit.standing
            and _good_can_enter(sit)
            and _future_bads_excludable(sit)
        )
        return win, "no-good-cowinner"
    if is_addition(sit.variant):
        if sit.b > 0:
            return False, "bad-uncontainable"
        spare = 0
    else:
        if sit.b > sit.k_rem:
            return False, "bad-uncontainable"
        spare = sit.k_rem - sit.b
    bad_scores = [sit.scores[c] for c in sit.standing if c not in good]
    if not bad_scores:
        return True, "no-standing-bad"
    if spare >= sit.g:
        return True, "spare-covers-goods"
    bar = max(bad_scores)
    pool = surplus_pool(sit, bar, spare)
    return _ceil_div(pool.total, pool.absorbers) >= bar, "surplus"


def _destructive_case(sit: PureSituation) -> tuple[bool, str]:
    good = sit.roles.good
    ac = sit.variant == DCAC
    standing_bad = [c for c in sit.standing if c not in good]
    if sit.num_voters == 0:
        # Every final standing candidate co-wins with score zero.  Deletion
        # variants can never shed all bad candidates, so some bad one wins.
        if ac:
            return not standing_bad and sit.b == 0, "zero-voters"
        return False, "zero-voters"
    bad_cowins = any(c not in good for c in _cowinners(sit))
    if sit.all_revealed:
        return not bad_cowins, "all-revealed"
    if ac or sit.variant == DCDC_HT:
        feasible = sit.b == 0
    else:
        feasible = sit.b == 0 or (sit.k_rem >= sit.b and bool(standing_bad))
    if not feasible:
        return False, "future-bads-uncontainable"
    if not standing_bad:
        return True, "no-bad-stands"
    spare = 0 if ac else sit.k_rem - sit.b
    if spare >= sit.g:
        return not bad_cowins, "freeze"
    # A bad candidate tying the maximum is a co-winner, so a good one must
    # strictly beat the best bad score.
    threshold = max(sit.scores[c] for c in standing_bad) + 1
    pool = surplus_pool(sit, threshold, spare)
    if not pool.members:
        return False, "surplus"
    return _ceil_div(pool.total, pool.absorbers) >= threshold, "surplus"


def analyze_pure_constructive(sit: PureSituation, variant: str | None = None) -> bool:
    if variant is not None and variant != sit.variant:
        raise ContractError("situation was built for a different variant")
    if not is_constructive(sit.variant):
        raise ContractError(f"{sit.variant} is not a constructive variant")
    return _constructive_case(sit)[0]


def analyze_pure_destructive(sit: PureSituation, variant: str | None = None) -> bool:
    if variant is not None and variant != sit.variant:
        raise ContractError("situation was built for a different variant")
    if is_constructive(sit.variant):
        raise ContractError(f"{sit.variant} is not a destructive variant")
    return _destructive_case(sit)[0]


def _analyze(sit: PureSituation) -> tuple[bool, str]:
    if is_constructive(sit.variant):
        return _constructive_case(sit)
    return _destructive_case(sit)


def decide_online_control(
    instance: ControlInstance, *, validate: bool = True
) -> bool:
    """True iff some legal decision on the current candidate leaves a pure
    situation in which the chair has a forced win."""
    if validate:
        check_valid(instance)
    if instance.system != "plurality":
        raise ContractError(
            f"the polynomial deciders cover plurality only, not "
            f"{instance.system!r}"
        )
    return any(
        _analyze(pure_situation(instance, action))[0]
        for action in legal_chair_actions(instance)
    )


def decide_online_control_cases(
    instance: ControlInstance, *, validate: bool = True
) -> tuple[bool, tuple[tuple[str, bool, str], ...]]:
    """The decision plus, per legal action, the ladder case that settled it
    (used by the differential harness to name discriminating cases)."""
    if validate:
        check_valid(instance)
    if instance.system != "plurality":
        raise ContractError(
            f"the polynomial deciders cover plurality only, not "
            f"{instance.system!r}"
        )
    rows = []
    decision = False
    for action in legal_chair_actions(instance):
        win, case = _analyze(pure_situation(instance, action))
        rows.append((action, win, case))
        decision = decision or win
    return decision, tuple(rows)


def _loose_constructive_case(sit: PureSituation) -> tuple[bool, str]:
    """Unrestricted reading of the constructive ladder: future-good entry is
    allowed regardless of the standing set, and the surplus pool sums over
    every standing candidate at or above the bar, bad ones included.  Kept
    only so the differential harness can log where this looser ladder and
    the implemented one part ways; the oracle rejects this version."""
    good = sit.roles.good
    if sit.num_voters == 0:
        win = any(c in good for c in sit.standing) or _good_can_enter(sit)
        return win, "zero-voters"
    good_cowins = any(c in good for c in _cowinners(sit))
    if sit.all_revealed:
        return good_cowins, "all-revealed"
    if not good_cowins:
        win = _good_can_enter(sit) and _future_bads_excludable(sit)
        return win, "no-good-cowinner"
    if is_addition(sit.variant):
        if sit.b > 0:
            return False, "bad-uncontainable"
        spare = 0
    else:
        if sit.b > sit.k_rem:
            return False, "bad-uncontainable"
        spare = sit.k_rem - sit.b
    bad_scores = [sit.scores[c] for c in sit.standing if c not in good]
    if not bad_scores:
        return True, "no-standing-bad"
    if spare >= sit.g:
        return True, "spare-covers-goods"
    bar = max(bad_scores)
    members = [c for c in sit.standing if sit.scores[c] >= bar]
    total = sum(sit.scores[c] for c in members)
    absorbers = len(members) + sit.g - spare
    return _ceil_div(total, absorbers) >= bar, "surplus"


def _loose_destructive_case(sit: PureSituation) -> tuple[bool, str]:
    """Destructive analogue of the loose ladder: the bar stays at the best
    bad score (ties allowed) and the pool spans all standing candidates."""
    good = sit.roles.good
    ac = sit.variant == DCAC
    standing_bad = [c for c in sit.standing if c not in good]
    if sit.num_voters == 0:
        if ac:
            return not standing_bad and sit.b == 0, "zero-voters"
        return False, "zero-voters"
    bad_cowins = any(c not in good for c in _cowinners(sit))
    if sit.all_revealed:
        return not bad_cowins, "all-revealed"
    if ac or sit.variant == DCDC_HT:
        feasible = sit.b == 0
    else:
        feasible = sit.b == 0 or (sit.k_rem >= sit.b and bool(standing_bad))
    if not feasible:
        return False, "future-bads-uncontainable"
    if not standing_bad:
        return True, "no-bad-stands"
    spare = 0 if ac else sit.k_rem - sit.b
    if spare >= sit.g:
        return not bad_cowins, "freeze"
    bar = max(sit.scores[c] for c in standing_bad)
    members = [c for c in sit.standing if sit.scores[c] >= bar]
    total = sum(sit.scores[c] for c in members)
    absorbers = len(members) + sit.g - spare
    return _ceil_div(total, absorbers) >= bar, "surplus"


def decide_loose(instance: ControlInstance) -> bool:
    """Decision of the loose ladders (differential-harness logging only)."""
    loose = (
        _loose_constructive_case
        if is_constructive(instance.variant)
        else _loose_destructive_case
    )
    return any(
        loose(pure_situation(instance, action))[0]
        for action in legal_chair_actions(instance)
    )


def decide_with_loose(instance: ControlInstance) -> tuple[bool, bool]:
    """Strict and loose decisions in one pass, sharing the per-action pure
    situations (the differential harness's hot loop)."""
    constructive = is_constructive(instance.variant)
    strict_fn = _constructive_case if constructive else _destructive_case
    loose_fn = _loose_constructive_case if constructive else _loose_destructive_case
    strict = loose = False
    for action in legal_chair_actions(instance):
        sit = pure_situation(instance, action)
        strict = strict or strict_fn(sit)[0]
        loose = loose or loose_fn(sit)[0]
        if strict and loose:
            break
    return strict, loose


def decision_step_count(instance: ControlInstance) -> int:
    """Elementary steps the decider spends on an instance: the lengths of
    every scan it performs (votes, roster, standing set) summed over the
    legal actions.  Backs the polynomial-growth regression test."""
    steps = 0
    m = len(instance.candidates)
    p = instance.current_index + 1
    for action in legal_chair_actions(instance):
        sit = pure_situation(instance, action)
        steps += instance.num_voters * p      # scoring scan per vote
        steps += m - p                        # unrevealed role counts
        steps += 3 * len(sit.standing) + m    # ladder scans and role lookup
        _analyze(sit)
        steps += 1
    return steps
