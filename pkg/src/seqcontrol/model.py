"""Snapshot data model for online candidate control.

A :class:`ControlInstance` captures a single moment of decision: the roster,
the order in which candidates are presented, the chair's preference order
``sigma`` with pivot ``d``, the deletion/addition budget, the flags already
set on presented candidates, and one preference order per voter over the
revealed prefix.  The functions in this module define legality of chair
actions, vote masking, plurality winners, and goal evaluation; everything is
a pure function of immutable values.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .errors import MalformedInputError, ValidationError

Vote = tuple[str, ...]

CCDC = "CCDC"
CCAC = "CCAC"
DCDC_NHT = "DCDC-NHT"
DCDC_HT = "DCDC-HT"
DCAC = "DCAC"

VARIANTS = (CCDC, CCAC, DCDC_NHT, DCDC_HT, DCAC)
CONSTRUCTIVE_VARIANTS = (CCDC, CCAC)
DESTRUCTIVE_VARIANTS = (DCDC_NHT, DCDC_HT, DCAC)
DELETION_VARIANTS = (CCDC, DCDC_NHT, DCDC_HT)
ADDITION_VARIANTS = (CCAC, DCAC)

SYSTEMS = ("plurality", "qbf-E", "qbf-Eprime")

# Decision flags recorded in an instance's history.
KEPT = "kept"
DELETED = "deleted"
IN = "in"
ADDED = "added"
NOT_ADDED = "not-added"

# Chair actions.  "in" doubles as both action and flag for qualified
# candidates, whose presence is never up to the chair.
KEEP = "keep"
DELETE = "delete"
ADD = "add"
NOT_ADD = "not-add"

ACTION_TO_FLAG = {KEEP: KEPT, DELETE: DELETED, ADD: ADDED, NOT_ADD: NOT_ADDED, IN: IN}
FLAG_TO_ACTION = {v: k for k, v in ACTION_TO_FLAG.items()}

_DELETION_FLAGS = (KEPT, DELETED)
_SPOILER_FLAGS = (ADDED, NOT_ADDED)


def is_constructive(variant: str) -> bool:
    return variant in CONSTRUCTIVE_VARIANTS


def is_addition(variant: str) -> bool:
    return variant in ADDITION_VARIANTS


@dataclass(frozen=True, slots=True)
class RoleMap:
    """Partition of the roster into good and bad candidates.

    Constructive control: good means ``a >= d`` under sigma (d included).
    Destructive control: good means strictly better than d, so d is bad.
    """

    good: frozenset[str]
    bad: frozenset[str]


@lru_cache(maxsize=65536)
def _roles_cached(constructive: bool, sigma: tuple[str, ...], d: str) -> RoleMap:
    pos = sigma.index(d)
    cut = pos + 1 if constructive else pos
    return RoleMap(good=frozenset(sigma[:cut]), bad=frozenset(sigma[cut:]))


def compute_roles(variant: str, sigma: Sequence[str], d: str) -> RoleMap:
    return _roles_cached(is_constructive(variant), tuple(sigma), d)


@dataclass(frozen=True, slots=True)
class ControlInstance:
    """One snapshot of a candidate-sequential election under control.

    ``decisions`` holds one flag per candidate at presentation positions
    strictly before ``current_index``; the candidate at ``current_index`` is
    the one awaiting the chair's irrevocable decision.  ``votes`` are strict
    orders (best first) over the full revealed prefix, suppressed candidates
    included.
    """

    variant: str
    candidates: tuple[str, ...]
    num_voters: int
    presentation: tuple[str, ...]
    current_index: int
    budget: int
    sigma: tuple[str, ...]
    d: str
    decisions: tuple[str, ...]
    votes: tuple[Vote, ...]
    spoilers: frozenset[str] | None = None
    system: str = "plurality"

    @property
    def current_candidate(self) -> str:
        return self.presentation[self.current_index]

    @property
    def revealed(self) -> tuple[str, ...]:
        return self.presentation[: self.current_index + 1]

    @property
    def unrevealed(self) -> tuple[str, ...]:
        return self.presentation[self.current_index + 1 :]

    @property
    def qualified(self) -> frozenset[str]:
        if self.spoilers is None:
            return frozenset(self.candidates)
        return frozenset(self.candidates) - self.spoilers

    def roles(self) -> RoleMap:
        return compute_roles(self.variant, self.sigma, self.d)

    def used_budget(self) -> int:
        spent = DELETED if self.variant in DELETION_VARIANTS else ADDED
        return sum(1 for f in self.decisions if f == spent)

    def flag_of(self, candidate: str) -> str | None:
        try:
            pos = self.presentation.index(candidate)
        except ValueError:
            return None
        if pos < len(self.decisions):
            return self.decisions[pos]
        return None

    def standing(self) -> tuple[str, ...]:
        """Still-standing candidates of the snapshot, in presentation order.

        Deletion variants: revealed and flagged kept.  Addition variants:
        revealed and qualified-or-added; a qualified current candidate is
        already standing even though it carries no flag yet.
        """
        return standing_from_flags(
            self.variant, self.revealed, self.decisions, self.spoilers
        )


def standing_from_flags(
    variant: str,
    revealed: Sequence[str],
    flags: Sequence[str],
    spoilers: frozenset[str] | None,
) -> tuple[str, ...]:
    out = []
    addition = is_addition(variant)
    for i, cand in enumerate(revealed):
        flag = flags[i] if i < len(flags) else None
        if addition:
            if (spoilers is None or cand not in spoilers) or flag == ADDED:
                out.append(cand)
        else:
            if flag == KEPT:
                out.append(cand)
    return tuple(out)


def mask_vote(vote: Sequence[str], standing: Iterable[str]) -> Vote:
    """Restrict a vote to the still-standing candidates, preserving order."""
    keep = frozenset(standing)
    missing = keep - set(vote)
    if missing:
        raise MalformedInputError(
            f"standing candidates absent from vote: {sorted(missing)}"
        )
    return tuple(c for c in vote if c in keep)


def first_place_counts(
    standing: Iterable[str], masked_votes: Sequence[Sequence[str]]
) -> dict[str, int]:
    counts = {c: 0 for c in standing}
    for vote in masked_votes:
        if vote:
            counts[vote[0]] += 1
    return counts


def plurality_winners(
    standing: Iterable[str], masked_votes: Sequence[Sequence[str]]
) -> frozenset[str]:
    """Co-winners by plurality over the still-standing candidates.

    With no candidates the winner set is empty; with candidates but no
    voters everyone wins with score zero (nonunique-winner model, no
    tie-breaking ever).
    """
    standing = tuple(standing)
    members = frozenset(standing)
    if len(members) != len(standing):
        raise MalformedInputError("standing set contains duplicates")
    for vote in masked_votes:
        if frozenset(vote) != members or len(vote) != len(members):
            raise MalformedInputError(
                f"vote {list(vote)} is not an order over the standing set"
            )
    if not members:
        return frozenset()
    if not masked_votes:
        return members
    counts = first_place_counts(members, masked_votes)
    top = max(counts.values())
    return frozenset(c for c, s in counts.items() if s == top)


def goal_satisfied(variant: str, winners: Iterable[str], roles: RoleMap) -> bool:
    """Constructive: some liked candidate wins.  Destructive: no d-or-worse
    candidate wins.  An empty winner set therefore satisfies the destructive
    goal and fails the constructive one."""
    winners = frozenset(winners)
    if is_constructive(variant):
        return bool(winners & roles.good)
    return not (winners & roles.bad)


def legal_chair_actions(
    instance: ControlInstance, candidate: str | None = None
) -> tuple[str, ...]:
    """Actions available on the candidate currently awaiting a decision."""
    if candidate is None:
        candidate = instance.current_candidate
    return _legal_actions(
        instance.variant,
        candidate,
        instance.roles(),
        instance.spoilers,
        instance.budget,
        dict(zip(instance.presentation, instance.decisions)),
    )


def _legal_actions(
    variant: str,
    candidate: str,
    roles: RoleMap,
    spoilers: frozenset[str] | None,
    budget: int,
    flags: Mapping[str, str],
) -> tuple[str, ...]:
    if is_addition(variant):
        if spoilers is None or candidate not in spoilers:
            return (IN,)
        used = sum(1 for f in flags.values() if f == ADDED)
        if used < budget:
            return (NOT_ADD, ADD)
        return (NOT_ADD,)

    used = sum(1 for f in flags.values() if f == DELETED)
    if used >= budget:
        return (KEEP,)
    if variant == DCDC_HT and candidate in roles.bad:
        return (KEEP,)
    if variant == DCDC_NHT and candidate in roles.bad:
        # Never all: some other bad candidate must remain undeleted, where
        # undecided and unrevealed bad candidates count as undeleted.
        others_alive = any(
            b != candidate and flags.get(b) != DELETED for b in roles.bad
        )
        if not others_alive:
            return (KEEP,)
    return (KEEP, DELETE)


def illegal_action_reason(
    instance: ControlInstance, action: str, candidate: str | None = None
) -> str | None:
    """Why ``action`` is not permitted right now, or None if it is legal."""
    if candidate is None:
        candidate = instance.current_candidate
    legal = legal_chair_actions(instance, candidate)
    if action in legal:
        return None
    variant = instance.variant
    if action not in ACTION_TO_FLAG:
        return f"unknown action {action!r}"
    if is_addition(variant):
        if instance.spoilers is None or candidate not in instance.spoilers:
            return (
                f"{candidate} is a qualified candidate and is certainly in "
                f"the election; the only action is 'in'"
            )
        if action == IN or action in (KEEP, DELETE):
            return f"{candidate} is a spoiler candidate; only add/not-add apply"
        return (
            f"the addition budget is exhausted ({instance.used_budget()} of "
            f"{instance.budget} additions already made)"
        )
    if action in (ADD, NOT_ADD, IN):
        return f"{variant} is a deletion variant; only keep/delete apply"
    if instance.used_budget() >= instance.budget:
        return (
            f"the deletion budget is exhausted ({instance.used_budget()} of "
            f"{instance.budget} deletions already made)"
        )
    if variant == DCDC_HT:
        return (
            f"the hand-tied chair may never delete a candidate that is d or "
            f"worse, and {candidate} is d or worse"
        )
    if variant == DCDC_NHT:
        return (
            f"the non-hand-tied chair may delete some but never all of the "
            f"d-or-worse candidates; every d-or-worse candidate other than "
            f"{candidate} is already deleted"
        )
    return f"action {action!r} is not available"


def validate_instance(instance: ControlInstance) -> list[str]:
    """All invariant violations of a snapshot; an empty list means valid.

    A history that contains dumb actions is fine; one that contains illegal
    actions (over budget, hand-tied deletions of bad candidates, deleting
    the last bad candidate in the non-hand-tied model) is rejected.
    """
    v: list[str] = []
    inst = instance

    if inst.variant not in VARIANTS:
        return [f"variant: unknown variant {inst.variant!r}"]
    if inst.system not in SYSTEMS:
        v.append(f"system: unknown election system {inst.system!r}")

    roster = tuple(inst.candidates)
    roster_set = frozenset(roster)
    if len(roster) == 0:
        return ["candidates: roster is empty"]
    if len(roster_set) != len(roster):
        v.append("candidates: duplicate candidate ids in roster")
    if any(not c or not isinstance(c, str) for c in roster):
        v.append("candidates: ids must be nonempty text tokens")

    if frozenset(inst.presentation) != roster_set or len(inst.presentation) != len(roster):
        v.append("presentation: not a permutation of the roster")
    if frozenset(inst.sigma) != roster_set or len(inst.sigma) != len(roster):
        v.append("sigma: not a strict total order over the roster")
    if inst.d not in roster_set:
        v.append("d: pivot is not a roster candidate")

    if is_addition(inst.variant):
        if inst.spoilers is None:
            v.append("spoilers: addition variants require a spoiler set")
        elif not inst.spoilers <= roster_set:
            v.append("spoilers: not a subset of the roster")
    elif inst.spoilers:
        v.append("spoilers: only addition variants carry spoilers")

    if inst.num_voters < 0:
        v.append("num_voters: negative voter count")
    if inst.budget < 0:
        v.append("budget: negative budget")
    if not 0 <= inst.current_index < len(roster):
        v.append("current_index: out of range")
        return v
    if v:
        return v

    if len(inst.decisions) != inst.current_index:
        v.append(
            "decisions: exactly the candidates before the current one must "
            "carry flags"
        )
        return v

    roles = inst.roles()
    deletion = inst.variant in DELETION_VARIANTS
    for i, flag in enumerate(inst.decisions):
        cand = inst.presentation[i]
        if deletion:
            if flag not in _DELETION_FLAGS:
                v.append(f"decisions: {cand} carries non-deletion flag {flag!r}")
        elif cand in (inst.spoilers or frozenset()):
            if flag not in _SPOILER_FLAGS:
                v.append(f"decisions: spoiler {cand} carries flag {flag!r}")
        elif flag != IN:
            v.append(f"decisions: qualified {cand} must be flagged 'in'")
    if v:
        return v

    if inst.used_budget() > inst.budget:
        v.append(
            f"budget: history spends {inst.used_budget()} of {inst.budget} "
            "allowed"
        )

    if inst.variant == DCDC_HT:
        for i, flag in enumerate(inst.decisions):
            if flag == DELETED and inst.presentation[i] in roles.bad:
                v.append(
                    f"history: hand-tied chair deleted d-or-worse candidate "
                    f"{inst.presentation[i]}"
                )
    if inst.variant == DCDC_NHT:
        deleted = {
            inst.presentation[i]
            for i, f in enumerate(inst.decisions)
            if f == DELETED
        }
        if roles.bad and roles.bad <= deleted:
            v.append("history: non-hand-tied chair deleted all d-or-worse candidates")

    # Replay: every recorded flag must have been a legal action at its
    # historical point (budget and never-all checked above are implied, but
    # the replay also catches order-dependent corner cases).
    flags_so_far: dict[str, str] = {}
    for i, flag in enumerate(inst.decisions):
        cand = inst.presentation[i]
        action = FLAG_TO_ACTION[flag]
        legal = _legal_actions(
            inst.variant, cand, roles, inst.spoilers, inst.budget, flags_so_far
        )
        if action not in legal:
            v.append(
                f"history: flag {flag!r} on {cand} was not a legal action "
                f"at presentation position {i}"
            )
        flags_so_far[cand] = flag

    expected = frozenset(inst.revealed)
    if len(inst.votes) != inst.num_voters:
        v.append(
            f"votes: {len(inst.votes)} orders for {inst.num_voters} voters"
        )
    for idx, vote in enumerate(inst.votes):
        if frozenset(vote) != expected or len(vote) != len(expected):
            v.append(
                f"votes: voter {idx} order is not a permutation of the "
                "revealed prefix"
            )
    return v


def check_valid(instance: ControlInstance) -> ControlInstance:
    violations = validate_instance(instance)
    if violations:
        raise ValidationError(violations)
    return instance
