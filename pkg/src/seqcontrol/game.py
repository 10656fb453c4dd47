"""Ground-truth forced-win decisions by exhaustive game-tree evaluation.

The chair and the universe alternate: the chair irrevocably decides the
current candidate, then the universe reveals how every voter inserts the
next candidate into their order, and so on until the roster is exhausted.
The chair has a forced win when some legal decision works for **all**
universe replies, recursively.  This module evaluates that alternation
exactly, for any winner rule, and can record a full strategy certificate.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass

from .errors import ContractError, IllegalActionError, SizeLimitError
from .model import (
    ACTION_TO_FLAG,
    ControlInstance,
    check_valid,
    goal_satisfied,
    legal_chair_actions,
    illegal_action_reason,
    mask_vote,
    standing_from_flags,
)

WinnerRule = Callable[[Sequence[str], Sequence[Sequence[str]]], frozenset]

CHAIR = "chair-to-decide"
UNIVERSE = "universe-to-reveal"
TERMINAL = "terminal"

DEFAULT_GUARD = 10**8


@dataclass(frozen=True, slots=True)
class GameState:
    """A control instance plus whose turn it is.

    ``pending`` is the flag the chair just assigned to the current candidate
    but that the universe has not yet answered: None means the chair is to
    decide; a flag with candidates left to reveal means the universe moves;
    a flag on the last candidate means the game is over.
    """

    instance: ControlInstance
    pending: str | None = None

    @property
    def phase(self) -> str:
        if self.pending is None:
            return CHAIR
        if self.instance.current_index + 1 < len(self.instance.candidates):
            return UNIVERSE
        return TERMINAL


@dataclass(frozen=True, slots=True)
class ChairStep:
    action: str
    after: "StrategyNode"


@dataclass(frozen=True, slots=True)
class UniverseStep:
    branches: Mapping[tuple[int, ...], "StrategyNode"]


@dataclass(frozen=True, slots=True)
class TerminalStep:
    winners: frozenset[str]


StrategyNode = ChairStep | UniverseStep | TerminalStep


@dataclass(frozen=True, slots=True)
class Verdict:
    forced_win: bool
    strategy: StrategyNode | None = None


def extract_strategy(verdict: Verdict) -> StrategyNode | None:
    """The certificate recorded by solve_forced_win, or None on a loss."""
    return verdict.strategy


def enumerate_universe_extensions(state: GameState) -> tuple[tuple[int, ...], ...]:
    """Every way the voters can insert the next candidate: one insertion
    rank per voter, the full Cartesian product, in lexicographic order."""
    if state.phase != UNIVERSE:
        raise ContractError(
            f"universe extensions requested in phase {state.phase!r}"
        )
    ranges = [range(len(v) + 1) for v in state.instance.votes]
    return tuple(itertools.product(*ranges))


def apply_chair_action(state: GameState, action: str) -> GameState:
    if state.phase != CHAIR:
        raise ContractError(f"chair cannot act in phase {state.phase!r}")
    reason = illegal_action_reason(state.instance, action)
    if reason is not None:
        raise IllegalActionError(reason)
    return GameState(state.instance, ACTION_TO_FLAG[action])


def apply_universe_extension(state: GameState, ranks: Sequence[int]) -> GameState:
    if state.phase != UNIVERSE:
        raise ContractError(f"universe cannot move in phase {state.phase!r}")
    inst = state.instance
    if len(ranks) != inst.num_voters:
        raise IllegalActionError(
            f"{len(ranks)} insertion ranks supplied for {inst.num_voters} voters"
        )
    entrant = inst.presentation[inst.current_index + 1]
    new_votes = []
    for vote, rank in zip(inst.votes, ranks):
        if not 0 <= rank <= len(vote):
            raise IllegalActionError(
                f"insertion rank {rank} outside 0..{len(vote)}"
            )
        new_votes.append(vote[:rank] + (entrant,) + vote[rank:])
    next_instance = ControlInstance(
        variant=inst.variant,
        candidates=inst.candidates,
        num_voters=inst.num_voters,
        presentation=inst.presentation,
        current_index=inst.current_index + 1,
        budget=inst.budget,
        sigma=inst.sigma,
        d=inst.d,
        decisions=inst.decisions + (state.pending,),
        votes=tuple(new_votes),
        spoilers=inst.spoilers,
        system=inst.system,
    )
    return GameState(next_instance, None)


def terminal_result(
    state: GameState, rule: WinnerRule
) -> tuple[frozenset, bool]:
    if state.phase != TERMINAL:
        raise ContractError(f"no terminal result in phase {state.phase!r}")
    inst = state.instance
    flags = inst.decisions + (state.pending,)
    standing = standing_from_flags(
        inst.variant, inst.presentation, flags, inst.spoilers
    )
    masked = tuple(mask_vote(v, standing) for v in inst.votes)
    winners = rule(standing, masked)
    return winners, goal_satisfied(inst.variant, winners, inst.roles())


def estimate_search_nodes(state: GameState) -> int:
    """Worst-case count of play lines below a state (the guard metric)."""
    inst = state.instance
    m = len(inst.candidates)
    n = inst.num_voters
    est = 2 if state.pending is None else 1
    for t in range(inst.current_index + 1, m):
        est *= 2 * (t + 1) ** n
    return est


def solve_forced_win(
    state: GameState | ControlInstance,
    rule: WinnerRule | None = None,
    *,
    guard: int = DEFAULT_GUARD,
    record_strategy: bool = False,
    use_cache: bool = True,
    engine: str = "auto",
    validate: bool = True,
) -> Verdict:
    """Decide whether the chair has a forced win from ``state``.

    Evaluates the full alternation: OR over legal chair actions, AND over
    every universe extension, goal evaluation at the leaves.  A configurable
    guard refuses searches whose worst-case line count exceeds ``guard``.
    With ``record_strategy`` the verdict carries a strategy tree covering
    every universe extension along the winning play.

    ``engine`` selects the implementation: "pure" runs the reference
    search, "compiled" the fast kernel (plurality only, no certificates),
    "auto" picks the kernel whenever it applies.
    """
    if isinstance(state, ControlInstance):
        state = GameState(state)
    inst = state.instance
    if validate:
        check_valid(inst)
    if estimate_search_nodes(state) > guard:
        raise SizeLimitError(
            f"worst-case search size {estimate_search_nodes(state)} exceeds "
            f"guard {guard}"
        )
    custom_rule = rule is not None
    if rule is None:
        from .rules import winner_rule_for

        rule = winner_rule_for(inst.system)

    if engine not in ("auto", "pure", "compiled"):
        raise ContractError(f"unknown engine {engine!r}")
    if engine != "pure" and not custom_rule and not record_strategy:
        from . import kernel

        if inst.system == "plurality" and kernel.supports(inst):
            return Verdict(forced_win=kernel.solve_state(state))
    if engine == "compiled":
        raise ContractError(
            "compiled engine unavailable for this input (non-plurality rule, "
            "strategy recording, or out-of-range size)"
        )

    memo: dict | None = {} if use_cache else None

    def search(st: GameState) -> tuple[bool, StrategyNode | None]:
        k = (st.instance.current_index, st.pending, st.instance.decisions, st.instance.votes)
        if memo is not None and k in memo:
            return memo[k]
        phase = st.phase
        if phase == TERMINAL:
            winners, goal = terminal_result(st, rule)
            result = (goal, TerminalStep(winners) if record_strategy else None)
        elif phase == CHAIR:
            result = (False, None)
            for action in legal_chair_actions(st.instance):
                win, node = search(GameState(st.instance, ACTION_TO_FLAG[action]))
                if win:
                    result = (True, ChairStep(action, node) if record_strategy else None)
                    break
        else:
            branches: dict[tuple[int, ...], StrategyNode | None] = {}
            result = (True, None)
            for ranks in enumerate_universe_extensions(st):
                win, node = search(apply_universe_extension(st, ranks))
                if not win:
                    result = (False, None)
                    break
                branches[ranks] = node
            else:
                if record_strategy:
                    result = (True, UniverseStep(branches))
        if memo is not None:
            memo[k] = result
        return result

    win, node = search(state)
    return Verdict(forced_win=win, strategy=node if win else None)


def replay_strategy(
    state: GameState | ControlInstance,
    strategy: StrategyNode,
    rule: WinnerRule | None = None,
) -> list[bool]:
    """Execute a strategy against every enumerated universe line; returns
    the goal verdict of each line's terminal state."""
    if isinstance(state, ControlInstance):
        state = GameState(state)
    if rule is None:
        from .rules import winner_rule_for

        rule = winner_rule_for(state.instance.system)
    results: list[bool] = []

    def walk(st: GameState, node: StrategyNode) -> None:
        phase = st.phase
        if phase == TERMINAL:
            if not isinstance(node, TerminalStep):
                raise ContractError("strategy does not end at the terminal state")
            _, goal = terminal_result(st, rule)
            results.append(goal)
        elif phase == CHAIR:
            if not isinstance(node, ChairStep):
                raise ContractError("strategy lacks a chair decision where one is due")
            walk(apply_chair_action(st, node.action), node.after)
        else:
            if not isinstance(node, UniverseStep):
                raise ContractError("strategy lacks universe branches where one is due")
            for ranks in enumerate_universe_extensions(st):
                if ranks not in node.branches:
                    raise ContractError(
                        f"strategy does not cover universe extension {ranks}"
                    )
                walk(apply_universe_extension(st, ranks), node.branches[ranks])

    walk(state, strategy)
    return results
