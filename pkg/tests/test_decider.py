import pytest

from seqcontrol.decider import (
    analyze_pure_constructive,
    analyze_pure_destructive,
    decide_online_control,
    decide_online_control_cases,
    decide_with_loose,
    decision_step_count,
    pure_situation,
)
from seqcontrol.enumeration import EnumerationBounds, enumerate_instances
from seqcontrol.errors import ContractError, ValidationError
from seqcontrol.game import solve_forced_win
from seqcontrol.model import ControlInstance

from conftest import make_instance, surplus_snapshot


def replace(inst, **kw):
    fields = {
        "variant": inst.variant,
        "candidates": inst.candidates,
        "num_voters": inst.num_voters,
        "presentation": inst.presentation,
        "current_index": inst.current_index,
        "budget": inst.budget,
        "sigma": inst.sigma,
        "d": inst.d,
        "decisions": inst.decisions,
        "votes": inst.votes,
        "spoilers": inst.spoilers,
        "system": inst.system,
    }
    fields.update(kw)
    return ControlInstance(**fields)


def test_counterexample_pair(losing_snapshot, winning_snapshot):
    assert not decide_online_control(losing_snapshot)
    assert decide_online_control(winning_snapshot)


def test_over_budget_history_rejected():
    inst = make_instance(
        candidates=("a", "b", "g"),
        presentation=("a", "b", "g"),
        sigma=("g", "a", "b"),
        d="g",
        current_index=2,
        budget=1,
        decisions=("deleted", "deleted"),
        votes=(("a", "b", "g"),),
    )
    with pytest.raises(ValidationError):
        decide_online_control(inst)


def test_surplus_regressions():
    tight = surplus_snapshot(2)
    assert not decide_online_control(tight)
    assert not solve_forced_win(tight).forced_win
    strict, loose = decide_with_loose(tight)
    assert (strict, loose) == (False, True)

    winning = surplus_snapshot(3)
    assert decide_online_control(winning)
    assert solve_forced_win(winning).forced_win


def test_zero_voters_constructive():
    inst = make_instance(num_voters=0, votes=(), budget=0)
    # good candidate unrevealed: chair keeps it when it shows up
    assert decide_online_control(inst)
    sit = pure_situation(inst, "keep")
    assert analyze_pure_constructive(sit)


def test_zero_voters_ccac_spoiler_needs_budget():
    base = dict(
        variant="CCAC",
        candidates=("x", "g1"),
        num_voters=0,
        presentation=("x", "g1"),
        current_index=0,
        sigma=("g1", "x"),
        d="g1",
        decisions=(),
        votes=(),
        spoilers=frozenset({"x", "g1"}),
    )
    with_budget = ControlInstance(budget=1, **base)
    without = ControlInstance(budget=0, **base)
    assert decide_online_control(with_budget)
    assert not decide_online_control(without)
    assert solve_forced_win(with_budget).forced_win
    assert not solve_forced_win(without).forced_win


def test_dcdc_ht_future_bad_dooms():
    inst = make_instance(
        variant="DCDC-HT",
        candidates=("g", "b", "d0"),
        presentation=("g", "b", "d0"),
        sigma=("g", "d0", "b"),
        d="d0",
        current_index=0,
        budget=2,
        votes=(("g",),),
    )
    # b and d0 are both unrevealed bad candidates: b = 2 > 0
    sit = pure_situation(inst, "keep")
    assert sit.b == 2
    assert not analyze_pure_destructive(sit)
    assert not decide_online_control(inst)


def test_dcdc_nht_underfunded_bads():
    inst = make_instance(
        variant="DCDC-NHT",
        candidates=("g", "b1", "b2", "d0"),
        presentation=("g", "b1", "b2", "d0"),
        sigma=("g", "d0", "b1", "b2"),
        d="d0",
        current_index=0,
        budget=1,
        votes=(("g",),),
    )
    sit = pure_situation(inst, "keep")
    assert sit.b == 3 and sit.k_rem == 1
    assert not analyze_pure_destructive(sit)


def test_dcdc_nht_standing_good_dominates():
    inst = make_instance(
        variant="DCDC-NHT",
        candidates=("g1", "d0"),
        presentation=("g1", "d0"),
        sigma=("g1", "d0"),
        d="d0",
        num_voters=3,
        current_index=1,
        budget=0,
        decisions=("kept",),
        votes=(("g1", "d0"), ("g1", "d0"), ("g1", "d0")),
    )
    # keeping d0 leaves it standing at score 0 against g1 at 3
    assert decide_online_control(inst)
    assert solve_forced_win(inst).forced_win


def test_no_standing_bad_wins():
    inst = make_instance(
        candidates=("g1", "g2", "b"),
        presentation=("g1", "g2", "b"),
        sigma=("g1", "g2", "b"),
        d="g2",
        current_index=1,
        budget=1,
        decisions=("kept",),
        votes=(("g1", "g2"),),
    )
    _, cases = decide_online_control_cases(inst)
    assert decide_online_control(inst)
    assert ("keep", True, "no-standing-bad") in cases


def test_non_plurality_rejected():
    inst = make_instance(system="qbf-E")
    with pytest.raises(ContractError):
        decide_online_control(inst, validate=False)


def test_analyze_variant_guards():
    sit = pure_situation(make_instance(), "keep")
    with pytest.raises(ContractError):
        analyze_pure_destructive(sit)
    assert analyze_pure_constructive(sit) in (True, False)


@pytest.mark.parametrize("variant", ["CCDC", "DCDC-NHT"])
def test_budget_monotone(variant):
    """Extra budget never flips a decision from win to loss."""
    bounds = EnumerationBounds(3, 1, (variant,))
    checked = 0
    for inst in enumerate_instances(bounds):
        if inst.budget >= len(inst.candidates):
            continue
        more = replace(inst, budget=inst.budget + 1)
        before = decide_online_control(inst, validate=False)
        after = decide_online_control(more, validate=False)
        assert not (before and not after), (inst, more)
        checked += 1
    assert checked > 500


def test_oracle_equivalence_small():
    for inst in enumerate_instances(EnumerationBounds(2, 2)):
        dec = decide_online_control(inst, validate=False)
        oracle = solve_forced_win(inst, validate=False).forced_win
        assert dec == oracle, inst


def test_pure_situation_invariants():
    """Counts are nonnegative and standing scores sum to the voter count
    whenever someone is standing."""
    from seqcontrol.model import legal_chair_actions

    for inst in enumerate_instances(EnumerationBounds(3, 2, ("CCDC", "CCAC"))):
        for action in legal_chair_actions(inst):
            sit = pure_situation(inst, action)
            assert min(sit.b, sit.b_spoiler, sit.g, sit.g_spoiler, sit.k_rem) >= 0
            if sit.standing and sit.num_voters >= 1:
                assert sum(sit.scores.values()) == sit.num_voters


def test_step_count_polynomial_growth():
    """Instrumented step counts across a size sweep grow like a low-degree
    polynomial (log-log slope bound), not exponentially."""
    import random

    sizes = (4, 8, 16, 32)
    counts = []
    for m in sizes:
        rng = random.Random(m)
        cands = tuple(f"c{i}" for i in range(m))
        prefix = cands[: m // 2]
        order = list(prefix)
        votes = []
        for _ in range(3):
            rng.shuffle(order)
            votes.append(tuple(order))
        inst = ControlInstance(
            variant="CCDC",
            candidates=cands,
            num_voters=3,
            presentation=cands,
            current_index=m // 2 - 1,
            budget=m // 2,
            sigma=cands,
            d=cands[m // 2],
            decisions=("kept",) * (m // 2 - 1),
            votes=tuple(votes),
        )
        counts.append(decision_step_count(inst))
    for small, large in zip(counts, counts[1:]):
        ratio = large / small
        assert ratio <= 2 ** 3.5, counts
