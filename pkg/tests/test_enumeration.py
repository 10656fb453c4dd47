import pytest

from seqcontrol.enumeration import (
    EnumerationBounds,
    canonical_candidates,
    count_instances,
    enumerate_instances,
    role_assignments,
)
from seqcontrol.model import compute_roles, validate_instance

from conftest import make_instance


def test_golden_count_one_candidate_no_voters():
    # one role map, budgets {0, 1}, a single empty-vote profile
    assert count_instances(EnumerationBounds(1, 0, ("CCDC",))) == 2


def test_golden_count_small_bounds():
    assert count_instances(EnumerationBounds(2, 1)) == 489


def test_duplicate_free():
    seen = list(enumerate_instances(EnumerationBounds(2, 1)))
    assert len(seen) == len(set(seen))


def test_all_yielded_instances_validate():
    for inst in enumerate_instances(EnumerationBounds(2, 1)):
        assert validate_instance(inst) == []


def test_counterexample_membership():
    target = make_instance(
        candidates=("c1", "c2"),
        presentation=("c1", "c2"),
        sigma=("c2", "c1"),
        d="c2",
        budget=0,
        votes=(("c1",),),
    )
    assert target in set(enumerate_instances(EnumerationBounds(2, 1)))


def test_role_assignments_cover_all_partitions():
    cands = canonical_candidates(3)
    seen = set()
    for sigma, d in role_assignments("CCDC", cands):
        seen.add(compute_roles("CCDC", sigma, d).good)
    assert len(seen) == 7  # every nonempty good subset

    seen = set()
    for sigma, d in role_assignments("DCAC", cands):
        seen.add(compute_roles("DCAC", sigma, d).bad)
    assert len(seen) == 7  # every nonempty bad subset


def test_variant_coverage():
    variants = {
        inst.variant for inst in enumerate_instances(EnumerationBounds(2, 0))
    }
    assert variants == {"CCDC", "CCAC", "DCDC-NHT", "DCDC-HT", "DCAC"}


def test_spoiler_subsets_enumerated():
    spoiler_sets = {
        inst.spoilers
        for inst in enumerate_instances(EnumerationBounds(2, 0, ("CCAC",)))
    }
    assert spoiler_sets == {
        frozenset(),
        frozenset({"c1"}),
        frozenset({"c2"}),
        frozenset({"c1", "c2"}),
    }


def test_bounds_validation():
    with pytest.raises(ValueError):
        EnumerationBounds(0, 1)
    with pytest.raises(ValueError):
        EnumerationBounds(1, -1)
    with pytest.raises(ValueError):
        EnumerationBounds(1, 1, ("XXX",))
