import os

import pytest

from seqcontrol.model import ControlInstance

FIXTURES = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


def make_instance(**overrides) -> ControlInstance:
    """A small well-formed CCDC snapshot; override fields per test."""
    base = dict(
        variant="CCDC",
        candidates=("x", "g1"),
        num_voters=1,
        presentation=("x", "g1"),
        current_index=0,
        budget=1,
        sigma=("g1", "x"),
        d="g1",
        decisions=(),
        votes=(("x",),),
        spoilers=None,
        system="plurality",
    )
    base.update(overrides)
    return ControlInstance(**base)


@pytest.fixture
def losing_snapshot() -> ControlInstance:
    """Bad candidate first, good one unrevealed, no deletions left."""
    return make_instance(budget=0)


@pytest.fixture
def winning_snapshot() -> ControlInstance:
    """Same position with one deletion available."""
    return make_instance(budget=1)


def surplus_snapshot(good_score: int, bad_score: int = 2) -> ControlInstance:
    """Keep-branch situation: standing bad at ``bad_score``, standing good at
    ``good_score``, one more good candidate unrevealed, no budget left."""
    votes = tuple([("b1", "g1")] * bad_score + [("g1", "b1")] * good_score)
    return ControlInstance(
        variant="CCDC",
        candidates=("b1", "g1", "g2"),
        num_voters=good_score + bad_score,
        presentation=("b1", "g1", "g2"),
        current_index=1,
        budget=0,
        sigma=("g1", "g2", "b1"),
        d="g2",
        decisions=("kept",),
        votes=votes,
    )
