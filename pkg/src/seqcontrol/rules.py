"""Winner-rule registry: pure maps from (standing candidates, masked votes)
to a winner set."""

from __future__ import annotations

from functools import partial

from .errors import ContractError
from .model import plurality_winners
from .qbf import winners_qbf_system

WINNER_RULES = {
    "plurality": plurality_winners,
    "qbf-E": partial(winners_qbf_system, flavor="E"),
    "qbf-Eprime": partial(winners_qbf_system, flavor="E-prime"),
}


def winner_rule_for(system: str):
    try:
        return WINNER_RULES[system]
    except KeyError:
        raise ContractError(f"no winner rule registered for system {system!r}")
