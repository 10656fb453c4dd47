"""Backend selection and state encoding for the search kernel.

At import time the compiled Cython kernel is preferred; when it is not
built, the pure-Python twin takes over with identical results (the test
suite cross-checks the two).  ``BACKEND`` names the active one.
"""

from __future__ import annotations

from .model import (
    ADDED,
    DCAC,
    DCDC_HT,
    DCDC_NHT,
    DELETED,
    CCAC,
    CCDC,
    KEPT,
    IN,
    NOT_ADDED,
    ControlInstance,
)

try:  # pragma: no cover - which branch runs depends on the build
    from . import _kernel as _impl

    BACKEND = "compiled"
except ImportError:  # pragma: no cover
    from . import _kernel_py as _impl

    BACKEND = "pure-python"

MAX_CANDIDATES = 16
MAX_VOTERS = 8

VARIANT_CODES = {CCDC: 0, CCAC: 1, DCDC_NHT: 2, DCDC_HT: 3, DCAC: 4}
FLAG_CODES = {KEPT: 0, DELETED: 1, IN: 2, ADDED: 3, NOT_ADDED: 4}


def supports(instance: ControlInstance) -> bool:
    return (
        instance.system == "plurality"
        and len(instance.candidates) <= MAX_CANDIDATES
        and instance.num_voters <= MAX_VOTERS
    )


def _encode(inst: ControlInstance, pending_flag: str | None) -> tuple:
    pos = {c: i for i, c in enumerate(inst.presentation)}
    good_mask = 0
    for c in inst.roles().good:
        good_mask |= 1 << pos[c]
    spoiler_mask = 0
    for c in inst.spoilers or ():
        spoiler_mask |= 1 << pos[c]

    addition = inst.spoilers is not None
    flags = list(inst.decisions)
    pending = -1
    if pending_flag is not None:
        flags.append(pending_flag)
        pending = FLAG_CODES[pending_flag]
    standing = 0
    deleted = 0
    used = 0
    spent = ADDED if addition else DELETED
    for i, flag in enumerate(flags):
        bit = 1 << i
        if addition:
            if not (spoiler_mask & bit) or flag == ADDED:
                standing |= bit
        elif flag == KEPT:
            standing |= bit
        if flag == DELETED:
            deleted |= bit
        if flag == spent:
            used += 1
    votes = [[pos[c] for c in vote] for vote in inst.votes]
    return (
        VARIANT_CODES[inst.variant],
        len(inst.candidates),
        inst.num_voters,
        good_mask,
        spoiler_mask,
        inst.budget,
        inst.current_index,
        pending,
        standing,
        used,
        deleted,
        votes,
    )


def encode_state(state) -> tuple:
    """Pack a GameState into the kernel's positional arguments."""
    return _encode(state.instance, state.pending)


def solve_state(state) -> bool:
    return bool(_impl.solve(*encode_state(state)))


def solve_instance(instance: ControlInstance) -> bool:
    """Chair-to-decide fast path straight off a snapshot."""
    return bool(_impl.solve(*_encode(instance, None)))


def solve_with(backend: str, state) -> bool:
    """Run a specific backend (for the equivalence tests and benchmark)."""
    if backend == "compiled":
        from . import _kernel

        return bool(_kernel.solve(*encode_state(state)))
    if backend == "pure-python":
        from . import _kernel_py

        return bool(_kernel_py.solve(*encode_state(state)))
    raise ValueError(f"unknown backend {backend!r}")
