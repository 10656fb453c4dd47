"""Pure-Python fallback for the compiled search kernel.

Same encoded interface and same algorithm as ``_kernel.pyx``: an exhaustive
AND-OR search over bit-mask states specialized to plurality, short-circuited
at both player's nodes.  Candidates are tau positions 0..m-1; votes are
lists of positions, best first.  The caller (``seqcontrol.kernel``) encodes
instances and owns all validation.
"""

from __future__ import annotations

# Variant codes (must match kernel.py and _kernel.pyx).
CCDC, CCAC, DCDC_NHT, DCDC_HT, DCAC = range(5)


def solve(
    variant: int,
    m: int,
    n: int,
    good_mask: int,
    spoiler_mask: int,
    budget: int,
    ci: int,
    pending: int,
    standing: int,
    used: int,
    deleted: int,
    votes: list[list[int]],
) -> bool:
    """Forced-win truth for an encoded state.

    ``pending`` is -1 when the chair must decide candidate ``ci``; any other
    value means the decision is already reflected in ``standing``/``used``/
    ``deleted`` and the universe (or terminal evaluation) is next.
    """
    votes = [list(v) for v in votes]
    full_mask = (1 << m) - 1
    addition = variant in (CCAC, DCAC)
    constructive = variant in (CCDC, CCAC)
    bad_mask = full_mask & ~good_mask

    def terminal_goal(standing: int) -> bool:
        if standing == 0:
            winners = 0
        elif n == 0:
            winners = standing
        else:
            scores = [0] * m
            for vote in votes:
                for c in vote:
                    if standing & (1 << c):
                        scores[c] += 1
                        break
            best = max(scores[i] for i in range(m) if standing & (1 << i))
            winners = 0
            for i in range(m):
                if standing & (1 << i) and scores[i] == best:
                    winners |= 1 << i
        if constructive:
            return (winners & good_mask) != 0
        return (winners & bad_mask) == 0

    def descend(ci: int, standing: int, used: int, deleted: int) -> bool:
        if ci == m - 1:
            return terminal_goal(standing)
        return universe_rec(0, ci, standing, used, deleted)

    def chair_node(ci: int, standing: int, used: int, deleted: int) -> bool:
        bit = 1 << ci
        if addition:
            if not (spoiler_mask & bit):
                return descend(ci, standing | bit, used, deleted)
            if descend(ci, standing, used, deleted):
                return True
            if used < budget:
                return descend(ci, standing | bit, used + 1, deleted)
            return False
        if descend(ci, standing | bit, used, deleted):
            return True
        if used >= budget:
            return False
        if not (good_mask & bit):
            if variant == DCDC_HT:
                return False
            if variant == DCDC_NHT and (bad_mask & ~deleted & ~bit) == 0:
                return False
        return descend(ci, standing, used + 1, deleted | bit)

    def universe_rec(v: int, ci: int, standing: int, used: int, deleted: int) -> bool:
        if v == n:
            return chair_node(ci + 1, standing, used, deleted)
        entrant = ci + 1
        vote = votes[v]
        for rank in range(len(vote) + 1):
            vote.insert(rank, entrant)
            ok = universe_rec(v + 1, ci, standing, used, deleted)
            vote.pop(rank)
            if not ok:
                return False
        return True

    if pending == -1:
        return chair_node(ci, standing, used, deleted)
    return descend(ci, standing, used, deleted)
