# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled AND-OR search kernel for plurality forced-win checks.

Mirror of ``_kernel_py.py`` over C arrays and bit masks; this is the hot
inner loop of both the differential sweep and interactive hints.
"""

DEF MAXM = 16
DEF MAXN = 8

CCDC, CCAC, DCDC_NHT, DCDC_HT, DCAC = range(5)


cdef struct Ctx:
    int variant
    int m
    int n
    int budget
    bint addition
    bint constructive
    unsigned int good_mask
    unsigned int bad_mask
    unsigned int spoiler_mask
    unsigned char votes[MAXN][MAXM]


cdef bint terminal_goal(Ctx* c, unsigned int standing) noexcept:
    cdef int scores[MAXM]
    cdef int i, v, j, best
    cdef unsigned int winners
    if standing == 0:
        winners = 0
    elif c.n == 0:
        winners = standing
    else:
        for i in range(c.m):
            scores[i] = 0
        for v in range(c.n):
            for j in range(c.m):
                if standing & (1u << c.votes[v][j]):
                    scores[c.votes[v][j]] += 1
                    break
        best = -1
        for i in range(c.m):
            if (standing & (1u << i)) and scores[i] > best:
                best = scores[i]
        winners = 0
        for i in range(c.m):
            if (standing & (1u << i)) and scores[i] == best:
                winners |= 1u << i
    if c.constructive:
        return (winners & c.good_mask) != 0
    return (winners & c.bad_mask) == 0


cdef bint descend(Ctx* c, int ci, unsigned int standing, int used,
                  unsigned int deleted) noexcept:
    if ci == c.m - 1:
        return terminal_goal(c, standing)
    return universe_rec(c, 0, ci, standing, used, deleted)


cdef bint chair_node(Ctx* c, int ci, unsigned int standing, int used,
                     unsigned int deleted) noexcept:
    cdef unsigned int bit = 1u << ci
    if c.addition:
        if not (c.spoiler_mask & bit):
            return descend(c, ci, standing | bit, used, deleted)
        if descend(c, ci, standing, used, deleted):
            return True
        if used < c.budget:
            return descend(c, ci, standing | bit, used + 1, deleted)
        return False
    if descend(c, ci, standing | bit, used, deleted):
        return True
    if used >= c.budget:
        return False
    if not (c.good_mask & bit):
        if c.variant == 3:  # hand-tied
            return False
        if c.variant == 2 and (c.bad_mask & ~deleted & ~bit) == 0:
            return False
    return descend(c, ci, standing, used + 1, deleted | bit)


cdef bint universe_rec(Ctx* c, int v, int ci, unsigned int standing, int used,
                       unsigned int deleted) noexcept:
    cdef int L = ci + 1
    cdef int entrant = ci + 1
    cdef int rank, t
    cdef bint ok
    if v == c.n:
        return chair_node(c, ci + 1, standing, used, deleted)
    for rank in range(L + 1):
        for t in range(L, rank, -1):
            c.votes[v][t] = c.votes[v][t - 1]
        c.votes[v][rank] = <unsigned char> entrant
        ok = universe_rec(c, v + 1, ci, standing, used, deleted)
        for t in range(rank, L):
            c.votes[v][t] = c.votes[v][t + 1]
        if not ok:
            return False
    return True


def solve(int variant, int m, int n, unsigned int good_mask,
          unsigned int spoiler_mask, int budget, int ci, int pending,
          unsigned int standing, int used, unsigned int deleted, votes):
    """Forced-win truth for an encoded state; see _kernel_py.solve."""
    cdef Ctx c
    cdef int v, j
    if m > MAXM or n > MAXN:
        raise ValueError("encoded state exceeds kernel limits")
    c.variant = variant
    c.m = m
    c.n = n
    c.budget = budget
    c.addition = variant == 1 or variant == 4
    c.constructive = variant == 0 or variant == 1
    c.good_mask = good_mask
    c.bad_mask = ((1u << m) - 1) & ~good_mask
    c.spoiler_mask = spoiler_mask
    for v in range(n):
        vote = votes[v]
        for j in range(len(vote)):
            c.votes[v][j] = <unsigned char> vote[j]
    if pending == -1:
        return chair_node(&c, ci, standing, used, deleted)
    return descend(&c, ci, standing, used, deleted)
