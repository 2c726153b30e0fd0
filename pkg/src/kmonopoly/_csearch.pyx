# cython: language_level=3
"""Compiled branch-and-bound kernel; mirrors ``_search.search`` for n <= 64."""

from libc.stdint cimport uint64_t

cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) nogil


cdef struct Ctx:
    int n
    uint64_t nbr[64]
    int req_in[64]
    int req_out[64]
    int need_free[64]
    int order[64]
    uint64_t undec[65]
    int empty_floor
    int first_only
    int stop_at
    int best
    uint64_t best_mask
    long long nodes
    int done


cdef void dfs(Ctx* c, int i, uint64_t s, uint64_t x) noexcept nogil:
    cdef uint64_t su = s | c.undec[i]
    cdef int size = popcount(s)
    cdef int maxdef = 0
    cdef int complete = size >= c.empty_floor
    cdef int v, need, fixed, cnt, lb
    cdef uint64_t bit, nb
    c.nodes += 1
    for v in range(c.n):
        bit = (<uint64_t>1) << v
        nb = c.nbr[v]
        if s & bit:
            need = c.req_in[v]
            fixed = need
        elif x & bit:
            need = c.req_out[v]
            fixed = need
        else:
            need = c.need_free[v]
            fixed = c.req_out[v]
        if popcount(nb & su) < need:
            return
        cnt = popcount(nb & s)
        if need - cnt > maxdef:
            maxdef = need - cnt
        if cnt < fixed:
            complete = 0
    lb = size + maxdef
    if lb < c.empty_floor:
        lb = c.empty_floor
    if lb >= c.best:
        return
    if complete:
        c.best = size
        c.best_mask = s
        if c.first_only or size <= c.stop_at:
            c.done = 1
        return
    if i == c.n:
        return
    bit = (<uint64_t>1) << c.order[i]
    dfs(c, i + 1, s | bit, x)
    if c.done:
        return
    dfs(c, i + 1, s, x | bit)


def search(nbr, req_in, req_out, order, int start, s0, x0, int best_size, best_mask,
           bint allow_empty, bint first_only, int stop_at):
    cdef Ctx c
    cdef int n = len(nbr)
    cdef int i
    if n > 64:
        raise ValueError("compiled kernel supports at most 64 vertices")
    c.n = n
    for i in range(n):
        c.nbr[i] = nbr[i]
        c.req_in[i] = req_in[i]
        c.req_out[i] = req_out[i]
        c.need_free[i] = min(req_in[i], req_out[i])
        c.order[i] = order[i]
    c.undec[n] = 0
    for i in range(n - 1, -1, -1):
        if i >= start:
            c.undec[i] = c.undec[i + 1] | ((<uint64_t>1) << c.order[i])
        else:
            c.undec[i] = 0
    c.empty_floor = 0 if allow_empty else 1
    c.first_only = first_only
    c.stop_at = stop_at
    c.best = best_size
    c.best_mask = best_mask
    c.nodes = 0
    c.done = 0
    cdef uint64_t cs0 = s0
    cdef uint64_t cx0 = x0
    with nogil:
        dfs(&c, start, cs0, cx0)
    return c.best, c.best_mask, c.nodes
