"""Pure-Python branch-and-bound kernel (fallback for the compiled ``_csearch``).

Problem encoding shared with the compiled kernel: a set T is feasible when
every ``v`` in T has at least ``req_in[v]`` neighbours in T, every ``v``
outside T has at least ``req_out[v]`` neighbours in T, and T is nonempty
unless ``allow_empty``. The kernel minimises ``|T|``.
"""

from __future__ import annotations

import sys


def search(nbr, req_in, req_out, order, start, s0, x0, best_size, best_mask,
           allow_empty, first_only, stop_at):
    """Search the subtree with ``order[:start]`` fixed by ``s0`` (in) / ``x0`` (out).

    Only sets strictly smaller than ``best_size`` are accepted. Returns
    ``(best_size, best_mask, nodes)``. With ``first_only`` the first accepted
    set ends the search; with include-first branching in index order that
    set is the lexicographically smallest one.
    """
    n = len(nbr)
    undec = [0] * (n + 1)
    for i in range(n - 1, start - 1, -1):
        undec[i] = undec[i + 1] | 1 << order[i]
    need_free = [min(a, b) for a, b in zip(req_in, req_out)]
    empty_floor = 0 if allow_empty else 1
    verts = range(n)
    # best, mask, nodes, done
    st = [best_size, best_mask, 0, False]

    def dfs(i, s, x):
        st[2] += 1
        su = s | undec[i]
        size = s.bit_count()
        maxdef = 0
        complete = size >= empty_floor
        for v in verts:
            nb = nbr[v]
            if s >> v & 1:
                need = req_in[v]
                fixed = need
            elif x >> v & 1:
                need = req_out[v]
                fixed = need
            else:
                need = need_free[v]
                fixed = req_out[v]
            if (nb & su).bit_count() < need:
                return
            c = (nb & s).bit_count()
            if need - c > maxdef:
                maxdef = need - c
            if c < fixed:
                complete = False
        if max(size + maxdef, empty_floor) >= st[0]:
            return
        if complete:
            st[0] = size
            st[1] = s
            if first_only or size <= stop_at:
                st[3] = True
            return
        if i == n:
            return
        b = 1 << order[i]
        dfs(i + 1, s | b, x)
        if st[3]:
            return
        dfs(i + 1, s, x | b)

    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    dfs(start, s0, x0)
    return st[0], st[1], st[2]
