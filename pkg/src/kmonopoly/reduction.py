"""Gadget reducing total domination to the open 0-monopoly problem.

For every vertex ``v`` of G, ``deg(v) - 1`` disjoint 5-vertex paths are
attached, with ``v`` joined to each path's middle vertex. The minimum
0-monopoly of the result H has size ``6m - 3n + gamma_t(G)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, is_bipartite, is_chordal
from .solver import MAX_N, min_k_monopoly, min_total_dominating


@dataclass(frozen=True)
class Origin:
    role: str  # "original" or "path"
    g_vertex: int
    path_index: int | None = None
    position: int | None = None  # 1..5, the middle vertex is 3

    def line(self, h_vertex: int) -> str:
        idx = "-" if self.path_index is None else str(self.path_index)
        pos = "-" if self.position is None else f"p{self.position}"
        return f"{h_vertex} {self.role} {self.g_vertex} {idx} {pos}"


@dataclass(frozen=True)
class ReductionOutput:
    h: Graph
    origin_map: tuple[Origin, ...]
    added_vertices: int
    added_edges: int

    def origin_lines(self) -> list[str]:
        return [o.line(v) for v, o in enumerate(self.origin_map)]

    def path_vertices(self) -> list[tuple[int, ...]]:
        """The attached paths as tuples ``(p1, .., p5)`` of H vertices."""
        out = []
        for v, o in enumerate(self.origin_map):
            if o.role == "path" and o.position == 1:
                out.append(tuple(range(v, v + 5)))
        return out


def build_reduction(g: Graph) -> ReductionOutput:
    if g.n == 0 or g.has_isolated_vertex():
        raise GraphError("reduction needs a graph without isolated vertices")
    n, m = g.n, g.m
    edges = list(g.edges)
    origin = [Origin("original", v) for v in range(n)]
    nxt = n
    for v in range(n):
        for j in range(g.degrees[v] - 1):
            p = list(range(nxt, nxt + 5))
            edges += [(p[i], p[i + 1]) for i in range(4)]
            edges.append((v, p[2]))
            origin += [Origin("path", v, j, pos) for pos in range(1, 6)]
            nxt += 5
    h = Graph(nxt, edges)
    out = ReductionOutput(h, tuple(origin), nxt - n, h.m - m)

    assert h.n == n + 10 * m - 5 * n
    assert h.m == m + 10 * m - 5 * n
    assert h.degrees.count(1) - g.degrees.count(1) == 4 * m - 2 * n
    assert all(h.degrees[v] == 2 * g.degrees[v] - 1 for v in range(n))
    return out


@dataclass(frozen=True)
class ReductionCheck:
    lhs: int | None  # minimum 0-monopoly of H
    rhs: int | None  # 6m - 3n + gamma_t(G)
    equal: bool
    status: str  # "verified", "mismatch" or "unverifiable"
    witness: tuple[int, ...] = ()


def verify_reduction_identity(g: Graph, *, max_n: int = MAX_N, **solve_kw) -> ReductionCheck:
    """Solve both sides exactly. H larger than ``max_n`` is reported as unverifiable."""
    red = build_reduction(g)
    if red.h.n > max_n:
        return ReductionCheck(None, None, False, "unverifiable")
    lhs_report = min_k_monopoly(red.h, 0, **solve_kw)
    rhs = 6 * g.m - 3 * g.n + min_total_dominating(g, **solve_kw).optimum
    lhs = lhs_report.optimum
    return ReductionCheck(lhs, rhs, lhs == rhs, "verified" if lhs == rhs else "mismatch",
                          tuple(lhs_report.witness.sorted()))


def preserves_class(g: Graph) -> dict[str, bool]:
    """Bipartiteness/chordality of G and of its reduction, for validation."""
    h = build_reduction(g).h
    return {"g_bipartite": is_bipartite(g), "h_bipartite": is_bipartite(h),
            "g_chordal": is_chordal(g), "h_chordal": is_chordal(h)}
