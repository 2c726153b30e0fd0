"""Partitions of the vertex set into disjoint k-monopolies."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError, VertexSet, check_k, cut_size, induced_edge_count
from .predicates import is_k_monopoly, monopoly_violation


@dataclass
class PartitionResult:
    parts: list[VertexSet]
    r: int
    k: int
    status: str  # "found", "none_exists" or "bound_excluded"
    nodes_explored: int = 0

    def as_dict(self) -> dict:
        return {"k": self.k, "r": self.r, "status": self.status,
                "parts": [p.sorted() for p in self.parts],
                "stats": {"nodes_explored": self.nodes_explored}}


def excluded_by_bound(k: int, r: int) -> bool:
    """Partitions into r k-monopolies need ``k <= 0`` and ``r <= 2 - 2k``."""
    return k > 0 or r > 2 - 2 * k


def find_monopoly_partition(g: Graph, k: int, r: int, *, check_bound: bool = True) -> PartitionResult:
    """Find r disjoint k-monopolies covering V, or certify that none exist.

    Vertices are assigned in index order; a vertex may open at most one new
    part, which removes the r! relabellings (vertex 0 always lands in the
    first part). A branch dies when some vertex can no longer collect
    enough neighbours in some part. ``check_bound=False`` skips the
    structural pre-check so the search itself can be tested against it.
    """
    if r < 2:
        raise ValueError("a partition needs r >= 2 parts")
    check_k(g, k)
    if check_bound and excluded_by_bound(k, r):
        return PartitionResult([], r, k, "bound_excluded")

    n = g.n
    nbr = g.neighbor_masks
    need = [-(-(d + 2 * k) // 2) for d in g.degrees]
    masks = [0] * r
    nodes = 0

    def viable(assigned: int) -> bool:
        free = ~assigned
        for v in range(n):
            spare = (nbr[v] & free).bit_count()
            for p in masks:
                if (nbr[v] & p).bit_count() + spare < need[v]:
                    return False
        return True

    def place(i: int, used: int, assigned: int) -> bool:
        nonlocal nodes
        nodes += 1
        if not viable(assigned):
            return False
        if i == n:
            return used == r
        if r - used > n - i:
            return False
        bit = 1 << i
        for p in range(min(used + 1, r)):
            masks[p] |= bit
            if place(i + 1, max(used, p + 1), assigned | bit):
                return True
            masks[p] &= ~bit
        return False

    if place(0, 0, 0):
        parts = sorted((VertexSet(n, x) for x in masks), key=lambda s: min(s))
        assert all(is_k_monopoly(g, p, k) for p in parts)
        return PartitionResult(parts, r, k, "found", nodes)
    return PartitionResult([], r, k, "none_exists", nodes)


@dataclass
class TwoPartReport:
    balanced_degrees: bool  # deg_X(v) == deg_Y(v) for all v
    even_degrees: bool
    m_x: int
    m_y: int
    cut: int
    equal_sizes: bool
    cut_identity: bool  # cut == m - 2 m_X
    details: dict = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return (self.balanced_degrees and self.even_degrees and self.equal_sizes
                and self.cut_identity)


def check_two_part_properties(g: Graph, x: VertexSet, y: VertexSet) -> TwoPartReport:
    """Structural consequences of a partition ``{X, Y}`` into two 0-monopolies."""
    g.bind(x)
    g.bind(y)
    if not x or not y or not x.isdisjoint(y) or (x | y) != g.full_set():
        raise GraphError("X and Y must be nonempty and partition V")
    for name, part in (("X", x), ("Y", y)):
        v = monopoly_violation(g, part, 0)
        if v is not None:
            raise GraphError(f"{name} is not a 0-monopoly: vertex {v} is not controlled")
    nbr = g.neighbor_masks
    balanced = all((nbr[v] & x.mask).bit_count() == (nbr[v] & y.mask).bit_count()
                   for v in g.vertices())
    m_x, m_y = induced_edge_count(g, x), induced_edge_count(g, y)
    cut = cut_size(g, x)
    return TwoPartReport(
        balanced_degrees=balanced,
        even_degrees=all(d % 2 == 0 for d in g.degrees),
        m_x=m_x, m_y=m_y, cut=cut,
        equal_sizes=m_x == m_y,
        cut_identity=cut == g.m - 2 * m_x,
    )
