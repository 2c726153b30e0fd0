"""Immutable simple graphs and vertex subsets.

Vertices are dense integers ``0..n-1``. A :class:`VertexSet` is a bitmask
bound to a vertex count, so membership, complement and neighbour counting
are single integer operations.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Structural problem with a graph or a vertex argument."""


class MonopolyUndefinedError(GraphError):
    """Raised when a graph has an isolated vertex, so no k-monopoly exists."""


class KRangeError(GraphError):
    """Raised when k lies outside the interval where k-monopolies are defined."""

    def __init__(self, k: int, valid: range):
        self.k = k
        self.valid = valid
        super().__init__(
            f"k={k} is outside the valid range [{valid.start}, {valid.stop - 1}]"
        )


class VertexSet:
    """Subset of ``{0..n-1}`` stored as a bitmask."""

    __slots__ = ("_n", "_mask")

    def __init__(self, n: int, mask: int = 0):
        if mask < 0 or mask >> n:
            raise GraphError(f"mask {mask:#x} has bits outside 0..{n - 1}")
        self._n = n
        self._mask = mask

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} out of range 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    @property
    def n(self) -> int:
        return self._n

    @property
    def mask(self) -> int:
        return self._mask

    def complement(self) -> "VertexSet":
        return VertexSet(self._n, ((1 << self._n) - 1) & ~self._mask)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self._n and bool(self._mask >> v & 1)

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        mask = self._mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __bool__(self) -> bool:
        return self._mask != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self._n == other._n and self._mask == other._mask

    def __hash__(self) -> int:
        return hash((self._n, self._mask))

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_same(other)
        return VertexSet(self._n, self._mask | other._mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_same(other)
        return VertexSet(self._n, self._mask & other._mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_same(other)
        return VertexSet(self._n, self._mask & ~other._mask)

    def issubset(self, other: "VertexSet") -> bool:
        self._check_same(other)
        return self._mask & ~other._mask == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check_same(other)
        return self._mask & other._mask == 0

    def sorted(self) -> list[int]:
        return list(self)

    def _check_same(self, other: "VertexSet") -> None:
        if self._n != other._n:
            raise GraphError("vertex sets are bound to graphs of different order")

    def __repr__(self) -> str:
        return f"VertexSet({self._n}, {{{', '.join(map(str, self))}}})"


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    The edge set, neighbour bitmasks and degrees are computed once at
    construction; instances are never mutated afterwards.
    """

    __slots__ = ("_n", "_edges", "_nbr", "_deg", "_labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Sequence[Hashable] | None = None):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        nbr = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has a vertex out of range 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"parallel edge {e}")
            seen.add(e)
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        if labels is not None and len(labels) != n:
            raise GraphError("label table length differs from vertex count")
        self._n = n
        self._edges = tuple(sorted(seen))
        self._nbr = tuple(nbr)
        self._deg = tuple(x.bit_count() for x in nbr)
        self._labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_labeled_edges(cls, edges: Iterable[tuple[Hashable, Hashable]],
                           vertices: Iterable[Hashable] = ()) -> "Graph":
        """Build a graph from arbitrary vertex labels, remapping them to ``0..n-1``.

        Labels are numbered in order of first appearance (``vertices`` first).
        """
        index: dict[Hashable, int] = {}
        for v in vertices:
            index.setdefault(v, len(index))
        pairs = []
        for a, b in edges:
            pairs.append((index.setdefault(a, len(index)), index.setdefault(b, len(index))))
        return cls(len(index), pairs, labels=list(index))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return self._edges

    @property
    def labels(self) -> tuple[Hashable, ...]:
        return self._labels if self._labels is not None else tuple(range(self._n))

    @property
    def neighbor_masks(self) -> tuple[int, ...]:
        return self._nbr

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def vertices(self) -> range:
        return range(self._n)

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self._n):
            raise GraphError(f"vertex {v!r} out of range 0..{self._n - 1}")

    def neighbors(self, v: int) -> VertexSet:
        self.check_vertex(v)
        return VertexSet(self._n, self._nbr[v])

    def closed_neighbors(self, v: int) -> VertexSet:
        self.check_vertex(v)
        return VertexSet(self._n, self._nbr[v] | 1 << v)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self._deg[v]

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self._nbr[u] >> v & 1)

    @property
    def min_degree(self) -> int:
        return min(self._deg) if self._n else 0

    @property
    def max_degree(self) -> int:
        return max(self._deg) if self._n else 0

    def has_isolated_vertex(self) -> bool:
        return 0 in self._deg

    def is_regular(self) -> bool:
        return self._n > 0 and self.min_degree == self.max_degree

    def full_set(self) -> VertexSet:
        return VertexSet(self._n, (1 << self._n) - 1)

    def empty_set(self) -> VertexSet:
        return VertexSet(self._n, 0)

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.of(self._n, vertices)

    def bind(self, s: VertexSet) -> VertexSet:
        if s.n != self._n:
            raise GraphError(f"vertex set bound to order {s.n}, graph has order {self._n}")
        return s

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def degree_in(g: Graph, v: int, s: VertexSet) -> int:
    """Number of neighbours of ``v`` inside ``s``."""
    g.check_vertex(v)
    return (g.neighbor_masks[v] & g.bind(s).mask).bit_count()


def boundary(g: Graph, s: VertexSet) -> VertexSet:
    """Vertices outside ``s`` with at least one neighbour in ``s``."""
    g.bind(s)
    if not s:
        raise GraphError("boundary of the empty set is undefined")
    reach = 0
    for v in s:
        reach |= g.neighbor_masks[v]
    return VertexSet(g.n, reach & ~s.mask)


def cut_size(g: Graph, s: VertexSet) -> int:
    """Number of edges with exactly one endpoint in ``s``."""
    g.bind(s)
    out = ~s.mask
    return sum((g.neighbor_masks[v] & out).bit_count() for v in s)


def induced_edge_count(g: Graph, s: VertexSet) -> int:
    """Number of edges of the subgraph induced by ``s``."""
    g.bind(s)
    return sum((g.neighbor_masks[v] & s.mask).bit_count() for v in s) // 2


def valid_k_range(g: Graph) -> range:
    """Integers k for which k-monopolies of ``g`` are defined.

    This is ``1 - ceil(delta/2) .. floor(delta/2)`` for minimum degree delta.
    """
    if g.n == 0 or g.has_isolated_vertex():
        raise MonopolyUndefinedError("graph has an isolated vertex; k-monopolies are undefined")
    d = g.min_degree
    return range(1 - (d + 1) // 2, d // 2 + 1)


def check_k(g: Graph, k: int) -> None:
    valid = valid_k_range(g)
    if k not in valid:
        raise KRangeError(k, valid)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        f = frontier
        while f:
            low = f & -f
            reach |= g.neighbor_masks[low.bit_length() - 1]
            f ^= low
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_chordal(g: Graph) -> bool:
    """Chordality test by maximum cardinality search and a perfect-elimination check."""
    n = g.n
    weight = [0] * n
    numbered = [False] * n
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not numbered[u]), key=lambda u: (weight[u], -u))
        numbered[v] = True
        order.append(v)
        for w in g.neighbors(v):
            if not numbered[w]:
                weight[w] += 1
    # reverse of the MCS order is a perfect elimination ordering iff g is chordal
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in g.neighbors(v) if pos[u] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=pos.__getitem__)
        for u in earlier:
            if u != parent and not g.has_edge(u, parent):
                return False
    return True


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Copy of ``g`` with vertex ``v`` renamed to ``perm[v]``."""
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
