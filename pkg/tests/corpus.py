"""Graph corpora for the property and acceptance suites."""

import functools
import random

import networkx as nx

from kmonopoly import Graph
from kmonopoly.families import complete, complete_bipartite, cycle, hypercube
from kmonopoly.graph import is_connected


def from_nx(h):
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(index[u], index[v]) for u, v in h.edges()])


@functools.lru_cache(maxsize=None)
def atlas_connected(max_n=7, min_n=2):
    """All connected graphs with min_n..max_n vertices, up to isomorphism."""
    out = []
    for h in nx.graph_atlas_g():
        if min_n <= h.number_of_nodes() <= max_n and nx.is_connected(h):
            out.append(from_nx(h))
    return tuple(out)


def random_connected(n, rng, p=None):
    """Random spanning tree plus independent extra edges."""
    if p is None:
        p = rng.uniform(0.15, 0.7)
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    g = Graph(n, edges)
    assert is_connected(g)
    return g


def random_corpus(count, n_min, n_max, seed):
    rng = random.Random(seed)
    return [random_connected(rng.randint(n_min, n_max), rng) for _ in range(count)]


@functools.lru_cache(maxsize=None)
def connected_order8(min_degree):
    """All connected 8-vertex graphs with the given minimum degree, up to isomorphism.

    Every connected graph has a vertex whose removal leaves it connected, so
    extending each connected 7-vertex graph by one vertex reaches them all;
    duplicates are removed with nauty canonical certificates.
    """
    import pynauty

    seen = set()
    out = []
    for g7 in atlas_connected(7, 7):
        base = [set(g7.neighbors(v)) for v in range(7)]
        for attach in range(1, 1 << 7):
            if attach.bit_count() < min_degree:
                continue
            adj = {v: set(base[v]) for v in range(7)}
            adj[7] = {v for v in range(7) if attach >> v & 1}
            for v in adj[7]:
                adj[v].add(7)
            if min(len(a) for a in adj.values()) < min_degree:
                continue
            cert = pynauty.certificate(pynauty.Graph(8, adjacency_dict=adj))
            if cert in seen:
                continue
            seen.add(cert)
            out.append(Graph(8, [(u, v) for u in adj for v in adj[u] if u < v]))
    return tuple(out)


def regular_named():
    gs = [cycle(n) for n in range(3, 15)]
    gs += [complete(n) for n in range(2, 9)]
    gs += [complete_bipartite(r, r) for r in range(1, 5)]
    gs += [hypercube(2), hypercube(3)]
    return gs
