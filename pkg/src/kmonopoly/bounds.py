"""Closed-form bounds and exact values for the k-monopoly number.

All floor/ceiling arithmetic uses Python's floor division, which is
mathematical floor for negative numerators as well.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import FamilySpec, generate
from .graph import Graph, MonopolyUndefinedError, check_k, is_connected


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class BoundRecord:
    name: str
    value: int
    side: str  # "lower", "upper" or "exact"
    applicability: str
    proven: bool = True

    def holds_for(self, optimum: int) -> bool:
        if self.side == "lower":
            return self.value <= optimum
        if self.side == "upper":
            return self.value >= optimum
        return self.value == optimum

    def as_dict(self) -> dict:
        return {"name": self.name, "side": self.side, "value": self.value,
                "applicability": self.applicability, "proven": self.proven}


def general_bounds(g: Graph, k: int) -> tuple[int, int]:
    """``(ceil((Delta + 2k + 2)/2), n - floor((delta - 2k)/2))``.

    The upper value always holds. The lower value is the commonly stated
    degree bound and is not valid in general: when every maximum-degree
    vertex lies outside the optimal set only :func:`degree_lower_bound`
    follows (6 vertices, k = 0, optimum 3 against 4 is the smallest case).
    """
    check_k(g, k)
    lower = _ceil_div(g.max_degree + 2 * k + 2, 2)
    upper = g.n - (g.min_degree - 2 * k) // 2
    return lower, upper


def degree_lower_bound(g: Graph, k: int) -> int:
    """``ceil((Delta + 2k)/2)``, a proven lower bound.

    A maximum-degree vertex u needs ``ceil((Delta + 2k)/2)`` neighbours in M
    whether or not u itself is in M.
    """
    check_k(g, k)
    return max(1, _ceil_div(g.max_degree + 2 * k, 2))


def size_lower_bound(g: Graph, k: int) -> int:
    """``ceil((3kn - m) / 2k)``, a lower bound for k >= 1."""
    if k == 0:
        raise ValueError("the order/size bound is not defined for k = 0")
    if k < 0:
        raise ValueError("the order/size bound is only asserted for k >= 1; "
                         "use size_lower_bound_experimental for negative k")
    check_k(g, k)
    return _ceil_div(3 * k * g.n - g.m, 2 * k)


def size_lower_bound_experimental(g: Graph, k: int) -> int:
    """The same formula for any nonzero valid k, including negative k.

    For k < 0 the derivation divides by a negative number, so the value is
    not guaranteed to be a lower bound. Meant for experiments only.
    """
    if k == 0:
        raise ValueError("k must be nonzero")
    check_k(g, k)
    return _ceil_div(3 * k * g.n - g.m, 2 * k)


def regular_lower_bound(g: Graph, k: int) -> int:
    """``ceil(n(2k + r) / 2r)`` for an r-regular graph."""
    if not g.is_regular():
        raise ValueError("graph is not regular")
    check_k(g, k)
    r = g.min_degree
    return _ceil_div(g.n * (2 * k + r), 2 * r)


def _cycle_path_value(n: int) -> int:
    rem = n % 4
    if rem == 0:
        return n // 2
    if rem == 2:
        return (n + 2) // 2
    return (n + 1) // 2


def exact_formula(spec: FamilySpec | str, k: int) -> int:
    """Closed-form k-monopoly number for the families where one is known."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    check_k(generate(spec), k)
    name, p = spec.name, spec.params
    if name == "complete":
        return _ceil_div(p[0] + 2 * k + 1, 2)
    if name == "complete_bipartite":
        r, t = p
        return _ceil_div(r + 2 * k, 2) + _ceil_div(t + 2 * k, 2)
    if name in ("cycle", "path") and k == 0:
        return _cycle_path_value(p[0])
    if name in ("wheel", "fan") and k == 1:
        return p[0]
    if name == "cycle" and k == 1:
        return p[0]
    if name == "hypercube" and k == p[0] // 2:
        return spec.order
    raise ValueError(f"no closed form for {spec} at k={k}")


# (sorted degree sequence, size) of P_2, P_3, P_4, C_3, C_4
_MONOPOLY_TWO = {
    ((1, 1), 1): "P2",
    ((1, 1, 2), 2): "P3",
    ((1, 1, 2, 2), 3): "P4",
    ((2, 2, 2), 3): "C3",
    ((2, 2, 2, 2), 4): "C4",
}


def monopoly_two_name(g: Graph) -> str | None:
    """Name of the graph among P_2, P_3, P_4, C_3, C_4 that ``g`` is isomorphic to.

    Degree multiset plus edge count is a complete invariant among graphs on
    at most four vertices for these five targets.
    """
    if g.n > 4:
        return None
    return _MONOPOLY_TWO.get((tuple(sorted(g.degrees)), g.m))


def is_monopoly_number_two(g: Graph) -> bool:
    """True iff ``g`` is P_2, P_3, P_4, C_3 or C_4.

    These are the connected graphs with k-monopoly number 2 for some k >= 0.
    Negative k adds more, e.g. K_4 at k = -1 where any edge is a 2-set.
    """
    return monopoly_two_name(g) is not None


def is_monopoly_number_n(g: Graph, k: int) -> bool:
    """True iff the k-monopoly number equals the order of ``g``."""
    if g.n == 0 or g.has_isolated_vertex():
        raise MonopolyUndefinedError("graph has an isolated vertex; k-monopolies are undefined")
    delta = g.min_degree
    if k != delta // 2:
        return False
    targets = {delta, delta + 1} if delta % 2 == 0 else {delta}
    deg = g.degrees
    return all(any(deg[u] in targets for u in g.neighbors(v)) for v in g.vertices())


def applicable_bounds(g: Graph, k: int, spec: FamilySpec | None = None) -> list[BoundRecord]:
    """Every bound on the k-monopoly number that applies to ``(g, k)``."""
    check_k(g, k)
    lower, upper = general_bounds(g, k)
    out = [
        BoundRecord("degree_lower", lower, "lower", "stated for any graph; fails on some",
                    proven=False),
        BoundRecord("degree_lower_proven", degree_lower_bound(g, k), "lower",
                    "any graph, valid k"),
        BoundRecord("degree_upper", upper, "upper", "any graph, valid k"),
    ]
    if k >= 1:
        out.append(BoundRecord("size_lower", size_lower_bound(g, k), "lower", "k >= 1"))
    if g.is_regular():
        out.append(BoundRecord("regular_lower", regular_lower_bound(g, k), "lower",
                               f"{g.min_degree}-regular"))
    if is_monopoly_number_n(g, k):
        out.append(BoundRecord("order_characterization", g.n, "exact",
                               "k = floor(delta/2) and degree-neighbour condition"))
    if spec is not None:
        try:
            out.append(BoundRecord(f"formula:{spec.name}", exact_formula(spec, k), "exact",
                                   str(spec)))
        except ValueError:
            pass
    if k == 0 and is_connected(g) and monopoly_two_name(g) is not None:
        out.append(BoundRecord("monopoly_two", 2, "exact", monopoly_two_name(g)))
    return out
