"""Decision procedures for monopolies, alliances and signed (total) domination.

Every half-integer comparison is done on doubled integers, e.g. k-control
``deg_M(v) >= deg(v)/2 + k`` is evaluated as ``2*deg_M(v) >= deg(v) + 2k``.
Predicates accept any integer k and evaluate the literal condition; range
checks belong to the solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .graph import Graph, GraphError, VertexSet, boundary


@dataclass(frozen=True)
class SignedAssignment:
    """A +1/-1 labelling stored as the partition ``(b1, b_minus1)``."""

    b1: VertexSet
    b_minus1: VertexSet

    def __post_init__(self):
        if self.b1.n != self.b_minus1.n:
            raise GraphError("b1 and b_minus1 are bound to different vertex counts")
        if not self.b1.isdisjoint(self.b_minus1):
            raise GraphError("b1 and b_minus1 overlap")
        if (self.b1 | self.b_minus1).mask != (1 << self.b1.n) - 1:
            raise GraphError("b1 and b_minus1 do not cover every vertex")

    @classmethod
    def from_positive(cls, b1: VertexSet) -> "SignedAssignment":
        return cls(b1, b1.complement())

    @property
    def n(self) -> int:
        return self.b1.n

    @property
    def weight(self) -> int:
        return 2 * len(self.b1) - self.n

    def __call__(self, v: int) -> int:
        return 1 if v in self.b1 else -1


def _deg_in(g: Graph, v: int, mask: int) -> int:
    return (g.neighbor_masks[v] & mask).bit_count()


def _balance(g: Graph, v: int, mask: int) -> int:
    """``deg_S(v) - deg_{V-S}(v)``, which is also ``f(N(v))`` for ``B_1 = S``."""
    return 2 * _deg_in(g, v, mask) - g.degrees[v]


# k-control and k-monopolies

def is_k_controlled(g: Graph, m: VertexSet, v: int, k: int) -> bool:
    g.check_vertex(v)
    g.bind(m)
    return 2 * _deg_in(g, v, m.mask) >= g.degrees[v] + 2 * k


def control_forms(g: Graph, m: VertexSet, v: int, k: int) -> tuple[bool, bool, bool]:
    """The three equivalent readings of k-control, evaluated independently.

    Returns ``(deg_M >= deg/2 + k, deg_M >= deg_{V-M} + 2k, deg_{V-M} <= deg/2 - k)``.
    """
    g.check_vertex(v)
    g.bind(m)
    inside = _deg_in(g, v, m.mask)
    outside = _deg_in(g, v, m.complement().mask)
    deg = g.degrees[v]
    return (
        2 * inside >= deg + 2 * k,
        inside >= outside + 2 * k,
        2 * outside <= deg - 2 * k,
    )


def monopoly_violation(g: Graph, m: VertexSet, k: int) -> int | None:
    """First vertex not k-controlled by ``m``, or None."""
    g.bind(m)
    for v in g.vertices():
        if 2 * _deg_in(g, v, m.mask) < g.degrees[v] + 2 * k:
            return v
    return None


def is_k_monopoly(g: Graph, m: VertexSet, k: int) -> bool:
    if not g.bind(m):
        raise GraphError("a k-monopoly must be nonempty")
    return monopoly_violation(g, m, k) is None


# domination

def total_domination_violation(g: Graph, d: VertexSet) -> int | None:
    g.bind(d)
    for v in g.vertices():
        if not g.neighbor_masks[v] & d.mask:
            return v
    return None


def is_total_dominating(g: Graph, d: VertexSet) -> bool:
    return total_domination_violation(g, d) is None


def is_dominating(g: Graph, d: VertexSet) -> bool:
    g.bind(d)
    return all(v in d or g.neighbor_masks[v] & d.mask for v in g.vertices())


# signed domination

def _signed_violations(g: Graph, f: SignedAssignment, k: int, closed: bool) -> Iterator[int]:
    if f.n != g.n:
        raise GraphError("assignment bound to a different vertex count")
    mask = f.b1.mask
    for v in g.vertices():
        total = _balance(g, v, mask)
        if closed:
            total += 1 if mask >> v & 1 else -1
        if total < k:
            yield v


def signed_total_violation(g: Graph, f: SignedAssignment, k: int) -> int | None:
    return next(_signed_violations(g, f, k, closed=False), None)


def signed_violation(g: Graph, f: SignedAssignment, k: int) -> int | None:
    return next(_signed_violations(g, f, k, closed=True), None)


def is_signed_total_k_dominating(g: Graph, f: SignedAssignment, k: int) -> bool:
    """True iff ``f(N(v)) >= k`` for every vertex."""
    return signed_total_violation(g, f, k) is None


def is_signed_k_dominating(g: Graph, f: SignedAssignment, k: int) -> bool:
    """True iff ``f(N[v]) >= k`` for every vertex."""
    return signed_violation(g, f, k) is None


# alliances

def _undominated(g: Graph, s: VertexSet) -> int | None:
    for v in g.vertices():
        if not (s.mask >> v & 1 or g.neighbor_masks[v] & s.mask):
            return v
    return None


def defensive_violation(g: Graph, s: VertexSet, k: int, global_: bool = False) -> int | None:
    g.bind(s)
    for v in s:
        if _balance(g, v, s.mask) < k:
            return v
    return _undominated(g, s) if global_ else None


def offensive_violation(g: Graph, s: VertexSet, k: int, global_: bool = False) -> int | None:
    g.bind(s)
    if s:
        for v in boundary(g, s):
            if _balance(g, v, s.mask) < k:
                return v
    return _undominated(g, s) if global_ else None


def powerful_violation(g: Graph, s: VertexSet, k: int, global_: bool = False) -> int | None:
    v = defensive_violation(g, s, k, global_)
    return v if v is not None else offensive_violation(g, s, k + 2, global_)


def is_defensive_k_alliance(g: Graph, s: VertexSet, k: int, global_: bool = False) -> bool:
    """Every member has at least k more neighbours inside than outside."""
    return bool(g.bind(s)) and defensive_violation(g, s, k, global_) is None


def is_offensive_k_alliance(g: Graph, s: VertexSet, k: int, global_: bool = False) -> bool:
    """Every boundary vertex has at least k more neighbours in ``s`` than outside.

    Vacuously true when the boundary is empty.
    """
    return bool(g.bind(s)) and offensive_violation(g, s, k, global_) is None


def is_powerful_k_alliance(g: Graph, s: VertexSet, k: int, global_: bool = False) -> bool:
    return (is_defensive_k_alliance(g, s, k, global_)
            and is_offensive_k_alliance(g, s, k + 2, global_))


def is_global_def_off_alliance(g: Graph, s: VertexSet, k: int) -> bool:
    return (is_defensive_k_alliance(g, s, k, global_=True)
            and is_offensive_k_alliance(g, s, k, global_=True))


# uniform access by problem name, used by the solver oracle and the CLI

PROBLEMS = ("monopoly", "total-dom", "def-off-alliance", "signed-total", "signed", "powerful")

SIGNED_PROBLEMS = frozenset({"signed-total", "signed"})


def set_predicate(problem: str, k: int) -> Callable[[Graph, VertexSet], bool]:
    """Feasibility test on the candidate set (``B_1`` for signed problems)."""
    if problem == "monopoly":
        return lambda g, s: bool(s) and is_k_monopoly(g, s, k)
    if problem == "total-dom":
        return is_total_dominating
    if problem == "def-off-alliance":
        return lambda g, s: is_global_def_off_alliance(g, s, k)
    if problem == "signed-total":
        return lambda g, s: is_signed_total_k_dominating(g, SignedAssignment.from_positive(s), k)
    if problem == "signed":
        return lambda g, s: is_signed_k_dominating(g, SignedAssignment.from_positive(s), k)
    if problem == "powerful":
        return lambda g, s: is_powerful_k_alliance(g, s, k, global_=True)
    raise ValueError(f"unknown problem {problem!r}")


def first_violation(problem: str, g: Graph, s: VertexSet, k: int) -> int | None:
    if problem == "monopoly":
        return monopoly_violation(g, s, k)
    if problem == "total-dom":
        return total_domination_violation(g, s)
    if problem == "def-off-alliance":
        v = defensive_violation(g, s, k, True)
        return v if v is not None else offensive_violation(g, s, k, True)
    if problem == "signed-total":
        return signed_total_violation(g, SignedAssignment.from_positive(s), k)
    if problem == "signed":
        return signed_violation(g, SignedAssignment.from_positive(s), k)
    if problem == "powerful":
        return powerful_violation(g, s, k, True)
    raise ValueError(f"unknown problem {problem!r}")
