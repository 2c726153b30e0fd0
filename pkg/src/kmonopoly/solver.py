"""Exact minimisation for monopolies, alliances and signed (total) domination.

Each problem is encoded as per-vertex neighbour-count requirements on the
chosen set T (``B_1`` for signed problems), see :func:`requirements`. One
branch-and-bound core (:mod:`kmonopoly.kernel`) then minimises ``|T|``.
Signed weights are ``2|B_1| - n``, strictly increasing in ``|B_1|``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import kernel
from .bounds import BoundRecord, applicable_bounds, degree_lower_bound
from .families import FamilySpec
from .graph import Graph, GraphError, VertexSet, check_k, is_connected
from .predicates import SIGNED_PROBLEMS, SignedAssignment, set_predicate

MAX_N = 64
SPLIT_MIN_N = 20
SPLIT_DEPTH = 4


class SolverError(ValueError):
    pass


class SizeGuardError(SolverError):
    def __init__(self, n: int):
        super().__init__(f"n={n} exceeds the exact-search limit of {MAX_N}; "
                         "pass max_n_override=True to try anyway")
        self.n = n


@dataclass
class SolveReport:
    problem: str
    k: int | None
    status: str  # "optimal" or "infeasible"
    optimum: int | None
    witness: VertexSet | SignedAssignment | None
    nodes_explored: int
    bounds_used: list[BoundRecord] = field(default_factory=list)
    backend: str = "python"
    notes: list[str] = field(default_factory=list)

    @property
    def witness_set(self) -> VertexSet | None:
        """The chosen vertex set (``B_1`` for signed problems)."""
        if isinstance(self.witness, SignedAssignment):
            return self.witness.b1
        return self.witness

    def as_dict(self) -> dict:
        ws = self.witness_set
        return {
            "problem": self.problem,
            "k": self.k,
            "status": self.status,
            "optimum": self.optimum,
            "witness": ws.sorted() if ws is not None else None,
            "bounds": [b.as_dict() for b in self.bounds_used],
            "stats": {"nodes_explored": self.nodes_explored, "backend": self.backend},
            "notes": list(self.notes),
        }


def _half_up(x: int) -> int:
    return -(-x // 2)


def requirements(g: Graph, problem: str, k: int | None) -> tuple[list[int], list[int], bool]:
    """``(req_in, req_out, allow_empty)`` encoding ``problem`` at parameter ``k``.

    A set T is feasible iff each member v has ``req_in[v]`` neighbours in T,
    each non-member has ``req_out[v]``, and T is nonempty unless allowed.
    """
    req_in, req_out = [], []
    for d in g.degrees:
        if problem == "monopoly":
            a = b = _half_up(d + 2 * k)
        elif problem == "total-dom":
            a = b = 1
        elif problem == "def-off-alliance":
            a = _half_up(d + k)
            b = max(1, a)
        elif problem == "signed-total":
            a = b = _half_up(d + k)
        elif problem == "signed":
            a, b = _half_up(d + k - 1), _half_up(d + k + 1)
        elif problem == "powerful":
            a, b = _half_up(d + k), max(1, _half_up(d + k + 2))
        else:
            raise ValueError(f"unknown problem {problem!r}")
        req_in.append(a)
        req_out.append(b)
    return req_in, req_out, problem in SIGNED_PROBLEMS


def _feasible(nbr, req_in, req_out, allow_empty, mask) -> bool:
    if not mask and not allow_empty:
        return False
    for v, nb in enumerate(nbr):
        need = req_in[v] if mask >> v & 1 else req_out[v]
        if (nb & mask).bit_count() < need:
            return False
    return True


def _greedy(g: Graph, req_in, req_out, allow_empty) -> int | None:
    """A minimal feasible set, by deleting vertices from V in ascending degree order."""
    nbr = g.neighbor_masks
    mask = (1 << g.n) - 1
    if not _feasible(nbr, req_in, req_out, allow_empty, mask):
        return None
    for v in sorted(g.vertices(), key=lambda u: (g.degrees[u], u)):
        trial = mask & ~(1 << v)
        if _feasible(nbr, req_in, req_out, allow_empty, trial):
            mask = trial
    return mask


def _run_subtree(job):
    return kernel.search(*job)


def _minimise(g: Graph, problem: str, k: int | None, *, stop_at: int, workers: int,
              backend: str | None, max_n_override: bool):
    """Return ``(mask or None, nodes, backend)`` for the canonical optimum."""
    n = g.n
    if n > MAX_N and not max_n_override:
        raise SizeGuardError(n)
    backend = kernel.resolve(backend, n)
    req_in, req_out, allow_empty = requirements(g, problem, k)
    nbr = list(g.neighbor_masks)
    monotone = all(a <= b for a, b in zip(req_in, req_out))

    incumbent = _greedy(g, req_in, req_out, allow_empty)
    if incumbent is None and monotone:
        # every superset of a feasible set is feasible, so V decides feasibility
        return None, 0, backend
    best = incumbent.bit_count() if incumbent is not None else n + 1
    best_mask = incumbent if incumbent is not None else 0
    nodes = 0

    if best > stop_at:
        order = sorted(range(n), key=lambda v: (-g.degrees[v], v))
        depth = SPLIT_DEPTH if n >= SPLIT_MIN_N else 0
        jobs = []
        for bits in itertools.product((1, 0), repeat=depth):
            s0 = x0 = 0
            for v, b in zip(order, bits):
                if b:
                    s0 |= 1 << v
                else:
                    x0 |= 1 << v
            jobs.append((backend, nbr, req_in, req_out, order, depth, s0, x0,
                         best, best_mask, allow_empty, False, stop_at))
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_run_subtree, jobs))
        else:
            # every subtree starts from the same incumbent so that node counts
            # do not depend on the worker count
            results = [_run_subtree(job) for job in jobs]
        for size, mask, count in results:
            nodes += count
            if size < best:
                best, best_mask = size, mask

    if best > n:
        return None, nodes, backend
    # canonical witness: first hit of an include-first search in index order
    size, mask, count = kernel.search(backend, nbr, req_in, req_out, list(range(n)), 0, 0, 0,
                                      best + 1, 0, allow_empty, True, -1)
    if size != best or not _feasible(nbr, req_in, req_out, allow_empty, mask):
        raise RuntimeError(f"canonicalisation disagreed with optimum {best} (got {size})")
    return mask, nodes + count, backend


def _no_isolated(g: Graph, what: str) -> None:
    if g.n == 0 or g.has_isolated_vertex():
        raise GraphError(f"graph has an isolated vertex; {what} is undefined")


P5_NOTE = ("P5 check: exhaustive enumeration of all 32 vertex subsets finds no open "
           "0-monopoly with two vertices; the minimum is 3, so the value 2 sometimes "
           "quoted for P5 is incorrect")


def _is_p5(g: Graph) -> bool:
    return g.n == 5 and g.m == 4 and sorted(g.degrees) == [1, 1, 2, 2, 2] and is_connected(g)


def min_k_monopoly(g: Graph, k: int, *, workers: int = 1, backend: str | None = None,
                   max_n_override: bool = False, spec: FamilySpec | None = None) -> SolveReport:
    """Minimum open k-monopoly with a lexicographically smallest witness."""
    check_k(g, k)
    records = applicable_bounds(g, k, spec)
    lower = degree_lower_bound(g, k)
    mask, nodes, used = _minimise(g, "monopoly", k, stop_at=lower, workers=workers,
                                  backend=backend, max_n_override=max_n_override)
    if mask is None:
        raise RuntimeError("V is always a k-monopoly for valid k; search reported none")
    optimum = mask.bit_count()
    bad = [r.name for r in records if r.proven and not r.holds_for(optimum)]
    if bad:
        raise RuntimeError(f"optimum {optimum} violates bounds {bad}")
    notes = [f"unproven bound {r.name} = {r.value} ({r.side}) fails: optimum is {optimum}"
             for r in records if not r.proven and not r.holds_for(optimum)]
    if k == 0 and _is_p5(g):
        notes.append(P5_NOTE if brute_force(g, "monopoly", 0)[0] == 3 else
                     "P5 check: enumeration did not confirm the value 3")
    return SolveReport("monopoly", k, "optimal", optimum, VertexSet(g.n, mask), nodes,
                       records, used, notes)


def _set_report(g, problem, k, stop_at, **kw) -> SolveReport:
    mask, nodes, used = _minimise(g, problem, k, stop_at=stop_at, **kw)
    if mask is None:
        return SolveReport(problem, k, "infeasible", None, None, nodes, backend=used)
    return SolveReport(problem, k, "optimal", mask.bit_count(), VertexSet(g.n, mask),
                       nodes, backend=used)


def _signed_report(g, problem, k, **kw) -> SolveReport:
    mask, nodes, used = _minimise(g, problem, k, stop_at=0, **kw)
    if mask is None:
        return SolveReport(problem, k, "infeasible", None, None, nodes, backend=used)
    f = SignedAssignment.from_positive(VertexSet(g.n, mask))
    return SolveReport(problem, k, "optimal", f.weight, f, nodes, backend=used)


def min_total_dominating(g: Graph, *, workers: int = 1, backend: str | None = None,
                         max_n_override: bool = False) -> SolveReport:
    """Total domination number; infeasible when ``g`` has an isolated vertex."""
    return _set_report(g, "total-dom", None, 2, workers=workers, backend=backend,
                       max_n_override=max_n_override)


def min_global_def_off_alliance(g: Graph, k: int, *, workers: int = 1,
                                backend: str | None = None,
                                max_n_override: bool = False) -> SolveReport:
    """Smallest set that is both a global defensive and a global offensive k-alliance."""
    return _set_report(g, "def-off-alliance", k, 1, workers=workers, backend=backend,
                       max_n_override=max_n_override)


def min_global_powerful_alliance(g: Graph, k: int, *, workers: int = 1,
                                 backend: str | None = None,
                                 max_n_override: bool = False) -> SolveReport:
    return _set_report(g, "powerful", k, 1, workers=workers, backend=backend,
                       max_n_override=max_n_override)


def min_signed_total_k_dom(g: Graph, k: int, *, workers: int = 1, backend: str | None = None,
                           max_n_override: bool = False) -> SolveReport:
    """Minimum weight of a signed total k-dominating function (k >= 1)."""
    if k < 1:
        raise SolverError("signed total k-domination requires k >= 1")
    return _signed_report(g, "signed-total", k, workers=workers, backend=backend,
                          max_n_override=max_n_override)


def min_signed_k_dom(g: Graph, k: int, *, workers: int = 1, backend: str | None = None,
                     max_n_override: bool = False) -> SolveReport:
    """Minimum weight of a signed (closed-neighbourhood) k-dominating function."""
    if k < 1:
        raise SolverError("signed k-domination requires k >= 1")
    return _signed_report(g, "signed", k, workers=workers, backend=backend,
                          max_n_override=max_n_override)


def solve(g: Graph, problem: str, k: int | None = None, **kw) -> SolveReport:
    if problem == "monopoly":
        return min_k_monopoly(g, k, **kw)
    kw.pop("spec", None)
    if problem == "total-dom":
        return min_total_dominating(g, **kw)
    if problem == "def-off-alliance":
        return min_global_def_off_alliance(g, k, **kw)
    if problem == "signed-total":
        return min_signed_total_k_dom(g, k, **kw)
    if problem == "signed":
        return min_signed_k_dom(g, k, **kw)
    if problem == "powerful":
        return min_global_powerful_alliance(g, k, **kw)
    raise ValueError(f"unknown problem {problem!r}")


def brute_force(g: Graph, problem: str, k: int | None = None) -> tuple[int | None, VertexSet | None]:
    """Plain enumeration oracle: smallest feasible set by increasing size.

    Uses the predicates directly, never the requirement encoding. Returns
    ``(size, lexicographically smallest witness)`` or ``(None, None)``; the
    size is ``|B_1|`` for signed problems.
    """
    pred = set_predicate(problem, k)
    start = 0 if problem in SIGNED_PROBLEMS else 1
    for size in range(start, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            s = VertexSet.of(g.n, combo)
            if pred(g, s):
                return size, s
    return None, None
