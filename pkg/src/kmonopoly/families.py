"""Generators for the named graph families.

Vertex numbering is fixed per family so that witnesses are reproducible:

* ``path``/``cycle``: consecutive, ``i ~ i+1``.
* ``wheel``/``fan``: hub is vertex 0, rim (cycle or path) is ``1..n-1``.
* ``complete_bipartite:r,t``: side of size r is ``0..r-1``, the other ``r..r+t-1``.
* ``hypercube:d``: bit strings, adjacent when they differ in one bit.
* ``family_f:t``: the clique ``v_i = i`` then the satellites ``u_i = t + i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph

FAMILIES = (
    "path", "cycle", "complete", "complete_bipartite",
    "wheel", "fan", "hypercube", "family_f",
)


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise FamilyError(f"unknown family {self.name!r}; choose from {', '.join(FAMILIES)}")
        _validate(self.name, self.params)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``"cycle:8"`` or ``"complete_bipartite:3,4"``."""
        name, sep, rest = text.strip().partition(":")
        if not sep or not rest:
            raise FamilyError(f"generator spec {text!r} must look like name:params")
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError:
            raise FamilyError(f"non-integer parameter in {text!r}") from None
        return cls(name, params)

    @property
    def order(self) -> int:
        p = self.params
        return {
            "complete_bipartite": lambda: p[0] + p[1],
            "hypercube": lambda: 1 << p[0],
            "family_f": lambda: 2 * p[0],
        }.get(self.name, lambda: p[0])()

    def __str__(self) -> str:
        return f"{self.name}:{','.join(map(str, self.params))}"


_MIN_ORDER = {"path": 2, "cycle": 3, "complete": 2, "wheel": 4, "fan": 3, "hypercube": 1}


def _validate(name: str, params: tuple[int, ...]) -> None:
    want = 2 if name == "complete_bipartite" else 1
    if len(params) != want:
        raise FamilyError(f"{name} takes {want} parameter(s), got {len(params)}")
    if name == "complete_bipartite":
        if min(params) < 1:
            raise FamilyError("complete_bipartite sides must be at least 1")
    elif name == "family_f":
        t = params[0]
        if t < 5 or (t - 1) % 4:
            raise FamilyError(f"family_f needs t >= 5 with t - 1 divisible by 4, got t={t}")
    elif params[0] < _MIN_ORDER[name]:
        raise FamilyError(f"{name} needs parameter >= {_MIN_ORDER[name]}, got {params[0]}")


def path(n: int) -> Graph:
    return generate(FamilySpec("path", (n,)))


def cycle(n: int) -> Graph:
    return generate(FamilySpec("cycle", (n,)))


def complete(n: int) -> Graph:
    return generate(FamilySpec("complete", (n,)))


def complete_bipartite(r: int, t: int) -> Graph:
    return generate(FamilySpec("complete_bipartite", (r, t)))


def wheel(n: int) -> Graph:
    return generate(FamilySpec("wheel", (n,)))


def fan(n: int) -> Graph:
    return generate(FamilySpec("fan", (n,)))


def hypercube(d: int) -> Graph:
    return generate(FamilySpec("hypercube", (d,)))


def family_f(t: int) -> Graph:
    return generate(FamilySpec("family_f", (t,)))


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    name, p = spec.name, spec.params
    if name == "path":
        n = p[0]
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if name == "cycle":
        n = p[0]
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if name == "complete":
        return Graph(p[0], combinations(range(p[0]), 2))
    if name == "complete_bipartite":
        r, t = p
        return Graph(r + t, [(a, r + b) for a in range(r) for b in range(t)])
    if name == "wheel":
        rim = p[0] - 1
        edges = [(0, i) for i in range(1, rim + 1)]
        edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
        return Graph(p[0], edges)
    if name == "fan":
        rim = p[0] - 1
        edges = [(0, i) for i in range(1, rim + 1)]
        edges += [(i, i + 1) for i in range(1, rim)]
        return Graph(p[0], edges)
    if name == "hypercube":
        d = p[0]
        return Graph(1 << d, [(x, x | 1 << b) for x in range(1 << d)
                              for b in range(d) if not x >> b & 1])
    # family_f: K_t on v_0..v_{t-1}; u_i joined to v_i .. v_{i+(t-3)/2} (mod t)
    t = p[0]
    edges = list(combinations(range(t), 2))
    for i in range(t):
        edges += [(t + i, (i + j) % t) for j in range((t - 1) // 2)]
    return Graph(2 * t, edges)
