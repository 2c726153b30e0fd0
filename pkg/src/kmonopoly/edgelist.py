"""Plain edge-list format: a header ``n m`` followed by m lines ``u v``."""

from __future__ import annotations

from .graph import Graph


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _ints(text: str, lineno: int, count: int) -> list[int]:
    fields = text.split()
    if len(fields) != count:
        raise ParseError(lineno, f"expected {count} integers, got {text.strip()!r}")
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise ParseError(lineno, f"non-integer field in {text.strip()!r}") from None


def parse_edge_list(text: str) -> Graph:
    lines = [(i, ln) for i, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if not lines:
        raise ParseError(1, "missing 'n m' header")
    lineno, header = lines[0]
    n, m = _ints(header, lineno, 2)
    if n < 0 or m < 0:
        raise ParseError(lineno, "n and m must be nonnegative")
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(where, f"header declares {m} edges, found {len(body)}")
    seen = set()
    edges = []
    for lineno, ln in body:
        u, v = _ints(ln, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex out of range 0..{n - 1}")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    """Canonical text: header, then edges ``u v`` with ``u < v`` sorted."""
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
