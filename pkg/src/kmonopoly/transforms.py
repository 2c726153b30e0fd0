"""Certificate conversions between monopolies, alliances and signed functions.

Conversions always build the image object. With ``strict=True`` the source
is checked first and a :class:`CertificateError` names the first violating
vertex.
"""

from __future__ import annotations

from .graph import Graph, VertexSet
from .predicates import (
    SignedAssignment,
    defensive_violation,
    monopoly_violation,
    offensive_violation,
    signed_total_violation,
    signed_violation,
)


class CertificateError(ValueError):
    def __init__(self, message: str, vertex: int | None = None, case: int | None = None):
        super().__init__(message)
        self.vertex = vertex
        self.case = case


def monopoly_to_signed_total(g: Graph, m: VertexSet, k: int | None = None,
                             strict: bool = False) -> SignedAssignment:
    """``(B_1 = M, B_-1 = V - M)``; a k-monopoly with k >= 1 maps to a signed total 2k-dominating function."""
    f = SignedAssignment.from_positive(g.bind(m))
    if strict:
        if k is None or k < 1:
            raise CertificateError("strict monopoly-to-signed conversion needs k >= 1")
        v = monopoly_violation(g, m, k)
        if v is not None or not m:
            raise CertificateError(f"set is not a {k}-monopoly (vertex {v})", v)
    return f


def signed_total_to_monopoly(g: Graph, f: SignedAssignment, level: int,
                             strict: bool = True) -> VertexSet:
    """Recover the k-monopoly ``B_1`` from a signed total ``2k``-dominating function."""
    if level % 2 or level < 2:
        raise CertificateError(f"level must be an even integer >= 2, got {level}")
    if strict:
        v = signed_total_violation(g, f, level)
        if v is not None:
            raise CertificateError(
                f"assignment is not signed total {level}-dominating: vertex {v}", v)
    return f.b1


def powerful_to_signed(g: Graph, s: VertexSet, k: int, strict: bool = True) -> SignedAssignment:
    """A global powerful k-alliance ``S`` gives the signed (k+1)-dominating ``(S, V - S)``.

    Violations are labelled 1 (a member fails the defensive k condition) or
    2 (a non-member fails the offensive (k+2) condition or is undominated).
    """
    g.bind(s)
    if strict:
        if not s:
            raise CertificateError("a powerful alliance must be nonempty")
        v = defensive_violation(g, s, k, global_=False)
        if v is not None:
            raise CertificateError(f"case 1: member {v} fails the defensive {k} condition",
                                   v, 1)
        v = offensive_violation(g, s, k + 2, global_=True)
        if v is not None:
            raise CertificateError(
                f"case 2: non-member {v} fails the offensive {k + 2} condition or is "
                f"undominated", v, 2)
    return SignedAssignment.from_positive(s)


def signed_to_powerful(g: Graph, f: SignedAssignment, k: int, strict: bool = True) -> VertexSet:
    """Inverse of :func:`powerful_to_signed`: ``B_1`` of a signed (k+1)-dominating function.

    Violations are labelled 3 (vertex in ``B_1``) or 4 (vertex in ``B_-1``).
    """
    if strict:
        v = signed_violation(g, f, k + 1)
        if v is not None:
            case = 3 if v in f.b1 else 4
            raise CertificateError(
                f"case {case}: f(N[{v}]) < {k + 1}, not signed {k + 1}-dominating", v, case)
        if not f.b1:
            raise CertificateError("B_1 is empty")
    return f.b1
