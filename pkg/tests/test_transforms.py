import random

import pytest
from hypothesis import given, settings, strategies as st

import corpus
import oracles
from kmonopoly import SignedAssignment, VertexSet
from kmonopoly.families import complete, cycle
from kmonopoly.predicates import (
    is_global_def_off_alliance, is_k_monopoly, is_powerful_k_alliance, is_signed_k_dominating,
    is_signed_total_k_dominating,
)
from kmonopoly.transforms import (
    CertificateError, monopoly_to_signed_total, powerful_to_signed, signed_to_powerful,
    signed_total_to_monopoly,
)


def test_monopoly_to_signed_total_examples():
    g = complete(5)
    f = monopoly_to_signed_total(g, VertexSet.of(5, [0, 1, 2, 3]), 1)
    assert f.weight == 3
    assert is_signed_total_k_dominating(g, f, 2)
    f = monopoly_to_signed_total(g, g.full_set())
    assert all(f(v) == 1 for v in range(5))
    c8 = cycle(8)
    f = monopoly_to_signed_total(c8, VertexSet.of(8, [0, 1, 4, 5]))
    assert is_k_monopoly(c8, VertexSet.of(8, [0, 1, 4, 5]), 0)
    assert not is_signed_total_k_dominating(c8, f, 2)


def test_monopoly_to_signed_total_strict():
    c8 = cycle(8)
    with pytest.raises(CertificateError, match="k >= 1"):
        monopoly_to_signed_total(c8, VertexSet.of(8, [0, 1, 4, 5]), 0, strict=True)
    with pytest.raises(CertificateError) as exc:
        monopoly_to_signed_total(c8, VertexSet.of(8, [0, 1, 4, 5]), 1, strict=True)
    assert exc.value.vertex is not None


def test_signed_total_to_monopoly_examples():
    g = complete(5)
    m = signed_total_to_monopoly(g, SignedAssignment.from_positive(VertexSet.of(5, [0, 1, 2, 3])), 2)
    assert m.sorted() == [0, 1, 2, 3] and is_k_monopoly(g, m, 1)
    c4 = cycle(4)
    assert signed_total_to_monopoly(c4, SignedAssignment.from_positive(c4.full_set()), 2) == c4.full_set()
    c8 = cycle(8)
    with pytest.raises(CertificateError) as exc:
        signed_total_to_monopoly(c8, SignedAssignment.from_positive(VertexSet.of(8, [0, 1, 4, 5])), 2)
    assert exc.value.vertex is not None
    with pytest.raises(CertificateError, match="even"):
        signed_total_to_monopoly(c4, SignedAssignment.from_positive(c4.full_set()), 3)


def test_powerful_examples():
    k3 = complete(3)
    f = powerful_to_signed(k3, VertexSet.of(3, [0, 1]), 0)
    assert f.weight == 1 and is_signed_k_dominating(k3, f, 1)
    g = cycle(6)
    f = powerful_to_signed(g, g.full_set(), 0)
    assert f.b_minus1.sorted() == []
    c8 = cycle(8)
    with pytest.raises(CertificateError) as exc:
        powerful_to_signed(c8, VertexSet.of(8, [0, 1, 4, 5]), 0)
    assert exc.value.case in (1, 2) and exc.value.vertex is not None


def test_signed_to_powerful_cases():
    c8 = cycle(8)
    with pytest.raises(CertificateError) as exc:
        signed_to_powerful(c8, SignedAssignment.from_positive(VertexSet.of(8, [0, 1, 4, 5])), 0)
    assert exc.value.case in (3, 4)
    # case 4: vertex 3 in B_-1 has closed sum -1
    f = SignedAssignment.from_positive(VertexSet.of(5, [0, 1, 2]))
    with pytest.raises(CertificateError) as exc:
        signed_to_powerful(cycle(5), f, 0)
    assert (exc.value.vertex, exc.value.case) == (3, 4)
    k3 = complete(3)
    assert signed_to_powerful(k3, SignedAssignment.from_positive(VertexSet.of(3, [0, 1])), 0).sorted() == [0, 1]


def test_non_strict_builds_image():
    c8 = cycle(8)
    f = SignedAssignment.from_positive(VertexSet.of(8, [0, 1, 4, 5]))
    assert signed_total_to_monopoly(c8, f, 2, strict=False).sorted() == [0, 1, 4, 5]
    assert signed_to_powerful(c8, f, 0, strict=False).sorted() == [0, 1, 4, 5]


def test_round_trip_on_atlas():
    for g in corpus.atlas_connected(6):
        for k in range(1, g.min_degree // 2 + 1):
            for mask in range(1, 1 << g.n):
                m = VertexSet(g.n, mask)
                if is_k_monopoly(g, m, k):
                    f = monopoly_to_signed_total(g, m, k, strict=True)
                    assert signed_total_to_monopoly(g, f, 2 * k) == m
                    assert is_global_def_off_alliance(g, m, 2 * k)


def test_powerful_equivalence_against_oracle():
    rng = random.Random(7)
    for g in corpus.atlas_connected(6):
        adj = oracles.adj_of(g)
        for k in range(0, g.min_degree + 1):
            for mask in rng.sample(range(1, 1 << g.n), min(20, (1 << g.n) - 1)):
                s = VertexSet(g.n, mask)
                f = SignedAssignment.from_positive(s)
                lhs = oracles.powerful(adj, set(s), k, glob=True)
                assert lhs == is_powerful_k_alliance(g, s, k, global_=True)
                assert lhs == is_signed_k_dominating(g, f, k + 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 10), st.integers(0, 2**10 - 1), st.integers(0, 10**6))
def test_transforms_agree_with_predicates(n, raw, seed):
    g = corpus.random_connected(n, random.Random(seed))
    mask = raw & ((1 << n) - 1)
    m = VertexSet(n, mask)
    f = monopoly_to_signed_total(g, m)
    assert f.b1 == m and f.weight == 2 * len(m) - n
    for k in range(1, g.min_degree // 2 + 1):
        assert is_signed_total_k_dominating(g, f, 2 * k) == (bool(m) and is_k_monopoly(g, m, k))
