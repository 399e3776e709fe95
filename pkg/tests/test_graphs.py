import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordspec.families import complete, complete_multipartite, cycle, path, star
from chordspec.graphs import (
    Graph6Error,
    GraphError,
    apex_partition,
    disjoint_union,
    edge_counts,
    graph6_decode,
    graph6_encode,
    graph_from_mask,
    is_isomorphic,
    join,
    make_graph,
    mask_from_graph,
)
from oracles import oracle_isomorphic


def random_graph(rng, n, p=0.5):
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return make_graph(n, edges)


def test_make_graph_examples():
    k3 = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert k3.edge_count == 3
    empty = make_graph(2, [])
    assert empty.edge_count == 0
    dup = make_graph(4, [(0, 1), (0, 1)])
    assert dup.edge_count == 1  # idempotent duplicates


def test_make_graph_errors():
    with pytest.raises(GraphError):
        make_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        make_graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        make_graph(0, [])


def test_symmetry_invariants_after_construction():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 12))
        for u in range(g.n):
            assert not g.has_edge(u, u)
            for v in g.neighbors(u):
                assert g.has_edge(v, u)
        assert g.edge_count * 2 == sum(g.degrees())


def test_join_examples():
    k1 = make_graph(1)
    k4k1 = disjoint_union(complete(4), make_graph(1))
    j = join(k1, k4k1)
    assert j.n == 6 and j.edge_count == 11
    assert join(k1, k1).edge_count == 1  # K2


@given(st.integers(1, 8), st.integers(1, 8), st.randoms())
@settings(max_examples=60, deadline=None)
def test_join_union_cardinalities(a, b, rnd):
    g = random_graph(rnd, a)
    h = random_graph(rnd, b)
    j = join(g, h)
    u = disjoint_union(g, h)
    assert j.n == u.n == a + b
    assert j.edge_count == g.edge_count + h.edge_count + a * b
    assert u.edge_count == g.edge_count + h.edge_count
    assert u.degrees()[:a] == g.degrees()
    assert u.degrees()[a:] == h.degrees()


def test_union_examples():
    two_k4 = disjoint_union(complete(4), complete(4))
    assert two_k4.n == 8 and two_k4.edge_count == 12
    assert disjoint_union(make_graph(1), make_graph(1)).edge_count == 0
    c4k3 = disjoint_union(cycle(4), complete(3))
    assert c4k3.n == 7 and c4k3.edge_count == 7


def test_edge_counts():
    k4 = complete(4)
    assert edge_counts(k4, range(4), range(4)) == 6
    k33 = complete_multipartite(3, 3)
    assert edge_counts(k33, [0, 1, 2], [3, 4, 5]) == 9
    c6 = cycle(6)
    assert edge_counts(c6, [0, 1, 2], [3, 4, 5]) == 2
    with pytest.raises(GraphError):
        edge_counts(k4, [0, 1], [1, 2])


def test_apex_partition_examples():
    from chordspec.families import k11n2_plus

    g = k11n2_plus(6).graph
    part = apex_partition(g, 0)
    assert not part.W
    assert len(part.Z) == 5
    # the second universal vertex sits inside Z and touches everything there,
    # so no neighbor of the apex is isolated within Z
    assert len(part.Z0) == 0
    assert part.Zplus == part.Z

    # a single hub over (edge + two isolated) does leave two vertices
    # isolated inside the neighborhood
    hub = join(make_graph(1), make_graph(4, [(0, 1)]))
    p_hub = apex_partition(hub, 0)
    assert not p_hub.W and len(p_hub.Z) == 4 and len(p_hub.Z0) == 2

    s = star(4)
    p2 = apex_partition(s, 0)
    assert not p2.W and p2.Z0 == p2.Z

    c5 = cycle(5)
    p3 = apex_partition(c5, 0)
    assert len(p3.Z) == 2 and len(p3.W) == 2 and p3.Z0 == p3.Z


def test_apex_partition_partitions_vertices():
    rng = random.Random(5)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 10))
        z = rng.randrange(g.n)
        part = apex_partition(g, z)
        assert part.Z | part.W | {z} == set(range(g.n))
        assert part.Z0 | part.Zplus == part.Z
        assert not part.Z0 & part.Zplus
        for v in part.Z0:
            assert not set(g.neighbors(v)) & part.Z


def test_is_isomorphic_examples():
    assert is_isomorphic(cycle(4), complete_multipartite(2, 2))
    assert not is_isomorphic(star(3), path(4))
    from chordspec.families import k11n2_plus

    built = join(make_graph(2, [(0, 1)]), make_graph(4, [(0, 1)]))
    assert is_isomorphic(built, k11n2_plus(6).graph)


def test_is_isomorphic_against_bruteforce():
    rng = random.Random(99)
    agree = 0
    for _ in range(1000):
        n = rng.randint(1, 6)
        g = random_graph(rng, n, rng.choice((0.3, 0.5, 0.7)))
        if rng.random() < 0.5:
            perm = list(range(n))
            rng.shuffle(perm)
            h = make_graph(n, [(perm[u], perm[v]) for u, v in g.edges()])
        else:
            h = random_graph(rng, n, rng.choice((0.3, 0.5, 0.7)))
        assert is_isomorphic(g, h) == oracle_isomorphic(g, h)
        agree += 1
    assert agree == 1000


def test_graph6_fixed_examples():
    assert graph6_encode(complete(3)) == "Bw"
    assert graph6_encode(path(3)) == "Bg"
    assert graph6_decode("Bw") == complete(3)
    assert graph6_decode(">>graph6<<Bw") == complete(3)


@given(st.integers(1, 20), st.randoms())
@settings(max_examples=200, deadline=None)
def test_graph6_roundtrip(n, rnd):
    g = random_graph(rnd, n)
    assert graph6_decode(graph6_encode(g)) == g


def test_graph6_roundtrip_thousand_random():
    rng = random.Random(2468)
    for _ in range(1000):
        g = random_graph(rng, rng.randint(1, 20), rng.choice((0.2, 0.5, 0.8)))
        assert graph6_decode(graph6_encode(g)) == g


def test_graph6_long_form_roundtrip():
    rng = random.Random(3)
    g = random_graph(rng, 70, 0.1)
    s = graph6_encode(g)
    assert s.startswith("~")
    assert graph6_decode(s) == g
    # boundary: 62 is the last short-header order, 63 the first long one
    g62 = random_graph(rng, 62, 0.05)
    assert not graph6_encode(g62).startswith("~")
    assert graph6_decode(graph6_encode(g62)) == g62
    g63 = random_graph(rng, 63, 0.05)
    assert graph6_encode(g63).startswith("~")
    assert graph6_decode(graph6_encode(g63)) == g63


def test_graph6_malformed():
    with pytest.raises(Graph6Error):
        graph6_decode("")
    with pytest.raises(Graph6Error):
        graph6_decode("B")  # truncated body
    with pytest.raises(Graph6Error):
        graph6_decode("Bww")  # trailing junk
    with pytest.raises(Graph6Error):
        graph6_decode("B\x1f")  # byte below 63
    # nonzero padding bits: n=3 has 3 data bits, pad must be zero
    bad = chr(63 + 3) + chr(63 + 0b111111)
    with pytest.raises(Graph6Error):
        graph6_decode(bad)


def test_mask_conversions_roundtrip():
    rng = random.Random(1)
    for _ in range(100):
        n = rng.randint(1, 10)
        nbits = n * (n - 1) // 2
        mask = rng.randrange(1 << nbits)
        g = graph_from_mask(n, mask)
        assert mask_from_graph(g) == mask
