from collections import Counter

from hypothesis import given, settings, strategies as st

from osmulticut.dual import EdgeKind, VertexKind, build_dual, dual_edges_of, primal_of
from osmulticut.generators import corpus, random_os
from osmulticut.instance import boundary_split

from conftest import AB, CD


def kinds(d):
    return Counter(e.kind for e in d.edges)


def test_four_cycle_dual(cycle4):
    d = build_dual(cycle4)
    assert Counter(v.kind for v in d.vertices) == {
        VertexKind.FACE: 1, VertexKind.BOUNDARY: 4, VertexKind.PAIR_U: 1, VertexKind.PAIR_V: 1}
    assert (len(d.vertices), len(d.edges), d.N) == (7, 8, 4)
    assert kinds(d) == {EdgeKind.CROSSING: 4, EdgeKind.EXTERNAL: 4}
    assert all(e.cost == 1 for e in d.of_kind(EdgeKind.CROSSING))
    assert all(e.cost == 4 for e in d.of_kind(EdgeKind.EXTERNAL))


def test_two_pairs(cycle4_two_pairs):
    d = build_dual(cycle4_two_pairs)
    assert len(d.vertices) == 9
    assert kinds(d)[EdgeKind.EXTERNAL] == 8


def test_k4_dual(k4_ab):
    d = build_dual(k4_ab)
    assert Counter(v.kind for v in d.vertices)[VertexKind.FACE] == 3
    assert Counter(v.kind for v in d.vertices)[VertexKind.BOUNDARY] == 3
    assert kinds(d) == {EdgeKind.INTERNAL: 3, EdgeKind.CROSSING: 3, EdgeKind.EXTERNAL: 3}
    # the three spokes are the internal edges
    assert sorted(e.primal for e in d.of_kind(EdgeKind.INTERNAL)) == [3, 4, 5]


def test_primal_correspondence(cycle4, k4_ab):
    d = build_dual(cycle4)
    crossing_ab = d.by_primal[AB]
    assert d.edges[crossing_ab].kind is EdgeKind.CROSSING
    assert d.vertices[d.edges[crossing_ab].a].ref == AB
    assert primal_of(d, crossing_ab) == AB
    ext = d.of_kind(EdgeKind.EXTERNAL)[0]
    assert primal_of(d, ext.id) is None

    assert dual_edges_of(d, []) == frozenset()
    assert dual_edges_of(d, [AB, CD]) == {d.by_primal[AB], d.by_primal[CD]}
    assert dual_edges_of(d, range(4)) == {e.id for e in d.edges if e.kind is not EdgeKind.EXTERNAL}

    dk = build_dual(k4_ab)
    internal = dk.of_kind(EdgeKind.INTERNAL)[0]
    a, b = dk.vertices[internal.a].ref, dk.vertices[internal.b].ref
    faces = {f.id: {x.edge for x in f.darts} for f in k4_ab.faces}
    assert faces[a] & faces[b] == {internal.primal}


def check_dual_invariants(inst):
    d = build_dual(inst)
    g = inst.graph
    k, blen = inst.k, len(inst.boundary)
    c = kinds(d)
    assert c[EdgeKind.INTERNAL] + c[EdgeKind.CROSSING] == g.m
    assert sorted(e.primal for e in d.edges if e.primal is not None) == list(range(g.m))
    assert c[EdgeKind.EXTERNAL] == k * blen
    assert d.N == sum(e.cost for e in g.edges)
    for e in d.edges:
        ka, kb = d.vertices[e.a].kind, d.vertices[e.b].kind
        if e.kind is EdgeKind.INTERNAL:
            assert ka is kb is VertexKind.FACE
            assert e.cost == g.edges[e.primal].cost
        elif e.kind is EdgeKind.CROSSING:
            assert {ka, kb} == {VertexKind.BOUNDARY, VertexKind.FACE}
            assert e.cost == g.edges[e.primal].cost
        else:
            assert kb is VertexKind.BOUNDARY and ka in (VertexKind.PAIR_U, VertexKind.PAIR_V)
            assert e.cost == d.N and e.primal is None
    for p in inst.pairs:
        split = boundary_split(inst, p.index)
        u, v = d.pair_terminals[p.index]
        deg = Counter(x for e in d.of_kind(EdgeKind.EXTERNAL) for x in (e.a, e.b))
        assert deg[u] == len(split.side_u) and deg[v] == len(split.side_v)
    crossing_at = Counter(e.a for e in d.of_kind(EdgeKind.CROSSING))
    assert all(crossing_at[vid] == 1 for vid in d.boundary_vertex.values())


def test_invariants_on_corpus():
    for f in corpus(150, seed=7):
        check_dual_invariants(f.to_instance())


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 100_000), rows=st.integers(1, 3), cols=st.integers(1, 3),
       k=st.integers(1, 3))
def test_invariants_on_random_os(seed, rows, cols, k):
    f = random_os(rows, cols, costs=(0, 9), pairs=min(k, rows + cols), seed=seed)
    check_dual_invariants(f.to_instance())
