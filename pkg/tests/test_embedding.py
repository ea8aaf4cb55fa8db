"""Rotation systems, face tracing, triangulation.

Expected values below (face counts, walk shapes, edge counts) were worked
out by hand from the rotation systems and Euler's formula, then frozen.
"""

import pytest
from hypothesis import given, strategies as st

from fivecolor.embedding import (
    AsymmetricAdjacency,
    DuplicateNeighbor,
    EmbeddedGraph,
    EmbeddingError,
    LoopEdge,
    NotPlanarEmbedding,
    Triangulation,
    UntriangulatableFace,
    build,
    from_faces,
    remove_vertices,
    trace_faces,
    triangulate,
)
from fivecolor.instances import named


def cycle_rotations(k):
    return [((i - 1) % k, (i + 1) % k) for i in range(k)]


# -- validation --------------------------------------------------------------


def test_loop_rejected():
    with pytest.raises(LoopEdge):
        build([(0, 1), (0,)])


def test_duplicate_neighbor_rejected():
    with pytest.raises(DuplicateNeighbor):
        build([(1, 1), (0, 0)])


def test_missing_reverse_rejected():
    with pytest.raises(AsymmetricAdjacency):
        build([(1,), ()])


def test_out_of_range_neighbor_rejected():
    with pytest.raises(AsymmetricAdjacency):
        build([(1,), (0, 5)])


def test_k5_rejected():
    # K5 with ascending rotations traces 3 walks (10 + 5 + 5 darts),
    # so n - m + f = 5 - 10 + 3 = -2.
    rot = [tuple(w for w in range(5) if w != v) for v in range(5)]
    with pytest.raises(NotPlanarEmbedding):
        build(rot)


def test_tiny_graphs_accepted():
    assert build([()]).n == 1
    assert build([(1,), (0,)]).m == 1
    two_triangles = [(1, 2), (2, 0), (0, 1), (4, 5), (5, 3), (3, 4)]
    g = build(two_triangles)
    assert (g.n, g.m) == (6, 6)


def test_immutability():
    g = named("k4")
    with pytest.raises(AttributeError):
        g.rotation = ()


def test_accessors():
    g = named("cube")
    assert (g.n, g.m, g.size) == (8, 12, 8)
    assert g.degree(0) == 3
    assert g.neighbors(0) == (1, 4, 3)
    assert g.has_edge(0, 4) and not g.has_edge(0, 7)
    assert sorted(g.edges())[0] == (0, 1)
    assert len(list(g.edges())) == 12
    assert g == build(g.rotation) and hash(g) == hash(build(g.rotation))


# -- face tracing ------------------------------------------------------------


def test_trace_k4():
    faces = trace_faces(named("k4"))
    assert len(faces) == 4
    assert all(len(f) == 3 for f in faces)
    assert faces[0] == (0, 1, 2)


def test_trace_cube_quads():
    faces = trace_faces(named("cube"))
    assert sorted(len(f) for f in faces) == [4] * 6
    assert set(faces) == {
        (0, 3, 2, 1),
        (0, 1, 5, 4),
        (0, 4, 7, 3),
        (1, 2, 6, 5),
        (2, 3, 7, 6),
        (4, 5, 6, 7),
    }


def test_trace_counts():
    assert len(trace_faces(named("octahedron"))) == 8
    assert len(trace_faces(named("icosahedron"))) == 20


def test_walks_start_at_least_dart():
    for name in ("k4", "cube", "octahedron", "icosahedron"):
        for f in trace_faces(named(name)):
            darts = [(f[i], f[(i + 1) % len(f)]) for i in range(len(f))]
            assert darts[0] == min(darts)


def test_each_dart_on_one_walk():
    for name in ("k4", "cube", "octahedron", "icosahedron", "c4"):
        g = named(name)
        darts = [
            (f[i], f[(i + 1) % len(f)])
            for f in trace_faces(g)
            for i in range(len(f))
        ]
        assert len(darts) == len(set(darts)) == 2 * g.m


# -- from_faces --------------------------------------------------------------


def test_from_faces_cube():
    faces = [
        (3, 2, 1, 0),
        (4, 5, 6, 7),
        (0, 1, 5, 4),
        (1, 2, 6, 5),
        (2, 3, 7, 6),
        (3, 0, 4, 7),
    ]
    assert from_faces(8, faces) == named("cube")


def test_from_faces_round_trip():
    for name in ("k4", "c4", "cube", "octahedron", "icosahedron"):
        g = named(name)
        assert from_faces(g.size, trace_faces(g)) == g


def test_from_faces_duplicate_dart():
    with pytest.raises(EmbeddingError, match="two faces"):
        from_faces(3, [(0, 1, 2), (0, 1, 2)])


def test_from_faces_split_rotation():
    # two spheres sharing vertex 0: its corners chain into two cycles
    faces = [(0, 1, 2), (0, 2, 1), (0, 3, 4), (0, 4, 3)]
    with pytest.raises(EmbeddingError, match="several cycles"):
        from_faces(5, faces)


def test_from_faces_isolated_vertex():
    g = from_faces(4, [(0, 1, 2), (0, 2, 1)])
    assert g.rotation[3] == () and g.n == 4


# -- triangulate -------------------------------------------------------------


def test_triangulate_cube():
    tri = triangulate(named("cube"))
    assert isinstance(tri, Triangulation)
    assert (tri.n, tri.m) == (8, 18)
    assert len(tri.faces) == 12
    assert all(len(f) == 3 for f in tri.faces)
    assert len(tri.added_edges) == 6
    g = named("cube")
    for u, v in tri.added_edges:
        assert not g.has_edge(u, v)
        assert tri.has_edge(u, v) and tri.has_edge(v, u)


def test_triangulate_c4_gives_k4():
    # both quad faces need a chord and they cannot pick the same pair
    tri = triangulate(named("c4"))
    assert tri.m == 6
    assert sorted(tri.added_edges) in ([(0, 2), (1, 3)], [(1, 3), (0, 2)])
    assert all(tri.has_edge(u, v) for u in range(4) for v in range(4) if u != v)


def test_triangulate_noop_on_triangulation(icosahedron):
    tri = triangulate(icosahedron)
    assert tri.added_edges == ()
    assert tri.rotation == icosahedron.rotation
    assert tri.link_cycle(0) == icosahedron.rotation[0]


def test_triangulate_requires_connected():
    two_triangles = [(1, 2), (2, 0), (0, 1), (4, 5), (5, 3), (3, 4)]
    with pytest.raises(EmbeddingError, match="connected"):
        triangulate(build(two_triangles))


def test_triangulate_requires_three_vertices():
    with pytest.raises(EmbeddingError):
        triangulate(build([(1,), (0,)]))


@given(st.integers(min_value=4, max_value=13))
def test_triangulate_cycle(k):
    # filling both k-gon faces takes 2(k - 3) distinct chords
    tri = triangulate(build(cycle_rotations(k)))
    assert tri.m == 3 * k - 6
    assert len(tri.faces) == 2 * k - 4
    assert all(len(f) == 3 for f in tri.faces)


# -- remove_vertices ---------------------------------------------------------


def test_remove_vertex_from_icosahedron(icosahedron):
    g = remove_vertices(icosahedron, {0})
    assert (g.n, g.m, g.size) == (11, 25, 12)
    assert g.rotation[0] is None
    assert not g.present(0)
    faces = trace_faces(g)
    assert sorted(len(f) for f in faces) == [3] * 15 + [5]
    hole = next(f for f in faces if len(f) == 5)
    assert set(hole) == set(icosahedron.rotation[0])


def test_remove_absent_vertex(icosahedron):
    g = remove_vertices(icosahedron, {0})
    with pytest.raises(EmbeddingError):
        remove_vertices(g, {0})


def test_remove_then_triangulate(icosahedron):
    tri = triangulate(remove_vertices(icosahedron, {0}))
    assert tri.m == 27
    assert all(len(f) == 3 for f in tri.faces)
    assert len(tri.added_edges) == 2
