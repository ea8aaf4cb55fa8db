"""Reducer behavior, from single-occurrence replays to full colorings.

hub_gadget: a 10-vertex sphere whose hub 0 carries the degree-8 pattern
with leaves 1, 2, 3, 5, 6 (greedy skips 4) and separators 4, 7, 8, plus an
outer vertex 9.  Scenario colorings steer which candidate takes the 5.

wheel_gadget: a 20-vertex sphere where the hub's wheel matches only the
separated variant (rim degrees 8,6,7,6,6 with the 7 not touching the 8).
Outer arcs o0..o12 are vertices 6..18, the far pole is 19.
"""

import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fivecolor.catalog import get_entry
from fivecolor.embedding import build, from_faces, remove_vertices
from fivecolor.instances import GenSpec, generate, named
from fivecolor.matching import match_at
from fivecolor.reducer import (
    Coloring,
    RunStats,
    SchemeExhausted,
    check_coloring,
    color_planar,
    reduce_once,
    select_fifth,
)


def hub_gadget():
    fan = [(0, i + 1, (i + 1) % 8 + 1) for i in range(8)]
    pole = [(9, 5, 4), (9, 6, 5), (9, 7, 6), (9, 8, 7), (9, 1, 8), (9, 4, 1)]
    g = from_faces(10, fan + [(4, 3, 2), (1, 4, 2)] + pole)
    occ = match_at(g, get_entry("hub"), 0)
    assert occ.mapping == {0: 0, 1: 1, 2: 2, 3: 3, 4: 5, 5: 6}
    return g, occ


def wheel_gadget():
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1)]
    arcs = {1: (6, 7, 8, 9, 10), 2: (10, 11, 12), 3: (12, 13, 14, 15),
            4: (15, 16, 17), 5: (17, 18, 6)}
    for r, arc in arcs.items():
        faces += [(r, arc[j], arc[j + 1]) for j in range(len(arc) - 1)]
    faces += [(2, 1, 10), (3, 2, 12), (4, 3, 15), (5, 4, 17), (1, 5, 6)]
    faces += [(19, 6 + (j + 1) % 13, 6 + j) for j in range(13)]
    g = from_faces(20, faces)
    occ = match_at(g, get_entry("wheel-separated"), 0)
    assert occ.mapping == {0: 0, 1: 1, 2: 2, 3: 3, 4: 4, 5: 5}
    assert match_at(g, get_entry("wheel-adjacent"), 0) is None
    return g, occ


def test_coloring_counts():
    c = Coloring({1: 2, 2: 2})
    assert c.class_size(2) == 2 and c.class_size(5) == 0
    c[1] = 5
    assert c.class_size(2) == 1 and c.class_size(5) == 1
    del c[1]
    assert c.class_size(5) == 0 and len(c) == 1
    assert c.counts == {1: 0, 2: 1, 3: 0, 4: 0, 5: 0}
    with pytest.raises(ValueError, match="color must be"):
        c[3] = 7


def test_select_fifth_hub_free():
    g, occ = hub_gadget()
    colors = Coloring({4: 1, 7: 1, 8: 2, 9: 3})
    fifth, peel = select_fifth(g.rotation, occ, colors)
    assert fifth == 0
    assert peel == (1, 2, 3, 5, 6)


def test_select_fifth_blocked_cascade():
    # vertex 4 colored 5 blocks the hub and the first four leaves; leaf 6
    # is the survivor and the hub then peels mid-sequence
    g, occ = hub_gadget()
    colors = Coloring({4: 5, 7: 1, 8: 2, 9: 3})
    fifth, peel = select_fifth(g.rotation, occ, colors)
    assert fifth == 6
    assert peel == (1, 2, 0, 3, 5)


def test_select_fifth_all_blocked():
    g, occ = hub_gadget()
    colors = Coloring({4: 5, 7: 5, 8: 1, 9: 2})
    fifth, peel = select_fifth(g.rotation, occ, colors)
    assert fifth is None
    assert peel == (1, 2, 0, 3, 5, 6)


def test_reduce_once_on_hub_gadget():
    g, occ = hub_gadget()
    colors = Coloring({4: 1, 7: 1, 8: 2, 9: 3})
    stats = RunStats()
    fifth, peel = reduce_once(list(map(list, g.rotation)), occ, colors, stats)
    assert fifth == 0 and colors[0] == 5
    assert stats.fifth_assigned == 1 and stats.fallback_peels == 0
    assert check_coloring(g, colors)[5] == 1


def test_reduce_once_wheel_first_candidate():
    g, occ = wheel_gadget()
    outside = {6 + j: 1 + j % 2 for j in range(12)}
    outside.update({18: 3, 19: 4})
    colors = Coloring(outside)
    stats = RunStats()
    fifth, peel = reduce_once(list(map(list, g.rotation)), occ, colors, stats)
    assert fifth == 1  # trial order starts at the degree-8 rim vertex
    assert peel == (0, 2, 5, 4, 3)
    assert colors[1] == 5
    # coloring 5 ran out of plain colors; the (4,3) chain swap freed one
    assert stats.chain_swaps == 1
    assert (colors[3], colors[4], colors[5]) == (4, 3, 4)
    assert check_coloring(g, colors)[5] == 1


def test_reduce_once_wheel_hub_fallback():
    # three rim vertices see a 5 outside, so the trial falls through to
    # the hub; the peel must shed the rim in ring order
    g, occ = wheel_gadget()
    colors = Coloring(
        {6: 1, 7: 2, 8: 5, 9: 1, 10: 2, 11: 5, 12: 1, 13: 5, 14: 1,
         15: 2, 16: 1, 17: 2, 18: 3, 19: 4}
    )
    stats = RunStats()
    fifth, peel = reduce_once(list(map(list, g.rotation)), occ, colors, stats)
    assert fifth == 0 and colors[0] == 5
    assert peel == (2, 3, 4, 5, 1)
    assert stats.chain_swaps == 1
    # the swap ran through the outer arc: 6, 9, 18 traded 1 <-> 3
    assert (colors[6], colors[9], colors[18]) == (3, 3, 1)
    assert colors[2] == 3
    sizes = check_coloring(g, colors)
    assert sizes[5] == 4  # three seeded outside plus the hub


def test_select_fifth_exhausted():
    # a pattern vertex with an absurd degree cannot peel once everything
    # is blocked; forge the situation by wiring extra neighbors in
    g, occ = hub_gadget()
    rows = list(map(list, g.rotation))
    rows[0] = rows[0] + [10, 11, 12, 13]  # hub sees four phantom blockers
    for v in (10, 11, 12, 13):
        rows.append([0])
    colors = Coloring({4: 5, 7: 5, 8: 1, 9: 2})
    colors.update({10: 1, 11: 2, 12: 3, 13: 4})
    with pytest.raises(SchemeExhausted, match="hub"):
        select_fifth(rows, occ, colors)


def test_color_planar_k4(k4):
    colors = color_planar(k4)
    sizes = check_coloring(k4, colors)
    assert sizes[5] == 0
    assert len(colors) == 4


def test_color_planar_octahedron_low_only(octahedron):
    stats = RunStats()
    colors = color_planar(octahedron, stats)
    assert check_coloring(octahedron, colors)[5] == 0
    assert stats.scans == 0 and not stats.occ_steps
    assert stats.f1_steps == 3


def test_color_planar_icosahedron(icosahedron):
    stats = RunStats()
    colors = color_planar(icosahedron, stats)
    sizes = check_coloring(icosahedron, colors)
    assert sizes[5] <= 2
    assert stats.occ_steps["f2"] >= 1
    assert stats.fifth_assigned == sizes[5]


def test_color_planar_nine_antiprism():
    # all degrees are 5 or 9, so the first reduction is the virtual hub
    from test_matcher import antiprism

    g = antiprism(9)
    stats = RunStats()
    colors = color_planar(g, stats)
    sizes = check_coloring(g, colors)
    assert stats.occ_steps["f7"] >= 1
    assert 6 * sizes[5] <= g.n


def test_color_planar_cube_fills_quads(cube):
    colors = color_planar(cube)
    assert check_coloring(cube, colors)[5] == 0


def test_color_planar_tiny_graphs():
    assert color_planar(build([(1,), (0,)])) == {0: 1, 1: 2}
    assert color_planar(build([()])) == {0: 1}
    p3 = build([(1,), (0, 2), (1,)])
    assert check_coloring(p3, color_planar(p3))
    c5 = build([(1, 4), (2, 0), (3, 1), (4, 2), (0, 3)])
    assert check_coloring(c5, color_planar(c5))[5] == 0


def test_color_planar_disconnected():
    rows = list(named("k4").rotation) + [
        tuple(4 + u for u in row) for row in named("k4").rotation
    ]
    g = build(rows + [()])
    colors = color_planar(g)
    assert check_coloring(g, colors)
    assert len(colors) == 9


def test_color_planar_with_tombstones(icosahedron):
    g = remove_vertices(icosahedron, [0])
    colors = color_planar(g)
    assert check_coloring(g, colors)
    assert 0 not in colors


def test_color_planar_deterministic(icosahedron):
    a = color_planar(icosahedron)
    b = color_planar(icosahedron)
    assert dict(a) == dict(b)


def test_check_coloring_rejects():
    k4 = named("k4")
    with pytest.raises(ValueError, match="no valid color"):
        check_coloring(k4, {0: 1, 1: 2, 2: 3})
    with pytest.raises(ValueError, match="both ends"):
        check_coloring(k4, {0: 1, 1: 1, 2: 3, 3: 4})


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000), st.integers(12, 90), st.booleans())
def test_color_planar_generated(seed, n, shaped):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # shaping may give up; fine here
        g = generate(GenSpec(seed=seed, n=n, flips=2 * n, shape_min_degree_5=shaped))
    stats = RunStats()
    colors = color_planar(g, stats)
    sizes = check_coloring(g, colors)
    assert 6 * sizes[5] <= g.n
    assert stats.fifth_assigned == sizes[5]
    assert len(colors) == g.n
