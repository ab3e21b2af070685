import itertools

import pytest

from arborsplit.generators import corpus_small, cube, cube_with_p, even_cycle, grid, grow_quadrangulation
from arborsplit.plane_graph import PlaneGraph, canonical_walk, outer_cycle
from arborsplit.structure import (
    NoCaseApplies,
    choose_main_quad,
    components,
    cut_vertices,
    find_cut,
    find_extension_config,
    find_separating_4cycle,
    outer_four_cycle,
)
from shapes import c6_with_chord, two_squares_at_vertex

CONNECTED = [g for g in corpus_small(9) if len(g) >= 3 and len(components(g)) == 1]
QUADS = [grow_quadrangulation(steps=k, rng_seed=k) for k in range(1, 9)]


def _connected_without(g, drop):
    rest = [v for v in g.vertices if v != drop]
    seen, stack = {rest[0]}, [rest[0]]
    while stack:
        for u in g.adjacency[stack.pop()]:
            if u != drop and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(rest)


def _brute_cuts(g):
    return sorted(v for v in g.vertices if not _connected_without(g, v))


def _brute_four_cycles(g):
    out = set()
    for quad in itertools.permutations(sorted(g.vertices), 4):
        if all(g.has_edge(quad[i - 1], quad[i]) for i in range(4)):
            out.add(canonical_walk(quad))
    return out


def test_components():
    disjoint = PlaneGraph.build(
        ["v0", "v1", "v2", "v3", "x"],
        {"v0": ["v1", "v3"], "v1": ["v2", "v0"], "v2": ["v3", "v1"], "v3": ["v0", "v2"], "x": []},
    )
    assert components(disjoint) == [frozenset({"v0", "v1", "v2", "v3"}), frozenset({"x"})]
    assert len(components(grid(3, 3))) == 1
    assert components(PlaneGraph.build([], {})) == []


def test_cut_vertices_match_brute_force():
    for g in CONNECTED:
        assert cut_vertices(g) == _brute_cuts(g)


def test_find_cut_examples():
    split = find_cut(two_squares_at_vertex())
    assert split.h == ("w",)
    split = find_cut(c6_with_chord())
    assert set(split.h) == {"v0", "v3"}
    assert len(split.g1) == len(split.g2) == 4
    assert find_cut(even_cycle(4)) is None


def test_find_cut_none_iff_biconnected_and_induced():
    for g in CONNECTED + QUADS:
        expect_none = not _brute_cuts(g) and outer_cycle(g).induced
        assert (find_cut(g) is None) == expect_none
        split = find_cut(g)
        if split is not None:
            split.check(g)


def test_find_cut_keeps_p_in_g1():
    g = c6_with_chord()
    for p in ["v1", "v2", "v4", "v5"]:
        assert p in find_cut(g, [p]).g1


def test_separating_4cycle_examples():
    assert find_separating_4cycle(cube()) is None
    assert set(find_separating_4cycle(cube_with_p())) == {"v4", "v5", "v6", "v7"}
    assert find_separating_4cycle(even_cycle(4)) is None


def test_outer_four_cycle():
    assert outer_four_cycle(cube()) == cube().outer_face[0]
    assert outer_four_cycle(even_cycle(4)) is None
    assert outer_four_cycle(grid(3, 3)) is None


def test_no_separating_4cycle_means_all_are_faces():
    for g in CONNECTED[::3] + QUADS + [cube(), cube_with_p()]:
        if find_separating_4cycle(g) is not None:
            continue
        faces = {canonical_walk(f.walk) for f in g.faces}
        faces |= {canonical_walk(tuple(reversed(f.walk))) for f in g.faces}
        assert _brute_four_cycles(g) <= faces


def test_extension_config_examples():
    g = grid(3, 3)
    assert find_extension_config(g, {"v0_1"}) == ("v1_1", "v0_1", "v2_1")
    assert find_extension_config(g, set()) is None
    assert find_extension_config(even_cycle(4), {"v0"}) is None


@pytest.mark.parametrize(
    "Q, case, quad",
    [
        ({"v0", "v2"}, "A", None),
        ({"v0", "v3"}, "B", ("v7", "v0", "v1", "v2", "v3")),
        (set(), "D", None),
    ],
)
def test_main_quad_examples(Q, case, quad):
    m = choose_main_quad(even_cycle(8), (), Q, {})
    assert m.case == case
    if case == "A":
        assert m.x == "v1"
    if quad is not None:
        assert (m.r, m.s, m.x, m.z, m.t) == quad


def test_main_quad_wraps_on_four_cycle():
    m = choose_main_quad(even_cycle(4), (), set(), {})
    assert m.case == "D" and len({m.r, m.s, m.x, m.z, m.t}) == 4 and m.r == m.t


def test_main_quad_miss_is_diagnosed():
    with pytest.raises(NoCaseApplies):
        choose_main_quad(even_cycle(4), ("v0", "v3"), {"v2"}, {"v0": 1, "v3": 2})
