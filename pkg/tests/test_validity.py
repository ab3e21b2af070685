import itertools

import pytest
from hypothesis import given, strategies as st

from arborsplit.generators import corpus_small, even_cycle, grid
from arborsplit.oracle import valid_colorings
from arborsplit.plane_graph import PlaneGraph
from arborsplit.scene import make_scene
from arborsplit.validity import (
    UnionFind,
    check_g1,
    check_g2,
    check_g3,
    check_g4,
    check_valid,
    find_cycle,
    is_forest,
    mono_path,
    mono_path_exists,
)
from shapes import star


def col(*values):
    return {f"v{i}": c for i, c in enumerate(values)}


SMALL = [g for g in corpus_small(7) if len(g) >= 4][::7]


# -- (G1) ------------------------------------------------------------------

def test_g1_monochromatic_c4_reports_the_cycle(c4):
    rep = check_g1(make_scene(c4), col(2, 2, 2, 2))
    assert not rep.ok
    assert sorted(rep.witness["cycle"]) == ["v0", "v1", "v2", "v3"]


def test_g1_single_one_passes(c4):
    assert check_g1(make_scene(c4), col(1, 2, 2, 2)).ok


def test_g1_degree_four_star():
    g = star(4)
    rep = check_g1(make_scene(g), {v: 1 for v in g.vertices})
    assert not rep.ok and rep.witness["degree_vertex"] == "c"


# -- (G2) ------------------------------------------------------------------

def test_g2_examples(c4):
    rep = check_g2(make_scene(c4, ["v0"], (), {"v0": 1}), col(1, 1, 2, 2))
    assert rep.witness == {"edge": ["v0", "v1"]}
    s = make_scene(c4, ["v0"], (), {"v0": 2})
    for c in itertools.product((1, 2), repeat=4):
        assert check_g2(s, col(*c)).ok
    s = make_scene(c4, ["v0", "v1"], (), {"v0": 1, "v1": 1})
    assert check_g2(s, col(1, 1, 2, 2)).ok


# -- monochromatic paths ---------------------------------------------------

def test_mono_path_examples():
    path = PlaneGraph.build(["v0", "v1", "v2"], {"v0": ["v1"], "v1": ["v2", "v0"], "v2": ["v1"]})
    s = make_scene(path)
    assert mono_path(s, col(2, 2, 2), "v0", "v2") == ["v0", "v1", "v2"]
    assert not mono_path_exists(s, col(1, 2, 2), "v0", "v2")
    c4 = make_scene(even_cycle(4))
    assert mono_path(c4, col(2, 2, 1, 2), "v1", "v3") == ["v1", "v0", "v3"]


def test_mono_path_rejects_equal_endpoints(c4):
    with pytest.raises(ValueError):
        mono_path(make_scene(c4), col(1, 2, 2, 2), "v1", "v1")


@given(st.sampled_from(SMALL), st.data())
def test_mono_path_symmetric(g, data):
    c = {v: data.draw(st.sampled_from((1, 2))) for v in sorted(g.vertices)}
    u, w = data.draw(st.lists(st.sampled_from(sorted(g.vertices)), min_size=2, max_size=2, unique=True))
    s = make_scene(g)
    assert mono_path_exists(s, c, u, w) == mono_path_exists(s, c, w, u)
    p = mono_path(s, c, u, w)
    if p is not None:
        assert p[0] == u and p[-1] == w
        assert all(c[x] == c[u] for x in p)
        assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
        # recolouring a vertex off the path keeps it
        off = [x for x in g.vertices if x not in p]
        if off:
            c2 = dict(c)
            c2[off[0]] = 3 - c2[off[0]]
            assert mono_path_exists(s, c2, u, w)


# -- (G3) ------------------------------------------------------------------

def test_g3_examples(c4):
    s = make_scene(c4, ["v0"], ["v1"], {"v0": 1})
    rep = check_g3(s, col(1, 2, 2, 2))
    assert not rep.ok
    assert (rep.witness["u"], rep.witness["w"], rep.witness["path"]) == ("v1", "v3", ["v1", "v2", "v3"])
    assert check_g3(s, col(1, 2, 1, 2)).ok
    both = make_scene(c4, ["v0", "v1"], (), {"v0": 1, "v1": 1})
    assert check_g3(both, col(1, 1, 2, 2)).ok


# -- (G4) ------------------------------------------------------------------

def test_g4_examples():
    g = star(3)
    ones = {v: 1 for v in g.vertices}
    assert check_g4(make_scene(g), ones).witness["vertex"] == "c"
    assert check_g4(make_scene(g, ["c"], (), {"c": 1}), ones).ok
    assert check_g4(make_scene(grid(3, 3)), {v: 2 for v in grid(3, 3).vertices}).ok


# -- combined --------------------------------------------------------------

def test_check_valid_examples(c4):
    assert check_valid(make_scene(c4), col(1, 2, 2, 2)).ok
    assert check_valid(make_scene(c4, (), ["v0", "v2"]), col(2, 1, 2, 2)).ok
    rep = check_valid(make_scene(c4), col(2, 2, 2, 2))
    assert rep.clause == "G1"
    assert check_valid(make_scene(c4), {"v0": 1}).clause == "total"


@given(st.sampled_from(SMALL), st.data())
def test_witnesses_are_genuine(g, data):
    c = {v: data.draw(st.sampled_from((1, 2))) for v in sorted(g.vertices)}
    rep = check_valid(make_scene(g), c)
    w = rep.witness
    if rep.clause == "G1" and "cycle" in w:
        cyc = w["cycle"]
        assert len(cyc) >= 4 and len(set(cyc)) == len(cyc)
        assert all(g.has_edge(cyc[i - 1], cyc[i]) for i in range(len(cyc)))
        assert {c[v] for v in cyc} == {w["color"]}
    if rep.clause == "G1" and "degree_vertex" in w:
        assert len(w["neighbors"]) > 3
    ok_each = all(f(make_scene(g), c).ok for f in (check_g1, check_g2, check_g3, check_g4))
    assert rep.ok == ok_each


def test_flipping_a_q_vertex_breaks_validity():
    for g in SMALL:
        on = sorted(g.outer_vertices)
        for q in on[:3]:
            s = make_scene(g, (), [q])
            for c in itertools.islice(valid_colorings(s), 3):
                c = dict(c)
                c[q] = 1
                assert check_valid(s, c).clause == "forced"


# -- forest primitives -----------------------------------------------------

def test_union_find():
    uf = UnionFind()
    assert uf.union(1, 2) and uf.union(2, 3)
    assert not uf.union(1, 3)
    assert uf.find(1) == uf.find(3) != uf.find(4)


@given(st.sampled_from(SMALL), st.data())
def test_forest_check_agrees_with_cycle_finder(g, data):
    members = data.draw(st.sets(st.sampled_from(sorted(g.vertices))))
    c = {v: 1 if v in members else 2 for v in g.vertices}
    assert is_forest(g, members) == (find_cycle(g, c, 1) is None)
