import pytest

from arborsplit.generators import even_cycle, grid
from arborsplit.scene import DerivationTrace, SceneError, SplitSpec, forced_assignments, make_scene
from shapes import c6_with_chord


@pytest.mark.parametrize(
    "P, Q, delta",
    [((), (), {}), (("v0", "v1"), (), {"v0": 1, "v1": 2}), (("v1", "v0"), (), {"v0": 1, "v1": 2})],
)
def test_accepted_scenes(c4, P, Q, delta):
    s = make_scene(c4, P, Q, delta)
    assert s.P == tuple(P)


@pytest.mark.parametrize(
    "P, Q, delta, kind",
    [
        ((), ("v0", "v1"), {}, "Q-not-independent"),
        (("v0", "v2"), (), {"v0": 1, "v2": 1}, "P-not-consecutive"),
        (("v0",), ("v0",), {"v0": 2}, "Q-meets-P"),
        (("v0",), (), {}, "delta-domain-mismatch"),
        (("v0",), (), {"v0": 3}, "bad-color"),
    ],
)
def test_rejected_scenes(c4, P, Q, delta, kind):
    with pytest.raises(SceneError) as info:
        make_scene(c4, P, Q, delta)
    assert info.value.kind == kind


def test_q_must_lie_on_outer_face():
    with pytest.raises(SceneError) as info:
        make_scene(grid(3, 3), (), ("v1_1",))
    assert info.value.kind == "Q-not-on-boundary"


def test_triangle_rejected():
    from arborsplit.plane_graph import PlaneGraph

    tri = PlaneGraph.build(["a", "b", "c"], {"a": ["b", "c"], "b": ["c", "a"], "c": ["a", "b"]})
    with pytest.raises(SceneError) as info:
        make_scene(tri)
    assert info.value.kind == "triangle-found"


def test_forced_assignments(c4):
    assert forced_assignments(make_scene(c4, ["v0"], ["v2"], {"v0": 1})) == {"v0": 1, "v2": 2}
    assert forced_assignments(make_scene(c4)) == {}
    s = make_scene(c4, ["v0", "v1"], ["v3"], {"v0": 2, "v1": 2})
    assert forced_assignments(s) == {"v0": 2, "v1": 2, "v3": 2}


def test_split_spec_check():
    g = c6_with_chord()
    good = SplitSpec(frozenset({"v0", "v1", "v2", "v3"}), frozenset({"v3", "v4", "v5", "v0"}), ("v0", "v3"))
    good.check(g, ["v1"])
    with pytest.raises(ValueError):
        good.check(g, ["v4"])
    leaky = SplitSpec(frozenset({"v0", "v1", "v2"}), frozenset({"v2", "v3", "v4", "v5", "v0"}), ("v0", "v2"))
    with pytest.raises(ValueError):
        leaky.check(g)


def test_trace_bookkeeping():
    s = make_scene(even_cycle(6))
    leaf = DerivationTrace("base", make_scene(even_cycle(4)), coloring={"v0": 1})
    root = DerivationTrace("cut", s, children=[leaf, DerivationTrace("base", s)])
    assert root.size == 6
    assert root.depth() == 2
    assert [n.kind for n in root.nodes()] == ["cut", "base", "base"]
    d = root.to_dict()
    assert d["children"][0]["coloring"] == {"v0": 1}
    assert "scene" not in d
