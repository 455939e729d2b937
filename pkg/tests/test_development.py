
import pytest

from rigidkit.colored import GraphError
from rigidkit.cone import cone_components, cone_decide
from rigidkit.development import (
    LiftedSubgraph,
    alpha,
    cone3_components,
    cone3_decide,
    develop,
    is_automorphism,
    is_symmetric,
    lifted_graph,
    orbit,
    project,
    to_dot,
)
from rigidkit.generators import random_suite

from conftest import z2graph, zkgraph


def test_loop_one_is_a_triangle():
    dev = develop(zkgraph(3, 1, [(0, 0, 1)]))
    assert dev.lifted_edges == ((0, 1), (1, 2), (2, 0))


def test_loop_zero_is_three_self_loops():
    dev = develop(zkgraph(3, 1, [(0, 0, 0)]))
    assert dev.lifted_edges == ((0, 0), (1, 1), (2, 2))


def test_sizes_triple():
    g = zkgraph(3, 4, [(0, 1, 2), (1, 3, 0), (2, 2, 1)])
    dev = develop(g)
    assert (dev.n_lifted, dev.m_lifted) == (12, 9)


def test_wrong_group():
    with pytest.raises(GraphError):
        develop(zkgraph(4, 1, []))
    with pytest.raises(GraphError):
        develop(z2graph(1, []))


def test_project():
    dev = develop(zkgraph(3, 3, [(0, 1, 0), (1, 2, 1)]))
    assert project(dev, dev.full()) == {0, 1}
    assert project(dev, dev.lift([1])) == {1}
    assert project(dev, LiftedSubgraph()) == frozenset()


def test_orbit_and_symmetry():
    dev = develop(zkgraph(3, 1, [(0, 0, 1)]))
    one = LiftedSubgraph(frozenset({0, 1}), frozenset({0}))
    assert orbit(dev, one) == dev.full()
    assert not is_symmetric(dev, one)
    assert is_symmetric(dev, dev.lift([0]))
    assert not is_symmetric(dev, LiftedSubgraph(frozenset({0}), frozenset()))


def test_alpha_is_a_fixed_point_free_automorphism():
    for g in random_suite(8, 300, ks=(3,), z2_share=0.0):
        dev = develop(g)
        assert is_automorphism(dev, 1) and is_automorphism(dev, 2)
        full = dev.full()
        for z in (1, 2):
            moved = alpha(full, z)
            assert moved == full
            assert all(alpha(LiftedSubgraph(frozenset({v})), z).vertices != {v}
                       for v in range(dev.n_lifted))


def test_cone3_examples():
    comps, other = cone3_components(zkgraph(3, 1, [(0, 0, 1)]))
    assert [sorted(c.vertices) for c in comps] == [[0]]
    assert comps[0].edges == {0} and other == []
    assert cone3_components(zkgraph(3, 1, [(0, 0, 0)])) == ([], [])
    assert cone3_decide(zkgraph(3, 1, [(0, 0, 1)]))
    assert not cone3_decide(zkgraph(3, 1, [(0, 0, 0)]))
    three = zkgraph(3, 2, [(0, 1, 0), (0, 1, 1), (0, 1, 2)])
    assert develop(three).m_lifted == 9
    assert cone3_decide(three) == cone_decide(three)


def test_agrees_with_general_algorithm():
    for g in random_suite(31, 500, ks=(3,), z2_share=0.0):
        comps, _ = cone3_components(g)
        want = cone_components(g)
        assert [sorted(c.vertices) for c in comps] == [sorted(c.vertices) for c in want]
        assert cone3_decide(g) == cone_decide(g)


def test_dot_and_lifted_graph():
    dev = develop(zkgraph(3, 1, [(0, 0, 1)]))
    dot = to_dot(dev)
    assert dot.startswith("graph development {") and dot.count("--") == 3
    lg = lifted_graph(dev)
    assert (lg.n, lg.m) == (3, 3)
