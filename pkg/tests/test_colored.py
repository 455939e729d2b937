import pytest
from hypothesis import given, strategies as st

from rigidkit.colored import (
    Z2,
    ColoredGraph,
    GraphError,
    GroupDescriptor,
    spanned,
    subgraph,
    validate,
    zk,
)

from conftest import z2graph, zkgraph


def test_validate_accepts_well_formed():
    validate(z2graph(2, [(0, 1, (0, 0))]))


def test_validate_endpoint_out_of_range():
    with pytest.raises(GraphError) as err:
        validate(z2graph(2, [(0, 5, (0, 0))]))
    assert err.value.reason == "endpoint out of range"
    assert err.value.edge == 0


def test_validate_unreduced_residue():
    with pytest.raises(GraphError) as err:
        validate(zkgraph(3, 2, [(0, 1, 1), (0, 1, 3)]))
    assert err.value.reason == "color not reduced"
    assert err.value.edge == 1


def test_validate_wrong_color_shape():
    with pytest.raises(GraphError):
        validate(ColoredGraph(Z2, 2, ((0, 1, 1),)))
    with pytest.raises(GraphError):
        validate(ColoredGraph(zk(3), 2, ((0, 1, (1, 0)),)))


def test_coordinate_bound():
    validate(z2graph(1, [(0, 0, (2**30, -(2**30)))]))
    with pytest.raises(GraphError):
        validate(z2graph(1, [(0, 0, (2**30 + 1, 0))]))


def test_group_descriptor_rejects_small_modulus():
    with pytest.raises(ValueError):
        GroupDescriptor("zk", 1)
    with pytest.raises(ValueError):
        GroupDescriptor("z2", 3)


def test_spanned_examples():
    g = z2graph(3, [(0, 1, (0, 0)), (2, 2, (1, 0))])
    assert spanned([0], g) == (2, 1, frozenset({0, 1}))
    assert spanned([1], g) == (1, 1, frozenset({2}))
    assert spanned([], g) == (0, 0, frozenset())


def test_subgraph_full_is_a_copy():
    g = zkgraph(3, 3, [(0, 1, 1), (1, 2, 0), (2, 0, 2)])
    sub, relabel = subgraph(range(3), g)
    assert sub == g
    assert relabel == {0: 0, 1: 1, 2: 2}


def test_subgraph_empty():
    sub, relabel = subgraph([], z2graph(4, [(0, 1, (0, 0))]))
    assert (sub.n, sub.m, relabel) == (0, 0, {})


def test_subgraph_relabels_doubled_edge():
    g = z2graph(10, [(0, 1, (0, 0)), (3, 7, (0, 0)), (7, 3, (1, 0))])
    sub, relabel = subgraph([1, 2], g)
    assert relabel == {3: 0, 7: 1}
    assert sub.n == 2
    assert sub.edges == ((0, 1, (0, 0)), (1, 0, (1, 0)))


z2_elems = st.tuples(st.integers(-50, 50), st.integers(-50, 50))


@given(z2_elems, z2_elems, z2_elems)
def test_z2_arithmetic_laws(a, b, c):
    assert Z2.add(Z2.add(a, b), c) == Z2.add(a, Z2.add(b, c))
    assert Z2.add(a, b) == Z2.add(b, a)
    assert Z2.is_identity(Z2.add(a, Z2.neg(a)))


@given(st.integers(2, 12), st.data())
def test_zk_arithmetic_laws(k, data):
    g = zk(k)
    a, b, c = (data.draw(st.integers(0, k - 1)) for _ in range(3))
    assert g.add(g.add(a, b), c) == g.add(a, g.add(b, c))
    assert g.add(a, b) == g.add(b, a)
    assert g.is_identity(g.add(a, g.neg(a)))
    for r in (g.add(a, b), g.neg(a), g.sub(a, b)):
        assert 0 <= r < k


edge_lists = st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=10)


@given(edge_lists, st.data())
def test_spanned_monotone_and_subgraph_consistent(pairs, data):
    g = z2graph(6, [(a, b, (0, 0)) for a, b in pairs])
    ids = list(range(g.m))
    b = data.draw(st.sets(st.sampled_from(ids)) if ids else st.just(set()))
    a = data.draw(st.sets(st.sampled_from(sorted(b))) if b else st.just(set()))
    na, ma, _ = spanned(a, g)
    nb, mb, _ = spanned(b, g)
    assert na <= nb and ma <= mb
    sub, _ = subgraph(b, g)
    assert spanned(range(sub.m), sub)[:2] == (nb, mb)
