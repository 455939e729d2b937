import pytest

from rigidkit.colored import GraphError
from rigidkit.fixed_lattice import (
    SPAN22,
    TRIVIAL_CIRCUIT,
    RossRun,
    is_ross_sparse,
    ross_components,
    ross_decide,
    ross_extract,
)
from rigidkit.generators import random_suite, ross_family
from rigidkit.oracle import OracleGraph, ross

from conftest import corpus, z2graph, zero_k4, zkgraph


def _vertex_sets(comps):
    return [sorted(c.vertices) for c in comps]


def test_components_doubled_plus_lone():
    g = z2graph(4, [(0, 1, (0, 0)), (0, 1, (1, 0)), (2, 3, (0, 0))])
    comps = ross_components(g)
    assert _vertex_sets(comps) == [[0, 1]]
    assert comps[0].edges == {0, 1}


def test_zero_k4_discards_the_sixth_edge():
    run = RossRun(zero_k4()).run()
    assert run.kept == [0, 1, 2, 3, 4]
    assert run.discarded == [(5, TRIVIAL_CIRCUIT)]
    assert not ross_decide(zero_k4())
    # five Laman edges on four vertices are not (2,2)-tight anywhere
    assert ross_components(zero_k4()) == []


def test_empty_graph():
    assert ross_components(z2graph(5, [])) == []
    assert ross_extract(z2graph(5, [])) == []


def test_extract_examples():
    g = ross_family(4)
    assert ross_extract(g) == list(range(g.m))
    assert len(ross_extract(zero_k4())) == 5
    triple = z2graph(2, [(0, 1, (0, 0)), (0, 1, (1, 0)), (0, 1, (0, 1))])
    run = RossRun(triple).run()
    assert run.kept == [0, 1] and run.discarded == [(2, SPAN22)]


def test_decide_examples():
    assert ross_decide(z2graph(1, []))
    assert ross_decide(z2graph(2, [(0, 1, (0, 0)), (0, 1, (1, 0))]))
    assert not ross_decide(z2graph(2, [(0, 1, (0, 0)), (0, 1, (0, 0))]))
    # too few edges
    assert not ross_decide(z2graph(2, [(0, 1, (0, 0))]))


def test_bundled_graphs():
    assert ross_decide(corpus("k4_one_colored_z2"))
    g = corpus("k4_zero_pendant_z2")
    assert not ross_decide(g)
    assert (5, TRIVIAL_CIRCUIT) in RossRun(g).run().discarded


def test_decide_rejects_too_many_edges():
    g = ross_family(3)
    bigger = z2graph(3, list(g.edges) + [(0, 2, (5, 5))])
    assert not ross_decide(bigger)
    assert ross_decide(bigger, minimal=False)


def test_wrong_group():
    with pytest.raises(GraphError):
        ross_decide(zkgraph(3, 1, [(0, 0, 1)]))


def test_family_accepted_at_scale(no_audit):
    assert ross_decide(ross_family(512))


def test_matches_oracle_on_random_z2_graphs():
    fam = ross()
    seen = 0
    for g in random_suite(3, 600, z2_share=1.0):
        og = OracleGraph(g)
        run = RossRun(g).run()
        assert len(run.kept) == og.rank(fam)
        assert og.is_sparse(fam, sum(1 << e for e in run.kept))
        assert _vertex_sets(run.components()) == _vertex_sets(og.components(fam))
        tight = g.m == 2 * g.n - 2 and og.is_sparse(fam)
        assert ross_decide(g) == tight
        assert is_ross_sparse(g) == og.is_sparse(fam)
        seen += tight
    assert seen > 0
