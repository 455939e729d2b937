import pytest

from rigidkit.colored import GraphError
from rigidkit.cone import (
    NOT_ROBUST,
    SPAN21,
    TRIVIAL_LAMAN,
    ConeRun,
    cone_components,
    cone_decide,
    cone_extract,
    robust_circuit,
)
from rigidkit.generators import cone_family, random_suite
from rigidkit.oracle import TWO_TWO, OracleGraph, cone_laman, edges_of, ross

from conftest import corpus, z2graph, zkgraph


def test_parallel_012_mod5():
    g = zkgraph(5, 2, [(0, 1, 0), (0, 1, 1), (0, 1, 2)])
    comps = cone_components(g)
    assert [sorted(c.vertices) for c in comps] == [[0, 1]]
    assert comps[0].edges == {0, 1, 2}
    assert cone_decide(g)


def test_parallel_001_discards_at_laman_step():
    run = ConeRun(zkgraph(5, 2, [(0, 1, 0), (0, 1, 0), (0, 1, 1)])).run()
    assert run.discarded == [(1, TRIVIAL_LAMAN)]
    assert run.kept == [0, 2]


def test_zero_k4_inside_22circuit_discards_on_robustness():
    g = corpus("k4_zero_in_22circuit_z3")
    run = ConeRun(g).run()
    assert run.discarded == [(6, NOT_ROBUST)]
    assert not cone_decide(g)


def test_span21_discard():
    g = zkgraph(5, 2, [(0, 1, 0), (0, 1, 1), (0, 1, 2), (0, 1, 3)])
    assert ConeRun(g).run().discarded == [(3, SPAN21)]


def test_decide_examples():
    assert cone_decide(zkgraph(3, 1, [(0, 0, 1)]))
    assert not cone_decide(zkgraph(3, 1, [(0, 0, 0)]))
    assert not cone_decide(zkgraph(3, 1, []))


def test_family_at_scale(no_audit):
    assert cone_decide(cone_family(64, 5))


def test_minimal_flag():
    g = zkgraph(5, 2, [(0, 1, 0), (0, 1, 1), (0, 1, 2), (0, 1, 3)])
    assert not cone_decide(g)
    assert cone_decide(g, minimal=False)


def test_extract_cardinality():
    assert len(cone_extract(corpus("k4_zero_in_22circuit_z3"))) == 6


def test_robust_circuit_lone_loops():
    assert robust_circuit(zkgraph(3, 1, [(0, 0, 1)]), [0])
    assert not robust_circuit(zkgraph(3, 1, [(0, 0, 0)]), [0])


def test_wrong_group():
    with pytest.raises(GraphError):
        cone_decide(z2graph(1, []))


def test_robustness_matches_oracle_on_two_two_circuits():
    seen = 0
    for g in random_suite(21, 500, z2_share=0.0):
        og = OracleGraph(g)
        for c in og.circuits(TWO_TWO):
            circ = sorted(edges_of(c))
            if len(circ) == 1:
                continue
            want = all(og.is_sparse(ross(g.group), c & ~(1 << e)) for e in circ)
            assert robust_circuit(g, circ) == want
            seen += 1
    assert seen > 50


def test_matches_oracle_on_random_graphs():
    for g in random_suite(4, 800, z2_share=0.0):
        fam = cone_laman(g.group.modulus)
        og = OracleGraph(g)
        run = ConeRun(g).run()
        assert len(run.kept) == og.rank(fam)
        assert og.is_sparse(fam, sum(1 << e for e in run.kept))
        assert [sorted(c.vertices) for c in run.components()] == \
            [sorted(c.vertices) for c in og.components(fam)]
        assert cone_decide(g) == (g.m == 2 * g.n - 1 and og.is_sparse(fam))
