import itertools
import random

import pytest

from rigidkit.oracle import (
    LAMAN,
    TWO_TWO,
    OracleBoundError,
    OracleGraph,
    cone_laman,
    edges_of,
    mask_of,
    oracle_components,
    oracle_image_trivial,
    oracle_is_sparse,
    oracle_is_tight,
    oracle_max_independent,
    ross,
    walk_trivial,
)
from rigidkit.generators import random_suite

from conftest import z2graph, zero_k4, zkgraph


def test_examples():
    assert not oracle_is_sparse(zero_k4(), ross())
    assert oracle_is_sparse(z2graph(2, [(0, 1, (0, 0)), (0, 1, (1, 0))]), ross())
    assert oracle_is_sparse(zkgraph(3, 1, [(0, 0, 1)]), cone_laman(3))
    assert oracle_is_tight(zkgraph(5, 2, [(0, 1, 0), (0, 1, 1), (0, 1, 2)]), cone_laman(5))
    assert oracle_max_independent(z2graph(3, []), ross()) == 0
    comps = oracle_components(
        z2graph(4, [(0, 1, (0, 0)), (0, 1, (1, 0)), (2, 3, (0, 0))]), ross())
    assert [sorted(c.vertices) for c in comps] == [[0, 1]]


def test_walk_examples():
    assert walk_trivial(zero_k4(), range(6))
    assert not walk_trivial(z2graph(2, [(0, 1, (0, 0)), (0, 1, (1, 0))]), [0, 1])
    assert walk_trivial(z2graph(2, [(0, 1, (0, 0)), (0, 1, (1, 0))]), [1])
    assert not walk_trivial(zkgraph(3, 1, [(0, 0, 1)]), [0])
    assert oracle_image_trivial(zkgraph(3, 1, [(0, 0, 1)]), [])


def test_bound(monkeypatch):
    g = z2graph(2, [(0, 1, (0, 0))] * 4)
    with pytest.raises(OracleBoundError):
        OracleGraph(g, bound=3)
    monkeypatch.setenv("RIGIDKIT_ORACLE_BOUND", "2")
    with pytest.raises(OracleBoundError):
        OracleGraph(g)


def test_masks_round_trip():
    for s in ([], [0], [3, 5, 9]):
        assert edges_of(mask_of(s)) == set(s)


def _naive_sparse(g, family, eids):
    """Straight from the definition, one subset at a time."""
    for r in range(1, len(eids) + 1):
        for sub in itertools.combinations(eids, r):
            nv = len({v for e in sub for v in g.edges[e][:2]})
            if len(sub) > 2 * nv - family.ell:
                return False
            if family.colored and len(sub) > 2 * nv - 3 and walk_trivial(g, sub):
                return False
    return True


def test_tables_match_naive_enumeration():
    rng = random.Random(17)
    for g in random_suite(5, 150, n_max=4, m_max=7):
        fam = ross(g.group) if g.group.is_z2 else cone_laman(g.group.modulus)
        og = OracleGraph(g)
        for family in (fam, LAMAN, TWO_TWO):
            sub = [e for e in range(g.m) if rng.random() < 0.8]
            assert og.is_sparse(family, mask_of(sub)) == _naive_sparse(g, family, sub)
            best = max((r for r in range(len(sub) + 1)
                        for c in itertools.combinations(sub, r)
                        if _naive_sparse(g, family, c)), default=0)
            assert og.rank(family, mask_of(sub)) == best


def test_circuits_are_minimal():
    for g in random_suite(6, 100, n_max=4, m_max=7):
        og = OracleGraph(g)
        for c in og.circuits(LAMAN):
            assert not og.is_sparse(LAMAN, c)
            assert all(og.is_sparse(LAMAN, c & ~(1 << e)) for e in edges_of(c))
