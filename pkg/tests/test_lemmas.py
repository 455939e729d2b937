from rigidkit.colored import zk
from rigidkit.graphio import load
from rigidkit.lemmas import (
    LemmaResult,
    _record,
    check_22_circuit,
    check_cone_two_types,
    check_z3_path,
    lemma_suite,
    minimize,
    tight_patterns,
)

from conftest import zkgraph


def test_tight_pattern_counts():
    assert [len(tight_patterns(n, 2, False)) for n in range(1, 5)] == [1, 1, 2, 9]
    assert [len(tight_patterns(n, 1, True)) for n in range(1, 5)] == [1, 3, 12, 88]


def test_suite_passes():
    results = lemma_suite(seed=1, counts={"z3_graphs": 200, "colorings": 2})
    assert [r.name for r in results] == [
        "laman-circuits-disjoint", "elim", "circuits-any-basis",
        "22circuitsdisjoint", "22orlamancircuits", "22circuit",
        "Z3path", "conetwotypes"]
    assert all(r.ok and r.instances > 0 for r in results)


def test_individual_checks():
    loop1 = zkgraph(3, 1, [(0, 0, 1)])
    assert check_z3_path(loop1) and check_cone_two_types(loop1)
    two = zkgraph(3, 2, [(0, 1, 0), (0, 1, 1), (0, 1, 2)])
    assert check_22_circuit(two)


def test_minimize_shrinks_to_the_failing_core():
    # pretend any graph holding a loop colored 2 is a counterexample
    def check(g):
        return not any(t == h and c == 2 for t, h, c in g.edges)
    g = zkgraph(3, 5, [(0, 1, 0), (3, 3, 2), (1, 2, 1), (4, 0, 0)])
    small = minimize(g, check)
    assert small.edges == ((0, 0, 2),) and small.n == 1


def test_failures_write_reproducers(tmp_path):
    res = LemmaResult("demo")
    g = zkgraph(4, 3, [(0, 1, 0), (2, 2, 2)])
    _record(res, g, lambda h: not any(c == 2 for *_, c in h.edges), tmp_path)
    assert res.failures == 1 and len(res.reproducers) == 1
    back = load(res.reproducers[0])
    assert back.group == zk(4) and back.edges == ((0, 0, 2),)
