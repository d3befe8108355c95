from itertools import combinations

import pytest

from xconn.extra import WorkLimitExceeded
from xconn.families import build
from xconn.graph import Graph, GraphError, closed_neighborhood, cycle, path
from xconn.harness import smallest_boundary_set
from xconn.pmc import (admissible_sets, diagnosability_exhaustive, is_admissible_fault_set,
                       is_distinguishable, is_t_diagnosable_exhaustive, is_t_diagnosable_sampled,
                       theorem41_preconditions, witness_pair)

P5 = build("strong(cycle:5,cycle:5)")
P7 = build("strong(cycle:7,cycle:7)")


def test_distinguishable_examples():
    p = path(3)
    r = is_distinguishable(p, {0}, {2})
    assert r.distinguishable and r.boundary_witness[0] == 1
    r = is_distinguishable(cycle(4), {0}, {0, 2})
    assert r.distinguishable
    with pytest.raises(ValueError):
        is_distinguishable(cycle(4), {1}, {1})


def test_absorbed_boundary_is_indistinguishable():
    G = cycle(8)
    A = {2, 3}
    N = closed_neighborhood(G, A) - A
    assert not is_distinguishable(G, N, N | A).distinguishable


def test_distinguishability_matches_definition():
    G = cycle(5)
    for a in range(1, 32):
        for b in range(a + 1, 32):
            R1 = {v for v in range(5) if a >> v & 1}
            R2 = {v for v in range(5) if b >> v & 1}
            outside = set(range(5)) - (R1 | R2)
            delta = R1 ^ R2
            expected = any(G.has_edge(u, v) for u in outside for v in delta)
            assert is_distinguishable(G, R1, R2).distinguishable == expected


def test_admissible_examples():
    assert is_admissible_fault_set(cycle(6), {0, 3}, 1)
    assert not is_admissible_fault_set(cycle(6), {0, 2}, 1)
    assert is_admissible_fault_set(cycle(6), {0}, 1)
    assert not is_admissible_fault_set(cycle(6), {0}, 1, strict=True)
    assert not is_admissible_fault_set(cycle(6), range(6), 0)


def test_witness_pair_c5c5():
    A = {P5.vertex(0, 0), P5.vertex(1, 0)}
    wp = witness_pair(P5.graph, A, 1)
    assert (len(wp.pair.R1), len(wp.pair.R2)) == (10, 12)
    assert not wp.pair.distinguishable
    assert wp.F1_admissible and wp.F2_admissible
    assert wp.certified_upper_bound == 11


def test_witness_pair_block_c7c7():
    A = {P7.vertex(x, y) for x in (0, 1) for y in (0, 1)}
    wp = witness_pair(P7.graph, A, 3)
    assert (len(wp.pair.R1), len(wp.pair.R2)) == (12, 16)
    assert not wp.pair.distinguishable


def test_witness_pair_errors():
    with pytest.raises(GraphError):
        witness_pair(P5.graph, {0, 12}, 1)  # not connected
    with pytest.raises(GraphError):
        witness_pair(P5.graph, {0}, 1)  # wrong size
    with pytest.raises(GraphError):
        witness_pair(path(3), {0, 1}, 1)  # N(A) is no cut


def test_exhaustive_small():
    v = is_t_diagnosable_exhaustive(cycle(6), 0, 1)
    assert v.holds and v.conclusive and v.mode == "exhaustive"
    assert v.pairs_checked == len(list(combinations(admissible_sets(cycle(6), 0, 1), 2)))
    with pytest.raises(WorkLimitExceeded):
        admissible_sets(P5.graph, 1, 12, max_sets=1000)


def test_witness_refutes_its_own_size():
    G = cycle(9)
    g = 1
    A = smallest_boundary_set(G, g)
    wp = witness_pair(G, A, g)
    s = len(wp.pair.R1)
    v = is_t_diagnosable_exhaustive(G, g, s + g + 1)
    assert not v.holds and v.counterexample is not None
    assert not is_distinguishable(G, v.counterexample.R1, v.counterexample.R2).distinguishable


@pytest.mark.parametrize("n, g", [(9, 1), (10, 1), (11, 2), (12, 2)])
def test_cycle_diagnosability_equals_kappa_plus_g(n, g):
    # kappa_g(C_n) = 2 for n >= 2(g+1)+2, and cycles are 2-regular with g <= 2
    G = cycle(n)
    assert diagnosability_exhaustive(G, g, t_max=6) == 2 + g


def test_sampled_deterministic_and_worker_independent():
    a = is_t_diagnosable_sampled(P5.graph, 1, 11, 60_000, seed=3)
    b = is_t_diagnosable_sampled(P5.graph, 1, 11, 60_000, seed=3, workers=2)
    assert a == b and a.holds and not a.conclusive
    assert a.pairs_checked > 0


def test_sampled_finds_counterexample_above_bound():
    v = is_t_diagnosable_sampled(P5.graph, 1, 12, 50_000, seed=0)
    assert not v.holds and v.conclusive
    ce = v.counterexample
    assert not is_distinguishable(P5.graph, ce.R1, ce.R2).distinguishable
    assert max(len(ce.R1), len(ce.R2)) <= 12


def test_preconditions():
    A = {P5.vertex(0, 0), P5.vertex(1, 0)}
    assert theorem41_preconditions(P5.graph, 1, 10, A)
    P6 = build("strong(cycle:6,cycle:6)")
    A6 = smallest_boundary_set(P6.graph, 2)
    assert theorem41_preconditions(P6.graph, 2, 12, A6)
    assert not theorem41_preconditions(cycle(5), 1, 2, {0, 1})  # 5 < 2*3 + 1
    assert not theorem41_preconditions(P5.graph, 1, 9, A)
    assert not theorem41_preconditions(Graph(3, [(0, 1), (1, 2)]), 0, 1, {0})
