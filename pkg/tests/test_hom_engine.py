from fractions import Fraction

import numpy as np
import pytest

from tourney_sandwich.graph_core import (
    OrientedGraph,
    Tournament,
    build_path,
    directed_path,
    disjoint_union,
    transitive_tournament,
)
from tourney_sandwich.hom_engine import (
    SizeGuardExceeded,
    VerticesAdjacent,
    XorShift64Star,
    adjacency_stack,
    anti_sidorenko_scan,
    augmented_adjacency,
    batch_hom_counts,
    cs_reduction_sides,
    edge_flip_identity,
    enumerate_tournaments,
    forest_hom_entropy,
    hom_count,
    hom_count_brute,
    hom_count_multi_pinned,
    hom_count_pinned,
    hom_density,
    hom_matrix,
    random_tournament,
    skew_part,
    splitmix64,
)

C3 = Tournament(3, frozenset({(0, 1), (1, 2), (2, 0)}))


def test_small_counts():
    assert hom_count(directed_path(2), C3) == 3
    assert hom_count(directed_path(2), transitive_tournament(3)) == 1
    assert hom_count(directed_path(1), C3) == 3
    assert hom_count(OrientedGraph(1, frozenset()), C3) == 3


def test_density_of_single_arc_is_half_minus_loops():
    for t in enumerate_tournaments(4):
        assert hom_density(directed_path(1), t) == Fraction(6, 16)


def test_dp_matches_brute_force():
    patterns = [build_path((1, 2)), build_path((2, 2)), disjoint_union(directed_path(2), build_path((1, 1)))]
    for t in enumerate_tournaments(4):
        for h in patterns:
            assert hom_count(h, t) == hom_count_brute(h, t)


def test_brute_force_guard():
    with pytest.raises(SizeGuardExceeded):
        hom_count_brute(directed_path(9), transitive_tournament(8), guard=1000)


def test_pinned_counts_sum():
    h = build_path((1, 2))
    t = random_tournament(5, 3)
    assert sum(hom_count_pinned(h, 1, t, x) for x in range(5)) == hom_count(h, t)
    total = sum(hom_count_multi_pinned(h, {0: a, 1: b}, t) for a, b in t.arcs)
    assert total == hom_count(h, t)


def test_matrix_evaluation_matches_counts():
    t = random_tournament(4, 11)
    h = build_path((2, 1))
    from tourney_sandwich.hom_engine import adjacency_matrix

    assert hom_matrix(h, adjacency_matrix(t)) == hom_count(h, t)
    a = augmented_adjacency(t)
    assert a[(0, 0)] == Fraction(1, 2)
    assert skew_part(t).is_skew_symmetric()


def test_edge_flip_and_vertex_checks():
    f = OrientedGraph(4, frozenset({(0, 1), (2, 3)}))
    for t in enumerate_tournaments(4):
        assert edge_flip_identity(f, 1, 2, t).holds
    with pytest.raises(VerticesAdjacent):
        edge_flip_identity(f, 0, 1, C3)


def test_cs_reduction_small():
    for t in enumerate_tournaments(4):
        lhs, rhs = cs_reduction_sides(4, t)
        assert lhs <= rhs


def test_prng_reference_values():
    assert splitmix64(0) == 0xE220A8397B1DCDAF
    r = XorShift64Star(1)
    seq = [r.next_u64() for _ in range(3)]
    assert len(set(seq)) == 3
    assert random_tournament(5, 42).bits == 946


def test_batch_counts_match_scalar():
    h = build_path((1, 3))
    stack = adjacency_stack(4)
    counts = batch_hom_counts(h, stack)
    for bits, c in enumerate(counts.tolist()):
        assert int(c) == hom_count(h, Tournament.from_bits(4, bits))


def test_batch_object_fallback_for_big_counts():
    h = directed_path(30)
    stack = adjacency_stack(5, 0, 4)
    counts = batch_hom_counts(h, stack)
    assert counts.dtype == object or counts.dtype == np.int64
    for bits, c in enumerate(counts.tolist()):
        assert int(c) == hom_count(h, Tournament.from_bits(5, bits))


def test_scan_reports_first_p11_violation():
    rep = anti_sidorenko_scan(build_path((1, 1)), 6)
    assert not rep.verdict
    assert rep.max_density == Fraction(55, 216)
    assert (rep.argmax_n, rep.argmax_bits) == (6, 0)
    small = anti_sidorenko_scan(build_path((1, 1)), 5)
    assert small.verdict


def test_scan_random_mode_deterministic():
    a = anti_sidorenko_scan(build_path((1, 2)), 7, mode="random", count=5, seed=9)
    b = anti_sidorenko_scan(build_path((1, 2)), 7, mode="random", count=5, seed=9)
    assert a == b and a.hosts_scanned == 5


def test_scan_guard():
    with pytest.raises(SizeGuardExceeded):
        anti_sidorenko_scan(directed_path(1), 8)


def test_entropy_formula_agrees():
    h = build_path((1, 2))
    t = random_tournament(5, 2)
    direct, formula = forest_hom_entropy(h, t)
    assert abs(direct - formula) < 1e-30
