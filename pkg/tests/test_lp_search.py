from fractions import Fraction

import pytest

from tourney_sandwich.atlas import d3_star
from tourney_sandwich.graph_core import build_path, directed_path, tree_code
from tourney_sandwich.lp_search import (
    Feasible,
    Infeasible,
    LinearSystem,
    PoolTooLarge,
    VerificationFailed,
    build_system,
    certificate_tuples,
    extract_certificate,
    generate_pool,
    homomorphisms,
    oriented_trees,
    search,
    solve_feasible,
)
from tourney_sandwich.sandwich_core import verify


def system(n, eqs=(), ineqs=()):
    return LinearSystem(
        n,
        [({i: Fraction(c) for i, c in row.items()}, Fraction(b)) for row, b in eqs],
        [({i: Fraction(c) for i, c in row.items()}, Fraction(b)) for row, b in ineqs],
    )


def check_point(sys, x):
    assert all(v >= 0 for v in x)
    for row, b in sys.equalities:
        assert sum(c * x[i] for i, c in row.items()) == b
    for row, b in sys.inequalities:
        assert sum(c * x[i] for i, c in row.items()) <= b


def test_simplex_small_systems():
    s = system(2, eqs=[({0: 1, 1: 1}, 1)], ineqs=[({0: 1}, Fraction(1, 3))])
    res = solve_feasible(s)
    assert isinstance(res, Feasible)
    check_point(s, res.assignment)
    assert isinstance(solve_feasible(system(2, eqs=[({0: 1, 1: 1}, 1), ({0: 1, 1: -1}, 3)])), Infeasible)
    assert isinstance(solve_feasible(system(1, eqs=[({0: 1}, -1)])), Infeasible)
    assert solve_feasible(system(0)).feasible
    neg = system(2, eqs=[({0: -1, 1: 1}, -1)])
    res = solve_feasible(neg)
    check_point(neg, res.assignment)


def test_oriented_tree_counts():
    # one vertex; one arc; three trees with two arcs
    assert [g.arc_count for g in oriented_trees(2)] == [0, 1, 2, 2, 2]
    codes = [tree_code(g) for g in oriented_trees(3)]
    assert len(codes) == len(set(codes)) == 1 + 1 + 3 + 8


def test_homomorphisms_of_arc_into_p2():
    assert sorted(homomorphisms(directed_path(1), directed_path(2))) == [(0, 1), (1, 2)]


def test_search_results_are_stable():
    results = {
        (1,): (True, 7),
        (2,): (True, 24),
        (3,): (True, 47),
        (1, 2): (False, 36),
    }
    for blocks, (feasible, pool) in results.items():
        r = search(build_path(blocks))
        assert (r.feasible, r.pool_size) == (feasible, pool), blocks
        if feasible:
            assert verify(r.certificate).passed
    r11 = search(build_path((1, 1)), shape_filter="paths")
    assert not r11.feasible and (r11.pool_size, r11.rows, r11.pivots) == (15, 11, 10)


def test_search_is_deterministic():
    a = search(directed_path(3))
    b = search(directed_path(3))
    assert a.certificate == b.certificate and a.pivots == b.pivots


def test_corrupted_assignment_is_rejected():
    h = directed_path(2)
    pool = generate_pool(h)
    res = solve_feasible(build_system(h, pool))
    assert res.feasible
    halved = [x / 2 for x in res.assignment]
    with pytest.raises(VerificationFailed):
        extract_certificate(h, pool, halved)
    # the same point passes as a partial sandwich unless the pairing is broken
    assert verify(extract_certificate(h, pool, halved, partial=True)).passed
    skewed = list(res.assignment)
    for i, t in enumerate(pool):
        if t.s == 1 and skewed[i]:
            skewed[i] = skewed[i] * 2
            break
    else:
        pytest.skip("no attached tuple in the solution")
    with pytest.raises(VerificationFailed):
        extract_certificate(h, pool, skewed, partial=True)


def test_pool_cap():
    with pytest.raises(PoolTooLarge):
        generate_pool(directed_path(3), cap=5)


def test_known_certificate_lies_in_pool():
    h = directed_path(3)
    keys = {t.key(4, sorted(h.arcs)) for t in generate_pool(h)}
    for t in certificate_tuples(d3_star()):
        assert t.key(4, sorted(d3_star().pattern.arcs)) in keys
