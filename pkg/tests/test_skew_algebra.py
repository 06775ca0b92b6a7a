from fractions import Fraction

import pytest

from tourney_sandwich.graph_core import OrientedGraph, build_path, directed_path, disjoint_union, reverse_all_arcs
from tourney_sandwich.hom_engine import augmented_adjacency, enumerate_tournaments, hom_matrix, skew_part
from tourney_sandwich.skew_algebra import (
    AXIOMS,
    NotAPathForest,
    PathMonomialPolynomial,
    SignViolated,
    canonical_sign,
    certified_bound_p22,
    certified_bound_p1331,
    certify_sign,
    expand_pattern,
    odd_multiplicity_part,
    path_density,
    poly_eval,
    sample_skew_sanity,
    sign_variations,
    sturm_sequence,
)

X = PathMonomialPolynomial.var


def test_polynomial_arithmetic_and_printing():
    p = X(1) * X(2) + 3 - X(1)
    assert p.coefficient(2, 1) == 1 and p.constant == 3
    assert (p - p) == PathMonomialPolynomial()
    assert str(X(2) - Fraction(1, 4) * X(1) + Fraction(1, 16)) == "1/16 - 1/4*t(P_{1,1},U) + t(P_{2,2},U)"
    assert (X(1) + 1) ** 2 == X(1) * X(1) + 2 * X(1) + 1
    assert ((X(1) + 2) ** 2).to_univariate(1) == [4, 4, 1]


def test_small_expansions():
    assert expand_pattern(directed_path(1)) == PathMonomialPolynomial.const(Fraction(1, 2))
    assert expand_pattern(build_path((1, 1))) == X(1) + Fraction(1, 4)
    assert expand_pattern(directed_path(2)) == -X(1) + Fraction(1, 4)
    with pytest.raises(NotAPathForest):
        expand_pattern(OrientedGraph(4, frozenset({(0, 1), (0, 2), (0, 3)})))


def test_canonical_sign():
    assert canonical_sign(build_path((1, 1))) == (1, 1)
    assert canonical_sign(directed_path(2)) == (1, -1)
    assert canonical_sign(reverse_all_arcs(build_path((2, 2)))) == (2, 1)


def test_expansion_matches_evaluation_on_disconnected_pattern():
    h = disjoint_union(build_path((1, 1)), directed_path(2))
    p = expand_pattern(h)
    for n in (2, 3):
        for t in enumerate_tournaments(n):
            want = hom_matrix(h, augmented_adjacency(t)) / Fraction(n) ** h.vertex_count
            assert p.evaluate_at(skew_part(t)) == want


def test_path_density_of_odd_paths_is_zero():
    for t in enumerate_tournaments(4):
        u = skew_part(t)
        assert path_density(1, u) >= 0
        from tourney_sandwich.hom_engine import hom_matrix as hm

        assert hm(directed_path(3), u) == 0


def test_sturm_machinery():
    p = [-2, 0, 1]  # x^2 - 2
    seq = sturm_sequence(p)
    assert sign_variations(seq, 0) - sign_variations(seq, 2) == 1
    assert poly_eval(p, Fraction(3, 2)) == Fraction(1, 4)
    # (x-1)^2 (x-2) keeps only the odd root
    sq = [-2, 5, -4, 1]
    odd = odd_multiplicity_part(sq)
    assert poly_eval(odd, 2) == 0 and poly_eval(odd, 1) != 0


def test_certify_sign_accepts_and_rejects():
    assert certify_sign([0, 1], 0, 1, ">=0").validate()
    assert certify_sign([-1, 0, 1], -1, 1, "<=0").validate()  # zeros only at the ends
    assert certify_sign([0, 0, 1], -1, 1, ">=0").validate()  # double root inside
    with pytest.raises(SignViolated) as exc:
        certify_sign([-1, 0, 4], 0, 1, ">=0")
    assert isinstance(exc.value.witness, Fraction)
    assert poly_eval([-1, 0, 4], exc.value.witness) < 0
    with pytest.raises(ValueError):
        certify_sign([1], 1, 0, ">=0")


def test_proof_objects_check_and_print():
    for proof in (certified_bound_p1331(), certified_bound_p22()):
        assert proof.check()
        text = proof.to_text()
        assert "conclusion" in text
        for a in proof.axioms_used:
            assert a in AXIOMS


def test_tampered_proof_fails():
    proof = certified_bound_p1331()
    proof.constant = Fraction(1, 128)
    assert not proof.check()
    proof = certified_bound_p1331()
    proof.steps[0].part = proof.steps[0].part + X(1) * Fraction(1, 1000)
    assert not proof.check()


def test_cited_inequalities_on_small_hosts():
    rep = sample_skew_sanity(5, 0, exhaustive=True)
    assert rep["ok"] and rep["hosts"] == 1024
