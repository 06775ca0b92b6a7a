from dataclasses import replace
from fractions import Fraction

import pytest

from tourney_sandwich.atlas import d2_star, d4_star, ssz_path
from tourney_sandwich.graph_core import OrientedGraph, build_path, directed_path
from tourney_sandwich.sandwich_core import (
    CONDITIONS,
    DirectedPath,
    EvidenceRegistry,
    External,
    NamedProposition,
    Reversal,
    SandwichRef,
    TargetNotInPattern,
    TheoremFamily,
    TwoBlocks,
    ZeroMod4,
    build_covering_forest,
    certificate_from_json,
    certificate_to_json,
    classify,
    cov,
    dumps,
    empirical_inequality_sweep,
    evidence_from_json,
    evidence_to_json,
    glue,
    loads,
    make_certificate,
    reverse_certificate,
    reverse_labels,
    scale_to_integer,
    to_dot,
    verify,
    verify_covering_map,
)


def failing(s, registry=None):
    return {r.name for r in verify(s, registry).failures()}


def test_reference_certificates_pass_every_condition():
    for s in (d2_star(), d4_star(), ssz_path(2), ssz_path(7)):
        rep = verify(s)
        assert rep.passed, str(rep)
        assert [r.name for r in rep.results] == list(CONDITIONS)


def test_cov_values_of_d4_star():
    s = d4_star()
    vcov, acov = s.cov_table()
    assert vcov == [Fraction(1, 2), Fraction(1), Fraction(1), Fraction(1), Fraction(1, 2)]
    assert set(acov.values()) == {Fraction(1)}
    assert cov(s, (0, 1)) == 1 and cov(s, 0) == Fraction(1, 2)
    with pytest.raises(TargetNotInPattern):
        cov(s, (1, 0))
    with pytest.raises(TargetNotInPattern):
        cov(s, 9)


# one corruption per condition ---------------------------------------------------

def test_corrupt_forest():
    s = d2_star()
    s = replace(s, host=OrientedGraph(8, s.host.arcs | {(0, 2)}))
    assert failing(s) == {"forest"}


def test_corrupt_retraction():
    s = d2_star()
    psi = list(s.psi)
    psi[3] = 2
    assert failing(replace(s, psi=tuple(psi))) == {"retraction"}
    psi = list(s.psi)
    psi[1] = 0
    assert "retraction" in failing(replace(s, psi=tuple(psi)))


def test_corrupt_weights():
    s = d2_star()
    assert "weights" in failing(replace(s, weights={3: Fraction(-1, 2)}))
    assert "weights" in failing(replace(s, weights={}))
    assert "weights" in failing(replace(s, weights={3: Fraction(1, 2), 4: Fraction(1)}))


def test_corrupt_arc_cover_and_partial_flag():
    s = replace(d2_star(), weights={3: Fraction(1, 4)})
    assert failing(s) == {"arc_cover"}
    assert verify(replace(s, partial=True)).passed


def test_corrupt_vertex_cover():
    host = OrientedGraph(2, frozenset())
    s = make_certificate(host, (0,), (0, 0), {1: 2})
    assert failing(s) == {"vertex_cover"}


def test_corrupt_partition():
    s = d4_star()
    assert "partition" in failing(replace(s, partition=((5, 7), (9,))))
    s2 = replace(s, weights={5: Fraction(1, 2), 7: Fraction(1, 2), 9: Fraction(1, 2), 11: Fraction(1, 4)})
    assert "partition" in failing(replace(s2, partition=((5,), (7,), (9, 11))))


def test_corrupt_evidence():
    s = d2_star()
    assert failing(replace(s, evidence=(DirectedPath(4),))) == {"evidence"}
    assert failing(replace(s, evidence=(External("folklore"),))) == {"evidence"}
    assert verify(replace(s, evidence=(External("folklore"),)), EvidenceRegistry(allow_external=True)).passed


def test_corrupt_involution():
    s = d4_star()
    pi = list(s.involution)
    pi[5] = 6
    assert "involution" in failing(replace(s, involution=tuple(pi)))
    pi = list(s.involution)
    pi[5], pi[6] = 8, 7
    assert "involution" in failing(replace(s, involution=tuple(pi)))


def test_corrupt_same_weight():
    s = d4_star()
    w = dict(s.weights)
    w[5] = Fraction(1, 4)
    assert "same_weight" in failing(replace(s, weights=w, partial=True))


def test_corrupt_reversed_attachment():
    s = d4_star()
    assert failing(replace(s, involution=tuple(range(s.host.vertex_count)))) == {"reversed_attachment"}


def test_single_attachment_follows_from_forest_and_retraction():
    # with an acyclic host every component meets the pattern in at most one arc
    for s in (d4_star(), ssz_path(5)):
        assert verify(s).condition("single_attachment").passed


# evidence ---------------------------------------------------------------------

def test_classify():
    assert classify(directed_path(3)) == DirectedPath(3)
    assert classify(OrientedGraph(1, frozenset())) == DirectedPath(0)
    assert classify(build_path((2, 2))) is not None


def test_evidence_registry_terms():
    reg = EvidenceRegistry()
    assert reg.valid(NamedProposition("P22"))
    assert reg.valid(NamedProposition("P1331"))
    assert not reg.valid(NamedProposition("nonsense"))
    assert reg.valid(Reversal(DirectedPath(2)))
    assert reg.valid(TheoremFamily(ZeroMod4((2, 4, 3))))
    assert not reg.valid(TheoremFamily(ZeroMod4((2, 3, 3))))
    assert not reg.valid(TheoremFamily(TwoBlocks(1, 1)))
    assert reg.valid(TheoremFamily(TwoBlocks(1, 6)))
    assert not reg.valid(External("x"))
    assert not reg.valid(SandwichRef("missing"))
    reg.register("d4", d4_star())
    assert reg.valid(SandwichRef("d4"))
    assert EvidenceRegistry(recursive_paths=True).valid(DirectedPath(4))


def test_evidence_json_roundtrip():
    terms = [
        DirectedPath(3),
        NamedProposition("P13"),
        Reversal(NamedProposition("P22")),
        TheoremFamily(ZeroMod4((2, 4, 3))),
        TheoremFamily(TwoBlocks(1, 5)),
        External("caterpillar theorem"),
        SandwichRef("abc"),
    ]
    for t in terms:
        assert evidence_from_json(evidence_to_json(t)) == t


# algebra ----------------------------------------------------------------------

def test_reverse_and_relabel_preserve_validity():
    s = d4_star()
    for t in (reverse_certificate(s), reverse_labels(s), reverse_certificate(reverse_labels(s))):
        assert verify(t).passed
    assert reverse_labels(s).cov_table()[0] == s.cov_table()[0][::-1]


def test_glue_two_certificates():
    g = glue(d4_star(), 4, d4_star(), 0)
    assert verify(g).passed
    assert len(g.pattern_vertices) == 9
    assert g.cov_table()[0][4] == 1
    # the ends of D_2 carry more than 1/2, so gluing two copies over-covers the joint
    assert "vertex_cover" in failing(glue(ssz_path(2), 2, ssz_path(2), 0))


# covering forest and sweep --------------------------------------------------------

def test_scale_to_integer():
    q, mult = scale_to_integer(d4_star())
    assert q == 2 and set(mult.values()) == {1}


def test_covering_forest_of_d4_star():
    cf = build_covering_forest(d4_star())
    assert (cf.q, cf.forest.vertex_count, cf.forest.arc_count) == (2, 15, 12)
    assert verify_covering_map(cf.forest, cf.phi, d4_star().pattern, 3)
    phi = list(cf.phi)
    phi[0] = 1
    assert not verify_covering_map(cf.forest, phi, d4_star().pattern, 3)


def test_sweep_passes_for_small_certificates():
    assert empirical_inequality_sweep(ssz_path(2), 4).passed
    from tourney_sandwich.hom_engine import SizeGuardExceeded

    with pytest.raises(SizeGuardExceeded):
        empirical_inequality_sweep(ssz_path(2), 8)


# serialization ------------------------------------------------------------------

def test_json_and_dot():
    for s in (d2_star(), d4_star()):
        back = loads(dumps(s))
        assert back == s
        assert certificate_from_json(certificate_to_json(s)) == s
    dot = to_dot(d4_star())
    assert dot.startswith("digraph") and "->" in dot
