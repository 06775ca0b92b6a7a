from fractions import Fraction

import pytest

from tourney_sandwich import atlas_data
from tourney_sandwich.atlas import (
    InvalidBlockSpec,
    InvalidParameter,
    PreconditionCovMismatch,
    UnsupportedResiduePair,
    construction,
    cover_d1_3,
    cover_d3_4,
    cover_general,
    cover_half,
    d4_star,
    end_piece,
    extend_right,
    extended,
    extended2,
    from_table,
    leg_certificate,
    named_constructions,
    parse_table,
    spider_certificate,
    split_block,
    ssz_path,
    theorem_0mod4,
    two_blocks_status,
)
from tourney_sandwich.graph_core import block_decomposition, build_path, is_isomorphic
from tourney_sandwich.sandwich_core import External, NamedProposition, TheoremFamily, TwoBlocks, verify

ENTRIES = named_constructions()


@pytest.mark.parametrize("entry", ENTRIES, ids=[e.id for e in ENTRIES])
def test_named_construction_verifies_and_matches_table(entry):
    cert = entry.build()
    assert verify(cert).passed
    assert entry.audit(cert) == []


def test_every_table_parses_and_verifies():
    partial = {"D4_DAGGER", "D12_DDAGGER", "D4_BAR", "D12_PARALLEL"}
    for name in dir(atlas_data):
        text = getattr(atlas_data, name)
        if not name.isupper() or not isinstance(text, str):
            continue
        is_partial = name in partial or (name.startswith("COVER") and name != "COVER_D1_3")
        s = from_table(text, partial=is_partial)
        assert verify(s).passed, name


def test_parse_table_errors():
    with pytest.raises(ValueError):
        parse_table("weights 1\n")
    with pytest.raises(ValueError):
        from_table("path 0>1\n1/2 | a:0 b:1 | a>zz\n")


def test_ssz_path_is_the_directed_path():
    for k in range(2, 9):
        s = ssz_path(k)
        assert block_decomposition(s.pattern) == [(k, 1)]
        assert all(c == 1 for c in s.cov_table()[0])


def test_distinguished_cov_values():
    assert cover_d3_4().cov_table()[0][7] == Fraction(15, 16)
    assert cover_d1_3().cov_table()[0][2] == 0


def test_parallel_table_arc_cov_correction():
    # 3/5 on e_0, e_{4t-2}, e_{4t-1}; every other arc is covered exactly once
    for t in range(1, 5):
        n = 4 * t
        ecov = extended2(t).path_arc_cov()
        low = {0, n - 2, n - 1}
        assert [i for i, c in enumerate(ecov) if c != 1] == sorted(low)
        assert all(ecov[i] == Fraction(3, 5) for i in low)


def test_extended_families_match_tables_at_t3():
    a = extended(3)
    b = from_table(atlas_data.D12_DDAGGER, partial=True)
    assert is_isomorphic(a.host, b.host)
    assert a.cov_table() == b.cov_table()
    c = extended2(3)
    d = from_table(atlas_data.D12_PARALLEL, partial=True)
    assert is_isomorphic(c.host, d.host)
    assert c.cov_table() == d.cov_table()


def test_general_cover_reproduces_d9_11_table():
    a = cover_general(10)
    b = from_table(atlas_data.COVER_D9_11, partial=True)
    assert is_isomorphic(a.host, b.host)
    assert a.cov_table() == b.cov_table()


def test_extend_right_precondition():
    with pytest.raises(PreconditionCovMismatch):
        extend_right(ssz_path(4), 1)
    with pytest.raises(InvalidParameter):
        extend_right(ssz_path(4), -1)


def test_theorem_0mod4():
    for blocks in ((2, 2), (5, 4, 3), (2, 8, 4, 5), (9,), (6, 7)):
        s = theorem_0mod4(blocks)
        assert verify(s).passed
        assert is_isomorphic(s.pattern, build_path(blocks))
    for bad in ((), (1, 3), (2, 3, 2)):
        with pytest.raises(InvalidBlockSpec):
            theorem_0mod4(bad)


def test_split_block():
    assert [split_block(n) for n in (2, 3, 4, 5, 8, 9)] == [(2, 0), (3, 0), (4, 0), (5, 0), (4, 1), (5, 1)]
    for r in (2, 3, 4, 5):
        assert verify(end_piece(r)).passed


def test_leg_certificate():
    for c in range(2, 12):
        s = leg_certificate(c)
        assert verify(s).passed and s.cov_table()[0][0] <= Fraction(1, 2)
    with pytest.raises(InvalidParameter):
        leg_certificate(1)


def test_cover_half_examples_and_errors():
    res = cover_half(14, 7)
    assert [n * d for n, d in res.blocks] == [4, -4, 6]
    assert res.distinguished_cov == Fraction(1, 2)
    assert res.ell is None
    assert cover_half(4, 2).steps == ("D1,3S",)
    with pytest.raises(UnsupportedResiduePair):
        cover_half(5, 2)
    with pytest.raises(InvalidParameter):
        cover_half(8, 1)


def test_spiders():
    res = spider_certificate(2, 3, 4)
    assert verify(res.certificate).passed
    assert res.trace[0] == "D3,4S extended left 0"
    ext = spider_certificate(1, 4, 4)
    assert isinstance(ext.evidence, External) and ext.certificate is None
    with pytest.raises(InvalidParameter):
        spider_certificate(0, 2, 2)


def test_two_blocks_status():
    s = two_blocks_status(3, 6)
    assert s.kind == "sandwich" and s.valid
    s = two_blocks_status(1, 3)
    assert s.kind == "proposition" and s.evidence == NamedProposition("P13")
    s = two_blocks_status(7, 1)
    assert s.kind == "reduction" and s.valid
    assert s.evidence == TheoremFamily(TwoBlocks(1, 7))
    with pytest.raises(InvalidParameter):
        two_blocks_status(1, 1)


def test_construction_lookup():
    assert construction("D4*").build() == d4_star()
    assert construction("D20++").params == {"t": 5}
    with pytest.raises(KeyError):
        construction("nope")
