import pytest

from tourney_sandwich.graph_core import (
    InvalidGraph,
    InvalidTournament,
    NotAPath,
    OrientedGraph,
    SpiderSpec,
    Tournament,
    all_tournaments,
    block_decomposition,
    blow_up,
    build_path,
    components,
    directed_path,
    disjoint_union,
    forest_code,
    induced,
    is_forest,
    is_isomorphic,
    path_order,
    plus_minus_attach,
    reverse_all_arcs,
    rooted_isomorphism,
    spider_leg_lengths,
    tournament_from_text,
    tournament_to_text,
    transitive_tournament,
)
from tourney_sandwich.hom_engine import random_tournament


def test_oriented_graph_rejects_loops_and_antiparallel_pairs():
    with pytest.raises(InvalidGraph):
        OrientedGraph(2, frozenset({(0, 0)}))
    with pytest.raises(InvalidGraph):
        OrientedGraph(2, frozenset({(0, 1), (1, 0)}))
    with pytest.raises(InvalidGraph):
        OrientedGraph(2, frozenset({(0, 2)}))


def test_tournament_needs_every_pair():
    with pytest.raises(InvalidTournament):
        Tournament(3, frozenset({(0, 1), (1, 2)}))


def test_bit_encoding_roundtrip_and_order():
    t = Tournament.from_bits(3, 0b101)
    # bit 0 is pair (0,1), bit 1 is (0,2), bit 2 is (1,2); a set bit means i -> j
    assert t.arcs == frozenset({(0, 1), (2, 0), (1, 2)})
    assert t.bits == 0b101
    for b in range(8):
        assert Tournament.from_bits(3, b).bits == b


def test_all_tournaments_count():
    assert sum(1 for _ in all_tournaments(4)) == 64
    assert transitive_tournament(4).bits == 63


def test_seeded_tournament_golden_value():
    assert random_tournament(5, 42).bits == 946


def test_text_format_roundtrip():
    t = random_tournament(6, 7)
    assert tournament_from_text(tournament_to_text(t)) == t
    with pytest.raises(InvalidTournament):
        tournament_from_text("2\n00\n00\n")
    with pytest.raises(InvalidTournament):
        tournament_from_text("2\n01\n")


def test_build_path_and_blocks():
    p = build_path((1, 2))
    assert p.arcs == frozenset({(0, 1), (2, 1), (3, 2)})
    assert block_decomposition(p) == [(1, 1), (2, -1)]
    assert block_decomposition(reverse_all_arcs(p)) == [(1, -1), (2, 1)]
    assert build_path((3, 0)) == directed_path(3)
    with pytest.raises(ValueError):
        build_path((2, 0, 2))


def test_block_decomposition_rejects_non_paths():
    star = OrientedGraph(4, frozenset({(0, 1), (0, 2), (0, 3)}))
    with pytest.raises(NotAPath):
        block_decomposition(star)


def test_path_order_starts_at_smaller_end():
    p = OrientedGraph(3, frozenset({(2, 0), (0, 1)}))
    assert path_order(p) == [1, 0, 2]


def test_components_and_induced():
    g = disjoint_union(directed_path(2), directed_path(1))
    assert components(g) == [[0, 1, 2], [3, 4]]
    assert is_forest(g)
    sub = induced(g, [4, 3])
    assert sub.arcs == frozenset({(1, 0)})


def test_plus_minus_attachment_shape():
    # H = single vertex, F = P_1 reversed; attaching at its head gives P_{1,3}
    h = OrientedGraph(1, frozenset())
    f = OrientedGraph(2, frozenset({(1, 0)}))
    g = plus_minus_attach(h, 0, f, 0)
    assert g.vertex_count == 5 and g.arc_count == 4
    assert is_isomorphic(g, build_path((1, 3)))
    assert is_isomorphic(plus_minus_attach(h, 0, f, 1), reverse_all_arcs(build_path((1, 3))))


def test_blow_up_is_tournament_with_transitive_parts():
    t = random_tournament(3, 1)
    b = blow_up(t, 2)
    assert isinstance(b, Tournament) and b.vertex_count == 6
    assert (0, 1) in b.arcs


def test_spider_build_and_legs():
    g = SpiderSpec((2, 3, 4)).build()
    assert g.vertex_count == 10
    assert spider_leg_lengths(g) == (2, 3, 4)


def test_isomorphism_codes():
    a = build_path((2, 1))
    b = build_path((1, 2))
    assert is_isomorphic(a, b)
    assert not is_isomorphic(build_path((1, 1)), reverse_all_arcs(build_path((1, 1))))
    assert forest_code(a) == forest_code(b)


def test_rooted_isomorphism_is_arc_preserving():
    g1 = OrientedGraph(4, frozenset({(0, 1), (0, 2), (2, 3)}))
    g2 = OrientedGraph(4, frozenset({(3, 2), (3, 0), (0, 1)}))
    iso = rooted_isomorphism(g1, 0, g2, 3)
    assert iso is not None and iso[0] == 3
    assert {(iso[a], iso[b]) for a, b in g1.arcs} == set(g2.arcs)
    assert rooted_isomorphism(g1, 1, g2, 3) is None
