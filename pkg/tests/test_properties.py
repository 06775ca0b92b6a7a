from fractions import Fraction

from hypothesis import HealthCheck, given, settings, strategies as st

from tourney_sandwich.atlas import named_constructions, theorem_0mod4
from tourney_sandwich.graph_core import (
    OrientedGraph,
    Tournament,
    build_path,
    disjoint_union,
    is_isomorphic,
    reverse_all_arcs,
)
from tourney_sandwich.hom_engine import (
    augmented_adjacency,
    edge_flip_identity,
    hom_count,
    hom_count_brute,
    hom_matrix,
    skew_part,
)
from tourney_sandwich.lp_search import LinearSystem, solve_feasible
from tourney_sandwich.sandwich_core import dumps, loads, reverse_certificate, reverse_labels, verify
from tourney_sandwich.skew_algebra import SignViolated, certify_sign, expand_pattern, poly_eval

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def tournaments(draw, n_min=1, n_max=5):
    n = draw(st.integers(n_min, n_max))
    bits = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return Tournament.from_bits(n, bits)


@st.composite
def forests(draw, n_max=6):
    n = draw(st.integers(1, n_max))
    arcs = set()
    for v in range(1, n):
        if draw(st.booleans()) or draw(st.booleans()):
            p = draw(st.integers(0, v - 1))
            arcs.add((p, v) if draw(st.booleans()) else (v, p))
    return OrientedGraph(n, frozenset(arcs))


@st.composite
def oriented_graphs(draw, n_max=5):
    n = draw(st.integers(2, n_max))
    arcs = set()
    for i in range(n):
        for j in range(i + 1, n):
            c = draw(st.integers(0, 2))
            if c == 1:
                arcs.add((i, j))
            elif c == 2:
                arcs.add((j, i))
    return OrientedGraph(n, frozenset(arcs))


path_blocks = st.lists(st.integers(1, 3), min_size=1, max_size=3)


@SETTINGS
@given(tournaments(n_max=8))
def test_bits_roundtrip(t):
    assert Tournament.from_bits(t.vertex_count, t.bits) == t


@SETTINGS
@given(forests(), tournaments(n_max=4))
def test_tree_dp_matches_brute_force(h, t):
    assert hom_count(h, t) == hom_count_brute(h, t)


@SETTINGS
@given(forests(), tournaments(n_max=4))
def test_reversal_symmetry(h, t):
    rev_t = Tournament(t.vertex_count, reverse_all_arcs(t).arcs)
    assert hom_count(reverse_all_arcs(h), t) == hom_count(h, rev_t)


@SETTINGS
@given(st.integers(1, 4), st.integers(1, 4), tournaments(n_max=5))
def test_two_block_path_read_backwards(a, b, t):
    assert is_isomorphic(build_path((a, b)), build_path((b, a)))
    assert hom_count(build_path((a, b)), t) == hom_count(build_path((b, a)), t)


@SETTINGS
@given(oriented_graphs(), tournaments(n_max=4), st.data())
def test_edge_flip_identity(f, t, data):
    free = [
        (i, j)
        for i in range(f.vertex_count)
        for j in range(i + 1, f.vertex_count)
        if (i, j) not in f.arcs and (j, i) not in f.arcs
    ]
    if not free:
        return
    u, v = data.draw(st.sampled_from(free))
    assert edge_flip_identity(f, u, v, t).holds


@SETTINGS
@given(path_blocks, path_blocks, tournaments(n_max=4))
def test_expansion_evaluates_to_augmented_density(b1, b2, t):
    h = disjoint_union(build_path(tuple(b1)), build_path(tuple(b2)))
    n = t.vertex_count
    lhs = expand_pattern(h).evaluate_at(skew_part(t))
    assert lhs == hom_matrix(h, augmented_adjacency(t)) / Fraction(n) ** h.vertex_count


@SETTINGS
@given(
    st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=8), min_size=1, max_size=5),
    st.fractions(min_value=-2, max_value=2, max_denominator=16),
    st.fractions(min_value=Fraction(1, 16), max_value=2, max_denominator=16),
    st.sampled_from([">=0", "<=0"]),
    st.lists(st.fractions(min_value=0, max_value=1, max_denominator=64), min_size=1, max_size=8),
)
def test_sign_certificates_are_sound(p, lo, width, sign, probes):
    hi = lo + width
    try:
        cert = certify_sign(p, lo, hi, sign)
    except SignViolated as exc:
        assert lo <= exc.witness <= hi
        v = poly_eval(p, exc.witness)
        assert v < 0 if sign == ">=0" else v > 0
        return
    assert cert.validate()
    for s in probes:
        v = poly_eval(p, lo + s * width)
        assert v >= 0 if sign == ">=0" else v <= 0


@SETTINGS
@given(
    st.integers(1, 4),
    st.lists(st.tuples(st.lists(st.integers(-2, 3), min_size=4, max_size=4), st.integers(-3, 3)), max_size=3),
    st.lists(st.tuples(st.lists(st.integers(-2, 3), min_size=4, max_size=4), st.integers(0, 3)), max_size=3),
)
def test_simplex_feasible_points_satisfy_constraints(n, eqs, ineqs):
    def rows(spec):
        return [({i: Fraction(c) for i, c in enumerate(r[:n]) if c}, Fraction(b)) for r, b in spec]

    sys = LinearSystem(n, rows(eqs), rows(ineqs))
    res = solve_feasible(sys)
    if not res.feasible:
        return
    x = res.assignment
    assert len(x) == n and all(v >= 0 for v in x)
    for row, b in sys.equalities:
        assert sum(c * x[i] for i, c in row.items()) == b
    for row, b in sys.inequalities:
        assert sum(c * x[i] for i, c in row.items()) <= b


@st.composite
def block_specs(draw):
    count = draw(st.integers(1, 4))
    out = []
    for j in range(count):
        if 0 < j < count - 1:
            out.append(4 * draw(st.integers(1, 2)))
        else:
            out.append(draw(st.integers(2, 9)))
    return tuple(out)


@settings(max_examples=25, deadline=None)
@given(block_specs())
def test_theorem_0mod4_verifies(blocks):
    s = theorem_0mod4(blocks)
    assert verify(s).passed
    assert is_isomorphic(s.pattern, build_path(blocks))


ATLAS = named_constructions(k_max=6, t_max=2, a_values=(6,))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(ATLAS), st.booleans(), st.booleans())
def test_certificate_symmetries_and_serialization(entry, flip, relabel):
    s = entry.build()
    if flip:
        s = reverse_certificate(s)
    if relabel:
        s = reverse_labels(s)
    assert verify(s).passed
    assert loads(dumps(s)).cov_table() == s.cov_table()
