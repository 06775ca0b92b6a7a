"""Named sandwich constructions and the composers built from them."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import atlas_data
from .graph_core import OrientedGraph
from .sandwich_core import (
    EvidenceRegistry,
    External,
    NamedProposition,
    SandwichCertificate,
    TheoremFamily,
    TwoBlocks,
    ZeroMod4,
    add_components,
    glue,
    make_certificate,
    reverse_certificate,
    reverse_labels,
    verify,
)


class InvalidParameter(ValueError):
    pass


class InvalidBlockSpec(InvalidParameter):
    pass


class PreconditionCovMismatch(ValueError):
    pass


class UnsupportedResiduePair(InvalidParameter):
    pass


class LegLengthOne(InvalidParameter):
    pass


# ---------------------------------------------------------------- table format

_ARC = re.compile(r"^(\S+?)>(\S+)$")


@dataclass
class Table:
    """Parsed construction table: pattern arcs on 0..k and weighted components."""

    size: int
    pattern_arcs: list
    components: list = field(default_factory=list)  # (weight, [(name, col)], [(a, b)])


def parse_table(text: str) -> Table:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].split()
    if head[0] != "path":
        raise ValueError("table must start with a path line")
    parc = []
    for tok in head[1:]:
        a, b = tok.split(">")
        parc.append((int(a), int(b)))
    size = max(max(a, b) for a, b in parc) + 1
    table = Table(size, parc)
    for ln in lines[1:]:
        w, verts, arcs = (p.strip() for p in ln.split("|"))
        vs = []
        for tok in verts.split():
            name, col = tok.split(":")
            vs.append((name, int(col)))
        es = []
        for tok in arcs.split():
            m = _ARC.match(tok)
            if not m:
                raise ValueError(f"bad arc {tok!r}")
            es.append((m.group(1), m.group(2)))
        table.components.append((Fraction(w), vs, es))
    return table


def table_components(table: Table, shift: int = 0, tag: str = "") -> list:
    """Components with columns shifted and names tagged, ready for assemble()."""
    out = []
    for w, vs, es in table.components:
        names = {n for n, _ in vs}

        def rn(x):
            if x in names:
                return x + tag
            if re.fullmatch(r"v\d+", x):
                return f"v{int(x[1:]) + shift}"
            raise ValueError(f"unknown vertex {x!r}")

        out.append((w, [(n + tag, c + shift) for n, c in vs], [(rn(a), rn(b)) for a, b in es]))
    return out


def assemble(
    pattern_arcs: Sequence[tuple],
    comps: Sequence[tuple],
    partial: bool = False,
    name: str = "",
    size: int | None = None,
) -> SandwichCertificate:
    """Build a certificate from pattern arcs on 0..k and named components."""
    k1 = size if size is not None else max(max(a, b) for a, b in pattern_arcs) + 1
    index = {f"v{i}": i for i in range(k1)}
    psi = list(range(k1))
    weights = {}
    for w, vs, _ in comps:
        first = len(psi)
        for n, c in vs:
            if n in index:
                raise ValueError(f"duplicate vertex name {n!r}")
            if not 0 <= c < k1:
                raise ValueError(f"column {c} out of range for {n!r}")
            index[n] = len(psi)
            psi.append(c)
        if vs:
            weights[first] = Fraction(w)
    arcs = set(pattern_arcs)
    for _, _, es in comps:
        for a, b in es:
            arcs.add((index[a], index[b]))
    host = OrientedGraph(len(psi), frozenset(arcs))
    return make_certificate(host, list(range(k1)), psi, weights, partial=partial, name=name)


def from_table(text: str, partial: bool = False, name: str = "") -> SandwichCertificate:
    t = parse_table(text)
    return assemble(t.pattern_arcs, table_components(t), partial=partial, name=name, size=t.size)


def _forward(k: int, start: int = 0) -> list:
    return [(i, i + 1) for i in range(start, start + k)]


def _backward(k: int, start: int = 0) -> list:
    return [(i + 1, i) for i in range(start, start + k)]


def _finish(s: SandwichCertificate, name: str = "", partial: bool | None = None) -> SandwichCertificate:
    """Re-derive the involution and partition; partial unless every arc is covered exactly once."""
    if partial is None:
        _, acov = s.cov_table()
        partial = any(c != 1 for c in acov.values())
    return make_certificate(
        s.host, s.pattern_vertices, s.psi, s.weights, partial=partial, name=name or s.name
    )


# ---------------------------------------------------------------- directed paths

def ssz_path(k: int) -> SandwichCertificate:
    """Sandwich for the directed path P_k: end arcs plus a pendant pair at each internal vertex."""
    if k < 2:
        raise InvalidParameter("ssz_path needs k >= 2")
    half = Fraction(1, 2)
    comps = [
        (half, [("w0", 0), ("w1", 1)], [("w0", "w1")]),
        (half, [(f"w{k - 1}e", k - 1), (f"w{k}e", k)], [(f"w{k - 1}e", f"w{k}e")]),
    ]
    for i in range(1, k):
        comps.append((half, [(f"u{i}p", i - 1)], [(f"u{i}p", f"v{i}")]))
        comps.append((half, [(f"u{i}m", i + 1)], [(f"v{i}", f"u{i}m")]))
    return assemble(_forward(k), comps, name=f"D_{k}")


def d4_star() -> SandwichCertificate:
    return from_table(atlas_data.D4_STAR, name="D4*")


def d2_star() -> SandwichCertificate:
    return from_table(atlas_data.D2_STAR, name="D2*")


def d3_star() -> SandwichCertificate:
    return from_table(atlas_data.D3_STAR, name="D3*")


def d5_star() -> SandwichCertificate:
    return from_table(atlas_data.D5_STAR, name="D5*")


def end_piece(k: int) -> SandwichCertificate:
    """D_k* for k in {2,3,4,5}: the endpoint v_0 has cov 1/2."""
    builders = {2: d2_star, 3: d3_star, 4: d4_star, 5: d5_star}
    if k not in builders:
        raise InvalidParameter(f"no end piece of length {k}")
    return builders[k]()


# ---------------------------------------------------------------- repeating gadgets

def extension_gadget() -> SandwichCertificate:
    """Partial sandwich D_4-dagger for the forward P_4."""
    return from_table(atlas_data.D4_DAGGER, partial=True, name="D4+")


def _ddagger_components(t: int, shift: int = 0, tag: str = "", weight: Fraction | None = None) -> list:
    base = parse_table(atlas_data.D4_DAGGER)
    comps = []
    for j in range(t):
        comps += table_components(base, shift + 4 * j, f"{tag}#{j}")
    for j in range(1, t):
        c = shift + 4 * j
        comps.append((Fraction(1, 4), [(f"{tag}cy{j}p", c - 1)], [(f"{tag}cy{j}p", f"v{c}")]))
        comps.append((Fraction(1, 4), [(f"{tag}cy{j}m", c + 1)], [(f"v{c}", f"{tag}cy{j}m")]))
    if weight is not None:
        comps = [(weight, vs, es) for _, vs, es in comps]
    return comps


def extended(t: int) -> SandwichCertificate:
    """Partial sandwich D_4t-double-dagger: t chained copies of D_4-dagger."""
    if t < 1:
        raise InvalidParameter("extended needs t >= 1")
    return assemble(_forward(4 * t), _ddagger_components(t), partial=True, name=f"D{4 * t}++")


def extension_gadget2() -> SandwichCertificate:
    """Partial sandwich D_4-bar for the backward P_4."""
    return from_table(atlas_data.D4_BAR, partial=True, name="D4|")


def _parallel_components(t: int, shift: int = 0, tag: str = "", weight: Fraction | None = None) -> list:
    base = parse_table(atlas_data.D4_BAR)
    w = Fraction(1, 5)
    comps = []
    for j in range(t):
        comps += table_components(base, shift + 4 * j, f"{tag}#{j}")
    for j in range(1, t):
        c = shift + 4 * j
        # y connectors at v_4j (arcs point the way the backward path allows)
        comps.append((w, [(f"{tag}cy{j}p", c - 1)], [(f"v{c}", f"{tag}cy{j}p")]))
        comps.append((w, [(f"{tag}cy{j}m", c + 1)], [(f"{tag}cy{j}m", f"v{c}")]))
        # z connectors at v_{4j-1}
        a, b = f"{tag}cz{j}p", f"{tag}cz{j}pq"
        comps.append((w, [(a, c - 2), (b, c - 1)], [(f"v{c - 1}", a), (b, a)]))
        a, b = f"{tag}cz{j}m", f"{tag}cz{j}mq"
        comps.append((w, [(a, c), (b, c + 1)], [(a, f"v{c - 1}"), (b, a)]))
    if weight is not None:
        comps = [(weight, vs, es) for _, vs, es in comps]
    return comps


def extended2(t: int) -> SandwichCertificate:
    """Partial sandwich D_4t-parallel: t chained copies of D_4-bar."""
    if t < 1:
        raise InvalidParameter("extended2 needs t >= 1")
    return assemble(_backward(4 * t), _parallel_components(t), partial=True, name=f"D{4 * t}||")


# ---------------------------------------------------------------- seeds with a half-covered vertex

def cover_d8() -> SandwichCertificate:
    return from_table(atlas_data.COVER_D8, partial=True, name="D8S")


def cover_d1_3() -> SandwichCertificate:
    return from_table(atlas_data.COVER_D1_3, name="D1,3S")


def cover_d3_5() -> SandwichCertificate:
    return from_table(atlas_data.COVER_D3_5, partial=True, name="D3,5S")


def cover_d10() -> SandwichCertificate:
    return from_table(atlas_data.COVER_D10, partial=True, name="D10S")


def cover_d2_4() -> SandwichCertificate:
    return from_table(atlas_data.COVER_D2_4, partial=True, name="D2,4S")


def cover_d4_4_6() -> SandwichCertificate:
    return from_table(atlas_data.COVER_D4_4_6, partial=True, name="D4,4,6S")


def cover_d3_4() -> SandwichCertificate:
    return from_table(atlas_data.COVER_D3_4, partial=True, name="D3,4S")


def cover_d3_8() -> SandwichCertificate:
    return from_table(atlas_data.COVER_D3_8, partial=True, name="D3,8S")


def cover_d4_3() -> SandwichCertificate:
    return from_table(atlas_data.COVER_D4_3, partial=True, name="D4,3S")


_CENTRAL = ("TM0", "U9a", "U9b", "C1", "C5", "C9", "C11", "M11", "M11x", "M11y")


def cover_general(a: int) -> SandwichCertificate:
    """Partial sandwich for P_{a-1,a+1} (a = 2 mod 4, a >= 6) with cov(v_a) = 1/2."""
    if a < 6 or a % 4 != 2:
        raise InvalidParameter("cover_general needs a >= 6 and a = 2 mod 4")
    t = (a - 2) // 4
    left_w, right_w, rail_w = Fraction(5, 54), Fraction(4, 54), Fraction(17, 54)
    ref = parse_table(atlas_data.COVER_D9_11)
    byname = {vs[0][0]: (w, vs, es) for w, vs, es in ref.components}
    comps = [
        byname["x0"],
        byname["x2"],
        byname["TL0"],
    ]
    comps += _ddagger_components(t, shift=1, tag="L", weight=left_w)
    centre = Table(ref.size, ref.pattern_arcs, [byname[n] for n in _CENTRAL])
    comps += table_components(centre, shift=a - 10, tag="")
    comps += _parallel_components(t, shift=a + 2, tag="R", weight=right_w)
    tr = Table(ref.size, ref.pattern_arcs, [byname["TR0"]])
    comps += table_components(tr, shift=2 * a - 20)
    # the two rails: copies of P_{a-1,a-1} centred in columns a-1 and a+1
    for side, centre_col, step in (("L", a - 1, 1), ("R", a + 1, -1)):
        vs, es = [], []
        start = 0 if side == "L" else 2 * a
        hub = f"{side}hub"
        for arm in "UL":
            names = [f"{side}{arm}{i}" for i in range(a - 1)]
            vs += [(nm, start + step * i) for i, nm in enumerate(names)]
            es += list(zip(names, names[1:])) + [(names[-1], hub)]
        vs.append((hub, centre_col))
        es.append((f"v{a}", hub) if side == "L" else (hub, f"v{a}"))
        comps.append((rail_w, vs, es))
    arcs = _forward(a - 1) + _backward(a + 1, a - 1)
    return assemble(arcs, comps, partial=True, name=f"D{a - 1},{a + 1}S")


# ---------------------------------------------------------------- extending path certificates

def _path_covs(s: SandwichCertificate):
    vcov, _ = s.cov_table()
    return vcov, s.path_arc_cov()


def _arc_forward(s: SandwichCertificate, i: int) -> bool:
    return (s.pattern_vertices[i], s.pattern_vertices[i + 1]) in s.host.arcs


def extend_right(s: SandwichCertificate, t: int) -> SandwichCertificate:
    """Extend the right end of a path certificate by 4t arcs continuing the last block."""
    if t < 0:
        raise InvalidParameter("t must be >= 0")
    k = len(s.pattern_vertices) - 1
    vcov, ecov = _path_covs(s)
    three = Fraction(3, 4)
    if not (vcov[k - 1] <= three and vcov[k] <= three and ecov[k - 1] == three):
        raise PreconditionCovMismatch(
            f"right end covs are v{k - 1}={vcov[k - 1]}, v{k}={vcov[k]}, e{k - 1}={ecov[k - 1]}"
        )
    if not _arc_forward(s, k - 1):
        return reverse_certificate(extend_right(reverse_certificate(s), t))
    q = Fraction(1, 4)
    arc = OrientedGraph(2, frozenset({(0, 1)}))
    point = OrientedGraph(1, frozenset())
    if t == 0:
        out = add_components(s, [(arc, [k - 1, k], [], q)])
    else:
        out = glue(s, k, extended(t), 0, partial=True)
        end = k + 4 * t
        out = add_components(
            out,
            [
                (point, [k - 1], [("in", 0, k)], q),
                (point, [k + 1], [("out", k, 0)], q),
                (arc, [end - 1, end], [], q),
            ],
            pairs=[(0, 1)],
        )
    return _finish(out, name=s.name)


def extend_left(s: SandwichCertificate, t: int) -> SandwichCertificate:
    return reverse_labels(extend_right(reverse_labels(s), t))


def extend_both(s: SandwichCertificate, left: int, right: int) -> SandwichCertificate:
    """Left by 4*left arcs and right by 4*right arcs."""
    return extend_left(extend_right(s, right), left)


def _quarter(n: int, what: str) -> int:
    if n < 0 or n % 4:
        raise InvalidParameter(f"{what} = {n} is not a nonnegative multiple of 4")
    return n // 4


# ---------------------------------------------------------------- paths with tame internal blocks

def _oriented(piece: SandwichCertificate, direction: int) -> SandwichCertificate:
    return piece if direction > 0 else reverse_certificate(piece)


def _chain(pieces: Sequence[SandwichCertificate], name: str) -> SandwichCertificate:
    acc = pieces[0]
    for p in pieces[1:]:
        acc = glue(acc, len(acc.pattern_vertices) - 1, p, 0)
    return _finish(acc, name=name)


_END_RESIDUE = {0: 4, 1: 5, 2: 2, 3: 3}


def split_block(length: int) -> tuple[int, int]:
    """(end piece length, number of D_4* chunks) for an end block."""
    r = _END_RESIDUE[length % 4]
    return r, (length - r) // 4


def theorem_0mod4(blocks: Sequence[int]) -> SandwichCertificate:
    """Sandwich for the path with the given blocks (first block forward).

    Every block needs length >= 2 and internal blocks length divisible by 4.
    """
    blocks = tuple(int(b) for b in blocks)
    if not blocks or any(b < 2 for b in blocks) or any(b % 4 for b in blocks[1:-1]):
        raise InvalidBlockSpec(f"blocks {blocks} need length >= 2 and internal lengths 0 mod 4")
    name = "Z" + ",".join(map(str, blocks))
    if len(blocks) == 1:
        return ssz_path(blocks[0])
    pieces = []
    last = len(blocks) - 1
    for j, length in enumerate(blocks):
        d = 1 if j % 2 == 0 else -1
        if j == 0:
            r, m = split_block(length)
            # low-cov end of the first piece must face the rest of the path
            first = reverse_certificate(reverse_labels(end_piece(r)))
            seq = [first] + [d4_star() for _ in range(m)]
        elif j == last:
            r, m = split_block(length)
            seq = [d4_star() for _ in range(m)] + [end_piece(r)]
        else:
            seq = [d4_star() for _ in range(length // 4)]
        pieces += [_oriented(p, d) for p in seq]
    return _chain(pieces, name)


def leg_certificate(c: int) -> SandwichCertificate:
    """Sandwich for the forward P_c with cov(v_0) <= 1/2."""
    if c < 2:
        raise InvalidParameter("leg length must be >= 2")
    r, m = split_block(c)
    pieces = [d4_star() for _ in range(m)] + [end_piece(r)]
    return _chain(pieces, f"leg{c}")


# ---------------------------------------------------------------- a half-covered vertex

@dataclass
class CoverHalfResult:
    """Certificate for a path on v_0..v_k with cov(v_a) <= 1/2."""

    k: int
    a: int
    blocks: tuple
    ell: int | None
    certificate: SandwichCertificate
    steps: tuple = ()

    @property
    def distinguished_cov(self) -> Fraction:
        return self.certificate.cov_table()[0][self.a]


VALID_RESIDUES = ((0, 0), (0, 2), (2, 1), (2, 3), (3, 0), (3, 1))


def _path_blocks(s: SandwichCertificate) -> tuple:
    runs = []
    for i in range(len(s.pattern_vertices) - 1):
        d = 1 if _arc_forward(s, i) else -1
        if runs and runs[-1][1] == d:
            runs[-1][0] += 1
        else:
            runs.append([1, d])
    return tuple((n, d) for n, d in runs)


def _cover_half(k: int, a: int, steps: list) -> SandwichCertificate:
    key = (k % 4, a % 4)
    if key == (0, 0):
        steps.append(f"D8S extended ({a - 4}, {k - a - 4})")
        return extend_both(cover_d8(), _quarter(a - 4, "a-4"), _quarter(k - a - 4, "k-a-4"))
    if key == (0, 2):
        if (k, a) == (4, 2):
            steps.append("D1,3S")
            return cover_d1_3()
        if a == k - 2:
            steps.append("label reversal")
            return reverse_labels(_cover_half(k, 2, steps))
        if a == 2:
            steps.append(f"D3,5S extended right {k - 8}")
            return extend_right(cover_d3_5(), _quarter(k - 8, "k-8"))
        if a < k - a:
            steps.append("label reversal")
            return reverse_labels(_cover_half(k, k - a, steps))
        b = k - a
        steps.append(f"D{b - 1},{b + 1}S extended left {a - b}")
        return extend_left(cover_general(b), _quarter(a - b, "a-b"))
    if key == (2, 1):
        steps.append(f"D10S extended ({a - 5}, {k - a - 5})")
        return extend_both(cover_d10(), _quarter(a - 5, "a-5"), _quarter(k - a - 5, "k-a-5"))
    if key == (2, 3):
        if a == 3 and k - a != 3:
            steps.append("label reversal")
            return reverse_labels(_cover_half(k, k - a, steps))
        if k - a == 3:
            steps.append(f"D2,4S extended left {a - 3}")
            return extend_left(cover_d2_4(), _quarter(a - 3, "a-3"))
        steps.append(f"D4,4,6S extended ({a - 7}, {k - a - 7})")
        return extend_both(cover_d4_4_6(), _quarter(a - 7, "a-7"), _quarter(k - a - 7, "k-a-7"))
    if key == (3, 0):
        if a == k - 3:
            steps.append(f"D3,4S extended left {a - 4}")
            return extend_left(cover_d3_4(), _quarter(a - 4, "a-4"))
        steps.append(f"D3,8S extended ({a - 4}, {k - a - 7})")
        return extend_both(cover_d3_8(), _quarter(a - 4, "a-4"), _quarter(k - a - 7, "k-a-7"))
    if key == (3, 1):
        steps.append(f"D4,3S extended ({a - 5}, {k - a - 2})")
        return extend_both(cover_d4_3(), _quarter(a - 5, "a-5"), _quarter(k - a - 2, "k-a-2"))
    raise UnsupportedResiduePair(f"(k mod 4, a mod 4) = {key} is not covered")


def cover_half(k: int, a: int) -> CoverHalfResult:
    """A sandwich for a two- (or three-) block path of length k with cov(v_a) <= 1/2."""
    if k < 4 or not 2 <= a <= k - 2:
        raise InvalidParameter(f"need k >= 4 and 2 <= a <= k-2, got k={k}, a={a}")
    if (k % 4, a % 4) not in VALID_RESIDUES:
        raise UnsupportedResiduePair(f"(k mod 4, a mod 4) = {(k % 4, a % 4)} is not covered")
    steps: list = []
    cert = _cover_half(k, a, steps)
    cert.name = f"cover_half({k},{a})"
    blocks = _path_blocks(cert)
    lengths = tuple(n for n, _ in blocks)
    ell = 0 if len(lengths) == 1 else (lengths[1] if len(lengths) == 2 else None)
    return CoverHalfResult(k, a, blocks, ell, cert, tuple(steps))


# ---------------------------------------------------------------- 3-spiders

# residues of the two legs forming the path -> which of them is v_0..v_a
_SPIDER_PAIRS = {
    (0, 0): 0,
    (0, 3): 0,
    (3, 0): 1,
    (3, 3): 0,
    (1, 1): 0,
    (1, 2): 0,
    (2, 1): 1,
    (2, 2): 0,
}


@dataclass
class SpiderResult:
    legs: tuple
    spider: OrientedGraph
    hub: int | None
    certificate: SandwichCertificate | None
    evidence: object = None
    trace: tuple = ()


def spider_certificate(a: int, b: int, c: int) -> SpiderResult:
    """Sandwich for an orientation of the (a,b,c)-spider, or External evidence if a leg has length 1."""
    legs = (a, b, c)
    if min(legs) < 1:
        raise InvalidParameter("leg lengths must be >= 1")
    if min(legs) == 1:
        from .graph_core import SpiderSpec

        g = SpiderSpec(legs).build()
        return SpiderResult(legs, g, 0, None, External("caterpillar theorem"), ("caterpillar",))
    order = None
    for i, j in ((0, 1), (0, 2), (1, 2)):
        key = (legs[i] % 4, legs[j] % 4)
        if key in _SPIDER_PAIRS:
            first = (i, j)[_SPIDER_PAIRS[key]]
            second = j if first == i else i
            order = (first, second, 3 - i - j)
            break
    assert order is not None, "pigeonhole guarantees a pair"
    la, lb, lc = (legs[x] for x in order)
    half = cover_half(la + lb, la)
    leg = leg_certificate(lc)
    fused = _finish(glue(half.certificate, la, leg, 0), name=f"spider({a},{b},{c})")
    trace = half.steps + (f"path legs {la},{lb} with hub v{la}; third leg {lc}",)
    return SpiderResult(legs, fused.pattern, la, fused, None, trace)


# ---------------------------------------------------------------- two-block paths

@dataclass
class TwoBlockStatus:
    a: int
    b: int
    kind: str
    evidence: object
    certificate: SandwichCertificate | None = None
    needs: tuple = ()
    valid: bool = False


def two_blocks_status(a: int, b: int, registry: EvidenceRegistry | None = None) -> TwoBlockStatus:
    """How the path with blocks (a, b) is known to be anti-Sidorenko."""
    if a < 1 or b < 1 or a + b < 3:
        raise InvalidParameter("need a, b >= 1 and a + b >= 3")
    if a >= 2 and b >= 2:
        cert = theorem_0mod4((a, b))
        ev = TheoremFamily(ZeroMod4((a, b)))
        return TwoBlockStatus(a, b, "sandwich", ev, cert, (), verify(cert, registry).passed)
    k = max(a, b)
    # P_{k,1} is P_{1,k} read from the other end
    if k <= 4:
        ev = NamedProposition(f"P1{k}")
        return TwoBlockStatus(a, b, "proposition", ev, None, (), True)
    inner = theorem_0mod4((k - 3, k - 3))
    from .skew_algebra import certified_bound_p1331

    ok = verify(inner, registry).passed and certified_bound_p1331().check()
    ev = TheoremFamily(TwoBlocks(1, k))
    needs = (f"sandwich for P_{{{k - 3},{k - 3}}}", "P_{1,3,3,1} bound", "Cauchy-Schwarz reduction")
    return TwoBlockStatus(a, b, "reduction", ev, inner, needs, ok)


# ---------------------------------------------------------------- named constructions

def _table(n: int, default, special: dict) -> dict:
    out = {i: Fraction(default) for i in range(n)} if default is not None else {}
    for keys, val in special.items():
        for i in (keys if isinstance(keys, tuple) else (keys,)):
            out[i] = Fraction(val)
    return out


@dataclass
class NamedConstruction:
    """A construction with its expected cov values (vertex i / path arc e_i)."""

    id: str
    params: dict
    builder: Callable[[], SandwichCertificate]
    vertex_cov: dict
    arc_cov: dict
    partial: bool

    def build(self) -> SandwichCertificate:
        return self.builder()

    def audit(self, cert: SandwichCertificate | None = None) -> list:
        """Mismatches between the computed and the expected cov values (empty when they agree)."""
        s = cert if cert is not None else self.build()
        vcov, _ = s.cov_table()
        ecov = s.path_arc_cov()
        bad = []
        for i, want in sorted(self.vertex_cov.items()):
            if vcov[i] != want:
                bad.append((f"v{i}", want, vcov[i]))
        for i, want in sorted(self.arc_cov.items()):
            if ecov[i] != want:
                bad.append((f"e{i}", want, ecov[i]))
        if s.partial != self.partial:
            bad.append(("partial", self.partial, s.partial))
        return bad


def _entry(id_, params, builder, k, partial, v_default, v_special, e_default, e_special):
    return NamedConstruction(
        id_,
        params,
        builder,
        _table(k + 1, v_default, v_special),
        _table(k, e_default, e_special),
        partial,
    )


def named_constructions(k_max: int = 10, t_max: int = 4, a_values: Sequence[int] = (6, 10, 14)) -> list:
    """The atlas: every named construction over the given parameter ranges."""
    q, h, tq = Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)
    out = []
    for k in range(2, k_max + 1):
        out.append(_entry(f"D_{k}", {"k": k}, lambda k=k: ssz_path(k), k, False, 1, {}, 1, {}))
    out.append(_entry("D4*", {}, d4_star, 4, False, None, {(0, 4): h}, 1, {}))
    for k, b in ((2, d2_star), (3, d3_star), (5, d5_star)):
        out.append(_entry(f"D{k}*", {}, b, k, False, None, {0: h}, 1, {}))
    out.append(_entry("D4+", {}, extension_gadget, 4, True, 1, {0: q, (1, 3, 4): tq}, 1, {(0, 3): tq}))
    out.append(
        _entry("D4|", {}, extension_gadget2, 4, True, Fraction(3, 5), {0: Fraction(1, 5), 2: Fraction(4, 5)},
               Fraction(3, 5), {1: 1})
    )
    for t in range(1, t_max + 1):
        n = 4 * t
        out.append(
            _entry(f"D{n}++", {"t": t}, lambda t=t: extended(t), n, True, 1,
                   {0: q, (1, n - 1, n): tq}, 1, {(0, n - 1): tq})
        )
        out.append(
            _entry(f"D{n}||", {"t": t}, lambda t=t: extended2(t), n, True, 1,
                   {0: Fraction(1, 5), (1, n - 1, n): Fraction(3, 5), n - 2: Fraction(4, 5)},
                   1, {(0, n - 2, n - 1): Fraction(3, 5)})
        )
    out.append(_entry("D8S", {}, cover_d8, 8, True, 1, {4: h, (0, 1, 7, 8): tq}, 1, {(0, 7): tq}))
    out.append(_entry("D1,3S", {}, cover_d1_3, 4, False, 1, {2: 0}, 1, {}))
    out.append(
        _entry("D3,5S", {}, cover_d3_5, 8, True, 1, {2: Fraction(3, 8), (7, 8): tq}, 1, {7: tq})
    )
    for a in a_values:
        out.append(
            _entry(f"D{a - 1},{a + 1}S", {"a": a}, lambda a=a: cover_general(a), 2 * a, True, 1,
                   {(0, 1): tq, a: h}, 1, {0: tq})
        )
    out.append(_entry("D10S", {}, cover_d10, 10, True, 1, {5: h, (0, 1, 9, 10): tq}, 1, {(0, 9): tq}))
    out.append(_entry("D2,4S", {}, cover_d2_4, 6, True, 1, {3: h, (0, 1): tq}, 1, {0: tq}))
    out.append(
        _entry("D4,4,6S", {}, cover_d4_4_6, 14, True, 1, {7: h, (0, 1, 13, 14): tq}, 1, {(0, 13): tq})
    )
    out.append(
        _entry("D3,4S", {}, cover_d3_4, 7, True, 1, {4: h, (0, 1): tq, 7: Fraction(15, 16)}, 1, {0: tq})
    )
    out.append(
        _entry("D3,8S", {}, cover_d3_8, 11, True, 1, {4: h, (0, 1, 10, 11): tq}, 1, {(0, 10): tq})
    )
    out.append(_entry("D4,3S", {}, cover_d4_3, 7, True, 1, {5: h, (0, 1, 6, 7): tq}, 1, {(0, 6): tq}))
    return out


def construction(id_: str) -> NamedConstruction:
    for c in named_constructions(k_max=30, t_max=8, a_values=(6, 10, 14, 18, 22)):
        if c.id == id_:
            return c
    raise KeyError(f"unknown construction {id_!r}")
