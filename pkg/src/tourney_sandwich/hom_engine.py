"""Exact homomorphism counting into tournaments and rational matrices."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .graph_core import (
    OrientedGraph,
    Tournament,
    build_path,
    components,
    is_forest,
)

BRUTE_FORCE_GUARD = 10**8
ENUMERATION_GUARD = 7


class SizeGuardExceeded(RuntimeError):
    pass


class VerticesAdjacent(ValueError):
    pass


class NoHomomorphism(ValueError):
    pass


# ---------------------------------------------------------------- matrices

class DenseMatrix:
    """Square matrix of Fractions."""

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        self.size = len(self.rows)
        if any(len(r) != self.size for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def ones(cls, n: int) -> "DenseMatrix":
        return cls([[1] * n for _ in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        return DenseMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "DenseMatrix") -> "DenseMatrix":
        return DenseMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> "DenseMatrix":
        c = Fraction(c)
        return DenseMatrix([[c * a for a in r] for r in self.rows])

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(list(zip(*self.rows)))

    def is_skew_symmetric(self) -> bool:
        n = self.size
        return all(self.rows[i][j] == -self.rows[j][i] for i in range(n) for j in range(n))

    def __eq__(self, other):
        return isinstance(other, DenseMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"DenseMatrix({[[str(x) for x in r] for r in self.rows]})"


def adjacency_matrix(g: OrientedGraph) -> DenseMatrix:
    n = g.vertex_count
    return DenseMatrix([[1 if (i, j) in g.arcs else 0 for j in range(n)] for i in range(n)])


def augmented_adjacency(t: Tournament) -> DenseMatrix:
    """Adjacency matrix plus one half times the identity."""
    return adjacency_matrix(t) + DenseMatrix.identity(t.vertex_count).scale(Fraction(1, 2))


def skew_part(t: Tournament) -> DenseMatrix:
    """Augmented adjacency minus one half times the all-ones matrix."""
    n = t.vertex_count
    return augmented_adjacency(t) - DenseMatrix.ones(n).scale(Fraction(1, 2))


# ---------------------------------------------------------------- tree DP

def _tree_order(h: OrientedGraph):
    """Per component: root (lowest index) and a (vertex, parent) list in DFS preorder.

    Children are visited in increasing index order.
    """
    adj = h.neighbours()
    out = []
    for comp in components(h):
        root = comp[0]
        order = []
        stack = [(root, -1)]
        while stack:
            v, p = stack.pop()
            order.append((v, p))
            for w in reversed(adj[v]):
                if w != p:
                    stack.append((w, v))
        out.append((root, order))
    return out


def weighted_tree_sum(h: OrientedGraph, weight: Sequence[Sequence], vertex_weights: dict | None = None):
    """Sum over all maps V(H) -> [n] of prod_arcs weight[f(a)][f(b)] * prod_v vertex_weights[v][f(v)].

    H must be a forest. Entries may be ints or Fractions.
    """
    if not is_forest(h):
        raise ValueError("weighted_tree_sum needs a forest pattern")
    n = len(weight)
    vw = vertex_weights or {}
    total = 1
    for root, order in _tree_order(h):
        table: dict[int, list] = {}
        for v, p in reversed(order):
            vec = list(vw[v]) if v in vw else [1] * n
            table[v] = vec
        # combine children into parents, deepest first
        for v, p in reversed(order):
            if p < 0:
                continue
            child = table.pop(v)
            par = table[p]
            if (p, v) in h.arcs:
                msg = [sum(weight[x][y] * child[y] for y in range(n) if child[y]) for x in range(n)]
            else:
                msg = [sum(weight[y][x] * child[y] for y in range(n) if child[y]) for x in range(n)]
            for x in range(n):
                par[x] *= msg[x]
        total *= sum(table[root])
        if total == 0:
            return total
    return total


def _brute_weighted(h: OrientedGraph, weight, n: int, guard: int):
    k = h.vertex_count
    if n ** k > guard:
        raise SizeGuardExceeded(f"{n}^{k} maps exceed guard {guard}")
    # assign vertices in a fixed order; check arcs once both ends are placed
    arcs_at = [[] for _ in range(k)]
    for a, b in h.arcs:
        arcs_at[max(a, b)].append((a, b))
    image = [0] * k

    def rec(i, acc):
        if i == k:
            return acc
        s = 0
        for x in range(n):
            image[i] = x
            w = acc
            for a, b in arcs_at[i]:
                w = w * weight[image[a]][image[b]]
                if not w:
                    break
            if w:
                s += rec(i + 1, w)
        return s

    return rec(0, 1)


def _int_adjacency(g: OrientedGraph) -> list[list[int]]:
    n = g.vertex_count
    m = [[0] * n for _ in range(n)]
    for a, b in g.arcs:
        m[a][b] = 1
    return m


def hom_count_brute(h: OrientedGraph, g: OrientedGraph, guard: int = BRUTE_FORCE_GUARD) -> int:
    return _brute_weighted(h, _int_adjacency(g), g.vertex_count, guard)


def hom_count(h: OrientedGraph, g: OrientedGraph, guard: int = BRUTE_FORCE_GUARD) -> int:
    """Number of arc-preserving maps V(H) -> V(G)."""
    if is_forest(h):
        return weighted_tree_sum(h, _int_adjacency(g))
    return hom_count_brute(h, g, guard)


def hom_density(h: OrientedGraph, g: OrientedGraph, guard: int = BRUTE_FORCE_GUARD) -> Fraction:
    if g.vertex_count < 1:
        raise ValueError("host must have at least one vertex")
    return Fraction(hom_count(h, g, guard), g.vertex_count ** h.vertex_count)


def _indicator(n: int, u: int) -> list[int]:
    return [1 if x == u else 0 for x in range(n)]


def hom_count_pinned(h: OrientedGraph, v: int, g: OrientedGraph, u: int, guard: int = BRUTE_FORCE_GUARD) -> int:
    """Homomorphisms sending v to u."""
    return hom_count_multi_pinned(h, {v: u}, g, guard)


def hom_count_multi_pinned(h: OrientedGraph, pins: dict, g: OrientedGraph, guard: int = BRUTE_FORCE_GUARD) -> int:
    n = g.vertex_count
    adj = _int_adjacency(g)
    if is_forest(h):
        return weighted_tree_sum(h, adj, {v: _indicator(n, u) for v, u in pins.items()})
    # general pattern: brute force with pinned vertices forced
    count = 0
    k = h.vertex_count
    if n ** (k - len(pins)) > guard:
        raise SizeGuardExceeded("pinned brute force exceeds guard")
    free = [x for x in range(k) if x not in pins]
    from itertools import product

    for img in product(range(n), repeat=len(free)):
        f = dict(pins)
        f.update(zip(free, img))
        if all(adj[f[a]][f[b]] for a, b in h.arcs):
            count += 1
    return count


def hom_matrix(h: OrientedGraph, a: DenseMatrix, guard: int = BRUTE_FORCE_GUARD) -> Fraction:
    """Weighted homomorphism sum of H into the matrix A."""
    weight = a.rows
    if is_forest(h):
        return Fraction(weighted_tree_sum(h, weight))
    return Fraction(_brute_weighted(h, weight, a.size, guard))


# ---------------------------------------------------------------- identities

@dataclass(frozen=True)
class EdgeFlipResult:
    lhs: int
    rhs_uv: int
    rhs_vu: int
    collisions: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs_uv + self.rhs_vu + self.collisions


def identify_vertices(f: OrientedGraph, u: int, v: int) -> OrientedGraph | None:
    """Quotient merging v into u. None if the merge creates an antiparallel pair."""
    keep = [x for x in range(f.vertex_count) if x != v]
    index = {x: i for i, x in enumerate(keep)}
    index[v] = index[u]
    arcs = set()
    for a, b in f.arcs:
        arcs.add((index[a], index[b]))
    if any((b, a) in arcs for a, b in arcs):
        return None
    return OrientedGraph(len(keep), frozenset(arcs))


def edge_flip_identity(f: OrientedGraph, u: int, v: int, t: Tournament, guard: int = BRUTE_FORCE_GUARD) -> EdgeFlipResult:
    """hom(F) split by the orientation between the images of u and v, plus the collisions."""
    if u == v or (u, v) in f.arcs or (v, u) in f.arcs:
        raise VerticesAdjacent(f"{u} and {v} must be distinct and nonadjacent")
    f_uv = OrientedGraph(f.vertex_count, f.arcs | {(u, v)})
    f_vu = OrientedGraph(f.vertex_count, f.arcs | {(v, u)})
    quotient = identify_vertices(f, u, v)
    collisions = 0 if quotient is None else hom_count(quotient, t, guard)
    res = EdgeFlipResult(hom_count(f, t, guard), hom_count(f_uv, t, guard), hom_count(f_vu, t, guard), collisions)
    assert res.holds, res
    return res


def cs_reduction_sides(k: int, t: Tournament) -> tuple[Fraction, Fraction]:
    """(t(P_{1,k})^2, t(P_{1,3,3,1}) * t(P_{k-3,k-3}))."""
    if k < 3:
        raise ValueError("k must be at least 3")
    lhs = hom_density(build_path((1, k)), t) ** 2
    rhs = hom_density(build_path((1, 3, 3, 1)), t) * hom_density(build_path((k - 3, k - 3)), t)
    return lhs, rhs


def cs_reduction_check(k: int, t: Tournament) -> bool:
    lhs, rhs = cs_reduction_sides(k, t)
    return lhs <= rhs


# ---------------------------------------------------------------- tournaments and PRNG

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    """xorshift64* seeded through one splitmix64 step.

    state ^= state >> 12; state ^= state << 25; state ^= state >> 27;
    output = state * 0x2545F4914F6CDD1D mod 2^64.
    """

    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK64) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        s = self.state
        s ^= s >> 12
        s ^= (s << 25) & MASK64
        s ^= s >> 27
        self.state = s
        return (s * 0x2545F4914F6CDD1D) & MASK64

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound


def random_tournament(n: int, seed: int) -> Tournament:
    """Pair k (canonical order) gets arc i -> j iff the top bit of the k-th output is 1."""
    rng = XorShift64Star(seed)
    bits = 0
    for k in range(n * (n - 1) // 2):
        if rng.next_u64() >> 63:
            bits |= 1 << k
    return Tournament.from_bits(n, bits)


def enumerate_tournaments(n: int, max_n: int = ENUMERATION_GUARD):
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise SizeGuardExceeded(f"enumeration of n={n} exceeds guard {max_n}")
    for bits in range(1 << (n * (n - 1) // 2)):
        yield Tournament.from_bits(n, bits)


# ---------------------------------------------------------------- batch counting

def adjacency_stack(n: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Adjacency matrices for encodings start..stop-1, shape (count, n, n)."""
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    if stop is None:
        stop = 1 << m
    codes = np.arange(start, stop, dtype=np.int64)
    bits = (codes[:, None] >> np.arange(m, dtype=np.int64)) & 1
    out = np.zeros((len(codes), n, n), dtype=np.int64)
    for k, (i, j) in enumerate(pairs):
        out[:, i, j] = bits[:, k]
        out[:, j, i] = 1 - bits[:, k]
    return out


def batch_hom_counts(h: OrientedGraph, adj: np.ndarray) -> np.ndarray:
    """hom(H, T) for every host in a (count, n, n) adjacency stack. H must be a forest."""
    if not is_forest(h):
        raise ValueError("batch counting needs a forest pattern")
    count, n, _ = adj.shape
    exact = n ** max(h.vertex_count, 1) >= 2**63
    a = adj.astype(object) if exact else adj
    at = np.transpose(a, (0, 2, 1))
    total = np.ones(count, dtype=object if exact else np.int64)
    for root, order in _tree_order(h):
        table = {v: np.ones((count, n), dtype=a.dtype) for v, _ in order}
        for v, p in reversed(order):
            if p < 0:
                continue
            child = table.pop(v)
            mat = a if (p, v) in h.arcs else at
            msg = np.matmul(mat, child[:, :, None])[:, :, 0]
            table[p] = table[p] * msg
        total = total * table[root].sum(axis=1)
    return total


@dataclass(frozen=True)
class ScanReport:
    max_density: Fraction
    argmax_n: int
    argmax_bits: int
    bound: Fraction
    verdict: bool
    hosts_scanned: int

    def summary(self) -> str:
        status = "anti-Sidorenko on scanned hosts" if self.verdict else "violated"
        return (
            f"max t = {self.max_density} at n={self.argmax_n} bits={self.argmax_bits}; "
            f"bound {self.bound}; {status} ({self.hosts_scanned} hosts)"
        )


def _better(cand, best):
    """Larger density wins; ties go to the smaller (n, bits)."""
    if best is None:
        return True
    if cand[0] != best[0]:
        return cand[0] > best[0]
    return (cand[1], cand[2]) < (best[1], best[2])


def _scan_block(h: OrientedGraph, n: int, start: int, stop: int):
    if is_forest(h):
        counts = batch_hom_counts(h, adjacency_stack(n, start, stop))
        idx = int(np.argmax(counts))
        return Fraction(int(counts[idx]), n ** h.vertex_count), n, start + idx
    best = None
    for bits in range(start, stop):
        d = hom_density(h, Tournament.from_bits(n, bits))
        cand = (d, n, bits)
        if _better(cand, best):
            best = cand
    return best


def anti_sidorenko_scan(
    h: OrientedGraph,
    n_max: int,
    mode: str = "exhaustive",
    count: int = 100,
    seed: int = 0,
    n_min: int = 1,
    workers: int = 1,
    chunk: int = 1 << 13,
) -> ScanReport:
    """Maximum of t(H, T) over tournaments, compared against 2^-a(H).

    exhaustive: every tournament on n_min..n_max vertices.
    random: ``count`` seeded samples on n_max vertices (seeds seed, seed+1, ...).
    """
    bound = Fraction(1, 2 ** h.arc_count)
    best = None
    scanned = 0
    if mode == "exhaustive":
        if n_max > ENUMERATION_GUARD:
            raise SizeGuardExceeded(f"exhaustive scan beyond n={ENUMERATION_GUARD}")
        jobs = []
        for n in range(n_min, n_max + 1):
            total = 1 << (n * (n - 1) // 2)
            scanned += total
            for s in range(0, total, chunk):
                jobs.append((n, s, min(total, s + chunk)))
        if workers > 1:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(workers) as pool:
                results = list(pool.map(_scan_block, [h] * len(jobs), *zip(*jobs)))
        else:
            results = [_scan_block(h, n, s, e) for n, s, e in jobs]
        for cand in results:
            if _better(cand, best):
                best = cand
    elif mode == "random":
        for i in range(count):
            t = random_tournament(n_max, seed + i)
            cand = (hom_density(h, t), n_max, t.bits)
            scanned += 1
            if _better(cand, best):
                best = cand
    else:
        raise ValueError(f"unknown scan mode {mode!r}")
    d, n, bits = best
    return ScanReport(d, n, bits, bound, d <= bound, scanned)


# ---------------------------------------------------------------- entropy

def _entropy_bits(counts: Sequence[int], total: int) -> Decimal:
    s = Decimal(0)
    tot = Decimal(total)
    for c in counts:
        if c:
            p = Decimal(c) / tot
            s -= p * p.ln()
    return s / Decimal(2).ln()


def forest_hom_entropy(h: OrientedGraph, g: OrientedGraph, digits: int = 40) -> tuple[Decimal, Decimal]:
    """Entropy in bits of a uniform homomorphism H -> G, directly and via the forest formula."""
    if not is_forest(h):
        raise ValueError("entropy formula needs a forest pattern")
    total = hom_count(h, g)
    if total == 0:
        raise NoHomomorphism("no homomorphism from H to G")
    n = g.vertex_count
    with localcontext() as ctx:
        ctx.prec = digits
        direct = Decimal(total).ln() / Decimal(2).ln()
        formula = Decimal(0)
        for a, b in h.sorted_arcs():
            pair_counts = [
                hom_count_multi_pinned(h, {a: x, b: y}, g) for x, y in g.sorted_arcs()
            ]
            formula += _entropy_bits(pair_counts, total)
        adj = h.neighbours()
        for v in range(h.vertex_count):
            deg = len(adj[v])
            if deg == 1:
                continue
            marg = [hom_count_pinned(h, v, g, x) for x in range(n)]
            formula -= (deg - 1) * _entropy_bits(marg, total)
        return +direct, +formula
