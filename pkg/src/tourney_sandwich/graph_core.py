"""Oriented graphs, tournaments and the standard pattern families.

Vertices are always ``0..n-1``. Arcs are ordered pairs ``(i, j)`` meaning i -> j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class InvalidGraph(ValueError):
    """Raised for loops, antiparallel arcs or out-of-range endpoints."""


class InvalidTournament(InvalidGraph):
    pass


class NotAForest(InvalidGraph):
    pass


class NotAPath(InvalidGraph):
    pass


class PatternError(ValueError):
    """Bad parameters for a pattern constructor."""


@dataclass(frozen=True)
class OrientedGraph:
    vertex_count: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidGraph("negative vertex count")
        arcs = frozenset((int(a), int(b)) for a, b in self.arcs)
        n = self.vertex_count
        for a, b in arcs:
            if a == b:
                raise InvalidGraph(f"loop at {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidGraph(f"arc {(a, b)} out of range for {n} vertices")
            if (b, a) in arcs:
                raise InvalidGraph(f"antiparallel pair {(a, b)}")
        object.__setattr__(self, "arcs", arcs)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def has_arc(self, a: int, b: int) -> bool:
        return (a, b) in self.arcs

    def neighbours(self) -> list[list[int]]:
        """Undirected adjacency lists, sorted."""
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b in self.arcs:
            adj[a].append(b)
            adj[b].append(a)
        for row in adj:
            row.sort()
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for a, b in self.arcs if a == v or b == v)

    def __repr__(self):
        return f"OrientedGraph({self.vertex_count}, {self.sorted_arcs()})"


class Tournament(OrientedGraph):
    """An oriented graph with exactly one arc between every pair of vertices."""

    def __post_init__(self):
        super().__post_init__()
        n = self.vertex_count
        if len(self.arcs) != n * (n - 1) // 2:
            raise InvalidTournament("a tournament needs one arc per pair")

    @staticmethod
    def pair_order(n: int) -> list[tuple[int, int]]:
        """Pairs (i, j), i < j, in row-major order. Pair k is bit k of the encoding."""
        return list(combinations(range(n), 2))

    @classmethod
    def from_bits(cls, n: int, bits: int) -> "Tournament":
        pairs = cls.pair_order(n)
        if bits < 0 or bits >> len(pairs):
            raise InvalidTournament(f"encoding {bits} out of range for n={n}")
        arcs = [(i, j) if (bits >> k) & 1 else (j, i) for k, (i, j) in enumerate(pairs)]
        return cls(n, frozenset(arcs))

    @property
    def bits(self) -> int:
        out = 0
        for k, (i, j) in enumerate(self.pair_order(self.vertex_count)):
            if (i, j) in self.arcs:
                out |= 1 << k
        return out

    def adjacency(self) -> list[list[int]]:
        n = self.vertex_count
        m = [[0] * n for _ in range(n)]
        for a, b in self.arcs:
            m[a][b] = 1
        return m

    def __repr__(self):
        return f"Tournament(n={self.vertex_count}, bits={self.bits})"


def transitive_tournament(n: int) -> Tournament:
    return Tournament(n, frozenset((i, j) for i, j in combinations(range(n), 2)))


def all_tournaments(n: int):
    """Every labelled tournament on n vertices, in increasing encoding order."""
    for bits in range(1 << (n * (n - 1) // 2)):
        yield Tournament.from_bits(n, bits)


# text format: first line n, then n rows of 0/1 (row i, column j is 1 iff i -> j)

def tournament_to_text(t: Tournament) -> str:
    rows = ["".join(str(x) for x in row) for row in t.adjacency()]
    return "\n".join([str(t.vertex_count)] + rows) + "\n"


def tournament_from_text(text: str) -> Tournament:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise InvalidTournament("empty input")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise InvalidTournament(f"bad vertex count line {lines[0]!r}") from exc
    rows = lines[1:]
    if len(rows) != n:
        raise InvalidTournament(f"expected {n} rows, found {len(rows)}")
    matrix = []
    for r in rows:
        cells = r.replace(" ", "")
        if len(cells) != n or set(cells) - {"0", "1"}:
            raise InvalidTournament(f"bad row {r!r}")
        matrix.append([int(c) for c in cells])
    arcs = []
    for i in range(n):
        if matrix[i][i]:
            raise InvalidTournament(f"nonzero diagonal at {i}")
        for j in range(i + 1, n):
            if matrix[i][j] + matrix[j][i] != 1:
                raise InvalidTournament(f"pair {(i, j)} must have exactly one arc")
            arcs.append((i, j) if matrix[i][j] else (j, i))
    return Tournament(n, frozenset(arcs))


# ---------------------------------------------------------------- structure

def components(g: OrientedGraph) -> list[list[int]]:
    """Weakly connected components, each sorted, ordered by smallest vertex."""
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.arcs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in range(g.vertex_count):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


def is_forest(g: OrientedGraph) -> bool:
    return len(g.arcs) == g.vertex_count - len(components(g))


def induced(g: OrientedGraph, vertices: Sequence[int]) -> OrientedGraph:
    """Induced subgraph, relabelled so that vertices[i] becomes i."""
    index = {v: i for i, v in enumerate(vertices)}
    arcs = [(index[a], index[b]) for a, b in g.arcs if a in index and b in index]
    return OrientedGraph(len(vertices), frozenset(arcs))


def relabel(g: OrientedGraph, mapping: Sequence[int]) -> OrientedGraph:
    """Apply a permutation: vertex v becomes mapping[v]."""
    return OrientedGraph(g.vertex_count, frozenset((mapping[a], mapping[b]) for a, b in g.arcs))


def reverse_all_arcs(g: OrientedGraph) -> OrientedGraph:
    return OrientedGraph(g.vertex_count, frozenset((b, a) for a, b in g.arcs))


def disjoint_union(*graphs: OrientedGraph) -> OrientedGraph:
    arcs = []
    offset = 0
    for g in graphs:
        arcs.extend((a + offset, b + offset) for a, b in g.arcs)
        offset += g.vertex_count
    return OrientedGraph(offset, frozenset(arcs))


# ---------------------------------------------------------------- patterns

def build_path(blocks: Sequence[int]) -> OrientedGraph:
    """Path v0..vk whose maximal directed runs have the given lengths.

    The first block points left to right and directions alternate.
    Trailing zeros are ignored; ``(0,)`` is the single vertex.
    """
    blocks = list(blocks)
    if not blocks or any(b < 0 for b in blocks):
        raise PatternError(f"block lengths must be a nonempty list of nonnegative ints: {blocks}")
    while len(blocks) > 1 and blocks[-1] == 0:
        blocks.pop()
    if len(blocks) > 1 and 0 in blocks:
        raise PatternError(f"zero block inside {blocks}")
    arcs = []
    pos = 0
    for idx, length in enumerate(blocks):
        forward = idx % 2 == 0
        for _ in range(length):
            arcs.append((pos, pos + 1) if forward else (pos + 1, pos))
            pos += 1
    return OrientedGraph(pos + 1, frozenset(arcs))


def directed_path(k: int) -> OrientedGraph:
    return build_path((k,))


def path_order(g: OrientedGraph) -> list[int]:
    """Vertices of a path graph in order, starting from the smaller endpoint."""
    n = g.vertex_count
    if n == 0:
        raise NotAPath("empty graph")
    if n == 1:
        return [0]
    adj = g.neighbours()
    ends = [v for v in range(n) if len(adj[v]) == 1]
    if len(g.arcs) != n - 1 or len(ends) != 2 or any(len(a) > 2 for a in adj):
        raise NotAPath("graph is not a path")
    order = [ends[0]]
    prev = -1
    while len(order) < n:
        cur = order[-1]
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            raise NotAPath("graph is not connected")
        prev = cur
        order.append(nxt[0])
    return order


def block_decomposition(g: OrientedGraph) -> list[tuple[int, int]]:
    """Maximal runs ``(length, direction)`` along the path, direction +1 meaning left to right.

    The walk follows the vertex order of ``path_order``.
    """
    order = path_order(g)
    runs: list[tuple[int, int]] = []
    for x, y in zip(order, order[1:]):
        d = 1 if (x, y) in g.arcs else -1
        if runs and runs[-1][1] == d:
            runs[-1] = (runs[-1][0] + 1, d)
        else:
            runs.append((1, d))
    return runs


def plus_minus_attach(h: OrientedGraph, u: int, f: OrientedGraph, v: int) -> OrientedGraph:
    """H plus two copies F1, F2 of F, with arcs u -> v1 and v2 -> u.

    F1 occupies labels v(H)..v(H)+v(F)-1 and F2 follows it.
    """
    if not (0 <= u < h.vertex_count and 0 <= v < f.vertex_count):
        raise PatternError("attachment vertex out of range")
    nh, nf = h.vertex_count, f.vertex_count
    base = disjoint_union(h, f, f)
    arcs = set(base.arcs)
    arcs.add((u, nh + v))
    arcs.add((nh + nf + v, u))
    return OrientedGraph(base.vertex_count, frozenset(arcs))


def blow_up(t: Tournament, m: int) -> Tournament:
    """Replace each vertex by m vertices; inside a part, (u,i) -> (u,j) for i < j."""
    if m < 1:
        raise PatternError("blow-up factor must be positive")
    n = t.vertex_count
    arcs = []
    for a, b in t.arcs:
        for i in range(m):
            for j in range(m):
                arcs.append((a * m + i, b * m + j))
    for u in range(n):
        for i, j in combinations(range(m), 2):
            arcs.append((u * m + i, u * m + j))
    return Tournament(n * m, frozenset(arcs))


@dataclass(frozen=True)
class SpiderSpec:
    """Three or more legs from a hub. ``orientations[i][j]`` is True when arc j of leg i points away from the hub."""

    leg_lengths: tuple
    orientations: tuple = None

    def build(self) -> OrientedGraph:
        orient = self.orientations
        if orient is None:
            orient = tuple((True,) * k for k in self.leg_lengths)
        if len(orient) != len(self.leg_lengths) or any(
            len(o) != k for o, k in zip(orient, self.leg_lengths)
        ):
            raise PatternError("orientation data does not match leg lengths")
        arcs = []
        nxt = 1
        for length, dirs in zip(self.leg_lengths, orient):
            prev = 0
            for away in dirs:
                arcs.append((prev, nxt) if away else (nxt, prev))
                prev = nxt
                nxt += 1
        return OrientedGraph(nxt, frozenset(arcs))


def spider_leg_lengths(g: OrientedGraph) -> tuple[int, ...]:
    """Sorted leg lengths of a tree with exactly one vertex of degree at least 3."""
    adj = g.neighbours()
    hubs = [v for v in range(g.vertex_count) if len(adj[v]) >= 3]
    if len(hubs) != 1 or not is_forest(g) or len(components(g)) != 1:
        raise PatternError("not a spider")
    hub = hubs[0]
    legs = []
    for start in adj[hub]:
        length, prev, cur = 1, hub, start
        while len(adj[cur]) == 2:
            prev, cur = cur, next(w for w in adj[cur] if w != prev)
            length += 1
        legs.append(length)
    return tuple(sorted(legs))


# ---------------------------------------------------------------- isomorphism

def rooted_code(g: OrientedGraph, root: int, adj=None, parent: int = -1, labels=None) -> str:
    """Canonical string of the tree containing root, hanging from root.

    ``labels`` optionally attaches a tag to every vertex (kept in the code).
    """
    if adj is None:
        adj = g.neighbours()
    stack = [(root, parent, False)]
    codes: dict[int, str] = {}
    while stack:
        v, p, done = stack.pop()
        if not done:
            stack.append((v, p, True))
            for w in adj[v]:
                if w != p:
                    stack.append((w, v, False))
            continue
        parts = []
        for w in adj[v]:
            if w == p:
                continue
            tag = ">" if (v, w) in g.arcs else "<"
            parts.append(tag + codes[w])
        parts.sort()
        head = "" if labels is None else str(labels[v])
        codes[v] = head + "(" + "".join(parts) + ")"
    return codes[root]


def tree_code(g: OrientedGraph, vertices: Iterable[int] | None = None, adj=None) -> str:
    """Canonical code of one tree (given by its vertex set): the minimum rooted code."""
    if adj is None:
        adj = g.neighbours()
    verts = list(range(g.vertex_count)) if vertices is None else list(vertices)
    return min(rooted_code(g, r, adj) for r in verts)


def forest_code(g: OrientedGraph) -> tuple[str, ...]:
    if not is_forest(g):
        raise NotAForest("isomorphism codes are only implemented for forests")
    adj = g.neighbours()
    return tuple(sorted(tree_code(g, comp, adj) for comp in components(g)))


def is_isomorphic(g1: OrientedGraph, g2: OrientedGraph) -> bool:
    if g1.vertex_count != g2.vertex_count or len(g1.arcs) != len(g2.arcs):
        return False
    return forest_code(g1) == forest_code(g2)


def rooted_isomorphism(g1: OrientedGraph, r1: int, g2: OrientedGraph, r2: int) -> dict[int, int] | None:
    """Explicit isomorphism between the trees of r1 and r2 sending r1 to r2, or None."""
    adj1, adj2 = g1.neighbours(), g2.neighbours()
    if rooted_code(g1, r1, adj1) != rooted_code(g2, r2, adj2):
        return None
    mapping = {r1: r2}
    stack = [(r1, -1, r2, -1)]
    while stack:
        a, pa, b, pb = stack.pop()
        kids1 = []
        for w in adj1[a]:
            if w != pa:
                tag = ">" if (a, w) in g1.arcs else "<"
                kids1.append((tag + rooted_code(g1, w, adj1, a), w))
        kids2 = []
        for w in adj2[b]:
            if w != pb:
                tag = ">" if (b, w) in g2.arcs else "<"
                kids2.append((tag + rooted_code(g2, w, adj2, b), w))
        kids1.sort()
        kids2.sort()
        for (c1, w1), (c2, w2) in zip(kids1, kids2):
            assert c1 == c2
            mapping[w1] = w2
            stack.append((w1, a, w2, b))
    return mapping
