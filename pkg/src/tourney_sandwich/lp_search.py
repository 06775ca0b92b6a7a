"""Search for sandwiches by exact linear feasibility over a pool of certified components."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .graph_core import (
    OrientedGraph,
    block_decomposition,
    components,
    directed_path,
    disjoint_union,
    forest_code,
    is_forest,
    rooted_code,
    tree_code,
)
from .sandwich_core import (
    DEFAULT_REGISTRY,
    EvidenceRegistry,
    External,
    SandwichCertificate,
    classify,
    make_certificate,
    verify,
)


class PoolTooLarge(ValueError):
    pass


class VerificationFailed(RuntimeError):
    pass


# ---------------------------------------------------------------- candidate pool

@dataclass(frozen=True)
class CandidateTuple:
    """A component A with a homomorphism psi_A into H and an optional attachment.

    s = +1 means an arc u -> v, s = -1 an arc v -> u, s = 0 no attachment (u, v are None).
    A linked tuple has a forest A with several components that always share one weight.
    """

    component: OrientedGraph
    psi: tuple
    u: int | None
    v: int | None
    s: int
    linked: bool = False

    def vertex_profile(self, h: int) -> tuple:
        out = [0] * h
        for p in self.psi:
            out[p] += 1
        return tuple(out)

    def arc_profile(self, arcs: Sequence[tuple]) -> tuple:
        count: dict = defaultdict(int)
        for x, y in self.component.arcs:
            count[(self.psi[x], self.psi[y])] += 1
        if self.s == 1:
            count[(self.u, self.psi[self.v])] += 1
        elif self.s == -1:
            count[(self.psi[self.v], self.u)] += 1
        return tuple(count[a] for a in arcs)

    def group(self):
        """Pairing group: (rooted shape at the attachment vertex, u); None when unattached."""
        if self.s == 0:
            return None
        return (rooted_code(self.component, self.v), self.u)

    def key(self, h: int, arcs: Sequence[tuple]) -> tuple:
        shape = self.group()[0] if self.s else forest_code(self.component)
        return (shape, self.u, self.s, self.linked, self.vertex_profile(h), self.arc_profile(arcs))


def oriented_trees(max_arcs: int) -> list[OrientedGraph]:
    """All oriented trees with at most max_arcs arcs, one per isomorphism class."""
    seen = {}
    layer = [OrientedGraph(1, frozenset())]
    seen[tree_code(layer[0])] = layer[0]
    for _ in range(max_arcs):
        nxt = []
        for g in layer:
            n = g.vertex_count
            for x in range(n):
                for arc in ((x, n), (n, x)):
                    t = OrientedGraph(n + 1, g.arcs | {arc})
                    code = tree_code(t)
                    if code not in seen:
                        seen[code] = t
                        nxt.append(t)
        layer = nxt
    return sorted(seen.values(), key=lambda g: (g.vertex_count, tree_code(g)))


def homomorphisms(a: OrientedGraph, h: OrientedGraph) -> list[tuple]:
    """Every arc-preserving map from the forest a into h, as tuples of h vertices."""
    n = a.vertex_count
    adj = a.neighbours()
    order, parent = [], {}
    for root in range(n):
        if root in parent:
            continue
        parent[root] = -1
        stack = [root]
        while stack:
            x = stack.pop()
            order.append(x)
            for y in sorted(adj[x], reverse=True):
                if y not in parent:
                    parent[y] = x
                    stack.append(y)
    out_h = defaultdict(list)
    in_h = defaultdict(list)
    for x, y in sorted(h.arcs):
        out_h[x].append(y)
        in_h[y].append(x)
    result = []
    img = [None] * n

    def rec(i):
        if i == n:
            result.append(tuple(img))
            return
        x = order[i]
        p = parent[x]
        if p == -1:
            choices = range(h.vertex_count)
        elif (p, x) in a.arcs:
            choices = out_h[img[p]]
        else:
            choices = in_h[img[p]]
        for c in choices:
            img[x] = c
            rec(i + 1)
        img[x] = None

    rec(0)
    return sorted(result)


def _linked_shapes() -> list[OrientedGraph]:
    """P_2 together with a two-arc in-star or out-star (the second is the pair used by D_5*)."""
    stars = (OrientedGraph(3, frozenset({(1, 0), (2, 0)})), OrientedGraph(3, frozenset({(0, 1), (0, 2)})))
    return [disjoint_union(directed_path(2), s) for s in stars]


def _certified(g: OrientedGraph, registry: EvidenceRegistry) -> bool:
    ev = classify(g)
    return ev is not None and not isinstance(ev, External) and registry.check(g, ev)


SHAPE_FILTERS: dict[str, Callable[[OrientedGraph], bool]] = {
    "all": lambda g: True,
    "paths": lambda g: g.arc_count == 0 or (is_forest(g) and _is_directed_path(g)),
}


def _is_directed_path(g: OrientedGraph) -> bool:
    try:
        return len(block_decomposition(g)) == 1
    except ValueError:
        return False


def generate_pool(
    h: OrientedGraph,
    max_arcs: int = 2,
    shape_filter: str | Callable[[OrientedGraph], bool] = "all",
    linked: bool | None = None,
    cap: int = 20000,
    registry: EvidenceRegistry | None = None,
) -> list[CandidateTuple]:
    """Candidate tuples over every certified tree with at most max_arcs arcs.

    Linked P_2 + out-star pairs are added (unattached) when ``linked`` is true; by
    default they are added only with the "all" filter and max_arcs >= 2.
    """
    reg = registry or DEFAULT_REGISTRY
    keep = SHAPE_FILTERS[shape_filter] if isinstance(shape_filter, str) else shape_filter
    if linked is None:
        linked = shape_filter == "all" and max_arcs >= 2
    nh = h.vertex_count
    arcs = sorted(h.arcs)
    pool: list = []
    seen: set = set()

    def push(t: CandidateTuple):
        k = t.key(nh, arcs)
        if k in seen:
            return
        seen.add(k)
        pool.append(t)
        if len(pool) > cap:
            raise PoolTooLarge(f"pool exceeds {cap} tuples")

    for a in oriented_trees(max_arcs):
        if not keep(a) or not _certified(a, reg):
            continue
        for psi in homomorphisms(a, h):
            push(CandidateTuple(a, psi, None, None, 0))
            for v in range(a.vertex_count):
                for u in range(nh):
                    if (u, psi[v]) in h.arcs:
                        push(CandidateTuple(a, psi, u, v, 1))
                    if (psi[v], u) in h.arcs:
                        push(CandidateTuple(a, psi, u, v, -1))
    if linked:
        for shape in _linked_shapes():
            if not _certified(shape, reg):
                continue
            for psi in homomorphisms(shape, h):
                push(CandidateTuple(shape, psi, None, None, 0, linked=True))
    return pool


# ---------------------------------------------------------------- linear system

@dataclass
class LinearSystem:
    """Rows are (coefficients {variable index: Fraction}, rhs). Variables are >= 0."""

    n_vars: int
    equalities: list = field(default_factory=list)
    inequalities: list = field(default_factory=list)
    eq_labels: list = field(default_factory=list)
    ineq_labels: list = field(default_factory=list)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.equalities) + len(self.inequalities), self.n_vars


def build_system(h: OrientedGraph, pool: Sequence[CandidateTuple], partial: bool = False) -> LinearSystem:
    """Arc cover = 1 (<= 1 if partial), vertex cover <= 1, and balanced attachments per group."""
    nh = h.vertex_count
    arcs = sorted(h.arcs)
    sys = LinearSystem(len(pool))
    vprof = [t.vertex_profile(nh) for t in pool]
    aprof = [t.arc_profile(arcs) for t in pool]
    for j, arc in enumerate(arcs):
        row = {i: Fraction(p[j]) for i, p in enumerate(aprof) if p[j]}
        if partial:
            sys.inequalities.append((row, Fraction(1)))
            sys.ineq_labels.append(f"arc {arc}")
        else:
            sys.equalities.append((row, Fraction(1)))
            sys.eq_labels.append(f"arc {arc}")
    for u in range(nh):
        row = {i: Fraction(p[u]) for i, p in enumerate(vprof) if p[u]}
        if row:
            sys.inequalities.append((row, Fraction(1)))
            sys.ineq_labels.append(f"vertex {u}")
    groups: dict = defaultdict(dict)
    for i, t in enumerate(pool):
        g = t.group()
        if g is not None:
            groups[g][i] = Fraction(t.s)
    for g in sorted(groups, key=lambda g: (g[1], g[0])):
        sys.equalities.append((groups[g], Fraction(0)))
        sys.eq_labels.append(f"pairing {g}")
    return sys


@dataclass
class Feasible:
    assignment: tuple
    pivots: int

    feasible = True


@dataclass
class Infeasible:
    pivots: int

    feasible = False


def solve_feasible(sys: LinearSystem) -> Feasible | Infeasible:
    """Exact phase-one simplex with Bland's rule."""
    n = sys.n_vars
    rows = []
    for coeffs, rhs in sys.equalities:
        rows.append((dict(coeffs), Fraction(rhs), None))
    for idx, (coeffs, rhs) in enumerate(sys.inequalities):
        rows.append((dict(coeffs), Fraction(rhs), idx))
    m = len(rows)
    n_slack = len(sys.inequalities)
    width = n + n_slack + m  # originals, slacks, artificials
    tab = []
    basis = []
    for r, (coeffs, rhs, slack) in enumerate(rows):
        line = [Fraction(0)] * (width + 1)
        for j, c in coeffs.items():
            line[j] = Fraction(c)
        if slack is not None:
            line[n + slack] = Fraction(1)
        line[-1] = rhs
        if rhs < 0:
            line = [-x for x in line]
        line[n + n_slack + r] = Fraction(1)
        tab.append(line)
        basis.append(n + n_slack + r)
    art0 = n + n_slack
    # objective: minimise the sum of artificials; reduced costs = -(sum of rows) on non-artificials
    obj = [Fraction(0)] * (width + 1)
    for line in tab:
        for j in range(width + 1):
            if j < art0 or j == width:
                obj[j] -= line[j]
    pivots = 0

    def pivot(r, c):
        pr = tab[r]
        inv = 1 / pr[c]
        tab[r] = pr = [x * inv for x in pr]
        for i in range(m):
            if i != r and tab[i][c] != 0:
                f = tab[i][c]
                li = tab[i]
                tab[i] = [a - f * b for a, b in zip(li, pr)]
        if obj[c] != 0:
            f = obj[c]
            obj[:] = [a - f * b for a, b in zip(obj, pr)]
        basis[r] = c

    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded cannot happen in phase one
            break
        pivot(best[1], enter)
        pivots += 1
    if -obj[-1] != 0:
        return Infeasible(pivots)
    x = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = tab[i][-1]
    return Feasible(tuple(x), pivots)


# ---------------------------------------------------------------- extraction

def extract_certificate(
    h: OrientedGraph,
    pool: Sequence[CandidateTuple],
    assignment: Sequence[Fraction],
    partial: bool = False,
    registry: EvidenceRegistry | None = None,
    name: str = "lp",
) -> SandwichCertificate:
    """Materialise a feasible point as a certificate and verify it."""
    nh = h.vertex_count
    pieces = []  # (tuple, weight)
    groups: dict = defaultdict(lambda: {1: [], -1: []})
    for t, w in zip(pool, assignment):
        w = Fraction(w)
        if w == 0:
            continue
        if t.s == 0:
            pieces.append((t, w))
        else:
            groups[t.group()][t.s].append([t, w])
    for g in sorted(groups, key=lambda g: (g[1], g[0])):
        outs, ins = groups[g][1], groups[g][-1]
        i = j = 0
        while i < len(outs) and j < len(ins):
            m = min(outs[i][1], ins[j][1])
            pieces.append((outs[i][0], m))
            pieces.append((ins[j][0], m))
            outs[i][1] -= m
            ins[j][1] -= m
            if outs[i][1] == 0:
                i += 1
            if ins[j][1] == 0:
                j += 1
        if any(x[1] for x in outs[i:]) or any(x[1] for x in ins[j:]):
            raise VerificationFailed(f"pairing group {g} is unbalanced")
    arcs = set(h.arcs)
    psi = list(range(nh))
    weights = {}
    classes = []
    for t, w in pieces:
        off = len(psi)
        psi.extend(t.psi)
        arcs |= {(off + x, off + y) for x, y in t.component.arcs}
        if t.s == 1:
            arcs.add((t.u, off + t.v))
        elif t.s == -1:
            arcs.add((off + t.v, t.u))
        reps = [off + c[0] for c in components(t.component)]
        for r in reps:
            weights[r] = w
        if t.linked:
            classes.append(tuple(reps))
        else:
            classes.extend((r,) for r in reps)
    host = OrientedGraph(len(psi), frozenset(arcs))
    cert = make_certificate(
        host, list(range(nh)), psi, weights, partial=partial, partition=sorted(classes), name=name
    )
    report = verify(cert, registry)
    if not report.passed:
        raise VerificationFailed(str(report))
    return cert


@dataclass
class SearchResult:
    pattern: OrientedGraph
    feasible: bool
    certificate: SandwichCertificate | None
    pool_size: int
    rows: int
    pivots: int

    def summary(self) -> str:
        verdict = "Feasible" if self.feasible else "Infeasible"
        return f"{verdict}: pool {self.pool_size} tuples, {self.rows} rows, {self.pivots} pivots"


def search(
    h: OrientedGraph,
    max_arcs: int = 2,
    shape_filter: str | Callable[[OrientedGraph], bool] = "all",
    partial: bool = False,
    cap: int = 20000,
    registry: EvidenceRegistry | None = None,
) -> SearchResult:
    """Pool, system, solve, extract and verify."""
    pool = generate_pool(h, max_arcs, shape_filter, cap=cap, registry=registry)
    sys = build_system(h, pool, partial=partial)
    res = solve_feasible(sys)
    cert = None
    if res.feasible:
        cert = extract_certificate(h, pool, res.assignment, partial=partial, registry=registry)
    return SearchResult(h, res.feasible, cert, len(pool), sys.shape[0], res.pivots)


def certificate_tuples(cert: SandwichCertificate) -> list[CandidateTuple]:
    """Read a certificate back as candidate tuples (one per component), in pattern indices."""
    idx = cert.pattern_index
    pset = set(cert.pattern_vertices)
    out = []
    for comp in cert.components():
        local = {x: i for i, x in enumerate(comp)}
        g = OrientedGraph(len(comp), frozenset((local[a], local[b]) for a, b in cert.host.arcs if a in local and b in local))
        psi = tuple(idx[cert.psi[x]] for x in comp)
        att = [(a, b) for a, b in cert.host.arcs if (a in pset and b in local) or (b in pset and a in local)]
        if not att:
            out.append(CandidateTuple(g, psi, None, None, 0))
        else:
            a, b = att[0]
            if a in pset:
                out.append(CandidateTuple(g, psi, idx[a], local[b], 1))
            else:
                out.append(CandidateTuple(g, psi, idx[b], local[a], -1))
    return out

