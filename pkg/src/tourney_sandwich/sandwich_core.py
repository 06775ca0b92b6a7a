"""Sandwich certificates: data model, verifier, cov, covering forest and evidence registry."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .graph_core import (
    NotAPath,
    OrientedGraph,
    block_decomposition,
    build_path,
    components,
    directed_path,
    disjoint_union,
    induced,
    is_forest,
    is_isomorphic,
    reverse_all_arcs,
    rooted_code,
    rooted_isomorphism,
)
from .hom_engine import adjacency_stack, batch_hom_counts, SizeGuardExceeded


class TargetNotInPattern(ValueError):
    pass


class CoverDeficit(ValueError):
    pass


class EvidenceMismatch(ValueError):
    pass


class InvolutionError(ValueError):
    pass


# ---------------------------------------------------------------- evidence terms

@dataclass(frozen=True)
class DirectedPath:
    k: int


@dataclass(frozen=True)
class NamedProposition:
    name: str


@dataclass(frozen=True)
class Reversal:
    child: object


@dataclass(frozen=True)
class Union:
    children: tuple


@dataclass(frozen=True)
class SandwichRef:
    certificate_id: str


@dataclass(frozen=True)
class TwoBlocks:
    a: int
    b: int


@dataclass(frozen=True)
class ZeroMod4:
    blocks: tuple


@dataclass(frozen=True)
class TheoremFamily:
    member: object


@dataclass(frozen=True)
class External:
    citation: str


NAMED_PATTERNS = {
    "P12": lambda: build_path((1, 2)),
    "P13": lambda: build_path((1, 3)),
    "P14": lambda: build_path((1, 4)),
    "P22": lambda: build_path((2, 2)),
    "P1331": lambda: build_path((1, 3, 3, 1)),
    "Forest_P2_P11": lambda: disjoint_union(directed_path(2), build_path((1, 1))),
}


def zero_mod4_eligible(blocks: Sequence[int]) -> bool:
    blocks = tuple(blocks)
    if len(blocks) < 1 or any(b < 2 for b in blocks):
        return False
    return all(b % 4 == 0 for b in blocks[1:-1])


def evidence_to_json(ev) -> dict:
    if isinstance(ev, DirectedPath):
        return {"type": "DirectedPath", "k": ev.k}
    if isinstance(ev, NamedProposition):
        return {"type": "NamedProposition", "id": ev.name}
    if isinstance(ev, Reversal):
        return {"type": "Reversal", "child": evidence_to_json(ev.child)}
    if isinstance(ev, Union):
        return {"type": "Union", "children": [evidence_to_json(c) for c in ev.children]}
    if isinstance(ev, SandwichRef):
        return {"type": "SandwichRef", "id": ev.certificate_id}
    if isinstance(ev, TheoremFamily):
        m = ev.member
        if isinstance(m, TwoBlocks):
            return {"type": "TheoremFamily", "family": "TwoBlocks", "params": [m.a, m.b]}
        return {"type": "TheoremFamily", "family": "ZeroMod4", "params": list(m.blocks)}
    if isinstance(ev, External):
        return {"type": "External", "citation": ev.citation}
    raise TypeError(f"not an evidence term: {ev!r}")


def evidence_from_json(d: dict):
    t = d["type"]
    if t == "DirectedPath":
        return DirectedPath(int(d["k"]))
    if t == "NamedProposition":
        return NamedProposition(d["id"])
    if t == "Reversal":
        return Reversal(evidence_from_json(d["child"]))
    if t == "Union":
        return Union(tuple(evidence_from_json(c) for c in d["children"]))
    if t == "SandwichRef":
        return SandwichRef(d["id"])
    if t == "TheoremFamily":
        p = [int(x) for x in d["params"]]
        member = TwoBlocks(*p) if d["family"] == "TwoBlocks" else ZeroMod4(tuple(p))
        return TheoremFamily(member)
    if t == "External":
        return External(d["citation"])
    raise ValueError(f"unknown evidence type {t!r}")


def evidence_graph(ev, registry: "EvidenceRegistry | None" = None) -> OrientedGraph | None:
    """The oriented graph an evidence term talks about (None for External)."""
    if isinstance(ev, DirectedPath):
        return directed_path(ev.k)
    if isinstance(ev, NamedProposition):
        if ev.name not in NAMED_PATTERNS:
            raise EvidenceMismatch(f"unknown proposition {ev.name}")
        return NAMED_PATTERNS[ev.name]()
    if isinstance(ev, Reversal):
        g = evidence_graph(ev.child, registry)
        return None if g is None else reverse_all_arcs(g)
    if isinstance(ev, Union):
        parts = [evidence_graph(c, registry) for c in ev.children]
        if any(p is None for p in parts):
            return None
        return disjoint_union(*parts)
    if isinstance(ev, SandwichRef):
        if registry is None or ev.certificate_id not in registry.certificates:
            raise EvidenceMismatch(f"unknown certificate {ev.certificate_id}")
        return registry.certificates[ev.certificate_id].pattern
    if isinstance(ev, TheoremFamily):
        m = ev.member
        if isinstance(m, TwoBlocks):
            return build_path((m.a, m.b))
        return build_path(m.blocks)
    if isinstance(ev, External):
        return None
    raise TypeError(f"not an evidence term: {ev!r}")


def _classify_path(g: OrientedGraph):
    if g.arc_count == 0:
        return DirectedPath(0)
    runs = block_decomposition(g)
    lengths = tuple(r[0] for r in runs)
    readings = [(lengths, runs[0][1])]
    # the other end: reversed lengths, first direction flips when read backwards
    readings.append((lengths[::-1], -runs[-1][1]))
    fwd = [L for L, d in readings if d == 1]
    if not fwd:
        inner = _classify_path(reverse_all_arcs(g))
        return None if inner is None else Reversal(inner)
    for blocks in sorted(set(fwd)):
        ev = _classify_blocks(blocks)
        if ev is not None:
            return ev
    return None


def _classify_blocks(blocks: tuple):
    if len(blocks) == 1:
        return DirectedPath(blocks[0])
    if len(blocks) == 2:
        a, b = sorted(blocks)
        named = {(1, 2): "P12", (1, 3): "P13", (1, 4): "P14", (2, 2): "P22"}
        if (a, b) in named:
            return NamedProposition(named[(a, b)])
        if a == 1 and b == 1:
            return None
        return TheoremFamily(TwoBlocks(a, b))
    if blocks == (1, 3, 3, 1):
        return NamedProposition("P1331")
    if zero_mod4_eligible(blocks):
        return TheoremFamily(ZeroMod4(blocks))
    return None


_P2_P11 = None


def classify(g: OrientedGraph):
    """Best-effort evidence for an oriented forest, or None when nothing applies."""
    global _P2_P11
    if g.vertex_count == 0:
        return Union(())
    comps = components(g)
    if len(comps) > 1:
        if _P2_P11 is None:
            _P2_P11 = NAMED_PATTERNS["Forest_P2_P11"]()
        if is_isomorphic(g, _P2_P11):
            return NamedProposition("Forest_P2_P11")
        if is_isomorphic(reverse_all_arcs(g), _P2_P11):
            return Reversal(NamedProposition("Forest_P2_P11"))
        kids = []
        for c in comps:
            ev = classify(induced(g, c))
            if ev is None:
                return None
            kids.append(ev)
        return Union(tuple(kids))
    if not is_forest(g):
        return None
    try:
        return _classify_path(g)
    except NotAPath:
        return None


class EvidenceRegistry:
    """Checks evidence terms. Results are cached per term.

    recursive_paths: discharge DirectedPath(k) by verifying the directed-path sandwich
    instead of citing it. compose_families: build and verify certificates for
    TheoremFamily terms (otherwise only the family's side conditions are checked).
    """

    def __init__(self, allow_external: bool = False, recursive_paths: bool = False, compose_families: bool = True):
        self.allow_external = allow_external
        self.recursive_paths = recursive_paths
        self.compose_families = compose_families
        self.certificates: dict[str, "SandwichCertificate"] = {}
        self._cache: dict = {}
        self._active: set = set()

    def register(self, cert_id: str, cert: "SandwichCertificate") -> None:
        self.certificates[cert_id] = cert

    def valid(self, ev) -> bool:
        key = ev
        if key in self._cache:
            return self._cache[key]
        if key in self._active:
            raise EvidenceMismatch(f"cyclic evidence at {ev!r}")
        self._active.add(key)
        try:
            result = self._valid(ev)
        finally:
            self._active.discard(key)
        self._cache[key] = result
        return result

    def _valid(self, ev) -> bool:
        if isinstance(ev, DirectedPath):
            if ev.k < 0:
                return False
            if self.recursive_paths and ev.k >= 2:
                from .atlas import ssz_path

                return verify(ssz_path(ev.k), self).passed
            return True
        if isinstance(ev, NamedProposition):
            if ev.name not in NAMED_PATTERNS:
                return False
            if ev.name in ("P22", "P1331"):
                from .skew_algebra import certified_bound_p22, certified_bound_p1331

                proof = certified_bound_p22() if ev.name == "P22" else certified_bound_p1331()
                return proof.check()
            return True
        if isinstance(ev, Reversal):
            return self.valid(ev.child)
        if isinstance(ev, Union):
            return all(self.valid(c) for c in ev.children)
        if isinstance(ev, SandwichRef):
            cert = self.certificates.get(ev.certificate_id)
            return cert is not None and not cert.partial and verify(cert, self).passed
        if isinstance(ev, TheoremFamily):
            from . import atlas

            m = ev.member
            if isinstance(m, TwoBlocks):
                if m.a < 1 or m.b < 1 or (m.a, m.b) == (1, 1):
                    return False
                if not self.compose_families:
                    return True
                return atlas.two_blocks_status(m.a, m.b, registry=self).valid
            if not zero_mod4_eligible(m.blocks):
                return False
            if not self.compose_families:
                return True
            return verify(atlas.theorem_0mod4(m.blocks), self).passed
        if isinstance(ev, External):
            return self.allow_external
        return False

    def check(self, g: OrientedGraph, ev) -> bool:
        target = evidence_graph(ev, self)
        if target is None:
            return self.valid(ev)
        return is_isomorphic(g, target) and self.valid(ev)


DEFAULT_REGISTRY = EvidenceRegistry()


def evidence_check(g: OrientedGraph, ev, registry: EvidenceRegistry | None = None) -> bool:
    return (registry or DEFAULT_REGISTRY).check(g, ev)


def require_evidence(g: OrientedGraph, ev, registry: EvidenceRegistry | None = None) -> None:
    if not evidence_check(g, ev, registry):
        raise EvidenceMismatch(f"evidence {ev!r} does not certify {g!r}")


# ---------------------------------------------------------------- certificates

@dataclass
class SandwichCertificate:
    """A (partial) sandwich for the pattern induced on ``pattern_vertices``.

    psi maps every host vertex to a host pattern vertex. Weights are keyed by the
    smallest vertex of each component of host minus pattern. ``involution`` is a
    full permutation of host vertices (pattern vertices fixed). ``partition`` and
    ``evidence`` may be None, meaning one class per component and classified evidence.
    """

    host: OrientedGraph
    pattern_vertices: tuple
    psi: tuple
    weights: dict
    involution: tuple
    partition: tuple | None = None
    evidence: tuple | None = None
    partial: bool = False
    name: str = ""

    @property
    def pattern(self) -> OrientedGraph:
        return induced(self.host, self.pattern_vertices)

    @property
    def pattern_index(self) -> dict:
        return {v: i for i, v in enumerate(self.pattern_vertices)}

    def components(self) -> list[list[int]]:
        pset = set(self.pattern_vertices)
        rest = [v for v in range(self.host.vertex_count) if v not in pset]
        sub = induced(self.host, rest)
        return [[rest[i] for i in c] for c in components(sub)] if rest else []

    def component_map(self) -> dict:
        out = {}
        for comp in self.components():
            for v in comp:
                out[v] = comp[0]
        return out

    def vertex_weight(self, x: int) -> Fraction:
        cm = self.component_map()
        return Fraction(self.weights.get(cm[x], 0)) if x in cm else Fraction(0)

    def classes(self) -> list[tuple]:
        if self.partition is not None:
            return [tuple(c) for c in self.partition]
        return [(c[0],) for c in self.components()]

    def class_graph(self, cls: Sequence[int]) -> OrientedGraph:
        comps = {c[0]: c for c in self.components()}
        verts = sorted(v for r in cls for v in comps[r])
        return induced(self.host, verts)

    def class_evidence(self) -> list:
        classes = self.classes()
        if self.evidence is not None:
            return list(self.evidence)
        return [classify(self.class_graph(c)) for c in classes]

    def cov_table(self) -> tuple[list[Fraction], dict]:
        """(vertex cov by pattern index, arc cov keyed by pattern-index arc)."""
        idx = self.pattern_index
        cm = self.component_map()
        h = len(self.pattern_vertices)
        vcov = [Fraction(0)] * h
        for x in range(self.host.vertex_count):
            if x in cm:
                vcov[idx[self.psi[x]]] += Fraction(self.weights.get(cm[x], 0))
        acov = {arc: Fraction(0) for arc in self.pattern.arcs}
        for x, y in self.host.arcs:
            r = cm.get(x, cm.get(y))
            if r is None:
                continue
            key = (idx[self.psi[x]], idx[self.psi[y]])
            if key in acov:
                acov[key] += Fraction(self.weights.get(r, 0))
        return vcov, acov

    def path_arc_cov(self) -> list[Fraction]:
        """For a path pattern v0..vk: cov of e_i, whichever way it points."""
        _, acov = self.cov_table()
        out = []
        for i in range(len(self.pattern_vertices) - 1):
            out.append(acov.get((i, i + 1), acov.get((i + 1, i))))
        return out


def cov(s: SandwichCertificate, target) -> Fraction:
    vcov, acov = s.cov_table()
    if isinstance(target, tuple):
        if target not in acov:
            raise TargetNotInPattern(f"{target} is not an arc of the pattern")
        return acov[target]
    if not 0 <= target < len(vcov):
        raise TargetNotInPattern(f"{target} is not a pattern vertex")
    return vcov[target]


# ---------------------------------------------------------------- derivation helpers

def _attachments(host: OrientedGraph, pset: set, comp: Sequence[int]) -> list[tuple[int, int, int]]:
    """(pattern vertex u, component vertex x, +1 for u -> x / -1 for x -> u)."""
    cs = set(comp)
    out = []
    for a, b in host.arcs:
        if a in pset and b in cs:
            out.append((a, b, 1))
        elif b in pset and a in cs:
            out.append((b, a, -1))
    return out


def derive_involution(host: OrientedGraph, pattern_vertices: Sequence[int], weights: dict) -> tuple:
    """Pair each component attached u -> x with one attached y -> u of equal weight and rooted shape."""
    pset = set(pattern_vertices)
    rest = [v for v in range(host.vertex_count) if v not in pset]
    sub = induced(host, rest)
    comps = [[rest[i] for i in c] for c in components(sub)] if rest else []
    pi = list(range(host.vertex_count))
    groups: dict = {}
    for comp in comps:
        att = _attachments(host, pset, comp)
        if not att:
            continue
        if len(att) > 1:
            raise InvolutionError(f"component {comp[0]} has {len(att)} attachment arcs")
        u, x, s = att[0]
        local = induced(host, comp)
        code = rooted_code(local, comp.index(x))
        key = (u, Fraction(weights.get(comp[0], 0)), code)
        groups.setdefault(key, {1: [], -1: []})[s].append((comp, x))
    for key, sides in groups.items():
        outs, ins = sides[1], sides[-1]
        if len(outs) != len(ins):
            raise InvolutionError(f"unbalanced attachments at pattern vertex {key[0]} for shape {key[2]}")
        for (c1, x1), (c2, x2) in zip(outs, ins):
            g1, g2 = induced(host, c1), induced(host, c2)
            iso = rooted_isomorphism(g1, c1.index(x1), g2, c2.index(x2))
            for i, j in iso.items():
                pi[c1[i]] = c2[j]
                pi[c2[j]] = c1[i]
    return tuple(pi)


def derive_partition(cert: SandwichCertificate) -> tuple:
    """One class per component, except that components without evidence are
    paired with an equal-weight partner whose union has evidence."""
    comps = cert.components()
    graphs = {c[0]: induced(cert.host, c) for c in comps}
    ev = {r: classify(g) for r, g in graphs.items()}
    used: set = set()
    classes: list = []
    needy = [r for r in graphs if ev[r] is None]
    for r in needy:
        if r in used:
            continue
        w = Fraction(cert.weights.get(r, 0))
        partner = None
        # prefer partners that are certified on their own (and not needed by anyone)
        order = sorted(graphs, key=lambda x: (ev[x] is None, x))
        for r2 in order:
            if r2 == r or r2 in used or Fraction(cert.weights.get(r2, 0)) != w:
                continue
            union = cert.class_graph((r, r2))
            if classify(union) is not None:
                partner = r2
                break
        used.add(r)
        if partner is None:
            classes.append((r,))
        else:
            used.add(partner)
            classes.append(tuple(sorted((r, partner))))
    for r in graphs:
        if r not in used:
            classes.append((r,))
    classes.sort()
    return tuple(classes)


def make_certificate(
    host: OrientedGraph,
    pattern_vertices: Sequence[int],
    psi: Sequence[int],
    component_weights: dict,
    partial: bool = False,
    involution: Sequence[int] | None = None,
    partition=None,
    evidence=None,
    name: str = "",
    auto_partition: bool = True,
) -> SandwichCertificate:
    """Assemble a certificate; missing involution and partition are derived."""
    weights = {int(k): Fraction(v) for k, v in component_weights.items()}
    if involution is None:
        involution = derive_involution(host, pattern_vertices, weights)
    cert = SandwichCertificate(
        host=host,
        pattern_vertices=tuple(pattern_vertices),
        psi=tuple(psi),
        weights=weights,
        involution=tuple(involution),
        partition=None if partition is None else tuple(tuple(c) for c in partition),
        evidence=None if evidence is None else tuple(evidence),
        partial=partial,
        name=name,
    )
    if partition is None and auto_partition:
        derived = derive_partition(cert)
        if any(len(c) > 1 for c in derived):
            cert.partition = derived
    return cert


# ---------------------------------------------------------------- verification

@dataclass
class ConditionResult:
    name: str
    passed: bool
    witness: object = None

    def __str__(self):
        mark = "ok" if self.passed else "FAIL"
        extra = "" if self.passed or self.witness is None else f"  witness: {self.witness}"
        return f"[{mark}] {self.name}{extra}"


@dataclass
class VerificationReport:
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def condition(self, name: str) -> ConditionResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def __str__(self):
        return "\n".join(str(r) for r in self.results)


CONDITIONS = (
    "forest",
    "retraction",
    "weights",
    "arc_cover",
    "vertex_cover",
    "partition",
    "evidence",
    "single_attachment",
    "involution",
    "same_weight",
    "reversed_attachment",
)


def verify(s: SandwichCertificate, registry: EvidenceRegistry | None = None) -> VerificationReport:
    """Check every sandwich condition; arc cover is an equality unless the certificate is partial."""
    reg = registry or DEFAULT_REGISTRY
    rep = VerificationReport()
    host = s.host
    n = host.vertex_count
    pv = list(s.pattern_vertices)
    pset = set(pv)

    ok = is_forest(host) and len(pset) == len(pv) and all(0 <= v < n for v in pv)
    rep.results.append(ConditionResult("forest", ok, None if ok else "host not a forest or bad pattern list"))
    if not ok:
        return rep

    pattern_arcs = set(host.arcs) & {(a, b) for a in pset for b in pset}
    bad = None
    if len(s.psi) != n:
        bad = "psi has wrong length"
    else:
        for v in pv:
            if s.psi[v] != v:
                bad = f"psi moves pattern vertex {v}"
                break
        if bad is None:
            for x in range(n):
                if s.psi[x] not in pset:
                    bad = f"psi({x}) = {s.psi[x]} is not a pattern vertex"
                    break
        if bad is None:
            for a, b in host.sorted_arcs():
                if (s.psi[a], s.psi[b]) not in pattern_arcs:
                    bad = f"arc {(a, b)} maps to non-arc {(s.psi[a], s.psi[b])}"
                    break
    rep.results.append(ConditionResult("retraction", bad is None, bad))
    if bad is not None:
        return rep

    comps = s.components()
    reps = [c[0] for c in comps]
    cm = s.component_map()
    bad = None
    extra = set(s.weights) - set(reps)
    if extra:
        bad = f"weights for non-components {sorted(extra)}"
    for r in reps:
        w = s.weights.get(r)
        if w is None:
            bad = f"component {r} has no weight"
            break
        if Fraction(w) < 0:
            bad = f"component {r} has negative weight {w}"
            break
    rep.results.append(ConditionResult("weights", bad is None, bad))
    if bad is not None:
        return rep

    vcov, acov = s.cov_table()
    bad = None
    for arc in sorted(acov):
        c = acov[arc]
        if (c > 1) if s.partial else (c != 1):
            bad = {"arc": arc, "cov": str(c)}
            break
    rep.results.append(ConditionResult("arc_cover", bad is None, bad))
    bad = None
    for i, c in enumerate(vcov):
        if c > 1:
            bad = {"vertex": i, "cov": str(c)}
            break
    rep.results.append(ConditionResult("vertex_cover", bad is None, bad))

    classes = s.classes()
    flat = [r for c in classes for r in c]
    bad = None
    if sorted(flat) != sorted(reps):
        bad = "classes do not partition the components"
    else:
        for c in classes:
            ws = {Fraction(s.weights[r]) for r in c}
            if len(ws) > 1:
                bad = f"class {c} has weights {sorted(map(str, ws))}"
                break
    rep.results.append(ConditionResult("partition", bad is None, bad))

    bad = None
    if bad is None and sorted(flat) == sorted(reps):
        evs = s.class_evidence()
        if len(evs) != len(classes):
            bad = "evidence list does not match classes"
        else:
            for c, ev in zip(classes, evs):
                if ev is None or not reg.check(s.class_graph(c), ev):
                    bad = {"class": c, "evidence": None if ev is None else evidence_to_json(ev)}
                    break
    elif bad is None:
        bad = "partition invalid"
    rep.results.append(ConditionResult("evidence", bad is None, bad))

    bad = None
    for c in comps:
        att = _attachments(host, pset, c)
        if len(att) > 1:
            bad = {"component": c[0], "attachments": len(att)}
            break
    rep.results.append(ConditionResult("single_attachment", bad is None, bad))

    pi = s.involution
    bad = None
    rest = [v for v in range(n) if v not in pset]
    if len(pi) != n:
        bad = "involution has wrong length"
    else:
        rs = set(rest)
        for x in rest:
            if pi[x] not in rs or pi[pi[x]] != x:
                bad = f"not an involution of the non-pattern vertices at {x}"
                break
        if bad is None:
            for a, b in host.sorted_arcs():
                if a in rs and b in rs and (pi[a], pi[b]) not in host.arcs:
                    bad = f"arc {(a, b)} not preserved"
                    break
    rep.results.append(ConditionResult("involution", bad is None, bad))
    if bad is not None:
        rep.results.append(ConditionResult("same_weight", False, "involution invalid"))
        rep.results.append(ConditionResult("reversed_attachment", False, "involution invalid"))
        return rep

    bad = None
    for x in rest:
        if Fraction(s.weights[cm[x]]) != Fraction(s.weights[cm[pi[x]]]):
            bad = f"weight differs between {x} and {pi[x]}"
            break
    rep.results.append(ConditionResult("same_weight", bad is None, bad))

    bad = None
    for u in pv:
        for v in rest:
            if ((u, v) in host.arcs) != ((pi[v], u) in host.arcs):
                bad = f"arc ({u},{v}) has no reversed partner under the involution"
                break
        if bad:
            break
    rep.results.append(ConditionResult("reversed_attachment", bad is None, bad))
    return rep


# ---------------------------------------------------------------- certificate algebra

def reverse_certificate(s: SandwichCertificate) -> SandwichCertificate:
    """All arcs reversed: a certificate for the reversed pattern."""
    ev = None if s.evidence is None else tuple(Reversal(e) for e in s.evidence)
    return replace(s, host=reverse_all_arcs(s.host), evidence=ev, name=s.name + "^rev" if s.name else "")


def reorder_pattern(s: SandwichCertificate, order: Sequence[int]) -> SandwichCertificate:
    """New pattern labelling: position i of the result is old pattern index order[i]."""
    return replace(s, pattern_vertices=tuple(s.pattern_vertices[i] for i in order))


def reverse_labels(s: SandwichCertificate) -> SandwichCertificate:
    """For path patterns: v_i becomes v_{k-i}."""
    return reorder_pattern(s, list(range(len(s.pattern_vertices)))[::-1])


def glue(a: SandwichCertificate, ia: int, b: SandwichCertificate, ib: int, partial: bool | None = None, name: str = "") -> SandwichCertificate:
    """Disjoint union of two certificates, identifying pattern vertex ia of a with ib of b.

    The new pattern order is a's pattern followed by b's pattern without ib.
    """
    na = a.host.vertex_count
    merged = b.pattern_vertices[ib]
    target = a.pattern_vertices[ia]
    bmap = {}
    for x in range(b.host.vertex_count):
        if x == merged:
            bmap[x] = target
        else:
            bmap[x] = na + (x if x < merged else x - 1)
    n = na + b.host.vertex_count - 1
    arcs = set(a.host.arcs) | {(bmap[x], bmap[y]) for x, y in b.host.arcs}
    host = OrientedGraph(n, frozenset(arcs))
    pattern = tuple(a.pattern_vertices) + tuple(bmap[v] for i, v in enumerate(b.pattern_vertices) if i != ib)
    psi = list(a.psi) + [0] * (n - na)
    pi = list(a.involution) + [0] * (n - na)
    for x in range(b.host.vertex_count):
        if x != merged:
            psi[bmap[x]] = bmap[b.psi[x]]
            pi[bmap[x]] = bmap[b.involution[x]]
    weights = dict(a.weights)
    weights.update({bmap[r]: w for r, w in b.weights.items()})

    def classes(c: SandwichCertificate, f):
        return [tuple(f(r) for r in cl) for cl in c.classes()]

    partition = None
    evidence = None
    if a.partition is not None or b.partition is not None or a.evidence is not None or b.evidence is not None:
        partition = tuple(classes(a, lambda r: r) + classes(b, lambda r: bmap[r]))
        if a.evidence is not None or b.evidence is not None:
            evidence = tuple(a.class_evidence() + b.class_evidence())
    return SandwichCertificate(
        host=host,
        pattern_vertices=pattern,
        psi=tuple(psi),
        weights=weights,
        involution=tuple(pi),
        partition=partition,
        evidence=evidence,
        partial=(a.partial or b.partial) if partial is None else partial,
        name=name,
    )


def add_components(
    s: SandwichCertificate,
    pieces: Iterable[tuple[OrientedGraph, Sequence[int], Sequence[tuple], Fraction]],
    partial: bool | None = None,
    name: str | None = None,
    pairs: Sequence[tuple[int, int]] = (),
) -> SandwichCertificate:
    """Add new components. Each piece is (graph, psi as pattern indices, attachment arcs, weight).

    Attachment arcs are ("out", i, x) for v_i -> x or ("in", x, i) for x -> v_i,
    with x a vertex of the piece. ``pairs`` lists (piece, piece) index pairs swapped by
    the involution (matched by rooted isomorphism at their attachment vertices).
    Pieces not listed in any pair are fixed pointwise.
    """
    n0 = s.host.vertex_count
    arcs = set(s.host.arcs)
    psi = list(s.psi)
    pi = list(s.involution)
    weights = dict(s.weights)
    offset = n0
    placed = []
    for g, piece_psi, attach, w in pieces:
        mapping = [offset + i for i in range(g.vertex_count)]
        arcs |= {(mapping[x], mapping[y]) for x, y in g.arcs}
        for kind, p, q in attach:
            if kind == "out":
                arcs.add((s.pattern_vertices[p], mapping[q]))
            else:
                arcs.add((mapping[p], s.pattern_vertices[q]))
        psi.extend(s.pattern_vertices[i] for i in piece_psi)
        pi.extend(mapping)
        placed.append((g, mapping, attach))
        offset += g.vertex_count
        weights[mapping[0]] = Fraction(w)
    for i, j in pairs:
        g1, m1, a1 = placed[i]
        g2, m2, a2 = placed[j]
        r1 = a1[0][2] if a1[0][0] == "out" else a1[0][1]
        r2 = a2[0][2] if a2[0][0] == "out" else a2[0][1]
        iso = rooted_isomorphism(g1, r1, g2, r2)
        if iso is None:
            raise InvolutionError("paired pieces are not isomorphic at their roots")
        for x, y in iso.items():
            pi[m1[x]] = m2[y]
            pi[m2[y]] = m1[x]
    host = OrientedGraph(offset, frozenset(arcs))
    partition = s.partition
    evidence = s.evidence
    if partition is not None:
        new = [(m[0],) for _, m, _ in placed]
        partition = tuple(partition) + tuple(new)
        if evidence is not None:
            evidence = tuple(evidence) + tuple(classify(g) for g, _, _ in placed)
    # components that are new singletons must also be merge-free: their rep is their smallest vertex
    return SandwichCertificate(
        host=host,
        pattern_vertices=s.pattern_vertices,
        psi=tuple(psi),
        weights=weights,
        involution=tuple(pi),
        partition=partition,
        evidence=evidence,
        partial=s.partial if partial is None else partial,
        name=s.name if name is None else name,
    )


# ---------------------------------------------------------------- covering forest

def scale_to_integer(s: SandwichCertificate) -> tuple[int, dict]:
    q = 1
    for w in s.weights.values():
        q = lcm(q, Fraction(w).denominator)
    return q, {r: int(Fraction(w) * q) for r, w in s.weights.items()}


@dataclass
class CoveringForest:
    forest: OrientedGraph
    phi: tuple  # forest vertex -> pattern index
    q: int


def build_covering_forest(s: SandwichCertificate) -> CoveringForest:
    """Pattern copy, q*w(C) attached copies of each component, and padding isolated vertices."""
    q, mult = scale_to_integer(s)
    idx = s.pattern_index
    h = len(s.pattern_vertices)
    pattern = s.pattern
    arcs = set(pattern.arcs)
    phi = list(range(h))
    n = h
    pset = set(s.pattern_vertices)
    for comp in s.components():
        m = mult[comp[0]]
        att = _attachments(s.host, pset, comp)
        for _ in range(m):
            local = {x: n + i for i, x in enumerate(comp)}
            for x, y in s.host.arcs:
                if x in local and y in local:
                    arcs.add((local[x], local[y]))
            for u, x, sign in att:
                arcs.add((idx[u], local[x]) if sign == 1 else (local[x], idx[u]))
            phi.extend(idx[s.psi[x]] for x in comp)
            n += len(comp)
    vcov, _ = s.cov_table()
    for v in range(h):
        pad = q - vcov[v] * q
        if pad < 0 or pad.denominator != 1:
            raise CoverDeficit(f"pattern vertex {v} is over-covered")
        for _ in range(int(pad)):
            phi.append(v)
            n += 1
    forest = OrientedGraph(n, frozenset(arcs))
    cf = CoveringForest(forest, tuple(phi), q)
    if not verify_covering_map(forest, cf.phi, pattern, q + 1):
        raise CoverDeficit("covering forest does not have q+1 preimages everywhere")
    return cf


def verify_covering_map(f: OrientedGraph, phi: Sequence[int], h: OrientedGraph, c: int) -> bool:
    """phi is a homomorphism F -> H with exactly c preimages of every vertex and arc."""
    if len(phi) != f.vertex_count:
        return False
    arc_count = {a: 0 for a in h.arcs}
    for x, y in f.arcs:
        key = (phi[x], phi[y])
        if key not in arc_count:
            return False
        arc_count[key] += 1
    vert_count = [0] * h.vertex_count
    for v in phi:
        if not 0 <= v < h.vertex_count:
            return False
        vert_count[v] += 1
    return all(x == c for x in arc_count.values()) and all(x == c for x in vert_count)


@dataclass
class SweepReport:
    hosts: int
    lower_ok: bool
    upper_ok: bool
    conclusion_ok: bool
    first_violation: object = None

    @property
    def passed(self) -> bool:
        return self.lower_ok and self.upper_ok and self.conclusion_ok


def empirical_inequality_sweep(s: SandwichCertificate, n_max: int, n_min: int = 1, chunk: int = 1 << 12) -> SweepReport:
    """On every tournament up to n_max vertices:
    t(H)^(q+1) <= t(F),  t(F) <= 2^-(a(F)-a(H)) t(H),  t(H) <= 2^-a(H)."""
    if n_max > 7:
        raise SizeGuardExceeded("sweep limited to 7 vertices")
    cf = build_covering_forest(s)
    h = s.pattern
    f = cf.forest
    q = cf.q
    vh, ah, vf, af = h.vertex_count, h.arc_count, f.vertex_count, f.arc_count
    report = SweepReport(0, True, True, True)
    for n in range(n_min, n_max + 1):
        total = 1 << (n * (n - 1) // 2)
        for start in range(0, total, chunk):
            stack = adjacency_stack(n, start, min(total, start + chunk))
            hc = batch_hom_counts(h, stack).tolist()
            fc = batch_hom_counts(f, stack).tolist()
            report.hosts += len(hc)
            for i, (x, y) in enumerate(zip(hc, fc)):
                x, y = int(x), int(y)
                low = x ** (q + 1) <= y
                up = y * 2 ** (af - ah) <= x * n ** (vf - vh)
                con = x * 2**ah <= n**vh
                if not (low and up and con):
                    report.lower_ok &= low
                    report.upper_ok &= up
                    report.conclusion_ok &= con
                    if report.first_violation is None:
                        report.first_violation = (n, start + i)
    return report


# ---------------------------------------------------------------- serialization and DOT

def _frac(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def certificate_to_json(s: SandwichCertificate) -> dict:
    pset = set(s.pattern_vertices)
    rest = [v for v in range(s.host.vertex_count) if v not in pset]
    return {
        "name": s.name,
        "vertex_count": s.host.vertex_count,
        "arcs": [list(a) for a in s.host.sorted_arcs()],
        "pattern_vertices": list(s.pattern_vertices),
        "psi": list(s.psi),
        "weights": {str(r): _frac(w) for r, w in sorted(s.weights.items())},
        "partition": None if s.partition is None else [list(c) for c in s.partition],
        "involution": {"domain": rest, "image": [s.involution[v] for v in rest]},
        "evidence": None if s.evidence is None else [evidence_to_json(e) for e in s.evidence],
        "partial": s.partial,
    }


def certificate_from_json(d: dict) -> SandwichCertificate:
    n = int(d["vertex_count"])
    host = OrientedGraph(n, frozenset(tuple(a) for a in d["arcs"]))
    pi = list(range(n))
    for x, y in zip(d["involution"]["domain"], d["involution"]["image"]):
        pi[int(x)] = int(y)
    return SandwichCertificate(
        host=host,
        pattern_vertices=tuple(d["pattern_vertices"]),
        psi=tuple(d["psi"]),
        weights={int(k): Fraction(v) for k, v in d["weights"].items()},
        involution=tuple(pi),
        partition=None if d.get("partition") is None else tuple(tuple(c) for c in d["partition"]),
        evidence=None if d.get("evidence") is None else tuple(evidence_from_json(e) for e in d["evidence"]),
        partial=bool(d.get("partial", False)),
        name=d.get("name", ""),
    )


def dumps(s: SandwichCertificate) -> str:
    return json.dumps(certificate_to_json(s), indent=1, sort_keys=True)


def loads(text: str) -> SandwichCertificate:
    return certificate_from_json(json.loads(text))


def to_dot(s: SandwichCertificate) -> str:
    """Pattern vertices on a row; each component stacked above or below its columns."""
    idx = s.pattern_index
    lines = ["digraph sandwich {", "  node [shape=circle, width=0.25, label=\"\"];"]
    for v, i in idx.items():
        lines.append(f'  n{v} [pos="{i},0!", style=filled, fillcolor=black, xlabel="v{i}"];')
    level = {}
    for k, comp in enumerate(s.components()):
        row = (k // 2 + 1) * (1 if k % 2 == 0 else -1)
        w = _frac(s.weights.get(comp[0], 0))
        for x in comp:
            col = idx[s.psi[x]]
            level[x] = row
            lines.append(f'  n{x} [pos="{col},{row}!", tooltip="w={w}"];')
    for a, b in s.host.sorted_arcs():
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
