"""Expansion of hom(H, A*) into path densities against a skew matrix, and Sturm sign checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .graph_core import (
    NotAPath,
    OrientedGraph,
    build_path,
    components,
    induced,
    path_order,
)
from .hom_engine import DenseMatrix, hom_matrix, random_tournament, skew_part


class NotAPathForest(ValueError):
    pass


class SignViolated(ValueError):
    def __init__(self, witness: Fraction, value: Fraction):
        super().__init__(f"sign claim fails at x = {witness} (value {value})")
        self.witness = witness
        self.value = value


# ---------------------------------------------------------------- polynomials in X_k

class PathMonomialPolynomial:
    """Polynomial in X_k = t(P_{k,k}, U). Keys are sorted tuples of k's; () is the constant."""

    def __init__(self, terms: dict | None = None):
        self.terms: dict[tuple, Fraction] = {}
        for key, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                k = tuple(sorted(key))
                self.terms[k] = self.terms.get(k, Fraction(0)) + c
                if not self.terms[k]:
                    del self.terms[k]

    @classmethod
    def var(cls, k: int) -> "PathMonomialPolynomial":
        return cls({(k,): 1})

    @classmethod
    def const(cls, c) -> "PathMonomialPolynomial":
        return cls({(): c})

    def __add__(self, other):
        other = _as_poly(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return PathMonomialPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return PathMonomialPolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(sorted(k1 + k2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return PathMonomialPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = PathMonomialPolynomial.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, PathMonomialPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, *key) -> Fraction:
        return self.terms.get(tuple(sorted(key)), Fraction(0))

    @property
    def constant(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def variables(self) -> set[int]:
        return {k for key in self.terms for k in key}

    def evaluate(self, values: dict) -> Fraction:
        """Exact value given X_k for every k that appears."""
        total = Fraction(0)
        for key, c in self.terms.items():
            term = c
            for k in key:
                term *= values[k]
            total += term
        return total

    def evaluate_at(self, u: DenseMatrix) -> Fraction:
        return self.evaluate({k: path_density(k, u) for k in self.variables()})

    def to_univariate(self, k: int = 1) -> list[Fraction]:
        """Coefficients (low to high) if the polynomial only involves X_k."""
        if self.variables() - {k}:
            raise ValueError("polynomial involves other variables")
        deg = max((len(key) for key in self.terms), default=0)
        coeffs = [Fraction(0)] * (deg + 1)
        for key, c in self.terms.items():
            coeffs[len(key)] += c
        return coeffs

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for i, key in enumerate(sorted(self.terms, key=lambda kk: (len(kk), kk))):
            c = self.terms[key]
            mono = "*".join(f"t(P_{{{k},{k}}},U)" for k in key)
            a = abs(c)
            coef = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
            body = coef if not key else (mono if a == 1 else f"{coef}*{mono}")
            if i == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    __repr__ = __str__


def _as_poly(x) -> PathMonomialPolynomial:
    if isinstance(x, PathMonomialPolynomial):
        return x
    return PathMonomialPolynomial.const(x)


def path_density(k: int, u: DenseMatrix) -> Fraction:
    """t(P_{k,k}, U)."""
    return hom_matrix(build_path((k, k)), u) / Fraction(u.size ** (2 * k + 1))


def canonical_sign(g: OrientedGraph) -> tuple[int, int]:
    """For a path with 2k arcs: (k, sign) with t(path, U) = sign * t(P_{k,k}, U) for skew U."""
    order = path_order(g)
    m = len(order) - 1
    if m % 2:
        raise ValueError("odd path has no canonical form")
    k = m // 2
    disagree = 0
    for i, (x, y) in enumerate(zip(order, order[1:])):
        forward = (x, y) in g.arcs
        if forward != (i < k):
            disagree += 1
    return k, -1 if disagree % 2 else 1


def expand_pattern(h: OrientedGraph) -> PathMonomialPolynomial:
    """t(H, A*) for A* = U + J/2 as a polynomial in the X_k.

    Sums over all arc subsets S with weight (1/2)^(a - |S|); odd path components vanish.
    """
    for comp in components(h):
        try:
            path_order(induced(h, comp))
        except NotAPath as exc:
            raise NotAPathForest("every component must be an oriented path") from exc
    arcs = h.sorted_arcs()
    a = len(arcs)
    acc: dict[tuple, Fraction] = {}
    for mask in range(1 << a):
        chosen = [arcs[i] for i in range(a) if mask >> i & 1]
        sub = OrientedGraph(h.vertex_count, frozenset(chosen))
        sign = 1
        key = []
        alive = True
        for comp in components(sub):
            if len(comp) == 1:
                continue
            piece = induced(sub, comp)
            if piece.arc_count % 2:
                alive = False
                break
            k, s = canonical_sign(piece)
            sign *= s
            key.append(k)
        if not alive:
            continue
        key_t = tuple(sorted(key))
        acc[key_t] = acc.get(key_t, Fraction(0)) + Fraction(sign, 2 ** (a - len(chosen)))
    return PathMonomialPolynomial(acc)


def sample_skew_sanity(n: int, count: int, seed: int = 0, exhaustive: bool = False) -> dict:
    """Checks the cited inequalities X_k >= 0 (k <= 4), X_1 <= 1/12 and X_1^2 <= X_2 on sampled hosts."""
    from .graph_core import all_tournaments

    hosts = list(all_tournaments(n)) if exhaustive else [random_tournament(n, seed + i) for i in range(count)]
    violations = []
    for t in hosts:
        u = skew_part(t)
        xs = {k: path_density(k, u) for k in (1, 2, 3, 4)}
        if any(v < 0 for v in xs.values()) or xs[1] > Fraction(1, 12) or xs[1] ** 2 > xs[2]:
            violations.append((t.bits, xs))
    return {"hosts": len(hosts), "violations": violations, "ok": not violations}


# ---------------------------------------------------------------- univariate polynomials

def _trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_eval(p: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _deriv(p: Sequence) -> list:
    return _trim([i * p[i] for i in range(1, len(p))])


def _divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a = [Fraction(x) for x in _trim(a)]
    b = [Fraction(x) for x in _trim(b)]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / b[-1]
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        a = _trim(a)
    return _trim(q), a


def _monic(p: list) -> list:
    p = _trim(p)
    return [c / p[-1] for c in p] if p else p


def _gcd(a: list, b: list) -> list:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def odd_multiplicity_part(p: Sequence) -> list:
    """Product of the square-free factors of odd multiplicity (Yun's algorithm), monic."""
    p = _monic([Fraction(c) for c in p])
    if len(p) <= 1:
        return [Fraction(1)]
    d = _deriv(p)
    a = _gcd(p, d)
    b = _divmod(p, a)[0]
    c = _divmod(d, a)[0]
    dd = _trim([x - y for x, y in _pad(c, _deriv(b))])
    out = [Fraction(1)]
    i = 1
    while len(b) > 1:
        f = _gcd(b, dd)
        if i % 2 == 1:
            out = _mul(out, f)
        b = _divmod(b, f)[0]
        c = _divmod(dd, f)[0]
        dd = _trim([x - y for x, y in _pad(c, _deriv(b))])
        i += 1
    return _monic(out)


def _pad(a, b):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


def _mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _primitive_int(p: Sequence) -> list[int]:
    """Positive rational multiple of p with coprime integer coefficients."""
    p = [Fraction(c) for c in _trim(p)]
    if not p:
        return []
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    return [c // g for c in ints]


def sturm_sequence(p: Sequence) -> list[list[int]]:
    """Sturm chain with integer pseudo-remainders; each step scales by a positive factor only."""
    s0 = _primitive_int(p)
    if not s0:
        return []
    seq = [s0]
    s1 = _primitive_int(_deriv(s0))
    if not s1:
        return seq
    seq.append(s1)
    while True:
        a, b = seq[-2], seq[-1]
        delta = len(a) - len(b)
        scale = abs(b[-1]) ** (delta + 1)
        _, r = _divmod([scale * x for x in a], b)
        assert all(x.denominator == 1 for x in r)
        r = _primitive_int([-x for x in r])
        if not r:
            break
        seq.append(r)
    return seq


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_variations(seq: list[list[int]], x) -> int:
    signs = [_sign(poly_eval(s, x)) for s in seq]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _strip_root(p: list, r: Fraction) -> list:
    while len(_trim(p)) > 1 and poly_eval(p, r) == 0:
        p = _divmod(p, [-r, Fraction(1)])[0]
    return p


@dataclass
class IntervalSignCertificate:
    polynomial: tuple
    lo: Fraction
    hi: Fraction
    sign: str  # ">=0" or "<=0"
    odd_part: tuple = ()
    variations_lo: int = 0
    variations_hi: int = 0
    value_lo: Fraction = Fraction(0)
    value_hi: Fraction = Fraction(0)
    sample: Fraction | None = None
    sample_value: Fraction = Fraction(0)

    def validate(self) -> bool:
        """Recompute everything from the polynomial and interval."""
        try:
            fresh = _build_certificate(self.polynomial, self.lo, self.hi, self.sign)
        except SignViolated:
            return False
        return fresh == self

    def describe(self) -> str:
        poly = " + ".join(f"({c})x^{i}" for i, c in enumerate(self.polynomial) if c)
        return (
            f"{poly or '0'} {self.sign} on [{self.lo}, {self.hi}]: Sturm variations "
            f"{self.variations_lo} -> {self.variations_hi}, boundary values {self.value_lo}, "
            f"{self.value_hi}, sample p({self.sample}) = {self.sample_value}"
        )


def _violates(value: Fraction, sign: str) -> bool:
    return value < 0 if sign == ">=0" else value > 0


def _find_witness(p, lo, hi, sign, max_depth: int = 40):
    for x in (lo, hi):
        v = poly_eval(p, x)
        if _violates(v, sign):
            return x, v
    for depth in range(1, max_depth + 1):
        steps = 1 << depth
        for i in range(1, steps, 2):
            x = lo + (hi - lo) * Fraction(i, steps)
            v = poly_eval(p, x)
            if _violates(v, sign):
                return x, v
    return None


def _build_certificate(p, lo, hi, sign) -> IntervalSignCertificate:
    p = tuple(Fraction(c) for c in _trim(p))
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if sign not in (">=0", "<=0"):
        raise ValueError("sign must be '>=0' or '<=0'")
    cert = IntervalSignCertificate(p, lo, hi, sign, value_lo=poly_eval(p, lo), value_hi=poly_eval(p, hi))
    if not p:
        cert.sample = (lo + hi) / 2
        return cert
    odd = odd_multiplicity_part(p)
    odd = _strip_root(_strip_root(odd, lo), hi)
    cert.odd_part = tuple(odd)
    seq = sturm_sequence(odd)
    cert.variations_lo = sign_variations(seq, lo) if seq else 0
    cert.variations_hi = sign_variations(seq, hi) if seq else 0
    crossing = cert.variations_lo - cert.variations_hi
    # a nonzero sample point in the open interval fixes the sign everywhere
    sample = None
    for depth in range(1, 64):
        steps = 1 << depth
        for i in range(1, steps, 2):
            x = lo + (hi - lo) * Fraction(i, steps)
            if poly_eval(p, x) != 0:
                sample = x
                break
        if sample is not None:
            break
    cert.sample = sample
    cert.sample_value = poly_eval(p, sample)
    if crossing or _violates(cert.sample_value, sign):
        w = _find_witness(p, lo, hi, sign)
        if w is None:
            w = (sample, cert.sample_value)
        raise SignViolated(*w)
    return cert


def certify_sign(p: Sequence, lo, hi, sign: str) -> IntervalSignCertificate:
    """Certify p >= 0 (or <= 0) on [lo, hi]; raises SignViolated with a rational witness."""
    return _build_certificate(p, lo, hi, sign)


# ---------------------------------------------------------------- proof objects

X = PathMonomialPolynomial.var

# rational lower bound for pi; 1/pi^2 < 13/128 follows from (314159/100000)^2 > 128/13
PI_LOWER = Fraction(314159, 100000)
INV_PI_SQ_UPPER = Fraction(13, 128)

AXIOMS = {
    "polynomial": "If p(x) = sum_{k>=1} a_k x^k >= 0 on [0, 1/pi^2] then sum a_k t(P_{k,k},U) >= 0 "
    "for skew-symmetric U with entries in [-1/2,1/2] (Grzesik et al.)",
    "P11_squared_le_P22": "t(P_{1,1},U)^2 <= t(P_{2,2},U) for skew-symmetric U (Grzesik et al.)",
    "P11_range": "0 <= t(P_{1,1},U) <= 1/12 for skew-symmetric U with entries in [-1/2,1/2] (Grzesik et al.)",
    "single_arc_flip": "Reversing one arc negates t(H,U) for skew-symmetric U",
    "odd_path_vanishes": "t(P,U) = 0 for an oriented path P with an odd number of arcs",
}


@dataclass
class ProofStep:
    """One nonpositive part of the split.

    kind "polynomial": the part is sum a_k X_k and the certificate polynomial is
    +-sum a_k x^k on an interval reaching past 1/pi^2.
    kind "range": the part is at most ``bound(X_1)`` (the gap is a product of
    nonpositive factors) and the certificate shows bound <= 0 on [0, 1/12].
    """

    name: str
    part: PathMonomialPolynomial
    claim: str
    certificate: IntervalSignCertificate
    axioms: tuple
    kind: str = "polynomial"
    bound: PathMonomialPolynomial | None = None
    gap: PathMonomialPolynomial | None = None

    def check(self) -> bool:
        cert = self.certificate
        if not cert.validate() or cert.lo != 0:
            return False
        if self.kind == "polynomial":
            coeffs = _linear_coeffs(self.part)
            if coeffs[0] != 0:
                return False
            if cert.sign == ">=0":
                coeffs = [-c for c in coeffs]
            return tuple(_trim(coeffs)) == cert.polynomial and cert.hi >= INV_PI_SQ_UPPER
        if self.kind == "range":
            return (
                self.part - self.bound == self.gap
                and tuple(_trim(self.bound.to_univariate(1))) == cert.polynomial
                and cert.sign == "<=0"
                and cert.hi == Fraction(1, 12)
            )
        return False


@dataclass
class BoundProof:
    pattern_blocks: tuple
    expansion: PathMonomialPolynomial
    steps: list
    constant: Fraction
    conclusion_bound: Fraction
    axioms_used: tuple = field(default_factory=tuple)

    def check(self) -> bool:
        """Replay the expansion, the split and every certificate exactly."""
        h = build_path(self.pattern_blocks)
        if expand_pattern(h) != self.expansion:
            return False
        total = PathMonomialPolynomial.const(self.constant)
        for step in self.steps:
            if not step.check():
                return False
            total = total + step.part
        if total != self.expansion:
            return False
        # 1/pi^2 < 13/128 since pi > 314159/100000
        if PI_LOWER**2 <= 1 / INV_PI_SQ_UPPER:
            return False
        return self.constant == self.conclusion_bound == Fraction(1, 2 ** h.arc_count)

    def to_text(self) -> str:
        lines = [f"pattern: P_{self.pattern_blocks}", f"expansion: t(H,A*) = {self.expansion}"]
        lines.append("split: " + " + ".join(s.name for s in self.steps) + f" + {self.constant}")
        for s in self.steps:
            lines.append(f"  {s.name} = {s.part}")
            lines.append(f"    claim: {s.claim}")
            lines.append(f"    certificate: {s.certificate.describe()}")
            if s.gap is not None:
                lines.append(f"    {s.name} - bound = {s.gap}")
            lines.append(f"    uses: {', '.join(s.axioms)}")
        lines.append("cited axioms:")
        for a in self.axioms_used:
            lines.append(f"  [{a}] {AXIOMS[a]}")
        a = build_path(self.pattern_blocks).arc_count
        lines.append(f"conclusion: t(H,T) <= t(H,A*) <= {self.conclusion_bound} = 2^-{a}")
        return "\n".join(lines)


def _linear_coeffs(part: PathMonomialPolynomial) -> list[Fraction]:
    """Univariate polynomial sum a_k x^k for a part that is linear in the X_k."""
    if any(len(k) != 1 for k in part.terms):
        raise ValueError("part must be a linear combination of X_k")
    deg = max(k[0] for k in part.terms)
    coeffs = [Fraction(0)] * (deg + 1)
    for (k,), c in part.terms.items():
        coeffs[k] = c
    return coeffs


def certified_bound_p1331() -> BoundProof:
    expansion = expand_pattern(build_path((1, 3, 3, 1)))
    f = X(4) + Fraction(3, 4) * X(3) - Fraction(3, 16) * X(2) - Fraction(35, 6336) * X(1)
    g = (
        -Fraction(1, 2) * X(1) * X(2)
        + Fraction(1, 4) * X(1) ** 3
        + Fraction(1, 8) * X(1) ** 2
        - Fraction(1, 99) * X(1)
    )
    q = -Fraction(1, 4) * X(1) ** 3 + Fraction(1, 8) * X(1) ** 2 - Fraction(1, 99) * X(1)
    p_cert = certify_sign(_linear_coeffs(f), 0, INV_PI_SQ_UPPER, "<=0")
    q_cert = certify_sign(q.to_univariate(1), 0, Fraction(1, 12), "<=0")
    # g - q = -(1/2) X1 (X2 - X1^2) <= 0 because X1 >= 0 and X1^2 <= X2
    gap = -Fraction(1, 2) * X(1) * (X(2) - X(1) ** 2)
    steps = [
        ProofStep("f", f, "f <= 0", p_cert, ("polynomial",)),
        ProofStep(
            "g", g, "g <= q(t(P_{1,1},U)) <= 0", q_cert, ("P11_squared_le_P22", "P11_range"),
            kind="range", bound=q, gap=gap,
        ),
    ]
    return BoundProof(
        pattern_blocks=(1, 3, 3, 1),
        expansion=expansion,
        steps=steps,
        constant=Fraction(1, 256),
        conclusion_bound=Fraction(1, 256),
        axioms_used=("polynomial", "P11_squared_le_P22", "P11_range", "single_arc_flip", "odd_path_vanishes"),
    )


def certified_bound_p22() -> BoundProof:
    expansion = expand_pattern(build_path((2, 2)))
    part = X(2) - Fraction(1, 4) * X(1)
    # (1/4)x - x^2 >= 0 on [0, 1/4], which contains [0, 1/pi^2]
    cert = certify_sign([Fraction(-c) for c in _linear_coeffs(part)], 0, Fraction(1, 4), ">=0")
    return BoundProof(
        pattern_blocks=(2, 2),
        expansion=expansion,
        steps=[ProofStep("h", part, "-h >= 0 hence h <= 0", cert, ("polynomial",))],
        constant=Fraction(1, 16),
        conclusion_bound=Fraction(1, 16),
        axioms_used=("polynomial", "single_arc_flip", "odd_path_vanishes"),
    )
