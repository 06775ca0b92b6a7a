"""Command-line interface. Exit status is 0 exactly when every check performed passed."""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import atlas, lp_search
from .graph_core import (
    OrientedGraph,
    SpiderSpec,
    Tournament,
    build_path,
    tournament_from_text,
)
from .hom_engine import anti_sidorenko_scan, enumerate_tournaments, hom_density, random_tournament
from .sandwich_core import (
    NAMED_PATTERNS,
    EvidenceRegistry,
    dumps,
    empirical_inequality_sweep,
    evidence_to_json,
    loads,
    scale_to_integer,
    to_dot,
    verify,
)
from .skew_algebra import certified_bound_p1331, certified_bound_p22, expand_pattern


class UsageError(ValueError):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def parse_pattern(spec: str) -> OrientedGraph:
    """'2,4,3' (path blocks), 'spider:2,3,4', 'named:P22' or a certificate file."""
    if spec.startswith("spider:"):
        return SpiderSpec(_ints(spec[7:])).build()
    if spec.startswith("named:"):
        name = spec[6:]
        if name not in NAMED_PATTERNS:
            raise UsageError(f"unknown named pattern {name!r}; known: {', '.join(sorted(NAMED_PATTERNS))}")
        return NAMED_PATTERNS[name]()
    if os.path.exists(spec):
        with open(spec) as fh:
            return loads(fh.read()).pattern
    blocks = _ints(spec)
    if not blocks or any(b < 0 for b in blocks):
        raise UsageError(f"bad pattern {spec!r}")
    return build_path(blocks)


def parse_hosts(spec: str):
    """'enum:n', 'rand:n:count:seed', 'bits:n:b' or a tournament file. Returns (kind, data)."""
    if spec.startswith("enum:"):
        n = int(spec[5:])
        return "enum", n
    if spec.startswith("rand:"):
        parts = spec.split(":")
        if len(parts) != 4:
            raise UsageError("random hosts are written rand:n:count:seed")
        n, count, seed = (int(x) for x in parts[1:])
        if n < 1 or count < 1:
            raise UsageError("rand needs n >= 1 and count >= 1")
        return "rand", (n, count, seed)
    if spec.startswith("bits:"):
        parts = spec.split(":")
        return "list", [Tournament.from_bits(int(parts[1]), int(parts[2]))]
    if os.path.exists(spec):
        with open(spec) as fh:
            return "list", [tournament_from_text(fh.read())]
    raise UsageError(f"bad host source {spec!r}")


def _write(path: str | None, text: str) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)


def _frac(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- subcommands

def cmd_density(args) -> int:
    h = parse_pattern(args.pattern)
    kind, data = parse_hosts(args.host)
    if kind == "enum":
        hosts = list(enumerate_tournaments(data))
    elif kind == "rand":
        n, count, seed = data
        hosts = [random_tournament(n, seed + i) for i in range(count)]
    else:
        hosts = data
    bound = Fraction(1, 2**h.arc_count)
    ok = True
    best = None
    for t in hosts:
        d = hom_density(h, t)
        ok &= d <= bound
        if best is None or d > best[0]:
            best = (d, t)
        if len(hosts) <= 64:
            print(f"n={t.vertex_count} bits={t.bits} t={_frac(d)}")
    print(f"max {_frac(best[0])} bound {_frac(bound)} verdict {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_scan(args) -> int:
    h = parse_pattern(args.pattern)
    kind, data = parse_hosts(args.host)
    if kind == "enum":
        rep = anti_sidorenko_scan(h, data, n_min=args.n_min, workers=args.workers)
    elif kind == "rand":
        n, count, seed = data
        rep = anti_sidorenko_scan(h, n, mode="random", count=count, seed=seed)
    else:
        raise UsageError("scan needs enum: or rand: hosts")
    print(
        f"max {_frac(rep.max_density)} at n={rep.argmax_n} bits={rep.argmax_bits} "
        f"bound {_frac(rep.bound)} hosts {rep.hosts_scanned} verdict {'PASS' if rep.verdict else 'FAIL'}"
    )
    return 0 if rep.verdict else 1


def _registry(args) -> EvidenceRegistry:
    return EvidenceRegistry(allow_external=getattr(args, "allow_external", False))


def _report(cert, args) -> int:
    rep = verify(cert, _registry(args))
    print(f"certificate {cert.name or '(unnamed)'}: pattern {cert.pattern.vertex_count} vertices, "
          f"{cert.pattern.arc_count} arcs, host {cert.host.vertex_count} vertices, partial={cert.partial}")
    print(rep)
    ok = rep.passed
    if ok and getattr(args, "empirical_nmax", 0):
        if cert.partial:
            print("empirical sweep skipped: certificate is partial")
        else:
            sw = empirical_inequality_sweep(cert, args.empirical_nmax)
            print(f"empirical sweep over {sw.hosts} hosts: lower={sw.lower_ok} upper={sw.upper_ok} "
                  f"bound={sw.conclusion_ok}")
            ok &= sw.passed
    print("verdict", "PASS" if ok else "FAIL")
    return 0 if ok else 1


def _emit(cert, args) -> None:
    _write(getattr(args, "out", None), dumps(cert) + "\n")
    _write(getattr(args, "dot", None), to_dot(cert))


def cmd_verify(args) -> int:
    with open(args.certificate) as fh:
        text = fh.read()
    cert = loads(text)
    return _report(cert, args)


def cmd_atlas(args) -> int:
    entries = atlas.named_constructions(k_max=args.k_max, t_max=args.t_max, a_values=_ints(args.a_values))
    if args.id:
        entries = [e for e in entries if e.id == args.id] or [atlas.construction(args.id)]
    ok = True
    for e in entries:
        cert = e.build()
        rep = verify(cert)
        bad = e.audit(cert)
        q, _ = scale_to_integer(cert)
        params = ",".join(f"{k}={v}" for k, v in e.params.items()) or "-"
        status = "PASS" if rep.passed and not bad else "FAIL"
        ok &= status == "PASS"
        print(f"{e.id:<10} {params:<6} pattern v={cert.pattern.vertex_count} a={cert.pattern.arc_count} "
              f"components={len(cert.components())} q={q} partial={cert.partial} {status}")
        for name, want, got in bad:
            print(f"    {name}: expected {want}, computed {got}")
        if args.id:
            _emit(cert, args)
    return 0 if ok else 1


def cmd_compose(args) -> int:
    cert = atlas.theorem_0mod4(_ints(args.blocks))
    _emit(cert, args)
    return _report(cert, args)


def cmd_coverhalf(args) -> int:
    res = atlas.cover_half(args.k, args.a)
    print(f"k={res.k} a={res.a} blocks={[n * d for n, d in res.blocks]} ell={res.ell} "
          f"cov(v_a)={_frac(res.distinguished_cov)}")
    print("steps:", "; ".join(res.steps))
    _emit(res.certificate, args)
    code = _report(res.certificate, args)
    if res.distinguished_cov > Fraction(1, 2):
        print("distinguished vertex cov exceeds 1/2")
        return 1
    return code


def cmd_spider(args) -> int:
    legs = _ints(args.legs)
    if len(legs) != 3:
        raise UsageError("a 3-spider needs exactly three legs")
    res = atlas.spider_certificate(*legs)
    if res.certificate is None:
        print(f"legs {legs}: evidence {evidence_to_json(res.evidence)}")
        return 0
    print("trace:", "; ".join(res.trace))
    _emit(res.certificate, args)
    return _report(res.certificate, args)


def cmd_twoblocks(args) -> int:
    st = atlas.two_blocks_status(args.a, args.b)
    print(f"P_{{{args.a},{args.b}}}: {st.kind}; evidence {evidence_to_json(st.evidence)}")
    for need in st.needs:
        print("  uses", need)
    print("verdict", "PASS" if st.valid else "FAIL")
    return 0 if st.valid else 1


def cmd_expand(args) -> int:
    h = parse_pattern(args.pattern)
    poly = expand_pattern(h)
    print(f"t(H, A*) = {poly}")
    ok = True
    if args.proofs:
        for proof in (certified_bound_p1331(), certified_bound_p22()):
            print(proof.to_text())
            good = proof.check()
            print("proof check", "PASS" if good else "FAIL")
            ok &= good
    return 0 if ok else 1


def cmd_search(args) -> int:
    h = parse_pattern(args.pattern)
    res = lp_search.search(h, max_arcs=args.max_arcs, shape_filter=args.shapes, cap=args.cap)
    print(res.summary())
    if res.certificate is not None:
        _emit(res.certificate, args)
        return _report(res.certificate, args)
    return 0 if args.expect_infeasible else 1


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tourney-sandwich", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def emitting(sp):
        sp.add_argument("--out", help="write the certificate as JSON")
        sp.add_argument("--dot", help="write a DOT drawing")
        sp.add_argument("--empirical-nmax", type=int, default=0, help="also sweep all tournaments up to n")
        sp.add_argument("--allow-external", action="store_true", help="accept External evidence")

    s = sub.add_parser("density", help="exact t(H, T) on given hosts")
    s.add_argument("--pattern", required=True)
    s.add_argument("--host", required=True)
    s.set_defaults(func=cmd_density)

    s = sub.add_parser("scan", help="maximum density against 2^-a(H)")
    s.add_argument("--pattern", required=True)
    s.add_argument("--host", required=True, help="enum:n or rand:n:count:seed")
    s.add_argument("--n-min", type=int, default=1)
    s.add_argument("--workers", type=int, default=int(os.environ.get("TOURNEY_SANDWICH_THREADS", "1")))
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("verify", help="check a certificate file")
    s.add_argument("certificate")
    s.add_argument("--empirical-nmax", type=int, default=0)
    s.add_argument("--allow-external", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("atlas", help="list or emit named constructions")
    s.add_argument("--id")
    s.add_argument("--k-max", type=int, default=10)
    s.add_argument("--t-max", type=int, default=4)
    s.add_argument("--a-values", default="6,10,14")
    s.add_argument("--out")
    s.add_argument("--dot")
    s.set_defaults(func=cmd_atlas)

    s = sub.add_parser("compose", help="sandwich for a path with internal blocks 0 mod 4")
    s.add_argument("--blocks", required=True)
    emitting(s)
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("coverhalf", help="path sandwich with cov(v_a) <= 1/2")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--a", type=int, required=True)
    emitting(s)
    s.set_defaults(func=cmd_coverhalf)

    s = sub.add_parser("spider", help="sandwich for an oriented 3-spider")
    s.add_argument("--legs", required=True)
    emitting(s)
    s.set_defaults(func=cmd_spider)

    s = sub.add_parser("twoblocks", help="status of the two-block path P_{a,b}")
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.set_defaults(func=cmd_twoblocks)

    s = sub.add_parser("expand", help="path-monomial expansion of t(H, A*)")
    s.add_argument("--pattern", required=True)
    s.add_argument("--proofs", action="store_true", help="also print and check the two bound proofs")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("search", help="find a sandwich by exact linear feasibility")
    s.add_argument("--pattern", required=True)
    s.add_argument("--max-arcs", type=int, default=2)
    s.add_argument("--shapes", default="all", choices=sorted(lp_search.SHAPE_FILTERS))
    s.add_argument("--cap", type=int, default=20000)
    s.add_argument("--expect-infeasible", action="store_true", help="exit 0 when no sandwich exists")
    emitting(s)
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
