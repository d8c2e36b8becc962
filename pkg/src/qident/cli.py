"""Command-line front end.

Subcommands: ``verify`` (identity verification), ``bijection`` (exhaustive
map checking and worked-example demos), ``eval`` (expression evaluation and
diffing), ``table`` (counting-function cross-checks) and ``list``.

Exit codes: 0 = success/equal, 1 = verified false, 2 = usage or parse error.
JSON goes to stdout with ``--format json``; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import bijections, dsl, identities
from .errors import ParseError, QidentError
from .partitions import DistinctPartition, Partition, PartitionPair, SignedDistinctSet
from .series import mono_str


@dataclass
class RunConfig:
    """Normalized invocation: command, target, parameters and output knobs."""

    command: str
    target: Optional[str] = None
    n: Optional[int] = None
    k: Optional[int] = None
    i: Optional[int] = None
    trunc: int = 200
    weight_cap: int = 30
    fmt: str = "text"
    extra: dict = field(default_factory=dict)


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# Rendering helpers
# ---------------------------------------------------------------------------


def part_str(p: Partition) -> str:
    return "(" + ",".join(str(v) for v in p.parts) + ")"


def set_str(s: SignedDistinctSet) -> str:
    return "{" + ",".join(str(v) for v in s.elements) + "}"


def ferrers(p: Partition, indent: str = "  ") -> str:
    return "\n".join(indent + "* " * v for v in p.parts)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"partition must look like (5,3): {text!r}")
    inner = text[1:-1].strip()
    parts = tuple(int(v) for v in inner.split(",")) if inner else ()
    return Partition(parts)


def parse_signed_set(text: str, n: int) -> SignedDistinctSet:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"signed set must look like {{-2,0,1}}: {text!r}")
    inner = text[1:-1].strip()
    elements = tuple(int(v) for v in inner.split(",")) if inner else ()
    return SignedDistinctSet(elements, n)


def parse_pair(text: str) -> PartitionPair:
    if "|" not in text:
        raise ValueError(f"pair must look like (5,3)|(2,2,1): {text!r}")
    a, b = text.split("|", 1)
    return PartitionPair(parse_partition(a), parse_partition(b))


def _dump_series(ms, fmt) -> None:
    rows = []
    for mono in ms.monomials():
        qs = ms.entries[mono]
        for e, c in sorted(qs.coeffs.items()):
            rows.append((e, mono_str(mono), c))
    rows.sort()
    if fmt == "json":
        print(json.dumps({
            "trunc": ms.trunc,
            "terms": [
                {"monomial": m, "exponent": e, "coeff": c} for e, m, c in rows
            ],
        }))
        return
    if not rows:
        print("0")
    for e, m, c in rows:
        head = f"q^{e}" if m == "1" else f"{m}*q^{e}"
        print(f"{head}: {c}")
    if ms.trunc is not None:
        print(f"(exact below q^{ms.trunc})")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_verify(cfg: RunConfig) -> int:
    params = {}
    if cfg.n is not None:
        params["n"] = cfg.n
    if cfg.k is not None:
        params["k"] = cfg.k
    if cfg.i is not None:
        params["i"] = cfg.i
    report = identities.verify(
        cfg.target,
        params,
        trunc=cfg.trunc,
        comb_cap=cfg.weight_cap,
        include_comb=not cfg.extra.get("no_comb", False),
    )
    if cfg.fmt == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        status = "equal" if report.equal else "MISMATCH"
        print(f"{report.id} {report.params or ''} trunc={report.trunc}: {status}")
        if report.first_mismatch:
            mm = report.first_mismatch
            print(
                f"  first mismatch between {mm.sides[0]} and {mm.sides[1]}"
                f" at {mm.monomial_str()}*q^{mm.exponent}:"
                f" {mm.lhs} != {mm.rhs}"
            )
    return 0 if report.equal else 1


def _demo_phi(cfg: RunConfig) -> int:
    n = cfg.n
    pair = parse_pair(cfg.extra["demo"])
    pair = PartitionPair(DistinctPartition(pair.first.parts), pair.second)
    print(f"input: lambda={part_str(pair.first)} pi={part_str(pair.second)}"
          f" (weight {pair.weight})")
    ell = len(pair.first)
    print(f"number of parts of lambda: {ell}")
    t, nu = bijections.phi(n, pair)
    from .partitions import staircase

    print(f"mu = staircase {part_str(staircase(t))} (t={t})")
    print(f"nu = {part_str(nu)}")
    print(f"output weight: {t * (t + 1) // 2 + nu.weight}")
    if cfg.extra.get("ferrers"):
        print("nu as a diagram:")
        print(ferrers(nu))
    back = bijections.phi_inv(n, (t, nu))
    print(f"inverse check: {part_str(back.first)}|{part_str(back.second)}")
    return 0


def _demo_rho(cfg: RunConfig) -> int:
    n = cfg.n
    lam = parse_signed_set(cfg.extra["demo"], n)
    print(f"input: lambda={set_str(lam)} (weight {lam.weight})")
    t, nu = bijections.rho(n, lam)
    run = list(range(-n, t + 1))
    print(f"t = {t}; mu = run {{{','.join(str(v) for v in run)}}}"
          f" (weight {sum(run)})")
    print(f"nu = {part_str(nu)} (weight {nu.weight})")
    back = bijections.rho_inv(n, (t, nu))
    print(f"inverse check: {set_str(back)}")
    return 0


def _demo_psi(cfg: RunConfig) -> int:
    n = cfg.n
    mu = parse_signed_set(cfg.extra["demo"], n)
    print(f"input: mu={set_str(mu)} (weight {mu.weight})")
    out = bijections.psi(n, mu)
    print(f"psi(mu) = {part_str(out)} (weight {out.weight})")
    print(f"weight law: {mu.weight} = -{n * (n + 1) // 2} + {out.weight}")
    back = bijections.psi_inv(n, out)
    print(f"inverse check: {set_str(back)}")
    return 0


def _demo_tau(cfg: RunConfig) -> int:
    n = cfg.n
    lam = parse_signed_set(cfg.extra["demo"], n)
    print(f"input: lambda={set_str(lam)} (weight {lam.weight})")
    out = bijections.tau(n, lam)
    print(f"tau(lambda) = {set_str(out)} (weight {out.weight})")
    back = bijections.tau_complement(n, out)
    print(f"inverse check: {set_str(back)}")
    return 0


def _demo_durfee(cfg: RunConfig) -> int:
    lam = parse_partition(cfg.extra["demo"])
    print(f"input: lambda={part_str(lam)} (weight {lam.weight},"
          f" Durfee side {lam.durfee_size()})")
    if cfg.extra.get("ferrers"):
        print(ferrers(lam))
    pair = bijections.durfee_split(lam)
    print(f"mu = {part_str(pair.first)}  nu = {part_str(pair.second)}")
    back = bijections.durfee_join(pair)
    print(f"inverse check: {part_str(back)}")
    return 0


def _demo_nu3(cfg: RunConfig) -> int:
    n, k = cfg.n, cfg.k
    pair = parse_pair(cfg.extra["demo"])
    print(f"input: lambda={part_str(pair.first)} pi={part_str(pair.second)}"
          f" (weight {pair.weight})")
    rows = [n] * (n + 1)
    below = []
    for part in pair.second.parts:
        s = (part - 1) // 2
        for i in range(s + 1):
            rows[i] += 1
        if s:
            below.append(s)
        print(f"  split {part} = {s + 1} + {s}: column of height {s + 1},"
              f" row of width {s}")
    nu_star = Partition(tuple(r for r in rows if r) + tuple(below))
    print(f"folded diagram: {part_str(nu_star)}")
    if cfg.extra.get("ferrers"):
        print(ferrers(nu_star))
    out = bijections.nu3_forward(n, k, pair)
    from .partitions import distinct_odd_to_selfconj

    nu_prime = distinct_odd_to_selfconj(out.second)
    print(f"mu = {part_str(out.first)}; self-conjugate residue ="
          f" {part_str(nu_prime)} (Durfee side {nu_prime.durfee_size()})")
    print(f"nu = hooks of residue = {part_str(out.second)}")
    back = bijections.nu3_inverse(n, k, out)
    print(f"inverse check: {part_str(back.first)}|{part_str(back.second)}")
    return 0


_DEMOS = {
    "phi": (_demo_phi, ("n",)),
    "rho": (_demo_rho, ("n",)),
    "psi": (_demo_psi, ("n",)),
    "tau": (_demo_tau, ("n",)),
    "durfee_split": (_demo_durfee, ()),
    "nu3": (_demo_nu3, ("n", "k")),
}


def cmd_bijection(cfg: RunConfig) -> int:
    name = cfg.target
    if name not in bijections.BIJECTION_NAMES:
        return _usage_error(
            f"unknown bijection {name!r}; choose from {bijections.BIJECTION_NAMES}"
        )
    if cfg.extra.get("demo"):
        demo, needed = _DEMOS[name]
        for param in needed:
            if getattr(cfg, param) is None:
                return _usage_error(f"demo of {name} requires --{param}")
        try:
            return demo(cfg)
        except (ValueError, QidentError) as exc:
            return _usage_error(str(exc))
    kwargs = dict(n=cfg.n, k=cfg.k, weight_cap=cfg.weight_cap)
    if cfg.extra.get("max_nk") is not None:
        kwargs["max_nk"] = cfg.extra["max_nk"]
    report = bijections.check_bijection(name, **kwargs)
    ok = report.passed()
    if cfg.fmt == "json":
        print(json.dumps({
            "name": report.name,
            "domain_size": report.domain_size,
            "codomain_size": report.codomain_size,
            "roundtrip_failures": report.roundtrip_failures,
            "weight_violations": report.weight_violations,
            "membership_failures": report.membership_failures,
            "witness": report.witness,
            "pass": ok,
        }))
    else:
        print(
            f"{report.name}: domain {report.domain_size},"
            f" codomain {report.codomain_size},"
            f" roundtrip failures {report.roundtrip_failures},"
            f" weight violations {report.weight_violations},"
            f" membership failures {report.membership_failures}"
            f" -> {'PASS' if ok else 'FAIL'}"
        )
        if report.witness:
            print(f"  witness: {report.witness}")
    return 0 if ok else 1


def cmd_eval(cfg: RunConfig, exprs: list, binds: list) -> int:
    bindings = {}
    for b in binds:
        if "=" not in b:
            return _usage_error(f"--bind needs name=value: {b!r}")
        name, _, value = b.partition("=")
        try:
            bindings[name.strip()] = int(value)
        except ValueError:
            return _usage_error(f"binding value must be an integer: {b!r}")
    try:
        values = [dsl.evaluate(t, bindings, cfg.trunc) for t in exprs]
    except ParseError as exc:
        print(f"parse error at {exc.line}:{exc.col}: {exc.message}", file=sys.stderr)
        return 2
    except QidentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if len(values) == 1:
        _dump_series(values[0], cfg.fmt)
        return 0
    lhs, rhs = values
    mm = lhs.first_mismatch(rhs, cfg.trunc)
    if mm is None:
        bound = min(t for t in (lhs.trunc, rhs.trunc, cfg.trunc) if t is not None)
        if cfg.fmt == "json":
            print(json.dumps({"equal": True, "trunc": bound}))
        else:
            print(f"equal below q^{bound}")
        return 0
    mono, e, lc, rc = mm
    if cfg.fmt == "json":
        print(json.dumps({
            "equal": False,
            "first_mismatch": {
                "monomial": mono_str(mono), "exponent": e, "lhs": lc, "rhs": rc,
            },
        }))
    else:
        print(f"MISMATCH at {mono_str(mono)}*q^{e}: {lc} != {rc}")
    return 1


def cmd_table(cfg: RunConfig) -> int:
    max_n = cfg.extra.get("max_n") or 0
    if max_n < 1:
        return _usage_error("table requires --max-n >= 1")
    series_omega = identities.p_omega_series(max_n + 1)
    series_nu = identities.p_nu_series(max_n + 1)
    rows = []
    ok = True
    for N in range(1, max_n + 1):
        po, pn = identities.p_omega(N), identities.p_nu(N)
        co, cn = series_omega.coeff(N), series_nu.coeff(N)
        agree = po == co and pn == cn
        ok = ok and agree
        rows.append((N, po, co, pn, cn, agree))
    if cfg.fmt == "json":
        print(json.dumps({
            "rows": [
                {"n": N, "p_omega": po, "series_omega": co,
                 "p_nu": pn, "series_nu": cn, "agree": agree}
                for N, po, co, pn, cn, agree in rows
            ],
            "pass": ok,
        }))
    else:
        print(f"{'N':>4} {'p_omega':>8} {'gf':>8} {'p_nu':>8} {'gf':>8}  status")
        for N, po, co, pn, cn, agree in rows:
            print(f"{N:>4} {po:>8} {co:>8} {pn:>8} {cn:>8}  "
                  + ("ok" if agree else "DISAGREE"))
        print("all rows agree" if ok else "DISAGREEMENT found")
    return 0 if ok else 1


def cmd_list(cfg: RunConfig) -> int:
    if cfg.fmt == "json":
        print(json.dumps({
            "identities": list(identities.IDENTITY_IDS),
            "bijections": list(bijections.BIJECTION_NAMES),
        }))
        return 0
    print("identities:")
    for iid in identities.IDENTITY_IDS:
        case = identities.REGISTRY[iid]
        params = ", ".join(case.params) if case.params else "none"
        extra = ""
        if case.comb_builders:
            extra = f"; enumeration sides: {', '.join(case.comb_builders)}"
        print(f"  {iid:<11} params: {params}{extra}")
    print("bijections:")
    for name in bijections.BIJECTION_NAMES:
        print(f"  {name}")
    return 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qident",
        description="Verify q-series identities and partition bijections"
                    " with exact integer arithmetic.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--trunc", type=int, default=200,
                        help="q-truncation order (default 200)")
        sp.add_argument("--cap", type=int, default=30, dest="weight_cap",
                        help="weight cap for enumerations (default 30)")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="verify a registered identity")
    v.add_argument("id")
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--i", type=int)
    v.add_argument("--no-comb", action="store_true",
                   help="skip enumeration-based sides")
    common(v)

    b = sub.add_parser("bijection", help="check or demo a bijection")
    b.add_argument("name")
    b.add_argument("--n", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--max-nk", type=int, dest="max_nk",
                   help="sweep all (n, k) with n+k up to this bound (nu3)")
    b.add_argument("--demo", help="worked example, e.g. \"(5,3)|(2,2,2,1,1)\"")
    b.add_argument("--ferrers", action="store_true",
                   help="draw diagrams in demo mode")
    common(b)

    e = sub.add_parser("eval", help="evaluate one expression or diff two")
    e.add_argument("exprs", nargs="+", metavar="EXPR")
    e.add_argument("--bind", action="append", default=[],
                   metavar="NAME=VALUE")
    common(e)

    t = sub.add_parser("table", help="counting-function cross-check table")
    t.add_argument("--max-n", type=int, dest="max_n", default=10)
    common(t)

    l = sub.add_parser("list", help="list identity ids and bijection names")
    l.add_argument("--format", choices=("text", "json"), default="text")

    return p


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    fmt = getattr(args, "format", "text")
    cfg = RunConfig(
        command=args.command,
        target=getattr(args, "id", None) or getattr(args, "name", None),
        n=getattr(args, "n", None),
        k=getattr(args, "k", None),
        i=getattr(args, "i", None),
        trunc=getattr(args, "trunc", 200),
        weight_cap=getattr(args, "weight_cap", 30),
        fmt=fmt,
    )
    if cfg.trunc < 1:
        return _usage_error("--trunc must be >= 1")
    try:
        if args.command == "verify":
            cfg.extra["no_comb"] = args.no_comb
            return cmd_verify(cfg)
        if args.command == "bijection":
            cfg.extra["demo"] = args.demo
            cfg.extra["ferrers"] = args.ferrers
            cfg.extra["max_nk"] = args.max_nk
            return cmd_bijection(cfg)
        if args.command == "eval":
            if len(args.exprs) > 2:
                return _usage_error("eval takes one or two expressions")
            return cmd_eval(cfg, args.exprs, args.bind)
        if args.command == "table":
            cfg.extra["max_n"] = args.max_n
            return cmd_table(cfg)
        if args.command == "list":
            return cmd_list(cfg)
    except QidentError as exc:
        return _usage_error(str(exc))
    return _usage_error(f"unknown command {args.command!r}")


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
