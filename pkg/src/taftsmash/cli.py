"""Command-line front end.

Exit codes: 0 when a decision/report was computed (including negative
verdicts), 1 on invalid input, 2 when a scale guard refused the run.
Root-of-unity flags are exponents of the canonical zeta; "N/2" style
fractions of the ambient order are accepted, and --beta/--sigma are
conveniences for the scalars +1/-1.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .cyclofield import CyclotomicField, ambient_order
from .errors import InvalidInput, MalformedInput, ScaleGuardExceeded
from .hopf import verify_hopf, finhopf_to_json, finhopf_from_json
from .builders import (TaftSpec, MetacyclicSpec, SmashSpec, build_taft,
                       build_group_algebra, build_smash_presentation)
from .pairsearch import SearchContext, run_census, DEFAULT_MAX_CANDIDATES
from .classify import (dihedral_smash_spec, are_isomorphic, build_witness_map,
                       oracle_isomorphic, classify, predicted_class_count,
                       ORACLE_DEFAULT_MAX)


class _Parser(argparse.ArgumentParser):
    """argparse parser whose errors surface as InvalidInput (exit code 1)."""

    def error(self, message):
        raise InvalidInput(message)


def parse_exponent(text: str, N: int) -> int:
    """An exponent of zeta: a plain integer, or 'N/d' for the canonical
    primitive d-th root."""
    text = text.strip()
    if text.upper().startswith("N/"):
        try:
            d = int(text[2:])
        except ValueError as exc:
            raise InvalidInput(f"malformed exponent {text!r}") from exc
        if d <= 0 or N % d:
            raise InvalidInput(f"exponent {text!r}: {d} does not divide N={N}")
        return N // d
    try:
        return int(text) % N
    except ValueError as exc:
        raise InvalidInput(f"malformed exponent {text!r}") from exc


def parse_sign_alias(text: str, N: int) -> int:
    if text.strip() in {"1", "+1"}:
        return 0
    if text.strip() == "-1":
        if N % 2:
            raise InvalidInput(f"-1 is not a root of unity of order dividing {N}")
        return N // 2
    raise InvalidInput(f"sign alias must be 1 or -1, got {text!r}")


def _resolve_exp(exp_text: str | None, sign_text: str | None, N: int,
                 flag: str, default: int | None = None) -> int:
    if exp_text is not None and sign_text is not None:
        raise InvalidInput(f"give either --{flag}-exp or --{flag}, not both")
    if exp_text is not None:
        return parse_exponent(exp_text, N)
    if sign_text is not None:
        return parse_sign_alias(sign_text, N)
    if default is None:
        raise InvalidInput(f"missing required flag --{flag}-exp (or --{flag})")
    return default


def _emit(report: dict, args, table_lines: list[str]) -> None:
    if args.format == "json":
        text = json.dumps(report, sort_keys=True, indent=2)
    else:
        text = "\n".join(table_lines)
    print(text)


def _write_out(payload: dict, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)


def _build_algebra(args):
    """Construct the requested algebra; returns (FinHopf, display name)."""
    if args.target == "taft":
        if args.m is None:
            raise InvalidInput("build taft requires --m")
        N = ambient_order(args.m)
        spec = TaftSpec(m=args.m, q_exp=(
            parse_exponent(args.q_exp, N) if args.q_exp is not None else None))
        field = CyclotomicField(N)
        return build_taft(spec, field), f"T_{args.m ** 2}(q)"
    if args.target == "group":
        for flag in ("l", "n", "k"):
            if getattr(args, flag) is None:
                raise InvalidInput(f"build group requires --{flag}")
        spec = MetacyclicSpec(l=args.l, n=args.n, k=args.k)
        return build_group_algebra(spec), f"K[D^{args.k}_({args.l}.{args.n})]"
    # smash
    for flag in ("m", "l", "n", "k"):
        if getattr(args, flag) is None:
            raise InvalidInput(f"build smash requires --{flag}")
    N = ambient_order(args.m, args.l, args.n)
    beta_exp = _resolve_exp(args.beta_exp, args.beta, N, "beta")
    sigma_exp = _resolve_exp(args.sigma_exp, args.sigma, N, "sigma")
    q_exp = parse_exponent(args.q_exp, N) if args.q_exp is not None else None
    spec = SmashSpec(taft=TaftSpec(m=args.m, q_exp=q_exp),
                     group=MetacyclicSpec(l=args.l, n=args.n, k=args.k),
                     beta_exp=beta_exp, sigma_exp=sigma_exp)
    field = CyclotomicField(N)
    spec.validate(field)
    return build_smash_presentation(spec, field), spec.display_name()


def cmd_build(args) -> int:
    alg, name = _build_algebra(args)
    payload = finhopf_to_json(alg)
    _write_out(payload, args.out)
    report = {"name": name, "dim": alg.dim, "N": alg.field.n,
              "out": args.out}
    lines = [f"built {name}: dim {alg.dim} over Q(zeta_{alg.field.n})"]
    if args.out:
        lines.append(f"wrote {args.out}")
    _emit(report, args, lines)
    return 0


def cmd_export(args) -> int:
    if not args.out:
        raise InvalidInput("export requires --out")
    return cmd_build(args)


def cmd_verify(args) -> int:
    with open(args.infile) as fh:
        data = json.load(fh)
    alg = finhopf_from_json(data)
    rep = verify_hopf(alg)
    report = {"dim": alg.dim, "N": alg.field.n,
              "passed": rep.passed_count, "total": 6,
              "failures": rep.failures}
    lines = [f"{rep.passed_count}/6 axiom suites pass"]
    lines += [f"FAIL: {f}" for f in rep.failures]
    _emit(report, args, lines)
    return 0


def cmd_matched_pairs(args) -> int:
    if args.m is None or args.l is None or args.n is None or args.k is None:
        raise InvalidInput("matched-pairs requires --m --l --n --k")
    N = ambient_order(args.m, args.l, args.n)
    q_exp = parse_exponent(args.q_exp, N) if args.q_exp is not None else None
    ctx = SearchContext(MetacyclicSpec(l=args.l, n=args.n, k=args.k),
                        TaftSpec(m=args.m, q_exp=q_exp),
                        pool_order=args.pool_order)
    bound = args.max_candidates
    if bound is None:
        bound = int(os.environ.get("HOPF_MAX_CANDIDATES",
                                   DEFAULT_MAX_CANDIDATES))
    res = run_census(ctx, max_candidates=bound)
    report = {"N": ctx.field.n, "candidates": res.candidate_total,
              "survivors": [list(p) for p in res.survivors],
              "count": res.count, "expected": res.expected_count,
              "match": res.count == res.expected_count}
    lines = [f"searched {res.candidate_total} candidates over Q(zeta_{ctx.field.n})",
             "beta_exp  sigma_exp"]
    lines += [f"{b:>8}  {s:>9}" for b, s in res.survivors]
    lines.append(f"{res.count} survivors; l*gcd(n,k-1) = {res.expected_count}"
                 f" -> {'match' if report['match'] else 'MISMATCH'}")
    _emit(report, args, lines)
    return 0


def _parse_pair(text: str, N: int) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise InvalidInput(f"parameter pair must be 'beta,sigma', got {text!r}")

    def one(p: str) -> int:
        p = p.strip()
        if p in {"1", "+1", "-1"}:
            return parse_sign_alias(p, N)
        return parse_exponent(p, N)

    return one(parts[0]), one(parts[1])


def cmd_isomorphic(args) -> int:
    if args.m is None or args.n is None:
        raise InvalidInput("isomorphic requires --m and --n")
    N = math.lcm(2, args.m, args.n)
    field = CyclotomicField(N)
    q_exp = parse_exponent(args.q_exp, N) if args.q_exp is not None else None
    pa = _parse_pair(args.a, N)
    pb = _parse_pair(args.b, N)
    spec_a = dihedral_smash_spec(args.m, args.n, *pa, q_exp=q_exp)
    spec_b = dihedral_smash_spec(args.m, args.n, *pb, q_exp=q_exp)
    spec_a.validate(field)
    spec_b.validate(field)
    w = are_isomorphic(spec_a, spec_b, field)
    report = {"N": N, "a": list(pa), "b": list(pb),
              "isomorphic": w is not None,
              "witness": None if w is None else
              {"f": w.f, "F": w.F, "s": w.s, "t": w.t}}
    if w is None:
        lines = [f"{spec_a.display_name()} ~ {spec_b.display_name()}: none"]
    else:
        lines = [f"{spec_a.display_name()} ~ {spec_b.display_name()}: "
                 f"witness f={w.f} F={w.F} s={w.s} t={w.t}"]
    if args.oracle:
        phi = oracle_isomorphic(spec_a, spec_b, field,
                                max_candidates=ORACLE_DEFAULT_MAX)
        report["oracle"] = phi is not None
        lines.append(f"oracle: {'isomorphic' if phi is not None else 'none'}")
        lines.append("oracle agrees" if (phi is not None) == (w is not None)
                     else "ORACLE DISAGREES")
    _emit(report, args, lines)
    return 0


def cmd_classify(args) -> int:
    if args.m is None or args.n is None:
        raise InvalidInput("classify requires --m and --n")
    N = math.lcm(2, args.m, args.n)
    field = CyclotomicField(N)
    q_exp = parse_exponent(args.q_exp, N) if args.q_exp is not None else None
    res = classify(args.m, args.n, q_exp=q_exp, field=field)
    predicted = predicted_class_count(args.m, args.n)
    report = {"m": args.m, "n": args.n, "N": N, "q_exp": res.q_exp,
              "classes": [[list(p) for p in cls] for cls in res.classes],
              "count": res.count, "predicted": predicted,
              "match": res.count == predicted}
    lines = [f"(m, n) = ({args.m}, {args.n}), N = {N}:"]
    for idx, cls in enumerate(res.classes, start=1):
        members = ", ".join(f"({b},{s})" for b, s in cls)
        lines.append(f"  class {idx}: {members}")
    lines.append(f"{res.count} classes (predicted {predicted})")
    _emit(report, args, lines)
    return 0


def _parse_range(text: str, flag: str) -> range:
    parts = text.split(":")
    if len(parts) != 2:
        raise InvalidInput(f"--{flag} must be 'lo:hi', got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise InvalidInput(f"malformed range {text!r}") from exc
    if lo > hi:
        raise InvalidInput(f"empty range {text!r}")
    return range(lo, hi + 1)


def cmd_count(args) -> int:
    ms = _parse_range(args.m_range, "m-range")
    ns = _parse_range(args.n_range, "n-range")
    rows = []
    for m in ms:
        for n in ns:
            res = classify(m, n)
            predicted = predicted_class_count(m, n)
            parity = f"m {'even' if m % 2 == 0 else 'odd'}, " \
                     f"n {'even' if n % 2 == 0 else 'odd'}"
            rows.append({"m": m, "n": n, "count": res.count,
                         "predicted": predicted, "parity": parity,
                         "match": res.count == predicted})
    report = {"rows": rows}
    lines = ["  m   n  classes  predicted  parity"]
    for r in rows:
        lines.append(f"{r['m']:>3} {r['n']:>3}  {r['count']:>7}  "
                     f"{r['predicted']:>9}  {r['parity']}"
                     + ("" if r["match"] else "  MISMATCH"))
    _emit(report, args, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="taftsmash",
                     description="Exact construction, verification and "
                                 "classification of Taft-algebra smash products")
    parser.add_argument("--format", choices=["json", "table"], default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_numeric(p, *flags):
        for flag in flags:
            p.add_argument(f"--{flag}", type=int)

    def add_build_flags(p):
        add_numeric(p, "m", "l", "n", "k")
        p.add_argument("--q-exp", dest="q_exp")
        p.add_argument("--beta-exp", dest="beta_exp")
        p.add_argument("--beta")
        p.add_argument("--sigma-exp", dest="sigma_exp")
        p.add_argument("--sigma")
        p.add_argument("--out")

    p_build = sub.add_parser("build", help="construct an algebra")
    p_build.add_argument("target", choices=["taft", "group", "smash"])
    add_build_flags(p_build)
    p_build.set_defaults(func=cmd_build)

    p_export = sub.add_parser("export", help="construct and write JSON")
    p_export.add_argument("target", choices=["taft", "group", "smash"])
    add_build_flags(p_export)
    p_export.set_defaults(func=cmd_export)

    p_verify = sub.add_parser("verify", help="check all Hopf axioms")
    p_verify.add_argument("--in", dest="infile", required=True)
    p_verify.set_defaults(func=cmd_verify)

    p_mp = sub.add_parser("matched-pairs", help="exhaustive action search")
    add_numeric(p_mp, "m", "l", "n", "k")
    p_mp.add_argument("--q-exp", dest="q_exp")
    p_mp.add_argument("--pool-order", dest="pool_order", type=int)
    p_mp.add_argument("--max-candidates", dest="max_candidates", type=int)
    p_mp.set_defaults(func=cmd_matched_pairs)

    p_iso = sub.add_parser("isomorphic", help="decide isomorphism of two "
                                              "dihedral smash products")
    add_numeric(p_iso, "m", "n")
    p_iso.add_argument("--q-exp", dest="q_exp")
    p_iso.add_argument("--a", required=True, metavar="beta,sigma")
    p_iso.add_argument("--b", required=True, metavar="beta,sigma")
    p_iso.add_argument("--oracle", action="store_true")
    p_iso.set_defaults(func=cmd_isomorphic)

    p_cls = sub.add_parser("classify", help="isomorphism classes for (m, n)")
    add_numeric(p_cls, "m", "n")
    p_cls.add_argument("--q-exp", dest="q_exp")
    p_cls.set_defaults(func=cmd_classify)

    p_cnt = sub.add_parser("count", help="class-count table over ranges")
    p_cnt.add_argument("--m-range", dest="m_range", required=True)
    p_cnt.add_argument("--n-range", dest="n_range", required=True)
    p_cnt.set_defaults(func=cmd_count)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except ScaleGuardExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except (InvalidInput, MalformedInput) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
