"""``sylowlab`` command line: analyze, verify, construct-gn, sweep."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .checks import lambda_product
from .constructions import ConstructionError, GnParams, build_gn
from .perm import CapExceeded, PermutationError, save_group
from .subgroups import upper_p_series
from .suite import (
    SUITE_NAMES,
    Job,
    SuiteOptions,
    any_failed,
    catalog_names,
    reports_to_csv,
    reports_to_json,
    reports_to_table,
    resolve_group_spec,
    run_jobs,
)
from .sylow import p_elements, sylow_data
from .util import is_prime, prime_factors

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class StageError(Exception):
    """A failure tagged with the pipeline stage that raised it."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"{stage}: {message}")
        self.stage = stage


def _cap_arg(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("cap must be positive")
    return value


def _prime_arg(text: str) -> int:
    value = int(text)
    if not is_prime(value):
        raise argparse.ArgumentTypeError(f"{value} is not prime")
    return value


def _load(spec: str, cap: int | None):
    try:
        return resolve_group_spec(spec, cap)
    except CapExceeded as exc:
        raise StageError("enumerate", f"{spec}: {exc}") from exc
    except (KeyError, OSError, ValueError, PermutationError, json.JSONDecodeError) as exc:
        raise StageError("load", f"{spec}: {exc}") from exc


def _source(spec: str) -> str:
    if spec.startswith(("catalog:", "file:")):
        return spec
    return "catalog:" + spec


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


# -- analyze --------------------------------------------------------------------


def analyze_prime(G, p: int) -> dict:
    sd = sylow_data(G, p)
    U = len(p_elements(G, p))
    P = len(sd.P)
    ratio = U // P
    profile: dict[int, int] = {}
    for x in sd.P.elements:
        lam = sd.lambda_table[x]
        profile[lam] = profile.get(lam, 0) + 1
    series = upper_p_series(G, p)
    return {
        "p": p,
        "sylow_order": P,
        "n_p": sd.n_p,
        "normalizer_order": sd.normalizer_order,
        "p_elements": U,
        "frobenius_ratio": ratio,
        "p_solvable": series.p_solvable,
        "upper_p_series": [len(T) for T in series.terms],
        "lambda_profile": dict(sorted(profile.items())),
        "ratio_margin": {"lhs": ratio**p, "rhs": sd.n_p ** (p - 1), "holds": ratio**p >= sd.n_p ** (p - 1)},
        "lambda_margin": {
            "lhs": lambda_product(sd) ** p,
            "rhs": sd.n_p**P,
            "holds": lambda_product(sd) ** p <= sd.n_p**P,
        },
    }


def _stringify(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_stringify(v) for v in obj]
    return obj


def _digits(n: int, width: int = 40) -> str:
    s = str(n)
    return s if len(s) <= width else f"{s[:12]}...({len(s)} digits)"


def format_analysis(name: str, order: int, degree: int, rows: list[dict]) -> str:
    lines = [f"group {name}: order {order}, degree {degree}"]
    for r in rows:
        prof = ", ".join(f"{lam}^{mult}" for lam, mult in r["lambda_profile"].items())
        rm, lm = r["ratio_margin"], r["lambda_margin"]
        lines += [
            f"p = {r['p']}",
            f"  |P| = {r['sylow_order']}, n_p = {r['n_p']}, |N_G(P)| = {r['normalizer_order']}",
            f"  |U_p| = {r['p_elements']}, Frobenius ratio = {r['frobenius_ratio']}",
            f"  p-solvable: {'yes' if r['p_solvable'] else 'no'}; upper p-series orders {r['upper_p_series']}",
            f"  lambda profile over P (value^count): {prof}",
            f"  ratio margin:  ratio^p = {_digits(rm['lhs'])} {'>=' if rm['holds'] else '<'} n_p^(p-1) = {_digits(rm['rhs'])}",
            f"  lambda margin: (prod lambda)^p = {_digits(lm['lhs'])} {'<=' if lm['holds'] else '>'} n_p^|P| = {_digits(lm['rhs'])}",
        ]
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    ctx = _load(args.group, args.cap)
    G = ctx.group
    primes = [args.prime] if args.prime else prime_factors(len(G))
    for p in primes:
        if len(G) % p:
            raise StageError("analyze", f"{p} does not divide |G| = {len(G)}")
    rows = [analyze_prime(G, p) for p in primes]
    sys.stdout.write(format_analysis(G.name, len(G), G.degree, rows))
    payload = {"group": G.name, "order": len(G), "degree": G.degree, "primes": rows}
    _write(args.json, json.dumps(_stringify(payload), indent=2, sort_keys=True) + "\n")
    return EXIT_OK


# -- verify / sweep ----------------------------------------------------------------


def _jobs_for(args, suite: str) -> list[Job]:
    opts = SuiteOptions(brute_budget=args.budget)
    if args.group:
        sources = [_source(g) for g in args.group]
    else:
        sources = ["catalog:" + n for n in catalog_names(args.max_order, args.cap)]
    primes = [args.prime] if args.prime else None
    for s in sources:
        _load(s, args.cap)  # fail early with a load-stage message
    return [Job(s, suite, primes, args.cap, opts) for s in sources]


def _emit(args, reports) -> int:
    sys.stdout.write(reports_to_table(reports))
    _write(args.json, reports_to_json(reports))
    _write(args.csv, reports_to_csv(reports))
    return EXIT_FAIL if any_failed(reports) else EXIT_OK


def cmd_verify(args) -> int:
    jobs = _jobs_for(args, args.suite)
    return _emit(args, run_jobs(jobs, args.jobs))


def cmd_sweep(args) -> int:
    jobs = _jobs_for(args, args.suite)
    workers = args.jobs if args.jobs else (os.cpu_count() or 1)
    return _emit(args, run_jobs(jobs, workers))


# -- construct-gn -----------------------------------------------------------------


def _fixed(frac: Fraction, places: int = 6) -> str:
    scaled = frac.numerator * 10**places // frac.denominator
    return f"{scaled // 10**places}.{scaled % 10**places:0{places}d}"


def asymptotic_rows(p: int, q: int, n_max: int) -> list[dict]:
    """Closed-form ratio^p against n_p^(p-1) * q for n = 1..n_max; the quotient tends to 1."""
    rows = []
    for n in range(1, n_max + 1):
        params = GnParams(p, n, q)
        ratio = Fraction(params.predicted_ratio_numerator(), p**n)
        lhs = ratio**p
        rhs = params.predicted_n_p() ** (p - 1) * q
        rows.append({"n": n, "ratio": ratio, "lhs": lhs, "rhs": rhs, "quotient": lhs / rhs})
    return rows


def cmd_construct_gn(args) -> int:
    try:
        params = GnParams(args.p, args.n, args.q)
    except (ValueError, ConstructionError) as exc:
        raise StageError("params", str(exc)) from exc
    lines = [
        f"{params.name}: order {params.order}, degree {params.degree}",
        f"  predicted n_p = {params.predicted_n_p()}",
        f"  predicted lambda(x), x != 1 = {params.predicted_lambda()}",
        f"  predicted ratio = {Fraction(params.predicted_ratio_numerator(), params.p ** params.n)}",
    ]
    G = None
    if args.out or args.compute:
        try:
            G = build_gn(params, cap=args.cap)
        except CapExceeded as exc:
            raise StageError("enumerate", str(exc)) from exc
    if args.compute:
        sd = sylow_data(G, params.p)
        U = len(p_elements(G, params.p))
        lams = sorted({sd.lambda_table[x] for x in sd.P.elements if x != G.identity})
        lines += [
            f"  computed n_p = {sd.n_p}",
            f"  computed lambda(x), x != 1 = {', '.join(map(str, lams))}",
            f"  computed ratio = {Fraction(U, len(sd.P))} (|U_p| = {U})",
        ]
    if args.out:
        save_group(G, args.out)
        lines.append(f"  wrote {args.out}")
    if args.asymptotics:
        lines.append(f"  ratio^p vs n_p^(p-1) * q for p = {params.p}, q = {params.q} (quotient tends to 1):")
        for row in asymptotic_rows(params.p, params.q, max(params.n, 5)):
            lines.append(
                f"    n = {row['n']}: ratio = {row['ratio']}, ratio^p / (n_p^(p-1) q) = {_fixed(row['quotient'])}"
            )
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sylowlab", description="Exact Sylow and p-element statistics for permutation groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--cap", type=_cap_arg, default=None, help="enumeration cap (default: SYLOWLAB_CAP or 200000)")
        sp.add_argument("--json", metavar="PATH", help="write a JSON report")

    an = sub.add_parser("analyze", help="Sylow statistics of one group")
    an.add_argument("source", nargs="?", help="catalog:NAME, file:PATH or a catalog name")
    an.add_argument("--group", dest="group_opt", help="same as the positional argument")
    an.add_argument("--prime", type=_prime_arg)
    common(an)
    an.set_defaults(func=cmd_analyze)

    for name, func, help_text in (
        ("verify", cmd_verify, "run a verification suite"),
        ("sweep", cmd_sweep, "run suites over the catalog in parallel"),
    ):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--group", action="append", help="catalog:NAME or file:PATH; repeatable (default: catalog)")
        sp.add_argument("--prime", type=_prime_arg)
        sp.add_argument("--suite", choices=SUITE_NAMES, default="all")
        sp.add_argument("--max-order", type=int, default=None)
        sp.add_argument("--budget", type=int, default=5_000, help="largest |G| for brute-force subnormalizers")
        sp.add_argument("--jobs", type=int, default=1 if name == "verify" else 0, help="worker processes")
        sp.add_argument("--csv", metavar="PATH", help="write a CSV summary")
        common(sp)
        sp.set_defaults(func=func)

    gn = sub.add_parser("construct-gn", help="build the extremal group G_n(p, n, q)")
    gn.add_argument("--p", type=int, required=True)
    gn.add_argument("--n", type=int, required=True)
    gn.add_argument("--q", type=int, required=True)
    gn.add_argument("--out", metavar="PATH", help="write the group file")
    gn.add_argument("--compute", action="store_true", help="also compute n_p, lambda and the ratio")
    gn.add_argument("--asymptotics", action="store_true", help="show the ratio against its asymptotic bound")
    gn.add_argument("--cap", type=_cap_arg, default=None)
    gn.set_defaults(func=cmd_construct_gn)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "analyze":
        args.group = args.group_opt or args.source
        if not args.group:
            print("sylowlab: analyze needs a group", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except StageError as exc:
        print(f"sylowlab: error in stage {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
