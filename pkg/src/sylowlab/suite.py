"""Named suites of checks, run over (group, prime) pairs with deterministic output."""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field
from typing import Callable

from .checks import (
    CheckReport,
    Status,
    check_alpha_formula,
    check_amgm_chain,
    check_casolo_a,
    check_casolo_b,
    check_conjecture_lambda,
    check_conjecture_ratio,
    check_frobenius,
    check_gn_closed_forms,
    check_gn_lambda_equality,
    check_lambda_monotone,
    check_lambda_multiplicative,
    check_miller,
    check_navarro_rizo_series,
    check_num_orb_group,
    check_omega_sum,
    check_op_quotient_invariance,
    check_snx,
    check_steinberg,
    normal_subgroup_candidates,
    skipped,
)
from .constructions import CATALOG, CATALOG_BY_NAME, DirectPower, GnParams
from .perm import FiniteGroup, load_group
from .subgroups import normalizer
from .subnormalizer import BudgetExceeded, IdentityViolation
from .sylow import sylow_data
from .util import prime_factors

SUITES: dict[str, tuple[str, ...]] = {
    "frobenius": ("frobenius", "miller", "steinberg"),
    "omega-sum": ("omega-sum",),
    "casolo-a": ("casolo-a",),
    "casolo-b": ("casolo-b",),
    "navarro-rizo": ("navarro-rizo",),
    "alpha": ("alpha",),
    "monotone": ("monotone",),
    "snx": ("snx",),
    "lambda-mult": ("lambda-mult",),
    "num-orb": ("num-orb",),
    "conjectures": ("conjecture-ratio", "conjecture-lambda", "amgm-chain"),
    "gn-forms": ("gn-forms", "gn-lambda-equality"),
    "op-invariance": ("op-invariance",),
}
SUITE_NAMES = ("all",) + tuple(SUITES)

_GN_NAME = re.compile(r"^G_n\((\d+),(\d+),(\d+)\)$")


@dataclass
class SuiteOptions:
    brute_budget: int = 5_000
    max_noncyclic: int = 50
    max_fixture_subgroups: int = 6  # normal subgroups tried per group by snx


@dataclass
class GroupContext:
    """A group plus the catalog metadata some checks need."""

    group: FiniteGroup
    lie_primes: tuple[int, ...] = ()
    gn: GnParams | None = None
    direct_power: DirectPower | None = None

    @property
    def name(self) -> str:
        return self.group.name


def gn_params_from_name(name: str) -> GnParams | None:
    m = _GN_NAME.match(name.replace(" ", ""))
    return GnParams(*map(int, m.groups())) if m else None


def context_from_catalog(name: str, cap: int | None = None) -> GroupContext:
    entry = CATALOG_BY_NAME[name]
    built = entry.build(cap)
    if isinstance(built, DirectPower):
        return GroupContext(built.group, entry.lie_primes, entry.gn, built)
    return GroupContext(built, entry.lie_primes, entry.gn)


def context_from_group(G: FiniteGroup) -> GroupContext:
    return GroupContext(G, gn=gn_params_from_name(G.name))


def resolve_group_spec(spec: str, cap: int | None = None) -> GroupContext:
    """``catalog:NAME``, ``file:PATH`` or a bare catalog name."""
    if spec.startswith("file:"):
        return context_from_group(load_group(spec[5:], cap=cap))
    name = spec[8:] if spec.startswith("catalog:") else spec
    if name not in CATALOG_BY_NAME:
        raise KeyError(f"unknown catalog group {name!r}")
    return context_from_catalog(name, cap)


def catalog_names(max_order: int | None = None, cap: int | None = None) -> list[str]:
    out = []
    for e in CATALOG:
        if max_order is not None and e.order > max_order:
            continue
        if cap is not None and e.order > cap:
            continue
        out.append(e.name)
    return out


def _merge(check_id: str, G: FiniteGroup, p: int, reports: list[CheckReport], empty_reason: str) -> CheckReport:
    """Fold several reports of one check on one (group, p) into a single report."""
    if not reports:
        return skipped(check_id, G, p, empty_reason)
    if len(reports) == 1:
        return reports[0]
    for r in reports:
        if r.status is Status.FAIL:
            return r
    live = [r for r in reports if r.status is not Status.SKIPPED]
    if not live:
        return reports[0]
    detail = " || ".join(r.detail for r in live)
    return CheckReport(check_id, G.name, p, Status.PASS, sum(r.lhs for r in live), sum(r.rhs for r in live), detail)


def _monotone(ctx: GroupContext, p: int, opts: SuiteOptions) -> CheckReport:
    G = ctx.group
    P = sylow_data(G, p).P
    subjects = [("N_G(P)", normalizer(G, P))]
    for i, H in enumerate(normal_subgroup_candidates(G, p, opts.brute_budget)):
        if len(H) % p == 0:
            subjects.append((f"N{i}", H))
    reports = [check_lambda_monotone(G, H, p, label) for label, H in subjects if len(H) < len(G)]
    return _merge("monotone", G, p, reports, "no proper subgroup of order divisible by p")


def _snx(ctx: GroupContext, p: int, opts: SuiteOptions) -> CheckReport:
    G = ctx.group
    if len(G) > opts.brute_budget:
        return skipped("snx", G, p, f"budget: |G| = {len(G)} > {opts.brute_budget}")
    P = sylow_data(G, p).P
    reports = []
    cands = normal_subgroup_candidates(G, p, opts.brute_budget)[: opts.max_fixture_subgroups]
    for i, N in enumerate(cands):
        NP = G.subgroup(list(N.generators) + list(P.generators))
        NP.name = G.name
        NN = NP.subgroup(N.generators)
        reports.append(check_snx(NP, NN, p, opts.brute_budget, f"N{i}"))
    return _merge("snx", G, p, reports, "no proper nontrivial normal subgroup")


def _lambda_mult(ctx: GroupContext, p: int, opts: SuiteOptions) -> CheckReport:
    G = ctx.group
    cands = normal_subgroup_candidates(G, p, opts.brute_budget)
    reports = [check_lambda_multiplicative(G, N, p, f"N{i}") for i, N in enumerate(cands)]
    return _merge("lambda-mult", G, p, reports, "no proper nontrivial normal subgroup")


def _navarro_rizo(ctx: GroupContext, p: int, opts: SuiteOptions) -> CheckReport:
    G = ctx.group
    return _merge("navarro-rizo", G, p, check_navarro_rizo_series(G, p), "no p'-factor in the upper p-series")


CHECKS: dict[str, Callable[[GroupContext, int, SuiteOptions], CheckReport | None]] = {
    "frobenius": lambda c, p, o: check_frobenius(c.group, p),
    "miller": lambda c, p, o: check_miller(c.group, p),
    "steinberg": lambda c, p, o: check_steinberg(c.group, p) if p in c.lie_primes else None,
    "omega-sum": lambda c, p, o: check_omega_sum(c.group, p),
    "casolo-a": lambda c, p, o: check_casolo_a(c.group, p, o.brute_budget, o.max_noncyclic),
    "casolo-b": lambda c, p, o: check_casolo_b(c.group, p),
    "navarro-rizo": _navarro_rizo,
    "alpha": lambda c, p, o: check_alpha_formula(c.group, p),
    "monotone": _monotone,
    "snx": _snx,
    "lambda-mult": _lambda_mult,
    "num-orb": lambda c, p, o: check_num_orb_group(c.direct_power, p) if c.direct_power else None,
    "conjecture-ratio": lambda c, p, o: check_conjecture_ratio(c.group, p),
    "conjecture-lambda": lambda c, p, o: check_conjecture_lambda(c.group, p),
    "amgm-chain": lambda c, p, o: check_amgm_chain(c.group, p),
    "gn-forms": lambda c, p, o: check_gn_closed_forms(c.gn, c.group) if c.gn and p == c.gn.p else None,
    "gn-lambda-equality": lambda c, p, o: check_gn_lambda_equality(c.gn, c.group) if c.gn and p == c.gn.p else None,
    "op-invariance": lambda c, p, o: check_op_quotient_invariance(c.group, p),
}


def checks_for_suite(suite: str) -> tuple[str, ...]:
    if suite == "all":
        return tuple(cid for ids in SUITES.values() for cid in ids)
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    return SUITES[suite]


def run_check(check_id: str, ctx: GroupContext, p: int, opts: SuiteOptions | None = None) -> CheckReport | None:
    opts = opts or SuiteOptions()
    G = ctx.group
    try:
        return CHECKS[check_id](ctx, p, opts)
    except BudgetExceeded as exc:
        return skipped(check_id, G, p, f"budget: {exc}")
    except IdentityViolation as exc:
        return CheckReport(check_id, G.name, p, Status.FAIL, detail=f"identity violation: {exc}")


def run_suite(suite: str, ctx: GroupContext, primes: list[int] | None = None, opts: SuiteOptions | None = None) -> list[CheckReport]:
    """Reports for every check of ``suite`` and every prime (default: all primes dividing |G|)."""
    ids = checks_for_suite(suite)
    order = len(ctx.group)
    if primes is None:
        primes = prime_factors(order)
    out = []
    for p in primes:
        if order % p:
            continue
        for cid in ids:
            rep = run_check(cid, ctx, p, opts)
            if rep is not None:
                out.append(rep)
    return out


@dataclass
class Job:
    """A picklable unit of work: one group source, one suite."""

    source: str  # catalog:NAME or file:PATH
    suite: str
    primes: list[int] | None = None
    cap: int | None = None
    opts: SuiteOptions = field(default_factory=SuiteOptions)


def run_job(job: Job) -> list[CheckReport]:
    ctx = resolve_group_spec(job.source, job.cap)
    return run_suite(job.suite, ctx, job.primes, job.opts)


def run_jobs(jobs: list[Job], workers: int = 1) -> list[CheckReport]:
    """Run jobs, optionally in a process pool; results keep job order."""
    if workers <= 1 or len(jobs) <= 1:
        results = [run_job(j) for j in jobs]
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_job, jobs))
    return [r for rs in results for r in rs]


# -- rendering ------------------------------------------------------------------


def reports_to_json(reports: list[CheckReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"


def reports_to_csv(reports: list[CheckReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check_id", "group", "p", "status"])
    for r in reports:
        w.writerow([r.check_id, r.group_name, r.prime, r.status.value])
    return buf.getvalue()


def _short(n: int | None, width: int = 24) -> str:
    if n is None:
        return "-"
    s = str(n)
    return s if len(s) <= width else f"{s[:8]}...({len(s)} digits)"


def findings_block(reports: list[CheckReport]) -> str:
    bad = [r for r in reports if r.status is Status.REPORT_ONLY_VIOLATED]
    if not bad:
        return ""
    lines = ["=" * 72, f"FINDING: {len(bad)} conjectured bound(s) violated (report-only)"]
    for r in bad:
        lines.append(f"  {r.check_id} on {r.group_name}, p = {r.prime}: lhs = {r.lhs}, rhs = {r.rhs}")
    lines.append("=" * 72)
    return "\n".join(lines) + "\n"


def reports_to_table(reports: list[CheckReport]) -> str:
    rows = [("check", "group", "p", "status", "lhs", "rhs")]
    for r in reports:
        status = r.status.value + (f"({r.reason})" if r.status is Status.SKIPPED else "")
        rows.append((r.check_id, r.group_name, str(r.prime), status, _short(r.lhs), _short(r.rhs)))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    counts: dict[str, int] = {}
    for r in reports:
        counts[r.status.value] = counts.get(r.status.value, 0) + 1
    summary = ", ".join(f"{k} {counts[k]}" for k in sorted(counts))
    return findings_block(reports) + "\n".join(lines) + f"\n\n{len(reports)} reports: {summary}\n"


def any_failed(reports: list[CheckReport]) -> bool:
    return any(r.status is Status.FAIL for r in reports)
