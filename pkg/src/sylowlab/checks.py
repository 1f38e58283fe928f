"""Exact verification of the p-element identities, lemmas and conjectured bounds.

Every check returns :class:`CheckReport` objects whose ``lhs``/``rhs`` are
Python integers.  Fractional exponents never appear: each inequality is
compared after raising both sides to a common integer power.  A check that
loops over many elements aggregates them into one report; on success
``lhs``/``rhs`` are the sums over all items, on failure they are the values
of the first failing item.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from dataclasses import dataclass
from typing import Iterable, Sequence

from .constructions import DirectPower, GnParams, build_gn, gn_components
from .perm import FiniteGroup, Perm, Subgroup, conj, cycle_string, mul, power
from .subgroups import (
    fixed_coset_count,
    is_normal,
    normal_closure,
    normalizer,
    normalizes,
    p_core,
    quotient,
    upper_p_series,
)
from .subnormalizer import BudgetExceeded, subnormalizer_brute
from .sylow import (
    SylowData,
    alpha,
    alpha_subgroup,
    cyclic_subgroup,
    lam_subgroup,
    p_elements,
    subgroup_conjugates,
    sylow_data,
    union_of_sylows,
)
from .util import is_prime_power_of, p_part

DETAIL_ITEMS = 12


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    REPORT_ONLY_HOLDS = "REPORT_ONLY_HOLDS"
    REPORT_ONLY_VIOLATED = "REPORT_ONLY_VIOLATED"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    group_name: str
    prime: int
    status: Status
    lhs: int | None = None
    rhs: int | None = None
    detail: str = ""
    reason: str = ""  # only for SKIPPED

    @property
    def failed(self) -> bool:
        return self.status is Status.FAIL

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "group_name": self.group_name,
            "prime": str(self.prime),
            "status": self.status.value,
            "lhs": None if self.lhs is None else str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
            "detail": self.detail,
            "reason": self.reason,
        }


def skipped(check_id: str, G: FiniteGroup, p: int, reason: str) -> CheckReport:
    return CheckReport(check_id, G.name, p, Status.SKIPPED, reason=reason)


@dataclass
class Item:
    label: str
    lhs: int
    rhs: int
    ok: bool
    note: str = ""


def _aggregate(check_id: str, G: FiniteGroup, p: int, items: list[Item], prefix: str = "") -> CheckReport:
    bad = [it for it in items if not it.ok]
    parts = [f"{it.label}: {it.lhs} vs {it.rhs}{' ' + it.note if it.note else ''}" for it in items[:DETAIL_ITEMS]]
    if len(items) > DETAIL_ITEMS:
        parts.append(f"... (+{len(items) - DETAIL_ITEMS} more)")
    head = f"{len(items)} items" + (f", {len(bad)} failing" if bad else "")
    detail = "; ".join(x for x in [prefix, head] if x) + (" | " + "; ".join(parts) if parts else "")
    if bad:
        first = bad[0]
        return CheckReport(check_id, G.name, p, Status.FAIL, first.lhs, first.rhs, f"FIRST FAILURE {first.label} | " + detail)
    return CheckReport(check_id, G.name, p, Status.PASS, sum(i.lhs for i in items), sum(i.rhs for i in items), detail)


def _label(x: Perm) -> str:
    return "x=" + cycle_string(x)


def _distinct_cyclic(G: FiniteGroup, elements: Iterable[Perm]) -> list[Subgroup]:
    seen: dict[frozenset, Subgroup] = {}
    for x in elements:
        H = cyclic_subgroup(G, x)
        seen.setdefault(H.elset, H)
    return list(seen.values())


def _powers(x: Perm) -> list[Perm]:
    out = [x]
    while out[-1] != tuple(range(len(x))):
        out.append(mul(out[-1], x))
    return out


def _normalizer_order(G: FiniteGroup, H: FiniteGroup) -> int:
    """|N_G(H)| by orbit-stabilizer on the conjugates of ``H``."""
    key = ("normalizer_order", H.elset)
    if key not in G.memo:
        G.memo[key] = len(G) // len(subgroup_conjugates(G, H))
    return G.memo[key]


def _centralizer_order(G: FiniteGroup, x: Perm) -> int:
    """|C_G(x)| by orbit-stabilizer on the conjugacy class of ``x``."""
    return len(G) // len(G.conjugacy_class(x))


def is_p_solvable(G: FiniteGroup, p: int) -> bool:
    return upper_p_series(G, p).p_solvable


# -- Frobenius, Miller, Steinberg ------------------------------------------------


def check_frobenius(G: FiniteGroup, p: int) -> CheckReport:
    """|P| divides |U_p(G)|; U_p is computed both by order scan and as the union of Sylows."""
    scan = p_elements(G, p)
    sd = sylow_data(G, p)
    union = union_of_sylows(sd)
    P = len(sd.P)
    if scan != union:
        return CheckReport(
            "frobenius", G.name, p, Status.FAIL, len(scan), len(union), "order scan and Sylow union disagree"
        )
    status = Status.PASS if len(scan) % P == 0 else Status.FAIL
    return CheckReport("frobenius", G.name, p, status, len(scan), P, f"|U_p| mod |P| = {len(scan) % P}; ratio {len(scan) // P}")


def check_miller(G: FiniteGroup, p: int) -> CheckReport:
    """Frobenius ratio is 1 exactly when the Sylow subgroup is normal, and at least p otherwise."""
    sd = sylow_data(G, p)
    ratio = len(p_elements(G, p)) // len(sd.P)
    if sd.n_p == 1:
        ok, bound = ratio == 1, 1
    else:
        ok, bound = ratio >= p, p
    return CheckReport(
        "miller", G.name, p, Status.PASS if ok else Status.FAIL, ratio, bound, f"n_p = {sd.n_p}; ratio {'=' if sd.n_p == 1 else '>='} {bound}"
    )


def check_steinberg(G: FiniteGroup, p: int) -> CheckReport:
    """In a group of Lie type in its defining characteristic the ratio equals |P|."""
    ratio = len(p_elements(G, p)) // p_part(len(G), p)
    P = p_part(len(G), p)
    return CheckReport("steinberg", G.name, p, Status.PASS if ratio == P else Status.FAIL, ratio, P, "ratio vs |P|")


# -- subnormalizer identities ------------------------------------------------------


def size_via_lambda(sd: SylowData, H: FiniteGroup) -> int:
    return lam_subgroup(sd, H) * sd.normalizer_order


def size_via_alpha(G: FiniteGroup, sd: SylowData, H: FiniteGroup) -> int:
    return alpha_subgroup(G, sd, H) * _normalizer_order(G, H)


def omega_summands(G: FiniteGroup, p: int) -> list[tuple[Perm, int]]:
    """``(x, |S_G(x)|)`` for every x in the representative Sylow subgroup (formula a sizes)."""
    sd = sylow_data(G, p)
    sizes: dict[frozenset, int] = {}
    out = []
    for x in sd.P.elements:
        H = cyclic_subgroup(G, x)
        if H.elset not in sizes:
            sizes[H.elset] = size_via_lambda(sd, H)
        out.append((x, sizes[H.elset]))
    return out


def check_omega_sum(G: FiniteGroup, p: int) -> CheckReport:
    """|U_p(G)| = sum over x in P of |G| / |S_G(x)|, summed exactly as fractions.

    Summands need not be integers (S_G(x) is not a subgroup); the detail line
    lists the ones that are not.
    """
    summands = omega_summands(G, p)
    total = sum(Fraction(len(G), s) for _, s in summands)
    odd = [(x, s) for x, s in summands if len(G) % s]
    count = len(p_elements(G, p))
    ok = total == count
    detail = f"|U_p| vs sum of |G|/|S_G(x)| over {len(summands)} elements"
    if odd:
        x, s = odd[0]
        detail += f"; {len(odd)} non-integral summands, e.g. {_label(x)} with |S_G(x)| = {s}"
    if total.denominator != 1:
        detail += f"; sum = {total}"
    return CheckReport("omega-sum", G.name, p, Status.PASS if ok else Status.FAIL, count, total.numerator, detail)


def order_p2_subgroups(G: FiniteGroup, P: FiniteGroup, p: int, limit: int = 50) -> list[Subgroup]:
    """Subgroups of ``P`` of order p^2, in a deterministic order, at most ``limit``."""
    if len(P) < p * p:
        return []
    found: dict[frozenset, Subgroup] = {}
    elems = [x for x in P.elements if x != P.identity]
    target = p * p
    orders = G.orders
    for a in elems:
        if orders[a] == target:
            H = G.subgroup([a])
            found.setdefault(H.elset, H)
    for i, a in enumerate(elems):
        if orders[a] != p:
            continue
        for b in elems[i + 1 :]:
            if orders[b] != p:
                continue
            H = G.subgroup([a, b])
            if len(H) == target:
                found.setdefault(H.elset, H)
    ordered = sorted(found.values(), key=lambda H: H.elements)
    return ordered[:limit]


def check_casolo_a(G: FiniteGroup, p: int, budget: int = 5_000, max_noncyclic: int = 50) -> CheckReport:
    """Brute |S_G(H)| = lambda_G(H)|N_G(P)| = alpha_G(H)|N_G(H)| for p-subgroups H of P.

    H runs over every cyclic subgroup of P, a sample of order-p^2 subgroups,
    and P itself (where the brute-force set must equal N_G(P) exactly).
    """
    if len(G) > budget:
        return skipped("casolo-a", G, p, f"budget: |G| = {len(G)} > {budget}")
    sd = sylow_data(G, p)
    subjects = [("<" + cycle_string(H.generators[0]) + ">" if H.generators else "<()>", H) for H in _distinct_cyclic(G, sd.P.elements)]
    subjects += [(f"H{i}(order {p * p})", H) for i, H in enumerate(order_p2_subgroups(G, sd.P, p, max_noncyclic))]
    items = []
    for label, H in subjects:
        brute = len(subnormalizer_brute(G, H, budget=max(budget, len(G))))
        via_l = size_via_lambda(sd, H)
        via_a = size_via_alpha(G, sd, H)
        items.append(Item(label, brute, via_l, brute == via_l == via_a, f"(alpha route {via_a})"))
    brute_P = subnormalizer_brute(G, sd.P, budget=max(budget, len(G)))
    NP = normalizer(G, sd.P)
    items.append(Item("H=P", len(brute_P), len(NP), set(brute_P) == NP.elset, "(set equality with N_G(P))"))
    return _aggregate("casolo-a", G, p, items)


def formula_b(G: FiniteGroup, p: int, acting: Sequence[Perm]) -> int:
    series = upper_p_series(G, p)
    size = 1
    for kind, U, V in series.factors:
        size *= len(U) // len(V) if kind == "p" else fixed_coset_count(U, V, acting)
    return size


def check_casolo_b(G: FiniteGroup, p: int, all_p_elements: bool = True) -> CheckReport:
    """|P| prod |C_{U/V}(xV)| over p'-factors equals lambda_G(x)|N_G(P)|, for every p-element x.

    For x in P the alpha route alpha(<x>)|N_G(<x>)| is compared as well.
    """
    if not is_p_solvable(G, p):
        return skipped("casolo-b", G, p, "not p-solvable")
    sd = sylow_data(G, p)
    subjects = p_elements(G, p) if all_p_elements else list(sd.P.elements)
    in_P = sd.P.elset
    items = []
    by_cyclic: dict[frozenset, int] = {}  # fixed points of x are those of <x>
    for x in subjects:
        key = frozenset(_powers(x))
        if key not in by_cyclic:
            by_cyclic[key] = formula_b(G, p, [x])
        b = by_cyclic[key]
        a = sd.lambda_table[x] * sd.normalizer_order
        ok = a == b
        if x in in_P:
            ok = ok and a == size_via_alpha(G, sd, cyclic_subgroup(G, x))
        items.append(Item(_label(x), b, a, ok))
    scope = "all p-elements" if all_p_elements else "x in P"
    return _aggregate("casolo-b", G, p, items, prefix=f"formula b vs formula a over {scope}")


def navarro_rizo_sides(P: FiniteGroup, U: FiniteGroup, V: FiniteGroup, p: int) -> tuple[int, int]:
    """Integer form ``|C(P)|^((p-1)|P|) * prod |C(x^p)|`` and ``prod |C(x)|^p``."""
    if (len(U) // len(V)) % p == 0:
        raise ValueError(f"section of order {len(U) // len(V)} is not a {p}'-group")
    if not is_prime_power_of(len(P), p):
        raise ValueError("acting group is not a p-group")
    for g in P.generators:
        if not (normalizes(g, U) and normalizes(g, V)):
            raise ValueError("acting group does not normalize the section")
    memo: dict[Perm, int] = {}

    def fixed(y: Perm) -> int:
        if y not in memo:
            memo[y] = fixed_coset_count(U, V, [y])
        return memo[y]

    c_P = fixed_coset_count(U, V, P.generators)
    lhs = c_P ** ((p - 1) * len(P))
    rhs = 1
    for x in P.elements:
        lhs *= fixed(power(x, p))
        rhs *= fixed(x) ** p
    return lhs, rhs


def check_navarro_rizo(
    P: FiniteGroup, U: FiniteGroup, V: FiniteGroup | None, p: int, group_name: str = "", label: str = ""
) -> CheckReport:
    """Coprime action of the p-group P on the p'-section U/V (V defaults to trivial)."""
    if V is None:
        V = U.trivial_subgroup()
    lhs, rhs = navarro_rizo_sides(P, U, V, p)
    detail = label or f"|P| = {len(P)} on section of order {len(U) // len(V)}"
    return CheckReport("navarro-rizo", group_name, p, Status.PASS if lhs == rhs else Status.FAIL, lhs, rhs, detail)


def check_navarro_rizo_series(G: FiniteGroup, p: int) -> list[CheckReport]:
    """A Sylow p-subgroup acting on every p'-factor of the upper p-series."""
    series = upper_p_series(G, p)
    if not series.p_solvable:
        return [skipped("navarro-rizo", G, p, "not p-solvable")]
    P = sylow_data(G, p).P
    out = []
    for U, V in series.p_prime_factors:
        label = f"P (order {len(P)}) on factor {len(U)}/{len(V)}"
        rep = check_navarro_rizo(P, U, V, p, G.name, label)
        out.append(rep)
    return out


def check_alpha_formula(G: FiniteGroup, p: int) -> CheckReport:
    """alpha(x) = alpha(<x>) |N_G(<x>)| / |C_G(x)| exactly, independent of the chosen Sylow."""
    sd = sylow_data(G, p)
    other = next((S for S in sd.all_sylows if S.elset != sd.P.elset), None)
    items = []
    for x in sd.P.elements:
        a, ac = alpha(G, sd, x)
        n_ord = _normalizer_order(G, cyclic_subgroup(G, x))
        c_ord = _centralizer_order(G, x)
        num = ac * n_ord
        ok = num % c_ord == 0 and num // c_ord == a
        note = ""
        if other is not None:
            a2, ac2 = alpha(G, sd, x, P=other)
            ok = ok and (a2, ac2) == (a, ac)
            note = "(second Sylow agrees)" if (a2, ac2) == (a, ac) else f"(second Sylow gives {a2},{ac2})"
        items.append(Item(_label(x), a * c_ord, num, ok, note))
    return _aggregate("alpha", G, p, items, prefix="alpha*|C_G(x)| vs alpha_cyclic*|N_G(<x>)|")


# -- lemmas of the reduction -------------------------------------------------------


def check_lambda_monotone(G: FiniteGroup, H: FiniteGroup, p: int, label: str = "") -> CheckReport:
    """lambda_G(x) n_p(H) <= lambda_H(x) n_p(G) for p-elements x of H; equality if H is normal."""
    if not H.elset <= G.elset:
        raise ValueError("H is not a subgroup of G")
    if len(H) % p:
        raise ValueError("p does not divide |H|")
    sdG = sylow_data(G, p)
    sdH = sylow_data(H, p)
    normal = is_normal(H, G)
    items = []
    for x in p_elements(H, p):
        lhs = sdG.lambda_table[x] * sdH.n_p
        rhs = sdH.lambda_table[x] * sdG.n_p
        items.append(Item(_label(x), lhs, rhs, lhs == rhs if normal else lhs <= rhs))
    kind = "normal, equality" if normal else "not normal, inequality"
    return _aggregate("monotone", G, p, items, prefix=f"{label or 'H'} of order {len(H)} ({kind})")


def check_snx(G: FiniteGroup, N: FiniteGroup, p: int, budget: int = 5_000, label: str = "") -> CheckReport:
    """|S_G(x)| = |{g in N : <x> subnormal in <x, g>}| * [G:N] for x in P, when G = NP."""
    if len(G) > budget:
        return skipped("snx", G, p, f"budget: |G| = {len(G)} > {budget}")
    if not is_normal(N, G):
        raise ValueError("N is not normal in G")
    sd = sylow_data(G, p)
    if len(N) * len(sd.P) // len(N.elset & sd.P.elset) != len(G):
        raise ValueError("G is not the product N P")
    index = len(G) // len(N)
    items = []
    for H in _distinct_cyclic(G, sd.P.elements):
        S = subnormalizer_brute(G, H, budget=max(budget, len(G)))
        in_N = sum(1 for g in S if g in N.elset)
        items.append(Item("<" + cycle_string(H.generators[0]) + ">" if H.generators else "<()>", len(S), in_N * index, len(S) == in_N * index))
    return _aggregate("snx", G, p, items, prefix=f"{label or 'N'} of order {len(N)}, [G:N] = {index}")


def _lambda_in(group: FiniteGroup, p: int, x: Perm) -> int:
    if len(group) % p:
        return 1  # the trivial subgroup is the unique Sylow p-subgroup
    return sylow_data(group, p).lambda_table[x]


def check_lambda_multiplicative(G: FiniteGroup, N: FiniteGroup, p: int, label: str = "") -> CheckReport:
    """lambda_G(x) = lambda_{G/N}(Nx) * lambda_{NP}(x) for x in P."""
    Q = quotient(G, N)
    sd = sylow_data(G, p)
    NP = G.subgroup(list(N.generators) + list(sd.P.generators))
    items = []
    for x in sd.P.elements:
        lg = sd.lambda_table[x]
        lq = _lambda_in(Q.group, p, Q.project(x))
        lnp = _lambda_in(NP, p, x)
        items.append(Item(_label(x), lg, lq * lnp, lg == lq * lnp, f"({lq}*{lnp})"))
    return _aggregate("lambda-mult", G, p, items, prefix=f"{label or 'N'} of order {len(N)}")


def check_num_orb(dp: DirectPower, x: Perm, p: int) -> CheckReport:
    """<x>-invariant Sylow p-subgroups of M = L^k number at most n_p(L)^s, s = #orbits on factors."""
    G, M = dp.group, dp.base
    label_perm = dp.factor_permutation(x)
    for i, L_i in enumerate(dp.factors):
        target = dp.factors[label_perm[i]].elset
        if any(conj(g, x) not in target for g in L_i.generators):
            raise ValueError("x does not permute the direct factors")
    s = _orbit_count(label_perm)
    lhs = _invariant_sylow_count(M, x, p)
    n_L = sylow_data(dp.factors[0], p).n_p if len(dp.factors[0]) % p == 0 else 1
    rhs = n_L**s
    status = Status.PASS if lhs <= rhs else Status.FAIL
    return CheckReport("num-orb", G.name, p, status, lhs, rhs, f"{_label(x)}: s = {s}, n_p(L) = {n_L}")


def _orbit_count(perm: Sequence[int]) -> int:
    seen = set()
    count = 0
    for i in range(len(perm)):
        if i in seen:
            continue
        count += 1
        j = i
        while j not in seen:
            seen.add(j)
            j = perm[j]
    return count


def _invariant_sylow_count(M: FiniteGroup, x: Perm, p: int) -> int:
    """Sylow p-subgroups of M normalized by x (x need not lie in M)."""
    if len(M) % p:
        return 1
    return sum(1 for Q in sylow_data(M, p).all_sylows if normalizes(x, Q))


def check_num_orb_group(dp: DirectPower, p: int) -> CheckReport:
    """``check_num_orb`` for every element of the extended direct power."""
    items = []
    for x in dp.group.elements:
        rep = check_num_orb(dp, x, p)
        items.append(Item(_label(x), rep.lhs, rep.rhs, rep.status is Status.PASS, rep.detail.split(": ", 1)[1]))
    return _aggregate("num-orb", dp.group, p, items, prefix=f"k = {dp.k} factors")


def check_op_quotient_invariance(G: FiniteGroup, p: int) -> CheckReport:
    """For N = O_p(G): lambda_G(x) = lambda_{G/N}(xN) for every p-element x."""
    N = p_core(G, p)
    if len(N) == 1:
        return skipped("op-invariance", G, p, f"O_{p} trivial")
    sd = sylow_data(G, p)
    Q = quotient(G, N)
    items = []
    for x in p_elements(G, p):
        lq = _lambda_in(Q.group, p, Q.project(x))
        items.append(Item(_label(x), sd.lambda_table[x], lq, sd.lambda_table[x] == lq))
    return _aggregate("op-invariance", G, p, items, prefix=f"|O_p| = {len(N)}")


# -- conjectured bounds -------------------------------------------------------------


def _conjecture_status(holds: bool, proven: bool) -> Status:
    if proven:
        return Status.PASS if holds else Status.FAIL
    return Status.REPORT_ONLY_HOLDS if holds else Status.REPORT_ONLY_VIOLATED


def lambda_product(sd: SylowData) -> int:
    return math.prod(sd.lambda_table[x] for x in sd.P.elements)


def check_conjecture_ratio(G: FiniteGroup, p: int) -> CheckReport:
    """(|U_p|/|P|)^p >= n_p^(p-1); proven for p-solvable G, report-only otherwise."""
    sd = sylow_data(G, p)
    ratio = len(p_elements(G, p)) // len(sd.P)
    lhs, rhs = ratio**p, sd.n_p ** (p - 1)
    solv = is_p_solvable(G, p)
    detail = f"ratio {ratio}, n_p {sd.n_p}; " + ("p-solvable" if solv else "not p-solvable")
    return CheckReport("conjecture-ratio", G.name, p, _conjecture_status(lhs >= rhs, solv), lhs, rhs, detail)


def check_conjecture_lambda(G: FiniteGroup, p: int) -> CheckReport:
    """(prod_{x in P} lambda_G(x))^p <= n_p^|P|."""
    sd = sylow_data(G, p)
    lhs = lambda_product(sd) ** p
    rhs = sd.n_p ** len(sd.P)
    solv = is_p_solvable(G, p)
    detail = ("equality; " if lhs == rhs else "") + ("p-solvable" if solv else "not p-solvable")
    return CheckReport("conjecture-lambda", G.name, p, _conjecture_status(lhs <= rhs, solv), lhs, rhs, detail)


def check_amgm_chain(G: FiniteGroup, p: int) -> CheckReport:
    """(|U_p|/|P|)^|P| * prod lambda_G(x) >= n_p^|P| (arithmetic vs geometric mean)."""
    sd = sylow_data(G, p)
    ratio = len(p_elements(G, p)) // len(sd.P)
    lhs = ratio ** len(sd.P) * lambda_product(sd)
    rhs = sd.n_p ** len(sd.P)
    return CheckReport("amgm-chain", G.name, p, Status.PASS if lhs >= rhs else Status.FAIL, lhs, rhs, f"|P| = {len(sd.P)}")


# -- the extremal family ----------------------------------------------------------


def check_gn_closed_forms(params: GnParams, G: FiniteGroup | None = None, cap: int | None = None) -> CheckReport:
    """Computed n_p, nontrivial lambda and Frobenius ratio against their closed forms."""
    if G is None:
        G = build_gn(params, cap=cap)
    p, n = params.p, params.n
    sd = sylow_data(G, p)
    N, _ = gn_components(G, params)
    items = [Item("n_p", sd.n_p, params.predicted_n_p(), sd.n_p == params.predicted_n_p())]
    want = params.predicted_lambda()
    lam_ok = True
    c_ok = True
    for x in sd.P.elements:
        if x == G.identity:
            continue
        lam_ok &= sd.lambda_table[x] == want
        c_N = sum(1 for a in N.elements if conj(a, x) == a)
        c_ok &= sd.lambda_table[x] == c_N
    items.append(Item("lambda(x!=1)", want if lam_ok else -1, want, lam_ok))
    items.append(Item("lambda = |C_N(x)|", 1 if c_ok else 0, 1, c_ok))
    U = len(p_elements(G, p))
    lhs = U * p**n
    rhs = len(sd.P) * params.predicted_ratio_numerator()
    ok = all(it.ok for it in items) and lhs == rhs
    detail = "; ".join(f"{it.label}: {it.lhs} vs {it.rhs}" for it in items) + f"; |U_p| = {U}, ratio = {params.predicted_ratio_numerator()}/{p**n}"
    if not ok:
        detail = "MISMATCH | " + detail
    return CheckReport("gn-forms", G.name, p, Status.PASS if ok else Status.FAIL, lhs, rhs, detail)


def check_gn_lambda_equality(params: GnParams, G: FiniteGroup) -> CheckReport:
    """The lambda bound is attained with equality on G_n."""
    sd = sylow_data(G, params.p)
    lhs = lambda_product(sd) ** params.p
    rhs = sd.n_p ** len(sd.P)
    return CheckReport(
        "gn-lambda-equality", G.name, params.p, Status.PASS if lhs == rhs else Status.FAIL, lhs, rhs, "(prod lambda)^p vs n_p^|P|"
    )


# -- fixture sources -----------------------------------------------------------------


def normal_subgroup_candidates(G: FiniteGroup, p: int, budget: int = 5_000) -> list[Subgroup]:
    """Proper nontrivial normal subgroups: upper p-series terms, plus class normal closures when small."""
    key = ("normal_candidates", p, budget)
    if key in G.memo:
        return G.memo[key]
    found: dict[frozenset, Subgroup] = {}
    for T in upper_p_series(G, p).terms:
        found.setdefault(T.elset, T)
    if len(G) <= budget:
        whole = G.whole()
        for cls in G.conjugacy_classes:
            H = normal_closure(whole, G.subgroup([cls[0]]))
            found.setdefault(H.elset, H)
    out = sorted((H for H in found.values() if 1 < len(H) < len(G)), key=lambda H: (len(H), H.elements))
    G.memo[key] = out
    return out


__all__ = [
    "CheckReport",
    "Status",
    "check_alpha_formula",
    "check_amgm_chain",
    "check_casolo_a",
    "check_casolo_b",
    "check_conjecture_lambda",
    "check_conjecture_ratio",
    "check_frobenius",
    "check_gn_closed_forms",
    "check_gn_lambda_equality",
    "check_lambda_monotone",
    "check_lambda_multiplicative",
    "check_miller",
    "check_navarro_rizo",
    "check_navarro_rizo_series",
    "check_num_orb",
    "check_num_orb_group",
    "check_omega_sum",
    "omega_summands",
    "check_op_quotient_invariance",
    "check_snx",
    "check_steinberg",
    "navarro_rizo_sides",
    "normal_subgroup_candidates",
    "order_p2_subgroups",
]
