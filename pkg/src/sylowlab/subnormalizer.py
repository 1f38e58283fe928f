"""Wielandt subnormalizers: brute force by definition, and Casolo's two size formulas.

``S_G(H) = {g in G : H is subnormal in <H, g>}``.  It is a set, not a
subgroup, and is never closed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perm import FiniteGroup, Perm, Subgroup, _closure_set, mul
from .subgroups import fixed_coset_count, normal_closure, normalizer, upper_p_series
from .sylow import SylowData, alpha_subgroup, lam_subgroup
from .util import is_prime_power_of

BRUTE_BUDGET_SUBGROUP = 5_000
BRUTE_BUDGET_CYCLIC = 20_000


class BudgetExceeded(RuntimeError):
    pass


class NotPSolvable(ValueError):
    pass


class IdentityViolation(AssertionError):
    """An identity that holds in every finite group failed: an implementation bug."""


def is_subnormal(H: FiniteGroup, K: FiniteGroup, p: int | None = None) -> bool:
    """Decide ``H`` subnormal in ``K`` by descending through iterated normal closures."""
    if not H.elset <= K.elset:
        raise ValueError(f"{H!r} is not contained in {K!r}")
    if p is not None and is_prime_power_of(len(K), p):
        return True  # every subgroup of a p-group is subnormal
    current = K
    while len(current) != len(H):
        nxt = normal_closure(current, H)
        if len(nxt) == len(current):
            return False
        current = nxt
    return True


def _p_of(H: FiniteGroup) -> int | None:
    n = len(H)
    if n == 1:
        return None
    d = 2
    while n % d:
        d += 1
    return d if is_prime_power_of(n, d) else None


def subnormalizer_brute(G: FiniteGroup, H: FiniteGroup, budget: int | None = None) -> list[Perm]:
    """``S_G(H)`` by testing every ``g``; returned sorted.

    Two reductions, both exact: the answer is constant on double cosets
    ``HgH`` (they generate the same ``<H, g>``), and once ``H`` is subnormal in
    ``K = <H, g>`` every element of ``K`` belongs to ``S_G(H)``.
    """
    if budget is None:
        budget = BRUTE_BUDGET_CYCLIC if len(H.generators) <= 1 else BRUTE_BUDGET_SUBGROUP
    if len(G) > budget:
        raise BudgetExceeded(f"|G| = {len(G)} exceeds brute-force budget {budget}")
    key = ("subnormalizer", H.elset)
    if key in G.memo:
        return G.memo[key]
    p = _p_of(H)
    hgens = list(H.generators)
    helems = H.elements
    decided: dict[Perm, bool] = {}
    for g in G.elements:
        if g in decided:
            continue
        elems, used = _closure_set([g], G.degree, len(G), start=H.elset, start_used=hgens)
        K = Subgroup(G, elements=elems, generators=used)
        ok = is_subnormal(H, K, p)
        if ok:
            for k in K.elements:
                decided[k] = True
        else:
            for a in helems:
                ag = mul(a, g)
                for b in helems:
                    decided[mul(ag, b)] = False
    result = [g for g in G.elements if decided[g]]
    G.memo[key] = result
    return result


def subnormalizer_size_a(G: FiniteGroup, sd: SylowData, H: FiniteGroup) -> int:
    """``lambda_G(H) |N_G(P)|``, asserted equal to ``alpha_G(H) |N_G(H)|``."""
    via_lambda = lam_subgroup(sd, H) * sd.normalizer_order
    via_alpha = alpha_subgroup(G, sd, H) * len(normalizer(G, H))
    if via_lambda != via_alpha:
        raise IdentityViolation(
            f"lambda*|N_G(P)| = {via_lambda} but alpha*|N_G(H)| = {via_alpha} for H of order {len(H)}"
        )
    return via_lambda


def subnormalizer_size_b(G: FiniteGroup, p: int, H: FiniteGroup | Sequence[int]) -> int:
    """``|P| * prod |C_{U/V}(HV/V)|`` over the p'-factors of the upper p-series."""
    series = upper_p_series(G, p)
    if not series.p_solvable:
        raise NotPSolvable(f"{G!r} is not {p}-solvable")
    acting = list(H.generators) if isinstance(H, FiniteGroup) else [tuple(H)]
    size = 1
    for kind, U, V in series.factors:
        if kind == "p":
            size *= len(U) // len(V)
        else:
            size *= fixed_coset_count(U, V, acting)
    return size


@dataclass(frozen=True)
class SubnormalizerResult:
    subject: object  # Permutation or Subgroup
    brute_size: int | None
    formula_a_size: int
    formula_b_size: int | None
    witnesses: tuple[Perm, ...] | None = None

    def consistent(self) -> bool:
        ok = self.brute_size is None or self.brute_size == self.formula_a_size
        return ok and (self.formula_b_size is None or self.formula_b_size == self.formula_a_size)


def subnormalizer(
    G: FiniteGroup, sd: SylowData, H: FiniteGroup, brute: bool = True, budget: int | None = None
) -> SubnormalizerResult:
    """All available routes to ``|S_G(H)|`` side by side."""
    size_a = subnormalizer_size_a(G, sd, H)
    witnesses = None
    brute_size = None
    if brute:
        try:
            witnesses = tuple(subnormalizer_brute(G, H, budget))
            brute_size = len(witnesses)
        except BudgetExceeded:
            pass
    try:
        size_b = subnormalizer_size_b(G, sd.p, H)
    except NotPSolvable:
        size_b = None
    return SubnormalizerResult(H, brute_size, size_a, size_b, witnesses)


__all__ = [
    "BRUTE_BUDGET_CYCLIC",
    "BRUTE_BUDGET_SUBGROUP",
    "BudgetExceeded",
    "IdentityViolation",
    "NotPSolvable",
    "SubnormalizerResult",
    "is_subnormal",
    "subnormalizer",
    "subnormalizer_brute",
    "subnormalizer_size_a",
    "subnormalizer_size_b",
]
