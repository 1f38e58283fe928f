"""Sylow subgroups and the counting statistics built on them.

``lambda`` counts the Sylow p-subgroups containing an element or subgroup;
``alpha`` counts the conjugates of an element (or subgroup) that land in a
fixed Sylow p-subgroup.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .perm import FiniteGroup, Perm, Subgroup, conj, cycle_string, mul
from .subgroups import centralizer, normalizer, normalizes
from .util import is_prime, is_prime_power_of, p_part


class PrimeNotDividing(ValueError):
    def __init__(self, p: int, order: int):
        super().__init__(f"{p} does not divide the group order {order}")
        self.p = p


class NotAPElement(ValueError):
    pass


@dataclass
class SylowData:
    group: FiniteGroup
    p: int
    P: Subgroup
    all_sylows: tuple[Subgroup, ...]
    n_p: int
    normalizer_order: int
    # element -> number of Sylow p-subgroups containing it
    lambda_table: dict[Perm, int] = field(repr=False)

    @property
    def sylow_order(self) -> int:
        return len(self.P)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def p_elements(G: FiniteGroup, p: int) -> list[Perm]:
    """All elements whose order is a power of ``p`` (identity included)."""
    _require_prime(p)
    orders = G.orders
    return [x for x in G.elements if is_prime_power_of(orders[x], p)]


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown from the trivial group one normalizing p-element at a time.

    A p-subgroup ``Q`` strictly inside a Sylow subgroup is strictly inside its
    normalizer there, so some p-element of ``N_G(Q) \\ Q`` always exists.
    """
    _require_prime(p)
    if len(G) % p:
        raise PrimeNotDividing(p, len(G))
    target = p_part(len(G), p)
    candidates = [x for x in p_elements(G, p) if x != G.identity]
    Q = G.trivial_subgroup()
    while len(Q) < target:
        for g in candidates:
            if g not in Q.elset and normalizes(g, Q):
                Q = G.subgroup(list(Q.generators) + [g])
                break
        else:  # pragma: no cover - impossible by Sylow's theorem
            raise RuntimeError("no p-element extends the current p-subgroup")
    return Q


def all_sylows(G: FiniteGroup, P: FiniteGroup) -> tuple[Subgroup, ...]:
    """Distinct conjugates of ``P``, as the orbit under conjugation by generators.

    Sorted by element list, so the result does not depend on which member was
    passed in.
    """
    gens = G.generators
    start = P.elset
    orbit = {start: tuple(P.generators)}
    queue = [start]
    i = 0
    while i < len(queue):
        S = queue[i]
        sgens = orbit[S]
        i += 1
        for g in gens:
            T = frozenset(conj(y, g) for y in S)
            if T not in orbit:
                orbit[T] = tuple(conj(y, g) for y in sgens)
                queue.append(T)
    ordered = sorted(orbit, key=lambda S: sorted(S))
    return tuple(Subgroup(G, elements=S, generators=orbit[S]) for S in ordered)


def sylow_data(G: FiniteGroup, p: int) -> SylowData:
    """Representative Sylow subgroup, all conjugates, ``n_p`` and λ table (memoised on ``G``)."""
    key = ("sylow", p)
    if key in G.memo:
        return G.memo[key]
    P = sylow_subgroup(G, p)
    sylows = all_sylows(G, P)
    n_p = len(sylows)
    if len(G) % n_p:
        raise AssertionError("n_p does not divide |G|")
    table: Counter = Counter()
    for S in sylows:
        table.update(S.elements)
    sd = SylowData(G, p, P, sylows, n_p, len(G) // n_p, dict(table))
    G.memo[key] = sd
    return sd


def union_of_sylows(sd: SylowData) -> list[Perm]:
    return sorted(sd.lambda_table)


def lam(G: FiniteGroup, sd: SylowData, x: Sequence[int]) -> int:
    """Number of Sylow p-subgroups containing the p-element ``x``."""
    x = tuple(x)
    if x not in G.elset or not is_prime_power_of(G.orders[x], sd.p):
        raise NotAPElement(f"{cycle_string(x)} is not a {sd.p}-element of {G!r}")
    return sd.lambda_table[x]


def lam_subgroup(sd: SylowData, H: FiniteGroup) -> int:
    """Number of Sylow p-subgroups containing the p-subgroup ``H``."""
    hs = H.elset
    return sum(1 for S in sd.all_sylows if hs <= S.elset)


def subgroup_conjugates(G: FiniteGroup, H: FiniteGroup) -> list[frozenset]:
    """Element sets of all G-conjugates of ``H``."""
    gens = G.generators
    start = H.elset
    seen = {start}
    queue = [start]
    i = 0
    while i < len(queue):
        S = queue[i]
        i += 1
        for g in gens:
            T = frozenset(conj(y, g) for y in S)
            if T not in seen:
                seen.add(T)
                queue.append(T)
    return queue


def cyclic_subgroup(G: FiniteGroup, x: Sequence[int]) -> Subgroup:
    return G.subgroup([tuple(x)])


def alpha_subgroup(G: FiniteGroup, sd: SylowData, H: FiniteGroup, P: FiniteGroup | None = None) -> int:
    """Number of G-conjugates of ``H`` contained in ``P`` (default: the representative)."""
    ps = (P or sd.P).elset
    return sum(1 for S in subgroup_conjugates(G, H) if S <= ps)


def alpha(G: FiniteGroup, sd: SylowData, x: Sequence[int], P: FiniteGroup | None = None) -> tuple[int, int]:
    """``(|x^G ∩ P|, #{G-conjugates of <x> inside P})``."""
    x = tuple(x)
    lam(G, sd, x)  # validates x
    ps = (P or sd.P).elset
    a = sum(1 for y in G.conjugacy_class(x) if y in ps)
    return a, alpha_subgroup(G, sd, cyclic_subgroup(G, x), P)


@dataclass(frozen=True)
class PElementStats:
    x: Perm
    lam: int
    alpha: int
    alpha_cyclic: int
    normalizer_order: int  # |N_G(<x>)|
    centralizer_order: int  # |C_G(x)|


def element_stats(G: FiniteGroup, sd: SylowData, x: Sequence[int]) -> PElementStats:
    x = tuple(x)
    a, ac = alpha(G, sd, x)
    n_order = len(normalizer(G, cyclic_subgroup(G, x)))
    c_order = len(centralizer(G, x))
    return PElementStats(x, lam(G, sd, x), a, ac, n_order, c_order)


def frobenius_ratio(G: FiniteGroup, p: int) -> tuple[int, int]:
    """``(|U_p(G)|, |P|)`` from a direct order scan."""
    return len(p_elements(G, p)), p_part(len(G), p)


__all__ = [
    "NotAPElement",
    "PElementStats",
    "PrimeNotDividing",
    "SylowData",
    "all_sylows",
    "alpha",
    "alpha_subgroup",
    "cyclic_subgroup",
    "element_stats",
    "frobenius_ratio",
    "lam",
    "lam_subgroup",
    "p_elements",
    "subgroup_conjugates",
    "sylow_data",
    "sylow_subgroup",
    "union_of_sylows",
]
