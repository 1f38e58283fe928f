"""Group catalog and builders: named small groups, affine block products, the G_n family."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from .perm import CapExceeded, FiniteGroup, Perm, Subgroup, default_cap, parse_permutation
from .util import is_prime


class ConstructionError(ValueError):
    pass


def _perm(text: str, degree: int) -> Perm:
    return tuple(parse_permutation(text, degree))


def _cycle(points: Sequence[int], degree: int) -> Perm:
    images = list(range(degree))
    for a, b in zip(points, list(points[1:]) + [points[0]]):
        images[a] = b
    return tuple(images)


# -- named families ----------------------------------------------------------


def cyclic(m: int) -> FiniteGroup:
    return FiniteGroup([_cycle(range(m), m)] if m > 1 else [], degree=m, name=f"C{m}")


def symmetric(n: int) -> FiniteGroup:
    gens = [_cycle([0, 1], n), _cycle(range(n), n)] if n > 1 else []
    return FiniteGroup(gens, degree=n, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        return FiniteGroup([], degree=n, name=f"A{n}")
    long = range(n) if n % 2 else range(1, n)
    return FiniteGroup([_cycle([0, 1, 2], n), _cycle(long, n)], degree=n, name=f"A{n}")


def dihedral(m: int) -> FiniteGroup:
    """Symmetries of an ``m``-gon, order ``2m``."""
    rot = _cycle(range(m), m)
    ref = tuple((-i) % m for i in range(m))
    return FiniteGroup([rot, ref], degree=m, name=f"D{2 * m}")


def elementary_abelian(p: int, n: int) -> FiniteGroup:
    degree = p * n
    gens = [_cycle(range(i * p, (i + 1) * p), degree) for i in range(n)]
    return FiniteGroup(gens, degree=degree, name=f"C{p}^{n}")


def _linear_perm(matrix: Sequence[Sequence[int]], p: int) -> Perm:
    """Action of a 2x2 matrix over GF(p) on the nonzero column vectors."""
    vectors = [v for v in itertools.product(range(p), repeat=2) if any(v)]
    index = {v: i for i, v in enumerate(vectors)}
    (a, b), (c, d) = matrix
    return tuple(index[((a * x + b * y) % p, (c * x + d * y) % p)] for x, y in vectors)


def sl23() -> FiniteGroup:
    """SL(2,3) on the 8 nonzero vectors of GF(3)^2."""
    gens = [_linear_perm([[1, 1], [0, 1]], 3), _linear_perm([[0, 2], [1, 0]], 3)]
    return FiniteGroup(gens, degree=8, name="SL(2,3)")


def psl27() -> FiniteGroup:
    """PSL(2,7) on the projective line: points 1..7 are 0..6, point 8 is infinity."""
    gens = [_perm("(1 2 3 4 5 6 7)", 8), _perm("(1 8)(2 7)(3 4)(5 6)", 8)]
    return FiniteGroup(gens, degree=8, name="PSL(2,7)")


# -- affine block products ----------------------------------------------------


def _unit_order(s: int, m: int) -> int:
    k, x = 1, s % m
    while x != 1:
        x = x * s % m
        k += 1
    return k


def semidirect_by_blocks(
    block_orders: Sequence[int],
    multipliers: Sequence[Sequence[int]],
    actor_orders: Sequence[int] | None = None,
    name: str = "",
    cap: int | None = None,
) -> FiniteGroup:
    """Affine group on a disjoint union of blocks ``Z/m_i``.

    Each block contributes the translation ``t -> t+1``.  Actor ``j``
    multiplies block ``i`` by ``multipliers[j][i]``, which must be a unit.  If
    ``actor_orders`` is given, every multiplier must satisfy the actor's
    relation ``s**order == 1``.
    """
    offsets = list(itertools.accumulate([0] + list(block_orders)))
    degree = offsets[-1]
    if degree < 1:
        raise ConstructionError("at least one nonempty block is required")
    if actor_orders is not None and len(actor_orders) != len(multipliers):
        raise ConstructionError("actor_orders must match the number of actors")
    gens = []
    for i, m in enumerate(block_orders):
        if m > 1:
            gens.append(_cycle(range(offsets[i], offsets[i + 1]), degree))
    for j, row in enumerate(multipliers):
        if len(row) != len(block_orders):
            raise ConstructionError(f"actor {j} needs one multiplier per block")
        images = list(range(degree))
        for i, (m, s) in enumerate(zip(block_orders, row)):
            if m > 1 and _gcd(s, m) != 1:
                raise ConstructionError(f"multiplier {s} is not a unit mod {m}")
            if actor_orders is not None and m > 1 and pow(s, actor_orders[j], m) != 1:
                raise ConstructionError(
                    f"multiplier {s} on block {i} violates relation of order {actor_orders[j]}"
                )
            for t in range(m):
                images[offsets[i] + t] = offsets[i] + (s * t) % m
        if any(i != v for i, v in enumerate(images)):
            gens.append(tuple(images))
    G = FiniteGroup(gens, degree=degree, name=name, cap=cap)
    return G


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def smallest_unit_of_order(p: int, q: int) -> int:
    for s in range(2, q):
        if _unit_order(s, q) == p:
            return s
    raise ConstructionError(f"no unit of order {p} modulo {q}")


def frobenius_group(q: int, p: int, cap: int | None = None) -> FiniteGroup:
    """``C_q ⋊ C_p`` with the smallest multiplier of order ``p``."""
    if (q - 1) % p:
        raise ConstructionError(f"{p} does not divide {q}-1")
    s = smallest_unit_of_order(p, q)
    return semidirect_by_blocks([q], [[s]], [p], name=f"C{q}:C{p}", cap=cap)


# -- the G_n family -----------------------------------------------------------


@dataclass(frozen=True)
class GnParams:
    p: int
    n: int
    q: int

    def __post_init__(self):
        if not is_prime(self.p) or not is_prime(self.q):
            raise ConstructionError("p and q must be prime")
        if self.n < 1:
            raise ConstructionError("n must be positive")
        if (self.q - 1) % self.p:
            raise ConstructionError(f"q = {self.q} is not 1 mod p = {self.p}")

    @property
    def num_blocks(self) -> int:
        return (self.p**self.n - 1) // (self.p - 1)

    @property
    def order(self) -> int:
        return self.q**self.num_blocks * self.p**self.n

    @property
    def degree(self) -> int:
        return self.q * self.num_blocks

    @property
    def name(self) -> str:
        return f"G_n({self.p},{self.n},{self.q})"

    # closed forms
    def predicted_n_p(self) -> int:
        return self.q**self.num_blocks

    def predicted_lambda(self) -> int:
        """λ of every nontrivial element of P."""
        return self.q ** ((self.p ** (self.n - 1) - 1) // (self.p - 1))

    def predicted_ratio_numerator(self) -> int:
        """``|U_p| * p^n / |P|``; the ratio is this over ``p^n``."""
        p, n, q = self.p, self.n, self.q
        return 1 + (p**n - 1) * q ** (p ** (n - 1))


def maximal_subgroup_functionals(p: int, n: int) -> list[tuple[int, ...]]:
    """One nonzero functional per maximal subgroup of (Z_p)^n: first nonzero coordinate 1."""
    out = []
    for f in itertools.product(range(p), repeat=n):
        nz = [c for c in f if c]
        if nz and nz[0] == 1:
            out.append(f)
    return out


def _gn_generators(params: GnParams) -> tuple[list[Perm], list[Perm], int]:
    p, n, q = params.p, params.n, params.q
    functionals = maximal_subgroup_functionals(p, n)
    degree = q * len(functionals)
    s = smallest_unit_of_order(p, q)
    translations = [_cycle(range(b * q, (b + 1) * q), degree) for b in range(len(functionals))]
    actors = []
    for i in range(n):
        images = list(range(degree))
        for b, f in enumerate(functionals):
            mult = pow(s, f[i], q)
            for t in range(q):
                images[b * q + t] = b * q + (mult * t) % q
        actors.append(tuple(images))
    return translations, actors, degree


def build_gn(params: GnParams, cap: int | None = None) -> FiniteGroup:
    """``N ⋊ P``: P = (Z_p)^n acting on one ``C_q`` block per maximal subgroup M.

    On block M, P acts by multiplication with ``s**chi_M(x)`` where ``chi_M``
    is the functional with kernel M and ``s`` has multiplicative order p mod q.
    """
    cap = default_cap() if cap is None else cap
    if params.order > cap:
        raise CapExceeded(cap)
    translations, actors, degree = _gn_generators(params)
    return FiniteGroup(translations + actors, degree=degree, name=params.name, cap=cap)


def gn_components(G: FiniteGroup, params: GnParams) -> tuple[Subgroup, Subgroup]:
    """The normal complement ``N`` and the elementary abelian ``P`` inside a built G_n."""
    translations, actors, _ = _gn_generators(params)
    return G.subgroup(translations), G.subgroup(actors)


# -- direct powers ------------------------------------------------------------


@dataclass
class DirectPower:
    """``L^k`` extended by a block-permuting actor, with its factor decomposition."""

    group: FiniteGroup
    base: Subgroup  # M = L_1 x ... x L_k
    factors: tuple[Subgroup, ...]
    factor_degree: int
    actor: Perm

    @property
    def k(self) -> int:
        return len(self.factors)

    def factor_permutation(self, x: Sequence[int]) -> tuple[int, ...]:
        """Permutation of factor labels induced by ``x``; raises if blocks are not preserved."""
        d = self.factor_degree
        out = []
        for i in range(self.k):
            targets = {x[i * d + j] // d for j in range(d)}
            if len(targets) != 1:
                raise ConstructionError("element does not permute the factor blocks")
            out.append(targets.pop())
        if sorted(out) != list(range(self.k)):
            raise ConstructionError("element does not permute the factor blocks")
        return tuple(out)


def direct_power_with_swap(L: FiniteGroup, k: int, m: int, cap: int | None = None, name: str = "") -> DirectPower:
    """``L^k`` on ``k*deg(L)`` points, extended by ``k/m`` disjoint ``m``-cycles on the factors."""
    if k < 1 or m < 1 or k % m:
        raise ConstructionError("m must divide k")
    cap = default_cap() if cap is None else cap
    if len(L) ** k * m > cap:
        raise CapExceeded(cap)
    d = L.degree
    degree = k * d
    factor_gens = []
    for i in range(k):
        gens = []
        for g in L.generators:
            images = list(range(degree))
            for j in range(d):
                images[i * d + j] = i * d + g[j]
            gens.append(tuple(images))
        factor_gens.append(gens)
    label_map = list(range(k))
    for start in range(0, k, m):
        for r in range(m):
            label_map[start + r] = start + (r + 1) % m
    actor = tuple(label_map[i // d] * d + i % d for i in range(degree))
    all_gens = [g for gens in factor_gens for g in gens]
    if m > 1:
        all_gens.append(actor)
    if not name:
        name = f"{L.name}^{k}" if m == 1 else f"{L.name} wr C{m}" if k == m else f"{L.name}^{k}:C{m}"
    G = FiniteGroup(all_gens, degree=degree, name=name, cap=cap)
    base = G.subgroup([g for gens in factor_gens for g in gens])
    factors = tuple(G.subgroup(gens) for gens in factor_gens)
    return DirectPower(G, base, factors, d, actor)


# -- catalog -------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    order: int  # known order, verified on build
    builder: Callable[[], object] = field(repr=False)
    lie_primes: tuple[int, ...] = ()  # defining characteristics as a group of Lie type
    gn: GnParams | None = None
    direct_power: bool = False

    def build(self, cap: int | None = None):
        return _build_cached(self.name, cap if cap is not None else default_cap())


def _gn_entry(p: int, n: int, q: int) -> CatalogEntry:
    params = GnParams(p, n, q)
    return CatalogEntry(params.name, params.order, lambda: build_gn(params), gn=params)


def _power_entry(name: str, L: Callable[[], FiniteGroup], k: int, m: int, order: int) -> CatalogEntry:
    return CatalogEntry(name, order, lambda: direct_power_with_swap(L(), k, m, name=name), direct_power=True)


CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry("C4", 4, lambda: cyclic(4)),
    CatalogEntry("C6", 6, lambda: semidirect_by_blocks([3, 2], [], name="C6")),
    CatalogEntry("C2^3", 8, lambda: elementary_abelian(2, 3)),
    CatalogEntry("C3^2", 9, lambda: elementary_abelian(3, 2)),
    CatalogEntry("S3", 6, lambda: symmetric(3), lie_primes=(2,)),
    CatalogEntry("D8", 8, lambda: dihedral(4)),
    CatalogEntry("D10", 10, lambda: dihedral(5)),
    CatalogEntry("D12", 12, lambda: dihedral(6)),
    CatalogEntry("A4", 12, lambda: alternating(4), lie_primes=(3,)),
    CatalogEntry("C5:C4", 20, lambda: frobenius_group(5, 4)),
    CatalogEntry("C7:C3", 21, lambda: frobenius_group(7, 3)),
    CatalogEntry("C11:C5", 55, lambda: frobenius_group(11, 5)),
    CatalogEntry("C13:C3", 39, lambda: frobenius_group(13, 3)),
    CatalogEntry("S4", 24, lambda: symmetric(4)),
    CatalogEntry("SL(2,3)", 24, sl23, lie_primes=(3,)),
    _power_entry("C3 wr C2", lambda: cyclic(3), 2, 2, 18),
    CatalogEntry("A5", 60, lambda: alternating(5), lie_primes=(2, 5)),
    _power_entry("S3 wr C2", lambda: symmetric(3), 2, 2, 72),
    CatalogEntry("S5", 120, lambda: symmetric(5)),
    CatalogEntry("PSL(2,7)", 168, psl27, lie_primes=(2, 7)),
    CatalogEntry("A6", 360, lambda: alternating(6), lie_primes=(3,)),
    CatalogEntry("S6", 720, lambda: symmetric(6)),
    _power_entry("S3 wr C3", lambda: symmetric(3), 3, 3, 648),
    _gn_entry(2, 1, 3),
    _gn_entry(2, 1, 5),
    _gn_entry(3, 1, 7),
    _gn_entry(2, 2, 3),
    _gn_entry(2, 3, 3),
    _gn_entry(3, 2, 7),
)

CATALOG_BY_NAME = {e.name: e for e in CATALOG}


@lru_cache(maxsize=None)
def _build_cached(name: str, cap: int):
    entry = CATALOG_BY_NAME[name]
    if entry.order > cap:
        raise CapExceeded(cap)
    built = entry.builder()
    G = built.group if isinstance(built, DirectPower) else built
    G.name = name
    if len(G) != entry.order:
        raise ConstructionError(f"{name}: built order {len(G)} != known order {entry.order}")
    return built


def catalog_group(name: str, cap: int | None = None) -> FiniteGroup:
    built = CATALOG_BY_NAME[name].build(cap)
    return built.group if isinstance(built, DirectPower) else built


def catalog_direct_power(name: str, cap: int | None = None) -> DirectPower | None:
    built = CATALOG_BY_NAME[name].build(cap)
    return built if isinstance(built, DirectPower) else None


def build_catalog(cap: int | None = None, max_order: int | None = None) -> dict[str, FiniteGroup]:
    """Name -> group for every catalog entry within ``max_order`` (and the cap)."""
    cap = default_cap() if cap is None else cap
    out = {}
    for e in CATALOG:
        if max_order is not None and e.order > max_order:
            continue
        if e.order > cap:
            continue
        out[e.name] = catalog_group(e.name, cap)
    return out
