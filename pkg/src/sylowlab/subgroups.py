"""Centralizers, normalizers, normal closures, quotients and p-series."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .perm import FiniteGroup, Perm, Subgroup, _closure_set, conj, cycle_string, inv, mul
from .util import is_prime_power_of, p_part


class NotNormalError(ValueError):
    def __init__(self, conjugator: Perm):
        super().__init__(f"subgroup is not normal: conjugation by {cycle_string(conjugator)} moves it")
        self.conjugator = conjugator


def _require_subset(H: FiniteGroup, K: FiniteGroup, what: str) -> None:
    if not H.elset <= K.elset:
        raise ValueError(f"{what}: {H!r} is not contained in {K!r}")


def centralizer(G: FiniteGroup, x: Sequence[int]) -> Subgroup:
    x = tuple(x)
    if x not in G.elset:
        raise ValueError(f"{cycle_string(x)} is not an element of {G!r}")
    elems = [g for g in G.elements if mul(g, x) == mul(x, g)]
    return G.subgroup_from_elements(elems)


def centralizer_of_subgroup(G: FiniteGroup, H: FiniteGroup) -> Subgroup:
    gens = H.generators
    elems = [g for g in G.elements if all(mul(g, h) == mul(h, g) for h in gens)]
    return G.subgroup_from_elements(elems)


def normalizes(g: Perm, H: FiniteGroup) -> bool:
    hs = H.elset
    return all(conj(h, g) in hs for h in H.generators)


def normalizer(G: FiniteGroup, H: FiniteGroup) -> Subgroup:
    _require_subset(H, G, "normalizer")
    elems = [g for g in G.elements if normalizes(g, H)]
    return G.subgroup_from_elements(elems)


def is_normal(H: FiniteGroup, G: FiniteGroup) -> bool:
    return all(normalizes(g, H) for g in G.generators)


def conjugate_subgroup(H: FiniteGroup, g: Perm, parent: FiniteGroup) -> Subgroup:
    return Subgroup(
        parent,
        elements=[conj(h, g) for h in H.elements],
        generators=[conj(h, g) for h in H.generators],
    )


def generated(G: FiniteGroup, gens) -> Subgroup:
    return G.subgroup(gens)


def join(G: FiniteGroup, *subgroups: FiniteGroup) -> Subgroup:
    gens = [g for H in subgroups for g in H.generators]
    return G.subgroup(gens)


def conjugate_orbit(elements: Sequence[Perm], by: Sequence[Perm]) -> list[Perm]:
    """Closure of ``elements`` under conjugation by ``by`` (orbit union)."""
    seen = set(elements)
    orbit = list(dict.fromkeys(elements))
    i = 0
    while i < len(orbit):
        y = orbit[i]
        i += 1
        for g in by:
            z = conj(y, g)
            if z not in seen:
                seen.add(z)
                orbit.append(z)
    return orbit


def normal_closure(K: FiniteGroup, H: FiniteGroup) -> Subgroup:
    """Smallest normal subgroup of ``K`` containing ``H``."""
    _require_subset(H, K, "normal_closure")
    conjugates = conjugate_orbit(list(H.generators), K.generators)
    elems, used = _closure_set(conjugates, K.degree, max(len(K), 1))
    return Subgroup(K, elements=elems, generators=used)


def intersection(G: FiniteGroup, subgroups: Sequence[FiniteGroup]) -> Subgroup:
    common = set(G.elset)
    for H in subgroups:
        common &= H.elset
    return G.subgroup_from_elements(common)


@dataclass
class QuotientGroup:
    """``parent / kernel`` realised as the action of ``parent`` on right cosets."""

    parent: FiniteGroup
    kernel: FiniteGroup
    cosets: tuple[Perm, ...]  # least element of each right coset kernel*g
    coset_index: dict[Perm, int] = field(repr=False)
    images: tuple[Perm, ...] = field(repr=False)  # action of each coset rep
    group: FiniteGroup = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.cosets)

    def project(self, g: Sequence[int]) -> Perm:
        return self.images[self.coset_index[tuple(g)]]

    def project_subgroup(self, H: FiniteGroup) -> Subgroup:
        return self.group.subgroup_from_elements({self.project(h) for h in H.elements})

    def preimage(self, S: FiniteGroup) -> Subgroup:
        wanted = S.elset
        elems = [g for g in self.parent.elements if self.images[self.coset_index[g]] in wanted]
        return self.parent.subgroup_from_elements(elems)


def quotient(G: FiniteGroup, N: FiniteGroup) -> QuotientGroup:
    """Coset action of ``G`` on the right cosets of the normal subgroup ``N``."""
    _require_subset(N, G, "quotient")
    for g in G.generators:
        if not normalizes(g, N):
            raise NotNormalError(g)
    coset_index: dict[Perm, int] = {}
    reps: list[Perm] = []
    for g in G.elements:
        if g in coset_index:
            continue
        idx = len(reps)
        reps.append(g)
        for n in N.elements:
            coset_index[mul(n, g)] = idx
    images = tuple(tuple(coset_index[mul(r, g)] for r in reps) for g in reps)
    degree = len(reps)
    gens = [images[coset_index[g]] for g in G.generators]
    name = f"{G.name}/{len(N)}" if G.name else ""
    Q = FiniteGroup(gens, degree=degree, name=name, elements=set(images))
    return QuotientGroup(G, N, tuple(reps), coset_index, images, Q)


def p_core(G: FiniteGroup, p: int) -> Subgroup:
    """O_p(G): intersection of all Sylow p-subgroups."""
    from .sylow import sylow_data

    if len(G) % p:
        return G.trivial_subgroup()
    sd = sylow_data(G, p)
    return intersection(G, sd.all_sylows)


def p_prime_core(G: FiniteGroup, p: int) -> Subgroup:
    """O_{p'}(G): largest normal subgroup of order prime to ``p``.

    Joins the normal closures of p'-class representatives whose closure is
    itself a p'-group.
    """
    orders = G.orders
    current = G.trivial_subgroup()
    for cls in G.conjugacy_classes:
        x = cls[0]
        if orders[x] % p == 0 or x in current.elset:
            continue
        elems, used = _closure_set(list(cls), G.degree, len(G))
        if len(elems) % p:
            current = G.subgroup(list(current.generators) + used)
    return current


@dataclass
class PSeries:
    """Upper p-series ``1 = terms[0] < terms[1] < ...`` with factor kinds."""

    p: int
    terms: tuple[Subgroup, ...]
    kinds: tuple[str, ...]  # kinds[i] describes terms[i+1] / terms[i]: "p'" or "p"
    p_solvable: bool

    @property
    def factors(self) -> list[tuple[str, Subgroup, Subgroup]]:
        return [(k, self.terms[i + 1], self.terms[i]) for i, k in enumerate(self.kinds)]

    @property
    def p_prime_factors(self) -> list[tuple[Subgroup, Subgroup]]:
        """Pairs ``(U, V)`` for every p'-factor ``U/V``."""
        return [(U, V) for kind, U, V in self.factors if kind == "p'"]


def upper_p_series(G: FiniteGroup, p: int) -> PSeries:
    """Alternate O_{p'} and O_p on successive quotients until the series stalls.

    The series reaches ``G`` exactly when ``G`` is p-solvable.
    """
    key = ("pseries", p)
    if key in G.memo:
        return G.memo[key]
    V: Subgroup = G.trivial_subgroup()
    terms = [V]
    kinds = []
    want = "p'"
    misses = 0
    while len(V) < len(G) and misses < 2:
        if len(V) == 1:
            core = p_prime_core(G, p) if want == "p'" else p_core(G, p)
            U = core
        else:
            Q = quotient(G, V)
            core = p_prime_core(Q.group, p) if want == "p'" else p_core(Q.group, p)
            U = Q.preimage(core) if len(core) > 1 else V
        if len(U) > len(V):
            terms.append(U)
            kinds.append(want)
            V = U
            misses = 0
        else:
            misses += 1
        want = "p" if want == "p'" else "p'"
    series = PSeries(p, tuple(terms), tuple(kinds), len(V) == len(G))
    G.memo[key] = series
    return series


def is_p_solvable(G: FiniteGroup, p: int) -> bool:
    return upper_p_series(G, p).p_solvable


def _coset_labels(U: FiniteGroup, V: FiniteGroup) -> tuple[tuple[Perm, ...], dict[Perm, int]]:
    """Right transversal of ``V`` in ``U`` (least elements) and element -> coset number."""
    key = ("cosets", V.elset)
    if key in U.memo:
        return U.memo[key]
    label: dict[Perm, int] = {}
    reps = []
    for u in U.elements:
        if u in label:
            continue
        for v in V.elements:
            label[mul(v, u)] = len(reps)
        reps.append(u)
    U.memo[key] = (tuple(reps), label)
    return U.memo[key]


def right_transversal(U: FiniteGroup, V: FiniteGroup) -> tuple[Perm, ...]:
    """Least element of every right coset ``Vu`` of ``V`` in ``U``."""
    return _coset_labels(U, V)[0]


def fixed_coset_count(U: FiniteGroup, V: FiniteGroup, acting: Sequence[Perm]) -> int:
    """Order of the fixed-point subgroup of ``acting`` on the section ``U/V``.

    Counts cosets ``Vu`` with ``Vu^a = Vu`` for every ``a`` in ``acting``
    (equivalently ``[u, a] in V``; ``a`` must normalize ``U`` and ``V``).
    """
    reps, label = _coset_labels(U, V)
    pairs = [(inv(tuple(a)), tuple(a)) for a in acting]
    fixed = 0
    for i, u in enumerate(reps):
        if all(label[mul(mul(ai, u), a)] == i for ai, a in pairs):
            fixed += 1
    return fixed


def is_p_group(H: FiniteGroup, p: int) -> bool:
    return is_prime_power_of(len(H), p)


__all__ = [
    "NotNormalError",
    "PSeries",
    "QuotientGroup",
    "centralizer",
    "centralizer_of_subgroup",
    "conjugate_orbit",
    "conjugate_subgroup",
    "fixed_coset_count",
    "right_transversal",
    "generated",
    "intersection",
    "is_normal",
    "is_p_group",
    "is_p_solvable",
    "join",
    "normal_closure",
    "normalizer",
    "normalizes",
    "p_core",
    "p_part",
    "p_prime_core",
    "quotient",
    "upper_p_series",
]
