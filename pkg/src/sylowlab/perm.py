"""Permutations, closure from generators, and enumerated permutation groups.

Elements are stored as plain tuples of images on ``range(degree)``; the
:class:`Permutation` tuple subclass adds validation and cycle notation for the
I/O boundary.  Products follow the right-action convention: ``a * b`` applies
``a`` first, then ``b``, so conjugation is ``x ** g == g^-1 * x * g``.
"""

from __future__ import annotations

import json
import math
import os
import re
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence

DEFAULT_CAP = 200_000

Perm = tuple  # raw element type used by the group machinery


class CapExceeded(RuntimeError):
    """Raised when a closure grows past the enumeration cap."""

    def __init__(self, cap: int):
        super().__init__(f"closure exceeded enumeration cap of {cap} elements")
        self.cap = cap


class PermutationError(ValueError):
    pass


def default_cap() -> int:
    value = os.environ.get("SYLOWLAB_CAP")
    if value:
        cap = int(value)
        if cap < 1:
            raise ValueError("SYLOWLAB_CAP must be positive")
        return cap
    return DEFAULT_CAP


# -- raw tuple arithmetic (hot loop) ---------------------------------------


def mul(a: Perm, b: Perm) -> Perm:
    """Apply ``a`` then ``b``."""
    return tuple(map(b.__getitem__, a))


def inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def conj(x: Perm, g: Perm) -> Perm:
    """``g^-1 x g``."""
    out = [0] * len(x)
    for i, j in enumerate(x):
        out[g[i]] = g[j]
    return tuple(out)


def power(x: Perm, k: int) -> Perm:
    n = len(x)
    result = tuple(range(n))
    if k < 0:
        x, k = inv(x), -k
    base = x
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def cycle_lengths(x: Perm) -> list[int]:
    seen = bytearray(len(x))
    lengths = []
    for start in range(len(x)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = 1
            i = x[i]
            length += 1
        lengths.append(length)
    return lengths


def element_order(x: Sequence[int]) -> int:
    """Least ``k >= 1`` with ``x**k`` the identity (lcm of the cycle lengths)."""
    return math.lcm(*cycle_lengths(tuple(x))) if len(x) else 1


def cycles(x: Perm) -> list[tuple[int, ...]]:
    seen = bytearray(len(x))
    out = []
    for start in range(len(x)):
        if seen[start] or x[start] == start:
            seen[start] = 1
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = 1
            cyc.append(i)
            i = x[i]
        out.append(tuple(cyc))
    return out


def cycle_string(x: Perm) -> str:
    """Cycle notation with 1-based points; ``"()"`` for the identity."""
    cyc = cycles(x)
    if not cyc:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc)


class Permutation(tuple):
    """A bijection of ``{0, ..., degree-1}`` given by its image sequence.

    Compares and hashes exactly like the underlying tuple, so permutations and
    raw image tuples can be mixed freely in sets and dicts.
    """

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise PermutationError(f"not a bijection on 0..{len(images) - 1}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other):
        if len(other) != len(self):
            raise PermutationError("degree mismatch")
        return Permutation(mul(self, other))

    def __pow__(self, k):
        if isinstance(k, tuple):
            return Permutation(conj(self, k))
        return Permutation(power(self, k))

    def inverse(self) -> "Permutation":
        return Permutation(inv(self))

    def order(self) -> int:
        return element_order(self)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def __str__(self) -> str:
        return cycle_string(self)

    def __repr__(self) -> str:
        return f"Permutation({cycle_string(self)!r}, degree={len(self)})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse 1-based disjoint cycle notation such as ``"(1 2)(3 4)"``.

    Commas are accepted as separators.  Points not mentioned are fixed.
    """
    if degree < 1:
        raise PermutationError("degree must be positive")
    stripped = text.strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise PermutationError(f"malformed cycle text: {text!r}")
    images = list(range(degree))
    seen: set[int] = set()
    for body in _CYCLE_RE.findall(stripped):
        tokens = body.replace(",", " ").split()
        try:
            points = [int(t) for t in tokens]
        except ValueError:
            raise PermutationError(f"malformed cycle text: {text!r}") from None
        for pt in points:
            if pt < 1 or pt > degree:
                raise PermutationError(f"point {pt} outside 1..{degree}")
            if pt in seen:
                raise PermutationError(f"point {pt} repeated in {text!r}")
            seen.add(pt)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b - 1
    return Permutation(images)


def closure(
    generators: Iterable[Sequence[int]],
    cap: int | None = None,
    degree: int | None = None,
) -> tuple[list[Perm], list[Perm]]:
    """Enumerate the group generated by ``generators``.

    Returns ``(elements, used)`` where ``elements`` is sorted lexicographically
    and ``used`` is the sub-list of generators that actually enlarged the group
    (itself a generating set).  Raises :class:`CapExceeded` past ``cap``.
    """
    gens = [tuple(g) for g in generators]
    if degree is None:
        if not gens:
            raise ValueError("degree is required for an empty generating set")
        degree = len(gens[0])
    if any(len(g) != degree for g in gens):
        raise PermutationError("generators do not share one degree")
    if cap is None:
        cap = default_cap()
    elems, used = _closure_set(gens, degree, cap)
    return sorted(elems), used


def _closure_set(gens, degree, cap, start=None, start_used=()):
    if start is None:
        elems = {tuple(range(degree))}
    else:
        elems = set(start)
    used = list(start_used)
    for g in gens:
        if g in elems:
            continue
        used.append(g)
        queue = []
        for y in list(elems):
            z = mul(y, g)
            if z not in elems:
                elems.add(z)
                queue.append(z)
        i = 0
        while i < len(queue):
            y = queue[i]
            i += 1
            for s in used:
                z = mul(y, s)
                if z not in elems:
                    elems.add(z)
                    queue.append(z)
            if len(elems) > cap:
                raise CapExceeded(cap)
        if len(elems) > cap:
            raise CapExceeded(cap)
    return elems, used


class FiniteGroup:
    """A permutation group held as its full, sorted element list."""

    def __init__(
        self,
        generators: Iterable[Sequence[int]] = (),
        degree: int | None = None,
        name: str = "",
        cap: int | None = None,
        elements: Iterable[Sequence[int]] | None = None,
    ):
        gens = tuple(tuple(g) for g in generators)
        if degree is None:
            if gens:
                degree = len(gens[0])
            elif elements is not None:
                elements = [tuple(e) for e in elements]
                degree = len(elements[0])
            else:
                raise ValueError("degree is required")
        self.degree = degree
        self.name = name
        if elements is None:
            elems, used = closure(gens, cap=cap, degree=degree)
            self.elements: tuple[Perm, ...] = tuple(elems)
            self._gens = tuple(gens)
        else:
            self.elements = tuple(sorted(tuple(e) for e in elements))
            self._gens = gens if gens else None
        self.elset = frozenset(self.elements)
        # derived data (Sylow data, subnormalizers) keyed by computation
        self.memo: dict = {}

    # -- container protocol
    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.elset

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.degree == other.degree and self.elset == other.elset

    def __hash__(self) -> int:
        return hash(self.elset)

    def __repr__(self) -> str:
        label = self.name or type(self).__name__
        return f"<{label}: order {len(self)} on {self.degree} points>"

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return tuple(range(self.degree))

    @cached_property
    def generators(self) -> tuple[Perm, ...]:
        if self._gens is not None:
            return tuple(g for g in self._gens if any(i != j for i, j in enumerate(g)))
        # greedy generating set, largest orders first to keep it short
        ordered = sorted(self.elements, key=lambda e: (-element_order(e), e))
        _, used = _closure_set(ordered, self.degree, max(len(self), 1))
        return tuple(used)

    def subgroup(self, generators: Iterable[Sequence[int]], cap: int | None = None) -> "Subgroup":
        gens = [tuple(g) for g in generators]
        for g in gens:
            if g not in self.elset:
                raise ValueError(f"generator {cycle_string(g)} not in {self!r}")
        return Subgroup(self, generators=gens, cap=cap)

    def subgroup_from_elements(self, elements: Iterable[Sequence[int]], generators=None) -> "Subgroup":
        return Subgroup(self, elements=elements, generators=generators or ())

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, elements=[self.identity])

    def whole(self) -> "Subgroup":
        return Subgroup(self, elements=self.elements, generators=self.generators)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(mul(a, b) == mul(b, a) for a in gens for b in gens)

    @cached_property
    def orders(self) -> dict[Perm, int]:
        return {x: element_order(x) for x in self.elements}

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[Perm, ...], ...]:
        return conjugacy_classes(self)

    @cached_property
    def class_index(self) -> dict[Perm, int]:
        return {x: i for i, cls in enumerate(self.conjugacy_classes) for x in cls}

    def conjugacy_class(self, x: Sequence[int]) -> tuple[Perm, ...]:
        return self.conjugacy_classes[self.class_index[tuple(x)]]


class Subgroup(FiniteGroup):
    """A subgroup of ``parent`` with its own enumerated element set."""

    def __init__(self, parent: FiniteGroup, generators=(), elements=None, cap=None, name=""):
        super().__init__(generators, degree=parent.degree, name=name, cap=cap, elements=elements)
        self.parent = parent

    def is_subgroup_of(self, other: FiniteGroup) -> bool:
        return self.elset <= other.elset


def conjugacy_classes(G: FiniteGroup) -> tuple[tuple[Perm, ...], ...]:
    """Partition ``G`` into conjugacy classes, each sorted, ordered by least member.

    Each class is the orbit of a representative under conjugation by the
    generators of ``G``.
    """
    gens = G.generators
    seen: set[Perm] = set()
    classes = []
    for x in G.elements:
        if x in seen:
            continue
        orbit = [x]
        seen.add(x)
        i = 0
        while i < len(orbit):
            y = orbit[i]
            i += 1
            for g in gens:
                z = conj(y, g)
                if z not in seen:
                    seen.add(z)
                    orbit.append(z)
        classes.append(tuple(sorted(orbit)))
    return tuple(classes)


# -- group files -------------------------------------------------------------


def group_to_dict(G: FiniteGroup) -> dict:
    return {
        "name": G.name,
        "degree": G.degree,
        "generators": [cycle_string(g) for g in G.generators],
    }


def group_from_dict(data: dict, cap: int | None = None) -> FiniteGroup:
    try:
        degree = int(data["degree"])
        gens = [parse_permutation(s, degree) for s in data["generators"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"invalid group file: {exc}") from None
    return FiniteGroup(gens, degree=degree, name=str(data.get("name", "")), cap=cap)


def load_group(path: str | Path, cap: int | None = None) -> FiniteGroup:
    with open(path, encoding="utf-8") as fh:
        return group_from_dict(json.load(fh), cap=cap)


def save_group(G: FiniteGroup, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(group_to_dict(G), fh, indent=2)
        fh.write("\n")
