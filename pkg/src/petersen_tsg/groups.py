"""Small finite permutation groups: closure, element orders, identification.

Permutations are tuples ``p`` on the points ``0..n-1`` with ``p[i]`` the image
of ``i``.  Products follow function composition: ``compose(p, q)`` applies
``q`` first, then ``p``.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

Perm = tuple[int, ...]


class MixedDomains(ValueError):
    """Generators act on point sets of different sizes."""


class TooLarge(ValueError):
    """Group is larger than the subgroup enumerator supports."""


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """The permutation ``i -> p[q[i]]``."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_order(p: Perm) -> int:
    order = 1
    seen = [False] * len(p)
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


def from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Perm:
    """Permutation of ``0..n-1`` from disjoint cycles of point indices."""
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            img[a] = b
    if sorted(img) != list(range(n)):
        raise ValueError(f"cycles {cycles!r} do not describe a permutation")
    return tuple(img)


def to_cycles(p: Perm) -> list[tuple[int, ...]]:
    """Non-trivial cycles, each starting at its smallest point."""
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        i = p[start]
        while i != start:
            cyc.append(i)
            seen.add(i)
            i = p[i]
        out.append(tuple(cyc))
    return out


@dataclass(frozen=True)
class PermutationGroup:
    """A finite group given by its full element set and a generating list."""

    degree: int
    elements: frozenset[Perm]
    generators: tuple[Perm, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if identity(self.degree) not in self.elements:
            raise ValueError("group must contain the identity")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return p in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def is_abelian(self) -> bool:
        gens = self.generators or tuple(self.elements)
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)

    def is_subgroup_of(self, other: PermutationGroup) -> bool:
        return self.degree == other.degree and self.elements <= other.elements

    def is_closed(self) -> bool:
        return all(compose(a, b) in self.elements for a in self.elements for b in self.elements)


def closure(gens: Iterable[Perm], degree: int) -> frozenset[Perm]:
    """Element set of the group generated by ``gens`` (breadth-first products)."""
    gens = [g for g in gens if g != identity(degree)]
    elems = {identity(degree)}
    frontier = [identity(degree)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def generate(gens: Sequence[Perm], degree: int | None = None) -> PermutationGroup:
    """Smallest permutation group containing ``gens``.

    ``degree`` is only needed when ``gens`` is empty (it defaults to 0 then).
    """
    gens = tuple(tuple(g) for g in gens)
    sizes = {len(g) for g in gens}
    if degree is not None:
        sizes.add(degree)
    if len(sizes) > 1:
        raise MixedDomains(f"generators act on point sets of sizes {sorted(sizes)}")
    n = sizes.pop() if sizes else 0
    for g in gens:
        if sorted(g) != list(range(n)):
            raise ValueError(f"{g!r} is not a permutation")
    return PermutationGroup(n, closure(gens, n), gens)


def group_from_elements(elements: Iterable[Perm], degree: int) -> PermutationGroup:
    """Wrap an element set that is already known to be a group."""
    elems = frozenset(elements)
    grp = PermutationGroup(degree, elems, tuple(sorted(elems)))
    if not grp.is_closed():
        raise ValueError("element set is not closed under composition")
    return grp


def element_order_spectrum(group: PermutationGroup) -> Counter:
    """Multiset of element orders, as a ``Counter`` ``{order: count}``."""
    return Counter(perm_order(p) for p in group.elements)


def contains_klein_four(group: PermutationGroup) -> bool:
    """True iff two distinct commuting involutions exist (their product is then one too)."""
    e = identity(group.degree)
    invols = [p for p in group.elements if p != e and compose(p, p) == e]
    for i, a in enumerate(invols):
        for b in invols[i + 1 :]:
            if compose(a, b) == compose(b, a):
                return True
    return False


# -- catalog of subgroups of S5 --------------------------------------------


class GroupName(str, enum.Enum):
    TRIVIAL = "Trivial"
    Z2 = "Z2"
    Z3 = "Z3"
    Z4 = "Z4"
    Z5 = "Z5"
    Z6 = "Z6"
    D2 = "D2"
    D3 = "D3"
    D4 = "D4"
    D5 = "D5"
    D6 = "D6"
    A4 = "A4"
    F20 = "F20"
    S4 = "S4"
    A5 = "A5"
    S5 = "S5"
    UNRECOGNIZED = "Unrecognized"

    def __str__(self):
        return self.value


CATALOG: tuple[GroupName, ...] = tuple(g for g in GroupName if g is not GroupName.UNRECOGNIZED)


def _cycle(n: int) -> Perm:
    return tuple((i + 1) % n for i in range(n))


def _reflection(n: int) -> Perm:
    return tuple((-i) % n for i in range(n))


def _reference_generators() -> dict[GroupName, tuple[Perm, ...]]:
    """Small faithful permutation representations of every catalog group."""
    s = lambda *cycles, n=5: from_cycles(cycles, n)  # noqa: E731
    refs = {GroupName.TRIVIAL: ()}
    for n, name in ((2, GroupName.Z2), (3, GroupName.Z3), (4, GroupName.Z4),
                    (5, GroupName.Z5), (6, GroupName.Z6)):
        refs[name] = (_cycle(n),)
    refs[GroupName.D2] = (s((0, 1), n=4), s((2, 3), n=4))
    for n, name in ((3, GroupName.D3), (4, GroupName.D4), (5, GroupName.D5), (6, GroupName.D6)):
        refs[name] = (_cycle(n), _reflection(n))
    refs[GroupName.A4] = (s((0, 1, 2), n=4), s((1, 2, 3), n=4))
    refs[GroupName.S4] = (s((0, 1, 2, 3), n=4), s((0, 1), n=4))
    # affine maps x -> a x + b over Z/5
    refs[GroupName.F20] = (_cycle(5), tuple((2 * i) % 5 for i in range(5)))
    refs[GroupName.A5] = (s((0, 1, 2)), s((0, 1, 2, 3, 4)))
    refs[GroupName.S5] = (s((0, 1, 2, 3, 4)), s((0, 1)))
    return refs


def _signature(group: PermutationGroup) -> tuple:
    spectrum = element_order_spectrum(group)
    return group.order, group.is_abelian(), tuple(sorted(spectrum.items()))


@lru_cache(maxsize=None)
def catalog_signatures() -> dict[tuple, GroupName]:
    """Map (order, abelian, order spectrum) -> name for the reference groups."""
    table = {}
    for name, gens in _reference_generators().items():
        degree = len(gens[0]) if gens else 1
        sig = _signature(generate(gens, degree))
        if sig in table:
            raise AssertionError(f"signature clash between {table[sig]} and {name}")
        table[sig] = name
    return table


def reference_group(name: GroupName) -> PermutationGroup:
    gens = _reference_generators()[GroupName(name)]
    return generate(gens, len(gens[0]) if gens else 1)


def identify(group: PermutationGroup) -> GroupName:
    """Name of ``group`` among the subgroups of S5, or ``GroupName.UNRECOGNIZED``.

    Identification is by order, commutativity and element-order spectrum, which
    separate the sixteen isomorphism classes of subgroups of S5.
    """
    return catalog_signatures().get(_signature(group), GroupName.UNRECOGNIZED)


def symmetric_group(n: int) -> PermutationGroup:
    if n <= 1:
        return generate([], max(n, 0))
    gens = [_cycle(n), from_cycles([(0, 1)], n)]
    return generate(gens)


# -- subgroup enumeration -----------------------------------------------------


def all_subgroups(group: PermutationGroup, limit: int = 120) -> list[PermutationGroup]:
    """Every subgroup of ``group``.

    Starts from the cyclic subgroups and repeatedly joins each known subgroup
    with one more element until nothing new appears; this reaches every
    2-generated subgroup and then every join of those.
    """
    if group.order > limit:
        raise TooLarge(f"group of order {group.order} exceeds the limit {limit}")
    elems = sorted(group.elements)
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[compose(a, b)] for b in elems] for a in elems]
    e = index[identity(group.degree)]

    def close(seed: frozenset[int], extra: int) -> frozenset[int]:
        members = set(seed)
        gens = [extra] + sorted(seed)
        frontier = [extra] if extra not in members else []
        members.add(extra)
        frontier += list(seed)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = table[g][x]
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(members)

    found: set[frozenset[int]] = {frozenset([e])}
    queue = []
    for i in range(len(elems)):
        h = close(frozenset([e]), i)
        if h not in found:
            found.add(h)
            queue.append(h)
    while queue:
        nxt = []
        for h in queue:
            for i in range(len(elems)):
                if i in h:
                    continue
                j = close(h, i)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        queue = nxt
    out = [
        PermutationGroup(group.degree, frozenset(elems[i] for i in h), tuple(elems[i] for i in sorted(h)))
        for h in found
    ]
    out.sort(key=lambda g: (g.order, sorted(g.elements)))
    return out


def subgroup_classes(group: PermutationGroup) -> set[GroupName]:
    """Isomorphism classes (catalog names) of all subgroups of ``group``."""
    return {identify(h) for h in all_subgroups(group)}


# -- signed automorphisms --------------------------------------------------------


@dataclass(frozen=True, order=True)
class SignedAutomorphism:
    """An automorphism tagged with +1 (orientation preserving) or -1."""

    perm: Perm
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def __mul__(self, other: SignedAutomorphism) -> SignedAutomorphism:
        return SignedAutomorphism(compose(self.perm, other.perm), self.sign * other.sign)

    def inverse(self) -> SignedAutomorphism:
        return SignedAutomorphism(inverse(self.perm), self.sign)

    @property
    def order(self) -> int:
        return perm_order(self.perm)

    @property
    def sign_char(self) -> str:
        return "+" if self.sign > 0 else "-"


def signed_closure(gens: Iterable[SignedAutomorphism], degree: int) -> frozenset[SignedAutomorphism]:
    one = SignedAutomorphism(identity(degree), 1)
    gens = list(gens)
    elems = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def is_closed_signed(elements: Iterable[SignedAutomorphism]) -> bool:
    elems = set(elements)
    return all(a * b in elems for a in elems for b in elems)


def project(elements: Iterable[SignedAutomorphism], sign: int | None = None) -> frozenset[Perm]:
    """Underlying permutations, optionally restricted to one sign."""
    return frozenset(s.perm for s in elements if sign is None or s.sign == sign)
