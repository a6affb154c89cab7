"""Permutations of the 7-point alphabet and the order-168 simple group they generate.

Everything acts on the right: ``p.apply`` maps a point through a permutation,
and ``p * q`` means "apply p, then q".  Canonical order on permutations is
lexicographic on the image tuple, so "pick the least element" is well defined.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

DEGREE = 7
POINTS = tuple(range(1, DEGREE + 1))


@dataclass(frozen=True, order=True)
class Perm:
    """A bijection of {1, ..., 7}, stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(POINTS):
            raise ValueError(f"not a bijection of {POINTS}: {self.images}")

    @staticmethod
    def identity() -> "Perm":
        return _IDENTITY

    @staticmethod
    def from_cycles(*cycles: tuple[int, ...]) -> "Perm":
        images = list(POINTS)
        for cycle in cycles:
            for i, pt in enumerate(cycle):
                images[pt - 1] = cycle[(i + 1) % len(cycle)]
        return Perm(tuple(images))

    def apply(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        # apply self first, then other
        return Perm(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> "Perm":
        inv = [0] * DEGREE
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == _IDENTITY.images

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def cycles(self) -> str:
        """Canonical cycle notation, e.g. ``(1 5)(3 7)``; identity is ``()``."""
        seen = set()
        parts = []
        for start in POINTS:
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.apply(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.apply(nxt)
            if len(cycle) > 1:
                parts.append("(" + " ".join(map(str, cycle)) + ")")
        return "".join(parts) or "()"

    def __repr__(self):
        return f"Perm[{self.cycles()}]"


_IDENTITY = Perm(POINTS)


def commutator(g: Perm, h: Perm) -> Perm:
    return g.inverse() * h.inverse() * g * h


def conjugate(g: Perm, h: Perm) -> Perm:
    """g^h = h^-1 g h (right conjugation)."""
    return h.inverse() * g * h


@dataclass(frozen=True)
class PermGroup:
    elements: frozenset[Perm]
    generators: tuple[Perm, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self.elements

    def sorted_elements(self) -> list[Perm]:
        return sorted(self.elements)


def closure(gens) -> PermGroup:
    """Smallest group containing ``gens`` (breadth-first multiplication)."""
    gens = tuple(sorted(set(gens)))
    if not gens:
        raise ValueError("need at least one generator")
    seen = {_IDENTITY}
    frontier = [_IDENTITY]
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q not in seen:
                    seen.add(q)
                    new.append(q)
        frontier = new
    return PermGroup(frozenset(seen), gens)


def conjugacy_classes(group: PermGroup) -> list[frozenset[Perm]]:
    classes = []
    assigned = set()
    for g in group.sorted_elements():
        if g in assigned:
            continue
        cls = frozenset(conjugate(g, h) for h in group.elements)
        assigned |= cls
        classes.append(cls)
    return classes


def is_perfect(group: PermGroup) -> bool:
    """True iff the group equals the closure of its commutators."""
    comms = {commutator(g, h) for g in group.elements for h in group.elements}
    return closure(comms).elements == group.elements


def is_simple(group: PermGroup) -> bool:
    """True iff the normal closure of every nontrivial element is the whole group.

    The trivial group is conventionally not simple.  Normal closures are
    constant on conjugacy classes, so one representative per class suffices.
    """
    if group.size == 1:
        return False
    for cls in conjugacy_classes(group):
        rep = next(iter(cls))
        if rep.is_identity():
            continue
        if closure(cls).elements != group.elements:
            return False
    return True


def is_two_transitive(group: PermGroup) -> bool:
    """True iff the orbit of the ordered pair (1, 2) has size 7 * 6 = 42."""
    orbit = {(g.apply(1), g.apply(2)) for g in group.elements}
    return len(orbit) == DEGREE * (DEGREE - 1)


def find_swappers(group: PermGroup, p: int, q: int) -> list[Perm]:
    """All elements exchanging p and q, in canonical (lexicographic) order."""
    if p == q:
        raise ValueError("points must differ")
    return [g for g in group.sorted_elements() if g.apply(p) == q and g.apply(q) == p]


def find_fix_move(group: PermGroup, fix: int, move: int) -> Perm:
    """Canonically least element fixing ``fix`` and moving ``move``."""
    if fix == move:
        raise ValueError("points must differ")
    for g in group.sorted_elements():
        if g.apply(fix) == fix and g.apply(move) != move:
            return g
    raise LookupError(f"no element fixes {fix} and moves {move}")


# The three reflections generating PSL(3,2) in its action on the Fano labels.
X = Perm.from_cycles((1, 5), (3, 7))
Y = Perm.from_cycles((2, 3), (6, 7))
Z = Perm.from_cycles((4, 6), (5, 7))


@functools.cache
def psl32() -> PermGroup:
    """The order-168 group generated by the reflections x, y, z."""
    return closure({X, Y, Z})
