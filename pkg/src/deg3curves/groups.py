"""Finite permutation groups with dense multiplication tables.

Elements are referred to by their index in :attr:`GroupTable.elements`
everywhere except at the boundary (parsing and rendering). Products are
rightmost-first: ``(a*b)(x) == a(b(x))``.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

DEFAULT_CAP = 10080

# (order, sorted class sizes) -> kind tag
FINGERPRINTS = {
    (12, (1, 3, 4, 4)): "A4",
    (24, (1, 3, 6, 6, 8)): "S4",
    (60, (1, 12, 12, 15, 20)): "A5",
}


class GroupError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``{1..degree}``; ``mapping[p-1]`` is the image of ``p``."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(1, len(self.mapping) + 1)):
            raise GroupError(f"not a permutation of 1..{len(self.mapping)}: {self.mapping}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for p in cycle:
                if p < 1 or p > degree:
                    raise GroupError(f"point {p} outside 1..{degree}")
                if p in seen:
                    raise GroupError(f"point {p} repeated")
                seen.add(p)
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.mapping)

    def __call__(self, point: int) -> int:
        return self.mapping[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for p, q in enumerate(self.mapping, start=1):
            inv[q - 1] = p
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        out = []
        seen = set()
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            p = self(start)
            while p != start:
                cycle.append(p)
                seen.add(p)
                p = self(p)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def render(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __str__(self):
        return self.render()


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1 2)(4 5)"``.

    Points inside a cycle are separated by spaces and/or commas. An empty
    string or ``"()"`` is the identity.
    """
    stripped = text.strip()
    if stripped in ("", "()"):
        return Permutation.identity(degree)
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise GroupError(f"malformed cycle notation: {text!r}")
        body = [tok for tok in re.split(r"[\s,]+", m.group(1).strip()) if tok]
        if len(body) < 2 or not all(tok.isdigit() for tok in body):
            raise GroupError(f"malformed cycle {m.group(0)!r}")
        cycles.append([int(tok) for tok in body])
        pos = m.end()
    if stripped[pos:].strip() or not cycles:
        raise GroupError(f"malformed cycle notation: {text!r}")
    return Permutation.from_cycles(cycles, degree)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``a*b``: apply ``b`` first, then ``a``."""
    if a.degree != b.degree:
        raise GroupError(f"degree mismatch: {a.degree} vs {b.degree}")
    return Permutation(tuple(a.mapping[q - 1] for q in b.mapping))


@dataclass(frozen=True)
class ConjugacyClass:
    label: str
    representative: int
    members: frozenset[int]
    order: int

    @property
    def size(self) -> int:
        return len(self.members)


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for x in indices:
        m |= 1 << x
    return m


def _members(mask: int) -> list[int]:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return out


class GroupTable:
    """A finite permutation group with full multiplication and inverse tables.

    Elements are sorted lexicographically by their image tuple, so the
    identity is always index 0 and indexing does not depend on the
    generators used to build the group.
    """

    def __init__(self, elements: Sequence[Permutation]):
        self.elements: tuple[Permutation, ...] = tuple(sorted(elements))
        self.index = {p: n for n, p in enumerate(self.elements)}
        n = len(self.elements)
        degree = self.elements[0].degree
        self.identity_index = self.index[Permutation.identity(degree)]
        self.mul: tuple[tuple[int, ...], ...] = tuple(
            tuple(self.index[compose(a, b)] for b in self.elements) for a in self.elements
        )
        self.inv: tuple[int, ...] = tuple(self.index[p.inverse()] for p in self.elements)
        if any(len(row) != n for row in self.mul):
            raise GroupError("multiplication table is not square")

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"GroupTable(order={len(self)}, kind={self.kind_tag})"

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return self.elements[0].degree

    def element(self, perm: Permutation | str) -> int:
        """Index of a permutation (or cycle-notation text) in this group."""
        if isinstance(perm, str):
            perm = parse_permutation(perm, self.degree)
        try:
            return self.index[perm]
        except KeyError:
            raise GroupError(f"{perm} is not in the group") from None

    def product(self, entries: Iterable[int]) -> int:
        acc = self.identity_index
        for x in entries:
            acc = self.mul[acc][x]
        return acc

    def power(self, x: int, n: int) -> int:
        if n < 0:
            x, n = self.inv[x], -n
        acc = self.identity_index
        for _ in range(n):
            acc = self.mul[acc][x]
        return acc

    def conjugate(self, x: int, by: int) -> int:
        """``by^-1 * x * by``."""
        return self.mul[self.mul[self.inv[by]][x]][by]

    @cached_property
    def orders(self) -> tuple[int, ...]:
        out = []
        for x in range(len(self)):
            n, acc = 1, x
            while acc != self.identity_index:
                acc = self.mul[acc][x]
                n += 1
            out.append(n)
        return tuple(out)

    def element_order(self, x: int) -> int:
        return self.orders[x]

    def centralizer_order(self, x: int) -> int:
        row = self.mul[x]
        return sum(1 for y in range(len(self)) if row[y] == self.mul[y][x])

    def cyclic_subgroup(self, x: int) -> tuple[int, ...]:
        out = [self.identity_index]
        acc = x
        while acc != self.identity_index:
            out.append(acc)
            acc = self.mul[acc][x]
        return tuple(out)

    @cached_property
    def conjugacy_classes(self) -> tuple[ConjugacyClass, ...]:
        seen = [False] * len(self)
        orbits = []
        for x in range(len(self)):
            if seen[x]:
                continue
            orbit = {self.conjugate(x, g) for g in range(len(self))}
            for y in orbit:
                seen[y] = True
            orbits.append(orbit)
        # orbits come out in ascending order of smallest member
        orbits.sort(key=lambda o: (self.orders[min(o)], min(o)))
        classes = []
        letters: dict[int, int] = {}
        for orbit in orbits:
            rep = min(orbit)
            m = self.orders[rep]
            letter = chr(ord("A") + letters.get(m, 0))
            letters[m] = letters.get(m, 0) + 1
            classes.append(ConjugacyClass(f"{m}{letter}", rep, frozenset(orbit), m))
        return tuple(classes)

    @cached_property
    def class_of(self) -> tuple[str, ...]:
        """Class label for every element index."""
        labels = [""] * len(self)
        for c in self.conjugacy_classes:
            for x in c.members:
                labels[x] = c.label
        return tuple(labels)

    def conjugacy_class(self, label: str) -> ConjugacyClass:
        for c in self.conjugacy_classes:
            if c.label == label:
                return c
        known = ", ".join(c.label for c in self.conjugacy_classes)
        raise GroupError(f"unknown class {label!r} (have {known})")

    @cached_property
    def kind_tag(self) -> str:
        sizes = tuple(sorted(c.size for c in self.conjugacy_classes))
        return FINGERPRINTS.get((len(self), sizes), "other")

    @cached_property
    def subgroup_lattice(self) -> SubgroupLattice:
        return build_subgroup_lattice(self)

    def closure(self, generators: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by the given element indices."""
        elems = {self.identity_index}
        gens = list(dict.fromkeys(generators))
        queue = deque([self.identity_index])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.mul[x][g]
                if y not in elems:
                    elems.add(y)
                    queue.append(y)
        return frozenset(elems)


def build_group(generators: Sequence[Permutation], cap: int = DEFAULT_CAP) -> GroupTable:
    """Close ``generators`` under multiplication and tabulate the result."""
    if not generators:
        raise GroupError("need at least one generator")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise GroupError("generators have different degrees")
    ident = Permutation.identity(degree)
    elems = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = compose(x, g)
            if y not in elems:
                elems.add(y)
                if len(elems) > cap:
                    raise GroupError(f"closure exceeds cap of {cap} elements")
                queue.append(y)
    return GroupTable(list(elems))


def element_order(g: GroupTable, e: int) -> int:
    return g.element_order(e)


def centralizer_order(g: GroupTable, e: int) -> int:
    return g.centralizer_order(e)


def conjugacy_classes(g: GroupTable) -> tuple[ConjugacyClass, ...]:
    return g.conjugacy_classes


@dataclass(frozen=True)
class SubgroupLattice:
    """All subgroups of a group, as bitmasks over element indices.

    ``subgroups`` is ordered by decreasing size (the whole group first, the
    trivial group last); ``mu_top[n]`` is the Moebius value mu(H_n, G).
    """

    subgroups: tuple[int, ...]
    mu_top: tuple[int, ...]

    def __len__(self):
        return len(self.subgroups)

    def members(self, n: int) -> list[int]:
        return _members(self.subgroups[n])

    def leq(self, a: int, b: int) -> bool:
        """Subgroup ``a`` is contained in subgroup ``b``."""
        return self.subgroups[a] & ~self.subgroups[b] == 0

    def containing(self, elements: Iterable[int]) -> list[int]:
        m = _mask(elements)
        return [n for n, h in enumerate(self.subgroups) if m & ~h == 0]


def build_subgroup_lattice(g: GroupTable, max_order: int = 60) -> SubgroupLattice:
    """Enumerate subgroups as joins of cyclic subgroups until nothing new appears."""
    if len(g) > max_order:
        raise GroupError(f"lattice enumeration limited to order {max_order}")
    cyclic = {_mask(g.cyclic_subgroup(x)) for x in range(len(g))}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        fresh = set()
        for h in frontier:
            for c in cyclic:
                if c & ~h == 0:
                    continue
                j = _mask(g.closure(_members(h | c)))
                if j not in found:
                    fresh.add(j)
        found |= fresh
        frontier = fresh
    subs = sorted(found, key=lambda m: (-bin(m).count("1"), m))
    mu: list[int] = []
    for n, h in enumerate(subs):
        if n == 0:
            mu.append(1)
            continue
        mu.append(-sum(mu[k] for k in range(n) if h & ~subs[k] == 0 and subs[k] != h))
    return SubgroupLattice(tuple(subs), tuple(mu))
