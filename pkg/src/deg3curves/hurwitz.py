"""Generating vectors for genus-zero quotients.

A generating vector for a class sequence (C_1, ..., C_r) is a tuple
(c_1, ..., c_r) with c_i in C_i, c_1 c_2 ... c_r = 1 and <c_1, ..., c_r> = G.
Counting is over raw ordered tuples. Exact generation is obtained by
Moebius inversion over the subgroup lattice:

    #generating = sum_H mu(H, G) * #{product-one tuples with c_i in C_i & H}
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .groups import GroupTable


@dataclass(frozen=True)
class GeneratingVector:
    entries: tuple[int, ...]
    class_labels: tuple[str, ...]

    @classmethod
    def of(cls, g: GroupTable, entries: Sequence[int]) -> GeneratingVector:
        return cls(tuple(entries), tuple(g.class_of[x] for x in entries))

    def render(self, g: GroupTable) -> str:
        from .words import render_vector

        return render_vector(g, self.entries)


@dataclass(frozen=True)
class VectorReport:
    product_one: bool
    generates: bool
    classes_match: bool
    class_labels: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.product_one and self.generates and self.classes_match

    def as_dict(self) -> dict:
        return {
            "product_one": self.product_one,
            "generates": self.generates,
            "classes_match": self.classes_match,
            "class_labels": list(self.class_labels),
        }


def product_one(g: GroupTable, entries: Sequence[int]) -> bool:
    return g.product(entries) == g.identity_index


def generates_full(g: GroupTable, entries: Sequence[int]) -> bool:
    return len(g.closure(entries)) == len(g)


def _class_members(g: GroupTable, labels: Sequence[str], within: int | None = None) -> list[list[int]]:
    out = []
    for label in labels:
        members = sorted(g.conjugacy_class(label).members)
        if within is not None:
            members = [x for x in members if within >> x & 1]
        out.append(members)
    return out


def _fold(g: GroupTable, vec: list[int], members: Sequence[int]) -> list[int]:
    """Right-multiply every counted product by an element of ``members``."""
    out = [0] * len(g)
    mul = g.mul
    for x, n in enumerate(vec):
        if n:
            row = mul[x]
            for c in members:
                out[row[c]] += n
    return out


def count_vector(g: GroupTable, labels: Sequence[str], within: int | None = None) -> list[int]:
    """Number of tuples with each possible product, indexed by element."""
    vec = [0] * len(g)
    vec[g.identity_index] = 1
    for members in _class_members(g, labels, within):
        vec = _fold(g, vec, members)
    return vec


def count_tuples(g: GroupTable, labels: Sequence[str], target: int | None = None) -> int:
    """Tuples (c_1..c_r), c_i in class ``labels[i]``, whose product is ``target``
    (the identity by default)."""
    if target is None:
        target = g.identity_index
    return count_vector(g, labels)[target]


def count_generating_tuples(g: GroupTable, labels: Sequence[str]) -> int:
    lattice = g.subgroup_lattice
    if len(g) > 1 and not labels:
        return 0
    total = 0
    for h, mu in zip(lattice.subgroups, lattice.mu_top):
        if mu:
            total += mu * count_vector(g, labels, within=h)[g.identity_index]
    return total


def exists_generating_vector(g: GroupTable, labels: Sequence[str]) -> bool:
    return count_generating_tuples(g, labels) > 0


def _suffix_tables(g: GroupTable, labels: Sequence[str], within: int) -> list[list[int]]:
    """tables[j][y]: tuples (c_j..c_r) inside ``within`` with product y."""
    r = len(labels)
    members = _class_members(g, labels, within)
    tables = [[0] * len(g) for _ in range(r + 1)]
    tables[r][g.identity_index] = 1
    for j in range(r - 1, -1, -1):
        nxt, cur = tables[j + 1], tables[j]
        for y, n in enumerate(nxt):
            if n:
                for c in members[j]:
                    cur[g.mul[c][y]] += n
    return tables


def find_witness(g: GroupTable, labels: Sequence[str]) -> GeneratingVector | None:
    """Lexicographically least generating vector (by element index), or None.

    Every prefix is extended only if it still has a generating completion;
    that count is exact (Moebius sum of subgroup-restricted suffix counts),
    so the walk never backtracks.
    """
    labels = list(labels)
    if not labels:
        return None
    lattice = g.subgroup_lattice
    active = [n for n, mu in enumerate(lattice.mu_top) if mu]
    suffix = {n: _suffix_tables(g, labels, lattice.subgroups[n]) for n in active}

    def completions(j: int, prefix_product: int, subgroups: list[int]) -> int:
        need = g.inv[prefix_product]
        return sum(lattice.mu_top[n] * suffix[n][j][need] for n in subgroups)

    if completions(0, g.identity_index, active) <= 0:
        return None
    entries: list[int] = []
    prod = g.identity_index
    subgroups = active
    for j, members in enumerate(_class_members(g, labels)):
        for c in members:
            nxt = [n for n in subgroups if lattice.subgroups[n] >> c & 1]
            p = g.mul[prod][c]
            if completions(j + 1, p, nxt) > 0:
                entries.append(c)
                prod, subgroups = p, nxt
                break
        else:  # pragma: no cover - exact counts make this unreachable
            raise AssertionError("witness search lost its completion")
    return GeneratingVector.of(g, entries)


def verify_vector(g: GroupTable, entries: Sequence[int], expected: Sequence[str] | None = None) -> VectorReport:
    """Check product one, generation, and (as a multiset) the class sequence."""
    labels = tuple(g.class_of[x] for x in entries)
    if expected is None:
        match = all(g.orders[x] > 1 for x in entries)
    else:
        match = Counter(labels) == Counter(expected)
    return VectorReport(
        product_one=bool(entries) and product_one(g, entries),
        generates=bool(entries) and generates_full(g, entries),
        classes_match=match,
        class_labels=labels,
    )
