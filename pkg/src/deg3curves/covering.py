"""Branched covers D -> D/G: genus, fixed-point counts and graph intersections."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

from .groups import GroupTable


class SignatureError(ValueError):
    pass


@dataclass(frozen=True)
class Signature:
    """Quotient genus plus one conjugacy-class label per branch point.

    Construction fails if a label is unknown or trivial, or if the
    Riemann-Hurwitz right-hand side is odd or gives a negative genus.
    """

    group: GroupTable = field(repr=False)
    branches: tuple[str, ...]
    gamma: int = 0

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))
        if self.gamma < 0:
            raise SignatureError("quotient genus must be non-negative")
        for label in self.branches:
            c = self.group.conjugacy_class(label)
            if c.order == 1:
                raise SignatureError("branch monodromy must be non-trivial")
        twice = self._twice_euler()
        if twice % 2:
            raise SignatureError(f"Riemann-Hurwitz parity fails for {self.branches}")
        if twice // 2 + 1 < 0:
            raise SignatureError(f"negative genus for {self.branches}")

    def _twice_euler(self) -> int:
        n = len(self.group)
        total = n * (2 * self.gamma - 2)
        for label in self.branches:
            m = self.group.conjugacy_class(label).order
            total += (n // m) * (m - 1)
        return total

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(self.group.conjugacy_class(b).order for b in self.branches)

    @cached_property
    def profile(self) -> FixedPointProfile:
        return fixed_point_profile(self)

    def __str__(self):
        return f"({self.gamma}; {', '.join(self.branches) or '-'})"


def rh_genus(sig: Signature) -> int:
    """Genus h of the cover: 2h - 2 = |G|(2 gamma - 2) + sum (|G|/m)(m - 1)."""
    return sig._twice_euler() // 2 + 1


def _class_hits(g: GroupTable, label: str, target_label: str) -> int:
    """Number of j in [1, m) with c^j in the class ``target_label``."""
    c = g.conjugacy_class(label)
    return sum(1 for j in range(1, c.order) if g.class_of[g.power(c.representative, j)] == target_label)


def branch_contribution(g: GroupTable, branch_label: str, beta: int) -> int:
    """Fixed points of ``beta`` over a single branch point of class ``branch_label``."""
    m = g.conjugacy_class(branch_label).order
    num = g.centralizer_order(beta) * _class_hits(g, branch_label, g.class_of[beta])
    if num % m:
        raise ArithmeticError(f"non-integral fixed-point count for {branch_label}")
    return num // m


def nu_macbeath(sig: Signature, beta: int) -> int:
    """Fixed points of ``beta`` on the cover, by the closed class formula

    nu(beta) = sum_i |C(beta)| * #{j in [1, m_i): c_i^j ~ beta} / m_i.
    """
    if beta == sig.group.identity_index:
        raise ValueError("nu is undefined for the identity")
    return sum(branch_contribution(sig.group, b, beta) for b in sig.branches)


def nu_coset_oracle(sig: Signature, beta: int) -> int:
    """Fixed points of ``beta`` counted directly: over branch i the fibre is
    G/<c_i>, and ``beta`` fixes the coset x<c_i> iff x^-1 beta x is in <c_i>."""
    g = sig.group
    if beta == g.identity_index:
        raise ValueError("nu is undefined for the identity")
    total = 0
    for label in sig.branches:
        c = g.conjugacy_class(label).representative
        stab = set(g.cyclic_subgroup(c))
        covered: set[int] = set()
        for x in range(len(g)):
            if x in covered:
                continue
            covered.update(g.mul[x][h] for h in stab)
            if g.conjugate(beta, x) in stab:
                total += 1
    return total


@dataclass(frozen=True)
class FixedPointProfile:
    """nu for every non-identity element; class-constant by construction."""

    nu: Mapping[int, int]
    by_class: Mapping[str, int]

    def __getitem__(self, beta: int) -> int:
        return self.nu[beta]


def fixed_point_profile(sig: Signature) -> FixedPointProfile:
    g = sig.group
    by_class = {}
    for c in g.conjugacy_classes:
        if c.order > 1:
            by_class[c.label] = nu_macbeath(sig, c.representative)
    nu = {x: by_class[g.class_of[x]] for x in range(len(g)) if x != g.identity_index}
    return FixedPointProfile(nu, by_class)


def nu(sig: Signature, beta: int, verify: bool = False) -> int:
    """Cached fixed-point count; with ``verify`` also runs the coset oracle."""
    value = sig.profile[beta]
    if verify:
        check = nu_coset_oracle(sig, beta)
        if check != value:
            raise AssertionError(f"nu mismatch on {sig}: formula {value}, oracle {check}")
    return value


def graph_intersection(sig: Signature, a: int, b: int) -> int:
    """Intersection number of the graphs of ``a`` and ``b``, i.e. nu(a^-1 b)."""
    if a == b:
        raise ValueError("self-intersection of a graph is not handled")
    g = sig.group
    return nu_macbeath(sig, g.mul[g.inv[a]][b])


def divisibility_constraints(g: GroupTable, class_label: str) -> int:
    """Fixed points of a class representative contributed by one branch point of the
    same class; nu of that class is a multiple of this for every signature that
    only branches over it."""
    c = g.conjugacy_class(class_label)
    if c.order == 1:
        raise ValueError("trivial class")
    return branch_contribution(g, class_label, c.representative)


def make_signature(g: GroupTable, branches: Sequence[str], gamma: int = 0) -> Signature:
    return Signature(g, tuple(branches), gamma)
