"""Actions of A4, S4 and A5 generated by an involution i and an order-3 element a.

Fixed-point parameters of such an action on D:

    s = nu(a)   t = nu(i)   r = nu(ia)   r + k = nu((ia)^2)   e = nu(i a^2 i a)

and the curves C = D/<a>, B = D/<i>, with B~ in C^(2) the degree-three
image of B.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .covering import Signature, nu
from .groups import GroupTable, Permutation, build_group, parse_permutation

KINDS = ("A4", "S4", "A5")

# canonical (i, a) representatives and degree
REPRESENTATIVES = {
    "A4": ("(1 2)(3 4)", "(1 2 3)", 4),
    "S4": ("(1 2)", "(1 4 3)", 4),
    "A5": ("(1 2)(4 5)", "(1 4 3)", 5),
}

# the parameters a user supplies; the rest follow from the kind relations
FREE_PARAMS = {
    "A4": ("s", "t"),
    "S4": ("r", "t", "s", "k"),
    "A5": ("r", "s", "t"),
}


class ActionError(ValueError):
    pass


class ParamsError(ValueError):
    pass


def normalize_kind(kind: str) -> str:
    k = kind.strip().upper()
    if k not in KINDS:
        raise ActionError(f"unknown group {kind!r}; expected one of a4, s4, a5")
    return k


@dataclass(frozen=True, order=True)
class ParameterTuple:
    s: int = 0
    t: int = 0
    r: int = 0
    k: int = 0
    e: int = 0

    def as_dict(self) -> dict[str, int]:
        return {"s": self.s, "t": self.t, "r": self.r, "k": self.k, "e": self.e}

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.s, self.t, self.r, self.k, self.e)

    def key(self, kind: str) -> tuple[int, ...]:
        """Sort key in the free-parameter order of ``kind``."""
        return tuple(getattr(self, p) for p in FREE_PARAMS[kind])


def relations_hold(kind: str, p: ParameterTuple) -> bool:
    if kind == "A4":
        return p.k == 0 and p.r == p.s and p.e == p.t
    if kind == "S4":
        return p.e == p.s
    return p.k == 0 and p.e == p.r


def complete_params(kind: str, **given: int) -> ParameterTuple:
    """Fill in the parameters fixed by the kind relations (A4: r=s, e=t, k=0;
    S4: e=s; A5: k=0, e=r) and check any that were given explicitly."""
    kind = normalize_kind(kind)
    unknown = set(given) - {"s", "t", "r", "k", "e"}
    if unknown:
        raise ParamsError(f"unknown parameter(s) {sorted(unknown)}")
    vals = {p: given.get(p, 0) for p in FREE_PARAMS[kind]}
    if kind == "A4":
        derived = dict(r=vals["s"], e=vals["t"], k=0)
    elif kind == "S4":
        derived = dict(e=vals["s"])
    else:
        derived = dict(e=vals["r"], k=0)
    for name, value in derived.items():
        if name in given and given[name] != value:
            raise ParamsError(f"{name}={given[name]} contradicts the {kind} relations ({name}={value})")
    return ParameterTuple(**{**vals, **derived})


@dataclass(frozen=True)
class TriangleAction:
    kind: str
    group: GroupTable
    i: int
    alpha: int

    @property
    def ia(self) -> int:
        return self.group.mul[self.i][self.alpha]

    @property
    def ia_squared(self) -> int:
        return self.group.power(self.ia, 2)

    @property
    def commutator_like(self) -> int:
        """i a^2 i a"""
        g = self.group
        return g.product([self.i, self.alpha, self.alpha, self.i, self.alpha])

    @property
    def binding(self) -> dict[str, int]:
        return {"i": self.i, "a": self.alpha, "a2": self.group.power(self.alpha, 2)}

    def derived(self) -> dict[str, tuple[str, str]]:
        g = self.group
        out = {}
        for name, x in [("i", self.i), ("a", self.alpha), ("ia", self.ia),
                        ("(ia)^2", self.ia_squared), ("ia^2ia", self.commutator_like)]:
            out[name] = (g.elements[x].render(), g.class_of[x])
        return out


def make_action(kind: str, i: Permutation, alpha: Permutation) -> TriangleAction:
    kind = normalize_kind(kind)
    if i.degree != alpha.degree:
        raise ActionError("i and alpha act on different numbers of points")
    group = build_group([i, alpha])
    ii, aa = group.element(i), group.element(alpha)
    if group.orders[ii] != 2 or group.orders[aa] != 3:
        raise ActionError("i must have order 2 and alpha order 3")
    if group.kind_tag != kind:
        raise ActionError(
            f"unsupported: diagram completes or group mismatch "
            f"(<i, alpha> has order {len(group)}, kind {group.kind_tag})"
        )
    action = TriangleAction(kind, group, ii, aa)
    check = {
        "A4": lambda: group.class_of[action.commutator_like] == group.class_of[ii],
        "S4": lambda: group.class_of[action.commutator_like] == group.class_of[aa],
        "A5": lambda: group.orders[action.commutator_like] == 5,
    }[kind]
    if not check():
        raise ActionError(f"i a^2 i a has unexpected class for {kind}")
    return action


@lru_cache(maxsize=None)
def canonical_action(kind: str) -> TriangleAction:
    kind = normalize_kind(kind)
    i, a, degree = REPRESENTATIVES[kind]
    return make_action(kind, parse_permutation(i, degree), parse_permutation(a, degree))


def params_from_signature(action: TriangleAction, sig: Signature) -> ParameterTuple:
    if sig.group is not action.group:
        raise ValueError("signature belongs to a different group")
    r = nu(sig, action.ia)
    p = ParameterTuple(
        s=nu(sig, action.alpha),
        t=nu(sig, action.i),
        r=r,
        k=nu(sig, action.ia_squared) - r,
        e=nu(sig, action.commutator_like),
    )
    if not relations_hold(action.kind, p) or min(p.as_dict().values()) < 0:
        raise AssertionError(f"internal inconsistency: {p} from {sig} violates {action.kind} relations")
    return p


@lru_cache(maxsize=None)
def class_contributions(action: TriangleAction) -> dict[str, ParameterTuple]:
    """Parameter increment from one branch point of each non-trivial class."""
    g = action.group
    out = {}
    for c in g.conjugacy_classes:
        if c.order > 1:
            # a signature is validated on construction; the increment is linear,
            # so it can be read off a single-branch signature with gamma = 1.
            out[c.label] = params_from_signature(action, Signature(g, (c.label,), gamma=1))
    return out


def class_splits(action: TriangleAction, params: ParameterTuple) -> list[tuple[str, ...]]:
    """Every non-empty class multiset whose per-branch contributions sum to ``params``.

    No genus-zero admissibility check is made. Labels are listed in class order;
    the list is sorted by label multiplicities (most branches on the earliest class first).
    """
    g = action.group
    contrib = class_contributions(action)
    labels = [c.label for c in g.conjugacy_classes if c.order > 1]
    target = params.as_tuple()
    vecs = [contrib[label].as_tuple() for label in labels]
    bounds = []
    for label, vec in zip(labels, vecs):
        if not any(vec):
            raise ParamsError(f"class {label} leaves every parameter unchanged")
        bounds.append(min(tv // v for tv, v in zip(target, vec) if v))
    out = []
    for counts in iproduct(*(range(b, -1, -1) for b in bounds)):
        total = tuple(sum(n * vec[j] for n, vec in zip(counts, vecs)) for j in range(5))
        if total != target:
            continue
        branches = tuple(l for n, l in zip(counts, labels) for _ in range(n))
        if branches:
            out.append(branches)
    if not out and any(target) and not divisible(action.kind, params):
        raise ParamsError(f"{params} violates the {action.kind} divisibility constraints")
    return out


def signatures_from_params(action: TriangleAction, params: ParameterTuple) -> list[Signature]:
    """Every admissible genus-zero signature whose fixed-point parameters equal ``params``."""
    out = []
    for branches in class_splits(action, params):
        try:
            out.append(Signature(action.group, branches, 0))
        except ValueError:
            continue
    return out


def divisible(kind: str, p: ParameterTuple) -> bool:
    if min(p.as_dict().values()) < 0:
        return False
    if kind == "A4":
        return p.t % 2 == 0
    if kind == "S4":
        return p.s % 2 == 0 and p.t % 2 == 0 and p.r % 2 == 0 and p.k % 4 == 0
    return p.s % 2 == 0 and p.t % 2 == 0 and p.r % 2 == 0


def closed_form_genus_exact(kind: str, p: ParameterTuple) -> Fraction:
    kind = normalize_kind(kind)
    s, t, r, k = (Fraction(x) for x in (p.s, p.t, p.r, p.k))
    if kind == "A4":
        return 4 * s + Fraction(3, 2) * t - 11
    if kind == "S4":
        return -23 + 3 * t + 4 * s + Fraction(9, 2) * r + Fraction(3, 2) * k
    return -59 + Fraction(15, 2) * t + 10 * s + 12 * r


def closed_form_genus(kind: str, p: ParameterTuple) -> int:
    """Genus of D for a genus-zero quotient, from the kind's closed formula."""
    h = closed_form_genus_exact(kind, p)
    if h.denominator != 1:
        raise ParamsError(f"non-integral genus {h} for {p}")
    return int(h)


BELOW, IN_RANGE, ABOVE = "below", "in_range", "above"


def brill_noether_status(g: int, pa: int) -> str:
    """Position of p_a relative to the open interval (g, 2g - 1)."""
    if pa <= g:
        return BELOW
    if pa >= 2 * g - 1:
        return ABOVE
    return IN_RANGE


@dataclass(frozen=True)
class CurveInvariants:
    h: int
    g: int
    b: int
    pa: int
    sing_B: int
    sing_D: int
    bsq: int
    bn_status: str

    def as_dict(self) -> dict:
        return asdict(self)


def _raw_invariants(kind: str, p: ParameterTuple) -> dict[str, Fraction]:
    h = closed_form_genus_exact(kind, p)
    g = (h + 2 - p.s) / 3
    b = (2 * h + 2 - p.t) / 4
    sing_b = Fraction(p.e + p.k, 2)
    return {
        "h": h,
        "g": g,
        "b": b,
        "pa": b + sing_b,
        "sing_B": sing_b,
        "sing_D": Fraction(p.e + p.r + p.k),
        "bsq": h - 1 - 3 * (2 * g - 2) + p.e + p.k + p.r,
    }


def curve_invariants(kind: str, p: ParameterTuple) -> CurveInvariants:
    kind = normalize_kind(kind)
    raw = _raw_invariants(kind, p)
    bad = [name for name, v in raw.items() if v.denominator != 1]
    if bad:
        raise ParamsError(f"non-integral {', '.join(bad)} for {kind} {p}")
    vals = {name: int(v) for name, v in raw.items()}
    return CurveInvariants(**vals, bn_status=brill_noether_status(vals["g"], vals["pa"]))


@dataclass(frozen=True)
class Verdict:
    feasible: bool
    reason: str | None = None
    detail: str = ""

    def __str__(self):
        return "feasible" if self.feasible else f"infeasible({self.reason})"


# checked in this order; the first failure is reported. The S4 parity test
# comes before integrality: t + r = 0 mod 4 is exactly what makes b integral.
CONSTRAINTS = ("relation", "parity", "integrality", "divisibility", "genus_bound", "positivity_bound", "pa_bound")


def feasibility(kind: str, p: ParameterTuple) -> Verdict:
    kind = normalize_kind(kind)
    if not relations_hold(kind, p):
        return Verdict(False, "relation", f"{p} violates the {kind} relations")
    if kind == "S4" and (p.t + p.r) % 4:
        return Verdict(False, "parity", "t + r must be a multiple of 4")
    raw = _raw_invariants(kind, p)
    bad = [n for n in ("h", "g", "b", "pa") if raw[n].denominator != 1]
    if bad:
        return Verdict(False, "integrality", f"non-integral {', '.join(bad)}")
    if not divisible(kind, p):
        return Verdict(False, "divisibility", "fixed-point counts not realizable by branch points")
    if raw["g"] < 2:
        return Verdict(False, "genus_bound", f"g = {raw['g']} < 2")
    if raw["bsq"] <= 0:
        return Verdict(False, "positivity_bound", f"B~^2 = {raw['bsq']} <= 0")
    if not raw["g"] < raw["pa"]:
        return Verdict(False, "pa_bound", f"p_a = {raw['pa']} <= g = {raw['g']}")
    return Verdict(True)


def lattice(kind: str) -> list[ParameterTuple]:
    return list(_lattice(normalize_kind(kind)))


@lru_cache(maxsize=None)
def _lattice(kind: str) -> tuple[ParameterTuple, ...]:
    """Tuples with valid divisibility and B~^2 > 0, ascending in free-parameter order.

    B~^2 > 0 bounds every free parameter (A4: s + t/2 <= 11;
    S4: 3t + s + 7r/2 + k/2 <= 23; A5: 15t/2 + 8s + 10r <= 59).
    """
    kind = normalize_kind(kind)
    steps = {"s": 1 if kind == "A4" else 2, "t": 2, "r": 2, "k": 4}
    free = FREE_PARAMS[kind]
    out = []

    def rec(prefix: dict[str, int], rest: tuple[str, ...]):
        if not rest:
            p = complete_params(kind, **prefix)
            if _raw_invariants(kind, p)["bsq"] > 0:
                out.append(p)
            return
        name = rest[0]
        v = 0
        while True:
            trial = {**prefix, name: v}
            # raising any parameter only lowers B~^2, so stop at the first zero-rest failure
            p = complete_params(kind, **trial)
            if _raw_invariants(kind, p)["bsq"] <= 0:
                break
            rec(trial, rest[1:])
            v += steps[name]

    rec({}, free)
    return tuple(sorted(out, key=lambda p: p.key(kind)))
