from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from deg3curves.covering import Signature, rh_genus
from deg3curves.groups import parse_permutation
from deg3curves.triangle import (
    ABOVE,
    BELOW,
    IN_RANGE,
    ActionError,
    ParameterTuple,
    ParamsError,
    brill_noether_status,
    canonical_action,
    closed_form_genus,
    closed_form_genus_exact,
    complete_params,
    curve_invariants,
    feasibility,
    lattice,
    make_action,
    normalize_kind,
    params_from_signature,
    relations_hold,
    signatures_from_params,
)


def P(kind, **kw):
    return complete_params(kind, **kw)


class TestActions:
    def test_s4_ia(self, s4):
        assert s4.group.elements[s4.ia].render() == "(1 4 3 2)"
        assert s4.group.class_of[s4.ia] == "4A"
        assert s4.group.class_of[s4.ia_squared] == "2B"

    def test_a5_commutator(self, a5):
        assert a5.group.elements[a5.commutator_like].render() == "(1 4 5 2 3)"

    def test_a4_derived(self, a4):
        d = a4.derived()
        assert d["ia"][1] in ("3A", "3B")
        assert d["ia^2ia"][1] == "2A"

    def test_s3_rejected(self):
        with pytest.raises(ActionError, match="unsupported"):
            make_action("S4", parse_permutation("(1 2)", 3), parse_permutation("(1 2 3)", 3))

    def test_wrong_orders(self):
        with pytest.raises(ActionError):
            make_action("A4", parse_permutation("(1 2 3)", 4), parse_permutation("(1 2)(3 4)", 4))

    def test_group_mismatch(self):
        with pytest.raises(ActionError):
            make_action("A5", parse_permutation("(1 2)(3 4)", 4), parse_permutation("(1 2 3)", 4))

    def test_other_generators_same_kind(self):
        act = make_action("S4", parse_permutation("(3 4)", 4), parse_permutation("(1 2 3)", 4))
        assert len(act.group) == 24

    def test_normalize(self):
        assert normalize_kind(" s4 ") == "S4"
        with pytest.raises(ActionError):
            normalize_kind("S5")


class TestParams:
    def test_a4_table1(self, a4):
        sig = Signature(a4.group, ("2A", "2A", "2A", "3A", "3B"))
        assert params_from_signature(a4, sig) == ParameterTuple(s=2, t=6, r=2, k=0, e=6)

    def test_s4_mixed(self, s4):
        sig = Signature(s4.group, ("4A", "2A", "3A", "2B"))
        assert params_from_signature(s4, sig) == ParameterTuple(s=2, t=2, r=2, k=4, e=2)

    def test_unbranched(self, a5):
        sig = Signature(a5.group, (), gamma=1)
        assert params_from_signature(a5, sig) == ParameterTuple()

    def test_complete_params(self):
        assert P("A4", s=3, t=4) == ParameterTuple(3, 4, 3, 0, 4)
        assert P("A5", r=4, t=2) == ParameterTuple(0, 2, 4, 0, 4)
        with pytest.raises(ParamsError):
            complete_params("A4", s=2, r=3)
        with pytest.raises(ParamsError):
            complete_params("S4", q=1)

    def test_relations(self):
        assert relations_hold("S4", ParameterTuple(2, 2, 2, 4, 2))
        assert not relations_hold("A5", ParameterTuple(0, 2, 4, 4, 4))


class TestSplits:
    def test_a4_three_splits(self, a4):
        sigs = signatures_from_params(a4, P("A4", s=2, t=6))
        assert len(sigs) == 3
        assert all(rh_genus(s) == 6 for s in sigs)

    def test_s4_unique(self, s4):
        sigs = signatures_from_params(s4, P("S4", r=0, t=4, s=2, k=8))
        assert [s.branches for s in sigs] == [("2A", "2A", "2B", "2B", "3A")]

    def test_zero(self, a4):
        assert signatures_from_params(a4, ParameterTuple()) == []

    def test_divisibility_violation(self, s4):
        with pytest.raises(ParamsError):
            signatures_from_params(s4, P("S4", r=0, t=4, s=2, k=2))

    @pytest.mark.parametrize("kind", ["A4", "S4", "A5"])
    def test_closed_form_genus(self, kind):
        action = canonical_action(kind)
        for p in lattice(kind):
            for sig in signatures_from_params(action, p):
                assert closed_form_genus(kind, p) == rh_genus(sig)
                assert params_from_signature(action, sig) == p

    @settings(max_examples=80, deadline=None)
    @given(st.data())
    @pytest.mark.parametrize("kind", ["A4", "S4", "A5"])
    def test_roundtrip(self, kind, data):
        action = canonical_action(kind)
        labels = [c.label for c in action.group.conjugacy_classes if c.order > 1]
        branches = data.draw(st.lists(st.sampled_from(labels), min_size=1, max_size=8))
        try:
            sig = Signature(action.group, tuple(branches))
        except ValueError:
            return
        p = params_from_signature(action, sig)
        back = signatures_from_params(action, p)
        assert sorted(sig.branches) in [sorted(s.branches) for s in back]
        assert closed_form_genus_exact(kind, p) == rh_genus(sig)


class TestInvariants:
    def test_a4(self):
        inv = curve_invariants("A4", P("A4", s=2, t=6))
        assert (inv.h, inv.g, inv.b, inv.pa, inv.bsq) == (6, 2, 2, 5, 7)
        assert (inv.sing_B, inv.sing_D) == (3, 8)

    def test_s4(self):
        inv = curve_invariants("S4", P("S4", r=2, t=2, s=2, k=4))
        assert (inv.h, inv.g, inv.b, inv.pa, inv.bsq) == (6, 2, 3, 6, 7)

    def test_s4_table4(self):
        inv = curve_invariants("S4", P("S4", r=0, t=4, s=2, k=8))
        assert (inv.h, inv.g, inv.b, inv.pa, inv.bsq) == (9, 3, 4, 9, 6)

    def test_a5(self):
        inv = curve_invariants("A5", P("A5", r=4, s=0, t=2))
        assert (inv.h, inv.g, inv.b, inv.pa, inv.bsq) == (4, 2, 2, 4, 5)

    def test_non_integral(self):
        with pytest.raises(ParamsError):
            curve_invariants("A4", P("A4", s=1, t=1))

    def test_exact_genus_fraction(self):
        assert closed_form_genus_exact("A4", P("A4", s=0, t=1)) == Fraction(-19, 2)

    @pytest.mark.parametrize("g,pa,status", [(2, 5, ABOVE), (3, 4, IN_RANGE), (2, 2, BELOW), (4, 7, ABOVE), (4, 6, IN_RANGE)])
    def test_brill_noether(self, g, pa, status):
        assert brill_noether_status(g, pa) == status


class TestFeasibility:
    def test_feasible(self):
        v = feasibility("A4", P("A4", s=2, t=6))
        assert v.feasible and str(v) == "feasible"

    @pytest.mark.parametrize("kind,params,reason", [
        ("A4", dict(s=1, t=1), "integrality"),
        ("S4", dict(r=2, t=0, s=2, k=0), "parity"),
        ("S4", dict(r=0, t=2, s=3, k=1), "parity"),
        ("S4", dict(r=2, t=2, s=1, k=0), "integrality"),
        ("A5", dict(r=2, t=2, s=3), "divisibility"),
        ("A4", dict(s=2, t=0), "genus_bound"),
        ("A4", dict(s=0, t=2), "genus_bound"),
        ("A4", dict(s=11, t=2), "positivity_bound"),
        ("A5", dict(r=0, s=4, t=2), "genus_bound"),
    ])
    def test_reasons(self, kind, params, reason):
        v = feasibility(kind, P(kind, **params))
        assert not v.feasible and v.reason == reason, v

    def test_a4_last_table_row(self):
        assert feasibility("A4", P("A4", s=11, t=0)).feasible

    def test_relation(self):
        assert feasibility("A4", ParameterTuple(2, 6, 0, 0, 6)).reason == "relation"

    def test_lattice_sizes(self):
        assert [len(lattice(k)) for k in ("A4", "S4", "A5")] == [78, 243, 19]

    @pytest.mark.parametrize("kind", ["A4", "S4", "A5"])
    def test_feasible_rows_are_consistent(self, kind):
        for p in lattice(kind):
            if feasibility(kind, p).feasible:
                inv = curve_invariants(kind, p)
                assert inv.g >= 2 and inv.bsq > 0 and inv.pa > inv.g
