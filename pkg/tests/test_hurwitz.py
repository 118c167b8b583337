import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import naive_count, sympy_product, to_sympy
from deg3curves.hurwitz import (
    count_generating_tuples,
    count_tuples,
    count_vector,
    exists_generating_vector,
    find_witness,
    generates_full,
    product_one,
    verify_vector,
)
from deg3curves.words import parse_vector


def _direct_generating(g, labels):
    classes = [sorted(g.conjugacy_class(l).members) for l in labels]
    return sum(
        1 for tup in itertools.product(*classes)
        if g.product(tup) == g.identity_index and generates_full(g, tup)
    )


class TestCounting:
    def test_four_cycles(self, s4):
        assert count_tuples(s4.group, ["4A", "4A"]) == 6

    def test_three_cycles_a4(self, a4):
        assert count_tuples(a4.group, ["3A", "3A"]) == 0

    def test_empty_sequence(self, a4):
        assert count_tuples(a4.group, []) == 1
        assert count_tuples(a4.group, [], target=a4.i) == 0

    def test_targets_sum_to_class_product(self, s4):
        g = s4.group
        labels = ["2A", "3A", "4A"]
        vec = count_vector(g, labels)
        size = 1
        for l in labels:
            size *= len(g.conjugacy_class(l).members)
        assert sum(vec) == size

    def test_class_function(self, s4):
        g = s4.group
        vec = count_vector(g, ["2A", "2B", "3A"])
        for x in range(len(g)):
            for y in range(len(g)):
                assert vec[g.conjugate(x, y)] == vec[x]

    @pytest.mark.parametrize("labels", [["2A", "2A", "3A"], ["3A", "3B"], ["2A", "3A", "3A", "2A"]])
    def test_matches_naive_a4(self, a4, labels):
        g = a4.group
        for target in range(len(g)):
            assert count_tuples(g, labels, target) == naive_count(g, labels, target)


class TestGeneration:
    def test_four_cycle_pair_cyclic(self, s4):
        assert count_generating_tuples(s4.group, ["4A", "4A"]) == 0

    def test_table3_signature(self, s4):
        assert count_generating_tuples(s4.group, ["2A", "2A", "3A", "2B", "2B"]) > 0

    @pytest.mark.parametrize("name,labels", [
        ("a4", ["2A", "3A", "3A"]),
        ("a4", ["2A", "2A", "3A", "3B"]),
        ("s4", ["2A", "3A", "4A"]),
        ("s4", ["2A", "2A", "2B", "2B"]),
        ("s4", ["2A", "2A", "3A", "2B"]),
        ("a5", ["2A", "3A", "5A"]),
        ("a5", ["5A", "2A", "5B"]),
    ])
    def test_moebius_matches_filtering(self, request, name, labels):
        g = request.getfixturevalue(name).group
        assert count_generating_tuples(g, labels) == _direct_generating(g, labels)

    def test_existence(self, s4, a5):
        assert not exists_generating_vector(s4.group, ["2A", "2A", "2B", "2B", "2B"])
        assert exists_generating_vector(a5.group, ["5A", "2A", "5B"])
        assert not exists_generating_vector(a5.group, ["2A"])
        assert not exists_generating_vector(a5.group, [])

    def test_generates_full(self, a5, s4):
        g = a5.group
        assert generates_full(g, [g.element("(1 2 3 4 5)"), g.element("(1 3)(2 4)")])
        h = s4.group
        assert not generates_full(h, [h.element("(1 2 3 4)"), h.element("(1 3)(2 4)")])

    def test_sympy_cross_check(self, a5):
        from sympy.combinatorics import PermutationGroup

        g = a5.group
        w = find_witness(g, ["2A", "3A", "5A"])
        perms = [g.elements[x] for x in w.entries]
        assert sympy_product(perms).is_Identity
        assert PermutationGroup([to_sympy(p) for p in perms]).order() == 60


class TestWitness:
    def test_deterministic(self, s4):
        labels = ["2A", "2A", "3A", "2B", "2B"]
        w1, w2 = find_witness(s4.group, labels), find_witness(s4.group, labels)
        assert w1 == w2
        assert verify_vector(s4.group, w1.entries, labels).ok

    @pytest.mark.parametrize("labels", [["2A", "3A", "3B"], ["3B", "2A", "2A", "3A"]])
    def test_lexicographically_least(self, a4, labels):
        g = a4.group
        classes = [sorted(g.conjugacy_class(l).members) for l in labels]
        best = min(
            tup for tup in itertools.product(*classes)
            if g.product(tup) == g.identity_index and generates_full(g, tup)
        )
        assert find_witness(g, labels).entries == best

    def test_none_when_impossible(self, s4):
        assert find_witness(s4.group, ["4A", "4A"]) is None
        assert find_witness(s4.group, []) is None

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.sampled_from(["2A", "2B", "3A", "4A"]), min_size=1, max_size=5))
    def test_witness_iff_count(self, s4, labels):
        w = find_witness(s4.group, labels)
        n = count_generating_tuples(s4.group, labels)
        assert (w is not None) == (n > 0)
        if w is not None:
            assert verify_vector(s4.group, w.entries, labels).ok


class TestVerify:
    def test_table_vector(self, s4):
        g = s4.group
        v = parse_vector(g, "[i a][i][a][i a i a]=1", s4.binding)
        assert verify_vector(g, v).ok

    def test_reversed_inverted(self, s4):
        g = s4.group
        v = parse_vector(g, "[i a][i][a][i a i a]", s4.binding)
        back = [g.inv[x] for x in reversed(v)]
        assert product_one(g, back)
        assert verify_vector(g, back, [g.class_of[x] for x in v]).ok

    def test_product_fails(self, a4):
        report = verify_vector(a4.group, [a4.i] * 3)
        assert not report.product_one and not report.ok

    def test_class_mismatch(self, s4):
        g = s4.group
        v = parse_vector(g, "[i a][i][a][i a i a]", s4.binding)
        assert not verify_vector(g, v, ["2A", "2A", "3A", "2B"]).classes_match

    def test_non_generating(self, s4):
        g = s4.group
        x = g.element("(1 2 3 4)")
        report = verify_vector(g, [x, g.inv[x]])
        assert report.product_one and not report.generates
