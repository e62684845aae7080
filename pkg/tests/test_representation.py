import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import relations
from oracles import represents, series_value
from prefrep import (
    MissingValue,
    NotPreorder,
    NotSeparating,
    NotStronglyAcyclic,
    Relation,
    Stratification,
    Utility,
    Violation,
    argmax,
    asymmetric_part,
    closure_transfer_check,
    find_strong_cycle,
    is_strongly_acyclic,
    make_relation,
    normalize_to_unit_interval,
    reflexive_closure,
    representation_violations,
    synthesize,
    transitive_closure,
    utility_from_stratification,
    verify_representation,
)
from prefrep.oracle import GeneratorConfig, make_rng, random_pseudo_stratification, random_relation


def full(labels):
    return make_relation(labels, itertools.product(labels, repeat=2))


def utilities(rel, top=3):
    return st.lists(st.integers(0, top), min_size=rel.n, max_size=rel.n).map(
        lambda vs: Utility(dict(zip(rel.labels, vs)))
    )


class TestUtility:
    def test_exact_values(self):
        u = Utility({"a": 1, "b": Fraction(1, 3), "c": "2/7"})
        assert u["c"] == Fraction(2, 7)

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            Utility({"a": 0.5})

    def test_mapping_equality(self):
        assert Utility({"a": 1}) == Utility({"a": Fraction(2, 2)})

    def test_missing_value(self, example1):
        with pytest.raises(MissingValue):
            verify_representation(example1, Utility({"a": 1}))


class TestVerify:
    def test_example1(self, example1):
        assert verify_representation(example1, Utility({"a": 2, "b": 1, "c": 0}))

    def test_constant_on_full(self):
        assert verify_representation(full("abc"), Utility({"a": 0, "b": 0, "c": 0}))

    def test_intransitive_choice_stated_utility(self, intransitive_choice):
        assert verify_representation(intransitive_choice, Utility({"a": 1, "b": 0, "c": 0}))

    def test_violation_kinds(self, intransitive_choice):
        found = representation_violations(intransitive_choice, Utility({"a": 0, "b": 0, "c": 1}))
        assert found == [
            Violation("indifference-broken", "b", "c"),
            Violation("strict-not-increased", "a", "b"),
        ]

    @given(relations(max_n=5), st.data())
    @settings(max_examples=300)
    def test_matches_definition(self, rel, data):
        u = data.draw(utilities(rel))
        values = [u[x] for x in rel.labels]
        assert verify_representation(rel, u) == represents(rel.matrix.tolist(), values)
        assert verify_representation(rel, u) == (not representation_violations(rel, u))

    @given(relations(max_n=6), st.data())
    def test_reflexive_closure_same_representations(self, rel, data):
        u = data.draw(utilities(rel))
        assert verify_representation(rel, u) == verify_representation(reflexive_closure(rel), u)

    @given(relations(max_n=6), st.data())
    def test_representable_implies_strongly_acyclic(self, rel, data):
        u = data.draw(utilities(rel, top=rel.n))
        if verify_representation(rel, u):
            assert is_strongly_acyclic(rel)


class TestSynthesize:
    def test_example1_levels(self, example1):
        assert synthesize(example1) == Utility({"a": 2, "b": 1, "c": 0})

    def test_refuses_acyclic_example(self, acyclic_not_strong):
        with pytest.raises(NotStronglyAcyclic) as info:
            synthesize(acyclic_not_strong)
        assert info.value.witness.cycle == ("a", "b", "c")
        assert info.value.witness.strict_pair == ("c", "a")

    def test_single_element(self):
        assert synthesize(make_relation("a", [("a", "a")])) == Utility({"a": 0})

    def test_incomparable_may_share_level(self):
        rel = make_relation("abc", [("a", "b")])
        u = synthesize(rel)
        assert u["a"] == 1 and u["b"] == 0 and u["c"] == 0

    @given(relations(max_n=7))
    @settings(max_examples=300)
    def test_verifies_on_relation_and_closure(self, rel):
        if not is_strongly_acyclic(rel):
            with pytest.raises(NotStronglyAcyclic):
                synthesize(rel)
            return
        u = synthesize(rel)
        assert verify_representation(rel, u)
        assert verify_representation(transitive_closure(reflexive_closure(rel)), u)
        assert all(v.denominator == 1 for v in u.values())

    @given(relations(max_n=7))
    def test_strict_pairs_survive_closure(self, rel):
        if is_strongly_acyclic(rel):
            strict = asymmetric_part(rel).matrix
            closed = asymmetric_part(transitive_closure(rel)).matrix
            assert not (strict & ~closed).any()


class TestSeries:
    def test_chain_singletons(self, chain):
        # independent term-by-term values: a = 1 + 2/2 + 2/4, b = 1/2 + 2/4, c = 1/4
        u = utility_from_stratification(chain, Stratification.singletons(chain))
        expected = {
            x: series_value(chain.matrix.tolist(), chain._index, [("a",), ("b",), ("c",)], x)
            for x in "abc"
        }
        assert expected == {"a": Fraction(5, 2), "b": Fraction(1), "c": Fraction(1, 4)}
        assert dict(u) == expected
        assert verify_representation(chain, u) and u["a"] > u["b"] > u["c"]

    def test_single_reflexive(self):
        rel = make_relation("a", [("a", "a")])
        assert utility_from_stratification(rel, Stratification.of([["a"]])) == Utility({"a": 1})

    def test_total_indifference(self):
        u = utility_from_stratification(full("ab"), Stratification.of([["a", "b"]]))
        assert u == Utility({"a": 1, "b": 1})

    def test_not_preorder(self, example1):
        with pytest.raises(NotPreorder):
            utility_from_stratification(example1, Stratification.singletons(example1))

    def test_not_separating(self, example4):
        with pytest.raises(NotSeparating):
            utility_from_stratification(example4, Stratification.of([["a"]]))

    def test_example4_separating_pair(self, example4):
        u = utility_from_stratification(example4, Stratification.of([["a", "b"]]))
        assert verify_representation(example4, u)

    @pytest.mark.parametrize("seed", range(60))
    def test_random_preorders_match_oracle(self, seed):
        cfg = GeneratorConfig(7, seed, "preorder")
        rel = random_relation(cfg)
        strat = random_pseudo_stratification(rel, make_rng(cfg))
        u = utility_from_stratification(rel, strat)
        m = rel.matrix.tolist()
        for x in rel.labels:
            assert u[x] == series_value(m, rel._index, strat.strata, x)
        assert verify_representation(rel, u)
        bound = 2 ** (len(strat) - 1)
        assert all(bound % v.denominator == 0 for v in u.values())


class TestNormalize:
    def test_three_levels(self):
        u = normalize_to_unit_interval(Utility({"a": 2, "b": 1, "c": 0}))
        assert u == Utility({"a": Fraction(3, 4), "b": Fraction(1, 2), "c": Fraction(1, 4)})

    def test_constant(self):
        assert normalize_to_unit_interval(Utility({"a": 5, "b": 5})) == Utility({"a": "1/2", "b": "1/2"})

    @given(st.dictionaries(st.sampled_from("abcdef"), st.fractions(), min_size=1))
    def test_order_isomorphism(self, values):
        u = Utility(values)
        w = normalize_to_unit_interval(u)
        assert all(0 < v < 1 for v in w.values())
        for x, y in itertools.product(u, repeat=2):
            assert (u[x] < u[y]) == (w[x] < w[y])
            assert (u[x] == u[y]) == (w[x] == w[y])
        for r in range(1, len(u) + 1):
            for menu in itertools.combinations(u, r):
                assert argmax(u, menu) == argmax(w, menu)


class TestClosureTransfer:
    def test_example1(self, example1):
        assert closure_transfer_check(example1, Utility({"a": 2, "b": 1, "c": 0}))

    def test_preorder(self, chain):
        assert closure_transfer_check(chain, synthesize(chain))

    @given(relations(max_n=6), st.data())
    @settings(max_examples=300)
    def test_random(self, rel, data):
        assert closure_transfer_check(rel, data.draw(utilities(rel, top=rel.n)))
        if is_strongly_acyclic(rel):
            assert closure_transfer_check(rel, synthesize(rel))
