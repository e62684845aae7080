import itertools

import pytest
from hypothesis import given, settings

from conftest import relations
from prefrep import (
    CycleWitness,
    ParseError,
    find_strong_cycle,
    implies_acyclic_check,
    is_acyclic,
    is_strongly_acyclic,
    is_transitive,
    make_relation,
    reflexive_closure,
    transitive_closure,
)
from prefrep.oracle import brute_force_strong_acyclicity


def full(labels):
    return make_relation(labels, itertools.product(labels, repeat=2))


def diagonal(labels):
    return make_relation(labels, [(x, x) for x in labels])


def strict_cycle_exists(rel):
    """Definition of acyclicity: no x1 > x2 > ... > xn > x1, by path enumeration."""
    m = rel.matrix
    n = rel.n
    for k in range(1, n + 1):
        for path in itertools.permutations(range(n), k):
            steps = list(zip(path, path[1:] + path[:1]))
            if all(m[i, j] and not m[j, i] for i, j in steps):
                return True
    return False


class TestIsAcyclic:
    def test_acyclic_example(self, acyclic_not_strong):
        assert is_acyclic(acyclic_not_strong)

    def test_strict_three_cycle(self, strict_cycle):
        assert not is_acyclic(strict_cycle)

    def test_diagonal(self):
        assert is_acyclic(diagonal("abc"))

    @given(relations(max_n=5))
    @settings(max_examples=150)
    def test_matches_definition(self, rel):
        assert is_acyclic(rel) == (not strict_cycle_exists(rel))


class TestStrongAcyclicity:
    def test_acyclic_example_witness(self, acyclic_not_strong):
        witness = find_strong_cycle(acyclic_not_strong)
        assert witness == CycleWitness(("a", "b", "c"), 2)
        assert witness.strict_pair == ("c", "a")
        assert witness.holds_in(acyclic_not_strong)
        assert not is_strongly_acyclic(acyclic_not_strong)

    def test_strict_three_cycle(self, strict_cycle):
        witness = find_strong_cycle(strict_cycle)
        assert witness is not None and witness.holds_in(strict_cycle)

    def test_full_relation(self):
        assert is_strongly_acyclic(full("abc"))

    def test_example1(self, example1):
        assert is_strongly_acyclic(example1)

    def test_self_loops_never_violate(self):
        assert is_strongly_acyclic(make_relation("ab", [("a", "a"), ("a", "b")]))

    def test_witness_is_shortest_back_path(self):
        # strict a > b, and b reaches a both directly-ish (b~c~a) and through d
        rel = make_relation(
            "abcd", [("a", "b"), ("b", "c"), ("c", "b"), ("c", "a"), ("a", "c"), ("b", "d"), ("d", "a")]
        )
        witness = find_strong_cycle(rel)
        assert witness.holds_in(rel)
        assert len(witness.cycle) == 3

    @given(relations(max_n=6))
    @settings(max_examples=300)
    def test_matches_cycle_enumeration(self, rel):
        assert is_strongly_acyclic(rel) == brute_force_strong_acyclicity(rel)

    @given(relations(max_n=7))
    @settings(max_examples=200)
    def test_witness_replays(self, rel):
        witness = find_strong_cycle(rel)
        if witness is not None:
            assert witness.holds_in(rel)
            assert CycleWitness.parse(witness.format()) == witness

    @given(relations(max_n=6))
    def test_implies_acyclic(self, rel):
        assert implies_acyclic_check(rel)
        if is_strongly_acyclic(rel):
            assert is_acyclic(rel)

    @given(relations(max_n=6))
    def test_antisymmetric_equivalence(self, rel):
        m = rel.matrix.copy()
        for i, j in itertools.combinations(range(rel.n), 2):
            if m[i, j] and m[j, i]:
                m[j, i] = False
        anti = type(rel)(rel.labels, m)
        assert is_acyclic(anti) == is_strongly_acyclic(anti)

    @given(relations(max_n=7))
    def test_preorders_are_strongly_acyclic(self, rel):
        pre = transitive_closure(reflexive_closure(rel))
        assert is_transitive(pre) and is_strongly_acyclic(pre)


class TestImpliesAcyclicCheck:
    def test_vacuous(self, acyclic_not_strong):
        assert implies_acyclic_check(acyclic_not_strong)

    def test_example1(self, example1):
        assert implies_acyclic_check(example1)

    def test_full(self):
        assert implies_acyclic_check(full("abc"))


class TestWitnessFormat:
    def test_format(self, acyclic_not_strong):
        assert find_strong_cycle(acyclic_not_strong).format() == "cycle: a b c ; strict: c>a"

    def test_parse(self):
        assert CycleWitness.parse("cycle: a b c ; strict: c>a") == CycleWitness(("a", "b", "c"), 2)

    @pytest.mark.parametrize("line", ["cycle a b", "cycle: a b ; strict: b>c", "nope: a ; strict: a>a"])
    def test_parse_errors(self, line):
        with pytest.raises(ParseError):
            CycleWitness.parse(line)

    def test_bad_witness_does_not_replay(self, example1):
        assert not CycleWitness(("a", "b"), 0).holds_in(example1)
        assert not CycleWitness(("a", "zz"), 0).holds_in(example1)
