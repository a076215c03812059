import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import tree_embedding_closure, tree_embedding_closure_rows
from wqolab.errors import DomainError, ParseError
from wqolab.orders import FiniteQO
from wqolab.trees import (
    Tree,
    degree,
    embedding_table,
    embeds,
    enumerate_trees,
    format_tree,
    is_graded,
    leaf,
    parse_tree,
)

CHAIN2 = FiniteQO.chain(2)
EQ2 = FiniteQO.equality(2)


def t(label, *children):
    return Tree(label, tuple(children))


class TestDegree:
    def test_leaf(self):
        assert degree(leaf(0)) == 0

    def test_two_leaf_children(self):
        assert degree(t(0, leaf(0), leaf(1))) == 2

    def test_inner_dominates(self):
        assert degree(t(0, t(1, leaf(0), leaf(0), leaf(1)))) == 3


class TestEmbeds:
    def test_leaf_into_leaf_by_label(self):
        assert embeds(CHAIN2, leaf(0), leaf(1))
        assert not embeds(CHAIN2, leaf(1), leaf(0))

    def test_tree_into_own_wrapper(self):
        inner = t(0, leaf(1), leaf(0))
        assert embeds(EQ2, inner, t(1, inner))

    def test_inner_never_into_leaf(self):
        assert not embeds(CHAIN2, t(0, leaf(0)), leaf(1))

    def test_label_outside_order_rejected(self):
        with pytest.raises(DomainError):
            embeds(CHAIN2, leaf(7), leaf(0))

    def test_child_sequence_must_dominate(self):
        s = t(1, leaf(0), leaf(0))
        assert embeds(CHAIN2, t(0, leaf(0)), s)
        assert not embeds(EQ2, t(1, leaf(1), leaf(1)), t(1, leaf(1), leaf(0)))

    @given(st.integers(0, 1), st.integers(1, 5))
    def test_reflexive_on_enumerated(self, label_count, max_nodes):
        order = FiniteQO.chain(label_count + 1)
        for tree in enumerate_trees(order, max_nodes):
            assert embeds(order, tree, tree)

    def test_transitive_on_small_universe(self):
        universe = enumerate_trees(CHAIN2, 4)
        rows = embedding_table(CHAIN2, universe)
        n = len(universe)
        # if i embeds into j, everything j embeds into is reachable from i
        for i in range(n):
            for j in range(n):
                if (rows[i] >> j) & 1:
                    assert rows[i] | rows[j] == rows[i]

    def test_grafting_closure(self):
        base = t(0, leaf(1))
        for wrapper in (t(1, base), t(0, base, leaf(1)), t(1, leaf(0), base)):
            assert embeds(EQ2, base, wrapper)


class TestOracleEquivalence:
    @pytest.mark.parametrize("order", [EQ2, CHAIN2], ids=["equality", "chain"])
    def test_saturation_matches_stratified(self, order):
        universe = enumerate_trees(order, 4)
        saturated = tree_embedding_closure(order, universe)
        rows = tree_embedding_closure_rows(order, universe)
        derived = {(i, j) for i in range(len(universe)) for j in range(len(universe)) if (rows[i] >> j) & 1}
        assert saturated == derived

    @pytest.mark.parametrize("order", [EQ2, CHAIN2], ids=["equality", "chain"])
    def test_embeds_matches_closure_small(self, order):
        universe = enumerate_trees(order, 4)
        closure = tree_embedding_closure(order, universe)
        for i, a in enumerate(universe):
            for j, b in enumerate(universe):
                assert embeds(order, a, b) == ((i, j) in closure), (a, b)

    @pytest.mark.parametrize("order", [EQ2, CHAIN2], ids=["equality", "chain"])
    def test_table_matches_recursive_embeds(self, order):
        universe = enumerate_trees(order, 5)
        rows = embedding_table(order, universe)
        for i, a in enumerate(universe):
            for j, b in enumerate(universe):
                assert embeds(order, a, b) == bool((rows[i] >> j) & 1), (a, b)

    def test_degree_bound_monotone(self):
        one = FiniteQO.chain(1)
        for n in range(4):
            smaller = enumerate_trees(one, 5, bound=n)
            larger = enumerate_trees(one, 5, bound=n + 1)
            assert set(smaller) <= set(larger)
            rows_small = embedding_table(one, smaller)
            rows_large = embedding_table(one, larger)
            pos = {tree: k for k, tree in enumerate(larger)}
            for i, a in enumerate(smaller):
                for j, b in enumerate(smaller):
                    small_bit = (rows_small[i] >> j) & 1
                    large_bit = (rows_large[pos[a]] >> pos[b]) & 1
                    assert small_bit == large_bit


class TestEnumerate:
    def test_single_leaf(self):
        one = FiniteQO.chain(1)
        assert enumerate_trees(one, 1) == [leaf(0)]

    def test_one_label_three_nodes(self):
        one = FiniteQO.chain(1)
        assert len(enumerate_trees(one, 3)) == 4

    def test_two_labels_two_nodes(self):
        assert len(enumerate_trees(CHAIN2, 2)) == 6

    def test_degree_bound_respected(self):
        one = FiniteQO.chain(1)
        for tree in enumerate_trees(one, 5, bound=1):
            assert degree(tree) <= 1

    def test_bad_max_nodes(self):
        with pytest.raises(DomainError):
            enumerate_trees(CHAIN2, 0)

    def test_deterministic(self):
        assert enumerate_trees(CHAIN2, 4) == enumerate_trees(CHAIN2, 4)


class TestGraded:
    def test_leaf_grade_zero(self):
        assert is_graded(leaf(0), {0: 0})

    def test_binary_node(self):
        assert is_graded(t(1, leaf(0), leaf(0)), {0: 0, 1: 2})

    def test_arity_mismatch(self):
        assert not is_graded(t(1, leaf(0)), {0: 0, 1: 2})

    def test_missing_grade(self):
        with pytest.raises(DomainError):
            is_graded(leaf(3), {0: 0})


class TestTreeText:
    def test_parse_nested(self):
        tree = parse_tree("0[1,1[0]]")
        assert tree == t(0, leaf(1), t(1, leaf(0)))

    def test_named_labels(self):
        tree = parse_tree("q[a,b[c]]", {"q": 0, "a": 1, "b": 2, "c": 3})
        assert tree.size == 4

    def test_whitespace_insignificant(self):
        assert parse_tree(" 0 [ 1 , 1 ] ") == parse_tree("0[1,1]")

    def test_bare_and_bracketed_leaves_agree(self):
        assert parse_tree("5") == parse_tree("5[]")

    def test_round_trip(self):
        for tree in enumerate_trees(CHAIN2, 4):
            assert parse_tree(format_tree(tree)) == tree

    def test_unknown_name(self):
        with pytest.raises(ParseError):
            parse_tree("q[z]", {"q": 0})

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse_tree("0[1]:")

    def test_missing_bracket(self):
        with pytest.raises(ParseError):
            parse_tree("0[1")
