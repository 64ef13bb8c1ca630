"""Word rewriting and completion, checked against the embedded tables."""

import pytest

from ginvlab.errors import CompletionOverflow
from ginvlab.fixture import BASIS, GENERATORS, PRODUCTS, RELATIONS
from ginvlab.rewriting import (complete, irreducible_words, reduce_word,
                               structure_constants)


@pytest.fixture(scope="module")
def rules():
    return complete(RELATIONS, GENERATORS)


def test_reduce_word_basics(rules):
    assert reduce_word(("a", "x", "a"), rules) == ("a",)
    assert reduce_word(("x", "x"), rules) is None
    assert reduce_word(("a", "b", "x"), rules) is None
    assert reduce_word((), rules) == ()
    assert reduce_word(None, rules) is None


def test_rules_are_confluent_on_basis_products(rules):
    # every pairwise product of irreducible words lands on a basis word
    words = irreducible_words(rules, GENERATORS)
    for wi in words:
        for wj in words:
            nf = reduce_word(wi + wj, rules)
            assert nf is None or nf in words


def test_completion_reproduces_the_ten_word_basis(rules):
    words = irreducible_words(rules, GENERATORS)
    labels = tuple("".join(w) if w else "1" for w in words)
    assert labels == BASIS


def test_derived_constants_match_embedded_products(rules):
    # independent route: completion-derived table vs the embedded one
    words = irreducible_words(rules, GENERATORS)
    table = structure_constants(words, rules)
    for i in range(len(BASIS)):
        for j in range(len(BASIS)):
            assert table.get((i, j), -1) == PRODUCTS[i][j], (i, j)


def test_dropping_one_zero_relation_blows_up():
    # without b*a = 0 the quotient has unboundedly many irreducible words
    smaller = tuple(r for r in RELATIONS if r[0] != ("b", "a"))
    rules = complete(smaller, GENERATORS)
    with pytest.raises(CompletionOverflow):
        irreducible_words(rules, GENERATORS, max_words=500)


def test_completion_rule_cap():
    with pytest.raises(CompletionOverflow):
        complete(RELATIONS, GENERATORS, max_rules=2)


def test_unclosed_basis_rejected(rules):
    # a*x = ax escapes the claimed basis
    with pytest.raises(ValueError):
        structure_constants([(), ("a",), ("x",)], rules)
