from itertools import product

import pytest
from hypothesis import given, strategies as st

from polyideal import GREVLEX, LEX, Graded, HomogInduced, graded, parse_order
from polyideal.errors import ArityMismatch, ExponentOverflow, NotDivisible, ParseError
from polyideal.monomials import (
    EQ,
    GT,
    LT,
    compare_monomials,
    div_monomial,
    lcm_monomial,
    monomial_divides,
    mul_monomial,
)

from oracles import graded_cmp, grevlex_cmp, lex_cmp, monomials_upto
from strategies import monomials

ORDERS = [LEX, GREVLEX, graded(LEX), HomogInduced(GREVLEX), HomogInduced(LEX)]


def test_examples():
    assert compare_monomials(LEX, (1, 0, 0), (0, 2, 0)) == GT
    assert compare_monomials(GREVLEX, (3, 0, 0), (2, 1, 0)) == GT
    assert compare_monomials(GREVLEX, (2, 1, 0), (3, 0, 0)) == LT
    for o in ORDERS:
        assert compare_monomials(o, (1, 2, 3), (1, 2, 3)) == EQ


def test_arity_checked():
    with pytest.raises(ArityMismatch):
        compare_monomials(LEX, (1, 0), (1, 0, 0))


def test_divisibility_helpers():
    assert monomial_divides((1, 0), (2, 1))
    assert not monomial_divides((0, 2), (2, 1))
    assert div_monomial((2, 1), (1, 0)) == (1, 1)
    assert lcm_monomial((2, 0, 1), (1, 3, 0)) == (2, 3, 1)
    with pytest.raises(NotDivisible):
        div_monomial((2, 1), (0, 2))
    with pytest.raises(ExponentOverflow):
        mul_monomial((2**32 - 1,), (1,))


def test_exhaustive_against_definitions():
    mons = monomials_upto(3, 5)
    for a, b in product(mons, repeat=2):
        assert compare_monomials(LEX, a, b) == lex_cmp(a, b)
        assert compare_monomials(GREVLEX, a, b) == grevlex_cmp(a, b)
        assert compare_monomials(graded(LEX), a, b) == graded_cmp(lex_cmp)(a, b)


def test_graded_is_idempotent():
    once = graded(LEX)
    twice = Graded(Graded(LEX))
    assert twice is once or twice == once
    assert isinstance(twice.base, type(LEX))
    mons = monomials_upto(3, 5)
    for a, b in product(mons, repeat=2):
        assert twice.compare(a, b) == once.compare(a, b)


def test_homog_induced_definition():
    o = HomogInduced(GREVLEX)
    # base decides on the original variables
    assert o.compare((1, 0, 0), (0, 1, 5)) == GT
    # tie on the original part: the smaller power of h is the smaller
    # monomial, which keeps 1 below h
    assert o.compare((1, 0, 1), (1, 0, 2)) == LT
    assert o.compare((0, 0, 0), (0, 0, 1)) == LT


@pytest.mark.parametrize("order", ORDERS, ids=repr)
@given(a=monomials(3), b=monomials(3), c=monomials(3))
def test_order_axioms(order, a, b, c):
    ab, ba = order.compare(a, b), order.compare(b, a)
    assert ab == -ba
    assert (ab == EQ) == (a == b)
    if ab == GT and order.compare(b, c) == GT:
        assert order.compare(a, c) == GT
    assert order.compare(mul_monomial(a, c), mul_monomial(b, c)) == ab
    assert order.compare(a, (0, 0, 0)) in (GT, EQ)


@pytest.mark.parametrize("order", ORDERS, ids=repr)
@given(a=monomials(3), b=monomials(3))
def test_keys_agree_with_compare(order, a, b):
    c = order.compare(a, b)
    assert (order.key(a) > order.key(b)) == (c == GT)
    assert (order.rkey(a) < order.rkey(b)) == (c == GT)


@pytest.mark.parametrize(
    "text,expected",
    [("lex", LEX), ("GREVLEX", GREVLEX), ("degrevlex", GREVLEX), ("graded(lex)", graded(LEX)),
     ("graded(graded(lex))", graded(LEX)), ("homog(grevlex)", HomogInduced(GREVLEX))],
)
def test_parse_order(text, expected):
    assert parse_order(text) == expected


def test_parse_order_errors():
    with pytest.raises(ParseError):
        parse_order("weird")
    with pytest.raises(ParseError):
        parse_order("graded(lex")
