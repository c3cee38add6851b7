from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polyideal import GF, QQ, FpElement, parse_field, recip
from polyideal.errors import DivisionByZero, MixedFieldError, NotPrime, ParseError
from polyideal.fields import field_arith, is_prime


def test_rational_examples():
    assert field_arith("add", Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert recip(Fraction(2, 3)) == Fraction(3, 2)
    with pytest.raises(DivisionByZero):
        recip(Fraction(0))


def test_prime_examples():
    F5 = GF(5)
    assert field_arith("mul", F5.element(2), F5.element(3)) == F5.element(1)
    assert recip(F5.element(2)) == F5.element(3)
    with pytest.raises(DivisionByZero):
        recip(F5.element(0))
    with pytest.raises(DivisionByZero):
        F5.inv(0)


def test_mixed_fields_rejected():
    with pytest.raises(MixedFieldError):
        GF(5).element(1) + GF(7).element(1)


def test_prime_validated():
    with pytest.raises(NotPrime):
        GF(32004)
    assert GF(32003) is GF(32003)


def test_is_prime_matches_trial_division():
    def slow(n):
        return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))

    assert all(is_prime(n) == slow(n) for n in range(2000))
    assert is_prime(2**61 - 1) and not is_prime(2**61 + 1)


def test_canonical_forms():
    F = GF(7)
    assert F.convert(-1) == 6 and F.convert(13) == 6
    assert F.convert(Fraction(1, 2)) == 4
    assert QQ.convert(Fraction(2, 4)) == Fraction(1, 2)
    assert F.element(10) == F.element(3)
    assert hash(F.element(10)) == hash(F.element(3))


def test_literals():
    assert QQ.parse("3/6") == Fraction(1, 2)
    assert GF(7).parse("3") == 3
    assert GF(7).parse("1/2") == 4
    with pytest.raises(ParseError):
        QQ.parse("x")


@pytest.mark.parametrize("text,expected", [("q", QQ), ("QQ", QQ), ("fp:7", GF(7)), ("GF(7)", GF(7))])
def test_parse_field(text, expected):
    assert parse_field(text) is expected


@pytest.mark.parametrize("p", [5, 7, 32003])
@given(data=st.data())
def test_division_ring_laws_prime(p, data):
    F = GF(p)
    q = F.element(data.draw(st.integers(1, p - 1)))
    one = F.element(1)
    assert recip(q) * q == one and q * recip(q) == one
    assert q * one == q and one * q == q
    a, b, c = (F.element(data.draw(st.integers(0, p - 1))) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == F.element(0)


@given(st.fractions(), st.fractions(), st.fractions())
def test_rational_laws(a, b, c):
    assert QQ.add(QQ.add(a, b), c) == QQ.add(a, QQ.add(b, c))
    assert QQ.mul(a, QQ.add(b, c)) == QQ.add(QQ.mul(a, b), QQ.mul(a, c))
    if a:
        assert QQ.mul(QQ.inv(a), a) == 1


def test_fp_element_is_immutable():
    x = GF(7).element(3)
    with pytest.raises(AttributeError):
        x.value = 4
    assert isinstance(x, FpElement)
