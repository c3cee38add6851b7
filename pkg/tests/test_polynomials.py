from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polyideal import (
    GF,
    GREVLEX,
    LEX,
    QQ,
    Ideal,
    Ring,
    conv_poly,
    homogenise,
    homogenised_ring,
    inj_vars,
    inj_vars_at_end,
    inj_vars_offset,
    lift_map,
    remap_variables,
    unhomogenise,
)
from polyideal.errors import (
    ArityOverflow,
    DuplicateVariable,
    IncompatibleRings,
    NameNotFound,
    NoNames,
    NotHomogenisedRing,
    RingMismatch,
    ZeroPolynomial,
)

from strategies import FIELDS, R3, polys

x, y, z = R3.gens()


def test_arithmetic_examples():
    assert (x + 1) * (x - 1) == x**2 - 1
    f = x**2 * y + 3 * x + z + 1
    assert f + 0 == f and f + R3.zero() == f
    assert f - x**2 * y == 3 * x + z + 1
    assert str(f) == "x^2*y + 3*x + z + 1"
    assert str(R3.zero()) == "0"
    assert (2 * x).scale(Fraction(1, 2)) == x


def test_lead_term():
    f = R3.parse("x^2*y + 3*x + z + 1")
    assert f.lead_term() == (1, (2, 1, 0))
    assert R3.constant(5).lead_term() == (5, (0, 0, 0))
    with pytest.raises(ZeroPolynomial):
        R3.zero().lead_term()


def test_ring_mismatch():
    other = Ring(3, LEX, QQ, ("x", "y", "z"))
    with pytest.raises(RingMismatch):
        x + other.gen(0)
    with pytest.raises(RingMismatch):
        x * Ring(3, GREVLEX, GF(7)).gen(0)


def test_duplicate_names():
    with pytest.raises(DuplicateVariable):
        Ring(3, GREVLEX, QQ, ("x", "y", "x"))


@pytest.mark.parametrize("field", FIELDS, ids=repr)
@given(data=st.data())
def test_terms_descending_and_clean(field, data):
    ring = Ring(3, data.draw(st.sampled_from([LEX, GREVLEX])), field, ("x", "y", "z"))
    f = data.draw(polys(ring))
    g = data.draw(polys(ring))
    for h in (f, g, f + g, f * g, f - f):
        ts = h.terms()
        assert all(c for _, c in ts)
        assert all(ring.order.compare(ts[i][0], ts[i + 1][0]) > 0 for i in range(len(ts) - 1))


@given(f=polys(R3), g=polys(R3), h=polys(R3))
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f - f == R3.zero()


def test_lift_map_examples():
    ring = Ring(2, GREVLEX, QQ, ("x", "y"))
    f = ring.parse("x*y + 1")
    assert lift_map({0: 2, 1: 3}, f) == 7
    assert lift_map(lambda i: ring.gen(i), f) == f
    lexring = Ring(2, LEX, QQ, ("x", "y"))
    assert lift_map(lambda i: lexring.gen(i), f) == lexring.parse("x*y + 1")


@given(f=polys(R3, max_degree=2), g=polys(R3, max_degree=2), vals=st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_lift_map_homomorphism(f, g, vals):
    a = dict(enumerate(vals))
    assert lift_map(a, f * g) == lift_map(a, f) * lift_map(a, g)
    assert lift_map(a, f + g) == lift_map(a, f) + lift_map(a, g)


def test_conv_poly():
    uni = Ring(1, LEX, QQ, ("x",))
    multi = Ring(1, LEX, QQ, ("t",))
    f = uni.parse("x^2 + 1")
    g = conv_poly(f, multi)
    assert g.ring == multi and g.as_dict() == f.as_dict()
    assert conv_poly(f, uni) is f
    with pytest.raises(IncompatibleRings):
        conv_poly(f, Ring(1, GREVLEX, QQ, ("x",)))


def test_inj_vars_offset():
    src = Ring(1, GREVLEX, QQ, ("X",))
    dst = Ring(5, GREVLEX, QQ)
    X = src.gen(0)
    assert inj_vars_offset(3, X, dst) == dst.gen(3)
    assert inj_vars(X, src) is X
    assert inj_vars_at_end(X, dst) == dst.gen(4)
    with pytest.raises(ArityOverflow):
        inj_vars_offset(2, Ring(2, GREVLEX, QQ).gen(0), Ring(3, GREVLEX, QQ))


@given(f=polys(R3), k=st.integers(0, 2))
def test_inj_vars_offset_shifts_exponents(f, k):
    dst = Ring(5, GREVLEX, QQ)
    g = inj_vars_offset(k, f, dst)
    expected = {(0,) * k + m + (0,) * (2 - k): c for m, c in f.as_dict().items()}
    assert g.as_dict() == expected


def test_remap_variables():
    src = Ring(3, GREVLEX, QQ, ("x", "y", "z"))
    dst = Ring(5, GREVLEX, QQ, ("w", "z", "y", "u", "x"))
    f = src.parse("x*y*z")
    assert remap_variables(f, dst) == dst.gen("x") * dst.gen("y") * dst.gen("z")
    same = Ring(3, GREVLEX, QQ, ("z", "x", "y"))
    assert remap_variables(src.parse("x^2 + 2*y"), same) == same.parse("x^2 + 2*y")
    with pytest.raises(NameNotFound):
        remap_variables(Ring(1, GREVLEX, QQ, ("a",)).gen(0), Ring(2, GREVLEX, QQ, ("b", "c")))
    with pytest.raises(NoNames):
        remap_variables(Ring(1, GREVLEX, QQ).gen(0), dst)


@given(f=polys(R3), g=polys(R3))
def test_remap_is_homomorphism(f, g):
    dst = Ring(4, GREVLEX, QQ, ("z", "q", "x", "y"))
    phi = lambda p: remap_variables(p, dst)
    assert phi(f * g) == phi(f) * phi(g)
    assert phi(f + g) == phi(f) + phi(g)


def test_homogenise_examples():
    ring = Ring(3, GREVLEX, QQ, ("x", "y", "z"))
    h = homogenise(ring.parse("x^2 + y"))
    H = homogenised_ring(ring)
    assert H.arity == 4 and H.variable_names[-1] == "h"
    assert h == H.parse("x^2 + y*h")
    assert not ring.parse("x^2 + y").is_homogeneous()
    assert ring.parse("x^2 + y*z").is_homogeneous()
    f = ring.parse("x^3 - x - 1")
    assert unhomogenise(homogenise(f)) == f
    with pytest.raises(NotHomogenisedRing):
        unhomogenise(f)


@pytest.mark.parametrize("field", FIELDS, ids=repr)
@given(data=st.data())
def test_homogenise_roundtrip(field, data):
    ring = Ring(3, data.draw(st.sampled_from([LEX, GREVLEX])), field, ("x", "y", "z"))
    f = data.draw(polys(ring))
    h = homogenise(f)
    assert h.is_homogeneous()
    assert unhomogenise(h) == f


def test_ideal_rejects_zero_and_mixed_rings():
    with pytest.raises(ZeroPolynomial):
        Ideal([x, R3.zero()])
    with pytest.raises(RingMismatch):
        Ideal([x, Ring(3, LEX, QQ, ("x", "y", "z")).gen(0)])
