"""Localized ring: arithmetic, exact division, and the text format."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from superinduce import ambient, parse_poly, render_poly, UsageError
from superinduce.fraction import (
    LocalizedElement,
    det_block11,
    det_block22,
    embed_poly,
    is_polynomial,
    loc_add,
    loc_divide_exact,
    loc_eq,
    loc_mul,
    loc_pow,
    loc_sub,
    loc_weight,
    parse_loc,
    reduce_loc,
    render_loc,
)


def test_block_determinants_2_1():
    amb = ambient(2, 1)
    d = det_block11(amb)
    assert d == parse_poly(amb, "c[1,1]·c[2,2] - c[1,2]·c[2,1]")
    assert det_block22(amb) == parse_poly(amb, "c[3,3]")
    # cached: same object both times
    assert det_block11(amb) is d


def test_add_same_denominator_no_inflation():
    amb = ambient(1, 1)
    x = LocalizedElement(amb.gen(1, 1), 1, 0)
    s = loc_add(x, x)
    assert s.d_exp == 1 and s.d22_exp == 0
    assert s.num == amb.gen(1, 1).scale(2)


def test_add_mixed_denominators():
    amb = ambient(1, 1)
    c11 = amb.gen(1, 1)
    x = LocalizedElement(c11, 1, 0)  # c11 / D = 1
    y = LocalizedElement(amb.one(), 0, 1)  # 1 / D22
    s = loc_add(x, y)
    assert (s.d_exp, s.d22_exp) == (1, 1)
    # c11·D22 + D over D·D22
    assert s.num == c11 * amb.gen(2, 2) + c11
    assert loc_eq(s, s)


def test_eq_by_cross_multiplication():
    amb = ambient(2, 1)
    d = det_block11(amb)
    one = embed_poly(amb.one())
    also_one = LocalizedElement(d, 1, 0)
    assert loc_eq(one, also_one)
    assert not loc_eq(one, LocalizedElement(d, 0, 1))
    twisted = LocalizedElement(d * d, 2, 0)
    assert loc_eq(also_one, twisted)


def test_no_automatic_reduction_but_explicit_reduce_works():
    amb = ambient(2, 1)
    d = det_block11(amb)
    x = LocalizedElement(d * amb.gen(1, 1), 1, 0)
    assert x.d_exp == 1  # construction keeps the exponent
    r = reduce_loc(x)
    assert r.d_exp == 0 and r.num == amb.gen(1, 1)


def test_is_polynomial():
    amb = ambient(2, 2)
    d, d22 = det_block11(amb), det_block22(amb)
    x = LocalizedElement(d * d22 * amb.gen(1, 3), 1, 1)
    assert is_polynomial(x) == amb.gen(1, 3)
    assert is_polynomial(LocalizedElement(amb.gen(1, 3), 1, 0)) is None


def test_zero_canonicalizes():
    amb = ambient(1, 1)
    z = LocalizedElement(amb.zero(), 3, 2)
    assert z.is_zero() and z.d_exp == 0 and z.d22_exp == 0


def test_mul_adds_exponents_and_pow():
    amb = ambient(1, 1)
    x = LocalizedElement(amb.gen(1, 2), 1, 0)
    y = LocalizedElement(amb.gen(2, 1), 0, 2)
    p = loc_mul(x, y)
    assert (p.d_exp, p.d22_exp) == (1, 2)
    sq = loc_pow(x, 2)
    assert sq.is_zero()  # odd generator squares to zero
    cube = loc_pow(embed_poly(amb.gen(1, 1)), 3)
    assert cube.num == amb.gen(1, 1) ** 3


def test_divide_exact():
    amb = ambient(2, 1)
    d = det_block11(amb)
    x = LocalizedElement(d * amb.gen(1, 1), 2, 1)
    q = loc_divide_exact(x, embed_poly(d))
    assert q is not None
    assert (q.d_exp, q.d22_exp) == (2, 1)
    assert q.num == amb.gen(1, 1)
    # dividing by D/D (= 1) leaves the value unchanged
    dd = LocalizedElement(d, 1, 0)
    q2 = loc_divide_exact(x, dd)
    assert q2 is not None and loc_eq(q2, x)
    assert loc_divide_exact(embed_poly(amb.gen(1, 2)), embed_poly(amb.gen(1, 1))) is None
    with pytest.raises(UsageError):
        loc_divide_exact(x, embed_poly(amb.zero()))


def test_weight_subtracts_denominators():
    amb = ambient(2, 1)
    x = LocalizedElement(amb.gen(1, 1) * amb.gen(1, 3), 1, 1)
    # numerator columns (1,0,1); D removes one from columns 1..2, D22 from column 3
    assert loc_weight(x) == (0, -1, 0)
    mixed = loc_add(embed_poly(amb.gen(1, 1)), embed_poly(amb.gen(1, 3)))
    assert loc_weight(mixed) is None


def test_render_parse_roundtrip():
    amb = ambient(2, 1)
    x = LocalizedElement(amb.gen(1, 1).scale(Fraction(3, 2)), 2, 1)
    text = render_loc(x)
    assert text == "+3/2·c[1,1] / D^2 D22^1"
    back = parse_loc(amb, text)
    assert back == x
    assert parse_loc(amb, "+1·c[1,2]") == embed_poly(amb.gen(1, 2))
    with pytest.raises(UsageError):
        parse_loc(amb, "c[1,1] / E^2")


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_field_laws(data):
    amb = ambient(2, 1)
    gens = [(i, j) for i in range(1, 4) for j in range(1, 4)]

    def rand_loc():
        n_terms = data.draw(st.integers(0, 2))
        p = amb.zero()
        for _ in range(n_terms):
            c = data.draw(st.integers(-3, 3))
            f = amb.one()
            for _ in range(data.draw(st.integers(0, 2))):
                i, j = data.draw(st.sampled_from(gens))
                f = f * amb.gen(i, j)
            p = p + f.scale(c)
        return LocalizedElement(
            p, data.draw(st.integers(0, 2)), data.draw(st.integers(0, 2))
        )

    x, y, z = rand_loc(), rand_loc(), rand_loc()
    assert loc_eq(loc_add(x, y), loc_add(y, x))
    assert loc_eq(loc_add(loc_add(x, y), z), loc_add(x, loc_add(y, z)))
    assert loc_eq(loc_mul(x, loc_add(y, z)), loc_add(loc_mul(x, y), loc_mul(x, z)))
    assert loc_eq(loc_sub(x, x), LocalizedElement(amb.zero()))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_reduce_preserves_value(data):
    amb = ambient(2, 1)
    d, d22 = det_block11(amb), det_block22(amb)
    base = amb.gen(1, 1).scale(data.draw(st.integers(-3, 3))) + amb.one().scale(
        data.draw(st.integers(-2, 2))
    )
    s_extra = data.draw(st.integers(0, 2))
    t_extra = data.draw(st.integers(0, 2))
    x = LocalizedElement(
        base * d**s_extra * d22**t_extra,
        s_extra + data.draw(st.integers(0, 1)),
        t_extra,
    )
    r = reduce_loc(x)
    assert loc_eq(r, x)
    assert r.d_exp <= x.d_exp and r.d22_exp <= x.d22_exp
