"""Localization of the coordinate ring at the two block determinants.

D is the determinant of the upper-left m-by-m block C11 and D22 the
determinant of the lower-right n-by-n block C22; both are even and central,
so fractions num / (D^s · D22^t) multiply and compare by the usual
cross-multiplication rules.  Exponents only ever grow during arithmetic —
reduction is a separate, explicit operation.
"""

from __future__ import annotations

from fractions import Fraction

from .superpoly import (
    Ambient,
    SuperPolynomial,
    UsageError,
    exact_divide,
    leibniz_det,
    weight_of,
)


def det_block11(amb: Ambient) -> SuperPolynomial:
    """D: determinant of the even block C11 (cached per ambient)."""
    key = "det11"
    if key not in amb._cache:
        amb._cache[key] = leibniz_det(amb, range(1, amb.m + 1), range(1, amb.m + 1))
    return amb._cache[key]


def det_block22(amb: Ambient) -> SuperPolynomial:
    """D22: determinant of the even block C22 (cached per ambient)."""
    key = "det22"
    if key not in amb._cache:
        rng = range(amb.m + 1, amb.size + 1)
        amb._cache[key] = leibniz_det(amb, rng, rng)
    return amb._cache[key]


def _den_power(amb: Ambient, s: int, t: int) -> SuperPolynomial:
    out = amb.one()
    if s:
        out = out * det_block11(amb) ** s
    if t:
        out = out * det_block22(amb) ** t
    return out


class LocalizedElement:
    """num / (D^d_exp · D22^d22_exp); the zero element is stored with exponents 0."""

    __slots__ = ("num", "d_exp", "d22_exp")

    def __init__(self, num: SuperPolynomial, d_exp: int = 0, d22_exp: int = 0):
        if d_exp < 0 or d22_exp < 0:
            raise UsageError("denominator exponents must be nonnegative")
        if num.is_zero():
            d_exp = d22_exp = 0
        self.num = num
        self.d_exp = d_exp
        self.d22_exp = d22_exp

    @property
    def ambient(self) -> Ambient:
        return self.num.ambient

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def parity(self):
        return self.num.parity()

    def __repr__(self):
        return f"LocalizedElement({render_loc(self)!r})"

    def __eq__(self, other):  # structural equality; use loc_eq for value equality
        if not isinstance(other, LocalizedElement):
            return NotImplemented
        return (
            self.num == other.num
            and self.d_exp == other.d_exp
            and self.d22_exp == other.d22_exp
        )

    def __hash__(self):
        return hash((self.num, self.d_exp, self.d22_exp))


def embed_poly(p: SuperPolynomial) -> LocalizedElement:
    return LocalizedElement(p, 0, 0)


def loc_zero(amb: Ambient) -> LocalizedElement:
    return LocalizedElement(amb.zero())


def loc_one(amb: Ambient) -> LocalizedElement:
    return LocalizedElement(amb.one())


def _mate(x: LocalizedElement, y: LocalizedElement):
    if x.ambient != y.ambient:
        raise UsageError("operands live in different ambients")


def loc_add(x: LocalizedElement, y: LocalizedElement) -> LocalizedElement:
    _mate(x, y)
    amb = x.ambient
    s = max(x.d_exp, y.d_exp)
    t = max(x.d22_exp, y.d22_exp)
    nx = x.num * _den_power(amb, s - x.d_exp, t - x.d22_exp)
    ny = y.num * _den_power(amb, s - y.d_exp, t - y.d22_exp)
    return LocalizedElement(nx + ny, s, t)


def loc_neg(x: LocalizedElement) -> LocalizedElement:
    return LocalizedElement(-x.num, x.d_exp, x.d22_exp)


def loc_sub(x: LocalizedElement, y: LocalizedElement) -> LocalizedElement:
    return loc_add(x, loc_neg(y))


def loc_mul(x: LocalizedElement, y: LocalizedElement) -> LocalizedElement:
    _mate(x, y)
    return LocalizedElement(x.num * y.num, x.d_exp + y.d_exp, x.d22_exp + y.d22_exp)


def loc_scale(x: LocalizedElement, c) -> LocalizedElement:
    return LocalizedElement(x.num.scale(c), x.d_exp, x.d22_exp)


def loc_eq(x: LocalizedElement, y: LocalizedElement) -> bool:
    """Value equality by cross-multiplication (no reduction required)."""
    _mate(x, y)
    amb = x.ambient
    left = x.num * _den_power(amb, y.d_exp, y.d22_exp)
    right = y.num * _den_power(amb, x.d_exp, x.d22_exp)
    return (left - right).is_zero()


def is_polynomial(x: LocalizedElement):
    """The polynomial the element equals, or None when denominators are essential."""
    p = x.num
    amb = x.ambient
    if x.d_exp:
        p = exact_divide(p, det_block11(amb) ** x.d_exp)
        if p is None:
            return None
    if x.d22_exp:
        p = exact_divide(p, det_block22(amb) ** x.d22_exp)
        if p is None:
            return None
    return p


def reduce_loc(x: LocalizedElement) -> LocalizedElement:
    """Cancel as many D / D22 powers as exactly divide the numerator."""
    amb = x.ambient
    num, s, t = x.num, x.d_exp, x.d22_exp
    while s > 0:
        q = exact_divide(num, det_block11(amb))
        if q is None:
            break
        num, s = q, s - 1
    while t > 0:
        q = exact_divide(num, det_block22(amb))
        if q is None:
            break
        num, t = q, t - 1
    return LocalizedElement(num, s, t)


def loc_divide_exact(x: LocalizedElement, d: LocalizedElement):
    """x / d as a localized element, or None when the division is not exact.

    The divisor's numerator must be even with nonzero body; the quotient keeps
    x's denominator exponents while d's invert into numerator powers.
    """
    _mate(x, d)
    amb = x.ambient
    if d.is_zero():
        raise UsageError("division by the zero element")
    lifted = x.num * _den_power(amb, d.d_exp, d.d22_exp)
    q = exact_divide(lifted, d.num)
    if q is None:
        return None
    return LocalizedElement(q, x.d_exp, x.d22_exp)


def loc_weight(x: LocalizedElement):
    """Column-content weight of the element, or None when inhomogeneous.

    D contributes one to every column at most m and D22 one to every column
    above m, so denominators subtract the corresponding constant vectors.
    """
    amb = x.ambient
    w = weight_of(x.num)
    if w is None:
        return None
    out = list(w)
    for j in range(amb.m):
        out[j] -= x.d_exp
    for j in range(amb.m, amb.size):
        out[j] -= x.d22_exp
    return tuple(out)


def loc_pow(x: LocalizedElement, e: int) -> LocalizedElement:
    if e < 0:
        raise UsageError("negative powers are not defined for localized elements")
    return LocalizedElement(x.num**e, x.d_exp * e, x.d22_exp * e)


# -- text format -----------------------------------------------------------------


def render_loc(x: LocalizedElement) -> str:
    from .superpoly import render_poly

    return f"{render_poly(x.num)} / D^{x.d_exp} D22^{x.d22_exp}"


def parse_loc(amb: Ambient, text: str) -> LocalizedElement:
    from .superpoly import parse_poly
    import re

    parts = text.rsplit("/", 1)
    if len(parts) == 1:
        return embed_poly(parse_poly(amb, text))
    num = parse_poly(amb, parts[0])
    den = re.sub(r"\s+", "", parts[1])
    m = re.fullmatch(r"(?:D\^(\d+))?(?:D22\^(\d+))?", den)
    if m is None or (m.group(1) is None and m.group(2) is None):
        raise UsageError(f"unrecognized denominator {parts[1]!r}")
    return LocalizedElement(num, int(m.group(1) or 0), int(m.group(2) or 0))


def scalar_fraction(amb: Ambient, value: Fraction | int) -> LocalizedElement:
    return embed_poly(amb.scalar(value))
