"""Right superderivations of the coordinate ring and its localization.

The basic operator for a direction (k, l) sends a generator c[a,b] to
c[a,l] when b == k and to zero otherwise, extended as a right derivation
with the sign rule (xy)D = (-1)^(|D||y|) (x)D·y + x·(y)D.  On fractions it
acts by the quotient rule; the two block determinants have cached
derivatives, and directions that leave them inert never inflate the
denominator exponents.

Divided powers and rising-binomial operators in positive characteristic go
through an integral lift: coefficients are raised to characteristic zero,
the basic operator is iterated there, the factorial is divided off exactly,
and the result is reduced back once its denominators are known to be
invertible.

The structured rewrite table in this module and the direct quotient-rule
route are deliberately independent of each other; tests compare the two on
every admissible instance rather than letting one implementation stand in
for both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .fraction import (
    LocalizedElement,
    det_block11,
    det_block22,
    embed_poly,
    loc_add,
    loc_eq,
    loc_mul,
    loc_scale,
    loc_sub,
    loc_zero,
)
from .minors import loc_det, row_initial_minor, twisted_generator, y_entry
from .superpoly import (
    Ambient,
    InternalError,
    SuperPolynomial,
    UsageError,
    ambient,
    monomial_mul,
)


@dataclass(frozen=True)
class Op:
    """A right operator: kind 'basic' (single derivation), 'divided'
    (r-th divided power of an even direction), or 'binomial' (the rising
    product D(D+1)...(D+r-1)/r! of a diagonal direction)."""

    kind: str
    k: int
    l: int
    r: int = 1

    def __post_init__(self):
        if self.kind not in ("basic", "divided", "binomial"):
            raise UsageError(f"unknown operator kind {self.kind!r}")
        if self.r < 0:
            raise UsageError("operator order must be nonnegative")
        if self.kind == "binomial" and self.k != self.l:
            raise UsageError("binomial operators are diagonal")


def basic(k: int, l: int) -> Op:
    return Op("basic", k, l)


def divided(k: int, l: int, r: int) -> Op:
    return Op("divided", k, l, r)


def binomial(k: int, r: int) -> Op:
    return Op("binomial", k, k, r)


def matrix_unit_to_op(k: int, l: int) -> Op:
    """The basic operator realizing the (k,l) matrix unit: indices swap."""
    return Op("basic", l, k)


def render_op(op: Op) -> str:
    if op.kind == "basic":
        return f"d[{op.k},{op.l}]"
    if op.kind == "divided":
        return f"d[{op.k},{op.l}]^({op.r})"
    return f"binom(d[{op.k},{op.k}]; {op.r})"


# -- the basic derivation on polynomials --------------------------------------------


def _d_poly(p: SuperPolynomial, k: int, l: int) -> SuperPolynomial:
    amb = p.ambient
    amb.index_parity(k)
    amb.index_parity(l)
    dpar = amb.gen_parity(k, l)
    acc: dict = {}
    zero = amb.coeff(0)
    for mono, c in p.terms.items():
        nfac = len(mono)
        suff = [0] * (nfac + 1)
        for t in range(nfac - 1, -1, -1):
            (i, j), e = mono[t]
            suff[t] = (suff[t + 1] + amb.gen_parity(i, j) * e) % 2
        for t in range(nfac):
            (a, b), e = mono[t]
            if b != k:
                continue
            left = mono[:t] + (((a, b), e - 1),) if e > 1 else mono[:t]
            s1, m1 = monomial_mul(amb, left, (((a, l), 1),))
            if m1 is None:
                continue
            s2, m2 = monomial_mul(amb, m1, mono[t + 1 :])
            if m2 is None:
                continue
            sign = s1 * s2
            if dpar and suff[t + 1]:
                sign = -sign
            cc = amb.coeff_mul(c, amb.coeff(e)) if e != 1 else c
            if cc == 0:
                continue
            if sign < 0:
                cc = amb.coeff_neg(cc)
            s = amb.coeff_add(acc.get(m2, zero), cc)
            if s == 0:
                acc.pop(m2, None)
            else:
                acc[m2] = s
    return SuperPolynomial(amb, acc)


def _den_derivative(amb: Ambient, which: int, k: int, l: int) -> SuperPolynomial:
    key = ("dden", which, k, l)
    if key not in amb._cache:
        base = det_block11(amb) if which == 11 else det_block22(amb)
        amb._cache[key] = _d_poly(base, k, l)
    return amb._cache[key]


def _d_loc(x: LocalizedElement, k: int, l: int) -> LocalizedElement:
    amb = x.ambient
    da = _d_poly(x.num, k, l)
    s, t = x.d_exp, x.d22_exp
    bump_s = bool(s) and not _den_derivative(amb, 11, k, l).is_zero()
    bump_t = bool(t) and not _den_derivative(amb, 22, k, l).is_zero()
    num = da
    if bump_s:
        num = num * det_block11(amb)
    if bump_t:
        num = num * det_block22(amb)
    if bump_s:
        corr = (x.num * _den_derivative(amb, 11, k, l)).scale(s)
        if bump_t:
            corr = corr * det_block22(amb)
        num = num - corr
    if bump_t:
        corr = (x.num * _den_derivative(amb, 22, k, l)).scale(t)
        if bump_s:
            corr = corr * det_block11(amb)
        num = num - corr
    return LocalizedElement(num, s + int(bump_s), t + int(bump_t))


# -- divided powers and binomials via the integral lift ------------------------------


def _lift_poly(p: SuperPolynomial) -> SuperPolynomial:
    amb0 = ambient(p.ambient.m, p.ambient.n, 0)
    return SuperPolynomial(amb0, {mo: Fraction(c) for mo, c in p.terms.items()})


def _reduce_poly_mod(p0: SuperPolynomial, char: int) -> SuperPolynomial:
    ambp = ambient(p0.ambient.m, p0.ambient.n, char)
    out = {}
    for mo, c in p0.terms.items():
        if c.denominator % char == 0:
            raise InternalError(
                "divided operator produced a coefficient that cannot be reduced"
            )
        v = ambp.coeff(c)
        if v != 0:
            out[mo] = v
    return SuperPolynomial(ambp, out)


def _apply_divided_loc(x: LocalizedElement, k: int, l: int, r: int) -> LocalizedElement:
    amb = x.ambient
    if amb.gen_parity(k, l):
        raise UsageError("divided powers are defined for even directions only")
    if r == 0:
        return x
    if amb.char == 0:
        cur = x
        for _ in range(r):
            cur = _d_loc(cur, k, l)
        return loc_scale(cur, Fraction(1, factorial(r)))
    cur = LocalizedElement(_lift_poly(x.num), x.d_exp, x.d22_exp)
    for _ in range(r):
        cur = _d_loc(cur, k, l)
    cur = loc_scale(cur, Fraction(1, factorial(r)))
    return LocalizedElement(_reduce_poly_mod(cur.num, amb.char), cur.d_exp, cur.d22_exp)


def _apply_binomial_loc(x: LocalizedElement, k: int, r: int) -> LocalizedElement:
    amb = x.ambient
    if r == 0:
        return x

    def rising(start: LocalizedElement) -> LocalizedElement:
        cur = start
        for i in range(r):
            cur = loc_add(_d_loc(cur, k, k), loc_scale(cur, i))
        return loc_scale(cur, Fraction(1, factorial(r)))

    if amb.char == 0:
        return rising(x)
    lifted = rising(LocalizedElement(_lift_poly(x.num), x.d_exp, x.d22_exp))
    return LocalizedElement(
        _reduce_poly_mod(lifted.num, amb.char), lifted.d_exp, lifted.d22_exp
    )


def apply_loc(op: Op, x: LocalizedElement) -> LocalizedElement:
    if op.kind == "basic":
        return _d_loc(x, op.k, op.l)
    if op.kind == "divided":
        return _apply_divided_loc(x, op.k, op.l, op.r)
    return _apply_binomial_loc(x, op.k, op.r)


def apply_poly(op: Op, p: SuperPolynomial) -> SuperPolynomial:
    out = apply_loc(op, embed_poly(p))
    if out.d_exp or out.d22_exp:
        raise InternalError("polynomial input acquired a denominator")
    return out.num


def apply_seq(ops, x: LocalizedElement) -> LocalizedElement:
    for op in ops:
        x = apply_loc(op, x)
    return x


# -- the structured rewrite table -----------------------------------------------------
#
# Formal factors name the four families of building blocks the rewrite rules
# move between; an expression is a list of (integer coefficient, ordered factor
# tuple) pairs.  Embedding a formal expression multiplies its factors in the
# written order, so odd factors keep their relative position.


@dataclass(frozen=True)
class FY:
    """Localized entry y[i,j]."""

    i: int
    j: int


@dataclass(frozen=True)
class FPhi:
    """Twisted lower-right generator (both indices beyond the even block)."""

    i: int
    j: int


@dataclass(frozen=True)
class FDminus:
    """Determinant of twisted lower-right entries on the given columns
    (rows are the initial segment of the odd block)."""

    cols: tuple


@dataclass(frozen=True)
class FDplus:
    """Row-initial minor on the given columns of the even block."""

    cols: tuple


def _normalize_strict(cols):
    """Sort a column tuple, tracking the determinant sign; None on repeats."""
    cols = tuple(cols)
    if len(set(cols)) != len(cols):
        return 1, None
    arr = list(cols)
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return sign, tuple(arr)


def structured_rule(amb: Ambient, factor, op: Op):
    """Derivative of a single formal factor, straight from the rewrite table.

    Returns a formal expression; embedding it must agree with applying the
    operator to the embedded factor, which is exactly what the rewrite-rule
    tests check.
    """
    if op.kind != "basic":
        raise UsageError("the rewrite table covers basic operators only")
    k, l, m = op.k, op.l, amb.m
    mixed_up = k <= m < l
    mixed_down = k > m >= l
    odd_block = k > m and l > m
    if isinstance(factor, FY):
        i, j = factor.i, factor.j
        if mixed_up:
            return [(1, (FY(i, l), FY(k, j)))]
        if mixed_down:
            return [(1, ())] if (i == l and j == k) else []
        if odd_block:
            return [(1, (FY(i, l),))] if j == k else []
        return [(-1, (FY(k, j),))] if l == i else []
    if isinstance(factor, FPhi):
        i, j = factor.i, factor.j
        if mixed_up:
            return [(1, (FPhi(i, l), FY(k, j)))]
        if odd_block:
            return [(1, (FPhi(i, l),))] if j == k else []
        return []
    if isinstance(factor, FDminus):
        cols = factor.cols
        if mixed_down or (k <= m and l <= m):
            return []
        out = []
        for t, jt in enumerate(cols):
            newcols = cols[:t] + (l,) + cols[t + 1 :]
            if mixed_up:
                out.append((1, (FDminus(newcols), FY(k, jt))))
            elif jt == k:
                out.append((1, (FDminus(newcols),)))
        return out
    if isinstance(factor, FDplus):
        cols = factor.cols
        if k > m:
            return []
        out = []
        for t, it in enumerate(cols):
            if it != k:
                continue
            if mixed_up:
                for a in range(1, m + 1):
                    sign, norm = _normalize_strict(cols[:t] + (a,) + cols[t + 1 :])
                    if norm is None:
                        continue
                    out.append((sign, (FDplus(norm), FY(a, l))))
            else:
                sign, norm = _normalize_strict(cols[:t] + (l,) + cols[t + 1 :])
                if norm is not None:
                    out.append((sign, (FDplus(norm),)))
        return out
    raise UsageError(f"unknown formal factor {factor!r}")


def embed_formal_factor(amb: Ambient, factor) -> LocalizedElement:
    if isinstance(factor, FY):
        return y_entry(amb, factor.i, factor.j)
    if isinstance(factor, FPhi):
        return twisted_generator(amb, factor.i, factor.j)
    if isinstance(factor, FDminus):
        s = len(factor.cols)
        entries = [
            [twisted_generator(amb, amb.m + 1 + a, c) for c in factor.cols]
            for a in range(s)
        ]
        return loc_det(amb, entries)
    if isinstance(factor, FDplus):
        return embed_poly(row_initial_minor(amb, factor.cols))
    raise UsageError(f"unknown formal factor {factor!r}")


def embed_formal(amb: Ambient, expr) -> LocalizedElement:
    total = loc_zero(amb)
    for coeff, factors in expr:
        term = embed_poly(amb.one())
        for f in factors:
            term = loc_mul(term, embed_formal_factor(amb, f))
        total = loc_add(total, loc_scale(term, coeff))
    return total


def rewrite_rule_check(amb: Ambient, factor, op: Op) -> bool:
    """Compare the rewrite table against the direct quotient-rule route."""
    raw = apply_loc(op, embed_formal_factor(amb, factor))
    table = embed_formal(amb, structured_rule(amb, factor, op))
    return loc_eq(raw, table)


# -- the supercommutator identity -----------------------------------------------------


def op_parity(amb: Ambient, op: Op) -> int:
    return amb.gen_parity(op.k, op.l)


def bracket_check(x: LocalizedElement, a: Op, b: Op) -> bool:
    """The supercommutator of two basic operators acts as the expected
    combination of basic operators: on x,

        ((x)a)b - (-1)^(|a||b|) ((x)b)a

    equals [l_a == k_b] (x)d[k_a,l_b] - (-1)^(|a||b|) [l_b == k_a] (x)d[k_b,l_a].
    """
    if a.kind != "basic" or b.kind != "basic":
        raise UsageError("the bracket identity is for basic operators")
    amb = x.ambient
    sgn = -1 if op_parity(amb, a) and op_parity(amb, b) else 1
    xab = _d_loc(_d_loc(x, a.k, a.l), b.k, b.l)
    xba = _d_loc(_d_loc(x, b.k, b.l), a.k, a.l)
    lhs = loc_sub(xab, loc_scale(xba, sgn))
    rhs = loc_zero(amb)
    if a.l == b.k:
        rhs = loc_add(rhs, _d_loc(x, a.k, b.l))
    if b.l == a.k:
        rhs = loc_sub(rhs, loc_scale(_d_loc(x, b.k, a.l), sgn))
    return loc_eq(lhs, rhs)
