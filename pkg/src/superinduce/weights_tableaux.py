"""Weights of the diagonal torus, tableaux, bideterminants, and highest vectors.

A weight is a pair of integer vectors, one per block.  Tableaux are fillings
of partition shapes; their columns index the initial-rows minors whose
products are the bideterminants.  The highest vector of a dominant weight is
the product of the nested leading minors of both blocks raised to the
consecutive differences of the weight.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .fraction import (
    LocalizedElement,
    embed_poly,
    loc_mul,
    loc_pow,
    loc_weight,
)
from .minors import loc_det, row_initial_minor, twisted_generator
from .superpoly import Ambient, InternalError, SuperPolynomial, UsageError


@dataclass(frozen=True)
class Weight:
    plus: tuple
    minus: tuple

    def __post_init__(self):
        if not self.plus or not self.minus:
            raise UsageError("both blocks of a weight must be nonempty")
        for v in (*self.plus, *self.minus):
            if not isinstance(v, int):
                raise UsageError("weight entries must be integers")

    @property
    def m(self) -> int:
        return len(self.plus)

    @property
    def n(self) -> int:
        return len(self.minus)

    def as_tuple(self) -> tuple:
        return self.plus + self.minus

    def __repr__(self):
        return f"Weight({render_weight(self)!r})"


def make_weight(plus, minus) -> Weight:
    return Weight(tuple(int(v) for v in plus), tuple(int(v) for v in minus))


def is_dominant(w: Weight) -> bool:
    return all(a >= b for a, b in zip(w.plus, w.plus[1:])) and all(
        a >= b for a, b in zip(w.minus, w.minus[1:])
    )


def weight_add(a: Weight, b: Weight) -> Weight:
    if a.m != b.m or a.n != b.n:
        raise UsageError("weights have different block sizes")
    return Weight(
        tuple(x + y for x, y in zip(a.plus, b.plus)),
        tuple(x + y for x, y in zip(a.minus, b.minus)),
    )


def weight_scale(a: Weight, c: int) -> Weight:
    return Weight(tuple(c * x for x in a.plus), tuple(c * x for x in a.minus))


def delta_plus(m: int, n: int, i: int) -> Weight:
    if not 1 <= i <= m:
        raise UsageError("plus-block index out of range")
    return Weight(tuple(1 if a == i else 0 for a in range(1, m + 1)), (0,) * n)


def delta_minus(m: int, n: int, j: int) -> Weight:
    if not 1 <= j <= n:
        raise UsageError("minus-block index out of range")
    return Weight((0,) * m, tuple(1 if b == j else 0 for b in range(1, n + 1)))


def lambda_ij(w: Weight, i: int, j: int) -> Weight:
    """The weight after one step in direction (i, j): subtract at plus-i,
    add at minus-j."""
    return weight_add(
        weight_add(w, weight_scale(delta_plus(w.m, w.n, i), -1)),
        delta_minus(w.m, w.n, j),
    )


def content_of_pairs(m: int, n: int, I, J) -> Weight:
    """Content of an index family: minus the multiplicity of each plus index,
    plus the multiplicity of each minus index (minus indices are relative)."""
    I, J = tuple(I), tuple(J)
    if len(I) != len(J):
        raise UsageError("index families must pair up")
    for i in I:
        if not 1 <= i <= m:
            raise UsageError("plus index out of range")
    for j in J:
        if not 1 <= j <= n:
            raise UsageError("minus index out of range")
    plus = tuple(-I.count(s) for s in range(1, m + 1))
    minus = tuple(J.count(t) for t in range(1, n + 1))
    return Weight(plus, minus)


def lambda_IJ(w: Weight, I, J) -> Weight:
    return weight_add(w, content_of_pairs(w.m, w.n, I, J))


def is_robust(w: Weight, I, J) -> bool:
    """The consecutive gaps of the weight absorb the index multiplicities, so
    no denominators beyond the standard ones appear downstream."""
    cont = content_of_pairs(w.m, w.n, I, J)
    m, n = w.m, w.n
    for s in range(1, m):
        if w.plus[s - 1] - w.plus[s] < -cont.plus[s - 1]:
            return False
    if w.plus[m - 1] < -cont.plus[m - 1]:
        return False
    for t in range(2, n + 1):
        if w.minus[t - 2] - w.minus[t - 1] < cont.minus[t - 1]:
            return False
    return True


def is_admissible_pair(w: Weight, I, J) -> bool:
    """Plus indices weakly increase, ties force strictly increasing minus
    indices, and the shifted weight stays dominant."""
    I, J = tuple(I), tuple(J)
    if len(I) != len(J):
        return False
    for s in range(1, len(I)):
        if I[s - 1] > I[s]:
            return False
        if I[s - 1] == I[s] and J[s - 1] >= J[s]:
            return False
    return is_dominant(lambda_IJ(w, I, J))


# -- text and JSON forms ---------------------------------------------------------


def render_weight(w: Weight) -> str:
    return "[{}|{}]".format(
        ",".join(str(v) for v in w.plus), ",".join(str(v) for v in w.minus)
    )


def parse_weight(text: str) -> Weight:
    squeezed = re.sub(r"\s+", "", text)
    m = re.fullmatch(r"\[(-?\d+(?:,-?\d+)*)\|(-?\d+(?:,-?\d+)*)\]", squeezed)
    if m is None:
        raise UsageError(f"unrecognized weight literal {text!r}")
    plus = tuple(int(v) for v in m.group(1).split(","))
    minus = tuple(int(v) for v in m.group(2).split(","))
    return Weight(plus, minus)


def weight_to_json(w: Weight) -> dict:
    return {"plus": list(w.plus), "minus": list(w.minus)}


def weight_from_json(obj) -> Weight:
    try:
        return make_weight(obj["plus"], obj["minus"])
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed weight object {obj!r}") from exc


# -- tableaux ---------------------------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    shape: tuple
    cells: tuple  # tuple of row tuples, row r has shape[r] entries

    def __post_init__(self):
        if list(self.shape) != sorted(self.shape, reverse=True):
            raise UsageError("shape must be a partition (weakly decreasing)")
        if any(s <= 0 for s in self.shape):
            raise UsageError("shape parts must be positive")
        if len(self.cells) != len(self.shape):
            raise UsageError("cell rows do not match the shape")
        for row, width in zip(self.cells, self.shape):
            if len(row) != width:
                raise UsageError("cell rows do not match the shape")


def tableau_columns(t: Tableau):
    width = t.shape[0] if t.shape else 0
    cols = []
    for b in range(width):
        cols.append(tuple(row[b] for row in t.cells if len(row) > b))
    return cols


def tableau_to_json(t: Tableau) -> dict:
    return {"shape": list(t.shape), "cells": [list(r) for r in t.cells]}


def tableau_from_json(obj) -> Tableau:
    try:
        return Tableau(tuple(obj["shape"]), tuple(tuple(r) for r in obj["cells"]))
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed tableau object {obj!r}") from exc


def is_semistandard(t: Tableau) -> bool:
    for row in t.cells:
        if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
            return False
    for col in tableau_columns(t):
        if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
            return False
    return True


def enumerate_semistandard(shape, min_entry: int, max_entry: int):
    """All semistandard fillings of the shape with entries in the given range."""
    shape = tuple(shape)
    if not shape:
        yield Tableau((), ())
        return
    rows = len(shape)
    cells = [[0] * w for w in shape]

    def fill(r, c):
        if r == rows:
            yield Tableau(shape, tuple(tuple(row) for row in cells))
            return
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        lo = min_entry
        if c > 0:
            lo = max(lo, cells[r][c - 1])
        if r > 0:
            lo = max(lo, cells[r - 1][c] + 1)
        for v in range(lo, max_entry + 1):
            cells[r][c] = v
            yield from fill(nr, nc)

    yield from fill(0, 0)


# -- bideterminants and the highest vector -----------------------------------------


def dplus(amb: Ambient, cols) -> SuperPolynomial:
    """Initial-rows minor of the raw generators on the given columns."""
    return row_initial_minor(amb, cols)


def dminus(amb: Ambient, cols) -> LocalizedElement:
    """Initial-rows minor of the twisted lower-right block: rows are the first
    len(cols) odd-block rows, columns the given absolute indices (> m)."""
    cols = tuple(cols)
    for c in cols:
        if not amb.m < c <= amb.size:
            raise UsageError("columns of the minus minor must lie beyond the even block")
    if len(cols) > amb.n:
        raise UsageError("too many columns for the odd block's rows")
    entries = [
        [twisted_generator(amb, amb.m + 1 + a, c) for c in cols]
        for a in range(len(cols))
    ]
    return loc_det(amb, entries)


def bideterminant_plus(amb: Ambient, t: Tableau) -> SuperPolynomial:
    out = amb.one()
    for col in tableau_columns(t):
        out = out * dplus(amb, col)
    return out


def bideterminant_minus(amb: Ambient, t: Tableau) -> LocalizedElement:
    out = embed_poly(amb.one())
    for col in tableau_columns(t):
        out = loc_mul(out, dminus(amb, col))
    return out


def highest_vector(amb: Ambient, w: Weight) -> LocalizedElement:
    """Product of nested leading minors with exponents the consecutive
    differences of the weight; a negative last plus entry folds into the
    denominator, while a negative last minus entry is rejected (normalize
    away the twist first)."""
    if (w.m, w.n) != (amb.m, amb.n):
        raise UsageError("weight block sizes do not match the ambient")
    if not is_dominant(w):
        raise UsageError("highest vectors exist for dominant weights only")
    if w.minus[-1] < 0:
        raise UsageError(
            "last minus entry is negative; normalize away the determinant twist first"
        )
    m, n = amb.m, amb.n
    out = embed_poly(amb.one())
    for a in range(1, m):
        e = w.plus[a - 1] - w.plus[a]
        if e:
            out = loc_mul(out, loc_pow(embed_poly(dplus(amb, range(1, a + 1))), e))
    last = w.plus[m - 1]
    if last >= 0:
        out = loc_mul(out, loc_pow(embed_poly(dplus(amb, range(1, m + 1))), last))
    else:
        out = loc_mul(out, LocalizedElement(amb.one(), -last, 0))
    for b in range(1, n + 1):
        e = w.minus[b - 1] - (w.minus[b] if b < n else 0)
        if e:
            out = loc_mul(out, loc_pow(dminus(amb, range(m + 1, m + b + 1)), e))
    got = loc_weight(out)
    if got != w.as_tuple():
        raise InternalError("highest vector has the wrong weight")
    return out


def normalize_berezinian(w: Weight):
    """Shift by the determinant character so the last minus entry becomes zero.

    Returns (shifted weight, twist): the twist is the last minus entry, and
    the shifted weight adds it to every plus entry and subtracts it from every
    minus entry.  The module for the original weight is the shifted one tensored
    by the twist-th power of the one-dimensional determinant character.
    """
    twist = w.minus[-1]
    norm = Weight(
        tuple(v + twist for v in w.plus), tuple(v - twist for v in w.minus)
    )
    return norm, twist


def random_dominant_weight(m: int, n: int, rng, max_entry: int = 4) -> Weight:
    """Random dominant weight with entries in 0..max_entry (last minus entry
    included, so the result is directly realizable)."""
    plus = sorted((rng.randint(0, max_entry) for _ in range(m)), reverse=True)
    minus = sorted((rng.randint(0, max_entry) for _ in range(n)), reverse=True)
    return Weight(tuple(plus), tuple(minus))
