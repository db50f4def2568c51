"""Sparse exact arithmetic in the supercommutative coordinate ring of GL(m|n).

The ring is generated by c[i,j] for 1 <= i,j <= m+n over an exact field:
the rationals in characteristic 0, or F_p for an odd prime p.  An index is
even when it is at most m and odd otherwise, and c[i,j] carries the parity
|i| + |j| mod 2.  Even generators are central; odd generators anticommute
with each other and square to zero.

A monomial is a tuple of ((row, col), exponent) pairs sorted by (row, col),
with odd generators restricted to exponent 1.  A polynomial is a dict from
monomials to nonzero coefficients, tagged with its Ambient (sizes and
characteristic).  All arithmetic is exact; nothing here ever rounds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations


class UsageError(ValueError):
    """A caller violated a documented precondition."""


class InternalError(RuntimeError):
    """An internal consistency guarantee failed; indicates a bug, not bad input."""


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Ambient:
    """Sizes (m, n) and coefficient characteristic shared by a family of values.

    Values created in distinct ambients never mix.  The ambient also owns a
    cache used by higher layers for expensive per-ring data (determinants,
    adjugate tables, localized generator images).
    """

    m: int
    n: int
    char: int = 0
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise UsageError(f"sizes must be at least 1, got m={self.m}, n={self.n}")
        if self.char != 0 and not _is_odd_prime(self.char):
            raise UsageError(f"characteristic must be 0 or an odd prime, got {self.char}")

    @property
    def size(self) -> int:
        return self.m + self.n

    def index_parity(self, i: int) -> int:
        if not 1 <= i <= self.size:
            raise UsageError(f"index {i} out of range 1..{self.size}")
        return 0 if i <= self.m else 1

    def gen_parity(self, i: int, j: int) -> int:
        return (self.index_parity(i) + self.index_parity(j)) % 2

    # -- coefficient field ------------------------------------------------

    def coeff(self, x) -> Fraction | int:
        """Normalize an int/Fraction/str into this ambient's coefficient field."""
        if self.char == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.char == 0:
                raise UsageError(f"denominator of {x} is not invertible mod {self.char}")
            return x.numerator * pow(x.denominator, -1, self.char) % self.char
        return int(x) % self.char

    def coeff_add(self, a, b):
        return a + b if self.char == 0 else (a + b) % self.char

    def coeff_mul(self, a, b):
        return a * b if self.char == 0 else (a * b) % self.char

    def coeff_neg(self, a):
        return -a if self.char == 0 else (-a) % self.char

    def coeff_inv(self, a):
        if self.char == 0:
            if a == 0:
                raise UsageError("division by zero coefficient")
            return Fraction(1) / a
        if a % self.char == 0:
            raise UsageError("division by zero coefficient")
        return pow(a, -1, self.char)

    def coeff_render(self, a) -> str:
        return str(a)

    def coeff_parse(self, text: str):
        return self.coeff(Fraction(text))

    # -- element factories -------------------------------------------------

    def zero(self) -> "SuperPolynomial":
        return SuperPolynomial(self, {})

    def one(self) -> "SuperPolynomial":
        return self.scalar(1)

    def scalar(self, c) -> "SuperPolynomial":
        c = self.coeff(c)
        if c == 0:
            return self.zero()
        return SuperPolynomial(self, {(): c})

    def gen(self, i: int, j: int) -> "SuperPolynomial":
        self.gen_parity(i, j)  # range check
        return SuperPolynomial(self, {(((i, j), 1),): self.coeff(1)})


@lru_cache(maxsize=None)
def ambient(m: int, n: int, char: int = 0) -> Ambient:
    """Shared Ambient instances, so per-ring caches are reused."""
    return Ambient(m, n, char)


# -- monomials --------------------------------------------------------------

Monomial = tuple  # tuple of ((row, col), exponent) pairs, sorted by (row, col)


def monomial_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def monomial_odd_degree(amb: Ambient, mono: Monomial) -> int:
    """Number of odd generator factors (each necessarily to the first power)."""
    return sum(e for (i, j), e in mono if amb.gen_parity(i, j))


def monomial_parity(amb: Ambient, mono: Monomial) -> int:
    return monomial_odd_degree(amb, mono) % 2


def monomial_mul(amb: Ambient, ma: Monomial, mb: Monomial):
    """Product of two canonical monomials: (sign, monomial) or (1, None) if zero.

    The sign counts Koszul crossings: each odd factor of the right word passes
    every strictly greater odd factor of the left word on its way to canonical
    position.  A shared odd generator squares to zero.
    """
    if not ma:
        return 1, mb
    if not mb:
        return 1, ma
    odd_a = [g for g, _ in ma if amb.gen_parity(*g)]
    crossings = 0
    merged = dict(ma)
    for g, e in mb:
        if amb.gen_parity(*g):
            for h in odd_a:
                if h > g:
                    crossings += 1
            if g in merged:
                return 1, None
        prev = merged.get(g, 0)
        merged[g] = prev + e
    sign = -1 if crossings & 1 else 1
    return sign, tuple(sorted(merged.items()))


def _monomial_column_content(amb: Ambient, mono: Monomial) -> tuple:
    counts = [0] * amb.size
    for (_, j), e in mono:
        counts[j - 1] += e
    return tuple(counts)


def _monomial_row_content(amb: Ambient, mono: Monomial) -> tuple:
    counts = [0] * amb.size
    for (i, _), e in mono:
        counts[i - 1] += e
    return tuple(counts)


# -- polynomials -------------------------------------------------------------


class SuperPolynomial:
    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: Ambient, terms: dict):
        self.ambient = ambient
        self.terms = {mo: c for mo, c in terms.items() if c != 0}

    # construction helpers keep dict cleanliness in one place

    def is_zero(self) -> bool:
        return not self.terms

    def parity(self):
        """0 for even, 1 for odd, None for mixed; the zero polynomial is even."""
        seen = {monomial_parity(self.ambient, mo) for mo in self.terms}
        if not seen:
            return 0
        if len(seen) > 1:
            return None
        return seen.pop()

    def total_degree(self) -> int:
        return max((monomial_degree(mo) for mo in self.terms), default=0)

    def _check_mate(self, other: "SuperPolynomial"):
        if self.ambient != other.ambient:
            raise UsageError("operands live in different ambients")

    def __eq__(self, other):
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    def __hash__(self):
        return hash((self.ambient.m, self.ambient.n, self.ambient.char,
                     tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        self._check_mate(other)
        amb = self.ambient
        out = dict(self.terms)
        for mo, c in other.terms.items():
            s = amb.coeff_add(out.get(mo, amb.coeff(0)), c)
            if s == 0:
                out.pop(mo, None)
            else:
                out[mo] = s
        return SuperPolynomial(amb, out)

    def __neg__(self):
        amb = self.ambient
        return SuperPolynomial(amb, {mo: amb.coeff_neg(c) for mo, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "SuperPolynomial":
        amb = self.ambient
        c = amb.coeff(c)
        if c == 0:
            return amb.zero()
        return SuperPolynomial(amb, {mo: amb.coeff_mul(v, c) for mo, v in self.terms.items()})

    def __mul__(self, other):
        amb = self.ambient
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        self._check_mate(other)
        out: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                sign, mo = monomial_mul(amb, ma, mb)
                if mo is None:
                    continue
                c = amb.coeff_mul(ca, cb)
                if sign < 0:
                    c = amb.coeff_neg(c)
                s = amb.coeff_add(out.get(mo, amb.coeff(0)), c)
                if s == 0:
                    out.pop(mo, None)
                else:
                    out[mo] = s
        return SuperPolynomial(amb, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise UsageError("negative polynomial powers are not defined here")
        out = self.ambient.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def __repr__(self):
        return f"SuperPolynomial({render_poly(self)!r})"


def weight_of(p: SuperPolynomial):
    """Common column-content vector of all terms, or None when inhomogeneous.

    The zero polynomial reports the zero vector.
    """
    amb = p.ambient
    w = None
    for mono in p.terms:
        cur = _monomial_column_content(amb, mono)
        if w is None:
            w = cur
        elif w != cur:
            return None
    return w if w is not None else tuple([0] * amb.size)


def row_content_of(p: SuperPolynomial):
    """Common row-content vector of all terms, or None when inhomogeneous."""
    amb = p.ambient
    w = None
    for mono in p.terms:
        cur = _monomial_row_content(amb, mono)
        if w is None:
            w = cur
        elif w != cur:
            return None
    return w if w is not None else tuple([0] * amb.size)


# -- exact division -----------------------------------------------------------


def _division_key(amb: Ambient, mono: Monomial):
    # graded lexicographic over the full generator grid; multiplicative, so a
    # single-divisor remainder of zero is equivalent to exact divisibility
    size = amb.size
    vec = [0] * (size * size)
    deg = 0
    for (i, j), e in mono:
        vec[(i - 1) * size + (j - 1)] = e
        deg += e
    return (deg, tuple(vec))


def _even_monomial_divide(u: Monomial, v: Monomial):
    """u / v for monomials in even generators only; None when not divisible."""
    quo = dict(u)
    for g, e in v:
        r = quo.get(g, 0) - e
        if r < 0:
            return None
        if r == 0:
            quo.pop(g, None)
        else:
            quo[g] = r
    return tuple(sorted(quo.items()))


def _commutative_divide(x: SuperPolynomial, b0: SuperPolynomial):
    """Exact division by a polynomial in even generators, leading-term style."""
    amb = x.ambient
    lead_b = max(b0.terms, key=lambda mo: _division_key(amb, mo))
    lc_b_inv = amb.coeff_inv(b0.terms[lead_b])
    quo: dict = {}
    rem = SuperPolynomial(amb, dict(x.terms))
    while not rem.is_zero():
        u = max(rem.terms, key=lambda mo: _division_key(amb, mo))
        qm = _even_monomial_divide(u, lead_b)
        if qm is None:
            return None
        qc = amb.coeff_mul(rem.terms[u], lc_b_inv)
        quo[qm] = qc
        rem = rem - SuperPolynomial(amb, {qm: qc}) * b0
    return SuperPolynomial(amb, quo)


def _odd_layer(p: SuperPolynomial, k: int) -> SuperPolynomial:
    amb = p.ambient
    return SuperPolynomial(
        amb, {mo: c for mo, c in p.terms.items() if monomial_odd_degree(amb, mo) == k}
    )


def exact_divide(a: SuperPolynomial, b: SuperPolynomial):
    """Exact quotient a/b, or None when b does not divide a.

    The divisor must be even and a non-zero-divisor.  Writing b = b0 + higher,
    where the body b0 collects the terms free of odd generators, evenness makes
    b invertible-modulo-divisibility exactly when b0 is nonzero; the quotient is
    then recovered layer by layer in the number of odd factors, each layer being
    an ordinary leading-term division by b0.  The result is verified by
    multiplication before being returned.
    """
    if a.ambient != b.ambient:
        raise UsageError("operands live in different ambients")
    amb = a.ambient
    if b.is_zero():
        raise UsageError("division by the zero polynomial")
    if b.parity() != 0:
        raise UsageError("divisor must be even")
    b0 = _odd_layer(b, 0)
    if b0.is_zero():
        raise UsageError("divisor is a zero divisor (its even-generator body vanishes)")
    quo = amb.zero()
    rem = a
    max_layers = 2 * amb.m * amb.n + 1
    for _ in range(max_layers + 1):
        if rem.is_zero():
            break
        k = min(monomial_odd_degree(amb, mo) for mo in rem.terms)
        layer = _odd_layer(rem, k)
        # group the layer by its odd word; even generators are central, so the
        # grouping involves no signs
        groups: dict = {}
        for mo, c in layer.terms.items():
            odd_word = tuple(pair for pair in mo if amb.gen_parity(*pair[0]))
            even_word = tuple(pair for pair in mo if not amb.gen_parity(*pair[0]))
            groups.setdefault(odd_word, {})[even_word] = c
        part = amb.zero()
        for odd_word, even_terms in groups.items():
            qe = _commutative_divide(SuperPolynomial(amb, even_terms), b0)
            if qe is None:
                return None
            part = part + qe * SuperPolynomial(amb, {odd_word: amb.coeff(1)})
        quo = quo + part
        rem = rem - part * b
        if not rem.is_zero():
            new_k = min(monomial_odd_degree(amb, mo) for mo in rem.terms)
            if new_k <= k:
                return None
    else:
        raise InternalError("layered division failed to terminate")
    if not (quo * b - a).is_zero():
        raise InternalError("division verification failed")
    return quo


# -- generic determinants ------------------------------------------------------


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        t = start
        while not seen[t]:
            seen[t] = True
            t = perm[t]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(amb: Ambient, rows, cols) -> SuperPolynomial:
    """Determinant of the submatrix with the given rows/cols of (c[i,j]).

    The defining sum runs over permutations with factors multiplied in row
    order, which fixes the value when odd entries are present.  Repeated rows
    or columns return zero by convention.
    """
    rows = tuple(rows)
    cols = tuple(cols)
    if len(rows) != len(cols):
        raise UsageError("minor specification must have equally many rows and columns")
    for idx in (*rows, *cols):
        amb.index_parity(idx)
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        return amb.zero()
    t = len(rows)
    if t == 0:
        return amb.one()
    acc = amb.zero()
    for perm in permutations(range(t)):
        prod = amb.gen(rows[0], cols[perm[0]])
        for a in range(1, t):
            prod = prod * amb.gen(rows[a], cols[perm[a]])
        acc = acc + prod.scale(_perm_sign(perm))
    return acc


# -- text format ----------------------------------------------------------------


def render_poly(p: SuperPolynomial) -> str:
    """Canonical text form: sign-prefixed terms, leading monomials first."""
    if p.is_zero():
        return "0"
    amb = p.ambient
    ordered = sorted(p.terms, key=lambda mo: _division_key(amb, mo), reverse=True)
    parts = []
    for mono in ordered:
        c = p.terms[mono]
        if amb.char == 0 and c < 0:
            sign, mag = "-", -c
        else:
            sign, mag = "+", c
        chunks = [amb.coeff_render(mag)]
        for (i, j), e in mono:
            chunks.append(f"c[{i},{j}]" + (f"^{e}" if e > 1 else ""))
        parts.append(sign + "·".join(chunks))
    return " ".join(parts)


_FACTOR_RE = re.compile(r"^c\[(\d+),(\d+)\](?:\^(\d+))?$")
_COEFF_RE = re.compile(r"^\d+(?:/\d+)?$")


def parse_poly(amb: Ambient, text: str) -> SuperPolynomial:
    """Parse the render_poly grammar; whitespace-insensitive, '*' accepted for '·'."""
    squeezed = re.sub(r"\s+", "", text)
    if squeezed in ("", "0"):
        return amb.zero()
    if squeezed[0] not in "+-":
        squeezed = "+" + squeezed
    total = amb.zero()
    for sign, body in re.findall(r"([+-])([^+-]+)", squeezed):
        if not body:
            raise UsageError(f"dangling sign in polynomial text: {text!r}")
        coeff = amb.coeff(1)
        mono_poly = amb.one()
        for chunk in re.split(r"[·*]", body):
            fm = _FACTOR_RE.match(chunk)
            if fm:
                i, j, e = int(fm.group(1)), int(fm.group(2)), int(fm.group(3) or 1)
                mono_poly = mono_poly * (amb.gen(i, j) ** e)
            elif _COEFF_RE.match(chunk):
                coeff = amb.coeff_mul(coeff, amb.coeff_parse(chunk))
            else:
                raise UsageError(f"unrecognized factor {chunk!r} in polynomial text")
        if sign == "-":
            coeff = amb.coeff_neg(coeff)
        total = total + mono_poly.scale(coeff)
    return total
