"""The structured model: floors of the induced module, the distinguished
vectors built from minors, and the primitivity machinery.

A floor-r element is a sum of exterior words in r distinct mixed-slot
symbols y[i,j] (i in the even block, j beyond it) with localized
coefficients from the even subring; embedding multiplies everything out in
the raw ring, where the y symbols become the adjugate-over-determinant
entries.  The inverse direction — extraction of floors from a raw element —
is a change of generators: mixed and lower-right raw generators are
rewritten through the y and twisted-z slots, and terms are graded by their
y content.

The distinguished vectors pi are assembled from initial-rows minors; when
the weight is not robust for an index family, the assembly lives only in
the fraction field and the exact-division gate reports that honestly
instead of clearing denominators silently.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iter_product
from math import factorial, gcd

from .derivation import _d_loc, apply_loc, basic
from .fraction import (
    LocalizedElement,
    _den_power,
    det_block22,
    embed_poly,
    is_polynomial,
    loc_add,
    loc_divide_exact,
    loc_eq,
    loc_mul,
    loc_pow,
    loc_scale,
    loc_weight,
    loc_zero,
    render_loc,
)
from .minors import row_initial_minor, twisted_generator, y_entry
from .superpoly import (
    Ambient,
    InternalError,
    SuperPolynomial,
    UsageError,
    ambient,
    exact_divide,
)
from .weights_tableaux import (
    Weight,
    dminus,
    dplus,
    enumerate_semistandard,
    bideterminant_minus,
    bideterminant_plus,
    highest_vector,
    is_admissible_pair,
    is_dominant,
)


def normalize_pairs(pairs):
    """Sort mixed-slot pairs into the admissibility order (row, then column),
    tracking the sign of the permutation; a repeated pair gives None."""
    pairs = tuple(tuple(p) for p in pairs)
    if len(set(pairs)) != len(pairs):
        return 1, None
    arr = list(pairs)
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return sign, tuple(arr)


def pair_height(pairs) -> int:
    return sum(j - i for i, j in pairs)


class FloorElement:
    """Map from exterior words (sorted pair tuples) to localized coefficients,
    all words of one length (the floor index)."""

    __slots__ = ("ambient", "floor", "terms")

    def __init__(self, amb: Ambient, floor: int, terms: dict):
        if floor < 0:
            raise UsageError("floor index must be nonnegative")
        clean = {}
        for key, coeff in terms.items():
            key = tuple(tuple(p) for p in key)
            if len(key) != floor:
                raise UsageError("exterior word length does not match the floor")
            if list(key) != sorted(key) or len(set(key)) != len(key):
                raise UsageError("exterior words must be strictly sorted")
            for i, j in key:
                if not (1 <= i <= amb.m and amb.m < j <= amb.size):
                    raise UsageError(f"pair ({i},{j}) is not a mixed slot")
            if not coeff.is_zero():
                clean[key] = coeff
        self.ambient = amb
        self.floor = floor
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        inner = ", ".join(
            f"{key}: {render_loc(c)}" for key, c in sorted(self.terms.items())
        )
        return f"FloorElement(floor={self.floor}, {{{inner}}})"


def fe_zero(amb: Ambient, floor: int) -> FloorElement:
    return FloorElement(amb, floor, {})


def fe_add(a: FloorElement, b: FloorElement) -> FloorElement:
    if a.ambient != b.ambient or a.floor != b.floor:
        raise UsageError("floor elements must share ambient and floor")
    out = dict(a.terms)
    for key, c in b.terms.items():
        out[key] = loc_add(out[key], c) if key in out else c
    return FloorElement(a.ambient, a.floor, out)


def fe_scale(a: FloorElement, c) -> FloorElement:
    return FloorElement(
        a.ambient, a.floor, {k: loc_scale(v, c) for k, v in a.terms.items()}
    )


def fe_neg(a: FloorElement) -> FloorElement:
    return fe_scale(a, -1)


def fe_eq(a: FloorElement, b: FloorElement) -> bool:
    if a.ambient != b.ambient or a.floor != b.floor:
        return False
    for key in set(a.terms) | set(b.terms):
        x = a.terms.get(key)
        y = b.terms.get(key)
        if x is None:
            if not y.is_zero():
                return False
        elif y is None:
            if not x.is_zero():
                return False
        elif not loc_eq(x, y):
            return False
    return True


def fe_coefficient(a: FloorElement, pairs) -> LocalizedElement:
    sign, key = normalize_pairs(pairs)
    if key is None:
        return loc_zero(a.ambient)
    got = a.terms.get(key)
    if got is None:
        return loc_zero(a.ambient)
    return loc_scale(got, sign)


def embed_floor(x: FloorElement) -> LocalizedElement:
    amb = x.ambient
    total = loc_zero(amb)
    for key, coeff in x.terms.items():
        term = coeff
        for i, j in key:
            term = loc_mul(term, y_entry(amb, i, j))
        total = loc_add(total, term)
    return total


def floor_element_to_json(x: FloorElement) -> list:
    return [
        {"pairs": [list(p) for p in key], "coefficient": render_loc(c)}
        for key, c in sorted(x.terms.items())
    ]


# -- the distinguished first-floor vectors --------------------------------------------


def _exponent_ledger(w: Weight):
    plus = [w.plus[a] - w.plus[a + 1] for a in range(w.m - 1)] + [w.plus[-1]]
    minus = [w.minus[b] - w.minus[b + 1] for b in range(w.n - 1)] + [w.minus[-1]]
    return plus, minus


def _minor_power_product(amb: Ambient, plus_exps, minus_exps) -> LocalizedElement:
    """Product of nested leading minors to the given powers; only the full
    even-block minor may carry a negative power (it folds into the
    denominator)."""
    out = embed_poly(amb.one())
    for a, e in enumerate(plus_exps, start=1):
        if e == 0:
            continue
        if e < 0:
            if a != amb.m:
                raise InternalError("negative exponent on a non-invertible minor")
            out = loc_mul(out, LocalizedElement(amb.one(), -e, 0))
        else:
            out = loc_mul(out, loc_pow(embed_poly(dplus(amb, range(1, a + 1))), e))
    for b, e in enumerate(minus_exps, start=1):
        if e < 0:
            raise InternalError("negative exponent on a minus minor")
        if e:
            out = loc_mul(out, loc_pow(dminus(amb, range(amb.m + 1, amb.m + b + 1)), e))
    return out


def rho_pair(amb: Ambient, i: int, j: int) -> dict:
    """The weight-free part of the (i,j) vector: a map from mixed pairs to
    localized coefficients.  The minus index j is relative (1..n)."""
    m, n = amb.m, amb.n
    if not (1 <= i <= m and 1 <= j <= n):
        raise UsageError("rho indices out of range")
    out = {}
    for r in range(i, m + 1):
        left = embed_poly(row_initial_minor(amb, tuple(range(1, i)) + (r,)))
        if left.is_zero():
            continue
        for s in range(1, j + 1):
            cols = tuple(m + u for u in range(1, j + 1) if u != s)
            right = dminus(amb, cols)
            coeff = loc_mul(left, right)
            if (s + j) % 2 == 1:
                coeff = loc_scale(coeff, -1)
            if not coeff.is_zero():
                out[(r, m + s)] = coeff
    return out


def _check_pi_preconditions(w: Weight, i: int, j: int):
    m, n = w.m, w.n
    if not (1 <= i <= m and 1 <= j <= n):
        raise UsageError("indices out of range")
    if i < m and w.plus[i - 1] == w.plus[i]:
        raise UsageError(
            f"first-floor vector undefined: plus entries {i} and {i+1} coincide"
        )
    if i == m and w.plus[m - 1] == 0:
        raise UsageError("first-floor vector undefined: last plus entry is zero")
    if j > 1 and w.minus[j - 2] == w.minus[j - 1]:
        raise UsageError(
            f"first-floor vector undefined: minus entries {j-1} and {j} coincide"
        )


def pi_ij(amb: Ambient, w: Weight, i: int, j: int) -> FloorElement:
    """The first-floor vector at (i, j): the highest vector divided by the
    (i, j) leading minors, times the weight-free double sum."""
    if (w.m, w.n) != (amb.m, amb.n):
        raise UsageError("weight block sizes do not match the ambient")
    if not is_dominant(w):
        raise UsageError("weight must be dominant")
    if w.minus[-1] < 0:
        raise UsageError("normalize away the determinant twist first")
    _check_pi_preconditions(w, i, j)
    plus_exps, minus_exps = _exponent_ledger(w)
    plus_exps[i - 1] -= 1
    if j > 1:
        minus_exps[j - 2] -= 1
    prefactor = _minor_power_product(amb, plus_exps, minus_exps)
    terms = {
        (pair,): loc_mul(prefactor, c) for pair, c in rho_pair(amb, i, j).items()
    }
    return FloorElement(amb, 1, terms)


def pi_plus(amb: Ambient, w: Weight, i: int) -> FloorElement:
    """Independent transcription of the one-minus-row case (n = 1)."""
    if amb.n != 1 or (w.m, w.n) != (amb.m, 1):
        raise UsageError("this construction is for a single minus row")
    if not is_dominant(w) or w.minus[0] < 0:
        raise UsageError("weight must be dominant with nonnegative minus entry")
    _check_pi_preconditions(w, i, 1)
    m = amb.m
    plus_exps, _ = _exponent_ledger(w)
    plus_exps[i - 1] -= 1
    prefac = _minor_power_product(amb, plus_exps, [0])
    phi_pow = loc_pow(twisted_generator(amb, m + 1, m + 1), w.minus[0])
    terms = {}
    for k in range(i, m + 1):
        minor = row_initial_minor(amb, tuple(range(1, i)) + (k,))
        if minor.is_zero():
            continue
        terms[((k, m + 1),)] = loc_mul(loc_mul(prefac, embed_poly(minor)), phi_pow)
    return FloorElement(amb, 1, terms)


def pi_minus(amb: Ambient, w: Weight, j: int) -> FloorElement:
    """Independent transcription of the one-plus-row case (m = 1)."""
    if amb.m != 1 or (w.m, w.n) != (1, amb.n):
        raise UsageError("this construction is for a single plus row")
    if not is_dominant(w) or w.minus[-1] < 0:
        raise UsageError("weight must be dominant with nonnegative last minus entry")
    _check_pi_preconditions(w, 1, j)
    # the single surviving row minor cancels the ledger decrement, so the
    # full power of the corner generator remains up front
    lead = w.plus[0]
    if lead >= 0:
        head = embed_poly(amb.gen(1, 1) ** lead)
    else:
        head = LocalizedElement(amb.one(), -lead, 0)
    _, minus_exps = _exponent_ledger(w)
    if j > 1:
        minus_exps[j - 2] -= 1
    head = loc_mul(head, _minor_power_product(amb, [0], minus_exps))
    terms = {}
    for k in range(1, j + 1):
        cols = tuple(1 + u for u in range(1, j + 1) if u != k)
        coeff = loc_mul(head, dminus(amb, cols))
        if (k + j) % 2 == 1:
            coeff = loc_scale(coeff, -1)
        if not coeff.is_zero():
            terms[((1, 1 + k),)] = coeff
    return FloorElement(amb, 1, terms)


# -- products of rho factors and the higher-floor vectors ----------------------------


def pi_IJ_raw(amb: Ambient, w: Weight, I, J):
    """Cleared form of the higher-floor vector: returns (element, defect).

    The element carries the positive-part minor powers; the defect collects
    the minor powers the weight's gaps could not absorb.  Dividing every
    coefficient by the defect recovers the true vector when that division is
    exact; the defect depends only on the content of the index family.
    """
    I, J = tuple(I), tuple(J)
    if (w.m, w.n) != (amb.m, amb.n):
        raise UsageError("weight block sizes do not match the ambient")
    if not is_dominant(w):
        raise UsageError("weight must be dominant")
    if not is_admissible_pair(w, I, J):
        raise UsageError("index family is not admissible for this weight")
    if w.minus[-1] < 0:
        raise UsageError("normalize away the determinant twist first")
    m = amb.m
    plus_exps, minus_exps = _exponent_ledger(w)
    for i_s, j_s in zip(I, J):
        plus_exps[i_s - 1] -= 1
        if j_s > 1:
            minus_exps[j_s - 2] -= 1
    defect = embed_poly(amb.one())
    pos_plus, pos_minus = [], []
    for a, e in enumerate(plus_exps, start=1):
        if e < 0 and a < m:
            defect = loc_mul(
                defect, loc_pow(embed_poly(dplus(amb, range(1, a + 1))), -e)
            )
            pos_plus.append(0)
        else:
            pos_plus.append(e)  # a == m may stay negative: D is invertible
    for b, e in enumerate(minus_exps, start=1):
        if e < 0:
            defect = loc_mul(
                defect, loc_pow(dminus(amb, range(m + 1, m + b + 1)), -e)
            )
            pos_minus.append(0)
        else:
            pos_minus.append(e)
    v_pos = _minor_power_product(amb, pos_plus, pos_minus)
    words = {(): embed_poly(amb.one())}
    for i_s, j_s in zip(I, J):
        factor = rho_pair(amb, i_s, j_s)
        new: dict = {}
        for word, c in words.items():
            for pair, c2 in factor.items():
                sign, merged = normalize_pairs(word + (pair,))
                if merged is None:
                    continue
                add = loc_mul(c, c2)
                if sign < 0:
                    add = loc_scale(add, -1)
                new[merged] = loc_add(new[merged], add) if merged in new else add
        words = new
    terms = {key: loc_mul(v_pos, c) for key, c in words.items()}
    return FloorElement(amb, len(I), terms), defect


def divide_floor(x: FloorElement, defect: LocalizedElement):
    """Divide every coefficient by the defect; None when any division fails."""
    if loc_eq(defect, embed_poly(x.ambient.one())):
        return x
    out = {}
    for key, c in x.terms.items():
        q = loc_divide_exact(c, defect)
        if q is None:
            return None
        out[key] = q
    return FloorElement(x.ambient, x.floor, out)


def pi_IJ(amb: Ambient, w: Weight, I, J):
    """The higher-floor vector for an admissible family, or None when the
    weight is not robust enough for the element to live in the module."""
    raw, defect = pi_IJ_raw(amb, w, I, J)
    return divide_floor(raw, defect)


def search_module_combinations(raws, defect: LocalizedElement, bound: int = 2):
    """Small integer combinations of cleared vectors that survive the defect
    division.  Vectors are normalized: first nonzero multiplier positive,
    multipliers coprime.  Bounded search only — silence proves nothing."""
    if not raws:
        return []
    amb = raws[0].ambient
    floor = raws[0].floor
    for r in raws:
        if r.ambient != amb or r.floor != floor:
            raise UsageError("combination search needs matching floors")
    results = []
    for vec in iter_product(range(-bound, bound + 1), repeat=len(raws)):
        nz = [c for c in vec if c]
        if not nz or nz[0] < 0:
            continue
        g = 0
        for c in nz:
            g = gcd(g, abs(c))
        if g != 1:
            continue
        combo = fe_zero(amb, floor)
        for c, r in zip(vec, raws):
            if c:
                combo = fe_add(combo, fe_scale(r, c))
        divided = divide_floor(combo, defect)
        if divided is not None:
            results.append((vec, divided))
    return results


def floor_is_polynomial(x: FloorElement) -> bool:
    """Every coefficient clears its denominators exactly."""
    return all(is_polynomial(c) is not None for c in x.terms.values())


# -- floor extraction: the change of generators ---------------------------------------


def _structured_image(amb: Ambient, i: int, j: int) -> SuperPolynomial:
    key = ("floorsub", i, j)
    if key in amb._cache:
        return amb._cache[key]
    m = amb.m
    if j <= m:
        img = amb.gen(i, j)
    elif i <= m:
        img = amb.zero()
        for a in range(1, m + 1):
            img = img + amb.gen(i, a) * amb.gen(a, j)
    else:
        img = amb.gen(i, j)
        for a in range(1, m + 1):
            img = img + amb.gen(i, a) * amb.gen(a, j)
    amb._cache[key] = img
    return img


def extract_floors(x: LocalizedElement):
    """Rewrite a raw element over the generators {even block, y slots, twisted
    z slots} and grade by y content: returns {floor: FloorElement}, or None
    when the element is not representable (a lower-left factor survives, or
    the lower-right determinant power cannot be cleared)."""
    amb = x.ambient
    num = x.num
    if x.d22_exp:
        num = exact_divide(num, det_block22(amb) ** x.d22_exp)
        if num is None:
            return None
    m = amb.m
    substituted = amb.zero()
    for mono, c in num.terms.items():
        term = amb.scalar(c)
        for (i, j), e in mono:
            term = term * (_structured_image(amb, i, j) ** e)
        substituted = substituted + term
    grouped: dict = {}
    for mono, c in substituted.terms.items():
        y_word = []
        others = []
        for (i, j), e in mono:
            if i > m and j <= m:
                return None  # lower-left content is not representable
            if i <= m < j:
                y_word.append((i, j))
            else:
                others.append(((i, j), e))
        key = tuple(y_word)  # canonical monomial order is the admissible order
        bucket = grouped.setdefault(key, {})
        bucket[tuple(others)] = c
    floors: dict = {}
    for key, bucket in grouped.items():
        coeff = loc_zero(amb)
        for others, c in bucket.items():
            piece = embed_poly(amb.scalar(c))
            for (i, j), e in others:
                if i <= m and j <= m:
                    piece = loc_mul(piece, embed_poly(amb.gen(i, j) ** e))
                else:
                    piece = loc_mul(piece, loc_pow(twisted_generator(amb, i, j), e))
            coeff = loc_add(coeff, piece)
        if coeff.is_zero():
            continue
        coeff = LocalizedElement(coeff.num, coeff.d_exp + x.d_exp, coeff.d22_exp)
        r = len(key)
        floors.setdefault(r, {})[key] = coeff
    return {
        r: FloorElement(amb, r, terms)
        for r, terms in sorted(floors.items())
    }


def floor_component(floors, amb: Ambient, r: int) -> FloorElement:
    if floors is None:
        raise UsageError("element is not representable in floors")
    return floors.get(r, fe_zero(amb, r))


# -- span membership and exact linear algebra -----------------------------------------


def _weight_components(x: LocalizedElement):
    amb = x.ambient
    buckets: dict = {}
    for mono, c in x.num.terms.items():
        cols = [0] * amb.size
        for (_, j), e in mono:
            cols[j - 1] += e
        buckets.setdefault(tuple(cols), {})[mono] = c
    out = []
    for _, terms in sorted(buckets.items()):
        out.append(LocalizedElement(SuperPolynomial(amb, terms), x.d_exp, x.d22_exp))
    return out


def _cleared_vectors(amb: Ambient, locs):
    s = max((v.d_exp for v in locs), default=0)
    t = max((v.d22_exp for v in locs), default=0)
    out = []
    for v in locs:
        p = v.num * _den_power(amb, s - v.d_exp, t - v.d22_exp)
        out.append(dict(p.terms))
    return out


def _echelon_insert(amb: Ambient, rows, vec):
    """Reduce vec against the echelon rows in place; returns the remainder."""
    vec = dict(vec)
    for pivot, row in rows.items():
        if pivot in vec:
            factor = amb.coeff_mul(vec[pivot], amb.coeff_inv(row[pivot]))
            for k, c in row.items():
                s = amb.coeff_add(vec.get(k, amb.coeff(0)), amb.coeff_neg(amb.coeff_mul(factor, c)))
                if s == 0:
                    vec.pop(k, None)
                else:
                    vec[k] = s
    return vec


def in_span(target: LocalizedElement, candidates) -> bool:
    """Exact span membership of a localized element among candidates."""
    amb = target.ambient
    vecs = _cleared_vectors(amb, list(candidates) + [target])
    cand_vecs, target_vec = vecs[:-1], vecs[-1]
    rows: dict = {}
    for vec in cand_vecs:
        rem = _echelon_insert(amb, rows, vec)
        if rem:
            rows[max(rem)] = rem
    return not _echelon_insert(amb, rows, target_vec)


def rank_of_floor_elements(elems) -> int:
    """Exact rank of a family of floor elements of one floor."""
    if not elems:
        return 0
    amb = elems[0].ambient
    keys = sorted({k for e in elems for k in e.terms})
    exps = {
        k: (
            max((e.terms[k].d_exp for e in elems if k in e.terms), default=0),
            max((e.terms[k].d22_exp for e in elems if k in e.terms), default=0),
        )
        for k in keys
    }
    rows: dict = {}
    rank = 0
    for e in elems:
        vec: dict = {}
        for k in keys:
            c = e.terms.get(k)
            if c is None:
                continue
            s, t = exps[k]
            p = c.num * _den_power(amb, s - c.d_exp, t - c.d22_exp)
            for mono, v in p.terms.items():
                vec[(k, mono)] = v
        rem = _echelon_insert(amb, rows, vec)
        if rem:
            rows[max(rem)] = rem
            rank += 1
    return rank


def _module_candidates(amb: Ambient, w: Weight):
    """Embedded spanning set of the even-subgroup module of weight w: products
    of plus and minus bideterminants over semistandard tableaux, with a
    negative last plus entry folded into the denominator."""
    if w.minus[-1] < 0:
        raise UsageError("normalize away the determinant twist first")
    m, n = amb.m, amb.n
    extra_d = 0
    plus_parts = list(w.plus)
    if plus_parts[-1] < 0:
        extra_d = -plus_parts[-1]
        plus_parts = [v + extra_d for v in plus_parts]
    shape_plus = tuple(v for v in plus_parts if v > 0)
    shape_minus = tuple(v for v in w.minus if v > 0)
    out = []
    for tp in enumerate_semistandard(shape_plus, 1, m):
        bp = bideterminant_plus(amb, tp)
        for tm in enumerate_semistandard(shape_minus, m + 1, m + n):
            bm = bideterminant_minus(amb, tm)
            cand = loc_mul(embed_poly(bp), bm)
            if extra_d:
                cand = LocalizedElement(cand.num, cand.d_exp + extra_d, cand.d22_exp)
            if not cand.is_zero():
                out.append(cand)
    return out


def floor_decompose(x: LocalizedElement, w: Weight):
    """Extract floors and validate every coefficient against the spanning set
    of the weight's even-subgroup module; None when not representable."""
    amb = x.ambient
    floors = extract_floors(x)
    if floors is None:
        return None
    candidates = _module_candidates(amb, w)
    by_weight: dict = {}
    for cand in candidates:
        by_weight.setdefault(loc_weight(cand), []).append(cand)
    for fe in floors.values():
        for coeff in fe.terms.values():
            for comp in _weight_components(coeff):
                cw = loc_weight(comp)
                cands = by_weight.get(cw, [])
                if not cands:
                    return None
                if not in_span(comp, cands):
                    return None
    return [floors[r] for r in sorted(floors)]


# -- the floor endomorphisms ----------------------------------------------------------


def phi_floor(x: FloorElement) -> FloorElement:
    """Apply the mixed derivations named by each exterior word to its
    coefficient, left to right, and re-extract the same floor."""
    amb = x.ambient
    total = loc_zero(amb)
    for key, coeff in x.terms.items():
        cur = coeff
        for i, j in key:
            cur = apply_loc(basic(i, j), cur)
        total = loc_add(total, cur)
    floors = extract_floors(total)
    if floors is None:
        raise InternalError("derivative left the structured subring")
    return floor_component(floors, amb, x.floor)


# -- primitivity -----------------------------------------------------------------------


def _simple_lowering_directions(amb: Ambient):
    dirs = [(l + 1, l) for l in range(1, amb.m)]
    dirs += [(l + 1, l) for l in range(amb.m + 1, amb.size)]
    return dirs


def _charp_divided_annihilates(emb: LocalizedElement, k: int, l: int, p: int) -> bool:
    amb0 = ambient(emb.ambient.m, emb.ambient.n, 0)
    lifted = LocalizedElement(
        SuperPolynomial(amb0, {mo: Fraction(c) for mo, c in emb.num.terms.items()}),
        emb.d_exp,
        emb.d22_exp,
    )
    bound = lifted.num.total_degree() + 1
    u = lifted
    r = 0
    while not u.is_zero():
        r += 1
        if r > bound:
            raise InternalError("divided-power iteration failed to terminate")
        u = _d_loc(u, k, l)
        fact = factorial(r)
        for c in u.num.terms.values():
            q = c / fact
            if q.denominator % p == 0:
                raise InternalError("divided power left the integral form")
            if q.numerator % p != 0:
                return False
    return True


def is_primitive(x: FloorElement) -> bool:
    """True when the embedded element is killed by every simple lowering
    direction of the even subgroup — in positive characteristic including all
    divided powers, checked through the integral lift."""
    emb = embed_floor(x)
    if loc_weight(emb) is None:
        raise UsageError("primitivity is defined for weight-homogeneous elements")
    amb = x.ambient
    for k, l in _simple_lowering_directions(amb):
        if amb.char == 0:
            if not apply_loc(basic(k, l), emb).is_zero():
                return False
        else:
            if not _charp_divided_annihilates(emb, k, l, amb.char):
                return False
    return True


# -- raw-model identity checks ---------------------------------------------------------


def generation_identity_check(amb: Ambient, w: LocalizedElement, k: int, l: int) -> bool:
    """A mixed derivative of a bideterminant product is generated by the
    derivatives in even directions times y entries — and the reversed mixed
    direction annihilates it."""
    if not (k <= amb.m < l):
        raise UsageError("the generation identity is for upward mixed directions")
    lhs = apply_loc(basic(k, l), w)
    rhs = loc_zero(amb)
    for a in range(1, amb.m + 1):
        rhs = loc_add(rhs, loc_mul(apply_loc(basic(k, a), w), y_entry(amb, a, l)))
    for b in range(amb.m + 1, amb.size + 1):
        rhs = loc_add(rhs, loc_mul(apply_loc(basic(b, l), w), y_entry(amb, k, b)))
    if not loc_eq(lhs, rhs):
        return False
    return apply_loc(basic(l, k), w).is_zero()


def highest_vector_recursion_check(amb: Ambient, w: Weight, k: int, l: int) -> bool:
    """The highest vector's mixed derivative unfolds by the recursion with the
    weight-sum leading coefficient, and the reversed direction kills it."""
    if not (k <= amb.m < l):
        raise UsageError("the recursion is for upward mixed directions")
    v = highest_vector(amb, w)
    lhs = apply_loc(basic(k, l), v)
    lead = w.plus[k - 1] + w.minus[l - amb.m - 1]
    rhs = loc_scale(loc_mul(v, y_entry(amb, k, l)), lead)
    for s in range(k + 1, amb.m + 1):
        rhs = loc_add(rhs, loc_mul(apply_loc(basic(k, s), v), y_entry(amb, s, l)))
    for t in range(amb.m + 1, l):
        rhs = loc_add(rhs, loc_mul(apply_loc(basic(t, l), v), y_entry(amb, k, t)))
    if not loc_eq(lhs, rhs):
        return False
    return apply_loc(basic(l, k), v).is_zero()
