"""Command-line surface: verification suites, emitters, and linkage queries.

Every command prints a single JSON document with sorted keys; the same
configuration (seed included) produces byte-identical output, so reports can
be diffed across runs.  Exit codes: 0 when every check passed, 1 when at
least one verification failed, 2 for a malformed request.

Suite report entries carry short rule ids ("y-raise", "wedge-count", ...)
naming the rewrite family or property they exercised, plus enough of the
instance to reproduce it by hand.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from itertools import combinations, combinations_with_replacement, product
from pathlib import Path

from .derivation import FDminus, FDplus, FPhi, FY, basic, rewrite_rule_check
from .floors_primitives import (
    fe_eq,
    fe_scale,
    floor_element_to_json,
    floor_is_polynomial,
    generation_identity_check,
    is_primitive,
    phi_floor,
    pi_IJ,
    pi_IJ_raw,
    pi_ij,
)
from .fraction import embed_poly, loc_mul, render_loc
from .linkage import (
    ALL,
    d_exponent,
    dot_equivalent,
    even_linked,
    in_alcove,
    is_typical,
    link_chain_search,
    nakayama_consequence_check,
    odd_linked,
    omega,
    omega_grid,
    omega_via_form,
)
from .lr_oracle import (
    admissible_count,
    admissible_families,
    lr_coefficient_flagged,
    lr_multiplicity,
    lr_tableaux,
    wedge_hypotheses_hold,
)
from .minors import jacobi_identity_check, muir_identity_check
from .superpoly import UsageError, ambient
from .weights_tableaux import (
    Weight,
    bideterminant_minus,
    bideterminant_plus,
    content_of_pairs,
    enumerate_semistandard,
    highest_vector,
    is_admissible_pair,
    is_dominant,
    is_robust,
    lambda_ij,
    parse_weight,
    random_dominant_weight,
    render_weight,
)

VERIFY_SUITES = ("lemmas", "identities", "gen", "phi1", "fwedge", "linkage")
EMIT_KINDS = ("highest-vector", "pi-ij", "pi-IJ", "omega-grid", "linkage-graph")


# -- argument plumbing -------------------------------------------------------------


def _parse_pairs(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--pairs must be JSON like [[1,1],[2,2]]: {exc}") from exc
    if not isinstance(data, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(v, int) for v in p)
        for p in data
    ):
        raise UsageError("--pairs must be a JSON list of [i,j] integer pairs")
    I = tuple(p[0] for p in data)
    J = tuple(p[1] for p in data)
    return I, J


def _parse_partition(text: str) -> tuple:
    squeezed = text.strip()
    if squeezed in ("", "[]"):
        return ()
    if squeezed.startswith("["):
        try:
            data = json.loads(squeezed)
        except json.JSONDecodeError as exc:
            raise UsageError(f"unrecognized partition literal {text!r}") from exc
    else:
        data = squeezed.split(",")
    try:
        return tuple(int(v) for v in data)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"unrecognized partition literal {text!r}") from exc


def _require_weight(args) -> Weight:
    if args.weight is None:
        raise UsageError("this command needs --lambda '[a,b,..|c,d,..]'")
    w = parse_weight(args.weight)
    if args.m is not None and args.m != w.m:
        raise UsageError("--m disagrees with the plus block of --lambda")
    if args.n is not None and args.n != w.n:
        raise UsageError("--n disagrees with the minus block of --lambda")
    return w


def _sizes(args, default=(2, 2)):
    m = args.m if args.m is not None else default[0]
    n = args.n if args.n is not None else default[1]
    return m, n


def _check_char(p: int) -> int:
    if p and (p < 3 or p % 2 == 0):
        raise UsageError("the characteristic must be 0 or an odd prime")
    return p


def _config_echo(args, **extra) -> dict:
    cfg = {
        "m": args.m,
        "n": args.n,
        "p": args.p,
        "seed": args.seed,
    }
    if args.weight is not None:
        cfg["lambda"] = render_weight(parse_weight(args.weight))
    cfg.update(extra)
    return cfg


def _finish(args, report: dict, failures: int) -> int:
    report["failures"] = failures
    report["ok"] = failures == 0
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n")
    print(text)
    return 0 if failures == 0 else 1


def _emit_artifact(args, artifact: dict) -> int:
    text = json.dumps(artifact, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n")
    print(text)
    return 0


def _sorted_entries(entries) -> list:
    return sorted(entries, key=lambda e: json.dumps(e, sort_keys=True))


# -- the verify suites --------------------------------------------------------------


def _direction_class(m: int, k: int, l: int) -> str:
    if k <= m and l <= m:
        return "top"
    if k <= m < l:
        return "raise"
    if l <= m < k:
        return "lower"
    return "bottom"


def _rewrite_rule_id(factor, m: int, k: int, l: int) -> str:
    cls = _direction_class(m, k, l)
    if isinstance(factor, FY):
        return f"y-{cls}"
    if isinstance(factor, FPhi):
        return f"phi-{cls}"
    if isinstance(factor, FDminus):
        return f"dminus-{cls}"
    if k > m:
        # both vanishing direction classes of the plus minor collapse
        return "dplus-source-odd"
    return f"dplus-{cls}"


def _render_factor(factor) -> str:
    if isinstance(factor, FY):
        return f"y[{factor.i},{factor.j}]"
    if isinstance(factor, FPhi):
        return f"phi[{factor.i},{factor.j}]"
    name = "dminus" if isinstance(factor, FDminus) else "dplus"
    return name + "[" + ",".join(str(c) for c in factor.cols) + "]"


def _rewrite_factors(amb):
    m, n = amb.m, amb.n
    even = range(1, m + 1)
    odd = range(m + 1, m + n + 1)
    factors = [FY(i, j) for i in even for j in odd]
    factors += [FPhi(i, j) for i in odd for j in odd]
    for s in range(1, n + 1):
        factors += [FDminus(cols) for cols in product(odd, repeat=s)]
    for s in range(1, m + 1):
        factors += [FDplus(cols) for cols in product(even, repeat=s)]
    return factors


def suite_lemmas(args, rng) -> int:
    sizes = (
        [(args.m, args.n)]
        if args.m is not None and args.n is not None
        else [(1, 1), (2, 1), (1, 2), (2, 2)]
    )
    entries = []
    failures = 0
    for m, n in sizes:
        amb = ambient(m, n, args.p)
        for factor in _rewrite_factors(amb):
            for k, l in product(range(1, m + n + 1), repeat=2):
                ok = rewrite_rule_check(amb, factor, basic(k, l))
                failures += not ok
                entries.append(
                    {
                        "rule": _rewrite_rule_id(factor, m, k, l),
                        "size": [m, n],
                        "factor": _render_factor(factor),
                        "direction": [k, l],
                        "ok": ok,
                    }
                )
    report = {
        "command": "verify lemmas",
        "config": _config_echo(args),
        "entries": _sorted_entries(entries),
    }
    return _finish(args, report, failures)


def suite_identities(args, rng) -> int:
    entries = []
    failures = 0
    exhaustive = [args.m] if args.m is not None else [1, 2, 3]
    for m in exhaustive:
        amb = ambient(m, 1, args.p)
        for i, k in combinations(range(1, m + 1), 2):
            for a, b in product(range(1, m + 1), repeat=2):
                ok = jacobi_identity_check(amb, i, k, a, b)
                failures += not ok
                entries.append(
                    {"rule": "jacobi", "m": m, "tuple": [i, k, a, b], "ok": ok}
                )
        for j in range(0, m):
            for ks in product(range(1, m + 1), repeat=j):
                ok = muir_identity_check(amb, ks, m + 1)
                failures += not ok
                entries.append(
                    {"rule": "muir", "m": m, "tuple": list(ks) + [m + 1], "ok": ok}
                )
    if args.m is None:
        m = 4
        amb = ambient(m, 1, args.p)
        for _ in range(args.count if args.count is not None else 100):
            if rng.random() < 0.5:
                i, k = sorted(rng.sample(range(1, m + 1), 2))
                a, b = rng.randint(1, m), rng.randint(1, m)
                ok = jacobi_identity_check(amb, i, k, a, b)
                entries.append(
                    {"rule": "jacobi", "m": m, "tuple": [i, k, a, b], "ok": ok}
                )
            else:
                j = rng.randint(0, m - 1)
                ks = tuple(rng.randint(1, m) for _ in range(j))
                ok = muir_identity_check(amb, ks, m + 1)
                entries.append(
                    {"rule": "muir", "m": m, "tuple": list(ks) + [m + 1], "ok": ok}
                )
            failures += not ok
    report = {
        "command": "verify identities",
        "config": _config_echo(args),
        "entries": _sorted_entries(entries),
    }
    return _finish(args, report, failures)


def _positive_shape(block) -> tuple:
    return tuple(v for v in block if v > 0)


def _random_bideterminant(amb, rng, max_entry: int):
    w = random_dominant_weight(amb.m, amb.n, rng, max_entry=max_entry)
    plus_choices = list(enumerate_semistandard(_positive_shape(w.plus), 1, amb.m))
    minus_choices = list(
        enumerate_semistandard(_positive_shape(w.minus), amb.m + 1, amb.m + amb.n)
    )
    tp = rng.choice(plus_choices)
    tq = rng.choice(minus_choices)
    element = loc_mul(
        embed_poly(bideterminant_plus(amb, tp)), bideterminant_minus(amb, tq)
    )
    return w, tp, tq, element


def suite_gen(args, rng) -> int:
    m, n = _sizes(args)
    amb = ambient(m, n, args.p)
    entries = []
    failures = 0
    for _ in range(args.count if args.count is not None else 50):
        w, tp, tq, element = _random_bideterminant(amb, rng, max_entry=3)
        for k in range(1, m + 1):
            for l in range(m + 1, m + n + 1):
                ok = generation_identity_check(amb, element, k, l)
                failures += not ok
                entries.append(
                    {
                        "rule": "floor-generation",
                        "shape": render_weight(w),
                        "plus-tableau": [list(r) for r in tp.cells],
                        "minus-tableau": [list(r) for r in tq.cells],
                        "direction": [k, l],
                        "ok": ok,
                    }
                )
    report = {
        "command": "verify gen",
        "config": _config_echo(args),
        "entries": _sorted_entries(entries),
    }
    return _finish(args, report, failures)


def _phi1_weights(args, rng):
    if args.weight is not None:
        return [_require_weight(args)]
    m, n = _sizes(args)
    weights = []
    if (m, n) == (2, 2):
        weights.append(parse_weight("[2,1|1,0]"))
    count = args.count if args.count is not None else 10
    weights.extend(random_dominant_weight(m, n, rng, max_entry=4) for _ in range(count))
    return weights


def _eigenvalue_entries(amb, w, char: int):
    """One entry per first-floor vector of the weight: the twisting map must
    scale it by the corresponding grid value (taken mod p in char p)."""
    out = []
    for i in range(1, w.m + 1):
        for j in range(1, w.n + 1):
            try:
                vec = pi_ij(amb, w, i, j)
            except UsageError:
                continue
            value = omega(w, i, j)
            ok = fe_eq(phi_floor(vec), fe_scale(vec, value))
            out.append(
                {
                    "rule": "first-floor-eigenvalue",
                    "char": char,
                    "weight": render_weight(w),
                    "i": i,
                    "j": j,
                    "omega": value if char == 0 else value % char,
                    "ok": ok,
                }
            )
    return out


def suite_phi1(args, rng) -> int:
    weights = _phi1_weights(args, rng)
    chars = [args.p] if args.p else [0]
    entries = []
    failures = 0
    grids = {}
    for char in chars:
        m, n = (weights[0].m, weights[0].n)
        amb = ambient(m, n, char)
        for w in weights:
            grids[render_weight(w)] = omega_grid(w)
            found = _eigenvalue_entries(amb, w, char)
            failures += sum(not e["ok"] for e in found)
            entries.extend(found)
    report = {
        "command": "verify phi1",
        "config": _config_echo(args),
        "grids": grids,
        "entries": _sorted_entries(entries),
    }
    return _finish(args, report, failures)


def _dominant_weights(m: int, n: int, max_entry: int):
    plus_blocks = [
        tuple(reversed(c))
        for c in combinations_with_replacement(range(max_entry + 1), m)
    ]
    minus_blocks = [
        tuple(reversed(c))
        for c in combinations_with_replacement(range(max_entry + 1), n)
    ]
    return [Weight(p, q) for p in plus_blocks for q in minus_blocks]


def suite_fwedge(args, rng) -> int:
    m, n = _sizes(args)
    top = args.max_entry if args.max_entry is not None else 3
    pair_pool = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    entries = []
    failures = 0
    for w in _dominant_weights(m, n, top):
        seen = set()
        for size in range(1, len(pair_pool) + 1):
            for chosen in combinations(pair_pool, size):
                I = tuple(i for i, _ in chosen)
                J = tuple(j for _, j in chosen)
                if not wedge_hypotheses_hold(w, I, J):
                    continue
                cont = content_of_pairs(m, n, I, J)
                key = render_weight(cont)
                if key in seen:
                    continue
                seen.add(key)
                direct = admissible_count(w, cont)
                transposed = lr_multiplicity(w, I, J)
                ok = direct == transposed
                failures += not ok
                entries.append(
                    {
                        "rule": "wedge-count",
                        "weight": render_weight(w),
                        "content": key,
                        "direct": direct,
                        "transposed": transposed,
                        "ok": ok,
                    }
                )
    report = {
        "command": "verify fwedge",
        "config": _config_echo(args, max_entry=top),
        "entries": _sorted_entries(entries),
    }
    return _finish(args, report, failures)


def suite_linkage(args, rng) -> int:
    m, n = _sizes(args)
    p = args.p if args.p else 3
    _check_char(p)
    entries = []
    failures = 0

    for _ in range(args.count if args.count is not None else 100):
        w = random_dominant_weight(m, n, rng, max_entry=6)
        ok = all(
            omega_via_form(w, i, j) == omega(w, i, j)
            for i in range(1, m + 1)
            for j in range(1, n + 1)
        )
        failures += not ok
        entries.append(
            {"rule": "omega-bridge", "weight": render_weight(w), "ok": ok}
        )

    top = args.max_entry if args.max_entry is not None else 3
    for w in _dominant_weights(m, n, top):
        shifts = [
            (i, j)
            for i in range(1, m + 1)
            for j in range(1, n + 1)
            if is_dominant(lambda_ij(w, i, j))
        ]
        for (i, j), (k, l) in combinations(shifts, 2):
            if not even_linked(lambda_ij(w, i, j), lambda_ij(w, k, l), p):
                continue
            ok = nakayama_consequence_check(w, i, j, k, l, p)
            failures += not ok
            entries.append(
                {
                    "rule": "residue-transport",
                    "weight": render_weight(w),
                    "pairs": [[i, j], [k, l]],
                    "p": p,
                    "ok": ok,
                }
            )

    for w in _dominant_weights(m, n, min(top, 2)):
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                if omega(w, i, j) != 0:
                    continue
                target = lambda_ij(w, i, j)
                if not is_dominant(target):
                    continue
                chain = link_chain_search(w, target, p, max_steps=4)
                ok = chain is not None
                if ok:
                    cur = w
                    for a, b in chain:
                        ok = ok and omega(cur, a, b) == 0
                        cur = lambda_ij(cur, a, b)
                    ok = ok and dot_equivalent(cur, target, p)
                failures += not ok
                entries.append(
                    {
                        "rule": "chain-certificate",
                        "weight": render_weight(w),
                        "target": render_weight(target),
                        "chain": None if chain is None else [list(s) for s in chain],
                        "p": p,
                        "ok": ok,
                    }
                )

    report = {
        "command": "verify linkage",
        "config": _config_echo(args, p=p, max_entry=top),
        "entries": _sorted_entries(entries),
    }
    return _finish(args, report, failures)


_SUITES = {
    "lemmas": suite_lemmas,
    "identities": suite_identities,
    "gen": suite_gen,
    "phi1": suite_phi1,
    "fwedge": suite_fwedge,
    "linkage": suite_linkage,
}


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    return _SUITES[args.suite](args, rng)


# -- emitters -----------------------------------------------------------------------


def emit_highest_vector(args) -> int:
    w = _require_weight(args)
    amb = ambient(w.m, w.n, args.p)
    return _emit_artifact(
        args,
        {
            "kind": "highest-vector",
            "weight": render_weight(w),
            "element": render_loc(highest_vector(amb, w)),
        },
    )


def emit_pi_ij(args) -> int:
    w = _require_weight(args)
    if args.i is None or args.j is None:
        raise UsageError("emit pi-ij needs --i and --j")
    amb = ambient(w.m, w.n, args.p)
    vec = pi_ij(amb, w, args.i, args.j)
    return _emit_artifact(
        args,
        {
            "kind": "pi-ij",
            "weight": render_weight(w),
            "i": args.i,
            "j": args.j,
            "floor": 1,
            "element": floor_element_to_json(vec),
        },
    )


def emit_pi_IJ(args) -> int:
    w = _require_weight(args)
    if args.pairs is None:
        raise UsageError("emit pi-IJ needs --pairs '[[i,j],...]'")
    I, J = _parse_pairs(args.pairs)
    amb = ambient(w.m, w.n, args.p)
    raw, defect = pi_IJ_raw(amb, w, I, J)
    vec = pi_IJ(amb, w, I, J)
    return _emit_artifact(
        args,
        {
            "kind": "pi-IJ",
            "weight": render_weight(w),
            "pairs": [[i, j] for i, j in zip(I, J)],
            "defect": render_loc(defect),
            "in_module": vec is not None,
            "element": None if vec is None else floor_element_to_json(vec),
            "cleared": floor_element_to_json(raw),
        },
    )


def emit_omega_grid(args) -> int:
    w = _require_weight(args)
    return _emit_artifact(
        args,
        {
            "kind": "omega-grid",
            "weight": render_weight(w),
            "grid": omega_grid(w),
            "typical": is_typical(w, args.p),
        },
    )


def emit_linkage_graph(args) -> int:
    m, n = _sizes(args)
    p = args.p if args.p else 3
    _check_char(p)
    top = args.max_entry if args.max_entry is not None else 3
    weights = [w for w in _dominant_weights(m, n, top)]
    names = {render_weight(w): w for w in weights}
    nodes = [
        {
            "weight": name,
            "grid": omega_grid(w),
            "typical": is_typical(w, p),
        }
        for name, w in sorted(names.items())
    ]
    edges = []
    for name, w in sorted(names.items()):
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                if omega(w, i, j) != 0:
                    continue
                t = lambda_ij(w, i, j)
                tname = render_weight(t)
                if tname not in names:
                    continue
                edges.append(
                    {"from": name, "to": tname, "pair": [i, j], "omega": 0}
                )
    return _emit_artifact(
        args,
        {
            "kind": "linkage-graph",
            "m": m,
            "n": n,
            "p": p,
            "max_entry": top,
            "nodes": nodes,
            "edges": edges,
        },
    )


_EMITTERS = {
    "highest-vector": emit_highest_vector,
    "pi-ij": emit_pi_ij,
    "pi-IJ": emit_pi_IJ,
    "omega-grid": emit_omega_grid,
    "linkage-graph": emit_linkage_graph,
}


def cmd_emit(args) -> int:
    return _EMITTERS[args.kind](args)


# -- direct queries -----------------------------------------------------------------


def cmd_primitive(args) -> int:
    w = _require_weight(args)
    if args.i is None or args.j is None:
        raise UsageError("primitive needs --i and --j")
    amb = ambient(w.m, w.n, args.p)
    vec = pi_ij(amb, w, args.i, args.j)
    return _emit_artifact(
        args,
        {
            "kind": "primitive",
            "weight": render_weight(w),
            "i": args.i,
            "j": args.j,
            "p": args.p,
            "element": floor_element_to_json(vec),
            "primitive": is_primitive(vec),
        },
    )


def cmd_primitive_k(args) -> int:
    w = _require_weight(args)
    if args.pairs is None:
        raise UsageError("primitive-k needs --pairs '[[i,j],...]'")
    I, J = _parse_pairs(args.pairs)
    amb = ambient(w.m, w.n, args.p)
    admissible = is_admissible_pair(w, I, J)
    robust = is_robust(w, I, J)
    artifact = {
        "kind": "primitive-k",
        "weight": render_weight(w),
        "pairs": [[i, j] for i, j in zip(I, J)],
        "p": args.p,
        "admissible": admissible,
        "robust": robust,
        "in_module": None,
        "polynomial": None,
        "element": None,
        "primitive": None,
    }
    if admissible:
        vec = pi_IJ(amb, w, I, J)
        artifact["in_module"] = vec is not None
        if vec is not None:
            artifact["element"] = floor_element_to_json(vec)
            artifact["polynomial"] = floor_is_polynomial(vec)
            artifact["primitive"] = is_primitive(vec)
    return _emit_artifact(args, artifact)


def cmd_phi1(args) -> int:
    w = _require_weight(args)
    amb = ambient(w.m, w.n, args.p)
    entries = _eigenvalue_entries(amb, w, args.p)
    failures = sum(not e["ok"] for e in entries)
    report = {
        "command": "phi1",
        "config": _config_echo(args),
        "grid": omega_grid(w),
        "entries": _sorted_entries(entries),
    }
    return _finish(args, report, failures)


def cmd_typicality(args) -> int:
    w = _require_weight(args)
    _check_char(args.p)
    return _emit_artifact(
        args,
        {
            "kind": "typicality",
            "weight": render_weight(w),
            "p": args.p,
            "grid": omega_grid(w),
            "typical": is_typical(w, args.p),
        },
    )


def _block_certificate(entries, p: int):
    d = d_exponent(entries, p)
    if d == ALL:
        return {"d": "all", "residues": None}
    modulus = p ** (d + 1)
    return {
        "d": d,
        "residues": sorted((e - idx) % modulus for idx, e in enumerate(entries, 1)),
    }


def cmd_linkage(args) -> int:
    w = _require_weight(args)
    if args.other is None:
        raise UsageError("linkage needs --mu '[a,b,..|c,d,..]'")
    other = parse_weight(args.other)
    p = args.p
    if not p:
        raise UsageError("linkage needs --p (an odd prime)")
    _check_char(p)
    linked = even_linked(w, other, p)
    chain = link_chain_search(
        w, other, p, args.max_steps if args.max_steps is not None else 6
    )
    return _emit_artifact(
        args,
        {
            "kind": "linkage",
            "lambda": render_weight(w),
            "mu": render_weight(other),
            "p": p,
            "even_linked": linked,
            "certificates": {
                "lambda": {
                    "plus": _block_certificate(w.plus, p),
                    "minus": _block_certificate(w.minus, p),
                },
                "mu": {
                    "plus": _block_certificate(other.plus, p),
                    "minus": _block_certificate(other.minus, p),
                },
            },
            "dot_equivalent": dot_equivalent(w, other, p),
            "chain": None if chain is None else [list(s) for s in chain],
        },
    )


def cmd_odd_chain(args) -> int:
    w = _require_weight(args)
    if args.pairs is None:
        raise UsageError("odd-chain needs --pairs '[[i,j],...]'")
    if not args.p:
        raise UsageError("odd-chain needs --p (an odd prime)")
    I, J = _parse_pairs(args.pairs)
    holds, witness = odd_linked(w, I, J, args.p)
    return _emit_artifact(
        args,
        {
            "kind": "odd-chain",
            "weight": render_weight(w),
            "pairs": [[i, j] for i, j in zip(I, J)],
            "p": args.p,
            "holds": holds,
            "witness": None
            if witness is None
            else [list(witness[0]), list(witness[1])],
        },
    )


def cmd_alcove(args) -> int:
    w = _require_weight(args)
    if not args.p:
        raise UsageError("alcove needs --p (an odd prime)")
    return _emit_artifact(
        args,
        {
            "kind": "alcove",
            "weight": render_weight(w),
            "p": args.p,
            "inside": in_alcove(w, args.p),
        },
    )


def cmd_lr(args) -> int:
    if args.outer is None or args.content is None:
        raise UsageError("lr needs --outer and --content (and optionally --inner)")
    outer = _parse_partition(args.outer)
    inner = _parse_partition(args.inner) if args.inner is not None else ()
    content = _parse_partition(args.content)
    count, flag = lr_coefficient_flagged(outer, inner, content)
    artifact = {
        "kind": "lr",
        "outer": list(outer),
        "inner": list(inner),
        "content": list(content),
        "count": count,
        "flag": flag,
    }
    if args.tableaux:
        artifact["tableaux"] = [
            [list(row) for row in filling]
            for filling in lr_tableaux(outer, inner, content)
        ]
    return _emit_artifact(args, artifact)


# -- parser -------------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int, default=None, help="even block size")
    parser.add_argument("--n", type=int, default=None, help="odd block size")
    parser.add_argument(
        "--p", type=int, default=0, help="characteristic: 0 or an odd prime"
    )
    parser.add_argument(
        "--lambda",
        dest="weight",
        default=None,
        help="weight literal '[a,b,..|c,d,..]'",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for random suites")
    parser.add_argument("--out", default=None, help="also write the JSON here")
    parser.add_argument("--i", type=int, default=None)
    parser.add_argument("--j", type=int, default=None)
    parser.add_argument(
        "--pairs", default=None, help="index family as JSON [[i,j],...]"
    )
    parser.add_argument(
        "--count", type=int, default=None, help="number of random instances"
    )
    parser.add_argument(
        "--max-entry", type=int, default=None, help="bound on weight entries in sweeps"
    )
    parser.add_argument(
        "--max-steps", type=int, default=None, help="bound on chain search length"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superinduce",
        description="Exact verification suites and artifacts for the induced-supermodule calculus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("suite", choices=VERIFY_SUITES)
    _add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    for legacy, suite in (("verify-lemmas", "lemmas"), ("verify-identities", "identities")):
        p_legacy = sub.add_parser(legacy, help=f"shorthand for: verify {suite}")
        _add_common(p_legacy)
        p_legacy.set_defaults(func=cmd_verify, suite=suite)

    p_emit = sub.add_parser("emit", help="emit a deterministic JSON artifact")
    p_emit.add_argument("kind", choices=EMIT_KINDS)
    _add_common(p_emit)
    p_emit.set_defaults(func=cmd_emit)

    for name, func, blurb in (
        ("primitive", cmd_primitive, "build one first-floor vector and test primitivity"),
        ("primitive-k", cmd_primitive_k, "build a higher-floor vector and test primitivity"),
        ("phi1", cmd_phi1, "eigenvalue table of the first-floor twisting map"),
        ("typicality", cmd_typicality, "typicality of a weight"),
        ("linkage", cmd_linkage, "even linkage of two weights, with certificates"),
        ("odd-chain", cmd_odd_chain, "sequential vanishing condition for an index family"),
        ("alcove", cmd_alcove, "alcove membership"),
        ("lr", cmd_lr, "skew lattice-filling count"),
    ):
        p_cmd = sub.add_parser(name, help=blurb)
        _add_common(p_cmd)
        if name == "linkage":
            p_cmd.add_argument("--mu", dest="other", default=None)
        if name == "lr":
            p_cmd.add_argument("--outer", default=None)
            p_cmd.add_argument("--inner", default=None)
            p_cmd.add_argument("--content", default=None)
            p_cmd.add_argument("--tableaux", action="store_true")
        p_cmd.set_defaults(func=func)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_char(args.p)
        return args.func(args)
    except UsageError as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
