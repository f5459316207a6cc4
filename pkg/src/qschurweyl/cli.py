"""Command-line frontend.

Exit codes: 0 ok, 1 a verification failed, 2 bad configuration, 3 a resource guard tripped.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
from math import comb, gcd
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from . import arrangement as arr
from . import gelfandgraev as ggm
from . import hecke as hk
from . import qaff as qa
from . import rootsys as rsm
from . import scattering as sc
from . import schurweyl as sw
from .coeff import VARIABLES, RatFunc, q, spectral
from .linalg import Mat

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_RESOURCE = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


CONFIG_ERRORS = (ConfigError, rsm.UnsupportedType, arr.BadModulus, arr.RankTooLarge, ggm.NotTypeC1,
                 qa.MixedM, hk.HomDimensionNotOne)
RESOURCE_ERRORS = (arr.StateSpaceTooLarge, ggm.StateSpaceTooLarge, rsm.GroupTooLarge)


# --- serialization ----------------------------------------------------------


def jsonable(obj: Any) -> Any:
    if isinstance(obj, RatFunc):
        return obj.to_json()
    if isinstance(obj, Mat):
        return obj.to_json()
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def labelled_matrix(mat: Mat, rows: Sequence, cols: Sequence | None = None) -> dict:
    cols = rows if cols is None else cols
    nvars = mat.nvars_used()
    return {"rows": [list(y) for y in rows], "cols": [list(y) for y in cols],
            "variables": list(VARIABLES[:nvars]), "entries": mat.to_json(nvars),
            "display": [[str(x) for x in row] for row in mat.rows]}


def _flatten(prefix: str, obj: Any, out: list[tuple[str, str]]) -> None:
    if isinstance(obj, dict):
        for k, v in obj.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    elif isinstance(obj, list) and obj and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append((prefix, json.dumps(obj) if isinstance(obj, list) else str(obj)))


def emit_table(results: Any, fmt: str = "json") -> bytes:
    """Serialize a result: JSON keeps insertion order; CSV is a key/value listing
    (or a plain table when the result is a list of flat records)."""
    data = jsonable(results)
    if fmt == "json":
        return (json.dumps(data, indent=2) + "\n").encode()
    if fmt != "csv":
        raise ConfigError(f"unknown format {fmt!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if isinstance(data, list) and data and all(isinstance(r, dict) for r in data) \
            and all(not isinstance(v, (dict, list)) for r in data for v in r.values()):
        header = list(data[0])
        writer.writerow(header)
        for row in data:
            writer.writerow([row.get(h, "") for h in header])
    else:
        rows: list[tuple[str, str]] = []
        if data not in ([], {}):  # an empty result is just the header
            _flatten("", data, rows)
        writer.writerow(["key", "value"])
        writer.writerows(rows)
    return buf.getvalue().encode()


# --- argument parsing -------------------------------------------------------


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("json", "csv"), default=d("json"))
    parser.add_argument("--seed", type=int, default=d(0))
    parser.add_argument("--threads", type=int, default=d(1))
    parser.add_argument("--bound", type=int, default=d(None),
                        help="index bound for check-commuting, state-space guard elsewhere")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qschurweyl", description="Exact computations linking affine Hecke "
                                "modules of GL_r with quantum affine sl_m modules.")
    _global_flags(p, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, parent=sub, **kw):
        return parent.add_parser(name, parents=[common], **kw)

    rs = add("rootsys", help="root system data")
    rs.add_argument("--type", required=True)
    rs.add_argument("--rank", type=int)
    rs.add_argument("--emit", choices=("exponents", "order", "roots", "coxeter", "all"), default="all")

    ar = add("arrangement", help="Coxeter arrangement and orbit counts")
    ar.add_argument("action", choices=("charpoly", "ep", "orbits", "whittaker", "sommers", "stable"))
    ar.add_argument("--type", required=True)
    ar.add_argument("--rank", type=int)
    ar.add_argument("--n", type=int)

    he = add("hecke", help="affine Hecke algebra")
    hsub = he.add_subparsers(dest="action", required=True)
    hv = add("verify", hsub)
    hv.add_argument("--r", type=int, default=2)
    hv.add_argument("--suite", choices=("relations", "braid", "involution", "all"), default="all")
    hm = add("module", hsub)
    hm.add_argument("--r", type=int, default=2)
    hm.add_argument("--module", choices=("ps", "theta", "steinberg"), default="ps")

    qp = add("qaff", help="quantum affine sl_m modules")
    qsub = qp.add_subparsers(dest="action", required=True)
    qe = add("eval", qsub)
    qe.add_argument("--m", type=int, required=True)
    qe.add_argument("--emit", choices=("matrices", "weights"), default="matrices")
    qv = add("verify", qsub)
    qv.add_argument("--m", type=int, required=True)
    qv.add_argument("--r", type=int, default=1)

    sp = add("schurweyl", help="Schur-Weyl bimodule and functor")
    ssub = sp.add_subparsers(dest="action", required=True)
    sc_ = add("check-commuting", ssub)
    sc_.add_argument("--m", type=int, required=True)
    sc_.add_argument("--r", type=int, required=True)
    sf = add("fsw", ssub)
    sf.add_argument("--m", type=int, required=True)
    sf.add_argument("--r", type=int, required=True)
    sf.add_argument("--module", choices=("ps", "theta", "steinberg"), default="ps")
    sf.add_argument("--emit", choices=("matrices", "dim", "match"), default="dim")

    gp = add("gg", help="Gelfand-Graev side")
    gsub = gp.add_subparsers(dest="action", required=True)
    gd = add("decompose", gsub)
    gd.add_argument("--p", type=int, required=True)
    gd.add_argument("--q", dest="qpar", type=int, required=True)
    gd.add_argument("--n", type=int, required=True)
    gd.add_argument("--r", type=int, required=True)
    gw = add("whittaker", gsub)
    gw.add_argument("--module", choices=("theta", "steinberg", "ps"), required=True)
    gw.add_argument("--n-alpha", type=int, required=True)
    gw.add_argument("--r", type=int, required=True)
    gw.add_argument("--compare", action="store_true", help="also build the Schur-Weyl comparison")

    scp = add("scatter", help="scattering and R-matrices")
    scsub = scp.add_subparsers(dest="action", required=True)
    sr = add("rmatrix", scsub)
    sr.add_argument("--m", type=int, required=True)
    sr.add_argument("--r", type=int, default=2)
    sr.add_argument("--k", type=int, default=1)
    sr.add_argument("--emit", choices=("json", "scattering"), default="json")
    sv = add("verify", scsub)
    sv.add_argument("--suite", choices=("ybe", "equivariance", "degeneracy", "all"), default="all")
    sv.add_argument("--m", type=int, required=True)
    sv.add_argument("--r", type=int, default=2)
    sv.add_argument("--point", action="store_true", help="specialize z = (q^(2r-2), ..., q^2, 1)")

    vp = add("verify", help="batch verification")
    vp.add_argument("--suite", choices=("all", "arrangement", "hecke", "qaff", "schurweyl", "gg", "scatter"),
                    default="all")
    vp.add_argument("--m", type=int, default=2)
    vp.add_argument("--r", type=int, default=2)
    return p


# --- commands ----------------------------------------------------------------


@dataclass
class Outcome:
    payload: Any
    ok: bool = True


def _bound(args, default: int) -> int:
    return args.bound if args.bound is not None else default


def _root_system(args) -> rsm.RootSystem:
    return rsm.build_root_system(args.type, args.rank)


def cmd_rootsys(args) -> Outcome:
    rs = _root_system(args)
    out: dict = {"type": rs.name}
    if args.emit in ("exponents", "all"):
        out["exponents"] = rsm.exponents(rs)
    if args.emit in ("order", "all"):
        out["order"] = rs.order
    if args.emit in ("coxeter", "all"):
        out["coxeter_number"] = rsm.coxeter_number(rs)
    if args.emit in ("roots", "all"):
        out["positive_roots"] = [list(a) for a in rs.positive_roots]
    return Outcome(out)


def cmd_arrangement(args) -> Outcome:
    rs = _root_system(args)
    needs_n = args.action in ("orbits", "whittaker", "sommers", "stable")
    if needs_n and args.n is None:
        raise ConfigError(f"arrangement {args.action} needs --n")
    if args.action == "charpoly":
        poly = arr.char_poly(arr.build_lattice(rs))
        expected = arr.IntPoly.from_roots(rsm.exponents(rs))
        return Outcome({"type": rs.name, "charpoly": poly.to_json(), "matches_exponents": poly == expected},
                       poly == expected)
    if args.action == "ep":
        ep = arr.ep_poly(rs)
        lat_poly = arr.char_poly(arr.build_lattice(rs))
        ok = arr.orlik_solomon_transform(ep, rs.rank) == lat_poly
        return Outcome({"type": rs.name, "ep": ep.to_json(), "orlik_solomon": ok}, ok)
    if args.action == "orbits":
        table = arr.orbit_table(rs, args.n, bound=_bound(args, arr.DEFAULT_STATE_BOUND))
        return Outcome({"type": rs.name, **table.to_json()})
    if args.action == "whittaker":
        theta, st = arr.whittaker_dims(rs, args.n)
        return Outcome({"theta": theta, "steinberg": st})
    if args.action == "stable":
        return Outcome({"type": rs.name, "n": args.n, "stable": arr.is_stable(rs, args.n)})
    mult = arr.sommers_multiplicities(rs, args.n)
    return Outcome({"type": rs.name, "n": args.n,
                    "multiplicities": [{"J": list(pc.J), "order": pc.order, "multiplicity": v}
                                       for pc, v in mult.items()]})


def _hecke_checks(r: int, suite: str, seed: int) -> dict[str, bool]:
    alg = hk.HeckeAlgebra(r)
    out: dict[str, bool] = {}
    if suite in ("relations", "all"):
        out.update({f"relation {k}": v for k, v in hk.relation_suite(alg, 2).items()})
        rng = random.Random(seed)
        out["associativity (100 triples)"] = all(
            (a * b) * c == a * (b * c)
            for a, b, c in ((hk.random_element(alg, rng), hk.random_element(alg, rng), hk.random_element(alg, rng))
                            for _ in range(100)))
    if suite in ("braid", "all") and r >= 3:
        z = spectral(r)
        s1, s2 = (lambda v: hk.swap_spectral(v, 1)), (lambda v: hk.swap_spectral(v, 2))
        lhs = hk.intertwiner(s2(s1(z)), 1) @ hk.intertwiner(s1(z), 2) @ hk.intertwiner(z, 1)
        rhs = hk.intertwiner(s1(s2(z)), 2) @ hk.intertwiner(s2(z), 1) @ hk.intertwiner(z, 2)
        out["intertwiner braid relation"] = lhs == rhs
    if suite in ("involution", "all"):
        pres = hk.im_presentation(r)
        rng = random.Random(seed)
        pairs = [(hk.random_element(alg, rng, lam_bound=1), hk.random_element(alg, rng, lam_bound=1))
                 for _ in range(5)]
        out["IM involutive"] = all(pres.involution(pres.involution(a)) == a for a, _ in pairs)
        out["IM multiplicative"] = all(pres.involution(a * b) == pres.involution(a) * pres.involution(b)
                                       for a, b in pairs)
        if r >= 2:
            tw = hk.twist_by_im(ggm.special_modules(ggm.THETA, r, alg=alg))
            out["IM sends theta to steinberg character"] = tw.T[0][0, 0] == -q
    return out


def cmd_hecke(args) -> Outcome:
    if args.action == "verify":
        checks = _hecke_checks(args.r, args.suite, args.seed)
        return Outcome({"r": args.r, "suite": args.suite, "checks": checks}, all(checks.values()))
    alg = hk.HeckeAlgebra(args.r)
    if args.module == "ps":
        M = hk.principal_series(spectral(args.r), alg)
    else:
        M = ggm.special_modules(args.module, args.r, alg=alg)
    return Outcome(M.to_json())


def cmd_qaff(args) -> Outcome:
    if args.action == "eval":
        V = qa.eval_module(args.m, spectral(1)[0])
        if args.emit == "weights":
            return Outcome({"m": args.m, "weights": [[str(x) for x in V.weight(b)] for b in range(V.dim)]})
        return Outcome({"m": args.m, "z": "z1",
                        "matrices": {str(g): labelled_matrix(V.matrix(g), V.labels) for g in qa.generators(args.m)}})
    mod = qa.tensor([qa.eval_module(args.m, x) for x in spectral(args.r)])
    rep = qa.verify_relations(mod)
    return Outcome({"m": args.m, "r": args.r, **rep.to_json()}, rep.ok)


def _hecke_module(kind: str, r: int, alg) -> hk.FinModule:
    if kind == "ps":
        return hk.principal_series(spectral(r), alg)
    return ggm.special_modules(kind, r, alg=alg)


def cmd_schurweyl(args) -> Outcome:
    ctx = sw.SWContext(args.m, args.r)
    if args.action == "check-commuting":
        rep = sw.check_commuting(ctx, _bound(args, 2))
        return Outcome({"m": args.m, "r": args.r, "bound": _bound(args, 2), **rep.to_json()}, rep.ok)
    M = _hecke_module(args.module, args.r, ctx.alg)
    T = sw.f_sw(M, ctx)
    out: dict = {"m": args.m, "r": args.r, "module": args.module, "dim": T.dim}
    if args.emit == "matrices":
        labels = [[list(y), b] for y, b in T.labels]
        out["basis"] = labels
        out["matrices"] = {str(g): T.uq.matrix(g).to_json() for g in qa.generators(args.m)}
    elif args.emit == "match":
        if args.module != "ps":
            raise ConfigError("--emit match needs --module ps")
        P = sw.match_evaluation_tensor(T)
        out["isomorphism"] = labelled_matrix(P, [y for y, _ in T.labels], ctx.residues())
        out["invertible"] = P.rank() == P.nrows
    return Outcome(out)


def cmd_gg(args) -> Outcome:
    if args.action == "decompose":
        cp = ggm.CoverParams(args.p, args.qpar, args.n)
        n_alpha = ggm.cover_nalpha(cp)
        gg = ggm.gg_decomposition(n_alpha, args.r, bound=_bound(args, 10**6))
        return Outcome({"p": cp.p, "q": cp.qpar, "n": cp.n, "Q": cp.Q, **gg.to_json(),
                        "stable": ggm.stability_check(gg)})
    gg = ggm.gg_decomposition(args.n_alpha, args.r, bound=_bound(args, 10**6))
    alg = hk.HeckeAlgebra(args.r)
    M = _hecke_module(args.module, args.r, alg)
    rep = ggm.whittaker_dim(M, gg)
    out = {"module": args.module, "n_alpha": args.n_alpha, "r": args.r, **rep.to_json(),
           "stable": ggm.stability_check(gg)}
    ok = True
    if args.compare:
        cmp = ggm.compare_sw_gg(M, sw.SWContext(args.n_alpha, args.r), gg)
        out["comparison"] = cmp.to_json()
        ok = cmp.ok
    return Outcome(out, ok)


def _point(r: int) -> tuple:
    return tuple(q ** (2 * (r - 1 - j)) for j in range(r))


def cmd_scatter(args) -> Outcome:
    ctx = sw.SWContext(args.m, args.r)
    if args.action == "rmatrix":
        S = sc.scattering_matrix(None, args.k, ctx)
        R = sc.r_matrix(S)
        labels = ctx.residues()
        out = {"m": args.m, "r": args.r, "k": args.k, "normalization": "S[(0..0),(0..0)] = 1",
               "flip": f"u_y -> u_(s_{args.k} y)", "factorization_ok": R.factorization_ok,
               "rmatrix": labelled_matrix(R.entries, labels)}
        if args.emit == "scattering":
            out["scattering"] = labelled_matrix(S.entries, labels)
        return Outcome(out, R.factorization_ok)
    out: dict = {"m": args.m, "r": args.r}
    ok = True
    z = _point(args.r) if args.point else None
    if args.suite in ("ybe", "all"):
        if args.r != 3:
            if args.suite == "ybe":
                raise ConfigError("the Yang-Baxter check needs --r 3")
        else:
            rep = sc.verify_ybe(ctx, z)
            out["ybe"] = rep.to_json()
            ok &= rep.ok
    if args.suite in ("equivariance", "all"):
        S = sc.scattering_matrix(z, 1, ctx)
        rep = sc.verify_equivariance(S, args.m, solve=not args.point)
        out["equivariance"] = rep.to_json()
        ok &= all(rep.passed.values()) and (args.point or rep.ok)
    if args.suite in ("degeneracy", "all"):
        if args.r != 2:
            if args.suite == "degeneracy":
                raise ConfigError("the degeneracy locus is computed at --r 2")
        else:
            loc = sc.degeneracy_locus(ctx)
            out["degeneracy"] = loc.to_json()
            ok &= (args.m == 1 and not loc.locus) or (loc.symmetric and len(loc.locus) == 2)
    return Outcome(out, ok)


# --- batch verification -------------------------------------------------------


def _check_arrangement(m: int, r: int, seed: int) -> dict[str, bool]:
    out = {}
    for t in ("A1", "A2", "B2", "G2"):
        rs = rsm.build_root_system(t)
        poly = arr.char_poly(arr.build_lattice(rs))
        out[f"{t} charpoly = prod(X - m_j)"] = poly == arr.IntPoly.from_roots(rsm.exponents(rs))
        out[f"{t} Orlik-Solomon"] = arr.orlik_solomon_transform(arr.ep_poly(rs), rs.rank) == poly
        for n in range(1, 14):
            if gcd(n, rs.order) != 1:
                continue
            table = arr.orbit_table(rs, n)
            out[f"{t} n={n} orbit counts"] = (table.free, table.total) == arr.whittaker_dims(rs, n)
    return out


def _check_hecke(m: int, r: int, seed: int) -> dict[str, bool]:
    out = _hecke_checks(r, "all", seed)
    ctx = sw.SWContext(m, r)
    I = Mat.identity(m**r)
    G = [sw.gamma_matrix(ctx, k) for k in range(1, r)]
    for k, g in enumerate(G, 1):
        out[f"gamma quadratic T{k}"] = g @ g == I + g.scale(hk.C)
    for k in range(len(G) - 1):
        out[f"gamma braid T{k+1}"] = G[k] @ G[k + 1] @ G[k] == G[k + 1] @ G[k] @ G[k + 1]
    return out


def _check_qaff(m: int, r: int, seed: int) -> dict[str, bool]:
    z = spectral(2)
    out = {}
    for name, mod in (("V(z)", qa.eval_module(m, z[0])), ("V(z1)(x)V(z2)", qa.tensor2(qa.eval_module(m, z[0]),
                                                                                      qa.eval_module(m, z[1])))):
        for k, v in qa.verify_relations(mod).checks.items():
            out[f"{name} {k}"] = v
    return out


def _check_schurweyl(m: int, r: int, seed: int) -> dict[str, bool]:
    ctx = sw.SWContext(m, r)
    rep = sw.check_commuting(ctx, 1)
    out = {"commuting actions (bound 1)": rep.ok,
           "right module associativity": not sw.check_right_module(ctx, samples=20, seed=seed)}
    T = sw.f_sw(hk.principal_series(spectral(r), ctx.alg), ctx)
    out["dim F_SW(PS) = m^r"] = T.dim == m**r
    P = sw.match_evaluation_tensor(T)
    out["evaluation tensor isomorphism"] = P.rank() == P.nrows
    return out


def _check_gg(m: int, r: int, seed: int) -> dict[str, bool]:
    ctx = sw.SWContext(m, r)
    gg = ggm.gg_decomposition(m, r)
    out = {}
    for kind, expected in ((ggm.THETA, comb(m, r)), (ggm.STEINBERG, comb(m + r - 1, r))):
        out[f"{kind} Whittaker dimension"] = ggm.whittaker_dim(ggm.special_modules(kind, r, alg=ctx.alg), gg).total == expected
    out["stability iff n_alpha >= r"] = ggm.stability_check(gg) == (m >= r)
    try:
        rep = ggm.compare_sw_gg(hk.principal_series(spectral(r), ctx.alg), ctx, gg)
        out["orbitwise comparison (principal series)"] = rep.ok and rep.dim_gg == m**r
    except ggm.ComparisonFailed:
        out["orbitwise comparison (principal series)"] = False
    return out


def _check_scatter(m: int, r: int, seed: int) -> dict[str, bool]:
    ctx = sw.SWContext(m, r)
    S = sc.scattering_matrix(None, 1, ctx)
    out = {"size = m^r": S.size == m**r,
           "sw route = gg route": S.raw == sc.scattering_matrix(None, 1, ctx, route=sc.GG).raw,
           "F* = flip . R": sc.r_matrix(S).factorization_ok}
    eq = sc.verify_equivariance(S, m)
    out["U_q equivariance and proportionality"] = eq.ok
    out["unitarity is scalar"] = sc.unitarity_scalar(ctx) is not None
    if r == 2:
        loc = sc.degeneracy_locus(ctx)
        out["degeneracy locus z1/z2 = q^(+-a)"] = (m == 1 and not loc.locus) or (loc.symmetric and len(loc.locus) == 2)
    if r == 3:
        out["Yang-Baxter"] = sc.verify_ybe(ctx).ok
    return out


SUITES: dict[str, Callable[[int, int, int], dict[str, bool]]] = {
    "arrangement": _check_arrangement,
    "hecke": _check_hecke,
    "qaff": _check_qaff,
    "schurweyl": _check_schurweyl,
    "gg": _check_gg,
    "scatter": _check_scatter,
}


def _run_suite(item: tuple[str, int, int, int]) -> tuple[str, dict[str, bool]]:
    name, m, r, seed = item
    return name, SUITES[name](m, r, seed)


def cmd_verify(args) -> Outcome:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    items = [(n, args.m, args.r, args.seed) for n in names]
    if args.threads > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            results = dict(pool.map(_run_suite, items))
    else:
        results = dict(map(_run_suite, items))
    report = {n: results[n] for n in names}
    ok = all(all(v.values()) for v in report.values())
    return Outcome({"m": args.m, "r": args.r, "ok": ok, "suites": report}, ok)


COMMANDS = {
    "rootsys": cmd_rootsys,
    "arrangement": cmd_arrangement,
    "hecke": cmd_hecke,
    "qaff": cmd_qaff,
    "schurweyl": cmd_schurweyl,
    "gg": cmd_gg,
    "scatter": cmd_scatter,
    "verify": cmd_verify,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        if args.threads < 1:
            raise ConfigError("--threads must be positive")
        outcome = COMMANDS[args.command](args)
    except RESOURCE_ERRORS as exc:
        print(f"resource guard: {exc}", file=stderr)
        return EXIT_RESOURCE
    except CONFIG_ERRORS as exc:
        print(f"configuration error: {exc}", file=stderr)
        return EXIT_CONFIG
    except (ValueError, TypeError) as exc:
        print(f"configuration error: {exc}", file=stderr)
        return EXIT_CONFIG
    data = emit_table(outcome.payload, args.format)
    out = getattr(stdout, "buffer", None)
    if out is not None:
        out.write(data)
        out.flush()
    else:
        stdout.write(data.decode())
    return EXIT_OK if outcome.ok else EXIT_FAIL


def main() -> None:
    sys.exit(run())
