"""Batch command-line front end: every generation and verification
capability behind one dispatcher with machine-readable JSON output.

Exit codes: 0 = all checks passed, 1 = a mathematical check failed (the
report carries the witness), 2 = usage or configuration error.  Parameters
are exact rational strings ("3", "-2/5") or the token "sym"; floats are
rejected.  The environment variable GKP_MAX_DEPTH caps every depth argument
(default 24).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .exactalg import (
    MPoly, RatFunc, TruncSeries, felem_to_json, rational, series_to_json,
    variables,
)
from .gkpcore import (
    GKPParams, PARAM_NAMES, gkp_triangle, gkpz_triangle, ogf_trunc,
    row_polys,
)
from . import cfrac as cf
from . import combinat
from . import families
from . import hankel as hk
from . import matprod
from . import search
from . import symmetry

SCHEMA_VERSION = 1


class UsageError(ValueError):
    pass


def _depth(value: int) -> int:
    cap = int(os.environ.get("GKP_MAX_DEPTH", "24"))
    if value < 0:
        raise UsageError("depth must be nonnegative")
    if value > cap:
        raise UsageError("depth %d exceeds GKP_MAX_DEPTH=%d" % (value, cap))
    return value


def _parse_mu(text: str, registry=PARAM_NAMES):
    """Comma-separated exact rationals or 'sym' entries."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) not in (6, 8):
        raise UsageError("mu needs 6 (or 8 for the four-term form) entries")
    vals = []
    names = registry + ("sigma", "tau")
    for name, p in zip(names, parts):
        if p == "sym":
            vals.append(MPoly.variable(name, names[: len(parts)] + ("x",)))
        else:
            try:
                vals.append(rational(p))
            except (ValueError, TypeError):
                raise UsageError("bad rational %r" % p)
    return vals


def _parse_params(text):
    """name=value pairs, value an exact rational or 'sym'."""
    if not text:
        return None
    out = {}
    for item in text.split(","):
        if "=" not in item:
            raise UsageError("expected name=value, got %r" % item)
        name, _, val = item.partition("=")
        out[name.strip()] = val.strip()
    names = tuple(out)
    vals = {}
    for name, val in out.items():
        if val == "sym":
            vals[name] = MPoly.variable(name, names + ("x",))
        else:
            try:
                vals[name] = rational(val)
            except (ValueError, TypeError):
                raise UsageError("bad rational %r" % val)
    return vals


def _parse_coeff_list(text, vars=("x",)):
    out = []
    for tok in text.split(";"):
        tok = tok.strip()
        if not tok:
            continue
        out.append(parse_poly(tok, vars))
    return out


def parse_poly(text: str, vars=("x",)):
    """Tiny recursive-descent parser for +, -, *, ^, parentheses, rationals
    and variable names."""
    tokens = _tokenize(text)
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else None

    def take():
        t = tokens[pos[0]]
        pos[0] += 1
        return t

    def atom():
        t = peek()
        if t == "(":
            take()
            e = expr()
            if peek() != ")":
                raise UsageError("missing ) in %r" % text)
            take()
            return e
        if t is None:
            raise UsageError("unexpected end of expression in %r" % text)
        take()
        if t[0].isdigit():
            return MPoly.constant(rational(t), vars)
        if t not in vars:
            raise UsageError("unknown variable %r (declared: %s)" % (t, vars))
        return MPoly.variable(t, vars)

    def power():
        base = atom()
        if peek() == "^":
            take()
            e = take()
            return base ** int(e)
        return base

    def term():
        acc = power()
        while peek() in ("*",):
            take()
            acc = acc * power()
        return acc

    def expr():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        acc = term() * sign
        while peek() in ("+", "-"):
            op = take()
            nxt = term()
            acc = acc + nxt if op == "+" else acc - nxt
        return acc

    out = expr()
    if pos[0] != len(tokens):
        raise UsageError("trailing tokens in %r" % text)
    return out


def _tokenize(text):
    out = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()+-*^":
            out.append(c)
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and (text[j].isdigit() or text[j] == "/"):
                j += 1
            out.append(text[i:j])
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] in "_'"):
                j += 1
            out.append(text[i:j])
            i = j
        else:
            raise UsageError("bad character %r" % c)
    return out


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_triangle(args):
    mu = _parse_mu(args.mu)
    N = _depth(args.depth)
    t = gkpz_triangle(mu, N) if len(mu) == 8 else gkp_triangle(mu, N)
    return True, {"triangle": t.to_json()}


def cmd_polys(args):
    mu = _parse_mu(args.mu)
    N = _depth(args.depth)
    t = gkpz_triangle(mu, N) if len(mu) == 8 else gkp_triangle(mu, N)
    ps = row_polys(t)
    return True, {"row_polys": [felem_to_json(p) for p in ps]}


def cmd_sfrac(args):
    mu = _parse_mu(args.mu)
    N = _depth(args.depth)
    t = gkpz_triangle(mu, N) if len(mu) == 8 else gkp_triangle(mu, N)
    out = cf.extract_sfrac(ogf_trunc(t), N)
    return True, {"cfrac": out.to_json()}


def cmd_jfrac(args):
    mu = _parse_mu(args.mu)
    N = _depth(2 * args.levels)
    t = gkpz_triangle(mu, N) if len(mu) == 8 else gkp_triangle(mu, N)
    out = cf.extract_jfrac(ogf_trunc(t), args.levels)
    return True, {"cfrac": out.to_json()}


def cmd_eval_cfrac(args):
    N = _depth(args.order)
    kind = args.kind.upper()
    c = _parse_coeff_list(args.c or "")
    d = _parse_coeff_list(args.d or "")
    e = _parse_coeff_list(args.e or "")
    f = _parse_coeff_list(args.f or "")
    bundle = cf.CFrac(kind, c=tuple(c), d=tuple(d), e=tuple(e), f=tuple(f))
    series = cf.eval_cfrac(bundle, N)
    return True, {"series": series_to_json(series)}


def cmd_verify_family(args):
    N = _depth(args.depth)
    params = None if args.symbolic else _parse_params(args.params)
    rep = families.verify_family(args.id, params, N, kind=args.kind)
    ok = rep["first_mismatch"] is None
    return ok, {"report": _mk_jsonable(rep)}


def cmd_verify_egf(args):
    N = _depth(args.order)
    params = _parse_params(args.params)
    if params is None:
        raise UsageError("verify-egf needs numeric --params")
    rep = families.verify_egf_closed_forms(args.id, params, N)
    return rep["ok"], {"report": _mk_jsonable(rep)}


def cmd_symmetry(args):
    mu = _parse_mu(args.mu) if args.mu else list(GKPParams.symbolic())
    N = _depth(args.depth)
    if args.map == "scaling":
        kappa, lam = variables("kappa lam", extra=PARAM_NAMES + ("x",))
        rep = symmetry.verify_action(symmetry.ScalingMap(kappa, lam),
                                     GKPParams.of(mu), N)
    else:
        rep = symmetry.verify_action(args.map, GKPParams.of(mu), N)
    out = {"action": _mk_jsonable(rep)}
    if args.show_map:
        moved = symmetry.apply_map(args.map, GKPParams.of(mu))
        out["mu_transformed"] = [felem_to_json(v) for v in moved]
    return rep["ok"], out


def cmd_group(args):
    if args.relations:
        rep = symmetry.verify_relations()
        return rep["ok"], {"relations": _mk_jsonable(rep)}
    elems, mult, classes, center = symmetry.group_table()
    data = {
        "order": len(elems),
        "center": [e.name() for e in center],
        "classes": [{"order": c["order"], "size": c["size"],
                     "elements": [e.name() for e in c["elements"]]}
                    for c in classes],
    }
    ok = len(elems) == 48 and sorted(
        (c["order"], c["size"]) for c in classes) == symmetry.EXPECTED_CLASS_PROFILE
    return ok, {"group": data}


def cmd_rescale(args):
    mu = _parse_mu(args.mu)
    kappa = rational(args.kappa) if args.kappa != "sym" else \
        MPoly.variable("kappa", ("kappa", "lam") + PARAM_NAMES)
    lam = rational(args.lam) if args.lam != "sym" else \
        MPoly.variable("lam", ("kappa", "lam") + PARAM_NAMES)
    rep = symmetry.rescale_gkp(args.case, mu, kappa, lam, _depth(args.depth))
    return rep["ok"], {"report": _mk_jsonable(rep)}


def cmd_hankel(args):
    if args.family == "gkp-tilde":
        ps = hk.gkp_tilde_polys(2 * args.size)
    elif args.mu:
        mu = _parse_mu(args.mu)
        ps = row_polys(gkp_triangle(mu, 2 * args.size))
    else:
        raise UsageError("need --family gkp-tilde or --mu")
    if args.order == 2 and not args.minors:
        rep = hk.log_convexity(ps, 2 * args.size - 2, strong=True)
        ok = rep["ok"]
        return ok, {"hankel": _mk_jsonable(rep),
                    "method": "strong-log-convexity"}
    rep = hk.hankel_tp(ps, args.size, args.order)
    return rep.ok, {"hankel": {"order": rep.order, "ok": rep.ok,
                               "witness": _mk_jsonable(rep.witness)},
                    "method": "minor-enumeration"}


def cmd_logconvex(args):
    mu = _parse_mu(args.mu)
    ps = row_polys(gkp_triangle(mu, args.nmax + 2))
    rep = hk.log_convexity(ps, args.nmax, strong=args.strong)
    return rep["ok"], {"logconvex": _mk_jsonable(rep)}


def cmd_search_node(args):
    node = search.get_node(args.label)
    rep = search.node_coefficient(node, args.level)
    data = {
        "label": node.name(),
        "free": list(node.free),
        "level": rep.level,
        "c": felem_to_json(rep.c),
        "degQ": rep.degQ,
        "degR": rep.degR,
        "remainder": felem_to_json(rep.remainder) if rep.remainder is not None else None,
        "rem_matches_doc": rep.rem_matches_doc,
        "children": [
            {"kind": ch[0],
             "value": ch[1] if isinstance(ch[1], str) else None,
             "label": ch[-1].name() if hasattr(ch[-1], "name") else None}
            for ch in rep.children],
    }
    ok = rep.rem_matches_doc in (True, None)
    return ok, {"node": data}


def cmd_search_tree(args):
    summary = search.run_tree()
    if args.dot:
        return summary["ok"], {"dot": search.tree_dot(summary)}
    return summary["ok"], {"tree": summary}


def cmd_matprod(args):
    N = _depth(args.depth)
    rep = matprod.verify_product_case(args.case, N)
    return rep["ok"], {"report": _mk_jsonable(rep)}


def cmd_combinat(args):
    out = {}
    ok = True
    if args.master is not None:
        rep = combinat.verify_master_sfrac(args.master)
        out["master"] = _mk_jsonable(rep)
        ok = ok and rep["ok"]
    if args.explicit is not None:
        rep = combinat.explicit_formula_checks(args.explicit)
        out["explicit"] = _mk_jsonable(rep)
        ok = ok and rep["ok"]
    if args.stats:
        st = combinat.perm_stats(tuple(int(ch) for ch in args.stats.split(",")))
        out["stats"] = st.__dict__
    if not out:
        raise UsageError("nothing to do; pass --master/--explicit/--stats")
    return ok, out


def cmd_inverse_pair(args):
    import random as _random
    rng = _random.Random(args.seed)
    N = _depth(args.depth)
    alpha = Fraction(1) if args.alpha is None else rational(args.alpha)
    results = []
    ok = True
    for _ in range(args.random):
        from .gkpcore import Triangle
        rows = [[Fraction(rng.randint(-4, 4)) for _ in range(n + 1)]
                for n in range(N + 1)]
        B = Triangle(rows)
        A = matprod.inverse_pair_from_b(B, alpha)
        rep = matprod.inverse_pair_check(A, B, alpha)
        results.append(rep["all"])
        ok = ok and rep["all"]
    rep = matprod.binomial_inverse_identity(args.identity_range)
    ok = ok and rep["ok"]
    return ok, {"random_instances": results,
                "binomial_identity": _mk_jsonable(rep)}


def _mk_jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return "%d/%d" % (obj.numerator, obj.denominator) \
            if obj.denominator != 1 else str(obj.numerator)
    if isinstance(obj, (MPoly, RatFunc)):
        return felem_to_json(obj)
    if isinstance(obj, TruncSeries):
        return series_to_json(obj)
    if isinstance(obj, dict):
        return {str(k): _mk_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_mk_jsonable(v) for v in obj]
    return repr(obj)


# minimal shipped schema: required top-level keys per report, plus the
# payload key each subcommand must emit
REPORT_SCHEMA = {
    "required": {"schema_version": int, "command": str, "ok": bool,
                 "exit": int},
    "payloads": {
        "triangle": "triangle", "polys": "row_polys", "sfrac": "cfrac",
        "jfrac": "cfrac", "eval-cfrac": "series",
        "verify-family": "report", "verify-egf": "report",
        "symmetry": "action", "group": None, "rescale": "report",
        "hankel": "hankel", "logconvex": "logconvex",
        "search-node": "node", "search-tree": None, "matprod": "report",
        "combinat": None, "inverse-pair": None,
    },
}


def validate_report(report: dict) -> bool:
    """Check a JSON report against the shipped schema."""
    if "error" in report:
        return report.get("exit") == 2
    for key, typ in REPORT_SCHEMA["required"].items():
        if key not in report or not isinstance(report[key], typ):
            return False
    if report["schema_version"] != SCHEMA_VERSION:
        return False
    payload = REPORT_SCHEMA["payloads"].get(report["command"], None)
    if payload is not None and payload not in report:
        return False
    return True


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gkpfrac",
        description="exact triangular recurrences, their symmetry group, "
                    "and continued-fraction verification")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON report to this path")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized property suites")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", parents=[common], help="generate a triangular array")
    p.add_argument("--mu", required=True)
    p.add_argument("--depth", type=int, default=8)
    p.set_defaults(fn=cmd_triangle)

    p = sub.add_parser("polys", parents=[common], help="row-generating polynomials")
    p.add_argument("--mu", required=True)
    p.add_argument("--depth", type=int, default=8)
    p.set_defaults(fn=cmd_polys)

    p = sub.add_parser("sfrac", parents=[common], help="extract S-fraction coefficients")
    p.add_argument("--mu", required=True)
    p.add_argument("--depth", type=int, default=8)
    p.set_defaults(fn=cmd_sfrac)

    p = sub.add_parser("jfrac", parents=[common], help="extract J-fraction coefficients")
    p.add_argument("--mu", required=True)
    p.add_argument("--levels", type=int, default=4)
    p.set_defaults(fn=cmd_jfrac)

    p = sub.add_parser("eval-cfrac", parents=[common], help="evaluate a coefficient bundle")
    p.add_argument("--kind", required=True, choices=["S", "T", "J", "s", "t", "j"])
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--c", help="semicolon-separated polynomials in x")
    p.add_argument("--d")
    p.add_argument("--e")
    p.add_argument("--f")
    p.set_defaults(fn=cmd_eval_cfrac)

    p = sub.add_parser("verify-family", parents=[common], help="end-to-end family verification")
    p.add_argument("--id", required=True)
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--params")
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--kind", choices=["S", "T", "J"])
    p.set_defaults(fn=cmd_verify_family)

    p = sub.add_parser("verify-egf", parents=[common], help="closed-form egf check")
    p.add_argument("--id", required=True)
    p.add_argument("--params", required=True)
    p.add_argument("--order", type=int, default=8)
    p.set_defaults(fn=cmd_verify_egf)

    p = sub.add_parser("symmetry", parents=[common], help="verify a parameter-map action")
    p.add_argument("--map", required=True,
                   help="word like S*Z*X^3, or 'scaling'")
    p.add_argument("--mu")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--show-map", action="store_true")
    p.set_defaults(fn=cmd_symmetry)

    p = sub.add_parser("group", parents=[common], help="group table / relations")
    p.add_argument("--relations", action="store_true")
    p.set_defaults(fn=cmd_group)

    p = sub.add_parser("rescale", parents=[common], help="rescaling identities")
    p.add_argument("--case", required=True, choices=["a", "b", "c"])
    p.add_argument("--mu", required=True)
    p.add_argument("--kappa", default="sym")
    p.add_argument("--lam", default="sym")
    p.add_argument("--depth", type=int, default=6)
    p.set_defaults(fn=cmd_rescale)

    p = sub.add_parser("hankel", parents=[common], help="coefficientwise total positivity")
    p.add_argument("--family", choices=["gkp-tilde"])
    p.add_argument("--mu")
    p.add_argument("--symbolic", default="x")
    p.add_argument("--size", type=int, default=5)
    p.add_argument("--order", type=int, default=2)
    p.add_argument("--minors", action="store_true",
                   help="force minor enumeration even at order 2")
    p.set_defaults(fn=cmd_hankel)

    p = sub.add_parser("logconvex", parents=[common], help="coefficientwise log-convexity")
    p.add_argument("--mu", required=True)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--strong", action="store_true")
    p.set_defaults(fn=cmd_logconvex)

    p = sub.add_parser("search-node", parents=[common], help="one decision-tree node")
    p.add_argument("--label", required=True)
    p.add_argument("--level", type=int)
    p.set_defaults(fn=cmd_search_node)

    p = sub.add_parser("search-tree", parents=[common], help="replay the whole decision tree")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(fn=cmd_search_tree)

    p = sub.add_parser("matprod", parents=[common], help="product-recurrence cases")
    p.add_argument("--case", required=True)
    p.add_argument("--depth", type=int, default=5)
    p.add_argument("--symbolic", action="store_true")
    p.set_defaults(fn=cmd_matprod)

    p = sub.add_parser("combinat", parents=[common], help="permutation-statistic oracles")
    p.add_argument("--master", type=int)
    p.add_argument("--explicit", type=int)
    p.add_argument("--stats")
    p.set_defaults(fn=cmd_combinat)

    p = sub.add_parser("inverse-pair", parents=[common], help="inverse pairs of arrays")
    p.add_argument("--random", type=int, default=20)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--alpha")
    p.add_argument("--identity-range", type=int, default=8)
    p.set_defaults(fn=cmd_inverse_pair)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    report = {"schema_version": SCHEMA_VERSION, "command": args.command}
    try:
        ok, payload = args.fn(args)
    except UsageError as exc:
        report.update({"ok": False, "error": str(exc), "exit": 2})
        _emit(report, args)
        return 2
    except (KeyError, ValueError, TypeError) as exc:
        report.update({"ok": False, "error": "%s: %s"
                       % (type(exc).__name__, exc), "exit": 2})
        _emit(report, args)
        return 2
    report.update(payload)
    report["ok"] = bool(ok)
    report["exit"] = 0 if ok else 1
    _emit(report, args)
    return 0 if ok else 1


def _emit(report, args):
    text = json.dumps(report, indent=2, sort_keys=True)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


if __name__ == "__main__":
    sys.exit(main())
