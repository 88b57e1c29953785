"""Replay of the computer-assisted classification of parameter submanifolds
whose generating function has an S-fraction with polynomial-in-x
coefficients.

The tree is driven by the hint book (one record per documented node): the
engine recomputes all fraction coefficients from scratch, then verifies
every documented assertion exactly -- the substitutions, the inequations,
the remainder and its factorization, the degree collapse of the numerator
and denominator polynomials, the family membership of every classified
branch -- and raises instead of silently accepting a violation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactalg import (
    MPoly, RatFunc, as_field, divide_exact, felem_eq, felem_inv,
    felem_is_zero, mpoly_gcd, remainder_in_x, variables,
)
from .gkpcore import GKPParams, gkp_triangle, ogf_trunc
from .cfrac import extract_sfrac
from . import families
from .hintbook import make_hint_book


class InconsistentNode(ValueError):
    pass


class BadFactorHint(ValueError):
    pass


BASE = ("alpha", "beta", "gamma", "alphap", "betap", "gammap")
RED_DEPTH = 10


class _Ns:
    """Generator namespace with short Greek-style attribute names."""

    def __init__(self):
        gens = variables(BASE, extra=("x",))
        (self.a, self.b, self.g, self.ap, self.bp, self.gp) = gens
        self.x = MPoly.variable("x", gens[0].vars)


V = _Ns()
HINT_BOOK = make_hint_book(V)

# family membership: defining polynomial relations on the six-tuple
FAMILY_RELATIONS = {
    "F1a": lambda m: [m[0], m[2], m[3] + m[4]],
    "F1b": lambda m: [m[0], m[5], m[3] + m[4]],
    "F2a": lambda m: [m[0] + m[1], m[0] + m[2]],
    "F2b": lambda m: [m[3], m[4] + m[5]],
    "F3a": lambda m: [m[0], m[2], m[3]],
    "F3b": lambda m: [m[0] + m[1], m[3] + m[4], m[5]],
    "F4a": lambda m: [m[0], m[3], m[1] * (m[4] + m[5]) - m[2] * m[4]],
    "F4b": lambda m: [m[0] + m[1], m[3] + m[4],
                      m[5] * m[0] - m[3] * (m[0] + m[2])],
    "F5": lambda m: [m[1], m[4]],
    "F6": lambda m: [m[0] * m[4] - m[1] * (m[3] + m[4]),
                     m[0] * m[5] - m[2] * (m[3] + m[4]),
                     m[1] * m[5] - m[2] * m[4]],
}

RED_FAMILIES = ("F1a", "F1b", "F2a", "F2b", "F3a", "F3b", "F4a", "F4b",
                "F5", "F6")
TERMINATING_FAMILIES = ("s0", "s1a", "s1b", "s2a", "s2b", "s3a", "s3b",
                        "s4a", "s4b", "s5a", "s5b", "s6a", "s6b")


def family_member(family_id: str, mu) -> bool:
    m = [as_field(v) for v in tuple(mu)]
    return all(felem_is_zero(as_field(r)) for r in FAMILY_RELATIONS[family_id](m))


@dataclass(frozen=True)
class SearchNode:
    label: tuple
    subs: dict                     # base parameter -> value in the survivors
    free: tuple                    # surviving parameter names
    atoms: tuple                   # known-nonzero side conditions
    disjunctions: tuple = ()       # documented "A != 0 or B != 0" records
    equations: tuple = ()          # factor expressions solved along the path

    @property
    def depth(self) -> int:
        return len(self.label) - 1

    def mu(self) -> GKPParams:
        return GKPParams(*[self.subs[p] for p in BASE])

    def name(self) -> str:
        return ",".join(self.label)


@dataclass
class NodeReport:
    label: tuple
    level: int
    c: object
    Q: object
    R: object
    quotient: object
    remainder: object
    rem_matches_doc: Optional[bool]
    degQ: int
    degR: int
    children: list
    classification: str


# ---------------------------------------------------------------------------
# node construction
# ---------------------------------------------------------------------------

def _subst_field(value, mapping):
    value = as_field(value)
    if isinstance(value, (int, Fraction)) or not mapping:
        return value
    return value.subs(mapping)


def root_node() -> SearchNode:
    subs = {p: MPoly.variable(p, V.a.vars) for p in BASE}
    return SearchNode(label=("0",), subs=subs, free=BASE, atoms=())


def _solve_mapping(solve):
    mapping = {}
    for var, value_fn in solve:
        mapping[var] = _subst_field(value_fn(V), mapping)
    return mapping


def _child_node(node: SearchNode, token: str, solve, atoms_fn, disj=(),
                factor_exprs=()) -> SearchNode:
    mapping = _solve_mapping(solve)
    subs = {p: _subst_field(node.subs[p], mapping) for p in BASE}
    free = tuple(p for p in node.free if p not in mapping)
    child = SearchNode(
        label=node.label + (token,),
        subs=subs,
        free=free,
        atoms=tuple(atoms_fn(V)) if atoms_fn else node.atoms,
        disjunctions=tuple(disj),
        equations=node.equations + tuple(f for f in factor_exprs
                                         if f is not None),
    )
    _check_consistency(child)
    return child


def _check_consistency(node: SearchNode):
    for eq in node.equations:
        val = _subst_field(eq, {p: node.subs[p] for p in BASE})
        if not felem_is_zero(as_field(val)):
            raise InconsistentNode(
                "%s: ancestor equation fails to vanish" % node.name())
    for atom in node.atoms:
        if felem_is_zero(as_field(atom)):
            raise InconsistentNode(
                "%s: inequation violated by substitution" % node.name())


# ---------------------------------------------------------------------------
# coefficient computation
# ---------------------------------------------------------------------------

def _inv_poly(p: MPoly) -> RatFunc:
    return RatFunc(MPoly.one(p.vars), p)


def node_cs(node: SearchNode, depth: int):
    """c_1..c_depth of the node's series, exactly, as field elements.

    The substitution is cleared to polynomial parameters first; since every
    coefficient is homogeneous of degree one in mu, the clearing factor is
    divided out again at the end."""
    D = MPoly.one(V.a.vars)
    for p in BASE:
        val = as_field(node.subs[p])
        if isinstance(val, RatFunc) and not val.is_poly():
            g = mpoly_gcd(D, val.den)
            D = D * divide_exact(val.den, g)
    mu_star = []
    for p in BASE:
        val = as_field(node.subs[p])
        if isinstance(val, RatFunc):
            mu_star.append(val.num * divide_exact(D, val.den))
        else:
            mu_star.append(val * D)
    t = gkp_triangle(GKPParams(*mu_star), depth)
    cf = extract_sfrac(ogf_trunc(t), depth)
    if D.is_constant() and D.constant_value() == 1:
        cs = list(cf.c)
    else:
        inv = _inv_poly(D)
        cs = [ci * inv for ci in cf.c]
    return cs, cf.terminated_at


def _deg_x(p) -> int:
    p = as_field(p)
    if isinstance(p, (int, Fraction)):
        return 0
    if isinstance(p, RatFunc):
        return _deg_x(p.num)
    return p.degree_in("x") if "x" in p.vars else 0


def _den_of(p):
    p = as_field(p)
    return p.den if isinstance(p, RatFunc) else 1


def _x_free(p) -> bool:
    return _deg_x(p) == 0


def _x_coeff(p, j):
    p = as_field(p)
    if isinstance(p, (int, Fraction)):
        return p if j == 0 else 0
    if isinstance(p, RatFunc):
        if "x" not in p.num.vars:
            return p if j == 0 else 0
        num = p.num.coeffs_in("x").get(j)
        return RatFunc(num, p.den) if num is not None else 0
    if "x" not in p.vars:
        return p if j == 0 else 0
    return p.coeffs_in("x").get(j, 0)


def _nonzero_certified(expr, atoms) -> bool:
    """expr is a nonzero rational constant times a product of atoms."""
    expr = as_field(expr)
    if isinstance(expr, (int, Fraction)):
        return expr != 0
    num = expr.num if isinstance(expr, RatFunc) else expr
    den = expr.den if isinstance(expr, RatFunc) else MPoly.one(num.vars)
    if num.is_zero():
        return False

    def strip(p):
        changed = True
        while changed and not p.is_constant():
            changed = False
            for a in atoms:
                q = divide_exact(p, a)
                if q is not None:
                    p = q
                    changed = True
                    break
        return p

    return strip(num).is_constant() and strip(den).is_constant()


def _ratio_constant(a, b) -> bool:
    a, b = as_field(a), as_field(b)
    if felem_is_zero(a) or felem_is_zero(b):
        return False
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return True
    r = a * felem_inv(b)
    if isinstance(r, (int, Fraction)):
        return True
    if isinstance(r, MPoly):
        return r.is_constant()
    return r.num.is_constant() and r.den.is_constant()


# ---------------------------------------------------------------------------
# splitting
# ---------------------------------------------------------------------------

def node_coefficient(node: SearchNode, k: Optional[int] = None) -> NodeReport:
    """Split data at the node: the next coefficient c_k written as Q/R with
    R the declared multiple of c_{k-1}, the polynomial remainder, the degree
    collapse, and the verified children."""
    hint = HINT_BOOK.get(node.label)
    if hint is None:
        raise InconsistentNode("node %s is not in the documented tree"
                               % node.name())
    if k is None:
        k = node.depth + 1
    cs, terminated = node_cs(node, k)
    if len(cs) < k:
        raise InconsistentNode("%s: series terminated at level %s"
                               % (node.name(), terminated))
    c_prev = cs[k - 2] if k >= 2 else 1
    c_k = cs[k - 1]

    own = hint.get("own_c")
    if own is not None and k >= 2:
        if not felem_eq(as_field(c_prev), as_field(own(V))):
            raise InconsistentNode("%s: documented c_%d mismatch"
                                   % (node.name(), k - 1))
    if k != node.depth + 1:
        return NodeReport(node.label, k, c_k, None, None, None, None, None,
                          _deg_x(c_k), 0, [], "white")

    if "passthrough" in hint:
        if not _x_free(_den_of(c_k)):
            raise InconsistentNode("%s: expected a polynomial coefficient"
                                   % node.name())
        token, extra_atoms, disj = hint["passthrough"]
        child_hint = HINT_BOOK.get(node.label + (token,), {})
        atoms_fn = child_hint.get("atoms") or (
            lambda v: list(node.atoms) + extra_atoms(v))
        child = _child_node(node, token, [], atoms_fn,
                            disj=tuple(child_hint.get("disj", disj)))
        return NodeReport(node.label, k, c_k, as_field(c_k), 1,
                          as_field(c_k), 0, None, _deg_x(c_k), 0,
                          [("node", child)], "white")

    g = hint["rfactor"](V)
    R = g * as_field(c_prev) if k >= 2 else as_field(g)
    Q = as_field(c_k) * R
    if not _x_free(_den_of(Q)) or not _x_free(_den_of(R)):
        raise InconsistentNode("%s: R is not the declared multiple of c_%d"
                               % (node.name(), k - 1))
    quot, rem = remainder_in_x(Q, R, "x")
    if not felem_eq(as_field(quot * R + rem), as_field(Q)):
        raise InconsistentNode("%s: division reconstruction failed"
                               % node.name())
    rem = _x_coeff(rem, 0)
    degQ, degR = _deg_x(Q), _deg_x(R)
    if degQ > 2 or degR > 1:
        raise InconsistentNode("%s: degree collapse fails (degQ=%d, degR=%d)"
                               % (node.name(), degQ, degR))
    rem_ok = None
    if hint.get("rem_doc") is not None:
        rem_ok = felem_eq(as_field(rem), as_field(hint["rem_doc"](V)))
    if hint.get("Q_doc") is not None:
        if not felem_eq(as_field(Q), as_field(hint["Q_doc"](V))):
            raise InconsistentNode("%s: documented Q mismatch" % node.name())
    if hint.get("R_doc") is not None:
        if not felem_eq(as_field(R), as_field(hint["R_doc"](V))):
            raise InconsistentNode("%s: documented R mismatch" % node.name())

    children = split_node(node, hint, rem, R)
    return NodeReport(node.label, k, c_k, Q, R, quot, rem, rem_ok,
                      degQ, degR, children, "white")


def split_node(node: SearchNode, factor_hints=None, rem=None, R=None) -> list:
    """Construct and verify the node's children from the documented factor
    hints.  A factor marked "atom" is certified to contradict an inequation
    (pruned branch); "discard" branches are certified to lie inside the
    named earlier family."""
    hint = factor_hints if factor_hints is not None else HINT_BOOK[node.label]
    if rem is None:
        return node_coefficient(node).children
    children = []

    # the factor product must reproduce the remainder numerator exactly
    rem = as_field(rem)
    num = rem.num if isinstance(rem, RatFunc) else rem
    num_poly = MPoly.constant(num, V.a.vars) if isinstance(num, (int, Fraction)) \
        else num
    fac_list = hint.get("factors", ())
    prod = MPoly.one(V.a.vars)
    for item in fac_list:
        prod = prod * item["f"](V) ** item.get("mult", 1)
    if num_poly.is_zero():
        if fac_list:
            raise BadFactorHint("%s: remainder vanished but factors given"
                                % node.name())
    else:
        q = divide_exact(num_poly, prod)
        if q is None or not q.is_constant() or q.is_zero():
            raise BadFactorHint("%s: factor product does not match the "
                                "remainder numerator" % node.name())

    # degree-0 branch (vanishing leading coefficient of R)
    deg0 = hint.get("deg0")
    if deg0 is not None:
        lead = _x_coeff(R, 1)
        if "impossible" in deg0:
            if not _nonzero_certified(lead, node.atoms):
                raise InconsistentNode(
                    "%s: deg-0 branch declared impossible but the leading "
                    "coefficient is not certified nonzero" % node.name())
        else:
            fprod = MPoly.one(V.a.vars)
            solve_factor = None
            for kind, f in deg0["lead_factors"]:
                fprod = fprod * f(V)
                if kind == "atom":
                    if not _nonzero_certified(f(V), node.atoms):
                        raise InconsistentNode("%s: deg-0 atom not certified"
                                               % node.name())
                else:
                    solve_factor = f(V)
            if not _ratio_constant(lead, fprod):
                raise BadFactorHint("%s: deg-0 leading-coefficient "
                                    "factorization mismatch" % node.name())
            children.append(
                _make_deg0_branch(node, deg0, [solve_factor]))

    # degree-1 branches (remainder factors)
    for item in fac_list:
        f_expr = item["f"](V)
        for action in item["actions"]:
            kind = action[0]
            if kind == "atom":
                if not _nonzero_certified(f_expr, node.atoms):
                    raise InconsistentNode(
                        "%s: remainder factor not excluded by the "
                        "inequations" % node.name())
            elif kind == "discard":
                _, solve, family = action
                mapping = _solve_mapping(solve)
                mu = [_subst_field(node.subs[p], mapping) for p in BASE]
                if not family_member(family, mu):
                    raise InconsistentNode(
                        "%s: discarded branch is not inside %s"
                        % (node.name(), family))
                children.append(("discard", family, tuple(mu)))
            elif kind == "child":
                _, token, solve = action
                child_hint = HINT_BOOK[node.label + (token,)]
                child = _child_node(node, token, solve,
                                    child_hint.get("atoms"),
                                    disj=tuple(child_hint.get("disj", ())),
                                    factor_exprs=[f_expr])
                children.append(("node", child))
            elif kind == "red":
                _, token, solve, red = action
                fid, binding, atoms_doc = red
                child = _child_node(node, token, solve, atoms_doc,
                                    factor_exprs=[f_expr])
                _verify_red(child, fid, binding)
                children.append(("red", fid, child))
            elif kind == "terminating":
                _, token, solve, term = action
                s_id, binding = term
                child = _child_node(node, token, solve,
                                    lambda v: list(node.atoms),
                                    factor_exprs=[f_expr])
                _verify_terminating(child, s_id, binding)
                children.append(("terminating", s_id, child))
            else:
                raise BadFactorHint("unknown hint kind %r" % (kind,))
    return children


def _make_deg0_branch(node, deg0, factor_exprs):
    token = deg0["token"]
    solve = deg0["solve"]
    if "red" in deg0:
        fid, binding, atoms_doc = deg0["red"]
        child = _child_node(node, token, solve, atoms_doc,
                            factor_exprs=factor_exprs)
        _verify_red(child, fid, binding)
        return ("red", fid, child)
    if "terminating" in deg0:
        s_id, binding = deg0["terminating"]
        extra = deg0.get("const_atoms") or []
        child = _child_node(node, token, solve,
                            lambda v: list(node.atoms) + [f(v) for f in extra],
                            factor_exprs=factor_exprs)
        _verify_terminating(child, s_id, binding)
        return ("terminating", s_id, child)
    child_hint = HINT_BOOK.get(node.label + (token,))
    if child_hint is None:
        raise BadFactorHint("no hint for deg-0 child %s,%s"
                            % (node.name(), token))
    child = _child_node(node, token, solve, child_hint.get("atoms"),
                        disj=tuple(child_hint.get("disj", ())),
                        factor_exprs=factor_exprs)
    return ("node", child)


# ---------------------------------------------------------------------------
# leaf verification
# ---------------------------------------------------------------------------

def _verify_red(node: SearchNode, family_id: str, binding):
    """Red leaves: c_1..c_10 equal the family's predicted coefficients."""
    cs, terminated = node_cs(node, RED_DEPTH)
    if terminated is not None:
        raise InconsistentNode("%s: unexpectedly terminating" % node.name())
    want = families.predicted_cfrac(family_id, binding(V), RED_DEPTH, kind="S")
    for i, (got, exp) in enumerate(zip(cs, want.c), start=1):
        if not felem_eq(as_field(got), as_field(exp)):
            raise InconsistentNode("%s: c_%d does not match family %s"
                                   % (node.name(), i, family_id))
    if not family_member(family_id, node.mu()):
        raise InconsistentNode("%s: parameters not inside family %s"
                               % (node.name(), family_id))


def _verify_terminating(node: SearchNode, s_id: str, binding):
    spec = families.get_family(s_id)
    level = spec.terminates_at
    cs, terminated = node_cs(node, level + 3)
    if terminated != level:
        raise InconsistentNode("%s: expected termination at %d, got %s"
                               % (node.name(), level, terminated))
    want = families.predicted_cfrac(s_id, binding(V))
    for i, (got, exp) in enumerate(zip(cs, want.c), start=1):
        if not felem_eq(as_field(got), as_field(exp)):
            raise InconsistentNode("%s: terminating c_%d mismatch vs %s"
                                   % (node.name(), i, s_id))


def _verify_c_zero(node: SearchNode, hint):
    """The submanifold where the node's own coefficient vanishes: certified
    impossible, or a nontrivial terminating family, or contained in one of
    the red families (trivial, dropped)."""
    cz = hint.get("c_zero")
    own = hint.get("own_c")
    if node.depth == 0:
        return None
    if cz is None:
        c = own(V)
        if not (_nonzero_certified(_x_coeff(c, 0), node.atoms)
                or _nonzero_certified(_x_coeff(c, 1), node.atoms)):
            raise InconsistentNode(
                "%s: coefficient could vanish but no action documented"
                % node.name())
        return None
    mapping = _solve_mapping(cz["solve"])
    if not felem_is_zero(as_field(_subst_field(own(V), mapping))):
        raise InconsistentNode("%s: documented vanishing submanifold does "
                               "not kill the coefficient" % node.name())
    mu = [_subst_field(node.subs[p], mapping) for p in BASE]
    action = cz["action"]
    if action[0] == "discard":
        if not family_member(action[1], mu):
            raise InconsistentNode("%s: trivial terminating case is not in %s"
                                   % (node.name(), action[1]))
        return ("discard", action[1])
    s_id, binding = action[1], action[2]
    sub = SearchNode(label=node.label + ("c=0",), subs=dict(zip(BASE, mu)),
                     free=tuple(p for p in node.free if p not in mapping),
                     atoms=())
    _verify_terminating(sub, s_id, binding)
    return ("terminating", s_id)


# ---------------------------------------------------------------------------
# replay
# ---------------------------------------------------------------------------

def run_tree(hint_book=None) -> dict:
    """Full replay with classification counts.

    red -> polynomial, generically nonzero coefficients through c_10;
    gray -> no viable children; white -> internal; terminating -> rational
    generating functions (the s-families)."""
    book = hint_book if hint_book is not None else HINT_BOOK
    root = root_node()
    white, red, gray, term, discards = [], {}, [], {}, []
    rem_checks = {}
    reports = {}
    stack = [root]
    while stack:
        node = stack.pop()
        hint = book[node.label]
        cz = _verify_c_zero(node, hint)
        if cz is not None:
            if cz[0] == "terminating":
                term[node.label + ("c=0",)] = cz[1]
            else:
                discards.append((node.label + ("c=0",), cz[1]))
        rep = node_coefficient(node)
        reports[node.label] = rep
        if rep.rem_matches_doc is False:
            raise InconsistentNode("%s: documented remainder mismatch"
                                   % node.name())
        if rep.rem_matches_doc is not None:
            rem_checks[node.label] = rep.rem_matches_doc
        viable = 0
        for child in rep.children:
            kind = child[0]
            if kind == "node":
                stack.append(child[1])
                viable += 1
            elif kind == "red":
                red[child[2].label] = child[1]
                viable += 1
            elif kind == "terminating":
                term[child[2].label] = child[1]
            elif kind == "discard":
                discards.append((node.label, child[1]))
        if viable:
            white.append(node.label)
        else:
            gray.append(node.label)
    summary = {
        "red": {",".join(k): v for k, v in sorted(red.items())},
        "gray": sorted(",".join(k) for k in gray),
        "white": sorted(",".join(k) for k in white),
        "terminating": {",".join(k): v for k, v in sorted(term.items())},
        "discards": sorted((",".join(k), f) for k, f in discards),
        "remainder_checks": {",".join(k): v for k, v in sorted(rem_checks.items())},
        "counts": {"red": len(red), "gray": len(gray), "white": len(white),
                   "terminating": len(term)},
        "red_families": sorted(set(red.values())),
        "terminating_families": sorted(set(term.values())),
    }
    summary["ok"] = (
        summary["counts"]["red"] == 10
        and summary["counts"]["gray"] == 12
        and summary["red_families"] == sorted(RED_FAMILIES)
        and summary["terminating_families"] == sorted(TERMINATING_FAMILIES)
        and all(summary["remainder_checks"].values())
    )
    return summary


def get_node(label) -> SearchNode:
    """Rebuild a documented node by replaying the path from the root."""
    if isinstance(label, str):
        label = tuple(tok for tok in label.split(",") if tok)
    node = root_node()
    if tuple(label) == node.label:
        return node
    for depth in range(1, len(label)):
        want = tuple(label[: depth + 1])
        nxt = None
        for child in node_coefficient(node).children:
            if child[0] in ("node", "red", "terminating") \
                    and child[-1].label == want:
                nxt = child[-1]
                break
        if nxt is None:
            raise InconsistentNode("no documented node %s" % (want,))
        node = nxt
    return node


def tree_dot(summary=None) -> str:
    """Graphviz text mirroring the red/gray/white coloring."""
    if summary is None:
        summary = run_tree()
    lines = ["digraph decision_tree {", "  node [style=filled];"]
    names = {}

    def nm(label_str):
        if label_str not in names:
            names[label_str] = "n%d" % len(names)
        return names[label_str]

    def emit(label_str, color, text):
        lines.append('  %s [label="%s" fillcolor="%s"];'
                     % (nm(label_str), text, color))

    for lab in summary["white"]:
        emit(lab, "white", lab)
    for lab in summary["gray"]:
        emit(lab, "gray", lab)
    for lab, fam in summary["red"].items():
        emit(lab, "red", "%s\\n%s" % (lab, fam))
    for lab, fam in summary["terminating"].items():
        emit(lab, "lightblue", "%s\\n%s" % (lab, fam))
    for lab in list(names):
        parts = lab.split(",")
        if len(parts) > 1:
            parent = ",".join(parts[:-1])
            if parent in names:
                lines.append("  %s -> %s;" % (nm(parent), nm(lab)))
    lines.append("}")
    return "\n".join(lines)
