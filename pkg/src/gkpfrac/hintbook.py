"""Documented decision-tree data: per node, the parameter substitution and
inequations in force, the declared R-multiplier, the documented remainder,
and the fully attributed factorization of the remainder numerator.

Factor entries are dicts {"f": builder, "mult": power in the numerator,
"actions": [...]} where each action is one of

    ("atom",)                              factor is excluded by an inequation
    ("child", token, solve)                new internal node
    ("red", token, solve, (family, binding, atoms))
    ("terminating", token, solve, (s_id, binding))
    ("discard", solve, family)             contained in an earlier family

and ``solve`` is a list of (parameter, value-builder) eliminations.  All
builders take the generator namespace.
"""
from __future__ import annotations

from fractions import Fraction

from .exactalg import MPoly, RatFunc, ratfunc


def _h(**kw):
    return kw


def inv(p):
    return RatFunc(MPoly.one(p.vars), p)


def make_hint_book(V):
    a, b, g, ap, bp, gp, x = V.a, V.b, V.g, V.ap, V.bp, V.gp, V.x
    half = Fraction(1, 2)

    return {
        ("0",): _h(
            free=("alpha", "beta", "gamma", "alphap", "betap", "gammap"),
            atoms=lambda v: [],
            own_c=lambda v: 1,
            c_zero=None,
            passthrough=("0", lambda v: [],
                         [(lambda v: v.a + v.g, lambda v: v.ap + v.bp + v.gp)]),
        ),
        ("0", "0"): _h(
            atoms=lambda v: [],
            own_c=lambda v: (v.a + v.g) + (v.ap + v.bp + v.gp) * v.x,
            c_zero=_h(solve=[("gamma", lambda v: -v.a),
                             ("gammap", lambda v: -v.ap - v.bp)],
                      action=("terminating", "s0",
                              lambda v: {"alpha": v.a, "beta": v.b,
                                         "alphap": v.ap, "betap": v.bp})),
            rfactor=lambda v: 1,
            rem_doc=lambda v: (v.a + v.g)
            * (v.bp * (v.a + v.g) - v.b * (v.ap + v.bp + v.gp))
            / (v.ap + v.bp + v.gp),
            Q_doc=lambda v: v.a * (v.a + v.g)
            + (2 * v.a * v.ap + v.a * v.bp + v.a * v.gp + v.b * v.bp
               + v.b * v.gp + v.b * v.ap + v.g * v.ap) * v.x
            + (v.ap + v.bp) * (v.ap + v.bp + v.gp) * v.x ** 2,
            deg0=_h(token="0", solve=[("gammap", lambda v: -v.ap - v.bp)],
                    lead_factors=[("solve", lambda v: v.ap + v.bp + v.gp)],
                    const_atoms=[lambda v: v.a + v.g]),
            factors=[
                _h(f=lambda v: v.a + v.g, mult=1,
                   actions=[("child", "1a", [("gamma", lambda v: -v.a)])]),
                _h(f=lambda v: v.bp * (v.a + v.g) - v.b * (v.ap + v.bp + v.gp),
                   mult=1,
                   actions=[("child", "1b",
                             [("beta", lambda v: (v.a + v.g) * v.bp
                               / (v.ap + v.bp + v.gp))])]),
            ],
        ),
        ("0", "0", "0"): _h(
            atoms=lambda v: [v.a + v.g],
            disj=[(lambda v: v.a, lambda v: v.ap)],
            own_c=lambda v: v.a + v.ap * v.x,
            c_zero=_h(solve=[("alpha", lambda v: 0), ("alphap", lambda v: 0)],
                      action=("discard", "F2b", None)),
            rfactor=lambda v: 1,
            rem_doc=lambda v: v.a * (v.a * v.bp - v.b * v.ap) / v.ap,
            Q_doc=lambda v: v.a * (2 * v.a + v.g)
            + v.ap * (3 * v.a + v.b + v.g) * v.x
            + v.ap * (v.ap + v.bp) * v.x ** 2,
            R_doc=lambda v: v.a + v.ap * v.x,
            deg0=_h(token="0", solve=[("alphap", lambda v: 0)],
                    lead_factors=[("solve", lambda v: v.ap)],
                    const_atoms=[lambda v: v.a],
                    red=("F2b",
                         lambda v: {"alpha": v.a, "beta": v.b, "gamma": v.g,
                                    "betap": v.bp},
                         lambda v: [v.a + v.g, 2 * v.a + v.g, v.a])),
            factors=[
                _h(f=lambda v: v.a, mult=1,
                   actions=[("child", "1a", [("alpha", lambda v: 0)])]),
                _h(f=lambda v: v.a * v.bp - v.b * v.ap, mult=1,
                   actions=[("child", "1b",
                             [("beta", lambda v: v.a * v.bp / v.ap)])]),
            ],
        ),
        ("0", "0", "1a"): _h(
            atoms=lambda v: [v.ap + v.bp + v.gp],
            disj=[(lambda v: v.a + v.b, lambda v: v.ap + v.bp)],
            own_c=lambda v: (v.a + v.b) + (v.ap + v.bp) * v.x,
            c_zero=_h(solve=[("beta", lambda v: -v.a),
                             ("betap", lambda v: -v.ap)],
                      action=("discard", "F2a", None)),
            rfactor=lambda v: 1,
            rem_doc=lambda v: (v.a + v.b) * (v.a * v.bp - v.b * v.ap)
            / (v.ap + v.bp),
            Q_doc=lambda v: v.a * (v.a + v.b)
            + (v.a + v.b) * (3 * v.ap + 2 * v.bp + v.gp) * v.x
            + (v.ap + v.bp) * (2 * v.ap + 2 * v.bp + v.gp) * v.x ** 2,
            R_doc=lambda v: v.a + v.b + (v.ap + v.bp) * v.x,
            deg0=_h(token="0", solve=[("betap", lambda v: -v.ap)],
                    lead_factors=[("solve", lambda v: v.ap + v.bp)],
                    const_atoms=[lambda v: v.a + v.b, lambda v: v.gp]),
            factors=[
                _h(f=lambda v: v.a + v.b, mult=1,
                   actions=[("red", "1a", [("beta", lambda v: -v.a)],
                             ("F2a",
                              lambda v: {"alpha": v.a, "alphap": v.ap,
                                         "betap": v.bp, "gammap": v.gp},
                              lambda v: [v.ap + v.bp, v.ap + v.bp + v.gp,
                                         2 * v.ap + 2 * v.bp + v.gp]))]),
                _h(f=lambda v: v.a * v.bp - v.b * v.ap, mult=1,
                   actions=[
                       ("child", "1b",
                        [("beta", lambda v: v.a * v.bp / v.ap)]),
                       ("red", "1c",
                        [("alpha", lambda v: 0), ("alphap", lambda v: 0)],
                        ("F3a",
                         lambda v: {"beta": v.b, "betap": v.bp,
                                    "gammap": v.gp},
                         lambda v: [v.bp, v.bp + v.gp, 2 * v.bp + v.gp]))]),
            ],
        ),
        ("0", "0", "1b"): _h(
            atoms=lambda v: [v.ap + v.bp + v.gp, v.a + v.g],
            disj=[(lambda v: v.a, lambda v: v.ap + v.bp)],
            own_c=lambda v: v.a + (v.ap + v.bp) * v.x,
            c_zero=_h(solve=[("alpha", lambda v: 0),
                             ("betap", lambda v: -v.ap)],
                      action=("discard", "F6", None)),
            rfactor=lambda v: v.ap + v.bp + v.gp,
            rem_doc=lambda v: v.a * v.bp
            * (v.a * v.gp - v.g * v.ap - v.g * v.bp) / (v.ap + v.bp),
            deg0=_h(token="0", solve=[("betap", lambda v: -v.ap)],
                    lead_factors=[("solve", lambda v: v.ap + v.bp),
                                  ("atom", lambda v: v.ap + v.bp + v.gp)],
                    const_atoms=[lambda v: v.a, lambda v: v.gp]),
            factors=[
                _h(f=lambda v: v.a, mult=1,
                   actions=[("child", "1a", [("alpha", lambda v: 0)])]),
                _h(f=lambda v: v.bp, mult=1,
                   actions=[("red", "1b", [("betap", lambda v: 0)],
                             ("F5",
                              lambda v: {"alpha": v.a, "gamma": v.g,
                                         "alphap": v.ap, "gammap": v.gp},
                              lambda v: [v.ap + v.gp, v.a + v.g, v.ap]))]),
                _h(f=lambda v: v.a * v.gp - v.g * v.ap - v.g * v.bp, mult=1,
                   actions=[("red", "1c",
                             [("gamma",
                               lambda v: v.a * v.gp / (v.ap + v.bp))],
                             ("F6",
                              lambda v: {"alphap": v.ap, "betap": v.bp,
                                         "gammap": v.gp,
                                         "kappa": v.a * inv(v.ap + v.bp)},
                              lambda v: [v.ap + v.bp, v.ap + v.bp + v.gp,
                                         2 * v.ap + 2 * v.bp + v.gp, v.a]))]),
            ],
        ),
        # -------------------------------------------------------------- c4
        ("0", "0", "0", "1a"): _h(
            atoms=lambda v: [v.g, v.ap],
            disj=[(lambda v: v.b + v.g, lambda v: v.ap + v.bp)],
            own_c=lambda v: (v.b + v.g) + (v.ap + v.bp) * v.x,
            c_zero=_h(solve=[("gamma", lambda v: -v.b),
                             ("betap", lambda v: -v.ap)],
                      action=("discard", "F1b", None)),
            rfactor=lambda v: 1,
            rem_doc=lambda v: -(v.b + v.g) * (v.b * v.ap - v.g * v.bp)
            / (v.ap + v.bp),
            Q_doc=lambda v: (3 * v.b * v.ap + v.b * v.bp + 2 * v.g * v.ap)
            * v.x + (v.ap + v.bp) * (2 * v.ap + v.bp) * v.x ** 2,
            deg0=_h(token="0", solve=[("betap", lambda v: -v.ap)],
                    lead_factors=[("solve", lambda v: v.ap + v.bp)],
                    const_atoms=[lambda v: v.b + v.g],
                    red=("F1b",
                         lambda v: {"beta": v.b, "gamma": v.g, "alphap": v.ap},
                         lambda v: [v.b + v.g, v.g, v.ap])),
            factors=[
                _h(f=lambda v: v.b + v.g, mult=1,
                   actions=[("child", "1a", [("gamma", lambda v: -v.b)])]),
                _h(f=lambda v: v.b * v.ap - v.g * v.bp, mult=1,
                   actions=[("child", "1b",
                             [("betap", lambda v: v.b * v.ap / v.g)])]),
            ],
        ),
        ("0", "0", "0", "1b"): _h(
            atoms=lambda v: [v.ap, v.a + v.g],
            disj=[(lambda v: 2 * v.a + v.g, lambda v: v.ap + v.bp)],
            own_c=lambda v: (2 * v.a + v.g) + (v.ap + v.bp) * v.x,
            c_zero=_h(solve=[("gamma", lambda v: -2 * v.a),
                             ("betap", lambda v: -v.ap)],
                      action=("discard", "F3b", None)),
            rfactor=lambda v: v.ap,
            rem_doc=lambda v: v.bp * (2 * v.a + v.g)
            * (v.a * v.ap - v.a * v.bp + v.g * v.ap) / (v.ap + v.bp),
            deg0=_h(token="0", solve=[("betap", lambda v: -v.ap)],
                    lead_factors=[("solve", lambda v: v.ap + v.bp),
                                  ("atom", lambda v: v.ap)],
                    const_atoms=[lambda v: 2 * v.a + v.g],
                    red=("F3b",
                         lambda v: {"alpha": v.a, "gamma": v.g,
                                    "alphap": v.ap},
                         lambda v: [v.ap, v.a + v.g, 2 * v.a + v.g])),
            factors=[
                _h(f=lambda v: v.bp, mult=1,
                   actions=[("discard", [("betap", lambda v: 0)], "F5")]),
                _h(f=lambda v: 2 * v.a + v.g, mult=1,
                   actions=[("child", "1a",
                             [("gamma", lambda v: -2 * v.a)])]),
                _h(f=lambda v: v.a * v.ap - v.a * v.bp + v.g * v.ap, mult=1,
                   actions=[("child", "1b",
                             [("gamma",
                               lambda v: -v.a * (v.ap - v.bp) / v.ap)])]),
            ],
        ),
        ("0", "0", "1a", "0"): _h(
            atoms=lambda v: [v.gp, v.a + v.b],
            disj=[(lambda v: v.a, lambda v: v.ap + v.gp)],
            own_c=lambda v: v.a + (v.ap + v.gp) * v.x,
            c_zero=_h(solve=[("alpha", lambda v: 0),
                             ("gammap", lambda v: -v.ap)],
                      action=("discard", "F1a", None)),
            rfactor=lambda v: 1,
            rem_doc=lambda v: -v.a * (v.a * v.ap + v.b * v.ap + v.b * v.gp)
            / (v.ap + v.gp),
            Q_doc=lambda v: v.a * (2 * v.a + v.b)
            + (3 * v.a * v.ap + 2 * v.b * v.ap + 2 * v.a * v.gp
               + 2 * v.b * v.gp) * v.x,
            deg0=_h(token="0", solve=[("gammap", lambda v: -v.ap)],
                    lead_factors=[("solve", lambda v: v.ap + v.gp)],
                    const_atoms=[lambda v: v.a]),
            factors=[
                _h(f=lambda v: v.a, mult=1,
                   actions=[("red", "1a", [("alpha", lambda v: 0)],
                             ("F1a",
                              lambda v: {"beta": v.b, "alphap": v.ap,
                                         "gammap": v.gp},
                              lambda v: [v.ap + v.gp, v.b, v.gp]))]),
                _h(f=lambda v: v.a * v.ap + v.b * v.ap + v.b * v.gp, mult=1,
                   actions=[("child", "1b",
                             [("beta",
                               lambda v: -v.a * v.ap / (v.ap + v.gp))])]),
            ],
        ),
        ("0", "0", "1a", "1b"): _h(
            atoms=lambda v: [v.ap, v.ap + v.bp, v.ap + v.bp + v.gp],
            disj=[(lambda v: v.a, lambda v: 2 * v.ap + 2 * v.bp + v.gp)],
            own_c=lambda v: v.a + (2 * v.ap + 2 * v.bp + v.gp) * v.x,
            c_zero=_h(solve=[("alpha", lambda v: 0),
                             ("gammap", lambda v: -2 * v.ap - 2 * v.bp)],
                      action=("discard", "F2a", None)),
            rfactor=lambda v: v.ap,
            rem_doc=lambda v: -v.a ** 2 * v.bp * (v.ap + 2 * v.bp + v.gp)
            / (2 * v.ap + 2 * v.bp + v.gp),
            deg0=_h(token="0",
                    solve=[("gammap", lambda v: -2 * v.ap - 2 * v.bp)],
                    lead_factors=[("solve",
                                   lambda v: 2 * v.ap + 2 * v.bp + v.gp),
                                  ("atom", lambda v: v.ap)],
                    const_atoms=[lambda v: v.a]),
            factors=[
                _h(f=lambda v: v.a, mult=2,
                   actions=[("discard", [("alpha", lambda v: 0)], "F2a")]),
                _h(f=lambda v: v.bp, mult=1,
                   actions=[("discard", [("betap", lambda v: 0)], "F5")]),
                _h(f=lambda v: v.ap + 2 * v.bp + v.gp, mult=1,
                   actions=[("child", "1a",
                             [("gammap", lambda v: -v.ap - 2 * v.bp)])]),
            ],
        ),
        ("0", "0", "1b", "0"): _h(
            atoms=lambda v: [v.a, v.gp, v.a + v.g],
            disj=[(lambda v: 2 * v.a + v.g, lambda v: v.ap + v.gp)],
            own_c=lambda v: (2 * v.a + v.g) + (v.ap + v.gp) * v.x,
            c_zero=_h(solve=[("gamma", lambda v: -2 * v.a),
                             ("gammap", lambda v: -v.ap)],
                      action=("discard", "F4b", None)),
            rfactor=lambda v: v.gp,
            rem_doc=lambda v: v.ap * (2 * v.a + v.g)
            * (v.a * v.ap + v.g * v.ap - v.a * v.gp) / (v.ap + v.gp),
            deg0=_h(token="0", solve=[("gammap", lambda v: -v.ap)],
                    lead_factors=[("solve", lambda v: v.ap + v.gp),
                                  ("atom", lambda v: v.gp)],
                    const_atoms=[lambda v: 2 * v.a + v.g]),
            factors=[
                _h(f=lambda v: v.ap, mult=1,
                   actions=[("discard", [("alphap", lambda v: 0)], "F5")]),
                _h(f=lambda v: 2 * v.a + v.g, mult=1,
                   actions=[("child", "1a",
                             [("gamma", lambda v: -2 * v.a)])]),
                _h(f=lambda v: v.a * v.ap + v.g * v.ap - v.a * v.gp, mult=1,
                   actions=[("red", "1b",
                             [("alphap",
                               lambda v: v.a * v.gp / (v.a + v.g))],
                             ("F4b",
                              lambda v: {"alpha": v.a, "gamma": v.g,
                                         "kappa": v.gp * inv(v.a + v.g)},
                              lambda v: [v.a + v.g, 2 * v.a + v.g, v.a,
                                         v.gp]))]),
            ],
        ),
        ("0", "0", "1b", "1a"): _h(
            atoms=lambda v: [v.ap + v.bp, v.ap + v.bp + v.gp, v.g],
            disj=[(lambda v: v.g * (v.ap + 2 * v.bp + v.gp),
                   lambda v: 2 * v.ap + 2 * v.bp + v.gp)],
            own_c=lambda v: ratfunc(v.g * (v.ap + 2 * v.bp + v.gp),
                                    v.ap + v.bp + v.gp)
            + (2 * v.ap + 2 * v.bp + v.gp) * v.x,
            c_zero=_h(solve=[("alphap", lambda v: 0),
                             ("gammap", lambda v: -2 * v.bp)],
                      action=("discard", "F4a", None)),
            rfactor=lambda v: v.ap + v.bp + v.gp,
            R_doc=lambda v: v.g * (v.ap + 2 * v.bp + v.gp)
            + (v.ap + v.bp + v.gp) * (2 * v.ap + 2 * v.bp + v.gp) * v.x,
            rem_doc=lambda v: -v.ap * v.bp * v.g ** 2
            * (v.ap + 2 * v.bp + v.gp)
            / ((v.ap + v.bp + v.gp) * (2 * v.ap + 2 * v.bp + v.gp)),
            deg0=_h(token="0",
                    solve=[("gammap", lambda v: -2 * v.ap - 2 * v.bp)],
                    lead_factors=[("solve",
                                   lambda v: 2 * v.ap + 2 * v.bp + v.gp),
                                  ("atom", lambda v: v.ap + v.bp + v.gp)],
                    const_atoms=[lambda v: v.ap, lambda v: v.g]),
            factors=[
                _h(f=lambda v: v.g, mult=2, actions=[("atom",)]),
                _h(f=lambda v: v.bp, mult=1,
                   actions=[("discard", [("betap", lambda v: 0)], "F5")]),
                _h(f=lambda v: v.ap, mult=1,
                   actions=[("red", "1a", [("alphap", lambda v: 0)],
                             ("F4a",
                              lambda v: {"betap": v.bp, "gammap": v.gp,
                                         "kappa": v.g * inv(v.bp + v.gp)},
                              lambda v: [v.bp + v.gp, 2 * v.bp + v.gp, v.g,
                                         v.bp]))]),
                _h(f=lambda v: v.ap + 2 * v.bp + v.gp, mult=1,
                   actions=[("child", "1b",
                             [("gammap", lambda v: -v.ap - 2 * v.bp)])]),
            ],
        ),
        # -------------------------------------------------------------- c5
        ("0", "0", "0", "1a", "1a"): _h(
            atoms=lambda v: [v.ap + v.bp, v.b, v.ap],
            own_c=lambda v: v.b + (2 * v.ap + v.bp) * v.x,
            c_zero=None,
            rfactor=lambda v: 1,
            rem_doc=lambda v: -2 * v.b ** 2 * v.ap / (2 * v.ap + v.bp),
            Q_doc=lambda v: 2 * v.b * (2 * v.ap + v.bp) * v.x
            + 2 * (v.ap + v.bp) * (2 * v.ap + v.bp) * v.x ** 2,
            deg0=_h(token="0", solve=[("betap", lambda v: -2 * v.ap)],
                    lead_factors=[("solve", lambda v: 2 * v.ap + v.bp)],
                    const_atoms=[lambda v: v.b],
                    terminating=("s4a",
                                 lambda v: {"beta": v.b, "alphap": v.ap})),
            factors=[
                _h(f=lambda v: v.b, mult=2, actions=[("atom",)]),
                _h(f=lambda v: v.ap, mult=1, actions=[("atom",)]),
            ],
        ),
        ("0", "0", "0", "1a", "1b"): _h(
            atoms=lambda v: [v.g, v.ap, v.b + v.g, v.b + 2 * v.g],
            own_c=lambda v: ratfunc(v.ap * (v.b + 2 * v.g), v.g) * v.x,
            c_zero=_h(solve=[("beta", lambda v: -2 * v.g)],
                      action=("terminating", "s1a",
                              lambda v: {"gamma": v.g, "alphap": v.ap})),
            passthrough=("0", lambda v: [], []),
        ),
        ("0", "0", "0", "1b", "1a"): _h(
            atoms=lambda v: [v.ap + v.bp, v.a, v.ap, 2 * v.ap + v.bp],
            own_c=lambda v: ratfunc(2 * v.ap + v.bp, v.ap)
            * (v.a + v.ap * v.x),
            c_zero=_h(solve=[("betap", lambda v: -2 * v.ap)],
                      action=("terminating", "s3a",
                              lambda v: {"alpha": v.a, "alphap": v.ap})),
            passthrough=("0", lambda v: [], []),
        ),
        ("0", "0", "0", "1b", "1b"): _h(
            atoms=lambda v: [v.ap + v.bp, v.a, v.ap, v.bp],
            own_c=lambda v: 2 * v.a + (2 * v.ap + v.bp) * v.x,
            c_zero=None,
            rfactor=lambda v: v.ap,
            rem_doc=lambda v: -2 * v.a ** 2 * v.bp ** 2 / (2 * v.ap + v.bp),
            deg0=_h(token="0", solve=[("betap", lambda v: -2 * v.ap)],
                    lead_factors=[("solve", lambda v: 2 * v.ap + v.bp),
                                  ("atom", lambda v: v.ap)],
                    const_atoms=[lambda v: v.a],
                    terminating=("s5a",
                                 lambda v: {"alpha": v.a, "alphap": v.ap})),
            factors=[
                _h(f=lambda v: v.a, mult=2, actions=[("atom",)]),
                _h(f=lambda v: v.bp, mult=2, actions=[("atom",)]),
            ],
        ),
        ("0", "0", "1a", "0", "0"): _h(
            atoms=lambda v: [v.a + v.b, v.a, v.ap],
            own_c=lambda v: (2 * v.a + v.b) + v.ap * v.x,
            c_zero=None,
            rfactor=lambda v: 1,
            rem_doc=lambda v: -2 * (v.a + v.b) * (2 * v.a + v.b),
            deg0=_h(impossible=[("atom", lambda v: v.ap)]),
            factors=[
                _h(f=lambda v: v.a + v.b, mult=1, actions=[("atom",)]),
                _h(f=lambda v: 2 * v.a + v.b, mult=1,
                   actions=[("terminating", "1a",
                             [("beta", lambda v: -2 * v.a)],
                             ("s4b",
                              lambda v: {"alpha": v.a, "alphap": v.ap}))]),
            ],
        ),
        ("0", "0", "1a", "0", "1b"): _h(
            atoms=lambda v: [v.ap + v.gp, v.a, v.gp, v.ap + 2 * v.gp],
            own_c=lambda v: ratfunc(v.a * (v.ap + 2 * v.gp), v.ap + v.gp),
            c_zero=_h(solve=[("alphap", lambda v: -2 * v.gp)],
                      action=("terminating", "s1b",
                              lambda v: {"alpha": v.a, "gammap": v.gp})),
            passthrough=("0", lambda v: [], []),
        ),
        ("0", "0", "1a", "1b", "0"): _h(
            atoms=lambda v: [v.ap + v.bp, v.a, v.ap, 2 * v.ap + v.bp],
            own_c=lambda v: ratfunc(2 * v.ap + v.bp, v.ap)
            * (v.a + v.ap * v.x),
            c_zero=_h(solve=[("betap", lambda v: -2 * v.ap)],
                      action=("terminating", "s3b",
                              lambda v: {"alpha": v.a, "alphap": v.ap})),
            passthrough=("0", lambda v: [], []),
        ),
        ("0", "0", "1a", "1b", "1a"): _h(
            atoms=lambda v: [v.ap + v.bp, v.ap, v.bp],
            own_c=lambda v: ratfunc(v.a * (2 * v.ap + v.bp), v.ap)
            + 2 * (v.ap + v.bp) * v.x,
            c_zero=None,
            rfactor=lambda v: v.ap,
            rem_doc=lambda v: -v.a ** 2 * v.bp ** 2 * (2 * v.ap + v.bp)
            / (2 * v.ap * (v.ap + v.bp)),
            deg0=_h(impossible=[("atom", lambda v: v.ap),
                                ("atom", lambda v: v.ap + v.bp)]),
            factors=[
                _h(f=lambda v: v.a, mult=2,
                   actions=[("discard", [("alpha", lambda v: 0)], "F2a")]),
                _h(f=lambda v: v.bp, mult=2, actions=[("atom",)]),
                _h(f=lambda v: 2 * v.ap + v.bp, mult=1,
                   actions=[("terminating", "1a",
                             [("betap", lambda v: -2 * v.ap)],
                             ("s5b",
                              lambda v: {"alpha": v.a, "alphap": v.ap}))]),
            ],
        ),
        ("0", "0", "1b", "0", "0"): _h(
            atoms=lambda v: [v.a + v.g, 2 * v.a + v.g, v.a, v.ap],
            own_c=lambda v: 2 * v.a + v.ap * v.x,
            c_zero=None,
            rfactor=lambda v: 1,
            rem_doc=lambda v: -2 * v.a * (3 * v.a + v.g),
            deg0=_h(impossible=[("atom", lambda v: v.ap)]),
            factors=[
                _h(f=lambda v: v.a, mult=1, actions=[("atom",)]),
                _h(f=lambda v: 3 * v.a + v.g, mult=1,
                   actions=[("terminating", "1a",
                             [("gamma", lambda v: -3 * v.a)],
                             ("s6a",
                              lambda v: {"alpha": v.a, "alphap": v.ap}))]),
            ],
        ),
        ("0", "0", "1b", "0", "1a"): _h(
            atoms=lambda v: [v.ap + v.gp, v.a, v.gp, v.ap + 2 * v.gp],
            own_c=lambda v: ratfunc(v.a * (v.ap + 2 * v.gp), v.gp),
            c_zero=_h(solve=[("alphap", lambda v: -2 * v.gp)],
                      action=("terminating", "s2b",
                              lambda v: {"alpha": v.a, "gammap": v.gp})),
            passthrough=("0", lambda v: [], []),
        ),
        ("0", "0", "1b", "1a", "0"): _h(
            atoms=lambda v: [v.g, v.ap, v.ap + v.bp, 2 * v.ap + v.bp],
            own_c=lambda v: (2 * v.ap + v.bp) * v.x,
            c_zero=_h(solve=[("betap", lambda v: -2 * v.ap)],
                      action=("terminating", "s2a",
                              lambda v: {"gamma": v.g, "alphap": v.ap})),
            passthrough=("0", lambda v: [], []),
        ),
        ("0", "0", "1b", "1a", "1b"): _h(
            atoms=lambda v: [v.ap + v.bp, v.g, v.ap, v.bp],
            own_c=lambda v: -v.g + 2 * (v.ap + v.bp) * v.x,
            c_zero=None,
            rfactor=lambda v: 1,
            rem_doc=lambda v: -v.g ** 2 * (2 * v.ap + v.bp)
            / (2 * (v.ap + v.bp)),
            deg0=_h(impossible=[("atom", lambda v: v.ap + v.bp)]),
            factors=[
                _h(f=lambda v: v.g, mult=2, actions=[("atom",)]),
                _h(f=lambda v: 2 * v.ap + v.bp, mult=1,
                   actions=[("terminating", "1a",
                             [("betap", lambda v: -2 * v.ap)],
                             ("s6b",
                              lambda v: {"beta": -v.g, "alphap": v.ap}))]),
            ],
        ),
        # -------------------------------------------------------------- c6
        ("0", "0", "0", "1a", "1b", "0"): _h(
            atoms=lambda v: [v.g, v.ap, v.b + v.g, v.b + 2 * v.g],
            own_c=lambda v: (2 * v.b + v.g)
            + ratfunc(2 * (v.b + v.g) * v.ap, v.g) * v.x,
            c_zero=None,
            rfactor=lambda v: v.g ** 2,
            rem_doc=lambda v: -v.b * v.g ** 3 * (2 * v.b + v.g)
            / (2 * (v.b + v.g)),
            deg0=_h(impossible=[("atom", lambda v: v.g),
                                ("atom", lambda v: v.ap),
                                ("atom", lambda v: v.b + v.g)]),
            factors=[
                _h(f=lambda v: v.g, mult=3, actions=[("atom",)]),
                _h(f=lambda v: v.b, mult=1,
                   actions=[("discard", [("beta", lambda v: 0)], "F5")]),
                _h(f=lambda v: 2 * v.b + v.g, mult=1,
                   actions=[("child", "1a",
                             [("gamma", lambda v: -2 * v.b)])]),
            ],
        ),
        ("0", "0", "0", "1b", "1a", "0"): _h(
            atoms=lambda v: [v.ap + v.bp, 2 * v.ap + v.bp, v.a, v.ap],
            own_c=lambda v: v.a + 2 * (v.ap + v.bp) * v.x,
            c_zero=None,
            rfactor=lambda v: v.ap,
            rem_doc=lambda v: -v.a ** 2 * v.bp * (v.ap + 2 * v.bp)
            / (2 * (v.ap + v.bp)),
            deg0=_h(impossible=[("atom", lambda v: v.ap),
                                ("atom", lambda v: v.ap + v.bp)]),
            factors=[
                _h(f=lambda v: v.a, mult=2, actions=[("atom",)]),
                _h(f=lambda v: v.bp, mult=1,
                   actions=[("discard", [("betap", lambda v: 0)], "F5")]),
                _h(f=lambda v: v.ap + 2 * v.bp, mult=1,
                   actions=[("child", "1a",
                             [("alphap", lambda v: -2 * v.bp)])]),
            ],
        ),
        ("0", "0", "1a", "0", "1b", "0"): _h(
            atoms=lambda v: [v.a, v.gp, v.ap + v.gp, v.ap + 2 * v.gp],
            own_c=lambda v: 2 * v.a + (2 * v.ap + v.gp) * v.x,
            c_zero=None,
            rfactor=lambda v: v.ap + v.gp,
            rem_doc=lambda v: -2 * v.a ** 2 * v.ap * v.gp / (2 * v.ap + v.gp),
            deg0=_h(token="0", solve=[("gammap", lambda v: -2 * v.ap)],
                    lead_factors=[("solve", lambda v: 2 * v.ap + v.gp),
                                  ("atom", lambda v: v.ap + v.gp)],
                    const_atoms=[lambda v: v.a]),
            factors=[
                _h(f=lambda v: v.a, mult=2, actions=[("atom",)]),
                _h(f=lambda v: v.ap, mult=1,
                   actions=[("discard", [("alphap", lambda v: 0)], "F5")]),
                _h(f=lambda v: v.gp, mult=1, actions=[("atom",)]),
            ],
        ),
        ("0", "0", "1a", "1b", "0", "0"): _h(
            atoms=lambda v: [v.ap + v.bp, 2 * v.ap + v.bp, v.a, v.ap],
            own_c=lambda v: 2 * v.a + (v.ap + v.bp) * v.x,
            c_zero=None,
            rfactor=lambda v: v.ap,
            rem_doc=lambda v: 2 * v.a ** 2 * v.bp * (v.ap - v.bp)
            / (v.ap + v.bp),
            deg0=_h(impossible=[("atom", lambda v: v.ap),
                                ("atom", lambda v: v.ap + v.bp)]),
            factors=[
                _h(f=lambda v: v.a, mult=2, actions=[("atom",)]),
                _h(f=lambda v: v.bp, mult=1,
                   actions=[("discard", [("betap", lambda v: 0)], "F5")]),
                _h(f=lambda v: v.ap - v.bp, mult=1,
                   actions=[("child", "1a", [("betap", lambda v: v.ap)])]),
            ],
        ),
        ("0", "0", "1b", "0", "1a", "0"): _h(
            atoms=lambda v: [v.a, v.gp, v.ap + v.gp, v.ap + 2 * v.gp],
            own_c=lambda v: v.a + (2 * v.ap + v.gp) * v.x,
            c_zero=None,
            rfactor=lambda v: v.gp,
            rem_doc=lambda v: -2 * v.a ** 2 * v.ap * (v.ap + v.gp)
            / (2 * v.ap + v.gp),
            deg0=_h(token="0", solve=[("gammap", lambda v: -2 * v.ap)],
                    lead_factors=[("solve", lambda v: 2 * v.ap + v.gp),
                                  ("atom", lambda v: v.gp)],
                    const_atoms=[lambda v: v.a]),
            factors=[
                _h(f=lambda v: v.a, mult=2, actions=[("atom",)]),
                _h(f=lambda v: v.ap, mult=1,
                   actions=[("discard", [("alphap", lambda v: 0)], "F5")]),
                _h(f=lambda v: v.ap + v.gp, mult=1, actions=[("atom",)]),
            ],
        ),
        ("0", "0", "1b", "1a", "0", "0"): _h(
            atoms=lambda v: [v.g, v.ap, v.ap + v.bp, 2 * v.ap + v.bp],
            own_c=lambda v: ratfunc(v.g * (v.ap - v.bp), v.ap + v.bp)
            + (v.ap + v.bp) * v.x,
            c_zero=None,
            rfactor=lambda v: v.ap + v.bp,
            rem_doc=lambda v: 2 * v.g ** 2 * v.ap * v.bp * (v.ap - v.bp)
            / (v.ap + v.bp) ** 2,
            deg0=_h(impossible=[("atom", lambda v: v.ap + v.bp)]),
            factors=[
                _h(f=lambda v: v.g, mult=2, actions=[("atom",)]),
                _h(f=lambda v: v.ap, mult=1, actions=[("atom",)]),
                _h(f=lambda v: v.bp, mult=1,
                   actions=[("discard", [("betap", lambda v: 0)], "F5")]),
                _h(f=lambda v: v.ap - v.bp, mult=1,
                   actions=[("child", "1a", [("betap", lambda v: v.ap)])]),
            ],
        ),
        # -------------------------------------------------------------- c7
        ("0", "0", "0", "1a", "1b", "0", "1a"): _h(
            atoms=lambda v: [v.b, v.ap],
            own_c=lambda v: v.b + 2 * v.ap * v.x,
            doc_own_c=lambda v: v.b + 2 * v.ap * v.x,
            c_zero=None,
            rfactor=lambda v: 1,
            rem_doc=lambda v: Fraction(-5, 4) * v.b ** 2,
            deg0=_h(impossible=[("atom", lambda v: v.ap)]),
            factors=[_h(f=lambda v: v.b, mult=2, actions=[("atom",)])],
        ),
        ("0", "0", "0", "1b", "1a", "0", "1a"): _h(
            atoms=lambda v: [v.a, v.bp],
            own_c=lambda v: Fraction(5, 2) * v.a - 4 * v.bp * v.x,
            c_zero=None,
            rfactor=lambda v: -1,
            rem_doc=lambda v: Fraction(5, 16) * v.a ** 2,
            deg0=_h(impossible=[("atom", lambda v: v.bp)]),
            factors=[_h(f=lambda v: v.a, mult=2, actions=[("atom",)])],
        ),
        ("0", "0", "1a", "0", "1b", "0", "0"): _h(
            atoms=lambda v: [v.a, v.ap],
            own_c=lambda v: 4 * v.a + v.ap * v.x,
            c_zero=None,
            rfactor=lambda v: 1,
            rem_doc=lambda v: -20 * v.a ** 2,
            deg0=_h(impossible=[("atom", lambda v: v.ap)]),
            factors=[_h(f=lambda v: v.a, mult=2, actions=[("atom",)])],
        ),
        ("0", "0", "1a", "1b", "0", "0", "1a"): _h(
            atoms=lambda v: [v.a, v.ap],
            own_c=lambda v: 4 * v.a + 5 * v.ap * v.x,
            c_zero=None,
            rfactor=lambda v: 1,
            rem_doc=lambda v: Fraction(-4, 5) * v.a ** 2,
            deg0=_h(impossible=[("atom", lambda v: v.ap)]),
            factors=[_h(f=lambda v: v.a, mult=2, actions=[("atom",)])],
        ),
        ("0", "0", "1b", "0", "1a", "0", "0"): _h(
            atoms=lambda v: [v.a, v.ap],
            own_c=lambda v: Fraction(5, 2) * v.a + v.ap * v.x,
            c_zero=None,
            rfactor=lambda v: -1,
            rem_doc=lambda v: 5 * v.a ** 2,
            deg0=_h(impossible=[("atom", lambda v: v.ap)]),
            factors=[_h(f=lambda v: v.a, mult=2, actions=[("atom",)])],
        ),
        ("0", "0", "1b", "1a", "0", "0", "1a"): _h(
            atoms=lambda v: [v.g, v.ap],
            own_c=lambda v: -v.g * half + 5 * v.ap * v.x,
            c_zero=None,
            rfactor=lambda v: 1,
            rem_doc=lambda v: Fraction(-1, 5) * v.g ** 2,
            deg0=_h(impossible=[("atom", lambda v: v.ap)]),
            factors=[_h(f=lambda v: v.g, mult=2, actions=[("atom",)])],
        ),
    }
