"""Shared test helpers: contexts, hypothesis strategies, evaluation oracle."""

from __future__ import annotations

from fractions import Fraction

import hypothesis.strategies as st

from torkit import LaurentPoly, VarContext

CTX_T = VarContext(("t",))
CTX_Q = VarContext(("q",))
CTX_QP = VarContext(("q", "p"))
CTX_AZ = VarContext(("a", "z"))


def polys(
    context: VarContext = CTX_QP,
    max_terms: int = 5,
    integral: bool = False,
    quarter_bound: int = 10,
):
    """Strategy for random sparse Laurent polynomials in the given context."""
    if integral:
        exp = st.integers(-3, 3).map(lambda k: 4 * k)
    else:
        exp = st.integers(-quarter_bound, quarter_bound)
    exps = st.tuples(*([exp] * len(context)))
    coeff = st.integers(-9, 9).filter(lambda c: c != 0)
    return st.lists(st.tuples(exps, coeff), max_size=max_terms).map(
        lambda ts: LaurentPoly(context, ts)
    )


def nonzero_polys(context: VarContext = CTX_QP, **kw):
    return polys(context, **kw).filter(lambda f: not f.is_zero())


def rationals():
    """Nonzero rationals with small numerators and denominators."""
    return st.fractions(
        min_value=Fraction(-9), max_value=Fraction(9), max_denominator=9
    ).filter(lambda v: v != 0)


def cleared_eval(f: LaurentPoly, values: list[Fraction]) -> Fraction:
    """Evaluate f after clearing quarter powers: each variable v becomes the
    fourth power of a fresh variable, which is then set to the given rational.

    This is an oracle path independent of polynomial-level equality: two
    polynomials that disagree anywhere disagree at almost every such point.
    """
    fresh = ("s", "r")[: len(f.context)]
    target = VarContext(fresh)
    mapping = {
        name: f"{new}^4" for name, new in zip(f.context.names, fresh)
    }
    cleared = f.substitute_monomial(target, mapping)
    return cleared.eval_rational(dict(zip(fresh, values)))
