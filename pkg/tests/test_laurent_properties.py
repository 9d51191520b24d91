"""Property tests for the polynomial core: ring axioms, canonical form,
round trips, and the square-root and evaluation contracts."""

from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import given, settings

from conftest import CTX_Q, CTX_QP, CTX_T, nonzero_polys, polys, rationals
from torkit import LaurentPoly, Monomial, exact_sqrt, from_json, parse, to_json


@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(polys())
def test_additive_structure(f):
    zero = LaurentPoly.zero(CTX_QP)
    assert f + zero == f
    assert f - f == zero
    assert -(-f) == f


@given(polys())
def test_multiplicative_identity_and_annihilator(f):
    assert f * LaurentPoly.one(CTX_QP) == f
    assert (f * LaurentPoly.zero(CTX_QP)).is_zero()


@given(polys(max_terms=4), st.integers(0, 4))
def test_pow_matches_repeated_multiplication(f, e):
    expected = LaurentPoly.one(CTX_QP)
    for _ in range(e):
        expected = expected * f
    assert f ** e == expected


@given(st.lists(st.tuples(st.tuples(st.integers(-8, 8), st.integers(-8, 8)), st.integers(-9, 9)), max_size=6))
def test_canonical_form_ignores_construction_order(term_list):
    a = LaurentPoly(CTX_QP, term_list)
    b = LaurentPoly(CTX_QP, list(reversed(term_list)))
    assert a.terms == b.terms
    assert a == b


@given(nonzero_polys(max_terms=4, quarter_bound=6))
@settings(max_examples=200)
def test_sqrt_of_square_is_canonical_positive(f):
    root = exact_sqrt(f * f)
    assert root == f or root == -f
    assert root.leading_monomial().coeff > 0
    assert root * root == f * f


@given(polys())
def test_parse_inverts_canonical_string(f):
    assert parse(f.canonical_string(), CTX_QP) == f


@given(polys(context=CTX_T))
def test_parse_inverts_canonical_string_one_var(f):
    assert parse(f.canonical_string(), CTX_T) == f


@given(polys())
def test_json_round_trip(f):
    text = to_json(f)
    assert from_json(text) == f
    assert to_json(from_json(text)) == text


@given(polys(max_terms=4), polys(max_terms=4), st.integers(-2, 2), st.integers(-2, 2))
def test_substitute_monomial_is_a_ring_map(f, g, a, b):
    target = CTX_T
    assignments = {
        "q": Monomial.from_quarters((4 * a,), 1),
        "p": Monomial.from_quarters((4 * b,), 1),
    }
    sub = lambda h: h.substitute_monomial(target, assignments)
    assert sub(f + g) == sub(f) + sub(g)
    assert sub(f * g) == sub(f) * sub(g)


@given(polys(integral=True, max_terms=4), polys(integral=True, max_terms=4), rationals(), rationals())
def test_eval_is_a_ring_map(f, g, x, y):
    point = {"q": x, "p": y}
    assert (f + g).eval_rational(point) == f.eval_rational(point) + g.eval_rational(point)
    assert (f * g).eval_rational(point) == f.eval_rational(point) * g.eval_rational(point)


@given(nonzero_polys(context=CTX_Q, max_terms=4, quarter_bound=8))
def test_leading_monomial_is_maximal(f):
    lead = f.leading_monomial()
    assert all(lead.quarters >= m.quarters for m in f.monomials())
