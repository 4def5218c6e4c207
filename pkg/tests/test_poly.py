import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omegapoly import (
    ExponentPoly,
    Monomial,
    OmegaPoly,
    PartitionSpec,
    SpecMismatch,
    VarIndex,
    expoly_shift,
    omega_recurrence,
    poly_add,
    poly_eval,
    poly_from_json,
    poly_mul,
    poly_render,
    poly_substitute_ZT,
)
from reference_values import OMEGA_223_N3_INDEXED, SPEC_223, SPEC_423, OMEGA_223_SMALL, OMEGA_423_FACTORED, parse_poly

SPEC = SPEC_223


def y(i, e=None):
    return OmegaPoly.var(SPEC, 1, i, e)


def z(i, e=None):
    return OmegaPoly.var(SPEC, 2, i, e)


def test_spec_validation():
    assert PartitionSpec(2, (2, 3)).rho == 2
    assert PartitionSpec(2, (2, 3)).lambda_total == 5
    for bad in [(3, 2), (0, 1), ()]:
        with pytest.raises(ValueError):
            PartitionSpec(2, bad)
    with pytest.raises(ValueError):
        PartitionSpec(1, (1,))


def test_expoly_shift():
    p = ExponentPoly.from_dict({0: 1, 1: 1})
    assert expoly_shift(p, 1) == ExponentPoly.from_dict({1: 1, 2: 1})
    assert expoly_shift(ExponentPoly(), 3) == ExponentPoly()
    with pytest.raises(ValueError):
        expoly_shift(p, 0)


def test_substitute_on_small_omegas():
    assert poly_substitute_ZT(OmegaPoly.one(SPEC), 2) == OmegaPoly.one(SPEC)
    t1 = ExponentPoly.from_powers([1])
    assert poly_substitute_ZT(omega_recurrence(1, SPEC), 1) == z(1, t1) + y(1, t1)
    expected = parse_poly(r"z_1^{t_1^2}+z_2^{t_2}+z_1^{t_1}y_1^{s_1}+y_1^{s_1^2}+y_2^{s_2}", SPEC)
    assert poly_substitute_ZT(omega_recurrence(2, SPEC), 1) == expected
    P = omega_recurrence(7, SPEC)
    assert P.substitute_ZT(1).substitute_ZT(1) == P.substitute_ZT(2)


def test_add_and_mul_basics():
    P = omega_recurrence(4, SPEC)
    zero, one = OmegaPoly.zero(SPEC), OmegaPoly.one(SPEC)
    assert poly_add(P, zero) == P
    assert poly_add(P, P * -1) == zero
    assert poly_mul(P, one) == P
    square = (z(1) + y(1)) * (z(1) + y(1))
    two = ExponentPoly.from_dict({0: 2})
    assert square == z(1, two) + y(1) * z(1) * 2 + y(1, two)
    assert not square.is_finished()


def test_spec_mismatch():
    with pytest.raises(SpecMismatch):
        OmegaPoly.one(SPEC) + OmegaPoly.one(PartitionSpec(3, (2, 3)))
    with pytest.raises(SpecMismatch):
        OmegaPoly.one(SPEC) * OmegaPoly.one(PartitionSpec(2, (1,)))


def test_recurrence_expansion_of_omega_5():
    t = lambda n: omega_recurrence(n, SPEC).substitute_ZT(1)
    expansion = (z(1) + y(1)) * t(2) + (z(3) + y(1) * z(2) + y(2) * z(1)) * t(1) + y(2) * z(3)
    assert expansion == parse_poly(OMEGA_223_SMALL[5], SPEC)


def test_base_4_omega_6_as_product():
    spec = SPEC_423
    _, _, left, right = OMEGA_423_FACTORED[6]
    product = poly_mul(parse_poly(left, spec), parse_poly(right, spec))
    assert product == omega_recurrence(6, spec)


def test_eval_counts():
    P4 = omega_recurrence(4, SPEC)
    ones = {idx: 1 for idx in SPEC.var_indices()}
    assert poly_eval(P4, {idx: 3 for idx in SPEC.var_indices()}, ones) == 13
    assert poly_eval(omega_recurrence(5, SPEC), ones, ones) == 17
    assert poly_eval(OmegaPoly.one(SPEC), ones, {idx: 0 for idx in ones}) == 1
    with pytest.raises(ValueError):
        poly_eval(P4, {(1, 1): 1}, ones)


def test_eval_exact_values():
    # y1^(1+s1) at s1 = 3, y1 = 2 is 2**4
    P = y(1, ExponentPoly.from_powers([0, 1]))
    T = {idx: 3 for idx in SPEC.var_indices()}
    Z = {idx: 2 for idx in SPEC.var_indices()}
    assert poly_eval(P, T, Z) == 16
    big = omega_recurrence(9, SPEC)
    T = {idx: 5 for idx in SPEC.var_indices()}
    assert poly_eval(big, T, Z) == sum(
        2 ** sum(e.evaluate(5) for _, e in m.factors) for m in big.monomials()
    )


def test_render_plain_letters():
    assert poly_render(omega_recurrence(1, SPEC)) == "y1 + z1"
    assert poly_render(omega_recurrence(1, SPEC), notation="indexed") == "z[1,1] + z[2,1]"
    assert poly_render(OmegaPoly.one(SPEC)) == "1"
    assert poly_render(OmegaPoly.zero(SPEC)) == "0"
    assert poly_render(y(1) * 2 - z(2)) == "2*y1 - z2"


def test_render_latex_double_index_omega_3():
    text = poly_render(omega_recurrence(3, SPEC), "latex", "indexed")
    assert "z_{2,1}^{1+t_{2,1}}" in text
    assert parse_poly(text, SPEC) == parse_poly(OMEGA_223_N3_INDEXED, SPEC)


def test_render_letters_three_colors():
    spec = PartitionSpec(2, (1, 1, 1))
    text = poly_render(omega_recurrence(3, spec), "latex")
    assert "x_{1}^{1+r_{1}}" in text
    with pytest.raises(ValueError):
        poly_render(OmegaPoly.one(PartitionSpec(2, (1, 1, 1, 1))), "plain", "letters")


def test_json_schema_and_round_trip():
    P = omega_recurrence(3, SPEC)
    text = poly_render(P, "json")
    data = json.loads(text)
    assert list(data) == ["spec", "n", "terms"]
    assert data["spec"] == {"b": 2, "lambdas": [2, 3]}
    assert data["n"] == 3
    assert len(data["terms"]) == 7
    assert set(data["terms"][0]["factors"][0]) == {"color", "mult", "exponent"}
    back = poly_from_json(text)
    assert back == P
    assert poly_render(back, "json") == text


def test_finished_invariants_detect_conflicts():
    # z[2,1] and z[2,2] both at power 0 of the same color
    bad = OmegaPoly(SPEC, {Monomial.from_dict({(2, 1): ExponentPoly.one(), (2, 2): ExponentPoly.one()}): 1})
    assert not bad.is_finished()
    assert omega_recurrence(12, SPEC).is_finished()


def test_canonical_order():
    monos = omega_recurrence(6, SPEC).monomials()
    keys = [[(idx.color, idx.mult, tuple(e)) for idx, e in m.factors] for m in monos]
    assert keys == sorted(keys)


# -- algebraic laws on random small polynomials ------------------------------------

exponents = st.dictionaries(st.integers(0, 3), st.integers(1, 2), min_size=1, max_size=2).map(ExponentPoly.from_dict)
monomials = st.dictionaries(st.sampled_from(SPEC.var_indices()), exponents, max_size=3).map(Monomial.from_dict)
polys = st.dictionaries(monomials, st.integers(-3, 3), max_size=4).map(lambda d: OmegaPoly(SPEC, d))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(P, Q, R):
    assert P + Q == Q + P
    assert (P + Q) + R == P + (Q + R)
    assert P * Q == Q * P
    assert (P * Q) * R == P * (Q * R)
    assert P * (Q + R) == P * Q + P * R
    assert P - P == OmegaPoly.zero(SPEC)


@settings(max_examples=60, deadline=None)
@given(polys, st.integers(1, 3), st.lists(st.integers(1, 3), min_size=5, max_size=5),
       st.lists(st.integers(0, 3), min_size=5, max_size=5))
def test_substitution_matches_evaluation(P, k, ts, zs):
    idxs = SPEC.var_indices()
    T = dict(zip(idxs, ts))
    Z = dict(zip(idxs, zs))
    Z_raised = {idx: Z[idx] ** (T[idx] ** k) for idx in idxs}
    assert poly_eval(poly_substitute_ZT(P, k), T, Z) == poly_eval(P, T, Z_raised)


@settings(max_examples=30, deadline=None)
@given(polys)
def test_json_round_trip_random(P):
    assert poly_from_json(poly_render(P, "json")) == P


def test_var_index_checked():
    with pytest.raises(ValueError):
        OmegaPoly.var(SPEC, 1, 3)
    assert VarIndex(2, 3) in SPEC.var_indices()
