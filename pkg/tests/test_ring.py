from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import V0, G, evaluate, poch, qbinom
from tetra3d.ring import (I, KAPPA, ONE, ZERO, GaussianRational, LaurentPoly, Scalar,
                          TruncatedSeries, qbinomial, qbracket, qfactorial, qnum, qpoch,
                          qpoch_infinite_series, qpoch_q, scalar_arith, series_arith)

small = st.integers(-3, 3)
laurent = st.dictionaries(st.integers(-4, 4), st.tuples(small, small), max_size=4).map(
    lambda d: Scalar.from_v_terms({e: complex(re, im) for e, (re, im) in d.items()}))
nonzero = laurent.filter(bool)
scalars = st.builds(lambda a, b: a / b, laurent, nonzero)


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a + ZERO == a and a * ONE == a


@given(nonzero.map(lambda x: x * x + ONE).filter(bool), scalars)
def test_division_inverts_multiplication(b, a):
    assert (a * b) / b == a
    assert b * b.inverse() == ONE


@given(scalars, scalars)
def test_canonical_form_makes_equality_structural(a, b):
    x = (a * b) / b if b else a
    assert x == a
    assert hash(x) == hash(a)
    assert a.normalize() == a


@given(scalars, scalars)
def test_arithmetic_agrees_with_exact_point_evaluation(a, b):
    ea, eb = evaluate(a), evaluate(b)
    assert evaluate(a + b) == ea + eb
    assert evaluate(a * b) == ea * eb
    if b and eb != G(0):
        assert evaluate(a / b) == ea / eb


@given(scalars)
def test_json_round_trip(a):
    assert Scalar.from_json(a.to_json()) == a


def test_v_squared_is_q():
    assert Scalar.vpow(1) * Scalar.vpow(1) == Scalar.qpow(1)
    assert Scalar.qpow(3) * Scalar.qpow(-3) == ONE


def test_imaginary_unit():
    assert I * I == -ONE
    assert I.conj() == -I
    assert not I.is_real()


def test_kappa():
    q = Scalar.qpow(1)
    assert KAPPA * (q - 1) == q + 1
    assert evaluate(KAPPA) == G(Fraction(1 + 9, 1 - 9))


def test_canonical_denominator_is_real():
    a = ONE / (ONE + I * Scalar.qpow(1))
    assert a.denom.is_real()
    assert a * (ONE + I * Scalar.qpow(1)) == ONE


def test_float_evaluation_is_a_debugging_aid_only():
    a = (Scalar.qpow(1) + I) / (ONE - Scalar.qpow(2))
    exact = evaluate(a)
    approx = a.evaluate(float(V0))
    assert abs(approx - complex(float(exact.re), float(exact.im))) < 1e-12


def test_v_expansion():
    geo = ONE / (ONE - Scalar.vpow(1))
    assert geo.v_expansion(5) == {k: GaussianRational(1) for k in range(5)}


def test_gaussian_rational_basics():
    g = GaussianRational(Fraction(1, 2), 3)
    assert g * g.inverse() == GaussianRational(1)
    assert g.conj() == GaussianRational(Fraction(1, 2), -3)
    assert g.norm() == Fraction(37, 4)
    with pytest.raises(ZeroDivisionError):
        GaussianRational(0).inverse()


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_laurent_terms_round_trip():
    p = LaurentPoly.from_terms({-2: 1, 3: complex(0, 2)})
    assert set(p.terms()) == {-2, 3}
    assert Scalar.coerce(p) == Scalar.vpow(-2) + 2 * I * Scalar.vpow(3)


# -- q-symbols -----------------------------------------------------------------------


@given(st.integers(0, 8))
def test_qnum_is_symmetric(m):
    p = Scalar.vpow(2)
    if m:
        assert qnum(m) * (p - p.inverse()) == p ** m - p ** (-m)
    assert qnum(-m) == -qnum(m)


@given(st.integers(1, 8), st.integers(0, 8))
def test_symmetric_binomial_pascal(m, k):
    q = Scalar.qpow
    assert qbracket(m, k) == q(k) * qbracket(m - 1, k) + q(k - m) * qbracket(m - 1, k - 1)
    assert qbracket(m, k) == q(-k) * qbracket(m - 1, k) + q(m - k) * qbracket(m - 1, k - 1)


@given(st.integers(0, 8), st.integers(0, 8))
def test_pochhammer_binomial_matches_oracle(m, k):
    expected = qbinom(m, k, V0 ** 4)
    assert evaluate(qbinomial(m, k, base=4)) == G(expected)


@given(st.integers(1, 8), st.integers(1, 7))
def test_pochhammer_binomial_pascal(m, k):
    p = Scalar.qpow(1)
    assert qbinomial(m, k) == qbinomial(m - 1, k - 1) + p ** k * qbinomial(m - 1, k)


@given(st.integers(0, 7), st.integers(1, 4))
def test_qpoch_forms_agree(m, base):
    p = Scalar.vpow(base)
    assert qpoch_q(m, base) == qpoch(p, p, m)
    assert evaluate(qpoch_q(m, base)) == G(poch(V0 ** base, V0 ** base, m))


def test_qfactorial_values():
    assert qfactorial(0) == ONE
    assert qfactorial(3) == qnum(1) * qnum(2) * qnum(3)
    with pytest.raises(ValueError):
        qfactorial(-1)


def test_qnum_two_is_q_plus_inverse():
    assert qnum(2) == Scalar.qpow(1) + Scalar.qpow(-1)


# -- truncated series ------------------------------------------------------------------

series = st.lists(laurent, min_size=1, max_size=5).map(lambda cs: TruncatedSeries.from_poly(cs, 5))
units = series.filter(lambda s: bool(s.constant_term()))


@given(series, series, series)
def test_series_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@given(units, series)
def test_series_division(u, a):
    assert (a / u) * u == a
    assert u * u.inverse() == TruncatedSeries.constant(ONE, 5)


@given(series)
def test_series_json_round_trip(a):
    assert TruncatedSeries.from_json(a.to_json()) == a


def test_geometric_series():
    r = Scalar.qpow(2)
    g = TruncatedSeries.geometric(r, 6)
    assert g * TruncatedSeries.from_poly([ONE, -r], 6) == TruncatedSeries.constant(ONE, 6)


def test_truncation_discards_high_terms():
    z = TruncatedSeries.monomial(1, 1, 3)
    assert (z ** 4).is_zero()
    assert z ** 3 == TruncatedSeries.monomial(3, 1, 3)


def test_shift_rejects_negative_exponents():
    with pytest.raises(ValueError):
        TruncatedSeries.constant(ONE, 4).shift(-1)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        TruncatedSeries({(-1,): ONE}, 3)


def test_variable_mismatch():
    a = TruncatedSeries.constant(ONE, 3)
    b = TruncatedSeries.constant(ONE, 3, ("x", "y"))
    with pytest.raises(ValueError):
        a + b


def test_lift_and_substitution():
    s = TruncatedSeries.from_poly([1, 2, 3], 4)
    assert s.substitute_power(2)[(4,)] == Scalar(3)
    lifted = s.lift("xy", 4)
    assert lifted[(1, 1)] == Scalar(2)
    assert lifted[(2, 2)] == Scalar(3)
    assert s.lift("x")[(2, 0)] == Scalar(3)


def test_infinite_pochhammer_matches_finite_product():
    c = Scalar.qpow(1)
    order = 5
    expected = TruncatedSeries.constant(ONE, order)
    # factors with q^k beyond the v-adic precision below do not touch the tested range
    for k in range(12):
        expected = expected * TruncatedSeries.from_poly([ONE, -c * Scalar.qpow(2 * k)], order)
    got = qpoch_infinite_series(c, 1, 2, order)
    for m in range(order + 1):
        diff = got[m] - expected[m]
        assert all(e >= 24 for e in diff.v_expansion(30)), m


@pytest.mark.parametrize("x_exp", [1, 2, 3])
def test_q_binomial_theorem(x_exp):
    # sum_k (x; p)_k / (p; p)_k z^k = (zx; p)_inf / (z; p)_inf
    order, x = 6, Scalar.qpow(x_exp)
    lhs = TruncatedSeries({(k,): qpoch(x, Scalar.qpow(1), k) / qpoch_q(k, 2) for k in range(order + 1)},
                          order)
    rhs = qpoch_infinite_series(x, 1, 1, order) / qpoch_infinite_series(ONE, 1, 1, order)
    assert lhs == rhs


def test_rho_one_one_first_coefficient():
    q = Scalar.qpow(1)
    rho = qpoch_infinite_series(ONE, 1, 1, 4) / qpoch_infinite_series(-q, 1, 1, 4)
    assert rho.constant_term() == ONE
    assert rho[1] == -(ONE + q) / (ONE - q)


def test_named_arithmetic_dispatch():
    a, b = Scalar.qpow(1), Scalar(2)
    assert scalar_arith(a, b, "div") * b == a
    with pytest.raises(ValueError):
        scalar_arith(a, b, "pow")
    s = TruncatedSeries.constant(a, 2)
    assert series_arith(s, s, "sub").is_zero()
