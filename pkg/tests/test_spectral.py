from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tetra3d.fock import VectorState
from tetra3d.qgroup import AlgebraSpec
from tetra3d.reduction import SSpec
from tetra3d.ring import I, ONE, Scalar, TruncatedSeries
from tetra3d.spectral import (apply_pr, check_singular_completeness, check_spectral, closed_forms,
                              eigen_pair, eigenvalue_factors, eigenvalue_product, find_singular,
                              nullspace, same_span, singular_vector, spectral_labels,
                              verify_singular)

PAIR = {"D2": (1, 1), "A2": (1, 2), "C1": (2, 2)}


@pytest.mark.parametrize("family,alg", [("B", "D2"), ("C", "A2"), ("C", "C1")])
@given(l=st.integers(0, 5), eps=st.sampled_from([1, -1]), n=st.integers(2, 3))
def test_closed_forms_are_singular(family, alg, l, eps, n):
    if family == "C" and eps == -1 and l == 0:
        v = singular_vector("C", 0, -1, n)
    elif family == "C" and eps == -1:
        v = singular_vector("C", l, -1, n)
    else:
        v = singular_vector(family, l, 1, n)
    assert verify_singular(AlgebraSpec(alg, n), v).passed


def test_closed_form_examples():
    v = singular_vector("B", 1, 1, 2).state
    assert v == VectorState({((0, 0), (0, 1)): ONE, ((0, 1), (0, 0)): I * Scalar.vpow(1)})
    w = singular_vector("C", 0, -1, 2).state
    assert w == VectorState({((1, 0), (0, 1)): ONE, ((0, 1), (1, 0)): -Scalar.qpow(1)})


def test_wrong_family_is_not_singular():
    v = singular_vector("B", 2, 1, 2)
    assert not verify_singular(AlgebraSpec("C1", 2), v).passed


def test_singular_vector_validation():
    with pytest.raises(ValueError):
        singular_vector("D", 1)
    with pytest.raises(ValueError):
        singular_vector("C", 1, 0)
    with pytest.raises(ValueError):
        singular_vector("C", 0, -1, 1)
    with pytest.raises(ValueError):
        find_singular(AlgebraSpec("A1", 2), (1, 0))
    with pytest.raises(ValueError):
        find_singular(AlgebraSpec("D2", 2), (0, 20))


def test_nullspace_exact():
    basis = nullspace([{"x": ONE, "y": -ONE}], ["x", "y"])
    assert len(basis) == 1
    vec = basis[0]
    assert vec["x"] == vec["y"]
    assert nullspace([{"x": ONE}, {"y": ONE}], ["x", "y"]) == []


def test_same_span():
    a = VectorState.basis(((0,), (1,)))
    b = VectorState.basis(((1,), (0,)))
    assert same_span([a, b], [a + b, a - b])
    assert not same_span([a], [b])


@pytest.mark.parametrize("alg", ["D2", "A2", "C1"])
@pytest.mark.parametrize("n", [2, 3])
def test_singular_completeness(alg, n):
    rep = check_singular_completeness(AlgebraSpec(alg, n), max_weight=3)
    assert rep.passed and rep.cases > 0


def test_sector_search_on_a_mixed_weight():
    spec = AlgebraSpec("C1", 2)
    found = find_singular(spec, (1, 1))
    assert same_span([v.state for v in found], [v.state for v in closed_forms(spec, (1, 1))])
    assert found and all(v.eps == -1 for v in found)


@pytest.mark.parametrize("alg", ["D2", "A2", "C1"])
def test_spectral_eigenvalues(alg):
    sspec = SSpec(*PAIR[alg], 2)
    for l, eps in spectral_labels(alg, 2, 2):
        assert check_spectral(sspec, alg, l, eps, order=5).passed, (l, eps)


def test_v0_minus_has_unit_eigenvalue():
    assert eigenvalue_product("A2", 0, -1, 4) == TruncatedSeries.constant(ONE, 4)
    assert eigenvalue_product("C1", 0, -1, 4) == TruncatedSeries.constant(ONE, 4)
    assert spectral_labels("C1", 1, 2)[:2] == [(0, 1), (0, -1)]
    assert (0, -1) not in spectral_labels("C1", 1, 1)


def test_wrong_sign_label_fails():
    sspec = SSpec(1, 2, 2)
    v, _ = eigen_pair("A2", 2, 1, 2)
    got = apply_pr(sspec, v, 5)
    wrong = eigenvalue_product("A2", 2, -1, 5)
    right = eigenvalue_product("A2", 2, 1, 5)
    key = next(iter(got))
    assert got[key].agrees(right * v.coefficient(key))
    assert not got[key].agrees(wrong * v.coefficient(key))


def test_odd_c_block_swaps_sign():
    v, w = eigen_pair("C1", 1, 1, 2)
    assert v == singular_vector("C", 1, 1, 2).state
    assert w == singular_vector("C", 1, -1, 2).state


@pytest.mark.parametrize("alg,labels", [("D2", [(l, 1) for l in range(4)]),
                                        ("A2", [(l, e) for l in range(1, 4) for e in (1, -1)]),
                                        ("C1", [(0, 1), (2, 1)])])
def test_eigenvalues_are_unitary(alg, labels):
    one = TruncatedSeries.constant(ONE, 6)
    for l, eps in labels:
        rho = eigenvalue_product(alg, l, eps, 6)
        assert rho * eigenvalue_product(alg, l, eps, 6, reciprocal=True) == one


def test_eigenvalues_are_distinct():
    # C1 eigenvalues depend on l only; A2 ones also on the sign for l >= 1
    labels = {"D2": [(l, 1) for l in range(4)], "C1": [(l, 1) for l in range(4)],
              "A2": [(0, 1)] + [(l, e) for l in range(1, 4) for e in (1, -1)]}
    for alg, pairs in labels.items():
        seen = [eigenvalue_product(alg, l, e, 6) for l, e in pairs]
        assert len(set(seen)) == len(seen), alg


def test_eigenvalue_factor_values():
    factors, pref = eigenvalue_factors("C1", 3)
    assert pref == -I * Scalar.vpow(1)
    assert factors == [((-Scalar.qpow(4), ONE), (ONE, -Scalar.qpow(4)))]
    with pytest.raises(ValueError):
        eigenvalue_factors("A1", 1)


def test_spectral_rejects_mismatched_algebra():
    with pytest.raises(ValueError):
        check_spectral(SSpec(1, 1, 2), "A2", 1)
