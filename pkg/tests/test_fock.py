from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tetra3d.fock import (ConservationError, GradedOperator, VectorState, add_index,
                          conservation_weight, enumerate_sector, identity_operator, is_valid,
                          pair_sector, pairing, parse_index, sub_index, unit, weight)
from tetra3d.ring import ONE, ZERO, Scalar, TruncatedSeries, qpoch_q

labels = st.lists(st.integers(0, 4), min_size=1, max_size=3).map(tuple)


def test_unit_vectors_are_one_based():
    assert unit(3, 1) == (1, 0, 0)
    assert unit(3, 3, 2) == (0, 0, 2)
    with pytest.raises(ValueError):
        unit(3, 0)


def test_index_arithmetic():
    assert add_index((1, 2), (3, 0)) == (4, 2)
    assert sub_index((1, 2), (3, 0)) == (-2, 2)
    assert not is_valid((-2, 2))
    assert weight((1, 2, 3)) == 6
    assert parse_index("(1, 0,2)") == (1, 0, 2)
    assert parse_index("[]") == ()


def test_pairing_values():
    assert pairing(3, 3) == qpoch_q(3, 4)
    assert pairing((1, 2), (1, 2)) == qpoch_q(1, 4) * qpoch_q(2, 4)
    with pytest.raises(ValueError):
        pairing((1,), (1, 0))


def test_pairing_is_diagonal():
    for m in range(11):
        for n in range(11):
            assert bool(pairing(m, n)) == (m == n)


@pytest.mark.parametrize("n,w", [(1, 3), (2, 3), (3, 4)])
def test_sector_sizes(n, w):
    from math import comb
    assert len(enumerate_sector(n, w)) == comb(w + n - 1, n - 1)
    assert len(enumerate_sector(n, degree=w)) == comb(w + n, n)


def test_sector_order_is_deterministic():
    assert enumerate_sector(2, degree=2) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert enumerate_sector(2, degree=3, parity=-1) == [(1, 0), (0, 1), (3, 0), (2, 1), (1, 2), (0, 3)]


def test_sector_needs_a_bound():
    with pytest.raises(ValueError):
        enumerate_sector(2)
    with pytest.raises(ValueError):
        enumerate_sector(2, 1, parity=0)


def test_pair_sector_bounds_total_weight():
    pairs = pair_sector(2, 2)
    assert all(sum(a) + sum(b) <= 2 for a, b in pairs)
    assert len(pairs) == len(set(pairs)) == 15


states = st.dictionaries(labels, st.integers(-3, 3).map(Scalar), max_size=4).map(VectorState)


@given(states, states)
def test_state_vector_space(a, b):
    assert a + b == b + a
    assert (a - a).is_zero()
    assert a.scale(Scalar(2)) == a + a
    assert (a * ZERO).is_zero()


@given(states)
def test_zero_coefficients_are_not_stored(a):
    assert all(c for _, c in a)


def test_state_with_series_coefficients():
    s = TruncatedSeries.from_poly([1, 1], 3)
    v = VectorState({(1,): s})
    w = v + v.map(lambda c: -c)
    assert w.is_zero()


def test_state_json_is_sorted():
    v = VectorState({(2,): ONE, (0,): Scalar(3)})
    assert [t["index"] for t in v.to_json()] == [[0], [2]]
    pair = VectorState({((1,), (0,)): ONE})
    assert pair.to_json()[0]["index"] == [[1], [0]]


def test_operator_conservation_is_enforced():
    shift = GradedOperator(lambda key: VectorState.basis((key[0] + 1,)),
                           (conservation_weight,), "raise")
    with pytest.raises(ConservationError):
        shift(VectorState.basis((0,)))
    swap = GradedOperator(lambda key: VectorState.basis(key[::-1]), (conservation_weight,), "swap")
    assert swap(VectorState.basis((1, 0))) == VectorState.basis((0, 1))
    assert swap.compose(swap)(VectorState.basis((1, 0))) == VectorState.basis((1, 0))
    assert identity_operator()(VectorState.basis((5,))) == VectorState.basis((5,))


def test_conservation_weight_on_pairs():
    assert conservation_weight(((1, 2), (0, 3))) == 6
    assert conservation_weight((1, 2)) == 3
