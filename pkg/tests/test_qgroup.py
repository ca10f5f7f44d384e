from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tetra3d.fock import GradedOperator, VectorState, enumerate_sector
from tetra3d.qgroup import (GAUGE_BASE, INTERTWINING, INTERTWINING_PLAIN, PAIRING, AlgebraSpec,
                            GaugeK, GeneratorAction, Relation, _sides_agree, apply_word, cartan,
                            check_defining_relations, check_intertwining, check_normalization,
                            check_str_intertwining, check_str_normalization, check_theorem_main,
                            check_weight_commutativity, coproduct_action, defining_relations,
                            gauge_factor, gauge_transform, generator_terms, intertwining_sides,
                            r_normalization, relation_margin, rep_action, slm_value)
from tetra3d.reduction import SSpec, s_column
from tetra3d.ring import I, ONE, Scalar, TruncatedSeries

G = GeneratorAction


def test_cartan_matrices():
    assert cartan(AlgebraSpec("D2", 2)) == ((2, -2, 0), (-1, 2, -1), (0, -2, 2))
    assert cartan(AlgebraSpec("A2", 2)) == ((2, -2, 0), (-1, 2, -2), (0, -1, 2))
    assert cartan(AlgebraSpec("C1", 2)) == ((2, -1, 0), (-2, 2, -2), (0, -1, 2))
    assert cartan(AlgebraSpec("A1", 3)) == ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))
    assert cartan(AlgebraSpec("A1", 2)) == ((2, -2), (-2, 2))


@pytest.mark.parametrize("alg", ["D2", "A2", "C1"])
def test_cartan_is_symmetrizable(alg):
    spec = AlgebraSpec(alg, 3)
    a, d = cartan(spec), spec.q_exp
    for i in spec.nodes:
        for j in spec.nodes:
            assert d[i] * a[i][j] == d[j] * a[j][i]


def test_rank_one_types():
    assert AlgebraSpec("A2", 1).cartan == ((2, -4), (-1, 2))
    for alg in ("D2", "C1"):
        spec = AlgebraSpec(alg, 1)
        assert list(spec.nodes) == [0, 1]
        with pytest.raises(ValueError):
            cartan(spec)


def test_spec_validation():
    with pytest.raises(ValueError):
        AlgebraSpec("B3", 2)
    with pytest.raises(ValueError):
        AlgebraSpec("A1", 1)
    with pytest.raises(ValueError):
        G("h", 0)
    with pytest.raises(ValueError):
        generator_terms(AlgebraSpec("D2", 2), G("e", 3), (0, 0))
    with pytest.raises(ValueError):
        generator_terms(AlgebraSpec("D2", 2), G("e", 1), (0,))


def test_x_power_only_at_node_zero():
    assert G("e", 0).x_power == 1 and G("f", 0).x_power == -1
    assert G("k", 0).x_power == 0 and G("e", 1).x_power == 0


@pytest.mark.parametrize("alg", ["D2", "A2", "C1", "A1"])
@given(m=st.tuples(st.integers(0, 4), st.integers(0, 4)))
def test_k_is_diagonal_and_invertible(alg, m):
    spec = AlgebraSpec(alg, 2)
    for r in spec.nodes:
        (c, new), = generator_terms(spec, G("k", r), m)
        (ci, _), = generator_terms(spec, G("kinv", r), m)
        assert new == m and c * ci == ONE


def test_generator_shifts():
    spec = AlgebraSpec("C1", 2)
    assert rep_action(spec, G("e", 0), (0, 1)) == VectorState.basis((2, 1))
    assert rep_action(spec, G("f", 2), (0, 1)) == VectorState.basis((0, 3))
    assert rep_action(spec, G("f", 0), (1, 0)).is_zero()
    d2 = AlgebraSpec("D2", 2)
    assert rep_action(d2, G("e", 1), (1, 0)) == VectorState.basis((0, 1))


@pytest.mark.parametrize("alg,n", [("D2", 2), ("A2", 2), ("C1", 2), ("A1", 2), ("A1", 3), ("A2", 1)])
def test_defining_relations(alg, n):
    spec = AlgebraSpec(alg, n)
    margin = relation_margin(spec)
    rep = check_defining_relations(spec, cutoff=3 + margin, margin=margin)
    assert rep.passed and rep.cases > 0


def test_margin_is_enforced():
    spec = AlgebraSpec("C1", 2)
    with pytest.raises(ValueError):
        check_defining_relations(spec, cutoff=8, margin=relation_margin(spec) - 1)


def test_serre_relations_are_sensitive_to_coefficients():
    spec = AlgebraSpec("C1", 2)
    serre = [r for r in defining_relations(spec) if r.name.startswith("serre-e(1,0)")][0]
    broken = Relation("broken", ((serre.terms[0][0] * 2, serre.terms[0][1]),) + serre.terms[1:])
    start = VectorState.basis((0, (2, 1)))
    total = VectorState()
    for c, word in broken.terms:
        total = total + apply_word(spec, word, start).scale(c)
    assert not total.is_zero()


@pytest.mark.parametrize("alg", ["D2", "A2", "C1", "A1"])
def test_coproduct_respects_commutator(alg):
    spec = AlgebraSpec(alg, 2)
    for r in spec.nodes:
        qi = Scalar.vpow(spec.q_exp[r])
        for a in enumerate_sector(2, degree=2):
            for b in enumerate_sector(2, degree=1):
                start = VectorState.basis((a, b, 0, 0))

                def act(word):
                    s = start
                    for g in reversed(word):
                        s = coproduct_action(spec, g, s)
                    return s
                lhs = act((G("e", r), G("f", r))) - act((G("f", r), G("e", r)))
                rhs = (act((G("k", r),)) - act((G("kinv", r),))).scale(ONE / (qi - qi.inverse()))
                assert lhs == rhs


def test_gauge_operator():
    k = GaugeK(2)
    assert k.eigenvalue((1, 1)) == GAUGE_BASE ** 2 == -Scalar.qpow(1)
    state = VectorState({(1, 0): ONE, (0, 2): I})
    assert k(k(state), -1) == state
    with pytest.raises(ValueError):
        k.eigenvalue((1,))
    assert gauge_factor("forward", (1, 0), (0, 2)) * gauge_factor("inverse", (1, 0), (0, 2)) == ONE
    with pytest.raises(ValueError):
        gauge_factor("sideways", (0,), (0,))


def test_gauge_transform_round_trip():
    spec = SSpec(2, 2, 2, 4)
    op = GradedOperator(lambda key: VectorState(dict(s_column(spec, *key))), name="S")
    there = gauge_transform("forward", op, 2)
    back = gauge_transform("inverse", there, 2)
    for key in [((1, 0), (0, 1)), ((1, 1), (0, 0))]:
        assert back.on_basis(key) == op.on_basis(key)


def test_normalization_values():
    entries = dict(r_normalization(2, 2, 2, 4))
    assert entries[((0, 0), (0, 0))] == TruncatedSeries.constant(ONE, 4)
    assert len(r_normalization(1, 1, 2, 4)) == 1
    for pair in PAIRING:
        assert check_normalization(SSpec(*pair, 2), order=4).passed


@pytest.mark.parametrize("pair", list(PAIRING))
@pytest.mark.parametrize("n", [1, 2])
def test_main_theorem_small(pair, n):
    rep = check_theorem_main(SSpec(*pair, n), degree=1, order=4)
    assert rep.passed and rep.cases > 0


def test_intertwining_requires_matching_algebra():
    with pytest.raises(ValueError):
        check_intertwining(AlgebraSpec("A2", 2), SSpec(1, 1, 2), 0)
    with pytest.raises(ValueError):
        check_intertwining(AlgebraSpec("D2", 2), SSpec(1, 1, 2), 5)


def _failures(spec, sspec, relation_table, degree=2, order=5):
    zspec = SSpec(sspec.s, sspec.t, sspec.n, order)
    column = lambda i, j: s_column(zspec, i, j, True)  # noqa: E731
    bad = 0
    for r in spec.nodes:
        for kind in ("e", "f"):
            for a in enumerate_sector(spec.n, degree=degree):
                for b in enumerate_sector(spec.n, degree=degree - sum(a)):
                    lhs, rhs = intertwining_sides(spec, column, relation_table[kind], r, a, b, order)
                    bad += not _sides_agree(lhs, rhs, order)
    return bad


def test_intertwining_fails_without_gauge():
    assert _failures(AlgebraSpec("D2", 2), SSpec(1, 1, 2), INTERTWINING) == 0
    assert _failures(AlgebraSpec("D2", 2), SSpec(1, 1, 2), INTERTWINING_PLAIN) > 0


def test_intertwining_fails_for_wrong_algebra():
    assert _failures(AlgebraSpec("A2", 2), SSpec(1, 1, 2), INTERTWINING) > 0


def test_weight_commutativity():
    assert check_weight_commutativity(AlgebraSpec("A2", 2), SSpec(1, 2, 2), degree=2, order=4).passed


def test_trace_normalization_and_intertwining():
    assert slm_value(1, 0, 4) == TruncatedSeries.geometric(Scalar.qpow(1), 4)
    assert check_str_normalization(2, max_level=2, order=4).passed
    rep = check_str_intertwining(2, max_weight=1, order=4, kinds=("e", "f"))
    assert rep.passed and rep.cases > 0
