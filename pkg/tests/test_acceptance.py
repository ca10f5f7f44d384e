"""One test per acceptance criterion, each with its time budget.

All comparisons are exact; the only tolerance is the wall-clock limit.
"""

from __future__ import annotations

import time

from closed_forms import s_fixtures
from tetra3d import qgroup, reduction, spectral
from tetra3d.qgroup import AlgebraSpec
from tetra3d.reduction import SSpec
from tetra3d.reports import Report
from tetra3d.threedim_r import (LEMMAS, check_aq_intertwiner, check_boundary_eigen,
                                check_involution, check_symmetries, check_tetrahedron, sweep)


def _detail(rep: Report, seconds: float) -> str:
    text = f"{rep.cases} cases, {rep.failures} failures, {seconds:.1f}s"
    if rep.first_failure is not None:
        text += f", first failure {rep.first_failure.get('check', rep.id)} " \
                f"at {rep.first_failure['indices']}"
    return text


def _run(verdict, number: int, title: str, budget: float, build) -> None:
    start = time.perf_counter()
    rep = build()
    elapsed = time.perf_counter() - start
    ok = rep.passed and rep.cases > 0 and elapsed < budget
    verdict(number, title, ok, _detail(rep, elapsed))
    assert rep.cases > 0
    assert rep.passed, _detail(rep, elapsed)
    assert elapsed < budget


def _merged(name: str, reports) -> Report:
    top = Report(name)
    for rep in reports:
        top.merge(rep)
    return top


def test_tetrahedron_equation(verdict):
    _run(verdict, 1, "tetrahedron equation on all levels <= 2", 300,
         lambda: check_tetrahedron(max_level=2))


def test_involution_and_symmetries(verdict):
    _run(verdict, 2, "involution and symmetries on indices <= 4", 60,
         lambda: _merged("r-structure", [check_involution(4), check_symmetries(4)]))


def test_boundary_eigen_relations(verdict):
    _run(verdict, 3, "boundary eigen-relations, s = 1, 2, both sides, degree <= 6", 60,
         lambda: _merged("boundary", [check_boundary_eigen(k, side, 6)
                                      for k in (1, 2) for side in ("ket", "bra")]))


def _fixture_report() -> Report:
    rep = Report("fixtures", {"n": [1, 2, 3], "order": 8})
    for n in (1, 2, 3):
        for fx in s_fixtures(n, order=8):
            got = reduction.s_element(fx.spec, fx.a, fx.b, fx.i, fx.j).value
            rep.record(got == fx.expected, (n, fx.name), got, fx.expected)
    return rep


def test_closed_form_fixtures(verdict):
    _run(verdict, 4, "closed-form matrix elements of S^{s,t} to order 8, n = 1, 2, 3", 120,
         _fixture_report)


def _ybe_report() -> Report:
    specs = [(1, 1, None), (1, 2, None)] + [(2, 2, (e1, e2)) for e1 in (1, -1) for e2 in (1, -1)]
    return _merged("ybe", [reduction.check_ybe(SSpec(s, t, n, 6, parity), degree=2, order=6)
                           for s, t, parity in specs for n in (1, 2)])


def test_yang_baxter(verdict):
    _run(verdict, 5, "Yang-Baxter for S^{1,1}, S^{1,2} and the S^{2,2} parity blocks, n = 1, 2",
         600, _ybe_report)


def _relations_report() -> Report:
    reps = []
    for alg, n in [(a, n) for a in ("D2", "A2", "C1", "A1") for n in (2, 3)]:
        spec = AlgebraSpec(alg, n)
        margin = qgroup.relation_margin(spec)
        reps.append(qgroup.check_defining_relations(spec, cutoff=6 + margin, margin=margin))
    return _merged("relations", reps)


def test_defining_relations(verdict):
    _run(verdict, 6, "defining relations with q-Serre for D2, A2, C1, A1 at n = 2, 3", 120,
         _relations_report)


def _theorem_report() -> Report:
    return _merged("theorem", [qgroup.check_theorem_main(SSpec(s, t, n), degree=2, order=6)
                               for (s, t) in qgroup.PAIRING for n in (1, 2)])


def test_main_theorem(verdict):
    _run(verdict, 7, "S^{s,t} equals the quantum R matrix at truncation, n = 1, 2", 900,
         _theorem_report)


def test_lemma_identities(verdict):
    def build():
        return _merged("lemmas", [sweep(rid, 2 if rid in ("air", "szk") else 4) for rid in LEMMAS])
    _run(verdict, 8, "lemma identities, linear <= 4, quadratic <= 2", 300, build)


def test_aq_intertwiner(verdict):
    _run(verdict, 9, "A_q(sl3) intertwiner for all nine generators, degree <= 3", 120,
         lambda: check_aq_intertwiner(degree=3))


def _spectral_report() -> Report:
    reps = []
    for alg, pair in (("D2", (1, 1)), ("A2", (1, 2)), ("C1", (2, 2))):
        sspec = SSpec(*pair, 2)
        for l, eps in spectral.spectral_labels(alg, 3, 2):
            reps.append(spectral.check_spectral(sspec, alg, l, eps, order=6))
    return _merged("spectral", reps)


def test_spectral_eigenvalues(verdict):
    _run(verdict, 10, "P R(z) eigenvalues on singular vectors, l <= 3, n = 2", 600,
         _spectral_report)


def test_singular_vector_completeness(verdict):
    def build():
        return _merged("singular", [spectral.check_singular_completeness(AlgebraSpec(alg, n), 4)
                                    for alg in ("D2", "A2", "C1") for n in (2, 3)])
    _run(verdict, 11, "singular vectors are exactly the closed-form lists, |weight| <= 4", 300, build)


def _trace_report() -> Report:
    reps = [qgroup.check_str_normalization(n, max_level=3, order=6) for n in (2, 3)]
    reps += [reduction.check_str_ybe(n, max_weight=2, order=6) for n in (2, 3)]
    reps += [qgroup.check_str_intertwining(n, max_weight=2, order=6, kinds=("e", "f"))
             for n in (2, 3)]
    return _merged("trace", reps)


def test_trace_reduction(verdict):
    _run(verdict, 12, "trace reduction: diagonal forms, Yang-Baxter, A1 intertwining", 600,
         _trace_report)


def test_reversal_relation(verdict):
    _run(verdict, 13, "reversal relation between S^{2,1} and S^{1,2}, n = 1, 2", 120,
         lambda: _merged("reversal", [reduction.check_reversal(1, 2, n, degree=2, order=8)
                                      for n in (1, 2)]))
