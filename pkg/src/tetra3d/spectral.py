"""Singular vectors of V (x) V under the classical subalgebra (nodes 1..n) and the
eigenvalues of P R(z) on them, with R(z) = (K (x) 1) S(z) (1 (x) K^{-1}).

Families: ``B`` for D2 (one singular vector v_l per weight l e_n), ``C`` for
A2 and C1 (v^eps_l, plus the exceptional v^-_0 of weight e_{n-1} + e_n,
written as ``eps = -1, l = 0``).  For A2 the eigenvectors are the
combinations v^+_l + eps v^-_l.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .fock import MultiIndex, VectorState, sub_index, weight
from .qgroup import PAIRING, AlgebraSpec, GeneratorAction, gauge_factor, generator_terms
from .reduction import SSpec, s_column
from .reports import Report
from .ring import I, ONE, ZERO, Scalar, TruncatedSeries, qbracket

FAMILY = {"D2": "B", "A2": "C", "C1": "C"}


@dataclass
class SingularVector:
    family: str
    l: int
    eps: int
    n: int
    state: VectorState

    def to_json(self) -> dict:
        return {"family": self.family, "l": self.l, "eps": self.eps, "n": self.n,
                "state": self.state.to_json()}


def _unit(n: int, k: int, times: int = 1) -> MultiIndex:
    return tuple(times if r == k else 0 for r in range(n))


def singular_vector(family: str, l: int, eps: int = 1, n: int = 2) -> SingularVector:
    """Closed-form singular vector.

    ``B``: sum_k i^k q^{lk - k^2/2} [l, k] |k e_n> (x) |(l-k) e_n>.
    ``C``: sum over k = p(eps) mod 2 of q^{k(2l-k-1)/2} [l, k] |k e_n> (x) |(l-k) e_n>,
    with p(+) = 0, p(-) = 1; ``(eps, l) = (-1, 0)`` is
    |e_{n-1}> (x) |e_n> - q |e_n> (x) |e_{n-1}>.
    """
    if n < 1 or l < 0:
        raise ValueError("need n >= 1 and l >= 0")
    last = n - 1
    state = VectorState()
    if family == "B":
        for k in range(l + 1):
            c = I ** k * Scalar.vpow(2 * l * k - k * k) * qbracket(l, k)
            state.add_term((_unit(n, last, k), _unit(n, last, l - k)), c)
        return SingularVector("B", l, 1, n, state)
    if family != "C":
        raise ValueError(f"unknown family {family!r}")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if eps == -1 and l == 0:
        if n < 2:
            raise ValueError("v^-_0 needs n >= 2")
        state.add_term((_unit(n, n - 2), _unit(n, last)), ONE)
        state.add_term((_unit(n, last), _unit(n, n - 2)), -Scalar.qpow(1))
        return SingularVector("C", 0, -1, n, state)
    p = 0 if eps == 1 else 1
    if l < p:
        raise ValueError(f"v^eps_l needs l >= {p} for eps = {eps}")
    for k in range(p, l + 1, 2):
        c = Scalar.vpow(k * (2 * l - k - 1)) * qbracket(l, k)
        state.add_term((_unit(n, last, k), _unit(n, last, l - k)), c)
    return SingularVector("C", l, eps, n, state)


def _raising(spec: AlgebraSpec) -> list[GeneratorAction]:
    return [GeneratorAction("e", j) for j in range(1, spec.n + 1)]


def _coproduct_e(spec: AlgebraSpec, g: GeneratorAction, state: VectorState) -> VectorState:
    """(1 (x) e + e (x) k) on a pair state keyed by (a, b)."""
    out = VectorState()
    kk = GeneratorAction("k", g.node)
    for (a, b), c in state:
        for c2, b2 in generator_terms(spec, g, b):
            out.add_term((a, b2), c * c2)
        (kb, _), = generator_terms(spec, kk, b)
        for c2, a2 in generator_terms(spec, g, a):
            out.add_term((a2, b), c * c2 * kb)
    return out


def verify_singular(spec: AlgebraSpec, v: SingularVector) -> Report:
    """Delta(e_j) v = 0 for j = 1..n."""
    rep = Report("singular", {"type": spec.type, "family": v.family, "l": v.l, "eps": v.eps,
                              "n": v.n})
    for g in _raising(spec):
        out = _coproduct_e(spec, g, v.state)
        rep.record(out.is_zero(), str(g), out, VectorState())
    return rep


# -- exact null spaces -------------------------------------------------------------------


def nullspace(rows: list[dict], columns: Sequence) -> list[dict]:
    """Basis of {x : sum_c row[c] x[c] = 0 for every row} by exact elimination."""
    pivots: list[tuple[object, dict]] = []
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        for col, prow in pivots:
            f = row.get(col)
            if f:
                for c, v in prow.items():
                    row[c] = row.get(c, ZERO) - f * v
                row = {c: v for c, v in row.items() if v}
        if not row:
            continue
        col = next(c for c in columns if c in row)
        inv = row[col].inverse()
        row = {c: v * inv for c, v in row.items()}
        reduced = []
        for pcol, prow in pivots:
            f = prow.get(col)
            if f:
                prow = {c: prow.get(c, ZERO) - f * row.get(c, ZERO) for c in set(prow) | set(row)}
                prow = {c: v for c, v in prow.items() if v}
            reduced.append((pcol, prow))
        pivots = reduced + [(col, row)]
    pivot_cols = {c for c, _ in pivots}
    basis = []
    for free in columns:
        if free in pivot_cols:
            continue
        vec = {free: ONE}
        for pcol, prow in pivots:
            if prow.get(free):
                vec[pcol] = -prow[free]
        basis.append(vec)
    return basis


def _weight_vectors(l: MultiIndex) -> list[MultiIndex]:
    return [m for m in product(*(range(x + 1) for x in l))]


def find_singular(spec: AlgebraSpec, l: Sequence[int], max_weight: int = 12) -> list[SingularVector]:
    """Basis of the singular vectors of total weight ``l`` (entrywise a + b = l).

    For the C family the sector is split by the parity of |a|, which every
    raising generator preserves there, and each basis vector is tagged with
    that parity as ``eps``.  Every vector carries ``l = |l|``.
    """
    l = tuple(l)
    if len(l) != spec.n or min(l) < 0:
        raise ValueError(f"weight {l} must be a nonnegative vector of arity {spec.n}")
    if weight(l) > max_weight:
        raise ValueError(f"weight sector {l} exceeds the bound {max_weight}")
    fam = FAMILY.get(spec.type)
    if fam is None:
        raise ValueError(f"no singular-vector family for {spec.type}")
    out = []
    for parity in ((None,) if fam == "B" else (0, 1)):
        cols = [m for m in _weight_vectors(l) if parity is None or weight(m) % 2 == parity]
        if not cols:
            continue
        rows: dict = {}
        for m in cols:
            for g in _raising(spec):
                for key, c in _coproduct_e(spec, g, VectorState.basis((m, sub_index(l, m)))):
                    rows.setdefault((str(g), key), {})[m] = c
        for vec in nullspace(list(rows.values()), cols):
            state = VectorState({(m, sub_index(l, m)): c for m, c in vec.items()})
            out.append(SingularVector(fam, weight(l), -1 if parity == 1 else 1, spec.n, state))
    return out


def closed_forms(spec: AlgebraSpec, l: Sequence[int]) -> list[SingularVector]:
    """The closed-form singular vectors of total weight ``l``."""
    l = tuple(l)
    n = spec.n
    fam = FAMILY[spec.type]
    total = weight(l)
    out = []
    if l == _unit(n, n - 1, total):
        if fam == "B":
            out.append(singular_vector("B", total, 1, n))
        else:
            out.append(singular_vector("C", total, 1, n))
            if total >= 1:
                out.append(singular_vector("C", total, -1, n))
    if fam == "C" and n >= 2 and l == tuple(1 if r >= n - 2 else 0 for r in range(n)):
        out.append(singular_vector("C", 0, -1, n))
    return out


def _rank(states: list[VectorState]) -> int:
    keys = sorted({k for s in states for k, _ in s})
    rows = [{k: s.coefficient(k) for k in keys} for s in states]
    # rank = number of vectors minus nullity of the transpose system
    cols = list(range(len(states)))
    trows = [{i: rows[i][k] for i in cols if rows[i][k]} for k in keys]
    return len(states) - len(nullspace(trows, cols))


def same_span(a: list[VectorState], b: list[VectorState]) -> bool:
    ra, rb = _rank(a), _rank(b)
    return ra == rb == _rank(a + b)


def check_singular_completeness(spec: AlgebraSpec, max_weight: int = 4) -> Report:
    """find_singular agrees with the closed forms on every weight sector up to max_weight."""
    rep = Report("singular-completeness", {"type": spec.type, "n": spec.n, "max_weight": max_weight})
    for total in range(max_weight + 1):
        for l in _compositions_of(spec.n, total):
            found = [v.state for v in find_singular(spec, l)]
            expected = closed_forms(spec, l)
            ok = same_span(found, [v.state for v in expected]) if (found or expected) else True
            for v in expected:
                ok = ok and verify_singular(spec, v).passed
            rep.record(ok, l, len(found), len(expected))
    return rep


def _compositions_of(n: int, total: int) -> list[MultiIndex]:
    from .fock import enumerate_sector

    return enumerate_sector(n, weight=total)


# -- eigenvalues of P R(z) -------------------------------------------------------------------


def _ratio(num: Sequence, den: Sequence, order: int) -> TruncatedSeries:
    return TruncatedSeries.from_poly(num, order) / TruncatedSeries.from_poly(den, order)


def eigenvalue_factors(algebra: str, l: int, eps: int = 1) -> tuple[list, Scalar | None]:
    """Factors ((a, b), (c, d)) of prod (a + b z)/(c + d z), and the odd-block prefactor scalar.

    The prefactor p stands for p/(1 - z) and is None when absent.
    """
    q = Scalar.qpow
    half = Scalar.vpow
    if algebra == "D2":
        return [((q(j), ONE), (ONE, q(j))) for j in range(1, l + 1)], None
    if algebra == "A2":
        if l == 0:
            return [], None
        s = I * eps
        return [((-s * half(2 * j - 1), ONE), (ONE, -s * half(2 * j - 1))) for j in range(1, l + 1)], None
    if algebra == "C1":
        if l % 2 == 0:
            return [((-q(4 * j - 2), ONE), (ONE, -q(4 * j - 2))) for j in range(1, l // 2 + 1)], None
        return ([((-q(4 * j), ONE), (ONE, -q(4 * j))) for j in range(1, (l - 1) // 2 + 1)],
                -I * half(1))
    raise ValueError(f"no eigenvalue formula for {algebra!r}")


def eigenvalue_product(algebra: str, l: int, eps: int = 1, order: int = 6,
                       reciprocal: bool = False) -> TruncatedSeries:
    """The product formula as a z-series; ``reciprocal`` substitutes z -> 1/z factorwise."""
    factors, pref = eigenvalue_factors(algebra, l, eps)
    out = TruncatedSeries.constant(ONE, order)
    for (a, b), (c, d) in factors:
        if reciprocal:
            a, b, c, d = b, a, d, c
        out = out * _ratio([a, b], [c, d], order)
    if pref is not None:
        out = out * (_ratio([ZERO, pref], [-ONE, ONE], order) if reciprocal
                     else _ratio([pref], [ONE, -ONE], order))
    return out


def apply_pr(sspec: SSpec, state: VectorState, order: int) -> dict:
    """P R(z) on a pair state with scalar coefficients; returns (a, b) -> z-series."""
    zspec = SSpec(sspec.s, sspec.t, sspec.n, order)
    out: dict = {}
    for (i, j), c in state:
        for (a, b), series in s_column(zspec, i, j):
            term = series * (c * gauge_factor("inverse", a, j))
            key = (b, a)
            out[key] = term if key not in out else out[key] + term
    return {k: v for k, v in out.items() if v}


def _algebra_for(sspec: SSpec) -> str:
    return PAIRING[(sspec.s, sspec.t)]


def eigen_pair(algebra: str, l: int, eps: int, n: int) -> tuple[VectorState, VectorState]:
    """(v, w) with P R(z) v = rho w for the label (l, eps)."""
    if algebra == "D2":
        v = singular_vector("B", l, 1, n).state
        return v, v
    if algebra == "A2":
        if l == 0:
            v = singular_vector("C", 0, eps, n).state
            return v, v
        v = singular_vector("C", l, 1, n).state + singular_vector("C", l, -1, n).state.scale(Scalar.coerce(eps))
        return v, v
    if algebra == "C1":
        v = singular_vector("C", l, eps, n).state
        if l % 2 == 0:
            return v, v
        return v, singular_vector("C", l, -eps, n).state
    raise ValueError(f"unknown algebra {algebra!r}")


def check_spectral(sspec: SSpec, algebra: str, l: int, eps: int = 1, order: int = 6) -> Report:
    """P R(z) v = rho(z) w on the singular vector with label (l, eps)."""
    if _algebra_for(sspec) != algebra:
        raise ValueError(f"S^{sspec.s},{sspec.t} is matched with {_algebra_for(sspec)}, not {algebra}")
    v, w = eigen_pair(algebra, l, eps, sspec.n)
    rho = eigenvalue_product(algebra, l, eps, order)
    got = apply_pr(sspec, v, order)
    rep = Report("spectral", {"type": algebra, "n": sspec.n, "l": l, "eps": eps, "order": order})
    zero = TruncatedSeries({}, order)
    keys = set(got) | {k for k, _ in w}
    ok = all(got.get(k, zero).agrees(rho * w.coefficient(k), order) for k in keys)
    rep.record(ok, (algebra, l, eps), got, rho)
    rep.details.append({"eigenvalue": rho.to_json()})
    return rep


def spectral_labels(algebra: str, max_l: int, n: int) -> list[tuple[int, int]]:
    """Every (l, eps) label with l <= max_l for the given algebra."""
    if algebra == "D2":
        return [(l, 1) for l in range(max_l + 1)]
    labels = [(l, e) for l in range(max_l + 1) for e in (1, -1) if not (l == 0 and e == -1)]
    if n >= 2:
        labels.insert(1, (0, -1))
    return labels
