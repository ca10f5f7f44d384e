"""Yang-Baxter solutions obtained by contracting n-fold products of R with
boundary vectors (S^{s,t}) or with a weighted trace (S^tr).

Elements are truncated power series in the spectral variable z.  An element
of S^{s,t} is a single sum over c_0: the conservation law of R fixes every
other auxiliary index once c_0 is chosen.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Sequence

from .fock import MultiIndex, VectorState, add_index
from .reports import Report
from .ring import ONE, ZERO, Scalar, TruncatedSeries, qpoch_infinite_series, qpoch_q
from .threedim_r import r_element

Column = tuple[tuple[tuple[MultiIndex, MultiIndex], TruncatedSeries], ...]
ColumnFn = Callable[[MultiIndex, MultiIndex], Column]


@dataclass(frozen=True)
class SSpec:
    """Which solution: boundary kinds (s, t), rank n, series order and optional parity block."""

    s: int
    t: int
    n: int
    order: int = 8
    parity: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.s not in (1, 2) or self.t not in (1, 2):
            raise ValueError("s and t must be 1 or 2")
        if self.n < 1:
            raise ValueError("rank n must be >= 1")
        if self.order < 0:
            raise ValueError("series order must be nonnegative")
        if self.parity is not None:
            if (self.s, self.t) != (2, 2):
                raise ValueError("a parity block only exists for (s, t) = (2, 2)")
            if any(e not in (1, -1) for e in self.parity):
                raise ValueError("parities must be +1 or -1")

    def with_order(self, order: int) -> "SSpec":
        return SSpec(self.s, self.t, self.n, order, self.parity)


@dataclass(frozen=True)
class SElement:
    out_pair: tuple[MultiIndex, MultiIndex]
    in_pair: tuple[MultiIndex, MultiIndex]
    value: TruncatedSeries

    def to_json(self) -> dict:
        return {"out": [list(x) for x in self.out_pair], "in": [list(x) for x in self.in_pair],
                "value": self.value.to_json()}


def _parity(m: Sequence[int]) -> int:
    return 1 if sum(m) % 2 == 0 else -1


# -- normalization -----------------------------------------------------------------------


@lru_cache(maxsize=None)
def rho_normalizer(s: int, t: int, order: int = 8,
                   parity: tuple[int, int] | None = None) -> TruncatedSeries:
    """rho^{1,1}, rho^{1,2} or the parity-block factor rho^{e1,e2} for (2,2)."""
    if (s, t) == (1, 1):
        return qpoch_infinite_series(ONE, 1, 1, order) / qpoch_infinite_series(-Scalar.qpow(1), 1, 1, order)
    if (s, t) == (1, 2):
        return qpoch_infinite_series(ONE, 2, 2, order) / qpoch_infinite_series(-Scalar.qpow(1), 2, 2, order)
    if (s, t) == (2, 2):
        if parity is None:
            raise ValueError("rho for (2, 2) depends on the parity block")
        base = qpoch_infinite_series(ONE, 1, 4, order) / qpoch_infinite_series(Scalar.qpow(2), 1, 4, order)
        return base if parity[0] * parity[1] == 1 else base.inverse()
    raise ValueError(f"no normalization factor is defined for (s, t) = ({s}, {t})")


def rho_for(spec: SSpec, i: Sequence[int] | None = None, j: Sequence[int] | None = None) -> TruncatedSeries:
    if (spec.s, spec.t) == (2, 2):
        parity = spec.parity
        if parity is None:
            if i is None or j is None:
                raise ValueError("rho for (2, 2) needs the input labels or a parity block")
            parity = (_parity(i), _parity(j))
        return rho_normalizer(2, 2, spec.order, parity)
    return rho_normalizer(spec.s, spec.t, spec.order)


# -- S^{s,t} elements --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _c0_weight(s: int, t: int, c0: int, cn: int) -> Scalar:
    """(q^2)_{s c0} / ((q^{s^2})_{c0} (q^{t^2})_{cn})."""
    return qpoch_q(s * c0, 4) / (qpoch_q(c0, 2 * s * s) * qpoch_q(cn, 2 * t * t))


@lru_cache(maxsize=None)
def _raw_coefficients(s: int, t: int, order: int, a: MultiIndex, b: MultiIndex,
                      i: MultiIndex, j: MultiIndex) -> tuple[tuple[int, Scalar], ...]:
    out = []
    n = len(a)
    for c0 in range(order + 1):
        prev = s * c0
        value = ONE
        for r in range(n):
            rest = b[r] + prev - j[r]
            if r == n - 1:
                if rest < 0 or rest % t:
                    value = ZERO
                    break
                cn = rest // t
                lower = rest
            else:
                if rest < 0:
                    value = ZERO
                    break
                lower = rest
            elem = r_element(a[r], b[r], prev, i[r], j[r], lower)
            if not elem:
                value = ZERO
                break
            value = value * elem
            prev = lower
        if value:
            out.append((c0, value * _c0_weight(s, t, c0, cn)))
    return tuple(out)


def s_raw(spec: SSpec, a: Sequence[int], b: Sequence[int], i: Sequence[int],
          j: Sequence[int]) -> TruncatedSeries:
    """The contracted sum without the normalization factor."""
    a, b, i, j = (tuple(x) for x in (a, b, i, j))
    if not (len(a) == len(b) == len(i) == len(j) == spec.n):
        raise ValueError(f"labels must all have arity n = {spec.n}")
    coeffs = _raw_coefficients(spec.s, spec.t, spec.order, a, b, i, j)
    return TruncatedSeries({(c0,): v for c0, v in coeffs}, spec.order)


def s_element(spec: SSpec, a: Sequence[int], b: Sequence[int], i: Sequence[int],
              j: Sequence[int], raw: bool = False) -> SElement:
    """Element S^{s,t}(z)^{a,b}_{i,j}; normalized by rho unless ``raw``."""
    value = s_raw(spec, a, b, i, j)
    if not raw and value:
        value = value * rho_for(spec, i, j)
    return SElement((tuple(a), tuple(b)), (tuple(i), tuple(j)), value)


def _splits(total: MultiIndex) -> Iterable[tuple[MultiIndex, MultiIndex]]:
    for a in product(*(range(x + 1) for x in total)):
        yield a, tuple(x - y for x, y in zip(total, a))


@lru_cache(maxsize=None)
def s_column(spec: SSpec, i: MultiIndex, j: MultiIndex, raw: bool = False) -> Column:
    """All nonzero elements S^{a,b}_{i,j} for fixed input, a + b = i + j."""
    out = []
    total = add_index(i, j)
    for a, b in _splits(total):
        if (spec.s, spec.t) == (2, 2) and (_parity(a) != _parity(i) or _parity(b) != _parity(j)):
            continue
        val = s_element(spec, a, b, i, j, raw).value
        if val:
            out.append(((a, b), val))
    return tuple(out)


def s_matrix(spec: SSpec, degree: int, raw: bool = False):
    """S on the sector of pair labels with total weight <= degree.

    Returns ``(operator, basis)``: a :class:`GradedOperator` whose rule yields
    series-valued states, with entrywise weight conservation declared.
    """
    from .fock import GradedOperator, pair_sector

    basis = pair_sector(spec.n, degree)
    if spec.parity is not None:
        basis = [(i, j) for i, j in basis if (_parity(i), _parity(j)) == spec.parity]

    def rule(key):
        i, j = key
        return VectorState(dict(s_column(spec, i, j, raw)))

    op = GradedOperator(rule, (lambda key: add_index(*key),), name=f"S^{spec.s},{spec.t}")
    return op, basis


# -- trace reduction ------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _str_coefficients(order: int, a: MultiIndex, b: MultiIndex, i: MultiIndex,
                      j: MultiIndex) -> tuple[tuple[int, Scalar], ...]:
    if sum(b) != sum(j) or sum(a) != sum(i):
        return ()
    out = []
    n = len(a)
    for c0 in range(order + 1):
        prev = c0
        value = ONE
        for r in range(n):
            lower = b[r] + prev - j[r]
            if lower < 0:
                value = ZERO
                break
            if r == n - 1 and lower != c0:
                value = ZERO
                break
            elem = r_element(a[r], b[r], prev, i[r], j[r], lower)
            if not elem:
                value = ZERO
                break
            value = value * elem
            prev = lower
        if value:
            out.append((c0, value))
    return tuple(out)


def str_element(n: int, a: Sequence[int], b: Sequence[int], i: Sequence[int], j: Sequence[int],
                order: int = 8) -> TruncatedSeries:
    """Trace-reduced element: sum over c_0 of z^{c_0} times a closed chain of R elements."""
    a, b, i, j = (tuple(x) for x in (a, b, i, j))
    if not (len(a) == len(b) == len(i) == len(j) == n):
        raise ValueError(f"labels must all have arity n = {n}")
    return TruncatedSeries({(c0,): v for c0, v in _str_coefficients(order, a, b, i, j)}, order)


@lru_cache(maxsize=None)
def str_column(n: int, i: MultiIndex, j: MultiIndex, order: int) -> Column:
    out = []
    for a, b in _splits(add_index(i, j)):
        if sum(b) != sum(j):
            continue
        val = str_element(n, a, b, i, j, order)
        if val:
            out.append(((a, b), val))
    return tuple(out)


# -- Yang-Baxter equation -------------------------------------------------------------------

_LEGS = {"12": (0, 1), "13": (0, 2), "23": (1, 2)}
_VARS = {"12": "x", "13": "xy", "23": "y"}


def _apply_pair(column: ColumnFn, where: str, state: dict, order: int, cache: dict) -> dict:
    p, r = _LEGS[where]
    out: dict = {}
    for key, coeff in state.items():
        i, j = key[p], key[r]
        ck = (where, i, j)
        col = cache.get(ck)
        if col is None:
            col = [((a, b), series.lift(_VARS[where], order)) for (a, b), series in column(i, j)]
            cache[ck] = col
        for (a, b), series in col:
            new = list(key)
            new[p], new[r] = a, b
            new = tuple(new)
            term = series * coeff
            old = out.get(new)
            out[new] = term if old is None else old + term
    return {k: v for k, v in out.items() if v}


def ybe_sides(column: ColumnFn, start: tuple[MultiIndex, MultiIndex, MultiIndex], order: int,
              cache: dict | None = None) -> tuple[dict, dict]:
    """S12(x) S13(xy) S23(y) and S23(y) S13(xy) S12(x) applied to a basis vector.

    ``column(i, j)`` returns the nonzero elements of one solution as z-series.
    """
    cache = {} if cache is None else cache
    one = TruncatedSeries.constant(ONE, order, ("x", "y"))
    lhs = {start: one}
    for where in ("23", "13", "12"):
        lhs = _apply_pair(column, where, lhs, order, cache)
    rhs = {start: one}
    for where in ("12", "13", "23"):
        rhs = _apply_pair(column, where, rhs, order, cache)
    return lhs, rhs


def _states_equal(lhs: dict, rhs: dict) -> bool:
    for key in set(lhs) | set(rhs):
        a, b = lhs.get(key), rhs.get(key)
        if a is None or b is None:
            if (a or b):
                return False
            continue
        if not a.agrees(b):
            return False
    return True


def triple_sector(n: int, degree: int) -> list[tuple[MultiIndex, MultiIndex, MultiIndex]]:
    from .fock import enumerate_sector

    labels = enumerate_sector(n, degree=degree)
    return [(u, v, w) for u in labels for v in labels for w in labels
            if sum(u) + sum(v) + sum(w) <= degree]


def check_ybe_generic(column: ColumnFn, starts: Iterable, order: int, rep: Report) -> Report:
    cache: dict = {}
    for start in starts:
        lhs, rhs = ybe_sides(column, start, order, cache)
        rep.record(_states_equal(lhs, rhs), start, lhs, rhs)
    return rep


def check_ybe(spec: SSpec, degree: int = 2, order: int = 6) -> Report:
    """Yang-Baxter equation for S^{s,t} on all basis vectors of total weight <= degree.

    For (2, 2) each factor uses the parity block selected by its input labels;
    a ``parity`` on ``spec`` keeps the basis vectors on which that block acts
    on at least one pair of legs.
    """
    zspec = SSpec(spec.s, spec.t, spec.n, order)
    starts = triple_sector(spec.n, degree)
    if spec.parity is not None:
        blk = spec.parity

        def touches(st):
            p = [_parity(x) for x in st]
            return blk in ((p[0], p[1]), (p[0], p[2]), (p[1], p[2]))

        starts = [st for st in starts if touches(st)]
    rep = Report("ybe", {"s": spec.s, "t": spec.t, "n": spec.n, "degree": degree, "order": order,
                         "parity": list(spec.parity) if spec.parity else None})
    return check_ybe_generic(lambda i, j: s_column(zspec, i, j), starts, order, rep)


def check_str_ybe(n: int, max_weight: int = 2, order: int = 6) -> Report:
    """Yang-Baxter equation for S^tr on all basis vectors whose legs have weight <= max_weight."""
    from .fock import enumerate_sector

    labels = enumerate_sector(n, degree=max_weight)
    starts = [(u, v, w) for u in labels for v in labels for w in labels]
    rep = Report("str-ybe", {"n": n, "max_weight": max_weight, "order": order})
    return check_ybe_generic(lambda i, j: str_column(n, i, j, order), starts, order, rep)


# -- reversal relation ------------------------------------------------------------------


def reversal_sides(s: int, t: int, n: int, a, b, i, j, order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of the reversal relation in the variable w with z = w^t.

    Left: raw S^{t,s}(z)^{a,b}_{i,j} with z = w^t.  Right: the monomial and
    Pochhammer prefactor times raw S^{s,t}(w^s) with reversed labels and the
    roles of (a, b) and (i, j) exchanged.  Both are returned as w-series
    truncated at ``order``, each multiplied by the same power of w so that
    no negative exponents occur.
    """
    a, b, i, j = (tuple(x) for x in (a, b, i, j))
    d = sum(j) - sum(b)  # w-exponent of the monomial prefactor
    lift = max(0, -d)
    left_z = s_raw(SSpec(t, s, n, order // t), a, b, i, j)
    left = left_z.substitute_power(t, order).shift(lift) if lift else left_z.substitute_power(t, order)
    pref = ONE
    for r in range(n):
        pref = pref * qpoch_q(i[r], 4) * qpoch_q(j[r], 4) / (qpoch_q(a[r], 4) * qpoch_q(b[r], 4))
    rev = lambda m: tuple(reversed(m))  # noqa: E731
    right_w = s_raw(SSpec(s, t, n, order // s), rev(i), rev(j), rev(a), rev(b))
    right = right_w.substitute_power(s, order) if s > 1 else right_w.truncate(order)
    right = right.shift(d + lift) * pref
    return left, right


def check_reversal(s: int, t: int, n: int, degree: int = 2, order: int = 8) -> Report:
    """Reversal relation between S^{t,s} and S^{s,t} on all pairs of total weight <= degree."""
    from .fock import pair_sector

    rep = Report("reversal", {"s": s, "t": t, "n": n, "degree": degree, "order": order})
    for i, j in pair_sector(n, degree):
        for a, b in _splits(add_index(i, j)):
            left, right = reversal_sides(s, t, n, a, b, i, j, order)
            rep.record(left.agrees(right), (a, b, i, j), left, right)
    return rep


def s_elements_for_sector(spec: SSpec, degree: int, raw: bool = False) -> list[SElement]:
    """Every nonzero element on the sector, in deterministic order."""
    from .fock import pair_sector

    out = []
    for i, j in pair_sector(spec.n, degree):
        if spec.parity is not None and (_parity(i), _parity(j)) != spec.parity:
            continue
        for (a, b), val in s_column(spec, i, j, raw):
            out.append(SElement((a, b), (i, j), val))
    return out
