"""Matrix elements of the 3d R operator on F^(x)3 and its action on sparse states."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from ..fock import VectorState
from ..ring import ONE, ZERO, Scalar, TruncatedSeries, qbinomial, qpoch_q, qpoch_ratio

_Q2 = 4  # v-exponent of q^2, the base of the Pochhammer symbols below


@dataclass(frozen=True)
class RIndex:
    """Out-triple (a, b, c) and in-triple (i, j, k) of an element R^{abc}_{ijk}."""

    a: int
    b: int
    c: int
    i: int
    j: int
    k: int

    def astuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.i, self.j, self.k)

    def conserves(self) -> bool:
        return self.a + self.b == self.i + self.j and self.b + self.c == self.j + self.k


@lru_cache(maxsize=None)
def r_element(a: int, b: int, c: int, i: int, j: int, k: int) -> Scalar:
    """R^{a,b,c}_{i,j,k}; zero if any index is negative or conservation fails."""
    if min(a, b, c, i, j, k) < 0:
        return ZERO
    if a + b != i + j or b + c != j + k:
        return ZERO
    total = ZERO
    for mu in range(max(0, b - j), min(i, b) + 1):
        lam = b - mu
        e = i * (c - j) + (k + 1) * lam + mu * (mu - k)
        term = Scalar.qpow(e) * qpoch_ratio(c + mu, c, _Q2) * qbinomial(i, mu, _Q2) \
            * qbinomial(j, lam, _Q2)
        total = total - term if lam % 2 else total + term
    return total


@lru_cache(maxsize=None)
def r_element_extended(a: int, b: int, c: int, i: int, j: int, k: int) -> Scalar:
    """The defining sum of R^{abc}_{ijk} evaluated at arbitrary integer indices.

    Agrees with :func:`r_element` on nonnegative indices.  The sum is empty for
    b < 0 and its q-binomials vanish for i < 0 or j < 0; for negative a, c or k
    the formula is used as written, with (q^2)_{c+mu}/(q^2)_c taken as the
    finite product over c < m <= c+mu.
    """
    if min(a, b, c, i, j, k) >= 0:
        return r_element(a, b, c, i, j, k)
    if b < 0 or i < 0 or j < 0:
        return ZERO
    if a + b != i + j or b + c != j + k:
        return ZERO
    total = ZERO
    for mu in range(max(0, b - j), min(i, b) + 1):
        lam = b - mu
        e = i * (c - j) + (k + 1) * lam + mu * (mu - k)
        term = Scalar.qpow(e) * qpoch_ratio(c + mu, c, _Q2) * qbinomial(i, mu, _Q2) \
            * qbinomial(j, lam, _Q2)
        total = total - term if lam % 2 else total + term
    return total


def r_value(idx: RIndex | Sequence[int]) -> Scalar:
    if isinstance(idx, RIndex):
        idx = idx.astuple()
    return r_element(*idx)


@lru_cache(maxsize=None)
def r_column(i: int, j: int, k: int) -> tuple[tuple[tuple[int, int, int], Scalar], ...]:
    """Nonzero (out-triple, value) pairs of R applied to |i, j, k>."""
    out = []
    for b in range(min(i + j, j + k) + 1):
        a, c = i + j - b, j + k - b
        val = r_element(a, b, c, i, j, k)
        if val:
            out.append(((a, b, c), val))
    return tuple(out)


@lru_cache(maxsize=None)
def r_row(a: int, b: int, c: int) -> tuple[tuple[tuple[int, int, int], Scalar], ...]:
    """Nonzero (in-triple, value) pairs of <a, b, c| R."""
    out = []
    for j in range(min(a + b, b + c) + 1):
        i, k = a + b - j, b + c - j
        val = r_element(a, b, c, i, j, k)
        if val:
            out.append(((i, j, k), val))
    return tuple(out)


def r_apply(state: VectorState, legs: Sequence[int]) -> VectorState:
    """Apply R to the tensor legs ``legs`` (0-based) of a state with flat tuple keys."""
    p, q, r = legs
    if len({p, q, r}) != 3:
        raise ValueError(f"R legs must be distinct, got {tuple(legs)}")
    out = VectorState()
    for key, coeff in state:
        if max(p, q, r) >= len(key):
            raise ValueError(f"state of arity {len(key)} has no leg {max(p, q, r)}")
        for (a, b, c), val in r_column(key[p], key[q], key[r]):
            new = list(key)
            new[p], new[q], new[r] = a, b, c
            out.add_term(tuple(new), val * coeff)
    return out


def r_apply_sequence(state: VectorState, leg_triples: Iterable[Sequence[int]]) -> VectorState:
    """Apply R on each triple of legs in turn (first triple acts first)."""
    for legs in leg_triples:
        state = r_apply(state, legs)
    return state


# -- boundary vectors -----------------------------------------------------------------


@dataclass(frozen=True)
class BoundaryVector:
    """``kind`` 1 has all levels z^m/(q;q)_m; kind 2 has level 2m with z^m/(q^4;q^4)_m."""

    kind: int
    side: str = "ket"
    cutoff: int = 8

    def __post_init__(self) -> None:
        if self.kind not in (1, 2):
            raise ValueError("boundary vector kind must be 1 or 2")
        if self.side not in ("ket", "bra"):
            raise ValueError("side must be 'ket' or 'bra'")


@lru_cache(maxsize=None)
def boundary_coefficient(kind: int, level: int) -> Scalar:
    """Coefficient of z^{level/kind} |level> in the boundary vector (zero off the lattice)."""
    if level < 0 or level % kind:
        return ZERO
    m = level // kind
    return ONE / qpoch_q(m, 2 if kind == 1 else 8)


def boundary_vector(spec: BoundaryVector):
    """Sparse state ``{(level,): coefficient series in z}`` up to the Fock cutoff.

    The bra mirrors the ket; pairing against a ket contributes (q^2;q^2)_m separately.
    """
    order = spec.cutoff // spec.kind
    out = VectorState()
    for level in range(0, spec.cutoff + 1, spec.kind):
        m = level // spec.kind
        out.add_term((level,), TruncatedSeries.monomial(m, boundary_coefficient(spec.kind, level),
                                                        order=order))
    return out
