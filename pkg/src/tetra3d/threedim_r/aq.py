"""Fundamental representations of the quantized coordinate ring A_q(sl_3) on F,
their tensor-cube actions, and the intertwining property of R.

Generators are the matrix entries t_{rs} (1 <= r, s <= 3).  A single-factor
action returns a list of ``(coefficient, new level)`` pairs.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from ..fock import VectorState
from ..reports import Report
from ..ring import ONE, Scalar
from .element import r_apply

Action = list[tuple[Scalar, int]]


def _k(m: int) -> Action:
    return [(Scalar.qpow(m), m)]


def _minus_q_k(m: int) -> Action:
    return [(-Scalar.qpow(m + 1), m)]


def _a_plus(m: int) -> Action:
    return [(ONE, m + 1)]


def _a_minus(m: int) -> Action:
    if m == 0:
        return []
    return [(ONE - Scalar.qpow(2 * m), m - 1)]


def _one(m: int) -> Action:
    return [(ONE, m)]


# pi_1(T) = [[a-, k, 0], [-q k, a+, 0], [0, 0, 1]]
_PI1 = {(1, 1): _a_minus, (1, 2): _k, (2, 1): _minus_q_k, (2, 2): _a_plus, (3, 3): _one}
# pi_2(T) = [[1, 0, 0], [0, a-, k], [0, -q k, a+]]
_PI2 = {(1, 1): _one, (2, 2): _a_minus, (2, 3): _k, (3, 2): _minus_q_k, (3, 3): _a_plus}


def _check_generator(r: int, s: int) -> None:
    if not (1 <= r <= 3 and 1 <= s <= 3):
        raise ValueError(f"invalid generator t_{r}{s}")


def fundamental_action(rep: int, r: int, s: int, m: int) -> Action:
    """pi_rep(t_rs)|m> for rep in {1, 2}."""
    _check_generator(r, s)
    table = {1: _PI1, 2: _PI2}.get(rep)
    if table is None:
        raise ValueError("representation must be 1 or 2")
    fn = table.get((r, s))
    return [] if fn is None else fn(m)


def tensor_action(reps: Sequence[int], r: int, s: int, state: VectorState) -> VectorState:
    """Action of t_rs through the iterated coproduct sum t_{rk} (x) t_{kl} (x) t_{ls} ...

    ``reps`` lists the representation (1 or 2) on each tensor factor.
    """
    _check_generator(r, s)
    n = len(reps)
    out = VectorState()
    for key, coeff in state:
        if len(key) != n:
            raise ValueError("state arity does not match the number of factors")
        for mids in product((1, 2, 3), repeat=n - 1):
            path = (r,) + mids + (s,)
            partial = [(coeff, ())]
            for f in range(n):
                acts = fundamental_action(reps[f], path[f], path[f + 1], key[f])
                if not acts:
                    partial = []
                    break
                partial = [(c * c2, lv + (m2,)) for c, lv in partial for c2, m2 in acts]
            for c, lv in partial:
                out.add_term(lv, c)
    return out


def aq_fundamental_action(rep: int | str, r: int, s: int, m: int | Sequence[int]) -> VectorState:
    """pi_1 / pi_2 on F, or pi_121 / pi_212 (given as '121', '212', ...) on F^(x)k."""
    if isinstance(m, int):
        m = (m,)
    reps = tuple(int(ch) for ch in str(rep))
    if len(reps) != len(m):
        raise ValueError("representation label and state arity differ")
    return tensor_action(reps, r, s, VectorState.basis(tuple(m)))


def _reverse(state: VectorState) -> VectorState:
    return VectorState({key[::-1]: c for key, c in state})


def intertwiner_sides(r: int, s: int, ijk: Sequence[int]) -> tuple[VectorState, VectorState]:
    """``R sigma pi_121(t_rs)|ijk>`` and ``pi_212(t_rs) R sigma |ijk>``."""
    start = VectorState.basis(tuple(ijk))
    lhs = r_apply(_reverse(tensor_action((1, 2, 1), r, s, start)), (0, 1, 2))
    rhs = tensor_action((2, 1, 2), r, s, r_apply(_reverse(start), (0, 1, 2)))
    return lhs, rhs


def check_aq_intertwiner(generators: Sequence[tuple[int, int]] | None = None,
                         degree: int = 3) -> Report:
    """Intertwining relation of R o sigma on all |ijk> with i+j+k <= degree."""
    if generators is None:
        generators = [(r, s) for r in (1, 2, 3) for s in (1, 2, 3)]
    rep = Report("intertwiner-aq", {"degree": degree,
                                    "generators": [f"t{r}{s}" for r, s in generators]})
    for r, s in generators:
        for ijk in product(range(degree + 1), repeat=3):
            if sum(ijk) > degree:
                continue
            lhs, rhs = intertwiner_sides(r, s, ijk)
            rep.record(lhs == rhs, (f"t{r}{s}",) + ijk, lhs, rhs)
    return rep

