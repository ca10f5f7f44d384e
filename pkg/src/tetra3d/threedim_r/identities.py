"""Linear recursions and quadratic identities satisfied by the elements of R.

Every relation is written as a list of ``(coefficient, element)`` terms whose
sum must vanish.  Shifted indices may leave the nonnegative range; see
:func:`element_function` for how such elements are valued.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Sequence

from ..reports import Report
from ..ring import ONE, ZERO, Scalar, qnum
from .element import r_element, r_element_extended


def _q(e: int) -> Scalar:
    return Scalar.qpow(e)


def _om(e: int) -> Scalar:
    """1 - q^e."""
    return ONE - Scalar.qpow(e)


def _op(e: int) -> Scalar:
    """1 + q^e."""
    return ONE + Scalar.qpow(e)


ELEMENT_CONVENTIONS = ("formula", "zero")


def element_function(convention: str = "formula") -> Callable[..., Scalar]:
    """Element lookup used inside relations.

    ``formula`` evaluates the defining sum at any integer indices (for negative
    b, i or j the sum is empty or its binomials vanish); ``zero`` sets every
    element with a negative index to zero.
    """
    if convention == "formula":
        return r_element_extended
    if convention == "zero":
        return r_element
    raise ValueError(f"unknown element convention {convention!r}")


# -- first family: R o pi'_121 = pi_212 o R ------------------------------------------------

def _t11(R, a, b, c, i, j, k):
    return [
        (_q(i + k + 1) * _om(2 * j), R(a, b, c, i, j - 1, k)),
        (-_om(2 * i) * _om(2 * k), R(a, b, c, i - 1, j, k - 1)),
        (_om(2 * b + 2), R(a, b + 1, c, i, j, k)),
    ]


def _t12(R, a, b, c, i, j, k):
    return [
        (_q(k) * _om(2 * j), R(a, b, c, i + 1, j - 1, k)),
        (_q(i) * _om(2 * k), R(a, b, c, i, j, k - 1)),
        (-_q(b) * _om(2 * c + 2), R(a, b, c + 1, i, j, k)),
    ]


def _t21(R, a, b, c, i, j, k):
    return [
        (_q(i) * _om(2 * j), R(a, b, c, i, j - 1, k + 1)),
        (_q(k) * _om(2 * i), R(a, b, c, i - 1, j, k)),
        (-_q(b) * _om(2 * a + 2), R(a + 1, b, c, i, j, k)),
    ]


def _t22(R, a, b, c, i, j, k):
    return [
        (_q(1) * (_q(a + c) - _q(i + k)), R(a, b, c, i, j, k)),
        (_om(2 * j), R(a, b, c, i + 1, j - 1, k + 1)),
        (-_om(2 * a + 2) * _om(2 * c + 2), R(a + 1, b - 1, c + 1, i, j, k)),
    ]


def _t23(R, a, b, c, i, j, k):
    return [
        (_q(j), R(a, b, c, i, j, k + 1)),
        (-_q(a), R(a, b, c - 1, i, j, k)),
        (-_q(c) * _om(2 * a + 2), R(a + 1, b - 1, c, i, j, k)),
    ]


def _t32(R, a, b, c, i, j, k):
    return [
        (_q(c), R(a - 1, b, c, i, j, k)),
        (-_q(j), R(a, b, c, i + 1, j, k)),
        (_q(a) * _om(2 * c + 2), R(a, b - 1, c + 1, i, j, k)),
    ]


def _t33(R, a, b, c, i, j, k):
    return [
        (_q(a + c + 1), R(a, b - 1, c, i, j, k)),
        (-ONE, R(a - 1, b, c - 1, i, j, k)),
        (ONE, R(a, b, c, i, j + 1, k)),
    ]


# -- second family: pi'_121 o R = R o pi_212 -----------------------------------------------

def _ti11(R, a, b, c, i, j, k):
    return [
        (_q(a + c + 1) * _om(2 * b + 2), R(a, b + 1, c, i, j, k)),
        (_om(2 * j), R(a, b, c, i, j - 1, k)),
        (-_om(2 * a + 2) * _om(2 * c + 2), R(a + 1, b, c + 1, i, j, k)),
    ]


def _ti12(R, a, b, c, i, j, k):
    return [
        (_q(j) * _om(2 * k), R(a, b, c, i, j, k - 1)),
        (-_q(c) * _om(2 * b + 2), R(a - 1, b + 1, c, i, j, k)),
        (-_q(a) * _om(2 * c + 2), R(a, b, c + 1, i, j, k)),
    ]


def _ti21(R, a, b, c, i, j, k):
    return [
        (_q(j) * _om(2 * i), R(a, b, c, i - 1, j, k)),
        (-_q(a) * _om(2 * b + 2), R(a, b + 1, c - 1, i, j, k)),
        (-_q(c) * _om(2 * a + 2), R(a + 1, b, c, i, j, k)),
    ]


def _ti22(R, a, b, c, i, j, k):
    return [
        (_om(2 * b + 2), R(a - 1, b + 1, c - 1, i, j, k)),
        (-_om(2 * i) * _om(2 * k), R(a, b, c, i - 1, j + 1, k - 1)),
        (-_q(1) * (_q(a + c) - _q(i + k)), R(a, b, c, i, j, k)),
    ]


def _ti23(R, a, b, c, i, j, k):
    return [
        (_q(i), R(a, b, c, i, j, k + 1)),
        (-_q(b), R(a, b, c - 1, i, j, k)),
        (_q(k) * _om(2 * i), R(a, b, c, i - 1, j + 1, k)),
    ]


def _ti32(R, a, b, c, i, j, k):
    return [
        (_q(b), R(a - 1, b, c, i, j, k)),
        (-_q(i) * _om(2 * k), R(a, b, c, i, j + 1, k - 1)),
        (-_q(k), R(a, b, c, i + 1, j, k)),
    ]


def _ti33(R, a, b, c, i, j, k):
    return [
        (_q(i + k + 1), R(a, b, c, i, j + 1, k)),
        (ONE, R(a, b - 1, c, i, j, k)),
        (-ONE, R(a, b, c, i + 1, j, k + 1)),
    ]


RECURSIONS: dict[str, Callable] = {
    "t11": _t11, "t12": _t12, "t21": _t21, "t22": _t22, "t23": _t23, "t32": _t32, "t33": _t33,
    "ti11": _ti11, "ti12": _ti12, "ti21": _ti21, "ti22": _ti22, "ti23": _ti23, "ti32": _ti32,
    "ti33": _ti33,
}


# -- linear lemma identities -------------------------------------------------------------

def _li(R, a, b, c, i, j, k):
    return [
        (_om(k), R(a, b - 1, c, i, j, k - 1)),
        (_q(b), R(a - 1, b, c, i, j, k)),
        (-ONE, R(a, b, c, i + 1, j, k)),
        (-_q(i) * _om(k), R(a, b, c, i, j + 1, k - 1)),
    ]


def _ask(R, a, b, c, i, j, k):
    return [
        (qnum(b + 1), R(a, b + 1, c, i, j, k)),
        (_q(-b) * _op(c + 1) * qnum(a + 1), R(a + 1, b, c + 1, i, j, k)),
        (-_op(c + 1) * qnum(i), R(a, b, c + 1, i - 1, j, k)),
        (-_q(-i) * qnum(j), R(a, b, c, i, j - 1, k)),
    ]


def _ngm(R, a, b, c, i, j, k):
    return [
        (_om(2 * k), R(a, b - 2, c, i, j, k - 2)),
        (_q(2 * b), R(a - 2, b, c, i, j, k)),
        (-ONE, R(a, b, c, i + 2, j, k)),
        (-_q(2 * i) * _om(2 * k), R(a, b, c, i, j + 2, k - 2)),
    ]


def _ymi(R, a, b, c, i, j, k):
    return [
        (qnum(b + 2) * qnum(b + 1), R(a, b + 2, c, i, j, k)),
        (_q(-2 * b) * _om(2 * c + 2) * qnum(a + 2) * qnum(a + 1), R(a + 2, b, c + 2, i, j, k)),
        (-_om(2 * c + 2) * qnum(i) * qnum(i - 1), R(a, b, c + 2, i - 2, j, k)),
        (-_q(-2 * i) * qnum(j) * qnum(j - 1), R(a, b, c, i, j - 2, k)),
    ]


def _hmk(R, a, b, c, i, j, k):
    return [
        (_q(a + 1) * _op(c), R(a, b - 1, c, i, j, k)),
        (-ONE, R(a - 1, b, c - 1, i, j, k)),
        (-_q(j + 1), R(a, b, c - 1, i + 1, j, k)),
        (_op(c), R(a, b, c, i, j + 1, k)),
    ]


def _hnt(R, a, b, c, i, j, k):
    return [
        (ONE, R(a - 2, b, c, i, j, k)),
        (_q(2 * a + 2) * _om(2 * c + 2), R(a, b - 2, c + 2, i, j, k)),
        (-_om(2 * c + 2), R(a, b, c + 2, i, j + 2, k)),
        (-_q(2 * j + 2), R(a, b, c, i + 2, j, k)),
    ]


LINEAR_LEMMAS: dict[str, Callable] = {
    "Li": _li, "Ask": _ask, "Ngm": _ngm, "Ymi": _ymi, "hmk": _hmk, "hnt": _hnt,
}


# -- quadratic identities -------------------------------------------------------------------
# The second tuple (a', b', i', j', k') has no own third upper index: it is
# linked to the lower k of the first factor.

def _air(R, a, b, c, i, j, k, a2, b2, i2, j2, k2):
    return [
        (qnum(b2 + 1), R(a, b - 1, c, i, j, k - 1) * R(a2, b2 + 1, k - 1, i2, j2, k2)),
        (_q(b - b2) * qnum(a2 + 1), R(a - 1, b, c, i, j, k) * R(a2 + 1, b2, k, i2, j2, k2)),
        (-qnum(i2), R(a, b, c, i + 1, j, k) * R(a2, b2, k, i2 - 1, j2, k2)),
        (-_q(i - i2) * qnum(j2), R(a, b, c, i, j + 1, k - 1) * R(a2, b2, k - 1, i2, j2 - 1, k2)),
    ]


def _szk(R, a, b, c, i, j, k, a2, b2, i2, j2, k2):
    return [
        (qnum(a + 1), R(a + 1, b, c, i, j, k) * R(a2 - 1, b2, k, i2, j2, k2)),
        (_q(a2 - a) * qnum(b + 1), R(a, b + 1, c, i, j, k + 1) * R(a2, b2 - 1, k + 1, i2, j2, k2)),
        (-qnum(j), R(a, b, c, i, j - 1, k + 1) * R(a2, b2, k + 1, i2, j2 + 1, k2)),
        (-_q(j2 - j) * qnum(i), R(a, b, c, i - 1, j, k) * R(a2, b2, k, i2 + 1, j2, k2)),
    ]


QUADRATIC_LEMMAS: dict[str, Callable] = {"air": _air, "szk": _szk}

LEMMAS = tuple(LINEAR_LEMMAS) + tuple(QUADRATIC_LEMMAS)


def relation_terms(rel_id: str, idx: Sequence[int],
                   convention: str = "formula") -> list[tuple[Scalar, Scalar]]:
    """Terms ``(coefficient, element value)`` of a named relation at ``idx``."""
    if rel_id in RECURSIONS:
        fn, arity = RECURSIONS[rel_id], 6
    elif rel_id in LINEAR_LEMMAS:
        fn, arity = LINEAR_LEMMAS[rel_id], 6
    elif rel_id in QUADRATIC_LEMMAS:
        fn, arity = QUADRATIC_LEMMAS[rel_id], 11
    else:
        raise ValueError(f"unknown relation id {rel_id!r}")
    if len(idx) != arity:
        raise ValueError(f"relation {rel_id} takes {arity} indices, got {len(idx)}")
    return fn(element_function(convention), *idx)


def relation_residual(rel_id: str, idx: Sequence[int], convention: str = "formula") -> Scalar:
    total = ZERO
    for coeff, value in relation_terms(rel_id, idx, convention):
        if value:
            total = total + coeff * value
    return total


def check_recursion(rel_id: str, idx: Sequence[int], convention: str = "formula") -> Report:
    if rel_id not in RECURSIONS:
        raise ValueError(f"unknown recursion id {rel_id!r}")
    rep = Report(f"recursion-{rel_id}", {"indices": list(idx), "convention": convention})
    res = relation_residual(rel_id, idx, convention)
    rep.record(not res, tuple(idx), res, ZERO)
    return rep


def check_lemma_identities(rel_id: str, indices, convention: str = "formula") -> Report:
    """Check a lemma identity on a list of index tuples."""
    if rel_id not in LINEAR_LEMMAS and rel_id not in QUADRATIC_LEMMAS:
        raise ValueError(f"unknown lemma id {rel_id!r}")
    rep = Report(f"lemma-{rel_id}", {"convention": convention})
    for idx in indices:
        res = relation_residual(rel_id, idx, convention)
        rep.record(not res, tuple(idx), res, ZERO)
    return rep


def sweep(rel_id: str, bound: int, convention: str = "formula") -> Report:
    """Check a relation at every index tuple with entries in 0..bound."""
    arity = 11 if rel_id in QUADRATIC_LEMMAS else 6
    if rel_id not in RECURSIONS and rel_id not in LINEAR_LEMMAS and rel_id not in QUADRATIC_LEMMAS:
        raise ValueError(f"unknown relation id {rel_id!r}")
    rep = Report(f"sweep-{rel_id}", {"bound": bound, "convention": convention})
    for idx in product(range(bound + 1), repeat=arity):
        res = relation_residual(rel_id, idx, convention)
        rep.record(not res, idx, res, ZERO)
    return rep
