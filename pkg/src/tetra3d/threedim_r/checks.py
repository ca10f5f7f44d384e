"""Exact checks of the basic properties of R: involution, symmetries, tetrahedron
equation and the boundary-vector eigen-relations."""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from ..fock import VectorState
from ..reports import Report
from ..ring import ZERO, qpoch_q
from .element import boundary_coefficient, r_apply, r_apply_sequence, r_column, r_element, r_row

# Legs (0-based) of R_{124}, R_{135}, R_{236}, R_{456} on F^(x)6.
R124, R135, R236, R456 = (0, 1, 3), (0, 2, 4), (1, 2, 5), (3, 4, 5)


def _poch2(m: int):
    return qpoch_q(m, 4)


def check_involution(bound: int) -> Report:
    """R(R|i,j,k>) = |i,j,k> for every index <= bound."""
    rep = Report("involution", {"bound": bound})
    for ijk in product(range(bound + 1), repeat=3):
        start = VectorState.basis(ijk)
        twice = r_apply(r_apply(start, (0, 1, 2)), (0, 1, 2))
        rep.record(twice == start, ijk, twice, start)
    return rep


def check_symmetries(bound: int) -> Report:
    """R^{abc}_{ijk} = R^{cba}_{kji} and the Pochhammer-weighted transpose symmetry."""
    rep = Report("symmetries", {"bound": bound})
    for a, b, c, i, j, k in product(range(bound + 1), repeat=6):
        lhs = r_element(a, b, c, i, j, k)
        rhs = r_element(c, b, a, k, j, i)
        rep.record(lhs == rhs, ("reverse", a, b, c, i, j, k), lhs, rhs)
        weight = _poch2(i) * _poch2(j) * _poch2(k) / (_poch2(a) * _poch2(b) * _poch2(c))
        rhs2 = weight * r_element(i, j, k, a, b, c)
        rep.record(lhs == rhs2, ("transpose", a, b, c, i, j, k), lhs, rhs2)
    return rep


def tetrahedron_sides(levels: Sequence[int]) -> tuple[VectorState, VectorState]:
    """Both sides of the tetrahedron equation applied to |levels> in F^(x)6."""
    if len(levels) != 6:
        raise ValueError("tetrahedron input needs six levels")
    start = VectorState.basis(tuple(levels))
    # R124 R135 R236 R456: the rightmost factor acts first.
    lhs = r_apply_sequence(start, (R456, R236, R135, R124))
    rhs = r_apply_sequence(start, (R124, R135, R236, R456))
    return lhs, rhs


def check_tetrahedron(inputs: Iterable[Sequence[int]] | None = None, max_level: int = 2) -> Report:
    """Tetrahedron equation on each input basis vector (default: all levels <= max_level)."""
    if inputs is None:
        inputs = product(range(max_level + 1), repeat=6)
    rep = Report("tetrahedron", {"max_level": max_level})
    for levels in inputs:
        lhs, rhs = tetrahedron_sides(levels)
        rep.record(lhs == rhs, tuple(levels), lhs, rhs)
    return rep


def boundary_eigen_residual(kind: int, side: str, component: Sequence[int]):
    """Component of R|chi> - |chi> (or <chi|R - <chi|) at the given triple.

    The component is the coefficient of a single monomial x^{a+b} y^{b+c}
    (in units of the boundary variable), so the residual is a scalar.
    """
    a, b, c = component
    if side == "ket":
        lhs = ZERO
        for (i, j, k), val in r_row(a, b, c):
            lhs = lhs + val * _ket_coeff(kind, i, j, k)
        rhs = _ket_coeff(kind, a, b, c)
        return lhs, rhs
    if side == "bra":
        i, j, k = component
        lhs = ZERO
        for (a2, b2, c2), val in r_column(i, j, k):
            lhs = lhs + _ket_coeff(kind, a2, b2, c2) * _paired(a2, b2, c2) * val
        rhs = _ket_coeff(kind, i, j, k) * _paired(i, j, k)
        return lhs, rhs
    raise ValueError("side must be 'ket' or 'bra'")


def _ket_coeff(kind: int, i: int, j: int, k: int):
    return boundary_coefficient(kind, i) * boundary_coefficient(kind, j) \
        * boundary_coefficient(kind, k)


def _paired(i: int, j: int, k: int):
    return _poch2(i) * _poch2(j) * _poch2(k)


def check_boundary_eigen(kind: int, side: str, degree: int) -> Report:
    """Boundary eigen-relation on all components (a, b, c) with a+b+c <= degree."""
    rep = Report("boundary", {"kind": kind, "side": side, "degree": degree})
    for comp in product(range(degree + 1), repeat=3):
        if sum(comp) > degree:
            continue
        lhs, rhs = boundary_eigen_residual(kind, side, comp)
        rep.record(lhs == rhs, comp, lhs, rhs)
    return rep
