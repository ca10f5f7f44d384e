"""Independent reference computations used by the tests.

Everything here evaluates at a fixed rational point v = q^{1/2} with plain
Fractions, straight from the defining sums, so it shares no code with the
exact symbolic implementation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

V0 = Fraction(1, 3)
Q0 = V0 * V0


class G:
    """Gaussian rational re + i im."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re, self.im = Fraction(re), Fraction(im)

    def __add__(self, o):
        o = _g(o)
        return G(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = _g(o)
        return G(self.re - o.re, self.im - o.im)

    def __mul__(self, o):
        o = _g(o)
        return G(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = _g(o)
        n = o.re * o.re + o.im * o.im
        return self * G(o.re / n, -o.im / n)

    def __eq__(self, o):
        o = _g(o)
        return self.re == o.re and self.im == o.im

    def __repr__(self):
        return f"G({self.re}, {self.im})"


def _g(x) -> G:
    return x if isinstance(x, G) else G(x)


def evaluate(scalar, v: Fraction = V0) -> G:
    """Exact value of a Scalar at v."""
    def lp(poly) -> G:
        acc = G()
        for e, c in poly.terms().items():
            acc = acc + G(c.re, c.im) * v ** e
        return acc
    return lp(scalar.num) / lp(scalar.denom)


def poch(x: Fraction, base: Fraction, m: int) -> Fraction:
    out = Fraction(1)
    for k in range(m):
        out *= 1 - x * base ** k
    return out


def qbinom(m: int, k: int, p: Fraction) -> Fraction:
    if k < 0 or k > m:
        return Fraction(0)
    return poch(p, p, m) / (poch(p, p, k) * poch(p, p, m - k))


def r_oracle(a, b, c, i, j, k, q: Fraction = Q0) -> Fraction:
    """The defining double sum of the 3d R element at a numerical q."""
    if min(a, b, c, i, j, k) < 0 or a + b != i + j or b + c != j + k:
        return Fraction(0)
    q2 = q * q
    total = Fraction(0)
    for lam in range(b + 1):
        mu = b - lam
        if mu > i or lam > j:
            continue
        total += (-1) ** lam * q ** (i * (c - j) + (k + 1) * lam + mu * (mu - k)) \
            * poch(q2, q2, c + mu) / poch(q2, q2, c) * qbinom(i, mu, q2) * qbinom(j, lam, q2)
    return total


def s_raw_coefficient(s, t, a, b, i, j, c0, q: Fraction = Q0) -> Fraction:
    """z^{c0} coefficient of the unnormalized S^{s,t} element by brute force over c_1..c_n."""
    n = len(a)
    bound = s * c0 + sum(i) + sum(j) + 2
    total = Fraction(0)
    for cs in product(range(bound + 1), repeat=n):
        cn = cs[-1]
        uppers = (s * c0,) + cs[:-1]
        lowers = cs[:-1] + (t * cn,)
        term = poch(q ** 2, q ** 2, s * c0) / (poch(q ** (s * s), q ** (s * s), c0)
                                              * poch(q ** (t * t), q ** (t * t), cn))
        for r in range(n):
            term *= r_oracle(a[r], b[r], uppers[r], i[r], j[r], lowers[r], q)
            if not term:
                break
        total += term
    return total


def str_coefficient(a, b, i, j, c0, q: Fraction = Q0) -> Fraction:
    """z^{c0} coefficient of S^tr by brute force over the closed chain."""
    n = len(a)
    bound = c0 + sum(i) + sum(j) + 2
    total = Fraction(0)
    for cs in product(range(bound + 1), repeat=n - 1):
        chain = (c0,) + cs + (c0,)
        term = Fraction(1)
        for r in range(n):
            term *= r_oracle(a[r], b[r], chain[r], i[r], j[r], chain[r + 1], q)
            if not term:
                break
        total += term
    return total
