"""Exact scalars in the fraction field of Q(i)[v, 1/v], with v*v = q.

A :class:`Scalar` stores ``v**sh * (re + i*im) / den`` where ``re``, ``im``
and ``den`` are polynomials in ``v`` with rational coefficients (flint
``fmpq_poly``).  The canonical form is

* ``re`` and ``im`` are not both divisible by ``v`` (powers of v live in ``sh``),
* ``den`` is real, monic, has nonzero constant term, and is the *smallest*
  real denominator: ``gcd(re, im, den) == 1`` over Q[v],
* ``den`` equal to 1 is stored as ``None``.

Since every element of the field can be written with a real denominator
(multiply by the Galois conjugate i -> -i) this form is unique, so equality is
structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from flint import fmpq, fmpq_poly

from .gaussian import GaussianRational, format_rational

_ZERO_POLY = fmpq_poly()
_ONE_POLY = fmpq_poly([1])


def _valuation(p: fmpq_poly) -> int:
    k = 0
    while p[k] == 0:
        k += 1
    return k


class LaurentPoly:
    """A Laurent polynomial ``v**sh * (re + i*im)`` over Q(i).

    Mostly a read-only view used for numerators/denominators of :class:`Scalar`
    and for serialization; arithmetic goes through :class:`Scalar`.
    """

    __slots__ = ("sh", "re", "im")

    def __init__(self, sh: int = 0, re: fmpq_poly = _ZERO_POLY, im: fmpq_poly = _ZERO_POLY):
        if re.is_zero() and im.is_zero():
            sh = 0
        elif re[0] == 0 and im[0] == 0:
            k = min(_valuation(p) for p in (re, im) if not p.is_zero())
            re, im, sh = re.right_shift(k), im.right_shift(k), sh + k
        self.sh, self.re, self.im = sh, re, im

    @classmethod
    def from_terms(cls, terms: Mapping[int, object]) -> "LaurentPoly":
        terms = {e: GaussianRational.coerce(c) for e, c in terms.items()}
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo = min(terms)
        hi = max(terms)
        re = [fmpq(0)] * (hi - lo + 1)
        im = [fmpq(0)] * (hi - lo + 1)
        for e, c in terms.items():
            re[e - lo] = fmpq(c.re.numerator, c.re.denominator)
            im[e - lo] = fmpq(c.im.numerator, c.im.denominator)
        return cls(lo, fmpq_poly(re), fmpq_poly(im))

    def terms(self) -> dict[int, GaussianRational]:
        out: dict[int, GaussianRational] = {}
        n = max(self.re.length(), self.im.length())
        for k in range(n):
            c = GaussianRational(self.re[k], self.im[k])
            if c:
                out[self.sh + k] = c
        return out

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def degree_range(self) -> tuple[int, int]:
        t = self.terms()
        if not t:
            raise ValueError("zero Laurent polynomial has no degree range")
        return min(t), max(t)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.sh, self.re, self.im) == (other.sh, other.re, other.im)

    def __hash__(self) -> int:
        return hash((self.sh, str(self.re), str(self.im)))

    def to_json(self) -> dict[str, list[str]]:
        return {str(e): c.to_pair() for e, c in sorted(self.terms().items())}

    @classmethod
    def from_json(cls, data: Mapping[str, Iterable[str]]) -> "LaurentPoly":
        return cls.from_terms({int(e): GaussianRational.from_pair(p) for e, p in data.items()})

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms()!r})"


class Scalar:
    """Element of Q(i)(v) in canonical form; immutable and hashable."""

    __slots__ = ("re", "im", "den", "sh", "_hash")

    # -- construction -----------------------------------------------------------

    @classmethod
    def _raw(cls, re, im, den, sh) -> "Scalar":
        obj = object.__new__(cls)
        obj.re, obj.im, obj.den, obj.sh, obj._hash = re, im, den, sh, None
        return obj

    @classmethod
    def _canon(cls, re: fmpq_poly, im: fmpq_poly, den, sh: int) -> "Scalar":
        if re.is_zero() and im.is_zero():
            return ZERO
        if re[0] == 0 and im[0] == 0:
            k = min(_valuation(p) for p in (re, im) if not p.is_zero())
            re, im, sh = re.right_shift(k), im.right_shift(k), sh + k
        if den is not None:
            if den.is_zero():
                raise ZeroDivisionError("zero denominator")
            if den[0] == 0:
                k = _valuation(den)
                den, sh = den.right_shift(k), sh - k
            if den.degree() > 0:
                g = re.gcd(den) if im.is_zero() else re.gcd(im).gcd(den)
                if g.degree() > 0:
                    re = re / g
                    if not im.is_zero():
                        im = im / g
                    den = den / g
            lc = den.leading_coefficient()
            if den.degree() == 0:
                if lc != 1:
                    inv = 1 / lc
                    re, im = re * inv, im * inv
                den = None
            elif lc != 1:
                inv = 1 / lc
                re, im, den = re * inv, im * inv, den * inv
        return cls._raw(re, im, den, sh)

    def __new__(cls, value=0):
        return cls.coerce(value)

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            if x == 0:
                return ZERO
            return cls._raw(fmpq_poly([x]), _ZERO_POLY, None, 0)
        if isinstance(x, (Fraction, fmpq)):
            if x == 0:
                return ZERO
            if isinstance(x, Fraction):
                x = fmpq(x.numerator, x.denominator)
            return cls._raw(fmpq_poly([x]), _ZERO_POLY, None, 0)
        if isinstance(x, (GaussianRational, complex)):
            g = GaussianRational.coerce(x)
            return cls._canon(fmpq_poly([fmpq(g.re.numerator, g.re.denominator)]),
                              fmpq_poly([fmpq(g.im.numerator, g.im.denominator)]), None, 0)
        if isinstance(x, LaurentPoly):
            return cls._canon(x.re, x.im, None, x.sh)
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    @classmethod
    def from_laurent(cls, num: LaurentPoly, den: LaurentPoly | None = None) -> "Scalar":
        a = cls.coerce(num)
        return a if den is None else a / cls.coerce(den)

    @classmethod
    def from_v_terms(cls, terms: Mapping[int, object]) -> "Scalar":
        """Build from ``{exponent of v: coefficient}``."""
        return cls.coerce(LaurentPoly.from_terms(terms))

    @classmethod
    def from_q_terms(cls, terms: Mapping[int, object]) -> "Scalar":
        """Build from ``{exponent of q: coefficient}`` (integer exponents)."""
        return cls.from_v_terms({2 * e: c for e, c in terms.items()})

    @staticmethod
    def vpow(e: int) -> "Scalar":
        return _vpow(e)

    @staticmethod
    def qpow(e: int) -> "Scalar":
        return _vpow(2 * e)

    # -- views ------------------------------------------------------------------

    @property
    def num(self) -> LaurentPoly:
        return LaurentPoly(self.sh, self.re, self.im)

    @property
    def denom(self) -> LaurentPoly:
        return LaurentPoly(0, _ONE_POLY if self.den is None else self.den, _ZERO_POLY)

    def is_zero(self) -> bool:
        return self is ZERO or (self.re.is_zero() and self.im.is_zero())

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def is_laurent(self) -> bool:
        return self.den is None

    def normalize(self) -> "Scalar":
        """Re-run canonicalization (idempotent on canonical input)."""
        return Scalar._canon(self.re, self.im, self.den, self.sh)

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        sh = min(self.sh, other.sh)
        ar, ai = self.re, self.im
        br, bi = other.re, other.im
        if self.sh != sh:
            d = self.sh - sh
            ar, ai = ar.left_shift(d), ai.left_shift(d)
        if other.sh != sh:
            d = other.sh - sh
            br, bi = br.left_shift(d), bi.left_shift(d)
        da, db = self.den, other.den
        if da is None and db is None:
            return Scalar._canon(ar + br, ai + bi, None, sh)
        if da is not None and db is not None and da == db:
            return Scalar._canon(ar + br, ai + bi, da, sh)
        if da is None:
            return Scalar._canon(ar * db + br, ai * db + bi, db, sh)
        if db is None:
            return Scalar._canon(ar + br * da, ai + bi * da, da, sh)
        g = da.gcd(db)
        if g.degree() > 0:
            fa, fb = db / g, da / g
            return Scalar._canon(ar * fa + br * fb, ai * fa + bi * fb, da * fa, sh)
        return Scalar._canon(ar * db + br * da, ai * db + bi * da, da * db, sh)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        if self.is_zero():
            return self
        return Scalar._raw(-self.re, -self.im, self.den, self.sh)

    def __sub__(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        return Scalar.coerce(other) + (-self)

    def __mul__(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        ar, ai, br, bi = self.re, self.im, other.re, other.im
        if ai.is_zero():
            if bi.is_zero():
                re, im = ar * br, _ZERO_POLY
            else:
                re, im = ar * br, ar * bi
        elif bi.is_zero():
            re, im = ar * br, ai * br
        else:
            re, im = ar * br - ai * bi, ar * bi + ai * br
        sh = self.sh + other.sh
        da, db = self.den, other.den
        if da is None and db is None:
            # Q(i) has no zero divisors, so the constant term stays nonzero.
            return Scalar._raw(re, im, None, sh)
        if da is None:
            den = db
        elif db is None:
            den = da
        else:
            den = da * db
        return Scalar._canon(re, im, den, sh)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero Scalar")
        re, im = self.re, self.im
        den = self.den if self.den is not None else _ONE_POLY
        if im.is_zero():
            return Scalar._canon(den, _ZERO_POLY, re, -self.sh)
        nrm = re * re + im * im
        return Scalar._canon(den * re, -(den * im), nrm, -self.sh)

    def __truediv__(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Scalar":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "Scalar":
        """Galois conjugate i -> -i (v is left fixed)."""
        return Scalar._raw(self.re, -self.im, self.den, self.sh)

    # -- comparison -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        if self.sh != other.sh or self.re != other.re or self.im != other.im:
            return False
        if self.den is None or other.den is None:
            return self.den is None and other.den is None
        return self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.sh, str(self.re), str(self.im), str(self.den)))
        return self._hash

    # -- numerics & display -----------------------------------------------------

    def evaluate(self, v: complex) -> complex:
        """Numerical value at a given v (debugging aid only)."""

        def ev(p: fmpq_poly) -> complex:
            acc = 0j
            for c in reversed(p.coeffs()):
                acc = acc * v + float(Fraction(int(c.p), int(c.q)))
            return acc

        den = 1 if self.den is None else ev(self.den)
        return (v ** self.sh) * (ev(self.re) + 1j * ev(self.im)) / den

    def v_expansion(self, order: int) -> dict[int, GaussianRational]:
        """Power-series expansion in v, exact for exponents < ``sh + order``."""
        den = self.den if self.den is not None else _ONE_POLY
        d0 = den[0]
        inv = [fmpq(0)] * order
        inv[0] = 1 / d0
        for m in range(1, order):
            acc = fmpq(0)
            for k in range(1, min(m, den.degree()) + 1):
                acc += den[k] * inv[m - k]
            inv[m] = -acc / d0
        invp = fmpq_poly(inv)
        re = (self.re * invp).truncate(order) if order > 0 else _ZERO_POLY
        im = (self.im * invp).truncate(order) if order > 0 else _ZERO_POLY
        out = {}
        for k in range(order):
            c = GaussianRational(re[k], im[k])
            if c:
                out[self.sh + k] = c
        return out

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.denom.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "Scalar":
        return cls.from_laurent(LaurentPoly.from_json(data["num"]),
                                LaurentPoly.from_json(data["den"]))

    def __str__(self) -> str:
        num = _fmt_laurent(self.num.terms())
        if self.den is None:
            return num
        return f"({num})/({_fmt_laurent(self.denom.terms())})"

    def __repr__(self) -> str:
        return f"Scalar({self})"


def _fmt_coeff(c: GaussianRational) -> str:
    if c.im == 0:
        return str(c.re)
    if c.re == 0:
        return f"{c.im}*i"
    return f"({c.re}+{c.im}*i)"


def _fmt_laurent(terms: Mapping[int, GaussianRational]) -> str:
    if not terms:
        return "0"
    parts = []
    for e, c in sorted(terms.items()):
        if e == 0:
            parts.append(_fmt_coeff(c))
            continue
        mono = f"q^{e // 2}" if e % 2 == 0 else f"q^({e}/2)"
        if e == 2:
            mono = "q"
        if c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append(f"-{mono}")
        else:
            parts.append(f"{_fmt_coeff(c)}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


ZERO = Scalar._raw(_ZERO_POLY, _ZERO_POLY, None, 0)
ONE = Scalar._raw(_ONE_POLY, _ZERO_POLY, None, 0)
I = Scalar._raw(_ZERO_POLY, _ONE_POLY, None, 0)


@lru_cache(maxsize=None)
def _vpow(e: int) -> Scalar:
    return Scalar._raw(_ONE_POLY, _ZERO_POLY, None, e)


V = _vpow(1)
Q = _vpow(2)
KAPPA = (Q + 1) / (Q - 1)

ScalarLike = Union[Scalar, int, Fraction, GaussianRational]

__all__ = ["Scalar", "LaurentPoly", "ZERO", "ONE", "I", "V", "Q", "KAPPA", "format_rational"]
