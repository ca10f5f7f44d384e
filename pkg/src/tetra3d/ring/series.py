"""Truncated power series over :class:`Scalar` in one (z) or two (x, y) variables.

Coefficients are kept for monomials of total degree <= ``order``; everything
above is discarded by every operation, so results are exact up to that order.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .scalar import ONE, ZERO, Scalar

Exponent = tuple[int, ...]


class TruncatedSeries:
    __slots__ = ("variables", "order", "coeffs")

    def __init__(self, coeffs: Mapping[Exponent, object] | None = None,
                 order: int = 8, variables: Sequence[str] = ("z",)):
        if order < 0:
            raise ValueError("series order must be nonnegative")
        self.variables = tuple(variables)
        self.order = order
        nv = len(self.variables)
        clean: dict[Exponent, Scalar] = {}
        for e, c in (coeffs or {}).items():
            if isinstance(e, int):
                e = (e,)
            if len(e) != nv:
                raise ValueError(f"exponent {e} does not match variables {self.variables}")
            if min(e) < 0:
                raise ValueError(f"negative exponent {e} in power series")
            if sum(e) > order:
                continue
            c = Scalar.coerce(c)
            if c:
                clean[e] = c
        self.coeffs = clean

    @classmethod
    def _make(cls, coeffs: dict, order: int, variables: tuple) -> "TruncatedSeries":
        obj = object.__new__(cls)
        obj.coeffs, obj.order, obj.variables = coeffs, order, variables
        return obj

    # -- constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, c, order: int = 8, variables: Sequence[str] = ("z",)) -> "TruncatedSeries":
        return cls({(0,) * len(variables): c}, order, variables)

    @classmethod
    def monomial(cls, exps: Exponent | int, c=1, order: int = 8,
                 variables: Sequence[str] = ("z",)) -> "TruncatedSeries":
        if isinstance(exps, int):
            exps = (exps,)
        return cls({tuple(exps): c}, order, variables)

    @classmethod
    def from_poly(cls, coeffs: Iterable, order: int = 8) -> "TruncatedSeries":
        """Univariate series from the list ``[c0, c1, ...]``."""
        return cls({(k,): c for k, c in enumerate(coeffs)}, order)

    @classmethod
    def geometric(cls, ratio, order: int = 8) -> "TruncatedSeries":
        """``1/(1 - ratio*z)``."""
        ratio = Scalar.coerce(ratio)
        out, p = {}, ONE
        for m in range(order + 1):
            out[(m,)] = p
            p = p * ratio
        return cls(out, order)

    # -- basic queries --------------------------------------------------------

    def coefficient(self, exps: Exponent | int) -> Scalar:
        if isinstance(exps, int):
            exps = (exps,)
        return self.coeffs.get(tuple(exps), ZERO)

    def __getitem__(self, exps) -> Scalar:
        return self.coefficient(exps)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def constant_term(self) -> Scalar:
        return self.coefficient((0,) * len(self.variables))

    def truncate(self, order: int) -> "TruncatedSeries":
        order = min(order, self.order)
        return TruncatedSeries._make({e: c for e, c in self.coeffs.items() if sum(e) <= order},
                                     order, self.variables)

    def _check(self, other: "TruncatedSeries") -> int:
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch {self.variables} vs {other.variables}")
        return min(self.order, other.order)

    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order, self.variables)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other) -> "TruncatedSeries":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        order = self._check(other)
        out = {e: c for e, c in self.coeffs.items() if sum(e) <= order}
        for e, c in other.coeffs.items():
            if sum(e) > order:
                continue
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return TruncatedSeries._make(out, order, self.variables)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries._make({e: -c for e, c in self.coeffs.items()},
                                     self.order, self.variables)

    def __sub__(self, other) -> "TruncatedSeries":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._lift(other) + (-self)

    def scale(self, c) -> "TruncatedSeries":
        c = Scalar.coerce(c)
        if not c:
            return TruncatedSeries._make({}, self.order, self.variables)
        return TruncatedSeries._make({e: x * c for e, x in self.coeffs.items()},
                                     self.order, self.variables)

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        order = self._check(other)
        out: dict[Exponent, Scalar] = {}
        if len(self.variables) == 1:
            for (a,), x in self.coeffs.items():
                if a > order:
                    continue
                for (b,), y in other.coeffs.items():
                    if a + b > order:
                        continue
                    e = (a + b,)
                    s = out.get(e)
                    out[e] = x * y if s is None else s + x * y
        else:
            for ea, x in self.coeffs.items():
                da = sum(ea)
                if da > order:
                    continue
                for eb, y in other.coeffs.items():
                    if da + sum(eb) > order:
                        continue
                    e = tuple(i + j for i, j in zip(ea, eb))
                    s = out.get(e)
                    out[e] = x * y if s is None else s + x * y
        return TruncatedSeries._make({e: c for e, c in out.items() if c}, order, self.variables)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        c0 = self.constant_term()
        if not c0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = c0.inverse()
        order = self.order
        if len(self.variables) == 1:
            b = [self.coefficient(k) for k in range(order + 1)]
            a = [inv0]
            for m in range(1, order + 1):
                acc = ZERO
                for k in range(1, m + 1):
                    if b[k]:
                        acc = acc + b[k] * a[m - k]
                a.append(-acc * inv0)
            return TruncatedSeries({(k,): c for k, c in enumerate(a)}, order, self.variables)
        # 1/(c0 (1 + u)) = inv0 * sum_k (-u)^k with u of positive order
        zero = (0,) * len(self.variables)
        u = TruncatedSeries._make({e: c * inv0 for e, c in self.coeffs.items() if e != zero},
                                  order, self.variables)
        term = TruncatedSeries.constant(ONE, order, self.variables)
        acc = term
        for _ in range(order):
            term = term * (-u)
            if term.is_zero():
                break
            acc = acc + term
        return acc.scale(inv0)

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        try:
            return self.scale(Scalar.coerce(other).inverse())
        except TypeError:
            return NotImplemented

    def __rtruediv__(self, other) -> "TruncatedSeries":
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncatedSeries.constant(ONE, self.order, self.variables)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- substitutions ----------------------------------------------------------

    def shift(self, exps: Exponent | int) -> "TruncatedSeries":
        """Multiply by a monomial, truncating at the same order."""
        if isinstance(exps, int):
            exps = (exps,)
        out = {}
        for e, c in self.coeffs.items():
            ne = tuple(i + j for i, j in zip(e, exps))
            if min(ne) < 0:
                raise ValueError("shift produced a negative exponent")
            if sum(ne) <= self.order:
                out[ne] = c
        return TruncatedSeries._make(out, self.order, self.variables)

    def substitute_power(self, k: int, order: int | None = None) -> "TruncatedSeries":
        """Univariate z -> z**k."""
        if len(self.variables) != 1 or k < 1:
            raise ValueError("substitute_power needs a univariate series and k >= 1")
        order = self.order * k if order is None else order
        return TruncatedSeries({(e[0] * k,): c for e, c in self.coeffs.items()}, order, self.variables)

    def lift(self, target: str, order: int | None = None) -> "TruncatedSeries":
        """Embed a z-series into (x, y): ``target`` is 'x', 'y' or 'xy' (z -> x*y)."""
        if len(self.variables) != 1:
            raise ValueError("lift needs a univariate series")
        order = self.order if order is None else order
        pick = {"x": lambda m: (m, 0), "y": lambda m: (0, m), "xy": lambda m: (m, m)}[target]
        return TruncatedSeries({pick(e[0]): c for e, c in self.coeffs.items()}, order, ("x", "y"))

    # -- comparison & io --------------------------------------------------------

    def agrees(self, other: "TruncatedSeries", order: int | None = None) -> bool:
        """Coefficientwise equality up to ``order`` (default: the common order)."""
        other = self._lift(other)
        limit = self._check(other) if order is None else order
        keys = {e for e in self.coeffs if sum(e) <= limit} | {e for e in other.coeffs if sum(e) <= limit}
        return all(self.coefficient(e) == other.coefficient(e) for e in keys)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.variables == other.variables and self.order == other.order \
                and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.variables, self.order, frozenset(self.coeffs.items())))

    def items(self):
        return sorted(self.coeffs.items())

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "order": self.order,
            "coeffs": [{"exp": list(e), "value": c.to_json()} for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "TruncatedSeries":
        return cls({tuple(t["exp"]): Scalar.from_json(t["value"]) for t in data["coeffs"]},
                   data["order"], data["variables"])

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"TruncatedSeries(0, order={self.order})"
        parts = []
        for e, c in self.items():
            mono = "*".join(f"{v}^{k}" for v, k in zip(self.variables, e) if k)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) + f" + O(deg {self.order + 1})"


def qpoch_infinite_series(prefactor, zpower: int, base_exponent: int, order: int = 8,
                          variables: Sequence[str] = ("z",)) -> TruncatedSeries:
    """Euler expansion of ``(c * z**d; q**e)_inf`` truncated at ``order``.

    ``(c z^d; p)_inf = sum_m (-1)^m p^{m(m-1)/2} c^m z^{dm} / (p; p)_m`` with
    ``p = q**e``; ``base_exponent`` is e (a power of q, not of v).
    """
    if base_exponent < 1:
        raise ValueError("base exponent must be >= 1")
    if zpower < 1:
        raise ValueError("z power must be >= 1")
    c = Scalar.coerce(prefactor)
    p = Scalar.qpow(base_exponent)
    out: dict[Exponent, Scalar] = {}
    cm, poch = ONE, ONE
    m = 0
    while zpower * m <= order:
        sign = -1 if m % 2 else 1
        coeff = Scalar.qpow(base_exponent * m * (m - 1) // 2) * cm * sign / poch
        out[(zpower * m,)] = coeff
        m += 1
        cm = cm * c
        poch = poch * (ONE - p ** m)
    return TruncatedSeries(out, order, variables)
