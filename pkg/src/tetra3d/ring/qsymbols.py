"""q-numbers, q-factorials, q-binomials and finite q-Pochhammer symbols.

Integer-base variants are cached; ``base`` arguments are exponents of v, so
``base=2`` means q and ``base=4`` means q**2.
"""

from __future__ import annotations

from functools import lru_cache

from .scalar import ONE, ZERO, Scalar, _vpow


@lru_cache(maxsize=None)
def qnum(m: int, base: int = 2) -> Scalar:
    """Symmetric q-number ``[m] = (p**m - p**-m)/(p - p**-1)`` with ``p = v**base``.

    Defined for every integer m; ``[-m] = -[m]``.
    """
    if m == 0:
        return ZERO
    if m < 0:
        return -qnum(-m, base)
    # [m] = p^{1-m} + p^{3-m} + ... + p^{m-1}
    return Scalar.from_v_terms({base * (m - 1 - 2 * k): 1 for k in range(m)})


@lru_cache(maxsize=None)
def qfactorial(m: int, base: int = 2) -> Scalar:
    """``[m]! = [1][2]...[m]``."""
    if m < 0:
        raise ValueError(f"q-factorial of negative integer {m}")
    out = ONE
    for k in range(1, m + 1):
        out = out * qnum(k, base)
    return out


@lru_cache(maxsize=None)
def qbracket(m: int, k: int, base: int = 2) -> Scalar:
    """Symmetric q-binomial ``[m]!/([k]![m-k]!)``; zero unless 0 <= k <= m."""
    if k < 0 or k > m or m < 0:
        return ZERO
    return qfactorial(m, base) / (qfactorial(k, base) * qfactorial(m - k, base))


@lru_cache(maxsize=None)
def qpoch_q(m: int, base: int, shift: int = 0) -> Scalar:
    """``prod_{k=1}^{m} (1 - p**(k+shift))`` with ``p = v**base``; shift 0 gives (p;p)_m."""
    if m < 0:
        raise ValueError(f"Pochhammer symbol with negative length {m}")
    out = ONE
    for k in range(1, m + 1):
        out = out * (ONE - _vpow(base * (k + shift)))
    return out


def qpoch_ratio(hi: int, lo: int, base: int) -> Scalar:
    """``(p;p)_hi / (p;p)_lo`` for hi >= lo as the finite product over lo < k <= hi."""
    if hi < lo:
        raise ValueError("qpoch_ratio needs hi >= lo")
    return qpoch_q(hi - lo, base, lo)


def qpoch(z: Scalar, base: Scalar, m: int) -> Scalar:
    """Finite Pochhammer ``(z; base)_m = prod_{k=1}^{m} (1 - z*base**(k-1))``."""
    if m < 0:
        raise ValueError(f"Pochhammer symbol with negative length {m}")
    z = Scalar.coerce(z)
    base = Scalar.coerce(base)
    out, t = ONE, z
    for _ in range(m):
        out = out * (ONE - t)
        t = t * base
    return out


@lru_cache(maxsize=None)
def qbinomial(m: int, k: int, base: int = 2) -> Scalar:
    """Pochhammer-style binomial ``(p;p)_m/((p;p)_k (p;p)_{m-k})`` with p = v**base.

    Zero unless 0 <= k <= m.  With base=4 this is binom(m, k)_{q^2}.
    """
    if k < 0 or k > m or m < 0:
        return ZERO
    return qpoch_ratio(m, m - k, base) / qpoch_q(k, base)


def q_symbol(kind: str, *args: int, base: int = 2) -> Scalar:
    """Dispatch by name: ``qnum``, ``qfact``, ``qbinom``, ``poch``, ``bracket``.

    ``poch`` takes ``(m,)`` and returns ``(p;p)_m`` with ``p = v**base``.
    """
    if kind == "qnum":
        return qnum(*args, base=base)
    if kind == "qfact":
        return qfactorial(*args, base=base)
    if kind == "qbinom":
        return qbinomial(*args, base=base)
    if kind == "bracket":
        return qbracket(*args, base=base)
    if kind == "poch":
        return qpoch_q(*args, base=base)
    raise ValueError(f"unknown q-symbol kind {kind!r}")
