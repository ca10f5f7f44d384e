"""Basis labels, sparse states and conservation-checked operators on Fock tensor powers.

A basis label of F^{(x)n} is a tuple of n nonnegative integers.  States on
tensor products of such spaces use tuples of labels as keys.  Coefficients
may be :class:`Scalar` or :class:`TruncatedSeries`; anything supporting
``+``, ``*`` and truthiness works.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .ring import ONE, ZERO, Scalar, qpoch_q

MultiIndex = tuple[int, ...]


def weight(m: Sequence[int]) -> int:
    return sum(m)


def unit(n: int, k: int, times: int = 1) -> MultiIndex:
    """``times * e_k`` in Z^n, k counted from 1."""
    if not 1 <= k <= n:
        raise ValueError(f"unit vector index {k} out of range 1..{n}")
    return tuple(times if r == k - 1 else 0 for r in range(n))


def add_index(a: Sequence[int], b: Sequence[int]) -> MultiIndex:
    return tuple(x + y for x, y in zip(a, b))


def sub_index(a: Sequence[int], b: Sequence[int]) -> MultiIndex:
    return tuple(x - y for x, y in zip(a, b))


def is_valid(m: Sequence[int]) -> bool:
    return all(x >= 0 for x in m)


def parse_index(text: str) -> MultiIndex:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    return tuple(int(t) for t in text.split(","))


# -- pairing and sectors ---------------------------------------------------------


def pairing(bra: int | Sequence[int], ket: int | Sequence[int]) -> Scalar:
    """Bilinear pairing <m|n> = (q^2;q^2)_m delta_{mn}, multiplicative over tensor factors."""
    if isinstance(bra, int):
        bra, ket = (bra,), (ket,)
    if len(bra) != len(ket):
        raise ValueError("pairing of labels with different arity")
    if tuple(bra) != tuple(ket):
        return ZERO
    out = ONE
    for m in bra:
        out = out * qpoch_q(m, 4)
    return out


def _compositions(n: int, w: int) -> Iterator[MultiIndex]:
    """All m in Z>=0^n with |m| = w, lexicographically descending."""
    if n == 0:
        if w == 0:
            yield ()
        return
    if n == 1:
        yield (w,)
        return
    for first in range(w, -1, -1):
        for rest in _compositions(n - 1, w - first):
            yield (first,) + rest


def enumerate_sector(n: int, weight: int | None = None, parity: int | None = None,
                     degree: int | None = None) -> list[MultiIndex]:
    """Basis labels of F^{(x)n} in a finite sector.

    ``weight`` fixes |m|; ``degree`` bounds it; ``parity`` (+1 or -1) keeps
    |m| even or odd.  Ordered by |m| ascending, then lexicographically
    descending within each weight.
    """
    if n < 0:
        raise ValueError("rank must be nonnegative")
    if weight is None and degree is None:
        raise ValueError("sector must be bounded by a weight or a degree")
    if parity not in (None, 1, -1):
        raise ValueError("parity must be +1 or -1")
    if weight is not None:
        weights: Iterable[int] = [weight] if weight >= 0 and (degree is None or weight <= degree) else []
    else:
        weights = range(degree + 1)
    out: list[MultiIndex] = []
    for w in weights:
        if parity is not None and (-1) ** w != parity:
            continue
        out.extend(_compositions(n, w))
    return out


def pair_sector(n: int, degree: int) -> list[tuple[MultiIndex, MultiIndex]]:
    """Basis of F^{(x)n} (x) F^{(x)n} with total weight <= degree."""
    out = []
    for d in range(degree + 1):
        for wa in range(d + 1):
            for a in _compositions(n, wa):
                for b in _compositions(n, d - wa):
                    out.append((a, b))
    return out


# -- states ----------------------------------------------------------------------------


class VectorState:
    """Finite linear combination of basis labels; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Hashable, object] | None = None):
        self.terms: dict = {}
        if terms:
            for k, c in terms.items():
                self.add_term(k, c)

    @classmethod
    def basis(cls, key: Hashable, coeff=ONE) -> "VectorState":
        return cls({key: coeff})

    def add_term(self, key: Hashable, coeff) -> None:
        if not coeff:
            return
        old = self.terms.get(key)
        if old is None:
            self.terms[key] = coeff
            return
        new = old + coeff
        if new:
            self.terms[key] = new
        else:
            del self.terms[key]

    def copy(self) -> "VectorState":
        out = VectorState()
        out.terms = dict(self.terms)
        return out

    def __iter__(self):
        return iter(self.terms.items())

    def items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, key: Hashable):
        return self.terms.get(key, ZERO)

    def __add__(self, other: "VectorState") -> "VectorState":
        out = self.copy()
        for k, c in other.terms.items():
            out.add_term(k, c)
        return out

    def __neg__(self) -> "VectorState":
        out = VectorState()
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other: "VectorState") -> "VectorState":
        return self + (-other)

    def scale(self, c) -> "VectorState":
        out = VectorState()
        for k, x in self.terms.items():
            out.add_term(k, x * c)
        return out

    def __mul__(self, c) -> "VectorState":
        return self.scale(c)

    __rmul__ = __mul__

    def map(self, fn: Callable) -> "VectorState":
        """Apply a coefficient map termwise."""
        out = VectorState()
        for k, x in self.terms.items():
            out.add_term(k, fn(x))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectorState):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> list[dict]:
        out = []
        for k, c in self.items():
            idx = [list(part) for part in k] if k and isinstance(k[0], tuple) else list(k)
            out.append({"index": idx, "coeff": c.to_json()})
        return out

    def __repr__(self) -> str:
        return "VectorState(" + ", ".join(f"{k}: {c}" for k, c in self.items()) + ")"


# -- operators ---------------------------------------------------------------------


class ConservationError(AssertionError):
    """An operator emitted a term that breaks one of its declared conservation laws."""


@dataclass
class GradedOperator:
    """Linear operator given on basis labels, with conservation checked on every term.

    ``conservation`` lists functionals of a label; each must take the same value
    on input and output.
    """

    rule: Callable[[Hashable], VectorState]
    conservation: Sequence[Callable[[Hashable], object]] = field(default_factory=tuple)
    name: str = "operator"

    def on_basis(self, key: Hashable) -> VectorState:
        out = self.rule(key)
        for law in self.conservation:
            target = law(key)
            for k, _ in out:
                if law(k) != target:
                    raise ConservationError(
                        f"{self.name}: {key} -> {k} changes a conserved quantity "
                        f"({target} -> {law(k)})")
        return out

    def __call__(self, state: VectorState) -> VectorState:
        return apply_operator(self, state)

    def compose(self, other: "GradedOperator", name: str | None = None) -> "GradedOperator":
        """``self o other`` (other acts first)."""
        return GradedOperator(lambda key: self(other.on_basis(key)),
                              tuple(self.conservation), name or f"{self.name}*{other.name}")


def apply_operator(op: GradedOperator, state: VectorState) -> VectorState:
    out = VectorState()
    for key, c in state:
        for k2, c2 in op.on_basis(key):
            out.add_term(k2, c2 * c)
    return out


def identity_operator() -> GradedOperator:
    return GradedOperator(lambda key: VectorState.basis(key), name="identity")


def conservation_weight(key) -> int:
    """Total weight of a (possibly tensor) label; the most common conserved quantity."""
    if key and isinstance(key[0], tuple):
        return sum(sum(p) for p in key)
    return sum(key)


__all__ = [
    "MultiIndex", "VectorState", "GradedOperator", "ConservationError",
    "pairing", "enumerate_sector", "pair_sector", "apply_operator", "identity_operator",
    "weight", "unit", "add_index", "sub_index", "is_valid", "parse_index", "conservation_weight",
]
