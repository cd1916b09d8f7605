"""Exact scalar arithmetic in the max-plus (tropical) semiring.

The carrier is T = Q ∪ {ε} with a ⊕ b = max(a, b), a ⊗ b = a + b and
ε = -∞ neutral for ⊕, absorbing for ⊗.  The dual addition a ⊕' b = min(a, b)
is also provided (ε stays at the bottom of the order).

Finite values are arbitrary-precision `fractions.Fraction`s, so halving and
negation are always exact.  ε is a distinguished variant of `Trop`, never a
numeric sentinel: a "very negative" float can never masquerade as ε and
absorption cannot be silently lost to rounding.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction, str]


class Trop:
    """A tropical scalar: ε or a finite exact rational."""

    __slots__ = ("_value",)

    def __init__(self, value: RationalLike):
        if isinstance(value, Trop):
            self._value = value._value
            return
        if isinstance(value, bool) or isinstance(value, float):
            raise TypeError("finite tropical scalars must be exact rationals, not %r" % (value,))
        self._value = Fraction(value)

    @classmethod
    def _eps(cls) -> "Trop":
        t = object.__new__(cls)
        t._value = None
        return t

    @property
    def is_eps(self) -> bool:
        return self._value is None

    @property
    def is_finite(self) -> bool:
        return self._value is not None

    @property
    def value(self) -> Fraction:
        """The finite part; raises on ε so absorption bugs fail loudly."""
        if self._value is None:
            raise ValueError("ε has no finite value")
        return self._value

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Trop):
            return NotImplemented
        return self._value == other._value

    def __hash__(self) -> int:
        return hash(("Trop", self._value))

    def __lt__(self, other: "Trop") -> bool:
        if not isinstance(other, Trop):
            return NotImplemented
        if self._value is None:
            return other._value is not None
        if other._value is None:
            return False
        return self._value < other._value

    def __le__(self, other: "Trop") -> bool:
        return self == other or self < other

    def __gt__(self, other: "Trop") -> bool:
        if not isinstance(other, Trop):
            return NotImplemented
        return other < self

    def __ge__(self, other: "Trop") -> bool:
        return self == other or self > other

    def __repr__(self) -> str:
        return "EPS" if self._value is None else "Trop(%s)" % self._value

    def __str__(self) -> str:
        return "-inf" if self._value is None else str(self._value)


#: The bottom element ε = -∞ (a singleton; compare with `is_eps`, not `is`).
EPS: Trop = Trop._eps()


def as_trop(x) -> Trop:
    """Coerce ints, Fractions and rational strings; pass Trop through."""
    if isinstance(x, Trop):
        return x
    return Trop(x)


def t_add(a: Trop, b: Trop) -> Trop:
    """Tropical addition a ⊕ b = max(a, b); ε is neutral."""
    if a._value is None:
        return b
    if b._value is None:
        return a
    return a if a._value >= b._value else b


def t_mul(a: Trop, b: Trop) -> Trop:
    """Tropical multiplication a ⊗ b = a + b; ε absorbs."""
    if a._value is None or b._value is None:
        return EPS
    return Trop(a._value + b._value)


def t_min(a: Trop, b: Trop) -> Trop:
    """Dual addition a ⊕' b = min(a, b); ε is the bottom of the order."""
    if a._value is None or b._value is None:
        return EPS
    return a if a._value <= b._value else b


def t_inv(a: Trop) -> Trop:
    """Multiplicative inverse a⁻¹ = -a.  ε is not invertible."""
    if a._value is None:
        raise ValueError("ε has no multiplicative inverse")
    return Trop(-a._value)
