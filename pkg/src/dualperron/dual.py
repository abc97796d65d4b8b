"""Scalar dual numbers: arithmetic, total order, magnitude, division.

A dual number ``a = a_s + a_d*eps`` carries a standard part ``a_s`` and a
dual part ``a_d``, with the infinitesimal unit satisfying ``eps**2 = 0``.
Comparisons use the lexicographic total order on ``(standard, dual)``, so
for example ``1 - 9*eps > 0 + 100*eps``.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

from .errors import DivisionUndefined

__all__ = ["DualNumber", "compare", "magnitude", "format_dual", "parse_dual"]


def _coerce(value):
    if isinstance(value, DualNumber):
        return value
    if isinstance(value, numbers.Real):
        return DualNumber(float(value), 0.0)
    return None


@dataclass(frozen=True, eq=False)
class DualNumber:
    """Immutable dual scalar with finite double-precision parts.

    NaN and infinity are rejected at construction: the total order used
    throughout the library is meaningless with non-finite parts.
    """

    standard: float
    dual: float = 0.0

    def __post_init__(self):
        s = float(self.standard)
        d = float(self.dual)
        if not (math.isfinite(s) and math.isfinite(d)):
            raise ValueError(
                f"dual number parts must be finite, got ({self.standard!r}, {self.dual!r})"
            )
        object.__setattr__(self, "standard", s)
        object.__setattr__(self, "dual", d)

    @property
    def appreciable(self) -> bool:
        """True when the standard part is nonzero."""
        return self.standard != 0.0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return DualNumber(self.standard + o.standard, self.dual + o.dual)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return DualNumber(self.standard - o.standard, self.dual - o.dual)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __neg__(self):
        return DualNumber(-self.standard, -self.dual)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return DualNumber(
            self.standard * o.standard,
            self.standard * o.dual + self.dual * o.standard,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.standard != 0.0:
            q = self.standard / o.standard
            return DualNumber(q, self.dual / o.standard - q * (o.dual / o.standard))
        if self.standard == 0.0 and o.dual != 0.0:
            # Degenerate branch: the dual part of the quotient is a free
            # constant; it is fixed to 0 here for determinism.
            return DualNumber(self.dual / o.dual, 0.0)
        raise DivisionUndefined(f"cannot divide {self} by {o}")

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __abs__(self):
        return magnitude(self)

    # -- total order --------------------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.standard == o.standard and self.dual == o.dual

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __lt__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self.standard, self.dual) < (o.standard, o.dual)

    def __le__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self.standard, self.dual) <= (o.standard, o.dual)

    def __gt__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self.standard, self.dual) > (o.standard, o.dual)

    def __ge__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self.standard, self.dual) >= (o.standard, o.dual)

    def __hash__(self):
        return hash((self.standard, self.dual))

    def __str__(self):
        return format_dual(self, digits=None)

    def __repr__(self):
        return f"DualNumber({self.standard!r}, {self.dual!r})"


def compare(a: DualNumber, b: DualNumber) -> int:
    """Lexicographic comparison: -1 if a < b, 0 if equal, +1 if a > b."""
    if (a.standard, a.dual) < (b.standard, b.dual):
        return -1
    if (a.standard, a.dual) > (b.standard, b.dual):
        return 1
    return 0


def magnitude(a: DualNumber) -> DualNumber:
    """Nonnegative magnitude |a| under the total order.

    For appreciable a this is (|a_s|, sgn(a_s)*a_d); a purely dual scalar
    maps to |a_d|*eps.
    """
    if a.standard != 0.0:
        sgn = 1.0 if a.standard > 0.0 else -1.0
        return DualNumber(abs(a.standard), sgn * a.dual)
    return DualNumber(0.0, abs(a.dual))


def _format_part(value: float, digits) -> str:
    if digits is None:
        return f"{value:.17g}"
    if abs(value) >= 1e4:
        return f"{value:.{digits}e}"
    return f"{value:.{digits}f}"


def format_dual(a: DualNumber, digits: int | None = 2) -> str:
    """Render as ``a_s+a_de`` (e.g. ``3.00+1.61e``).

    ``digits=None`` renders full precision, suitable for round-tripping
    through :func:`parse_dual`.
    """
    std = _format_part(a.standard, digits)
    dl = _format_part(a.dual, digits)
    sign = "" if dl.startswith("-") else "+"
    return f"{std}{sign}{dl}e"


def parse_dual(text: str) -> DualNumber:
    """Parse the ``a_s+a_de`` rendering produced by :func:`format_dual`.

    A bare number is read as standard-only; a number with a trailing ``e``
    as dual-only. The trailing ``e`` marks the dual unit, so exponents in
    either part must be followed by digits (``1.07e7+2.00e`` is fine).
    """
    s = text.strip()
    if not s:
        raise ValueError("empty dual number literal")
    if not s.endswith("e"):
        return DualNumber(float(s), 0.0)
    body = s[:-1]
    # Split at the last sign that starts the dual part, skipping signs that
    # belong to an exponent and a leading sign of the standard part.
    split_at = -1
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "eE":
            split_at = i
            break
    if split_at < 0:
        return DualNumber(0.0, float(body))
    return DualNumber(float(body[:split_at]), float(body[split_at:]))
