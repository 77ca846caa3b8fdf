"""Truncated power series in ``z`` with polynomial coefficients.

A ``PowerSeries`` of order N stores the coefficients of z^0 .. z^N and is
only claimed to be correct up to z^N.  Binary operations return a result of
order ``min`` of the operands, so precision is never silently invented.
Plain polynomials and integers behave as series of infinite order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .polynomial import ONE, ZERO, Polynomial, poly_sum

__all__ = ["PowerSeries", "NotInvertibleError"]


class NotInvertibleError(ValueError):
    pass


class PowerSeries:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Polynomial.coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = cs[: order + 1]
        cs.extend([ZERO] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def _wrap(cls, coeffs: Sequence[Polynomial]) -> "PowerSeries":
        s = cls.__new__(cls)
        s._coeffs = tuple(coeffs)
        return s

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls._wrap([ZERO] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls.constant(ONE, order)

    @classmethod
    def constant(cls, c, order: int) -> "PowerSeries":
        return cls([c], order)

    @classmethod
    def z(cls, order: int) -> "PowerSeries":
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Polynomial, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Polynomial:
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient z^{n} is beyond order {self.order}")
        return self._coeffs[n]

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return PowerSeries._wrap(self._coeffs[: order + 1])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._coeffs)

    # -- arithmetic --------------------------------------------------------

    def _lift(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries([Polynomial.coerce(other)], self.order)

    def __add__(self, other):
        if not isinstance(other, (PowerSeries, Polynomial, int, Fraction)):
            return NotImplemented
        other = self._lift(other)
        n = min(self.order, other.order)
        return PowerSeries._wrap([self._coeffs[i] + other._coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries._wrap([-c for c in self._coeffs])

    def __sub__(self, other):
        if not isinstance(other, (PowerSeries, Polynomial, int, Fraction)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        if not isinstance(other, (PowerSeries, Polynomial, int, Fraction)):
            return NotImplemented
        return self._lift(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            a, b = self._coeffs, other._coeffs
            return PowerSeries._wrap(
                [poly_sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n + 1)]
            )
        if isinstance(other, (Polynomial, int, Fraction)):
            c = Polynomial.coerce(other)
            return PowerSeries._wrap([a * c for a in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = PowerSeries.one(self.order)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int = 1) -> "PowerSeries":
        """Multiply by z^k; the result is valid to order + k."""
        if k < 0:
            raise ValueError("shift must be >= 0")
        return PowerSeries._wrap([ZERO] * k + list(self._coeffs))

    def __truediv__(self, other):
        if isinstance(other, (Polynomial, int, Fraction)):
            other = PowerSeries([other], self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return series_div_unit(self, other)

    def __rtruediv__(self, other):
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        return series_div_unit(PowerSeries([other], self.order), self)

    def sqrt(self) -> "PowerSeries":
        return series_sqrt_unit(self)

    def substitute(self, mapping) -> "PowerSeries":
        return PowerSeries._wrap([c.substitute(mapping) for c in self._coeffs])

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __str__(self):
        out = ""
        for n, c in enumerate(self._coeffs):
            if c.is_zero():
                continue
            zpow = "" if n == 0 else ("z" if n == 1 else f"z^{n}")
            neg = len(c) == 1 and str(c).startswith("-")
            mag = -c if neg else c
            if not zpow:
                body = str(mag)
            elif mag == 1:
                body = zpow
            elif len(mag) == 1:
                body = f"{mag}*{zpow}"
            else:
                body = f"({mag})*{zpow}"
            if out:
                out += (" - " if neg else " + ") + body
            else:
                out = ("-" if neg else "") + body
        tail = f"O(z^{self.order + 1})"
        return f"{out} + {tail}" if out else tail

    def __repr__(self):
        return f"PowerSeries({str(self)!r})"


def _unit_inverse(c: Polynomial):
    if c == 1:
        return 1
    if c == -1:
        return -1
    return None


def series_div_unit(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """q with q*g = f, for g whose constant coefficient is +1 or -1."""
    inv = _unit_inverse(g[0])
    if inv is None:
        raise NotInvertibleError(f"series not invertible: constant term {g[0]}")
    n = min(f.order, g.order)
    q: list[Polynomial] = []
    for k in range(n + 1):
        acc = f[k] - poly_sum(g[i] * q[k - i] for i in range(1, k + 1))
        q.append(acc * inv)
    return PowerSeries._wrap(q)


def series_sqrt_unit(f: PowerSeries) -> PowerSeries:
    """The square root with constant term 1 of a series with constant term 1."""
    if f[0] != 1:
        raise NotInvertibleError(f"series sqrt needs constant term 1, got {f[0]}")
    half = Fraction(1, 2)
    s: list[Polynomial] = [ONE]
    for k in range(1, f.order + 1):
        cross = poly_sum(s[i] * s[k - i] for i in range(1, k))
        s.append((f[k] - cross).scale(half))
    return PowerSeries._wrap(s)


def series_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    return f * g
