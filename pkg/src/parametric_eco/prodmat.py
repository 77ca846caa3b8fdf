"""Parametric production matrices.

A production matrix is given by an entry oracle ``(row, col) -> Polynomial``
with 1-based indices, and may be infinite.  The sequence it defines is
``a_n = u P^n e`` (u the first unit row vector, e the all-ones column); it is
computed by repeated row-vector products, never by matrix powers.

For a lower-Hessenberg matrix (zero above the superdiagonal) the row vector
``u P^n`` is supported on indices ``1..n+1``, so a window of size ``n_max+1``
gives every term up to ``a_{n_max}`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .algebra import ONE, ZERO, Polynomial, PowerSeries, Substitution, poly_sum, x, y

__all__ = [
    "ProductionMatrix",
    "BorderSpec",
    "dyck_main_matrix",
    "fibonacci_example1",
    "fibonacci_example2",
    "f0_matrix",
    "tail_ones",
    "truncate",
    "sequence",
    "gf_series",
    "border",
    "border_gf_residual",
    "quadratic_residual",
]


class ProductionMatrix:
    """Possibly infinite matrix described by an entry oracle.

    ``size`` is ``None`` for an infinite matrix.  ``complete`` is False when
    a finite matrix is only a window onto an infinite one (e.g. a compiled
    succession rule), in which case asking for more terms than the window
    supports is an error instead of a silently wrong answer.  ``start`` is
    the row of the axiom (1 for every matrix in the main example).
    """

    def __init__(
        self,
        entry: Callable[[int, int], object],
        size: int | None = None,
        *,
        complete: bool = True,
        start: int = 1,
        name: str = "",
    ):
        if size is not None and size < 1:
            raise ValueError("size must be positive")
        self._entry = lru_cache(maxsize=None)(entry)
        self.size = size
        self.complete = complete
        self.start = start
        self.name = name

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], name: str = "") -> "ProductionMatrix":
        dense = [[Polynomial.coerce(v) for v in row] for row in rows]
        n = len(dense)
        if any(len(row) != n for row in dense):
            raise ValueError("matrix must be square")
        return cls(lambda i, j: dense[i - 1][j - 1], n, name=name)

    def entry(self, i: int, j: int) -> Polynomial:
        if i < 1 or j < 1:
            raise IndexError("matrix indices start at 1")
        if self.size is not None and (i > self.size or j > self.size):
            raise IndexError(f"index ({i}, {j}) outside {self.size}x{self.size} matrix")
        return Polynomial.coerce(self._entry(i, j))

    __call__ = entry

    def truncate(self, n: int) -> list[list[Polynomial]]:
        return truncate(self, n)

    def substitute(self, mapping: Mapping | Substitution) -> "ProductionMatrix":
        sub = mapping if isinstance(mapping, Substitution) else Substitution(mapping)
        return ProductionMatrix(
            lambda i, j: self.entry(i, j).substitute(sub),
            self.size,
            complete=self.complete,
            start=self.start,
            name=self.name,
        )

    def is_hessenberg(self, n: int) -> bool:
        """Check ``entry(i, j) == 0`` for ``j > i + 1`` inside the n x n window."""
        n = n if self.size is None else min(n, self.size)
        return all(
            self.entry(i, j).is_zero() for i in range(1, n + 1) for j in range(i + 2, n + 1)
        )

    def __repr__(self):
        size = "inf" if self.size is None else self.size
        return f"ProductionMatrix({self.name or '?'}, size={size})"


@dataclass(frozen=True)
class BorderSpec:
    """``M = [[b, r u], [c e, inner]]``: a new first row and column around ``inner``."""

    b: Polynomial
    r: Polynomial
    c: Polynomial
    inner: ProductionMatrix

    def __post_init__(self):
        for field in ("b", "r", "c"):
            object.__setattr__(self, field, Polynomial.coerce(getattr(self, field)))


def dyck_main_matrix() -> ProductionMatrix:
    """Row k: ``x_k y_1, x_{k-1} y_2, ..., x_1 y_k, x_0`` then zeros."""

    def entry(k, l):
        if l == k + 1:
            return x(0)
        if l <= k:
            return x(k - l + 1) * y(l)
        return ZERO

    return ProductionMatrix(entry, name="dyck-main")


def fibonacci_example1() -> ProductionMatrix:
    return ProductionMatrix.from_rows([[0, 1], [1, 1]], name="fibonacci")


def fibonacci_example2() -> ProductionMatrix:
    return ProductionMatrix.from_rows([[0, 1], ["x", 1]], name="fibonacci-poly")


def tail_ones(xs: Sequence = (), ys: Sequence = ()) -> Substitution:
    """Substitution for the shorthand ``F(x0, .., x_m; y1, .., y_k; z)``.

    Leading values assign ``x0, x1, ...`` and ``y1, y2, ...`` in order;
    every remaining variable of either family becomes 1.  Pass a variable
    (e.g. ``x(1)``) to keep it free.
    """
    mapping: dict = {"x*": 1, "y*": 1}
    for k, v in enumerate(xs):
        mapping[f"x{k}"] = v
    for k, v in enumerate(ys, start=1):
        mapping[f"y{k}"] = v
    return Substitution(mapping)


def f0_matrix() -> ProductionMatrix:
    """The main matrix with only ``x0`` and ``x1`` free."""
    return dyck_main_matrix().substitute(tail_ones([x(0), x(1)]))


def truncate(P: ProductionMatrix, n: int) -> list[list[Polynomial]]:
    if n < 1:
        raise ValueError("truncation size must be >= 1")
    if P.size is not None and n > P.size:
        raise ValueError(f"cannot take {n}x{n} window of a {P.size}x{P.size} matrix")
    return [[P.entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def _window(P: ProductionMatrix, n_max: int, size: int | None) -> int:
    if size is None:
        size = n_max + P.start
    if P.size is not None:
        if size > P.size:
            if not P.complete:
                raise ValueError(
                    f"{P!r} is a {P.size}-label window; {n_max} steps need {size} rows"
                )
            size = P.size
    return size


def sequence(P: ProductionMatrix, n_max: int, size: int | None = None) -> list[Polynomial]:
    """``[u P^n e for n in 0..n_max]`` using an ``size x size`` window.

    The default window ``n_max + 1`` is exact for lower-Hessenberg matrices.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    size = _window(P, n_max, size)
    rows = truncate(P, size)
    vec = [ZERO] * size
    vec[P.start - 1] = ONE
    out = [poly_sum(vec)]
    for _ in range(n_max):
        new = []
        for j in range(size):
            new.append(poly_sum(vec[i] * rows[i][j] for i in range(size) if vec[i] and rows[i][j]))
        vec = new
        out.append(poly_sum(vec))
    return out


def gf_series(P: ProductionMatrix, order: int) -> PowerSeries:
    """Generating function ``sum a_n z^n`` to the given order."""
    return PowerSeries(sequence(P, order), order)


def border(spec: BorderSpec) -> ProductionMatrix:
    inner = spec.inner

    def entry(i, j):
        if i == 1:
            if j == 1:
                return spec.b
            return spec.r if j == 2 else ZERO
        if j == 1:
            return spec.c
        return inner.entry(i - 1, j - 1)

    size = None if inner.size is None else inner.size + 1
    name = f"border({inner.name})" if inner.name else "border"
    return ProductionMatrix(entry, size, complete=inner.complete, name=name)


def border_gf_residual(spec: BorderSpec, order: int) -> PowerSeries:
    """``M(z) (1 - b z - r c z^2 f) - (1 + r z f)``; zero when the bordering identity holds."""
    f = gf_series(spec.inner, order)
    g = gf_series(border(spec), order)
    one = PowerSeries.one(order)
    denom = one - (f.shift(2) * (spec.r * spec.c)).truncate(order) - PowerSeries([0, spec.b], order)
    numer = one + (f.shift(1) * spec.r).truncate(order)
    return g * denom - numer


def quadratic_residual(f: PowerSeries, b, r, c) -> PowerSeries:
    """``r c z^2 f^2 - (1 - (b + r) z) f + 1`` truncated to the order of f."""
    b, r, c = (Polynomial.coerce(v) for v in (b, r, c))
    n = f.order
    lhs = ((f * f).shift(2) * (r * c)).truncate(n)
    lin = f - (f.shift(1) * (b + r)).truncate(n)
    return lhs - lin + 1
