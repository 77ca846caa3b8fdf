"""Closed-form and recursive generating functions for the Dyck example.

Every function returns a truncated ``PowerSeries``; identities are checked
by forming a residual series and testing it for zero.  The scalar marking
high peaks is the named variable ``t``.

The Chebyshev form is handled without half-integer powers of z through

    V_m(z) = z^(m/2) * U_m(1 / (2 sqrt z)),   V_-1 = 0, V_0 = V_1 = 1,
    V_m = V_{m-1} - z V_{m-2},

which turns the quotient of U-polynomials into a quotient of ordinary
polynomials in z.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .algebra import ONE, Polynomial, PowerSeries, Substitution, var, x, y
from .dyck import DEFAULT_LIMIT, weighted_sum
from .prodmat import dyck_main_matrix, sequence, tail_ones

__all__ = [
    "T",
    "catalan_series",
    "f0_recurrence",
    "f0_radical",
    "f0_series",
    "fk_series",
    "g1_series",
    "gn_series",
    "ChebPoly",
    "cheb_v",
    "chebyshev_u",
    "cheb_form_residual",
    "unique_quadratic_root",
    "SpecializationEntry",
    "EntryResult",
    "CatalogReport",
    "catalog",
    "catalog_check",
    "oracle_prefix",
]

T = var("t")


class MethodMismatchError(AssertionError):
    pass


def catalan_series(order: int) -> PowerSeries:
    """C(z) with c_{n+1} = sum c_i c_{n-i}."""
    c = [1]
    for n in range(order):
        c.append(sum(c[i] * c[n - i] for i in range(n + 1)))
    return PowerSeries(c, order)


def f0_recurrence(order: int) -> PowerSeries:
    """F0 from F = 1 + (x0 + x1) z F + x0 z^2 F^2, coefficient by coefficient."""
    s = x(0) + x(1)
    f: list[Polynomial] = [ONE]
    for n in range(1, order + 1):
        quad = sum((f[i] * f[n - 2 - i] for i in range(n - 1)), Polynomial())
        f.append(s * f[n - 1] + x(0) * quad)
    return PowerSeries(f, order)


def f0_radical(order: int) -> PowerSeries:
    """F0 from the radical formula, expanded with a series square root.

    The numerator vanishes to order z^2, so the division by ``2 x0 z^2`` is
    a coefficient shift followed by exact division by ``2 x0``.
    """
    s = x(0) + x(1)
    n = order + 2
    lin = PowerSeries([1, -s], n)
    disc = lin * lin - PowerSeries([0, 0, x(0) * 4], n)
    numer = lin - disc.sqrt()
    if not (numer[0].is_zero() and numer[1].is_zero()):
        raise ArithmeticError("radical numerator does not vanish to order z^2")
    two_x0 = x(0) * 2
    return PowerSeries([numer[k + 2].divide_by_term(two_x0) for k in range(order + 1)], order)


def f0_series(order: int) -> PowerSeries:
    """F(x0, x1;; z), computed by the recurrence and the radical formula."""
    a = f0_recurrence(order)
    b = f0_radical(order)
    if a != b:
        raise MethodMismatchError("recurrence and radical expansions of F0 disagree")
    return a


def _shift_y(k: int) -> Substitution:
    # y_j -> y_{j+1} for j = 1..k, simultaneously
    return Substitution({f"y{j}": y(j + 1) for j in range(1, k + 1)})


def _bordered(f: PowerSeries, b, r, c) -> PowerSeries:
    """(1 + r z f) / (1 - b z - r c z^2 f)."""
    n = f.order
    one = PowerSeries.one(n)
    numer = one + (f.shift(1) * r).truncate(n)
    denom = one - PowerSeries([0, b], n) - (f.shift(2) * (r * c)).truncate(n)
    return numer / denom


def fk_series(k: int, order: int) -> PowerSeries:
    """F(x0, x1; y1..yk; z) via the bordering recursion, base case F0.

    The inner series is F_{k-1} evaluated at (y2, .., yk), i.e. with every
    y-index shifted up by one.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return f0_series(order)
    inner = fk_series(k - 1, order).substitute(_shift_y(k - 1))
    return _bordered(inner, x(1) * y(1), x(0), y(1))


def g1_series(order: int) -> PowerSeries:
    """Paths by number of peaks at height 1: (1 + z C^2) / (1 - t z - t z^2 C^2)."""
    c = catalan_series(order)
    c2 = c * c
    one = PowerSeries.one(order)
    numer = one + c2.shift(1).truncate(order)
    denom = one - PowerSeries([0, T], order) - (c2.shift(2) * T).truncate(order)
    return numer / denom


def gn_series(n: int, order: int) -> PowerSeries:
    """Paths by number of peaks at height n, via G_n = (1 + z G) / (1 - z - z^2 G)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    g = g1_series(order)
    for _ in range(2, n + 1):
        g = _bordered(g, 1, 1, 1)
    return g


@dataclass(frozen=True)
class ChebPoly:
    index: int
    coeffs: tuple[int, ...]  # coefficients of z^0, z^1, ...

    def to_series(self, order: int) -> PowerSeries:
        return PowerSeries(self.coeffs[: order + 1], order)

    def evaluate(self, z):
        return sum(c * Fraction(z) ** i for i, c in enumerate(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if any(self.coeffs) else -1


def cheb_v(m: int) -> ChebPoly:
    if m < -1:
        raise ValueError("V_m needs m >= -1; lower indices are Laurent in z")
    prev, cur = [0], [1]  # V_-1, V_0
    if m == -1:
        return ChebPoly(-1, ())
    for _ in range(m):
        shifted = [0] + prev
        nxt = [a - b for a, b in _zip_pad(cur, shifted)]
        prev, cur = cur, nxt
    while len(cur) > 1 and cur[-1] == 0:
        cur.pop()
    return ChebPoly(m, tuple(cur))


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


def chebyshev_u(m: int, w) -> Fraction:
    """U_m(w) from the explicit sum of binomials (no recurrence)."""
    w = Fraction(w)
    return sum(((-1) ** k * comb(m - k, k) * (2 * w) ** (m - 2 * k) for k in range(m // 2 + 1)), Fraction(0))


def cheb_form_residual(n: int, order: int) -> PowerSeries:
    """G_n (G1 z^2 V_{n-2} - V_n) - (G1 z^2 V_{n-4} - V_{n-2}); zero iff the Chebyshev form holds."""
    if n < 4:
        raise ValueError("the Chebyshev form is checked for n >= 4 only")
    g1 = g1_series(order)
    gn = gn_series(n, order)
    v = {m: cheb_v(m).to_series(order) for m in (n - 4, n - 2, n)}
    g1z2 = g1.shift(2).truncate(order)
    numer = g1z2 * v[n - 4] - v[n - 2]
    denom = g1z2 * v[n - 2] - v[n]
    return gn * denom - numer


def unique_quadratic_root(b, r, c, order: int) -> PowerSeries:
    """The series f with f(0) = 1 and r c z^2 f^2 - (1 - (b + r) z) f + 1 = 0."""
    b, r, c = (Polynomial.coerce(v) for v in (b, r, c))
    s, rc = b + r, r * c
    f: list[Polynomial] = [ONE]
    for n in range(1, order + 1):
        quad = sum((f[i] * f[n - 2 - i] for i in range(n - 1)), Polynomial())
        f.append(s * f[n - 1] + rc * quad)
    return PowerSeries(f, order)


# -- specialisation catalog ----------------------------------------------------


@dataclass(frozen=True)
class SpecializationEntry:
    name: str
    oeis: str
    shorthand: str
    xs: tuple = ()
    ys: tuple = ()
    expected_prefix: tuple = ()
    provenance: str = "paper_listed"  # or "suspected_typo"
    printed_prefix: tuple = ()

    @property
    def substitution(self) -> Substitution:
        return tail_ones(self.xs, self.ys)


def _p(*items) -> tuple:
    return tuple(Polynomial.coerce(v) for v in items)


def catalog() -> list[SpecializationEntry]:
    t = T
    return [
        SpecializationEntry("catalan", "A000108", "F(;;z)", (), (), _p(1, 2, 5, 14)),
        SpecializationEntry("motzkin", "A001006", "F(1,0;;z)", (1, 0), (), _p(1, 1, 2, 4, 9)),
        SpecializationEntry("little-schroeder", "A001003", "F(2;;z)", (2,), (), _p(1, 3, 11, 45)),
        SpecializationEntry(
            "narayana", "A001263", "F(s;;z)", (t,), (),
            _p(1, "1+t", "1+3*t+t^2", "1+6*t+6*t^2+t^3"),
        ),
        SpecializationEntry(
            "bicolored-double-rises", "A114687", "F(2s;;z)", (2 * t,), (),
            _p(1, "1+2*t", "1+6*t+4*t^2", "1+12*t+24*t^2+8*t^3"),
        ),
        SpecializationEntry(
            "schroeder-by-peaks", "A126216", "F(1+s;;z)", (1 + t,), (),
            _p(1, "2+t", "5+5*t+t^2", "14+21*t+9*t^2+t^3"),
        ),
        SpecializationEntry("schroeder-no-odd-peaks", "A002212", "F(1,2;;z)", (1, 2), (), _p(1, 3, 10, 36, 137)),
        SpecializationEntry(
            "even-height-peaks", "A091869", "F(1,s;;z)", (1, t), (),
            _p(1, "1+t", "2+2*t+t^2", "4+6*t+3*t^2+t^3"),
            provenance="suspected_typo",
            printed_prefix=("1", "1+t", "2+2t+t^3", "4+6t+3t^2+t^3"),
        ),
        SpecializationEntry(
            "hex-trees-left-edges", "A126182", "F(t,2;;z)", (t, 2), (),
            _p(1, "2+t", "4+5*t+t^2", "8+18*t+9*t^2+t^3"),
        ),
        SpecializationEntry(
            "hex-trees-median-children", "A126181", "F(1,1+t;;z)", (1, 1 + t), (),
            _p(1, "2+t", "5+4*t+t^2", "14+15*t+6*t^2+t^3"),
        ),
        SpecializationEntry("central-binomial-odd", "A001700", "F(;2;z)", (), (2,), _p(1, 3, 10, 35)),
        SpecializationEntry(
            "ordered-tree-leaves", "A039598", "F(;1+t;z)", (), (1 + t,),
            _p(1, "2+t", "5+4*t+t^2", "14+14*t+6*t^2+t^3"),
        ),
        SpecializationEntry(
            "pascal-y", "A007318", "F(0,1;1+t;z)", (0, 1), (1 + t,),
            _p(1, "1+t", "1+2*t+t^2", "1+3*t+3*t^2+t^3"),
            provenance="suspected_typo",
            printed_prefix=("1", "1+t", "1+2t+t^3", "1+3t+3t^2+1"),
        ),
        SpecializationEntry(
            "pascal-x", "A007318", "F(0,1+t;1;z)", (0, 1 + t), (1,),
            _p(1, "1+t", "1+2*t+t^2", "1+3*t+3*t^2+t^3"),
            provenance="suspected_typo",
            printed_prefix=("1", "1+t", "1+2t+t^3", "1+3t+3t^2+1"),
        ),
        SpecializationEntry(
            "motzkin-final-descent", "A098979", "F(1,0;t;z)", (1, 0), (t,),
            _p(1, 1, "1+t", "2+2*t", "4+4*t+t^2"),
        ),
    ]


def oracle_prefix(sub: Substitution, length: int, limit: int = DEFAULT_LIMIT) -> list[Polynomial]:
    """Specialised terms a_0..a_{length-1} straight from Dyck path enumeration.

    a_n is the weighted sum over paths of semilength n+1 divided by x0 (the
    axiom weight), taken before substituting so that x0 = 0 is allowed.
    """
    out = []
    for n in range(length):
        total = weighted_sum(n + 1, "omega_block", limit)
        out.append(total.divide_by_term(x(0)).substitute(sub))
    return out


@dataclass
class EntryResult:
    entry: SpecializationEntry
    computed: list
    reference: str  # "listed" or "oracle"
    passed: bool
    first_mismatch: int | None = None
    printed_matches: bool | None = None

    def to_dict(self) -> dict:
        e = self.entry
        d = {
            "name": e.name,
            "oeis": e.oeis,
            "shorthand": e.shorthand,
            "status": "PASS" if self.passed else "FAIL",
            "reference": self.reference,
            "first_mismatch": self.first_mismatch,
            "computed": [str(p) for p in self.computed],
            "expected": [str(p) for p in e.expected_prefix],
        }
        if e.provenance == "suspected_typo":
            d["printed"] = list(e.printed_prefix)
            d["printed_matches"] = self.printed_matches
        return d


@dataclass
class CatalogReport:
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            e = r.entry
            status = "PASS" if r.passed else "FAIL"
            line = f"{e.name:<28} {e.oeis}  {status}"
            if r.first_mismatch is not None:
                line += f"  first mismatch at n={r.first_mismatch}"
            if e.provenance == "suspected_typo":
                line += f"  [checked against oracle; printed: {', '.join(e.printed_prefix)}]"
            lines.append(line)
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps([r.to_dict() for r in self.results], indent=2)


def _first_mismatch(a: Sequence, b: Sequence) -> int | None:
    for i, (u, v) in enumerate(zip(a, b)):
        if u != v:
            return i
    if len(a) != len(b):
        return min(len(a), len(b))
    return None


def catalog_check(order: int | None = None) -> CatalogReport:
    """Check each specialisation against its listed prefix.

    ``order`` extends the comparison of suspected-typo rows against the
    oracle beyond the printed length (other rows only have printed values).
    """
    P = dyck_main_matrix()
    report = CatalogReport()
    for entry in catalog():
        length = len(entry.expected_prefix)
        if entry.provenance == "suspected_typo" and order is not None:
            length = max(length, order + 1)
        computed = sequence(P.substitute(entry.substitution), length - 1)
        if entry.provenance == "suspected_typo":
            reference = oracle_prefix(entry.substitution, length)
            ok_expected = list(computed[: len(entry.expected_prefix)]) == list(entry.expected_prefix)
            mismatch = _first_mismatch(computed, reference)
            printed = [_parse_printed(s) for s in entry.printed_prefix]
            printed_ok = printed == list(computed[: len(printed)])
            report.results.append(
                EntryResult(entry, computed, "oracle", mismatch is None and ok_expected, mismatch, printed_ok)
            )
        else:
            mismatch = _first_mismatch(computed, entry.expected_prefix)
            report.results.append(EntryResult(entry, computed, "listed", mismatch is None, mismatch))
    return report


def _parse_printed(text: str) -> Polynomial:
    # printed values use juxtaposition ("2t^2"); insert the implied products
    return Polynomial.parse(re.sub(r"(\d)([a-z])", r"\1*\2", text))
