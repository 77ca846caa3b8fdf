"""Brute-force Dyck path enumeration and path statistics.

This module is the independent ground truth for the production-matrix
engine: it never looks at a matrix or a succession rule.  Paths are words
over ``u``/``d``; heights start at 0.

Statistics used for the weights:

* rise heights -- for each maximal run of ``u`` steps, its length minus 1;
* peak heights -- for each ``ud`` factor, the height where the ``u`` starts;
* segment counts ``s_m`` -- for each ``u`` step and its matching ``d``, the
  number of top-level Dyck blocks strictly between them is ``m``; so
  ``s_0`` counts peaks and ``s_m`` counts level segments ``u(u q d)^m d``;
* rise block index -- for each rise, 1 + the number of maximal closed Dyck
  blocks that lie entirely before the rise starts.

Two y-weightings of rises are offered.  ``omega`` / ``rise_height`` number
the rises 1, 2, 3, ... from the left.  ``omega_block`` / ``block_rise`` give
a rise of height h the factor ``y_j^h`` with j its block index; this is the
weighting the excursion-insertion rule actually produces, and it differs
from left-to-right numbering from semilength 5 on (first at ``uududduudd``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .algebra import ONE, Family, Polynomial, VarId, poly_sum

__all__ = [
    "DyckPath",
    "PathStats",
    "DEFAULT_LIMIT",
    "catalan_number",
    "enumerate_paths",
    "iter_paths",
    "stats",
    "omega_monomial",
    "high_peak_monomial",
    "rise_height_monomial",
    "omega_block_monomial",
    "block_rise_monomial",
    "weighted_sum",
    "STATISTICS",
]

DEFAULT_LIMIT = 14


def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        h = 0
        for ch in self.steps:
            if ch == "u":
                h += 1
            elif ch == "d":
                h -= 1
                if h < 0:
                    raise ValueError(f"{self.steps!r} goes below the axis")
            else:
                raise ValueError(f"invalid step {ch!r}")
        if h != 0:
            raise ValueError(f"{self.steps!r} does not return to the axis")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __str__(self):
        return self.steps


@dataclass(frozen=True)
class PathStats:
    rise_heights: tuple[int, ...]
    high_rise_heights: tuple[int, ...]
    peak_heights: tuple[int, ...]
    high_peak_counts: dict
    segment_counts: dict
    contacts: int
    excursions: int
    final_descent: int
    double_rises: int
    even_peaks: int
    rise_blocks: tuple[int, ...] = ()


def _iter_words(n: int) -> Iterator[str]:
    # lexicographic with u < d
    buf: list[str] = []

    def rec(ups, height):
        if len(buf) == 2 * n:
            yield "".join(buf)
            return
        if ups < n:
            buf.append("u")
            yield from rec(ups + 1, height + 1)
            buf.pop()
        if height > 0:
            buf.append("d")
            yield from rec(ups, height - 1)
            buf.pop()

    yield from rec(0, 0)


def iter_paths(n: int, limit: int = DEFAULT_LIMIT) -> Iterator[DyckPath]:
    if n < 0:
        raise ValueError("semilength must be >= 0")
    if n > limit:
        raise ValueError(f"semilength {n} exceeds enumeration limit {limit}")
    for w in _iter_words(n):
        yield _trusted(w)


def _trusted(word: str) -> DyckPath:
    # words from _iter_words are valid by construction
    p = object.__new__(DyckPath)
    object.__setattr__(p, "steps", word)
    return p


def enumerate_paths(n: int, limit: int = DEFAULT_LIMIT) -> list[DyckPath]:
    """All Dyck paths of semilength n, lexicographic with u < d."""
    return list(iter_paths(n, limit))


def stats(p: DyckPath) -> PathStats:
    w = p.steps
    rises: list[int] = []
    rise_blocks: list[int] = []
    peaks: list[int] = []
    closed = [0]  # closed blocks under each open u, plus the top level
    contacts = 1
    double_rises = 0
    h = 0
    run = 0
    for i, ch in enumerate(w):
        if ch == "u":
            if not run:
                rise_blocks.append(1 + sum(closed))
            closed.append(0)
            run += 1
            if i + 1 < len(w) and w[i + 1] == "u":
                double_rises += 1
            if i + 1 < len(w) and w[i + 1] == "d":
                peaks.append(h)
            h += 1
        else:
            if run:
                rises.append(run - 1)
                run = 0
            closed.pop()
            closed[-1] += 1
            h -= 1
            if h == 0:
                contacts += 1

    final_descent = len(w) - len(w.rstrip("d"))

    # matched pairs: count top-level blocks strictly inside each u ... d
    segments: Counter = Counter()
    stack: list[int] = []  # number of closed children of each open u
    for ch in w:
        if ch == "u":
            stack.append(0)
        else:
            m = stack.pop()
            segments[m] += 1
            if stack:
                stack[-1] += 1

    high = Counter(ph for ph in peaks if ph >= 1)
    return PathStats(
        rise_heights=tuple(rises),
        high_rise_heights=tuple(r for r in rises if r > 0),
        peak_heights=tuple(peaks),
        high_peak_counts=dict(sorted(high.items())),
        segment_counts=dict(sorted(segments.items())),
        contacts=contacts,
        excursions=contacts - 1,
        final_descent=final_descent,
        double_rises=double_rises,
        even_peaks=sum(1 for ph in peaks if ph % 2 == 0),
        rise_blocks=tuple(rise_blocks),
    )


def _monomial(exps: dict[VarId, int]) -> Polynomial:
    mono = tuple(sorted((v, e) for v, e in exps.items() if e))
    return Polynomial({mono: 1})


def _xv(k):
    return VarId(Family.X, k)


def _yv(k):
    return VarId(Family.Y, k)


def omega_monomial(p: DyckPath, st: PathStats | None = None) -> Polynomial:
    """``prod_m x_m^{s_m} * prod_k y_k^{h_k}`` with h_k the height of rise k."""
    st = st or stats(p)
    exps = {_xv(m): c for m, c in st.segment_counts.items()}
    for k, h in enumerate(st.rise_heights, start=1):
        exps[_yv(k)] = h
    return _monomial(exps)


def high_peak_monomial(p: DyckPath, st: PathStats | None = None) -> Polynomial:
    """``prod_h y_h^{#high peaks at height h}``."""
    st = st or stats(p)
    return _monomial({_yv(h): c for h, c in st.high_peak_counts.items()})


def rise_height_monomial(p: DyckPath, st: PathStats | None = None) -> Polynomial:
    """``prod_k y_k^{h_k}``: the x-free part of the omega weight."""
    st = st or stats(p)
    return _monomial({_yv(k): h for k, h in enumerate(st.rise_heights, start=1)})


def _block_rise_exps(st: PathStats) -> dict:
    exps: dict = {}
    for j, h in zip(st.rise_blocks, st.rise_heights):
        if h:
            exps[_yv(j)] = exps.get(_yv(j), 0) + h
    return exps


def omega_block_monomial(p: DyckPath, st: PathStats | None = None) -> Polynomial:
    """Segment counts on x, rise heights on y indexed by rise block index."""
    st = st or stats(p)
    exps = {_xv(m): c for m, c in st.segment_counts.items()}
    exps.update(_block_rise_exps(st))
    return _monomial(exps)


def block_rise_monomial(p: DyckPath, st: PathStats | None = None) -> Polynomial:
    st = st or stats(p)
    return _monomial(_block_rise_exps(st))


STATISTICS = {
    "omega": omega_monomial,
    "high_peak": high_peak_monomial,
    "rise_height": rise_height_monomial,
    "omega_block": omega_block_monomial,
    "block_rise": block_rise_monomial,
}


def weighted_sum(n: int, statistic: str = "omega", limit: int = DEFAULT_LIMIT) -> Polynomial:
    """Sum of the chosen monomial over all Dyck paths of semilength n."""
    try:
        mono = STATISTICS[statistic]
    except KeyError:
        raise ValueError(f"unknown statistic {statistic!r}; choose from {sorted(STATISTICS)}") from None
    if n == 0:
        return ONE
    counts: Counter = Counter()
    for p in iter_paths(n, limit):
        counts[mono(p)] += 1
    return poly_sum(m.scale(c) for m, c in counts.items())
