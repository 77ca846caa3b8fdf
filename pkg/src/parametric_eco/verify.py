"""Verification suites: each check compares two independent computations."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import Polynomial, PowerSeries, var, x, y
from .closedform import (
    T,
    catalog_check,
    cheb_form_residual,
    f0_radical,
    f0_recurrence,
    f0_series,
    fk_series,
    g1_series,
    gn_series,
    unique_quadratic_root,
)
from .dyck import iter_paths, stats, weighted_sum
from .prodmat import (
    BorderSpec,
    ProductionMatrix,
    border,
    border_gf_residual,
    dyck_main_matrix,
    f0_matrix,
    gf_series,
    quadratic_residual,
    sequence,
    tail_ones,
    truncate,
)

__all__ = ["Check", "SUITES", "run_suite", "random_border_specs", "structured_border_specs"]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        out = f"{'PASS' if self.passed else 'FAIL'}: {self.name}"
        return f"{out} ({self.detail})" if self.detail else out


def _range_check(name, ns, pred) -> Check:
    bad = [n for n in ns if not pred(n)]
    detail = f"n={ns[0]}..{ns[-1]}" if not bad else f"fails for n={bad}"
    return Check(name, not bad, detail)


def suite_oracle(n_max: int = 8, **_) -> list[Check]:
    seq = sequence(dyck_main_matrix(), n_max - 1)
    ns = list(range(1, n_max + 1))
    return [
        _range_check(
            "weighted path sums, rises numbered left to right = x0 u P^(n-1) e",
            ns,
            lambda n: weighted_sum(n, "omega") == x(0) * seq[n - 1],
        ),
        _range_check(
            "weighted path sums, rises indexed by preceding blocks = x0 u P^(n-1) e",
            ns,
            lambda n: weighted_sum(n, "omega_block") == x(0) * seq[n - 1],
        ),
    ]


def suite_equi(n_max: int = 8, **_) -> list[Check]:
    seq = sequence(dyck_main_matrix().substitute({"x*": 1}), n_max - 1)
    ns = list(range(1, n_max + 1))
    return [
        _range_check(
            "high-peak sums = u (P|x=1)^(n-1) e",
            ns,
            lambda n: weighted_sum(n, "high_peak") == seq[n - 1],
        ),
        _range_check(
            "rise-height sums (left-to-right numbering) = high-peak sums",
            ns,
            lambda n: weighted_sum(n, "rise_height") == weighted_sum(n, "high_peak"),
        ),
        _range_check(
            "rise-height sums (block indexing) = high-peak sums",
            ns,
            lambda n: weighted_sum(n, "block_rise") == weighted_sum(n, "high_peak"),
        ),
    ]


def g1_brute_force(max_semilength: int) -> PowerSeries:
    """Coefficient i: sum over paths of semilength i+1 of t^(#peaks at height 1)."""
    coeffs = []
    for n in range(1, max_semilength + 1):
        acc = Polynomial()
        counts: dict[int, int] = {}
        for p in iter_paths(n):
            j = stats(p).high_peak_counts.get(1, 0)
            counts[j] = counts.get(j, 0) + 1
        for j, c in counts.items():
            acc = acc + (T ** j).scale(c)
        coeffs.append(acc)
    return PowerSeries(coeffs, max_semilength - 1)


def suite_identities(order: int = 12, n_max: int = 10, **_) -> list[Check]:
    P = dyck_main_matrix()
    checks = []
    f0 = f0_series(order)
    checks.append(Check("F0 satisfies x0 z^2 F^2 - (1 - (x0+x1) z) F + 1 = 0",
                        quadratic_residual(f0, x(1), x(0), 1).is_zero(), f"order {order}"))
    checks.append(Check("F0 recurrence = F0 radical expansion",
                        f0_recurrence(order) == f0_radical(order), f"order {order}"))
    checks.append(Check("F0 = matrix series with x0, x1 free",
                        f0 == gf_series(f0_matrix(), order), f"order {order}"))
    for k in (1, 2, 3):
        M = P.substitute(tail_ones([x(0), x(1)], [y(j) for j in range(1, k + 1)]))
        checks.append(Check(f"F_{k} recursion = matrix series with y1..y{k} free",
                            fk_series(k, order) == gf_series(M, order), f"order {order}"))
    checks.append(Check("G1 = brute-force counts of peaks at height 1",
                        g1_series(n_max - 1) == g1_brute_force(n_max), f"semilength <= {n_max}"))
    for n in range(1, 5):
        M = P.substitute({"x*": 1, "y*": 1, f"y{n}": T})
        checks.append(Check(f"G_{n} recursion = matrix series with y{n} -> t",
                            gn_series(n, order) == gf_series(M, order), f"order {order}"))
    for n in range(4, 9):
        checks.append(Check(f"Chebyshev form of G_{n}", cheb_form_residual(n, 15).is_zero(), "order 15"))
    root = unique_quadratic_root(x(1) * y(1), x(0), y(1), order)
    checks.append(Check("quadratic root (x1 y1, x0, y1) = F(x0,x1;y1;z)",
                        root == fk_series(1, order), f"order {order}"))
    all_y1 = P.substitute({"x*": 1, "y*": y(1), "x0": x(0), "x1": x(1)})
    checks.append(Check("quadratic root (x1 y1, x0, y1) = matrix series with every y_k -> y1",
                        root == gf_series(all_y1, order), f"order {order}"))
    return checks


def random_border_specs(count: int = 50, seed: int = 0, max_size: int = 6) -> list[BorderSpec]:
    """Seeded random Hessenberg inner matrices with entries of degree <= 1."""
    rng = random.Random(seed)
    gens = [x(0), x(1), y(1), var("p"), var("q")]
    specs = []
    for _ in range(count):
        size = rng.randint(1, max_size)
        rows = []
        for i in range(1, size + 1):
            row = []
            for j in range(1, size + 1):
                if j > i + 1:
                    row.append(0)
                else:
                    c = rng.randint(-2, 3)
                    row.append(rng.choice(gens) * c if rng.random() < 0.6 else Polynomial.constant(c))
            rows.append(row)
        specs.append(BorderSpec(var("b"), var("r"), var("c"), ProductionMatrix.from_rows(rows)))
    return specs


def structured_border_specs(n_levels: int = 4) -> list[tuple[str, BorderSpec, ProductionMatrix]]:
    """(name, spec, matrix the bordering should reproduce)."""
    P = dyck_main_matrix()
    f0 = f0_matrix()
    f1 = P.substitute(tail_ones([x(0), x(1)], [y(1)]))
    out = [
        ("F0 matrix is self-similar", BorderSpec(x(1), x(0), 1, f0), f0),
        ("F1 matrix = border of F0 matrix", BorderSpec(x(1) * y(1), x(0), y(1), f0), f1),
    ]
    for n in range(2, n_levels + 1):
        inner = P.substitute({"x*": 1, "y*": 1, f"y{n - 1}": T})
        target = P.substitute({"x*": 1, "y*": 1, f"y{n}": T})
        out.append((f"P_{n} = border(1, 1, 1, P_{n - 1})", BorderSpec(1, 1, 1, inner), target))
    return out


def suite_border(order: int = 8, count: int = 50, seed: int = 0, **_) -> list[Check]:
    specs = random_border_specs(count, seed)
    bad = [i for i, s in enumerate(specs) if not border_gf_residual(s, order).is_zero()]
    checks = [Check(f"bordering identity on {count} random matrices (seed {seed})", not bad,
                    f"order {order}" if not bad else f"nonzero residual for #{bad}")]
    for name, spec, target in structured_border_specs():
        same = truncate(border(spec), 10) == truncate(target, 10)
        resid = border_gf_residual(spec, order).is_zero()
        checks.append(Check(name, same and resid, f"10x10 window, residual order {order}"))
    return checks


def suite_catalog(order: int | None = None, **_) -> list[Check]:
    report = catalog_check(order)
    checks = []
    for r in report.results:
        e = r.entry
        detail = f"{e.oeis}, {r.reference}"
        if r.first_mismatch is not None:
            detail += f", first mismatch at n={r.first_mismatch}"
        checks.append(Check(f"{e.shorthand} {e.name}", r.passed, detail))
    return checks


SUITES = {
    "oracle": suite_oracle,
    "equi": suite_equi,
    "identities": suite_identities,
    "border": suite_border,
    "catalog": suite_catalog,
}


def run_suite(name: str, **bounds) -> list[Check]:
    bounds = {k: v for k, v in bounds.items() if v is not None}
    if name == "all":
        return [c for suite in SUITES.values() for c in suite(**bounds)]
    try:
        suite = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}") from None
    return suite(**bounds)
