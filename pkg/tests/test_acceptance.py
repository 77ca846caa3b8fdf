"""Acceptance gate: one PASS/FAIL line per criterion.

Every comparison is exact (polynomial or integer equality); the only
tolerances are the pinned time budgets.  Run directly with
``python3 tests/test_acceptance.py`` or through pytest, which prints the
same lines in its terminal summary.
"""

import sys
import time
from pathlib import Path

import pytest

from parametric_eco.algebra import Polynomial, var, x, y
from parametric_eco.closedform import (
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
from parametric_eco.dyck import DyckPath, high_peak_monomial, iter_paths, omega_monomial, stats, weighted_sum
from parametric_eco.prodmat import (
    border,
    border_gf_residual,
    dyck_main_matrix,
    fibonacci_example1,
    fibonacci_example2,
    gf_series,
    quadratic_residual,
    sequence,
    tail_ones,
    truncate,
)
from parametric_eco.rules import BUILTIN_RULES, builtin_rule, parse_rule, print_rule, rule_to_matrix, simulate_levels
from parametric_eco.verify import g1_brute_force, random_border_specs, structured_border_specs

sys.path.insert(0, str(Path(__file__).parent))
from conftest import ACCEPTANCE_LINES  # noqa: E402

# pinned budgets (seconds) and sizes
CATALAN_BUDGET_S = 1.0
ORACLE_BUDGET_S = 60.0
ORACLE_N_MAX = 10
EQUI_N_MAX = 10
BORDER_COUNT, BORDER_ORDER, BORDER_SEED, BORDER_MAX_SIZE = 50, 8, 0, 6
F0_RESIDUAL_ORDER, F0_METHODS_ORDER = 30, 20
FK_MAX, FK_ORDER = 3, 12
G1_MAX_SEMILENGTH, GN_MAX, GN_ORDER, CHEB_NS, CHEB_ORDER = 10, 4, 12, range(4, 9), 15
FINAL_ORDER = 12
STRUCT_N_MAX, STABILITY_N_MAX, STABILITY_EXTRA, SIM_DEPTH = 10, 12, 5, 8

REFERENCE_WORD = "uuduuududduuddddud"


def _first_bad(ns, pred):
    return [n for n in ns if not pred(n)]


def c01_catalan_line():
    start = time.perf_counter()
    got = sequence(dyck_main_matrix().substitute({"x*": 1, "y*": 1}), 9)
    elapsed = time.perf_counter() - start
    want = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
    ok = got == want and elapsed < CATALAN_BUDGET_S
    return ok, f"n=0..9 {'match' if got == want else 'mismatch'}, {elapsed:.3f}s (budget {CATALAN_BUDGET_S}s)"


def c02_fibonacci_examples():
    X = var("x")
    one = sequence(fibonacci_example1(), 5) == [1, 1, 2, 3, 5, 8]
    two = sequence(fibonacci_example2(), 5) == [1, 1, 1 + X, 1 + 2 * X, 1 + 3 * X + X**2, 1 + 4 * X + 3 * X**2]
    return one and two, f"integer matrix {'ok' if one else 'bad'}, polynomial matrix {'ok' if two else 'bad'}"


def c03_main_oracle():
    # literal statement: rise k carries y_k, rises numbered left to right
    start = time.perf_counter()
    seq = sequence(dyck_main_matrix(), ORACLE_N_MAX - 1)
    bad = _first_bad(range(1, ORACLE_N_MAX + 1), lambda n: weighted_sum(n, "omega") == x(0) * seq[n - 1])
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed <= ORACLE_BUDGET_S
    return ok, f"n=1..{ORACLE_N_MAX}, mismatches at n={bad}, {elapsed:.1f}s (budget {ORACLE_BUDGET_S:.0f}s)"


def c04_reference_path():
    p = DyckPath(REFERENCE_WORD)
    omega = omega_monomial(p) == x(0) ** 5 * x(1) * x(2) ** 3 * y(1) * y(2) ** 2 * y(4)
    peaks = high_peak_monomial(p) == y(1) * y(3) ** 3
    return omega and peaks, f"{REFERENCE_WORD}: omega {omega_monomial(p)}, high peaks {high_peak_monomial(p)}"


def c05_equidistribution():
    seq = sequence(dyck_main_matrix().substitute({"x*": 1}), EQUI_N_MAX - 1)
    ns = range(1, EQUI_N_MAX + 1)
    rise_bad = _first_bad(ns, lambda n: weighted_sum(n, "rise_height") == weighted_sum(n, "high_peak"))
    peak_bad = _first_bad(ns, lambda n: weighted_sum(n, "high_peak") == seq[n - 1])
    return not rise_bad and not peak_bad, (
        f"n=1..{EQUI_N_MAX}, rise-height != high-peak at n={rise_bad}, high-peak != matrix at n={peak_bad}"
    )


def c06_bordering():
    specs = random_border_specs(BORDER_COUNT, BORDER_SEED, BORDER_MAX_SIZE)
    sizes_ok = all(s.inner.size <= BORDER_MAX_SIZE for s in specs)
    bad = [i for i, s in enumerate(specs) if not border_gf_residual(s, BORDER_ORDER).is_zero()]
    struct_bad = [
        name
        for name, spec, target in structured_border_specs()
        if not (border_gf_residual(spec, BORDER_ORDER).is_zero() and truncate(border(spec), 10) == truncate(target, 10))
    ]
    ok = len(specs) >= 50 and sizes_ok and not bad and not struct_bad
    return ok, f"{len(specs)} random (seed {BORDER_SEED}) bad={bad}; structured bad={struct_bad}; order {BORDER_ORDER}"


def c07_f0():
    resid = quadratic_residual(f0_series(F0_RESIDUAL_ORDER), x(1), x(0), 1).is_zero()
    methods = f0_recurrence(F0_METHODS_ORDER) == f0_radical(F0_METHODS_ORDER)
    return resid and methods, f"residual zero to order {F0_RESIDUAL_ORDER}: {resid}; methods agree to {F0_METHODS_ORDER}: {methods}"


def c08_fk():
    P = dyck_main_matrix()
    bad = [
        k
        for k in range(1, FK_MAX + 1)
        if fk_series(k, FK_ORDER) != gf_series(P.substitute(tail_ones([x(0), x(1)], [y(j) for j in range(1, k + 1)])), FK_ORDER)
    ]
    return not bad, f"k=1..{FK_MAX}, order {FK_ORDER}, mismatches at k={bad}"


def c09_g_series():
    g1 = g1_series(G1_MAX_SEMILENGTH - 1) == g1_brute_force(G1_MAX_SEMILENGTH)
    P = dyck_main_matrix()
    T = var("t")
    gn_bad = [
        n for n in range(1, GN_MAX + 1)
        if gn_series(n, GN_ORDER) != gf_series(P.substitute({"x*": 1, "y*": 1, f"y{n}": T}), GN_ORDER)
    ]
    cheb_bad = [n for n in CHEB_NS if not cheb_form_residual(n, CHEB_ORDER).is_zero()]
    ok = g1 and not gn_bad and not cheb_bad
    return ok, f"G1 brute force (semilength <= {G1_MAX_SEMILENGTH}): {g1}; G_n bad={gn_bad}; Chebyshev bad={cheb_bad}"


def c10_quadratic_root():
    root = unique_quadratic_root(x(1) * y(1), x(0), y(1), FINAL_ORDER)
    target = fk_series(1, FINAL_ORDER)
    diff = next((i for i in range(FINAL_ORDER + 1) if root[i] != target[i]), None)
    return diff is None, f"order {FINAL_ORDER}, first differing coefficient: z^{diff}" if diff is not None else f"order {FINAL_ORDER}"


def c11_catalog():
    report = catalog_check()
    oracle_rows = [r.entry.oeis for r in report.results if r.reference == "oracle"]
    passed = sum(r.passed for r in report.results)
    ok = report.passed and len(report.results) == 15
    return ok, f"{passed}/{len(report.results)} PASS; checked against oracle: {oracle_rows}"


def c12_structural():
    problems = []
    for n in range(1, STRUCT_N_MAX + 1):
        for p in iter_paths(n):
            s = stats(p)
            if sum(s.segment_counts.values()) != n or s.segment_counts.get(0, 0) != len(s.peak_heights):
                problems.append(f"segments {p.steps}")
                break
    P = dyck_main_matrix()
    for n in range(STABILITY_N_MAX + 1):
        if sequence(P, n, size=n + 1)[-1] != sequence(P, n, size=n + 1 + STABILITY_EXTRA)[-1]:
            problems.append(f"truncation n={n}")
    for name in sorted(BUILTIN_RULES):
        rule = builtin_rule(name)
        if parse_rule(print_rule(rule)) != rule:
            problems.append(f"round trip {name}")
        seq = sequence(rule_to_matrix(rule, SIM_DEPTH + 1), SIM_DEPTH)
        if simulate_levels(rule, SIM_DEPTH) != [rule.axiom_weight * a for a in seq]:
            problems.append(f"simulate {name}")
    return not problems, "all invariants hold" if not problems else f"violations: {problems}"


CRITERIA = [
    (1, "Catalan line", c01_catalan_line),
    (2, "Fibonacci examples", c02_fibonacci_examples),
    (3, "main oracle equivalence", c03_main_oracle),
    (4, "reference path pin", c04_reference_path),
    (5, "rise-height / high-peak equidistribution", c05_equidistribution),
    (6, "bordering property suite", c06_bordering),
    (7, "F0 quadratic and method agreement", c07_f0),
    (8, "F_k recursion vs matrix", c08_fk),
    (9, "G_n recursion and Chebyshev form", c09_g_series),
    (10, "final quadratic root = F(x0,x1;y1;z)", c10_quadratic_root),
    (11, "specialisation catalog", c11_catalog),
    (12, "structural invariants", c12_structural),
]


def _run(number, title, fn):
    ok, detail = fn()
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}: {title} -- {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    return ok, line


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn):
    ok, line = _run(number, title, fn)
    assert ok, line


if __name__ == "__main__":
    results = [_run(*c)[0] for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
