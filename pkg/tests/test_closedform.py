import json
from fractions import Fraction

import pytest

from parametric_eco.algebra import PowerSeries, var, x, y
from parametric_eco.closedform import (
    T,
    catalan_series,
    catalog,
    catalog_check,
    cheb_form_residual,
    cheb_v,
    chebyshev_u,
    f0_radical,
    f0_recurrence,
    f0_series,
    fk_series,
    g1_series,
    gn_series,
    oracle_prefix,
    unique_quadratic_root,
)
from parametric_eco.dyck import iter_paths, stats
from parametric_eco.prodmat import ProductionMatrix, dyck_main_matrix, gf_series, tail_ones

CAT4 = PowerSeries([1, 2, 5, 14], 3)


def test_catalan_series():
    assert catalan_series(4) == PowerSeries([1, 1, 2, 5, 14], 4)
    assert catalan_series(0) == PowerSeries([1], 0)
    assert catalan_series(10)[10] == 16796


def test_f0_coefficients():
    f = f0_series(4)
    assert f[0] == 1
    assert f[1] == x(0) + x(1)
    assert f[2] == x(0) ** 2 + 2 * x(0) * x(1) + x(1) ** 2 + x(0)
    assert f0_series(3).substitute({"x0": 1, "x1": 1}) == CAT4


def test_f0_methods_agree():
    assert f0_recurrence(14) == f0_radical(14)


def test_fk_examples():
    assert fk_series(1, 3).substitute({"x*": 1, "y*": 1}) == CAT4
    M1 = dyck_main_matrix().substitute(tail_ones([x(0), x(1)], [y(1)]))
    assert fk_series(1, 10) == gf_series(M1, 10)
    M3 = dyck_main_matrix().substitute(tail_ones([x(0), x(1)], [y(1), y(2), y(3)]))
    assert fk_series(3, 8) == gf_series(M3, 8)
    assert fk_series(0, 6) == f0_series(6)


def _height_count_series(height, order, t_value):
    coeffs = []
    for n in range(1, order + 2):
        total = 0
        for p in iter_paths(n):
            k = stats(p).high_peak_counts.get(height, 0)
            total += t_value**k
        coeffs.append(total)
    return PowerSeries(coeffs, order)


def test_g1_examples():
    assert g1_series(3).substitute({"t": 1}) == CAT4
    # no peak at height 1: 1 + z C^2 = C, confirmed by brute force
    assert g1_series(5).substitute({"t": 0}) == catalan_series(5)
    assert g1_series(5).substitute({"t": 0}) == _height_count_series(1, 5, 0)
    assert g1_series(3)[1] == 1 + T


def test_gn_examples():
    assert gn_series(1, 8) == g1_series(8)
    assert gn_series(2, 4).substitute({"t": 0}) == _height_count_series(2, 4, 0)
    M = dyck_main_matrix().substitute({"x*": 1, "y*": 1, "y3": T})
    assert gn_series(3, 10) == gf_series(M, 10)


def test_cheb_v_examples():
    assert cheb_v(2).coeffs == (1, -1)
    assert cheb_v(4).coeffs == (1, -3, 1)
    assert cheb_v(-1).coeffs == ()
    assert cheb_v(0).coeffs == (1,)
    with pytest.raises(ValueError):
        cheb_v(-2)


@pytest.mark.parametrize("m", range(0, 11))
def test_cheb_v_against_explicit_u(m):
    # V_m(z) = z^(m/2) U_m(1/(2 sqrt z)); at z = 1/9, sqrt z = 1/3
    z = Fraction(1, 9)
    assert cheb_v(m).evaluate(z) == Fraction(1, 3) ** m * chebyshev_u(m, Fraction(3, 2))


@pytest.mark.parametrize("n", [4, 6])
def test_cheb_form(n):
    assert cheb_form_residual(n, 15).is_zero()


def test_cheb_form_specialised():
    assert cheb_form_residual(8, 20).substitute({"t": 1}).is_zero()
    with pytest.raises(ValueError):
        cheb_form_residual(3, 5)


def test_quadratic_root_all_ones_is_shifted_catalan():
    assert unique_quadratic_root(1, 1, 1, 3) == CAT4


def test_quadratic_root_matches_self_similar_matrix():
    # the fixed point of bordering with (b, r, c) = (0, 1, 1):
    # zero diagonal, ones on the superdiagonal and everywhere below
    M = ProductionMatrix(lambda i, j: 0 if j >= i + 2 or i == j else 1, name="fixed")
    assert unique_quadratic_root(0, 1, 1, 10) == gf_series(M, 10)


def test_quadratic_root_generic():
    b, r, c = var("b"), var("r"), var("c")
    f = unique_quadratic_root(b, r, c, 6)
    z = PowerSeries.z(6)
    resid = (r * c) * z * z * f * f - (1 - (b + r) * z) * f + 1
    assert resid.is_zero()


def test_catalog_shape():
    entries = catalog()
    assert len(entries) == 15
    typos = [e for e in entries if e.provenance == "suspected_typo"]
    assert {e.oeis for e in typos} == {"A091869", "A007318"}
    assert all(e.printed_prefix for e in typos)
    assert len({e.name for e in entries}) == 15


def test_catalog_examples():
    by_name = {e.name: e for e in catalog()}
    P = dyck_main_matrix()
    from parametric_eco.prodmat import sequence

    assert sequence(P.substitute(by_name["catalan"].substitution), 3) == [1, 2, 5, 14]
    assert sequence(P.substitute(by_name["narayana"].substitution), 3) == [
        1, 1 + T, 1 + 3 * T + T**2, 1 + 6 * T + 6 * T**2 + T**3,
    ]
    pascal = [e for e in catalog() if e.oeis == "A007318"]
    for e in pascal:
        assert sequence(P.substitute(e.substitution), 3) == [1, 1 + T, (1 + T) ** 2, (1 + T) ** 3]


def test_catalog_check_passes_and_reports():
    report = catalog_check()
    assert report.passed
    assert len(report.results) == 15
    doc = json.loads(report.to_json())
    typo_rows = [d for d in doc if "printed" in d]
    assert len(typo_rows) == 3
    assert all(d["reference"] == "oracle" for d in typo_rows)
    assert "printed:" in report.to_text()


def test_oracle_prefix_handles_x0_zero():
    e = next(e for e in catalog() if e.name == "pascal-y")
    assert oracle_prefix(e.substitution, 4) == [1, 1 + T, (1 + T) ** 2, (1 + T) ** 3]
