import math

import pytest
from hypothesis import given, settings, strategies as st

from design_spectra.design import DesignParams, check_design, param_identity
from design_spectra.formulas import (even_n_condition, gamma_pair, gaussian_binomial,
                                     part_quotient, quotient_P, s_is_integral, s_parameters,
                                     s_spectrum)
from design_spectra.generators import subspace_graph
from design_spectra.graph import distance_matrix
from design_spectra.spectra import Quadratic, char_poly_exact, exact_roots, numeric_spectrum

sympy = pytest.importorskip("sympy")


def test_heawood_values():
    p = DesignParams(7, 3, 1)
    assert gamma_pair(p) == (27, -3)
    assert part_quotient(p) == [[12, 15], [15, 12]]
    assert quotient_P(p) == [[0, 12, 3, 12], [2, 10, 7, 8], [1, 14, 4, 8], [3, 12, 6, 6]]


@pytest.mark.parametrize("params, factors", [
    ((3, 2, 1), [(0, 1), (9, 1), (-1, 1), (-4, 1)]),
    ((4, 3, 2), [(0, 2), (12, 1), (-4, 1)]),
    ((5, 4, 3), [(0, 1), (15, 1), (1, 1), (-4, 1)]),
    ((16, 6, 2), [(66, 1), (2, 1), (-6, 2)]),
])
def test_quotient_charpoly_frozen(params, factors):
    x = sympy.Symbol("x")
    got = sympy.Matrix(quotient_P(DesignParams(*params))).charpoly(x).as_expr()
    want = sympy.Mul(*[(x - r) ** k for r, k in factors])
    assert sympy.expand(got - want) == 0


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 60), st.integers(2, 30), st.integers(1, 30))
def test_quotient_rows_and_gammas(m, d, c):
    p = DesignParams(m, d, c)
    rows = quotient_P(p)
    assert all(sum(r) == 5 * m - 2 * d - 2 for r in rows)
    assert rows[0] == [0, 2 * m - 2, d, 3 * m - 3 * d]
    g1, g2 = gamma_pair(p)
    assert g1 == sum(part_quotient(p)[0])
    assert g2 == part_quotient(p)[0][0] - part_quotient(p)[0][1]


@pytest.mark.parametrize("n, k, q, want", [(3, 1, 2, 7), (4, 2, 2, 35), (4, 1, 3, 40),
                                           (5, 2, 3, 1210), (6, 3, 2, 1395), (3, 0, 5, 1),
                                           (3, 3, 5, 1)])
def test_gaussian_binomial(n, k, q, want):
    assert gaussian_binomial(n, k, q) == want


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.integers(0, 8), st.sampled_from([2, 3, 4, 5, 7]))
def test_gaussian_binomial_pascal(n, k, q):
    k = min(k, n)
    if 0 < k < n:
        assert gaussian_binomial(n, k, q) == (gaussian_binomial(n - 1, k - 1, q)
                                              + q**k * gaussian_binomial(n - 1, k, q))
    assert gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q)


def test_gaussian_binomial_errors():
    with pytest.raises(ValueError):
        gaussian_binomial(3, 4, 2)
    with pytest.raises(ValueError):
        gaussian_binomial(3, 1, 1)


@pytest.mark.parametrize("q, n, want", [(2, 3, (7, 3, 1)), (3, 4, (40, 13, 4)),
                                        (4, 3, (21, 5, 1)), (2, 9, (511, 255, 127))])
def test_s_parameters(q, n, want):
    p = s_parameters(q, n)
    assert p.as_tuple() == want and param_identity(p)


@pytest.mark.parametrize("q, n, want", [
    (2, 3, (27, -3, Quadratic(-2, -2, 2, 1), Quadratic(-2, 2, 2, 1))),
    (3, 4, (172, -16, -8, 4)),
    (4, 3, (93, -13, -6, 2)),
    (2, 9, (2043, -3, Quadratic(-2, -16, 2, 1), Quadratic(-2, 16, 2, 1))),
])
def test_s_spectrum_values(q, n, want):
    assert s_spectrum(q, n) == want


@pytest.mark.parametrize("q, n", [(2, 3), (2, 4), (3, 3), (4, 3), (3, 4), (5, 3), (2, 5)])
def test_s_spectrum_matches_exact_roots(q, n):
    dm = distance_matrix(subspace_graph(q, n))
    roots, rest = exact_roots(char_poly_exact(dm), numeric_spectrum(dm).values)
    assert rest.degree == 0
    assert set(roots) == set(s_spectrum(q, n))
    assert s_parameters(q, n) == check_design(subspace_graph(q, n))


@pytest.mark.parametrize("q, n, integral, even", [
    (2, 3, False, False), (2, 4, True, True), (3, 3, False, False), (3, 4, True, True),
    (4, 3, True, False), (9, 3, True, False), (2, 9, False, False), (5, 6, True, True),
])
def test_integrality(q, n, integral, even):
    assert s_is_integral(q, n) is integral
    assert even_n_condition(n) is even
    assert integral == all(isinstance(v, int) for v in s_spectrum(q, n))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9, 16, 25]), st.integers(3, 12))
def test_integrality_criterion(q, n):
    r = q ** (n + 2)
    assert s_is_integral(q, n) == (math.isqrt(r) ** 2 == r)
    if even_n_condition(n):
        assert s_is_integral(q, n)


def test_bad_qn():
    with pytest.raises(ValueError):
        s_spectrum(2, 2)
    with pytest.raises(ValueError):
        s_parameters(1, 3)
