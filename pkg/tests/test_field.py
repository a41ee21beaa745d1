import itertools

import numpy as np
import pytest

from design_spectra.field import (Field, field_of_order, incidence_matrix, is_irreducible,
                                  is_prime, prime_power, projective_points,
                                  smallest_irreducible)

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9]


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    assert prime_power(6) is None
    assert prime_power(1) is None
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_not_a_field():
    with pytest.raises(ValueError):
        field_of_order(6)
    with pytest.raises(ValueError):
        Field(4)


def test_moduli_are_smallest_irreducibles():
    # coefficient lists are ascending: x^2 + x + 1, x^3 + x + 1, x^2 + 1
    assert smallest_irreducible(2, 2) == [1, 1, 1]
    assert smallest_irreducible(2, 3) == [1, 1, 0, 1]
    assert smallest_irreducible(3, 2) == [1, 0, 1]
    assert not is_irreducible([1, 0, 1], 2)  # (x + 1)^2


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    f = field_of_order(q)
    els = list(f.elements)
    for a, b in itertools.product(els, repeat=2):
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.sub(f.add(a, b), b) == a
    for a, b, c in itertools.product(els, repeat=3):
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    for a in els:
        assert f.add(a, 0) == a and f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
            assert f.div(a, a) == 1


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_multiplicative_group_is_cyclic(q):
    f = field_of_order(q)

    def order(a):
        x, k = a, 1
        while x != 1:
            x, k = f.mul(x, a), k + 1
        return k

    assert max(order(a) for a in range(1, q)) == q - 1


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        field_of_order(4).inv(0)


def test_element_range_checked():
    with pytest.raises(ValueError):
        field_of_order(4).add(4, 0)


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_tables_match_scalar_ops(q):
    f = field_of_order(q)
    for a, b in itertools.product(f.elements, repeat=2):
        assert f.add_table[a, b] == f.add(a, b)
        assert f.mul_table[a, b] == f.mul(a, b)


def test_normalize():
    f = field_of_order(5)
    assert f.normalize((0, 3, 1)) == (0, 1, 2)
    with pytest.raises(ValueError):
        f.normalize((0, 0, 0))


@pytest.mark.parametrize("q, n", [(2, 3), (3, 3), (4, 3), (2, 4), (3, 4), (5, 3), (9, 3)])
def test_projective_points_count_and_order(q, n):
    f = field_of_order(q)
    pts = projective_points(f, n)
    assert len(pts) == (q**n - 1) // (q - 1)
    assert pts == sorted(pts)
    assert all(f.normalize(p) == p for p in pts)
    # brute force: each nonzero vector is a scalar multiple of exactly one point
    seen = {f.normalize(v) for v in itertools.product(range(q), repeat=n) if any(v)}
    assert seen == set(pts)


@pytest.mark.parametrize("q, n", [(2, 3), (3, 3), (4, 3), (2, 4), (8, 3)])
def test_incidence_matches_dot_product(q, n):
    f = field_of_order(q)
    pts = projective_points(f, n)
    inc = incidence_matrix(f, pts, pts)
    want = np.array([[f.dot(u, h) == 0 for h in pts] for u in pts])
    assert (inc == want).all()
    m = len(pts)
    # every hyperplane holds (q^(n-1)-1)/(q-1) points
    assert set(inc.sum(axis=0).tolist()) == {(q ** (n - 1) - 1) // (q - 1)}
    assert inc.shape == (m, m)


def test_two_dim_subspaces_of_gf2_4():
    # brute-force count of 2-dim subspaces via spans of point pairs
    f = field_of_order(2)
    pts = projective_points(f, 4)
    spans = set()
    for u, v in itertools.combinations(pts, 2):
        w = tuple(f.add(a, b) for a, b in zip(u, v))
        spans.add(frozenset({u, v, w}))
    assert len(spans) == 35
