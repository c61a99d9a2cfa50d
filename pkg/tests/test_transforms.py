from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from sdgamma.errors import DimensionMismatch, SymmetryError
from sdgamma.transforms import (
    CountVector, IntPolynomial, f_from_h, g_from_gamma, g_from_h, gamma_from_symmetric,
    gamma_to_poly, gamma_transform_matrices, h_from_f, h_from_gamma, is_symmetric, padded,
)


def poly_h_from_f(f, d):
    # expand sum f_i t^i (1 - t)^(d - i) with IntPolynomial arithmetic
    one_minus_t = IntPolynomial([1, -1])
    out = IntPolynomial()
    for i, fi in enumerate(f):
        term = IntPolynomial.monomial(i, fi)
        for _ in range(d - i):
            term = term * one_minus_t
        out = out + term
    return out.padded(d + 1)


def test_poly_basics():
    p = IntPolynomial([1, 11, 11, 1, 0, 0])
    assert p.degree == 3
    assert p == (1, 11, 11, 1)
    assert str(p) == "1 + 11t + 11t^2 + t^3"
    assert p(1) == 24
    assert IntPolynomial().degree == -1
    assert (p - p) == 0
    assert IntPolynomial.one_plus_t(3) == [1, 3, 3, 1]
    assert p.shift(2)[2] == 1 and p[10] == 0


def test_count_vector_is_a_tuple():
    v = CountVector([1, 2], "gamma")
    assert v == (1, 2) and hash(v) == hash((1, 2))
    assert v.role == "gamma"


def test_triangle_boundary():
    h = h_from_f((1, 3, 3), 2)
    assert h == (1, 1, 1)
    assert g_from_h(h) == (1, 0)
    assert gamma_from_symmetric(h, 2) == (1, -1)


def test_octahedron_h():
    assert h_from_f((1, 6, 12, 8), 3) == (1, 3, 3, 1)


def test_length_mismatch():
    with pytest.raises(DimensionMismatch):
        h_from_f((1, 3), 2)
    with pytest.raises(DimensionMismatch):
        f_from_h((1, 1, 1, 1), 2)
    with pytest.raises(DimensionMismatch):
        gamma_from_symmetric([1, 0, 0, 1], 2)


def test_asymmetric_gamma_names_index():
    with pytest.raises(SymmetryError) as exc:
        gamma_from_symmetric([1, 2, 3, 1], 3)
    assert exc.value.index == 1


def test_eulerian_gamma():
    assert gamma_from_symmetric([1, 11, 11, 1], 3) == (1, 8)
    assert gamma_to_poly((1, 8), 3) == (1, 11, 11, 1)


def test_padded():
    assert padded((1, 2), 4) == (1, 2, 0, 0)
    assert padded((1, 2, 0), 2) == (1, 2)
    with pytest.raises(DimensionMismatch):
        padded((1, 2, 3), 2)


def test_same_polynomial_two_axes():
    # t(1+t) is symmetric about 1 only when read with D = 2
    assert gamma_from_symmetric([0, 1, 1, 0], 3) == (0, 1)
    with pytest.raises(SymmetryError):
        gamma_from_symmetric([0, 1, 1], 2)


ints = st.integers(-50, 50)


@settings(max_examples=200)
@given(st.lists(ints, min_size=1, max_size=21))
def test_f_h_round_trip(f):
    d = len(f) - 1
    h = h_from_f(f, d)
    assert tuple(h) == poly_h_from_f(f, d)
    assert f_from_h(h, d) == tuple(f)


@settings(max_examples=200)
@given(st.integers(0, 20), st.data())
def test_gamma_round_trip(D, data):
    half = [data.draw(ints) for _ in range(D // 2 + 1)]
    coeffs = [half[min(i, D - i)] if min(i, D - i) < len(half) else 0 for i in range(D + 1)]
    p = IntPolynomial(coeffs)
    assert is_symmetric(coeffs, D)
    assert gamma_to_poly(gamma_from_symmetric(p, D), D) == p


@settings(max_examples=100)
@given(st.integers(0, 14), st.data())
def test_transform_matrices(d, data):
    gamma = [data.draw(ints) for _ in range(d // 2 + 1)]
    A, B = gamma_transform_matrices(d)
    h = h_from_gamma(gamma, d)
    assert all(sum(a * x for a, x in zip(row, gamma)) == h[i] for i, row in enumerate(A))
    assert g_from_gamma(gamma, d) == g_from_h(h)
    for i in range(d // 2 + 1):
        assert h[i] == sum(gamma[j] * comb(d - 2 * j, i - j) for j in range(i + 1))
