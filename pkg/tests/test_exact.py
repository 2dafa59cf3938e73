"""Exact complex-rational scalar and matrix arithmetic."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ks18 import ComplexFraction, ExactMatrix
from ks18.exact import exact_vector, inner, kron, outer

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
scalars = st.builds(ComplexFraction, rationals, rationals)


def matrices(n: int, m: int):
    return st.lists(
        st.lists(scalars, min_size=m, max_size=m), min_size=n, max_size=n
    ).map(ExactMatrix)


class TestComplexFraction:
    def test_exact_field_arithmetic(self):
        a = ComplexFraction(Fraction(1, 3), Fraction(-2, 7))
        b = ComplexFraction(Fraction(5, 6), Fraction(1, 2))
        assert (a + b).re == Fraction(7, 6)
        assert (a - b).im == Fraction(-11, 14)
        prod = a * b
        assert prod.re == Fraction(1, 3) * Fraction(5, 6) + Fraction(2, 7) * Fraction(1, 2)
        assert (a / b) * b == a

    def test_coerce_and_equality(self):
        assert ComplexFraction.coerce(3) == ComplexFraction(3)
        assert ComplexFraction(Fraction(1, 2)) == Fraction(1, 2)
        assert ComplexFraction(1, 1) != ComplexFraction(1)
        assert hash(ComplexFraction(2)) == hash(ComplexFraction(Fraction(2)))

    def test_float_input_rejected(self):
        with pytest.raises(TypeError):
            ComplexFraction(0.5)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ComplexFraction(1) / ComplexFraction(0)

    def test_predicates(self):
        assert ComplexFraction(0, 0).is_zero
        assert ComplexFraction(Fraction(3, 4)).is_real
        assert not ComplexFraction(0, 1).is_real

    @given(scalars, scalars)
    def test_conjugation_is_multiplicative(self, a, b):
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()

    @given(scalars)
    def test_abs2_is_self_times_conjugate(self, a):
        assert (a * a.conjugate()).re == a.abs2()
        assert (a * a.conjugate()).im == 0

    @given(scalars, scalars, scalars)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c


class TestExactMatrix:
    def test_shape_validation(self):
        with pytest.raises(ValueError):
            ExactMatrix([])
        with pytest.raises(ValueError):
            ExactMatrix([[1, 2], [3]])

    def test_identity_and_zeros(self):
        ident = ExactMatrix.identity(3)
        assert ident @ ident == ident
        assert ident + ExactMatrix.zeros(3) == ident
        half = ExactMatrix.identity(2, Fraction(1, 2))
        assert (half + half) == ExactMatrix.identity(2)

    def test_scalar_and_matmul(self):
        m = ExactMatrix([[1, 2], [3, 4]])
        assert (m * 2).rows[1][1] == ComplexFraction(8)
        sq = m @ m
        assert sq[0, 0] == ComplexFraction(7)
        assert sq[1, 1] == ComplexFraction(22)

    def test_matmul_shape_mismatch(self):
        with pytest.raises(ValueError):
            ExactMatrix.identity(2) @ ExactMatrix.identity(3)

    def test_add_shape_mismatch(self):
        with pytest.raises(ValueError):
            ExactMatrix.identity(2) + ExactMatrix.identity(3)

    def test_trace_requires_square(self):
        with pytest.raises(ValueError):
            ExactMatrix([[1, 2, 3], [4, 5, 6]]).trace()

    def test_hermitian_detection(self):
        i = ComplexFraction(0, 1)
        m = ExactMatrix([[1, i], [-i, 2]])
        assert m.is_hermitian()
        assert not ExactMatrix([[0, 1], [0, 0]]).is_hermitian()

    def test_to_numpy_round_trip(self):
        m = ExactMatrix([[Fraction(1, 2), ComplexFraction(0, 1)], [0, 3]])
        arr = m.to_numpy()
        assert arr.dtype == complex
        assert arr[0, 0] == 0.5 and arr[0, 1] == 1j

    @settings(max_examples=40)
    @given(matrices(3, 3), matrices(3, 3), matrices(3, 3))
    def test_matmul_associativity(self, a, b, c):
        assert (a @ b) @ c == a @ (b @ c)

    @settings(max_examples=40)
    @given(matrices(3, 3), matrices(3, 3))
    def test_conjugate_transpose_antihomomorphism(self, a, b):
        assert (a @ b).conjugate_transpose() == (
            b.conjugate_transpose() @ a.conjugate_transpose()
        )

    @settings(max_examples=40)
    @given(matrices(3, 3), matrices(3, 3))
    def test_trace_linearity_and_cyclicity(self, a, b):
        assert (a + b).trace() == a.trace() + b.trace()
        assert (a @ b).trace() == (b @ a).trace()


class TestVectorHelpers:
    def test_inner_conjugates_first_argument(self):
        i = ComplexFraction(0, 1)
        v = exact_vector([i, 1])
        w = exact_vector([1, 0])
        assert inner(v, w) == ComplexFraction(0, -1)
        assert inner(w, v) == i

    def test_inner_length_mismatch(self):
        with pytest.raises(ValueError):
            inner([1, 2], [1, 2, 3])

    def test_outer_shape_and_values(self):
        m = outer([1, ComplexFraction(0, 1)], [1, 1])
        assert m.shape == (2, 2)
        assert m[1, 0] == ComplexFraction(0, 1)

    def test_kron_against_numpy(self):
        a = ExactMatrix([[1, 2], [3, 4]])
        b = ExactMatrix([[0, 1], [1, 0]])
        k = kron(a, b)
        assert k.shape == (4, 4)
        assert np.allclose(k.to_numpy(), np.kron(a.to_numpy(), b.to_numpy()))

    @given(matrices(2, 2), matrices(2, 2), matrices(2, 2), matrices(2, 2))
    @settings(max_examples=25)
    def test_kron_mixed_product(self, a, b, c, d):
        assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)
