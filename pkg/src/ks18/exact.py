"""Exact complex-rational scalars and small dense matrices.

Operators assembled from integer vectors and Pauli tensor products have
entries whose real and imaginary parts are rationals, so identities like
orthogonality, idempotence, and operator completeness can be checked with
zero tolerance.  Floating point enters only through ``to_numpy``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]
ScalarLike = Union[int, Fraction, "ComplexFraction"]


def _as_fraction(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class ComplexFraction:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational = 0, im: Rational = 0):
        self.re = _as_fraction(re)
        self.im = _as_fraction(im)

    @staticmethod
    def coerce(x: ScalarLike) -> "ComplexFraction":
        if isinstance(x, ComplexFraction):
            return x
        return ComplexFraction(_as_fraction(x))

    def conjugate(self) -> "ComplexFraction":
        return ComplexFraction(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, an exact rational."""
        return self.re * self.re + self.im * self.im

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __add__(self, other: ScalarLike) -> "ComplexFraction":
        o = ComplexFraction.coerce(other)
        return ComplexFraction(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "ComplexFraction":
        o = ComplexFraction.coerce(other)
        return ComplexFraction(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: ScalarLike) -> "ComplexFraction":
        return ComplexFraction.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> "ComplexFraction":
        o = ComplexFraction.coerce(other)
        return ComplexFraction(self.re * o.re - self.im * o.im,
                               self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "ComplexFraction":
        o = ComplexFraction.coerce(other)
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero")
        return self * ComplexFraction(o.re / d, -o.im / d)

    def __neg__(self) -> "ComplexFraction":
        return ComplexFraction(-self.re, -self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ComplexFraction(other)
        if not isinstance(other, ComplexFraction):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        if self.im == 0:
            return f"ComplexFraction({self.re!r})"
        return f"ComplexFraction({self.re!r}, {self.im!r})"


ExactScalar = Union[int, Fraction, ComplexFraction]


class ExactMatrix:
    """Immutable dense matrix of :class:`ComplexFraction` entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[ExactScalar]]):
        self.rows: tuple[tuple[ComplexFraction, ...], ...] = tuple(
            tuple(ComplexFraction.coerce(x) for x in row) for row in rows
        )
        if not self.rows:
            raise ValueError("matrix must have at least one row")
        width = len(self.rows[0])
        if width == 0 or any(len(r) != width for r in self.rows):
            raise ValueError("rows must be nonempty and of equal length")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]))

    @property
    def is_square(self) -> bool:
        n, m = self.shape
        return n == m

    def __getitem__(self, idx: tuple[int, int]) -> ComplexFraction:
        i, j = idx
        return self.rows[i][j]

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "ExactMatrix":
        m = n if m is None else m
        return cls([[0] * m for _ in range(n)])

    @classmethod
    def identity(cls, n: int, scale: Rational = 1) -> "ExactMatrix":
        s = _as_fraction(scale)
        return cls([[s if i == j else 0 for j in range(n)] for i in range(n)])

    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if not isinstance(other, ExactMatrix):
            raise TypeError(f"expected ExactMatrix, got {type(other).__name__}")
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __mul__(self, scalar: ExactScalar) -> "ExactMatrix":
        s = ComplexFraction.coerce(scalar)
        return ExactMatrix([[a * s for a in row] for row in self.rows])

    __rmul__ = __mul__

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in row] for row in self.rows])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        cols = tuple(zip(*other.rows))
        return ExactMatrix(
            [[_dot_row(row, col) for col in cols] for row in self.rows]
        )

    def conjugate_transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self.rows[i][j].conjugate() for i in range(self.shape[0])]
             for j in range(self.shape[1])]
        )

    def trace(self) -> ComplexFraction:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        total = ComplexFraction(0)
        for i in range(self.shape[0]):
            total = total + self.rows[i][i]
        return total

    def is_zero(self) -> bool:
        return all(a.is_zero for row in self.rows for a in row)

    def is_hermitian(self) -> bool:
        if not self.is_square:
            return False
        return self == self.conjugate_transpose()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def to_numpy(self):
        import numpy as np

        return np.array([[complex(a) for a in row] for row in self.rows],
                        dtype=complex)

    def __repr__(self) -> str:
        n, m = self.shape
        return f"ExactMatrix({n}x{m})"


def _dot_row(row: Sequence[ComplexFraction], col: Sequence[ComplexFraction]) -> ComplexFraction:
    total = ComplexFraction(0)
    for a, b in zip(row, col):
        total = total + a * b
    return total


def exact_vector(components: Sequence[ExactScalar]) -> tuple[ComplexFraction, ...]:
    """Coerce a component sequence to a tuple of exact scalars."""
    return tuple(ComplexFraction.coerce(c) for c in components)


def inner(v: Sequence[ExactScalar], w: Sequence[ExactScalar]) -> ComplexFraction:
    """Hermitian inner product: sum of conj(v_i) * w_i."""
    if len(v) != len(w):
        raise ValueError("length mismatch")
    total = ComplexFraction(0)
    for a, b in zip(exact_vector(v), exact_vector(w)):
        total = total + a.conjugate() * b
    return total


def outer(v: Sequence[ExactScalar], w: Sequence[ExactScalar]) -> ExactMatrix:
    """Outer product matrix with entries v_i * conj(w_j)."""
    ve, we = exact_vector(v), exact_vector(w)
    return ExactMatrix([[a * b.conjugate() for b in we] for a in ve])


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker (tensor) product of two exact matrices."""
    an, am = a.shape
    bn, bm = b.shape
    rows = []
    for i in range(an):
        for k in range(bn):
            rows.append([a.rows[i][j] * b.rows[k][l]
                         for j in range(am) for l in range(bm)])
    return ExactMatrix(rows)
