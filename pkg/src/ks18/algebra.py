"""Linear algebra for small Hermitian operators, projectors, and states.

Every wrapper carries a float matrix and, when it was assembled from
integer or rational data, an exact rational twin.  Identities involving
exact twins are checked with zero tolerance; float-only data is checked
against ``TOL_ALG``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .exact import ComplexFraction, ExactMatrix, inner, outer

TOL_ALG = 1e-12

MatrixLike = Union[np.ndarray, ExactMatrix, Sequence[Sequence[complex]]]


def _to_array(m: MatrixLike) -> np.ndarray:
    if isinstance(m, ExactMatrix):
        return m.to_numpy()
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2:
        raise ValueError("expected a 2-dimensional matrix")
    return arr


def _is_exact_component(x) -> bool:
    return isinstance(x, (int, Fraction, ComplexFraction)) and not isinstance(x, bool)


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """Square matrix equal to its conjugate transpose."""

    array: np.ndarray
    exact: ExactMatrix | None = None

    def __post_init__(self):
        arr = _to_array(self.array)
        object.__setattr__(self, "array", arr)
        n, m = arr.shape
        if n != m:
            raise ValueError("operator must be square")
        if not np.all(np.isfinite(arr.view(float))):
            raise ValueError("operator entries must be finite")
        if self.exact is not None:
            if not self.exact.is_hermitian():
                raise ValueError("operator is not Hermitian")
        elif not np.allclose(arr, arr.conj().T, atol=TOL_ALG, rtol=0.0):
            raise ValueError("operator is not Hermitian")

    @classmethod
    def from_exact(cls, m: ExactMatrix) -> "HermitianOperator":
        return cls(array=m.to_numpy(), exact=m)

    @property
    def dim(self) -> int:
        return self.array.shape[0]


@dataclass(frozen=True, eq=False)
class Projector:
    """Hermitian idempotent with integer rank equal to its trace."""

    array: np.ndarray
    rank: int
    exact: ExactMatrix | None = None

    def __post_init__(self):
        arr = _to_array(self.array)
        object.__setattr__(self, "array", arr)
        if self.exact is not None:
            if not self.exact.is_hermitian():
                raise ValueError("projector is not Hermitian")
            if not (self.exact @ self.exact == self.exact):
                raise ValueError("projector is not idempotent")
            if self.exact.trace() != ComplexFraction(self.rank):
                raise ValueError("projector trace does not equal rank")
        else:
            if not np.allclose(arr, arr.conj().T, atol=TOL_ALG, rtol=0.0):
                raise ValueError("projector is not Hermitian")
            if not np.allclose(arr @ arr, arr, atol=TOL_ALG, rtol=0.0):
                raise ValueError("projector is not idempotent")
            if abs(np.trace(arr).real - self.rank) > TOL_ALG:
                raise ValueError("projector trace does not equal rank")

    @classmethod
    def from_exact(cls, m: ExactMatrix) -> "Projector":
        tr = m.trace()
        if not tr.is_real or tr.re.denominator != 1:
            raise ValueError("projector trace does not equal rank")
        return cls(array=m.to_numpy(), rank=int(tr.re), exact=m)

    @property
    def dim(self) -> int:
        return self.array.shape[0]


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit-norm complex amplitude vector."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        object.__setattr__(self, "amplitudes", amps)
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > TOL_ALG:
            raise ValueError(f"state norm {norm} is not 1 within {TOL_ALG}")

    @classmethod
    def from_vector(cls, v: Sequence[complex]) -> "PureState":
        arr = np.asarray([complex(x) for x in v], dtype=complex)
        norm = float(np.linalg.norm(arr))
        if norm == 0.0:
            raise ValueError("degenerate vector")
        return cls(arr / norm)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def density(self) -> "DensityMatrix":
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite matrix."""

    array: np.ndarray
    exact: ExactMatrix | None = None

    def __post_init__(self):
        arr = _to_array(self.array)
        object.__setattr__(self, "array", arr)
        check = is_density_matrix(self.exact if self.exact is not None else arr)
        if not check.ok:
            raise ValueError(f"not a density matrix: {', '.join(check.failures)}")

    @classmethod
    def from_exact(cls, m: ExactMatrix) -> "DensityMatrix":
        return cls(array=m.to_numpy(), exact=m)

    @classmethod
    def maximally_mixed(cls, dim: int = 4) -> "DensityMatrix":
        return cls.from_exact(ExactMatrix.identity(dim, Fraction(1, dim)))

    @property
    def dim(self) -> int:
        return self.array.shape[0]


@dataclass(frozen=True)
class DensityCheck:
    """Outcome of a density-matrix validity test with failure diagnostics."""

    ok: bool
    failures: tuple[str, ...] = ()
    eigenvalues: tuple[float, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok


def projector_from_vector(v: Sequence) -> Projector:
    """Rank-1 projector onto the span of ``v``, normalized internally.

    Integer or rational components take the exact path: the result's
    entries are exact rationals with denominator dividing the squared
    norm.  A zero vector is rejected.
    """
    comps = list(v)
    if len(comps) == 0:
        raise ValueError("degenerate vector")
    if all(_is_exact_component(c) for c in comps):
        norm2 = inner(comps, comps)
        if norm2.is_zero:
            raise ValueError("degenerate vector")
        mat = outer(comps, comps) * (Fraction(1) / norm2.re)
        return Projector.from_exact(mat)
    arr = np.asarray([complex(x) for x in comps], dtype=complex)
    norm2f = float(np.vdot(arr, arr).real)
    if norm2f == 0.0:
        raise ValueError("degenerate vector")
    return Projector(array=np.outer(arr, arr.conj()) / norm2f, rank=1)


def eigenprojectors_pm(op: HermitianOperator) -> tuple[Projector, Projector]:
    """Eigenprojectors of a +-1-valued observable.

    Returns ``((I + O)/2, (I - O)/2)``; requires ``O @ O == I``.
    """
    n = op.dim
    if op.exact is not None:
        ident = ExactMatrix.identity(n)
        if not (op.exact @ op.exact == ident):
            raise ValueError("observable is not ±1-valued")
        plus = (op.exact + ident) * Fraction(1, 2)
        minus = (ident - op.exact) * Fraction(1, 2)
        return Projector.from_exact(plus), Projector.from_exact(minus)
    eye = np.eye(n, dtype=complex)
    if not np.allclose(op.array @ op.array, eye, atol=TOL_ALG, rtol=0.0):
        raise ValueError("observable is not ±1-valued")
    plus_arr = (eye + op.array) / 2
    minus_arr = (eye - op.array) / 2
    return (
        Projector(array=plus_arr, rank=round(np.trace(plus_arr).real)),
        Projector(array=minus_arr, rank=round(np.trace(minus_arr).real)),
    )


def expectation(rho: DensityMatrix, p: Projector) -> float:
    """Born-rule probability trace(rho @ P), clamped to [0, 1] at the edges."""
    if rho.dim != p.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {p.dim}")
    if rho.exact is not None and p.exact is not None:
        tr = (rho.exact @ p.exact).trace()
        value = float(tr.re)
    else:
        value = float(np.trace(rho.array @ p.array).real)
    if -TOL_ALG <= value < 0.0:
        return 0.0
    if 1.0 < value <= 1.0 + TOL_ALG:
        return 1.0
    return value


def is_density_matrix(m: MatrixLike) -> DensityCheck:
    """Check Hermiticity, unit trace, and positive semidefiniteness."""
    failures: list[str] = []
    if isinstance(m, ExactMatrix):
        if not m.is_square:
            return DensityCheck(False, ("not square",))
        if not m.is_hermitian():
            failures.append("not hermitian")
        if m.trace() != ComplexFraction(1):
            failures.append("trace not 1")
        arr = m.to_numpy()
    else:
        arr = np.asarray(m, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            return DensityCheck(False, ("not square",))
        if not np.allclose(arr, arr.conj().T, atol=TOL_ALG, rtol=0.0):
            failures.append("not hermitian")
        if abs(np.trace(arr).real - 1.0) > TOL_ALG or abs(np.trace(arr).imag) > TOL_ALG:
            failures.append("trace not 1")
    herm = (arr + arr.conj().T) / 2
    eigs = tuple(float(x) for x in np.linalg.eigvalsh(herm))
    if eigs and eigs[0] < -TOL_ALG:
        failures.append("negative eigenvalue")
    return DensityCheck(not failures, tuple(failures), eigs)


def convex_mix(parts: Sequence[tuple[Fraction, DensityMatrix]]) -> DensityMatrix:
    """Convex combination of density matrices with rational weights.

    Stays exact when every component carries an exact matrix.
    """
    if not parts:
        raise ValueError("empty mixture")
    weights = [Fraction(w) for w, _ in parts]
    if any(w < 0 for w in weights) or sum(weights) != 1:
        raise ValueError("weights must be nonnegative and sum to 1")
    dims = {rho.dim for _, rho in parts}
    if len(dims) != 1:
        raise ValueError("dimension mismatch")
    if all(rho.exact is not None for _, rho in parts):
        total = ExactMatrix.zeros(parts[0][1].dim)
        for w, rho in parts:
            total = total + rho.exact * w
        return DensityMatrix.from_exact(total)
    total_arr = np.zeros((parts[0][1].dim,) * 2, dtype=complex)
    for w, rho in parts:
        total_arr += float(w) * rho.array
    return DensityMatrix(total_arr)
