"""
Square matrices over a scalar carrier.

Lifts an ordered semiring (with max) to n x n matrices with a strict
dimension sd, and an ordered arctic semiring to n x n arctic matrices.
Entries live in object-dtype numpy arrays; the scalar operations are
lifted element-wise with np.frompyfunc.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from src.algebra.carriers import (
    CarrierMismatchError,
    CarrierSpec,
    Scalar,
    ScalarLike,
    UnsupportedOperationError,
)


class MatrixShapeError(CarrierMismatchError):
    """Matrix dimension or entry kind does not match the matrix carrier."""


class Matrix:
    """A square matrix of scalars held in a read-only object array."""

    __slots__ = ("entries",)

    def __init__(self, entries: np.ndarray):
        array = np.array(entries, dtype=object)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise MatrixShapeError(f"expected a square matrix, got shape {array.shape}")
        array.flags.writeable = False
        self.entries = array

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i, j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.entries.shape != other.entries.shape:
            return False
        return bool((self.entries == other.entries).all())

    def __hash__(self) -> int:
        return hash((self.entries.shape, tuple(self.entries.flat)))

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(a) for a in row) + "]" for row in self.entries) + "]"

    def __repr__(self) -> str:
        return f"Matrix({self})"


def _lift(fn, nin: int):
    return np.frompyfunc(fn, nin, 1)


def _holds(mask) -> np.ndarray:
    return np.asarray(mask, dtype=bool)


@dataclass(frozen=True)
class MatrixSpec:
    """
    n x n matrices over `base`.

    For ordinary bases, `sd` is the strict dimension: strict decrease and
    monotonicity are checked in the upper-left sd x sd block. It defaults
    to 1. Arctic matrices compare all entries and take no strict dimension.
    """

    base: CarrierSpec
    dim: int
    sd: Optional[int] = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"matrix dimension must be positive, got {self.dim}")
        if self.base.is_arctic:
            if self.sd is not None:
                raise UnsupportedOperationError("arctic matrices take no strict dimension")
        else:
            if self.sd is None:
                object.__setattr__(self, "sd", 1)
            if not 0 < self.sd <= self.dim:
                raise ValueError(f"strict dimension must satisfy 0 < sd <= {self.dim}, got {self.sd}")

    @property
    def is_arctic(self) -> bool:
        return self.base.is_arctic

    @property
    def supports_max0(self) -> bool:
        return self.base.supports_max0

    def __str__(self) -> str:
        if self.sd is None:
            return f"{self.base}^{self.dim}x{self.dim}"
        return f"{self.base}^{self.dim}x{self.dim}(sd={self.sd})"

    # -- values -----------------------------------------------------------

    def value(self, x: Union[Matrix, ScalarLike, Sequence[Sequence[ScalarLike]]]) -> Matrix:
        """
        Coerce into this carrier.

        Nested row lists become matrices; a bare scalar c becomes c times
        the identity matrix.
        """
        if isinstance(x, Matrix):
            self._check(x)
            return x
        if isinstance(x, (list, tuple)):
            if len(x) != self.dim or any(
                not isinstance(row, (list, tuple)) or len(row) != self.dim for row in x
            ):
                raise MatrixShapeError(f"expected a {self.dim}x{self.dim} matrix, got {x!r}")
            return self._build(lambda i, j: self.base.value(x[i][j]))
        return self.embed(self.base.value(x))

    def embed(self, c: Scalar) -> Matrix:
        zero = self.base.zero()
        return self._build(lambda i, j: c if i == j else zero)

    def render(self, a: Matrix) -> str:
        return str(a)

    def zero(self) -> Matrix:
        zero = self.base.zero()
        return self._build(lambda i, j: zero)

    def one(self) -> Matrix:
        return self.embed(self.base.one())

    def _build(self, entry) -> Matrix:
        n = self.dim
        array = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                array[i, j] = entry(i, j)
        return Matrix(array)

    def _check(self, *values: Matrix) -> None:
        for m in values:
            if not isinstance(m, Matrix) or m.dim != self.dim:
                raise MatrixShapeError(f"{m!r} is not a {self.dim}x{self.dim} matrix")
            self.base._check(*m.entries.flat)

    def _block(self, mask: np.ndarray) -> np.ndarray:
        return mask[: self.sd, : self.sd]

    # -- semiring operations ----------------------------------------------

    def add(self, a: Matrix, b: Matrix) -> Matrix:
        self._check(a, b)
        return Matrix(_lift(self.base.add, 2)(a.entries, b.entries))

    def mul(self, a: Matrix, b: Matrix) -> Matrix:
        self._check(a, b)
        # products[i, k, j] = a[i, k] * b[k, j], summed over k
        products = _lift(self.base.mul, 2)(a.entries[:, :, None], b.entries[None, :, :])
        return Matrix(_lift(self.base.add, 2).reduce(products, axis=1))

    # -- orders -------------------------------------------------------------

    def _ge_mask(self, a: Matrix, b: Matrix) -> np.ndarray:
        return _holds(_lift(self.base.weak_ge, 2)(a.entries, b.entries))

    def _gt_mask(self, a: Matrix, b: Matrix) -> np.ndarray:
        return _holds(_lift(self.base.strict_gt, 2)(a.entries, b.entries))

    def weak_ge(self, a: Matrix, b: Matrix) -> bool:
        self._check(a, b)
        return bool(self._ge_mask(a, b).all())

    def strict_gt(self, a: Matrix, b: Matrix) -> bool:
        self._check(a, b)
        if self.is_arctic:
            return bool(self._gt_mask(a, b).all())
        return bool(self._ge_mask(a, b).all() and self._block(self._gt_mask(a, b)).any())

    def growth_pred(self, a: Matrix) -> bool:
        self._check(a)
        if self.is_arctic:
            return self.base.growth_pred(a.entry(0, 0))
        mono = _holds(_lift(self.base.growth_pred, 1)(a.entries))
        # every column of the block has a monotone entry
        return bool(self._block(mono).any(axis=0).all())

    def max0(self, a: Matrix) -> Matrix:
        self._check(a)
        if self.is_arctic:
            raise UnsupportedOperationError(f"max0 is not defined on {self}")
        return Matrix(_lift(self.base.max0, 1)(a.entries))

    def rank(self, a: Matrix) -> Optional[int]:
        """Sum of base ranks over the sd x sd block; entry (0, 0) for arctic."""
        self._check(a)
        if self.is_arctic:
            return self.base.rank(a.entry(0, 0))
        return sum(self.base.rank(c) for c in self._block(a.entries).flat)


CarrierValue = Union[Scalar, Matrix]
Carrier = Union[CarrierSpec, MatrixSpec]
