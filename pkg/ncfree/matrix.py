"""Square matrices of exact rationals on top of sympy's DomainMatrix over QQ."""

from fractions import Fraction
from typing import Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .errors import NotInvertibleError, ValidationError
from .rational import RationalLike, as_rational, from_qq, to_qq


def _domain_matrix(rows: Sequence[Sequence[Fraction]]) -> DomainMatrix:
    n = len(rows)
    return DomainMatrix([[to_qq(x) for x in row] for row in rows], (n, n), QQ)


class RationalMatrix:
    """Square matrix with Fraction entries. Immutable.

    Products, powers and inverses run on the wrapped DomainMatrix; entries
    are handed out as Fractions.
    """

    __slots__ = ("_dm", "_rows")

    def __init__(self, rows: Sequence[Sequence[RationalLike]]):
        converted = tuple(tuple(as_rational(x) for x in row) for row in rows)
        n = len(converted)
        if n == 0:
            raise ValidationError("Matrix must have at least one row")
        for i, row in enumerate(converted):
            if len(row) != n:
                raise ValidationError(f"Row {i} has {len(row)} entries, expected {n} (square matrix)")
        self._dm = _domain_matrix(converted)
        self._rows = converted

    @classmethod
    def _wrap(cls, dm: DomainMatrix) -> "RationalMatrix":
        obj = cls.__new__(cls)
        obj._dm = dm.to_dense()
        obj._rows = None
        return obj

    @classmethod
    def _trusted(cls, rows: Sequence[Sequence[Fraction]]) -> "RationalMatrix":
        obj = cls._wrap(_domain_matrix(rows))
        obj._rows = tuple(tuple(row) for row in rows)
        return obj

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls._wrap(DomainMatrix.eye(n, QQ))

    @classmethod
    def diagonal(cls, entries: Sequence[RationalLike]) -> "RationalMatrix":
        values = [as_rational(x) for x in entries]
        n = len(values)
        return cls._trusted([[values[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return self._dm.shape[0]

    @property
    def rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        if self._rows is None:
            self._rows = tuple(tuple(from_qq(x) for x in row) for row in self._dm.to_ddm())
        return self._rows

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.rows[i][j]

    def _check(self, other: "RationalMatrix") -> None:
        if other.dim != self.dim:
            raise ValidationError(f"Matrix dimensions differ: {self.dim} vs {other.dim}")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check(other)
        return RationalMatrix._wrap(self._dm + other._dm)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check(other)
        return RationalMatrix._wrap(self._dm - other._dm)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check(other)
        return RationalMatrix._wrap(self._dm.matmul(other._dm))

    def __mul__(self, other):
        if isinstance(other, RationalMatrix):
            return self @ other
        c = as_rational(other)
        return RationalMatrix._trusted([[c * x for x in row] for row in self.rows])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RationalMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        return RationalMatrix._wrap(self._dm.pow(k))

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def is_zero(self) -> bool:
        return self._dm.is_zero_matrix

    def is_identity(self) -> bool:
        return self == RationalMatrix.identity(self.dim)

    def is_upper_triangular(self) -> bool:
        return self._dm.is_upper

    def diagonal_entries(self) -> Tuple[Fraction, ...]:
        rows = self.rows
        return tuple(rows[i][i] for i in range(self.dim))

    def inverse(self) -> "RationalMatrix":
        """Exact inverse over QQ.

        Raises:
            NotInvertibleError: if the matrix is singular.
        """
        try:
            return RationalMatrix._wrap(self._dm.inv())
        except DMNonInvertibleMatrixError as e:
            raise NotInvertibleError("Matrix is singular") from e

    def __repr__(self) -> str:
        return f"RationalMatrix(dim={self.dim})"
