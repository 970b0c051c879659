"""Exact rational scalars and small dense matrices.

``Rat`` is :class:`fractions.Fraction`, which already keeps lowest terms
with a positive denominator.  Matrix routines clear denominators row by row
and hand integer matrices to the fraction-free kernels in
:mod:`lelong.kernels`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from . import kernels
from .errors import ParseError, ShapeError, SingularMatrixError, ValidationError

Rat = Fraction

_RAT_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def as_rat(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Rat.  Floats are refused."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def parse_rat(text: str) -> Fraction:
    m = _RAT_RE.match(text.strip())
    if not m:
        raise ParseError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rat(x: Fraction) -> str:
    """``"p"`` for integers, ``"p/q"`` otherwise (lowest terms, q > 0)."""
    x = as_rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_canonical(x: Fraction) -> bool:
    from math import gcd

    return x.denominator > 0 and gcd(abs(x.numerator), x.denominator) == 1


def _integer_row(row: Sequence[Fraction]) -> tuple[int, list[int]]:
    scale = lcm(*(x.denominator for x in row)) if row else 1
    return scale, [int(x * scale) for x in row]


class RatMatrix:
    """Immutable dense matrix of Rats, row-major."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(as_rat(x) for x in r) for r in rows)
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ShapeError("ragged rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"entry ({i}, {j}) outside {self.nrows}x{self.ncols}")
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_rat(x) for x in r) + "]" for r in self._rows)
        return f"RatMatrix([{body}])"

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self._rows)) if self.nrows else RatMatrix([])

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        n = self.nrows
        return all(self._rows[i][j] == self._rows[j][i] for i in range(n) for j in range(i + 1, n))

    def leading(self, k: int) -> "RatMatrix":
        """Top-left k x k block."""
        return RatMatrix(r[:k] for r in self._rows[:k])

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other._rows))
        return RatMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self._rows])

    def matvec(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.ncols:
            raise ShapeError(f"vector of length {len(v)} against {self.ncols} columns")
        vv = [as_rat(x) for x in v]
        return tuple(sum((a * b for a, b in zip(r, vv)), Fraction(0)) for r in self._rows)

    def quadratic_form(self, x: Sequence) -> Fraction:
        """x^T M x."""
        mx = self.matvec(x)
        return sum((as_rat(a) * b for a, b in zip(x, mx)), Fraction(0))


def _require_square(m: RatMatrix):
    if not m.is_square:
        raise ShapeError(f"expected a square matrix, got {m.nrows}x{m.ncols}")


def det(m: RatMatrix) -> Fraction:
    """Exact determinant via Bareiss elimination on the denominator-cleared rows."""
    _require_square(m)
    scale = 1
    int_rows = []
    for r in m.rows:
        s, ir = _integer_row(r)
        scale *= s
        int_rows.append(ir)
    return Fraction(kernels.bareiss_det(int_rows), scale)


def rank(m: RatMatrix) -> int:
    return kernels.bareiss_rank([_integer_row(r)[1] for r in m.rows])


def leading_minors(m: RatMatrix) -> list[Fraction]:
    _require_square(m)
    return [det(m.leading(k)) for k in range(1, m.nrows + 1)]


def is_negative_definite(m: RatMatrix) -> bool:
    """Sylvester's criterion: (-1)^k det(M_k) > 0 for every leading block."""
    _require_square(m)
    if not m.is_symmetric():
        raise ValidationError("negative-definiteness test needs a symmetric matrix")
    for k, d in enumerate(leading_minors(m), start=1):
        if (-1) ** k * d <= 0:
            return False
    return True


def solve_linear(m: RatMatrix, b: Sequence) -> tuple[Fraction, ...]:
    _require_square(m)
    if len(b) != m.nrows:
        raise ShapeError(f"right-hand side has length {len(b)}, expected {m.nrows}")
    int_rows, int_rhs = [], []
    for r, bi in zip(m.rows, b):
        s, ir = _integer_row(list(r) + [as_rat(bi)])
        int_rows.append(ir[:-1])
        int_rhs.append(ir[-1])
    out = kernels.bareiss_solve(int_rows, int_rhs)
    if out is None:
        raise SingularMatrixError("matrix is singular")
    d, y = out
    return tuple(Fraction(yi, d) for yi in y)
