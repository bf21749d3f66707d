"""Dense matrices over a single cyclotomic field Q(zeta_N)."""

from __future__ import annotations

from numbers import Rational
from typing import Iterable, Sequence

from .cyclotomic import CyclotomicNumber
from .errors import InvalidInput, SingularMatrix


def _as_field(x, order: int) -> CyclotomicNumber:
    if isinstance(x, CyclotomicNumber):
        if x.order != order:
            raise ValueError(f"entry of order {x.order} in a matrix over Q(zeta_{order})")
        return x
    if isinstance(x, (int, Rational)):
        return CyclotomicNumber.from_rational(x, order)
    raise TypeError(f"cannot use {type(x).__name__} as a matrix entry")


class CycMatrix:
    """Immutable row-major matrix whose entries all live in Q(zeta_order)."""

    __slots__ = ("rows", "cols", "order", "entries", "_key")

    def __init__(self, rows: int, cols: int, entries: Iterable, order: int):
        entries = tuple(_as_field(e, order) for e in entries)
        if rows < 1 or cols < 1 or len(entries) != rows * cols:
            raise InvalidInput(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows, self.cols, self.order = rows, cols, order
        self.entries = entries
        self._key = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], order: int) -> "CycMatrix":
        return cls(len(rows), len(rows[0]), [x for r in rows for x in r], order)

    @classmethod
    def identity(cls, n: int, order: int) -> "CycMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)], order)

    @classmethod
    def zeros(cls, rows: int, cols: int, order: int) -> "CycMatrix":
        return cls(rows, cols, [0] * (rows * cols), order)

    @classmethod
    def diagonal(cls, diag: Sequence, order: int) -> "CycMatrix":
        n = len(diag)
        return cls(n, n, [diag[i] if i == j else 0 for i in range(n) for j in range(n)], order)

    @classmethod
    def companion(cls, coeffs: Sequence, order: int) -> "CycMatrix":
        """Companion matrix of the monic polynomial with coefficients ``coeffs``
        (constant term first, leading 1 omitted): ones on the subdiagonal and
        the negated coefficients in the last column."""
        n = len(coeffs)
        rows = [[0] * n for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = 1
        for i in range(n):
            rows[i][n - 1] = -_as_field(coeffs[i], order)
        return cls.from_rows(rows, order)

    def __getitem__(self, ij: tuple[int, int]) -> CyclotomicNumber:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[CyclotomicNumber, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[CyclotomicNumber]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def key(self) -> tuple:
        """Canonical hashable encoding of the exact entries."""
        if self._key is None:
            self._key = tuple((e.numerator_vector, e.denominator) for e in self.entries)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.order) == (other.rows, other.cols, other.order) and (
            self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.order, self.key()))

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"CycMatrix(N={self.order}, [{body}])"

    # arithmetic

    def _check_same_shape(self, other: "CycMatrix"):
        if (self.rows, self.cols, self.order) != (other.rows, other.cols, other.order):
            raise InvalidInput("shape or field mismatch")

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        self._check_same_shape(other)
        return CycMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)], self.order)

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        self._check_same_shape(other)
        return CycMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)], self.order)

    def __neg__(self) -> "CycMatrix":
        return CycMatrix(self.rows, self.cols, [-a for a in self.entries], self.order)

    def scale(self, c) -> "CycMatrix":
        c = _as_field(c, self.order)
        return CycMatrix(self.rows, self.cols, [c * a for a in self.entries], self.order)

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        if self.cols != other.rows or self.order != other.order:
            raise InvalidInput(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = CyclotomicNumber.from_rational(0, self.order)
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = r[k]
                    if not a.is_zero():
                        b = other.entries[k * other.cols + j]
                        if not b.is_zero():
                            acc = acc + a * b
                out.append(acc)
        return CycMatrix(self.rows, other.cols, out, self.order)

    __mul__ = __matmul__

    def __pow__(self, e: int) -> "CycMatrix":
        if e < 0:
            return self.inverse() ** (-e)
        result = CycMatrix.identity(self.rows, self.order)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def transpose(self) -> "CycMatrix":
        return CycMatrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)], self.order)

    def conjugate_transpose(self) -> "CycMatrix":
        return CycMatrix(
            self.cols, self.rows,
            [self[i, j].conjugate() for j in range(self.cols) for i in range(self.rows)],
            self.order,
        )

    def galois(self, h: int) -> "CycMatrix":
        return CycMatrix(self.rows, self.cols, [e.galois(h) for e in self.entries], self.order)

    def trace(self) -> CyclotomicNumber:
        if not self.is_square:
            raise InvalidInput("trace of a non-square matrix")
        acc = CyclotomicNumber.from_rational(0, self.order)
        for i in range(self.rows):
            acc = acc + self[i, i]
        return acc

    def is_identity(self) -> bool:
        return self.is_square and all(
            (e == 1) if i % (self.cols + 1) == 0 else e.is_zero() for i, e in enumerate(self.entries)
        )

    # elimination

    def _echelon(self):
        """Row-reduce a working copy; returns (rows, pivot columns, det sign-and-product)."""
        m = self.to_rows()
        nr, nc = self.rows, self.cols
        pivots = []
        det = CyclotomicNumber.from_rational(1, self.order)
        r = 0
        for c in range(nc):
            p = next((i for i in range(r, nr) if not m[i][c].is_zero()), None)
            if p is None:
                continue
            if p != r:
                m[r], m[p] = m[p], m[r]
                det = -det
            piv = m[r][c]
            det = det * piv
            inv = piv.inverse()
            m[r] = [x * inv for x in m[r]]
            for i in range(nr):
                if i != r:
                    f = m[i][c]
                    if not f.is_zero():
                        m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == nr:
                break
        return m, pivots, det

    def rank(self) -> int:
        return len(self._echelon()[1])

    def det(self) -> CyclotomicNumber:
        if not self.is_square:
            raise InvalidInput("determinant of a non-square matrix")
        _, pivots, det = self._echelon()
        if len(pivots) < self.rows:
            return CyclotomicNumber.from_rational(0, self.order)
        return det

    def inverse(self) -> "CycMatrix":
        if not self.is_square:
            raise InvalidInput("inverse of a non-square matrix")
        n = self.rows
        aug = CycMatrix.from_rows(
            [list(self.row(i)) + [1 if i == j else 0 for j in range(n)] for i in range(n)], self.order
        )
        m, pivots, _ = aug._echelon()
        if pivots[:n] != list(range(n)):
            raise SingularMatrix("matrix is not invertible")
        return CycMatrix.from_rows([row[n:] for row in m], self.order)

    def nullspace(self) -> list["CycMatrix"]:
        """Basis of {x : self @ x = 0} as column vectors."""
        m, pivots, _ = self._echelon()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            vec = [CyclotomicNumber.from_rational(0, self.order)] * self.cols
            vec[f] = CyclotomicNumber.from_rational(1, self.order)
            for row_idx, pc in enumerate(pivots):
                vec[pc] = -m[row_idx][f]
            basis.append(CycMatrix(self.cols, 1, vec, self.order))
        return basis

    def solve(self, rhs: "CycMatrix") -> "CycMatrix":
        """One solution x of self @ x = rhs; raises SingularMatrix if inconsistent."""
        if rhs.rows != self.rows:
            raise InvalidInput("right-hand side has the wrong number of rows")
        aug = CycMatrix.from_rows([list(self.row(i)) + list(rhs.row(i)) for i in range(self.rows)], self.order)
        m, pivots, _ = aug._echelon()
        if any(p >= self.cols for p in pivots):
            raise SingularMatrix("linear system is inconsistent")
        zero = CyclotomicNumber.from_rational(0, self.order)
        out = [[zero] * rhs.cols for _ in range(self.cols)]
        for row_idx, pc in enumerate(pivots):
            out[pc] = m[row_idx][self.cols:]
        return CycMatrix.from_rows(out, self.order)

    def charpoly(self) -> list[CyclotomicNumber]:
        """Monic characteristic polynomial det(t I - M), constant term first (Faddeev-LeVerrier)."""
        if not self.is_square:
            raise InvalidInput("characteristic polynomial of a non-square matrix")
        n = self.rows
        coeffs = [None] * (n + 1)
        coeffs[n] = CyclotomicNumber.from_rational(1, self.order)
        ident = CycMatrix.identity(n, self.order)
        mk = CycMatrix.zeros(n, n, self.order)
        for k in range(1, n + 1):
            mk = self @ mk + ident.scale(coeffs[n - k + 1])
            coeffs[n - k] = -(self @ mk).trace() / k
        return coeffs
