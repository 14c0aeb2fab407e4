"""Dense exact matrices and field elimination."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .scalars import Domain


class DomainError(ValueError):
    """Raised when an operation needs a field but got a ring (or vice versa)."""


class CompositionNotZero(ValueError):
    """Two consecutive differentials do not compose to zero."""


@dataclass(frozen=True)
class ExactMatrix:
    domain: Domain
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows*cols")

    @classmethod
    def from_rows(cls, domain: Domain, rows: Sequence[Sequence], cols: int | None = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(domain.convert(x) for r in rows for x in r)
        return cls(domain, len(rows), cols, flat)

    @classmethod
    def from_columns(cls, domain: Domain, columns: Sequence[Sequence], rows: int) -> "ExactMatrix":
        cols = len(columns)
        grid = [[columns[j][i] for j in range(cols)] for i in range(rows)]
        return cls.from_rows(domain, grid, cols)

    @classmethod
    def zeros(cls, domain: Domain, rows: int, cols: int) -> "ExactMatrix":
        return cls(domain, rows, cols, (domain.zero,) * (rows * cols))

    @classmethod
    def identity(cls, domain: Domain, n: int) -> "ExactMatrix":
        z, o = domain.zero, domain.one
        return cls(domain, n, n, tuple(o if i == j else z for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.domain, self.cols, self.rows,
                           tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        zero = self.domain.zero
        a = self.to_rows()
        b = other.to_rows()
        out = []
        for i in range(self.rows):
            ai = a[i]
            for j in range(other.cols):
                s = zero
                for k in range(self.cols):
                    if ai[k]:
                        s = s + ai[k] * b[k][j]
                out.append(s)
        return ExactMatrix(self.domain, self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        zero = self.domain.zero
        out = []
        for i in range(self.rows):
            s = zero
            base = i * self.cols
            for k, x in enumerate(v):
                if x:
                    s = s + self.entries[base + k] * x
            out.append(s)
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self):
        return f"ExactMatrix({self.domain}, {self.to_rows()})"


def _require_field(m: ExactMatrix):
    if not m.domain.is_field:
        raise DomainError(f"{m.domain} is not a field")


def rref(m: ExactMatrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over a field; returns (rows, pivot columns)."""
    _require_field(m)
    a = m.to_rows()
    pivots = []
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, m.rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = m.domain.one / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a, pivots


def rank(m: ExactMatrix) -> int:
    if m.domain.is_field:
        return len(rref(m)[1])
    from .smith import smith_normal_form
    _, d, _ = smith_normal_form(m)
    return sum(1 for i in range(min(d.rows, d.cols)) if d[i, i])


def kernel_basis(m: ExactMatrix) -> list[tuple]:
    """Basis of {v : m v = 0}, one vector per free column of the echelon form."""
    _require_field(m)
    a, pivots = rref(m)
    zero, one = m.domain.zero, m.domain.one
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [zero] * m.cols
        v[free] = one
        for r, c in enumerate(pivots):
            v[c] = -a[r][free]
        basis.append(tuple(v))
    return basis


def solve(m: ExactMatrix, b: Sequence):
    """Some x with m x = b, or None when b is not in the column space."""
    _require_field(m)
    if len(b) != m.rows:
        raise ValueError("right-hand side length mismatch")
    aug = ExactMatrix.from_rows(m.domain, [list(r) + [b[i]] for i, r in enumerate(m.to_rows())],
                                m.cols + 1)
    a, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [m.domain.zero] * m.cols
    for r, c in enumerate(pivots):
        x[c] = a[r][m.cols]
    return tuple(x)


class Echelon:
    """Incrementally maintained row-reduced basis of a subspace of K^n."""

    def __init__(self, domain: Domain, n: int):
        if not domain.is_field:
            raise DomainError(f"{domain} is not a field")
        self.domain = domain
        self.n = n
        self.rows: dict[int, list] = {}  # pivot column -> row with 1 at pivot

    def reduce(self, v: Iterable) -> list:
        v = list(v)
        for c, row in self.rows.items():
            if v[c]:
                f = v[c]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def contains(self, v: Iterable) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Iterable) -> bool:
        """Insert v; returns False when v was already in the span."""
        v = self.reduce(v)
        c = next((i for i, x in enumerate(v) if x), None)
        if c is None:
            return False
        inv = self.domain.one / v[c]
        v = [x * inv for x in v]
        for pc, row in self.rows.items():
            if row[c]:
                f = row[c]
                self.rows[pc] = [x - f * y for x, y in zip(row, v)]
        self.rows[c] = v
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)


def integer_determinant(m: ExactMatrix) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [[int(x) for x in r] for r in m.to_rows()]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
