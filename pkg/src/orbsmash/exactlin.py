"""Exact dense linear algebra over the rationals or a prime field.

Scalars are `fractions.Fraction` values over the rationals and canonical
residues in [0, p) over a prime field.  Elimination uses the first-nonzero
pivot rule, so every result is deterministic and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class RingMismatchError(ValueError):
    pass


class ShapeError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


class InconsistentSystemError(ArithmeticError):
    pass


class UnderdeterminedSystemError(ArithmeticError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class RingSpec:
    """Coefficient ring: exact rationals, or the integers modulo a prime."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rationals":
            if self.p is not None:
                raise ShapeError("rationals take no modulus")
        elif self.kind == "prime_field":
            if self.p is None or not _is_prime(self.p):
                raise ShapeError(f"prime_field needs a prime modulus, got {self.p}")
        else:
            raise ShapeError(f"unknown ring kind {self.kind!r}")

    @staticmethod
    def rationals() -> "RingSpec":
        return RingSpec("rationals")

    @staticmethod
    def prime_field(p: int) -> "RingSpec":
        return RingSpec("prime_field", p)

    @property
    def zero(self):
        return Fraction(0) if self.kind == "rationals" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "rationals" else 1

    def coerce(self, v):
        """Bring an int, string, or scalar into canonical form for this ring."""
        if self.kind == "rationals":
            if isinstance(v, Fraction):
                return v
            if isinstance(v, (int, str)):
                return Fraction(v)
            raise RingMismatchError(f"cannot coerce {v!r} into the rationals")
        if isinstance(v, str):
            v = int(v)
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise RingMismatchError(f"cannot coerce {v} into F_{self.p}")
            v = v.numerator
        if not isinstance(v, int):
            raise RingMismatchError(f"cannot coerce {v!r} into F_{self.p}")
        return v % self.p

    def add(self, a, b):
        return a + b if self.kind == "rationals" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "rationals" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "rationals" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "rationals" else (-a) % self.p

    def inv(self, a):
        if a == self.zero:
            raise SingularMatrixError("inverse of zero")
        if self.kind == "rationals":
            return Fraction(1) / a
        return pow(a, self.p - 2, self.p)

    def to_str(self, a) -> str:
        return str(a)

    def from_str(self, s: str):
        return self.coerce(s)

    def label(self) -> str:
        return "Q" if self.kind == "rationals" else f"Fp:{self.p}"

    @staticmethod
    def from_label(s: str) -> "RingSpec":
        if s == "Q":
            return RingSpec.rationals()
        if s.startswith("Fp:"):
            return RingSpec.prime_field(int(s[3:]))
        raise ShapeError(f"unknown ring label {s!r}")


def zero_vec(ring: RingSpec, n: int) -> tuple:
    return (ring.zero,) * n


def vec_add(ring: RingSpec, u: tuple, v: tuple) -> tuple:
    if len(u) != len(v):
        raise ShapeError("vector length mismatch")
    return tuple(ring.add(a, b) for a, b in zip(u, v))


def vec_scale(ring: RingSpec, c, u: tuple) -> tuple:
    return tuple(ring.mul(c, a) for a in u)


@dataclass(frozen=True)
class Mat:
    """Immutable dense matrix with entries in a fixed ring, row-major."""

    ring: RingSpec
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"entry count {len(self.entries)} != {self.rows}x{self.cols}"
            )

    @staticmethod
    def from_rows(ring: RingSpec, rows) -> "Mat":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ShapeError("ragged rows")
        flat = tuple(ring.coerce(v) for r in rows for v in r)
        return Mat(ring, len(rows), ncols, flat)

    @staticmethod
    def identity(ring: RingSpec, n: int) -> "Mat":
        return Mat(
            ring, n, n,
            tuple(ring.one if i == j else ring.zero for i in range(n) for j in range(n)),
        )

    @staticmethod
    def zeros(ring: RingSpec, rows: int, cols: int) -> "Mat":
        return Mat(ring, rows, cols, (ring.zero,) * (rows * cols))

    @staticmethod
    def from_columns(ring: RingSpec, rows: int, columns) -> "Mat":
        columns = [tuple(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise ShapeError("column length mismatch")
        flat = tuple(
            ring.coerce(columns[j][i]) for i in range(rows) for j in range(len(columns))
        )
        return Mat(ring, rows, len(columns), flat)

    def at(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def apply(self, vec) -> tuple:
        """Matrix times column vector."""
        vec = tuple(vec)
        if len(vec) != self.cols:
            raise ShapeError(f"vector length {len(vec)} != cols {self.cols}")
        ring = self.ring
        out = []
        for i in range(self.rows):
            s = ring.zero
            base = i * self.cols
            for j, v in enumerate(vec):
                if v != ring.zero:
                    s = ring.add(s, ring.mul(self.entries[base + j], v))
            out.append(s)
        return tuple(out)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Mat.identity(self.ring, self.rows)

    def is_zero(self) -> bool:
        z = self.ring.zero
        return all(e == z for e in self.entries)

    def __matmul__(self, other: "Mat") -> "Mat":
        return mat_mul(self, other)


def _check_same_ring(a: Mat, b: Mat) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"ring mismatch: {a.ring.label()} vs {b.ring.label()}")


def mat_mul(a: Mat, b: Mat) -> Mat:
    """Matrix product a @ b."""
    _check_same_ring(a, b)
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    ring = a.ring
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        for j in range(b.cols):
            s = ring.zero
            for k, av in enumerate(arow):
                if av != ring.zero:
                    s = ring.add(s, ring.mul(av, b.entries[k * b.cols + j]))
            out.append(s)
    return Mat(ring, a.rows, b.cols, tuple(out))


def _rref(rows: list[list], ring: RingSpec, pivot_width: int):
    """Reduced row echelon form in place, first-nonzero pivot rule.

    Only the leftmost `pivot_width` columns are eligible as pivots.
    Returns the list of pivot column indices.
    """
    m = len(rows)
    pivots = []
    r = 0
    for c in range(pivot_width):
        if r >= m:
            break
        pr = None
        for i in range(r, m):
            if rows[i][c] != ring.zero:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        scale = ring.inv(rows[r][c])
        rows[r] = [ring.mul(scale, v) for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != ring.zero:
                f = rows[i][c]
                rows[i] = [ring.sub(vi, ring.mul(f, vr)) for vi, vr in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def mat_inverse(a: Mat) -> Mat:
    """Exact inverse of a square matrix; raises SingularMatrixError otherwise."""
    if a.rows != a.cols:
        raise ShapeError(f"cannot invert a {a.rows}x{a.cols} matrix")
    n = a.rows
    ring = a.ring
    ident = Mat.identity(ring, n)
    aug = [list(a.row(i)) + list(ident.row(i)) for i in range(n)]
    pivots = _rref(aug, ring, n)
    if len(pivots) < n:
        raise SingularMatrixError(f"matrix of rank {len(pivots)} < {n}")
    flat = tuple(aug[i][n + j] for i in range(n) for j in range(n))
    return Mat(ring, n, n, flat)


def is_invertible(a: Mat) -> bool:
    if a.rows != a.cols:
        return False
    try:
        mat_inverse(a)
        return True
    except SingularMatrixError:
        return False


def solve_linear(a: Mat, rhs: Mat) -> Mat:
    """Solve a @ x = rhs for the unique exact solution.

    Raises InconsistentSystemError when no solution exists and
    UnderdeterminedSystemError when the solution is not unique.
    """
    _check_same_ring(a, rhs)
    if a.rows != rhs.rows:
        raise ShapeError(f"lhs has {a.rows} rows, rhs has {rhs.rows}")
    ring = a.ring
    aug = [list(a.row(i)) + list(rhs.row(i)) for i in range(a.rows)]
    pivots = _rref(aug, ring, a.cols)
    for i in range(len(pivots), a.rows):
        if any(v != ring.zero for v in aug[i][a.cols :]):
            raise InconsistentSystemError("no exact solution")
    if len(pivots) < a.cols:
        raise UnderdeterminedSystemError(
            f"solution space has dimension {a.cols - len(pivots)}"
        )
    flat = tuple(aug[i][a.cols + j] for i in range(a.cols) for j in range(rhs.cols))
    return Mat(ring, a.cols, rhs.cols, flat)
