"""Exact dense linear algebra over the rationals and over prime fields.

Matrices are immutable.  Over F_p entries are ints in [0, p) stored in a
numpy int64 array (products stay far below 2**63 for the supported sizes),
over Q entries are `fractions.Fraction` values kept in lowest terms.  All
eliminations use reduced row echelon form with the lowest-index pivot rule,
so every derived basis (kernel, cokernel, ...) is canonical: recomputing it
yields the identical matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

DEFAULT_PRIME = 10007


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals or F_p for a prime p."""

    kind: str  # "rational" or "prime"
    characteristic: int = 0

    def __post_init__(self):
        if self.kind not in ("rational", "prime"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "prime":
            if not _is_prime(self.characteristic):
                raise ValueError(f"{self.characteristic} is not prime")
        elif self.characteristic != 0:
            raise ValueError("rational field has characteristic 0")

    @staticmethod
    def rational() -> "FieldSpec":
        return FieldSpec("rational")

    @staticmethod
    def prime(p: int = DEFAULT_PRIME) -> "FieldSpec":
        return FieldSpec("prime", p)

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime"

    def zero(self):
        return 0 if self.is_prime_field else Fraction(0)

    def one(self):
        return 1 if self.is_prime_field else Fraction(1)

    def coerce(self, value):
        """Turn an int, Fraction or "a/b" string into a field element."""
        if self.is_prime_field:
            p = self.characteristic
            if isinstance(value, str):
                if "/" in value:
                    num, den = value.split("/")
                    return (int(num) * pow(int(den), p - 2, p)) % p
                value = int(value)
            if isinstance(value, Fraction):
                return (value.numerator * pow(value.denominator, p - 2, p)) % p
            return int(value) % p
        if isinstance(value, str):
            return Fraction(value)
        if isinstance(value, Fraction):
            return value
        return Fraction(value)

    def format(self, value) -> str | int:
        """JSON-friendly form: ints stay ints, proper fractions become 'a/b'."""
        if self.is_prime_field:
            return int(value)
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"

    def to_json(self) -> str:
        return self.spec_string()

    @staticmethod
    def from_json(data) -> "FieldSpec":
        if isinstance(data, str):
            return parse_field(data)
        if isinstance(data, dict) and set(data) == {"Fp"}:
            return FieldSpec.prime(int(data["Fp"]))
        raise ValueError(f"bad field spec {data!r}")

    def spec_string(self) -> str:
        return f"fp:{self.characteristic}" if self.is_prime_field else "q"


def parse_field(text: str) -> FieldSpec:
    """Parse a CLI field spec: 'q' or 'fp:<prime>'."""
    t = text.strip().lower()
    if t == "q":
        return FieldSpec.rational()
    if t.startswith("fp:"):
        return FieldSpec.prime(int(t[3:]))
    if t == "fp":
        return FieldSpec.prime()
    raise ValueError(f"cannot parse field {text!r} (expected 'q' or 'fp:<p>')")


class Matrix:
    """Immutable exact matrix over a FieldSpec."""

    __slots__ = ("field", "rows", "cols", "_fp", "_q", "_hash")

    def __init__(self, field: FieldSpec, rows: int, cols: int, fp=None, q=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        self._fp = fp
        self._q = q
        self._hash = None
        if field.is_prime_field:
            if self._fp is None:
                self._fp = np.zeros((rows, cols), dtype=np.int64)
            if self._fp.shape != (rows, cols):
                raise ValueError("backing array shape mismatch")
            self._fp.setflags(write=False)
        else:
            if self._q is None:
                self._q = [[Fraction(0)] * cols for _ in range(rows)]
            if len(self._q) != rows or any(len(r) != cols for r in self._q):
                raise ValueError("backing rows shape mismatch")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zeros(field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return Matrix(field, rows, cols)

    @staticmethod
    def identity(field: FieldSpec, n: int) -> "Matrix":
        if field.is_prime_field:
            return Matrix(field, n, n, fp=np.eye(n, dtype=np.int64))
        q = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        return Matrix(field, n, n, q=q)

    @staticmethod
    def from_rows(field: FieldSpec, rows: Iterable[Iterable], cols: int | None = None) -> "Matrix":
        data = [[field.coerce(x) for x in row] for row in rows]
        nrows = len(data)
        ncols = len(data[0]) if data else (cols if cols is not None else 0)
        for row in data:
            if len(row) != ncols:
                raise ValueError("ragged rows")
        if field.is_prime_field:
            arr = np.array(data, dtype=np.int64).reshape(nrows, ncols)
            return Matrix(field, nrows, ncols, fp=arr)
        return Matrix(field, nrows, ncols, q=data)

    @staticmethod
    def from_flat(field: FieldSpec, rows: int, cols: int, flat: Sequence) -> "Matrix":
        if len(flat) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(flat)}")
        it = iter(flat)
        return Matrix.from_rows(field, [[next(it) for _ in range(cols)] for _ in range(rows)], cols)

    @staticmethod
    def column(field: FieldSpec, values: Sequence) -> "Matrix":
        return Matrix.from_rows(field, [[v] for v in values], 1)

    # -- access -------------------------------------------------------

    def entry(self, i: int, j: int):
        if self.field.is_prime_field:
            return int(self._fp[i, j])
        return self._q[i][j]

    def to_rows(self) -> list[list]:
        if self.field.is_prime_field:
            return [[int(x) for x in row] for row in self._fp]
        return [row[:] for row in self._q]

    def to_flat(self) -> list:
        out = []
        for row in self.to_rows():
            out.extend(row)
        return out

    def to_flat_json(self) -> list:
        return [self.field.format(x) for x in self.to_flat()]

    # -- algebra ------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        f = self.field
        if f.is_prime_field:
            return Matrix(f, self.rows, other.cols, fp=(self._fp @ other._fp) % f.characteristic)
        a, b = self._q, other._q
        out = [[Fraction(0)] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            ai, oi = a[i], out[i]
            for k in range(self.cols):
                c = ai[k]
                if c:
                    bk = b[k]
                    for j in range(other.cols):
                        if bk[j]:
                            oi[j] += c * bk[j]
        return Matrix(f, self.rows, other.cols, q=out)

    def _zip(self, other: "Matrix", op) -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        f = self.field
        if f.is_prime_field:
            return Matrix(f, self.rows, self.cols, fp=op(self._fp, other._fp) % f.characteristic)
        out = [[op(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self._q, other._q)]
        return Matrix(f, self.rows, self.cols, q=out)

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.coerce(c)
        if f.is_prime_field:
            return Matrix(f, self.rows, self.cols, fp=(self._fp * c) % f.characteristic)
        return Matrix(f, self.rows, self.cols, q=[[c * x for x in row] for row in self._q])

    def transpose(self) -> "Matrix":
        f = self.field
        if f.is_prime_field:
            return Matrix(f, self.cols, self.rows, fp=self._fp.T.copy())
        out = [[self._q[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return Matrix(f, self.cols, self.rows, q=out)

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        f = self.field
        if f.is_prime_field:
            return int(np.trace(self._fp) % f.characteristic)
        return sum((self._q[i][i] for i in range(self.rows)), Fraction(0))

    @staticmethod
    def hstack(field: FieldSpec, mats: Sequence["Matrix"], rows: int | None = None) -> "Matrix":
        mats = list(mats)
        if not mats:
            return Matrix.zeros(field, rows or 0, 0)
        nrows = mats[0].rows
        if field.is_prime_field:
            return Matrix(field, nrows, sum(m.cols for m in mats),
                          fp=np.hstack([m._fp for m in mats]))
        out = [sum((m._q[i] for m in mats), []) for i in range(nrows)]
        return Matrix(field, nrows, sum(m.cols for m in mats), q=out)

    @staticmethod
    def vstack(field: FieldSpec, mats: Sequence["Matrix"], cols: int | None = None) -> "Matrix":
        mats = list(mats)
        if not mats:
            return Matrix.zeros(field, 0, cols or 0)
        ncols = mats[0].cols
        if field.is_prime_field:
            return Matrix(field, sum(m.rows for m in mats), ncols,
                          fp=np.vstack([m._fp for m in mats]))
        out = []
        for m in mats:
            out.extend(row[:] for row in m._q)
        return Matrix(field, sum(m.rows for m in mats), ncols, q=out)

    def cols_slice(self, start: int, count: int) -> "Matrix":
        f = self.field
        if f.is_prime_field:
            return Matrix(f, self.rows, count, fp=self._fp[:, start:start + count].copy())
        return Matrix(f, self.rows, count, q=[row[start:start + count] for row in self._q])

    def rows_slice(self, start: int, count: int) -> "Matrix":
        f = self.field
        if f.is_prime_field:
            return Matrix(f, count, self.cols, fp=self._fp[start:start + count, :].copy())
        return Matrix(f, count, self.cols, q=[row[:] for row in self._q[start:start + count]])

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        f = self.field
        if f.is_prime_field:
            return Matrix(f, len(row_idx), len(col_idx),
                          fp=self._fp[np.ix_(list(row_idx), list(col_idx))].copy()
                          if row_idx and col_idx else np.zeros((len(row_idx), len(col_idx)), dtype=np.int64))
        out = [[self._q[i][j] for j in col_idx] for i in row_idx]
        return Matrix(f, len(row_idx), len(col_idx), q=out)

    def is_zero(self) -> bool:
        if self.field.is_prime_field:
            return not self._fp.any()
        return all(not x for row in self._q for x in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field != other.field or (self.rows, self.cols) != (other.rows, other.cols):
            return False
        if self.field.is_prime_field:
            return bool(np.array_equal(self._fp, other._fp))
        return self._q == other._q

    def __hash__(self):
        if self._hash is None:
            if self.field.is_prime_field:
                h = hash((self.field, self.rows, self.cols, self._fp.tobytes()))
            else:
                h = hash((self.field, self.rows, self.cols,
                          tuple(tuple(row) for row in self._q)))
            self._hash = h
        return self._hash

    def __repr__(self):
        return f"Matrix({self.field.spec_string()}, {self.rows}x{self.cols})"


class MatrixBuilder:
    """Accumulates entries for one dense matrix, then freezes it."""

    def __init__(self, field: FieldSpec, rows: int, cols: int):
        self.field = field
        self.rows = rows
        self.cols = cols
        if field.is_prime_field:
            self._a = np.zeros((rows, cols), dtype=np.int64)
        else:
            self._a = [[Fraction(0)] * cols for _ in range(rows)]

    def add(self, i: int, j: int, value):
        if self.field.is_prime_field:
            self._a[i, j] = (self._a[i, j] + value) % self.field.characteristic
        else:
            self._a[i][j] += value

    def add_column(self, row_start: int, col: int, source: Matrix, source_col: int, scale=1):
        """Add scale * (column of source) into our column at a row offset."""
        n = source.rows
        if n == 0:
            return
        if self.field.is_prime_field:
            seg = self._a[row_start:row_start + n, col]
            self._a[row_start:row_start + n, col] = (
                seg + scale * source._fp[:, source_col]) % self.field.characteristic
        else:
            for r in range(n):
                v = source._q[r][source_col]
                if v:
                    self._a[row_start + r][col] += scale * v

    def build(self) -> Matrix:
        if self.field.is_prime_field:
            return Matrix(self.field, self.rows, self.cols, fp=self._a % self.field.characteristic)
        return Matrix(self.field, self.rows, self.cols, q=self._a)


# -- elimination core ------------------------------------------------


def _rref_fp(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    m = a % p
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        if col.any():
            m = (m - np.outer(col, m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def _row_gcd_reduce(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


_F0 = Fraction(0)


def _rref_q_core(rows_in: list[list[Fraction]], ncols: int) -> tuple[list[list[int]], list[int]]:
    # Integer rows (denominators cleared per row; row scaling keeps the row
    # space, and the reduced echelon form only depends on the row space).
    # Updates cross-multiply instead of dividing, with a gcd cleanup per
    # touched row, so everything stays in plain int arithmetic; pivot rows
    # are normalized separately by the callers that need field entries.
    m: list[list[int]] = []
    for row in rows_in:
        denom = 1
        for x in row:
            d = x.denominator
            if d != 1:
                denom = denom * d // gcd(denom, d)
        if denom == 1:
            m.append([x.numerator for x in row])
        else:
            m.append([int(x * denom) for x in row])
    nrows = len(m)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        best_abs = 0
        for i in range(r, nrows):
            v = m[i][c]
            if v:
                av = -v if v < 0 else v
                if best < 0 or av < best_abs:
                    best, best_abs = i, av
                    if av == 1:
                        break
        if best < 0:
            continue
        if best != r:
            m[r], m[best] = m[best], m[r]
        rowr = m[r]
        pv = rowr[c]
        for i in range(nrows):
            if i == r:
                continue
            f = m[i][c]
            if f:
                mi = m[i]
                m[i] = _row_gcd_reduce([pv * a - f * b for a, b in zip(mi, rowr)])
        pivots.append(c)
        r += 1
    return m, pivots


def _rref_q(rows_in: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m, pivots = _rref_q_core(rows_in, ncols)
    out: list[list[Fraction]] = []
    for i in range(len(m)):
        if i < len(pivots):
            pv = m[i][pivots[i]]
            out.append([_F0 if x == 0 else Fraction(x, pv) for x in m[i]])
        else:
            out.append([_F0] * ncols)
    return out, pivots


def mat_rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns (lowest-index pivots)."""
    f = m.field
    if f.is_prime_field:
        arr, piv = _rref_fp(m._fp, f.characteristic)
        return Matrix(f, m.rows, m.cols, fp=arr), tuple(piv)
    rows, piv = _rref_q(m._q, m.cols)
    return Matrix(f, m.rows, m.cols, q=rows), tuple(piv)


def mat_rank(m: Matrix) -> int:
    f = m.field
    if f.is_prime_field:
        return len(_rref_fp(m._fp, f.characteristic)[1])
    return len(_rref_q_core(m._q, m.cols)[1])


def mat_kernel(m: Matrix) -> Matrix:
    """Canonical kernel basis as columns (cols x nullity)."""
    rref, piv = mat_rref(m)
    free = [c for c in range(m.cols) if c not in set(piv)]
    b = MatrixBuilder(m.field, m.cols, len(free))
    one = m.field.one()
    for j, fc in enumerate(free):
        b.add(fc, j, one)
        for r, pc in enumerate(piv):
            v = rref.entry(r, fc)
            if v:
                b.add(pc, j, -v)
    return b.build()


def mat_solve(m: Matrix, rhs: Matrix) -> Matrix | None:
    """One solution X of m @ X = rhs, or None if inconsistent."""
    if m.rows != rhs.rows:
        raise ValueError("shape mismatch in solve")
    aug = Matrix.hstack(m.field, [m, rhs], rows=m.rows)
    rref, piv = mat_rref(aug)
    for c in piv:
        if c >= m.cols:
            return None
    b = MatrixBuilder(m.field, m.cols, rhs.cols)
    for r, pc in enumerate(piv):
        for k in range(rhs.cols):
            v = rref.entry(r, m.cols + k)
            if v:
                b.add(pc, k, v)
    return b.build()


@dataclass(frozen=True)
class CokernelData:
    """Quotient data for k^rows / column-space.

    projection @ m == 0, projection @ section == identity, and the
    quotient coordinates are the non-pivot coordinates of the column space.
    """

    projection: Matrix
    section: Matrix
    rank: int

    @property
    def dim(self) -> int:
        return self.projection.rows


def mat_cokernel(m: Matrix) -> CokernelData:
    rref_t, piv = mat_rref(m.transpose())
    pivset = set(piv)
    non = [i for i in range(m.rows) if i not in pivset]
    f = m.field
    proj = MatrixBuilder(f, len(non), m.rows)
    one = f.one()
    for idx, n in enumerate(non):
        proj.add(idx, n, one)
        for r, pc in enumerate(piv):
            v = rref_t.entry(r, n)
            if v:
                proj.add(idx, pc, -v)
    sect = MatrixBuilder(f, m.rows, len(non))
    for idx, n in enumerate(non):
        sect.add(n, idx, one)
    return CokernelData(projection=proj.build(), section=sect.build(), rank=len(piv))


def mat_column_space(m: Matrix) -> Matrix:
    """Canonical basis of the column space, as columns (pivot columns of m)."""
    _, piv = mat_rref(m)
    return m.submatrix(range(m.rows), list(piv))


def mat_kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product in row-major convention."""
    f = a.field
    if f.is_prime_field:
        return Matrix(f, a.rows * b.rows, a.cols * b.cols,
                      fp=np.kron(a._fp, b._fp) % f.characteristic)
    out = [[Fraction(0)] * (a.cols * b.cols) for _ in range(a.rows * b.rows)]
    for i in range(a.rows):
        for k in range(a.cols):
            v = a._q[i][k]
            if not v:
                continue
            for j in range(b.rows):
                for l in range(b.cols):
                    w = b._q[j][l]
                    if w:
                        out[i * b.rows + j][k * b.cols + l] = v * w
    return Matrix(f, a.rows * b.rows, a.cols * b.cols, q=out)


def mat_trace(m: Matrix):
    return m.trace()
