"""Dense exact linear algebra over Q and over cyclotomic fields.

Rational matrices go through fraction-free (Bareiss-style) elimination;
matrices with genuinely cyclotomic entries use plain Gaussian elimination
with exact field division.  Intended sizes are small (ranks <= 10 or so for
cyclotomic work, a few hundred for rational work).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cyclotomic import Cyclotomic
from .errors import ValidationError


def is_zero_scalar(x) -> bool:
    if isinstance(x, Cyclotomic):
        return x.is_zero()
    return x == 0


def invert_scalar(x):
    if isinstance(x, Cyclotomic):
        return x.inverse()
    return Fraction(1) / Fraction(x)


def conjugate_scalar(x):
    if isinstance(x, Cyclotomic):
        return x.conjugate()
    return x


def as_rational(x) -> Fraction | None:
    """Fraction value of x, or None when x is irrational."""
    if isinstance(x, Cyclotomic):
        return x.rational_value() if x.is_rational() else None
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return None


class Matrix:
    """Immutable dense matrix with int/Fraction/Cyclotomic entries."""

    __slots__ = ("entries",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValidationError("matrix needs at least one row and one column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValidationError("ragged rows in matrix")
        self.entries = rows

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "Matrix":
        return cls([[0] * c for _ in range(r)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.rows != other.rows or self.cols != other.cols:
            return False
        return all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    __hash__ = None

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValidationError("matrix shape mismatch in addition")
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.entries])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValidationError("matrix shape mismatch in product")
            bt = other.entries
            out = []
            for ra in self.entries:
                row = []
                for j in range(other.cols):
                    acc = 0
                    for k, a in enumerate(ra):
                        if not (isinstance(a, (int, Fraction)) and a == 0):
                            acc = acc + a * bt[k][j]
                    row.append(acc)
                out.append(row)
            return Matrix(out)
        return self.scale(other)

    def scale(self, c) -> "Matrix":
        return Matrix([[c * a for a in r] for r in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.entries)))

    def trace(self):
        if not self.is_square:
            raise ValidationError("trace needs a square matrix")
        acc = 0
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def is_identity(self) -> bool:
        return self.is_square and self == Matrix.identity(self.rows)

    def submatrix(self, k: int) -> "Matrix":
        return Matrix([r[:k] for r in self.entries[:k]])

    def rational_entries(self):
        """All entries as Fractions, or None if any entry is irrational."""
        out = []
        for r in self.entries:
            row = []
            for x in r:
                q = as_rational(x)
                if q is None:
                    return None
                row.append(q)
            out.append(row)
        return out

    def kron(self, other: "Matrix") -> "Matrix":
        out = []
        for ra in self.entries:
            for rb in other.entries:
                out.append([a * b for a in ra for b in rb])
        return Matrix(out)

    def determinant(self):
        if not self.is_square:
            raise ValidationError("determinant needs a square matrix")
        fr = self.rational_entries()
        if fr is not None:
            return _bareiss_det(fr)
        return _field_det([list(r) for r in self.entries])

    def leading_principal_minors(self) -> list:
        if not self.is_square:
            raise ValidationError("principal minors need a square matrix")
        return [self.submatrix(k).determinant() for k in range(1, self.rows + 1)]

    def rank(self) -> int:
        fr = self.rational_entries()
        if fr is None:
            raise ValidationError("rank is defined here for rational matrices only")
        return _rational_rank(fr)

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise ValidationError("inverse needs a square matrix")
        n = self.rows
        aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.entries)]
        reduced = _field_rref(aug, ncols=n)
        out = []
        for i in range(n):
            if is_zero_scalar(reduced[i][i]):
                raise ValidationError("matrix is singular")
            pinv = invert_scalar(reduced[i][i])
            out.append([pinv * x for x in reduced[i][n:]])
        return Matrix(out)

    def solve(self, b):
        """Solution x of self @ x = b (b a sequence), or None if inconsistent.

        Free variables, if any, are set to zero.
        """
        if len(b) != self.rows:
            raise ValidationError("right-hand side length mismatch")
        aug = [list(r) + [b[i]] for i, r in enumerate(self.entries)]
        n = self.cols
        reduced = _field_rref(aug, ncols=n)
        x = [0] * n
        pivots = []
        for r in reduced:
            j = next((j for j in range(n) if not is_zero_scalar(r[j])), None)
            if j is None:
                if not is_zero_scalar(r[n]):
                    return None
            else:
                pivots.append((j, r))
        for j, r in pivots:
            acc = r[n]
            for k in range(j + 1, n):
                if not is_zero_scalar(r[k]) and not is_zero_scalar(x[k]):
                    acc = acc - r[k] * x[k]
            x[j] = acc * invert_scalar(r[j])
        # confirm consistency on every row (cheap at these sizes)
        for i, row in enumerate(self.entries):
            acc = 0
            for k, a in enumerate(row):
                if not is_zero_scalar(x[k]):
                    acc = acc + a * x[k]
            if not is_zero_scalar(acc - b[i]):
                return None
        return x

    def nullspace(self) -> list[list]:
        """Basis of the right nullspace; exact, works over Q and Q(zeta)."""
        n = self.cols
        reduced = _field_rref([list(r) for r in self.entries], ncols=n)
        pivot_cols = []
        for r in reduced:
            j = next((j for j in range(n) if not is_zero_scalar(r[j])), None)
            if j is not None:
                pivot_cols.append(j)
        free = [j for j in range(n) if j not in pivot_cols]
        basis = []
        for f in free:
            v = [0] * n
            v[f] = 1
            for j, r in zip(pivot_cols, reduced):
                if not is_zero_scalar(r[f]):
                    v[j] = -(r[f] * invert_scalar(r[j]))
            basis.append(v)
        return basis

    def field_rank(self) -> int:
        """Rank via division-based elimination; valid for cyclotomic entries too."""
        n = self.cols
        reduced = _field_rref([list(r) for r in self.entries], ncols=n)
        return sum(
            1 for r in reduced if any(not is_zero_scalar(r[j]) for j in range(n))
        )

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.entries]!r})"


def block_diag(blocks: list[Matrix]) -> Matrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    out = [[0] * m for _ in range(n)]
    i0 = j0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[i0 + i][j0 + j] = b.entries[i][j]
        i0 += b.rows
        j0 += b.cols
    return Matrix(out)


def _bareiss_det(a: list[list[Fraction]]):
    """Fraction-free determinant (divisions are exact at every step)."""
    n = len(a)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = pivot
    return sign * a[n - 1][n - 1]


def _rational_rank(a: list[list[Fraction]]) -> int:
    """Rank over Q by integer fraction-free elimination (rows pre-scaled)."""
    rows = []
    for r in a:
        den = 1
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in r]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g:
            rows.append([x // g for x in ints])
    ncols = len(a[0])
    rank = 0
    r0 = 0
    for col in range(ncols):
        piv = next((i for i in range(r0, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r0], rows[piv] = rows[piv], rows[r0]
        p = rows[r0][col]
        for i in range(r0 + 1, len(rows)):
            c = rows[i][col]
            if c:
                row = [p * x - c * y for x, y in zip(rows[i], rows[r0])]
                g = 0
                for x in row:
                    g = gcd(g, x)
                rows[i] = [x // g for x in row] if g else row
        rank += 1
        r0 += 1
        if r0 == len(rows):
            break
    return rank


def _field_det(a: list[list]):
    """Gaussian-elimination determinant with exact field division."""
    n = len(a)
    sign = 1
    pivots = []
    for k in range(n):
        piv = next((i for i in range(k, n) if not is_zero_scalar(a[i][k])), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        p = a[k][k]
        pivots.append(p)
        pinv = invert_scalar(p)
        for i in range(k + 1, n):
            c = a[i][k]
            if not is_zero_scalar(c):
                f = c * pinv
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    det = Fraction(sign)
    for p in pivots:
        det = det * p
    return det


def _field_rref(a: list[list], ncols: int) -> list[list]:
    """Forward elimination (not fully reduced) over the first ncols columns."""
    r0 = 0
    nrows = len(a)
    for col in range(ncols):
        piv = next((i for i in range(r0, nrows) if not is_zero_scalar(a[i][col])), None)
        if piv is None:
            continue
        a[r0], a[piv] = a[piv], a[r0]
        pinv = invert_scalar(a[r0][col])
        for i in range(nrows):
            if i != r0 and not is_zero_scalar(a[i][col]):
                f = a[i][col] * pinv
                a[i] = [x - f * y for x, y in zip(a[i], a[r0])]
        r0 += 1
        if r0 == nrows:
            break
    return a


def determinant(m: Matrix):
    return m.determinant()


def leading_principal_minors(m: Matrix) -> list:
    return m.leading_principal_minors()


def rank(m: Matrix) -> int:
    return m.rank()
