"""Matrices over R = Q[t, t^-1] and their Smith normal form."""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

from fractions import Fraction

from .errors import Cancelled
from .poly import LAURENT_ONE, LAURENT_ZERO, NEG_INF, LaurentPoly, UniPoly, gcd, parse_laurent


class CancelToken:
    """Cooperative cancellation flag checked inside long eliminations."""

    def __init__(self):
        self._event = threading.Event()

    def cancel(self):
        self._event.set()

    @property
    def cancelled(self) -> bool:
        return self._event.is_set()

    def check(self):
        if self._event.is_set():
            raise Cancelled("computation cancelled")


@dataclass(frozen=True)
class RMatrix:
    rows: int
    cols: int
    entries: tuple = field(default=())

    def __post_init__(self):
        entries = tuple(tuple(r) for r in self.entries)
        if not entries and self.rows:
            entries = tuple((LAURENT_ZERO,) * self.cols for _ in range(self.rows))
        if len(entries) != self.rows or any(len(r) != self.cols for r in entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} array")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> RMatrix:
        rows = [[_coerce(x) for x in r] for r in rows]
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        return cls(len(rows), ncols, rows)

    @classmethod
    def zero(cls, rows: int, cols: int) -> RMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> RMatrix:
        return cls(n, n, [[LAURENT_ONE if i == j else LAURENT_ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, diag, rows: int | None = None, cols: int | None = None) -> RMatrix:
        diag = [_coerce(x) for x in diag]
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        ent = [[LAURENT_ZERO] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            ent[i][i] = d
        return cls(rows, cols, ent)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: RMatrix) -> RMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = LAURENT_ZERO
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if not a.is_zero():
                        b = other.entries[k][j]
                        if not b.is_zero():
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RMatrix(self.rows, other.cols, out)

    def transpose(self) -> RMatrix:
        return RMatrix(self.cols, self.rows, [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.entries for x in r)

    def is_diagonal(self) -> bool:
        return all(
            self.entries[i][j].is_zero() for i in range(self.rows) for j in range(self.cols) if i != j
        )

    def submatrix(self, rows, cols) -> RMatrix:
        rows, cols = list(rows), list(cols)
        return RMatrix(len(rows), len(cols), [[self.entries[i][j] for j in cols] for i in rows])

    def permuted(self, row_perm, col_perm) -> RMatrix:
        return self.submatrix(row_perm, col_perm)

    def map(self, fn) -> list:
        return [[fn(x) for x in r] for r in self.entries]

    def to_strings(self) -> list:
        return [[str(x) for x in r] for r in self.entries]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(r) + "]" for r in self.to_strings()) + "]"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, str):
        return parse_laurent(x)
    return LaurentPoly.constant(x)


@dataclass(frozen=True)
class SNFResult:
    """left @ A @ right = diag(invariant factors); right_inv = right^-1."""

    left: RMatrix
    diag: tuple
    right: RMatrix
    right_inv: RMatrix

    @property
    def nonzero(self) -> tuple:
        return tuple(d for d in self.diag if not d.is_zero())

    @property
    def rank(self) -> int:
        return len(self.nonzero)

    def diagonal_matrix(self, rows: int, cols: int) -> RMatrix:
        return RMatrix.diagonal(self.diag, rows, cols)


def _content_unit(vec) -> Fraction:
    """Rational c making c*vec primitive integral (content extraction)."""
    den = 1
    num = 0
    for x in vec:
        for c in x.body.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
            num = math.gcd(num, c.numerator)
    if num == 0:
        return Fraction(1)
    return Fraction(den, num)


def smith_normal_form(
    a: RMatrix, cancel: CancelToken | None = None, transforms: bool = True
) -> SNFResult:
    """Smith normal form over the Euclidean ring Q[t, t^-1].

    The Euclidean size of an entry is the degree of its body, so units are
    exactly c*t^k. Pivots are chosen with minimal size (ties by position)
    and rescaled to be monic, which keeps rational coefficients small.
    Invariant factors come out monic with zero valuation. With
    ``transforms=False`` only the diagonal is computed and the returned
    transformation matrices are ``None``.
    """
    n, p = a.rows, a.cols
    A = [list(r) for r in a.entries]
    if transforms:
        L = [list(r) for r in RMatrix.identity(n).entries]
        Rm = [list(r) for r in RMatrix.identity(p).entries]
        Ri = [list(r) for r in RMatrix.identity(p).entries]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if transforms:
            L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if transforms:
            for row in Rm:
                row[i], row[j] = row[j], row[i]
            Ri[i], Ri[j] = Ri[j], Ri[i]

    def scale_row(i, u):
        A[i] = [x * u for x in A[i]]
        if transforms:
            L[i] = [x * u for x in L[i]]

    def scale_col(j, c: Fraction):
        for row in A:
            row[j] = row[j] * c
        if transforms:
            for row in Rm:
                row[j] = row[j] * c
            inv = 1 / c
            Ri[j] = [x * inv for x in Ri[j]]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        A[dst] = [x + q * y if not y.is_zero() else x for x, y in zip(A[dst], A[src])]
        if transforms:
            L[dst] = [x + q * y if not y.is_zero() else x for x, y in zip(L[dst], L[src])]
        c = _content_unit(A[dst])
        if c != 1:
            scale_row(dst, c)

    def add_col(dst, src, q):
        # col_dst += q * col_src ; inverse: row_src of Ri -= q * row_dst
        for row in A:
            if not row[src].is_zero():
                row[dst] = row[dst] + q * row[src]
        if transforms:
            for row in Rm:
                if not row[src].is_zero():
                    row[dst] = row[dst] + q * row[src]
            Ri[src] = [x - q * y if not y.is_zero() else x for x, y in zip(Ri[src], Ri[dst])]
        c = _content_unit([row[dst] for row in A])
        if c != 1:
            scale_col(dst, c)

    diag = []
    for k in range(min(n, p)):
        while True:
            if cancel is not None:
                cancel.check()
            best = None
            for i in range(k, n):
                for j in range(k, p):
                    x = A[i][j]
                    if not x.is_zero() and (best is None or x.degree < best[0]):
                        best = (x.degree, i, j)
                        if best[0] == 0:
                            break
                if best is not None and best[0] == 0:
                    break
            if best is None:
                break
            _, i0, j0 = best
            if i0 != k:
                swap_rows(i0, k)
            if j0 != k:
                swap_cols(j0, k)
            scale_row(k, A[k][k].unit_part().unit_inverse())
            piv = A[k][k]
            clean = True
            for i in range(k + 1, n):
                if not A[i][k].is_zero():
                    q, r = A[i][k].euclid(piv)
                    add_row(i, k, -q)
                    if not r.is_zero():
                        clean = False
            for j in range(k + 1, p):
                if not A[k][j].is_zero():
                    q, r = A[k][j].euclid(piv)
                    add_col(j, k, -q)
                    if not r.is_zero():
                        clean = False
            if not clean:
                continue
            bad = next(
                (i for i in range(k + 1, n) for j in range(k + 1, p) if not piv.divides(A[i][j])),
                None,
            )
            if bad is None:
                break
            add_row(k, bad, LAURENT_ONE)
        if all(A[i][k].is_zero() for i in range(k, n)) and all(A[k][j].is_zero() for j in range(k, p)):
            # zero block remains: the rest of the diagonal is zero
            diag.extend([LAURENT_ZERO] * (min(n, p) - k))
            break
        diag.append(A[k][k])
    if not transforms:
        return SNFResult(left=None, diag=tuple(diag), right=None, right_inv=None)
    return SNFResult(
        left=RMatrix(n, n, L),
        diag=tuple(diag),
        right=RMatrix(p, p, Rm),
        right_inv=RMatrix(p, p, Ri),
    )


def invariant_factors(a: RMatrix, cancel: CancelToken | None = None) -> tuple:
    return smith_normal_form(a, cancel, transforms=False).nonzero


def _poly_rows(a: RMatrix) -> list:
    """Rows of A as polynomials in t after clearing negative powers row-wise."""
    rows = []
    for r in a.entries:
        nz = [x for x in r if not x.is_zero()]
        if not nz:
            continue
        v = min(x.valuation for x in nz)
        rows.append([UniPoly.monomial(x.valuation - v) * x.body if not x.is_zero() else UniPoly() for x in r])
    return rows


def rank_over_fraction_field(a: RMatrix) -> int:
    """Rank over Q(t) by fraction-free elimination with row content removal."""
    rows = _poly_rows(a)
    if not rows:
        return 0
    ncols = a.cols
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if not rows[i][c].is_zero() and (piv is None or rows[i][c].degree < rows[piv][c].degree):
                piv = i
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        pc = prow[c]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f.is_zero():
                continue
            g = gcd(pc, f)
            mp, mf = pc // g, f // g
            new = [x * mp - y * mf for x, y in zip(rows[i], prow)]
            rows[i] = _remove_content(new)
        rank += 1
        if rank == len(rows):
            break
    return rank


def _remove_content(row: list) -> list:
    g = UniPoly()
    for x in row:
        if not x.is_zero():
            g = gcd(g, x) if not g.is_zero() else x.monic()
            if g.degree == 0:
                break
    if g.is_zero() or g.degree == 0:
        return row
    return [x // g for x in row]


def determinant(a: RMatrix) -> LaurentPoly:
    """Determinant by cofactor-free elimination over Q(t) (small matrices)."""
    n = a.rows
    if n != a.cols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return LAURENT_ONE
    # Bareiss over Q[t] after clearing valuations row-wise
    shift = 0
    m = []
    for r in a.entries:
        nz = [x for x in r if not x.is_zero()]
        if not nz:
            return LAURENT_ZERO
        v = min(x.valuation for x in nz)
        shift += v
        m.append([UniPoly.monomial(x.valuation - v) * x.body if not x.is_zero() else UniPoly() for x in r])
    sign = 1
    prev = UniPoly((1,))
    for k in range(n - 1):
        if m[k][k].is_zero():
            sw = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if sw is None:
                return LAURENT_ZERO
            m[k], m[sw] = m[sw], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = UniPoly()
        prev = m[k][k]
    det = m[n - 1][n - 1] * sign
    return LaurentPoly(shift, det) if not det.is_zero() else LAURENT_ZERO


__all__ = [
    "CancelToken",
    "NEG_INF",
    "RMatrix",
    "SNFResult",
    "determinant",
    "invariant_factors",
    "rank_over_fraction_field",
    "smith_normal_form",
]
