"""Dense linear algebra over Q on lists of lists of Fractions.

Matrices are row-major ``list[list[Fraction]]``; vectors are flat lists.
Functions never mutate their arguments.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .poly import UniPoly, lcm

Matrix = list
_ZERO = Fraction(0)
_ONE = Fraction(1)


def zeros(rows: int, cols: int) -> Matrix:
    return [[_ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = _ONE
    return m


def to_matrix(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def freeze(m) -> tuple:
    return tuple(tuple(row) for row in m)


def shape(m) -> tuple:
    return (len(m), len(m[0]) if m else 0)


def transpose(m, cols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*m)]


def _integer_scaled(rows) -> tuple:
    """(D, integer rows) with rows = integer rows / D."""
    den = 1
    for row in rows:
        for x in row:
            d = x.denominator if isinstance(x, Fraction) else 1
            if den % d:
                den = den * d // gcd(den, d)
    return den, [[int(x * den) if den != 1 else int(x) for x in row] for row in rows]


def matmul(a, b) -> Matrix:
    # Multiply over the integers after clearing denominators; only the
    # n*p output entries are built as Fractions.
    n = len(a)
    p = len(b[0]) if b else 0
    if not n or not p:
        return [[_ZERO] * p for _ in range(n)]
    da, ia = _integer_scaled(a)
    db, ib = _integer_scaled(b)
    cols = list(zip(*ib))
    den = da * db
    out = []
    for row in ia:
        nz = [(l, x) for l, x in enumerate(row) if x]
        out.append([
            Fraction(sum(x * col[l] for l, x in nz), den) if nz else _ZERO
            for col in cols
        ])
    return out


def matvec(a, v) -> list:
    if not a:
        return []
    dv, iv = _integer_scaled([v])
    iv = iv[0]
    nz = [(l, x) for l, x in enumerate(iv) if x]
    out = []
    for row in a:
        acc = _ZERO
        for l, x in nz:
            y = row[l]
            if y:
                acc += y * x
        out.append(acc / dv if dv != 1 else acc)
    return out


def matadd(a, b) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matsub(a, b) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a, c) -> Matrix:
    return [[x * c for x in row] for row in a]


def is_zero(a) -> bool:
    return all(not x for row in a for x in row)


def mat_pow(a, k: int) -> Matrix:
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = matmul(result, base)
        k >>= 1
        if k:
            base = matmul(base, base)
    return result


def _int_matmul(a, b) -> list:
    cols = list(zip(*b))
    out = []
    for row in a:
        nz = [(l, x) for l, x in enumerate(row) if x]
        out.append([sum(x * col[l] for l, x in nz) for col in cols])
    return out


class PowerTable:
    """Cached powers of a square matrix for evaluating many polynomials at it.

    Powers are kept as (denominator, integer matrix) pairs, so p(A) is one
    integer linear combination per entry.
    """

    def __init__(self, a):
        self.n = len(a)
        self._den, self._int = _integer_scaled(a) if a else (1, [])
        self._powers = [(1, [[int(i == j) for j in range(self.n)] for i in range(self.n)])]

    def power(self, k: int) -> tuple:
        while len(self._powers) <= k:
            d, m = self._powers[-1]
            prod = _int_matmul(m, self._int)
            den = d * self._den
            g = den
            for row in prod:
                for x in row:
                    if x:
                        g = gcd(g, x)
                        if g == 1:
                            break
                if g == 1:
                    break
            if g > 1:
                prod = [[x // g for x in row] for row in prod]
                den //= g
            self._powers.append((den, prod))
        return self._powers[k]

    def _combination(self, p: UniPoly) -> tuple:
        terms = [(c, self.power(k)) for k, c in enumerate(p.coeffs) if c]
        den = 1
        for c, (d, _) in terms:
            x = c.denominator * d
            den = den * x // gcd(den, x)
        scaled = [(c.numerator * (den // (c.denominator * d)), m) for c, (d, m) in terms]
        n = self.n
        return den, [[sum(f * m[i][j] for f, m in scaled) for j in range(n)] for i in range(n)]

    def __call__(self, p: UniPoly) -> Matrix:
        n = self.n
        if p.is_zero() or not n:
            return zeros(n, n)
        den, num = self._combination(p)
        return [[Fraction(x, den) if x else _ZERO for x in row] for row in num]

    def annihilates(self, p: UniPoly) -> bool:
        if p.is_zero() or not self.n:
            return True
        _, num = self._combination(p)
        return not any(x for row in num for x in row)


def poly_eval(p: UniPoly, a) -> Matrix:
    """p(A)."""
    return PowerTable(a)(p)


def hstack(*blocks) -> Matrix:
    rows = max((len(b) for b in blocks), default=0)
    return [sum((list(b[i]) for b in blocks), []) for i in range(rows)]


def columns(vectors: Sequence, rows: int) -> Matrix:
    """Matrix whose columns are the given vectors."""
    if not vectors:
        return [[] for _ in range(rows)]
    return [list(r) for r in zip(*vectors)]


def _primitive(row: list) -> list:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    return [x // g for x in row] if g > 1 else row


def rref(a):
    """Reduced row echelon form. Returns (R, pivot_columns).

    Elimination runs on primitive integer rows (each row scaled to clear
    denominators, then divided by its content); Fractions are formed only
    when the pivots are normalized at the end.
    """
    # rows are scaled individually so one bad denominator does not spread
    m = [_primitive(_integer_scaled([row])[1][0]) for row in a]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        prow = m[r]
        pv = prow[c]
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    g = gcd(pv, f)
                    a_, b_ = pv // g, f // g
                    m[i] = _primitive([a_ * x - b_ * y for x, y in zip(m[i], prow)])
        pivots.append(c)
        r += 1
    out = []
    for i, row in enumerate(m):
        if i < len(pivots):
            pv = row[pivots[i]]
            out.append([Fraction(x, pv) if x else _ZERO for x in row])
        else:
            out.append([_ZERO] * ncols)
    return out, pivots


def rank(a) -> int:
    if not a or not a[0]:
        return 0
    # eliminate on the smaller orientation
    if len(a) > len(a[0]):
        a = transpose(a)
    return len(rref(a)[1])


def nullspace(a, ncols: int | None = None) -> list:
    """Basis (list of vectors) of {x : A x = 0}."""
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    if not a:
        return [[_ONE if i == j else _ZERO for i in range(n)] for j in range(n)]
    r, pivots = rref(a)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [_ZERO] * n
        v[f] = _ONE
        for row, pc in zip(r, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def inverse(a) -> Matrix:
    n = len(a)
    aug = [list(row) + [_ONE if i == j else _ZERO for j in range(n)] for i, row in enumerate(a)]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in r]


def solve(a, b: list) -> list:
    """Some x with A x = b, or raise ValueError if none exists."""
    n = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    r, pivots = rref(aug)
    if n in pivots:
        raise ValueError("inconsistent linear system")
    x = [_ZERO] * n
    for row, pc in zip(r, pivots):
        x[pc] = row[n]
    return x


def span_rank(vectors: Sequence, dim: int) -> int:
    if not vectors:
        return 0
    return rank([list(v) for v in vectors])


def same_span(u: Sequence, v: Sequence, dim: int) -> bool:
    ru = span_rank(u, dim)
    rv = span_rank(v, dim)
    return ru == rv == span_rank(list(u) + list(v), dim)


def charpoly(a) -> UniPoly:
    """Characteristic polynomial det(xI - A), via Hessenberg reduction."""
    n = len(a)
    h = [list(row) for row in a]
    # similarity transform to upper Hessenberg form
    for k in range(n - 2):
        p = next((i for i in range(k + 1, n) if h[i][k]), None)
        if p is None:
            continue
        if p != k + 1:
            h[p], h[k + 1] = h[k + 1], h[p]
            for row in h:
                row[p], row[k + 1] = row[k + 1], row[p]
        piv = h[k + 1][k]
        for i in range(k + 2, n):
            f = h[i][k] / piv
            if f:
                ri, rk = h[i], h[k + 1]
                for j in range(n):
                    ri[j] -= f * rk[j]
                for row in h:
                    row[k + 1] += f * row[i]
    # recurrence on leading principal submatrices
    polys = [UniPoly((1,))]
    x = UniPoly.x()
    for m in range(1, n + 1):
        p = (x - h[m - 1][m - 1]) * polys[m - 1]
        prod = _ONE
        for i in range(1, m):
            prod *= h[m - i][m - i - 1]
            if not prod:
                break
            c = h[m - i - 1][m - 1]
            if c:
                p = p - polys[m - i - 1] * (c * prod)
        polys.append(p)
    return polys[n]


def minpoly_vector(a, v) -> UniPoly:
    """Monic polynomial of least degree with p(A) v = 0.

    Works with B = D*A, D the common denominator of A, so the Krylov vectors
    stay integral; if q(B) v = 0 then p(x) = q(D x) / D^deg q.
    """
    n = len(a)
    den, b = _integer_scaled(a)
    _, w = _integer_scaled([v])
    w = w[0]
    # incremental echelon of [w, Bw, B^2 w, ...] on primitive integer rows,
    # each carrying the combination of Krylov vectors it represents
    echelon = []  # (vector, combo, pivot)
    for k in range(n + 1):
        vec = list(w)
        combo = [0] * (k + 1)
        combo[k] = 1
        for ev, ec, ep in echelon:
            f = vec[ep]
            if f:
                g = gcd(f, ev[ep])
                x, y = ev[ep] // g, f // g
                vec = [x * p - y * q for p, q in zip(vec, ev)]
                combo = [x * p - y * q for p, q in zip(combo, ec + [0] * (len(combo) - len(ec)))]
                c = 0
                for t in vec + combo:
                    if t:
                        c = gcd(c, t)
                        if c == 1:
                            break
                if c > 1:
                    vec = [t // c for t in vec]
                    combo = [t // c for t in combo]
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is None:
            lead = combo[-1]
            return UniPoly([Fraction(c * den**i, lead * den**k) for i, c in enumerate(combo)])
        echelon.append((vec, combo, piv))
        w = [sum(x * y for x, y in zip(row, w) if x) for row in b]
    raise AssertionError("Krylov sequence did not terminate")


def minpoly(a, powers: PowerTable | None = None) -> UniPoly:
    """Minimal polynomial of A.

    Starts from the Krylov polynomial of a fixed dense vector, which is the
    minimal polynomial for almost every choice, checks p(A) = 0, and falls
    back to the lcm over basis vectors only when it is not.
    """
    n = len(a)
    if n == 0:
        return UniPoly((1,))
    v = [Fraction((7 * i + 3) % 11 + 1) for i in range(n)]
    p = minpoly_vector(a, v)
    if (powers or PowerTable(a)).annihilates(p):
        return p
    for i in range(n):
        e = [_ZERO] * n
        e[i] = _ONE
        if not poly_eval_vec(p, a, e):
            continue
        p = lcm(p, minpoly_vector(a, e))
    return p


def poly_eval_vec(p: UniPoly, a, v) -> bool:
    """True iff p(A) v is nonzero."""
    acc = [_ZERO] * len(v)
    for c in reversed(p.coeffs):
        acc = matvec(a, acc)
        if c:
            acc = [x + c * y for x, y in zip(acc, v)]
    return any(acc)


def is_nilpotent(a) -> bool:
    """A^k = 0 for some k <= n; stops at the first vanishing power."""
    n = len(a)
    b = a
    for _ in range(n):
        if is_zero(b):
            return True
        b = matmul(b, a)
    return is_zero(b)
