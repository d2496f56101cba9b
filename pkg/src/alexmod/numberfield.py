"""Fields used when specializing t: Q itself and cyclotomic fields Q(zeta_d).

Elements of Q(zeta_d) are :class:`UniPoly` reduced modulo Phi_d.
"""
from __future__ import annotations

from fractions import Fraction

from .poly import LaurentPoly, UniPoly, cyclotomic, inverse_mod


class RationalField:
    name = "Q"

    def zero(self):
        return Fraction(0)

    def is_zero(self, a) -> bool:
        return a == 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return 1 / a

    def embed_laurent(self, p: LaurentPoly, value: Fraction):
        return p(value)


class CyclotomicField:
    """Q(zeta_d) = Q[x]/Phi_d(x)."""

    def __init__(self, d: int):
        self.d = d
        self.modulus = cyclotomic(d)
        self.name = f"Q(zeta_{d})"

    def zero(self):
        return UniPoly()

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return (a * b) % self.modulus

    def inv(self, a):
        return inverse_mod(a, self.modulus)

    def zeta_power(self, e: int) -> UniPoly:
        return UniPoly.monomial(e % self.d) % self.modulus

    def embed_laurent(self, p: LaurentPoly):
        acc = UniPoly()
        for e, c in p.terms().items():
            acc = acc + self.zeta_power(e) * c
        return acc % self.modulus


def field_rank(rows, field) -> int:
    """Rank of a matrix with entries in ``field`` by Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not field.is_zero(m[i][c])), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = field.inv(m[r][c])
        prow = [field.mul(x, inv) for x in m[r]]
        m[r] = prow
        for i in range(r + 1, nrows):
            f = m[i][c]
            if not field.is_zero(f):
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], prow)]
        r += 1
    return r
