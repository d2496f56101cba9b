"""Independent oracles built on sympy.

Nothing here imports alexmod's algebra: Fox derivatives, determinantal
divisors and kernels are recomputed from scratch so that agreement is a
real cross-check.
"""
from __future__ import annotations

from itertools import combinations

import sympy as sp

t = sp.Symbol("t")


def word_letters(word: str):
    """'a b^-1 c^2' -> [('a', 1), ('b', -1), ('c', 1), ('c', 1)]."""
    out = []
    for tok in word.split():
        name, _, power = tok.partition("^")
        k = int(power) if power else 1
        sign = 1 if k > 0 else -1
        out += [(name, sign)] * abs(k)
    return out


def fox_row(word: str, generators, eps) -> list:
    """Fox derivatives of one relator, abelianized along eps."""
    row = {g: sp.Integer(0) for g in generators}
    prefix = sp.Integer(0)  # exponent of t for the prefix read so far
    for name, sign in word_letters(word):
        if sign == 1:
            row[name] += t**prefix
            prefix += eps[name]
        else:
            prefix -= eps[name]
            row[name] -= t**prefix
    return [sp.expand(row[g]) for g in generators]


def fox_matrix(generators, relators, eps) -> sp.Matrix:
    return sp.Matrix([fox_row(r, generators, eps) for r in relators])


def _clear_t(expr):
    """Polynomial in t with the largest power of t divided out (a unit of R)."""
    expr = sp.factor(sp.together(expr))
    num, den = sp.fraction(expr)
    p = sp.Poly(sp.expand(num), t, domain="QQ")
    if p.is_zero:
        return sp.Poly(0, t, domain="QQ")
    while p.eval(0) == 0:
        p = sp.quo(p, sp.Poly(t, t, domain="QQ"))
    return p.monic()


def determinantal_invariant_factors(M: sp.Matrix) -> list:
    """Invariant factors over Q[t, 1/t] from gcds of minors, as monic Polys."""
    rows, cols = M.shape
    divisors = [sp.Poly(1, t, domain="QQ")]
    for k in range(1, min(rows, cols) + 1):
        g = sp.Poly(0, t, domain="QQ")
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = sp.gcd(g, _clear_t(M.extract(list(rs), list(cs)).det()))
        if g.is_zero:
            break
        divisors.append(g.monic())
    return [sp.Poly(sp.quo(divisors[i], divisors[i - 1]), t, domain="QQ").monic()
            for i in range(1, len(divisors))]


def torsion_of_cokernel(M: sp.Matrix) -> list:
    """Nonunit invariant factors of the module presented by the rows of M."""
    return [f for f in determinantal_invariant_factors(M) if f.degree() > 0]


def char_poly_of_factors(factors) -> sp.Poly:
    out = sp.Poly(1, t, domain="QQ")
    for f in factors:
        out = out * f
    return out


def cyclotomic_multiplicities(p: sp.Poly) -> dict:
    """{d: dim of the Phi_d generalized eigenspace} from a factored char poly."""
    out = {}
    for fac, mult in sp.factor_list(p.as_expr(), t)[1]:
        fac = sp.Poly(fac, t, domain="QQ").monic()
        d = next((d for d in range(1, 200)
                  if sp.Poly(sp.cyclotomic_poly(d, t), t, domain="QQ") == fac), None)
        if d is None:
            raise ValueError(f"{fac} is not cyclotomic")
        out[d] = out.get(d, 0) + mult * fac.degree()
    return out


def to_sympy_matrix(rows) -> sp.Matrix:
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in r] for r in rows])


def generalized_kernel_dim(A: sp.Matrix, g: sp.Poly) -> int:
    """dim ker g(A)^n, n = size of A, by sympy's exact nullspace."""
    n = A.shape[0]
    gA = sp.zeros(n, n)
    for k, c in enumerate(reversed(g.all_coeffs())):
        gA += c * A**k
    return n - (gA**n).rank()


# -- thickened complexes, rebuilt with sympy Kronecker products --------------


def _left_mult(K, eta_vec, j) -> sp.Matrix:
    src, dst = K.in_degree(j), K.in_degree(j + 1)
    M = sp.zeros(len(dst), len(src))
    for c, i in enumerate(src):
        for e_idx, coef in enumerate(eta_vec):
            if not coef:
                continue
            prod = K.mult_basis(e_idx, i)
            for r, k in enumerate(dst):
                M[r, c] += sp.Rational(coef.numerator, coef.denominator) * sp.Rational(
                    prod[k].numerator, prod[k].denominator
                )
    return M


def _shift(m: int, k: int) -> sp.Matrix:
    """Multiplication by s^k on R_m in the basis 1, s, ..., s^(m-1)."""
    S = sp.zeros(m, m)
    for i in range(m - k):
        S[i + k, i] = 1
    return S


def _differential(K, eta_vec, j, m) -> sp.Matrix:
    rows, cols = len(K.in_degree(j + 1)) * m, len(K.in_degree(j)) * m
    if j < 0 or not rows or not cols:
        return sp.zeros(rows, cols)
    return sp.kronecker_product(_left_mult(K, eta_vec, j), _shift(m, 1))


def _colspace_dim(vectors, n) -> int:
    if not vectors:
        return 0
    return sp.Matrix.hstack(*vectors).rank()


def thickened_qdim(K, eta_vec, j, m) -> int:
    n = len(K.in_degree(j)) * m
    d = _differential(K, eta_vec, j, m)
    z = d.nullspace() if d.shape[0] else [sp.eye(n)[:, i] for i in range(n)]
    b = [c for c in _differential(K, eta_vec, j - 1, m).columnspace()] if j >= 1 else []
    return len(z) - _colspace_dim(b, n)


def eigen1_kernel_dim(K, eta_vec, j, m) -> int:
    """dim ker(H^j(K(eta,m)) -> H^j(K(eta,2m))), omega (x) phi -> omega (x) s^m phi."""
    n = len(K.in_degree(j))
    if not n:
        return 0
    d_lo = _differential(K, eta_vec, j, m)
    z = d_lo.nullspace() if d_lo.shape[0] else [sp.eye(n * m)[:, i] for i in range(n * m)]
    b_lo = _differential(K, eta_vec, j - 1, m).columnspace() if j >= 1 else []
    b_hi = _differential(K, eta_vec, j - 1, 2 * m).columnspace() if j >= 1 else []
    # s^m as a map R_m -> R_2m: basis s^k goes to s^(k+m)
    emb = sp.zeros(2 * m, m)
    for k in range(m):
        emb[k + m, k] = 1
    mu = sp.kronecker_product(sp.eye(n), emb)
    # cocycles whose image is a coboundary: solve mu*z*x in span(b_hi)
    if not z:
        return 0
    Z = sp.Matrix.hstack(*z)
    if b_hi:
        B = sp.Matrix.hstack(*b_hi)
        stacked = sp.Matrix.hstack(mu * Z, -B)
        sol = stacked.nullspace()
        pre = [Z * v[: Z.shape[1], :] for v in sol]
    else:
        pre = [Z * v for v in (mu * Z).nullspace()]
    return _colspace_dim(pre + list(b_lo), n * m) - _colspace_dim(list(b_lo), n * m)
