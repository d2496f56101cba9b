"""Finitely generated modules over R = Q[t, t^-1] and the monodromy t.

The torsion part of a module is stored as a rational matrix for the action
of t, in the companion basis of the cyclic summands R/(d_i). Everything
downstream (N, the Jordan-Chevalley factors, eigenspaces) is computed from
that matrix alone, so conjugated matrices give the same answers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm as int_lcm

from . import linalg as la
from .errors import NotAnnihilated, NotQuasiUnipotent
from .poly import (
    LaurentPoly,
    UniPoly,
    cyclotomic,
    cyclotomic_orders_up_to_degree,
    divisors,
    euler_phi,
    gcd,
    inverse_mod,
)
from .snf import CancelToken, RMatrix, smith_normal_form


@dataclass(frozen=True)
class PresentedRModule:
    """Cokernel of ``relations``: R^generators / (column span of relations)."""

    generators: int
    relations: RMatrix

    def __post_init__(self):
        if self.relations.rows != self.generators:
            raise ValueError(
                f"relation matrix has {self.relations.rows} rows for {self.generators} generators"
            )

    @classmethod
    def free(cls, rank: int) -> PresentedRModule:
        return cls(rank, RMatrix(rank, 0))

    @classmethod
    def cyclic(cls, *factors) -> PresentedRModule:
        return cls(len(factors), RMatrix.diagonal(factors))


def companion(p: UniPoly) -> list:
    """Matrix of multiplication by t on Q[t]/(p), basis 1, t, ..., t^(n-1)."""
    p = p.monic()
    n = p.degree
    m = la.zeros(n, n)
    for i in range(1, n):
        m[i][i - 1] = Fraction(1)
    for i in range(n):
        m[i][n - 1] = -p[i]
    return m


def block_diagonal(blocks) -> list:
    n = sum(len(b) for b in blocks)
    m = la.zeros(n, n)
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                m[off + i][off + j] = b[i][j]
        off += k
    return m


@dataclass(frozen=True)
class TorsionModule:
    invariant_factors: tuple
    t_matrix: tuple = field(default=None)

    def __post_init__(self):
        facs = tuple(f.normalized() for f in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", facs)
        if self.t_matrix is None:
            tm = block_diagonal([companion(f.body) for f in facs])
        else:
            tm = self.t_matrix
        object.__setattr__(self, "t_matrix", la.freeze(tm))
        if len(self.t_matrix) != self.qdim:
            raise ValueError("t_matrix size does not match the total degree of the invariant factors")

    @classmethod
    def from_factors(cls, *factors) -> TorsionModule:
        return cls(tuple(f if isinstance(f, LaurentPoly) else LaurentPoly.parse(f) for f in factors))

    @property
    def qdim(self) -> int:
        return sum(f.degree for f in self.invariant_factors)

    def matrix(self) -> list:
        return [list(r) for r in self.t_matrix]

    def conjugated(self, p) -> TorsionModule:
        """Same module with t expressed in the basis given by the columns of p."""
        t = la.matmul(la.inverse(p), la.matmul(self.matrix(), p))
        return TorsionModule(self.invariant_factors, la.freeze(t))

    def powers(self) -> la.PowerTable:
        cached = self.__dict__.get("_powers")
        if cached is None:
            cached = la.PowerTable(self.t_matrix)
            object.__setattr__(self, "_powers", cached)
        return cached

    def char_poly(self) -> UniPoly:
        cached = self.__dict__.get("_char_poly")
        if cached is None:
            cached = la.charpoly(self.matrix())
            object.__setattr__(self, "_char_poly", cached)
        return cached

    def product_of_factors(self) -> UniPoly:
        acc = UniPoly((1,))
        for f in self.invariant_factors:
            acc = acc * f.body
        return acc


def decompose(module: PresentedRModule, cancel: CancelToken | None = None):
    """Split a presented module into (free rank, torsion part)."""
    snf = smith_normal_form(module.relations, cancel, transforms=False)
    nonzero = snf.nonzero
    free_rank = module.generators - len(nonzero)
    torsion = TorsionModule(tuple(d for d in nonzero if not d.is_unit()))
    return free_rank, torsion


def find_N(T: TorsionModule) -> int:
    """Least N with t^N - 1 nilpotent on T.

    Strips cyclotomic factors Phi_d off the characteristic polynomial by
    exact division; anything left over is not a product of cyclotomics.
    """
    chi = T.char_poly()
    orders = []
    for d in cyclotomic_orders_up_to_degree(max(chi.degree, 1)):
        if chi.degree < euler_phi(d):
            continue
        phi = cyclotomic(d)
        hit = False
        while True:
            q, r = divmod(chi, phi)
            if not r.is_zero():
                break
            chi, hit = q, True
        if hit:
            orders.append(d)
        if chi.degree == 0:
            break
    if chi.degree != 0:
        raise NotQuasiUnipotent(chi.monic().format("t"))
    return int_lcm(*orders) if orders else 1


def log_tN_action(T: TorsionModule, N: int, m: int) -> list:
    """Matrix of log(t^N) = sum_{k<m} (-1)^(k+1) (t^N - 1)^k / k on T."""
    n = T.qdim
    a = la.matsub(la.mat_pow(T.matrix(), N), la.identity(n))
    if not la.is_zero(la.mat_pow(a, m)):
        raise NotAnnihilated(f"(t^{N} - 1)^{m} does not annihilate the module")
    out = la.zeros(n, n)
    power = la.identity(n)
    for k in range(1, m):
        power = la.matmul(power, a)
        out = la.matadd(out, la.scale(power, Fraction((-1) ** (k + 1), k)))
    return out


@dataclass(frozen=True)
class JCDecomp:
    """t = t_ss * t_u with t_ss = ss_poly(t); min_poly is the minimal polynomial of t."""

    t_ss: tuple
    t_u: tuple
    ss_poly: UniPoly = None
    min_poly: UniPoly = None

    def eval_at_ss(self, g: UniPoly, powers: la.PowerTable) -> list:
        """g(t_ss), computed as (g o ss_poly mod min_poly)(t) from powers of t."""
        if self.ss_poly is None or self.min_poly is None:
            return la.poly_eval(g, [list(r) for r in self.t_ss])
        return powers(g.compose(self.ss_poly, self.min_poly))


def semisimple_polynomial(p: UniPoly) -> UniPoly:
    """q with q(A) the semisimple part of any A whose minimal polynomial is p.

    Newton iteration for a root of the squarefree part p_red modulo p,
    starting from x.
    """
    p = p.monic()
    p_red = p.squarefree_part()
    dp_red = p_red.derivative()
    q = UniPoly.x() % p
    for _ in range(max(1, p.degree).bit_length() + 2):
        val = p_red.compose(q, p)
        if val.is_zero():
            return q
        step = (val * inverse_mod(dp_red.compose(q, p), p)) % p
        q = (q - step) % p
    if not p_red.compose(q, p).is_zero():
        raise ArithmeticError("Newton iteration for the semisimple part did not converge")
    return q


def jordan_chevalley(T: TorsionModule) -> JCDecomp:
    """Multiplicative decomposition t = t_ss * t_u into commuting parts."""
    t = T.matrix()
    n = len(t)
    if n == 0:
        return JCDecomp((), (), UniPoly.x(), UniPoly((1,)))
    powers = T.powers()
    p = la.minpoly(t, powers)
    q = semisimple_polynomial(p)
    t_ss = powers(q)
    # t_ss is invertible, so q is a unit mod p and t_u = (x * q^-1 mod p)(t)
    t_u = powers((UniPoly.x() * inverse_mod(q, p)) % p)
    return JCDecomp(la.freeze(t_ss), la.freeze(t_u), q, p)


@dataclass(frozen=True)
class EigenComponent:
    order: int
    g: UniPoly
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class EigenDecomposition:
    components: tuple

    def dims(self) -> dict:
        return {c.order: c.dim for c in self.components}

    def component(self, order: int) -> EigenComponent:
        for c in self.components:
            if c.order == order:
                return c
        raise KeyError(order)


def eigenspace_decomposition(T: TorsionModule, jc: JCDecomp, N: int) -> EigenDecomposition:
    """ker Phi_d(t_ss) for every d | N, ordered by d.

    When Phi_d is coprime to the minimal polynomial, Phi_d(t_ss) is
    invertible (t_ss has the eigenvalues of t) and the component is zero.
    """
    powers = T.powers()
    comps = []
    for d in divisors(N):
        g = cyclotomic(d)
        if T.qdim and gcd(g, jc.min_poly or la.minpoly(T.matrix(), powers)).degree > 0:
            basis = la.nullspace(jc.eval_at_ss(g, powers), T.qdim)
        else:
            basis = []
        comps.append(EigenComponent(d, g, tuple(tuple(v) for v in basis)))
    return EigenDecomposition(tuple(comps))


def is_semisimple(T: TorsionModule) -> bool:
    if T.qdim == 0:
        return True
    return la.minpoly(T.matrix(), T.powers()).is_squarefree()


def is_semisimple_on(T: TorsionModule, g: UniPoly, jc: JCDecomp | None = None) -> bool:
    """Whether t is semisimple on the generalized eigenspace ker g(t_ss).

    On that subspace the minimal polynomial of t is a power of g, so t is
    semisimple there exactly when g(t) kills it.
    """
    if T.qdim == 0:
        return True
    jc = jc or jordan_chevalley(T)
    powers = T.powers()
    basis = la.nullspace(jc.eval_at_ss(g, powers), T.qdim)
    if not basis:
        return True
    gt = powers(g)
    return all(not any(la.matvec(gt, v)) for v in basis)


def restriction(T: TorsionModule, basis) -> list:
    """Matrix of t on the t-invariant subspace spanned by ``basis``."""
    b = la.columns(basis, T.qdim)
    tb = la.matmul(T.matrix(), b)
    return [la.solve(b, [row[j] for row in tb]) for j in range(len(basis))]


def generalized_kernel(T: TorsionModule, g: UniPoly, power: int | None = None) -> list:
    """ker g(t)^power; by default the stable kernel, which is ker g(t)^qdim.

    Without an explicit power the kernels of g(t)^k are computed for
    k = 1, 2, ... until two consecutive dimensions agree. Once
    ker A^k = ker A^(k+1) the chain is constant, so the result is ker A^qdim.
    """
    n = T.qdim
    if n == 0:
        return []
    if power is not None:
        # g(t)^power = (g^power mod chi)(t) by Cayley-Hamilton
        chi = T.char_poly()
        h = UniPoly.constant(1)
        for _ in range(power):
            h = (h * g) % chi
        return la.nullspace(T.powers()(h), n)
    gt = T.powers()(g)
    acc = gt
    basis = la.nullspace(acc, n)
    for _ in range(n):
        acc = la.matmul(acc, gt)
        nxt = la.nullspace(acc, n)
        if len(nxt) == len(basis):
            return basis
        basis = nxt
    return basis


def t_minus_one_dims(T: TorsionModule) -> tuple:
    """(dim ker(t-1), dim coker(t-1)) on the torsion module; equal since finite."""
    if T.qdim == 0:
        return 0, 0
    r = la.rank(la.matsub(T.matrix(), la.identity(T.qdim)))
    return T.qdim - r, T.qdim - r
