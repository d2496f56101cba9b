"""m-thickenings of finite CDGAs with zero differential.

For a graded-commutative algebra K with d = 0 and a degree-1 class eta,
K(eta, m) is K tensor R_m with differential
    d_eta(w (x) phi) = (eta * w) (x) s*phi,     s = t - 1.
All cohomology is computed as Q-linear algebra on the basis {b (x) s^k},
indexed by ``position_in_degree * m + k``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg as la
from .errors import IncompatibleOrders, NoStabilization, NotAComplex
from .poly import TruncElem, log_series


@dataclass(frozen=True)
class CDGA:
    """Finite graded-commutative Q-algebra with unit and zero differential.

    ``products`` maps a pair of basis indices (i, j) to the coordinate
    vector of b_i * b_j; missing pairs are zero except those involving the
    unit, which are implied.
    """

    basis: tuple
    products: dict = field(default_factory=dict)
    unit: int = 0

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple((str(n), int(d)) for n, d in self.basis))
        n = len(self.basis)
        prods = {}
        for (i, j), v in self.products.items():
            v = tuple(Fraction(x) for x in v)
            if len(v) != n:
                raise NotAComplex(f"product vector for ({i}, {j}) has wrong length")
            if any(v):
                prods[(int(i), int(j))] = v
        object.__setattr__(self, "products", prods)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def top_degree(self) -> int:
        return max((d for _, d in self.basis), default=0)

    def degree(self, i: int) -> int:
        return self.basis[i][1]

    def index(self, name: str) -> int:
        for i, (n, _) in enumerate(self.basis):
            if n == name:
                return i
        raise KeyError(name)

    def in_degree(self, j: int) -> list:
        """Indices of basis elements of degree j, in basis order."""
        return [i for i, (_, d) in enumerate(self.basis) if d == j]

    def dims(self) -> list:
        return [len(self.in_degree(j)) for j in range(self.top_degree + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** j * d for j, d in enumerate(self.dims()))

    def mult_basis(self, i: int, j: int) -> tuple:
        n = self.dim
        if i == self.unit:
            return tuple(Fraction(int(k == j)) for k in range(n))
        if j == self.unit:
            return tuple(Fraction(int(k == i)) for k in range(n))
        return self.products.get((i, j), (Fraction(0),) * n)

    def mult(self, u, v) -> list:
        n = self.dim
        out = [Fraction(0)] * n
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(self.mult_basis(i, j)):
                    if c:
                        out[k] += ab * c
        return out

    def check(self) -> list:
        """Return a list of violated axioms (empty when the algebra is valid)."""
        issues = []
        n = self.dim
        if not 0 <= self.unit < n or self.degree(self.unit) != 0:
            return [f"unit index {self.unit} is not a degree-0 basis element"]
        for i in range(n):
            for j in range(n):
                v = self.mult_basis(i, j)
                dij = self.degree(i) + self.degree(j)
                if any(c and self.degree(k) != dij for k, c in enumerate(v)):
                    issues.append(f"product {self.basis[i][0]}*{self.basis[j][0]} leaves degree {dij}")
                w = self.mult_basis(j, i)
                sign = (-1) ** (self.degree(i) * self.degree(j))
                if any(a != sign * b for a, b in zip(v, w)):
                    issues.append(f"{self.basis[i][0]}, {self.basis[j][0]} violate graded commutativity")
        e = [[Fraction(int(i == k)) for k in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                ij = self.mult_basis(i, j)
                for k in range(n):
                    if self.mult(ij, e[k]) != self.mult(e[i], self.mult_basis(j, k)):
                        issues.append(
                            f"associativity fails on ({self.basis[i][0]}, {self.basis[j][0]}, {self.basis[k][0]})"
                        )
        return issues

    def validate(self):
        issues = self.check()
        if issues:
            raise NotAComplex("invalid CDGA: " + "; ".join(issues[:5]))


@dataclass(frozen=True)
class EtaClass:
    """Degree-1 class, coordinates over the degree-1 basis (in basis order)."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    def vector(self, K: CDGA) -> list:
        idx = K.in_degree(1)
        if len(idx) != len(self.coefficients):
            raise ValueError(
                f"eta has {len(self.coefficients)} coordinates, the algebra has {len(idx)} degree-1 elements"
            )
        v = [Fraction(0)] * K.dim
        for i, c in zip(idx, self.coefficients):
            v[i] = c
        return v

    def scaled(self, c) -> EtaClass:
        return EtaClass(tuple(x * c for x in self.coefficients))


def left_multiplication(K: CDGA, v, j: int) -> list:
    """Matrix of w -> v*w from K^j to K^(j+1) (v of degree 1)."""
    src = K.in_degree(j)
    dst = K.in_degree(j + 1)
    m = la.zeros(len(dst), len(src))
    for c, i in enumerate(src):
        e = [Fraction(0)] * K.dim
        e[i] = Fraction(1)
        prod = K.mult(v, e)
        for r, k in enumerate(dst):
            m[r][c] = prod[k]
    return m


def _tensor_shift(a, m: int, shift: int, factor=None) -> list:
    """Kronecker-style lift of a Q-matrix to K (x) R_m blocks.

    Entry (r, c) of ``a`` becomes the block sending s^k to s^(k+shift)
    (dropped beyond m). With ``factor`` (a TruncElem) the block is
    multiplication by factor instead of s^shift.
    """
    rows, cols = len(a), (len(a[0]) if a else 0)
    out = la.zeros(rows * m, cols * m)
    for r in range(rows):
        for c in range(cols):
            x = a[r][c]
            if not x:
                continue
            for k in range(m):
                if factor is None:
                    kk = k + shift
                    if kk < m:
                        out[r * m + kk][c * m + k] += x
                else:
                    for l, f in enumerate(factor.coeffs):
                        if f and k + l < m:
                            out[r * m + k + l][c * m + k] += x * f
    return out


@dataclass(frozen=True)
class ThickenedComplex:
    m: int
    underlying: CDGA
    eta: EtaClass
    differentials: dict

    def dim(self, j: int) -> int:
        return len(self.underlying.in_degree(j)) * self.m

    def differential(self, j: int) -> list:
        """d_eta from degree j to j+1 (zero matrix outside the range)."""
        if j in self.differentials:
            return self.differentials[j]
        return la.zeros(self.dim(j + 1), self.dim(j))

    def degrees(self) -> range:
        return range(0, self.underlying.top_degree + 1)


def thicken(K: CDGA, eta: EtaClass, m: int, validate: bool = True) -> ThickenedComplex:
    if m < 1:
        raise ValueError("thickening order must be positive")
    if validate:
        K.validate()
    v = eta.vector(K)
    diffs = {}
    for j in range(-1, K.top_degree + 1):
        if j < 0:
            continue
        diffs[j] = _tensor_shift(left_multiplication(K, v, j), m, 1)
    T = ThickenedComplex(m, K, eta, diffs)
    for j in T.degrees():
        sq = la.matmul(T.differential(j + 1), T.differential(j))
        if not la.is_zero(sq):
            raise NotAComplex(f"d_eta squared is nonzero in degree {j}")
    return T


def _cocycles_and_boundaries(T: ThickenedComplex, j: int):
    n = T.dim(j)
    dj = T.differential(j)
    z = la.nullspace(dj, n) if dj else [[Fraction(int(i == k)) for i in range(n)] for k in range(n)]
    if j - 1 >= 0 and T.dim(j - 1):
        prev = T.differential(j - 1)
        b = [list(col) for col in zip(*prev)] if prev else []
        b = [v for v in b if any(v)]
    else:
        b = []
    return z, b


def cohomology_dim(T: ThickenedComplex, j: int) -> int:
    z, b = _cocycles_and_boundaries(T, j)
    return len(z) - la.span_rank(b, T.dim(j))


def s_action_matrix(K: CDGA, j: int, m: int) -> list:
    n = len(K.in_degree(j))
    return _tensor_shift(la.identity(n), m, 1)


@dataclass(frozen=True)
class ThickenedCohomology:
    degree: int
    qdim: int
    jordan_type: tuple

    @property
    def nilpotency_order(self) -> int:
        return max(self.jordan_type, default=0)


def thickened_cohomology(T: ThickenedComplex, j: int) -> ThickenedCohomology:
    """Q-dimension of H^j(K(eta, m)) and the Jordan type of s acting on it."""
    z, b = _cocycles_and_boundaries(T, j)
    n = T.dim(j)
    rb = la.span_rank(b, n)
    qdim = len(z) - rb
    s = s_action_matrix(T.underlying, j, T.m)
    ranks = [qdim]
    current = z
    while ranks[-1] > 0:
        current = [la.matvec(s, v) for v in current]
        r = la.span_rank([v for v in current if any(v)] + b, n) - rb
        if r == ranks[-1]:
            raise ArithmeticError("s is not nilpotent on thickened cohomology")
        ranks.append(r)
    # number of Jordan blocks of size >= k is ranks[k-1] - ranks[k]
    ge = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    blocks = []
    for k in range(len(ge), 0, -1):
        count = ge[k - 1] - (ge[k] if k < len(ge) else 0)
        blocks.extend([k] * count)
    return ThickenedCohomology(j, qdim, tuple(blocks))


def _kernel_of_induced(K: CDGA, eta: EtaClass, j: int, m: int, factor: TruncElem | None) -> int:
    """dim ker(H^j(K(eta,m)) -> H^j(K(eta,2m))) for w(x)phi -> w(x)(factor*phi).

    ``factor`` defaults to s^m; it must be divisible by s^m in R_{2m} so the
    lift R_m -> R_{2m} is well defined on the image.
    """
    lo = thicken(K, eta, m, validate=False)
    hi = thicken(K, eta, 2 * m, validate=False)
    n = len(K.in_degree(j))
    if factor is None:
        mu = _tensor_shift(la.identity(n), 2 * m, m, None)
        # rows live in R_{2m}; columns must index R_m
        mu = _restrict_columns(mu, n, 2 * m, m)
    else:
        mu = _restrict_columns(_tensor_shift(la.identity(n), 2 * m, 0, factor), n, 2 * m, m)
    z_lo, b_lo = _cocycles_and_boundaries(lo, j)
    _, b_hi = _cocycles_and_boundaries(hi, j)
    dim_hi = hi.dim(j)
    rb_lo = la.span_rank(b_lo, lo.dim(j))
    if not z_lo:
        return 0
    images = [la.matvec(mu, v) for v in z_lo]
    rb_hi = la.span_rank(b_hi, dim_hi)
    # dim {c : mu(Z c) in B_hi} = #Z - (rank[B_hi | mu Z] - rank B_hi)
    joint = la.span_rank([v for v in b_hi] + images, dim_hi)
    preimage = len(z_lo) - (joint - rb_hi)
    return preimage - rb_lo


def kernel_subspace(K: CDGA, eta: EtaClass, j: int, m: int, use_log: bool = False) -> list:
    """Cocycles of K(eta,m) in degree j whose image in H^j(K(eta,2m)) vanishes.

    Returned as a spanning list; it contains the coboundaries, so two such
    subspaces are equal exactly when the kernels on cohomology are equal.
    """
    lo = thicken(K, eta, m, validate=False)
    hi = thicken(K, eta, 2 * m, validate=False)
    n = len(K.in_degree(j))
    if use_log:
        mu = _restrict_columns(_tensor_shift(la.identity(n), 2 * m, 0, log_series(2 * m) ** m), n, 2 * m, m)
    else:
        mu = _restrict_columns(_tensor_shift(la.identity(n), 2 * m, m), n, 2 * m, m)
    z_lo, _ = _cocycles_and_boundaries(lo, j)
    _, b_hi = _cocycles_and_boundaries(hi, j)
    if not z_lo:
        return []
    images = [la.matvec(mu, v) for v in z_lo]
    cols = b_hi + images
    # solve sum a_i b_i + sum c_k mu(z_k) = 0; the c part gives the preimage
    rel = la.nullspace(la.columns(cols, hi.dim(j)), len(cols))
    out = []
    for v in rel:
        c = v[len(b_hi):]
        w = [sum((ck * zk[i] for ck, zk in zip(c, z_lo)), Fraction(0)) for i in range(lo.dim(j))]
        if any(w):
            out.append(w)
    return out


def _restrict_columns(a, nblocks: int, big: int, small: int) -> list:
    """Keep, in each column block of size ``big``, the first ``small`` columns."""
    keep = [b * big + k for b in range(nblocks) for k in range(small)]
    return [[row[c] for c in keep] for row in a]


def eigen1_at(K: CDGA, eta: EtaClass, j: int, m: int, use_log: bool = False) -> int:
    """Kernel dimension of H^j(K(eta,m)) -> H^j(K(eta,2m)) at a fixed m."""
    if j < 0 or j > K.top_degree or not K.in_degree(j):
        return 0
    factor = log_series(2 * m) ** m if use_log else None
    return _kernel_of_induced(K, eta, j, m, factor)


AUTO = "AUTO"


def eigen1(K: CDGA, eta: EtaClass, j: int, m="AUTO", use_log: bool = False, validate: bool = True) -> int:
    """Dimension of the eigenvalue-1 part of the torsion in degree j.

    With m = AUTO, m grows from 1 until two consecutive values agree; the
    cap is dim K^j + 1.
    """
    if validate:
        K.validate()
    if m != AUTO:
        return eigen1_at(K, eta, j, int(m), use_log)
    return eigen1_auto(K, eta, j, use_log)[0]


def eigen1_auto(K: CDGA, eta: EtaClass, j: int, use_log: bool = False) -> tuple:
    """(value, m) where m is the first order at which the value stabilized."""
    cap = len(K.in_degree(j)) + 1
    prev = eigen1_at(K, eta, j, 1, use_log)
    m = 1
    while m < cap + 1:
        cur = eigen1_at(K, eta, j, m + 1, use_log)
        if cur == prev:
            return prev, m
        prev = cur
        m += 1
    raise NoStabilization(f"eigen1 in degree {j} did not stabilize by m = {cap}")


# --------------------------------------------------------------------------
# the projection phi and the log-multiplication psi between thickenings


@dataclass(frozen=True)
class ChainMap:
    source_m: int
    target_m: int
    matrices: dict


def _check_chain_map(src: ThickenedComplex, dst: ThickenedComplex, maps: dict):
    for j in src.degrees():
        left = la.matmul(dst.differential(j), maps[j])
        nxt = maps.get(j + 1)
        if nxt is None:
            nxt = la.zeros(dst.dim(j + 1), src.dim(j + 1))
        right = la.matmul(nxt, src.differential(j))
        if left != right:
            raise ArithmeticError(f"map does not commute with d_eta in degree {j}")


def phi_psi_maps(T_from: ThickenedComplex, T_to: ThickenedComplex, kind: str) -> ChainMap:
    """Chain maps between thickenings of the same (K, eta).

    ``phi``: projection R_{m+m'} -> R_m. ``psi``: R_m -> R_{m+m'},
    multiplication by log(1+s)^{m'}.
    """
    K = T_from.underlying
    if T_to.underlying != K or T_to.eta != T_from.eta:
        raise IncompatibleOrders("thickenings of different algebras or classes")
    m_from, m_to = T_from.m, T_to.m
    maps = {}
    if kind == "phi":
        if m_to > m_from:
            raise IncompatibleOrders(f"phi needs target order <= source order, got {m_from} -> {m_to}")
        for j in T_from.degrees():
            n = len(K.in_degree(j))
            full = _tensor_shift(la.identity(n), m_from, 0)
            keep_rows = [b * m_from + k for b in range(n) for k in range(m_to)]
            maps[j] = [full[r] for r in keep_rows]
    elif kind == "psi":
        if m_to < m_from:
            raise IncompatibleOrders(f"psi needs target order >= source order, got {m_from} -> {m_to}")
        mprime = m_to - m_from
        factor = log_series(m_to) ** mprime
        for j in T_from.degrees():
            n = len(K.in_degree(j))
            maps[j] = _restrict_columns(_tensor_shift(la.identity(n), m_to, 0, factor), n, m_to, m_from)
    else:
        raise ValueError(f"unknown map kind {kind!r}")
    _check_chain_map(T_from, T_to, maps)
    return ChainMap(m_from, m_to, maps)


def compose(a: ChainMap, b: ChainMap) -> ChainMap:
    """a after b."""
    if b.target_m != a.source_m:
        raise IncompatibleOrders("maps do not compose")
    return ChainMap(b.source_m, a.target_m, {j: la.matmul(a.matrices[j], b.matrices[j]) for j in b.matrices})


def multiplication_map(K: CDGA, m: int, factor: TruncElem) -> dict:
    """Degree-wise matrices of multiplication by an element of R_m."""
    return {j: _tensor_shift(la.identity(len(K.in_degree(j))), m, 0, factor) for j in range(K.top_degree + 1)}


def proportional(a, b) -> Fraction | None:
    """The scalar c with a = c*b if it exists and is nonzero, else None."""
    c = None
    for ra, rb in zip(a, b):
        for x, y in zip(ra, rb):
            if not y:
                if x:
                    return None
                continue
            q = Fraction(x) / y
            if c is None:
                c = q
            elif q != c:
                return None
    if c == 0:
        return None
    return c if c is not None else Fraction(1)


def unit_quotient_of_log(m: int) -> TruncElem:
    """u with log(1+s) = s*u in R_m; u has constant term 1."""
    return TruncElem(m, log_series(m + 1).coeffs[1:])
