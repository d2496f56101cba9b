"""Affine hyperplane arrangements and their Orlik-Solomon algebras.

A hyperplane is {x : normal . x = offset}. The OS algebra is built as a
quotient of the exterior algebra on e_1..e_d and written in the
no-broken-circuit basis for the input order of the hyperplanes.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg as la
from .errors import DegenerateInput, HypothesesNotMet
from .poly import UniPoly
from .thickening import CDGA, EtaClass, eigen1_auto


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple
    offset: Fraction = Fraction(0)
    multiplicity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(Fraction(x) for x in self.normal))
        object.__setattr__(self, "offset", Fraction(self.offset))
        object.__setattr__(self, "multiplicity", int(self.multiplicity))
        if not any(self.normal):
            raise DegenerateInput("hyperplane with zero normal vector")

    def row(self) -> list:
        return list(self.normal) + [self.offset]


@dataclass(frozen=True)
class Arrangement:
    ambient_dim: int
    hyperplanes: tuple

    def __post_init__(self):
        hs = tuple(h if isinstance(h, Hyperplane) else Hyperplane(*h) for h in self.hyperplanes)
        object.__setattr__(self, "hyperplanes", hs)
        for i, h in enumerate(hs):
            if len(h.normal) != self.ambient_dim:
                raise DegenerateInput(f"hyperplane {i} has normal of length {len(h.normal)}")
        for i, j in itertools.combinations(range(len(hs)), 2):
            if la.rank([hs[i].row(), hs[j].row()]) < 2:
                raise DegenerateInput(f"hyperplanes {i} and {j} coincide")

    @property
    def size(self) -> int:
        return len(self.hyperplanes)

    @property
    def multiplicities(self) -> tuple:
        return tuple(h.multiplicity for h in self.hyperplanes)

    def permuted(self, order) -> Arrangement:
        return Arrangement(self.ambient_dim, tuple(self.hyperplanes[i] for i in order))

    def codim(self, subset) -> int:
        if not subset:
            return 0
        return la.rank([list(self.hyperplanes[i].normal) for i in subset])

    def is_central_subset(self, subset) -> bool:
        """Whether the hyperplanes in ``subset`` have a common point."""
        if not subset:
            return True
        normals = [list(self.hyperplanes[i].normal) for i in subset]
        augmented = [self.hyperplanes[i].row() for i in subset]
        return la.rank(normals) == la.rank(augmented)

    def rank(self) -> int:
        """Maximal codimension of a nonempty intersection."""
        best = 0
        for k in range(1, min(self.size, self.ambient_dim) + 1):
            for s in itertools.combinations(range(self.size), k):
                if self.is_central_subset(s):
                    best = max(best, self.codim(s))
        return best


def _exterior_product(s: tuple, t: tuple):
    """e_s ^ e_t = sign * e_{s u t}, or None if they share an index."""
    if set(s) & set(t):
        return None, 0
    merged = s + t
    # sign of the sorting permutation
    inversions = sum(1 for a in s for b in t if a > b)
    return tuple(sorted(merged)), (-1) ** inversions


def _boundary(s: tuple) -> dict:
    """d e_s = sum_k (-1)^k e_{s minus s_k}."""
    return {s[:k] + s[k + 1 :]: (-1) ** k for k in range(len(s))}


@dataclass(frozen=True)
class OSAlgebra:
    arrangement: Arrangement
    cdga: CDGA
    nbc_basis: dict
    rank: int

    @property
    def betti(self) -> list:
        top = max(self.nbc_basis, default=0)
        return [len(self.nbc_basis.get(l, [])) for l in range(top + 1)]

    def poincare(self) -> UniPoly:
        return UniPoly(self.betti)


def circuits(A: Arrangement) -> list:
    """Minimal dependent subsets with nonempty intersection."""
    out = []
    for k in range(2, A.size + 1):
        for s in itertools.combinations(range(A.size), k):
            if A.codim(s) < k and A.is_central_subset(s):
                if not any(set(c) <= set(s) for c in out):
                    out.append(s)
    return out


def nbc_sets(A: Arrangement) -> dict:
    """No-broken-circuit sets by size, using the input order."""
    broken = [c[1:] for c in circuits(A)]
    out = {0: [()]}
    for k in range(1, A.size + 1):
        found = []
        for s in itertools.combinations(range(A.size), k):
            if A.codim(s) != k or not A.is_central_subset(s):
                continue
            if any(set(b) <= set(s) for b in broken):
                continue
            found.append(s)
        if not found:
            break
        out[k] = found
    return out


def _ideal_degree(A: Arrangement, k: int, subsets_k: list) -> list:
    """Spanning vectors (over the k-subsets) of the OS ideal in degree k."""
    index = {s: i for i, s in enumerate(subsets_k)}
    vecs = []
    for s in subsets_k:
        if not A.is_central_subset(s):
            v = [Fraction(0)] * len(subsets_k)
            v[index[s]] = Fraction(1)
            vecs.append(v)
    # d e_S * e_T for dependent central S
    for size in range(2, k + 2):
        for s in itertools.combinations(range(A.size), size):
            if A.codim(s) == size or not A.is_central_subset(s):
                continue
            bd = _boundary(s)
            for t in itertools.combinations(range(A.size), k - (size - 1)):
                v = [Fraction(0)] * len(subsets_k)
                hit = False
                for u, c in bd.items():
                    w, sign = _exterior_product(u, t)
                    if w is not None:
                        v[index[w]] += c * sign
                        hit = True
                if hit and any(v):
                    vecs.append(v)
    return vecs


def build_os_algebra(A: Arrangement) -> OSAlgebra:
    nbc = nbc_sets(A)
    top = max(nbc)
    basis = []
    position = {}
    for k in range(top + 1):
        for s in nbc[k]:
            position[s] = len(basis)
            name = "1" if not s else "e" + "_".join(str(i + 1) for i in s)
            basis.append((name, k))
    # reduction of every exterior monomial of degree k to nbc coordinates
    reduce = {}
    for k in range(top + 1):
        subsets_k = list(itertools.combinations(range(A.size), k))
        ideal = _ideal_degree(A, k, subsets_k)
        ideal_basis = [ideal[i] for i in _independent(ideal)] if ideal else []
        nbc_vecs = []
        for s in nbc[k]:
            v = [Fraction(0)] * len(subsets_k)
            v[subsets_k.index(s)] = Fraction(1)
            nbc_vecs.append(v)
        full = nbc_vecs + ideal_basis
        if len(full) != len(subsets_k) or la.span_rank(full, len(subsets_k)) != len(subsets_k):
            raise ArithmeticError(
                f"nbc monomials do not give a basis of the OS algebra in degree {k}"
            )
        inv = la.inverse(la.columns(full, len(subsets_k)))
        for i, s in enumerate(subsets_k):
            coords = [row[i] for row in inv][: len(nbc_vecs)]
            reduce[s] = {nbc[k][a]: c for a, c in enumerate(coords) if c}
    # structure constants on nbc basis elements
    n = len(basis)
    products = {}
    nbc_all = [s for k in range(top + 1) for s in nbc[k]]
    for s in nbc_all:
        for t in nbc_all:
            if not s or not t:
                continue
            w, sign = _exterior_product(s, t)
            if w is None or len(w) > top:
                continue
            v = [Fraction(0)] * n
            for u, c in reduce[w].items():
                v[position[u]] += sign * c
            if any(v):
                products[(position[s], position[t])] = tuple(v)
    K = CDGA(tuple(basis), products, unit=0)
    K.validate()
    return OSAlgebra(A, K, nbc, A.rank())


def _independent(vectors: list) -> list:
    """Indices of a maximal linearly independent subfamily."""
    r, pivots = la.rref(la.columns(vectors, len(vectors[0])))
    return pivots


def eta_from_multiplicities(OS: OSAlgebra) -> EtaClass:
    return EtaClass(tuple(OS.arrangement.multiplicities))


# --------------------------------------------------------------------------
# deletion-restriction (independent check of the Betti numbers)


def _restrict(A: Arrangement, i: int) -> Arrangement:
    """The arrangement induced on hyperplane i, in coordinates of dimension n-1."""
    h = A.hyperplanes[i]
    n = A.ambient_dim
    normal = list(h.normal)
    piv = next(k for k, x in enumerate(normal) if x)
    point = [Fraction(0)] * n
    point[piv] = h.offset / normal[piv]
    directions = la.nullspace([normal], n)
    restricted = []
    for j, g in enumerate(A.hyperplanes):
        if j == i:
            continue
        new_normal = [sum((a * b for a, b in zip(g.normal, d)), Fraction(0)) for d in directions]
        new_offset = g.offset - sum((a * b for a, b in zip(g.normal, point)), Fraction(0))
        if not any(new_normal):
            continue  # parallel to h: empty intersection (equal is excluded)
        cand = Hyperplane(tuple(new_normal), new_offset, 1)
        if any(la.rank([cand.row(), r.row()]) < 2 for r in restricted):
            continue
        restricted.append(cand)
    return Arrangement(n - 1, tuple(restricted))


def poincare_deletion_restriction(A: Arrangement) -> UniPoly:
    """pi(A) = pi(A - H) + x * pi(A restricted to H)."""
    if A.size == 0:
        return UniPoly((1,))
    deleted = Arrangement(A.ambient_dim, A.hyperplanes[:-1])
    restricted = _restrict(A, A.size - 1)
    return poincare_deletion_restriction(deleted) + UniPoly.x() * poincare_deletion_restriction(restricted)


# --------------------------------------------------------------------------
# the eigenvalue-1 report


PURITY_LABEL = "pure of type ({j},{j}); Q^{dim} with trivial t-action [cited, not computed]"


@dataclass(frozen=True)
class ArrangementDegreeRecord:
    j: int
    eigen1: int
    formula: int
    stabilized_at_m: int
    label: str

    @property
    def agrees(self) -> bool:
        return self.eigen1 == self.formula


@dataclass(frozen=True)
class ArrangementReport:
    betti: tuple
    rank: int
    multiplicities: tuple
    records: tuple = field(default_factory=tuple)

    @property
    def all_agree(self) -> bool:
        return all(r.agrees for r in self.records)


def check_hypotheses(A: Arrangement, max_j: int, r: int):
    eps = A.multiplicities
    bad = [i for i, e in enumerate(eps) if e < 1]
    if bad:
        raise HypothesesNotMet(f"multiplicities must be >= 1 (hyperplanes {bad})")
    g = 0
    for e in eps:
        g = math.gcd(g, e)
    if g != 1:
        raise HypothesesNotMet(f"gcd of multiplicities is {g}, must be 1")
    if max_j > r - 1:
        raise HypothesesNotMet(f"max_j = {max_j} exceeds rank - 1 = {r - 1}")
    if max_j < 0:
        raise HypothesesNotMet("max_j must be nonnegative")


def arrangement_report(A: Arrangement, max_j: int | None = None, OS: OSAlgebra | None = None) -> ArrangementReport:
    """Eigenvalue-1 dimensions via the thickened OS algebra next to the Betti formula.

    Cohomological degree j+1 of the thickening corresponds to homological
    degree j of the cover; below the rank the modules are torsion, so the
    generic ranks in the formula vanish.
    """
    OS = OS or build_os_algebra(A)
    r = OS.rank
    if max_j is None:
        max_j = r - 1
    check_hypotheses(A, max_j, r)
    eta = eta_from_multiplicities(OS)
    b = OS.betti
    records = []
    for j in range(max_j + 1):
        value, m = eigen1_auto(OS.cdga, eta, j + 1)
        formula = sum((-1) ** (l + j) * b[l] for l in range(j + 1))
        records.append(
            ArrangementDegreeRecord(j, value, formula, m, PURITY_LABEL.format(j=j, dim=value))
        )
    return ArrangementReport(tuple(b), r, A.multiplicities, tuple(records))


# --------------------------------------------------------------------------
# standard arrangements


def points_in_line(d: int, eps=None) -> Arrangement:
    eps = eps or [1] * d
    return Arrangement(1, tuple(Hyperplane((1,), i, e) for i, e in zip(range(d), eps)))


def concurrent_lines(d: int, eps=None) -> Arrangement:
    """d lines through the origin of C^2: y = i*x for i = 0..d-2, and x = 0."""
    eps = eps or [1] * d
    normals = [(-i, 1) for i in range(d - 1)] + [(1, 0)]
    return Arrangement(2, tuple(Hyperplane(n, 0, e) for n, e in zip(normals, eps)))


def generic_lines(d: int, eps=None) -> Arrangement:
    """d lines in general position in C^2 (no three concurrent, none parallel)."""
    eps = eps or [1] * d
    hs = [Hyperplane((i, 1), i * i, e) for i, e in zip(range(1, d + 1), eps)]
    return Arrangement(2, tuple(hs))
