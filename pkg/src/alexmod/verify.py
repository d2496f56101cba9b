"""Property suites behind ``alexmod verify``.

Each suite returns a list of Check records. Randomized properties draw from
a ``random.Random`` seeded by the caller, so a failing run can be replayed.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg as la
from .arrangements import arrangement_report, build_os_algebra, poincare_deletion_restriction
from .complexes import (
    SpecializationPoint,
    generic_rank,
    homology,
    milnor_consistency,
    specialize,
)
from .errors import NotAComplex, NotQuasiUnipotent
from .modules import (
    TorsionModule,
    decompose,
    eigenspace_decomposition,
    find_N,
    generalized_kernel,
    jordan_chevalley,
)
from .poly import (
    LaurentPoly,
    UniPoly,
    cyclotomic,
    divisors,
    euler_phi,
    ext_gcd,
    log_series,
    parse_laurent,
    truncate,
)
from .snf import RMatrix, rank_over_fraction_field, smith_normal_form
from .thickening import (
    cohomology_dim,
    eigen1_at,
    eigen1_auto,
    kernel_subspace,
    thicken,
)

DEFAULT_SEED = 20240917


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _check(name, failures, total=None) -> Check:
    if failures:
        shown = "; ".join(failures[:3])
        more = f" (+{len(failures) - 3} more)" if len(failures) > 3 else ""
        return Check(name, False, shown + more)
    return Check(name, True, f"{total} cases" if total is not None else "")


# --------------------------------------------------------------------------
# random objects


def random_laurent(rng: random.Random, max_deg: int = 3, coeff: int = 3, valuation: bool = True) -> LaurentPoly:
    body = [rng.randint(-coeff, coeff) for _ in range(rng.randint(1, max_deg + 1))]
    v = rng.randint(-1, 1) if valuation else 0
    return LaurentPoly(v, body)


def random_rmatrix(rng: random.Random, rows: int, cols: int, max_deg: int = 2, density: float = 0.7) -> RMatrix:
    entries = [
        [random_laurent(rng, max_deg) if rng.random() < density else LaurentPoly() for _ in range(cols)]
        for _ in range(rows)
    ]
    return RMatrix(rows, cols, entries)


def random_unimodular(rng: random.Random, n: int, steps: int = 6) -> list:
    """Product of a few integer elementary matrices (small entries)."""
    p = la.identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = Fraction(rng.choice([-1, 1, 2, -2]))
        for row in p:
            row[j] += c * row[i]
    return p


def random_torsion_module(rng: random.Random, max_order: int = 12, max_qdim: int = 24, conjugate: bool = True) -> TorsionModule:
    """Torsion module with cyclotomic elementary divisors Phi_d^e, d <= max_order.

    The elementary divisors are grouped into an invariant-factor chain, and
    the matrix of t is optionally conjugated by a random unimodular matrix.
    """
    target = rng.randint(1, max_qdim)
    elem = []
    total = 0
    while total < target:
        d = rng.randint(1, max_order)
        e = rng.choice([1, 1, 1, 2, 2, 3])
        deg = euler_phi(d) * e
        if total + deg > max_qdim:
            if total:
                break
            continue
        elem.append((d, e))
        total += deg
    # invariant factors: the k-th largest power of each Phi_d goes to the k-th factor
    by_d: dict = {}
    for d, e in elem:
        by_d.setdefault(d, []).append(e)
    length = max(len(v) for v in by_d.values())
    factors = [UniPoly((1,)) for _ in range(length)]
    for d, es in by_d.items():
        for k, e in enumerate(sorted(es, reverse=True)):
            factors[length - 1 - k] = factors[length - 1 - k] * cyclotomic(d) ** e
    T = TorsionModule(tuple(LaurentPoly(0, f) for f in factors))
    if conjugate and T.qdim > 1:
        T = T.conjugated(random_unimodular(rng, T.qdim, steps=2 * T.qdim))
    return T


# --------------------------------------------------------------------------
# decomposition properties of a single torsion module


def decomposition_failures(T: TorsionModule) -> list:
    """Empty list iff all eigenspace and Jordan-Chevalley identities hold on T."""
    out = []
    n = T.qdim
    t = T.matrix()
    N = find_N(T)
    jc = jordan_chevalley(T)
    ss, u = [list(r) for r in jc.t_ss], [list(r) for r in jc.t_u]
    if la.matmul(ss, u) != t:
        out.append("t_ss * t_u != t")
    if la.matmul(ss, u) != la.matmul(u, ss):
        out.append("t_ss and t_u do not commute")
    if not la.is_nilpotent(la.matsub(u, la.identity(n))):
        out.append("t_u - 1 is not nilpotent")
    if not la.is_nilpotent(la.matsub(la.mat_pow(t, N), la.identity(n))):
        out.append(f"t^{N} - 1 is not nilpotent")
    chi = T.char_poly()
    orders = [d for d in divisors(N) if cyclotomic(d).divides(chi)]
    eig = eigenspace_decomposition(T, jc, N)
    for d in orders:
        g = cyclotomic(d)
        a = eig.component(d).basis
        b = generalized_kernel(T, g, power=n)
        if not la.same_span(a, b, n):
            out.append(f"ker Phi_{d}(t_ss) != ker Phi_{d}(t)^qdim")
    if sum(eig.dims().values()) != n:
        out.append(f"eigenspace dimensions sum to {sum(eig.dims().values())}, not {n}")
    # the components are ker Phi_d(t_ss); if they span, the squarefree
    # product of those Phi_d kills t_ss, so t_ss is semisimple
    all_vectors = [v for c in eig.components for v in c.basis]
    if la.span_rank(all_vectors, n) != n:
        out.append("ker Phi_d(t_ss) do not span, so t_ss is not semisimple")
    return out


def decomposition_suite(count: int, seed: int) -> list:
    rng = random.Random(seed)
    failures = []
    for i in range(count):
        T = random_torsion_module(rng)
        for f in decomposition_failures(T):
            failures.append(f"module {i}: {f}")
    return [_check("random torsion modules: eigenspaces and Jordan-Chevalley", failures, count)]


# --------------------------------------------------------------------------
# suites


def algebra_suite(seed: int) -> list:
    rng = random.Random(seed)
    checks = []

    fails = []
    for i in range(12):
        a = random_rmatrix(rng, rng.randint(1, 3), rng.randint(1, 3), max_deg=1)
        res = smith_normal_form(a)
        d = res.diagonal_matrix(a.rows, a.cols)
        if res.left @ a @ res.right != d:
            fails.append(f"matrix {i}: left*A*right != D")
        if res.right @ res.right_inv != RMatrix.identity(a.cols):
            fails.append(f"matrix {i}: right_inv is wrong")
        nz = res.nonzero
        for x, y in zip(nz, nz[1:]):
            if not x.divides(y):
                fails.append(f"matrix {i}: {x} does not divide {y}")
    checks.append(_check("SNF transforms and divisibility", fails, 12))

    fails = []
    for i in range(60):
        a = random_rmatrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        r1 = smith_normal_form(a, transforms=False).rank
        r2 = rank_over_fraction_field(a)
        if r1 != r2:
            fails.append(f"matrix {i}: SNF rank {r1} != Q(t) rank {r2}")
    checks.append(_check("SNF rank equals rank over Q(t)", fails, 60))

    fails = []
    for i in range(200):
        p = random_laurent(rng, 5, 7)
        if parse_laurent(str(p)) != p:
            fails.append(f"{p!r}")
    checks.append(_check("Laurent grammar round trip", fails, 200))

    fails = []
    for i in range(100):
        a, b = random_laurent(rng), random_laurent(rng)
        m = rng.randint(1, 6)
        if truncate(a * b, m) != truncate(a, m) * truncate(b, m):
            fails.append(f"{a} * {b} mod s^{m}")
        if truncate(a + b, m) != truncate(a, m) + truncate(b, m):
            fails.append(f"{a} + {b} mod s^{m}")
    checks.append(_check("truncation to R_m is a ring map", fails, 100))

    fails = []
    for i in range(100):
        a = UniPoly([rng.randint(-4, 4) for _ in range(rng.randint(1, 6))])
        b = UniPoly([rng.randint(-4, 4) for _ in range(rng.randint(1, 6))])
        if a.is_zero() and b.is_zero():
            continue
        g, u, v = ext_gcd(a, b)
        if u * a + v * b != g:
            fails.append(f"gcd({a}, {b})")
    checks.append(_check("extended gcd identity", fails, 100))

    fails = []
    x = UniPoly.x()
    for n in range(1, 31):
        acc = UniPoly((1,))
        for d in divisors(n):
            acc = acc * cyclotomic(d)
        if acc != x ** n - UniPoly((1,)):
            fails.append(f"n = {n}")
    checks.append(_check("product of Phi_d over d | n is x^n - 1", fails, 30))

    fails = []
    for m in range(1, 9):
        # (1+s) * d/ds log(1+s) = 1 in R_(m-1)
        lg = log_series(m + 1)
        deriv = [Fraction(k) * c for k, c in enumerate(lg.coeffs)][1:]
        prod = [Fraction(0)] * m
        for k, c in enumerate(deriv[:m]):
            prod[k] += c
            if k + 1 < m:
                prod[k + 1] += c
        if prod != [Fraction(1)] + [Fraction(0)] * (m - 1):
            fails.append(f"m = {m}")
    checks.append(_check("log series derivative", fails, 8))
    return checks


def modules_suite(seed: int, count: int = 60) -> list:
    rng = random.Random(seed)
    checks = decomposition_suite(count, rng.randrange(2**31))

    fails = []
    for i in range(20):
        T = random_torsion_module(rng, max_qdim=12, conjugate=False)
        P = random_unimodular(rng, T.qdim, steps=T.qdim + 2) if T.qdim > 1 else la.identity(T.qdim)
        C = T.conjugated(P)
        if find_N(T) != find_N(C):
            fails.append(f"module {i}: N changed under conjugation")
        jt, jc = jordan_chevalley(T), jordan_chevalley(C)
        N = find_N(T)
        if eigenspace_decomposition(T, jt, N).dims() != eigenspace_decomposition(C, jc, N).dims():
            fails.append(f"module {i}: eigenspace dimensions changed under conjugation")
    checks.append(_check("conjugation invariance of N and eigenspace dimensions", fails, 20))

    fails = []
    for i in range(10):
        a = rng.randint(2, 7)
        b = rng.choice([x for x in range(-3, 4) if x not in (0,)])
        p = UniPoly((b, 0, a))
        # a t^2 + b is a product of cyclotomics only when it is a multiple of t^2 +- 1
        T = TorsionModule((LaurentPoly(0, p),))
        try:
            find_N(T)
            raised = False
        except NotQuasiUnipotent:
            raised = True
        if raised != (a != abs(b)):
            fails.append(f"{p.format('t')}: quasi-unipotent detection wrong")
    checks.append(_check("non-cyclotomic factors are rejected", fails, 10))
    return checks


def thickening_suite(seed: int, fixtures: dict | None = None, max_m: int = 5) -> list:
    from .fixtures import fixture_thickenings

    rng = random.Random(seed)
    fixtures = fixture_thickenings() if fixtures is None else fixtures
    euler, scale, stab, unit, square = [], [], [], [], []
    for name, (K, eta) in fixtures.items():
        chi = K.euler_characteristic()
        for m in range(1, max_m + 1):
            try:
                T = thicken(K, eta, m)
            except NotAComplex as exc:
                square.append(f"{name}, m={m}: {exc}")
                continue
            got = sum((-1) ** j * cohomology_dim(T, j) for j in T.degrees())
            if got != m * chi:
                euler.append(f"{name}, m={m}: {got} != {m * chi}")
        cs = []
        while len(cs) < 5:
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            if c:
                cs.append(c)
        for j in range(K.top_degree + 1):
            value, m = eigen1_auto(K, eta, j)
            for c in cs:
                if eigen1_at(K, eta.scaled(c), j, m) != value:
                    scale.append(f"{name}, j={j}, c={c}")
            if eigen1_at(K, eta, j, m + 3) != value:
                stab.append(f"{name}, j={j}: value at m={m + 3} differs")
            n = len(K.in_degree(j)) * m
            a = kernel_subspace(K, eta, j, m, use_log=False)
            b = kernel_subspace(K, eta, j, m, use_log=True)
            if not la.same_span(a, b, n):
                unit.append(f"{name}, j={j}, m={m}")
    total = len(fixtures)
    return [
        _check(f"Euler characteristic of K(eta, m) is m * chi(K), m <= {max_m}", euler, total),
        _check("eigen1 unchanged under eta -> c*eta", scale, total),
        _check("eigen1 stable from the AUTO order up to +3", stab, total),
        _check("s^m and log(1+s)^m kernels coincide", unit, total),
        _check("d_eta squares to zero", square, total),
    ]


def specialization_failures(C, seed: int, samples: int = 10) -> list:
    """Generic rank against sampled specializations in every degree."""
    rng = random.Random(seed)
    out = []
    N = 1
    for j in C.degrees():
        _, T = decompose(homology(C, j))
        if T.qdim:
            try:
                N = N * find_N(T) // gcd(N, find_N(T))
            except NotQuasiUnipotent:
                pass
    points = []
    while len(points) < samples:
        v = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        if v:
            points.append(SpecializationPoint.rational(v))
    points += [SpecializationPoint.root_of_unity(d) for d in range(1, N + 1)]
    for j in C.degrees():
        g = generic_rank(C, j)
        dims = {str(p): specialize(C, p, j) for p in points}
        low = [k for k, v in dims.items() if v < g]
        if low:
            out.append(f"degree {j}: below generic rank {g} at {low}")
        if min(dims.values()) != g:
            out.append(f"degree {j}: min {min(dims.values())} != generic rank {g}")
    return out


def milnor_failures(C) -> list:
    out = []
    for j in C.degrees():
        rep = milnor_consistency(C, j)
        if not rep.holds:
            out.append(f"degree {j}: {rep.specialized_at_one} != {rep.coker_t_minus_one} + {rep.ker_t_minus_one_below}")
    return out


def duality_failures(arrangement, presentation) -> list:
    """Thickening eigen1 at degree j+1 against dim (Tors H_j)_1 from Fox calculus."""
    from .complexes import fox_complex
    from .arrangements import eta_from_multiplicities

    out = []
    OS = build_os_algebra(arrangement)
    eta = eta_from_multiplicities(OS)
    C = fox_complex(presentation)
    for j in range(min(OS.rank, 2)):
        _, T = decompose(homology(C, j))
        if T.qdim:
            jc = jordan_chevalley(T)
            side_a = eigenspace_decomposition(T, jc, find_N(T)).dims().get(1, 0)
        else:
            side_a = 0
        side_b, _ = eigen1_auto(OS.cdga, eta, j + 1)
        if side_a != side_b:
            out.append(f"j={j}: Fox side {side_a} != thickening side {side_b}")
    return out


def cross_suite(seed: int) -> list:
    from .fixtures import PAIRED, fixture_complexes, fixture_names, load

    rng = random.Random(seed)
    checks = []
    complexes = fixture_complexes()
    fails = []
    for name, C in complexes.items():
        fails += [f"{name} {f}" for f in milnor_failures(C)]
    checks.append(_check("Milnor sequence dimensions", fails, len(complexes)))

    fails = []
    for name, C in complexes.items():
        fails += [f"{name} {f}" for f in specialization_failures(C, rng.randrange(2**31))]
    checks.append(_check("generic rank is the minimum over specializations", fails, len(complexes)))

    fails = []
    for arr_name, pres_name in PAIRED.items():
        fails += [
            f"{arr_name}: {f}"
            for f in duality_failures(load("arrangements", arr_name), load("presentations", pres_name))
        ]
    checks.append(_check("thickening eigen1 equals Fox-side eigenvalue-1 dimension", fails, len(PAIRED)))

    fails = []
    names = fixture_names("arrangements")
    for name in names:
        A = load("arrangements", name)
        rep = arrangement_report(A)
        for r in rep.records:
            if not r.agrees:
                fails.append(f"{name} j={r.j}: {r.eigen1} != {r.formula}")
        OS = build_os_algebra(A)
        poincare = UniPoly(OS.betti)
        if poincare != poincare_deletion_restriction(A):
            fails.append(f"{name}: nbc count disagrees with deletion-restriction")
        order = list(range(A.size))
        rng.shuffle(order)
        if build_os_algebra(A.permuted(order)).betti != OS.betti:
            fails.append(f"{name}: Betti numbers depend on hyperplane order")
    checks.append(_check("arrangement eigen1 equals the Betti formula; Betti numbers are order-free", fails, len(names)))
    return checks


SUITES = {
    "algebra": algebra_suite,
    "modules": modules_suite,
    "thickening": thickening_suite,
    "cross": cross_suite,
}


def run_suite(name: str, seed: int = DEFAULT_SEED) -> list:
    return SUITES[name](seed)
