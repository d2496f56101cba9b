import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

import oracles
from alexmod import linalg as la
from alexmod.errors import NotAnnihilated, NotQuasiUnipotent
from alexmod.modules import (
    PresentedRModule,
    TorsionModule,
    decompose,
    eigenspace_decomposition,
    find_N,
    generalized_kernel,
    is_semisimple,
    is_semisimple_on,
    jordan_chevalley,
    log_tN_action,
    restriction,
)
from alexmod.poly import LaurentPoly, UniPoly, cyclotomic, parse_laurent
from alexmod.snf import RMatrix
from alexmod.verify import decomposition_failures, random_torsion_module, random_unimodular

seeds = st.integers(0, 2**32 - 1)


def T_of(*factors):
    return TorsionModule.from_factors(*factors)


def eye(n):
    return la.identity(n)


def mat(a):
    return [list(r) for r in a]


# -- decompose ----------------------------------------------------------------


def test_decompose_r_mod_t_minus_one():
    free, T = decompose(PresentedRModule(1, RMatrix.from_rows([["t-1"]])))
    assert free == 0 and T.qdim == 1 and T.matrix() == [[1]]


def test_decompose_free():
    free, T = decompose(PresentedRModule.free(2))
    assert free == 2 and T.qdim == 0


def test_decompose_coprime_diagonal_merges_into_one_factor():
    free, T = decompose(PresentedRModule(2, RMatrix.from_rows([["t-1", "0"], ["0", "t^2+t+1"]])))
    assert free == 0
    assert T.invariant_factors == (parse_laurent("t^3 - 1"),)
    assert T.qdim == 3


def test_char_poly_is_product_of_factors():
    T = T_of("t-1", "t^3-1", "t^6-1")
    assert T.char_poly() == T.product_of_factors().monic()


# -- find_N -----------------------------------------------------------------------


def test_find_n_unipotent():
    assert find_N(T_of("t^2 - 2*t + 1")) == 1


def test_find_n_phi3():
    assert find_N(T_of("t^2 + t + 1")) == 3


def test_find_n_rejects_sqrt_two():
    with pytest.raises(NotQuasiUnipotent) as exc:
        find_N(T_of("t^2 - 2"))
    assert "t^2" in str(exc.value)


def test_find_n_rejects_figure_eight():
    with pytest.raises(NotQuasiUnipotent):
        find_N(T_of("t^2 - 3*t + 1"))


@settings(max_examples=40)
@given(seeds)
def test_find_n_is_minimal_by_brute_force(seed):
    T = random_torsion_module(random.Random(seed), max_order=12, max_qdim=8)
    N = find_N(T)
    t, n = T.matrix(), T.qdim
    assert la.is_nilpotent(la.matsub(la.mat_pow(t, N), eye(n)))
    for k in range(1, N):
        assert not la.is_nilpotent(la.matsub(la.mat_pow(t, k), eye(n)))


# -- log(t^N) --------------------------------------------------------------------


def test_log_trivial_module():
    assert log_tN_action(T_of("t - 1"), 1, 1) == [[0]]


def test_log_unipotent_block_equals_t_minus_one():
    T = T_of("t^2 - 2*t + 1")
    assert log_tN_action(T, 1, 2) == la.matsub(T.matrix(), eye(2))


def test_log_phi3_is_zero():
    T = T_of("t^2 + t + 1")
    assert la.is_zero(log_tN_action(T, 3, 1))


def test_log_not_annihilated():
    with pytest.raises(NotAnnihilated):
        log_tN_action(T_of("t^2 - 2*t + 1"), 1, 1)


@settings(max_examples=30)
@given(seeds)
def test_log_is_nilpotent_and_commutes_with_t(seed):
    T = random_torsion_module(random.Random(seed), max_qdim=10)
    N = find_N(T)
    lg = log_tN_action(T, N, T.qdim)
    assert la.is_nilpotent(lg)
    assert la.matmul(lg, T.matrix()) == la.matmul(T.matrix(), lg)


# -- Jordan-Chevalley ---------------------------------------------------------------


def test_jc_semisimple_input():
    T = T_of("t^3 - 1")
    jc = jordan_chevalley(T)
    assert mat(jc.t_ss) == T.matrix() and mat(jc.t_u) == eye(3)


def test_jc_unipotent_companion():
    T = T_of("t^2 - 2*t + 1")
    assert T.matrix() == [[0, -1], [1, 2]]
    jc = jordan_chevalley(T)
    assert mat(jc.t_ss) == eye(2) and mat(jc.t_u) == T.matrix()


def test_jc_phi3_squared():
    T = T_of("t^4 + 2*t^3 + 3*t^2 + 2*t + 1")  # (t^2+t+1)^2
    jc = jordan_chevalley(T)
    ss, u = mat(jc.t_ss), mat(jc.t_u)
    assert la.is_zero(la.poly_eval(cyclotomic(3), ss))
    assert la.matmul(ss, u) == T.matrix() == la.matmul(u, ss)
    n = la.matsub(u, eye(4))
    assert not la.is_zero(n) and la.is_zero(la.matmul(n, n))


def test_jc_matches_sympy_jordan_form():
    T = T_of("t - 1", "t^3 - t^2 - t + 1")  # (t-1) and (t-1)^2 (t+1)
    jc = jordan_chevalley(T)
    P, J = oracles.to_sympy_matrix(T.matrix()).jordan_form()
    D = sp.diag(*[J[i, i] for i in range(J.shape[0])])
    assert oracles.to_sympy_matrix(mat(jc.t_ss)) == P * D * P.inv()


@settings(max_examples=40)
@given(seeds)
def test_decomposition_identities_on_random_modules(seed):
    T = random_torsion_module(random.Random(seed), max_qdim=12)
    assert decomposition_failures(T) == []


# -- eigenspaces -----------------------------------------------------------------------


def test_eigenspaces_t_cubed_minus_one():
    T = T_of("t^3 - 1")
    eig = eigenspace_decomposition(T, jordan_chevalley(T), 3)
    assert eig.dims() == {1: 1, 3: 2}


def test_eigenspaces_unipotent():
    T = T_of("t^2 - 2*t + 1")
    eig = eigenspace_decomposition(T, jordan_chevalley(T), 1)
    assert eig.dims() == {1: 2}


def test_eigenspaces_trivial_module():
    T = TorsionModule(())
    eig = eigenspace_decomposition(T, jordan_chevalley(T), 6)
    assert [c.order for c in eig.components] == [1, 2, 3, 6]
    assert all(c.dim == 0 for c in eig.components)


def test_components_for_absent_factors_are_empty():
    T = T_of("t^2 + t + 1")
    eig = eigenspace_decomposition(T, jordan_chevalley(T), 6)
    assert eig.dims() == {1: 0, 2: 0, 3: 2, 6: 0}


@settings(max_examples=25)
@given(seeds)
def test_eigenspace_dims_match_sympy(seed):
    T = random_torsion_module(random.Random(seed), max_order=8, max_qdim=8)
    N = find_N(T)
    eig = eigenspace_decomposition(T, jordan_chevalley(T), N)
    A = oracles.to_sympy_matrix(T.matrix())
    x = sp.Symbol("t")
    for c in eig.components:
        g = sp.Poly(sp.cyclotomic_poly(c.order, x), x)
        assert c.dim == oracles.generalized_kernel_dim(A, g)


@settings(max_examples=25)
@given(seeds)
def test_components_are_t_invariant(seed):
    T = random_torsion_module(random.Random(seed), max_qdim=10)
    eig = eigenspace_decomposition(T, jordan_chevalley(T), find_N(T))
    for c in eig.components:
        if c.basis:
            # restriction solves t*b = b*R; it raises if t*b leaves the span
            R = restriction(T, c.basis)
            assert len(R) == c.dim


def test_generalized_kernel_power_and_stable_agree():
    T = T_of("t - 1", "t^4 - 2*t^3 + 2*t - 1").conjugated(random_unimodular(random.Random(5), 5))
    g = cyclotomic(1)
    assert len(generalized_kernel(T, g)) == 4
    assert la.same_span(generalized_kernel(T, g), generalized_kernel(T, g, power=T.qdim), T.qdim)


# -- semisimplicity ---------------------------------------------------------------------


def test_semisimple_examples():
    assert is_semisimple(T_of("t^3 - 1"))
    T = T_of("t^2 - 2*t + 1")
    assert not is_semisimple(T)
    assert not is_semisimple_on(T, cyclotomic(1))


def test_semisimple_on_phi3_component():
    # (t-1)^2 (t^2+t+1)
    T = TorsionModule((LaurentPoly(0, (UniPoly([-1, 1]) ** 2) * cyclotomic(3)),))
    assert is_semisimple_on(T, cyclotomic(3))
    assert not is_semisimple_on(T, cyclotomic(1))
    assert not is_semisimple(T)


# -- basis invariance -------------------------------------------------------------------


@settings(max_examples=25)
@given(seeds)
def test_conjugation_leaves_reports_unchanged(seed):
    rng = random.Random(seed)
    T = random_torsion_module(rng, max_qdim=10, conjugate=False)
    P = random_unimodular(rng, T.qdim, steps=3 * T.qdim) if T.qdim > 1 else la.identity(T.qdim)
    if T.qdim > 1:
        P[0] = [x * Fraction(rng.randint(1, 4), rng.randint(1, 4)) for x in P[0]]
    S = T.conjugated(P)
    N = find_N(T)
    assert find_N(S) == N
    assert is_semisimple(S) == is_semisimple(T)
    dt = eigenspace_decomposition(T, jordan_chevalley(T), N).dims()
    ds = eigenspace_decomposition(S, jordan_chevalley(S), N).dims()
    assert dt == ds
    for d in dt:
        assert is_semisimple_on(S, cyclotomic(d)) == is_semisimple_on(T, cyclotomic(d))
