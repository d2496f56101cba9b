import random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

import oracles
from alexmod.complexes import (
    FreeRChainComplex,
    GroupPresentation,
    SpecializationPoint,
    concurrent_lines_presentation,
    eigen1_dimension_formula,
    fox_complex,
    fox_derivative,
    free_group_presentation,
    generic_rank,
    homology,
    milnor_consistency,
    parse_point,
    parse_word,
    specialize,
    wedge_of_circles,
)
from alexmod.errors import EpsilonInconsistent, EpsilonNotSurjective, NotAComplex, ParseError
from alexmod.fixtures import fixture_complexes, load
from alexmod.modules import decompose, eigenspace_decomposition, find_N, jordan_chevalley
from alexmod.poly import parse_laurent
from alexmod.snf import invariant_factors

ONE = SpecializationPoint.rational(1)


def H(C, j):
    return decompose(homology(C, j))


def factor_strings(T):
    return [str(f) for f in T.invariant_factors]


T_MINUS_1 = str(parse_laurent("t - 1"))


# -- homology ----------------------------------------------------------------------


def test_wedge_of_three_circles():
    C = wedge_of_circles(3)
    free0, T0 = H(C, 0)
    free1, T1 = H(C, 1)
    assert (free0, factor_strings(T0)) == (0, [T_MINUS_1])
    assert (free1, T1.qdim) == (2, 0)


def test_zero_boundaries():
    C = FreeRChainComplex({0: 1, 1: 1})
    assert H(C, 0)[0] == 1 and H(C, 1)[0] == 1


def test_circle():
    C = FreeRChainComplex({0: 1, 1: 1}, {1: [["t-1"]]})
    assert factor_strings(H(C, 0)[1]) == [T_MINUS_1]
    assert H(C, 1)[0] == 0 and H(C, 1)[1].qdim == 0


def test_not_a_complex():
    with pytest.raises(NotAComplex, match="not a complex"):
        FreeRChainComplex({0: 1, 1: 1, 2: 1}, {1: [["t-1"]], 2: [["1"]]})


def test_wrong_shape():
    with pytest.raises(NotAComplex):
        FreeRChainComplex({0: 1, 1: 2}, {1: [["t-1"]]})


def test_homology_ignores_basis_order():
    rng = random.Random(4)
    for name, C in fixture_complexes().items():
        perms = {}
        for j in C.degrees():
            p = list(range(C.rank(j)))
            rng.shuffle(p)
            perms[j] = p
        D = C.permuted(perms)
        for j in C.degrees():
            a, b = H(C, j), H(D, j)
            assert a[0] == b[0] and a[1].invariant_factors == b[1].invariant_factors, name


# -- words and Fox calculus ----------------------------------------------------------


def test_parse_word_forms():
    gens = ["a", "b"]
    assert parse_word("a b a^-1 b^-1", gens) == [("a", 1), ("b", 1), ("a", -1), ("b", -1)]
    assert parse_word("aba^-1b^-1", gens) == parse_word("a b a^-1 b^-1", gens)
    assert parse_word("a^3 b^-2", gens) == [("a", 1)] * 3 + [("b", -1)] * 2
    assert parse_word("1", gens) == []


@pytest.mark.parametrize("bad", ["", "a^", "a^0", "^2", "c", "a^x"])
def test_parse_word_rejects(bad):
    with pytest.raises(ParseError):
        parse_word(bad, ["a", "b"])


def test_free_group_three():
    C = fox_complex(free_group_presentation(3))
    assert factor_strings(H(C, 0)[1]) == [T_MINUS_1]
    assert H(C, 1)[0] == 2 and H(C, 1)[1].qdim == 0


def test_infinite_cyclic_group():
    C = fox_complex(GroupPresentation(("a",), (), {"a": 1}))
    assert factor_strings(H(C, 0)[1]) == [T_MINUS_1]
    assert H(C, 1)[0] == 0 and H(C, 1)[1].qdim == 0


def test_concurrent_lines_h1():
    C = fox_complex(concurrent_lines_presentation(3))
    free, T = H(C, 1)
    assert free == 0 and T.qdim == 4
    assert T.char_poly() == (parse_laurent("t-1") ** 2 * parse_laurent("t^2+t+1")).body
    assert find_N(T) == 3
    eig = eigenspace_decomposition(T, jordan_chevalley(T), 3)
    assert eig.dims() == {1: 2, 3: 2}


def test_trefoil_alexander_polynomial():
    free, T = H(fox_complex(load("presentations", "trefoil")), 1)
    assert free == 0
    assert factor_strings(T) == [str(parse_laurent("t^2 - t + 1"))]
    assert find_N(T) == 6


def test_epsilon_not_surjective():
    with pytest.raises(EpsilonNotSurjective):
        fox_complex(free_group_presentation(2, [2, 4]))


def test_epsilon_inconsistent():
    with pytest.raises(EpsilonInconsistent):
        fox_complex(GroupPresentation(("a", "b"), ("a b",), {"a": 1, "b": 1}))


def _random_relator(rng, gens):
    """Commutator of two random words: epsilon-image 0 for any epsilon."""
    def word():
        return [(rng.choice(gens), rng.choice([1, -1])) for _ in range(rng.randint(1, 4))]

    def inv(w):
        return [(g, -s) for g, s in reversed(w)]

    u, v = word(), word()
    letters = u + v + inv(u) + inv(v)
    return " ".join(f"{g}^{s}" if s < 0 else g for g, s in letters)


@settings(max_examples=40)
@given(st.integers(0, 2**32 - 1))
def test_fox_matrix_matches_oracle_and_is_a_complex(seed):
    rng = random.Random(seed)
    gens = ("a", "b", "c")[: rng.randint(1, 3)]
    eps = {g: rng.randint(-2, 3) for g in gens}
    eps[gens[0]] = 1
    rels = tuple(_random_relator(rng, gens) for _ in range(rng.randint(1, 3)))
    P = GroupPresentation(gens, rels, eps)
    C = fox_complex(P)  # construction checks d1 o d2 = 0
    oracle = oracles.fox_matrix(gens, rels, eps)
    for i, w in enumerate(P.words()):
        for k, g in enumerate(gens):
            ours = sp.sympify(str(fox_derivative(w, g, eps)).replace("^", "**"), locals={"t": oracles.t})
            assert sp.simplify(ours - oracle[i, k]) == 0
    assert C.rank(2) == len(rels)


def test_fox_torsion_matches_oracle_on_fixtures():
    from alexmod.fixtures import fixture_names

    for name in fixture_names("presentations"):
        P = load("presentations", name)
        _, T = H(fox_complex(P), 1)
        if not P.relators:
            assert T.qdim == 0
            continue
        expected = oracles.torsion_of_cokernel(oracles.fox_matrix(P.generators, P.relators, P.epsilon))
        assert T.qdim == sum(f.degree() for f in expected), name


# -- specialization ---------------------------------------------------------------------


def test_wedge_generic_rank():
    assert generic_rank(wedge_of_circles(3), 1) == 2


def test_wedge_at_one():
    assert specialize(wedge_of_circles(3), ONE, 1) == 3


def test_concurrent_lines_specializations():
    C = fox_complex(concurrent_lines_presentation(3))
    # Tors H_1 = R/(t-1) + R/(t^3-1): at zeta_3 only the Phi_3 part of R/(t^3-1)
    # survives in H_1, giving dim 1; at 2 nothing survives
    assert specialize(C, SpecializationPoint.root_of_unity(3), 1) == 1
    assert specialize(C, SpecializationPoint.rational(2), 1) == 0
    assert generic_rank(C, 1) == 0


def test_specialization_over_q_zeta_matches_sympy():
    C = fox_complex(concurrent_lines_presentation(3))
    z = sp.exp(2 * sp.pi * sp.I / 3)
    d1 = sp.Matrix([[sp.sympify(x.replace("^", "**")) for x in r] for r in C.boundary(1).to_strings()])
    d2 = sp.Matrix([[sp.sympify(x.replace("^", "**")) for x in r] for r in C.boundary(2).to_strings()])
    t = sp.Symbol("t")
    r1 = d1.subs(t, z).applyfunc(sp.nsimplify).rank(simplify=True)
    r2 = d2.subs(t, z).applyfunc(lambda e: sp.nsimplify(sp.expand_complex(e))).rank(simplify=True)
    assert specialize(C, SpecializationPoint.root_of_unity(3), 1) == C.rank(1) - r1 - r2


def test_parse_point():
    assert parse_point("generic").kind == "generic"
    assert parse_point("root-of-unity:5").order == 5
    assert parse_point("rational:-3/2").value == sp.Rational(-3, 2)
    for bad in ["rational:0", "rational:x", "root-of-unity:", "complex:1"]:
        with pytest.raises(ParseError):
            parse_point(bad)


# -- Milnor sequence and the eigenvalue-1 formula ----------------------------------------


def test_milnor_wedge():
    rep = milnor_consistency(wedge_of_circles(3), 1)
    assert (rep.specialized_at_one, rep.coker_t_minus_one, rep.ker_t_minus_one_below) == (3, 2, 1)


def test_milnor_circle():
    C = FreeRChainComplex({0: 1, 1: 1}, {1: [["t-1"]]})
    rep = milnor_consistency(C, 0)
    assert (rep.specialized_at_one, rep.rhs) == (1, 1)


def test_milnor_concurrent_lines():
    rep = milnor_consistency(fox_complex(concurrent_lines_presentation(3)), 1)
    assert (rep.specialized_at_one, rep.coker_t_minus_one, rep.ker_t_minus_one_below) == (3, 2, 1)


def test_milnor_on_every_fixture():
    for name, C in fixture_complexes().items():
        for j in C.degrees():
            assert milnor_consistency(C, j).holds, (name, j)


@pytest.mark.parametrize("b,r,j,expected", [((1, 3), (0, 0), 1, 2), ((1, 3), (0, 2), 1, 0), ((1,), (0,), 0, 1)])
def test_formula_examples(b, r, j, expected):
    assert eigen1_dimension_formula(b, r, j) == expected


@given(st.integers(3, 12))
def test_formula_points_in_line(d):
    assert eigen1_dimension_formula((1, d), (0, d - 1), 1) == 0


def test_formula_needs_enough_degrees():
    with pytest.raises(ValueError):
        eigen1_dimension_formula((1,), (0,), 1)
