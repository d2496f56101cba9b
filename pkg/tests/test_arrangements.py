import itertools
import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from alexmod.arrangements import (
    Arrangement,
    Hyperplane,
    arrangement_report,
    build_os_algebra,
    circuits,
    concurrent_lines,
    eta_from_multiplicities,
    generic_lines,
    points_in_line,
    poincare_deletion_restriction,
)
from alexmod.complexes import eigen1_dimension_formula
from alexmod.errors import DegenerateInput, HypothesesNotMet
from alexmod.fixtures import fixture_names, load
from alexmod.poly import UniPoly
from alexmod.thickening import EtaClass


def lines(*specs, eps=None):
    """Lines a*x + b*y = c given as (a, b, c)."""
    eps = eps or [1] * len(specs)
    return Arrangement(2, tuple(Hyperplane((a, b), c, e) for (a, b, c), e in zip(specs, eps)))


def betti_of_lines_by_points(A: Arrangement) -> list:
    """(1, d, sum over intersection points of (multiplicity - 1)), by direct geometry."""
    points = {}
    for i, j in itertools.combinations(range(A.size), 2):
        (a1, b1), c1 = A.hyperplanes[i].normal, A.hyperplanes[i].offset
        (a2, b2), c2 = A.hyperplanes[j].normal, A.hyperplanes[j].offset
        det = a1 * b2 - a2 * b1
        if det == 0:
            continue
        p = ((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)
        points.setdefault(p, set()).update((i, j))
    b2 = sum(len(s) - 1 for s in points.values())
    return [1, A.size] + ([b2] if b2 else [])


# -- construction -------------------------------------------------------------------------------


def test_three_points():
    OS = build_os_algebra(points_in_line(3))
    assert OS.betti == [1, 3]
    assert OS.rank == 1
    assert OS.cdga.products == {}


def test_three_concurrent_lines():
    OS = build_os_algebra(concurrent_lines(3))
    assert OS.betti == [1, 3, 2] and OS.rank == 2


def test_three_generic_lines():
    OS = build_os_algebra(generic_lines(3))
    assert OS.betti == [1, 3, 3] and OS.rank == 2


def test_coordinate_hyperplanes_in_three_space():
    A = Arrangement(3, tuple(Hyperplane(tuple(int(i == k) for i in range(3)), 0) for k in range(3)))
    assert build_os_algebra(A).betti == [1, 3, 3, 1]


def test_braid_arrangement_rank_two():
    A = Arrangement(3, (Hyperplane((1, -1, 0)), Hyperplane((1, 0, -1)), Hyperplane((0, 1, -1))))
    assert build_os_algebra(A).betti == [1, 3, 2]
    assert build_os_algebra(A).rank == 2


def test_parallel_lines_have_no_product():
    A = lines((1, 0, 0), (1, 0, 1))
    OS = build_os_algebra(A)
    assert OS.betti == [1, 2] and OS.rank == 1


def test_duplicate_hyperplanes_rejected():
    with pytest.raises(DegenerateInput):
        lines((1, 0, 0), (2, 0, 0))


def test_zero_normal_rejected():
    with pytest.raises(DegenerateInput):
        Hyperplane((0, 0), 1)


def test_circuits_of_concurrent_lines():
    assert circuits(concurrent_lines(3)) == [(0, 1, 2)]


@pytest.mark.parametrize("d", range(2, 7))
def test_family_betti_numbers(d):
    assert build_os_algebra(points_in_line(d)).betti == [1, d]
    assert build_os_algebra(concurrent_lines(d)).betti == [1, d, d - 1]
    assert build_os_algebra(generic_lines(d)).betti == [1, d, comb(d, 2)]


line_specs = st.lists(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)).filter(lambda s: s[0] or s[1]),
    min_size=1,
    max_size=6,
)


def _distinct(specs):
    out = []
    for s in specs:
        if not any(s[0] * t[1] == s[1] * t[0] and s[0] * t[2] == s[2] * t[0] and s[1] * t[2] == s[2] * t[1]
                   for t in out):
            out.append(s)
    return out


@settings(max_examples=40)
@given(line_specs)
def test_random_line_arrangements(specs):
    A = lines(*_distinct(specs))
    OS = build_os_algebra(A)
    assert OS.betti == betti_of_lines_by_points(A)
    assert UniPoly(OS.betti) == poincare_deletion_restriction(A)


@settings(max_examples=20)
@given(line_specs, st.randoms(use_true_random=False))
def test_betti_numbers_ignore_hyperplane_order(specs, rnd):
    A = lines(*_distinct(specs))
    order = list(range(A.size))
    rnd.shuffle(order)
    assert build_os_algebra(A.permuted(order)).betti == build_os_algebra(A).betti


@pytest.mark.parametrize("name", fixture_names("arrangements"))
def test_fixture_poincare_and_euler(name):
    A = load("arrangements", name)
    OS = build_os_algebra(A)
    assert UniPoly(OS.betti) == poincare_deletion_restriction(A)
    assert OS.cdga.euler_characteristic() == sum((-1) ** l * b for l, b in enumerate(OS.betti))


# -- eta -----------------------------------------------------------------------------------------------


def test_eta_examples():
    assert eta_from_multiplicities(build_os_algebra(points_in_line(4))) == EtaClass((1, 1, 1, 1))
    assert eta_from_multiplicities(build_os_algebra(points_in_line(2, [2, 1]))) == EtaClass((2, 1))
    assert eta_from_multiplicities(build_os_algebra(concurrent_lines(3))) == EtaClass((1, 1, 1))


def test_builders_accept_nonpositive_multiplicities():
    OS = build_os_algebra(points_in_line(3, [1, -1, 0]))
    assert eta_from_multiplicities(OS) == EtaClass((1, -1, 0))


# -- the eigenvalue-1 report -------------------------------------------------------------------------------


def test_points3_report():
    rep = arrangement_report(points_in_line(3))
    assert [(r.j, r.eigen1, r.formula) for r in rep.records] == [(0, 1, 1)]
    with pytest.raises(HypothesesNotMet, match="rank - 1"):
        arrangement_report(points_in_line(3), max_j=1)


def test_concurrent3_report():
    rep = arrangement_report(concurrent_lines(3))
    assert rep.records[1].eigen1 == 2 == rep.records[1].formula
    assert eigen1_dimension_formula(rep.betti, [0, 0], 1) == 2


@pytest.mark.parametrize("d", range(3, 8))
def test_points_report_is_one(d):
    rep = arrangement_report(points_in_line(d))
    assert rep.records[0].eigen1 == 1 == rep.records[0].formula


@pytest.mark.parametrize("name", fixture_names("arrangements"))
def test_fixture_reports_agree(name):
    rep = arrangement_report(load("arrangements", name))
    assert rep.all_agree
    for r in rep.records:
        assert f"({r.j},{r.j})" in r.label


def test_hypotheses_multiplicity_sign():
    with pytest.raises(HypothesesNotMet, match=">= 1"):
        arrangement_report(points_in_line(3, [1, 0, 1]))


def test_hypotheses_gcd():
    with pytest.raises(HypothesesNotMet, match="gcd"):
        arrangement_report(points_in_line(2, [2, 4]))


def test_weighted_concurrent_lines():
    rep = arrangement_report(concurrent_lines(3, [2, 1, 1]))
    assert rep.all_agree
