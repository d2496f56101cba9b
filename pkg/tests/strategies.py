"""Hypothesis strategies for the exact-algebra types."""
from fractions import Fraction

from hypothesis import strategies as st

from alexmod.poly import LaurentPoly, UniPoly

small_rationals = st.builds(
    Fraction, st.integers(min_value=-9, max_value=9), st.integers(min_value=1, max_value=4)
)
nonzero_rationals = small_rationals.filter(bool)


def unipolys(max_degree=4):
    return st.lists(small_rationals, max_size=max_degree + 1).map(UniPoly)


def laurent_polys(max_degree=3, min_val=-3, max_val=3):
    return st.builds(
        LaurentPoly,
        st.integers(min_value=min_val, max_value=max_val),
        st.lists(small_rationals, max_size=max_degree + 1).map(UniPoly),
    )


def nonzero_laurent_polys(max_degree=3):
    return laurent_polys(max_degree).filter(lambda p: not p.is_zero())


def rmatrix_rows(max_rows=3, max_cols=3, max_degree=2):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(laurent_polys(max_degree, 0, 1), min_size=c, max_size=c),
                min_size=r,
                max_size=r,
            )
        )
    )
