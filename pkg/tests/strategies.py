"""Hypothesis strategies for exact algebra objects."""

from hypothesis import strategies as st

from octoreg.algebra import Octonion, Quaternion
from octoreg.clifford import DIM, Multivector
from octoreg.polyfun import Poly, PolyMap

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
small = st.fractions(min_value=-5, max_value=5, max_denominator=4)

octonions = st.lists(rationals, min_size=8, max_size=8).map(Octonion)
vector_octonions = st.lists(rationals, min_size=7, max_size=7).map(lambda c: Octonion([0, *c]))
quaternions = st.lists(rationals, min_size=4, max_size=4).map(Quaternion)
multivectors = st.dictionaries(st.integers(0, DIM - 1), rationals, max_size=6).map(Multivector.from_dict)


def _exponents(variables, max_degree):
    """Exponent tuples of total degree <= max_degree in the given variables."""
    def build(picks):
        e = [0] * 8
        for v in picks:
            e[v] += 1
        return tuple(e)

    return st.lists(st.sampled_from(list(variables)), max_size=max_degree).map(build)


def polys(n_vars=8, max_degree=2, max_terms=4):
    return st.dictionaries(_exponents(range(n_vars), max_degree), small, max_size=max_terms).map(Poly)


def polymaps(alg="O", n_vars=8, max_degree=2, max_terms=3):
    n = {"R": 1, "H": 4, "O": 8}[alg]
    return st.lists(polys(n_vars, max_degree, max_terms), min_size=n, max_size=n).map(
        lambda cs: PolyMap(alg, cs)
    )


def x0_free_real_polys(max_degree=3):
    return st.dictionaries(_exponents(range(1, 8), max_degree), small, max_size=5).map(
        lambda t: PolyMap("O", {0: Poly(t)})
    )
