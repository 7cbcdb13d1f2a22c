from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

from halphen.parsing import parse_ideal_file
from halphen.poly import Polynomial, enumerate_monomials

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"

RING3 = ("x", "y", "z")
RING4 = ("x", "y", "z", "w")


def load_ideal(name):
    return parse_ideal_file((FIXTURES / f"{name}.ideal").read_text())


@pytest.fixture
def twisted_cubic():
    return load_ideal("twisted_cubic")


@pytest.fixture
def curve_e():
    return load_ideal("curve_E")


@pytest.fixture
def c0():
    return load_ideal("c0")


@pytest.fixture
def line_l():
    return load_ideal("line_L")


# -- hypothesis strategies ------------------------------------------------

small_rationals = st.fractions(
    min_value=Fraction(-6), max_value=Fraction(6), max_denominator=4
)
nonzero_rationals = small_rationals.filter(bool)


def exponents(n_vars, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n_vars)


def polynomials(ring=RING3, max_terms=5, max_exp=3):
    return st.dictionaries(
        exponents(len(ring), max_exp), small_rationals, max_size=max_terms
    ).map(lambda terms: Polynomial(terms, ring))


def homogeneous_polynomials(ring=RING3, min_degree=1, max_degree=4):
    def build(args):
        degree, picks = args
        monos = enumerate_monomials(len(ring), degree)
        terms = {monos[i % len(monos)]: c for i, c in picks.items()}
        return Polynomial(terms, ring)

    return st.tuples(
        st.integers(min_degree, max_degree),
        st.dictionaries(st.integers(0, 30), small_rationals, min_size=1, max_size=5),
    ).map(build)
