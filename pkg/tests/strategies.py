"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from qtorus.scalars import QHalfScalar
from qtorus.torus import TorusElement

small_int = st.integers(min_value=-6, max_value=6)


@st.composite
def laurent_scalars(draw, max_terms=4, span=8):
    coeffs = draw(st.dictionaries(st.integers(-span, span), small_int, max_size=max_terms))
    return QHalfScalar.laurent(coeffs)


@st.composite
def scalars(draw):
    """Mostly Laurent polynomials, sometimes genuine fractions."""
    num = draw(laurent_scalars())
    if draw(st.booleans()):
        return num
    den = draw(laurent_scalars(max_terms=3, span=4).filter(lambda d: not d.is_zero()))
    return num / den


@st.composite
def elements(draw, max_terms=4, span=3, coeff=None):
    coeff = coeff or laurent_scalars(max_terms=2, span=4)
    mons = draw(st.lists(st.tuples(st.integers(-span, span), st.integers(-span, span)), max_size=max_terms))
    return TorusElement({m: draw(coeff) for m in mons})


@st.composite
def monomials(draw, span=3):
    a = draw(st.integers(-span, span))
    b = draw(st.integers(-span, span))
    return TorusElement.monomial(a, b, draw(laurent_scalars(max_terms=1).filter(lambda c: not c.is_zero())))
