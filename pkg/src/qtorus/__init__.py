"""Exact arithmetic in the quantum torus T_q and the q-Onsager element families.

Scalars live in Q(q^(1/2)); elements are kept in the standard basis
x^a y^b with xy = q^2 yx.
"""

from .scalars import (
    ONE,
    Q_MINUS,
    SQRT_Q,
    ZERO,
    QHalfScalar,
    ScalarDomainError,
    delta_ev,
    q_int,
    q_power,
    qq,
    sc_arith,
    sc_eval,
)
from .torus import (
    ONE_ELEMENT,
    ZERO_ELEMENT,
    X,
    X_INV,
    Y,
    Y_INV,
    TorusElement,
    UnsupportedInverseError,
    commutator,
    commutes,
    elem_linear,
    elem_mul,
    elem_pow,
    mono_mul,
    render,
    z_power,
)
from .series import (
    DEFAULT_ORDER,
    SeriesDomainError,
    TruncatedSeries,
    build_theta_prime_series,
    build_theta_series,
    series_exp,
    series_log,
    series_mul,
)
from .families import ROUTES, ElementBuilder, Family, FamilyTag, UsageError, family_elements, w_gen
from .suites import SUITES, CheckReport, run_suite

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
