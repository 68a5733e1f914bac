"""Expressions in z = q y x = q^-1 x y.

z generates a commutative subalgebra of T_q (supported on the diagonal
monomials x^k y^k), so Laurent polynomials in z can be divided exactly there.
That is the only division of non-monomial elements anywhere in the package,
and every quotient is re-checked by multiplying back.
"""

from __future__ import annotations

from typing import Dict

from .scalars import Q_MINUS, SQRT_Q, ZERO, QHalfScalar, q_int, qq
from .torus import ZERO_ELEMENT, X, X_INV, Y, Y_INV, TorusElement, elem_pow, z_power


def zq(k: int) -> TorusElement:
    return z_power(k)


def z_sym(k: int) -> TorusElement:
    """z^k + z^-k."""
    return z_power(k) + z_power(-k)


def y_pair(r: int) -> TorusElement:
    """y z^r + y^-1 z^-r."""
    return Y * z_power(r) + Y_INV * z_power(-r)


def qy_pair(r: int) -> TorusElement:
    """q^r y z^r + q^r y^-1 z^-r."""
    return y_pair(r).scale(qq(r))


# -- family images in z-notation ---------------------------------------------


def b1r_z(r: int) -> TorusElement:
    return qy_pair(r).scale((SQRT_Q * Q_MINUS).inverse())


def b1r_z_alt(r: int) -> TorusElement:
    """The second z-form, built from x^-1 z^(r+1) and x z^(-r-1).

    x^-1 z = q^-1 y, so the first term needs q^(r+1) to match y z^r.
    """
    body = (X_INV * z_power(r + 1)).scale(qq(r + 1)) + (X * z_power(-r - 1)).scale(qq(r + 1))
    return body.scale((SQRT_Q * Q_MINUS).inverse())


def theta_prime_z(n: int) -> TorusElement:
    body = z_sym(n).scale(q_int(n + 1))
    for ell in range(1, n):
        body = body + z_power(n - 2 * ell).scale(qq(n - 2 * ell) + qq(2 * ell - n))
    return body.scale(Q_MINUS.inverse())


def theta_z(n: int) -> TorusElement:
    body = z_sym(n).scale(q_int(n + 1))
    tail = ZERO_ELEMENT
    for ell in range(1, n):
        tail = tail + z_power(n - 2 * ell)
    body = body + tail.scale(qq(2 - n) + qq(-n))
    return body.scale(Q_MINUS.inverse())


def h_prime_z(n: int) -> TorusElement:
    pref = qq(n) + qq(-n)
    body = z_sym(n).scale(pref)
    if n % 2 == 0:
        body = body - TorusElement.scalar(2 * pref)
    return body.scale((Q_MINUS * n).inverse())


def h_z(n: int) -> TorusElement:
    pref = qq(n) + qq(-n)
    body = z_sym(n).scale(pref)
    if n % 2 == 0:
        body = body - TorusElement.scalar(2 * (qq(n) + 1))
    return body.scale((Q_MINUS * n).inverse())


def theta_step_z(n: int) -> TorusElement:
    """Right side for Theta_n - q^-2 Theta_{n-2}, n >= 3."""
    body = z_sym(n).scale(q_int(n + 1)) - z_sym(n - 2).scale(q_int(n - 3))
    return body.scale(Q_MINUS.inverse())


# -- exact arithmetic in the z-subalgebra ------------------------------------


class NotInZAlgebra(ValueError):
    pass


def to_z_coeffs(u: TorusElement) -> Dict[int, QHalfScalar]:
    """Write u as sum c_k z^k; fails unless u is supported on the diagonal."""
    out = {}
    for (a, b), c in u.items():
        if a != b:
            raise NotInZAlgebra(f"monomial x^{a} y^{b} is off the diagonal")
        # x^k y^k = q^(k^2) z^k
        out[a] = c * qq(a * a)
    return out


def from_z_coeffs(coeffs: Dict[int, QHalfScalar]) -> TorusElement:
    out = ZERO_ELEMENT
    for k, c in coeffs.items():
        if c:
            out = out + z_power(k).scale(c)
    return out


def z_divide(num: TorusElement, den: TorusElement) -> TorusElement:
    """Exact quotient num/den in the commutative z-subalgebra.

    Raises ArithmeticError when den does not divide num.
    """
    n = {k: c for k, c in to_z_coeffs(num).items() if c}
    d = {k: c for k, c in to_z_coeffs(den).items() if c}
    if not d:
        raise ArithmeticError("division by zero element")
    if not n:
        return ZERO_ELEMENT
    dlo, dhi = min(d), max(d)
    lead_inv = d[dhi].inverse()
    quot: Dict[int, QHalfScalar] = {}
    while n:
        nhi = max(n)
        if nhi - dhi < min(n) - dlo:
            raise ArithmeticError("inexact division in the z-subalgebra")
        shift = nhi - dhi
        c = n[nhi] * lead_inv
        quot[shift] = quot.get(shift, ZERO) + c
        for k, dc in d.items():
            key = k + shift
            v = n.get(key, ZERO) - c * dc
            if v:
                n[key] = v
            else:
                n.pop(key, None)
    return from_z_coeffs(quot)


def xy_power(k: int) -> TorusElement:
    return elem_pow(X * Y, k)


def yx_power(k: int) -> TorusElement:
    return elem_pow(Y * X, k)
