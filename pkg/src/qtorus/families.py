"""Constructors for the named element families inside T_q.

Each family can be built along several independent routes:

``recursive``/``definitional``
    the defining recursions (the PBW recursions for B_{n delta + alpha_i}, the B_{1,r}
    recursion driven by Theta_1, Theta from B_{n delta}) evaluated in T_q;
``series``
    H-families as coefficients of the logarithm of the Theta product series;
``closed``
    closed forms written directly in the standard basis;
``product``
    the same closed forms written as products of x, y and their inverses,
    left for the torus multiplication to normalize.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from typing import Callable, Dict, Tuple

from .scalars import Q_MINUS, Q_PLUS, SQRT_Q, q_int, qq
from .series import (
    DEFAULT_ORDER,
    TruncatedSeries,
    build_theta_prime_series,
    build_theta_series,
    series_from_elements,
    series_log,
)
from .torus import (
    ZERO_ELEMENT,
    X,
    X_INV,
    Y,
    Y_INV,
    TorusElement,
    commutator,
    elem_pow,
)


class Family(enum.Enum):
    W0 = "w0"
    W1 = "w1"
    B_DELTA = "b-delta"
    B_ALPHA0 = "b-alpha0"
    B_ALPHA1 = "b-alpha1"
    B_NDELTA = "b-ndelta"
    B1R = "b1r"
    THETA_PRIME = "theta-prime"
    THETA = "theta"
    H_PRIME = "h-prime"
    H = "h"

    @classmethod
    def parse(cls, name: str) -> "Family":
        try:
            return cls(name)
        except ValueError:
            raise UsageError(f"unknown family {name!r}") from None


class UsageError(ValueError):
    """Invalid family index, route or truncation."""


@dataclass(frozen=True)
class FamilyTag:
    family: Family
    index: int = 0

    def __post_init__(self):
        f, n = self.family, self.index
        if f in (Family.B_ALPHA0, Family.B_ALPHA1, Family.B_NDELTA) and n < 0:
            raise UsageError(f"{f.value} needs index >= 0, got {n}")
        if f in (Family.H_PRIME, Family.H) and n < 1:
            raise UsageError(f"{f.value} needs index >= 1, got {n}")
        # Theta indices may be negative (those members are zero); B1R takes any r


ROUTES = {
    Family.W0: ("closed",),
    Family.W1: ("closed",),
    Family.B_DELTA: ("recursive", "closed", "product"),
    Family.B_ALPHA0: ("recursive", "closed", "product"),
    Family.B_ALPHA1: ("recursive", "closed", "product"),
    Family.B_NDELTA: ("recursive", "closed", "product"),
    Family.B1R: ("recursive", "closed", "product"),
    Family.THETA_PRIME: ("definitional", "closed", "product"),
    Family.THETA: ("definitional", "closed", "product"),
    Family.H_PRIME: ("series", "definitional", "closed", "product"),
    Family.H: ("series", "definitional", "closed", "product"),
}

# (q - q^-1)(q^2 - q^-2), the denominator of the PBW recursions
_BK_DEN = Q_MINUS * (qq(2) - qq(-2))
# q^(1/2)(q - q^-1), the normalizer of B_0, B_1
_B_NORM = SQRT_Q * Q_MINUS


def w_gen(i: int) -> TorusElement:
    """w_0 = x + x^-1, w_1 = y + y^-1."""
    if i == 0:
        return X + X_INV
    if i == 1:
        return Y + Y_INV
    raise UsageError("w_gen takes i in {0, 1}")


class ElementBuilder:
    """Memoizing constructor for every family.

    One builder is a build session: results are cached by (family, index,
    route).  The cache is guarded by a lock so a builder may be shared across
    threads, but processes should each own one.
    """

    def __init__(self, series_order: int = DEFAULT_ORDER):
        self.series_order = series_order
        self._memo: Dict[Tuple[Family, int, str], TorusElement] = {}
        self._series: Dict[str, TruncatedSeries] = {}
        self._lock = threading.RLock()

    # -- public entry point ------------------------------------------------

    def build(self, family, index: int = 0, route: str = "closed") -> TorusElement:
        if isinstance(family, str):
            family = Family.parse(family)
        FamilyTag(family, index)
        if route not in ROUTES[family]:
            raise UsageError(f"{family.value} has no route {route!r}; try {ROUTES[family]}")
        key = (family, index, route)
        with self._lock:
            hit = self._memo.get(key)
            if hit is None:
                hit = self._dispatch(family, index, route)
                self._memo[key] = hit
            return hit

    def _dispatch(self, family: Family, n: int, route: str) -> TorusElement:
        table: Dict[Family, Callable[[int, str], TorusElement]] = {
            Family.W0: lambda n, r: w_gen(0),
            Family.W1: lambda n, r: w_gen(1),
            Family.B_DELTA: self._b_delta,
            Family.B_ALPHA0: self._b_alpha0,
            Family.B_ALPHA1: self._b_alpha1,
            Family.B_NDELTA: self._b_ndelta,
            Family.B1R: self._b1r,
            Family.THETA_PRIME: self._theta_prime,
            Family.THETA: self._theta,
            Family.H_PRIME: lambda n, r: self._h(n, r, prime=True),
            Family.H: lambda n, r: self._h(n, r, prime=False),
        }
        return table[family](n, route)

    # convenience wrappers with the argument order used elsewhere

    def bk_recursive(self, family, n: int = 0) -> TorusElement:
        return self.build(family, n, "recursive")

    def bk_closed(self, family, n: int = 0) -> TorusElement:
        return self.build(family, n, "closed")

    def b1r(self, r: int, route: str = "closed") -> TorusElement:
        return self.build(Family.B1R, r, route)

    def theta_family(self, n: int, which: str = "prime", route: str = "closed") -> TorusElement:
        fam = Family.THETA_PRIME if which == "prime" else Family.THETA
        return self.build(fam, n, route)

    def h_family(self, n: int, which: str = "prime", route: str = "closed") -> TorusElement:
        fam = Family.H_PRIME if which == "prime" else Family.H
        return self.build(fam, n, route)

    # -- PBW elements -------------------------------------------------------

    def _b_delta(self, n: int, route: str) -> TorusElement:
        w0, w1 = w_gen(0), w_gen(1)
        if route == "recursive":
            return (w1 * w0).scale(qq(-2)) - w0 * w1
        if route == "product":
            return (Y * X + Y_INV * X_INV).scale(qq(-2) - qq(2))
        return self.build(Family.B_NDELTA, 1, "closed")

    def _b_alpha0(self, n: int, route: str) -> TorusElement:
        if route == "closed":
            # printed elsewhere with q^(-n(n-1)); x(yx)^n normalizes to q^(-n(n+1))
            return TorusElement({(n + 1, n): 1, (-n - 1, -n): 1}).scale(qq(-n * (n + 1)))
        if route == "product":
            return X * elem_pow(Y * X, n) + X_INV * elem_pow(Y_INV * X_INV, n)
        if n == 0:
            return w_gen(0)
        bd = self.build(Family.B_DELTA, 0, "recursive")
        prev = self.build(Family.B_ALPHA0, n - 1, "recursive")
        step = commutator(bd, prev).scale(qq(1) / _BK_DEN)
        if n == 1:
            return w_gen(1) + step
        return self.build(Family.B_ALPHA0, n - 2, "recursive") + step

    def _b_alpha1(self, n: int, route: str) -> TorusElement:
        if route == "closed":
            return TorusElement({(n, n + 1): 1, (-n, -n - 1): 1}).scale(qq(-n * (n + 1)))
        if route == "product":
            return Y * elem_pow(X * Y, n) + Y_INV * elem_pow(X_INV * Y_INV, n)
        if n == 0:
            return w_gen(1)
        bd = self.build(Family.B_DELTA, 0, "recursive")
        prev = self.build(Family.B_ALPHA1, n - 1, "recursive")
        step = commutator(bd, prev).scale(qq(1) / _BK_DEN)
        if n == 1:
            return w_gen(0) - step
        return self.build(Family.B_ALPHA1, n - 2, "recursive") - step

    def _b_ndelta(self, n: int, route: str) -> TorusElement:
        if n == 0:
            return TorusElement.scalar(qq(-2) - 1)
        if route == "recursive":
            if n == 1:
                return self.build(Family.B_DELTA, 0, "recursive")
            w0 = w_gen(0)
            prev = self.build(Family.B_ALPHA1, n - 1, "recursive")
            out = (prev * w0).scale(qq(-2)) - w0 * prev
            acc = ZERO_ELEMENT
            for ell in range(n - 1):
                acc = acc + self.build(Family.B_ALPHA1, ell, "recursive") * self.build(
                    Family.B_ALPHA1, n - ell - 2, "recursive"
                )
            return out + acc.scale(qq(-2) - 1)
        c = q_int(n + 1)
        if route == "closed":
            terms = {(n, n): qq(-n * n) * c, (-n, -n): qq(-n * n) * c}
            for ell in range(1, n):
                k = n - 2 * ell
                terms[(k, k)] = terms.get((k, k), 0) + (qq(2 * ell - n) + qq(n - 2 * ell)) * qq(-k * k)
            return TorusElement(terms).scale(qq(-2) - 1)
        # product: powers of xy, with (yx)^k folded in as q^(4l-2n) (xy)^(n-2l)
        xy = X * Y
        out = elem_pow(xy, n).scale(qq(-n) * c) + elem_pow(xy, -n).scale(qq(n) * c)
        for ell in range(1, n):
            out = out + elem_pow(xy, n - 2 * ell).scale(1 + qq(4 * ell - 2 * n))
        return out.scale(qq(-2) - 1)

    # -- real root vectors B_{1,r} -----------------------------------------

    def theta1_from_generators(self) -> TorusElement:
        """Theta_1 = q^2 B_0 B_1 - B_1 B_0 with B_i = w_i / (q^(1/2)(q - q^-1))."""
        w0, w1 = w_gen(0), w_gen(1)
        return ((w0 * w1).scale(qq(2)) - w1 * w0).scale((qq(1) * Q_MINUS * Q_MINUS).inverse())

    def _b1r(self, r: int, route: str) -> TorusElement:
        if route == "closed":
            return TorusElement({(r, r + 1): 1, (-r, -r - 1): 1}).scale(qq(-r * (r + 1)) / _B_NORM)
        if route == "product":
            return (Y * elem_pow(X * Y, r) + Y_INV * elem_pow(X_INV * Y_INV, r)).scale(_B_NORM.inverse())
        if r == 0:
            return w_gen(1).scale(_B_NORM.inverse())
        if r == -1:
            return w_gen(0).scale(_B_NORM.inverse())
        theta1 = self._memo_theta1()
        if r > 0:
            step = commutator(theta1, self.build(Family.B1R, r - 1, "recursive")).scale(Q_PLUS.inverse())
            return self.build(Family.B1R, r - 2, "recursive") + step
        # r = -k-1 with k >= 1:  B_{1,-k-1} = B_{1,-k+1} - [Theta_1, B_{1,-k}]/(q + q^-1)
        k = -r - 1
        step = commutator(theta1, self.build(Family.B1R, -k, "recursive")).scale(Q_PLUS.inverse())
        return self.build(Family.B1R, -k + 1, "recursive") - step

    def _memo_theta1(self) -> TorusElement:
        key = (Family.THETA, 1, "_generators")
        with self._lock:
            hit = self._memo.get(key)
            if hit is None:
                hit = self._memo[key] = self.theta1_from_generators()
            return hit

    # -- Theta families ----------------------------------------------------

    def _theta_prime(self, n: int, route: str) -> TorusElement:
        if n < 0:
            return ZERO_ELEMENT
        if n == 0:
            return TorusElement.scalar(Q_MINUS.inverse())
        if route == "definitional":
            b = self.build(Family.B_NDELTA, n, "recursive")
            return b.scale(-qq(1) / (Q_MINUS * Q_MINUS))
        c = q_int(n + 1)
        if route == "closed":
            terms = {(n, n): qq(-n * n) * c, (-n, -n): qq(-n * n) * c}
            for ell in range(1, n):
                k = n - 2 * ell
                terms[(k, k)] = terms.get((k, k), 0) + (qq(k) + qq(-k)) * qq(-k * k)
            return TorusElement(terms).scale(Q_MINUS.inverse())
        xy = X * Y
        out = elem_pow(xy, n).scale(qq(-n) * c) + elem_pow(xy, -n).scale(qq(n) * c)
        for ell in range(1, n):
            out = out + elem_pow(xy, n - 2 * ell).scale(1 + qq(4 * ell - 2 * n))
        return out.scale(Q_MINUS.inverse())

    def _theta(self, n: int, route: str) -> TorusElement:
        if n < 0:
            return ZERO_ELEMENT
        if n == 0:
            return TorusElement.scalar(Q_MINUS.inverse())
        if route == "definitional":
            out = self.build(Family.THETA_PRIME, n, "definitional")
            if n % 2 == 0:
                out = out - TorusElement.scalar(qq(1 - n))
            for ell in range(1, (n - 1) // 2 + 1):
                tp = self.build(Family.THETA_PRIME, n - 2 * ell, "definitional")
                out = out - tp.scale((qq(2) - 1) * qq(-2 * ell))
            return out
        c = q_int(n + 1)
        tail = (Q_PLUS / Q_MINUS) * qq(1 - n)
        if route == "closed":
            terms = {(n, n): qq(-n * n) * c / Q_MINUS, (-n, -n): qq(-n * n) * c / Q_MINUS}
            for ell in range(1, n):
                k = n - 2 * ell
                terms[(k, k)] = terms.get((k, k), 0) + tail * qq(-k * k)
            return TorusElement(terms)
        qyx = (Y * X).scale(qq(1))
        out = (elem_pow(qyx, n) + elem_pow(qyx, -n)).scale(c / Q_MINUS)
        acc = ZERO_ELEMENT
        for ell in range(1, n):
            acc = acc + elem_pow(qyx, n - 2 * ell)
        return out + acc.scale(tail)

    # -- H families --------------------------------------------------------

    def _log_series(self, kind: str) -> TruncatedSeries:
        with self._lock:
            hit = self._series.get(kind)
            if hit is not None:
                return hit
            N = self.series_order
            if kind == "prime/series":
                src = build_theta_prime_series(N)
            elif kind == "plain/series":
                src = build_theta_series(N)
            else:
                fam = Family.THETA_PRIME if kind.startswith("prime") else Family.THETA
                elems = [self.build(fam, k, "definitional") for k in range(N + 1)]
                src = series_from_elements(elems, N)
            hit = self._series[kind] = series_log(src)
            return hit

    def _h(self, n: int, route: str, prime: bool) -> TorusElement:
        even = n % 2 == 0
        if route in ("series", "definitional"):
            if n > self.series_order:
                raise UsageError(f"truncation order {self.series_order} is below index {n}")
            kind = ("prime/" if prime else "plain/") + route
            return self._log_series(kind)[n].scale(Q_MINUS.inverse())
        pref = qq(n) + qq(-n)
        shift = (2 * qq(n) + 2 * qq(-n)) if prime else (2 * qq(n) + 2)
        den = Q_MINUS * n
        if route == "closed":
            body = TorusElement({(n, n): 1, (-n, -n): 1}).scale(qq(-n * n) * pref)
        else:
            qyx = (Y * X).scale(qq(1))
            body = (elem_pow(qyx, n) + elem_pow(qyx, -n)).scale(pref)
        if even:
            body = body - TorusElement.scalar(shift)
        return body.scale(den.inverse())


def family_elements(builder: ElementBuilder, family: Family, indices, route: str):
    return {n: builder.build(family, n, route) for n in indices}
