"""Truncated power series in a central indeterminate t over T_q.

exp and log use the usual formal recurrences, which are only valid when the
coefficients commute with one another; that is checked on entry rather than
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .scalars import ONE, Q_MINUS, QHalfScalar, qq
from .torus import (
    ONE_ELEMENT,
    ZERO_ELEMENT,
    X,
    X_INV,
    Y,
    Y_INV,
    TorusElement,
    commutes,
    elem_pow,
    to_json as element_to_json,
    from_json as element_from_json,
)

DEFAULT_ORDER = 16


class SeriesDomainError(ValueError):
    """exp/log called outside their domain (bad constant term, non-commuting coefficients)."""


@dataclass(frozen=True)
class TruncatedSeries:
    """sum_{n <= order} coeffs[n] t^n, kept modulo t^(order+1)."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order+1 coefficients")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[TorusElement], order: int) -> "TruncatedSeries":
        """Pad with zeros or truncate to the given order."""
        cs = list(coeffs[: order + 1])
        cs += [ZERO_ELEMENT] * (order + 1 - len(cs))
        return cls(order, tuple(cs))

    @classmethod
    def constant(cls, c: TorusElement, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([c], order)

    def __getitem__(self, n: int) -> TorusElement:
        return self.coeffs[n]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_orders(self, other)
        return TruncatedSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_orders(self, other)
        return TruncatedSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return self.scale(other)

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(a.scale(c) for a in self.coeffs))

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise ValueError(f"series orders differ: {a.order} vs {b.order}")


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product; a's coefficients stay on the left."""
    _check_orders(a, b)
    n = a.order
    out = []
    for k in range(n + 1):
        acc = ZERO_ELEMENT
        for i in range(k + 1):
            ai, bj = a.coeffs[i], b.coeffs[k - i]
            if ai and bj:
                acc = acc + ai * bj
        out.append(acc)
    return TruncatedSeries(n, tuple(out))


def series_geom(m: TorusElement, order: int) -> TruncatedSeries:
    """1/(1 - m t) = sum m^n t^n for a single-term m."""
    if len(m) != 1:
        raise ValueError("series_geom needs a single-term element")
    return TruncatedSeries(order, tuple(elem_pow(m, k) for k in range(order + 1)))


def series_poly_factor(a: TruncatedSeries, c, k: int) -> TruncatedSeries:
    """Multiply by (1 - c t^k), k in {1, 2}."""
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    if not isinstance(c, QHalfScalar):
        c = QHalfScalar(c)
    out = list(a.coeffs)
    for n in range(a.order, k - 1, -1):
        out[n] = out[n] - a.coeffs[n - k].scale(c)
    return TruncatedSeries(a.order, tuple(out))


def _require_commuting(coeffs: Sequence[TorusElement]) -> None:
    live = [c for c in coeffs if c]
    for i in range(len(live)):
        for j in range(i + 1, len(live)):
            if not commutes(live[i], live[j]):
                raise SeriesDomainError(f"coefficients {i} and {j} do not commute")


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """exp(A) for A with zero constant term and commuting coefficients.

    Uses n E_n = sum_{k=1}^n k A_k E_{n-k}.
    """
    if a.coeffs[0]:
        raise SeriesDomainError("exp needs a zero constant term")
    _require_commuting(a.coeffs)
    e: List[TorusElement] = [ONE_ELEMENT]
    for n in range(1, a.order + 1):
        acc = ZERO_ELEMENT
        for k in range(1, n + 1):
            if a.coeffs[k] and e[n - k]:
                acc = acc + (a.coeffs[k] * e[n - k]).scale(k)
        e.append(acc.scale(Fraction(1, n)))
    return TruncatedSeries(a.order, tuple(e))


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    """log(A) for A with constant term 1 and commuting coefficients.

    From A' = L' A:  n L_n = n A_n - sum_{k=1}^{n-1} k L_k A_{n-k}.
    """
    if a.coeffs[0] != ONE_ELEMENT:
        raise SeriesDomainError("log needs constant term 1")
    _require_commuting(a.coeffs[1:])
    logs: List[TorusElement] = [ZERO_ELEMENT]
    for n in range(1, a.order + 1):
        acc = a.coeffs[n].scale(n)
        for k in range(1, n):
            if logs[k] and a.coeffs[n - k]:
                acc = acc - (logs[k] * a.coeffs[n - k]).scale(k)
        logs.append(acc.scale(Fraction(1, n)))
    return TruncatedSeries(a.order, tuple(logs))


# ---------------------------------------------------------------------------
# product forms of the Theta generating functions

def _four_geometric(order: int) -> TruncatedSeries:
    # the four factors pairwise commute, so their order is immaterial
    out = series_geom(X * Y, order)
    for m in (Y * X, X_INV * Y_INV, Y_INV * X_INV):
        out = series_mul(out, series_geom(m, order))
    return out


def build_theta_prime_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """(1 - q^2 t^2)(1 - q^-2 t^2) / ((1-xyt)(1-yxt)(1-x^-1y^-1t)(1-y^-1x^-1t))."""
    out = _four_geometric(order)
    out = series_poly_factor(out, qq(2), 2)
    return series_poly_factor(out, qq(-2), 2)


def build_theta_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """(1 - t^2)(1 - q^2 t^2) over the same four geometric factors."""
    out = _four_geometric(order)
    out = series_poly_factor(out, ONE, 2)
    return series_poly_factor(out, qq(2), 2)


def series_from_elements(elems: Sequence[TorusElement], order: int, scale=Q_MINUS) -> TruncatedSeries:
    """scale * sum elems[n] t^n."""
    return TruncatedSeries.from_coeffs([e.scale(scale) for e in elems], order)


def to_json(a: TruncatedSeries) -> dict:
    return {"order": a.order, "coeffs": [element_to_json(c) for c in a.coeffs]}


def from_json(obj: dict) -> TruncatedSeries:
    return TruncatedSeries(int(obj["order"]), tuple(element_from_json(c) for c in obj["coeffs"]))
