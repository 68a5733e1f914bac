"""The quantum torus T_q: x, y invertible with xy = q^2 yx.

Elements are kept in the standard basis ``x^a y^b``.  Every reordering sign
in the package comes from :func:`mono_mul`, which moves ``y^b1`` past
``x^a2`` at the cost of ``q^(-2*b1*a2)``.
"""

from __future__ import annotations

import contextlib
import json
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from . import scalars
from .scalars import ONE, ZERO, QHalfScalar, q_power, qq

Monomial = Tuple[int, int]

# s-exponent per unit of b1*a2 when reordering y^b1 x^a2 -> x^a2 y^b1.
# q^(-2) == s^(-4).  Only ever changed by the mutation harness.
_TWIST_S = -4


class UnsupportedInverseError(ArithmeticError):
    """Raised when inverting or taking a negative power of a multi-term element."""


@contextlib.contextmanager
def twist_convention(s_exponent: int):
    """Temporarily replace the reordering twist (in powers of s per b1*a2).

    The correct value is -4, i.e. ``yx = q^-2 xy``.  Used only to check that
    the identity suites notice a wrong convention.
    """
    global _TWIST_S
    old = _TWIST_S
    _TWIST_S = s_exponent
    try:
        yield
    finally:
        _TWIST_S = old


def mono_mul(m1: Monomial, m2: Monomial) -> Tuple[QHalfScalar, Monomial]:
    """Product of two standard monomials as (twist, monomial)."""
    (a1, b1), (a2, b2) = m1, m2
    return q_power(_TWIST_S * b1 * a2), (a1 + a2, b1 + b2)


Coeff = Union[QHalfScalar, int, Fraction]


class TorusElement:
    """A finite sum of scalars times standard monomials ``x^a y^b``.

    Immutable.  Supports ``+ - *``, scalar multiplication, integer powers and
    structural equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Coeff]] = None):
        clean: Dict[Monomial, QHalfScalar] = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(c, QHalfScalar):
                    c = QHalfScalar(c)
                if c:
                    clean[(int(m[0]), int(m[1]))] = c
        self._terms = clean

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, QHalfScalar]) -> "TorusElement":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, a: int, b: int, coeff: Coeff = 1) -> "TorusElement":
        return cls({(a, b): coeff})

    @classmethod
    def scalar(cls, c: Coeff) -> "TorusElement":
        return cls({(0, 0): c})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, QHalfScalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, QHalfScalar]]:
        return iter(self._terms.items())

    def coeff(self, a: int, b: int) -> QHalfScalar:
        return self._terms.get((a, b), ZERO)

    def support(self):
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # -- vector space ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if len(self._terms) < len(other._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            prev = out.get(m)
            if prev is None:
                out[m] = c
            else:
                s = prev + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return TorusElement._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return TorusElement._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: Coeff) -> "TorusElement":
        if not isinstance(c, QHalfScalar):
            c = QHalfScalar(c)
        if not c:
            return ZERO_ELEMENT
        return TorusElement._wrap({m: v * c for m, v in self._terms.items()})

    # -- algebra -----------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (QHalfScalar, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TorusElement):
            return NotImplemented
        acc: Dict[Monomial, list] = {}
        tw = _TWIST_S
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                term = (c1 * c2).shift(tw * b1 * a2)
                bucket = acc.get(key)
                if bucket is None:
                    acc[key] = [term]
                else:
                    bucket.append(term)
        out = {}
        for key, parts in acc.items():
            total = _sum_scalars(parts)
            if total:
                out[key] = total
        return TorusElement._wrap(out)

    def __rmul__(self, other):
        if isinstance(other, (QHalfScalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        if isinstance(c, (QHalfScalar, int, Fraction)):
            if not isinstance(c, QHalfScalar):
                c = QHalfScalar(c)
            return self.scale(c.inverse())
        return NotImplemented

    def __pow__(self, n: int):
        return elem_pow(self, n)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (QHalfScalar, int, Fraction)):
            other = TorusElement.scalar(other)
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"TorusElement({render(self)!r})"

    def __str__(self):
        return render(self)


def _sum_scalars(parts: list) -> QHalfScalar:
    if len(parts) == 1:
        return parts[0]
    # summing like denominators first avoids cross-denominator gcds
    groups: Dict[tuple, QHalfScalar] = {}
    for p in parts:
        key = p._d
        prev = groups.get(key)
        groups[key] = p if prev is None else prev + p
    total = ZERO
    for g in groups.values():
        total = total + g
    return total


def _coerce(other):
    if isinstance(other, TorusElement):
        return other
    if isinstance(other, (QHalfScalar, int, Fraction)):
        return TorusElement.scalar(other)
    return NotImplemented


ZERO_ELEMENT = TorusElement()
ONE_ELEMENT = TorusElement({(0, 0): ONE})

X = TorusElement.monomial(1, 0)
Y = TorusElement.monomial(0, 1)
X_INV = TorusElement.monomial(-1, 0)
Y_INV = TorusElement.monomial(0, -1)


def elem_linear(u: TorusElement, v: TorusElement, c: Coeff, op: str) -> TorusElement:
    """add / sub combine u and v; scale multiplies u by c."""
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "scale":
        return u.scale(c)
    raise ValueError(f"unknown linear operation {op!r}")


def elem_mul(u: TorusElement, v: TorusElement) -> TorusElement:
    return u * v


def elem_pow(u: TorusElement, n: int) -> TorusElement:
    """u**n; negative n only for single-term u."""
    if n < 0:
        if len(u) != 1:
            raise UnsupportedInverseError("only single-term elements are invertible")
        ((a, b), c), = u.items()
        # (x^a y^b)(x^-a y^-b) = q^(2ab) under the standard twist
        inv = TorusElement._wrap({(-a, -b): c.inverse().shift(_TWIST_S * b * a)})
        return elem_pow(inv, -n)
    if len(u) == 1:
        ((a, b), c), = u.items()
        # (x^a y^b)^n picks up the twist once per ordered pair i < j
        twist = _TWIST_S * b * a * (n * (n - 1) // 2)
        return TorusElement._wrap({(a * n, b * n): (c**n).shift(twist)}) if n else ONE_ELEMENT
    out = ONE_ELEMENT
    base = u
    while n:
        if n & 1:
            out = out * base
        n >>= 1
        if n:
            base = base * base
    return out


def commutator(u: TorusElement, v: TorusElement, r: Optional[Coeff] = None) -> TorusElement:
    """[u, v] = uv - vu, or the r-commutator r*uv - r^-1*vu."""
    if r is None:
        return u * v - v * u
    if not isinstance(r, QHalfScalar):
        r = QHalfScalar(r)
    if not r:
        raise scalars.ScalarDomainError("r-commutator needs nonzero r")
    return (u * v).scale(r) - (v * u).scale(r.inverse())


def z_power(k: int) -> TorusElement:
    """z^k with z = q y x = q^-1 x y."""
    z = TorusElement._wrap({(1, 1): qq(-1)})
    return elem_pow(z, k)


def commutes(u: TorusElement, v: TorusElement) -> bool:
    """Exact test for uv == vu, with a cheap sufficient check first."""
    if u.is_scalar() or v.is_scalar():
        return True
    if all(b1 * a2 == a1 * b2 for (a1, b1) in u.support() for (a2, b2) in v.support()):
        return True
    return commutator(u, v).is_zero()


# ---------------------------------------------------------------------------
# rendering / interchange


def _mono_text(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if b:
        parts.append("y" if b == 1 else f"y^{b}")
    return "·".join(parts)


def _is_atomic(text: str) -> bool:
    body = text[1:] if text.startswith("-") else text
    return " " not in body


def render_text(u: TorusElement) -> str:
    """Text form, terms listed from the largest (a, b) down."""
    if u.is_zero():
        return "0"
    many = len(u) > 1
    pieces = []
    for (a, b) in sorted(u.support(), reverse=True):
        ctext = scalars.to_text(u.coeff(a, b))
        mono = _mono_text(a, b)
        atomic = _is_atomic(ctext)
        negative = atomic and ctext.startswith("-")
        if negative:
            ctext = ctext[1:]
        if not mono:
            body = ctext if atomic or not many else f"({ctext})"
        elif ctext == "1":
            body = mono
        elif atomic:
            body = f"{ctext}·{mono}"
        else:
            body = f"({ctext})·{mono}"
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces)


def to_json(u: TorusElement) -> dict:
    """JSON-ready dict; terms sorted by (a, b) ascending."""
    return {
        "terms": [
            {"a": a, "b": b, "coeff": scalars.to_json(u.coeff(a, b))}
            for (a, b) in sorted(u.support())
        ]
    }


def from_json(obj: dict) -> TorusElement:
    terms: Dict[Monomial, QHalfScalar] = {}
    for t in obj["terms"]:
        key = (int(t["a"]), int(t["b"]))
        terms[key] = terms.get(key, ZERO) + scalars.from_json(t["coeff"])
    return TorusElement(terms)


def render(u: TorusElement, format: str = "text") -> str:
    if format == "text":
        return render_text(u)
    if format == "json":
        return json.dumps(to_json(u), sort_keys=True)
    raise ValueError(f"unknown format {format!r}")


def sum_elements(elems: Iterable[TorusElement]) -> TorusElement:
    total = ZERO_ELEMENT
    for e in elems:
        total = total + e
    return total
