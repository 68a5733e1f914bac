"""Exact arithmetic in the field Q(s), where s = q^(1/2).

A scalar is stored as ``s**v * N(s) / D(s)`` with ``N(0) != 0`` and
``D(0) != 0``.  Together with ``gcd(N, D) = 1`` over Q, a positive leading
coefficient on ``D`` and a joint integer content of 1 this representation is
canonical, so equality is structural.  Almost every scalar met in practice is
a Laurent polynomial in s (``D == (1,)``), which keeps the common paths free
of polynomial gcds.
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple, Union

Poly = Tuple[int, ...]  # dense, lowest degree first

_ONE: Poly = (1,)


class ScalarDomainError(ZeroDivisionError):
    """Raised on division by the zero scalar or evaluation at a pole."""


# ---------------------------------------------------------------------------
# integer polynomial helpers


def _trim(p: list) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    if len(a) == 1:
        c = a[0]
        return tuple(c * x for x in b)
    if len(b) == 1:
        c = b[0]
        return tuple(c * x for x in a)
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a, j):
                out[i] += ai * bj
    return tuple(out)


def _pscale(a: Poly, c: int) -> Poly:
    return tuple(c * x for x in a)


def _content(p: Poly) -> int:
    return math.gcd(*p) if p else 0


def _shift(p: Poly, k: int) -> Poly:
    return (0,) * k + p if k else p


def _prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of a by b (b nonzero), made primitive."""
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        if la % lb == 0:
            f = la // lb
            for i, c in enumerate(b):
                a[shift + i] -= f * c
        else:
            a = [lb * x for x in a]
            for i, c in enumerate(b):
                a[shift + i] -= la * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    if not a:
        return ()
    g = math.gcd(*a)
    return tuple(x // g for x in a)


def _primitive(p: Poly) -> Poly:
    g = _content(p)
    if g != 1:
        p = tuple(x // g for x in p)
    if p[-1] < 0:
        p = tuple(-x for x in p)
    return p


def _pgcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd over Z[s] with positive leading coefficient."""
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        return _ONE
    a, b = _primitive(a), _primitive(b)
    while b:
        if len(b) == 1:
            return _ONE
        a, b = b, _prem(a, b)
    return _primitive(a)


def _pdiv_exact(a: Poly, b: Poly) -> Poly:
    """Quotient a / b, assuming b primitive and b | a over Q."""
    if b == _ONE:
        return a
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        c, r = divmod(a[k + db], lb)
        if r:
            raise ArithmeticError("inexact polynomial division")
        q[k] = c
        if c:
            for i, bc in enumerate(b):
                a[k + i] -= c * bc
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return tuple(q)


# ---------------------------------------------------------------------------


class QHalfScalar:
    """An element of Q(q^(1/2)); immutable and hashable."""

    __slots__ = ("_v", "_n", "_d", "_hash")

    def __init__(self, value: Union[int, Fraction] = 0):
        value = Fraction(value)
        if value == 0:
            self._set(0, (), _ONE)
        else:
            self._set(0, (value.numerator,), (value.denominator,))

    def _set(self, v: int, n: Poly, d: Poly) -> None:
        self._v = v
        self._n = n
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, v: int, n: Poly, d: Poly) -> "QHalfScalar":
        obj = cls.__new__(cls)
        obj._set(v, n, d)
        return obj

    @classmethod
    def _make(cls, v: int, n: Poly, d: Poly) -> "QHalfScalar":
        """Normalize an arbitrary triple into canonical form."""
        if not n:
            return ZERO
        k = 0
        while n[k] == 0:
            k += 1
        if k:
            n = n[k:]
            v += k
        k = 0
        while d[k] == 0:
            k += 1
        if k:
            d = d[k:]
            v -= k
        if len(d) > 1:
            g = _pgcd(n, d)
            if g != _ONE:
                n = _pdiv_exact(n, g)
                d = _pdiv_exact(d, g)
        c = math.gcd(_content(n), _content(d))
        if d[-1] < 0:
            c = -c
        if c != 1:
            n = tuple(x // c for x in n)
            d = tuple(x // c for x in d)
        return cls._raw(v, n, d)

    @classmethod
    def laurent(cls, coeffs: Dict[int, int]) -> "QHalfScalar":
        """Build ``sum c * s**k`` from a mapping ``{k: c}``."""
        coeffs = {k: c for k, c in coeffs.items() if c}
        if not coeffs:
            return ZERO
        lo, hi = min(coeffs), max(coeffs)
        n = tuple(coeffs.get(k, 0) for k in range(lo, hi + 1))
        return cls._raw(lo, n, _ONE)

    @classmethod
    def from_fraction_polys(cls, num: Dict[int, int], den: Dict[int, int]) -> "QHalfScalar":
        """Build ``num(s) / den(s)`` from exponent->coefficient maps."""
        a = QHalfScalar.laurent(num)
        b = QHalfScalar.laurent(den)
        return a / b

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._n

    def is_laurent(self) -> bool:
        """True when the value lies in Z[s, 1/s]."""
        return self._d == _ONE

    def is_monomial(self) -> bool:
        return len(self._n) == 1 and self._d == _ONE

    @property
    def valuation(self) -> int:
        return self._v

    def as_fraction(self) -> Tuple[Dict[int, int], Dict[int, int]]:
        """Canonical ``(num, den)`` as ordinary polynomials in s.

        Negative powers of s live in the denominator.  Keys are s-exponents.
        """
        if self.is_zero():
            return {}, {0: 1}
        if self._v >= 0:
            num = _shift(self._n, self._v)
            den = self._d
        else:
            num = self._n
            den = _shift(self._d, -self._v)
        return (
            {k: c for k, c in enumerate(num) if c},
            {k: c for k, c in enumerate(den) if c},
        )

    @property
    def num(self) -> Dict[int, int]:
        return self.as_fraction()[0]

    @property
    def den(self) -> Dict[int, int]:
        return self.as_fraction()[1]

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "QHalfScalar":
        if isinstance(other, QHalfScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return QHalfScalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._n:
            return other
        if not other._n:
            return self
        v = min(self._v, other._v)
        na = _shift(self._n, self._v - v)
        nb = _shift(other._n, other._v - v)
        da, db = self._d, other._d
        if da == db:
            n = _padd(na, nb)
            d = da
            if len(d) == 1:
                if not n:
                    return ZERO
                return QHalfScalar._make(v, n, d) if d != _ONE else _laurent_raw(v, n)
        else:
            g = _pgcd(da, db)
            da_g = _pdiv_exact(da, g)
            db_g = _pdiv_exact(db, g)
            n = _padd(_pmul(na, db_g), _pmul(nb, da_g))
            d = _pmul(da, db_g)
        return QHalfScalar._make(v, n, d)

    __radd__ = __add__

    def __neg__(self):
        return QHalfScalar._raw(self._v, tuple(-x for x in self._n), self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._n or not other._n:
            return ZERO
        v = self._v + other._v
        if self._d == _ONE and other._d == _ONE:
            return QHalfScalar._raw(v, _pmul(self._n, other._n), _ONE)
        na, da, nb, db = self._n, self._d, other._n, other._d
        if len(da) == 1 and len(db) == 1:
            n = _pmul(na, nb)
            d = (da[0] * db[0],)
            g = math.gcd(_content(n), d[0])
            if g != 1:
                n = tuple(x // g for x in n)
                d = (d[0] // g,)
            return QHalfScalar._raw(v, n, d)
        g1 = _pgcd(na, db)
        g2 = _pgcd(nb, da)
        if g1 != _ONE:
            na, db = _pdiv_exact(na, g1), _pdiv_exact(db, g1)
        if g2 != _ONE:
            nb, da = _pdiv_exact(nb, g2), _pdiv_exact(da, g2)
        n = _pmul(na, nb)
        d = _pmul(da, db)
        c = math.gcd(_content(n), _content(d))
        if c != 1:
            n = tuple(x // c for x in n)
            d = tuple(x // c for x in d)
        return QHalfScalar._raw(v, n, d)

    __rmul__ = __mul__

    def inverse(self) -> "QHalfScalar":
        if not self._n:
            raise ScalarDomainError("inverse of the zero scalar")
        n, d = self._d, self._n
        if d[-1] < 0:
            n = tuple(-x for x in n)
            d = tuple(-x for x in d)
        return QHalfScalar._raw(-self._v, n, d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if self.is_monomial():
            return QHalfScalar._raw(self._v * k, (self._n[0] ** k,), _ONE)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "QHalfScalar":
        """Multiply by s**k."""
        if not self._n or not k:
            return self
        return QHalfScalar._raw(self._v + k, self._n, self._d)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QHalfScalar(other)
        if not isinstance(other, QHalfScalar):
            return NotImplemented
        return self._n == other._n and self._d == other._d and (
            self._v == other._v or not self._n
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._v, self._n, self._d))
        return self._hash

    def __bool__(self):
        return bool(self._n)

    def __repr__(self):
        return f"QHalfScalar({to_text(self)!r})"

    def __str__(self):
        return to_text(self)


def _laurent_raw(v: int, n: Poly) -> QHalfScalar:
    k = 0
    while n[k] == 0:
        k += 1
    return QHalfScalar._raw(v + k, n[k:], _ONE)


ZERO = QHalfScalar._raw(0, (), _ONE)
ONE = QHalfScalar._raw(0, (1,), _ONE)


# ---------------------------------------------------------------------------
# named constructors


def sc_arith(a: QHalfScalar, b: QHalfScalar, op: str):
    """Dispatch one field operation by name (add, sub, mul, div, neg, inv, eq)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if op == "eq":
        return a == b
    raise ValueError(f"unknown scalar operation {op!r}")


@lru_cache(maxsize=None)
def q_power(k: int) -> QHalfScalar:
    """Return q^(k/2), i.e. s**k."""
    return QHalfScalar._raw(k, (1,), _ONE)


def qq(k: int) -> QHalfScalar:
    """Return q**k for integer k."""
    return q_power(2 * k)


@lru_cache(maxsize=None)
def q_int(n: int) -> QHalfScalar:
    """Return [n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    if n == 0:
        return ZERO
    # in s: s^(2n-2) + s^(2n-6) + ... + s^(2-2n)
    n_coeffs = [0] * (4 * (n - 1) + 1)
    for i in range(0, len(n_coeffs), 4):
        n_coeffs[i] = 1
    return QHalfScalar._raw(2 - 2 * n, tuple(n_coeffs), _ONE)


def delta_ev(m: int) -> QHalfScalar:
    """1 if m is even, else 0."""
    return ONE if m % 2 == 0 else ZERO


#: q - q^-1, the ubiquitous normalizer.
Q_MINUS = qq(1) - qq(-1)
#: q + q^-1
Q_PLUS = qq(1) + qq(-1)
#: q^(1/2)
SQRT_Q = q_power(1)


def sc_eval(a: QHalfScalar, s0) -> Fraction:
    """Evaluate ``a`` at s = s0 exactly.

    Warns (does not refuse) when |s0| == 1, where q is a root of unity and the
    algebra degenerates.
    """
    s0 = Fraction(s0)
    if s0 == 0:
        raise ScalarDomainError("cannot evaluate at s = 0")
    if abs(s0) == 1:
        warnings.warn("evaluating at |s| = 1 (q a root of unity)", RuntimeWarning, stacklevel=2)
    num, den = a.as_fraction()
    dv = sum(Fraction(c) * s0**k for k, c in den.items())
    if dv == 0:
        raise ScalarDomainError(f"scalar has a pole at s = {s0}")
    nv = sum((Fraction(c) * s0**k for k, c in num.items()), Fraction(0))
    return nv / dv


# ---------------------------------------------------------------------------
# rendering


def _fmt_q_exp(k: int) -> str:
    """Render s**k as a power of q."""
    if k % 2 == 0:
        e = k // 2
        if e == 0:
            return ""
        if e == 1:
            return "q"
        return f"q^{e}"
    return f"q^({k}/2)"


def _laurent_text(v: int, coeffs: Poly) -> str:
    """Render sum coeffs[i] * s^(v+i), highest power first."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = _fmt_q_exp(v + i)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


def to_text(a: QHalfScalar) -> str:
    """Human-readable form in q, e.g. ``(q^2 - q^-2)/(q - q^-1)``.

    The denominator is balanced about s^0 so that factors like q - q^-1
    print symmetrically.
    """
    if a.is_zero():
        return "0"
    d = a._d
    half = (len(d) - 1) // 2 if len(d) > 1 else 0
    num = _laurent_text(a._v - half, a._n)
    if d == _ONE:
        return num
    den = _laurent_text(-half, d)
    multi_num = sum(1 for c in a._n if c) > 1
    multi_den = sum(1 for c in d if c) > 1
    if multi_num:
        num = f"({num})"
    if multi_den:
        den = f"({den})"
    return f"{num}/{den}"


def to_json(a: QHalfScalar) -> dict:
    num, den = a.as_fraction()
    return {
        "num": {str(k): str(c) for k, c in sorted(num.items())},
        "den": {str(k): str(c) for k, c in sorted(den.items())},
    }


def from_json(obj: dict) -> QHalfScalar:
    num = {int(k): int(c) for k, c in obj["num"].items()}
    den = {int(k): int(c) for k, c in obj["den"].items()}
    if not any(den.values()):
        raise ScalarDomainError("zero denominator in scalar JSON")
    return QHalfScalar.from_fraction_polys(num, den)
