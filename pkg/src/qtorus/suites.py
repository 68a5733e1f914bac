"""Identity suites.  Each suite returns a :class:`CheckReport`.

A suite evaluates every identity in its range as an exact difference
``lhs - rhs`` and passes iff every difference is the zero element.  The first
nonzero difference is kept as the witness.
"""

from __future__ import annotations

import time
import traceback
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from .families import ROUTES, ElementBuilder, Family, w_gen
from .scalars import ONE, Q_MINUS, QHalfScalar, q_int, qq
from .series import (
    build_theta_prime_series,
    build_theta_series,
    series_exp,
    series_from_elements,
    series_log,
    series_poly_factor,
)
from .torus import (
    ONE_ELEMENT,
    ZERO_ELEMENT,
    X,
    X_INV,
    Y,
    Y_INV,
    TorusElement,
    commutator,
    render_text,
    to_json as element_json,
)
from . import zforms as zf

DEFAULTS = {
    "closed_max": 12,
    "series_order": 16,
    "prop68_max": 6,
    "section15_max": 6,
    "commutation_max": 8,
    "r_range": (-3, 3),
}


@dataclass
class Witness:
    identity: str
    params: Dict[str, int]
    difference: TorusElement
    error: Optional[str] = None

    def to_json(self) -> dict:
        out = element_json(self.difference)
        out["identity"] = self.identity
        out["at"] = dict(self.params)
        if self.error:
            out["error"] = self.error
        return out

    def describe(self) -> str:
        where = ", ".join(f"{k}={v}" for k, v in self.params.items())
        if self.error:
            return f"{self.identity} [{where}] raised {self.error}"
        return f"{self.identity} [{where}] differs by {render_text(self.difference)}"


@dataclass
class CheckReport:
    suite: str
    params: str
    status: str = "pass"
    witness: Optional[Witness] = None
    elapsed_ms: int = 0
    checked: int = 0
    failed: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "status": self.status,
            "witness": self.witness.to_json() if self.witness else None,
            "elapsed_ms": self.elapsed_ms,
        }

    def line(self) -> str:
        head = f"{self.status.upper():4}  {self.suite:<12} {self.params}  ({self.checked} checks, {self.elapsed_ms} ms)"
        if self.witness is not None:
            head += f"\n      {self.failed} failing; first: {self.witness.describe()}"
        return head


class Checker:
    """Collects exact differences for one suite run."""

    def __init__(self, suite: str, params: str):
        self.report = CheckReport(suite, params)
        self._t0 = time.perf_counter()

    def zero(self, identity: str, diff: TorusElement, **params) -> None:
        self.report.checked += 1
        if not isinstance(diff, TorusElement):
            diff = TorusElement.scalar(diff)
        if not diff.is_zero():
            self._fail(Witness(identity, params, diff))

    def equal(self, identity: str, lhs, rhs, **params) -> None:
        self.zero(identity, lhs - rhs, **params)

    def guard(self, identity: str, fn: Callable[[], None], **params) -> None:
        """Run fn, turning an unexpected exception into a failure."""
        try:
            fn()
        except Exception as exc:  # a crash in an identity is a failed identity
            self.report.checked += 1
            msg = "".join(traceback.format_exception_only(type(exc), exc)).strip()
            self._fail(Witness(identity, params, ZERO_ELEMENT, error=msg))

    def _fail(self, w: Witness) -> None:
        self.report.failed += 1
        self.report.status = "fail"
        if self.report.witness is None:
            self.report.witness = w

    def finish(self) -> CheckReport:
        self.report.elapsed_ms = int(round((time.perf_counter() - self._t0) * 1000))
        return self.report


# ---------------------------------------------------------------------------
# Dolan-Grady


def suite_dolan_grady() -> CheckReport:
    ck = Checker("dolan-grady", "w0, w1")
    w0, w1 = w_gen(0), w_gen(1)
    q, qi = qq(1), qq(-1)
    c = -(qq(2) - qq(-2)) ** 2
    inner01 = commutator(w0, commutator(w0, w1, q), qi)
    inner10 = commutator(w1, commutator(w1, w0, q), qi)
    ck.equal("abbottp", inner01, w1.scale(c))
    ck.equal("costellop", inner10, w0.scale(c))
    ck.equal("abbott", commutator(w0, inner01), commutator(w0, w1).scale(c))
    ck.equal("costello", commutator(w1, inner10), commutator(w1, w0).scale(c))
    return ck.finish()


# ---------------------------------------------------------------------------
# closed forms


def _index_range(family: Family, max_n: int):
    if family is Family.B1R:
        return range(-max_n, max_n + 1)
    if family in (Family.H, Family.H_PRIME):
        return range(1, max_n + 1)
    if family in (Family.THETA, Family.THETA_PRIME):
        return range(-2, max_n + 1)
    if family is Family.B_DELTA:
        return range(0, 1)
    if family in (Family.W0, Family.W1):
        return range(0)
    return range(0, max_n + 1)


def suite_closed_forms(max_n: int = DEFAULTS["closed_max"], builder: Optional[ElementBuilder] = None) -> CheckReport:
    ck = Checker("closed-forms", f"|index| <= {max_n}")
    b = builder or ElementBuilder(series_order=max(2, max_n))
    for family in Family:
        routes = ROUTES[family]
        for n in _index_range(family, max_n):
            def run(family=family, n=n, routes=routes):
                ref = b.build(family, n, routes[0])
                for route in routes[1:]:
                    ck.equal(f"{family.value}:{routes[0]}={route}", ref, b.build(family, n, route), index=n)
            ck.guard(f"{family.value}", run, index=n)

    # B_delta image and Theta_1 from the generators
    ck.equal(
        "b-delta-image", b.build(Family.B_DELTA, 0, "recursive"),
        (Y * X + Y_INV * X_INV).scale(-(qq(2) - qq(-2))),
    )
    if max_n >= 1:
        ck.equal("theta1-generators", b.theta1_from_generators(), b.build(Family.THETA, 1, "closed"))
        ck.equal("theta1=theta-prime1", b.build(Family.THETA_PRIME, 1, "definitional"),
                 b.build(Family.THETA, 1, "definitional"))

    # compact forms, cleared of their denominators
    xy, yx = X * Y, Y * X
    for n in range(1, max_n + 1):
        xyn = zf.xy_power
        # Theta'_n: ((q - q^-1) Theta'_n - lead) * Da * Db == Na * Db + Nb * Da
        lead = xyn(n).scale(qq(-n) * q_int(n + 1)) + xyn(-n).scale(qq(n) * q_int(n + 1))
        da = xy - xyn(-1)
        db = yx - zf.yx_power(-1)
        na = xyn(n - 1) - xyn(1 - n)
        nb = zf.yx_power(n - 1) - zf.yx_power(1 - n)
        tp = b.build(Family.THETA_PRIME, n, "definitional")
        rest = tp.scale(Q_MINUS) - lead
        ck.equal("thetaprime2-cleared", rest * da * db, na * db + nb * da, n=n)
        bn = b.build(Family.B_NDELTA, n, "recursive")
        rest_b = bn.scale((qq(-2) - 1).inverse()) - lead
        ck.equal("thetaprime22-cleared", rest_b * da * db, na * db + nb * da, n=n)
        # Theta_n compact form with w = q y x
        w = yx.scale(qq(1))
        dw = w - zf.zq(-1)
        th = b.build(Family.THETA, n, "definitional").scale(Q_MINUS)
        rhs = (zf.zq(n + 1) - zf.zq(-n - 1)).scale(q_int(n + 1)) - (
            zf.zq(n - 1) - zf.zq(1 - n)
        ).scale(qq(2) * q_int(n - 1))
        ck.equal("taiman2-cleared", th * dw, rhs, n=n)
    return ck.finish()


# ---------------------------------------------------------------------------
# generating functions


def suite_series(max_order: int = DEFAULTS["series_order"], builder: Optional[ElementBuilder] = None) -> CheckReport:
    ck = Checker("series", f"order {max_order}")
    N = max_order
    b = builder or ElementBuilder(series_order=N)
    tp = build_theta_prime_series(N)
    th = build_theta_series(N)
    ck.equal("theta-prime-series:t^0", tp[0], ONE_ELEMENT)
    ck.equal("theta-series:t^0", th[0], ONE_ELEMENT)
    for n in range(N + 1):
        ck.equal("theta-prime-series", tp[n], b.build(Family.THETA_PRIME, n, "definitional").scale(Q_MINUS), n=n)
        ck.equal("theta-series", th[n], b.build(Family.THETA, n, "definitional").scale(Q_MINUS), n=n)
    # (1 - q^-2 t^2) Theta(t) == (1 - t^2) Theta'(t)
    lhs = series_poly_factor(th, qq(-2), 2)
    rhs = series_poly_factor(tp, ONE, 2)
    for n in range(N + 1):
        ck.equal("theta-ratio-cleared", lhs[n], rhs[n], n=n)

    for name, src in (("theta-prime", tp), ("theta", th)):
        def roundtrip(name=name, src=src):
            lg = series_log(src)
            back = series_exp(lg)
            for n in range(N + 1):
                ck.equal(f"exp-log:{name}", back[n], src[n], n=n)
            again = series_log(back)
            for n in range(N + 1):
                ck.equal(f"log-exp:{name}", again[n], lg[n], n=n)
        ck.guard(f"exp-log:{name}", roundtrip)

    for fam, src in ((Family.H_PRIME, tp), (Family.H, th)):
        def exp_h(fam=fam, src=src):
            hs = [ZERO_ELEMENT] + [b.build(fam, n, "closed") for n in range(1, N + 1)]
            ex = series_exp(series_from_elements(hs, N))
            for n in range(N + 1):
                ck.equal(f"exp-h:{fam.value}", ex[n], src[n], n=n)
        ck.guard(f"exp-h:{fam.value}", exp_h)
    return ck.finish()


# ---------------------------------------------------------------------------
# commutation relations of the images inside T_q


def suite_prop68(
    max_m: int = DEFAULTS["prop68_max"],
    r_range: Tuple[int, int] = DEFAULTS["r_range"],
    builder: Optional[ElementBuilder] = None,
) -> CheckReport:
    lo, hi = r_range
    ck = Checker("prop68", f"1 <= m,n <= {max_m}, r,s in [{lo}, {hi}]")
    b = builder or ElementBuilder(series_order=max(2, max_m))

    def B(r):
        return b.build(Family.B1R, r, "recursive")

    def Tp(n):
        return b.build(Family.THETA_PRIME, n, "definitional")

    def T(n):
        return b.build(Family.THETA, n, "definitional")

    def H(n):
        return b.build(Family.H, n, "series")

    def Hp(n):
        return b.build(Family.H_PRIME, n, "series")

    for m in range(1, max_m + 1):
        for n in range(1, max_m + 1):
            ck.zero("hhoq:theta-prime", commutator(Tp(m), Tp(n)), m=m, n=n)
            ck.zero("hhoq:theta", commutator(T(m), T(n)), m=m, n=n)
            ck.zero("hhoq:h", commutator(H(m), H(n)), m=m, n=n)

    q2, qm2 = qq(2), qq(-2)
    for m in range(1, max_m + 1):
        coef = q_int(2 * m) * QHalfScalar(1) / m
        for r in range(lo, hi + 1):
            rhs = (B(r + m) - B(r - m)).scale(coef)
            ck.equal("tasty_boq:h-prime", commutator(Hp(m), B(r)), rhs, m=m, r=r)
            ck.equal("tasty_boq:h", commutator(H(m), B(r)), rhs, m=m, r=r)
            for name, F in (("awesomesauceprimeoq", Tp), ("awesomesauceoq", T)):
                lhs = commutator(F(m), B(r)) + commutator(F(m - 2), B(r))
                rhs2 = commutator(F(m - 1), B(r + 1), q2) + commutator(F(m - 1), B(r - 1), qm2)
                ck.equal(name, lhs, rhs2, m=m, r=r)

    q, qi = qq(1), qq(-1)
    for r in range(lo, hi + 1):
        for s in range(lo, hi + 1):
            lhs = commutator(B(r), B(s + 1), q).scale(q) - commutator(B(r + 1), B(s), qi).scale(q)
            rhs = T(s - r + 1) - T(s - r - 1).scale(qm2) + T(r - s + 1) - T(r - s - 1).scale(qm2)
            ck.equal("unlabeled1", lhs, rhs, r=r, s=s)
    return ck.finish()


# ---------------------------------------------------------------------------
# z-notation identities


def _sum(elems) -> TorusElement:
    out = ZERO_ELEMENT
    for e in elems:
        out = out + e
    return out


def _oc_long(m: int, r: int, prime: bool) -> TorusElement:
    """Right-hand zero of the long-form m >= 3 identity (prime or plain)."""
    P = zf.qy_pair
    q2, qm2 = qq(2), qq(-2)
    if prime:
        s1 = _sum(zf.zq(m - 2 * l).scale(qq(m - 2 * l) + qq(2 * l - m)) for l in range(1, m))
        s3 = _sum(zf.zq(m - 2 * l - 2).scale(qq(m - 2 * l - 2) + qq(2 * l - m + 2)) for l in range(1, m - 2))
        s2 = _sum(zf.zq(m - 2 * l - 1).scale(qq(m - 2 * l - 1) + qq(2 * l - m + 1)) for l in range(1, m - 1))
    else:
        s1 = _sum(zf.zq(m - 2 * l) for l in range(1, m)).scale(qq(2 - m) + qq(-m))
        s3 = _sum(zf.zq(m - 2 * l - 2) for l in range(1, m - 2)).scale(qq(4 - m) + qq(2 - m))
        s2 = _sum(zf.zq(m - 2 * l - 1) for l in range(1, m - 1)).scale(qq(3 - m) + qq(1 - m))
    out = commutator(zf.z_sym(m), P(r)).scale(q_int(m + 1))
    out = out + commutator(s1, P(r))
    out = out + commutator(zf.z_sym(m - 2), P(r)).scale(q_int(m - 1))
    out = out + commutator(s3, P(r))
    out = out - commutator(zf.z_sym(m - 1), P(r + 1), q2).scale(q_int(m))
    out = out - commutator(s2, P(r + 1), q2)
    out = out - commutator(zf.z_sym(m - 1), P(r - 1), qm2).scale(q_int(m))
    out = out - commutator(s2, P(r - 1), qm2)
    return out


def _oc_m2(r: int) -> TorusElement:
    P = zf.qy_pair
    return (
        commutator(zf.z_sym(2), P(r)).scale(q_int(3))
        - commutator(zf.z_sym(1), P(r + 1), qq(2)).scale(q_int(2))
        - commutator(zf.z_sym(1), P(r - 1), qq(-2)).scale(q_int(2))
    )


def _oc_compact(m: int, r: int, ck: Checker) -> TorusElement:
    """Compact prime-form identity; fractions resolved by exact z-division."""
    P = zf.qy_pair
    zs = zf.z_sym
    den = (zf.zq(1).scale(qq(1)) - zf.zq(-1).scale(qq(-1))) * (zf.zq(1).scale(qq(-1)) - zf.zq(-1).scale(qq(1)))

    def frac(num, label):
        quo = zf.z_divide(num, den)
        ck.equal(f"oc-compact:{label}-cleared", quo * den, num, m=m, r=r)
        return quo

    f1 = frac(zs(m - 1).scale(qq(m - 3) + qq(3 - m)) - zs(m - 3).scale(qq(m - 1) + qq(1 - m)), "f1")
    f2 = frac(zs(m).scale(qq(m - 2) + qq(2 - m)) - zs(m - 2).scale(qq(m) + qq(-m)), "f2")
    f3 = frac(zs(m - 2).scale(qq(m - 4) + qq(4 - m)) - zs(m - 4).scale(qq(m - 2) + qq(2 - m)), "f3")
    q2, qm2 = qq(2), qq(-2)
    out = commutator(zs(m), P(r)).scale(q_int(m + 1))
    out = out + commutator(zs(m - 2), P(r)).scale(q_int(m - 1))
    out = out - commutator(zs(m - 1), P(r + 1), q2).scale(q_int(m))
    out = out - commutator(zs(m - 1), P(r - 1), qm2).scale(q_int(m))
    out = out - commutator(f1, P(r + 1), q2)
    out = out - commutator(f1, P(r - 1), qm2)
    out = out + commutator(f2, P(r))
    out = out + commutator(f3, P(r))
    return out


def _oc_plain_compact(m: int, r: int, ck: Checker) -> TorusElement:
    P = zf.qy_pair
    zs = zf.z_sym
    den = zf.zq(1) - zf.zq(-1)

    def frac(num, label):
        quo = zf.z_divide(num, den)
        ck.equal(f"oc-compact-plain:{label}-cleared", quo * den, num, m=m, r=r)
        return quo

    g1 = frac(zf.zq(m - 2) - zf.zq(2 - m), "g1")
    g2 = frac((zf.zq(m - 3) - zf.zq(3 - m)).scale(qq(1)) + (zf.zq(m - 1) - zf.zq(1 - m)).scale(qq(-1)), "g2")
    c = qq(3 - m) + qq(1 - m)
    q2, qm2 = qq(2), qq(-2)
    out = commutator(zs(m), P(r)).scale(q_int(m + 1))
    out = out + commutator(zs(m - 2), P(r)).scale(q_int(m - 1))
    out = out - commutator(zs(m - 1), P(r + 1), q2).scale(q_int(m))
    out = out - commutator(zs(m - 1), P(r - 1), qm2).scale(q_int(m))
    out = out - commutator(g1, P(r + 1), q2).scale(c)
    out = out - commutator(g1, P(r - 1), qm2).scale(c)
    out = out + commutator(g2, P(r)).scale(c)
    return out


def _pair_bracket(r: int, s: int) -> Tuple[str, TorusElement, TorusElement]:
    A = zf.y_pair
    zs = zf.z_sym
    q = qq(1)
    qm = Q_MINUS
    if s > r + 1:
        lhs = (commutator(A(r), A(s + 1), q) + commutator(A(s), A(r + 1), q)).scale(qq(r + s + 1))
        rhs = zs(s - r + 1).scale(qq(s - r + 2) - qq(r - s - 2)) - zs(s - r - 1).scale(qq(s - r - 2) - qq(r - s + 2))
        return "pair-bracket:s>r+1", lhs, rhs
    if r > s + 1:
        lhs = (commutator(A(r), A(s + 1), q) + commutator(A(s), A(r + 1), q)).scale(qq(r + s + 1))
        rhs = zs(r - s + 1).scale(qq(r - s + 2) - qq(s - r - 2)) - zs(r - s - 1).scale(qq(r - s - 2) - qq(s + 2 - r))
        return "pair-bracket:r>s+1", lhs, rhs
    const = TorusElement.scalar(2 * qm)
    if s == r + 1:
        u = A(r + 1)
        lhs = ((u * u).scale(qm) + commutator(A(r), A(r + 2), q)).scale(qq(2 * r + 2))
        return "pair-bracket:s=r+1", lhs, zs(2).scale(qq(3) - qq(-3)) + const
    if r == s + 1:
        u = A(s + 1)
        lhs = ((u * u).scale(qm) + commutator(A(s), A(s + 2), q)).scale(qq(2 * s + 2))
        return "pair-bracket:r=s+1", lhs, zs(2).scale(qq(3) - qq(-3)) + const
    lhs = commutator(A(r), A(r + 1), q).scale(qq(2 * r + 1))
    return "pair-bracket:s=r", lhs, zs(1).scale(qq(2) - qq(-2))


def suite_section15(
    max_m: int = DEFAULTS["section15_max"],
    r_range: Tuple[int, int] = DEFAULTS["r_range"],
    builder: Optional[ElementBuilder] = None,
) -> CheckReport:
    lo, hi = r_range
    ck = Checker("section15", f"m <= {max_m}, r,s in [{lo}, {hi}]")
    b = builder or ElementBuilder(series_order=max(2, max_m))
    z = zf.zq(1)

    # z itself
    ck.equal("z=qyx", z, (Y * X).scale(qq(1)))
    ck.equal("z=q^-1xy", z, (X * Y).scale(qq(-1)))
    ck.equal("z^-1=qy^-1x^-1", zf.zq(-1), (Y_INV * X_INV).scale(qq(1)))
    ck.equal("z^-1=q^-1x^-1y^-1", zf.zq(-1), (X_INV * Y_INV).scale(qq(-1)))
    ck.equal("zy=q^2yz", z * Y, (Y * z).scale(qq(2)))
    ck.equal("zx=q^-2xz", z * X, (X * z).scale(qq(-2)))

    # family images in z-notation against the definitional constructions
    for r in range(lo - max_m, hi + max_m + 1):
        ck.equal("z-form:b1r", zf.b1r_z(r), b.build(Family.B1R, r, "recursive"), r=r)
        ck.equal("z-form:b1r-alt", zf.b1r_z_alt(r), b.build(Family.B1R, r, "recursive"), r=r)
    for n in range(1, max_m + 1):
        ck.equal("z-form:theta-prime", zf.theta_prime_z(n), b.build(Family.THETA_PRIME, n, "definitional"), n=n)
        ck.equal("z-form:theta", zf.theta_z(n), b.build(Family.THETA, n, "definitional"), n=n)
        ck.equal("z-form:h-prime", zf.h_prime_z(n), b.build(Family.H_PRIME, n, "series"), n=n)
        ck.equal("z-form:h", zf.h_z(n), b.build(Family.H, n, "series"), n=n)
    for n in range(3, max_m + 3):
        lhs = b.build(Family.THETA, n, "definitional") - b.build(Family.THETA, n - 2, "definitional").scale(qq(-2))
        ck.equal("sosbysza", lhs, zf.theta_step_z(n), n=n)

    P = zf.qy_pair
    for m in range(1, max_m + 1):
        for r in range(lo, hi + 1):
            lhs = commutator(zf.z_sym(m), P(r))
            rhs = (P(r + m) - P(r - m)).scale(qq(m) - qq(-m))
            ck.equal("z-bracket", lhs, rhs, m=m, r=r)

            if m == 1:
                lhs1 = commutator(zf.z_sym(1), P(r)).scale(Q_MINUS.inverse())
                rhs1 = P(r + 1) - P(r - 1)
                ck.equal("oc-prime:m=1", lhs1, rhs1, m=m, r=r)
                ck.equal("oc:m=1", lhs1, rhs1, m=m, r=r)
            elif m == 2:
                ck.zero("oc-prime:m=2", _oc_m2(r), m=m, r=r)
                ck.zero("oc:m=2", _oc_m2(r), m=m, r=r)
            else:
                ck.zero("oc-prime:m>=3", _oc_long(m, r, prime=True), m=m, r=r)
                ck.zero("oc:m>=3", _oc_long(m, r, prime=False), m=m, r=r)
            if m >= 2:
                ck.guard("oc-prime:compact", lambda m=m, r=r: ck.zero("oc-prime:compact", _oc_compact(m, r, ck), m=m, r=r), m=m, r=r)
                ck.guard("oc:compact", lambda m=m, r=r: ck.zero("oc:compact", _oc_plain_compact(m, r, ck), m=m, r=r), m=m, r=r)

    for r in range(lo, hi + 1):
        for s in range(lo, hi + 1):
            name, lhs, rhs = _pair_bracket(r, s)
            ck.equal(name, lhs, rhs, r=r, s=s)
    return ck.finish()


# ---------------------------------------------------------------------------
# commutation


def suite_commutation(max_n: int = DEFAULTS["commutation_max"], builder: Optional[ElementBuilder] = None) -> CheckReport:
    ck = Checker("commutation", f"1 <= m,n <= {max_n}")
    b = builder or ElementBuilder(series_order=max(2, max_n))
    fams = (
        (Family.B_NDELTA, "recursive"),
        (Family.THETA, "definitional"),
        (Family.THETA_PRIME, "definitional"),
        (Family.H, "series"),
        (Family.H_PRIME, "series"),
    )
    for fam, route in fams:
        for m in range(1, max_n + 1):
            for n in range(m, max_n + 1):
                ck.zero(f"commute:{fam.value}", commutator(b.build(fam, m, route), b.build(fam, n, route)), m=m, n=n)
    return ck.finish()


SUITES: Dict[str, Callable[..., CheckReport]] = {
    "dolan-grady": suite_dolan_grady,
    "closed-forms": suite_closed_forms,
    "series": suite_series,
    "prop68": suite_prop68,
    "section15": suite_section15,
    "commutation": suite_commutation,
}


def run_suite(name: str, max_value: Optional[int] = None, r_range: Optional[Tuple[int, int]] = None,
              twist: Optional[int] = None) -> CheckReport:
    """Run one suite by name with optional size overrides.

    ``twist`` replaces the reordering convention for the run (mutation testing).
    """
    from .torus import twist_convention

    fn = SUITES[name]
    kwargs = {}
    if name == "closed-forms" and max_value is not None:
        kwargs["max_n"] = max_value
    elif name == "series" and max_value is not None:
        kwargs["max_order"] = max(2, max_value)
    elif name in ("prop68", "section15"):
        if max_value is not None:
            kwargs["max_m"] = max_value
        if r_range is not None:
            kwargs["r_range"] = r_range
    elif name == "commutation" and max_value is not None:
        kwargs["max_n"] = max(2, max_value)
    if twist is None:
        return fn(**kwargs)
    with twist_convention(twist):
        try:
            return fn(**kwargs)
        except Exception as exc:
            rep = CheckReport(name, "mutated twist", status="fail")
            rep.witness = Witness(name, {}, ZERO_ELEMENT, error=repr(exc))
            rep.failed = 1
            return rep
