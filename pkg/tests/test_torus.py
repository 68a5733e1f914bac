import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qtorus.families import w_gen
from qtorus.scalars import ONE, Q_MINUS, QHalfScalar, ScalarDomainError, qq
from qtorus.torus import (
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
    from_json,
    mono_mul,
    render,
    to_json,
    z_power,
)

from strategies import elements, monomials


# -- independent oracle: normal ordering of letter words ----------------------
# A word is a list of letters ('x', +-1) / ('y', +-1).  Each adjacent swap of
# y^e x^f into x^f y^e multiplies by q^(-2 e f); nothing else is used.


def _word(a, b):
    sx = 1 if a > 0 else -1
    sy = 1 if b > 0 else -1
    return [("x", sx)] * abs(a) + [("y", sy)] * abs(b)


def _normal_order(word):
    word = list(word)
    q_exp = 0
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if word[i][0] == "y" and word[i + 1][0] == "x":
                q_exp += -2 * word[i][1] * word[i + 1][1]
                word[i], word[i + 1] = word[i + 1], word[i]
                changed = True
    a = sum(e for l, e in word if l == "x")
    b = sum(e for l, e in word if l == "y")
    return q_exp, (a, b)


def oracle_mul(u: TorusElement, v: TorusElement) -> TorusElement:
    out = ZERO_ELEMENT
    for (a1, b1), c1 in u.items():
        for (a2, b2), c2 in v.items():
            e, m = _normal_order(_word(a1, b1) + _word(a2, b2))
            out = out + TorusElement.monomial(*m, c1 * c2 * qq(e))
    return out


# -- examples -----------------------------------------------------------------


def test_mono_mul_examples():
    assert mono_mul((1, 0), (0, 1)) == (ONE, (1, 1))
    assert mono_mul((0, 1), (1, 0)) == (qq(-2), (1, 1))
    assert mono_mul((2, 3), (1, -1)) == (qq(-6), (3, 2))


def test_linear_examples():
    assert elem_linear(X, X_INV, None, "add") == w_gen(0)
    u = w_gen(1)
    assert elem_linear(u, u, None, "sub") == ZERO_ELEMENT
    assert elem_linear(u, None, qq(2), "scale") == Y.scale(qq(2)) + Y_INV.scale(qq(2))
    with pytest.raises(ValueError):
        elem_linear(u, u, None, "mul")


def test_mul_examples():
    w0, w1 = w_gen(0), w_gen(1)
    assert elem_mul(w0, w1) == X * Y + TorusElement.monomial(1, -1) + TorusElement.monomial(-1, 1) + X_INV * Y_INV
    expected = TorusElement({(1, 1): qq(-2), (1, -1): qq(2), (-1, 1): qq(2), (-1, -1): qq(-2)})
    assert elem_mul(w1, w0) == expected
    assert w0 * ONE_ELEMENT == w0
    assert w0 * w0 == TorusElement({(2, 0): 1, (0, 0): 2, (-2, 0): 1})


def test_pow_examples():
    xy = X * Y
    assert elem_pow(xy, 2) == TorusElement.monomial(2, 2, qq(-2))
    assert elem_pow(w_gen(0), 0) == ONE_ELEMENT
    inv = elem_pow(xy, -1)
    assert inv == TorusElement.monomial(-1, -1, qq(-2))
    assert xy * inv == ONE_ELEMENT and inv * xy == ONE_ELEMENT
    with pytest.raises(UnsupportedInverseError):
        elem_pow(w_gen(0), -1)


def test_commutator_examples():
    assert commutator(X, X) == ZERO_ELEMENT
    assert commutator(X, Y) == (X * Y).scale(1 - qq(-2))
    w0, w1 = w_gen(0), w_gen(1)
    b_delta = (w1 * w0).scale(qq(-2)) - w0 * w1
    assert b_delta == (Y * X + Y_INV * X_INV).scale(-(qq(2) - qq(-2)))
    with pytest.raises(ScalarDomainError):
        commutator(X, Y, 0)


def test_z_power_examples():
    assert z_power(0) == ONE_ELEMENT
    assert z_power(1) == TorusElement.monomial(1, 1, qq(-1))
    assert z_power(-1) == TorusElement.monomial(-1, -1, qq(-1))
    assert z_power(1) == (Y * X).scale(qq(1))
    assert z_power(-1) == (Y_INV * X_INV).scale(qq(1))
    for k in range(-4, 5):
        assert z_power(k) == TorusElement.monomial(k, k, qq(-k * k))


def test_render_examples():
    assert render(w_gen(0)) == "x + x^-1"
    assert render(ZERO_ELEMENT) == "0"
    assert render(TorusElement.monomial(2, 1) + TorusElement.monomial(-2, -1)) == "x^2·y + x^-2·y^-1"
    b_delta = (Y * X + Y_INV * X_INV).scale(-(qq(2) - qq(-2)))
    assert render(b_delta) == "(-1 + q^-4)·x·y + (-1 + q^-4)·x^-1·y^-1"
    assert render(TorusElement.scalar(Q_MINUS.inverse()) + X) == "x + (1/(q - q^-1))"
    assert render(X.scale(-1) + Y) == "-x + y"


def test_json_render_is_ascending_and_stable():
    u = w_gen(0) * w_gen(1)
    obj = json.loads(render(u, "json"))
    keys = [(t["a"], t["b"]) for t in obj["terms"]]
    assert keys == sorted(keys)
    assert render(u, "json") == render(from_json(obj), "json")
    with pytest.raises(ValueError):
        render(u, "xml")


def test_defining_relations():
    assert X * X_INV == ONE_ELEMENT == X_INV * X
    assert Y * Y_INV == ONE_ELEMENT == Y_INV * Y
    assert X * Y == (Y * X).scale(qq(2))
    assert X_INV * Y == (Y * X_INV).scale(qq(-2))
    assert X_INV * Y_INV == (Y_INV * X_INV).scale(qq(2))
    assert X * Y_INV == (Y_INV * X).scale(qq(-2))


def test_four_diagonal_elements_commute():
    four = [X * Y, Y * X, X_INV * Y_INV, Y_INV * X_INV]
    for u in four:
        for v in four:
            assert commutator(u, v) == ZERO_ELEMENT


def test_z_relations():
    z = z_power(1)
    assert z * Y == (Y * z).scale(qq(2))
    assert z * X == (X * z).scale(qq(-2))


def test_dolan_grady_in_torus():
    w0, w1 = w_gen(0), w_gen(1)
    c = -(qq(2) - qq(-2)) ** 2
    assert commutator(w0, commutator(w0, w1, qq(1)), qq(-1)) == w1.scale(c)
    assert commutator(w1, commutator(w1, w0, qq(1)), qq(-1)) == w0.scale(c)


def test_scalar_division_and_coercion():
    u = w_gen(0)
    assert u / Q_MINUS * Q_MINUS == u
    assert u + 1 == u + ONE_ELEMENT
    assert 2 * u == u + u
    assert 1 - u == ONE_ELEMENT - u
    assert TorusElement.scalar(3) == 3


def test_zero_coefficients_are_dropped():
    u = TorusElement({(1, 0): 0, (0, 1): QHalfScalar(2)})
    assert u.support() == {(0, 1)}
    assert (u - u).is_zero()


# -- properties ---------------------------------------------------------------


@given(elements(), elements())
def test_mul_matches_rewriting_oracle(u, v):
    assert u * v == oracle_mul(u, v)


@given(elements(max_terms=6, span=5), elements(max_terms=6, span=5), elements(max_terms=6, span=5))
def test_associativity(u, v, w):
    assert (u * v) * w == u * (v * w)


@given(elements(), elements(), elements())
def test_distributivity(u, v, w):
    assert u * (v + w) == u * v + u * w
    assert (v + w) * u == v * u + w * u


@given(st.lists(monomials(), min_size=2, max_size=5), st.randoms(use_true_random=False))
def test_evaluation_order_irrelevant(ms, rnd):
    left = ms[0]
    for m in ms[1:]:
        left = left * m
    right = ms[-1]
    for m in reversed(ms[:-1]):
        right = m * right
    # random bracketing
    items = list(ms)
    while len(items) > 1:
        i = rnd.randrange(len(items) - 1)
        items[i : i + 2] = [items[i] * items[i + 1]]
    assert left == right == items[0]


@given(monomials(), st.integers(-4, 4))
def test_monomial_powers(m, n):
    p = elem_pow(m, n)
    direct = ONE_ELEMENT
    base = m if n >= 0 else elem_pow(m, -1)
    for _ in range(abs(n)):
        direct = direct * base
    assert p == direct
    assert p * elem_pow(m, -n) == ONE_ELEMENT


@given(elements(), elements())
def test_commutes_agrees_with_commutator(u, v):
    assert commutes(u, v) == commutator(u, v).is_zero()


@given(elements())
def test_json_roundtrip(u):
    assert from_json(to_json(u)) == u
    assert json.loads(render(u, "json")) == to_json(u)


@given(elements(), elements())
def test_hash_consistent(u, v):
    if u == v:
        assert hash(u) == hash(v)
