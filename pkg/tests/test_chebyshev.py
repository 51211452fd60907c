import random

import pytest
from hypothesis import given, strategies as st
from scipy.special import eval_chebyu

from conftest import elements
from friezes.chebyshev import c_polynomial, horner, v_eval, v_polynomial, v_sequence
from friezes.errors import InvalidArgument
from friezes.field import embed_lambda, format_polynomial, get_context


def pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    out = [x - y for x, y in zip(a, b)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def lam(p):
    ctx = get_context(p)
    return ctx.gen


@pytest.mark.parametrize(
    "n, text", [(-1, "0"), (0, "1"), (1, "x"), (2, "x^2 - 1"), (3, "x^3 - 2x"), (4, "x^4 - 3x^2 + 1")]
)
def test_v_polynomial_small(n, text):
    assert format_polynomial(v_polynomial(n).coeffs) == text


def test_v_polynomial_degree_and_recurrence():
    for n in range(0, 60):
        v = v_polynomial(n)
        assert v.degree == n
        assert v.coeffs[-1] == 1
        if n >= 1:
            rhs = psub([0] + list(v_polynomial(n - 1).coeffs), v_polynomial(n - 2).coeffs)
            assert list(v_polynomial(n).coeffs) == rhs


def test_v_polynomial_rejects_below_minus_one():
    with pytest.raises(InvalidArgument):
        v_polynomial(-2)
    with pytest.raises(InvalidArgument):
        v_eval(-2, 3)
    with pytest.raises(InvalidArgument):
        c_polynomial(-1)


@pytest.mark.parametrize("n", range(0, 41))
def test_unimodular_identity_exact(n):
    vn = v_polynomial(n).coeffs
    lhs = psub(pmul(vn, vn), pmul(v_polynomial(n - 1).coeffs, v_polynomial(n + 1).coeffs))
    assert lhs == [1]


@pytest.mark.parametrize("p", range(3, 41))
def test_vanishes_at_lambda_n_plus_one(p):
    assert v_eval(p - 1, lam(p)) == 0


@pytest.mark.parametrize("n", range(2, 41))
def test_minus_one_at_lambda_n(n):
    assert v_eval(n, lam(n)) == -1


@pytest.mark.parametrize("n", range(0, 41))
def test_one_at_lambda_n_plus_two(n):
    assert v_eval(n, lam(n + 2)) == 1


@pytest.mark.parametrize("q", range(2, 41))
def test_symmetry(q):
    x = embed_lambda(q, get_context(q))
    seq = v_sequence(x, q)
    for j in range(0, q - 1):
        assert seq[j + 1] == seq[q - 2 - j + 1]


@pytest.mark.parametrize("p", range(4, 13))
def test_length_bound(p):
    x = lam(p)
    for i in range(1, p - 2):
        assert (v_eval(i, x) - x).sign() >= 0


def test_value_at_two_sqrt2():
    x = 2 * lam(4)
    assert v_eval(2, x) == 7
    assert v_eval(3, x) == 12 * lam(4)
    assert v_eval(5, x) == 70 * lam(4)
    assert v_eval(6, x) == 239


def test_second_kind_cross_check():
    rng = random.Random(7)
    for _ in range(50):
        t = rng.uniform(-1.5, 1.5)
        n = rng.randint(0, 25)
        assert abs(v_polynomial(n)(2 * t) - eval_chebyu(n, t)) <= 1e-9 * max(1.0, abs(eval_chebyu(n, t)))


@given(st.integers(-1, 30), st.data())
def test_eval_matches_polynomial(n, data):
    L = data.draw(st.integers(3, 15))
    x = data.draw(elements(L, bound=3))
    assert v_eval(n, x) == horner(v_polynomial(n).coeffs, x)


def test_v_sequence_prefix():
    assert v_sequence(3, 4) == [0, 1, 3, 8, 21, 55]
    assert v_sequence(3, 0) == [0, 1]


@pytest.mark.parametrize("k, text", [(0, "2"), (1, "x"), (2, "x^2 - 2"), (3, "x^3 - 3x")])
def test_c_polynomial_small(k, text):
    assert format_polynomial(c_polynomial(k)) == text


@pytest.mark.parametrize("k", range(0, 20))
def test_c_polynomial_symbolic(k):
    # (z + 1/z)^j expands into binomial terms; compare against z^k + z^-k as Laurent dicts
    def laurent_power(j):
        out = {0: 1}
        for _ in range(j):
            nxt = {}
            for e, c in out.items():
                nxt[e + 1] = nxt.get(e + 1, 0) + c
                nxt[e - 1] = nxt.get(e - 1, 0) + c
            out = nxt
        return out

    total = {}
    for j, c in enumerate(c_polynomial(k)):
        for e, v in laurent_power(j).items():
            total[e] = total.get(e, 0) + c * v
    total = {e: v for e, v in total.items() if v}
    expected = {0: 2} if k == 0 else {k: 1, -k: 1}
    assert total == expected
