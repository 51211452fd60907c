"""The polynomial families V_n and C_k.

V_{-1} = 0, V_0 = 1, V_{n+1} = x V_n - V_{n-1}, so V_n(2t) is the Chebyshev
polynomial of the second kind U_n(t).

C_0 = 2, C_1 = x, C_{k+1} = x C_k - C_{k-1}, so C_k(z + 1/z) = z^k + z^{-k}.

Polynomials are dense integer tuples, lowest degree first.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidArgument


def _shift_sub(cur, prev):
    """x*cur - prev on coefficient tuples."""
    out = [0] * (len(cur) + 1)
    for k, c in enumerate(cur):
        out[k + 1] += c
    for k, c in enumerate(prev):
        out[k] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def horner(coeffs, x):
    """Evaluate a low-to-high coefficient sequence at x (any ring type)."""
    acc = x * 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class VPolynomial:
    n: int
    coeffs: tuple

    @property
    def degree(self):
        return -1 if self.n < 0 else len(self.coeffs) - 1

    def __call__(self, x):
        return horner(self.coeffs, x)


@lru_cache(maxsize=None)
def _v_coeffs(n):
    if n == -1:
        return (0,)
    if n == 0:
        return (1,)
    return _shift_sub(_v_coeffs(n - 1), _v_coeffs(n - 2))


def v_polynomial(n: int) -> VPolynomial:
    if n < -1:
        raise InvalidArgument(f"V_n needs n >= -1, got {n}")
    for k in range(-1, n):  # warm the cache bottom-up to avoid deep recursion
        _v_coeffs(k)
    return VPolynomial(n, _v_coeffs(n))


def v_eval(n: int, x):
    """V_n(x) by running the recurrence on x's ring."""
    if n < -1:
        raise InvalidArgument(f"V_n needs n >= -1, got {n}")
    prev = x * 0
    cur = prev + 1
    if n == -1:
        return prev
    for _ in range(n):
        prev, cur = cur, x * cur - prev
    return cur


def v_sequence(x, n_max: int) -> list:
    """[V_{-1}(x), V_0(x), ..., V_{n_max}(x)]."""
    out = [x * 0, x * 0 + 1]
    for _ in range(n_max):
        out.append(x * out[-1] - out[-2])
    return out[: n_max + 2]


@lru_cache(maxsize=None)
def _c_coeffs(k):
    if k == 0:
        return (2,)
    if k == 1:
        return (0, 1)
    return _shift_sub(_c_coeffs(k - 1), _c_coeffs(k - 2))


def c_polynomial(k: int) -> tuple:
    if k < 0:
        raise InvalidArgument(f"C_k needs k >= 0, got {k}")
    for j in range(k):
        _c_coeffs(j)
    return _c_coeffs(k)
