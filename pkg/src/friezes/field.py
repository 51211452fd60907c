"""Exact arithmetic in Z[lambda_L] with lambda_L = 2cos(pi/L).

Elements are integer coefficient vectors in the power basis
1, lambda_L, ..., lambda_L^{d-1} where d = phi(2L)/2.  The minimal polynomial
of lambda_L is irreducible, so this representation is faithful: an element is
zero exactly when all its coefficients are.

Signs are certified by exact interval arithmetic on a dyadic enclosure of
lambda_L that is refined by bisection until the enclosure of the value
excludes zero.
"""

import math
import threading
from fractions import Fraction
from functools import lru_cache

from .chebyshev import c_polynomial
from .errors import InvalidArgument


# ---------------------------------------------------------------------------
# integer polynomials (tuples, lowest degree first)


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _divexact(num, den):
    """Quotient of num by the monic polynomial den; the remainder must vanish."""
    num = list(num)
    dn = len(den) - 1
    if den[-1] != 1:
        raise InvalidArgument("divisor must be monic")
    q = [0] * max(len(num) - dn, 1)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            q[k - dn] = c
            for t, d in enumerate(den):
                num[k - dn + t] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> tuple:
    """Phi_m by dividing x^m - 1 by Phi_d for every proper divisor d of m."""
    if m < 1:
        raise InvalidArgument(f"cyclotomic index must be >= 1, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _divexact(num, cyclotomic(d))
    return tuple(num)


@lru_cache(maxsize=None)
def minimal_polynomial(L: int) -> tuple:
    """Monic minimal polynomial of 2cos(pi/L), coefficients lowest first."""
    if not isinstance(L, int) or L < 2:
        raise InvalidArgument(f"L must be an integer >= 2, got {L!r}")
    phi = cyclotomic(2 * L)
    d = (len(phi) - 1) // 2
    out = [0] * (d + 1)
    out[0] = phi[d]
    # Phi(z)/z^d = phi[d] + sum_k phi[d+k] (z^k + z^-k) by palindromy
    for k in range(1, d + 1):
        for t, c in enumerate(c_polynomial(k)):
            out[t] += phi[d + k] * c
    return tuple(out)


def format_polynomial(coeffs, var="x") -> str:
    """Render like "x^4 - 4x^2 + 1"."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms) if terms else "0"


def _sturm_chain(p):
    p = [Fraction(c) for c in p]
    dp = [k * p[k] for k in range(1, len(p))]
    chain = [p, dp]
    while len(chain[-1]) > 1 or chain[-1][0] != 0:
        a, b = chain[-2], chain[-1]
        r = list(a)
        while len(r) >= len(b) and any(r):
            c = r[-1] / b[-1]
            shift = len(r) - len(b)
            for t, bc in enumerate(b):
                r[shift + t] -= c * bc
            r.pop()
        r = _trim(r) if r else [Fraction(0)]
        if not any(r):
            break
        chain.append([-c for c in r])
    return chain


def _sign_changes(chain, x):
    signs = []
    for poly in chain:
        v = sum(c * x**k for k, c in enumerate(poly))
        if v != 0:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


# ---------------------------------------------------------------------------


class FieldContext:
    """The ring Z[lambda_L] together with a refinable enclosure of lambda_L."""

    def __init__(self, L: int):
        self.L = L
        self.minpoly = minimal_polynomial(L)
        self.degree = len(self.minpoly) - 1
        d = self.degree
        table = [tuple(1 if t == k else 0 for t in range(d)) for k in range(d)]
        for _ in range(d, 2 * d - 1):
            prev = table[-1]
            top = prev[-1]
            nxt = [0] + list(prev[:-1])
            for t in range(d):
                nxt[t] -= top * self.minpoly[t]
            table.append(tuple(nxt))
        self._reduce = table
        self._lock = threading.Lock()
        self._levels = []
        self._lambda_cache = {}
        self.zero = FieldElement(self, (0,) * d)
        self.one = FieldElement(self, (1,) + (0,) * (d - 1))
        self.gen = self.from_poly((0, 1))
        if d == 1:
            self._rational_root = -self.minpoly[0]
        else:
            self._rational_root = None
            self._levels.append(self._initial_enclosure())

    def __repr__(self):
        return f"FieldContext(L={self.L})"

    def __eq__(self, other):
        return isinstance(other, FieldContext) and other.L == self.L

    def __hash__(self):
        return hash(("FieldContext", self.L))

    # -- construction of elements -------------------------------------------

    def element(self, coeffs) -> "FieldElement":
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) == self.degree:
            return FieldElement(self, coeffs)
        return self.from_poly(coeffs)

    def from_poly(self, coeffs) -> "FieldElement":
        """Reduce an arbitrary integer polynomial in lambda_L."""
        r = [int(c) for c in coeffs]
        d = self.degree
        m = self.minpoly
        for k in range(len(r) - 1, d - 1, -1):
            c = r[k]
            if c:
                r[k] = 0
                for t in range(d):
                    r[k - d + t] -= c * m[t]
        r = r[:d] + [0] * (d - len(r))
        return FieldElement(self, tuple(r))

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            return convert(value, self)
        if isinstance(value, int):
            return FieldElement(self, (value,) + (0,) * (self.degree - 1))
        raise InvalidArgument(f"cannot coerce {value!r} into Z[lambda_{self.L}]")

    # -- enclosure ----------------------------------------------------------

    def _initial_enclosure(self):
        approx = 2 * math.cos(math.pi / self.L)
        chain = _sturm_chain(self.minpoly)
        for s in (30, 20, 12, 6, 2):
            a = math.floor(approx * 2**s) - 2
            lo, hi = Fraction(a, 2**s), Fraction(a + 4, 2**s)
            if lo <= 0:
                continue
            inside = _sign_changes(chain, lo) - _sign_changes(chain, hi)
            above = _sign_changes(chain, hi) - _sign_changes(chain, Fraction(3))
            if inside == 1 and above == 0:
                return self._level_data(a, a + 4, s)
        raise ArithmeticError(f"could not isolate lambda_{self.L}")  # pragma: no cover

    def _level_data(self, A, B, s):
        d = self.degree
        pa = [A**k for k in range(d)]
        pb = [B**k for k in range(d)]
        scale = [1 << (s * (d - 1 - k)) for k in range(d)]
        return (A, B, s, pa, pb, scale)

    def _minpoly_sign_at(self, num, s):
        d = self.degree
        v = sum(c * num**k * (1 << (s * (d - k))) for k, c in enumerate(self.minpoly))
        return (v > 0) - (v < 0)

    def enclosure(self, level: int = 0):
        """Rational interval (lo, hi) around lambda_L after `level` bisections."""
        if self._rational_root is not None:
            r = Fraction(self._rational_root)
            return r, r
        data = self._level(level)
        A, B, s = data[:3]
        return Fraction(A, 1 << s), Fraction(B, 1 << s)

    def _level(self, level):
        levels = self._levels
        if level < len(levels):
            return levels[level]
        with self._lock:
            while len(self._levels) <= level:
                A, B, s = self._levels[-1][:3]
                mid = A + B
                s1 = s + 1
                lo_sign = self._minpoly_sign_at(2 * A, s1)
                if self._minpoly_sign_at(mid, s1) == lo_sign:
                    self._levels.append(self._level_data(mid, 2 * B, s1))
                else:
                    self._levels.append(self._level_data(2 * A, mid, s1))
            return self._levels[level]

    def sign(self, coeffs) -> int:
        if not any(coeffs):
            return 0
        if self._rational_root is not None:
            v = coeffs[0]
            return (v > 0) - (v < 0)
        level = 0
        while True:
            _, _, _, pa, pb, scale = self._level(level)
            low = high = 0
            for c, a, b, sc in zip(coeffs, pa, pb, scale):
                if c > 0:
                    low += c * a * sc
                    high += c * b * sc
                elif c < 0:
                    low += c * b * sc
                    high += c * a * sc
            if low > 0:
                return 1
            if high < 0:
                return -1
            level = 4 if level == 0 else 2 * level

    def value(self, coeffs) -> float:
        lam = 2 * math.cos(math.pi / self.L)
        return float(sum(c * lam**k for k, c in enumerate(coeffs)))


@lru_cache(maxsize=None)
def get_context(L: int) -> FieldContext:
    if not isinstance(L, int) or L < 2:
        raise InvalidArgument(f"L must be an integer >= 2, got {L!r}")
    return FieldContext(L)


class FieldElement:
    """Value type for elements of Z[lambda_L]."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is self.ctx or other.ctx.L == self.ctx.L:
                return other.coeffs
            raise InvalidArgument(
                f"context mismatch: L={self.ctx.L} vs L={other.ctx.L}"
            )
        if isinstance(other, int):
            return (other,) + (0,) * (self.ctx.degree - 1)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, tuple(a + b for a, b in zip(self.coeffs, o)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, tuple(a - b for a, b in zip(self.coeffs, o)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, tuple(b - a for a, b in zip(self.coeffs, o)))

    def __neg__(self):
        return FieldElement(self.ctx, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElement(self.ctx, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self.ctx
        d = ctx.degree
        x = self.coeffs
        if d == 1:
            return FieldElement(ctx, (x[0] * o[0],))
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(o):
                    if b:
                        prod[i + j] += a * b
        res = prod[:d]
        table = ctx._reduce
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                for t, r in enumerate(table[k]):
                    if r:
                        res[t] += c * r
        return FieldElement(ctx, tuple(res))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = self.ctx.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.ctx.L != self.ctx.L:
                return False
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            c = self.coeffs
            return c[0] == other and not any(c[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash((self.ctx.L, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def sign(self) -> int:
        return self.ctx.sign(self.coeffs)

    def _cmp(self, other):
        diff = self - other
        if diff is NotImplemented:
            return None
        return diff.sign()

    def __lt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s < 0

    def __le__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s <= 0

    def __gt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s > 0

    def __ge__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s >= 0

    def __float__(self):
        return self.ctx.value(self.coeffs)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def to_json(self) -> dict:
        return {"L": self.ctx.L, "coeffs": list(self.coeffs)}

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "l" if k == 1 else f"l^{k}"
                body = mono if mag == 1 else f"{mag}·{mono}"
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms) if terms else "0"

    def __repr__(self):
        return f"FieldElement(L={self.ctx.L}, {list(self.coeffs)})"


def embed_lambda(q: int, ctx: FieldContext) -> FieldElement:
    """lambda_q = 2cos(pi/q) as an element of ctx.

    Requires q | L; lambda_2 = 0 and lambda_3 = 1 are accepted in every ring.
    """
    if not isinstance(q, int) or q < 2:
        raise InvalidArgument(f"q must be an integer >= 2, got {q!r}")
    cached = ctx._lambda_cache.get(q)
    if cached is not None:
        return cached
    if q == 2:
        out = ctx.zero
    elif ctx.L % q == 0:
        k = ctx.L // q
        prev, cur = ctx(2), ctx.gen
        for _ in range(k - 1):
            prev, cur = cur, ctx.gen * cur - prev
        out = cur if k >= 1 else prev
    elif q == 3:
        out = ctx.one
    else:
        raise InvalidArgument(f"lambda_{q} is not in Z[lambda_{ctx.L}] ({q} does not divide {ctx.L})")
    ctx._lambda_cache[q] = out
    return out


def as_integer_multiple(a: FieldElement, q: int):
    """m with a = m*lambda_q exactly, else None."""
    b = embed_lambda(q, a.ctx)
    if not b:
        return 0 if not a else None
    k = next(i for i, c in enumerate(b.coeffs) if c)
    num, den = a.coeffs[k], b.coeffs[k]
    if num % den:
        return None
    m = num // den
    return m if b * m == a else None


def convert(a: FieldElement, ctx: FieldContext) -> FieldElement:
    """Lift a from Z[lambda_L'] to Z[lambda_L] for L' dividing L."""
    src = a.ctx
    if src.L == ctx.L:
        return a if src is ctx else FieldElement(ctx, a.coeffs)
    if a.is_integer():
        return ctx(a.coeffs[0])
    if ctx.L % src.L:
        raise InvalidArgument(f"cannot embed Z[lambda_{src.L}] into Z[lambda_{ctx.L}]")
    y = embed_lambda(src.L, ctx)
    acc = ctx.zero
    for c in reversed(a.coeffs):
        acc = acc * y + c
    return acc


def common_context(*ctxs) -> FieldContext:
    return get_context(math.lcm(*(c.L for c in ctxs)))
