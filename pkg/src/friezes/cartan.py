"""Rank-two Cartan graphs of type p, their reflections and real roots.

Off-diagonal Cartan entries are integer multiples of lambda_p and stored as
those integers.  A graph is either finite, with explicit involutions rho_1,
rho_2 on 0..N-1, or periodic on the integers, where rho_1 swaps 2k and 2k+1
and rho_2 swaps 2k-1 and 2k, and the matrix at object a is matrices[a % K].

The reflection sigma_i^a sends alpha_j to alpha_j - c^a_{ij} alpha_i and maps
into the object rho_i(a).  Roots are coordinate pairs in the basis alpha_1,
alpha_2.
"""

import math
from dataclasses import dataclass, field

from .errors import InvalidArgument
from .field import FieldElement, embed_lambda, get_context
from .strip import InfiniteFriezeView, PeriodicQuiddity


@dataclass(frozen=True)
class CartanMatrix2:
    c12_mult: int
    c21_mult: int

    def to_json(self):
        return {"c12_mult": self.c12_mult, "c21_mult": self.c21_mult}


@dataclass(frozen=True)
class Root:
    x1: FieldElement
    x2: FieldElement

    def __neg__(self):
        return Root(-self.x1, -self.x2)

    @property
    def signs(self):
        return self.x1.sign(), self.x2.sign()

    def is_positive(self):
        s1, s2 = self.signs
        return s1 >= 0 and s2 >= 0 and (s1, s2) != (0, 0)

    def to_json(self):
        return [list(self.x1.coeffs), list(self.x2.coeffs)]


@dataclass(frozen=True)
class CartanGraph:
    p: int
    matrices: tuple
    rho1: tuple = None
    rho2: tuple = None

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 3:
            raise InvalidArgument(f"p must be an integer >= 3, got {self.p!r}")
        if not self.matrices:
            raise InvalidArgument("a Cartan graph needs at least one matrix")
        if self.periodic:
            if self.rho2 is not None:
                raise InvalidArgument("periodic graphs take rho from the parity rule")
        else:
            N = len(self.matrices)
            if self.rho2 is None or len(self.rho1) != N or len(self.rho2) != N:
                raise InvalidArgument(f"rho1 and rho2 must be maps on {N} objects")
            if any(not 0 <= x < N for x in self.rho1 + self.rho2):
                raise InvalidArgument("rho maps must take values in the object set")

    @property
    def periodic(self):
        return self.rho1 is None

    @property
    def ctx(self):
        return get_context(self.p)

    @property
    def residues(self):
        """Objects whose neighbourhoods represent all objects."""
        if self.periodic:
            return range(math.lcm(2, len(self.matrices)))
        return range(len(self.matrices))

    def rho(self, i: int, a: int) -> int:
        if self.periodic:
            if i == 1:
                return a + 1 if a % 2 == 0 else a - 1
            return a - 1 if a % 2 == 0 else a + 1
        return (self.rho1 if i == 1 else self.rho2)[a]

    def matrix(self, a: int) -> CartanMatrix2:
        return self.matrices[a % len(self.matrices)]

    def entry(self, a: int, i: int, j: int) -> FieldElement:
        """c^a_{ij} as a field element."""
        if i == j:
            return self.ctx(2)
        m = self.matrix(a)
        mult = m.c12_mult if i == 1 else m.c21_mult
        return embed_lambda(self.p, self.ctx) * mult

    def to_json(self):
        out = {"p": self.p}
        if self.periodic:
            out["objects"] = "periodic"
        else:
            out["objects"] = len(self.matrices)
            out["rho1"] = list(self.rho1)
            out["rho2"] = list(self.rho2)
        out["matrices"] = [m.to_json() for m in self.matrices]
        return out


def standard_graph(p: int, c12_mult: int, c21_mult: int) -> CartanGraph:
    """One object carrying a single matrix, with both rho the identity."""
    return CartanGraph(p, (CartanMatrix2(c12_mult, c21_mult),), (0,), (0,))


# ---------------------------------------------------------------------------


@dataclass
class GraphReport:
    ok: bool
    violations: list
    shape: str = None

    def __bool__(self):
        return self.ok


def _shape(g):
    if g.periodic:
        return "infinite string"
    N = len(g.matrices)
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        for i in (1, 2):
            b = g.rho(i, a)
            if b not in seen:
                seen.add(b)
                stack.append(b)
    if len(seen) != N:
        return "disconnected"
    loops = sum(1 for a in range(N) for i in (1, 2) if g.rho(i, a) == a)
    return "chain" if loops else "cycle"


def validate_graph(g: CartanGraph) -> GraphReport:
    v = []
    for a in g.residues:
        m = g.matrix(a)
        for name, val in (("c12", m.c12_mult), ("c21", m.c21_mult)):
            if val > 0:
                v.append(f"M1 at object {a}: {name} = {val}*lambda_p is positive")
        if (m.c12_mult == 0) != (m.c21_mult == 0):
            v.append(f"M2 at object {a}: c12 = {m.c12_mult}, c21 = {m.c21_mult}")
    for a in g.residues:
        for i in (1, 2):
            b = g.rho(i, a)
            if g.rho(i, b) != a:
                v.append(f"C1 at object {a}: rho_{i} is not an involution")
                continue
            for j in (1, 2):
                if g.entry(a, i, j) != g.entry(b, i, j):
                    v.append(f"C2 at object {a}: c_{i}{j} differs at rho_{i}({a}) = {b}")
    return GraphReport(not v, v, _shape(g))


def _sigma(g, a, i):
    """Columns of sigma_i^a: images of alpha_1 and alpha_2."""
    ctx = g.ctx
    one, zero = ctx.one, ctx.zero
    if i == 1:
        return ((-one, zero), (-g.entry(a, 1, 2), one))
    return ((one, -g.entry(a, 2, 1)), (zero, -one))


def _apply(cols, x):
    (a11, a21), (a12, a22) = cols
    return (a11 * x[0] + a12 * x[1], a21 * x[0] + a22 * x[1])


def _compose(m, s):
    return (_apply(m, s[0]), _apply(m, s[1]))


def reflect(g: CartanGraph, a: int, i: int, r: Root) -> Root:
    if i not in (1, 2):
        raise InvalidArgument(f"reflection index must be 1 or 2, got {i}")
    x1, x2 = _apply(_sigma(g, a, i), (r.x1, r.x2))
    return Root(x1, x2)


@dataclass
class RootSet:
    roots: frozenset
    closed: bool
    lengths: dict = field(repr=False)

    @property
    def positive(self):
        return frozenset(r for r in self.roots if r.is_positive())

    def up_to(self, k):
        return frozenset(r for r, n in self.lengths.items() if n <= k)


def _identity(ctx):
    return ((ctx.one, ctx.zero), (ctx.zero, ctx.one))


def real_roots(g: CartanGraph, a: int, cap: int = 64) -> RootSet:
    """Roots M(alpha_j) over alternating reflection words M of length <= cap into a."""
    ctx = g.ctx
    ident = _identity(ctx)
    lengths = {}
    for col in ident:
        lengths[Root(*col)] = 0
    frontier = [(a, ident, 1), (a, ident, 2)]
    closed = False
    for length in range(1, cap + 1):
        grew = False
        nxt = []
        for b, m, i in frontier:
            c = g.rho(i, b)
            m2 = _compose(m, _sigma(g, c, i))
            for col in m2:
                r = Root(*col)
                if r not in lengths:
                    lengths[r] = length
                    grew = True
            nxt.append((c, m2, 3 - i))
        frontier = nxt
        if not grew:
            closed = True
            break
    return RootSet(frozenset(lengths), closed, lengths)


def _alternating_walk(g, a, first, steps):
    b = a
    i = first
    for _ in range(steps):
        b = g.rho(i, b)
        i = 3 - i
    return b


@dataclass
class RootSystemReport:
    cap: int
    r1: bool
    r2: bool
    r3: bool
    r4: str  # "holds", "fails" or "vacuous"
    closed: dict
    m12: dict
    violations: list

    @property
    def holds(self):
        return self.r1 and self.r2 and self.r3 and self.r4 != "fails"

    @property
    def verdict(self):
        state = "hold" if self.holds else "fail"
        return f"root system axioms {state} up to word length {self.cap}"


def check_root_system(g: CartanGraph, cap: int = 64) -> RootSystemReport:
    violations = []
    sets = {}

    def roots_at(b):
        key = b % len(g.residues) if g.periodic else b
        if key not in sets:
            sets[key] = real_roots(g, key, cap + 1)
        return sets[key]

    r1 = r2 = r3 = True
    closed, m12 = {}, {}
    r4_states = []
    for a in g.residues:
        rs = roots_at(a)
        full = rs.closed and max(rs.lengths.values()) <= cap
        mine = rs.roots if full else rs.up_to(cap)
        closed[a] = full
        for r in mine:
            s1, s2 = r.signs
            if s1 * s2 < 0 or (s1, s2) == (0, 0):
                if r1:
                    violations.append(f"R1 at object {a}: root {r.to_json()} has mixed signs")
                r1 = False
            for axis, other in ((s2, r.x1), (s1, r.x2)):
                if axis == 0 and not (other == 1 or other == -1):
                    if r2:
                        violations.append(f"R2 at object {a}: axis root {r.to_json()}")
                    r2 = False
        for i in (1, 2):
            b = g.rho(i, a)
            target = roots_at(b)
            image = {reflect(g, a, i, r) for r in mine}
            if full and target.closed:
                ok = image == set(target.roots)
            else:
                ok = image <= set(target.roots) and target.up_to(cap - 1) <= image
            if not ok:
                if r3:
                    violations.append(f"R3 at object {a}: sigma_{i} does not map roots onto roots at {b}")
                r3 = False
        if full:
            m = sum(1 for r in mine if r.is_positive())
            m12[a] = m
            end = _alternating_walk(g, a, 1, 2 * m)
            if end == a:
                r4_states.append("holds")
            else:
                r4_states.append("fails")
                violations.append(f"R4 at object {a}: (rho_1 rho_2)^{m}({a}) = {end}")
        else:
            m12[a] = None
            r4_states.append("vacuous")
    if "fails" in r4_states:
        r4 = "fails"
    elif "vacuous" in r4_states:
        r4 = "vacuous"
    else:
        r4 = "holds"
    return RootSystemReport(cap, r1, r2, r3, r4, closed, m12, violations)


# ---------------------------------------------------------------------------


def minimal_period(word) -> tuple:
    word = tuple(word)
    n = len(word)
    for t in range(1, n + 1):
        if n % t == 0 and word == word[:t] * (n // t):
            return word[:t]
    return word


def quiddity_of_graph(g: CartanGraph, a0: int = 0) -> tuple:
    """Minimal-period word of multiples (q_0, q_1, ...) at a0."""
    shape = _shape(g)
    if shape == "disconnected":
        raise InvalidArgument("quiddity sequence needs a connected graph")
    mod = len(g.residues)
    key = (lambda b: b % mod) if g.periodic else (lambda b: b)
    word = []
    a = a0
    i = 0
    while True:
        m = g.matrix(a)
        word.append(-(m.c12_mult if i % 2 else m.c21_mult))
        i += 1
        a = g.rho(1 if i % 2 else 2, a)
        if i % 2 == 0 and key(a) == key(a0):
            break
    return minimal_period(word)


def graph_from_quiddity(q, p: int = None) -> CartanGraph:
    """Periodic graph on the integers realising the quiddity word q."""
    if isinstance(q, PeriodicQuiddity):
        p, word = q.p, q.multiples
    else:
        word = tuple(int(m) for m in q)
    if p is None:
        raise InvalidArgument("p is required for a bare quiddity word")
    if not word or any(m < 0 for m in word):
        raise InvalidArgument(f"multiples must be >= 0, got {list(word)}")
    T = len(word)
    K = math.lcm(2, T)
    mats = []
    for a in range(K):
        qa, qb = word[a % T], word[(a + 1) % T]
        if a % 2:
            mats.append(CartanMatrix2(-qa, -qb))
        else:
            mats.append(CartanMatrix2(-qb, -qa))
    return CartanGraph(p, tuple(mats))


def rotation_order(g: CartanGraph, a: int, limit: int = 256):
    """Least k >= 1 with (sigma_1 sigma_2)^k the identity at a, or None."""
    ident = _identity(g.ctx)
    b, m = a, ident
    for k in range(1, limit + 1):
        for i in (1, 2):
            c = g.rho(i, b)
            m = _compose(m, _sigma(g, c, i))
            b = c
        if b == a and m == ident:
            return k
    return None


def simply_connected_up_to(g: CartanGraph, cap: int = 64) -> bool:
    """Every closed alternating walk of length <= cap acts as the identity."""
    ctx = g.ctx
    ident = _identity(ctx)
    for a in g.residues:
        for first in (1, 2):
            b, m, i = a, ident, first
            for _ in range(cap):
                c = g.rho(i, b)
                m = _compose(m, _sigma(g, c, i))
                b, i = c, 3 - i
                if b == a and m != ident:
                    return False
    return True


def _key(x):
    return tuple(x.coeffs) if isinstance(x, FieldElement) else (x,)


def _canonical(word, length):
    w = [_key(x) for x in word] * (length // len(word))
    best = None
    for seq in (w, w[::-1]):
        for k in range(length):
            cand = tuple(seq[k:] + seq[:k])
            if best is None or cand < best:
                best = cand
    return best


def sequences_equivalent(s, t) -> bool:
    """Equality of periodic sequences up to shift and reversal."""
    if not s or not t:
        return not s and not t
    n = math.lcm(len(s), len(t))
    return _canonical(s, n) == _canonical(t, n)


# ---------------------------------------------------------------------------


@dataclass
class FriezeRoots:
    rightward: list
    leftward: list

    def as_set(self):
        return frozenset(self.rightward) | frozenset(self.leftward)


def roots_from_frieze(v: InfiniteFriezeView, anchor: int = 0, count: int = 8) -> FriezeRoots:
    """Positive roots at object `anchor` of the graph of v's quiddity.

    Roots come in pairs of entries on two neighbouring diagonals of the
    pattern; `count` roots are read in each direction, the k-th one coming
    from a reflection word of length k.
    """
    e = v.entry
    a = anchor
    if a % 2 == 0:
        right = [Root(e(a, a + t), e(a + 1, a + t)) for t in range(1, count + 1)]
        left = [Root(e(s, a), e(s, a + 1)) for s in range(a, a - count, -1)]
    else:
        right = [Root(e(s, a + 1), e(s, a)) for s in range(a, a - count, -1)]
        left = [Root(e(a + 1, t), e(a, t)) for t in range(a + 1, a + 1 + count)]
    return FriezeRoots(right, left)
