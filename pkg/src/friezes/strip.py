"""Periodic infinite frieze patterns and p-angulations of the infinite strip.

An infinite pattern of type p is given by a periodic quiddity
q_i = m_{i mod T} * lambda_p, where q_i = f_{i-1,i+1} sits above lower
vertex i.  Entries follow from f_{i,i} = 0, f_{i,i+1} = 1 and
f_{i,j+1} = f_{i,j} q_j - f_{i,j-1}.

A strip p-angulation is stored per period: peripheral arc classes (i, j) with
0 <= i < T meaning arcs (i+kT, j+kT), and bridging arc classes (u, v) with
0 <= u < T meaning arcs from lower vertex u+kT to upper vertex v+k*advance.
"""

import threading
from dataclasses import dataclass, field

from .dissection import build_dissection, entries_from_vertex
from .errors import (
    ConstructionBug,
    CrossingError,
    InternalInconsistency,
    InvalidArgument,
    InvalidStripError,
    NotAnInfiniteFriezeError,
    NotRealizableError,
    SpanTooSmall,
)
from .field import FieldContext, embed_lambda, get_context
from .frieze import FriezePattern, from_quiddity
from .render import offset_rows


@dataclass(frozen=True)
class PeriodicQuiddity:
    p: int
    multiples: tuple

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 3:
            raise InvalidArgument(f"p must be an integer >= 3, got {self.p!r}")
        object.__setattr__(self, "multiples", tuple(int(m) for m in self.multiples))
        if not self.multiples:
            raise InvalidArgument("empty quiddity word")
        if any(m < 1 for m in self.multiples):
            raise InvalidArgument(f"multiples must be >= 1, got {list(self.multiples)}")

    @property
    def T(self):
        return len(self.multiples)

    @property
    def ctx(self) -> FieldContext:
        return get_context(self.p)

    def q(self, i):
        return embed_lambda(self.p, self.ctx) * self.multiples[i % self.T]

    def to_json(self):
        return {"p": self.p, "period": self.T, "multiples": list(self.multiples)}


class InfiniteFriezeView:
    """Lazily propagated entries of the pattern attached to a quiddity."""

    def __init__(self, quiddity: PeriodicQuiddity):
        self.quiddity = quiddity
        self.ctx = quiddity.ctx
        self._q = [quiddity.q(i) for i in range(quiddity.T)]
        self._rows = [[self.ctx.zero, self.ctx.one] for _ in range(quiddity.T)]
        self._lock = threading.Lock()
        self.height_checked = 1

    @property
    def p(self):
        return self.quiddity.p

    @property
    def T(self):
        return self.quiddity.T

    def entry(self, i: int, j: int):
        if j < i:
            raise InvalidArgument(f"entry ({i},{j}) needs j >= i")
        T = self.T
        base = i % T
        r = j - i
        row = self._rows[base]
        if r >= len(row):
            with self._lock:
                q = self._q
                while len(row) <= r:
                    k = len(row) - 1  # extend f_{base, base+k+1}
                    row.append(row[k] * q[(base + k) % T] - row[k - 1])
        return row[r]

    def window(self, H: int) -> dict:
        return {(i, i + r): self.entry(i, i + r) for i in range(self.T) for r in range(2, H + 1)}

    def render(self, H: int, columns: int = None, ascii_only=False) -> str:
        """Rows H down to 1 with entries f_{i,i+r}, i = 0..columns-1."""
        columns = columns or max(2 * self.T, 6)
        rows = [
            (r - 1, [self.entry(i, i + r) for i in range(columns)])
            for r in range(H, 0, -1)
        ]
        return offset_rows(rows, ascii_only=ascii_only)


@dataclass
class PositivityReport:
    ok: bool
    height_checked: int
    location: tuple = None
    kind: str = None
    value: object = None


def positivity_check(v: InfiniteFriezeView, H: int = None) -> PositivityReport:
    """Certify rows 2..H over one period, raising on the first bad entry.

    An entry fails when it is not positive or when it is neither 1 nor at
    least lambda_p.
    """
    H = 4 * v.T * v.p if H is None else H
    if H < 2:
        raise InvalidArgument(f"row bound must be >= 2, got {H}")
    lam = embed_lambda(v.p, v.ctx)
    for r in range(2, H + 1):
        for i in range(v.T):
            x = v.entry(i, i + r)
            if x.sign() <= 0:
                kind = "nonpositive"
            elif x != 1 and (x - lam).sign() < 0:
                kind = "below lambda_p"
            else:
                continue
            report = PositivityReport(False, r - 1, (i, i + r), kind, x)
            err = NotAnInfiniteFriezeError(f"f({i},{i + r}) = {x} is {kind}", (i, i + r))
            err.report = report
            raise err
    v.height_checked = max(v.height_checked, H)
    return PositivityReport(True, H)


def is_infinite_frieze(v: InfiniteFriezeView, H: int = None) -> bool:
    try:
        positivity_check(v, H)
    except NotAnInfiniteFriezeError:
        return False
    return True


# ---------------------------------------------------------------------------
# periodic arc bookkeeping


def _arcs_crossing(a, b):
    (i, j), (k, l) = a, b
    return i < k < j < l or k < i < l < j


def _translates_near(arc, T, lo, hi):
    """Translates (i+kT, j+kT) of arc meeting the integer interval [lo, hi]."""
    i, j = arc
    k0 = (lo - j) // T - 1
    k1 = (hi - i) // T + 1
    return [(i + k * T, j + k * T) for k in range(k0, k1 + 1) if i + k * T <= hi and j + k * T >= lo]


def _check_periodic_noncrossing(arcs, T):
    arcs = sorted(arcs)
    for a in arcs:
        for b in arcs:
            for c in _translates_near(b, T, a[0], a[1]):
                if _arcs_crossing(a, c):
                    return a, c
    return None


def _arcs_at(arcs, T, b):
    return [a for arc in arcs for a in _translates_near(arc, T, b, b) if b in a]


def _saturated(arcs, T, b):
    return any(a[0] < b < a[1] for arc in arcs for a in _translates_near(arc, T, b, b))


def theta_arcs(v: InfiniteFriezeView, max_span: int = None) -> frozenset:
    """Peripheral arcs (i, j), 0 <= i < T, i+2 <= j <= i+max_span, f_{i,j} = 1."""
    max_span = 4 * v.T * v.p if max_span is None else max_span
    arcs = frozenset(
        (i, j)
        for i in range(v.T)
        for j in range(i + 2, i + max_span + 1)
        if v.entry(i, j) == 1
    )
    bad = _check_periodic_noncrossing(arcs, v.T)
    if bad:
        raise InternalInconsistency(f"1-entries {bad[0]} and {bad[1]} cross", bad)
    return arcs


@dataclass(frozen=True)
class VertexReport:
    vertex: int
    defect: int  # multiple of lambda_p
    saturated: bool
    arcs_attached: int


def vertex_report(v: InfiniteFriezeView, theta, b0: int) -> VertexReport:
    attached = len(_arcs_at(theta, v.T, b0))
    defect = v.quiddity.multiples[b0 % v.T] - 1 - attached
    if defect < 0:
        raise SpanTooSmall(
            f"vertex {b0} meets {attached} arcs but its quiddity allows at most "
            f"{v.quiddity.multiples[b0 % v.T] - 1}",
            b0,
        )
    return VertexReport(b0, defect, _saturated(theta, v.T, b0), attached)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StripAngulation:
    p: int
    T: int
    peripheral: frozenset
    bridging: tuple
    upper_advance: int

    def to_json(self):
        return {
            "p": self.p,
            "period": self.T,
            "peripheral": [list(a) for a in sorted(self.peripheral)],
            "bridging": [list(b) for b in self.bridging],
            "upper_advance": self.upper_advance,
        }

    def bridging_between(self, lo, hi):
        """Bridging arcs with lower end in [lo, hi], in left-to-right order."""
        T, D = self.T, self.upper_advance
        out = []
        for k in range(lo // T - 1, hi // T + 2):
            for u, w in self.bridging:
                x = u + k * T
                if lo <= x <= hi:
                    out.append((x, w + k * D))
        return sorted(out)


def to_strip(v: InfiniteFriezeView, max_span: int = None) -> StripAngulation:
    p, T = v.p, v.T
    theta = theta_arcs(v, max_span)
    reports = [vertex_report(v, theta, b) for b in range(T)]
    for rep in reports:
        if rep.saturated and rep.defect:
            raise NotRealizableError(
                f"saturated vertex {rep.vertex} has defect {rep.defect}", rep.vertex
            )
    free = [rep for rep in reports if not rep.saturated]
    if not free:
        strip = StripAngulation(p, T, theta, (), 0)
    else:
        if all(rep.defect == 0 for rep in free):
            raise NotRealizableError("no vertex has positive defect")
        # runs of consecutive zero-defect free vertices, read cyclically
        seq = free + free
        run = 0
        for rep in seq:
            run = run + 1 if rep.defect == 0 else 0
            if run > p - 3:
                raise NotRealizableError(
                    f"{run} consecutive free vertices without defect (at most {p - 3} allowed)",
                    rep.vertex,
                )
        anchors = [rep.vertex for rep in free for _ in range(rep.defect)]
        free_pos = {rep.vertex: k for k, rep in enumerate(free)}
        nfree = len(free)
        upper = [0]
        advance = 0
        for k in range(len(anchors)):
            a = anchors[k]
            if k + 1 < len(anchors):
                b, wrap = anchors[k + 1], 0
            else:
                b, wrap = anchors[0], 1
            b_low = free_pos[b] + wrap * nfree - free_pos[a] + 1
            cell_upper = p - b_low
            if cell_upper < 1:
                raise NotRealizableError(
                    f"{b_low} lower vertices between anchors {a} and {b}", (a, b)
                )
            if wrap:
                advance = upper[-1] + cell_upper - 1
            else:
                upper.append(upper[-1] + cell_upper - 1)
        strip = StripAngulation(p, T, theta, tuple(zip(anchors, upper)), advance)
    try:
        regenerated = strip_quiddity(strip)
    except InvalidStripError as exc:
        raise ConstructionBug(f"constructed strip is invalid: {exc}") from exc
    if regenerated != v.quiddity:
        raise ConstructionBug(
            f"constructed strip regenerates {list(regenerated.multiples)}, "
            f"expected {list(v.quiddity.multiples)}"
        )
    return strip


# ---------------------------------------------------------------------------


def _cell_sizes_under(strip, arc):
    """Check the cells below the peripheral arc are p-gons."""
    i, j = arc
    T = strip.T
    inner = [
        (a - i, b - i)
        for c in strip.peripheral
        for a, b in _translates_near(c, T, i, j)
        if i <= a and b <= j and (a, b) != (i, j)
    ]
    d = build_dissection(j - i + 1, sorted(set(inner)))
    return [len(c) for c in d.cells]


def validate_strip(s: StripAngulation):
    p, T = s.p, s.T
    if not isinstance(p, int) or p < 3 or not isinstance(T, int) or T < 1:
        raise InvalidArgument(f"need p >= 3 and period >= 1, got p={p!r}, period={T!r}")
    if s.upper_advance < 0:
        raise InvalidArgument(f"upper advance must be >= 0, got {s.upper_advance}")
    for i, j in s.peripheral:
        if not (0 <= i < T and j >= i + 2):
            raise InvalidArgument(f"peripheral class {(i, j)} must have 0 <= i < {T} and j >= i+2")
    for u, _ in s.bridging:
        if not 0 <= u < T:
            raise InvalidArgument(f"bridging class lower end {u} outside 0..{T - 1}")
    if list(s.bridging) != sorted(s.bridging) or len(set(s.bridging)) != len(s.bridging):
        raise InvalidStripError("bridging classes must be distinct and sorted left to right")
    bad = _check_periodic_noncrossing(s.peripheral, T)
    if bad:
        raise InvalidStripError(f"peripheral arcs {bad[0]} and {bad[1]} cross", bad)
    for u, w in s.bridging:
        if _saturated(s.peripheral, T, u):
            raise InvalidStripError(f"bridging arc from {u} crosses a peripheral arc", (u, w))
    for arc in s.peripheral:
        if any(_saturated(s.peripheral, T, b) for b in arc):
            continue  # not maximal; covered by the enclosing arc
        sizes = _cell_sizes_under(s, arc)
        if any(size != p for size in sizes):
            raise InvalidStripError(f"cells below arc {arc} have sizes {sizes}", arc)
    free = [b for b in range(T) if not _saturated(s.peripheral, T, b)]
    if not s.bridging:
        if free:
            raise InvalidStripError("lower vertices meet an unbounded region (no bridging arcs)")
        return
    u0, w0 = s.bridging[0]
    seq = list(s.bridging) + [(u0 + T, w0 + s.upper_advance)]
    for (x1, w1), (x2, w2) in zip(seq, seq[1:]):
        if w2 < w1:
            raise InvalidStripError(f"bridging arcs {(x1, w1)} and {(x2, w2)} cross")
        b_low = sum(1 for b in range(x1, x2 + 1) if (b % T) in free)
        size = b_low + (w2 - w1 + 1)
        if size != p:
            raise InvalidStripError(
                f"cell between bridging arcs {(x1, w1)} and {(x2, w2)} has {size} vertices"
            )


def strip_quiddity(s: StripAngulation) -> PeriodicQuiddity:
    """Quiddity read off a strip: lambda_p times the number of cells at each vertex."""
    validate_strip(s)
    counts = []
    for b in range(s.T):
        arcs = len(_arcs_at(s.peripheral, s.T, b))
        arcs += sum(1 for u, _ in s.bridging if u == b)
        counts.append(arcs + 1)
    return PeriodicQuiddity(s.p, tuple(counts))


def _window_polygon(s: StripAngulation, lo: int, hi: int):
    """Finite dissected polygon containing lower vertices lo..hi.

    Returns the dissection and the polygon index of each lower vertex.
    """
    T = s.T
    if not s.bridging:
        raise InvalidStripError("window computation needs bridging arcs")
    anchors = sorted({u for u, _ in s.bridging})
    x_left = max(u + k * T for u in anchors for k in range(lo // T - 2, lo // T + 1) if u + k * T <= lo)
    x_right = min(u + k * T for u in anchors for k in range(hi // T, hi // T + 3) if u + k * T >= hi)
    arcs = s.bridging_between(x_left, x_right)
    beta_l = max(a for a in arcs if a[0] == x_left)
    beta_r = min(a for a in arcs if a[0] == x_right)
    u_left, u_right = beta_l[1], beta_r[1]
    index = {("L", x): x - x_left for x in range(x_left, x_right + 1)}
    base = x_right - x_left + 1
    for t, w in enumerate(range(u_right, u_left - 1, -1)):
        index[("U", w)] = base + t
    n = base + (u_right - u_left + 1)
    diags = set()
    for c in s.peripheral:
        for a, b in _translates_near(c, T, x_left, x_right):
            if x_left <= a and b <= x_right:
                diags.add((index[("L", a)], index[("L", b)]))
    for x, w in arcs:
        if beta_l < (x, w) < beta_r:
            diags.add((index[("L", x)], index[("U", w)]))
    d = build_dissection(n, sorted(diags))
    return d, {x: index[("L", x)] for x in range(x_left, x_right + 1)}


def from_strip(s: StripAngulation, height: int = None):
    """Quiddity and window entries f_{i,i+r}, 0 <= i < T, 2 <= r <= height.

    Entries are computed by label propagation on a finite piece of the strip.
    """
    quid = strip_quiddity(s)
    height = 4 * s.T * s.p if height is None else height
    window = {}
    for i in range(s.T):
        try:
            d, idx = _window_polygon(s, i, i + height)
        except CrossingError as exc:
            raise InvalidStripError(str(exc)) from exc
        if any(len(c) != s.p for c in d.cells):
            raise InvalidStripError(f"window around {i} has cells of sizes {sorted(set(map(len, d.cells)))}")
        labels = entries_from_vertex(d, idx[i])
        ctx = quid.ctx
        for r in range(2, height + 1):
            window[(i, i + r)] = ctx(labels[idx[i + r]])
    return quid, window


def extract_finite(v: InfiniteFriezeView, arc) -> FriezePattern:
    """The finite pattern sitting below a 1-entry f_{i,j}."""
    i, j = arc
    if j < i + 2 or v.entry(i, j) != 1:
        raise InvalidArgument(f"f({i},{j}) is not a 1-entry above the quiddity row")
    n = j - i + 1

    def c(a, b):
        a, b = min(a, b), max(a, b)
        return v.entry(i + a, i + b)

    q = [c((k - 1) % n, (k + 1) % n) for k in range(n)]
    f = from_quiddity(q, v.ctx)
    for a in range(n):
        for b in range(a + 1, n):
            if f.entry(a, b) != c(a, b):
                raise InternalInconsistency(f"extracted pattern differs at ({a},{b})", (a, b))
    return f
