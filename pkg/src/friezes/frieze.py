"""Finite frieze patterns.

A pattern on n vertices stores f_{i,j} for 0 <= i < n and i <= j <= i+n,
with f_{i,i} = 0, f_{i,i+1} = 1, f_{i,i+n-1} = 1, f_{i,i+n} = 0 and
periodicity f_{i+n,j+n} = f_{i,j}.  Rows are numbered by j - i, so row 1 is
the bottom row of 1s and row 2 is the quiddity row, with f_{i,i+2} = q_{i+1}.
"""

from dataclasses import dataclass
from itertools import combinations

from .dissection import all_entries, build_dissection
from .errors import (
    CrossingError,
    InvalidArgument,
    NotAFriezeError,
    PositivityError,
    ReconstructionError,
)
from .field import (
    FieldContext,
    FieldElement,
    as_integer_multiple,
    common_context,
    convert,
    embed_lambda,
    get_context,
)
from .render import offset_rows


def _context_for(values, ctx=None):
    ctxs = [v.ctx for v in values if isinstance(v, FieldElement)]
    if ctx is not None:
        ctxs.append(ctx)
    return common_context(*ctxs) if ctxs else get_context(3)


@dataclass(eq=False)
class FriezePattern:
    n: int
    ctx: FieldContext
    table: tuple  # table[i][r] = f_{i,i+r}

    @property
    def height(self):
        return self.n - 3

    def entry(self, i: int, j: int) -> FieldElement:
        r = j - i
        if not 0 <= r <= self.n:
            raise InvalidArgument(f"({i},{j}) lies outside the pattern")
        return self.table[i % self.n][r]

    def row(self, r: int) -> list:
        return [self.table[i][r] for i in range(self.n)]

    @property
    def quiddity(self) -> list:
        return [self.entry(v - 1, v + 1) for v in range(self.n)]

    def __eq__(self, other):
        if not isinstance(other, FriezePattern) or other.n != self.n:
            return False
        if other.ctx.L == self.ctx.L:
            return other.table == self.table
        ctx = common_context(self.ctx, other.ctx)
        return all(
            convert(a, ctx) == convert(b, ctx)
            for ra, rb in zip(self.table, other.table)
            for a, b in zip(ra, rb)
        )

    __hash__ = None

    def to_json(self):
        return {
            "n": self.n,
            "L": self.ctx.L,
            "quiddity": [list(q.coeffs) for q in self.quiddity],
            "rows": [[list(e.coeffs) for e in self.row(r)] for r in range(1, self.n)],
        }

    def render(self, ascii_only=False, highlight=False) -> str:
        """Rows 1 (top) to n-1, entry f_{i,i+r} at half-column 2i + r.

        Every row shows the entries whose half-column lies in 0..2n+2.  With
        highlight, the fundamental domain {f_{i,j} : 0 <= i < j <= n-1} is
        bracketed.
        """
        n = self.n
        rows = []
        marks = set()
        for k, r in enumerate(range(1, n)):
            first = -(r // 2)
            last = (2 * n + 2 - r) // 2
            rows.append((2 * first + r, [self.entry(i, i + r) for i in range(first, last + 1)]))
            marks.update((k, i - first) for i in range(0, n - r))
        return offset_rows(rows, marks if highlight else None, ascii_only)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, n, ctx, rows):
        """Unchecked pattern from rows 1..n-1 (each of length n)."""
        if len(rows) != n - 1 or any(len(r) != n for r in rows):
            raise InvalidArgument(f"expected {n - 1} rows of length {n}")
        table = []
        for i in range(n):
            table.append(tuple([ctx.zero] + [ctx(rows[r - 1][i]) for r in range(1, n)] + [ctx.zero]))
        return cls(n, ctx, tuple(table))

    @classmethod
    def from_entry_table(cls, et):
        n = et.n
        table = tuple(tuple(et[i, i + r] for r in range(n + 1)) for i in range(n))
        return cls(n, et.ctx, table)


def from_quiddity(q, ctx=None) -> FriezePattern:
    n = len(q)
    if n < 3:
        raise InvalidArgument(f"a frieze needs n >= 3, got {n}")
    ctx = _context_for(q, ctx)
    q = [ctx(v) for v in q]
    zero, one = ctx.zero, ctx.one
    table = []
    for i in range(n):
        row = [zero, one]
        for r in range(1, n):
            row.append(row[r] * q[(i + r) % n] - row[r - 1])
        table.append(tuple(row))
    for i, row in enumerate(table):
        if row[n - 1] != 1:
            raise NotAFriezeError(
                f"row {n - 1} is not all 1s: f({i},{i + n - 1}) = {row[n - 1]}", (i, i + n - 1)
            )
    for i, row in enumerate(table):
        if row[n]:
            raise NotAFriezeError(f"row {n} is not all 0s at column {i}", (i, i + n))
    for r in range(2, n - 1):
        for i, row in enumerate(table):
            if row[r].sign() <= 0:
                raise PositivityError(
                    f"entry f({i},{i + r}) = {row[r]} is not positive", (i, i + r)
                )
    return FriezePattern(n, ctx, tuple(table))


@dataclass
class Violation:
    kind: str
    location: tuple
    detail: str

    def __str__(self):
        return f"{self.kind} at {self.location}: {self.detail}"


@dataclass
class VerifyReport:
    ok: bool
    checked: dict
    violation: Violation = None

    def __bool__(self):
        return self.ok


def verify(f: FriezePattern) -> VerifyReport:
    n, e = f.n, f.entry
    checked = {"boundary": 0, "diamond": 0, "ptolemy": 0, "positivity": 0, "glide": 0}

    def fail(kind, loc, detail):
        return VerifyReport(False, checked, Violation(kind, loc, detail))

    for i in range(n):
        for r, want in ((0, 0), (1, 1), (n - 1, 1), (n, 0)):
            checked["boundary"] += 1
            if e(i, i + r) != want:
                return fail("boundary", (i, i + r), f"expected {want}, found {e(i, i + r)}")
    for i in range(n):
        for j in range(i + 1, i + n - 1):
            checked["diamond"] += 1
            det = e(i, j) * e(i + 1, j + 1) - e(i, j + 1) * e(i + 1, j)
            if det != 1:
                return fail("diamond", (i, j), f"determinant {det}")
    c = lambda a, b: e(min(a, b), max(a, b))  # noqa: E731
    for i, k, j, l in combinations(range(n), 4):
        checked["ptolemy"] += 1
        if c(i, j) * c(k, l) != c(i, k) * c(j, l) + c(i, l) * c(k, j):
            return fail("ptolemy", (i, k, j, l), "crossing relation fails")
    for i in range(n):
        for r in range(1, n):
            checked["positivity"] += 1
            if e(i, i + r).sign() <= 0:
                return fail("positivity", (i, i + r), f"entry {e(i, i + r)}")
    for i in range(n):
        for j in range(i, i + n + 1):
            checked["glide"] += 1
            if e(i, j) != e(j, i + n):
                return fail("glide", (i, j), f"f({i},{j}) != f({j},{i + n})")
    return VerifyReport(True, checked)


def bound_violation(f: FriezePattern, p: int):
    """First interior entry that is neither 1 nor >= lambda_p, else None."""
    lam = embed_lambda(p, f.ctx)
    for r in range(2, f.n - 1):
        for i in range(f.n):
            x = f.entry(i, i + r)
            if x != 1 and (x - lam).sign() < 0:
                return (i, i + r)
    return None


def _multiple(a, p):
    try:
        return as_integer_multiple(a, p)
    except InvalidArgument:
        return None


def type_of(f: FriezePattern, p_max: int = None) -> set:
    p_max = f.ctx.L if p_max is None else p_max
    out = set()
    q = f.quiddity
    for p in range(3, p_max + 1):
        ms = [_multiple(x, p) for x in q]
        if all(m is not None and m >= 1 for m in ms):
            out.add(p)
    return out


def to_dissection(f: FriezePattern):
    n = f.n
    diags = [
        (i, j)
        for i in range(n)
        for j in range(i + 2, n)
        if not (i == 0 and j == n - 1) and f.entry(i, j) == 1
    ]
    try:
        d = build_dissection(n, diags)
    except CrossingError as exc:
        raise ReconstructionError(f"1-entries give crossing diagonals: {exc}") from exc
    rebuilt = FriezePattern.from_entry_table(all_entries(d))
    if rebuilt != f:
        raise ReconstructionError("entries computed from the dissection differ from the pattern")
    return d


@dataclass
class RowCharacterization:
    p: int
    odd_rows_integers: bool
    even_rows_multiples: bool
    congruence: bool

    @property
    def holds(self):
        return self.odd_rows_integers and self.even_rows_multiples


def characterize_46(f: FriezePattern) -> dict:
    """Row structure test for types 4 and 6.

    For p = 4 the congruence flag records that odd-row integers are odd; for
    p = 6 it records that row 2k+1 is congruent to (-1)^k mod 3.
    """
    out = {}
    for p in (4, 6):
        odd_int = even_mult = congr = True
        for r in range(1, f.n):
            for x in f.row(r):
                if r % 2:
                    if not (x.is_integer() and x.coeffs[0] > 0):
                        odd_int = congr = False
                        continue
                    v = x.coeffs[0]
                    k = (r - 1) // 2
                    if p == 4 and v % 2 != 1:
                        congr = False
                    if p == 6 and (v - (-1) ** k) % 3:
                        congr = False
                else:
                    m = _multiple(x, p)
                    if m is None or m < 1:
                        even_mult = False
        out[p] = RowCharacterization(p, odd_int, even_mult, congr)
    return out
