"""Polygon dissections and the label-propagation algorithm for frieze entries.

Vertices of the n-gon are 0..n-1 counterclockwise.  Cells are recovered from
the diagonals by walking faces of the planar subdivision; each cell is a
counterclockwise vertex tuple starting at its smallest vertex.

The entry c_{i,j} is computed from vertex i by walking the dual tree of
cells: cells at i get V_{d-1}(lambda_q) at distance d from i, and a cell
entered through an edge (s, t) with labels a, b gets
a V_{q-d-2}(lambda_q) + b V_{d-1}(lambda_q) at distance d from s away from t.
"""

import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .chebyshev import v_sequence
from .errors import CrossingError, InvalidArgument
from .field import FieldContext, embed_lambda, get_context


def _normalize(n, pair):
    try:
        i, j = (int(v) for v in pair)
    except (TypeError, ValueError):
        raise InvalidArgument(f"diagonal must be a pair of integers, got {pair!r}")
    if not (0 <= i < n and 0 <= j < n):
        raise InvalidArgument(f"diagonal {pair!r} has a vertex outside 0..{n - 1}")
    i, j = min(i, j), max(i, j)
    if j - i < 2 or (i == 0 and j == n - 1):
        raise InvalidArgument(f"{(i, j)} is not a diagonal of the {n}-gon")
    return i, j


def crosses(a, b) -> bool:
    """Whether chords a=(i,k) and b=(j,l) (each sorted) cross in the interior."""
    (i, k), (j, l) = a, b
    return i < j < k < l or j < i < l < k


def _face_walk(n, diagonals):
    nbrs = {v: {(v + 1) % n, (v - 1) % n} for v in range(n)}
    for i, j in diagonals:
        nbrs[i].add(j)
        nbrs[j].add(i)
    # at v, arriving from u, the next vertex is the neighbour with the
    # largest counterclockwise offset below that of u
    order = {v: sorted(nbrs[v], key=lambda w: (w - v) % n) for v in range(n)}
    seen = set()
    half_edges = [(v, (v + 1) % n) for v in range(n)]
    for i, j in sorted(diagonals):
        half_edges += [(i, j), (j, i)]
    cells = []
    for start in half_edges:
        if start in seen:
            continue
        face = []
        u, v = start
        while (u, v) not in seen:
            seen.add((u, v))
            face.append(u)
            off_u = (u - v) % n
            w = max((w for w in order[v] if (w - v) % n < off_u), key=lambda w: (w - v) % n)
            u, v = v, w
        k = face.index(min(face))
        cells.append(tuple(face[k:] + face[:k]))
    return sorted(cells)


@dataclass(frozen=True, eq=False)
class Dissection:
    n: int
    diagonals: frozenset
    cells: tuple
    ctx: FieldContext = field(repr=False)

    def __eq__(self, other):
        return (
            isinstance(other, Dissection)
            and other.n == self.n
            and other.diagonals == self.diagonals
        )

    def __hash__(self):
        return hash((self.n, self.diagonals))

    @property
    def cell_sizes(self):
        return tuple(len(c) for c in self.cells)

    def cells_at(self, v):
        return [k for k, c in enumerate(self.cells) if v in c]

    def to_json(self):
        return {"n": self.n, "diagonals": [list(d) for d in sorted(self.diagonals)]}


def build_dissection(n: int, diagonals) -> Dissection:
    if not isinstance(n, int) or n < 3:
        raise InvalidArgument(f"polygon size must be an integer >= 3, got {n!r}")
    seen = []
    for pair in diagonals:
        d = _normalize(n, pair)
        if d in seen:
            raise InvalidArgument(f"duplicate diagonal {d}")
        for other in seen:
            if crosses(d, other):
                raise CrossingError(other, d)
        seen.append(d)
    cells = _face_walk(n, seen)
    ctx = get_context(math.lcm(*(len(c) for c in cells)))
    return Dissection(n, frozenset(seen), tuple(cells), ctx)


def quiddity(d: Dissection) -> list:
    ctx = d.ctx
    out = [ctx.zero] * d.n
    for cell in d.cells:
        lam = embed_lambda(len(cell), ctx)
        for v in cell:
            out[v] = out[v] + lam
    return out


def _v_table(ctx, q):
    """[V_{-1}(lambda_q), ..., V_{q-2}(lambda_q)] indexed by k+1."""
    key = ("V", q)
    table = ctx._lambda_cache.get(key)
    if table is None:
        table = v_sequence(embed_lambda(q, ctx), q - 2)
        ctx._lambda_cache[key] = table
    return table


def _adjacency(d: Dissection):
    """Map each diagonal to the two cells bordering it."""
    by_edge = {}
    for k, cell in enumerate(d.cells):
        q = len(cell)
        for t in range(q):
            a, b = cell[t], cell[(t + 1) % q]
            by_edge.setdefault((min(a, b), max(a, b)), []).append(k)
    return by_edge


def entries_from_vertex(d: Dissection, i: int) -> list:
    """Labels c_{i,j} for j = 0..n-1."""
    n = d.n
    if not 0 <= i < n:
        raise InvalidArgument(f"vertex {i} outside 0..{n - 1}")
    ctx = d.ctx
    cells = d.cells
    by_edge = _adjacency(d)
    labels = [None] * n
    labels[i] = ctx.zero
    done = set()
    queue = deque()
    for k, cell in enumerate(cells):
        if i not in cell:
            continue
        q = len(cell)
        V = _v_table(ctx, q)
        pos = cell.index(i)
        for t, v in enumerate(cell):
            dist = (t - pos) % q
            labels[v] = V[dist]  # V_{dist-1}
        done.add(k)
        queue.append(k)
    while queue:
        k = queue.popleft()
        cell = cells[k]
        q = len(cell)
        for t in range(q):
            s, u = cell[t], cell[(t + 1) % q]
            for k2 in by_edge[(min(s, u), max(s, u))]:
                if k2 in done:
                    continue
                new = cells[k2]
                q2 = len(new)
                V = _v_table(ctx, q2)
                a, b = labels[s], labels[u]
                ps = new.index(s)
                # in the neighbour the shared edge is traversed as u -> s,
                # so moving away from u means moving forward from s
                for t2, w in enumerate(new):
                    dist = (t2 - ps) % q2
                    labels[w] = a * V[q2 - dist - 1] + b * V[dist]
                done.add(k2)
                queue.append(k2)
    return labels


@dataclass
class EntryTable:
    n: int
    ctx: FieldContext
    values: dict

    def __getitem__(self, key):
        i, j = key
        return self.values[(i % self.n, j % self.n)]

    def to_json(self):
        return {
            "n": self.n,
            "L": self.ctx.L,
            "entries": [
                [i, j, list(self.values[(i, j)].coeffs)]
                for i in range(self.n)
                for j in range(self.n)
            ],
        }


def all_entries(d: Dissection) -> EntryTable:
    values = {}
    for i in range(d.n):
        for j, c in enumerate(entries_from_vertex(d, i)):
            values[(i, j)] = c
    return EntryTable(d.n, d.ctx, values)


@lru_cache(maxsize=None)
def _angulate(a, b, p):
    """All p-angulations of the polygon on vertices a..b (closing chord (a,b)).

    Returns a tuple of frozensets of internal diagonals, including the chords
    that bound the cell on (a, b) but excluding (a, b) itself.
    """
    size = b - a + 1
    if size == 2:
        return (frozenset(),)
    if size < p or (size - 2) % (p - 2):
        return ()
    out = []
    for mid in combinations(range(a + 1, b), p - 2):
        corners = (a,) + mid + (b,)
        parts = [frozenset()]
        for x, y in zip(corners, corners[1:]):
            sub = _angulate(x, y, p)
            if not sub:
                parts = []
                break
            chord = frozenset([(x, y)]) if y - x >= 2 else frozenset()
            parts = [acc | s | chord for acc in parts for s in sub]
        out.extend(parts)
    return tuple(out)


def enumerate_p_angulations(n: int, p: int) -> list:
    if p < 3:
        raise InvalidArgument(f"p must be >= 3, got {p}")
    if n < 3 or (n - 2) % (p - 2):
        return []
    return [build_dissection(n, sorted(diags)) for diags in _angulate(0, n - 1, p)]


def enumerate_dissections(n: int) -> list:
    """All dissections of the n-gon (every non-crossing set of diagonals)."""
    diags = [(i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)]
    out = []

    def grow(k, chosen):
        if k == len(diags):
            out.append(build_dissection(n, chosen))
            return
        grow(k + 1, chosen)
        d = diags[k]
        if all(not crosses(d, c) for c in chosen):
            grow(k + 1, chosen + [d])

    grow(0, [])
    return out
