"""Named worked examples, each rendered as deterministic text."""

from .cartan import (
    CartanGraph,
    CartanMatrix2,
    check_root_system,
    graph_from_quiddity,
    quiddity_of_graph,
    real_roots,
    standard_graph,
    validate_graph,
)
from .dissection import all_entries, build_dissection
from .errors import InvalidArgument
from .frieze import FriezePattern
from .render import pretty
from .strip import InfiniteFriezeView, PeriodicQuiddity, from_strip, positivity_check, to_strip


def _dissection_frieze(n, diagonals, ascii_only):
    d = build_dissection(n, diagonals)
    f = FriezePattern.from_entry_table(all_entries(d))
    head = f"n={n} diagonals={sorted(d.diagonals)} cells={list(d.cells)}\n"
    return head + f.render(ascii_only=ascii_only)


def _window(p, multiples, H, ascii_only):
    v = InfiniteFriezeView(PeriodicQuiddity(p, multiples))
    positivity_check(v, H)
    head = f"p={p} quiddity multiples={list(multiples)} rows 1..{H}\n"
    return head + v.render(H, ascii_only=ascii_only)


def _strip(p, multiples, H, ascii_only):
    v = InfiniteFriezeView(PeriodicQuiddity(p, multiples))
    positivity_check(v)
    s = to_strip(v)
    quid, window = from_strip(s, H)
    lines = [
        f"p={p} period={s.T} quiddity multiples={list(quid.multiples)}",
        f"peripheral arcs: {sorted(s.peripheral)}",
        f"bridging arcs (lower, upper): {list(s.bridging)}",
        f"upper advance per period: {s.upper_advance}",
        f"window agrees with propagation: {all(window[k] == v.entry(*k) for k in window)}",
    ]
    return "\n".join(lines) + "\n" + v.render(H, ascii_only=ascii_only)


def _roots_text(roots, ascii_only):
    def key(r):
        return (float(r.x1), float(r.x2))

    return " ".join(
        f"({pretty(r.x1, ascii_only)},{pretty(r.x2, ascii_only)})" for r in sorted(roots, key=key)
    )


def _graph(g, cap, ascii_only, objects=None):
    rep = validate_graph(g)
    lines = [f"p={g.p} shape={rep.shape} axioms M1,M2,C1,C2: {'ok' if rep.ok else rep.violations}"]
    for a in objects if objects is not None else g.residues:
        m = g.matrix(a)
        rs = real_roots(g, a, cap)
        lines.append(
            f"object {a}: c12={m.c12_mult}*l c21={m.c21_mult}*l "
            f"closed={rs.closed} positive roots: {_roots_text(rs.positive, ascii_only)}"
        )
    lines.append(f"quiddity at object 0: {list(quiddity_of_graph(g, 0))}")
    rs = check_root_system(g, cap)
    lines.append(f"R1={rs.r1} R2={rs.r2} R3={rs.r3} R4={rs.r4}")
    lines.extend(rs.violations)
    lines.append(rs.verdict)
    return "\n".join(lines) + "\n"


def five_object_chain():
    mats = [(-1, -3), (-1, -2), (-2, -2), (-2, -1), (-3, -1)]
    return CartanGraph(
        3, tuple(CartanMatrix2(*m) for m in mats), (1, 0, 3, 2, 4), (0, 2, 1, 4, 3)
    )


def lambda4_graph():
    return CartanGraph(4, (CartanMatrix2(-2, -1),))


EXAMPLES = {
    "pentagon-triangulation": lambda a: _dissection_frieze(5, [(0, 2), (2, 4)], a),
    "pentagon-mixed": lambda a: _dissection_frieze(5, [(2, 4)], a),
    "octagon-mixed": lambda a: _dissection_frieze(8, [(3, 6)], a),
    "hexagon-lambda4": lambda a: _dissection_frieze(6, [(0, 3)], a),
    "strip-constant": lambda a: _window(4, (2,), 7, a),
    "strip-ladder": lambda a: _strip(4, (2,), 5, a),
    "strip-fan": lambda a: _strip(4, (2, 1), 8, a),
    "five-object-chain": lambda a: _graph(five_object_chain(), 64, a),
    "diag-graph": lambda a: _graph(graph_from_quiddity((0,), 3), 64, a),
    "lambda4-graph": lambda a: _graph(lambda4_graph(), 8, a, objects=[0]),
}

# short names used on the command line
ALIASES = {
    "ex2.3a": "pentagon-triangulation",
    "ex2.3b": "pentagon-mixed",
    "ex2.7": "octagon-mixed",
    "ex6.7": "strip-constant",
    "ex8.3": "five-object-chain",
}


def names():
    return sorted(EXAMPLES) + sorted(ALIASES) + ["dihedral-P"]


def run(name: str, ascii_only: bool = False) -> str:
    name = ALIASES.get(name, name)
    if name.startswith("dihedral-"):
        try:
            p = int(name.split("-", 1)[1])
        except ValueError:
            raise InvalidArgument(f"dihedral example needs an integer p, got {name!r}") from None
        if p < 3:
            raise InvalidArgument("dihedral example needs p >= 3")
        return _graph(standard_graph(p, -1, -1), 64, ascii_only)
    if name not in EXAMPLES:
        raise InvalidArgument(f"unknown example {name!r}; choose from {', '.join(names())}")
    return EXAMPLES[name](ascii_only)
