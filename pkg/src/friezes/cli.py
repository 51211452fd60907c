"""Command-line front end.

Exit status 0 on success, 1 when a well-formed input fails a mathematical
check, 2 on malformed input.  Results go to stdout, diagnostics to stderr.
"""

import argparse
import sys

from . import cartan, chebyshev, dissection, examples, frieze, io, strip
from .errors import ConstructionBug, InvalidArgument, ValidationFailure
from .field import embed_lambda, format_polynomial, get_context, minimal_polynomial
from .render import pretty


class Failure(Exception):
    """Validation failure reported by a command after printing its result."""


def _coeffs(x):
    return list(x.coeffs)


def _p(args, x):
    return pretty(x, args.ascii_only)


def _emit(args, text=None, data=None):
    if args.format == "json" and data is not None:
        sys.stdout.write(io.dumps(data))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- commands ------------------------------------------------------------------


def cmd_minpoly(args):
    mp = minimal_polynomial(args.L)
    _emit(args, format_polynomial(mp), {"L": args.L, "degree": len(mp) - 1, "minpoly": list(mp)})


def cmd_cheb(args):
    if args.at is None:
        v = chebyshev.v_polynomial(args.N)
        _emit(args, format_polynomial(v.coeffs), {"n": args.N, "coeffs": list(v.coeffs)})
        return
    ctx = get_context(args.at)
    val = chebyshev.v_eval(args.N, embed_lambda(args.at, ctx))
    _emit(args, _p(args, val), {"n": args.N, "q": args.at, "value": val.to_json()})


def cmd_dissect(args):
    d = io.dissection_from_json(io.load(args.file))
    if args.what == "quiddity":
        q = dissection.quiddity(d)
        _emit(args, " ".join(_p(args, x) for x in q), {"L": d.ctx.L, "quiddity": [_coeffs(x) for x in q]})
    elif args.what == "entries":
        t = dissection.all_entries(d)
        lines = [" ".join(_p(args, t[i, j]) for j in range(d.n)) for i in range(d.n)]
        _emit(args, "\n".join(lines), t.to_json())
    else:
        f = frieze.FriezePattern.from_entry_table(dissection.all_entries(d))
        _emit(args, f.render(ascii_only=args.ascii_only), f.to_json())


def cmd_enumerate(args):
    ds = dissection.enumerate_p_angulations(args.N, args.P)
    text = "\n".join(" ".join(f"({i},{j})" for i, j in sorted(d.diagonals)) or "-" for d in ds)
    _emit(
        args,
        text or "(none)",
        {"n": args.N, "p": args.P, "count": len(ds), "dissections": [d.to_json() for d in ds]},
    )


def cmd_frieze(args):
    f = io.frieze_from_json(io.load(args.file))
    if args.what == "from-quiddity":
        _emit(args, f.render(ascii_only=args.ascii_only), f.to_json())
    elif args.what == "verify":
        rep = frieze.verify(f)
        counts = ", ".join(f"{k} {v}" for k, v in rep.checked.items())
        if not rep.ok:
            raise Failure(f"{rep.violation.kind} violation at {rep.violation.location}: {rep.violation.detail}")
        _emit(args, f"ok ({counts})", {"ok": True, "checked": rep.checked})
    elif args.what == "type":
        types = sorted(frieze.type_of(f))
        _emit(args, " ".join(map(str, types)) or "none", {"types": types})
    elif args.what == "to-dissection":
        d = frieze.to_dissection(f)
        _emit(args, " ".join(f"({i},{j})" for i, j in sorted(d.diagonals)) or "-", d.to_json())
    else:
        rep = frieze.characterize_46(f)
        lines, data = [], {}
        for p, r in rep.items():
            extra = "odd rows odd" if p == 4 else "row 2k+1 = (-1)^k mod 3"
            lines.append(
                f"p={p}: odd rows integers={r.odd_rows_integers} "
                f"even rows multiples={r.even_rows_multiples} {extra}={r.congruence} holds={r.holds}"
            )
            data[str(p)] = {
                "odd_rows_integers": r.odd_rows_integers,
                "even_rows_multiples": r.even_rows_multiples,
                "congruence": r.congruence,
                "holds": r.holds,
            }
        _emit(args, "\n".join(lines), data)


def _window_json(v, H):
    return [[i, j, _coeffs(x)] for (i, j), x in sorted(v.window(H).items())]


def cmd_strip(args):
    obj = io.load(args.file)
    if args.what == "to-frieze":
        s = io.strip_from_json(obj)
        H = args.height or 4 * s.T * s.p
        quid, window = strip.from_strip(s, H)
        v = strip.InfiniteFriezeView(quid)
        if any(window[k] != v.entry(*k) for k in window):
            raise ConstructionBug("strip window disagrees with propagation")
        data = dict(quid.to_json(), height=H, window=[[i, j, _coeffs(x)] for (i, j), x in sorted(window.items())])
        _emit(args, f"quiddity multiples: {list(quid.multiples)}\n" + v.render(H, ascii_only=args.ascii_only), data)
        return
    q = io.quiddity_from_json(obj)
    v = strip.InfiniteFriezeView(q)
    H = args.height or 4 * q.T * q.p
    span = args.span or 4 * q.T * q.p
    if args.what == "from-quiddity":
        strip.positivity_check(v, H)
        _emit(args, v.render(H, ascii_only=args.ascii_only), dict(q.to_json(), height=H, window=_window_json(v, H)))
    elif args.what == "theta":
        strip.positivity_check(v, max(H, span))
        th = sorted(strip.theta_arcs(v, span))
        _emit(args, " ".join(f"({i},{j})" for i, j in th) or "-", {"theta": [list(a) for a in th]})
    else:
        strip.positivity_check(v, max(H, span))
        th = strip.theta_arcs(v, span)
        reps = [strip.vertex_report(v, th, b) for b in range(q.T)]
        s = strip.to_strip(v, span)
        lines = [f"positivity certified up to row {max(H, span)}", f"theta: {sorted(th)}"]
        for r in reps:
            lines.append(
                f"vertex {r.vertex}: defect {r.defect}*l saturated={r.saturated} arcs={r.arcs_attached}"
            )
        lines.append(f"strip: {io.dumps(s.to_json()).strip()}")
        data = {
            "height": max(H, span),
            "theta": [list(a) for a in sorted(th)],
            "vertices": [
                {"vertex": r.vertex, "defect": r.defect, "saturated": r.saturated, "arcs": r.arcs_attached}
                for r in reps
            ],
            "strip": s.to_json(),
        }
        _emit(args, "\n".join(lines), data)


def _root_text(args, r):
    return f"({_p(args, r.x1)},{_p(args, r.x2)})"


def _sorted_roots(roots):
    return sorted(roots, key=lambda r: (float(r.x1), float(r.x2)))


def cmd_cartan(args):
    obj = io.load(args.file)
    if args.what == "from-quiddity":
        mult = obj.get("multiples") if isinstance(obj, dict) else None
        if not isinstance(mult, list) or not all(isinstance(m, int) for m in mult):
            raise InvalidArgument("quiddity file needs an integer list 'multiples'")
        g = cartan.graph_from_quiddity(mult, obj.get("p"))
        _emit(args, io.dumps(g.to_json()), g.to_json())
        return
    if args.what == "roots-from-frieze":
        q = io.quiddity_from_json(obj)
        v = strip.InfiniteFriezeView(q)
        strip.positivity_check(v, args.height or 4 * q.T * q.p)
        fr = cartan.roots_from_frieze(v, args.base, args.count)
        text = "rightward: " + " ".join(_root_text(args, r) for r in fr.rightward)
        text += "\nleftward: " + " ".join(_root_text(args, r) for r in fr.leftward)
        data = {"rightward": [r.to_json() for r in fr.rightward], "leftward": [r.to_json() for r in fr.leftward]}
        _emit(args, text, data)
        return
    g = io.graph_from_json(obj)
    if args.what == "validate":
        rep = cartan.validate_graph(g)
        if not rep.ok:
            raise Failure("; ".join(rep.violations))
        _emit(args, f"valid ({rep.shape})", {"ok": True, "shape": rep.shape})
    elif args.what == "quiddity":
        word = cartan.quiddity_of_graph(g, args.base)
        _emit(args, " ".join(map(str, word)), {"p": g.p, "period": len(word), "multiples": list(word)})
    elif args.what == "roots":
        rs = cartan.real_roots(g, args.base, args.cap)
        roots = _sorted_roots(rs.roots)
        text = f"closed={rs.closed} count={len(roots)}\n" + " ".join(_root_text(args, r) for r in roots)
        _emit(args, text, {"closed": rs.closed, "roots": [r.to_json() for r in roots]})
    else:
        rep = cartan.check_root_system(g, args.cap)
        text = f"R1={rep.r1} R2={rep.r2} R3={rep.r3} R4={rep.r4}\n" + "".join(
            v + "\n" for v in rep.violations
        ) + rep.verdict
        data = {"R1": rep.r1, "R2": rep.r2, "R3": rep.r3, "R4": rep.r4, "violations": rep.violations, "cap": rep.cap}
        _emit(args, text, data)
        if not rep.holds:
            raise Failure(rep.verdict)


def cmd_examples(args):
    sys.stdout.write(examples.run(args.name, args.ascii_only))


# -- parser --------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("ascii", "json"), default="ascii")
    common.add_argument("--ascii-only", action="store_true", help="avoid non-ASCII symbols")

    parser = argparse.ArgumentParser(prog="friezes", description="Exact frieze pattern computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minpoly", parents=[common], help="minimal polynomial of 2cos(pi/L)")
    p.add_argument("L", type=int)
    p.set_defaults(func=cmd_minpoly)

    p = sub.add_parser("cheb", parents=[common], help="the polynomial V_N, or its value at lambda_Q")
    p.add_argument("N", type=int)
    p.add_argument("--at", type=int, metavar="Q")
    p.set_defaults(func=cmd_cheb)

    p = sub.add_parser("dissect", parents=[common], help="quiddity, entries or frieze of a dissection")
    p.add_argument("what", choices=("quiddity", "entries", "frieze"))
    p.add_argument("file")
    p.set_defaults(func=cmd_dissect)

    p = sub.add_parser("enumerate", parents=[common], help="all p-angulations of an n-gon")
    p.add_argument("N", type=int)
    p.add_argument("P", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("frieze", parents=[common], help="finite frieze patterns")
    p.add_argument("what", choices=("from-quiddity", "verify", "type", "to-dissection", "char46"))
    p.add_argument("file")
    p.set_defaults(func=cmd_frieze)

    p = sub.add_parser("strip", parents=[common], help="periodic infinite friezes and strips")
    p.add_argument("what", choices=("from-quiddity", "to-frieze", "theta", "report"))
    p.add_argument("file")
    p.add_argument("--height", type=int)
    p.add_argument("--span", type=int)
    p.set_defaults(func=cmd_strip)

    p = sub.add_parser("cartan", parents=[common], help="rank-two Cartan graphs")
    p.add_argument(
        "what",
        choices=("validate", "from-quiddity", "quiddity", "roots", "check-rootsystem", "roots-from-frieze"),
    )
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=64)
    p.add_argument("--base", type=int, default=0, help="base object")
    p.add_argument("--count", type=int, default=8, help="roots per direction")
    p.add_argument("--height", type=int)
    p.set_defaults(func=cmd_cartan)

    p = sub.add_parser("examples", parents=[common], help="worked examples: " + ", ".join(examples.names()))
    p.add_argument("name")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for key in ("height", "span", "cap", "count"):
        val = getattr(args, key, None)
        if val is not None and val < 1:
            print(f"error: --{key} must be positive", file=sys.stderr)
            return 2
    try:
        args.func(args)
    except (ValidationFailure, Failure) as exc:
        loc = getattr(exc, "location", None)
        print(f"error: {exc}" + (f" (at {loc})" if loc is not None else ""), file=sys.stderr)
        return 1
    except InvalidArgument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
