"""JSON file formats."""

import json

from .cartan import CartanGraph, CartanMatrix2
from .dissection import build_dissection
from .errors import InvalidArgument
from .field import FieldElement, get_context
from .frieze import FriezePattern, from_quiddity
from .strip import PeriodicQuiddity, StripAngulation


def load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidArgument(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidArgument(f"{path} is not valid JSON: {exc}") from exc


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _field(obj, key, kind=None):
    try:
        val = obj[key]
    except (KeyError, TypeError):
        raise InvalidArgument(f"missing field {key!r}") from None
    if kind is int and (not isinstance(val, int) or isinstance(val, bool)):
        raise InvalidArgument(f"field {key!r} must be an integer")
    if kind is list and not isinstance(val, list):
        raise InvalidArgument(f"field {key!r} must be a list")
    return val


def element_from_json(obj, ctx=None) -> FieldElement:
    """Accepts {"L", "coeffs"}, a bare coefficient list (needs ctx) or an int."""
    if isinstance(obj, dict):
        ctx = get_context(_field(obj, "L", int))
        obj = _field(obj, "coeffs", list)
    if ctx is None:
        raise InvalidArgument("element needs a context")
    if isinstance(obj, int) and not isinstance(obj, bool):
        return ctx(obj)
    if not isinstance(obj, list) or not all(isinstance(c, int) for c in obj):
        raise InvalidArgument(f"coefficients must be a list of integers, got {obj!r}")
    if len(obj) > ctx.degree:
        raise InvalidArgument(f"{len(obj)} coefficients exceed degree {ctx.degree}")
    return ctx.element(obj)


def dissection_from_json(obj):
    return build_dissection(_field(obj, "n", int), _field(obj, "diagonals", list))


def frieze_from_json(obj) -> FriezePattern:
    """Pattern from explicit rows when present, otherwise from the quiddity."""
    L = obj.get("L", 3) if isinstance(obj, dict) else 3
    if not isinstance(L, int) or L < 2:
        raise InvalidArgument("field 'L' must be an integer >= 2")
    ctx = get_context(L)
    q = [element_from_json(c, ctx) for c in _field(obj, "quiddity", list)]
    n = obj.get("n", len(q))
    if n != len(q):
        raise InvalidArgument(f"n = {n} but the quiddity has {len(q)} entries")
    if "rows" in obj:
        rows = [[element_from_json(c, ctx) for c in row] for row in _field(obj, "rows", list)]
        return FriezePattern.from_rows(n, ctx, rows)
    return from_quiddity(q, ctx)


def quiddity_from_json(obj) -> PeriodicQuiddity:
    mult = _field(obj, "multiples", list)
    if not all(isinstance(m, int) for m in mult):
        raise InvalidArgument("multiples must be integers")
    if "period" in obj and obj["period"] != len(mult):
        raise InvalidArgument(f"period {obj['period']} but {len(mult)} multiples")
    return PeriodicQuiddity(_field(obj, "p", int), tuple(mult))


def strip_from_json(obj) -> StripAngulation:
    def pairs(key):
        out = []
        for item in _field(obj, key, list):
            if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, int) for x in item)):
                raise InvalidArgument(f"entries of {key!r} must be integer pairs")
            out.append(tuple(item))
        return out

    return StripAngulation(
        _field(obj, "p", int),
        _field(obj, "period", int),
        frozenset(pairs("peripheral")),
        tuple(sorted(pairs("bridging"))),
        _field(obj, "upper_advance", int),
    )


def graph_from_json(obj) -> CartanGraph:
    p = _field(obj, "p", int)
    mats = []
    for m in _field(obj, "matrices", list):
        mats.append(CartanMatrix2(_field(m, "c12_mult", int), _field(m, "c21_mult", int)))
    objects = _field(obj, "objects")
    if objects == "periodic":
        return CartanGraph(p, tuple(mats))
    if not isinstance(objects, int) or objects != len(mats):
        raise InvalidArgument("'objects' must be \"periodic\" or the number of matrices")
    rho1 = tuple(_field(obj, "rho1", list))
    rho2 = tuple(_field(obj, "rho2", list))
    return CartanGraph(p, tuple(mats), rho1, rho2)
