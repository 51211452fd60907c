"""Human-readable rendering of exact elements and offset-row layouts."""

from fractions import Fraction

from .field import FieldElement

# Radical bases for the rings that appear in the worked examples.  Each entry
# maps L to (labels, images of 1, l, l^2, ... in that basis).
_R2 = ("√2", "r2")
_R3 = ("√3", "r3")
_R6 = ("√2√3", "r2r3")


def _l12_images():
    # lambda_12 = (sqrt2 + sqrt6)/2 in the basis 1, sqrt2, sqrt3, sqrt6
    h = Fraction(1, 2)
    return [(1, 0, 0, 0), (0, h, 0, h), (2, 0, 1, 0), (0, 5 * h, 0, 3 * h)]


_BASES = {
    4: ((None, _R2), [(1, 0), (0, 1)]),
    6: ((None, _R3), [(1, 0), (0, 1)]),
    12: ((None, _R2, _R3, _R6), _l12_images()),
}


def _radical_coords(a: FieldElement):
    basis = _BASES.get(a.ctx.L)
    if basis is None:
        return None
    labels, images = basis
    coords = [Fraction(0)] * len(labels)
    for c, img in zip(a.coeffs, images):
        for t, v in enumerate(img):
            coords[t] += c * v
    return labels, coords


def _fmt_coeff(c: Fraction, unit: str) -> str:
    mag = abs(c)
    if mag.denominator != 1:
        return f"({mag}){unit}"
    if mag == 1:
        return unit
    return f"{mag.numerator}{unit}"


def pretty(a, ascii_only: bool = False) -> str:
    """Compact form such as "2+√2√3", or "2+r2r3" with ascii_only."""
    if isinstance(a, int):
        return str(a)
    if a.is_integer():
        return str(a.coeffs[0])
    rad = _radical_coords(a)
    if rad is None:
        text = str(a)
        return text.replace("·", "*") if ascii_only else text
    labels, coords = rad
    out = ""
    for label, c in zip(labels, coords):
        if c == 0:
            continue
        if label is None:
            body = str(abs(c))
        else:
            body = _fmt_coeff(c, label[1] if ascii_only else label[0])
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += ("-" if c < 0 else "+") + body
    return out


def offset_rows(rows, highlight=None, ascii_only=False) -> str:
    """Lay out rows of entries with alternate rows shifted by half a column.

    `rows` is a list from top to bottom of (shift, entries) pairs where shift
    is the half-column offset of the first entry.  `highlight` optionally
    holds (row index, entry index) pairs to wrap in brackets.
    """
    texts = []
    for r, (shift, entries) in enumerate(rows):
        cells = []
        for k, e in enumerate(entries):
            s = pretty(e, ascii_only)
            if highlight and (r, k) in highlight:
                s = f"[{s}]"
            cells.append(s)
        texts.append((shift, cells))
    width = max((len(s) for _, cells in texts for s in cells), default=1) + 1
    half = (width + 1) // 2
    lines = []
    for shift, cells in texts:
        line = ""
        for k, s in enumerate(cells):
            centre = (shift + 2 * k) * half + half
            start = max(centre - len(s) // 2, len(line) + 1 if line else 0)
            line += " " * (start - len(line)) + s
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"
