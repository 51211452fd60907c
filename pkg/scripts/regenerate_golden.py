"""Rewrite tests/golden/*.txt from the named examples.

Run after an intentional change to rendering, then review the diff.
"""

import argparse
from pathlib import Path

from friezes import examples

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"
EXTRA = ["dihedral-5"]
ASCII = ["hexagon-lambda4", "strip-fan"]


def targets():
    for name in sorted(examples.EXAMPLES) + EXTRA:
        yield f"{name}.txt", name, False
    for name in ASCII:
        yield f"{name}.ascii.txt", name, True


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true", help="report differences without writing")
    args = ap.parse_args()
    GOLDEN.mkdir(parents=True, exist_ok=True)
    stale = 0
    for fname, name, ascii_only in targets():
        text = examples.run(name, ascii_only)
        path = GOLDEN / fname
        old = path.read_text(encoding="utf-8") if path.exists() else None
        if old == text:
            continue
        stale += 1
        print(("differs: " if args.check else "wrote: ") + fname)
        if not args.check:
            path.write_text(text, encoding="utf-8")
    return 1 if args.check and stale else 0


if __name__ == "__main__":
    raise SystemExit(main())
