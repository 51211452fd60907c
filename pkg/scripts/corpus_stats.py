"""Counts and types for the finite dissection corpus."""

import argparse
from collections import Counter

from friezes.dissection import all_entries, enumerate_dissections, enumerate_p_angulations
from friezes.frieze import FriezePattern, characterize_46, type_of, verify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=9)
    ap.add_argument("--mixed-n-max", type=int, default=7)
    args = ap.parse_args()

    print("p-angulations (n, p): count")
    for p in (3, 4, 5, 6):
        for n in range(p, args.n_max + 1):
            if (n - 2) % (p - 2) == 0:
                print(f"  ({n}, {p}): {len(enumerate_p_angulations(n, p))}")

    print("dissections by type")
    for n in range(3, args.mixed_n_max + 1):
        types = Counter()
        rows46 = Counter()
        for d in enumerate_dissections(n):
            f = FriezePattern.from_entry_table(all_entries(d))
            assert verify(f).ok
            t = type_of(f)
            types[tuple(sorted(t))] += 1
            rep = characterize_46(f)
            rows46[(rep[4].holds, rep[6].holds)] += 1
        shown = ", ".join(f"{list(k) or '-'}: {v}" for k, v in sorted(types.items()))
        print(f"  n={n}: {shown}")
        print(f"        rows (type 4, type 6): {dict(sorted(rows46.items()))}")


if __name__ == "__main__":
    main()
