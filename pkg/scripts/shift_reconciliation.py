"""Node-count q-shift of f_i against the geometric u - o count, for every addable node."""
import argparse
from collections import Counter

from lltilt.bridge import shift_from_geometry, shift_from_nodes
from lltilt.partition import addable_nodes, enumerate_partitions


def main(levels, n_max) -> int:
    mismatches = 0
    for l in levels:
        seen = Counter()
        for n in range(n_max + 1):
            for lam in enumerate_partitions(n):
                m = len(lam) + 2
                for i in range(l):
                    for g in addable_nodes(lam, i, l):
                        a = shift_from_nodes(lam, g, i, l)
                        b = shift_from_geometry(lam, g, l, m)
                        seen[a] += 1
                        if a != b:
                            mismatches += 1
                            print(f"l={l} {lam!r} node={tuple(g)}: nodes {a}, geometry {b}")
        print(f"l={l}: shift histogram {dict(sorted(seen.items()))}")
    print("mismatches:", mismatches)
    return int(mismatches > 0)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--levels", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--n-max", type=int, default=7)
    a = ap.parse_args()
    raise SystemExit(main(a.levels, a.n_max))
