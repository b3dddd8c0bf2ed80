"""The cycle construction, in full.

For the p-cycle and any odd subset F of 1..p there is a rank p-2 extremal
matrix whose consecutive entries are +1 exactly on F.  It is built from an
explicit family of (p-2)-dimensional integer vectors; lower-cardinality
subsets are reached by negating the vectors over a cut of the cycle, which
flips exactly the signs that need flipping.
"""

import itertools

from facetray import (cycle_graph, delta_gram, delta_matrix, frame_space_rank,
                      is_extremal, is_psd, rank)


def show(p, f):
    rep = delta_gram(p, f)
    m = delta_matrix(p, f)
    print(f"p={p}, F={sorted(f)}")
    print("  vectors:", [tuple(int(x) for x in v) for v in rep.vectors])
    for row in m.entries:
        print("   ", [int(x) for x in row])
    print(f"  rank {rank(m.entries)}, trace {int(m.trace())}, "
          f"frame rank {frame_space_rank(rep)} "
          f"(target {rep.k * (rep.k + 1) // 2 - 1})")


def main():
    show(4, {2, 3, 4})
    print()
    show(4, {2})
    print()
    show(5, {1, 2, 3})

    print("\nsweep: every odd subset, p = 3..8")
    for p in range(3, 9):
        host = cycle_graph(p)
        total = 0
        for size in range(1, p + 1, 2):
            for f in itertools.combinations(range(1, p + 1), size):
                m = delta_matrix(p, set(f))
                assert is_psd(m)
                assert rank(m.entries) == p - 2
                assert m.trace() == 3 * p - 6
                assert is_extremal(host, m)
                total += 1
        print(f"  p={p}: {total} matrices, all PSD of rank {p - 2}, "
              f"trace {3 * p - 6}, and extremal")


if __name__ == "__main__":
    main()
