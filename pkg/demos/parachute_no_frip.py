"""The parachute graph: a facet that no extremal matrix can realize.

The 7-vertex parachute carries a facet-defining inequality whose normal
would have to appear as the off-diagonal of an extremal matrix.  Counting
frames kills every candidate: the graph has only 7 nonedges, but a rank-k
extremal matrix needs C(k+1,2) - 1 independent frame matrices, one per
nonedge at most, so rank 4 would need 9 and rank 5 would need 14.  Only
ranks up to 3 survive, and the inequality is not of a type those reach.
"""

from facetray import (Graph, LinIneq, all_cut_vectors, chordless_cycles,
                      is_facet, is_valid, sparsity_order_bounds)

PARACHUTE = Graph(7, (
    (1, 3), (1, 4), (1, 5), (1, 6),
    (2, 3), (2, 5), (2, 6), (2, 7),
    (3, 4), (3, 7), (4, 5), (4, 7), (5, 6), (6, 7),
))

COEFFS = {
    (1, 3): 1, (1, 4): 1, (1, 5): 1, (1, 6): 1,
    (2, 5): 1, (2, 6): 1, (2, 7): 1, (3, 7): 1, (4, 7): 1,
    (2, 3): -1, (3, 4): -1, (4, 5): -1, (5, 6): -1, (6, 7): -1,
}


def main():
    g = PARACHUTE
    print(f"parachute graph: {len(g.edges)} edges, {len(g.nonedges)} nonedges")
    print("nonedges:", g.nonedges)

    q = LinIneq(tuple(COEFFS[e] for e in g.edges), 4)
    print(f"\ninequality checked over all {len(all_cut_vectors(g))} cut vectors:")
    print("  valid:", is_valid(g, q), " facet-defining:", is_facet(g, q))

    print("\nchordless cycle lengths:",
          sorted(len(c) for c in chordless_cycles(g)))
    lower, upper = sparsity_order_bounds(g)
    print(f"sparsity order bounds: [{lower}, {upper}]")
    print("frame counting:  rank 4 needs", 4 * 5 // 2 - 1,
          "frame matrices, rank 5 needs", 5 * 6 // 2 - 1,
          f"-- only {len(g.nonedges)} nonedges exist")
    print("\nso no PSD completion of the inequality's sign pattern is ever")
    print("extremal: this graph lacks the facet-ray identification property")


if __name__ == "__main__":
    main()
