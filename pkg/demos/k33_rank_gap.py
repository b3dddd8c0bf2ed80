"""K_{3,3}: where the facet system stops short.

Every facet of the cut polytope of K_{3,3} identifies an extremal ray, and
the ranks it reaches are 1 (box facets) and 2 (the nine chordless 4-cycles).
But the cone of K_{3,3}-patterned PSD matrices is known to have extremal
rays of rank 3 as well: the facets certify a rank set, they do not exhaust
it once the graph has K_4 minors.
"""

from collections import Counter

from facetray import (certify_frip_k5free, chordless_cycles,
                      complete_bipartite, facets_k5_free, is_series_parallel,
                      sparsity_order_bounds)


def main():
    g = complete_bipartite(3, 3)
    print("K_{3,3}:", len(g.edges), "edges,", len(g.nonedges), "nonedges")
    print("series-parallel?", is_series_parallel(g))

    cycles = chordless_cycles(g)
    print(f"\nchordless cycles: {len(cycles)}, lengths",
          sorted(Counter(len(c) for c in cycles).items()))

    facets = facets_k5_free(g)
    certs = certify_frip_k5free(g)
    print(f"facets: {len(facets)}  "
          f"(18 box + 72 cycle)  certificates: {len(certs)}")
    print("certificate ranks:", dict(Counter(c.rank for c in certs)))

    lower, upper = sparsity_order_bounds(g)
    print(f"\nsparsity order bounds: [{lower}, {upper}]")
    print("the facets certify ranks {1, 2}; the true order 3 sits inside the")
    print("bounds but no facet of the cut polytope points at it")


if __name__ == "__main__":
    main()
