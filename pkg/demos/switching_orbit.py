"""A graph with a K_5 minor whose facets still identify extremal rays.

The edge/cycle facet description no longer applies once a K_5 minor is
present.  On this 7-vertex, 12-edge graph the classes built from chordless
cycles and triangle-free edges account for 80 facets (ranks 1 and 2); a
further switching orbit of 64 facets identifies rank-3 extremal matrices,
one of which is written down explicitly below.
"""

import itertools

from facetray import (Graph, LinIneq, all_cut_vectors, chordless_cycles,
                      cycle_inequality, edge_inequalities, gram, is_extremal,
                      is_facet, is_valid, rank, switch)

GRAPH = Graph(7, (
    (1, 4), (1, 5), (1, 6), (1, 7), (2, 5), (2, 6),
    (3, 4), (3, 5), (3, 6), (3, 7), (5, 7), (6, 7),
))

GRAM_VECTORS = ((1, 1, 0), (0, 0, -1), (1, -1, 0), (1, 0, 0),
                (0, 1, 1), (0, -1, 1), (0, -1, 0))


def main():
    g = GRAPH
    m = gram(GRAM_VECTORS)
    print("graph:", g.edges)
    print("rank-3 Gram matrix of seven 3-vectors:")
    for row in m.entries:
        print("  ", [int(x) for x in row])
    print("rank:", rank(m.entries), " extremal:", is_extremal(g, m))

    # the facet it identifies: alpha_e = -m_e on every edge, constant 4
    facet = LinIneq(tuple(-m.entry(i, j) for i, j in g.edges), 4)
    print("\nidentified inequality valid:", is_valid(g, facet),
          " facet:", is_facet(g, facet))

    orbit = {switch(facet, cv.cut, g) for cv in all_cut_vectors(g)}
    print(f"switching orbit: {len(orbit)} distinct inequalities, "
          "all facet-defining:", all(is_facet(g, q) for q in orbit))

    cycles = chordless_cycles(g)
    triangles = [c for c in cycles if len(c) == 3]
    squares = [c for c in cycles if len(c) == 4]
    tri_facets = [cycle_inequality(c, f, g) for c in triangles
                  for s in (1, 3)
                  for f in itertools.combinations(c.edge_list(), s)]
    sq_facets = [cycle_inequality(c, f, g) for c in squares
                 for s in (1, 3)
                 for f in itertools.combinations(c.edge_list(), s)]
    tri_edges = {e for c in triangles for e in c.edge_list()}
    box_facets = [q for q in edge_inequalities(g)
                  if next(e for a, e in zip(q.alpha, g.edges) if a != 0)
                  not in tri_edges]
    for q in tri_facets + sq_facets + box_facets:
        assert is_facet(g, q)
    print(f"\nclassical classes: {len(tri_facets)} triangle facets "
          f"({len(triangles)} triangles), {len(sq_facets)} square facets "
          f"({len(squares)} chordless 4-cycles), {len(box_facets)} box facets")
    print("total facets accounted for:",
          len(tri_facets) + len(sq_facets) + len(box_facets) + len(orbit))


if __name__ == "__main__":
    main()
