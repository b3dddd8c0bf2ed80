"""Walk through the geometry of the 4-cycle.

The cut polytope of C_4 is the 4-cube truncated at the eight vertices with
an odd number of -1 coordinates.  Its sixteen facets split into eight box
facets +-x_e <= 1 and eight cycle facets <v^F, x> <= 2, and every one of
them pins down an extremal ray of the cone of PSD matrices vanishing on
the two diagonals {1,3} and {2,4}.
"""

from facetray import (all_cut_vectors, certify_frip_k5free, cycle_graph,
                      facets_k5_free, h_polytope_vertices, is_facet,
                      polar_point, rat_to_str)


def fmt_ineq(g, q):
    terms = []
    for a, (i, j) in zip(q.alpha, g.edges):
        if a == 0:
            continue
        coeff = "-" if a < 0 else "+"
        terms.append(f"{coeff} x{i}{j}")
    lhs = " ".join(terms).lstrip("+ ")
    return f"{lhs} <= {rat_to_str(q.b)}"


def main():
    g = cycle_graph(4)
    print("C_4 on vertices 1..4, edges", g.edges)

    cuts = all_cut_vectors(g)
    print(f"\n{len(cuts)} cut vectors, all with an even number of -1 entries:")
    for cv in cuts:
        print(f"  U={sorted(cv.cut) or '{}'!s:>9}  x = {cv.coords}")

    facets = facets_k5_free(g)
    print(f"\n{len(facets)} facets, every one confirmed against the vertices:")
    for q in facets:
        assert is_facet(g, q)
    box = [q for q in facets if q.b == 1]
    cyc = [q for q in facets if q.b == 2]
    print(f"  {len(box)} box facets, e.g. {fmt_ineq(g, box[0])}")
    print(f"  {len(cyc)} cycle facets, e.g. {fmt_ineq(g, cyc[0])}")

    verts = h_polytope_vertices(facets, 4)
    print(f"\nintersecting those facets reproduces the {len(verts)} cut vectors:",
          sorted(verts) == sorted(tuple(map(int, cv.coords)) for cv in cuts))

    print("\none extremal certificate per facet (rank equals the constant term):")
    for cert in certify_frip_k5free(g):
        y = polar_point(cert.matrix, g)
        print(f"  {fmt_ineq(g, cert.facet):28s} rank {cert.rank}   "
              f"frame {cert.frame_rank}/{cert.target}   "
              f"polar point ({', '.join(rat_to_str(v) for v in y)})")


if __name__ == "__main__":
    main()
