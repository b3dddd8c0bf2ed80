"""Extremal matrices of the cone of PSD matrices with a graph zero pattern,
and their identification with cut-polytope facets.

The extremality test is the frame-space criterion of Agler, Helton,
McCullough and Rodman: a rank-k matrix with Gram vectors u_1..u_p is
extremal iff the matrices u_i u_j^T + u_j u_i^T over the nonedges span a
space of dimension C(k+1, 2) - 1.  Working from a rational B diag(d) B^T
factorization instead of true Gram vectors changes each frame matrix by a
fixed congruence, which preserves that dimension, so the whole
certificate stays inside Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .errors import CertificationError, PreconditionError
from .graphs import (Graph, CycleSubgraph, cycle_graph, chordless_cycles,
                     cycle_cut_preimage, is_chordless_cycle, is_series_parallel)
from .linalg import (SymMat, _frac, _integer_rows, gram, is_psd, rank,
                     rank_factorize, symmat_to_json)
from .cutpoly import LinIneq, facet_schedule, ineq_to_json


@dataclass(frozen=True)
class GramRep:
    """Vectors u_1..u_p in Q^k with u_i . u_j = 0 on every nonedge of host,
    spanning all of Q^k."""

    host: Graph
    vectors: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        vs = tuple(tuple(_frac(x) for x in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vs)
        if len(vs) != self.host.p:
            raise ValueError("need one vector per vertex")
        k = len(vs[0])
        if any(len(v) != k for v in vs):
            raise ValueError("vectors must share one dimension")
        for i, j in self.host.nonedges:
            if sum(a * b for a, b in zip(vs[i - 1], vs[j - 1])) != 0:
                raise ValueError(f"nonzero inner product on nonedge ({i},{j})")
        if rank(vs) != k:
            raise ValueError("vectors do not span the ambient dimension")

    @property
    def k(self) -> int:
        return len(self.vectors[0])


@dataclass(frozen=True)
class ExtremalCertificate:
    """A matrix together with the data that witnesses its extremality and,
    when present, the facet whose normal it realizes.

    sign relates the matrix to the facet: m_ij == sign * alpha_ij on every
    edge.  extremal holds iff frame_rank == target == C(rank+1, 2) - 1.
    """

    matrix: SymMat
    rank: int
    frame_rank: int
    target: int
    extremal: bool
    facet: Optional[LinIneq] = None
    sign: int = 1


def respects_pattern(m: SymMat, g: Graph) -> bool:
    """Zero on every nonedge of g."""
    return m.p == g.p and all(m.entry(i, j) == 0 for i, j in g.nonedges)


def _frame_rank_of_rows(rows, nonedges) -> int:
    """Rank of {u_i u_j^T + u_j u_i^T : nonedges} in symmetric-matrix
    coordinates.  Each vector is scaled integral first (scaling u_i by c_i
    scales whole frame matrices, leaving the rank alone)."""
    ints = _integer_rows(rows)
    if not ints:
        return 0
    k = len(ints[0])
    coords = []
    for i, j in nonedges:
        ui, uj = ints[i - 1], ints[j - 1]
        row = []
        for a in range(k):
            for b in range(a, k):
                row.append(ui[a] * uj[b] + uj[a] * ui[b])
        coords.append(row)
    if not coords:
        return 0
    return rank(coords)


def frame_space_rank(rep: GramRep) -> int:
    """Dimension of the frame space of rep, taken over the host's nonedges."""
    return _frame_rank_of_rows(rep.vectors, rep.host.nonedges)


def is_extremal(g: Graph, m: SymMat) -> bool:
    """Frame-space extremality test for a PSD matrix with g's zero pattern.

    The rank factorization m = B diag(d) B^T supplies rational stand-ins
    for the Gram vectors; extremality holds iff the frame rank equals
    C(k+1, 2) - 1 for k = rank(m).
    """
    if m.p != g.p:
        raise PreconditionError("matrix dimension does not match the graph")
    if not respects_pattern(m, g):
        raise PreconditionError("matrix violates the graph's zero pattern")
    fact = rank_factorize(m)  # raises if not PSD
    k = fact.k
    target = k * (k + 1) // 2 - 1
    return _frame_rank_of_rows(fact.rows, g.nonedges) == target


def _certificate(g: Graph, m: SymMat, facet: Optional[LinIneq],
                 sign: int) -> ExtremalCertificate:
    """Assemble a certificate, re-verifying every claim from scratch."""
    if not is_psd(m):
        raise CertificationError("constructed matrix is not PSD")
    if not respects_pattern(m, g):
        raise CertificationError("constructed matrix violates the zero pattern")
    fact = rank_factorize(m)
    k = fact.k
    target = k * (k + 1) // 2 - 1
    fr = _frame_rank_of_rows(fact.rows, g.nonedges)
    extremal = fr == target
    if facet is not None:
        for a, (i, j) in zip(facet.alpha, g.edges):
            if m.entry(i, j) != sign * a:
                raise CertificationError(
                    f"edge ({i},{j}) entry does not match sign * alpha")
        if Fraction(k) != facet.b:
            raise CertificationError("matrix rank differs from the facet constant")
    if not extremal:
        raise CertificationError("constructed matrix failed the frame-rank test")
    return ExtremalCertificate(matrix=m, rank=k, frame_rank=fr, target=target,
                               extremal=extremal, facet=facet, sign=sign)


def edge_matrix(g: Graph, e: tuple[int, int], sign: int) -> ExtremalCertificate:
    """The rank-1 extremal matrix supported on one edge.

    sign +1 puts ones on the whole 2x2 block of e; sign -1 flips the
    off-diagonal pair.  Either way the certificate identifies the box
    inequality sign * x_e <= 1 with sign convention m_ij == alpha_ij.
    """
    e = (min(e), max(e))
    if e not in g.edge_set:
        raise PreconditionError(f"{e} is not an edge of the graph")
    if sign not in (1, -1):
        raise PreconditionError("sign must be +1 or -1")
    i, j = e
    vec = [[Fraction(0)] for _ in range(g.p)]
    vec[i - 1][0] = Fraction(1)
    vec[j - 1][0] = Fraction(sign)
    alpha = [Fraction(0)] * len(g.edges)
    alpha[g.edge_index[e]] = Fraction(sign)
    facet = LinIneq(tuple(alpha), Fraction(1))
    return _certificate(g, gram(vec), facet, sign=1)


def delta_max_gram(p: int, i: int = 1) -> GramRep:
    """The (p-2)-dimensional vectors behind the maximal odd case on C_p.

    With e_1..e_{p-2} the standard basis and indices of vertices taken
    modulo p (p+1 is 1):

        u_i     = e_{p-2}
        u_{i+1} = e_1 - e_2 + e_3 - ...
        u_{i+2} = e_1
        u_j     = e_{j-i-2} + e_{j-i-1}   for i+3 <= j <= i+p-1

    Consecutive inner products are all 1 except (u_i, u_{i+1}) = -1 when p
    is even, so the positive edge set is [p] for odd p and [p] minus {i}
    for even p.
    """
    if p < 3:
        raise PreconditionError("need p >= 3")
    if p % 2 == 1 and i != 1:
        raise PreconditionError("for odd p the construction is anchored at i = 1")
    if not 1 <= i <= p:
        raise PreconditionError("anchor vertex out of range")
    k = p - 2

    def basis(j):
        return tuple(Fraction(1 if t == j - 1 else 0) for t in range(k))

    def wrap(v):
        return (v - 1) % p + 1

    vecs: dict[int, tuple[Fraction, ...]] = {}
    vecs[wrap(i)] = basis(k)
    vecs[wrap(i + 1)] = tuple(Fraction((-1) ** t) for t in range(k))
    vecs[wrap(i + 2)] = basis(1)
    for j in range(i + 3, i + p):
        vecs[wrap(j)] = tuple(a + b for a, b in zip(basis(j - i - 2), basis(j - i - 1)))
    return GramRep(cycle_graph(p), tuple(vecs[t] for t in range(1, p + 1)))


def delta_gram(p: int, f: Iterable[int]) -> GramRep:
    """Gram vectors for the cycle matrix whose (s, s+1) entry is +1 for
    s in f and -1 otherwise.

    Starting from the maximal-case vectors (negative edge set empty for odd
    p, {1} for even p), the edges whose signs must flip form an even set,
    hence a cutset of C_p; negating the vectors over the underlying cut
    flips exactly those entries.
    """
    fs = set(f)
    if not fs <= set(range(1, p + 1)):
        raise PreconditionError("f must be a subset of 1..p")
    if len(fs) % 2 != 1:
        raise PreconditionError("f must have odd cardinality")
    base = delta_max_gram(p, 1)
    base_negative = set() if p % 2 == 1 else {1}
    complement_f = set(range(1, p + 1)) - fs
    flips = base_negative ^ complement_f
    flip_edges = [(s, s % p + 1) for s in flips]
    u = cycle_cut_preimage(p, flip_edges)
    vectors = tuple(
        tuple(-x for x in v) if t + 1 in u else v
        for t, v in enumerate(base.vectors)
    )
    return GramRep(base.host, vectors)


def delta_matrix(p: int, f: Iterable[int]) -> SymMat:
    """The rank p-2 extremal matrix on C_p with edge entries +1 on f, -1 off f."""
    return gram(delta_gram(p, f).vectors)


def embed(g: Graph, c: CycleSubgraph, rep: GramRep) -> GramRep:
    """Zero-pad a representation on a chordless cycle out to the whole graph:
    cycle vertices keep their vectors, everything else gets the zero vector."""
    m = len(c)
    if rep.host != cycle_graph(m):
        raise PreconditionError("representation must live on the standard m-cycle")
    if not is_chordless_cycle(g, c.vertices):
        raise PreconditionError("cycle is not chordless in the host graph")
    k = rep.k
    zero = tuple(Fraction(0) for _ in range(k))
    vectors = [zero] * g.p
    for pos, v in enumerate(c.vertices):
        vectors[v - 1] = rep.vectors[pos]
    return GramRep(g, tuple(vectors))


def certify_frip_k5free(g: Graph) -> list[ExtremalCertificate]:
    """One extremal certificate per facet of CUT+-(G), for G without K_5
    minors: box facets map to the rank-1 edge matrices (sign +1), cycle
    facets to the embedded cycle construction whose edge entries are the
    negated facet normal (sign -1).  Every certificate is re-verified
    independently of the construction that produced it.
    """
    out = []
    for item in facet_schedule(g):
        if item[0] == "edge":
            _, e, sign, facet = item
            out.append(edge_matrix(g, e, sign))
        else:
            _, c, f_edges, facet = item
            positions = [t + 1 for t, e in enumerate(c.edge_list()) if e in set(f_edges)]
            rep = embed(g, c, delta_gram(len(c), positions))
            out.append(_certificate(g, gram(rep.vectors), facet, sign=-1))
    return out


class SeriesParallelRanks(NamedTuple):
    ranks: frozenset[int]
    order: int


def extremal_rank_set_series_parallel(g: Graph) -> SeriesParallelRanks:
    """All extremal ranks of a series-parallel graph's cone: 1 together with
    m-2 for every chordless m-cycle; the sparsity order is the maximum."""
    if not is_series_parallel(g):
        raise PreconditionError("graph has a K_4 minor")
    ranks = {1} | {len(c) - 2 for c in chordless_cycles(g)}
    return SeriesParallelRanks(frozenset(ranks), max(ranks))


def sparsity_order_bounds(g: Graph) -> tuple[int, int]:
    """(lower, upper) bounds on the maximum extremal rank.

    Lower: every chordless m-cycle forces rank m-2.  Upper: the cycle bound
    p-2 (p >= 3), order 1 for chordal graphs, and the frame-count bound --
    a rank-k extremal needs C(k+1, 2) - 1 independent frame matrices, of
    which there are at most |nonedges|.
    """
    cycles = chordless_cycles(g)
    lower = max([1] + [len(c) - 2 for c in cycles])
    n_nonedges = len(g.nonedges)
    frame_cap = 1
    while (frame_cap + 1) * (frame_cap + 2) // 2 - 1 <= n_nonedges:
        frame_cap += 1
    caps = [frame_cap]
    if g.p >= 3:
        caps.append(g.p - 2)
    if all(len(c) == 3 for c in cycles):
        caps.append(1)
    upper = max(1, min(caps))
    return lower, upper


def polar_point(m: SymMat, g: Graph) -> tuple[Fraction, ...]:
    """The point of the elliptope's polar cut out by m: scale to trace 2,
    project onto edge coordinates, and negate.

    The negation comes from the duality itself.  For any correlation matrix
    R lifting a point x of the elliptope, 0 <= <R, m> = tr(m) + 2 sum_e x_e m_e,
    so after scaling tr(m) to 2 the edge projection y satisfies <x, y> >= -1,
    i.e. -y pairs to at most 1 with every point of the elliptope (cut vectors
    included).  The unreflected projection can pair above 1: on an odd cycle
    the edge-sign pattern of the cycle construction is itself a cut vector.
    """
    if m.p != g.p:
        raise PreconditionError("matrix dimension does not match the graph")
    if not respects_pattern(m, g):
        raise PreconditionError("matrix violates the graph's zero pattern")
    tr = m.trace()
    if tr <= 0:
        raise PreconditionError("matrix must have positive trace")
    scaled = m.scaled(Fraction(-2) / tr)
    return tuple(scaled.entry(i, j) for i, j in g.edges)


def certificate_to_json(cert: ExtremalCertificate, g: Graph) -> dict:
    return {
        "facet": None if cert.facet is None else ineq_to_json(cert.facet, g),
        "sign": cert.sign,
        "matrix": symmat_to_json(cert.matrix),
        "rank": cert.rank,
        "frame_rank": cert.frame_rank,
        "target": cert.target,
        "extremal": cert.extremal,
    }
