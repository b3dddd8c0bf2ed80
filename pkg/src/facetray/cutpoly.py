"""The (+-1)-cut polytope of a graph: cut vectors, edge and cycle
inequalities, the facet system for K_5-minor-free graphs, switching, and
small brute-force polyhedral oracles.

A cut vector carries a -1 exactly on the edges crossing its bipartition;
CUT+-(G) is the convex hull of all 2^(p-1) of them and is full-dimensional
in R^E, which is what makes the rank-based facet test below exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import ParseError, PreconditionError
from .graphs import Graph, CycleSubgraph, complete_graph, cutset, has_minor, chordless_cycles
from .linalg import _frac, _integer_rows, rank, rat_from_str, rat_to_str


@dataclass(frozen=True)
class CutVector:
    """A vertex of CUT+-(G): the +-1 vector of the cut with block u (1 not in u)."""

    coords: tuple[int, ...]
    cut: frozenset[int]


@dataclass(frozen=True)
class LinIneq:
    """A linear inequality <alpha, x> <= b over edge coordinates.

    alpha may be zero only for degenerate valid inequalities (e.g. the
    hypermetric inequality of a unit vector); the facet oracle rejects
    those.
    """

    alpha: tuple[Fraction, ...]
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(_frac(x) for x in self.alpha))
        object.__setattr__(self, "b", _frac(self.b))

    def evaluate(self, coords: Sequence) -> Fraction:
        return sum(a * _frac(x) for a, x in zip(self.alpha, coords))

    def same_up_to_scale(self, other: "LinIneq") -> bool:
        """Equality up to a positive rational multiple."""
        if len(self.alpha) != len(other.alpha):
            return False
        mine = self.alpha + (self.b,)
        theirs = other.alpha + (other.b,)
        lam = None
        for x, y in zip(mine, theirs):
            if (x == 0) != (y == 0):
                return False
            if x != 0:
                r = x / y
                if r <= 0 or (lam is not None and r != lam):
                    return False
                lam = r
        return True


@lru_cache(maxsize=None)
def _cut_data(g: Graph) -> tuple[tuple[frozenset[int], tuple[int, ...]], ...]:
    out = []
    rest = list(range(2, g.p + 1))
    for mask in range(1 << len(rest)):
        u = frozenset(v for t, v in enumerate(rest) if (mask >> t) & 1)
        coords = tuple(-1 if (i in u) != (j in u) else 1 for i, j in g.edges)
        out.append((u, coords))
    return tuple(out)


def all_cut_vectors(g: Graph) -> list[CutVector]:
    """One vector per complementary cut pair, 2^(p-1) in all, fixing 1 outside u."""
    return [CutVector(coords, u) for u, coords in _cut_data(g)]


def edge_inequalities(g: Graph) -> list[LinIneq]:
    """The 2|E| box inequalities +-x_e <= 1."""
    out = []
    for t in range(len(g.edges)):
        for s in (1, -1):
            alpha = [Fraction(0)] * len(g.edges)
            alpha[t] = Fraction(s)
            out.append(LinIneq(tuple(alpha), Fraction(1)))
    return out


def cycle_inequality(c: CycleSubgraph, f_edges: Iterable[tuple[int, int]],
                     host: Graph) -> LinIneq:
    """<v^F, x> <= m-2 for a cycle C_m of host and odd F within E(C):
    coefficient -1 on F, +1 on the other cycle edges, 0 elsewhere."""
    cyc_edges = c.edge_list()
    for e in cyc_edges:
        if e not in host.edge_set:
            raise PreconditionError(f"cycle edge {e} missing from host graph")
    f = {tuple(sorted(e)) for e in f_edges}
    if not f <= set(cyc_edges):
        raise PreconditionError("F must be a subset of the cycle's edges")
    if len(f) % 2 != 1:
        raise PreconditionError("F must have odd cardinality")
    alpha = [Fraction(0)] * len(host.edges)
    for e in cyc_edges:
        alpha[host.edge_index[e]] = Fraction(-1 if e in f else 1)
    return LinIneq(tuple(alpha), Fraction(len(cyc_edges) - 2))


def _edge_in_triangle(g: Graph, e: tuple[int, int]) -> bool:
    i, j = e
    return bool(g.neighbors[i] & g.neighbors[j])


def facet_schedule(g: Graph):
    """The irredundant facet list for a graph without K_5 minors, with the
    data that produced each facet.

    Yields ("edge", e, sign, ineq) for each edge lying in no triangle (the
    box inequality of an edge inside a triangle is valid but dominated by
    the triangle inequalities), and ("cycle", c, f_edges, ineq) for every
    chordless cycle and every odd subset of its edges.
    """
    if has_minor(g, complete_graph(5)):
        raise PreconditionError(
            "facet description inapplicable: graph has a K_5 minor")
    for e in g.edges:
        if not _edge_in_triangle(g, e):
            alpha = [Fraction(0)] * len(g.edges)
            for sign in (1, -1):
                alpha[g.edge_index[e]] = Fraction(sign)
                yield ("edge", e, sign, LinIneq(tuple(alpha), Fraction(1)))
    for c in chordless_cycles(g):
        cyc_edges = c.edge_list()
        for size in range(1, len(c) + 1, 2):
            for f in itertools.combinations(cyc_edges, size):
                yield ("cycle", c, f, cycle_inequality(c, f, g))


def facets_k5_free(g: Graph) -> list[LinIneq]:
    return [item[-1] for item in facet_schedule(g)]


def switch(ineq: LinIneq, u: Iterable[int], g: Graph) -> LinIneq:
    """Negate the coefficients on the cutset of u; b is unchanged.

    This is the switching symmetry of CUT+-(G): cut vectors map to cut
    vectors, so validity and facet-ness are preserved.
    """
    crossing = cutset(g, u)
    alpha = tuple(-a if e in crossing else a for a, e in zip(ineq.alpha, g.edges))
    return LinIneq(alpha, ineq.b)


def hypermetric_inequality(b: Sequence[int]) -> LinIneq:
    """The hypermetric inequality of an integer vector with sum 1, as a
    <=-inequality on the complete graph K_len(b):

        sum b_i b_j <= sum b_i b_j x_ij   becomes   <-b_i b_j, x> <= -sum b_i b_j
    """
    bs = [int(x) for x in b]
    if sum(bs) != 1:
        raise PreconditionError("hypermetric vector must sum to 1")
    kp = complete_graph(len(bs))
    alpha = []
    rhs = Fraction(0)
    for i, j in kp.edges:
        prod = Fraction(bs[i - 1] * bs[j - 1])
        alpha.append(-prod)
        rhs -= prod
    return LinIneq(tuple(alpha), rhs)


def is_valid(g: Graph, ineq: LinIneq) -> bool:
    """Does every cut vector satisfy the inequality?"""
    return all(ineq.evaluate(coords) <= ineq.b for _, coords in _cut_data(g))


def is_facet(g: Graph, ineq: LinIneq) -> bool:
    """Exact facet decision against the vertex description.

    CUT+-(G) is full-dimensional, so the inequality supports a facet iff
    it is valid, tight somewhere, and its tight cut vectors span an affine
    subspace of dimension |E| - 1.
    """
    tight = []
    for _, coords in _cut_data(g):
        v = ineq.evaluate(coords)
        if v > ineq.b:
            return False
        if v == ineq.b:
            tight.append(coords)
    if not tight:
        return False
    base = tight[0]
    diffs = [[x - y for x, y in zip(coords, base)] for coords in tight[1:]]
    return rank(diffs) == len(g.edges) - 1


def pm_to_01(x: Sequence) -> tuple[Fraction, ...]:
    """Coordinate-wise map from the +-1 cube to the 0/1 cube: x -> (1-x)/2."""
    return tuple((1 - _frac(v)) / 2 for v in x)


def zero_one_to_pm(y: Sequence) -> tuple[Fraction, ...]:
    """Inverse partner of pm_to_01: y -> 1 - 2y."""
    return tuple(1 - 2 * _frac(v) for v in y)


def _bareiss_det(mat: list[list[int]]) -> int:
    m = [row[:] for row in mat]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def h_polytope_vertices(ineqs: Sequence[LinIneq], dim: int) -> list[tuple[Fraction, ...]]:
    """Vertices of {x : <alpha_i, x> <= b_i} by brute force.

    Every dim-subset of constraints is solved exactly (integer Cramer after
    clearing denominators); feasible basic solutions are deduplicated.
    Guarded to desk scale: dim <= 6 and at most 40 inequalities, since the
    subset count explodes beyond that.
    """
    if dim > 6:
        raise PreconditionError("vertex enumeration guard: dim must be <= 6")
    if len(ineqs) > 40:
        raise PreconditionError("vertex enumeration guard: at most 40 inequalities")
    if any(len(q.alpha) != dim for q in ineqs):
        raise PreconditionError("inequalities must live in the stated dimension")
    rows = _integer_rows([list(q.alpha) + [q.b] for q in ineqs])
    a = [r[:dim] for r in rows]
    b = [r[dim] for r in rows]
    seen = set()
    for subset in itertools.combinations(range(len(ineqs)), dim):
        mat = [a[i] for i in subset]
        det = _bareiss_det(mat)
        if det == 0:
            continue
        nums = []
        for c in range(dim):
            colswap = [row[:c] + [b[i]] + row[c + 1:] for row, i in zip(mat, subset)]
            nums.append(_bareiss_det(colswap))
        den = det
        if den < 0:
            den = -den
            nums = [-x for x in nums]
        g = den
        for x in nums:
            g = gcd(g, x)
        den //= g
        nums = [x // g for x in nums]
        key = (tuple(nums), den)
        if key in seen:
            continue
        # feasibility in integers: sum a_ic * num_c <= b_i * den
        if all(sum(ar[c] * nums[c] for c in range(dim)) <= b_i * den
               for ar, b_i in zip(a, b)):
            seen.add(key)
    verts = [tuple(Fraction(x, den) for x in nums) for nums, den in seen]
    verts.sort()
    return verts


def ineq_to_json(ineq: LinIneq, g: Graph) -> dict:
    alpha = {}
    for a, (i, j) in zip(ineq.alpha, g.edges):
        if a != 0:
            alpha[f"{i}-{j}"] = rat_to_str(a)
    return {"alpha": alpha, "b": rat_to_str(ineq.b)}


def ineq_from_json(obj, g: Graph) -> LinIneq:
    if not isinstance(obj, dict) or set(obj) != {"alpha", "b"}:
        raise ParseError('inequality JSON must be {"alpha": {...}, "b": ...}')
    if not isinstance(obj["alpha"], dict):
        raise ParseError("alpha must be an object keyed by edges")
    alpha = [Fraction(0)] * len(g.edges)
    for key, val in obj["alpha"].items():
        try:
            i, j = (int(v) for v in key.split("-"))
        except ValueError as exc:
            raise ParseError(f"bad edge key {key!r}") from exc
        if not (i < j and (i, j) in g.edge_index):
            raise ParseError(f"{key!r} is not an edge of the graph")
        alpha[g.edge_index[(i, j)]] = rat_from_str(val)
    return LinIneq(tuple(alpha), rat_from_str(obj["b"]))


def cut_to_json(u: Iterable[int]) -> dict:
    return {"U": sorted(u)}


def cut_from_json(obj, g: Graph) -> frozenset[int]:
    if not isinstance(obj, dict) or set(obj) != {"U"}:
        raise ParseError('cut JSON must be {"U": [...]}')
    if (not isinstance(obj["U"], list)
            or not all(isinstance(v, int) for v in obj["U"])):
        raise ParseError("U must be a list of vertices")
    u = frozenset(obj["U"])
    if not u <= set(g.vertices()):
        raise ParseError(f"cut vertices out of range 1..{g.p}")
    return u
