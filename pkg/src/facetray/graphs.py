"""Simple undirected graphs on vertices 1..p and the combinatorics that
facet systems condition on: complements, chordless cycles, minors, cutsets.

All graph searches here are exhaustive and meant for desk-scale inputs
(p up to roughly 10); correctness is the point, not asymptotics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import ParseError, PreconditionError


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertex set {1, ..., p}.

    Edges are normalized to sorted pairs and stored in lexicographic
    order; the position of an edge in ``edges`` is its coordinate in
    every vector indexed by the edge set.
    """

    p: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("vertex count must be at least 1")
        seen = set()
        canon = []
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= self.p and 1 <= j <= self.p):
                raise ValueError(f"edge {tuple(e)} out of range 1..{self.p}")
            ij = (i, j) if i < j else (j, i)
            if ij in seen:
                raise ValueError(f"duplicate edge {ij}")
            seen.add(ij)
            canon.append(ij)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Edge -> coordinate position, lexicographic on sorted pairs."""
        return {e: t for t, e in enumerate(self.edges)}

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        adj = {v: set() for v in self.vertices()}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(ns) for v, ns in adj.items()}

    @cached_property
    def nonedges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            e
            for e in itertools.combinations(range(1, self.p + 1), 2)
            if e not in self.edge_set
        )

    def vertices(self) -> range:
        return range(1, self.p + 1)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_set


@dataclass(frozen=True)
class CycleSubgraph:
    """A cycle (v1, ..., vm), m >= 3, traversed in vertex-list order."""

    vertices: tuple[int, ...]
    chordless: bool = True

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("repeated vertex in cycle")
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def edge_list(self) -> list[tuple[int, int]]:
        """Cycle edges in traversal order: (v1,v2), ..., (vm,v1), sorted pairs."""
        vs = self.vertices
        m = len(vs)
        return [tuple(sorted((vs[t], vs[(t + 1) % m]))) for t in range(m)]


def path_graph(p: int) -> Graph:
    return Graph(p, tuple((i, i + 1) for i in range(1, p)))


def cycle_graph(p: int) -> Graph:
    if p < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(p, tuple((i, i % p + 1) for i in range(1, p + 1)))


def complete_graph(p: int) -> Graph:
    return Graph(p, tuple(itertools.combinations(range(1, p + 1), 2)))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with parts {1..m} and {m+1..m+n}."""
    return Graph(m + n, tuple((i, j) for i in range(1, m + 1)
                              for j in range(m + 1, m + n + 1)))


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the nonedges of g."""
    return Graph(g.p, g.nonedges)


def is_chordless_cycle(g: Graph, vertices: Iterable[int]) -> bool:
    """Direct lookup: consecutive pairs are edges, all other pairs are not."""
    vs = tuple(vertices)
    m = len(vs)
    if m < 3 or len(set(vs)) != m:
        return False
    for a in range(m):
        for b in range(a + 1, m):
            consecutive = b == a + 1 or (a == 0 and b == m - 1)
            if g.has_edge(vs[a], vs[b]) != consecutive:
                return False
    return True


def chordless_cycles(g: Graph) -> list[CycleSubgraph]:
    """All induced cycles of length >= 3, one representative each.

    DFS over induced paths rooted at the smallest cycle vertex; the
    orientation with second vertex < last vertex kills the reflection,
    so every cycle appears exactly once.  Each result is re-checked
    against the edge set before being returned.
    """
    adj = g.neighbors
    found = []

    def extend(path: tuple[int, ...], members: set[int]):
        s, last = path[0], path[-1]
        internal = path[1:-1]
        for w in sorted(adj[last]):
            if w in members or w < s:
                continue
            if any(w in adj[v] for v in internal):
                continue  # chord to an interior vertex
            if w in adj[s]:
                # closing edge; any longer cycle through w would have chord {w, s}
                if len(path) >= 2 and path[1] < w:
                    found.append(path + (w,))
            else:
                members.add(w)
                extend(path + (w,), members)
                members.remove(w)

    for s in g.vertices():
        for v in sorted(adj[s]):
            if v > s:
                extend((s, v), {s, v})

    found.sort(key=lambda vs: (len(vs), vs))
    cycles = [CycleSubgraph(vs) for vs in found]
    for c in cycles:
        if not is_chordless_cycle(g, c.vertices):
            raise AssertionError(f"enumerated cycle {c.vertices} is not induced")
    return cycles


def _contains_subgraph(h: Graph, verts: frozenset[int],
                       edges: frozenset[tuple[int, int]]) -> bool:
    """Is h (not necessarily induced) embeddable into (verts, edges)?"""
    if h.p > len(verts) or len(h.edges) > len(edges):
        return False
    deg = {v: 0 for v in verts}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    order = sorted(h.vertices(), key=lambda v: -len(h.neighbors[v]))
    candidates = sorted(verts)

    def place(t: int, image: dict[int, int], used: set[int]) -> bool:
        if t == len(order):
            return True
        hv = order[t]
        need = len(h.neighbors[hv])
        mapped_nbrs = [image[u] for u in h.neighbors[hv] if u in image]
        for gv in candidates:
            if gv in used or deg[gv] < need:
                continue
            if all(tuple(sorted((gv, w))) in edges for w in mapped_nbrs):
                image[hv] = gv
                used.add(gv)
                if place(t + 1, image, used):
                    return True
                del image[hv]
                used.remove(gv)
        return False

    return place(0, {}, set())


def has_minor(g: Graph, h: Graph) -> bool:
    """Exhaustive minor test: h is a minor of g iff some sequence of edge
    contractions of g yields a graph containing h as a subgraph (vertex and
    edge deletions are absorbed by the subgraph step).  Failed states are
    memoized as labeled graphs.
    """
    no = set()

    def search(verts: frozenset[int], edges: frozenset[tuple[int, int]]) -> bool:
        if len(verts) < h.p or len(edges) < len(h.edges):
            return False
        key = (verts, edges)
        if key in no:
            return False
        if _contains_subgraph(h, verts, edges):
            return True
        for a, b in edges:
            keep, drop = (a, b) if a < b else (b, a)
            new_edges = set()
            for x, y in edges:
                x2 = keep if x == drop else x
                y2 = keep if y == drop else y
                if x2 != y2:
                    new_edges.add((x2, y2) if x2 < y2 else (y2, x2))
            if search(verts - {drop}, frozenset(new_edges)):
                return True
        no.add(key)
        return False

    return search(frozenset(g.vertices()), g.edge_set)


def is_series_parallel(g: Graph) -> bool:
    """No K_4 minor."""
    return not has_minor(g, complete_graph(4))


def cutset(g: Graph, u: Iterable[int]) -> frozenset[tuple[int, int]]:
    """Edges with exactly one endpoint in u.  cutset(u) == cutset(complement of u)."""
    us = set(u)
    if not us <= set(g.vertices()):
        raise PreconditionError(f"cut {sorted(us)} not a subset of 1..{g.p}")
    return frozenset(e for e in g.edges if (e[0] in us) != (e[1] in us))


def cycle_cut_preimage(p: int, m_edges: Iterable[tuple[int, int]]) -> frozenset[int]:
    """The unique cut U of C_p with 1 not in U and cutset(C_p, U) == m_edges.

    Walking 1, 2, ..., p from outside U, each cutset edge {t-1, t} toggles
    membership; an odd edge set cannot close up around the cycle.
    """
    host = cycle_graph(p)
    coords = set()
    for e in m_edges:
        ij = tuple(sorted(e))
        if ij not in host.edge_set:
            raise PreconditionError(f"{ij} is not an edge of the {p}-cycle")
        i, j = ij
        coords.add(i if j == i + 1 else p)  # {1,p} is coordinate p
    if len(coords) % 2 != 0:
        raise PreconditionError("not a cutset of a cycle")
    u = set()
    inside = False
    for t in range(1, p + 1):
        if t > 1 and (t - 1) in coords:
            inside = not inside
        if inside:
            u.add(t)
    return frozenset(u)


def graph_to_json(g: Graph) -> dict:
    return {"p": g.p, "edges": [list(e) for e in g.edges]}


def graph_from_json(obj) -> Graph:
    if not isinstance(obj, dict) or set(obj) != {"p", "edges"}:
        raise ParseError('graph JSON must be {"p": ..., "edges": [...]}')
    p = obj["p"]
    edges = obj["edges"]
    if not isinstance(p, int) or not isinstance(edges, list):
        raise ParseError("graph JSON has wrong field types")
    pairs = []
    for e in edges:
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(v, int) for v in e)):
            raise ParseError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return Graph(p, tuple(pairs))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
