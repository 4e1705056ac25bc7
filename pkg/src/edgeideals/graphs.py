"""Immutable finite simple graphs and the structural queries used everywhere else.

Vertices are nonempty whitespace-free string labels, ordered lexicographically.
All outputs are canonically sorted so that every operation is deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx


class GraphError(ValueError):
    pass


def edge(u, v):
    """Canonical (sorted) representation of the undirected edge {u, v}."""
    if u == v:
        raise GraphError("loop edge %r" % (u,))
    return (u, v) if u < v else (v, u)


def _check_label(v):
    if not isinstance(v, str) or not v or any(c.isspace() for c in v):
        raise GraphError("bad vertex label %r" % (v,))


@dataclass(frozen=True)
class Graph:
    """A finite simple graph: sorted vertex tuple plus a set of sorted edge pairs.

    Immutable value; all edit operations return new graphs.  Isolated
    vertices are permitted.
    """

    vertices: tuple = ()
    edges: frozenset = frozenset()

    @staticmethod
    def build(edges=(), isolated=()):
        es = set()
        vs = set()
        for u, v in edges:
            _check_label(u)
            _check_label(v)
            es.add(edge(u, v))
            vs.add(u)
            vs.add(v)
        for v in isolated:
            _check_label(v)
            vs.add(v)
        return Graph(tuple(sorted(vs)), frozenset(es))

    def __post_init__(self):
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise GraphError("edge endpoint %r not a vertex" % ((u, v),))
            if u == v:
                raise GraphError("loop edge")

    @cached_property
    def adj(self):
        nbrs = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(ns) for v, ns in nbrs.items()}

    # -- basic queries -------------------------------------------------

    def degree(self, v):
        if v not in self.adj:
            raise GraphError("unknown vertex %r" % (v,))
        return len(self.adj[v])

    def neighbors(self, v):
        if v not in self.adj:
            raise GraphError("unknown vertex %r" % (v,))
        return self.adj[v]

    def has_edge(self, u, v):
        return edge(u, v) in self.edges

    def sorted_edges(self):
        return sorted(self.edges)

    @property
    def non_isolated(self):
        return tuple(v for v in self.vertices if self.adj[v])

    def is_terminal(self, v):
        return self.degree(v) == 1

    def terminal_edges(self):
        """Edges with at least one endpoint of degree 1."""
        return frozenset(e for e in self.edges
                         if self.degree(e[0]) == 1 or self.degree(e[1]) == 1)

    # -- derived graphs ------------------------------------------------

    def with_edges(self, new_edges):
        es = set(self.edges)
        es.update(edge(u, v) for u, v in new_edges)
        vs = set(self.vertices) | {w for e in es for w in e}
        return Graph(tuple(sorted(vs)), frozenset(es))

    def without_edges(self, dropped):
        drop = {edge(u, v) for u, v in dropped}
        missing = drop - self.edges
        if missing:
            raise GraphError("edges not present: %s" % sorted(missing))
        return Graph(self.vertices, self.edges - drop)

    def without_vertex(self, x):
        if x not in self.adj:
            raise GraphError("unknown vertex %r" % (x,))
        vs = tuple(v for v in self.vertices if v != x)
        es = frozenset(e for e in self.edges if x not in e)
        return Graph(vs, es)

    def induced(self, vertex_subset):
        vs = frozenset(vertex_subset)
        unknown = vs - set(self.vertices)
        if unknown:
            raise GraphError("unknown vertices %s" % sorted(unknown))
        return Graph(tuple(sorted(vs)),
                     frozenset(e for e in self.edges if e[0] in vs and e[1] in vs))

    def edge_subgraph(self, edge_subset):
        es = frozenset(edge(u, v) for u, v in edge_subset)
        if not es <= self.edges:
            raise GraphError("not a subset of the edge set")
        vs = sorted({w for e in es for w in e})
        return Graph(tuple(vs), es)

    def union(self, other):
        vs = tuple(sorted(set(self.vertices) | set(other.vertices)))
        return Graph(vs, self.edges | other.edges)

    def drop_isolated(self):
        return Graph(self.non_isolated, self.edges)

    def is_subgraph(self, host):
        return (set(self.vertices) <= set(host.vertices)
                and self.edges <= host.edges)

    # -- connectivity --------------------------------------------------

    def components(self):
        """Vertex sets of the connected components, canonically sorted."""
        seen = set()
        comps = []
        for start in self.vertices:
            if start in seen:
                continue
            stack = [start]
            comp = set()
            while stack:
                v = stack.pop()
                if v in comp:
                    continue
                comp.add(v)
                stack.extend(self.adj[v] - comp)
            seen |= comp
            comps.append(frozenset(comp))
        return sorted(comps, key=lambda c: min(c))

    def is_connected(self):
        return len(self.components()) <= 1

    def component_graphs(self):
        return [self.induced(c) for c in self.components()]

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def relabel(self, mapping):
        return Graph.build(((mapping[u], mapping[v]) for u, v in self.edges),
                           isolated=(mapping[v] for v in self.vertices))


@dataclass(frozen=True)
class Cycle:
    """A cycle as a canonical cyclic vertex sequence (length >= 3)."""

    vertices: tuple

    def __post_init__(self):
        if len(self.vertices) < 3 or len(set(self.vertices)) != len(self.vertices):
            raise GraphError("not a valid cycle: %r" % (self.vertices,))

    @property
    def length(self):
        return len(self.vertices)

    def edge_list(self):
        vs = self.vertices
        return [edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    @staticmethod
    def from_vertex_set(g, vset):
        """Canonical cycle through exactly the vertices of vset (which must
        induce a single cycle in g's edge set restricted to them)."""
        start = min(vset)
        nbrs = sorted(g.adj[start] & vset)
        walk = [start, nbrs[0]]
        while True:
            nxt = (g.adj[walk[-1]] & vset) - {walk[-2]}
            (v,) = nxt
            if v == start:
                break
            walk.append(v)
        if len(walk) != len(vset):
            raise GraphError("vertex set does not induce a single cycle")
        return Cycle(tuple(walk))


ONE_BRANCH = "OneBranch"
TWO_BRANCH = "TwoBranch"


@dataclass(frozen=True)
class Branch:
    """A 1- or 2-branch of a cactus at a root vertex."""

    kind: str
    root: str
    subgraph: Graph = field(compare=False)

    def sort_key(self):
        return tuple(self.subgraph.vertices)


# -- biconnectivity and the cactus property ---------------------------


def biconnected_components(g):
    """Edge sets of the maximal 2-connected blocks (bridges are singleton
    blocks), canonically sorted."""
    blocks = [frozenset(edge(u, v) for u, v in block)
              for block in nx.biconnected_component_edges(g.to_networkx())]
    return sorted(blocks, key=lambda b: min(b))


def _block_is_cycle(g, block):
    vs = {w for e in block for w in e}
    deg = {v: 0 for v in vs}
    for u, v in block:
        deg[u] += 1
        deg[v] += 1
    return all(d == 2 for d in deg.values())


def is_cactus(g):
    """True iff every biconnected block is a single edge or a cycle."""
    return all(len(b) == 1 or _block_is_cycle(g, b)
               for b in biconnected_components(g))


def cycles(g):
    """The cycle blocks of a cactus, as Cycle values.  Errors on non-cacti."""
    out = []
    for block in biconnected_components(g):
        if len(block) == 1:
            continue
        if not _block_is_cycle(g, block):
            raise GraphError("graph is not a cactus")
        vset = frozenset(w for e in block for w in e)
        out.append(Cycle.from_vertex_set(g, vset))
    return sorted(out, key=lambda c: c.vertices)


def cycle_count(g):
    if not is_cactus(g):
        raise GraphError("graph is not a cactus")
    return len(g.edges) - len(g.vertices) + len(g.components())


def branches_at(g, x):
    """The branches of a connected cactus g at x.

    Pairwise they share only x and their union is g; each component of g - x
    reached by one edge gives a 1-branch, by two edges a 2-branch.
    """
    if not is_cactus(g):
        raise GraphError("graph is not a cactus")
    if not g.is_connected():
        raise GraphError("graph is not connected")
    if x not in g.adj:
        raise GraphError("unknown vertex %r" % (x,))
    rest = g.without_vertex(x)
    out = []
    for comp in rest.components():
        into = sorted(y for y in g.adj[x] if y in comp)
        sub = g.induced(comp | {x})
        if len(into) == 1:
            out.append(Branch(ONE_BRANCH, x, sub))
        elif len(into) == 2:
            out.append(Branch(TWO_BRANCH, x, sub))
        else:
            # Three edges from x into one component would force two cycles
            # sharing an edge, impossible in a cactus.
            raise GraphError("internal invariant violation: %d edges from %r "
                             "into one component of a cactus" % (len(into), x))
    return sorted(out, key=Branch.sort_key)


# -- cliques, chordality, small cycles --------------------------------


def is_clique(g, vs):
    return all(g.has_edge(u, v) for u, v in itertools.combinations(sorted(vs), 2))


def maximal_cliques(g):
    """All maximal cliques, canonically sorted (Bron-Kerbosch with pivoting)."""
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda v: (len(g.adj[v] & p), v))
        for v in sorted(p - g.adj[pivot]):
            bk(r | {v}, p & g.adj[v], x & g.adj[v])
            p = p - {v}
            x = x | {v}

    bk(frozenset(), frozenset(g.vertices), frozenset())
    return sorted(out, key=sorted)


def simplicial_vertices(g):
    """Vertices whose neighbourhood is a clique."""
    return frozenset(v for v in g.vertices if is_clique(g, g.adj[v]))


def simplexes(g):
    """Maximal cliques containing at least one simplicial vertex."""
    simp = simplicial_vertices(g)
    return [c for c in maximal_cliques(g) if c & simp]


def is_chordal(g):
    return nx.is_chordal(g.to_networkx())


def has_cycle_subgraph(g, length):
    """Whether g contains a (not necessarily induced) cycle on `length`
    vertices as a subgraph.  Supported lengths: 4 and 5."""
    if length not in (4, 5):
        raise GraphError("only subgraph cycles of length 4 or 5 are screened")
    for vs in itertools.combinations(g.non_isolated, length):
        first, rest = vs[0], vs[1:]
        for perm in itertools.permutations(rest):
            walk = (first,) + perm
            if all(g.has_edge(walk[i], walk[(i + 1) % length])
                   for i in range(length)):
                return True
    return False


def induced_cycles_shorter_than(g, k):
    """All induced (chordless) cycles of length < k, as Cycle values."""
    out = []
    for size in range(3, min(k, len(g.vertices) + 1)):
        for vs in itertools.combinations(g.non_isolated, size):
            sub = g.induced(vs)
            if len(sub.edges) == size and all(sub.degree(v) == 2 for v in vs):
                out.append(Cycle.from_vertex_set(g, frozenset(vs)))
    return sorted(out, key=lambda c: c.vertices)


# -- edge-list text format --------------------------------------------


def parse_edge_list(text):
    """Parse the one-edge-per-line format: "u v" per edge, a bare "v" for an
    isolated vertex, '#' starts a comment line."""
    edges = []
    isolated = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if len(parts) == 1:
                _check_label(parts[0])
                isolated.append(parts[0])
            elif len(parts) == 2:
                edges.append(edge(parts[0], parts[1]))
            else:
                raise GraphError("expected 1 or 2 tokens")
        except GraphError as exc:
            raise GraphError("line %d: %s" % (lineno, exc)) from None
    return Graph.build(edges, isolated)


def format_edge_list(g):
    lines = ["%s %s" % e for e in g.sorted_edges()]
    lines += [v for v in g.vertices if not g.adj[v]]
    return "\n".join(lines) + "\n"
