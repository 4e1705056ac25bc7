"""Arithmetical-rank upper bounds for edge ideals of cactus graphs.

The main bound is ara <= bight + n (n = number of cycles).  Besides the
closed-form bound, `theorem34_trace` replays the inductive proof on a concrete
graph, producing a decomposition tree in which every step's cover-cardinality
inequalities are re-verified by exhaustive enumeration.  An assertion failure
is a hard error: the inequalities are proved unconditionally, so a violation
means an implementation bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import covers
from . import graphs
from .graphs import TWO_BRANCH, Graph, GraphError, edge


class TraceInvariantError(GraphError):
    """A proof-step inequality failed on a concrete instance."""


@dataclass(frozen=True)
class BoundReport:
    graph: Graph
    n_cycles: int
    big_height: int
    bound: int
    improvement_k: int = 0
    source: str = "Thm 3.4"
    stci: bool = False

    def __post_init__(self):
        assert self.bound == self.big_height + self.n_cycles - \
            self.improvement_k
        assert 0 <= self.improvement_k <= self.n_cycles


def _require_cactus(g):
    if not graphs.is_cactus(g):
        raise GraphError("graph is not a cactus")


def cycle_count(g):
    return graphs.cycle_count(g)


def theorem34_bound(g, limit=covers.DEFAULT_VERTEX_LIMIT):
    """ara I(G) <= bight I(G) + n for a cactus graph with n cycles."""
    n = cycle_count(g)
    bh = covers.big_height(g, limit=limit)
    return BoundReport(g, n, bh, bh + n)


# -- cycle opening ----------------------------------------------------


def fresh_vertex(g, base):
    name = base + "'"
    while name in g.adj:
        name += "'"
    return name


def open_cycle(g, cycle, v):
    """Open a cycle at a degree-2 vertex v: a fresh vertex y replaces v as
    the endpoint of one cycle edge at v, turning the cycle into a path.
    The edge count is preserved; ara does not decrease and bight increases
    at most by one, so the bight + n budget is unchanged."""
    on_cycle = set(cycle.vertices)
    if v not in on_cycle:
        raise GraphError("%r does not lie on the cycle" % (v,))
    if g.degree(v) != 2:
        raise GraphError("%r has degree %d, need 2" % (v, g.degree(v)))
    xs = min(w for w in g.neighbors(v) if w in on_cycle)
    y = fresh_vertex(g, v)
    return g.without_edges([edge(xs, v)]).with_edges([(xs, y)])


def corollary41_bound(g, limit=covers.DEFAULT_VERTEX_LIMIT):
    """Improved bound bight + n - k, where k counts the cycles of length
    divisible by 3 in which all vertices have degree 2 except (at most) two
    consecutive ones."""
    _require_cactus(g)
    k = 0
    for cycle in graphs.cycles(g):
        if cycle.length % 3 != 0:
            continue
        walk = cycle.vertices
        high = [i for i, v in enumerate(walk) if g.degree(v) != 2]
        if len(high) <= 1:
            k += 1
        elif len(high) == 2:
            i, j = high
            if j - i == 1 or (i == 0 and j == len(walk) - 1):
                k += 1
    n = cycle_count(g)
    bh = covers.big_height(g, limit=limit)
    return BoundReport(g, n, bh, bh + n - k, improvement_k=k,
                       source="Cor 4.1")


# -- whisker recognizers ----------------------------------------------


def is_fully_whiskered(g):
    """Every vertex lies on some terminal edge.  (Then ara = bight.)"""
    if not g.edges:
        return False
    covered = set()
    for u, v in g.terminal_edges():
        covered.update((u, v))
    return covered == set(g.vertices)


def is_whisker_graph(g):
    """Whether g is a base graph with exactly one pendant edge attached to
    each base vertex; returns (bool, base graph or None).

    The base consists of the non-terminal vertices; a bare edge has no
    non-terminal vertex and is not considered a whisker graph (its base
    would be empty).
    """
    nonterm = [v for v in g.vertices if g.degree(v) > 1]
    term = [v for v in g.vertices if g.degree(v) <= 1]
    if not nonterm:
        return False, None
    for t in term:
        if g.degree(t) == 0 or g.degree(next(iter(g.adj[t]))) == 1:
            return False, None
    for v in nonterm:
        pendants = [w for w in g.neighbors(v) if g.degree(w) == 1]
        if len(pendants) != 1:
            return False, None
    return True, g.induced(nonterm)


def proposition42_bound(base, attachments, limit=covers.DEFAULT_VERTEX_LIMIT):
    """Bound for the graph obtained by attaching a whisker or a cycle to
    every vertex of a base graph: bight + m, where m counts the attached
    cycles of length congruent to 1 mod 3.  When every cycle has length 3
    or 5, hgt = bight and the bound is the height (an STCI witness).

    Returns (BoundReport, constructed graph).
    """
    from .constructions import WHISKER, build_attached_graph
    g, _ = build_attached_graph(base, attachments)
    lengths = [a for a in attachments.values() if a != WHISKER]
    m = sum(1 for ell in lengths if ell % 3 == 1)
    stats = covers.cover_stats(g, limit=limit)
    stci = all(ell in (3, 5) for ell in lengths)
    if stci and stats.height != stats.big_height:
        raise TraceInvariantError(
            "hgt = bight must hold when all cycle lengths are 3 or 5")
    report = BoundReport(g, len(lengths), stats.big_height,
                         stats.big_height + m,
                         improvement_k=len(lengths) - m,
                         source="Prop 4.2", stci=stci)
    return report, g


# -- proof-mirroring decomposition trace ------------------------------


@dataclass(frozen=True)
class TraceNode:
    graph: Graph
    case_tag: str
    bound: int  # = bight + n of this node's graph
    cover_numbers: dict = field(default_factory=dict)
    detail: dict = field(default_factory=dict)
    children: tuple = ()

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def to_data(self):
        return {
            "case": self.case_tag,
            "bound": self.bound,
            "edges": [list(e) for e in self.graph.sorted_edges()],
            "cover_numbers": dict(self.cover_numbers),
            "detail": {k: (sorted(v) if isinstance(v, (set, frozenset))
                           else v) for k, v in self.detail.items()},
            "children": [c.to_data() for c in self.children],
        }


def _check(cond, msg, **numbers):
    if not cond:
        raise TraceInvariantError(
            "%s (%s)" % (msg, ", ".join("%s=%s" % kv
                                        for kv in sorted(numbers.items()))))


def _node_bound(g, limit):
    if not g.edges:
        return 0
    return covers.big_height(g, limit=limit) + cycle_count(g)


def _budget_check(node):
    total = sum(c.bound for c in node.children)
    _check(total <= node.bound,
           "children exceed the bight + n budget in case %s" % node.case_tag,
           children=total, budget=node.bound)
    return node


def theorem34_trace(g, limit=covers.DEFAULT_VERTEX_LIMIT):
    """Replay the inductive proof of the bight + n bound on g.

    The returned tree has one node per proof step: OpenCycle preprocessing,
    the two base cases, and the four split cases at a vertex lying on no
    terminal edge.  Every node records the enumerated cover cardinalities
    that the corresponding proof step reasons about, and the step's
    inequalities are asserted.  Isolated vertices are dropped up front
    (they carry no budget).
    """
    _require_cactus(g)
    g = g.drop_isolated()
    if not g.vertices:
        return TraceNode(g, "Base-FullyWhiskered", 0)
    if not g.is_connected():
        children = tuple(_trace(c, limit) for c in g.component_graphs())
        return _budget_check(TraceNode(g, "Components", _node_bound(g, limit),
                                       children=children))
    return _trace(g, limit)


def _trace(g, limit):
    bound = _node_bound(g, limit)

    if len(g.edges) == 1:
        return TraceNode(g, "Base-SingleEdge", bound)

    # Preprocessing: open cycles at degree-2 vertices until every cycle
    # vertex has degree > 2.
    for cycle in graphs.cycles(g):
        for v in sorted(cycle.vertices):
            if g.degree(v) == 2:
                opened = open_cycle(g, cycle, v)
                child = _trace(opened, limit)
                bh, bh_child = covers.big_height(g, limit=limit), \
                    covers.big_height(opened, limit=limit)
                _check(bh <= bh_child <= bh + 1,
                       "opening a cycle must keep bight within +1",
                       before=bh, after=bh_child)
                node = TraceNode(g, "OpenCycle", bound,
                                 detail={"opened_at": v},
                                 children=(child,))
                return _budget_check(node)

    if is_fully_whiskered(g):
        return TraceNode(g, "Base-FullyWhiskered", bound)

    on_terminal = set()
    for u, v in g.terminal_edges():
        on_terminal.update((u, v))
    x = min(v for v in g.vertices if v not in on_terminal)
    return _split(g, x, bound, limit)


def _split(g, x, bound, limit):
    """One inductive step at x: pick the branch G2, classify by which
    maximum minimal covers contain x, recurse on the two parts."""
    branches = graphs.branches_at(g, x)
    _check(len(branches) >= 2, "split vertex must have at least two branches",
           branches=len(branches))
    for br in branches:
        _check(len(br.subgraph.edges) > 1, "no branch may be a single edge")

    def forced(h):
        return covers.vertex_in_every_maximum_cover(h, x, limit=limit)

    unforced = [br for br in branches if not forced(br.subgraph)]
    g2_branch = max(unforced, key=lambda br: br.sort_key()) if unforced \
        else max(branches, key=lambda br: br.sort_key())
    g2 = g2_branch.subgraph
    g1 = g.edge_subgraph(g.edges - g2.edges)

    b = covers.big_height(g, limit=limit)
    b1 = covers.big_height(g1, limit=limit)
    b2 = covers.big_height(g2, limit=limit)
    numbers = {"b": b, "b1": b1, "b2": b2}
    ys = sorted(g2.neighbors(x))
    two_branch = g2_branch.kind == TWO_BRANCH
    detail = {"x": x, "g2_vertices": set(g2.vertices),
              "branch_kind": "2-branch" if two_branch else "1-branch"}

    def primed_parts():
        """G'1 = G1 plus the pendant edges xy_i; G2bar = G2 minus them
        (and minus the then-isolated x)."""
        g1p = g1.with_edges((x, y) for y in ys)
        g2bar = g2.without_edges(edge(x, y) for y in ys).drop_isolated()
        b1p = covers.big_height(g1p, limit=limit)
        b2bar = covers.big_height(g2bar, limit=limit)
        numbers["b1_prime"] = b1p
        numbers["b2_bar"] = b2bar
        if two_branch:
            _check(b1p <= b1 + 1, "2-branch: b1' <= b1 + 1 fails", **numbers)
            _check(cycle_count(g2bar) == cycle_count(g2) - 1,
                   "2-branch removal must open exactly one cycle")
        else:
            _check(b1p == b1, "1-branch: b1' = b1 fails", **numbers)
            _check(cycle_count(g2bar) == cycle_count(g2),
                   "1-branch removal must not change the cycle count")
        _check(b2bar <= b2 - 1, "b2bar <= b2 - 1 fails", **numbers)
        return g1p, g2bar

    if forced(g1):
        if forced(g2):
            tag = "Case1.1"
            _check(b == b1 + b2 - 1, "Case 1.1: b = b1 + b2 - 1 fails",
                   **numbers)
            g1p, g2bar = primed_parts()
            children = (g1p, g2bar)
        else:
            # Some maximum cover of G2 avoids x; split a) / b) on whether
            # one of them leaves x without redundant neighbours.
            avoiding = [c for c in covers.maximum_minimal_covers(g2,
                                                                 limit=limit)
                        if x not in c.vertices]
            _check(bool(avoiding), "unforced branch must have an avoiding "
                                   "maximum cover")
            clean = [c for c in avoiding
                     if not any(covers.is_redundant_neighbor(g2, c, x, y)
                                for y in ys)]
            if clean:
                tag = "Case1.2a"
                _check(b == b1 + b2, "Case 1.2a: b = b1 + b2 fails", **numbers)
                detail["cover_without_redundant"] = set(clean[0].vertices)
                children = (g1, g2)
            else:
                tag = "Case1.2b"
                _check(b <= b1 + b2 - 1, "inequality (3) fails", **numbers)
                g1p, g2bar = primed_parts()
                if b == b1 + b2 - 2:
                    _check(two_branch, "b = b1 + b2 - 2 needs a 2-branch",
                           **numbers)
                    _check(numbers["b2_bar"] <= b2 - 2,
                           "final subcase: b2bar <= b2 - 2 fails", **numbers)
                children = (g1p, g2bar)
    else:
        tag = "Case2"
        _check(not forced(g2),
               "Case 2 requires a branch with an avoiding maximum cover")
        _check(b == b1 + b2, "Case 2: b = b1 + b2 fails", **numbers)
        children = (g1, g2)

    node = TraceNode(g, tag, bound, cover_numbers=numbers, detail=detail,
                     children=tuple(_trace(c, limit) for c in children))
    return _budget_check(node)
