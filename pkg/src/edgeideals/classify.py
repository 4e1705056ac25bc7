"""Cohen-Macaulay and set-theoretic-complete-intersection classification.

Covers the unicyclic characterization (five structural cases), the chordal /
no-C4-C5 equivalence, the girth-at-least-6 characterization, and a dispatcher
that returns the strongest applicable verdict with its citation tag.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import bounds, covers, graphs
from .graphs import Graph, GraphError

CM = "CM"
NOT_CM = "NotCM"
UNKNOWN = "Unknown"


class HypothesisError(GraphError):
    """A classification result was invoked outside its hypothesis."""


@dataclass(frozen=True)
class CmVerdict:
    status: str
    stci: str = UNKNOWN  # "Yes" requires a citation in case_tag
    case_tag: str = "none"
    evidence: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.stci == "Yes":
            assert self.case_tag != "none"
            assert self.status == CM


def is_whisker_tree(g):
    """Whether g is the whisker graph of a tree; returns (bool, decomposition).

    Equivalently: g is a tree in which every non-terminal vertex has exactly
    one terminal neighbour and every terminal vertex has a non-terminal
    neighbour.  A bare edge does not qualify (empty base).  The decomposition
    maps each base vertex to its whisker.
    """
    if not g.vertices or not g.edges:
        return False, None
    if not g.is_connected() or len(g.edges) != len(g.vertices) - 1:
        return False, None
    base = [v for v in g.vertices if g.degree(v) > 1]
    if not base:
        return False, None
    whiskers = {}
    for v in base:
        pendants = [w for w in g.neighbors(v) if g.degree(w) == 1]
        if len(pendants) != 1:
            return False, None
        whiskers[v] = pendants[0]
    for t in g.vertices:
        if g.degree(t) == 1 and g.degree(next(iter(g.adj[t]))) == 1:
            return False, None
    return True, {"base": g.induced(base), "whiskers": whiskers}


def simplex_partition_check(g):
    """True iff every vertex lies in exactly one simplex (a maximal clique
    containing a simplicial vertex); returns (bool, partition)."""
    simplexes = graphs.simplexes(g)
    count = {v: 0 for v in g.vertices}
    for s in simplexes:
        for v in s:
            count[v] += 1
    if all(c == 1 for c in count.values()):
        return True, sorted(simplexes, key=sorted)
    return False, None


def _whisker_trees_and_edges(h):
    """Every component of h is a whisker tree or a single edge.  Isolated
    vertices are permitted: in context they are cycle whiskers, not
    components of their own."""
    for comp in h.drop_isolated().component_graphs():
        if len(comp.edges) == 1:
            continue
        ok, _ = is_whisker_tree(comp)
        if not ok:
            return False
    return True


def _case5_split(g, cycle):
    """Match the length-4 case: two adjacent cycle vertices of degree 2; the
    graphs attached to the other two, joined across their cycle edge, form a
    whisker tree.  Returns evidence or None."""
    walk = cycle.vertices
    off_cycle = g.without_edges(cycle.edge_list())
    for i in range(4):
        x3, x4 = walk[i], walk[(i + 1) % 4]
        x2, x1 = walk[(i + 2) % 4], walk[(i + 3) % 4]
        if g.degree(x3) != 2 or g.degree(x4) != 2:
            continue
        comp1 = next(c for c in off_cycle.components() if x1 in c)
        comp2 = next(c for c in off_cycle.components() if x2 in c)
        h1 = off_cycle.induced(comp1)
        h2 = off_cycle.induced(comp2)
        if not h1.edges or not h2.edges:
            continue
        bridge = h1.union(h2).with_edges([(x1, x2)])
        ok, _ = is_whisker_tree(bridge)
        if ok:
            return {"x1": x1, "x2": x2, "h1": h1, "h2": h2}
    return None


def _match_case(g, cycle):
    """Which of the five structural cases an unmixed unicyclic graph falls
    into; returns (tag, evidence) or None.  The structural descriptions are
    faithful only under unmixedness (e.g. a triangle with a single whisker
    fits the wording of case 3 but is mixed, hence not Cohen-Macaulay)."""
    ell = cycle.length
    on_cycle = set(cycle.vertices)
    rest = g.induced(set(g.vertices) - on_cycle)

    if set(g.vertices) == on_cycle and ell in (3, 5):
        return "Thm 5.1 case 1", {"cycle": cycle.vertices}

    ok, dec = bounds.is_whisker_graph(g)
    if ok:
        return "Thm 5.1 case 2", {"base": dec}

    if ell == 3 and any(g.degree(v) == 2 for v in on_cycle) \
            and _whisker_trees_and_edges(rest):
        return "Thm 5.1 case 3", {"cycle": cycle.vertices}

    if ell == 5 and _whisker_trees_and_edges(rest):
        walk = cycle.vertices
        adjacent_high = any(
            g.degree(walk[i]) > 2 and g.degree(walk[(i + 1) % 5]) > 2
            for i in range(5))
        if not adjacent_high:
            return "Thm 5.1 case 4", {"cycle": cycle.vertices}

    if ell == 4:
        evidence = _case5_split(g, cycle)
        if evidence is not None:
            return "Thm 5.1 case 5", evidence

    return None


def classify_unicyclic(g, limit=covers.DEFAULT_VERTEX_LIMIT):
    """Classify a connected unicyclic graph.  Cohen-Macaulayness is
    equivalent to being pure and different from the 4- and 7-cycles; every
    Cohen-Macaulay graph then matches one of five structural cases, each of
    which is also a set-theoretic complete intersection."""
    if not g.is_connected():
        raise GraphError("graph must be connected")
    cycle_list = graphs.cycles(g)
    if len(cycle_list) != 1:
        raise GraphError("graph must have exactly one cycle")
    (cycle,) = cycle_list
    ell = cycle.length

    stats = covers.cover_stats(g, limit=limit)
    if not stats.unmixed:
        return CmVerdict(NOT_CM, case_tag="Thm 5.1",
                         evidence={"cycle_length": ell,
                                   "height": stats.height,
                                   "big_height": stats.big_height})
    if set(g.vertices) == set(cycle.vertices) and ell in (4, 7):
        return CmVerdict(NOT_CM, case_tag="Thm 5.1",
                         evidence={"cycle_length": ell,
                                   "excluded_cycle": True})
    matched = _match_case(g, cycle)
    if matched is None:
        raise GraphError("internal invariant violation: a pure unicyclic "
                         "graph other than the 4- and 7-cycles must match "
                         "one of the five structural cases")
    tag, evidence = matched
    return CmVerdict(CM, "Yes", tag, evidence)


def corollary44(g, limit=covers.DEFAULT_VERTEX_LIMIT):
    """For chordal graphs, or graphs without C4/C5 subgraphs: purity, CM,
    the simplex partition and STCI are all equivalent."""
    if not graphs.is_chordal(g) and (graphs.has_cycle_subgraph(g, 4)
                                     or graphs.has_cycle_subgraph(g, 5)):
        raise HypothesisError("hypothesis not met: graph is neither chordal "
                              "nor free of length-4/5 cycle subgraphs")
    stats = covers.cover_stats(g, limit=limit)
    part_ok, partition = simplex_partition_check(g)
    if stats.unmixed != part_ok:
        raise GraphError("internal invariant violation: purity and the "
                         "simplex partition must agree under the hypothesis")
    if part_ok:
        return CmVerdict(CM, "Yes", "Cor 4.4",
                         {"partition": [sorted(s) for s in partition]})
    return CmVerdict(NOT_CM, case_tag="Cor 4.4",
                     evidence={"height": stats.height,
                               "big_height": stats.big_height})


def corollary61(g, limit=covers.DEFAULT_VERTEX_LIMIT):
    """For connected graphs of girth at least 6 that are neither a single
    edge nor a 7-cycle: pure <=> whisker graph <=> Cohen-Macaulay."""
    if not g.is_connected():
        raise HypothesisError("hypothesis not met: graph must be connected")
    if len(g.edges) == 1:
        raise HypothesisError("hypothesis not met: single edge excluded")
    if len(g.vertices) == 7 and len(g.edges) == 7 \
            and all(g.degree(v) == 2 for v in g.vertices):
        raise HypothesisError("hypothesis not met: the 7-cycle is excluded")
    if graphs.induced_cycles_shorter_than(g, 6):
        raise HypothesisError("hypothesis not met: graph has a minimal cycle "
                              "of length less than 6")
    stats = covers.cover_stats(g, limit=limit)
    whisker, base = bounds.is_whisker_graph(g)
    if stats.unmixed != whisker:
        raise GraphError("internal invariant violation: purity and the "
                         "whisker decomposition must agree under the "
                         "hypothesis")
    if whisker:
        return CmVerdict(CM, "Yes", "Cor 6.1",
                         {"base_edges": [list(e) for e in
                                         base.sorted_edges()]})
    return CmVerdict(NOT_CM, case_tag="Cor 6.1",
                     evidence={"height": stats.height,
                               "big_height": stats.big_height})


def _prop42_tail(g):
    """Recognize g as a base graph with a whisker or a 3-/5-cycle attached to
    every base vertex (in which case the edge ideal is a set-theoretic
    complete intersection).  Returns (base, attachments) or None."""
    from .constructions import WHISKER
    if not graphs.is_cactus(g) or not g.edges:
        return None
    interiors = {}   # root -> frozenset of attachment-interior vertices
    kinds = {}
    for cyc in graphs.cycles(g):
        contacts = [v for v in cyc.vertices if g.degree(v) > 2]
        if len(contacts) != 1:
            # A cycle touching the rest of the graph in several vertices
            # belongs to the base (every one of its vertices must then
            # carry an attachment of its own).
            continue
        root = contacts[0]
        if root in interiors:
            return None
        interiors[root] = frozenset(cyc.vertices) - {root}
        kinds[root] = cyc.length
    for u, v in g.terminal_edges():
        tip, root = (u, v) if g.degree(u) == 1 else (v, u)
        if root in interiors or g.degree(root) == 1:
            return None
        interiors[root] = frozenset([tip])
        kinds[root] = WHISKER
    interior_all = set()
    for s in interiors.values():
        if s & interior_all:
            return None
        interior_all |= s
    base_vs = set(g.vertices) - interior_all
    if base_vs != set(interiors):
        return None
    base = g.induced(base_vs)
    # Reconstruct and compare: interiors may not carry extra edges.
    expected = len(base.edges) + sum(
        1 if kinds[r] == WHISKER else kinds[r] for r in kinds)
    if len(g.edges) != expected:
        return None
    if any(ell not in (WHISKER, 3, 5) for ell in kinds.values()):
        return None
    return base, kinds


def stci_verdict(g, limit=covers.DEFAULT_VERTEX_LIMIT):
    """Try each classification result in fixed order and return the strongest
    verdict; Unknown when nothing applies."""
    if g.edges and g.is_connected() and len(g.edges) == len(g.vertices):
        return classify_unicyclic(g, limit=limit)
    try:
        return corollary44(g, limit=limit)
    except HypothesisError:
        pass
    try:
        return corollary61(g, limit=limit)
    except HypothesisError:
        pass
    tail = _prop42_tail(g)
    if tail is not None:
        base, kinds = tail
        stats = covers.cover_stats(g, limit=limit)
        if stats.unmixed:
            return CmVerdict(CM, "Yes", "Prop 4.2 tail",
                             {"base_vertices": sorted(base.vertices),
                              "attachments": {r: str(k)
                                              for r, k in kinds.items()}})
    return CmVerdict(UNKNOWN)
