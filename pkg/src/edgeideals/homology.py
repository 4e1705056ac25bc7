"""Brute-force projective dimension of R/I(G) via Hochster's formula.

The graded Betti number beta_{i,W} is the rank of the reduced homology of the
independence complex restricted to W, in degree |W| - i - 1.  Ranks are taken
over F2 by Gaussian elimination (exact, fast; no torsion is expected at the
sizes the guard permits).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .graphs import Graph, GraphError

MAX_VERTICES = 14  # 2^14 subsets is the hard cap


class SizeGuardError(GraphError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple
    facets: tuple  # maximal faces, frozensets, pairwise non-contained

    def faces(self):
        out = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(map(frozenset, itertools.combinations(sorted(f),
                                                                 k)))
        return out


def _guard(g):
    active = g.non_isolated
    if len(active) > MAX_VERTICES:
        raise SizeGuardError("%d non-isolated vertices exceeds the oracle "
                             "guard (%d)" % (len(active), MAX_VERTICES))
    return active


def independence_complex(g):
    """Faces are the independent sets of g (on the non-isolated vertices);
    facets are the maximal independent sets."""
    from .covers import maximal_independent_sets
    active = _guard(g)
    facets = tuple(sorted(maximal_independent_sets(g), key=sorted))
    return SimplicialComplex(tuple(active), facets)


def _independent_subsets(adj, pool):
    """All independent sets within pool, grouped by cardinality."""
    by_size = {0: [frozenset()]}
    pool = sorted(pool)

    def extend(current, start):
        for i in range(start, len(pool)):
            v = pool[i]
            if adj[v] & current:
                continue
            nxt = current | {v}
            by_size.setdefault(len(nxt), []).append(frozenset(nxt))
            extend(nxt, i + 1)

    extend(frozenset(), 0)
    return by_size


def _f2_rank(rows, ncols):
    if not rows or ncols == 0:
        return 0
    m = np.array(rows, dtype=np.uint8)
    rank = 0
    for col in range(ncols):
        pivots = np.nonzero(m[rank:, col])[0]
        if not len(pivots):
            continue
        pivot = rank + pivots[0]
        m[[rank, pivot]] = m[[pivot, rank]]
        hits = np.nonzero(m[:, col])[0]
        hits = hits[hits != rank]
        m[hits] ^= m[rank]
        rank += 1
        if rank == m.shape[0]:
            break
    return rank


def _reduced_ranks(faces_by_size):
    """Reduced F2 homology ranks per degree, from faces grouped by
    cardinality (degree d faces have d+1 vertices; the empty face is
    degree -1).  Returns {degree: rank}, omitting zero ranks.

    The empty complex (only the empty face) has rank 1 in degree -1.
    """
    max_card = max(faces_by_size)
    boundary_rank = {}  # rank of the boundary map from degree d to d-1
    for d in range(0, max_card):
        upper = faces_by_size.get(d + 1, [])
        lower = faces_by_size.get(d, [])
        if not upper or not lower:
            boundary_rank[d + 1] = 0
            continue
        index = {f: i for i, f in enumerate(lower)}
        rows = []
        for f in upper:
            row = [0] * len(lower)
            for v in f:
                row[index[f - {v}]] = 1
            rows.append(row)
        boundary_rank[d + 1] = _f2_rank(rows, len(lower))
    ranks = {}
    for d in range(-1, max_card):
        n_faces = len(faces_by_size.get(d + 1, []))
        kernel = n_faces - boundary_rank.get(d + 1, 0)
        image = boundary_rank.get(d + 2, 0)
        r = kernel - image
        if r:
            ranks[d] = r
    return ranks


def reduced_homology_ranks(cx: SimplicialComplex):
    """Reduced F2 homology ranks of a complex, {degree: rank}."""
    by_size = {}
    for f in cx.faces():
        by_size.setdefault(len(f), []).append(f)
    return _reduced_ranks(by_size)


@dataclass(frozen=True)
class BettiTable:
    entries: dict = field(default_factory=dict)  # (i, |W|) -> total rank
    pd: int = 0

    def to_data(self):
        return {"pd": self.pd,
                "betti": [[i, j, r]
                          for (i, j), r in sorted(self.entries.items())]}


def projective_dimension(g):
    """(pd, BettiTable) of R/I(G) by Hochster's formula over F2.

    Only subsets W of the non-isolated vertices matter: isolated vertices
    are cone points of every restricted complex and kill its homology.
    """
    active = _guard(g)
    if not g.edges:
        return 0, BettiTable({}, 0)
    entries = {}
    for w in _subsets(active):
        if not w:
            continue
        by_size = _independent_subsets(g.adj, w)
        ranks = _reduced_ranks(by_size)
        for deg, r in ranks.items():
            i = len(w) - deg - 1
            if i >= 1:
                key = (i, len(w))
                entries[key] = entries.get(key, 0) + r
    pd = max(i for i, _ in entries)
    return pd, BettiTable(entries, pd)


def _subsets(pool):
    pool = list(pool)
    for k in range(len(pool) + 1):
        yield from map(frozenset, itertools.combinations(pool, k))
