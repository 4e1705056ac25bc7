"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's own fast paths: minimal
covers are re-derived by brute-force subset enumeration, so agreement with
the Bron-Kerbosch enumeration is a genuine cross-check.
"""

from __future__ import annotations

import copy
import itertools

import pytest

from edgeideals.graphs import Graph, parse_edge_list


def path_graph(n, prefix="p"):
    return Graph.build(("%s%d" % (prefix, i), "%s%d" % (prefix, i + 1))
                       for i in range(n - 1))


def cycle(n, prefix="c"):
    return Graph.build(("%s%d" % (prefix, i), "%s%d" % (prefix, (i + 1) % n))
                       for i in range(n))


TRIANGLE = parse_edge_list("a b\nb c\nc a")
TRI_2W = parse_edge_list("a b\nb c\nc a\na aw\nb bw")
BOWTIE = parse_edge_list("a b\nb c\nc a\nc d\nd e\ne c")
WHISKER_P3 = parse_edge_list("a b\nb c\na aw\nb bw\nc cw")


def brute_force_minimal_covers(g):
    """All minimal vertex covers by subset enumeration (exponential)."""
    active = list(g.non_isolated)
    covers = []
    for k in range(len(active) + 1):
        for vs in itertools.combinations(active, k):
            s = frozenset(vs)
            if all(u in s or v in s for u, v in g.edges):
                if not any(c <= s for c in covers):
                    covers.append(s)
    # A smaller cover found later can never be a subset of an earlier one
    # (enumeration is by increasing size), so the list is exactly minimal.
    return sorted(covers, key=sorted)


# -- certificate tampering --------------------------------------------


def coefficient_paths(data):
    """Every coefficient field in a serialized certificate: generator terms
    and power-step combination terms."""
    for gi, poly in enumerate(data["generators"]):
        for ti in range(len(poly)):
            yield ("gen", gi, ti)
    for si, step in enumerate(data["steps"]):
        if step["kind"] == "power":
            for ci, (cp, _ref) in enumerate(step["combination"]):
                for ti in range(len(cp)):
                    yield ("pow", si, ci, ti)


def bump_coefficient(data, path):
    """Increment the absolute value of one coefficient (sign preserved)."""
    d = copy.deepcopy(data)
    if path[0] == "gen":
        term = d["generators"][path[1]][path[2]]
    else:
        term = d["steps"][path[1]]["combination"][path[2]][0][path[3]]
    c = term[1]
    term[1] = c + 1 if c > 0 else c - 1
    return d


@pytest.fixture(scope="session")
def certificate_corpus():
    """Verified (name, GeneratorSet, Certificate) triples spanning every
    construction family."""
    from edgeideals import constructions as cons

    out = []
    for ell in (3, 4, 5):
        out.append(("cycle%d" % ell,) + cons.gens_cycle(ell))
    for r in range(5):
        for s in range(5 - r):
            out.append(("lemma52_%d_%d" % (r, s),) + cons.gens_lemma52(r, s))
    out.append(("whisker_p3",) + cons.gens_whisker_tree(WHISKER_P3,
                                                        ("a", "b")))
    att = parse_edge_list("x3 e\ne f\ne ew\nf fw")
    out.append(("lemma53_caseA",) + cons.gens_lemma53(1, 1, [], [att]))
    h1 = parse_edge_list("x1 y1\nx1 z\nz zw")
    h2 = parse_edge_list("x2 y2\nx2 w\nw ww")
    out.append(("lemma54",) + cons.gens_lemma54(h1, h2))
    base = parse_edge_list("a b\nb c")
    out.append(("prop42",) + cons.gens_prop42(
        base, {"a": cons.WHISKER, "b": 3, "c": 5}))
    return out
