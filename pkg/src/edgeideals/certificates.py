"""Checkable radical-generation certificates.

A GeneratorSet claims that its polynomials generate the edge ideal of its
graph up to radical.  The containment direction is termwise (every term is
divisible by an edge monomial); the other direction is witnessed by a
Certificate: an ordered derivation whose steps each establish new elements
of the radical, ending with every edge monomial established.  All arithmetic
is exact over the integers and only unit coefficients are eliminated, so a
verified certificate is valid over every field.

Step kinds:

  SVStep(rho, mu + nu)        rho an established monomial dividing mu*nu;
                              establishes mu and nu.
  LinearStep(target, subs)    dropping from an established element every term
                              divisible by an established monomial must leave
                              a single +-1 term; establishes that monomial.
  PowerStep(m, k, combo)      checks m^k == sum(c_i * h_i) exactly, h_i
                              established; establishes m.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph
from .polynomials import (Monomial, Polynomial, edge_monomial,
                          monomial_from_data, monomial_to_data,
                          poly_from_data, poly_to_data)


@dataclass(frozen=True)
class GeneratorSet:
    graph: Graph
    polys: tuple

    def __len__(self):
        return len(self.polys)


@dataclass(frozen=True)
class SVStep:
    rho_ref: int
    sum_ref: int


@dataclass(frozen=True)
class LinearStep:
    target_ref: int
    subtract_refs: tuple


@dataclass(frozen=True)
class PowerStep:
    target: Monomial
    k: int
    combination: tuple  # ((coeff Polynomial, established ref), ...)


@dataclass(frozen=True)
class Certificate:
    steps: tuple = ()


@dataclass(frozen=True)
class Verdict:
    ok: bool
    failed_step: int = -1  # -1: generator containment or final coverage
    reason: str = ""
    established: tuple = field(default=(), compare=False)

    def __bool__(self):
        return self.ok


def _unit_monomial(p):
    """(monomial) if p is a single term with coefficient +-1, else None."""
    t = p.single_term
    if t is None:
        return None
    m, c = t
    return m if c in (1, -1) else None


def verify_certificate(gs: GeneratorSet, cert: Certificate) -> Verdict:
    """Check a certificate against a generator set.

    OK means: (a) every term of every generator is divisible by an edge
    monomial of the graph, (b) every step checks by exact arithmetic,
    (c) every edge monomial of the graph ends up established.  Together
    these prove that the generators generate the edge ideal up to radical.
    """
    edge_monomials = {edge_monomial(u, v) for u, v in gs.graph.edges}

    for i, p in enumerate(gs.polys):
        if p.is_zero:
            return Verdict(False, -1, "generator %d is zero" % i)
        for m, _ in p.terms:
            if not any(em.divides(m) for em in edge_monomials):
                return Verdict(False, -1,
                               "generator %d term %s not divisible by any "
                               "edge monomial" % (i, m))

    established = list(gs.polys)

    def fail(idx, why):
        return Verdict(False, idx, why)

    def get(idx, ref):
        if not isinstance(ref, int) or not 0 <= ref < len(established):
            raise IndexError
        return established[ref]

    for idx, step in enumerate(cert.steps):
        try:
            if isinstance(step, SVStep):
                rho = _unit_monomial(get(idx, step.rho_ref))
                if rho is None:
                    return fail(idx, "rho_ref is not a unit monomial")
                s = get(idx, step.sum_ref)
                if len(s.terms) != 2:
                    return fail(idx, "sum_ref does not have two terms")
                (m1, c1), (m2, c2) = s.terms
                if abs(c1) != 1 or abs(c2) != 1:
                    return fail(idx, "sum_ref coefficients are not units")
                if not rho.divides(m1 * m2):
                    return fail(idx, "%s does not divide %s" % (rho, m1 * m2))
                established.append(Polynomial.term(m1, c1))
                established.append(Polynomial.term(m2, c2))
            elif isinstance(step, LinearStep):
                target = get(idx, step.target_ref)
                subs = []
                for r in step.subtract_refs:
                    m = _unit_monomial(get(idx, r))
                    if m is None:
                        return fail(idx, "subtract ref %d is not a unit "
                                         "monomial" % r)
                    subs.append(m)
                rest = [(m, c) for m, c in target.terms
                        if not any(s.divides(m) for s in subs)]
                if len(rest) != 1 or abs(rest[0][1]) != 1:
                    return fail(idx, "remainder is not a single unit term")
                established.append(Polynomial.term(*rest[0]))
            elif isinstance(step, PowerStep):
                if step.k < 1:
                    return fail(idx, "power must be positive")
                acc = Polynomial.zero()
                for coeff, ref in step.combination:
                    acc = acc + coeff * get(idx, ref)
                if acc != Polynomial.term(step.target ** step.k):
                    return fail(idx, "identity %s^%d does not hold"
                                % (step.target, step.k))
                established.append(Polynomial.term(step.target))
            else:
                return fail(idx, "unknown step kind %r" % type(step).__name__)
        except IndexError:
            return fail(idx, "reference out of range")

    have = {_unit_monomial(p) for p in established}
    missing = sorted(str(m) for m in edge_monomials if m not in have)
    if missing:
        return Verdict(False, -1, "edge monomials not established: %s"
                       % ", ".join(missing))
    return Verdict(True, established=tuple(established))


class CertBuilder:
    """Accumulates generators and derivation steps, tracking established
    elements by index so constructions can cross-reference them."""

    def __init__(self, graph):
        self.graph = graph
        self.gens = []
        self.steps = []
        self.established = []
        self.by_monomial = {}  # unit monomial -> ref

    def _register(self, p):
        self.established.append(p)
        m = _unit_monomial(p)
        if m is not None and m not in self.by_monomial:
            self.by_monomial[m] = len(self.established) - 1
        return len(self.established) - 1

    def gen(self, p):
        if self.steps:
            raise ValueError("generators must come before steps")
        self.gens.append(p)
        return self._register(p)

    def ref(self, m):
        """Reference to an established unit monomial."""
        return self.by_monomial[m]

    def sv(self, rho_ref, sum_ref):
        self.steps.append(SVStep(rho_ref, sum_ref))
        s = self.established[sum_ref]
        (m1, c1), (m2, c2) = s.terms
        return (self._register(Polynomial.term(m1, c1)),
                self._register(Polynomial.term(m2, c2)))

    def linear(self, target_ref, subtract_refs):
        self.steps.append(LinearStep(target_ref, tuple(subtract_refs)))
        target = self.established[target_ref]
        subs = [_unit_monomial(self.established[r]) for r in subtract_refs]
        rest = [(m, c) for m, c in target.terms
                if not any(s.divides(m) for s in subs)]
        (m, c), = rest
        return self._register(Polynomial.term(m, c))

    def power(self, target, k, combination):
        self.steps.append(PowerStep(target, k, tuple(combination)))
        return self._register(Polynomial.term(target))

    def result(self):
        return (GeneratorSet(self.graph, tuple(self.gens)),
                Certificate(tuple(self.steps)))


# -- serialization ----------------------------------------------------


def step_to_data(step):
    if isinstance(step, SVStep):
        return {"kind": "sv", "rho": step.rho_ref, "sum": step.sum_ref}
    if isinstance(step, LinearStep):
        return {"kind": "linear", "target": step.target_ref,
                "subtract": list(step.subtract_refs)}
    if isinstance(step, PowerStep):
        return {"kind": "power", "target": monomial_to_data(step.target),
                "k": step.k,
                "combination": [[poly_to_data(c), r]
                                for c, r in step.combination]}
    raise TypeError(step)


def step_from_data(d):
    kind = d["kind"]
    if kind == "sv":
        return SVStep(int(d["rho"]), int(d["sum"]))
    if kind == "linear":
        return LinearStep(int(d["target"]), tuple(int(r) for r in d["subtract"]))
    if kind == "power":
        return PowerStep(monomial_from_data(d["target"]), int(d["k"]),
                         tuple((poly_from_data(cd), int(r))
                               for cd, r in d["combination"]))
    raise ValueError("unknown step kind %r" % kind)


def certified_set_to_data(gs: GeneratorSet, cert: Certificate):
    return {
        "edges": [list(e) for e in gs.graph.sorted_edges()],
        "isolated": [v for v in gs.graph.vertices if not gs.graph.adj[v]],
        "generators": [poly_to_data(p) for p in gs.polys],
        "steps": [step_to_data(s) for s in cert.steps],
    }


def certified_set_from_data(d):
    g = Graph.build(((u, v) for u, v in d["edges"]),
                    isolated=d.get("isolated", ()))
    gs = GeneratorSet(g, tuple(poly_from_data(pd) for pd in d["generators"]))
    cert = Certificate(tuple(step_from_data(sd) for sd in d["steps"]))
    return gs, cert
