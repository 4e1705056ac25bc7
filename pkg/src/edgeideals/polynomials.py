"""Exact sparse multivariate polynomials with integer coefficients.

Variables are vertex labels.  Monomials are sorted (var, exponent) tuples,
polynomials are sorted (monomial, coefficient) tuples; both are hashable
values in canonical form, so equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass


class PolyError(ValueError):
    pass


@dataclass(frozen=True)
class Monomial:
    exps: tuple = ()  # sorted ((var, e), ...) with e >= 1

    @staticmethod
    def of(*variables, **powers):
        """Monomial.of('x1', 'x2') -> x1*x2;  Monomial.of(x1=2) -> x1^2."""
        d = {}
        for v in variables:
            d[v] = d.get(v, 0) + 1
        for v, e in powers.items():
            d[v] = d.get(v, 0) + e
        return Monomial.from_dict(d)

    @staticmethod
    def from_dict(d):
        for v, e in d.items():
            if not isinstance(e, int) or e < 0:
                raise PolyError("bad exponent %r for %r" % (e, v))
        return Monomial(tuple(sorted((v, e) for v, e in d.items() if e > 0)))

    def as_dict(self):
        return dict(self.exps)

    @property
    def is_one(self):
        return not self.exps

    def degree(self):
        return sum(e for _, e in self.exps)

    def __mul__(self, other):
        d = self.as_dict()
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return Monomial.from_dict(d)

    def __pow__(self, k):
        if k < 0:
            raise PolyError("negative power")
        return Monomial(tuple((v, e * k) for v, e in self.exps)) if k else ONE

    def divides(self, other):
        d = dict(other.exps)
        return all(d.get(v, 0) >= e for v, e in self.exps)

    def __truediv__(self, other):
        if not other.divides(self):
            raise PolyError("%s does not divide %s" % (other, self))
        d = self.as_dict()
        for v, e in other.exps:
            d[v] -= e
        return Monomial.from_dict(d)

    def sort_key(self):
        return (-self.degree(), self.exps)

    def __str__(self):
        if self.is_one:
            return "1"
        return "*".join(v if e == 1 else "%s^%d" % (v, e) for v, e in self.exps)


ONE = Monomial()


def _canon(terms):
    out = {}
    for m, c in terms:
        out[m] = out.get(m, 0) + c
    return tuple(sorted(((m, c) for m, c in out.items() if c),
                        key=lambda t: t[0].sort_key()))


@dataclass(frozen=True)
class Polynomial:
    terms: tuple = ()  # canonical ((Monomial, nonzero int), ...)

    @staticmethod
    def of(*monomials):
        """Sum of monomials, each with coefficient +1."""
        return Polynomial(_canon((m, 1) for m in monomials))

    @staticmethod
    def term(m, c=1):
        return Polynomial(_canon([(m, c)]))

    @staticmethod
    def zero():
        return Polynomial()

    def __post_init__(self):
        object.__setattr__(self, "terms", _canon(self.terms))

    @property
    def is_zero(self):
        return not self.terms

    def monomials(self):
        return [m for m, _ in self.terms]

    def coefficient(self, m):
        for mm, c in self.terms:
            if mm == m:
                return c
        return 0

    @property
    def single_term(self):
        """(monomial, coeff) if this polynomial has exactly one term."""
        if len(self.terms) != 1:
            return None
        return self.terms[0]

    def __add__(self, other):
        return Polynomial(self.terms + other.terms)

    def __neg__(self):
        return Polynomial(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(tuple((m, c * other) for m, c in self.terms))
        if isinstance(other, Monomial):
            return Polynomial(tuple((m * other, c) for m, c in self.terms))
        return Polynomial(tuple((m1 * m2, c1 * c2)
                                for m1, c1 in self.terms
                                for m2, c2 in other.terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise PolyError("negative power")
        result = Polynomial.term(ONE)
        base = self
        for _ in range(k):
            result = result * base
        return result

    def relabel(self, mapping):
        return Polynomial(tuple(
            (Monomial.from_dict({mapping.get(v, v): e for v, e in m.exps}), c)
            for m, c in self.terms))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for m, c in self.terms:
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = "" if abs(c) == 1 and not m.is_one else str(abs(c))
            body = "" if m.is_one and mag else str(m)
            parts.append(sign + mag + ("*" if mag and body else "") + body
                         if (mag or body) else sign + "1")
        return "".join(parts) if len(parts) == 1 else " ".join(parts)


def edge_monomial(u, v):
    return Monomial.of(u, v)


# -- serialization (stable, bit-exact round-trip) ---------------------


def monomial_to_data(m):
    return [[v, e] for v, e in m.exps]


def monomial_from_data(data):
    return Monomial(tuple((str(v), int(e)) for v, e in data))


def poly_to_data(p):
    return [[monomial_to_data(m), c] for m, c in p.terms]


def poly_from_data(data):
    return Polynomial(tuple((monomial_from_data(md), int(c)) for md, c in data))
