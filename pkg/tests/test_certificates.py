"""Certificate verification: sound on hand-built certificates, rejects every
kind of malformed step, and fails under tampering."""

import pytest

from edgeideals import covers
from edgeideals.certificates import (CertBuilder, Certificate, GeneratorSet,
                                     LinearStep, PowerStep, SVStep,
                                     certified_set_from_data,
                                     certified_set_to_data, step_from_data,
                                     step_to_data, verify_certificate)
from edgeideals.graphs import Graph
from edgeideals.polynomials import Monomial, Polynomial

from conftest import bump_coefficient, coefficient_paths


def _m(*vs):
    return Monomial.of(*vs)


def _p(*vs):
    return Polynomial.term(Monomial.of(*vs))


def test_single_edge_axiom():
    g = Graph.build([("a", "b")])
    gs = GeneratorSet(g, (_p("a", "b"),))
    assert verify_certificate(gs, Certificate()).ok


def test_triangle_sv_certificate():
    g = Graph.build([("a", "b"), ("b", "c"), ("a", "c")])
    b = CertBuilder(g)
    r0 = b.gen(_p("a", "b"))
    r1 = b.gen(_p("b", "c") + _p("a", "c"))
    b.sv(r0, r1)
    gs, cert = b.result()
    v = verify_certificate(gs, cert)
    assert v.ok and bool(v)


def test_containment_rejected():
    g = Graph.build([("a", "b")])
    gs = GeneratorSet(g, (_p("a", "c"),))  # ac is not in the edge ideal
    v = verify_certificate(gs, Certificate())
    assert not v.ok and v.failed_step == -1
    assert "not divisible" in v.reason


def test_zero_generator_rejected():
    g = Graph.build([("a", "b")])
    gs = GeneratorSet(g, (Polynomial.zero(),))
    assert not verify_certificate(gs, Certificate()).ok


def test_missing_edge_monomial_rejected():
    g = Graph.build([("a", "b"), ("b", "c")])
    gs = GeneratorSet(g, (_p("a", "b"),))
    v = verify_certificate(gs, Certificate())
    assert not v.ok
    assert "not established" in v.reason


def test_sv_step_divisibility_enforced():
    g = Graph.build([("a", "b"), ("c", "d"), ("a", "c"), ("b", "d")])
    gs = GeneratorSet(g, (_p("a", "b"), _p("c", "d") + _p("a", "c"),
                          _p("b", "d")))
    # ab does not divide (cd)(ac).
    v = verify_certificate(gs, Certificate((SVStep(0, 1),)))
    assert not v.ok and v.failed_step == 0
    assert "does not divide" in v.reason


def test_sv_step_needs_two_unit_terms():
    g = Graph.build([("a", "b"), ("b", "c"), ("a", "c")])
    gs = GeneratorSet(g, (_p("a", "b"),
                          2 * _p("b", "c") + _p("a", "c")))
    v = verify_certificate(gs, Certificate((SVStep(0, 1),)))
    assert not v.ok and "units" in v.reason


def test_linear_step():
    g = Graph.build([("a", "b"), ("b", "c")])
    gs = GeneratorSet(g, (_p("a", "b"), _p("a", "b") + _p("b", "c")))
    v = verify_certificate(gs, Certificate((LinearStep(1, (0,)),)))
    assert v.ok


def test_linear_step_bad_remainder():
    g = Graph.build([("a", "b"), ("b", "c"), ("c", "d")])
    gs = GeneratorSet(g, (_p("a", "b"),
                          _p("a", "b") + _p("b", "c") + _p("c", "d")))
    v = verify_certificate(gs, Certificate((LinearStep(1, (0,)),)))
    assert not v.ok and "remainder" in v.reason


def test_power_step_exact_identity():
    # (bc)^2 = bc*(bc + ac) - bc*(ac), with ac established by an SV step.
    g = Graph.build([("a", "b"), ("b", "c"), ("a", "c")])
    b = CertBuilder(g)
    r0 = b.gen(_p("a", "b"))
    r1 = b.gen(_p("b", "c") + _p("a", "c"))
    r_ac, _ = b.sv(r0, r1)  # terms come back in canonical order: ac, bc
    b.power(_m("b", "c"), 2, [(Polynomial.term(_m("b", "c")), r1),
                              (Polynomial.term(_m("b", "c"), -1), r_ac)])
    gs, cert = b.result()
    assert verify_certificate(gs, cert).ok


def test_power_step_wrong_identity_fails():
    g = Graph.build([("a", "b"), ("b", "c"), ("a", "c")])
    gs = GeneratorSet(g, (_p("a", "b"), _p("b", "c") + _p("a", "c")))
    step = PowerStep(_m("b", "c"), 2,
                     ((Polynomial.term(_m("b", "c")), 1),))
    v = verify_certificate(gs, Certificate((step,)))
    assert not v.ok and "does not hold" in v.reason


def test_power_step_rejects_nonpositive_power():
    g = Graph.build([("a", "b")])
    gs = GeneratorSet(g, (_p("a", "b"),))
    step = PowerStep(_m("a", "b"), 0, ())
    assert not verify_certificate(gs, Certificate((step,))).ok


def test_reference_out_of_range():
    g = Graph.build([("a", "b"), ("b", "c"), ("a", "c")])
    gs = GeneratorSet(g, (_p("a", "b"), _p("b", "c") + _p("a", "c")))
    v = verify_certificate(gs, Certificate((SVStep(0, 7),)))
    assert not v.ok and "out of range" in v.reason


def test_builder_rejects_gens_after_steps():
    g = Graph.build([("a", "b"), ("b", "c"), ("a", "c")])
    b = CertBuilder(g)
    r0 = b.gen(_p("a", "b"))
    r1 = b.gen(_p("b", "c") + _p("a", "c"))
    b.sv(r0, r1)
    with pytest.raises(ValueError):
        b.gen(_p("a", "c"))


def test_step_serialization_round_trip(certificate_corpus):
    for _name, _gs, cert in certificate_corpus:
        for step in cert.steps:
            assert step_from_data(step_to_data(step)) == step


def test_certified_set_round_trip(certificate_corpus):
    for _name, gs, cert in certificate_corpus:
        gs2, cert2 = certified_set_from_data(certified_set_to_data(gs, cert))
        assert gs2 == gs and cert2 == cert
        assert verify_certificate(gs2, cert2).ok


def test_corpus_verifies_and_meets_count_bound(certificate_corpus):
    for name, gs, cert in certificate_corpus:
        assert verify_certificate(gs, cert).ok, name
        assert len(gs) >= covers.big_height(gs.graph), name


def test_every_coefficient_bump_fails(certificate_corpus):
    """Exhaustive single-field tampering over the whole corpus."""
    for name, gs, cert in certificate_corpus:
        data = certified_set_to_data(gs, cert)
        for path in coefficient_paths(data):
            tampered = certified_set_from_data(bump_coefficient(data, path))
            v = verify_certificate(*tampered)
            assert not v.ok, (name, path)
