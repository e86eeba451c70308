"""Gradient pairs, linear-type certificates, families and the catalog."""

from __future__ import annotations

from fractions import Fraction

import pytest

from symrees import Ideal, RingError, ideal_member, make_ring
from symrees.blowup import is_linear_type
from symrees.curves import (
    Verdict,
    analyze_family,
    evaluate_member,
    gradient_pair,
    linear_type_certificate,
    sample_parameters,
)
from symrees.fixtures import (
    CURVES,
    FAMILIES,
    curve_by_name,
    family_by_name,
    fixture_catalog,
)
from symrees.ideal_ops import ideal_equal
from symrees.syzygy import apply_row

R3 = make_ring(["x", "y", "z"])


def test_gradient_pair_univariate():
    ring = make_ring(["x"])
    gp = gradient_pair(ring.parse("x^2"))
    assert [str(g) for g in gp.pair.i_gens] == ["x"]
    assert gp.degree == 2
    assert ideal_member(gp.f, gp.gradient_ideal)


def test_gradient_pair_quartic_partials():
    gp = gradient_pair(R3.parse("x^2*y^2 + x^2*z^2 + y^2*z^2"))
    want = {R3.parse("x*y^2 + x*z^2"), R3.parse("x^2*y + y*z^2"),
            R3.parse("x^2*z + y^2*z")}
    assert set(gp.pair.i_gens) == want


def test_gradient_pair_quintic_proportional_generators():
    gp = gradient_pair(R3.parse("y^4*z + x^5 + x^3*y^2"))
    got = set(gp.pair.i_gens)
    # proportional to x^2(5x^2+3y^2), y(2x^3+4y^2z), y^4
    want = {R3.parse("5*x^4 + 3*x^2*y^2"), R3.parse("x^3*y + 2*y^3*z"),
            R3.parse("y^4")}
    assert got == want


def test_gradient_pair_rejects_inhomogeneous():
    with pytest.raises(RingError):
        gradient_pair(R3.parse("x^2 + y"))


def test_certificates_on_named_curves():
    for slug, verdict in (("three-node-quartic", Verdict.LINEAR_TYPE),
                          ("bad-quintic", Verdict.NOT_LINEAR_TYPE),
                          ("fermat-quartic", Verdict.LINEAR_TYPE)):
        cert = linear_type_certificate(gradient_pair(curve_by_name(slug).curve()))
        assert cert.verdict == verdict, slug


def test_smooth_short_circuit():
    cert = linear_type_certificate(gradient_pair(R3.parse("x^4 + y^4 + z^4")))
    assert cert.verdict == Verdict.LINEAR_TYPE
    assert cert.reason == "regular sequence"
    assert cert.codim_gradient == 3


def test_inconclusive_for_nonisolated_singularities():
    # square factor: the singular locus contains a curve
    cert = linear_type_certificate(gradient_pair(R3.parse("x^2*y^2")))
    assert cert.verdict == Verdict.INCONCLUSIVE
    assert cert.singular_dim > 1


def test_certificate_cross_validates_rees_route():
    for slug in ("three-node-quartic", "bad-quintic"):
        gp = gradient_pair(curve_by_name(slug).curve())
        cert = linear_type_certificate(gp)
        assert (cert.verdict == Verdict.LINEAR_TYPE) == is_linear_type(gp.pair)


# ---------------------------------------------------------------------------
# families


def quintic_family():
    ring = make_ring(["x", "y", "z"], ["u"])
    return ring.parse("y^4*z + x^5 + u*x^3*y^2")


def test_quintic_family_analysis():
    report = analyze_family(quintic_family(), seed=2)
    assert report.codim_gradient == 2
    assert report.codim_entry == 2
    assert not report.generic_linear_type
    assert report.consistent
    assert report.contraction.is_zero


def test_quintic_family_special_member():
    F = quintic_family()
    report = analyze_family(F, seed=2)
    member = evaluate_member(F, [0], family_entry_ideal=report.entry_ideal)
    assert member.certificate.verdict == Verdict.LINEAR_TYPE
    # specialization of the family entry ideal is strictly smaller here
    assert member.specialization_strict is True
    assert member.evaluated_entry_codim == 2
    assert member.member_entry_codim == 3


def test_family_member_bad_value():
    member = evaluate_member(quintic_family(), [1])
    assert member.certificate.verdict == Verdict.NOT_LINEAR_TYPE
    with pytest.raises(RingError):
        evaluate_member(quintic_family(), [1, 2])


def test_family_requires_homogeneous_form():
    ring = make_ring(["x", "y", "z"], ["u"])
    with pytest.raises(RingError):
        analyze_family(ring.parse("x^3 + u*y^2"))


def test_two_node_cusp_member_off_strata():
    fam = family_by_name("b")
    member = evaluate_member(fam.family(), [Fraction(3), Fraction(2)])
    assert member.certificate.verdict == Verdict.LINEAR_TYPE


def test_sampler_avoids_constraints():
    fam = family_by_name("a")
    alpha = sample_parameters(fam.ring(), fam.constraint_polys(), seed=12)
    assert len(alpha) == 3
    for g in fam.constraint_polys():
        from symrees.curves import _eval_params
        assert _eval_params(g, list(fam.params), alpha) != 0


def test_sampler_deterministic():
    fam = family_by_name("a")
    a1 = sample_parameters(fam.ring(), fam.constraint_polys(), seed=12)
    a2 = sample_parameters(fam.ring(), fam.constraint_polys(), seed=12)
    assert a1 == a2


# ---------------------------------------------------------------------------
# catalog


def test_catalog_size_and_keys():
    cat = fixture_catalog()
    assert len(cat) == 13
    assert [f.key for f in cat] == list("abcdefghijklm")


def test_parameter_free_families():
    assert family_by_name("d").params == ()
    assert family_by_name("three-cusps").poly == \
        "y^2*z^2 + x^2*z^2 + x^2*y^2 - 2*x*y*z*(x + y + z)"
    assert family_by_name("m").poly == "y^3*z + x^4 + u1*x^2*y^2"


def test_all_catalog_columns_annihilate():
    for fam in fixture_catalog():
        F = fam.family()
        for col in fam.columns:
            if col.at is None:
                f = F
            else:
                f = F.evaluate_block("param", [col.at[p] for p in fam.params])
            parts = [f.derivative(v) for v in ["x", "y", "z"]]
            vec = [f.ring.parse(e) for e in col.entries]
            assert apply_row(parts, vec).is_zero, fam.key


def test_family_g_contraction():
    fam = family_by_name("g")
    report = analyze_family(fam.family(), seed=1, avoid=fam.constraint_polys())
    u2sq = report.contraction.ring.parse("u2^2")
    assert ideal_member(u2sq, report.contraction)
    assert report.consistent and report.generic_linear_type


def test_family_i_contraction():
    fam = family_by_name("i")
    report = analyze_family(fam.family(), seed=1, avoid=fam.constraint_polys())
    u3 = report.contraction.ring.parse("u3")
    assert ideal_member(u3, report.contraction)
    assert report.consistent and report.generic_linear_type


def test_family_syzygies_have_positive_geometric_degree():
    fam = family_by_name("c")
    report = analyze_family(fam.family(), seed=1, avoid=fam.constraint_polys())
    assert "syzygy coordinate with a geometric-degree-0 term" not in report.warnings


def test_curve_fixture_expectations_well_formed():
    for c in CURVES:
        assert c.expected in ("linear-type", "not-linear-type")
        f = c.curve()
        rep = f.is_homogeneous("geom")
        assert rep.homogeneous
