"""Acceptance gate: every criterion runs at its stated tolerance (exact
arithmetic throughout) and prints one pass/fail line."""

from __future__ import annotations

import time

import pytest

from symrees.acceptance import (
    criterion_1_four_points,
    criterion_2_three_node_quartic,
    criterion_3_bad_quintic,
    criterion_4_quintic_family,
    criterion_5_saturation_contractions,
    criterion_6_catalog,
    criterion_7_torsion_free_monomial,
    criterion_8_property_suites,
    criterion_9_dimension_bounds,
)

BUDGETS = {
    1: 5.0,
    2: 30.0,
    3: 60.0,
    4: 60.0,
    5: 240.0,     # two families at 120 s each
    6: 900.0,
    7: 120.0,     # two fixtures at 60 s each
    8: 600.0,
    9: 300.0,
}


def _run(fn, number):
    t0 = time.time()
    res = fn()
    res.seconds = time.time() - t0
    print(res.line())
    for d in res.details:
        if d.startswith("FAIL"):
            print("   ", d)
    assert res.passed, [d for d in res.details if d.startswith("FAIL")]
    assert res.seconds < BUDGETS[number], \
        f"criterion {number} exceeded its time budget: {res.seconds:.1f}s"
    return res


def test_acceptance_1_four_points_torsion():
    _run(criterion_1_four_points, 1)


def test_acceptance_2_three_node_quartic():
    _run(criterion_2_three_node_quartic, 2)


def test_acceptance_3_bad_quintic():
    _run(criterion_3_bad_quintic, 3)


def test_acceptance_4_quintic_family():
    _run(criterion_4_quintic_family, 4)


def test_acceptance_5_saturation_contractions():
    _run(criterion_5_saturation_contractions, 5)


def test_acceptance_6_rational_quartic_catalog():
    _run(criterion_6_catalog, 6)


def test_acceptance_7_torsion_free_monomial_fixtures():
    _run(criterion_7_torsion_free_monomial, 7)


def test_acceptance_8_property_suites():
    _run(criterion_8_property_suites, 8)


def test_acceptance_9_dimension_bounds():
    _run(criterion_9_dimension_bounds, 9)
