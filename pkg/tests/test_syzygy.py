"""Syzygy modules, matrices, minors, Jacobians."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from symrees import Ideal, RingError, make_ring
from symrees.ideal_ops import dimension, ideal_equal
from symrees.oracle import column_in_span, syzygies_up_to_degree
from symrees.syzygy import (
    PolyMatrix,
    apply_row,
    entry_ideal,
    hessian,
    jacobian,
    minimalize_columns,
    minors,
    syzygies,
)

R3 = make_ring(["x", "y", "z"])
X, Y, Z = R3.gens()
QUARTIC = R3.parse("x^2*y^2 + x^2*z^2 + y^2*z^2")
PARTIALS = [QUARTIC.derivative(v).primitive() for v in ["x", "y", "z"]]


def test_koszul_column_for_two_variables():
    phi = syzygies([X, Y])
    cols = phi.columns()
    assert len(cols) == 1
    assert cols[0] in ([Y, -X], [-Y, X])


def test_every_column_annihilates():
    phi = syzygies(PARTIALS)
    for col in phi.columns():
        assert apply_row(PARTIALS, col).is_zero


def test_displayed_quartic_columns_are_generated():
    phi = syzygies(PARTIALS)
    degs = [p.degree() for p in PARTIALS]
    c1 = [R3.parse("x*y^2 - x*z^2"), R3.parse("-y^3 - y*z^2"), R3.parse("y^2*z + z^3")]
    c2 = [R3.parse("-x^3 - x*z^2"), R3.parse("x^2*y - y*z^2"), R3.parse("x^2*z + z^3")]
    for col in (c1, c2):
        assert apply_row(PARTIALS, col).is_zero
        assert column_in_span(col, phi.columns(), degs)


def test_higher_cusp_special_member_syzygy():
    f = R3.parse("y^3*z + x^4")
    gens = [f.derivative(v) for v in ["x", "y", "z"]]
    col = [R3.zero, Y, -3 * Z]
    assert apply_row(gens, col).is_zero


def test_syzygy_completeness_against_oracle():
    degs = [p.degree() for p in PARTIALS]
    phi = syzygies(PARTIALS)
    for col in syzygies_up_to_degree(PARTIALS, 7):
        assert column_in_span(col, phi.columns(), degs)
    gens = [X, Y * Y]
    phi2 = syzygies(gens)
    for col in syzygies_up_to_degree(gens, 6):
        assert column_in_span(col, phi2.columns(), [1, 2])


def test_koszul_containment_property():
    rng = random.Random(23)
    gens = PARTIALS
    degs = [p.degree() for p in gens]
    phi = syzygies(gens)
    for i, j in combinations(range(3), 2):
        koszul = [R3.zero] * 3
        koszul[i] = gens[j]
        koszul[j] = -gens[i]
        assert apply_row(gens, koszul).is_zero
        assert column_in_span(koszul, phi.columns(), degs)


def test_regular_sequence_syzygies_are_koszul():
    for gens in ([X, Y], [X, Y, Z]):
        phi = syzygies(gens)
        degs = [1] * len(gens)
        mini = minimalize_columns(phi.columns(), degs)
        n = len(gens)
        assert len(mini) == n * (n - 1) // 2
        for col in mini:
            assert apply_row(gens, col).is_zero


def test_entry_ideal_invariant_under_permutation():
    rng = random.Random(4)
    gens = list(PARTIALS)
    base = entry_ideal(syzygies(gens))
    for _ in range(3):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        other = entry_ideal(syzygies(shuffled))
        assert ideal_equal(base, other)


def test_entry_ideal_codimension_three_node_quartic():
    phi = syzygies(PARTIALS)
    assert dimension(entry_ideal(phi)).codim == 3


def test_jacobian_examples():
    M = jacobian([X * X], ["x", "y"])
    assert M.rows == 2 and M.cols == 1
    assert M[0, 0] == 2 * X and M[1, 0].is_zero

    four = jacobian([R3.parse("x^2 - x*z"), R3.parse("y^2 - y*z")])
    assert four.rows == 3 and four.cols == 2
    assert four[0, 0] == R3.parse("2*x - z")
    assert four[1, 1] == R3.parse("2*y - z")
    assert four[2, 0] == -X and four[2, 1] == -Y


def test_hessian_of_triple_product():
    H = hessian(X * Y * Z)
    for i in range(3):
        assert H[i, i].is_zero
    assert H[0, 1] == Z and H[0, 2] == Y and H[1, 2] == X
    # principal 2x2 minors are squared mixed partials (up to sign)
    I2 = minors(H, 2)
    for sq in (X * X, Y * Y, Z * Z):
        from symrees import ideal_member
        assert ideal_member(sq, I2)


def test_minors_examples_and_errors():
    phi = syzygies([X, Y])
    I1 = minors(PolyMatrix(R3, 2, 1, ((phi[0, 0],), (phi[1, 0],))), 1)
    assert ideal_equal(I1, Ideal(R3, [X, Y]))
    assert dimension(I1).codim == 2
    with pytest.raises(RingError):
        minors(phi, 5)


def test_syzygies_of_zero_generator():
    phi = syzygies([X, R3.zero])
    # the unit vector on the zero generator is a syzygy
    unit_found = any(col[0].is_zero and col[1] == R3.one for col in phi.columns())
    assert unit_found
    for col in phi.columns():
        assert apply_row([X, R3.zero], col).is_zero


def test_matrix_shape_validation():
    with pytest.raises(RingError):
        PolyMatrix(R3, 2, 2, ((X,),))
