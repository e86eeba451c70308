"""Ideal calculus: set operations, dimension, graded minimal generators."""

from __future__ import annotations

import random

import pytest

from symrees import Ideal, RingError, buchberger, ideal_member, make_ring
from symrees.ideal_ops import (
    dimension,
    eliminate,
    ideal_contains,
    ideal_equal,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    minimal_homogeneous_generators,
    quotient,
    saturate,
    saturate_principal,
)
from symrees.oracle import (
    monomial_members,
    monomial_quotient,
    monomial_saturation,
)

R3 = make_ring(["x", "y", "z"])
X, Y, Z = R3.gens()


def test_sum_product_power_examples():
    assert ideal_product(Ideal(R3, [X]), Ideal(R3, [Y])).gens == (X * Y,)
    sq = ideal_power(Ideal(R3, [X, Y]), 2)
    assert set(sq.gens) == {X * X, X * Y, Y * Y}
    assert ideal_power(Ideal(R3, [X]), 0).gens == (R3.one,)
    # 5 generators -> 15 pairwise products before interreduction
    from symrees.fixtures import four_points_pair
    pair = four_points_pair()
    assert len(ideal_power(pair.i_ideal, 2)) == 15


def test_intersect_examples():
    assert intersect(Ideal(R3, [X]), Ideal(R3, [Y])).gens == (X * Y,)
    got = intersect(Ideal(R3, [X * X]), Ideal(R3, [X]))
    assert ideal_equal(got, Ideal(R3, [X * X]))
    # intersection outputs are members of both inputs
    I = Ideal(R3, [X * X - Y * Z, X * Y])
    J = Ideal(R3, [Y * Y, X - Z])
    meet = intersect(I, J)
    for g in meet.gens:
        assert ideal_member(g, I) and ideal_member(g, J)


def test_quotient_examples():
    assert ideal_equal(quotient(Ideal(R3, [X * Y]), Ideal(R3, [X])),
                       Ideal(R3, [Y]))
    assert ideal_equal(quotient(Ideal(R3, [X * X, X * Y]), Ideal(R3, [X])),
                       Ideal(R3, [X, Y]))
    I = Ideal(R3, [X * Y])
    assert ideal_equal(quotient(I, Ideal(R3, [R3.one])), I)
    with pytest.raises(RingError):
        quotient(I, Ideal(R3, []))


def test_saturate_example_with_exponent():
    sat, k = saturate(Ideal(R3, [X * X * Y]), Ideal(R3, [X]))
    assert ideal_equal(sat, Ideal(R3, [Y]))
    assert k == 2
    alt = saturate_principal(Ideal(R3, [X * X * Y]), X)
    assert ideal_equal(sat, alt)


def test_eliminate_parabola():
    ring = make_ring(["x"], ["u", "v"])
    I = Ideal(ring, [ring.parse("x - u"), ring.parse("x^2 - v")])
    out = eliminate(I, "geom")
    assert out.ring.names == ("u", "v")
    assert ideal_equal(out, Ideal(out.ring, [out.ring.parse("u^2 - v")]))


def test_eliminate_zero_ideal():
    out = eliminate(Ideal(R3, []), "geom")
    assert out.is_zero


def test_ideal_equal_examples():
    assert ideal_equal(Ideal(R3, [X, Y]), Ideal(R3, [X + Y, X - Y]))
    assert not ideal_equal(Ideal(R3, [X * X]), Ideal(R3, [X]))


def test_dimension_examples():
    rep = dimension(Ideal(R3, [X]))
    assert (rep.dim, rep.codim) == (2, 1)
    f = R3.parse("x^2*y^2 + x^2*z^2 + y^2*z^2")
    grad = Ideal(R3, [f.derivative(v) for v in ["x", "y", "z"]])
    rep2 = dimension(grad)
    assert (rep2.dim, rep2.codim) == (1, 2)
    zero = dimension(Ideal(R3, []))
    assert zero.dim == 3 and zero.codim == 0
    unit = dimension(Ideal(R3, [R3.one]))
    assert unit.empty and unit.codim_at_least(99)


def test_dimension_witness_is_independent():
    I = Ideal(R3, [X * Y, X * Z])
    rep = dimension(I)
    assert rep.dim == 2
    assert set(rep.witness) in ({"y", "z"},) or rep.witness == ("y", "z")


def test_dimension_order_independent():
    from symrees import GREVLEX, LEX
    fixtures = [
        Ideal(R3, [X * X - Y * Z, X * Y - Z * Z]),
        Ideal(R3, [R3.parse("x^2 - x*z"), R3.parse("y^2 - y*z")]),
        Ideal(R3, [R3.parse("x^3 - y"), R3.parse("z^2")]),
    ]
    for I in fixtures:
        assert dimension(I, GREVLEX).dim == dimension(I, LEX).dim


def test_minimal_homogeneous_generators():
    out = minimal_homogeneous_generators(Ideal(R3, [X * X, X ** 3]))
    assert [(g, d) for g, d in out] == [(X * X, 2)]
    with pytest.raises(RingError):
        minimal_homogeneous_generators(Ideal(R3, [X + X * X]))


def test_rees_of_regular_pair_has_single_linear_generator():
    ring = make_ring(["x", "y"])
    from symrees.blowup import pair_for_ideal, rees_ideal
    pair = pair_for_ideal(Ideal(ring, list(ring.gens())))
    rees = rees_ideal(pair)
    out = minimal_homogeneous_generators(rees, "fiber")
    assert len(out) == 1 and out[0][1] == 1


def test_quotient_chain_properties():
    rng = random.Random(7)
    for _ in range(20):
        gens = []
        for _ in range(rng.randint(1, 3)):
            m = tuple(rng.randint(0, 3) for _ in range(3))
            if any(m):
                gens.append(R3.monomial(m, 1))
        if not gens:
            continue
        I = Ideal(R3, gens)
        J = Ideal(R3, [X * Y])
        q = quotient(I, J)
        sat, _ = saturate(I, J)
        assert ideal_contains(q, I)          # I <= I:J
        assert ideal_contains(sat, q)        # I:J <= I:J^inf
        again = quotient(sat, J)
        assert ideal_equal(again, sat)       # (I:J^inf):J = I:J^inf


def test_monomial_oracle_agreement_quick():
    rng = random.Random(31)
    deg = 8
    for _ in range(15):
        arity = rng.randint(1, 3)
        ring = make_ring(["x", "y", "z"][:arity])
        A = [tuple(rng.randint(0, 3) for _ in range(arity)) for _ in range(2)]
        B = [tuple(rng.randint(0, 2) for _ in range(arity)) for _ in range(2)]
        A = [m for m in A if any(m)] or [(1,) * arity]
        B = [m for m in B if any(m)] or [(1,) * arity]
        IA = Ideal(ring, [ring.monomial(m, 1) for m in A])
        IB = Ideal(ring, [ring.monomial(m, 1) for m in B])
        got = intersect(IA, IB)
        lead = [g.leading()[0] for g in got.gens]
        assert monomial_members(lead, arity, deg) == \
            monomial_members(A, arity, deg) & monomial_members(B, arity, deg)
        gotq = quotient(IA, IB)
        leadq = [g.leading()[0] for g in gotq.gens]
        assert monomial_members(leadq, arity, deg) == \
            monomial_quotient(A, B, arity, deg)
        gots, _ = saturate(IA, IB)
        leads = [g.leading()[0] for g in gots.gens]
        assert monomial_members(leads, arity, deg) == \
            monomial_saturation(A, B, arity, deg)


def test_sum_requires_same_ring():
    other = make_ring(["x", "y"])
    with pytest.raises(RingError):
        ideal_sum(Ideal(R3, [X]), Ideal(other, [other.var("x")]))


def test_sum_concatenates_generators():
    out = ideal_sum(Ideal(R3, [X]), Ideal(R3, [Y, Z]))
    assert out.gens == (X, Y, Z)
