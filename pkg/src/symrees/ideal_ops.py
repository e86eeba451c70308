"""Ideal calculus: sum/product/power, intersection, quotient, saturation,
elimination, equality, Krull dimension and graded minimal generators.

Intersections are computed by eliminating a tag variable w from w*I + (1-w)*J;
everything else reduces to that plus Groebner normal forms.  Dimension comes
from maximal independent variable sets modulo the initial ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .groebner import (
    GroebnerBasis,
    buchberger,
    groebner,
    ideal_member,
    normal_form,
    reduce_generators,
)
from .rings import GREVLEX, Ideal, MonomialOrder, Polynomial, RingContext, RingError


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, list(I.gens) + list(J.gens))


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    gens = [g * h for g in I.gens for h in J.gens]
    return Ideal(I.ring, gens)


def ideal_power(I: Ideal, t: int) -> Ideal:
    if t < 0:
        raise RingError("negative ideal power")
    if t == 0:
        return Ideal(I.ring, [I.ring.one])
    # combinations_with_replacement keeps the generator count at C(n+t-1, t)
    from itertools import combinations_with_replacement
    gens = []
    for combo in combinations_with_replacement(I.gens, t):
        p = I.ring.one
        for g in combo:
            p = p * g
        gens.append(p)
    return Ideal(I.ring, gens)


def _same_ring(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise RingError("ideals live in different rings")


def _tag_ring(ring: RingContext):
    (w,) = ring.fresh_names("_w", 1)
    ext = ring.extend([w], "aux")
    widx = ext.index(w)
    order = ext.elim_order_vars([widx])
    return ext, ext.var(w), widx, order


def intersect(I: Ideal, J: Ideal, *, work_limit: int | None = None) -> Ideal:
    """I ∩ J via the tag-variable elimination  w*I + (1-w)*J."""
    _same_ring(I, J)
    if I.is_zero or J.is_zero:
        return Ideal(I.ring, [])
    ext, w, widx, order = _tag_ring(I.ring)
    gens = [w * g.transport(ext) for g in I.gens]
    omw = ext.one - w
    gens += [omw * g.transport(ext) for g in J.gens]
    gb = buchberger(Ideal(ext, gens), order, work_limit=work_limit)
    out = [g.transport(I.ring) for g in gb if not any(m[widx] for m in g.terms)]
    return Ideal(I.ring, out)


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g when g divides f exactly."""
    if g.is_zero:
        raise RingError("division by zero polynomial")
    if f.is_zero:
        return f
    from .groebner import division
    gb = buchberger(Ideal(f.ring, [g]))
    nf, quots = division(f, gb)
    if not nf.is_zero:
        raise RingError("not an exact division")
    # the basis element is g made monic, so undo the scaling
    return quots[0] * (1 / g.leading()[1])


def quotient(I: Ideal, J: Ideal, *, work_limit: int | None = None) -> Ideal:
    """I : J, as the intersection over generators of J of (I : g)."""
    _same_ring(I, J)
    if J.is_zero:
        raise RingError("colon by the zero ideal")
    result = None
    for g in J.gens:
        Qg = _colon_single(I, g, work_limit=work_limit)
        result = Qg if result is None else intersect(result, Qg,
                                                     work_limit=work_limit)
        if result.is_zero:
            break
    return result


def _colon_single(I: Ideal, g: Polynomial, *, work_limit: int | None = None) -> Ideal:
    """I : (g)  =  (I ∩ (g)) / g."""
    if I.is_zero:
        return I
    meet = intersect(I, Ideal(I.ring, [g]), work_limit=work_limit)
    return Ideal(I.ring, [exact_divide(h, g) for h in meet.gens])


def saturate(I: Ideal, J: Ideal, *, work_limit: int | None = None,
             max_steps: int = 64):
    """(I : J^infinity, k) with k the least exponent where the chain stops."""
    _same_ring(I, J)
    if J.is_zero:
        raise RingError("saturation by the zero ideal")
    prev = I
    for k in range(max_steps):
        nxt = quotient(prev, J, work_limit=work_limit)
        if ideal_equal(nxt, prev, work_limit=work_limit):
            return prev, k
        prev = nxt
    raise RingError("saturation did not stabilize within the step bound")


def saturate_principal(I: Ideal, g: Polynomial, *,
                       work_limit: int | None = None) -> Ideal:
    """I : g^infinity by eliminating t from (I, 1 - t*g)."""
    if g.is_zero:
        raise RingError("saturation by zero")
    ring = I.ring
    (t,) = ring.fresh_names("_t", 1)
    ext = ring.extend([t], "aux")
    tidx = ext.index(t)
    order = ext.elim_order_vars([tidx])
    gens = [h.transport(ext) for h in I.gens]
    gens.append(ext.one - ext.var(t) * g.transport(ext))
    gb = buchberger(Ideal(ext, gens), order, work_limit=work_limit)
    out = [h.transport(ring) for h in gb if not any(m[tidx] for m in h.terms)]
    return Ideal(ring, out)


def eliminate(I: Ideal, block: str, *, work_limit: int | None = None) -> Ideal:
    """I ∩ k[remaining variables], returned in the subring."""
    ring = I.ring
    gone = set(ring.block_indices(block))
    target = ring.drop_block(block)
    if I.is_zero:
        return Ideal(target, [])
    order = ring.elim_order(block)
    gb = buchberger(I, order, work_limit=work_limit)
    out = [g.transport(target) for g in gb
           if not any(m[i] for m in g.terms for i in gone)]
    return Ideal(target, out)


def eliminate_vars(I: Ideal, names: Sequence[str], *,
                   work_limit: int | None = None) -> Ideal:
    """Like eliminate, for an explicit variable list (possibly across blocks)."""
    ring = I.ring
    gone = [ring.index(n) for n in names]
    keep = [i for i in range(ring.arity) if i not in set(gone)]
    target = ring.subring(keep)
    if I.is_zero:
        return Ideal(target, [])
    order = ring.elim_order_vars(gone)
    gb = buchberger(I, order, work_limit=work_limit)
    out = [g.transport(target) for g in gb
           if not any(m[i] for m in g.terms for i in gone)]
    return Ideal(target, out)


def ideal_contains(I: Ideal, J: Ideal, *, work_limit: int | None = None) -> bool:
    """J ⊆ I, by membership of every generator."""
    _same_ring(I, J)
    gb = groebner(I, work_limit=work_limit)
    return all(normal_form(g, gb, work_limit=work_limit).is_zero for g in J.gens)


def ideal_equal(I: Ideal, J: Ideal, *, work_limit: int | None = None) -> bool:
    _same_ring(I, J)
    return (ideal_contains(I, J, work_limit=work_limit)
            and ideal_contains(J, I, work_limit=work_limit))


# ---------------------------------------------------------------------------
# dimension


@dataclass(frozen=True)
class DimensionReport:
    """Krull dimension data for ring/I; empty marks the unit ideal distinctly."""

    dim: int
    codim: int
    witness: tuple
    empty: bool = False

    def codim_at_least(self, c: int) -> bool:
        return True if self.empty else self.codim >= c


def dimension(I: Ideal, order: MonomialOrder | None = None, *,
              work_limit: int | None = None) -> DimensionReport:
    """dim ring/I as the largest variable set independent modulo in(I)."""
    ring = I.ring
    n = ring.arity
    if I.is_zero:
        return DimensionReport(n, 0, tuple(ring.names))
    gb = groebner(I, order, work_limit=work_limit)
    if gb.is_unit_ideal:
        return DimensionReport(-1, n + 1, (), empty=True)
    supports = []
    for m in gb.leading_monomials():
        supports.append(frozenset(i for i, e in enumerate(m) if e))
    supports = set(supports)
    # S independent  <=>  no initial-ideal generator has support inside S
    for size in range(n, -1, -1):
        for combo in combinations(range(n), size):
            S = set(combo)
            if not any(sup <= S for sup in supports):
                witness = tuple(ring.names[i] for i in combo)
                return DimensionReport(size, n - size, witness)
    raise AssertionError("unreachable: empty set is always independent")


# ---------------------------------------------------------------------------
# graded minimal generators


def block_degree(p: Polynomial, block: str | None) -> int:
    rep = p.is_homogeneous(block)
    if rep.is_zero:
        raise RingError("zero polynomial has no degree")
    if not rep.homogeneous:
        raise RingError("polynomial is not homogeneous for the chosen grading")
    return rep.degree


def minimal_homogeneous_generators(I: Ideal, block: str | None = None, *,
                                   work_limit: int | None = None) -> list:
    """Minimal homogeneous generating set as (polynomial, degree), degrees ascending.

    Built degree by degree: a candidate is kept iff it is not in the ideal
    generated by everything kept so far.
    """
    if I.is_zero:
        return []
    graded = sorted(((block_degree(g, block), g) for g in I.gens),
                    key=lambda dg: dg[0])
    kept: list = []
    for d, g in graded:
        if kept:
            if ideal_member(g, Ideal(I.ring, [p for _, p in kept]),
                            work_limit=work_limit):
                continue
        kept.append((d, g))
    return [(g, d) for d, g in kept]


def interreduce(I: Ideal, order: MonomialOrder | None = None) -> Ideal:
    """Cheap single-pass interreduction of the generator list."""
    return Ideal(I.ring, reduce_generators(list(I.gens), order))
