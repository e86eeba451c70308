"""Buchberger engine: reduced Groebner bases, normal forms, membership.

The hot path works on integer-primitive polynomials (dict monomial -> int,
content 1) with fraction-free reduction: to cancel a term we cross-multiply by
leading coefficients instead of dividing, tracking the accumulated multiplier,
and convert back to exact rational results at the end.  Pair handling follows
the classic GROEBNERNEWS2 layout with the Gebauer-Moeller criteria and the
normal (minimal lcm) selection strategy, with deterministic tie-breaks so a
basis is reproducible and unique for (ideal, order).

Optionally every basis element tracks its representation in terms of the input
generators; this feeds containment certificates and syzygy extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .rings import GREVLEX, Ideal, Monom, MonomialOrder, Polynomial, RingContext, RingError

DEFAULT_WORK_LIMIT = 10 ** 6


def set_default_work_limit(limit: int | None):
    """Override the default work budget (None restores the shipped default)."""
    global DEFAULT_WORK_LIMIT
    DEFAULT_WORK_LIMIT = limit if limit is not None else 10 ** 6


class WorkLimitExceeded(RuntimeError):
    """The configured work budget ran out before the computation finished."""


class _KeyCache(dict):
    __slots__ = ("f",)

    def __init__(self, f):
        super().__init__()
        self.f = f

    def __missing__(self, m):
        v = self.f(m)
        self[m] = v
        return v


def _mono_lcm(a: Monom, b: Monom) -> Monom:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _mono_mul(a: Monom, b: Monom) -> Monom:
    return tuple(x + y for x, y in zip(a, b))


def _divides(a: Monom, b: Monom) -> bool:
    """a | b componentwise."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _content(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            return 1
    return g or 1


def _dict_scale(d: dict, c: int):
    if c != 1:
        for k in d:
            d[k] *= c


def _to_int_poly(p: Polynomial) -> tuple:
    """(int dict, scale) with p == scale * dict and dict content-1."""
    if p.is_zero:
        return {}, Fraction(1)
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    ints = {m: int(c * den) for m, c in p.terms.items()}
    g = _content(ints.values())
    if g > 1:
        ints = {m: v // g for m, v in ints.items()}
    return ints, Fraction(g, den)


def _from_int_poly(ring: RingContext, d: dict, scale: Fraction) -> Polynomial:
    return Polynomial(ring, {m: scale * v for m, v in d.items() if v})


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit):
        self.left = limit

    def spend(self, n=1):
        self.left -= n
        if self.left < 0:
            raise WorkLimitExceeded("work limit exceeded; raise --work-limit")


class _Rec:
    """Engine record: integer-primitive polynomial plus optional tracking."""

    __slots__ = ("terms", "lm", "lc", "tail", "rep")

    def __init__(self, terms: dict, key, rep=None):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]
        self.tail = [(m, c) for m, c in terms.items() if m != self.lm]
        self.rep = rep

    def frozen(self):
        return frozenset(self.terms.items())


def _scale_rep(rep, c):
    if rep is not None:
        for d in rep.values():
            _dict_scale(d, c)


def _axpy(dst: dict, c: int, q: Monom, src) -> None:
    """dst += c * x^q * src   (src: iterable of (monom, coeff))."""
    for m, v in src:
        mm = _mono_mul(q, m)
        s = dst.get(mm, 0) + c * v
        if s:
            dst[mm] = s
        else:
            del dst[mm]


def _rep_axpy(rep, c, q, src_rep):
    if rep is None or src_rep is None:
        return
    for j, d in src_rep.items():
        tgt = rep.setdefault(j, {})
        _axpy(tgt, c, q, d.items())
        if not tgt:
            del rep[j]


def _reduce_full(terms: dict, reducers: Sequence[_Rec], key, budget,
                 rep=None, quotients=None) -> tuple:
    """Full normal form; returns (remainder, multiplier).

    Fraction-free: on exit  multiplier * input == remainder
                            + sum(quotients[i] * reducers[i])
    with the representation payload scaled consistently when tracking.
    """
    p = dict(terms)
    r: dict = {}
    mult = 1
    while p:
        m = max(p, key=key)
        c = p.pop(m)
        hit = None
        for idx, g in enumerate(reducers):
            if _divides(g.lm, m):
                hit = (idx, g)
                break
        if hit is None:
            r[m] = c
            continue
        budget.spend()
        idx, g = hit
        d = gcd(c, g.lc)
        cr = c // d
        lcr = g.lc // d
        if lcr < 0:
            cr, lcr = -cr, -lcr
        if lcr != 1:
            _dict_scale(p, lcr)
            _dict_scale(r, lcr)
            _scale_rep(rep, lcr)
            if quotients is not None:
                for qd in quotients.values():
                    _dict_scale(qd, lcr)
            mult *= lcr
        q = tuple(a - b for a, b in zip(m, g.lm))
        _axpy(p, -cr, q, g.tail)
        _rep_axpy(rep, -cr, q, g.rep)
        if quotients is not None:
            qd = quotients.setdefault(idx, {})
            s = qd.get(q, 0) + cr
            if s:
                qd[q] = s
            else:
                del qd[q]
    return r, mult


def _spoly(gi: _Rec, gj: _Rec, key, track: bool):
    lcm = _mono_lcm(gi.lm, gj.lm)
    qi = tuple(a - b for a, b in zip(lcm, gi.lm))
    qj = tuple(a - b for a, b in zip(lcm, gj.lm))
    d = gcd(gi.lc, gj.lc)
    ci = gj.lc // d
    cj = gi.lc // d
    out: dict = {}
    _axpy(out, ci, qi, gi.terms.items())
    _axpy(out, -cj, qj, gj.terms.items())
    rep = None
    if track:
        rep = {}
        _rep_axpy(rep, ci, qi, gi.rep)
        _rep_axpy(rep, -cj, qj, gj.rep)
    return out, rep


def _strip(terms: dict, rep, key):
    """Content-1, positive leading coefficient; rep stripped jointly."""
    if not terms:
        return terms, rep
    vals = list(terms.values())
    if rep is not None:
        for d in rep.values():
            vals.extend(d.values())
    g = _content(vals)
    if terms[max(terms, key=key)] < 0:
        g = -g
    if g != 1:
        for m in list(terms):
            terms[m] //= g
        if rep is not None:
            for d in rep.values():
                for m in list(d):
                    d[m] //= g
    return terms, rep


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic elements, descending by leading monomial."""

    ring: RingContext
    order: MonomialOrder
    elements: tuple
    reduced: bool = True

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    @property
    def is_unit_ideal(self) -> bool:
        return len(self.elements) == 1 and self.elements[0] == self.ring.one

    def leading_monomials(self) -> list:
        return [g.leading(self.order)[0] for g in self.elements]


def _run_buchberger(gens, ring, order, work_limit, track):
    key = _KeyCache(order.key_func(ring.arity)).__getitem__
    budget = _Budget(work_limit if work_limit is not None else DEFAULT_WORK_LIMIT)

    seeds = []
    scales = []
    for j, g in enumerate(gens):
        ints, scale = _to_int_poly(g)
        scales.append(scale)
        if ints:
            rep = {j: {(0,) * ring.arity: 1}} if track else None
            seeds.append((ints, rep))

    if not seeds:
        return [], scales

    # interreduce the seeds until stable
    work = seeds
    while True:
        recs = []
        nxt = []
        changed = False
        for terms, rep in work:
            r, _ = _reduce_full(terms, recs, key, budget,
                                rep=rep if track else None)
            if r != terms:
                changed = True
            if r:
                r, rep = _strip(r, rep, key)
                recs.append(_Rec(r, key, rep))
                nxt.append((r, rep))
        work = nxt
        if not changed:
            break

    f = [_Rec(t, key, rep) for t, rep in work]
    index_of = {rec.frozen(): i for i, rec in enumerate(f)}

    def normal(h_terms, h_rep, J):
        reducers = [f[j] for j in J]
        r, _ = _reduce_full(h_terms, reducers, key, budget, rep=h_rep)
        if not r:
            return None
        r, h_rep = _strip(r, h_rep, key)
        rec = _Rec(r, key, h_rep)
        fz = rec.frozen()
        if fz not in index_of:
            index_of[fz] = len(f)
            f.append(rec)
        return index_of[fz]

    def update(G, B, ih):
        # Gebauer-Moeller pair filtering
        mh = f[ih].lm
        C = set(G)
        D = set()
        while C:
            ig = C.pop()
            mg = f[ig].lm
            lcm_hg = _mono_lcm(mh, mg)

            def lcm_divides(ip):
                return _divides(_mono_lcm(mh, f[ip].lm), lcm_hg)

            if _mono_mul(mh, mg) == lcm_hg or (
                    not any(lcm_divides(ipx) for ipx in C)
                    and not any(lcm_divides(pr[1]) for pr in D)):
                D.add((ih, ig))
        E = set()
        while D:
            ih0, ig = D.pop()
            if _mono_mul(mh, f[ig].lm) != _mono_lcm(mh, f[ig].lm):
                E.add((ih0, ig))
        B_new = set()
        while B:
            ig1, ig2 = B.pop()
            lcm12 = _mono_lcm(f[ig1].lm, f[ig2].lm)
            if (not _divides(mh, lcm12)
                    or _mono_lcm(f[ig1].lm, mh) == lcm12
                    or _mono_lcm(f[ig2].lm, mh) == lcm12):
                B_new.add((ig1, ig2))
        B_new |= E
        G_new = {ig for ig in G if not _divides(mh, f[ig].lm)}
        G_new.add(ih)
        return G_new, B_new

    G: set = set()
    CP: set = set()
    for i in sorted(range(len(f)), key=lambda i: key(f[i].lm)):
        G, CP = update(G, CP, i)

    while CP:
        budget.spend()
        ig1, ig2 = min(CP, key=lambda pr: (key(_mono_lcm(f[pr[0]].lm, f[pr[1]].lm)),
                                           pr[0], pr[1]))
        CP.remove((ig1, ig2))
        s_terms, s_rep = _spoly(f[ig1], f[ig2], key, track)
        if not s_terms:
            continue
        J = sorted(G, key=lambda j: key(f[j].lm))
        iht = normal(s_terms, s_rep, J)
        if iht is not None:
            G, CP = update(G, CP, iht)

    # minimalize leading terms, then tail-reduce for the reduced basis
    order_G = sorted(G, key=lambda j: key(f[j].lm))
    minimal = []
    for ig in order_G:
        if not any(_divides(f[jg].lm, f[ig].lm) for jg in minimal):
            minimal.append(ig)
    final = []
    for ig in minimal:
        others = [f[jg] for jg in minimal if jg != ig]
        rep = {j: dict(d) for j, d in f[ig].rep.items()} if track else None
        r, _ = _reduce_full(f[ig].terms, others, key, budget, rep=rep)
        r, rep = _strip(r, rep, key)
        final.append(_Rec(r, key, rep))
    final.sort(key=lambda rec: key(rec.lm), reverse=True)
    return final, scales


def buchberger(source, order: MonomialOrder | None = None, *,
               work_limit: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of an Ideal or a generator list."""
    gens, ring = _as_gens(source)
    order = order or ring.order
    final, _ = _run_buchberger(gens, ring, order, work_limit, track=False)
    elems = tuple(_from_int_poly(ring, rec.terms, Fraction(1, rec.lc)) for rec in final)
    return GroebnerBasis(ring, order, elems)


def buchberger_tracked(source, order: MonomialOrder | None = None, *,
                       work_limit: int | None = None):
    """(GroebnerBasis, A) with A[k][j] satisfying  basis[k] == sum_j A[k][j]*gens[j]."""
    gens, ring = _as_gens(source)
    order = order or ring.order
    final, scales = _run_buchberger(gens, ring, order, work_limit, track=True)
    elems = []
    A = []
    for rec in final:
        lc = Fraction(rec.lc)
        elems.append(_from_int_poly(ring, rec.terms, 1 / lc))
        row = []
        for j in range(len(gens)):
            d = rec.rep.get(j, {}) if rec.rep else {}
            row.append(_from_int_poly(ring, d, scales[j] / lc) if d else ring.zero)
        A.append(row)
    return GroebnerBasis(ring, order, tuple(elems)), A


def _as_gens(source):
    if isinstance(source, Ideal):
        return list(source.gens), source.ring
    gens = list(source)
    if not gens:
        raise RingError("cannot infer ring from an empty generator list")
    return gens, gens[0].ring


def groebner(I: Ideal, order: MonomialOrder | None = None, *,
             work_limit: int | None = None) -> GroebnerBasis:
    """buchberger with a per-Ideal cache keyed by the order."""
    order = order or I.ring.order
    cached = I._gb_cache.get(order)
    if cached is None:
        cached = buchberger(I, order, work_limit=work_limit)
        I._gb_cache[order] = cached
    return cached


def normal_form(p: Polynomial, G: GroebnerBasis, *,
                work_limit: int | None = None) -> Polynomial:
    """Remainder of p on full division by G; linear in p, idempotent."""
    if p.ring != G.ring:
        raise RingError("ring mismatch")
    if p.is_zero or not G.elements:
        return p
    key = _KeyCache(G.order.key_func(G.ring.arity)).__getitem__
    budget = _Budget(work_limit if work_limit is not None else DEFAULT_WORK_LIMIT)
    ints, scale = _to_int_poly(p)
    recs = [_Rec(_to_int_poly(g)[0], key) for g in G.elements]
    r, mult = _reduce_full(ints, recs, key, budget)
    return _from_int_poly(G.ring, r, scale / mult)


def division(p: Polynomial, G: GroebnerBasis, *,
             work_limit: int | None = None):
    """(normal form, quotients aligned with G.elements):  p = sum q_i g_i + nf."""
    if p.ring != G.ring:
        raise RingError("ring mismatch")
    if p.is_zero or not G.elements:
        return p, [G.ring.zero] * len(G.elements)
    key = _KeyCache(G.order.key_func(G.ring.arity)).__getitem__
    budget = _Budget(work_limit if work_limit is not None else DEFAULT_WORK_LIMIT)
    ints, scale = _to_int_poly(p)
    int_recs = []
    rec_scales = []
    for g in G.elements:
        d, s = _to_int_poly(g)
        int_recs.append(_Rec(d, key))
        rec_scales.append(s)
    quots: dict = {}
    r, mult = _reduce_full(ints, int_recs, key, budget, quotients=quots)
    nf = _from_int_poly(G.ring, r, scale / mult)
    out = []
    for i in range(len(G.elements)):
        d = quots.get(i, {})
        out.append(_from_int_poly(G.ring, d, scale / (mult * rec_scales[i]))
                   if d else G.ring.zero)
    return nf, out


def ideal_member(p: Polynomial, source, *, work_limit: int | None = None) -> bool:
    """p in the ideal, decided by a zero normal form."""
    if isinstance(source, GroebnerBasis):
        gb = source
    else:
        gb = groebner(source if isinstance(source, Ideal)
                      else Ideal(p.ring, list(source)), work_limit=work_limit)
    return normal_form(p, gb, work_limit=work_limit).is_zero


def radical_member(p: Polynomial, I: Ideal, *, work_limit: int | None = None) -> bool:
    """Rabinowitsch test: 1 in (I, 1 - t*p) over a fresh auxiliary variable."""
    if p.ring != I.ring:
        raise RingError("ring mismatch")
    if p.is_zero:
        return ideal_member(p, I, work_limit=work_limit)
    ring = I.ring
    (tname,) = ring.fresh_names("_rab", 1)
    ext = ring.extend([tname], "aux")
    t = ext.var(tname)
    gens = [g.transport(ext) for g in I.gens]
    gens.append(ext.one - t * p.transport(ext))
    gb = buchberger(Ideal(ext, gens), GREVLEX, work_limit=work_limit)
    return gb.is_unit_ideal


def reduce_generators(gens: Sequence[Polynomial],
                      order: MonomialOrder | None = None, *,
                      work_limit: int | None = None) -> list:
    """One interreduction pass; returns a smaller generating set of the same ideal."""
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return []
    ring = gens[0].ring
    order = order or ring.order
    key = _KeyCache(order.key_func(ring.arity)).__getitem__
    budget = _Budget(work_limit if work_limit is not None else DEFAULT_WORK_LIMIT)
    ints = []
    for g in gens:
        d, _ = _to_int_poly(g)
        ints.append(d)
    ints.sort(key=lambda d: key(max(d, key=key)))
    recs: list = []
    for d in ints:
        r, _ = _reduce_full(d, recs, key, budget)
        if r:
            r, _ = _strip(r, None, key)
            recs.append(_Rec(r, key))
    return [_from_int_poly(ring, rec.terms, Fraction(1, rec.lc)) for rec in recs]
