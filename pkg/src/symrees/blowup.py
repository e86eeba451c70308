"""Presentations of the symmetric, Rees and embedded Aluffi algebras of a
pair J inside I, with the derived invariants: Valabrega-Valla torsion pieces,
the linear-type test, Artin-Rees numbers, standard-base verification,
relation type, analytic spread and algebra dimension.

Conventions.  For I = (b_1..b_n) in R the fiber ring is R[T_1..T_n]; the Rees
ideal is the kernel of T_i -> b_i*u computed by eliminating u; the symmetric
ideal is generated by the linear forms attached to the syzygies of the b_i;
with certificates a = sum c_j b_j for each generator a of J, the companion
form a~ = sum c_j T_j lets the three algebras live in one ring:

    sym   = (syzygy forms) + (J, J~)        -- Sym_{R/J}(I/J)
    rees  = kernel of T_i -> b_i u          -- Rees_R(I)
    aluffi = rees + (J, J~)                 -- the embedded Aluffi algebra
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .groebner import (
    GroebnerBasis,
    buchberger_tracked,
    division,
    groebner,
    ideal_member,
    normal_form,
    radical_member,
)
from .ideal_ops import (
    DimensionReport,
    dimension,
    eliminate_vars,
    ideal_contains,
    ideal_equal,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    minimal_homogeneous_generators,
)
from .rings import Ideal, Polynomial, RingContext, RingError
from .syzygy import PolyMatrix, syzygies

DEFAULT_DEGREE_BOUND = 4


class CertificateError(ValueError):
    """A containment certificate does not reproduce its generator."""


def solve_certificate(a: Polynomial, i_gens: Sequence[Polynomial], *,
                      work_limit: int | None = None) -> list:
    """Coefficients c with a = sum c_j * i_gens[j], via tracked division."""
    ring = a.ring
    gb, A = buchberger_tracked(list(i_gens), work_limit=work_limit)
    nf, quots = division(a, gb, work_limit=work_limit)
    if not nf.is_zero:
        raise CertificateError(f"{a} is not in the ideal of the given generators")
    certs = []
    for j in range(len(i_gens)):
        acc = ring.zero
        for k in range(len(gb.elements)):
            acc = acc + quots[k] * A[k][j]
        certs.append(acc)
    return certs


@dataclass(frozen=True)
class PairInput:
    """A pair J <= I with explicit containment certificates for J's generators."""

    ring: RingContext
    i_gens: tuple
    j_gens: tuple
    certificates: tuple      # one coefficient row per J generator
    fiber_ring: RingContext = field(compare=False)
    fiber_names: tuple = field(compare=False)
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def i_ideal(self) -> Ideal:
        return Ideal(self.ring, self.i_gens)

    @property
    def j_ideal(self) -> Ideal:
        return Ideal(self.ring, self.j_gens)


def make_pair(ring: RingContext, i_gens: Sequence[Polynomial],
              j_gens: Sequence[Polynomial],
              certificates: Sequence[Sequence[Polynomial]] | None = None, *,
              work_limit: int | None = None) -> PairInput:
    """Validate J <= I, solving for certificates when they are not supplied."""
    i_gens = tuple(i_gens)
    j_gens = tuple(j_gens)
    if not i_gens or all(g.is_zero for g in i_gens):
        raise RingError("I must be nonzero")
    if certificates is None:
        certificates = tuple(
            tuple(solve_certificate(a, i_gens, work_limit=work_limit))
            for a in j_gens)
    else:
        certificates = tuple(tuple(row) for row in certificates)
    if len(certificates) != len(j_gens):
        raise CertificateError("one certificate row per J generator required")
    for a, row in zip(j_gens, certificates):
        if len(row) != len(i_gens):
            raise CertificateError("certificate arity mismatch")
        acc = ring.zero
        for c, b in zip(row, i_gens):
            acc = acc + c * b
        if acc != a:
            raise CertificateError(f"certificate does not reproduce {a}")
    fiber_names = tuple(_fiber_names(ring, len(i_gens)))
    fiber_ring = ring.extend(fiber_names, "fiber")
    return PairInput(ring, i_gens, j_gens, certificates, fiber_ring, fiber_names)


def _fiber_names(ring: RingContext, n: int) -> list:
    taken = set(ring.names)
    out = []
    stem = "T"
    while any(f"{stem}{i}" in taken for i in range(1, n + 1)):
        stem = stem + "_"
    for i in range(1, n + 1):
        out.append(f"{stem}{i}")
    return out


def pair_for_ideal(I: Ideal) -> PairInput:
    """Degenerate pair J = 0 <= I, for the operations that ignore J."""
    return make_pair(I.ring, list(I.gens), [])


# ---------------------------------------------------------------------------
# the three presentation ideals


def rees_ideal(pair: PairInput, *, work_limit: int | None = None) -> Ideal:
    """Kernel of R[T] -> R[I*u], T_i -> b_i*u, by eliminating u."""
    if "rees" not in pair._cache:
        ext = pair.fiber_ring
        (uname,) = ext.fresh_names("_u", 1)
        ext2 = ext.extend([uname], "aux")
        u = ext2.var(uname)
        gens = [ext2.var(t) - b.transport(ext2) * u
                for t, b in zip(pair.fiber_names, pair.i_gens)]
        elim = eliminate_vars(Ideal(ext2, gens), [uname], work_limit=work_limit)
        pair._cache["rees"] = elim.transport(ext)
    return pair._cache["rees"]


def sym_forms(pair: PairInput, *, work_limit: int | None = None) -> list:
    """Linear fiber forms sum_i phi[i][c] * T_i from the syzygies of the b_i."""
    if "symforms" not in pair._cache:
        ext = pair.fiber_ring
        phi = syzygies(list(pair.i_gens), work_limit=work_limit)
        forms = []
        tvars = [ext.var(t) for t in pair.fiber_names]
        for col in phi.columns():
            acc = ext.zero
            for coef, tv in zip(col, tvars):
                acc = acc + coef.transport(ext) * tv
            if not acc.is_zero:
                forms.append(acc)
        pair._cache["symforms"] = forms
    return pair._cache["symforms"]


def sym_ideal(pair: PairInput, *, work_limit: int | None = None) -> Ideal:
    """Presentation of Sym_R(I) on R[T]: the degree-one part of the Rees ideal."""
    return Ideal(pair.fiber_ring, sym_forms(pair, work_limit=work_limit))


def tilde_gens(pair: PairInput) -> list:
    """a~ = sum_j c_j T_j for each generator a of J."""
    ext = pair.fiber_ring
    tvars = [ext.var(t) for t in pair.fiber_names]
    out = []
    for row in pair.certificates:
        acc = ext.zero
        for c, tv in zip(row, tvars):
            acc = acc + c.transport(ext) * tv
        out.append(acc)
    return out


@dataclass(frozen=True)
class AluffiPresentation:
    """sym/rees/aluffi ideals on R[T] with the generator-to-fiber dictionary."""

    pair: PairInput
    ring: RingContext          # R[T]
    fiber_names: tuple
    sym_ideal: Ideal           # syzygy forms + (J, J~)
    rees_ideal: Ideal
    aluffi_ideal: Ideal        # rees + (J, J~)
    tilde_j: tuple


def aluffi_presentation(pair: PairInput, *,
                        work_limit: int | None = None) -> AluffiPresentation:
    ext = pair.fiber_ring
    rees = rees_ideal(pair, work_limit=work_limit)
    forms = sym_forms(pair, work_limit=work_limit)
    tildes = tilde_gens(pair)
    jlift = [a.transport(ext) for a in pair.j_gens]
    sym = Ideal(ext, forms + jlift + tildes)
    aluffi = Ideal(ext, list(rees.gens) + jlift + tildes)
    return AluffiPresentation(pair, ext, pair.fiber_names, sym, rees, aluffi,
                              tuple(tildes))


def relative_rees_ideal(pair: PairInput, *, work_limit: int | None = None) -> Ideal:
    """Presentation on R[T] of the Rees algebra of (I/J) over R/J."""
    if "relrees" not in pair._cache:
        ext = pair.fiber_ring
        (uname,) = ext.fresh_names("_u", 1)
        ext2 = ext.extend([uname], "aux")
        u = ext2.var(uname)
        gens = [a.transport(ext2) for a in pair.j_gens]
        gens += [ext2.var(t) - b.transport(ext2) * u
                 for t, b in zip(pair.fiber_names, pair.i_gens)]
        elim = eliminate_vars(Ideal(ext2, gens), [uname], work_limit=work_limit)
        pair._cache["relrees"] = elim.transport(ext)
    return pair._cache["relrees"]


def is_linear_type(pair: PairInput, *, work_limit: int | None = None) -> bool:
    """The syzygy forms generate the whole Rees ideal."""
    return ideal_equal(sym_ideal(pair, work_limit=work_limit),
                       rees_ideal(pair, work_limit=work_limit),
                       work_limit=work_limit)


# ---------------------------------------------------------------------------
# torsion (Valabrega-Valla) pieces


@dataclass(frozen=True)
class TorsionPiece:
    degree: int
    nonzero: bool
    witnesses: tuple             # generators of J cap I^t outside J*I^(t-1)
    internal_dims: tuple         # ((internal degree, dim), ...), may be empty
    annihilator_exponents: tuple  # per witness: least k <= bound with I^k*w inside J*I^(t-1)


@dataclass(frozen=True)
class TorsionReport:
    bound: int
    pieces: tuple                # TorsionPiece per degree 2..bound

    @property
    def all_zero(self) -> bool:
        return all(not p.nonzero for p in self.pieces)

    def piece(self, t: int) -> TorsionPiece:
        for p in self.pieces:
            if p.degree == t:
                return p
        raise KeyError(t)


def _powers(I: Ideal, up_to: int, cache: dict) -> dict:
    for t in range(up_to + 1):
        if ("power", t) not in cache:
            cache[("power", t)] = ideal_power(I, t)
    return {t: cache[("power", t)] for t in range(up_to + 1)}


def vv_pieces(pair: PairInput, bound: int = DEFAULT_DEGREE_BOUND, *,
              internal_cap: int | None = None,
              work_limit: int | None = None) -> TorsionReport:
    """The pieces (J cap I^t)/(J * I^(t-1)) for 2 <= t <= bound."""
    if bound < 2:
        raise RingError("torsion bound must be at least 2")
    I, J = pair.i_ideal, pair.j_ideal
    powers = _powers(I, bound, pair._cache)
    homog = all(g.is_homogeneous().homogeneous for g in list(I.gens) + list(J.gens))
    if internal_cap is None and homog:
        internal_cap = 2 * max(g.degree() for g in I.gens)
    pieces = []
    for t in range(2, bound + 1):
        meet = intersect(J, powers[t], work_limit=work_limit)
        lower = ideal_product(J, powers[t - 1])
        gb_lower = groebner(lower, work_limit=work_limit)
        witnesses = tuple(g for g in meet.gens
                          if not normal_form(g, gb_lower,
                                             work_limit=work_limit).is_zero)
        dims = ()
        if homog and internal_cap is not None:
            from .oracle import graded_piece_dimension
            rows = []
            for d in range(0, internal_cap + 1):
                hi = graded_piece_dimension(list(meet.gens), d)
                lo = graded_piece_dimension(list(lower.gens), d)
                if hi - lo:
                    rows.append((d, hi - lo))
            dims = tuple(rows)
        annos = []
        for w in witnesses:
            found = None
            for k in range(1, bound + 1):
                wk = ideal_product(powers[k], Ideal(pair.ring, [w]))
                if ideal_contains(lower, wk, work_limit=work_limit):
                    found = k
                    break
            annos.append(found)
        pieces.append(TorsionPiece(t, bool(witnesses), witnesses, dims,
                                   tuple(annos)))
    return TorsionReport(bound, tuple(pieces))


# ---------------------------------------------------------------------------
# Artin-Rees number and standard bases


def artin_rees_number(pair: PairInput, bound: int = DEFAULT_DEGREE_BOUND, *,
                      work_limit: int | None = None) -> int | None:
    """Least k <= bound with J cap I^t = (J cap I^k) I^(t-k) for k <= t <= bound."""
    if bound < 1:
        raise RingError("bound must be at least 1")
    I, J = pair.i_ideal, pair.j_ideal
    powers = _powers(I, bound, pair._cache)
    meets = {t: intersect(J, powers[t], work_limit=work_limit)
             for t in range(0, bound + 1)}
    for k in range(1, bound + 1):
        ok = True
        for t in range(k, bound + 1):
            rhs = ideal_product(meets[k], powers[t - k])
            if not ideal_equal(meets[t], rhs, work_limit=work_limit):
                ok = False
                break
        if ok:
            return k
    return None


@dataclass(frozen=True)
class StandardBaseReport:
    orders: tuple                # nu_i per J generator; bound+1 means ">= bound+1"
    per_degree: tuple            # (t, equality holds) for 1 <= t <= bound
    passed: bool


def standard_base_check(pair: PairInput, bound: int = DEFAULT_DEGREE_BOUND, *,
                        work_limit: int | None = None) -> StandardBaseReport:
    """Test J cap I^t = sum_i a_i I^(t - nu_i) with nu_i the I-order of a_i."""
    if bound < 1:
        raise RingError("bound must be at least 1")
    I, J = pair.i_ideal, pair.j_ideal
    powers = _powers(I, bound + 1, pair._cache)
    gbs = {t: groebner(powers[t], work_limit=work_limit)
           for t in range(0, bound + 2)}
    orders = []
    for a in pair.j_gens:
        nu = 0
        for t in range(1, bound + 2):
            if normal_form(a, gbs[t], work_limit=work_limit).is_zero:
                nu = t
            else:
                break
        orders.append(nu)
    rows = []
    passed = True
    for t in range(1, bound + 1):
        meet = intersect(J, powers[t], work_limit=work_limit)
        gens = []
        for a, nu in zip(pair.j_gens, orders):
            power = powers[max(t - nu, 0)]
            gens.extend(a * g for g in power.gens)
        rhs = Ideal(pair.ring, gens)
        eq = ideal_equal(meet, rhs, work_limit=work_limit)
        rows.append((t, eq))
        passed = passed and eq
    return StandardBaseReport(tuple(orders), tuple(rows), passed)


# ---------------------------------------------------------------------------
# relation type, analytic spread, dimension


def relation_type(source, bound: int = 10, *,
                  work_limit: int | None = None) -> int | None:
    """Largest fiber degree among minimal homogeneous Rees-ideal generators."""
    pair = source if isinstance(source, PairInput) else pair_for_ideal(source)
    rees = rees_ideal(pair, work_limit=work_limit)
    if rees.is_zero:
        return 0
    mingens = minimal_homogeneous_generators(rees, "fiber",
                                             work_limit=work_limit)
    rt = max(d for _, d in mingens)
    return rt if rt <= bound else None


def analytic_spread(I: Ideal, *, work_limit: int | None = None) -> int:
    """dim of the special fiber Rees(I)/(variables)Rees(I)."""
    for g in I.gens:
        if g.constant_term() != 0:
            raise RingError("analytic spread needs I inside the irrelevant ideal")
    pair = pair_for_ideal(I)
    rees = rees_ideal(pair, work_limit=work_limit)
    base_names = list(I.ring.names)
    ext = pair.fiber_ring
    gens = list(rees.gens) + [ext.var(n) for n in base_names]
    fiber = eliminate_vars(Ideal(ext, gens), base_names, work_limit=work_limit)
    return dimension(fiber, work_limit=work_limit).dim


def aluffi_dimension(pres: AluffiPresentation, *,
                     work_limit: int | None = None) -> DimensionReport:
    return dimension(pres.aluffi_ideal, work_limit=work_limit)


# ---------------------------------------------------------------------------
# candidate component verification


@dataclass(frozen=True)
class ComponentRow:
    candidate: Ideal
    contains_presentation: bool
    dim: DimensionReport


@dataclass(frozen=True)
class ComponentReport:
    rows: tuple
    radical_forward: bool    # every presentation generator in rad(cap candidates)
    radical_backward: bool   # every generator of cap candidates in rad(presentation)
    covers: bool             # both radical checks passed

    @property
    def all_contain(self) -> bool:
        return all(r.contains_presentation for r in self.rows)


def verify_component_list(pres: AluffiPresentation,
                          candidates: Sequence[Ideal], *,
                          work_limit: int | None = None) -> ComponentReport:
    """Containment and dimension checks for a claimed minimal-prime list.

    Completeness of the list is only asserted when the radical comparison of
    the intersection against the presentation ideal passes in both directions.
    """
    rows = []
    for P in candidates:
        contains = ideal_contains(P, pres.aluffi_ideal, work_limit=work_limit)
        rows.append(ComponentRow(P, contains, dimension(P, work_limit=work_limit)))
    meet = None
    for P in candidates:
        meet = P if meet is None else intersect(meet, P, work_limit=work_limit)
    if meet is None:
        return ComponentReport((), False, False, False)
    forward = all(radical_member(g, meet, work_limit=work_limit)
                  for g in pres.aluffi_ideal.gens)
    backward = all(radical_member(g, pres.aluffi_ideal, work_limit=work_limit)
                   for g in meet.gens)
    return ComponentReport(tuple(rows), forward, backward, forward and backward)
