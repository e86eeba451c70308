"""First syzygies, polynomial matrices, minors and Jacobians.

Syzygies of (g_1..g_m) come from a tracked Groebner run: with G = F*A and
F = G*B (division), the kernel of F is generated by the rows of B*A - Id
together with the pullbacks A^t * s of the S-pair syzygies s of G, one for
every pair of basis elements.  Columns are content-normalized and deduplicated
but not minimalized; the entry ideal I_1 is independent of that choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .groebner import buchberger_tracked, division
from .rings import Ideal, Polynomial, RingContext, RingError


@dataclass(frozen=True)
class PolyMatrix:
    """Immutable matrix of polynomials in a common ring."""

    ring: RingContext
    rows: int
    cols: int
    entries: tuple  # row-major tuple of tuples

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols
                                                 for r in self.entries):
            raise RingError("matrix shape mismatch")
        for row in self.entries:
            for e in row:
                if e.ring != self.ring:
                    raise RingError("matrix entry in the wrong ring")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> list:
        return [self.entries[i][j] for i in range(self.rows)]

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "PolyMatrix":
        ent = tuple(tuple(self.entries[i][j] for i in range(self.rows))
                    for j in range(self.cols))
        return PolyMatrix(self.ring, self.cols, self.rows, ent)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]"
                         for row in self.entries)


def matrix_from_columns(ring: RingContext, columns: Sequence[Sequence[Polynomial]]) -> PolyMatrix:
    if not columns:
        return PolyMatrix(ring, 0, 0, ())
    rows = len(columns[0])
    ent = tuple(tuple(col[i] for col in columns) for i in range(rows))
    return PolyMatrix(ring, rows, len(columns), ent)


def jacobian(gens: Sequence[Polynomial], var_names: Sequence[str] | None = None,
             block: str = "geom") -> PolyMatrix:
    """Rows indexed by variables, columns by generators."""
    if not gens:
        raise RingError("empty generator list")
    ring = gens[0].ring
    if var_names is None:
        var_names = [ring.names[i] for i in ring.block_indices(block)]
    ent = tuple(tuple(g.derivative(v) for g in gens) for v in var_names)
    return PolyMatrix(ring, len(var_names), len(gens), ent)


def hessian(f: Polynomial, var_names: Sequence[str] | None = None,
            block: str = "geom") -> PolyMatrix:
    ring = f.ring
    if var_names is None:
        var_names = [ring.names[i] for i in ring.block_indices(block)]
    ent = tuple(tuple(f.derivative(v).derivative(w) for w in var_names)
                for v in var_names)
    return PolyMatrix(ring, len(var_names), len(var_names), ent)


def _det(ring, rows):
    """Cofactor determinant of a small square list-of-lists."""
    n = len(rows)
    if n == 0:
        return ring.one
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = ring.zero
    rest = rows[1:]
    for j in range(n):
        minor_rows = [[r[k] for k in range(n) if k != j] for r in rest]
        term = rows[0][j] * _det(ring, minor_rows)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def minors(M: PolyMatrix, r: int) -> Ideal:
    """Ideal of all r x r minors; I_1 is the ideal of entries."""
    if r < 1 or r > min(M.rows, M.cols):
        raise RingError(f"minor size {r} out of range for {M.rows}x{M.cols}")
    gens = []
    for rows in combinations(range(M.rows), r):
        for cols in combinations(range(M.cols), r):
            sub = [[M.entries[i][j] for j in cols] for i in rows]
            gens.append(_det(M.ring, sub))
    return Ideal(M.ring, gens)


def entry_ideal(M: PolyMatrix) -> Ideal:
    return Ideal(M.ring, [e for row in M.entries for e in row])


def _normalize_column(col):
    """Divide a column by the gcd-content of all its coefficients."""
    from math import gcd
    num, den = 0, 1
    for p in col:
        for c in p.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
    if num == 0:
        return list(col)
    cont = Fraction(num, den)
    lead = next(p for p in col if not p.is_zero)
    if lead.leading()[1] < 0:
        cont = -cont
    return [p * (1 / cont) for p in col]


def syzygies(gens: Sequence[Polynomial], *, work_limit: int | None = None) -> PolyMatrix:
    """Matrix whose columns generate the first syzygy module of `gens`."""
    gens = list(gens)
    if not gens:
        raise RingError("empty generator list")
    ring = gens[0].ring
    m = len(gens)
    zero = ring.zero

    nonzero_idx = [j for j, g in enumerate(gens) if not g.is_zero]
    if not nonzero_idx:
        # everything is zero: unit vectors are syzygies
        cols = [[ring.one if i == j else zero for i in range(m)] for j in range(m)]
        return matrix_from_columns(ring, cols)

    live = [gens[j] for j in nonzero_idx]
    gb, A = buchberger_tracked(live, work_limit=work_limit)
    s = len(gb.elements)

    # F = G*B via division of each generator by the basis
    B = []
    for g in live:
        nf, quots = division(g, gb, work_limit=work_limit)
        if not nf.is_zero:
            raise AssertionError("generator did not reduce to zero against its basis")
        B.append(quots)

    raw_cols = []

    # rows of B*A - Id are syzygies of the generators
    for i in range(len(live)):
        row = []
        for j in range(len(live)):
            acc = zero
            for k in range(s):
                acc = acc + B[i][k] * A[k][j]
            if i == j:
                acc = acc - ring.one
            row.append(acc)
        if any(not p.is_zero for p in row):
            raw_cols.append(row)

    # Schreyer generators: one syzygy of G per basis pair, pulled back along A
    leads = [g.leading(gb.order) for g in gb.elements]
    for k, l in combinations(range(s), 2):
        mk, ck = leads[k]
        ml, cl = leads[l]
        lcm = tuple(max(a, b) for a, b in zip(mk, ml))
        qk = tuple(a - b for a, b in zip(lcm, mk))
        ql = tuple(a - b for a, b in zip(lcm, ml))
        tk = ring.monomial(qk, 1 / ck)
        tl = ring.monomial(ql, 1 / cl)
        spair = tk * gb.elements[k] - tl * gb.elements[l]
        svec = [zero] * s
        svec[k] = tk
        svec[l] = -tl
        if not spair.is_zero:
            nf, quots = division(spair, gb, work_limit=work_limit)
            if not nf.is_zero:
                raise AssertionError("S-polynomial did not reduce to zero")
            for i in range(s):
                svec[i] = svec[i] - quots[i]
        col = []
        for j in range(len(live)):
            acc = zero
            for i in range(s):
                acc = acc + svec[i] * A[i][j]
            col.append(acc)
        if any(not p.is_zero for p in col):
            raw_cols.append(col)

    # re-insert rows for zero generators, normalize, dedupe
    cols = []
    seen = set()
    for col in raw_cols:
        full = [zero] * m
        for pos, j in enumerate(nonzero_idx):
            full[j] = col[pos]
        full = _normalize_column(full)
        fz = tuple(full)
        if fz not in seen:
            seen.add(fz)
            cols.append(full)
    for j, g in enumerate(gens):
        if g.is_zero:
            unit = [zero] * m
            unit[j] = ring.one
            cols.append(unit)

    degs = lambda c: max((p.degree() or 0) for p in c if not p.is_zero)
    cols.sort(key=lambda c: (degs(c), tuple(str(p) for p in c)))
    return matrix_from_columns(ring, cols)


def apply_row(gens: Sequence[Polynomial], col: Sequence[Polynomial]) -> Polynomial:
    """sum gens[i] * col[i]; zero exactly when col is a syzygy."""
    ring = gens[0].ring
    acc = ring.zero
    for g, c in zip(gens, col):
        acc = acc + g * c
    return acc


def minimalize_columns(cols: Sequence[Sequence[Polynomial]],
                       gen_degrees: Sequence[int]):
    """Drop graded-redundant columns (standard-graded rings only).

    Used for reporting a trimmed syzygy matrix; the entry ideal does not
    depend on the choice of generating columns.
    """
    from .oracle import _column_degree, column_in_span
    kept: list = []
    for col in sorted(cols, key=lambda c: _column_degree(c, gen_degrees) or 0):
        if not column_in_span(col, kept, gen_degrees):
            kept.append(list(col))
    return kept
