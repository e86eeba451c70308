"""Exact multivariate polynomial arithmetic over Q with block-structured rings.

Variables live in named blocks ("geom", "param", "fiber", "aux", ...) so that
the same machinery serves plain polynomial rings k[x,y,z], parameter rings
k[u][x,y,z] and fiber extensions R[T1..Tn].  Monomials are exponent tuples,
polynomials are sparse exponent->Fraction maps, and everything is immutable
after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Mapping, Sequence, Union

Monom = tuple  # exponent tuple, length == ring arity
Coeff = Union[int, Fraction]


class RingError(ValueError):
    """Raised on ring mismatches, unknown variables and malformed contexts."""


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """A multiplicative well-order on monomials.

    kind is one of "lex", "grevlex", "wgrevlex", "block".  Block orders carry
    index groups compared left to right with their own inner orders; a block
    order whose first groups cover a variable block is an elimination order
    for that block.
    """

    kind: str
    weights: tuple = ()
    groups: tuple = ()       # block: tuple of index tuples
    inners: tuple = ()       # block: tuple of MonomialOrder, one per group

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "wgrevlex", "block"):
            raise RingError(f"unknown order kind {self.kind!r}")
        if self.kind == "block":
            if len(self.groups) != len(self.inners):
                raise RingError("block order needs one inner order per group")
            seen = [i for g in self.groups for i in g]
            if len(seen) != len(set(seen)):
                raise RingError("block order groups overlap")

    def key_func(self, arity: int) -> Callable[[Monom], tuple]:
        """Return a key function: larger key == larger monomial."""
        if self.kind == "lex":
            return lambda m: m
        if self.kind == "grevlex":
            def key(m):
                return (sum(m), tuple(-e for e in reversed(m)))
            return key
        if self.kind == "wgrevlex":
            if len(self.weights) != arity:
                raise RingError("weight vector arity mismatch")
            w = self.weights
            def key(m):
                return (sum(wi * e for wi, e in zip(w, m)),
                        tuple(-e for e in reversed(m)))
            return key
        # block
        seen = sorted(i for g in self.groups for i in g)
        if seen != list(range(arity)):
            raise RingError("block order does not cover the ring")
        parts = []
        for grp, inner in zip(self.groups, self.inners):
            sub = inner.key_func(len(grp))
            parts.append((grp, sub))
        def key(m):
            return tuple(sub(tuple(m[i] for i in grp)) for grp, sub in parts)
        return key

    def eliminates(self, indices: Iterable[int]) -> bool:
        """True when some prefix of block groups is exactly `indices`."""
        want = set(indices)
        if self.kind != "block":
            return not want
        have = set()
        for grp in self.groups:
            if have == want:
                return True
            have.update(grp)
        return have == want

    def restrict(self, keep: Sequence[int]) -> "MonomialOrder":
        """The induced order on the subring spanned by `keep` (old indices)."""
        if self.kind in ("lex", "grevlex"):
            return self
        if self.kind == "wgrevlex":
            return MonomialOrder("wgrevlex",
                                 weights=tuple(self.weights[i] for i in keep))
        pos = {old: new for new, old in enumerate(keep)}
        groups, inners = [], []
        for grp, inner in zip(self.groups, self.inners):
            sub = [i for i in grp if i in pos]
            if sub:
                groups.append(tuple(range(len(sub))))  # local positions; fixed below
                inners.append(inner if inner.kind != "wgrevlex"
                              else MonomialOrder("wgrevlex", weights=tuple(
                                  inner.weights[grp.index(i)] for i in sub)))
                groups[-1] = tuple(pos[i] for i in sub)
        if not groups:
            return GREVLEX
        if len(groups) == 1:
            return inners[0]
        return MonomialOrder("block", groups=tuple(groups), inners=tuple(inners))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(*parts: tuple) -> MonomialOrder:
    """Build a block order from (index-tuple, inner-order) pairs."""
    groups = tuple(tuple(g) for g, _ in parts)
    inners = tuple(o for _, o in parts)
    return MonomialOrder("block", groups=groups, inners=inners)


# ---------------------------------------------------------------------------
# ring contexts


_IDENT_OK = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


def _check_name(name: str):
    if not name or name[0].isdigit() or not set(name) <= _IDENT_OK:
        raise RingError(f"bad variable name {name!r}")


@dataclass(frozen=True)
class RingContext:
    """An ordered list of named variables partitioned into named blocks."""

    names: tuple
    blocks: tuple            # tuple of (block_name, tuple_of_indices)
    order: MonomialOrder

    def __post_init__(self):
        for n in self.names:
            _check_name(n)
        if len(set(self.names)) != len(self.names):
            raise RingError("duplicate variable names")
        covered = sorted(i for _, idxs in self.blocks for i in idxs)
        if covered != list(range(len(self.names))):
            raise RingError("blocks must partition the variables")
        if len(set(b for b, _ in self.blocks)) != len(self.blocks):
            raise RingError("duplicate block names")
        self.order.key_func(len(self.names))  # validates arity fit

    # -- introspection ------------------------------------------------------

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise RingError(f"unknown variable {name!r}") from None

    def block_indices(self, block: str) -> tuple:
        for b, idxs in self.blocks:
            if b == block:
                return idxs
        raise RingError(f"unknown block {block!r}")

    def has_block(self, block: str) -> bool:
        return any(b == block for b, _ in self.blocks)

    def block_names(self) -> tuple:
        return tuple(b for b, _ in self.blocks)

    # -- element constructors -------------------------------------------------

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.arity: Fraction(1)})

    def constant(self, c: Coeff) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self, {} if c == 0 else {(0,) * self.arity: c})

    def var(self, name: str) -> "Polynomial":
        i = self.index(name)
        m = tuple(1 if j == i else 0 for j in range(self.arity))
        return Polynomial(self, {m: Fraction(1)})

    def gens(self) -> list:
        return [self.var(n) for n in self.names]

    def monomial(self, exps: Sequence[int], coeff: Coeff = 1) -> "Polynomial":
        m = tuple(exps)
        if len(m) != self.arity or any(e < 0 for e in m):
            raise RingError("bad exponent vector")
        c = Fraction(coeff)
        return Polynomial(self, {m: c} if c else {})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)

    # -- derived rings --------------------------------------------------------

    def extend(self, new_names: Sequence[str], block: str,
               order: MonomialOrder | None = None) -> "RingContext":
        """Append fresh variables as a new (or existing) trailing block."""
        new_names = tuple(new_names)
        for n in new_names:
            if n in self.names:
                raise RingError(f"variable {n!r} already present")
        names = self.names + new_names
        added = tuple(range(self.arity, self.arity + len(new_names)))
        blocks = list(self.blocks)
        for i, (b, idxs) in enumerate(blocks):
            if b == block:
                blocks[i] = (b, idxs + added)
                break
        else:
            blocks.append((block, added))
        return RingContext(names, tuple(blocks), order or GREVLEX)

    def subring(self, keep: Sequence[int],
                order: MonomialOrder | None = None) -> "RingContext":
        """Subring on the variables at `keep` (old indices, in order)."""
        keep = list(keep)
        names = tuple(self.names[i] for i in keep)
        pos = {old: new for new, old in enumerate(keep)}
        blocks = []
        for b, idxs in self.blocks:
            sub = tuple(pos[i] for i in idxs if i in pos)
            if sub:
                blocks.append((b, sub))
        return RingContext(names, tuple(blocks),
                           order or self.order.restrict(keep))

    def drop_block(self, block: str, order: MonomialOrder | None = None) -> "RingContext":
        gone = set(self.block_indices(block))
        return self.subring([i for i in range(self.arity) if i not in gone], order)

    def fresh_names(self, stem: str, count: int) -> list:
        """`count` identifiers built on `stem`, avoiding existing names."""
        out, k = [], 0
        taken = set(self.names)
        while len(out) < count:
            cand = f"{stem}{k}" if (count > 1 or k > 0 or stem in taken) else stem
            if cand not in taken:
                out.append(cand)
                taken.add(cand)
            k += 1
        return out

    def elim_order(self, block: str) -> MonomialOrder:
        """Block order eliminating `block`: its variables strictly first."""
        first = self.block_indices(block)
        rest = tuple(i for i in range(self.arity) if i not in set(first))
        if not rest:
            return GREVLEX
        return block_order((first, GREVLEX), (rest, GREVLEX))

    def elim_order_vars(self, indices: Sequence[int]) -> MonomialOrder:
        first = tuple(indices)
        rest = tuple(i for i in range(self.arity) if i not in set(first))
        if not first:
            return GREVLEX
        if not rest:
            return GREVLEX
        return block_order((first, GREVLEX), (rest, GREVLEX))

    def __repr__(self):
        bl = "; ".join(f"{b}: {','.join(self.names[i] for i in idxs)}"
                       for b, idxs in self.blocks)
        return f"RingContext({bl})"


def make_ring(geom: Sequence[str], params: Sequence[str] = (),
              order: MonomialOrder | str = GREVLEX) -> RingContext:
    """k[params][geom] with the geometric block first in the variable list."""
    if isinstance(order, str):
        order = {"grevlex": GREVLEX, "lex": LEX}[order]
    geom = tuple(geom)
    params = tuple(params)
    blocks = [("geom", tuple(range(len(geom))))]
    if params:
        blocks.append(("param", tuple(range(len(geom), len(geom) + len(params)))))
    return RingContext(geom + params, tuple(blocks), order)


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class HomogeneityReport:
    homogeneous: bool
    degree: int | None
    is_zero: bool = False


class Polynomial:
    """Sparse exact polynomial; terms maps exponent tuples to nonzero Fractions."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingContext, terms: Mapping[Monom, Fraction]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", dict(terms))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *_):
        raise AttributeError("Polynomial is immutable")

    # -- basic protocol -------------------------------------------------------

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.ring.names, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingError("ring mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.ring.zero
            q = Fraction(other)
            return Polynomial(self.ring, {m: c * q for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise RingError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- structure ------------------------------------------------------------

    def degree(self, block: str | None = None) -> int | None:
        """Total degree (in a block if given); None for the zero polynomial."""
        if not self.terms:
            return None
        if block is None:
            return max(sum(m) for m in self.terms)
        idxs = self.ring.block_indices(block)
        return max(sum(m[i] for i in idxs) for m in self.terms)

    def is_homogeneous(self, block: str | None = None) -> HomogeneityReport:
        if not self.terms:
            return HomogeneityReport(False, None, is_zero=True)
        if block is None:
            degs = {sum(m) for m in self.terms}
        else:
            idxs = self.ring.block_indices(block)
            degs = {sum(m[i] for i in idxs) for m in self.terms}
        if len(degs) == 1:
            return HomogeneityReport(True, degs.pop())
        return HomogeneityReport(False, None)

    def leading(self, order: MonomialOrder | None = None):
        """(monomial, coefficient) maximal for the order (default: ring order)."""
        if not self.terms:
            raise RingError("zero polynomial has no leading term")
        key = (order or self.ring.order).key_func(self.ring.arity)
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def coefficient(self, m: Monom) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.arity, Fraction(0))

    def content(self) -> Fraction:
        """gcd of coefficients, signed so self/content has positive leading coeff."""
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        cont = Fraction(num, den)
        _, lc = self.leading()
        return -cont if lc < 0 else cont

    def primitive(self) -> "Polynomial":
        if not self.terms:
            return self
        return self * (1 / self.content())

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        _, lc = self.leading(order)
        return self * (1 / lc)

    def variables_used(self) -> set:
        out = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    out.add(i)
        return out

    def uses_block(self, block: str) -> bool:
        idxs = set(self.ring.block_indices(block))
        return any(any(m[i] for i in idxs) for m in self.terms)

    # -- calculus and substitution ---------------------------------------------

    def derivative(self, var: str) -> "Polynomial":
        i = self.ring.index(var)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                m2 = m[:i] + (e - 1,) + m[i + 1:]
                s = out.get(m2, 0) + c * e
                if s:
                    out[m2] = s
                else:
                    del out[m2]
        return Polynomial(self.ring, out)

    def evaluate_block(self, block: str, values: Sequence[Coeff]) -> "Polynomial":
        """Substitute rationals for a block's variables; lands in the subring."""
        if not self.ring.has_block(block) and not values:
            return self
        idxs = self.ring.block_indices(block)
        if len(values) != len(idxs):
            raise RingError(f"block {block!r} needs {len(idxs)} values")
        vals = {i: Fraction(v) for i, v in zip(idxs, values)}
        target = self.ring.drop_block(block)
        keep = [i for i in range(self.ring.arity) if i not in vals]
        out = {}
        for m, c in self.terms.items():
            for i, v in vals.items():
                if m[i]:
                    c = c * v ** m[i]
            if not c:
                continue
            m2 = tuple(m[i] for i in keep)
            s = out.get(m2, 0) + c
            if s:
                out[m2] = s
            else:
                del out[m2]
        return Polynomial(target, out)

    def transport(self, target: RingContext) -> "Polynomial":
        """Re-home by variable name; nonzero exponents must map somewhere."""
        if target == self.ring:
            return self
        mapping = []
        for i, n in enumerate(self.ring.names):
            mapping.append(target.names.index(n) if n in target.names else None)
        out = {}
        for m, c in self.terms.items():
            m2 = [0] * target.arity
            for i, e in enumerate(m):
                if not e:
                    continue
                j = mapping[i]
                if j is None:
                    raise RingError(
                        f"variable {self.ring.names[i]!r} has no image in target ring")
                m2[j] = e
            key = tuple(m2)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                del out[key]
        return Polynomial(target, out)

    # -- printing ---------------------------------------------------------------

    def sorted_terms(self, order: MonomialOrder | None = None) -> list:
        key = (order or self.ring.order).key_func(self.ring.arity)
        return sorted(self.terms.items(), key=lambda mc: key(mc[0]), reverse=True)

    def __str__(self):
        return poly_str(self)

    def __repr__(self):
        return f"<{poly_str(self)}>"


def poly_str(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    parts = []
    for m, c in p.sorted_terms():
        factors = []
        for name, e in zip(p.ring.names, m):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """A finite generator list in a ring context; zero generators discarded."""

    __slots__ = ("ring", "gens", "_gb_cache")

    def __init__(self, ring: RingContext, gens: Iterable[Polynomial]):
        gens = tuple(g for g in gens if g and not g.is_zero)
        for g in gens:
            if g.ring != ring:
                raise RingError("generator not in the stated ring")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "_gb_cache", {})

    def __setattr__(self, *_):
        raise AttributeError("Ideal is immutable")

    def __eq__(self, other):
        return (isinstance(other, Ideal) and self.ring == other.ring
                and self.gens == other.gens)

    def __hash__(self):
        return hash((self.ring.names, self.gens))

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def transport(self, target: RingContext) -> "Ideal":
        return Ideal(target, [g.transport(target) for g in self.gens])

    def __repr__(self):
        body = ", ".join(poly_str(g) for g in self.gens) or "0"
        return f"Ideal({body})"


# ---------------------------------------------------------------------------
# parsing


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int, text: str = ""):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{msg} at line {line}, column {col}")
        self.pos = pos
        self.line = line
        self.col = col


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.toks = []
        self._scan()
        self.i = 0

    def _scan(self):
        text, n = self.text, len(self.text)
        i = 0
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.toks.append(("int", text[i:j], i))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.toks.append(("ident", text[i:j], i))
                i = j
                continue
            if ch in "+-*/^()":
                self.toks.append((ch, ch, i))
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", i, text)
        self.toks.append(("end", "", n))

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t


def parse_polynomial(ring: RingContext, text: str) -> Polynomial:
    """Parse `x^2*y + 3/2*z - 4`; `*` is optional between factors."""
    toks = _Tokens(text)

    def parse_expr():
        sign = 1
        kind, _, _ = toks.peek()
        while kind in ("+", "-"):
            if kind == "-":
                sign = -sign
            toks.next()
            kind, _, _ = toks.peek()
        acc = parse_term() * sign
        while True:
            kind, _, _ = toks.peek()
            if kind not in ("+", "-"):
                return acc
            sign = 1
            while kind in ("+", "-"):
                if kind == "-":
                    sign = -sign
                toks.next()
                kind, _, _ = toks.peek()
            acc = acc + parse_term() * sign

    def parse_term():
        acc = parse_factor()
        while True:
            kind, _, _ = toks.peek()
            if kind == "*":
                toks.next()
                acc = acc * parse_factor()
            elif kind in ("int", "ident", "("):
                acc = acc * parse_factor()
            else:
                return acc

    def parse_factor():
        kind, val, pos = toks.next()
        if kind == "int":
            num = int(val)
            k2, _, _ = toks.peek()
            if k2 == "/":
                toks.next()
                k3, v3, p3 = toks.next()
                if k3 != "int":
                    raise ParseError("expected integer denominator", p3, text)
                den = int(v3)
                if den == 0:
                    raise ParseError("zero denominator", p3, text)
                base = ring.constant(Fraction(num, den))
            else:
                base = ring.constant(num)
        elif kind == "ident":
            if val not in ring.names:
                raise ParseError(f"unknown variable {val!r}", pos, text)
            base = ring.var(val)
        elif kind == "(":
            base = parse_expr()
            k2, _, p2 = toks.next()
            if k2 != ")":
                raise ParseError("expected ')'", p2, text)
        elif kind == "-":
            return -parse_factor()
        else:
            raise ParseError(f"unexpected token {val!r}" if val else "unexpected end of input",
                             pos, text)
        kind2, _, _ = toks.peek()
        if kind2 == "^":
            toks.next()
            k3, v3, p3 = toks.next()
            if k3 != "int":
                raise ParseError("expected integer exponent", p3, text)
            base = base ** int(v3)
        return base

    result = parse_expr()
    kind, val, pos = toks.peek()
    if kind != "end":
        raise ParseError(f"unexpected token {val!r}", pos, text)
    return result


def parse_ring_header(line: str) -> RingContext:
    """`ring: x,y,z | params: u1,u2 | order: grevlex` -> RingContext."""
    geom: list = []
    params: list = []
    order = "grevlex"
    for piece in line.split("|"):
        piece = piece.strip()
        if not piece:
            continue
        if ":" not in piece:
            raise RingError(f"malformed ring header clause {piece!r}")
        key, _, rest = piece.partition(":")
        key = key.strip().lower()
        vals = [v.strip() for v in rest.split(",") if v.strip()]
        if key == "ring":
            geom = vals
        elif key == "params":
            params = vals
        elif key == "order":
            if len(vals) != 1 or vals[0] not in ("grevlex", "lex"):
                raise RingError(f"unsupported order {rest.strip()!r}")
            order = vals[0]
        else:
            raise RingError(f"unknown ring header key {key!r}")
    if not geom:
        raise RingError("ring header declares no variables")
    return make_ring(geom, params, order)
