"""Tower spaces, equivariant bundle expressions, and canonical layered forms.

A tower is a point carrying an ambient space V, followed by Grassmann-bundle
steps G(r, A) where A is a bundle expression over the lower levels; P(E) is
sugar for G(1, E) with O(-H) the tautological subbundle.  Every level ell
carries the universal sequence 0 -> S_ell -> A_ell -> Q_ell -> 0, and
O_ell(1) := det S_ell^*.

Characters live in one variable group per level for the Chern roots of
S_ell^* and of Q_ell^*, plus one group for V; the universal-sequence relation
between them is consumed only by the Bott pushforward.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field

from . import laurent as lp
from .schur import (Character, grouped_basis_poly, peel_grouped, weyl_dim)
from .weights import is_dominant


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__("%s (at offset %d)" % (message, pos))
        self.pos = pos


def _max_schur_rank() -> int:
    try:
        return int(os.environ.get("VERIFY_MAX_DIM", "32"))
    except ValueError:
        return 32


class ValidationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# bundle expressions


class Expr:
    """Base class for bundle-expression syntax trees."""

    __slots__ = ()

    def __mul__(self, other: "Expr") -> "Expr":
        return Tensor(self, other)

    def __add__(self, other: "Expr") -> "Expr":
        return DirectSum(self, other)

    def dual(self) -> "Expr":
        return Dual(self)


@dataclass(frozen=True)
class AmbientV(Expr):
    def __str__(self):
        return "V"


@dataclass(frozen=True)
class UnivSub(Expr):
    level: int

    def __str__(self):
        return "S%d" % self.level


@dataclass(frozen=True)
class UnivQuot(Expr):
    level: int

    def __str__(self):
        return "Q%d" % self.level


@dataclass(frozen=True)
class Dual(Expr):
    arg: Expr

    def __str__(self):
        return "dual(%s)" % self.arg


@dataclass(frozen=True)
class Tensor(Expr):
    left: Expr
    right: Expr

    def __str__(self):
        return "%s * %s" % (_paren_sum(self.left), _paren_sum(self.right))


@dataclass(frozen=True)
class DirectSum(Expr):
    left: Expr
    right: Expr

    def __str__(self):
        return "%s + %s" % (self.left, self.right)


@dataclass(frozen=True)
class Schur(Expr):
    lam: tuple
    arg: Expr

    def __str__(self):
        return "schur([%s], %s)" % (",".join(str(e) for e in self.lam), self.arg)


@dataclass(frozen=True)
class Det(Expr):
    arg: Expr
    power: int = 1

    def __str__(self):
        return "det(%s, %d)" % (self.arg, self.power) if self.power != 1 \
            else "det(%s)" % self.arg


@dataclass(frozen=True)
class LineTwist(Expr):
    """O(k * H_level) with H = det S^* of that level; level 0 only for O(0)."""

    level: int
    k: int

    def __str__(self):
        if self.k == 0:
            return "O(0)"
        coef = {1: "", -1: "-"}.get(self.k, str(self.k))
        return "O(%sH%d)" % (coef, self.level)


@dataclass(frozen=True)
class RelTangent(Expr):
    level: int

    def __str__(self):
        return "T_rel(%d)" % self.level


@dataclass(frozen=True)
class RelCotangent(Expr):
    level: int

    def __str__(self):
        return "Om_rel(%d)" % self.level


def _paren_sum(e: Expr) -> str:
    return "(%s)" % e if isinstance(e, DirectSum) else str(e)


def wedge(k: int, e: Expr) -> Expr:
    return Schur((1,) * k, e)

def sym(k: int, e: Expr) -> Expr:
    return Schur((k,), e)

def O(level: int, k: int) -> Expr:
    return LineTwist(level, k)


# ---------------------------------------------------------------------------
# tower spaces


@dataclass(frozen=True)
class GrassStep:
    r: int
    over: Expr
    projective: bool = False  # parsed from P(E); display only

    def __str__(self):
        if self.projective and self.r == 1:
            return "P(%s)" % self.over
        return "G(%d, %s)" % (self.r, self.over)


class TowerSpace:
    """A validated tower of Grassmann/projective bundle steps over a point."""

    def __init__(self, ambient_dim: int, steps=(), _parent=None):
        if ambient_dim < 1:
            raise ValidationError("ambient dimension must be >= 1")
        self.ambient_dim = ambient_dim
        self.steps = tuple(steps)
        self._parent = _parent
        self._char_cache: dict = {}
        self._push_cache: dict = {}
        self._sw_cache: dict = {}
        self._coh_cache: dict = {}
        # validate ranks level by level
        self.rank_a = []   # rank of A_ell
        for ell, step in enumerate(self.steps, start=1):
            sub = self._truncated(ell - 1)
            ra = sub.rank_of(step.over)
            if step.r < 1 or step.r >= ra:
                raise ValidationError(
                    "step %d: G(%d, rank-%d bundle) is not a proper Grassmann bundle"
                    % (ell, step.r, ra))
            self.rank_a.append(ra)

    def _truncated(self, k: int) -> "TowerSpace":
        if k == self.nlevels:
            return self
        return TowerSpace(self.ambient_dim, self.steps[:k])

    @property
    def nlevels(self) -> int:
        return len(self.steps)

    def parent(self) -> "TowerSpace":
        if not self.steps:
            raise ValidationError("the point base has no parent tower")
        if self._parent is None:
            self._parent = TowerSpace(self.ambient_dim, self.steps[:-1])
        return self._parent

    def r(self, level: int) -> int:
        return self.steps[level - 1].r

    def rank_q(self, level: int) -> int:
        return self.rank_a[level - 1] - self.steps[level - 1].r

    @property
    def dim(self) -> int:
        return sum(st.r * (ra - st.r) for st, ra in zip(self.steps, self.rank_a))

    # variable layout: S_k, Q_k, S_{k-1}, Q_{k-1}, ..., S_1, Q_1, V
    @property
    def layout_sizes(self):
        sizes = []
        for ell in range(self.nlevels, 0, -1):
            sizes.append(self.r(ell))
            sizes.append(self.rank_q(ell))
        sizes.append(self.ambient_dim)
        return sizes

    @property
    def nvars(self) -> int:
        return sum(self.layout_sizes)

    def group_offset(self, kind: str, level: int = 0) -> int:
        """Offset of a group: kind in {'S','Q','V'}."""
        off = 0
        for ell in range(self.nlevels, 0, -1):
            if kind == "S" and level == ell:
                return off
            off += self.r(ell)
            if kind == "Q" and level == ell:
                return off
            off += self.rank_q(ell)
        if kind == "V":
            return off
        raise ValidationError("no group %s%d on this tower" % (kind, level))

    def group_ids(self):
        ids = []
        for ell in range(self.nlevels, 0, -1):
            ids.append(("S%d" % ell, self.r(ell)))
            ids.append(("Q%d" % ell, self.rank_q(ell)))
        ids.append(("V", self.ambient_dim))
        return ids

    def __str__(self):
        return "; ".join(["point(V=%d)" % self.ambient_dim]
                         + [str(s) for s in self.steps])

    def __repr__(self):
        return "TowerSpace(%s)" % self

    def __eq__(self, other):
        return (isinstance(other, TowerSpace)
                and other.ambient_dim == self.ambient_dim
                and other.steps == self.steps)

    def __hash__(self):
        return hash((self.ambient_dim, self.steps))

    # -- ranks ------------------------------------------------------------

    def check_level(self, level: int) -> None:
        if not 1 <= level <= self.nlevels:
            raise ValidationError("level %d does not exist on %s" % (level, self))

    def rank_of(self, e: Expr) -> int:
        if isinstance(e, AmbientV):
            return self.ambient_dim
        if isinstance(e, UnivSub):
            self.check_level(e.level)
            return self.r(e.level)
        if isinstance(e, UnivQuot):
            self.check_level(e.level)
            return self.rank_q(e.level)
        if isinstance(e, Dual):
            return self.rank_of(e.arg)
        if isinstance(e, Tensor):
            return self.rank_of(e.left) * self.rank_of(e.right)
        if isinstance(e, DirectSum):
            return self.rank_of(e.left) + self.rank_of(e.right)
        if isinstance(e, Schur):
            r = self.rank_of(e.arg)
            lam = e.lam
            if not lam:
                raise ValidationError("empty Schur weight")
            if not is_dominant(lam):
                raise ValidationError("Schur weight %r is not dominant" % (lam,))
            if len(lam) > r:
                raise ValidationError(
                    "Schur weight %r longer than rank %d" % (lam, r))
            if min(lam) < 0 and len(lam) != r:
                raise ValidationError(
                    "Laurent Schur weight %r must have length %d" % (lam, r))
            full = tuple(lam) + (0,) * (r - len(lam))
            return weyl_dim(full)
        if isinstance(e, (Det, LineTwist)):
            if isinstance(e, Det):
                self.rank_of(e.arg)
            elif e.level != 0:
                self.check_level(e.level)
            return 1
        if isinstance(e, (RelTangent, RelCotangent)):
            self.check_level(e.level)
            return self.r(e.level) * self.rank_q(e.level)
        raise ValidationError("unknown expression node %r" % (e,))

    # -- characters --------------------------------------------------------

    def char_poly(self, e: Expr):
        got = self._char_cache.get(e)
        if got is not None:
            return got
        nv = self.nvars
        if isinstance(e, AmbientV):
            off = self.group_offset("V")
            out = {}
            for i in range(self.ambient_dim):
                lp.add_inplace(out, lp.variable(nv, off + i))
        elif isinstance(e, UnivSub):
            self.check_level(e.level)
            off = self.group_offset("S", e.level)
            out = {}
            for i in range(self.r(e.level)):
                lp.add_inplace(out, lp.variable(nv, off + i, -1))
        elif isinstance(e, UnivQuot):
            self.check_level(e.level)
            off = self.group_offset("Q", e.level)
            out = {}
            for i in range(self.rank_q(e.level)):
                lp.add_inplace(out, lp.variable(nv, off + i, -1))
        elif isinstance(e, Dual):
            out = lp.adams(self.char_poly(e.arg), -1)
        elif isinstance(e, Tensor):
            out = lp.mul(self.char_poly(e.left), self.char_poly(e.right))
        elif isinstance(e, DirectSum):
            out = lp.add(self.char_poly(e.left), self.char_poly(e.right))
        elif isinstance(e, Schur):
            r = self.rank_of(e.arg)
            self.rank_of(e)  # validates the weight
            bound = _max_schur_rank()
            if r > bound:
                raise lp.ResourceLimitError(
                    "Schur functor %s of the rank-%d bundle %s exceeds the "
                    "size bound %d (set VERIFY_MAX_DIM)"
                    % (list(e.lam), r, e.arg, bound))
            lam = tuple(e.lam) + (0,) * (r - len(e.lam))
            out = lp.schur_apply(self.char_poly(e.arg), lam, r, nv)
        elif isinstance(e, Det):
            r = self.rank_of(e.arg)
            mono = lp.det_monomial(self.char_poly(e.arg), r, nv)
            out = {tuple(x * e.power for x in mono): 1}
        elif isinstance(e, LineTwist):
            if e.level == 0:
                if e.k != 0:
                    raise ValidationError("O(k) with k != 0 needs a bundle level")
                out = lp.one(nv)
            else:
                self.check_level(e.level)
                off = self.group_offset("S", e.level)
                mono = [0] * nv
                for i in range(self.r(e.level)):
                    mono[off + i] = e.k
                out = {tuple(mono): 1}
        elif isinstance(e, RelTangent):
            self.check_level(e.level)
            out = lp.mul(self.char_poly(Dual(UnivSub(e.level))),
                         self.char_poly(UnivQuot(e.level)))
        elif isinstance(e, RelCotangent):
            self.check_level(e.level)
            out = lp.mul(self.char_poly(UnivSub(e.level)),
                         self.char_poly(Dual(UnivQuot(e.level))))
        else:
            raise ValidationError("unknown expression node %r" % (e,))
        self._char_cache[e] = out
        return out

    def character(self, e: Expr) -> Character:
        return Character(self.group_ids(), self.char_poly(e))

    def canonical_bundle(self) -> Expr:
        """det of the total relative cotangent: the dualizing sheaf of the tower."""
        if not self.steps:
            return LineTwist(0, 0)
        out = None
        for ell in range(1, self.nlevels + 1):
            piece = Det(RelCotangent(ell), 1)
            out = piece if out is None else Tensor(out, piece)
        return out


# ---------------------------------------------------------------------------
# layered forms


@dataclass
class LayeredForm:
    """Canonical decomposition: integer combination of per-level Schur decorations.

    Term keys are (w_V, ((beta_1, gamma_1), ..., (beta_k, gamma_k))) where
    beta/gamma decorate S_ell^* and Q_ell^* and w_V decorates V.
    """

    space: TowerSpace
    terms: dict = field(default_factory=dict)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, LayeredForm) and self.space == other.space
                and self.terms == other.terms)

    def add_term(self, key, coeff: int):
        nc = self.terms.get(key, 0) + coeff
        if nc:
            self.terms[key] = nc
        else:
            self.terms.pop(key, None)

    def rank(self) -> int:
        total = 0
        for (wv, decs), coeff in self.terms.items():
            d = weyl_dim(wv)
            for beta, gamma in decs:
                d *= weyl_dim(beta) * weyl_dim(gamma)
            total += coeff * d
        return total

    def dual(self) -> "LayeredForm":
        out = LayeredForm(self.space)
        for (wv, decs), coeff in self.terms.items():
            dv = tuple(-e for e in reversed(wv))
            dd = tuple((tuple(-e for e in reversed(b)), tuple(-e for e in reversed(g)))
                       for b, g in decs)
            out.add_term((dv, dd), coeff)
        return out

    def char_poly(self):
        sizes = tuple(self.space.layout_sizes)
        out = {}
        for key, coeff in self.terms.items():
            lp.add_inplace(out, grouped_basis_poly(sizes, _key_to_peel(key)), coeff)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for key, coeff in sorted(self.terms.items()):
            wv, decs = key
            dec_txt = " ".join("S%d*:%s Q%d*:%s" % (l, list(b), l, list(g))
                               for l, (b, g) in enumerate(decs, start=1))
            pre = "" if coeff == 1 else "%d*" % coeff
            bits.append("%s[V:%s %s]" % (pre, list(wv), dec_txt))
        return " + ".join(bits)


def _key_to_peel(key):
    """Term key -> per-group weight tuple in layout (peel) order."""
    wv, decs = key
    out = []
    for beta, gamma in reversed(decs):
        out.append(beta)
        out.append(gamma)
    out.append(wv)
    return tuple(out)


def _peel_to_key(ws, nlevels: int):
    decs = []
    for i in range(nlevels):
        beta = ws[2 * i]
        gamma = ws[2 * i + 1]
        decs.append((beta, gamma))
    decs.reverse()
    return (ws[-1], tuple(decs))


def normalize(e: Expr, X: TowerSpace) -> LayeredForm:
    """Canonical layered Schur decomposition of a bundle expression."""
    poly = X.char_poly(e)
    peeled = peel_grouped(poly, X.layout_sizes)
    form = LayeredForm(X)
    for ws, coeff in peeled.items():
        form.add_term(_peel_to_key(ws, X.nlevels), coeff)
    return form


def restrict_to_fiber(e: Expr, X: TowerSpace, level: int) -> LayeredForm:
    """Layered form of e on the fiber Grassmannian at the given level.

    All variables of lower levels and of V are specialized to 1, trivializing
    the lower bundles; levels above `level` must not occur in e.
    """
    X.check_level(level)
    poly = X.char_poly(e)
    # indices of groups at levels strictly above `level`
    hi = []
    lo = []
    off = 0
    for ell in range(X.nlevels, 0, -1):
        block = X.r(ell) + X.rank_q(ell)
        tgt = hi if ell > level else (None if ell == level else lo)
        if tgt is not None:
            tgt.extend(range(off, off + block))
        off += block
    lo.extend(range(off, off + X.ambient_dim))
    for mono in poly:
        if any(mono[i] for i in hi):
            raise ValidationError(
                "expression involves levels above %d; cannot restrict" % level)
    if hi:
        poly = lp.specialize_ones(poly, hi)  # drops zero slots only
    poly = lp.specialize_ones(poly, [i - len(hi) for i in lo])
    fiber = TowerSpace(X.rank_a[level - 1],
                       [GrassStep(X.r(level), AmbientV())])
    peeled = peel_grouped(poly, [X.r(level), X.rank_q(level)])
    form = LayeredForm(fiber)
    triv = (0,) * fiber.ambient_dim
    for (beta, gamma), coeff in peeled.items():
        form.add_term((triv, ((beta, gamma),)), coeff)
    return form


# ---------------------------------------------------------------------------
# parsing


_TOKEN_RE = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
                       r"|(?P<sym>[-+*(),;=\[\]^]))")


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ParseError("unexpected character %r" % text[pos], pos)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, tower: TowerSpace | None):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.tower = tower

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_sym(self, s: str):
        kind, val, pos = self.next()
        if kind != "sym" or val != s:
            raise ParseError("expected %r, found %r" % (s, val or "end of input"), pos)

    def at_sym(self, s: str) -> bool:
        kind, val, _ = self.peek()
        return kind == "sym" and val == s

    def expect_int(self) -> int:
        kind, val, pos = self.next()
        if kind != "int":
            raise ParseError("expected an integer, found %r" % (val or "end"), pos)
        return int(val)

    # -- levels -------------------------------------------------------------

    def resolve_level(self, d: int, pos: int) -> int:
        k = self.tower.nlevels if self.tower else 0
        if d == 0:
            d = 1
        if not 1 <= d <= k:
            raise ParseError("level %d does not exist on this tower" % d, pos)
        return d

    def line_letter_level(self, name: str, pos: int) -> int:
        # H/L optionally followed by digits; bare H = top level, bare L = level 1
        body = name[1:]
        if body:
            return self.resolve_level(int(body), pos)
        if not self.tower or self.tower.nlevels == 0:
            raise ParseError("twist %r needs a tower with bundle levels" % name, pos)
        return self.tower.nlevels if name[0] == "H" else 1

    # -- expressions ----------------------------------------------------------

    def parse_expr(self) -> Expr:
        e = self.parse_product()
        while self.at_sym("+"):
            self.next()
            e = DirectSum(e, self.parse_product())
        return e

    def parse_product(self) -> Expr:
        e = self.parse_factor()
        while self.at_sym("*"):
            self.next()
            e = Tensor(e, self.parse_factor())
        return e

    def parse_factor(self) -> Expr:
        kind, val, pos = self.next()
        if kind == "sym" and val == "(":
            e = self.parse_expr()
            self.expect_sym(")")
            return e
        if kind != "name":
            raise ParseError("expected an expression, found %r"
                             % (val or "end of input"), pos)
        if val == "V":
            return AmbientV()
        if val == "dual":
            self.expect_sym("(")
            e = self.parse_expr()
            self.expect_sym(")")
            return Dual(e)
        if val == "schur":
            self.expect_sym("(")
            self.expect_sym("[")
            lam = [self.expect_int()]
            while self.at_sym(","):
                self.next()
                lam.append(self.expect_int())
            self.expect_sym("]")
            self.expect_sym(",")
            e = self.parse_expr()
            self.expect_sym(")")
            return Schur(tuple(lam), e)
        if val == "det":
            self.expect_sym("(")
            e = self.parse_expr()
            power = 1
            if self.at_sym(","):
                self.next()
                power = self.expect_int()
            self.expect_sym(")")
            return Det(e, power)
        if val in ("T_rel", "Om_rel"):
            self.expect_sym("(")
            lev = self.resolve_level(self.expect_int(), pos)
            self.expect_sym(")")
            return RelTangent(lev) if val == "T_rel" else RelCotangent(lev)
        if val == "O":
            self.expect_sym("(")
            e = self.parse_line_form(pos)
            self.expect_sym(")")
            return e
        if val in ("wedge", "S") and self.at_sym("^"):
            self.next()
            k = self.expect_int()
            if k < 0:
                raise ParseError("power must be non-negative", pos)
            arg = self.parse_power_arg()
            return Schur((1,) * k, arg) if val == "wedge" else Schur((k,), arg)
        m = re.fullmatch(r"([SQ])(\d+)", val)
        if m:
            lev = self.resolve_level(int(m.group(2)), pos)
            return UnivSub(lev) if m.group(1) == "S" else UnivQuot(lev)
        raise ParseError("unknown identifier %r" % val, pos)

    def parse_power_arg(self) -> Expr:
        if self.at_sym("("):
            self.next()
            e = self.parse_expr()
            self.expect_sym(")")
            return e
        return self.parse_factor()

    def parse_line_form(self, opos: int) -> Expr:
        """Linear form in H<l>/L<l> generators, e.g. -4H0, L0 - H2, 2H - 3L, 0."""
        terms: dict[int, int] = {}
        sign = 1
        first = True
        while True:
            kind, val, pos = self.peek()
            if kind == "sym" and val in "+-":
                self.next()
                sign = 1 if val == "+" else -1
                first = False
                continue
            if kind == "int":
                self.next()
                coef = sign * int(val)
                kind2, val2, pos2 = self.peek()
                if kind2 == "name" and re.fullmatch(r"[HL]\d*", val2):
                    self.next()
                    lev = self.line_letter_level(val2, pos2)
                    terms[lev] = terms.get(lev, 0) + coef
                elif coef == 0:
                    terms.setdefault(0, 0)
                else:
                    if not self.tower or self.tower.nlevels == 0:
                        raise ParseError("twist O(%d) needs a bundle level" % coef, pos)
                    lev = self.tower.nlevels
                    terms[lev] = terms.get(lev, 0) + coef
                sign = 1
                first = False
            elif kind == "name" and re.fullmatch(r"[HL]\d*", val):
                self.next()
                lev = self.line_letter_level(val, pos)
                terms[lev] = terms.get(lev, 0) + sign
                sign = 1
                first = False
            else:
                if first:
                    raise ParseError("empty twist form", opos)
                break
        terms = {lev: k for lev, k in terms.items() if k and lev}
        if not terms:
            return LineTwist(0, 0)
        out = None
        for lev in sorted(terms):
            piece = LineTwist(lev, terms[lev])
            out = piece if out is None else Tensor(out, piece)
        return out

    def expect_eof(self):
        kind, val, pos = self.peek()
        if kind != "eof":
            raise ParseError("unexpected trailing input %r" % val, pos)


def parse_expr(text: str, X: TowerSpace) -> Expr:
    """Parse a bundle expression against a tower; errors carry byte offsets."""
    p = _Parser(text, X)
    e = p.parse_expr()
    p.expect_eof()
    X.rank_of(e)  # validation
    return e


def build_space(spec: str) -> TowerSpace:
    """Parse a tower description: "point(V=n); G(r, expr); P(expr); ...".

    Later steps may reference bundles of lower levels (S1, Q1, H1, ...).
    """
    parts = [s for s in spec.split(";")]
    if not parts or not parts[0].strip():
        raise ParseError("empty tower description", 0)
    offset = 0
    head = parts[0]
    m = re.fullmatch(r"\s*point\s*\(\s*V\s*=\s*(\d+)\s*\)\s*", head)
    if not m:
        raise ParseError("tower must start with point(V=n)", 0)
    X = TowerSpace(int(m.group(1)))
    offset += len(head) + 1
    for part in parts[1:]:
        if not part.strip():
            offset += len(part) + 1
            continue
        mg = re.match(r"\s*(G|P)\s*\(", part)
        if not mg:
            raise ParseError("expected G(r, expr) or P(expr)", offset)
        kind = mg.group(1)
        inner = part[mg.end():]
        close = inner.rfind(")")
        if close < 0 or inner[close + 1:].strip():
            raise ParseError("unbalanced parentheses in tower step", offset)
        inner = inner[:close]
        try:
            if kind == "G":
                comma = inner.index(",")
                r = int(inner[:comma].strip())
                over = parse_expr(inner[comma + 1:], X)
            else:
                r = 1
                over = parse_expr(inner, X)
        except ValueError as exc:
            if isinstance(exc, (ParseError, ValidationError)):
                raise
            raise ParseError("bad rank in tower step: %s" % exc, offset)
        try:
            X = TowerSpace(X.ambient_dim,
                           X.steps + (GrassStep(r, over, projective=(kind == "P")),))
        except ValidationError as exc:
            raise ParseError(str(exc), offset)
        offset += len(part) + 1
    return X
