"""Iterated Bott pushforward down a tower: exact equivariant cohomology tables.

Every intermediate object is a direct sum of irreducible homogeneous pieces,
each of which pushes forward concentrated in a single degree, so the Leray
assembly is additive termwise and no spectral-sequence differentials occur.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import laurent as lp
from .schur import IrrepSum, grouped_basis_poly, peel_grouped, weight_name
from .tower import (Dual, Expr, LayeredForm, LineTwist, Tensor, TowerSpace,
                    ValidationError, _key_to_peel, _peel_to_key, normalize)
from .weights import bott_regularize


@dataclass
class CohomologyTable:
    """Map from cohomological degree to a sum of irreducible GL(V)-modules."""

    space: TowerSpace
    entries: dict = field(default_factory=dict)  # degree -> IrrepSum

    def __post_init__(self):
        self.entries = {d: s for d, s in self.entries.items() if s}

    def __bool__(self):
        return bool(self.entries)

    def __eq__(self, other):
        return (isinstance(other, CohomologyTable)
                and self.space.ambient_dim == other.space.ambient_dim
                and self.entries == other.entries)

    def degree(self, d: int) -> IrrepSum:
        return self.entries.get(d, IrrepSum.zero(self.space.ambient_dim))

    def degrees(self):
        return sorted(self.entries)

    def total_dim(self) -> int:
        return sum(s.dim() for s in self.entries.values())

    def euler(self) -> IrrepSum:
        out = IrrepSum.zero(self.space.ambient_dim)
        for d, s in self.entries.items():
            out = out + s.scaled(1 if d % 2 == 0 else -1)
        return out

    def to_json(self):
        return {str(d): self.entries[d].to_json() for d in self.degrees()}

    def __str__(self):
        if not self.entries:
            return "0 (all cohomology vanishes)"
        lines = []
        for d in self.degrees():
            s = self.entries[d]
            lines.append("H^%d = %s  (dim %d)" % (d, s, s.dim()))
        return "\n".join(lines)

    __repr__ = __str__


def _push_term(X: TowerSpace, key):
    """Pushforward of one decorated term along the top Grassmann step.

    Returns a list of (degree shift, lower term key, multiplicity); empty when
    the Bott weight is singular.
    """
    cached = X._push_cache.get(key)
    if cached is not None:
        return cached
    wv, decs = key
    beta, gamma = decs[-1]
    alpha = tuple(beta) + tuple(gamma)
    res = bott_regularize(alpha)
    if res.singular:
        X._push_cache[key] = ()
        return ()
    parent = X.parent()
    w = res.weight
    sw = X._sw_cache.get(w)
    if sw is None:
        step = X.steps[-1]
        rank_a = X.rank_a[-1]
        cha = parent.char_poly(Dual(step.over))
        sw = lp.schur_apply(cha, w, rank_a, parent.nvars)
        X._sw_cache[w] = sw
    lower_key = (wv, decs[:-1])
    sizes = tuple(parent.layout_sizes)
    residual_trivial = all(all(e == 0 for e in part)
                           for part in _key_to_peel(lower_key))
    if residual_trivial:
        poly = sw
    else:
        poly = lp.mul(sw, grouped_basis_poly(sizes, _key_to_peel(lower_key)))
    out = tuple((res.degree, _peel_to_key(ws, parent.nlevels), c)
                for ws, c in peel_grouped(poly, sizes).items())
    X._push_cache[key] = out
    return out


def pushforward_once(form: LayeredForm, X: TowerSpace):
    """One Bott step: {degree shift: LayeredForm over the truncated tower}."""
    if X.nlevels == 0:
        raise ValidationError("nothing to push forward on a point")
    if form.space != X:
        raise ValidationError("layered form does not live on this tower")
    parent = X.parent()
    out: dict[int, LayeredForm] = {}
    for key, coeff in form.terms.items():
        for shift, lower_key, mult in _push_term(X, key):
            bucket = out.setdefault(shift, LayeredForm(parent))
            bucket.add_term(lower_key, coeff * mult)
    return {d: f for d, f in out.items() if f}


def cohomology(e: Expr, X: TowerSpace) -> CohomologyTable:
    """Full cohomology table of a bundle expression on a tower."""
    cached = X._coh_cache.get(e)
    if cached is not None:
        return cached
    table = {0: normalize(e, X)}
    cur = X
    while cur.nlevels > 0:
        parent = cur.parent()
        nxt: dict[int, LayeredForm] = {}
        for d, form in table.items():
            for shift, pushed in pushforward_once(form, cur).items():
                bucket = nxt.setdefault(d + shift, LayeredForm(parent))
                for key, coeff in pushed.terms.items():
                    bucket.add_term(key, coeff)
        table = {d: f for d, f in nxt.items() if f}
        cur = parent
    entries = {}
    for d, form in table.items():
        terms = {}
        for (wv, _decs), coeff in form.terms.items():
            terms[wv] = terms.get(wv, 0) + coeff
        s = IrrepSum(X.ambient_dim, terms)
        if s:
            entries[d] = s
    out = CohomologyTable(X, entries)
    X._coh_cache[e] = out
    return out


def ext_table(e1: Expr, e2: Expr, X: TowerSpace) -> CohomologyTable:
    """Ext groups Hom^*(e1, e2) = H^*(e1^* tensor e2)."""
    return cohomology(Tensor(Dual(e1), e2), X)


def euler_char(e: Expr, X: TowerSpace):
    """Alternating sum of the table: (signed IrrepSum, integer dimension)."""
    chi = cohomology(e, X).euler()
    return chi, chi.dim()


def _det_power_of_top(table: CohomologyTable, dim: int) -> int:
    """Extract c from a table of shape {dim: (det V)^c}."""
    if table.degrees() != [dim] or len(table.degree(dim).terms) != 1:
        raise ValidationError("expected cohomology concentrated in the top degree")
    ((w, mult),) = table.degree(dim).terms.items()
    if mult != 1 or any(e != w[0] for e in w):
        raise ValidationError("top cohomology is not a determinant power")
    return w[0]


def canonical_serre_power(X: TowerSpace) -> int:
    """The integer c with H^dim(X, omega_X) = (det V)^c, computed by the engine.

    With the equivariant canonical bundle (per-level det of the relative
    cotangent) this comes out 0 — the trace map is equivariant — but it is
    computed rather than assumed.
    """
    c = getattr(X, "_serre_power", None)
    if c is None:
        c = _det_power_of_top(cohomology(X.canonical_bundle(), X), X.dim)
        X._serre_power = c
    return c


def graded_dual_tables(t1: CohomologyTable, t2: CohomologyTable,
                       dim: int, det_power: int):
    """Check t1(d) == dual(t2(dim-d)) (x) (det V)^det_power for all d.

    Returns (ok, first mismatching degree or None).
    """
    for d in range(0, dim + 1):
        lhs = t1.degree(d)
        rhs = t2.degree(dim - d).dual().det_shift(det_power)
        if lhs != rhs:
            return False, d
    return True, None


def divisor_canonical_power(X: TowerSpace) -> int:
    """c with H^dim(X, O(-3H-2L)) = (det V)^c on the two-step tower.

    O(-3H-2L) is the divisor-class normalization of the canonical bundle
    there; it differs from the equivariant canonical by an ambient det twist,
    and c records exactly that twist (c = 2 for dim V = 5).
    """
    c = getattr(X, "_div_serre_power", None)
    if c is None:
        omega_div = Tensor(LineTwist(2, -3), LineTwist(1, -2))
        c = _det_power_of_top(cohomology(omega_div, X), X.dim)
        X._div_serre_power = c
    return c


def serre_dual_pair_check(e: Expr, X: TowerSpace, t: int):
    """The two-sided twist check H^*(C(-t)) against H^(dim-*)(C^*(t-5)).

    Specific to the two-step tower over G(2, C^5) (dim 8, twist span 5).
    Equality is taken as graded-dual GL(V)-modules after correcting by
    H^dim(X, O(-3H-2L)) = (det V)^2, which the engine computes itself; the
    correction is forced because the (t-5) normalization is a divisor-class
    statement while the tables carry full equivariant weights.
    """
    if X.dim != 8 or X.ambient_dim != 5 or X.nlevels != 2:
        raise ValidationError("this twist-duality check is for the 8-dimensional "
                              "two-step tower over dim-5 V")
    top = X.nlevels
    t1 = cohomology(Tensor(e, LineTwist(top, -t)), X)
    t2 = cohomology(Tensor(Dual(e), LineTwist(top, t - 5)), X)
    cpow = divisor_canonical_power(X)
    ok, bad = graded_dual_tables(t1, t2, X.dim, cpow)
    return ok, bad, t1, t2


def serre_duality_holds(e: Expr, X: TowerSpace):
    """Global property: table(e) graded-dual to table(e^* tensor omega_X)."""
    t1 = cohomology(e, X)
    t2 = cohomology(Tensor(Dual(e), X.canonical_bundle()), X)
    cpow = canonical_serre_power(X)
    return graded_dual_tables(t1, t2, X.dim, cpow)


# ---------------------------------------------------------------------------
# collection checks


@dataclass
class PairVerdict:
    later: int
    earlier: int
    ok: bool
    table: CohomologyTable | None = None
    error: str | None = None


@dataclass
class CollectionReport:
    objects: list
    exceptional: list        # (index, ok, table or error string)
    pairs: list              # PairVerdict for every ordered (later, earlier)
    mode: str = "plain"

    @property
    def ok(self) -> bool:
        return (all(ok for _, ok, _ in self.exceptional)
                and all(p.ok for p in self.pairs))

    def summary(self) -> str:
        ne = sum(0 if ok else 1 for _, ok, _ in self.exceptional)
        np_ = sum(0 if p.ok else 1 for p in self.pairs)
        return ("%d objects: %d non-exceptional, %d/%d bad Hom pairs"
                % (len(self.objects), ne, np_, len(self.pairs)))


def _twisted(e: Expr, X: TowerSpace, twist: int) -> Expr:
    if twist == 0:
        return e
    return Tensor(e, LineTwist(X.nlevels, twist))


def expand_collection(blocks, mode: str, X: TowerSpace):
    """Flatten blocks of expressions into an ordered list of twisted objects.

    mode 'plain': one block, no twists.  mode 'dual-lefschetz': blocks are
    D_{m-1}, ..., D_0 twisted by -(m-1), ..., 0.  mode 'lefschetz': blocks
    D_0, ..., D_{m-1} twisted by 0, ..., m-1.
    """
    mode = mode.lower()
    items = []
    if mode == "plain":
        for block in blocks:
            items.extend((e, 0) for e in block)
    elif mode in ("dual-lefschetz", "duallefschetz"):
        m = len(blocks)
        for i, block in enumerate(blocks):
            items.extend((e, -(m - 1 - i)) for e in block)
    elif mode == "lefschetz":
        for i, block in enumerate(blocks):
            items.extend((e, i) for e in block)
    else:
        raise ValidationError("unknown collection mode %r" % mode)
    return [(_twisted(e, X, tw), tw) for e, tw in items]


def check_collection(blocks, X: TowerSpace, mode: str = "plain") -> CollectionReport:
    """Verify exceptionality of each object and Hom^*(later, earlier) = 0.

    blocks: list of lists of expressions; the flattened order (after the
    mode's twisting) is the collection order.  Per-pair failures are
    collected, not raised.
    """
    items = expand_collection(blocks, mode, X)
    objects = [e for e, _ in items]
    trivial = IrrepSum(X.ambient_dim, {(0,) * X.ambient_dim: 1})
    exceptional = []
    for i, e in enumerate(objects):
        try:
            tab = ext_table(e, e, X)
            ok = tab.degrees() == [0] and tab.degree(0) == trivial
            exceptional.append((i, ok, tab))
        except Exception as exc:  # aggregate, do not abort
            exceptional.append((i, False, str(exc)))
    pairs = []
    for i in range(len(objects)):
        for j in range(i):
            try:
                tab = ext_table(objects[i], objects[j], X)
                pairs.append(PairVerdict(i, j, not bool(tab), tab))
            except Exception as exc:
                pairs.append(PairVerdict(i, j, False, None, str(exc)))
    return CollectionReport(objects, exceptional, pairs, mode)


__all__ = [
    "CohomologyTable", "CollectionReport", "PairVerdict",
    "cohomology", "pushforward_once", "ext_table", "euler_char",
    "canonical_serre_power", "divisor_canonical_power", "graded_dual_tables",
    "serre_dual_pair_check",
    "serre_duality_holds", "check_collection", "expand_collection",
    "weight_name",
]
