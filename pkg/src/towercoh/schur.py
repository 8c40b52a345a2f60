"""Exact Schur calculus: characters, decomposition, LR products, plethysm, dimensions.

Weights here are GL-weights (weakly decreasing integer tuples, negatives
allowed).  IrrepSum is the formal sum of irreducibles for a fixed rank;
Character is a sparse Laurent polynomial in grouped variables.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from . import laurent as lp
from .laurent import EngineError, ResourceLimitError
from .weights import InvalidWeightError, dual_weight, is_dominant


class NotSymmetricError(EngineError):
    """Peeling hit a non-dominant leading weight: the input was not a character."""


def _max_plethysm_dim() -> int:
    try:
        return int(os.environ.get("VERIFY_MAX_DIM", "32"))
    except ValueError:
        return 32


MAX_OUTER_SIZE = 6


# ---------------------------------------------------------------------------
# dimensions


def weyl_dim(lam) -> int:
    """Dimension of the irreducible with highest weight lam, for GL of rank len(lam)."""
    if not is_dominant(lam):
        raise InvalidWeightError("weyl_dim needs a dominant weight, got %r" % (lam,))
    num = den = 1
    n = len(lam)
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    if r:
        raise EngineError("Weyl dimension was not an integer")
    return q


# ---------------------------------------------------------------------------
# IrrepSum


@dataclass
class IrrepSum:
    """Formal integer combination of dominant weights of a fixed rank."""

    rank: int
    terms: dict = field(default_factory=dict)  # weight tuple -> multiplicity

    def __post_init__(self):
        clean = {}
        for w, c in self.terms.items():
            w = tuple(w)
            if len(w) != self.rank:
                raise InvalidWeightError("weight %r has wrong length for rank %d"
                                         % (w, self.rank))
            if not is_dominant(w):
                raise InvalidWeightError("weight %r is not dominant" % (w,))
            if c:
                clean[w] = clean.get(w, 0) + c
        self.terms = {w: c for w, c in clean.items() if c}

    @staticmethod
    def zero(rank: int) -> "IrrepSum":
        return IrrepSum(rank, {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, IrrepSum) and self.rank == other.rank
                and self.terms == other.terms)

    def __add__(self, other: "IrrepSum") -> "IrrepSum":
        if other.rank != self.rank:
            raise InvalidWeightError("rank mismatch in IrrepSum addition")
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, 0) + c
            if nc:
                out[w] = nc
            else:
                del out[w]
        return IrrepSum(self.rank, out)

    def scaled(self, k: int) -> "IrrepSum":
        return IrrepSum(self.rank, {w: c * k for w, c in self.terms.items()} if k else {})

    def __sub__(self, other: "IrrepSum") -> "IrrepSum":
        return self + other.scaled(-1)

    def dual(self) -> "IrrepSum":
        return IrrepSum(self.rank, {dual_weight(w): c for w, c in self.terms.items()})

    def det_shift(self, c: int) -> "IrrepSum":
        return IrrepSum(self.rank, {tuple(e + c for e in w): m
                                    for w, m in self.terms.items()})

    def dim(self) -> int:
        return sum(c * weyl_dim(w) for w, c in self.terms.items())

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def to_json(self):
        return [[list(w), c] for w, c in sorted(self.terms.items())]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for w, c in self.sorted_items():
            name = weight_name(w)
            bits.append(name if c == 1 else "%d*%s" % (c, name))
        return " + ".join(bits)

    __repr__ = __str__

    def __hash__(self):
        return hash((self.rank, tuple(sorted(self.terms.items()))))


def weight_name(w) -> str:
    """Readable name for a GL(V)-weight: V, V*, wedge^k V, S^k V, det twists..."""
    if all(e == 0 for e in w):
        return "triv"
    if all(e == w[0] for e in w):
        return "det V" if w[0] == 1 else "det^%d V" % w[0]
    if all(e in (0, 1) for e in w):
        k = sum(w)
        return "V" if k == 1 else "wedge^%d V" % k
    if all(e in (0, -1) for e in w):
        k = -sum(w)
        return "V*" if k == 1 else "wedge^%d V*" % k
    if w[0] > 1 and all(e == 0 for e in w[1:]):
        return "S^%d V" % w[0]
    if w[-1] < -1 and all(e == 0 for e in w[:-1]):
        return "S^%d V*" % (-w[-1])
    return "Sigma(%s) V" % ",".join(str(e) for e in w)


def dual_sum(s: IrrepSum) -> IrrepSum:
    return s.dual()


# ---------------------------------------------------------------------------
# Character


@dataclass
class Character:
    """Symmetric Laurent polynomial in grouped variables.

    groups: ordered list of (group_id, variable_count); terms: exponent tuple
    (concatenated over groups) -> non-zero integer coefficient.
    """

    groups: list
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.groups = [(str(g), int(m)) for g, m in self.groups]
        self.terms = {tuple(m): c for m, c in self.terms.items() if c}

    @property
    def nvars(self) -> int:
        return sum(m for _, m in self.groups)

    def group_slice(self, group_id: str):
        off = 0
        for g, m in self.groups:
            if g == group_id:
                return off, m
            off += m
        raise KeyError("unknown variable group %r" % (group_id,))

    def validate_symmetric(self) -> None:
        off = 0
        for g, m in self.groups:
            if not lp.is_symmetric_in(self.terms, list(range(off, off + m))):
                raise NotSymmetricError("character is not symmetric in group %r" % (g,))
            off += m

    def __eq__(self, other) -> bool:
        return (isinstance(other, Character) and self.groups == other.groups
                and self.terms == other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def rank(self) -> int:
        return lp.eval_ones(self.terms)

    def mul(self, other: "Character") -> "Character":
        if other.groups != self.groups:
            raise EngineError("character group mismatch")
        return Character(self.groups, lp.mul(self.terms, other.terms))

    def add(self, other: "Character") -> "Character":
        if other.groups != self.groups:
            raise EngineError("character group mismatch")
        return Character(self.groups, lp.add(self.terms, other.terms))


# classical Schur polynomial cache: (m, lam) -> poly in m variables
_SCHUR_POLY_CACHE: dict = {}


def schur_poly(m: int, lam) -> dict:
    """The Schur Laurent polynomial s_lam(x_1..x_m) as a bare m-variable poly."""
    lam = tuple(lam)
    key = (m, lam)
    got = _SCHUR_POLY_CACHE.get(key)
    if got is None:
        if len(lam) > m:
            raise InvalidWeightError("weight %r longer than variable count %d" % (lam, m))
        full = lam + (0,) * (m - len(lam))
        if not is_dominant(full):
            raise InvalidWeightError("weight %r is not dominant" % (lam,))
        got = lp.schur_classical(m, full)
        _SCHUR_POLY_CACHE[key] = got
    return got


def schur_character(lam, m: int, group_id: str = "x") -> Character:
    """Character of the Schur functor labelled lam on an m-dimensional space."""
    lam = tuple(int(e) for e in lam)
    if min(lam) < 0 and len(lam) != m:
        raise InvalidWeightError(
            "Laurent weight %r must have length exactly %d" % (lam, m))
    return Character([(group_id, m)], schur_poly(m, lam))


# ---------------------------------------------------------------------------
# peeling (decomposition into the Schur basis)


def peel_poly(poly, m: int):
    """Decompose a symmetric m-variable Laurent polynomial as {weight: coeff}.

    Repeatedly strips the lexicographically greatest monomial; raises
    NotSymmetricError when a leading exponent is not dominant.
    """
    rem = dict(poly)
    out = {}
    guard = 0
    while rem:
        guard += 1
        if guard > 1_000_000:
            raise NotSymmetricError("peeling did not terminate")
        mono, coeff = lp.leading(rem)
        if not is_dominant(mono):
            raise NotSymmetricError(
                "leading exponent %r is not dominant; input not symmetric" % (mono,))
        out[mono] = out.get(mono, 0) + coeff
        lp.add_inplace(rem, schur_poly(m, mono), -coeff)
    return {w: c for w, c in out.items() if c}


def peel_grouped(poly, group_sizes):
    """Decompose a multi-group character into per-group weight tuples.

    group_sizes lists the variable-group sizes in peel priority order (the
    exponent layout must match).  Returns {(w_1, ..., w_k): coeff}.
    """
    offs = []
    off = 0
    for m in group_sizes:
        offs.append((off, m))
        off += m
    nv = off
    rem = dict(poly)
    out = {}
    guard = 0
    while rem:
        guard += 1
        if guard > 2_000_000:
            raise NotSymmetricError("grouped peeling did not terminate")
        mono, coeff = lp.leading(rem)
        ws = []
        for o, m in offs:
            w = mono[o:o + m]
            if not is_dominant(w):
                raise NotSymmetricError(
                    "leading group weight %r not dominant; input not symmetric" % (w,))
            ws.append(w)
        key = tuple(ws)
        out[key] = out.get(key, 0) + coeff
        lp.add_inplace(rem, grouped_basis_poly(tuple(group_sizes), key), -coeff)
    return {w: c for w, c in out.items() if c}


_GROUPED_POLY_CACHE: dict = {}


def grouped_basis_poly(group_sizes, ws):
    """Product over groups of the Schur polynomials s_{ws[g]}, in the joint layout."""
    key = (group_sizes, ws)
    got = _GROUPED_POLY_CACHE.get(key)
    if got is None:
        nv = sum(group_sizes)
        prod = None
        off = 0
        for m, w in zip(group_sizes, ws):
            piece = lp.embed(schur_poly(m, w), nv, off)
            prod = piece if prod is None else lp.mul(prod, piece)
            off += m
        got = prod if prod is not None else {(): 1}
        _GROUPED_POLY_CACHE[key] = got
    return got


def decompose(char: Character, group_id: str) -> IrrepSum:
    """Inverse of schur_character on the chosen group by leading-monomial peeling."""
    off, m = char.group_slice(group_id)
    other = [i for i in range(char.nvars) if not off <= i < off + m]
    poly = char.terms
    if other:
        for mono in poly:
            if any(mono[i] for i in other):
                raise NotSymmetricError(
                    "character involves other groups; specialize them first")
        poly = {tuple(mono[off:off + m]): c for mono, c in poly.items()}
    return IrrepSum(m, peel_poly(poly, m))


# ---------------------------------------------------------------------------
# Littlewood-Richardson products


def _split_det(lam):
    """Write a weakly decreasing integer vector as (partition, det power)."""
    c = min(lam)
    c = min(c, 0)
    return tuple(e - c for e in lam), c


def lr_weights(a, b, rank: int) -> dict:
    """s_a * s_b in GL(rank), via character multiplication and peeling."""
    a = tuple(a) + (0,) * (rank - len(a))
    b = tuple(b) + (0,) * (rank - len(b))
    prod = lp.mul(schur_poly(rank, a), schur_poly(rank, b))
    return peel_poly(prod, rank)


def lr_product(a: IrrepSum, b: IrrepSum) -> IrrepSum:
    """Tensor-product decomposition of two irreducible sums of the same rank."""
    if a.rank != b.rank:
        raise InvalidWeightError("lr_product needs equal ranks, got %d and %d"
                                 % (a.rank, b.rank))
    out = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            for w, c in lr_weights(wa, wb, a.rank).items():
                nc = out.get(w, 0) + c * ca * cb
                if nc:
                    out[w] = nc
                else:
                    del out[w]
    return IrrepSum(a.rank, out)


def _lr_tableau_partitions(lam, mu):
    """Classical LR rule: multiplicities of nu in s_lam * s_mu for partitions.

    Enumerates row-count placements of each letter as horizontal strips with
    the cumulative lattice condition.  Returns {nu: c^nu_{lam,mu}}.
    """
    lam = tuple(e for e in lam if e)
    mu = tuple(e for e in mu if e)
    max_rows = len(lam) + sum(1 for _ in mu) + 1
    out = {}
    # counts[i][r] = number of letter-i cells in row r
    def place(letter, shape, prev_counts):
        if letter == len(mu):
            key = tuple(e for e in shape if e)
            out[key] = out.get(key, 0) + 1
            return
        k = mu[letter]
        # choose a_r cells of this letter per row r, new rows allowed at bottom
        def rec(r, left, shape_now, counts_now, cum_this, cum_prev):
            if left == 0:
                # letter fully placed; remaining rows add nothing
                place(letter + 1, shape_now, counts_now)
                return
            if r >= max_rows:
                return
            old_len = shape[r] if r < len(shape) else 0
            above_old = shape[r - 1] if r >= 1 and r - 1 < len(shape) else (10 ** 9 if r == 0 else 0)
            above_new = shape_now[r - 1] if r >= 1 and r - 1 < len(shape_now) else (10 ** 9 if r == 0 else 0)
            # a cells in row r: strip condition new <= old length of row above;
            # partition condition new <= new length of row above
            hi = min(above_old, above_new) - old_len
            hi = min(hi, left)
            c_prev_above = cum_prev[r - 1] if r >= 1 else 0
            for a in range(0, max(hi, 0) + 1):
                new_cum_this = cum_this + a
                if letter > 0 and new_cum_this > c_prev_above:
                    continue
                ns = list(shape_now)
                while len(ns) <= r:
                    ns.append(0)
                ns[r] = old_len + a
                nc = list(counts_now)
                while len(nc) <= r:
                    nc.append(0)
                nc[r] = a
                rec(r + 1, left - a, tuple(ns), tuple(nc), new_cum_this, cum_prev)
        cum_prev = []
        acc = 0
        for r in range(max_rows):
            acc += prev_counts[r] if r < len(prev_counts) else 0
            cum_prev.append(acc)
        rec(0, k, shape, (), 0, cum_prev)

    place(0, lam, ())
    return out


def lr_product_tableau(a: IrrepSum, b: IrrepSum) -> IrrepSum:
    """Tensor product by the combinatorial LR rule (independent of characters)."""
    if a.rank != b.rank:
        raise InvalidWeightError("lr_product needs equal ranks, got %d and %d"
                                 % (a.rank, b.rank))
    rank = a.rank
    out = {}
    for wa, ca in a.terms.items():
        pa, da = _split_det(wa)
        for wb, cb in b.terms.items():
            pb, db = _split_det(wb)
            for nu, c in _lr_tableau_partitions(pa, pb).items():
                if len(nu) > rank:
                    continue
                w = tuple(e + da + db for e in nu + (0,) * (rank - len(nu)))
                nc = out.get(w, 0) + c * ca * cb
                if nc:
                    out[w] = nc
                else:
                    del out[w]
    return IrrepSum(rank, out)


# ---------------------------------------------------------------------------
# plethysm


def plethysm(outer, inner, inner_rank: int) -> IrrepSum:
    """Decomposition of Sigma^outer(Sigma^inner(E)) for E of rank inner_rank.

    Evaluates s_outer on the monomial multiset of the inner character
    (Jacobi-Trudi in complete-homogeneous generators when roots repeat),
    then peels the result.
    """
    outer = tuple(int(e) for e in outer)
    inner = tuple(int(e) for e in inner)
    inner_char = schur_poly(inner_rank, inner)
    d = lp.eval_ones(inner_char)
    bound = _max_plethysm_dim()
    if d > bound:
        raise ResourceLimitError(
            "plethysm inner dimension %d exceeds bound %d (set VERIFY_MAX_DIM)"
            % (d, bound))
    if sum(abs(e) for e in outer) > MAX_OUTER_SIZE:
        raise ResourceLimitError(
            "plethysm outer weight %r exceeds size bound %d" % (outer, MAX_OUTER_SIZE))
    if len(outer) > d:
        raise InvalidWeightError("outer weight longer than inner dimension")
    res = lp.schur_apply(inner_char, outer + (0,) * (d - len(outer)), d, inner_rank)
    return IrrepSum(inner_rank, peel_poly(res, inner_rank))
