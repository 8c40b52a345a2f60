"""Bookkeeping for exact sequences of bundles.

Two consumers: Euler-characteristic consistency (the alternating sum of an
exact sequence vanishes as a virtual module, for any twist), and forced
cohomology deduction along a three-term sequence when the long exact sequence
leaves no room for connecting maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cohomology import CohomologyTable, cohomology
from .schur import IrrepSum
from .tower import Tensor, TowerSpace, ValidationError


class ContradictionError(RuntimeError):
    """The supplied tables admit no exact solution."""


class Undetermined:
    """Returned when degree bookkeeping alone cannot pin the third table."""

    def __repr__(self):
        return "Undetermined"

    def __bool__(self):
        return False


UNDETERMINED = Undetermined()


@dataclass
class ExactSequenceSpec:
    """0 -> terms[0] -> terms[1] -> ... -> terms[-1] -> 0 on a tower."""

    terms: list
    space: TowerSpace
    twists: list = field(default_factory=list)

    def __post_init__(self):
        if len(self.terms) < 3:
            raise ValidationError("an exact sequence needs at least 3 terms")
        for t in self.terms:
            self.space.rank_of(t)


def euler_consistency(seq: ExactSequenceSpec, twists=None):
    """Check sum_i (-1)^i chi(E_i tensor tau) = 0 for each twist tau.

    Returns (all_zero, {twist text: residual IrrepSum}); the residual is the
    signed virtual module, kept only when non-zero.
    """
    X = seq.space
    taus = list(twists) if twists is not None else list(seq.twists)
    if not taus:
        taus = [None]
    residuals = {}
    ok = True
    for tau in taus:
        total = IrrepSum.zero(X.ambient_dim)
        for i, term in enumerate(seq.terms):
            e = term if tau is None else Tensor(term, tau)
            chi = cohomology(e, X).euler()
            total = total + chi.scaled(1 if i % 2 == 0 else -1)
        if total:
            ok = False
            residuals[str(tau) if tau is not None else "O(0)"] = total
    return ok, residuals


def _no_overlap(t1: CohomologyTable, t2: CohomologyTable, shift: int) -> bool:
    """True when t1(d) and t2(d + shift) are never both non-zero."""
    return all(not t2.degree(d + shift) for d in t1.entries)


def les_force(seq: ExactSequenceSpec, unknown: int, known_tables=None):
    """Deduce the table at position `unknown` of a three-term exact sequence.

    The other two tables are taken from known_tables (by position) or
    computed.  Purely positional forcing: whenever the two known tables have
    non-zero groups in LES-adjacent degrees, returns UNDETERMINED rather than
    guessing.  Raises ContradictionError when no exact solution exists.
    """
    if len(seq.terms) != 3:
        raise ValidationError("les_force needs a three-term sequence")
    if unknown not in (0, 1, 2):
        raise ValidationError("unknown position must be 0, 1 or 2")
    known_tables = dict(known_tables or {})
    X = seq.space
    tabs = {}
    for i in range(3):
        if i == unknown:
            continue
        tabs[i] = known_tables.get(i) or cohomology(seq.terms[i], X)

    def combine(first: CohomologyTable, second: CohomologyTable, shift: int):
        out = {}
        for d, s in first.entries.items():
            out[d] = out.get(d, IrrepSum.zero(X.ambient_dim)) + s
        for d, s in second.entries.items():
            out[d - shift] = out.get(d - shift, IrrepSum.zero(X.ambient_dim)) + s
        table = CohomologyTable(X, out)
        for d in table.entries:
            if d < 0 or d > X.dim:
                raise ContradictionError(
                    "forced group in impossible degree %d" % d)
        return table

    if unknown == 2:
        a, b = tabs[0], tabs[1]
        if not _no_overlap(a, b, 0):
            return UNDETERMINED
        result = combine(b, a, 1)           # C_d = B_d + A_{d+1}
    elif unknown == 1:
        a, c = tabs[0], tabs[2]
        if not _no_overlap(c, a, 1):
            return UNDETERMINED
        result = combine(a, c, 0)           # B_d = A_d + C_d
    else:
        b, c = tabs[1], tabs[2]
        if not _no_overlap(b, c, 0):
            return UNDETERMINED
        result = combine(b, c, -1)          # A_d = B_d + C_{d-1}
    tabs[unknown] = result
    chi = [tabs[i].euler() for i in range(3)]
    if chi[1] != chi[0] + chi[2]:
        raise ContradictionError("Euler characteristics admit no exact solution")
    return result
