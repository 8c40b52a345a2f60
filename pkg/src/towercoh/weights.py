"""Integer weight vectors and the dominance regularization step of Bott's algorithm.

A weight is a finite tuple of integers labelling a Schur functor; negative
entries encode determinant twists.  All downstream cohomology computations
funnel through `bott_regularize`.
"""

from __future__ import annotations

from dataclasses import dataclass


class InvalidWeightError(ValueError):
    pass


Weight = tuple  # tuple[int, ...]; kept as plain tuples for hashing/speed


def as_weight(entries) -> Weight:
    w = tuple(int(e) for e in entries)
    if not w:
        raise InvalidWeightError("weight must have positive length")
    return w


def is_dominant(w) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def rho(n: int) -> Weight:
    """The staircase (n, n-1, ..., 1)."""
    if n < 1:
        raise InvalidWeightError("rho(n) needs n >= 1, got %r" % (n,))
    return tuple(range(n, 0, -1))


def dual_weight(w) -> Weight:
    """Weight of the dual Schur functor: reverse and negate."""
    if not is_dominant(w):
        raise InvalidWeightError("dual_weight needs a dominant weight, got %r" % (w,))
    return tuple(-e for e in reversed(w))


def shift_weight(w, c: int) -> Weight:
    """Add the constant vector c*(1,...,1); a determinant twist."""
    return tuple(e + c for e in w)


@dataclass(frozen=True)
class BottResult:
    """Outcome of regularizing a weight: singular, or concentrated in one degree."""

    singular: bool
    degree: int | None = None
    weight: Weight | None = None

    @staticmethod
    def make_singular() -> "BottResult":
        return BottResult(True)

    @staticmethod
    def regular(degree: int, weight) -> "BottResult":
        return BottResult(False, degree, tuple(weight))


def inversions(v) -> int:
    """Number of pairs i < j with v[i] < v[j] (swaps needed to sort decreasingly)."""
    n = len(v)
    return sum(1 for i in range(n) for j in range(i + 1, n) if v[i] < v[j])


def bott_regularize(alpha) -> BottResult:
    """Add the staircase, detect repeats, otherwise sort and record the twist length.

    Returns Singular when alpha + rho has two equal entries; otherwise
    Regular(l, w) with l the inversion count of alpha + rho and
    w = sort_desc(alpha + rho) - rho, which is dominant.
    """
    alpha = as_weight(alpha)
    n = len(alpha)
    r = rho(n)
    v = tuple(a + b for a, b in zip(alpha, r))
    if len(set(v)) < n:
        return BottResult.make_singular()
    degree = inversions(v)
    w = tuple(x - y for x, y in zip(sorted(v, reverse=True), r))
    return BottResult.regular(degree, w)
