"""Sparse multivariate Laurent polynomials over the integers.

Polynomials are dicts mapping exponent tuples (one integer per variable,
negatives allowed) to non-zero integer coefficients.  Everything here is
exact; there is no floating point anywhere in the engine.

The two Schur-polynomial evaluators live here as well:

* `schur_on_monomials` — bialternant quotient for a multiset of *distinct*
  monomial roots, computed by successive exact division by the binomials
  (m_i - m_j).  This is the fast path used for Schur functors of universal
  bundles, whose Chern roots are distinct monomials.
* `schur_jacobi_trudi` — generic fallback through power sums / Newton's
  identities and the h-determinant, valid for any genuine bundle character
  (repeated roots allowed).
"""

from __future__ import annotations

from heapq import heapify, heappop, heappush
from itertools import permutations


class EngineError(RuntimeError):
    """Internal inconsistency (non-symmetric character, inexact division...)."""


class ResourceLimitError(RuntimeError):
    """A configured size bound was exceeded."""


# ---------------------------------------------------------------------------
# basic arithmetic on exponent-dict polynomials



def one(nv: int):
    return {(0,) * nv: 1}


def variable(nv: int, i: int, power: int = 1):
    e = [0] * nv
    e[i] = power
    return {tuple(e): 1}


def add_inplace(a, b, scale: int = 1):
    for m, c in b.items():
        c *= scale
        nc = a.get(m, 0) + c
        if nc:
            a[m] = nc
        else:
            a.pop(m, None)
    return a

def add(a, b):
    return add_inplace(dict(a), b)



def mul(a, b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            nc = out.get(m, 0) + ca * cb
            if nc:
                out[m] = nc
            else:
                del out[m]
    return out


def mul_monomial(a, mono, coeff: int = 1):
    return {tuple(x + y for x, y in zip(m, mono)): c * coeff for m, c in a.items()}




def _nvars_of(a) -> int:
    for m in a:
        return len(m)
    raise EngineError("cannot infer variable count of the zero polynomial")


def eval_ones(a) -> int:
    return sum(a.values())


def adams(a, k: int):
    """Substitute every variable x by x^k (k-th power-sum/Adams operation)."""
    if k == 1:
        return dict(a)
    return {tuple(e * k for e in m): c for m, c in a.items()}



def is_symmetric_in(a, idxs) -> bool:
    """Invariance under adjacent transpositions of the given variable indices."""
    for i, j in zip(idxs, idxs[1:]):
        for m, c in a.items():
            e = list(m)
            e[i], e[j] = e[j], e[i]
            if a.get(tuple(e), 0) != c:
                return False
    return True


def leading(a):
    """Lexicographically greatest exponent vector with its coefficient."""
    m = max(a)
    return m, a[m]


def embed(a, nv: int, offset: int):
    """View a polynomial in few variables inside a wider variable list."""
    out = {}
    for m, c in a.items():
        e = [0] * nv
        e[offset:offset + len(m)] = m
        out[tuple(e)] = c
    return out


def specialize_ones(a, idxs):
    """Set the listed variables to 1 (drop those exponent slots)."""
    keep = [i for i in range(_nvars_of(a)) if i not in set(idxs)] if a else []
    out = {}
    for m, c in a.items():
        e = tuple(m[i] for i in keep)
        nc = out.get(e, 0) + c
        if nc:
            out[e] = nc
        else:
            del out[e]
    return out


# ---------------------------------------------------------------------------
# exact division

_DIV_STEP_CAP = 4_000_000


def div_exact(num, den):
    """Exact quotient num/den in the Laurent ring; raises if not exact.

    Cancels the lex-leading remainder term each step, tracking the leading
    monomial with a lazy max-heap; termination is guaranteed for exact
    divisions, and a step cap catches inexact input.
    """
    if not den:
        raise EngineError("division by zero polynomial")
    if not num:
        return {}
    dm, dc = leading(den)
    rest = [(m, c) for m, c in den.items() if m != dm]
    quot = {}
    rem = dict(num)
    heap = [tuple(-x for x in m) for m in rem]
    heapify(heap)
    steps = 0
    while rem:
        steps += 1
        if steps > _DIV_STEP_CAP:
            raise EngineError("division did not terminate; inexact division?")
        while heap:
            m = tuple(-x for x in heap[0])
            if m in rem:
                break
            heappop(heap)
        else:  # every live remainder key is tracked, so this cannot happen
            raise EngineError("leading-term heap exhausted")
        c = rem[m]
        if c % dc:
            raise EngineError("inexact coefficient division")
        qc = c // dc
        qm = tuple(x - y for x, y in zip(m, dm))
        quot[qm] = quot.get(qm, 0) + qc
        del rem[m]
        for rm, rc in rest:
            t = tuple(x + y for x, y in zip(qm, rm))
            old = rem.get(t, 0)
            nc = old - qc * rc
            if nc:
                rem[t] = nc
                if not old:
                    heappush(heap, tuple(-x for x in t))
            else:
                rem.pop(t, None)
    return {m: c for m, c in quot.items() if c}


# ---------------------------------------------------------------------------
# Schur polynomial evaluators

_CLASSICAL_CACHE: dict = {}


def schur_classical(m: int, lam):
    """s_lam(x_1..x_m) by the interlacing (branching) recursion; division-free.

    lam must be weakly decreasing of length exactly m (Laurent entries fine).
    """
    lam = tuple(lam)
    got = _CLASSICAL_CACHE.get((m, lam))
    if got is not None:
        return got
    if m == 0:
        return {(): 1}
    if m == 1:
        out = {(lam[0],): 1}
    else:
        out = {}
        tot = sum(lam)
        mus = []

        def gen_mu(prefix, i):
            if i == m - 1:
                mus.append(prefix)
                return
            lo, hi = lam[i + 1], lam[i]
            start = min(prefix[-1], hi) if prefix else hi
            for v in range(start, lo - 1, -1):
                gen_mu(prefix + (v,), i + 1)

        gen_mu((), 0)
        for mu in mus:
            sub = schur_classical(m - 1, mu)
            k = tot - sum(mu)
            for mono, c in sub.items():
                key = mono + (k,)
                out[key] = out.get(key, 0) + c
    _CLASSICAL_CACHE[(m, lam)] = out
    return out


def _unit_root_form(ms):
    """Recognize roots that are +-(single variables): (indices, sign) or None."""
    sign = None
    idxs = []
    for m in ms:
        nz = [(i, e) for i, e in enumerate(m) if e]
        if len(nz) != 1:
            return None
        i, e = nz[0]
        if e not in (1, -1):
            return None
        if sign is None:
            sign = e
        elif e != sign:
            return None
        idxs.append(i)
    if len(set(idxs)) != len(idxs):
        return None
    return idxs, sign


def monomial_roots(a):
    """The multiset of monomial roots of a genuine bundle character, or None.

    Returns a list of exponent tuples (with multiplicity) when every
    coefficient is a positive integer, else None.
    """
    roots = []
    for m, c in sorted(a.items(), reverse=True):
        if c <= 0:
            return None
        roots.extend([m] * c)
    return roots


def schur_on_monomials(ms, lam):
    """Bialternant s_lam evaluated on distinct monomial roots ms.

    lam is any weakly decreasing integer vector of length len(ms); negative
    entries are fine (Laurent Schur).  Numerator and denominator are the
    alternants det(m_i^(lam_j + r - j)); the denominator is the Vandermonde
    product of the (m_i - m_j), divided out binomial by binomial.
    """
    r = len(ms)
    if len(lam) != r:
        raise EngineError("schur_on_monomials: weight length %d != root count %d"
                          % (len(lam), r))
    if any(lam[i] < lam[i + 1] for i in range(r - 1)):
        raise EngineError("schur_on_monomials: weight not weakly decreasing: %r" % (lam,))
    if r == 0:
        return {}
    nv = len(ms[0])
    if r == 1:
        return {tuple(e * lam[0] for e in ms[0]): 1}
    unit = _unit_root_form(ms)
    if unit is not None:
        idxs, sign = unit
        small = schur_classical(r, tuple(lam))
        out = {}
        for mono, c in small.items():
            e = [0] * nv
            for j, i in enumerate(idxs):
                e[i] = sign * mono[j]
            t = tuple(e)
            out[t] = out.get(t, 0) + c
        return out
    exps = [lam[j] + (r - 1 - j) for j in range(r)]
    num = {}
    for perm, sign in _signed_permutations(r):
        e = [0] * nv
        for i in range(r):
            k = exps[perm[i]]
            mi = ms[i]
            for v in range(nv):
                e[v] += k * mi[v]
        t = tuple(e)
        nc = num.get(t, 0) + sign
        if nc:
            num[t] = nc
        else:
            del num[t]
    for i in range(r):
        for j in range(i + 1, r):
            if ms[i] == ms[j]:
                raise EngineError("schur_on_monomials needs distinct roots")
            den = {ms[i]: 1}
            nc = den.get(ms[j], 0) - 1
            if nc:
                den[ms[j]] = nc
            else:
                del den[ms[j]]
            num = div_exact(num, den)
    return num


_PERM_CACHE = {}

def _signed_permutations(r: int):
    cached = _PERM_CACHE.get(r)
    if cached is None:
        cached = []
        for perm in permutations(range(r)):
            sign = 1
            for i in range(r):
                for j in range(i + 1, r):
                    if perm[i] > perm[j]:
                        sign = -sign
            cached.append((perm, sign))
        _PERM_CACHE[r] = cached
    return cached


def power_sum_list(a, upto: int):
    """[p_1, ..., p_upto] of the character a (Adams operations)."""
    return [adams(a, k) for k in range(1, upto + 1)]


def h_list(a, upto: int, nv: int):
    """Complete homogeneous h_0..h_upto of the character a, by Newton's identity."""
    ps = power_sum_list(a, upto)
    hs = [one(nv)]
    for k in range(1, upto + 1):
        acc = {}
        for i in range(1, k + 1):
            add_inplace(acc, mul(ps[i - 1], hs[k - i]))
        hk = {}
        for m, c in acc.items():
            if c % k:
                raise EngineError("Newton recurrence produced a non-integral h")
            hk[m] = c // k
        hs.append({m: c for m, c in hk.items() if c})
    return hs


def e_list(a, upto: int, nv: int):
    """Elementary symmetric e_0..e_upto of the character a."""
    ps = power_sum_list(a, upto)
    es = [one(nv)]
    for k in range(1, upto + 1):
        acc = {}
        sign = 1
        for i in range(1, k + 1):
            add_inplace(acc, mul(ps[i - 1], es[k - i]), sign)
            sign = -sign
        ek = {}
        for m, c in acc.items():
            if c % k:
                raise EngineError("Newton recurrence produced a non-integral e")
            ek[m] = c // k
        es.append({m: c for m, c in ek.items() if c})
    return es


def det_monomial(a, rank: int, nv: int):
    """Character of the determinant line: e_rank(a), checked to be one monomial."""
    roots = monomial_roots(a)
    if roots is not None and len(roots) == rank:
        e = [0] * nv
        for m in roots:
            for v in range(nv):
                e[v] += m[v]
        return tuple(e)
    top = e_list(a, rank, nv)[rank]
    if len(top) != 1:
        raise EngineError("determinant character is not a single monomial")
    (m, c), = top.items()
    if c != 1:
        raise EngineError("determinant character has coefficient %d" % c)
    return m


def schur_jacobi_trudi(a, lam, rank: int, nv: int):
    """s_lam applied to the rank-`rank` character a, via the h-determinant.

    Negative entries of lam are folded into a determinant twist first.
    """
    if len(lam) > rank:
        raise EngineError("weight longer than rank")
    lam = tuple(lam) + (0,) * (rank - len(lam))
    c = lam[-1]
    if c:
        lam0 = tuple(x - c for x in lam)
    else:
        lam0 = lam
    lam0 = tuple(x for x in lam0)  # weakly decreasing, last entry 0
    ell = len([x for x in lam0 if x > 0]) or 1
    lam0 = lam0[:ell]
    hs = h_list(a, max(lam0[0] + ell - 1, 0), nv)

    def entry(i, j):
        k = lam0[i] - (i + 1) + (j + 1)
        if k < 0:
            return None
        return hs[k] if k < len(hs) else None

    memo = {}

    def minor(i, cols):
        if i == ell:
            return one(nv)
        key = (i, cols)
        got = memo.get(key)
        if got is not None:
            return got
        acc = {}
        sign = 1
        for idx, j in enumerate(cols):
            ent = entry(i, j)
            if ent is not None and ent:
                sub_cols = cols[:idx] + cols[idx + 1:]
                add_inplace(acc, mul(ent, minor(i + 1, sub_cols)), sign)
            sign = -sign
        memo[key] = acc
        return acc

    out = minor(0, tuple(range(ell)))
    if c:
        dm = det_monomial(a, rank, nv)
        out = mul_monomial(out, tuple(e * c for e in dm))
    return out


def schur_apply(a, lam, rank: int, nv: int):
    """s_lam of a genuine character: fast bialternant when roots are distinct."""
    lam = tuple(lam)
    if len(lam) > rank:
        raise EngineError("weight longer than rank")
    lam = lam + (0,) * (rank - len(lam))
    if rank <= 7:
        roots = monomial_roots(a)
        if roots is not None and len(roots) == rank and len(set(roots)) == rank:
            return schur_on_monomials(roots, lam)
    return schur_jacobi_trudi(a, lam, rank, nv)
