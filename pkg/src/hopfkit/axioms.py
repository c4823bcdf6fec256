"""Exact axiom checks on sparse structure tensors.

Tensors are dicts keyed by index tuples with reduced ``fmpq_poly`` values.
A coassociativity check of Delta is literally an associativity check of the
transposed multiplication, so one routine serves both.
"""
from __future__ import annotations

from collections import defaultdict

import flint

from .exact_linalg.cyclotomic import field

_ONE = flint.fmpq_poly([1])


def group3(t: dict) -> dict:
    """{(i, j, k): c} -> {i: [(j, k, c), ...]}"""
    out = defaultdict(list)
    for (i, j, k), c in t.items():
        out[i].append((j, k, c))
    return out


def pair_index(t: dict) -> dict:
    """{(i, j, k): c} -> {(i, j): [(k, c), ...]}  (for products b_i b_j)"""
    out = defaultdict(list)
    for (i, j, k), c in t.items():
        out[(i, j)].append((k, c))
    return out


def _finish(acc: dict, m: int) -> dict:
    F = field(m)
    out = {}
    for key, v in acc.items():
        v = F.reduce(v)
        if not v.is_zero():
            out[key] = v
    return out


def coassoc_defect(delta: dict, n: int, m: int):
    """First (i, a, b, c) where (D x id)D(b_i) and (id x D)D(b_i) differ, else None."""
    g = group3(delta)
    for i in range(n):
        lhs: dict = defaultdict(flint.fmpq_poly)
        rhs: dict = defaultdict(flint.fmpq_poly)
        for j, c, x in g.get(i, ()):
            for a, b, y in g.get(j, ()):
                lhs[(a, b, c)] += x * y
        for a, k, x in g.get(i, ()):
            for b, c, y in g.get(k, ()):
                rhs[(a, b, c)] += x * y
        L, R = _finish(lhs, m), _finish(rhs, m)
        if L != R:
            bad = sorted(set(L) ^ set(R) | {k for k in L if k in R and L[k] != R[k]})
            return (i,) + bad[0]
    return None


def assoc_defect(mu: dict, n: int, m: int):
    """First (a, b, c, k): coefficient of b_k in (b_a b_b) b_c vs b_a (b_b b_c)."""
    # transpose: Delta'(b_k) = sum mu[i,j,k] b_i (x) b_j
    t = {(k, i, j): c for (i, j, k), c in mu.items()}
    bad = coassoc_defect(t, n, m)
    if bad is None:
        return None
    k, a, b, c = bad
    return (a, b, c, k)


def counit_defect(delta: dict, eps: list, n: int, m: int):
    """First i with (eps x id)D(b_i) != b_i or (id x eps)D(b_i) != b_i."""
    g = group3(delta)
    for i in range(n):
        left: dict = defaultdict(flint.fmpq_poly)
        right: dict = defaultdict(flint.fmpq_poly)
        for j, k, c in g.get(i, ()):
            if not eps[j].is_zero():
                left[k] += eps[j] * c
            if not eps[k].is_zero():
                right[j] += eps[k] * c
        target = {i: _ONE}
        if _finish(left, m) != target or _finish(right, m) != target:
            return i
    return None


def unit_defect(mu: dict, unit: list, n: int, m: int):
    """First i with 1*b_i != b_i or b_i*1 != b_i."""
    pi = pair_index(mu)
    live = [(a, u) for a, u in enumerate(unit) if not u.is_zero()]
    for i in range(n):
        left: dict = defaultdict(flint.fmpq_poly)
        right: dict = defaultdict(flint.fmpq_poly)
        for a, u in live:
            for k, c in pi.get((a, i), ()):
                left[k] += u * c
            for k, c in pi.get((i, a), ()):
                right[k] += u * c
        target = {i: _ONE}
        if _finish(left, m) != target or _finish(right, m) != target:
            return i
    return None


def product(pi: dict, x: dict, y: dict, m: int) -> dict:
    """Product of sparse vectors {index: raw} using pair index of mu."""
    acc: dict = defaultdict(flint.fmpq_poly)
    for a, u in x.items():
        for b, v in y.items():
            w = u * v
            for k, c in pi.get((a, b), ()):
                acc[k] += w * c
    return _finish(acc, m)


def bialgebra_defect(mu: dict, delta: dict, eps: list, unit: list, n: int, m: int):
    """Checks Delta(xy) = Delta(x)Delta(y), eps(xy) = eps(x)eps(y),
    Delta(1) = 1 (x) 1, eps(1) = 1.  Returns (kind, witness) or None."""
    F = field(m)
    g = group3(delta)
    pi = pair_index(mu)
    # Delta(1) and eps(1)
    u = {a: c for a, c in enumerate(unit) if not c.is_zero()}
    d1: dict = defaultdict(flint.fmpq_poly)
    e1 = flint.fmpq_poly()
    for a, c in u.items():
        e1 += c * eps[a]
        for j, k, x in g.get(a, ()):
            d1[(j, k)] += c * x
    uu = _finish({(a, b): c * e for a, c in u.items() for b, e in u.items()}, m)
    if _finish(d1, m) != uu:
        return ("delta_unit", ())
    if F.reduce(e1) != _ONE:
        return ("eps_unit", ())
    # eps multiplicative
    for (i, j), terms in pi.items():
        s = flint.fmpq_poly()
        for k, c in terms:
            s += c * eps[k]
        if F.reduce(s - eps[i] * eps[j]) != flint.fmpq_poly():
            return ("eps_mult", (i, j))
    for i in range(n):
        if not eps[i].is_zero():
            for j in range(n):
                if not eps[j].is_zero() and (i, j) not in pi:
                    return ("eps_mult", (i, j))
    # pairwise products in H (x) H, memoized
    memo: dict = {}

    def prod(a, c):
        key = (a, c)
        if key not in memo:
            memo[key] = pi.get(key, ())
        return memo[key]

    for i in range(n):
        Di = g.get(i, ())
        for j in range(n):
            lhs: dict = defaultdict(flint.fmpq_poly)
            for k, c in pi.get((i, j), ()):
                for e, f, x in g.get(k, ()):
                    lhs[(e, f)] += c * x
            rhs: dict = defaultdict(flint.fmpq_poly)
            Dj = g.get(j, ())
            for a, b, x in Di:
                for c, d, y in Dj:
                    P1 = prod(a, c)
                    if not P1:
                        continue
                    P2 = prod(b, d)
                    if not P2:
                        continue
                    xy = x * y
                    for e, s in P1:
                        xys = xy * s
                        for f, t in P2:
                            rhs[(e, f)] += xys * t
            if _finish(lhs, m) != _finish(rhs, m):
                return ("delta_mult", (i, j))
    return None


def antipode_defect(mu: dict, delta: dict, eps: list, unit: list, S: dict, n: int, m: int):
    """S given as {(a, j): coeff} meaning S(b_j) = sum_a coeff b_a.
    Returns ('left'|'right', i) for the first failure of
    m(S x id)D(b_i) = eps(b_i) 1 = m(id x S)D(b_i)."""
    g = group3(delta)
    pi = pair_index(mu)
    Scol: dict = defaultdict(list)
    for (a, j), c in S.items():
        Scol[j].append((a, c))
    for i in range(n):
        target = _finish({a: eps[i] * u for a, u in enumerate(unit) if not u.is_zero()}, m)
        left: dict = defaultdict(flint.fmpq_poly)
        right: dict = defaultdict(flint.fmpq_poly)
        for j, k, x in g.get(i, ()):
            for a, s in Scol.get(j, ()):
                w = x * s
                for r, c in pi.get((a, k), ()):
                    left[r] += w * c
            for a, s in Scol.get(k, ()):
                w = x * s
                for r, c in pi.get((j, a), ()):
                    right[r] += w * c
        if _finish(left, m) != target:
            return ("left", i)
        if _finish(right, m) != target:
            return ("right", i)
    return None
