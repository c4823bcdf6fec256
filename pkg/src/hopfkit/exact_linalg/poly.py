"""Univariate polynomials over Q(zeta_m): gcd, norms, factoring, roots.

Factoring follows Trager: shift until the norm down to Q is squarefree,
factor the norm with flint, and pull each factor back with a gcd.
"""
from __future__ import annotations

from typing import Sequence

import flint

from ..errors import NotFiniteOrder, NotSplit
from .cyclotomic import CycNumber, _lcm, field, root_of_unity_order, roots_of_unity
from .matrix import ExactMatrix, hstack, kernel, rref

Raw = flint.fmpq_poly
_ZERO = flint.fmpq_poly([])
_ONE = flint.fmpq_poly([1])


class KPoly:
    """Polynomial sum c_i t^i with c_i in Q(zeta_m), coefficients low to high."""

    __slots__ = ("m", "c")

    def __init__(self, coeffs: Sequence, m: int):
        F = field(m)
        cs = [c.raw if isinstance(c, CycNumber) else (c if isinstance(c, Raw) else flint.fmpq_poly([c]))
              for c in coeffs]
        cs = [F.reduce(c) for c in cs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.m = m
        self.c = cs

    @classmethod
    def from_rational(cls, p: flint.fmpq_poly, m: int) -> "KPoly":
        return cls([flint.fmpq_poly([a]) for a in p.coeffs()], m)

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def lead(self) -> Raw:
        return self.c[-1]

    def coeffs(self) -> list[CycNumber]:
        return [CycNumber._raw(self.m, x) for x in self.c]

    def __eq__(self, other):
        return isinstance(other, KPoly) and self.m == other.m and self.c == other.c

    def __repr__(self):
        return "KPoly(" + ", ".join(str(x) for x in self.coeffs()) + f"; m={self.m})"

    def __add__(self, o: "KPoly") -> "KPoly":
        n = max(len(self.c), len(o.c))
        a = self.c + [_ZERO] * (n - len(self.c))
        b = o.c + [_ZERO] * (n - len(o.c))
        return KPoly([x + y for x, y in zip(a, b)], self.m)

    def __neg__(self) -> "KPoly":
        return KPoly([-x for x in self.c], self.m)

    def __sub__(self, o: "KPoly") -> "KPoly":
        return self + (-o)

    def __mul__(self, o: "KPoly") -> "KPoly":
        if self.is_zero() or o.is_zero():
            return KPoly([], self.m)
        F = field(self.m)
        out = [_ZERO] * (len(self.c) + len(o.c) - 1)
        for i, x in enumerate(self.c):
            if x.is_zero():
                continue
            for j, y in enumerate(o.c):
                if not y.is_zero():
                    out[i + j] += x * y
        return KPoly([F.reduce(z) for z in out], self.m)

    def scale(self, s: Raw) -> "KPoly":
        F = field(self.m)
        return KPoly([F.reduce(x * s) for x in self.c], self.m)

    def monic(self) -> "KPoly":
        if self.is_zero():
            return self
        return self.scale(field(self.m).inverse(self.lead()))

    def divmod(self, d: "KPoly") -> tuple["KPoly", "KPoly"]:
        F = field(self.m)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        inv = F.inverse(d.lead())
        q = [_ZERO] * max(0, len(r) - len(d.c) + 1)
        dd = len(d.c) - 1
        while len(r) - 1 >= dd and r:
            k = len(r) - 1 - dd
            coef = F.reduce(r[-1] * inv)
            q[k] = coef
            for i, y in enumerate(d.c):
                r[k + i] = F.reduce(r[k + i] - coef * y)
            while r and r[-1].is_zero():
                r.pop()
        return KPoly(q, self.m), KPoly(r, self.m)

    def __mod__(self, d: "KPoly") -> "KPoly":
        return self.divmod(d)[1]

    def __floordiv__(self, d: "KPoly") -> "KPoly":
        return self.divmod(d)[0]

    def derivative(self) -> "KPoly":
        return KPoly([x * i for i, x in enumerate(self.c)][1:], self.m)

    def __call__(self, x: Raw) -> Raw:
        F = field(self.m)
        acc = _ZERO
        for c in reversed(self.c):
            acc = F.reduce(acc * x + c)
        return acc

    def shift(self, a: Raw) -> "KPoly":
        """f(t + a)."""
        out = KPoly([], self.m)
        lin = KPoly([a, _ONE], self.m)
        for c in reversed(self.c):
            out = out * lin + KPoly([c], self.m)
        return out

    def galois(self, k: int) -> "KPoly":
        F = field(self.m)
        return KPoly([F.galois(x, k) for x in self.c], self.m)

    def is_rational(self) -> bool:
        return all(x.degree() <= 0 for x in self.c)

    def to_rational(self) -> flint.fmpq_poly:
        return flint.fmpq_poly([(x.coeffs()[0] if not x.is_zero() else 0) for x in self.c])


def kgcd(a: KPoly, b: KPoly) -> KPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def norm(f: KPoly) -> flint.fmpq_poly:
    """N_{K/Q}(f) = product of the Galois conjugates; lies in Q[t]."""
    F = field(f.m)
    if F.phi == 1:
        return f.to_rational()
    out = KPoly([_ONE], f.m)
    for k in F.units:
        out = out * f.galois(k)
    if not out.is_rational():
        raise ArithmeticError("norm is not rational")  # would be a bug
    return out.to_rational()


def squarefree_part(f: KPoly) -> KPoly:
    g = kgcd(f, f.derivative())
    return (f // g).monic() if g.degree > 0 else f.monic()


def factor_squarefree(f: KPoly) -> list[KPoly]:
    """Monic irreducible factors over Q(zeta_m) of a squarefree f."""
    f = f.monic()
    if f.degree <= 0:
        return []
    if f.degree == 1:
        return [f]
    F = field(f.m)
    if F.phi == 1:
        _, facs = f.to_rational().factor()
        return [KPoly.from_rational(g, f.m).monic() for g, _ in facs]
    # cheap pass: linear factors at roots of unity
    lin = []
    for r in roots_of_unity(f.m):
        rr = r.embed(f.m).raw if r.m != f.m else r.raw
        if f.degree > 0 and f(rr).is_zero():
            h = KPoly([-rr, _ONE], f.m)
            lin.append(h)
            f = f // h
    if lin:
        return sorted(lin + factor_squarefree(f), key=_poly_key)
    z = F.zeta_power(1)
    for s in range(0, 64):
        shift = F.reduce(z * (-s)) if s else _ZERO
        g = f.shift(shift) if s else f          # g(t) = f(t - s z)
        N = norm(g)
        if N.gcd(N.derivative()).degree() > 0:
            continue
        _, facs = N.factor()
        out = []
        back = F.reduce(z * s)
        for h, _ in facs:
            k = kgcd(g, KPoly.from_rational(h, f.m))
            if k.degree > 0:
                out.append((k.shift(back) if s else k).monic())  # k(t + s z)
        return sorted(out, key=_poly_key)
    raise ArithmeticError("no squarefree shift found")  # pragma: no cover


def factor(f: KPoly) -> list[tuple[KPoly, int]]:
    """Irreducible factorization with multiplicities."""
    out = []
    for g in factor_squarefree(squarefree_part(f)):
        k, rest = 0, f
        while True:
            q, r = rest.divmod(g)
            if not r.is_zero():
                break
            rest, k = q, k + 1
        out.append((g, k))
    return out


def _poly_key(p: KPoly):
    return (p.degree, tuple(CycNumber._raw(p.m, x).sort_key() for x in p.c))


def roots_in_field(f: KPoly) -> list[CycNumber]:
    """Distinct roots of f lying in Q(zeta_m), sorted by coefficient order."""
    if f.degree <= 0:
        return []
    g = squarefree_part(f)
    found: list[CycNumber] = []
    # cheap pass: roots of unity
    for r in roots_of_unity(f.m):
        rr = r.embed(f.m).raw if r.m != f.m else r.raw
        if g(rr).is_zero():
            found.append(CycNumber._raw(f.m, rr))
            g = g // KPoly([-rr, _ONE], f.m)
    if g.degree > 0:
        for h in factor_squarefree(g):
            if h.degree == 1:
                found.append(CycNumber._raw(f.m, -h.c[0]))
    return sorted(found, key=lambda c: c.sort_key())


# ------------------------------------------------------------ minimal polynomials

def first_dependency(cols: ExactMatrix) -> KPoly | None:
    """If columns v_0..v_k are dependent, the monic relation of least degree."""
    R, piv = rref(cols)
    d = next((j for j in range(cols.cols) if j >= len(piv) or piv[j] != j), None)
    if d is None:
        return None
    coeffs = [-R.raw(i, d) for i in range(d)] + [_ONE]
    return KPoly(coeffs, cols.m)


def minimal_polynomial(M: ExactMatrix) -> KPoly:
    """Minimal polynomial of a square matrix."""
    n = M.rows
    vecs = [ExactMatrix.identity(n, M.m).reshape(n * n, 1)]
    P = ExactMatrix.identity(n, M.m)
    for k in range(1, n + 1):
        P = P @ M
        vecs.append(P.reshape(n * n, 1))
        if k in (1, 2, 4, 8, 16) or k == n or k % 32 == 0:
            dep = first_dependency(hstack(vecs))
            if dep is not None:
                return dep
    dep = first_dependency(hstack(vecs))
    assert dep is not None
    return dep


# ------------------------------------------------------------ eigen data

def finite_order(M: ExactMatrix, cap: int | None = None) -> tuple[int, CycNumber]:
    """Least n >= 1 with M^n = c Id, and c.  NotFiniteOrder past the cap."""
    n = M.rows
    cap = 4 * n * n if cap is None else cap
    P = M
    for k in range(1, max(cap, 1) + 1):
        c = P.scalar_value()
        if c is not None and not c.is_zero():
            return k, c
        P = P @ M
    raise NotFiniteOrder(f"no n <= {cap} with M^n scalar")


def finite_order_eigendecomposition(M: ExactMatrix, cap: int | None = None):
    """[(eigenvalue, eigenspace)] for M with M^n = c Id, n <= cap."""
    if M.rows != M.cols:
        raise ValueError("square matrix required")
    n = M.rows
    if n == 0:
        return []
    k, c = finite_order(M, cap)
    mu = minimal_polynomial(M)
    roots = roots_in_field(mu)
    if len(roots) < mu.degree:
        # lambda^k = c; when c has order r every eigenvalue is a (k r)-th root of unity
        r = root_of_unity_order(c)
        hint = None if r is None else _lcm(M.m, k * r)
        raise NotSplit(f"eigenvalues not in Q(zeta_{M.m})", block_dim=n, suggested_order=hint)
    out = []
    for lam in roots:
        E = kernel(M - ExactMatrix.scalar(n, lam, M.m))
        out.append((lam, E))
    assert sum(E.dim for _, E in out) == n
    return out
