"""Finite-dimensional associative algebras given by a multiplication matrix.

An algebra of dimension d is stored as ``mulmat`` (d x d^2) with
x*y = mulmat @ kron(x, y) on column vectors.  Used for the dual algebra of
a coalgebra and for the dual of its coradical.
"""
from __future__ import annotations

import random
from typing import Sequence

from .errors import InternalMismatch, NotSplit
from .exact_linalg.cyclotomic import CycNumber, field
from .exact_linalg.matrix import (ExactMatrix, SubspaceBasis, hstack, inverse, kernel, kron,
                                  solve, vstack)
from .exact_linalg.poly import KPoly, factor_squarefree, first_dependency, squarefree_part

MAX_SPLIT_TRIES = 400


class Algebra:
    def __init__(self, mulmat: ExactMatrix, unit: ExactMatrix):
        self.mulmat = mulmat
        self.unit = unit
        self.dim = mulmat.rows
        self.m = mulmat.m
        self._I = ExactMatrix.identity(self.dim, self.m)
        self._lb: list | None = None
        self._ls: ExactMatrix | None = None
        self._rs: ExactMatrix | None = None

    def mul(self, x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
        return self.mulmat @ kron(x, y)

    def _lstack(self) -> ExactMatrix:
        """(d^2 x d) matrix T with L_x = (T @ x).reshape(d, d)."""
        if self._ls is None:
            d = self.dim
            arrs = []
            for a in self.mulmat.components_np():
                arrs.append(None if a is None else a.reshape(d, d, d).transpose(0, 2, 1).reshape(d * d, d))
            self._ls = ExactMatrix.from_components_np(arrs, self.m, (d * d, d))
        return self._ls

    def lmul(self, x: ExactMatrix) -> ExactMatrix:
        d = self.dim
        return (self._lstack() @ x).reshape(d, d)

    def rmul(self, x: ExactMatrix) -> ExactMatrix:
        d = self.dim
        if self._rs is None:
            self._rs = self.mulmat.reshape(d * d, d)
        return (self._rs @ x).reshape(d, d)

    def basis_lmuls(self) -> list[ExactMatrix]:
        if self._lb is None:
            d = self.dim
            self._lb = [self.mulmat.select(None, range(i * d, (i + 1) * d)) for i in range(d)]
        return self._lb

    def basis_vector(self, i: int) -> ExactMatrix:
        return ExactMatrix.from_raw_dict(self.dim, 1, {(i, 0): 1}, self.m)

    # ------------------------------------------------------------------
    def trace_vector(self) -> ExactMatrix:
        """tau_k = tr(L_{b_k}) as a 1 x d row."""
        d = self.dim
        ent = {}
        for k, L in enumerate(self.basis_lmuls()):
            acc = None
            for i in range(d):
                v = L.raw(i, i)
                acc = v if acc is None else acc + v
            ent[(0, k)] = acc
        return ExactMatrix.from_raw_dict(1, d, ent, self.m)

    def radical(self) -> SubspaceBasis:
        """Jacobson radical by the char-0 trace criterion."""
        d = self.dim
        G = (self.trace_vector() @ self.mulmat).reshape(d, d)
        return kernel(G.T)

    def center(self) -> SubspaceBasis:
        blocks = []
        for j, L in enumerate(self.basis_lmuls()):
            R = self.rmul(self.basis_vector(j))
            blocks.append(L - R)
        return kernel(vstack(blocks))

    # ------------------------------------------------------------------
    def powers(self, x: ExactMatrix, e: ExactMatrix, k: int) -> list[ExactMatrix]:
        out = [e]
        Lx = self.lmul(x)
        for _ in range(k):
            out.append(Lx @ out[-1])
        return out

    def minpoly(self, x: ExactMatrix, e: ExactMatrix | None = None) -> tuple[KPoly, list[ExactMatrix]]:
        """Minimal polynomial of x inside the corner with unit e (x = e x e)."""
        e = self.unit if e is None else e
        Lx = self.lmul(x)
        pw = [e]
        step = 4
        while True:
            for _ in range(step):
                pw.append(Lx @ pw[-1])
            dep = first_dependency(hstack(pw))
            if dep is not None:
                return dep, pw[:dep.degree + 1]
            if len(pw) > self.dim + 1:
                raise InternalMismatch("no polynomial relation among powers")
            step *= 2

    def evaluate(self, p: KPoly, powers: Sequence[ExactMatrix]) -> ExactMatrix:
        acc = ExactMatrix.zeros(self.dim, 1, self.m)
        for c, w in zip(p.coeffs(), powers):
            if not c.is_zero():
                acc = acc + w.scale(c)
        return acc

    def span(self, cols: Sequence[ExactMatrix]) -> SubspaceBasis:
        if not cols:
            return SubspaceBasis.zero(self.dim, self.m)
        return SubspaceBasis.span(hstack(list(cols)).T, self.dim)


def _cols(S: SubspaceBasis) -> list[ExactMatrix]:
    M = S.matrix
    return [M.select([i], None).T for i in range(S.dim)]


def kxgcd(a: KPoly, b: KPoly):
    """(g, s, t) with s a + t b = g monic gcd."""
    m = a.m
    r0, r1 = a, b
    s0, s1 = KPoly([1], m), KPoly([], m)
    t0, t1 = KPoly([], m), KPoly([1], m)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = field(m).inverse(r0.lead())
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def crt_idempotent_polys(mu: KPoly, factors: Sequence[KPoly]) -> list[KPoly]:
    out = []
    for i, f in enumerate(factors):
        P = mu // f
        g, s, _ = kxgcd(P % f, f)
        out.append((s * P) % mu)
    return out


# ---------------------------------------------------------------- splitting

def central_idempotents(A: Algebra, Z: SubspaceBasis) -> list[tuple[ExactMatrix, bool]]:
    """Primitive idempotents of the commutative semisimple algebra Z.

    Returns (idempotent, split) where split means e Z = K e.  A component
    whose residue field is bigger than K is returned once with split False
    (it may still be a product of several such fields).
    """
    Zmat = Z.matrix.T
    done: list[tuple[ExactMatrix, bool]] = []
    stack = [A.unit]
    rng = random.Random(1)
    while stack:
        e = stack.pop()
        eZ = SubspaceBasis.span((A.lmul(e) @ Zmat).T, A.dim)
        if eZ.dim == 1:
            done.append((e, True))
            continue
        ez = _cols(eZ)
        split = None
        for k, w in enumerate(_center_candidates(ez, rng)):
            if k >= MAX_SPLIT_TRIES:
                break
            mu, pw = A.minpoly(w, e)
            if mu.degree <= 1:
                continue
            facs = factor_squarefree(mu)
            if len(facs) >= 2:
                split = [A.evaluate(p, pw) for p in crt_idempotent_polys(mu, facs)]
                if mu.degree == eZ.dim:
                    # w generates eZ: each factor is one field component
                    done.extend((x, f.degree == 1) for x, f in zip(split, facs))
                    split = []
                break
            if mu.degree == eZ.dim:   # eZ is a field K[t]/(mu)
                break
        if split is None:
            done.append((e, False))
        else:
            stack.extend(split)
    return sorted(done, key=lambda t: _vec_key(t[0]))


def _center_candidates(basis, rng):
    yield from basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            yield basis[i] + basis[j]
    while True:
        acc = basis[0].scale(0)
        for b in basis:
            c = rng.randint(-3, 3)
            if c:
                acc = acc + b.scale(c)
        yield acc


def component_minpoly(A: Algebra, e: ExactMatrix, Z: SubspaceBasis) -> KPoly | None:
    """Minimal polynomial of a generator of the field eZ (None if none found)."""
    ez = _cols(A.span([A.mul(e, z) for z in _cols(Z)]))
    rng = random.Random(2)
    for k, w in enumerate(_center_candidates(ez, rng)):
        if k >= MAX_SPLIT_TRIES:
            return None
        mu, _ = A.minpoly(w, e)
        if mu.degree == len(ez):
            return mu
    return None


def splitting_order(f: KPoly, limit: int) -> int | None:
    """Least multiple m' of f.m, m' <= limit, over which f splits into linear factors."""
    from .exact_linalg.cyclotomic import embed_poly
    from .exact_linalg.poly import roots_in_field
    m = f.m
    for mm in range(2 * m, limit + 1, m):
        g = KPoly([embed_poly(c, m, mm) for c in f.c], mm)
        if len(roots_in_field(g)) == f.degree:
            return mm
    return None


def _vec_key(v: ExactMatrix):
    return tuple(v[i, 0].sort_key() for i in range(v.rows))


def _zero_divisor(A: Algebra, corner: SubspaceBasis, f: ExactMatrix, seed: int = 0):
    """A nonzero non-invertible element of the corner algebra with unit f."""
    basis = _cols(corner)
    rng = random.Random(seed)

    def candidates():
        yield from basis
        for i in range(len(basis)):
            for j in range(len(basis)):
                yield A.mul(basis[i], basis[j])
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                yield basis[i] + basis[j]
        z = CycNumber.zeta(A.m)
        while True:
            acc = ExactMatrix.zeros(A.dim, 1, A.m)
            for b in basis:
                c = rng.randint(-2, 2) + (z * rng.randint(-1, 1) if field(A.m).phi > 1 else 0)
                if c != 0:
                    acc = acc + b.scale(c)
            yield acc

    for k, w in enumerate(candidates()):
        if k >= MAX_SPLIT_TRIES:
            return None
        if w.is_zero():
            continue
        mu, pw = A.minpoly(w, f)
        if mu.degree <= 1:
            continue
        sq = squarefree_part(mu)
        if sq.degree < mu.degree:
            return A.evaluate(sq, pw)
        facs = factor_squarefree(mu)
        if len(facs) >= 2:
            return A.evaluate(facs[0], pw)
    return None


def left_ideal_idempotent(A: Algebra, L: SubspaceBasis) -> ExactMatrix:
    """An idempotent e in L with l e = l for every l in L."""
    ls = _cols(L)
    # unknowns c_j with e = sum c_j l_j ; equations l_i e = l_i
    blocks = []
    for li in ls:
        Li = A.lmul(li)
        blocks.append(Li @ hstack(ls))
    M = vstack(blocks)
    rhs = vstack(ls)
    c = solve(M, rhs)
    if c is None:
        raise InternalMismatch("left ideal has no right identity")
    return hstack(ls) @ c


def primitive_idempotent(A: Algebra, block_basis: SubspaceBasis, e: ExactMatrix) -> ExactMatrix:
    """Primitive idempotent inside the simple block with central idempotent e."""
    f = e
    bb = _cols(block_basis)
    while True:
        corner = A.span([A.mul(A.mul(f, b), f) for b in bb])
        if corner.dim == 1:
            return f
        zd = _zero_divisor(A, corner, f)
        if zd is None:
            raise NotSplit("simple block does not split over Q(zeta_%d)" % A.m,
                           block_dim=block_basis.dim)
        L = A.span([A.mul(c, zd) for c in _cols(corner)])
        f = left_ideal_idempotent(A, L)


def matrix_units(A: Algebra, block_basis: SubspaceBasis, e: ExactMatrix) -> list[list[ExactMatrix]]:
    """Matrix units E_ij (E_ij E_kl = delta_jk E_il) spanning the block."""
    n2 = block_basis.dim
    d = round(n2 ** 0.5)
    if d * d != n2:
        raise NotSplit(f"block of dimension {n2} is not a full matrix algebra", block_dim=n2)
    if d == 1:
        return [[e]]
    f = primitive_idempotent(A, block_basis, e)
    bb = _cols(block_basis)
    V = A.span([A.mul(b, f) for b in bb])
    if V.dim != d:
        raise NotSplit("primitive idempotent does not give a simple module", block_dim=n2)
    vcols = _cols(V)
    Vmat = hstack(vcols)
    cols = []
    for b in bb:
        img = A.lmul(b) @ Vmat                  # d columns, each in V
        rho = V.coordinates(img)                 # d x d matrix of L_b on V
        cols.append(rho.reshape(d * d, 1))
    R = hstack(cols)                              # (d^2) x (d^2)
    Rinv = inverse(R)
    B = hstack(bb)
    units = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            units[i][j] = B @ Rinv.select(None, [i * d + j])
    return units


# ---------------------------------------------------------------- lifting

def newton_idempotent(A: Algebra, a: ExactMatrix, max_steps: int = 64) -> ExactMatrix:
    """Lift an idempotent modulo the radical: e <- 3e^2 - 2e^3."""
    e = a
    for _ in range(max_steps):
        e2 = A.mul(e, e)
        if e2 == e:
            return e
        e3 = A.mul(e2, e)
        e = e2.scale(3) - e3.scale(2)
    raise InternalMismatch("idempotent lifting did not converge")


def corner_inverse(A: Algebra, w: ExactMatrix, unit: ExactMatrix, max_terms: int = 256) -> ExactMatrix:
    """Inverse of w = unit + n (n nilpotent) inside the corner with that unit."""
    n = w - unit
    acc = unit
    term = unit
    for _ in range(max_terms):
        term = A.mul(term, n).scale(-1)
        if term.is_zero():
            return acc
        acc = acc + term
    raise InternalMismatch("corner element is not unipotent")


def lift_matrix_units(A: Algebra, blocks: Sequence[list[list[ExactMatrix]]], lift0) -> list[list[list[ExactMatrix]]]:
    """Lift complete matrix unit systems of A/J (given in quotient coordinates)
    to A.  `lift0` maps a quotient element to some preimage in A."""
    diag = [(t, i) for t, U in enumerate(blocks) for i in range(len(U))]
    lifted_diag: dict = {}
    u = A.unit
    for k, (t, i) in enumerate(diag):
        if k == len(diag) - 1:
            lifted_diag[(t, i)] = u
            break
        a = lift0(blocks[t][i][i])
        a = A.mul(A.mul(u, a), u)
        e = newton_idempotent(A, a)
        lifted_diag[(t, i)] = e
        u = u - e
    out = []
    for t, U in enumerate(blocks):
        d = len(U)
        e = [lifted_diag[(t, i)] for i in range(d)]
        up = [e[0]] + [None] * (d - 1)     # u_1j
        dn = [e[0]] + [None] * (d - 1)     # v_j1
        for j in range(1, d):
            uj = A.mul(A.mul(e[0], lift0(U[0][j])), e[j])
            vj = A.mul(A.mul(e[j], lift0(U[j][0])), e[0])
            w = A.mul(uj, vj)
            vj = A.mul(vj, corner_inverse(A, w, e[0]))
            up[j], dn[j] = uj, vj
        out.append([[A.mul(dn[i], up[j]) if (i or j) else e[0] for j in range(d)] for i in range(d)])
    return out
