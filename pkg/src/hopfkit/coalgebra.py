"""Coalgebras given by structure constants, and their coradical theory.

Elements are column vectors (``ExactMatrix`` of shape dim x 1).  A tensor
z in C (x) C is stored as a dim x dim matrix Z with z = sum Z[j, k] b_j (x) b_k,
so (f (x) g) z corresponds to f Z g^T.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Mapping, Sequence

import flint

from . import axioms
from .assoc import (Algebra, _cols, central_idempotents, component_minpoly, lift_matrix_units,
                    matrix_units, splitting_order)
from .errors import (CounitFails, DimensionMismatch, InternalMismatch, NotCoalgebraMap,
                     NotCoassociative, NotGrouplike, NotSplit, NotSubcoalgebra)
from .exact_linalg.cyclotomic import CycNumber
from .exact_linalg.matrix import (ExactMatrix, SubspaceBasis, hstack, inverse, kernel, raw_of,
                                  vstack)

_ONE = flint.fmpq_poly([1])


# ---------------------------------------------------------------- types

class CoalgebraSC:
    """Validated coalgebra with basis b_0..b_{dim-1} over Q(zeta_m).

    ``delta`` maps (i, j, k) to the coefficient of b_j (x) b_k in Delta(b_i);
    values are reduced ``fmpq_poly`` (the raw form of CycNumber).
    """

    def __init__(self, dim: int, m: int, delta: Mapping, eps: Sequence, labels: Sequence[str]):
        self.dim = dim
        self.m = m
        self.delta = dict(delta)
        self.eps = list(eps)
        self.labels = tuple(labels)

    @property
    def field_order(self) -> int:
        return self.m

    def __repr__(self):
        return f"CoalgebraSC(dim={self.dim}, m={self.m})"

    # -------------------------------------------------------- matrices
    @cached_property
    def delta_matrix(self) -> ExactMatrix:
        """dim^2 x dim matrix D with D[j*dim + k, i] = Delta_i^{jk}."""
        n = self.dim
        return ExactMatrix.from_raw_dict(n * n, n, {(j * n + k, i): c for (i, j, k), c in self.delta.items()},
                                         self.m)

    @cached_property
    def _P(self) -> list[ExactMatrix]:
        n = self.dim
        ent: list[dict] = [{} for _ in range(n)]
        for (i, j, k), c in self.delta.items():
            ent[i][(j, k)] = c
        return [ExactMatrix.from_raw_dict(n, n, e, self.m) for e in ent]

    def P(self, i: int) -> ExactMatrix:
        """Delta(b_i) as a dim x dim matrix."""
        return self._P[i]

    def comul(self, x: ExactMatrix) -> ExactMatrix:
        """Delta(x) as a dim x dim matrix."""
        n = self.dim
        return (self.delta_matrix @ x).reshape(n, n)

    @cached_property
    def counit_row(self) -> ExactMatrix:
        return ExactMatrix.from_raw_dict(1, self.dim, {(0, i): c for i, c in enumerate(self.eps)}, self.m)

    def counit(self, x: ExactMatrix) -> CycNumber:
        return (self.counit_row @ x)[0, 0]

    def basis_vector(self, i: int) -> ExactMatrix:
        return ExactMatrix.from_raw_dict(self.dim, 1, {(i, 0): 1}, self.m)

    def element(self, coeffs: Mapping) -> ExactMatrix:
        """Vector from {label or index: scalar}."""
        ent = {}
        for key, c in coeffs.items():
            i = self.labels.index(key) if isinstance(key, str) else key
            ent[(i, 0)] = c
        return ExactMatrix.from_raw_dict(self.dim, 1, ent, self.m)

    def is_grouplike(self, g: ExactMatrix) -> bool:
        if g.is_zero():
            return False
        return self.comul(g) == g @ g.T and self.counit(g) == 1

    def is_subcoalgebra(self, W: SubspaceBasis) -> bool:
        if W.dim == 0:
            return True
        Q = W.quotient_map()
        for w in _cols(W):
            Z = self.comul(w)
            if not (Q @ Z).is_zero() or not (Z @ Q.T).is_zero():
                return False
        return True

    def embed(self, target: int) -> "CoalgebraSC":
        """Same coalgebra over the larger field Q(zeta_target)."""
        from .exact_linalg.cyclotomic import embed_poly
        if target == self.m:
            return self
        d = {k: embed_poly(v, self.m, target) for k, v in self.delta.items()}
        e = [embed_poly(v, self.m, target) for v in self.eps]
        return CoalgebraSC(self.dim, target, d, e, self.labels)

    # -------------------------------------------------------- cached analyses
    @cached_property
    def dual(self) -> Algebra:
        return Algebra(self.delta_matrix.T, self.counit_row.T)

    @cached_property
    def _coradical(self) -> SubspaceBasis:
        J = self.dual.radical()
        if J.dim == 0:
            return SubspaceBasis.full(self.dim, self.m)
        return kernel(J.matrix)

    @cached_property
    def _decomposition(self) -> "_Decomposition":
        return _decompose(self)


@dataclass
class SimpleBlock:
    """A simple subcoalgebra D_tau of the coradical."""
    index: int
    comodule_dim: int
    basis: SubspaceBasis
    multiplicative_matrix: list | None = None
    label: str = ""
    # matrix units of the dual block, in coordinates of the dual of D_0
    units: list | None = dc_field(default=None, repr=False)

    @property
    def split(self) -> bool:
        return self.multiplicative_matrix is not None

    @property
    def dim(self) -> int:
        return self.basis.dim

    def grouplike(self) -> ExactMatrix | None:
        if self.comodule_dim == 1 and self.split:
            return self.multiplicative_matrix[0][0]
        return None


@dataclass
class Filtration:
    stages: list
    layers: list = dc_field(default_factory=list)
    projection: ExactMatrix | None = None
    isotypic: dict = dc_field(default_factory=dict)
    nondegenerate: dict = dc_field(default_factory=dict)

    @property
    def stage_dims(self) -> tuple:
        return tuple(S.dim for S in self.stages)

    @property
    def layer_dims(self) -> tuple:
        return tuple(P.dim for P in self.layers)


@dataclass(frozen=True)
class IsotypicKey:
    left: int
    right: int


@dataclass
class _Decomposition:
    D0: SubspaceBasis
    S: Algebra                # dual of D_0, coordinates dual to the RREF basis of D_0
    blocks: list


# ---------------------------------------------------------------- construction

def _raw_tensor(delta, n: int | None, m: int) -> tuple[dict, int]:
    if isinstance(delta, Mapping):
        out = {}
        for key, v in delta.items():
            p = raw_of(v, m)
            if not p.is_zero():
                out[tuple(key)] = p
        if n is None:
            n = 1 + max((max(k) for k in out), default=-1)
        return out, n
    arr = list(delta)
    n = len(arr)
    out = {}
    for i in range(n):
        if len(arr[i]) != n or any(len(r) != n for r in arr[i]):
            raise DimensionMismatch("delta must be dim x dim x dim")
        for j in range(n):
            for k in range(n):
                p = raw_of(arr[i][j][k], m)
                if not p.is_zero():
                    out[(i, j, k)] = p
    return out, n


def new_coalgebra(delta, eps: Sequence, labels: Sequence[str] | None = None, m: int = 1) -> CoalgebraSC:
    """Validate and build a coalgebra.

    `delta` is a nested dim x dim x dim array or a sparse dict {(i, j, k): c}.
    """
    n = len(eps)
    d, n2 = _raw_tensor(delta, n, m)
    if n2 != n or any(not (0 <= x < n) for key in d for x in key):
        raise DimensionMismatch("delta and eps sizes differ")
    e = [raw_of(x, m) for x in eps]
    labels = tuple(labels) if labels is not None else tuple(f"b{i}" for i in range(n))
    if len(labels) != n:
        raise DimensionMismatch("labels length != dim")
    bad = axioms.coassoc_defect(d, n, m)
    if bad is not None:
        raise NotCoassociative(f"coassociativity fails on b_{bad[0]} at coefficient {bad[1:]}", witness=bad)
    bad = axioms.counit_defect(d, e, n, m)
    if bad is not None:
        raise CounitFails(f"counit law fails on b_{bad}", witness=bad)
    return CoalgebraSC(n, m, d, e, labels)


def group_coalgebra(k: int, m: int = 1, labels=None) -> CoalgebraSC:
    return new_coalgebra({(i, i, i): 1 for i in range(k)}, [1] * k, labels or [f"g{i}" for i in range(k)], m)


def comatrix_coalgebra(d: int, m: int = 1) -> CoalgebraSC:
    """M*(d): basis e_ij, Delta(e_ij) = sum_l e_il (x) e_lj."""
    idx = {(i, j): i * d + j for i in range(d) for j in range(d)}
    delta = {}
    for (i, j), a in idx.items():
        for l in range(d):
            delta[(a, idx[(i, l)], idx[(l, j)])] = 1
    eps = [1 if i == j else 0 for (i, j) in idx]
    return new_coalgebra(delta, eps, [f"e{i + 1}{j + 1}" for (i, j) in idx], m)


def direct_sum(A: CoalgebraSC, B: CoalgebraSC) -> CoalgebraSC:
    m = A.m * B.m // _gcd(A.m, B.m)
    A, B = A.embed(m), B.embed(m)
    n = A.dim
    delta = dict(A.delta)
    delta.update({(i + n, j + n, k + n): c for (i, j, k), c in B.delta.items()})
    return CoalgebraSC(n + B.dim, m, delta, A.eps + B.eps, A.labels + B.labels)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def restrict(C: CoalgebraSC, W: SubspaceBasis, labels=None) -> CoalgebraSC:
    """The subcoalgebra W, in the basis of RREF rows of W."""
    if not C.is_subcoalgebra(W):
        raise NotSubcoalgebra("subspace is not a subcoalgebra")
    n, r = C.dim, W.dim
    Y = C.delta_matrix @ W.matrix.T               # n^2 x r
    rows = [pb * n + pc for pb in W.pivots for pc in W.pivots]
    sub = Y.select(rows, None).nonzero_raw()
    delta = {}
    for (row, a), c in sub.items():
        b, cc = divmod(row, r)
        delta[(a, b, cc)] = c
    eps = [(C.counit_row @ w)[0, 0].raw for w in _cols(W)]
    labels = labels or [f"w{i}" for i in range(r)]
    return CoalgebraSC(r, C.m, delta, eps, labels)


# ---------------------------------------------------------------- coradical

def dual_algebra(C: CoalgebraSC) -> tuple[ExactMatrix, ExactMatrix]:
    """(mulmat, unit): x*y = mulmat @ kron(x, y) on C^*; unit = eps."""
    A = C.dual
    return A.mulmat, A.unit


def coradical(C: CoalgebraSC) -> SubspaceBasis:
    return C._coradical


def _decompose(C: CoalgebraSC) -> _Decomposition:
    D0 = coradical(C)
    sub = restrict(C, D0)
    S = sub.dual
    Z = S.center()
    blocks = []
    V = D0.matrix.T                                    # ambient coordinates of D_0 basis
    for e, split in central_idempotents(S, Z):
        Le = S.lmul(e)
        tr = sum((Le[i, i] for i in range(S.dim)), CycNumber.rational(0, S.m))
        # L_e is a projection onto e S, so its trace is the block dimension
        bb = SubspaceBasis.span(e.T, S.dim) if tr == 1 else SubspaceBasis.span(Le.T, S.dim)
        if not split:
            mu = component_minpoly(S, e, Z)
            sug = splitting_order(mu, 4 * C.dim) if mu is not None else None
            raise NotSplit(f"simple block of dimension {bb.dim} has center of dimension "
                           f"{mu.degree if mu is not None else '>1'} over Q(zeta_{C.m})",
                           block_dim=bb.dim, suggested_order=sug)
        d = round(bb.dim ** 0.5)
        try:
            U = matrix_units(S, bb, e)
        except NotSplit as exc:
            raise NotSplit(str(exc), block_dim=bb.dim, suggested_order=None) from None
        blocks.append(SimpleBlock(0, d, bb, None, units=U))
    # multiplicative matrices: the dual basis of all matrix units together
    Ucols = [u for b in blocks for row in b.units for u in row]
    if Ucols:
        Cdual = inverse(hstack(Ucols).T)               # columns: D_0 coordinates
        amb = V @ Cdual
        k = 0
        for b in blocks:
            d = b.comodule_dim
            mm = [[None] * d for _ in range(d)]
            for i in range(d):
                for j in range(d):
                    mm[i][j] = amb.select(None, [k])
                    k += 1
            b.multiplicative_matrix = mm
            b.basis = SubspaceBasis.span(hstack([u for row in mm for u in row]).T, C.dim)
    blocks.sort(key=lambda b: (b.comodule_dim, b.basis.pivots))
    for i, b in enumerate(blocks):
        b.index = i
        b.label = _block_label(C, b)
    return _Decomposition(D0, S, blocks)


def _block_label(C: CoalgebraSC, b: SimpleBlock) -> str:
    g = b.grouplike()
    if g is not None:
        nz = g.nonzero_raw()
        if len(nz) == 1:
            (i, _), c = next(iter(nz.items()))
            if c == _ONE:
                return C.labels[i]
    return f"D{b.index}"


def simple_decomposition(C: CoalgebraSC) -> list[SimpleBlock]:
    return C._decomposition.blocks


def grouplikes(C: CoalgebraSC) -> list[ExactMatrix]:
    return [b.grouplike() for b in simple_decomposition(C) if b.comodule_dim == 1]


def skew_primitives(C: CoalgebraSC, g: ExactMatrix, h: ExactMatrix) -> SubspaceBasis:
    """P_{h,g} = {x : Delta(x) = g (x) x + x (x) h}."""
    for v, name in ((g, "g"), (h, "h")):
        if v.shape != (C.dim, 1) or not C.is_grouplike(v):
            raise NotGrouplike(f"{name} is not grouplike")
    n = C.dim
    I = ExactMatrix.identity(n, C.m)
    M = C.delta_matrix - _kron(g, I) - _kron(I, h)
    return kernel(M)


def _kron(A, B):
    from .exact_linalg.matrix import kron
    return kron(A, B)


def nontrivial_skew_dimension(C: CoalgebraSC, g: ExactMatrix, h: ExactMatrix) -> int:
    return skew_primitives(C, g, h).dim - (0 if g == h else 1)


# ---------------------------------------------------------------- filtrations

def _sandwich_kernel(C: CoalgebraSC, QL: ExactMatrix, QR: ExactMatrix) -> SubspaceBasis:
    """{x : QL Delta(x) QR^T = 0}."""
    n = C.dim
    if QL.rows == 0 or QR.rows == 0:
        return SubspaceBasis.full(n, C.m)
    cols = [(QL @ C.P(i) @ QR.T).reshape(QL.rows * QR.rows, 1) for i in range(n)]
    return kernel(hstack(cols))


def wedge_filtration(C: CoalgebraSC) -> Filtration:
    D0 = coradical(C)
    stages = [D0]
    q0 = D0.quotient_map()
    while stages[-1].dim < C.dim:
        if len(stages) > C.dim:
            raise InternalMismatch("coradical filtration does not stabilize")
        nxt = _sandwich_kernel(C, q0, stages[-1].quotient_map())
        if nxt.dim <= stages[-1].dim:
            raise InternalMismatch("coradical filtration stalled")
        stages.append(nxt)
    return Filtration(stages=stages)


def coideal_projection(C: CoalgebraSC) -> ExactMatrix:
    """Coalgebra projection pi: C -> D_0 (dim x dim matrix), kernel a coideal."""
    dec = C._decomposition
    D0 = dec.D0
    n = C.dim
    if D0.dim == n:
        return ExactMatrix.identity(n, C.m)
    A = C.dual
    piv = D0.pivots

    def lift0(s: ExactMatrix) -> ExactMatrix:
        ent = {(piv[a], 0): c for (a, _), c in s.nonzero_raw().items()}
        return ExactMatrix.from_raw_dict(n, 1, ent, C.m)

    lifted = lift_matrix_units(A, [b.units for b in dec.blocks], lift0)
    Ecols = [u for L in lifted for row in L for u in row]
    Ccols = [u for b in dec.blocks for row in b.multiplicative_matrix for u in row]
    pi = hstack(Ccols) @ hstack(Ecols).T
    _check_projection(C, pi, D0)
    return pi


def _check_projection(C: CoalgebraSC, pi: ExactMatrix, D0: SubspaceBasis) -> None:
    n = C.dim
    if not (pi @ pi) == pi:
        raise InternalMismatch("pi is not idempotent")
    img = SubspaceBasis.span(pi.T, n)
    if img != D0:
        raise InternalMismatch("image of pi is not the coradical")
    if not (C.counit_row @ pi) == C.counit_row:
        raise InternalMismatch("eps o pi != eps")
    for i in range(n):
        col = pi.select(None, [i])
        if not C.comul(col) == pi @ C.P(i) @ pi.T:
            raise InternalMismatch(f"pi is not a coalgebra map on b_{i}")
    Iker = kernel(pi)
    if not is_coideal(C, Iker):
        raise InternalMismatch("kernel of pi is not a coideal")


def is_coideal(C: CoalgebraSC, I: SubspaceBasis) -> bool:
    """Delta(I) in I (x) C + C (x) I and eps(I) = 0."""
    if I.dim == 0:
        return True
    q = I.quotient_map()
    for x in _cols(I):
        if not C.counit(x).is_zero():
            return False
        if not (q @ C.comul(x) @ q.T).is_zero():
            return False
    return True


def _extend_basis(base: list[ExactMatrix], target: SubspaceBasis) -> list[ExactMatrix]:
    """Vectors of target completing `base` (columns) to a basis of target."""
    out = []
    cur = SubspaceBasis.span(hstack(base).T, target.ambient_dim) if base else SubspaceBasis.zero(target.ambient_dim, target.m)
    for v in _cols(target):
        if cur.contains_vectors(v):
            continue
        out.append(v)
        cur = SubspaceBasis.span(vstack([cur.matrix, v.T]), target.ambient_dim)
        if cur.dim == target.dim:
            break
    return out


def nichols_layers(C: CoalgebraSC, pi: ExactMatrix | None = None, wedge: Filtration | None = None) -> Filtration:
    """Layers P_n by the recursive definition, checked against D_n cap I."""
    n = C.dim
    pi = coideal_projection(C) if pi is None else pi
    wedge = wedge_filtration(C) if wedge is None else wedge
    D0 = wedge.stages[0]
    I = kernel(pi)
    Phi = [C.P(i) - pi @ C.P(i) - C.P(i) @ pi.T for i in range(n)]
    layers = [SubspaceBasis.zero(n, C.m)]
    if I.dim:
        P1 = kernel(hstack([F.reshape(n * n, 1) for F in Phi]))
        # displayed form: Delta^{-1}(D_0 (x) I + I (x) D_0)
        alt = _sandwich_kernel(C, D0.quotient_map(), D0.quotient_map()) & \
            _sandwich_kernel(C, I.quotient_map(), I.quotient_map())
        if P1 != alt:
            raise InternalMismatch("two descriptions of P_1 differ")
        layers.append(P1)
    inf = 10 ** 9
    while layers[-1].dim < I.dim:
        k = len(layers)
        if k > n + 1:
            raise InternalMismatch("Nichols layers do not exhaust I")
        # basis adapted to D_0 + P_1 + ... + P_{k-1} + complement in I
        vecs, levels = list(_cols(D0)), [inf] * D0.dim
        inner: list = []
        for lev in range(1, k):
            new = _extend_basis(inner, layers[lev])
            inner += new
            levels += [lev] * len(new)
        rest = _extend_basis(inner, I)
        inner += rest
        levels += [inf] * len(rest)
        B = hstack(vecs + inner)
        Binv = inverse(B)
        bad = [a * n + b for a in range(n) for b in range(n)
               if levels[a] + levels[b] > k]
        cols = [(Binv @ F @ Binv.T).reshape(n * n, 1).select(bad, None) for F in Phi]
        Pk = kernel(hstack(cols))
        if not Pk.contains(layers[-1]):
            raise InternalMismatch(f"P_{k} does not contain P_{k - 1}")
        layers.append(Pk)
    # Nichols: P_n = D_n cap I, and D_n = D_0 + P_n
    stages = list(wedge.stages)
    while len(stages) < len(layers):
        stages.append(stages[-1])
    while len(layers) < len(stages):
        layers.append(layers[-1])
    for k, (Dk, Pk) in enumerate(zip(stages, layers)):
        if (Dk & I) != Pk:
            raise InternalMismatch(f"P_{k} differs from D_{k} cap I")
        if Dk.dim != D0.dim + Pk.dim or (D0 + Pk) != Dk:
            raise InternalMismatch(f"D_{k} != D_0 + P_{k}")
    return Filtration(stages=stages, layers=layers, projection=pi)


def _block_functional(C: CoalgebraSC, b: SimpleBlock, pi: ExactMatrix) -> ExactMatrix:
    # On D_0 the functional is eps on D_tau and 0 on other blocks.  Write it in
    # the basis dual to the multiplicative matrices: chi(e_ij^sigma) = delta_ij [sigma = tau].
    blocks = simple_decomposition(C)
    cols = [u for bl in blocks for row in bl.multiplicative_matrix for u in row]
    E = hstack(cols)                                   # n x r, basis of D_0
    target = []
    for bl in blocks:
        d = bl.comodule_dim
        for i in range(d):
            for j in range(d):
                target.append(1 if (bl is b and i == j) else 0)
    # f^T E = target and f^T (ker pi) = 0  ->  f = pi^T g with g^T E = target
    from .exact_linalg.matrix import solve
    t = ExactMatrix.from_rows([target], C.m).T
    g = solve(E.T, t)
    if g is None:
        raise InternalMismatch("block functional")
    return pi.T @ g


def isotypic_dimensions(C: CoalgebraSC, filt: Filtration) -> Filtration:
    """Fill filt.isotypic[n][(tau, gamma)] = dim P_n^{tau, gamma} (nonzero only)."""
    pi = filt.projection
    n = C.dim
    blocks = simple_decomposition(C)
    chis = [_block_functional(C, b, pi) for b in blocks]
    PL = [hstack([C.P(i).T @ chi for i in range(n)]) for chi in chis]
    PR = [hstack([C.P(i) @ chi for i in range(n)]) for chi in chis]
    iso, nondeg = {}, {}
    for k in range(1, len(filt.layers)):
        Pk = filt.layers[k]
        if Pk.dim == 0:
            continue
        prev = filt.layers[k - 1]
        basis = Pk.matrix.T
        table, flags = {}, set()
        total = 0
        for t in range(len(blocks)):
            Lb = PL[t] @ basis
            for g in range(len(blocks)):
                img = PR[g] @ Lb
                if img.is_zero():
                    continue
                W = SubspaceBasis.span(img.T, n)
                if W.dim:
                    table[(t, g)] = W.dim
                    total += W.dim
                    if not prev.contains(W):
                        flags.add((t, g))
        if total != Pk.dim:
            raise InternalMismatch(f"isotypic dims of P_{k} sum to {total}, not {Pk.dim}")
        iso[k], nondeg[k] = table, flags
    filt.isotypic, filt.nondegenerate = iso, nondeg
    return filt


def filtration(C: CoalgebraSC, isotypic: bool = True) -> Filtration:
    """Wedge stages, Nichols layers and (optionally) the isotypic table."""
    w = wedge_filtration(C)
    f = nichols_layers(C, coideal_projection(C), w)
    return isotypic_dimensions(C, f) if isotypic else f


# ---------------------------------------------------------------- M*(2) images

@dataclass
class Matrix2Image:
    dim: int
    structure: str                   # "comatrix" | "g,h,u" | "grouplikes"
    basis: dict


def is_coalgebra_map(src: CoalgebraSC, dst: CoalgebraSC, f: ExactMatrix) -> bool:
    if f.shape != (dst.dim, src.dim):
        return False
    if not (dst.counit_row @ f) == src.counit_row:
        return False
    for i in range(src.dim):
        col = f.select(None, [i])
        if not dst.comul(col) == f @ src.P(i) @ f.T:
            return False
    return True


def classify_matrix2_image(f: ExactMatrix, C: CoalgebraSC) -> Matrix2Image:
    """Image of a coalgebra map M*(2) -> C (columns of f: e11, e12, e21, e22)."""
    M2 = comatrix_coalgebra(2, C.m)
    if not is_coalgebra_map(M2, C, f):
        raise NotCoalgebraMap("f is not a coalgebra map from M*(2)")
    img = SubspaceBasis.span(f.T, C.dim)
    col = {lab: f.select(None, [k]) for k, lab in enumerate(M2.labels)}
    if img.dim == 4:
        return Matrix2Image(4, "comatrix", col)
    g, h = col["e11"], col["e22"]
    if img.dim == 3:
        for u_lab, gg, hh in (("e12", g, h), ("e21", h, g)):
            u = col[u_lab]
            if C.is_grouplike(gg) and C.is_grouplike(hh) and gg != hh and \
                    SubspaceBasis.span(hstack([gg, hh, u]).T, C.dim).dim == 3:
                # Delta(u) = gg (x) u + u (x) hh
                if C.comul(u) == gg @ u.T + u @ hh.T:
                    return Matrix2Image(3, "g,h,u", {"g": gg, "h": hh, "u": u})
        raise InternalMismatch("3-dimensional image without (g, h, u) basis")
    # dim <= 2: the image is cosemisimple and pointed
    sub = restrict(C, img)
    found = [img.matrix.T @ x for x in grouplikes(sub)]
    return Matrix2Image(img.dim, "grouplikes", {f"g{i}": x for i, x in enumerate(found)})

