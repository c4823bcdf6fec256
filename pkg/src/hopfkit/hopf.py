"""Hopf algebras by structure constants.

``mu[(i, j, k)]`` is the coefficient of b_k in b_i b_j; the antipode is a
dim x dim matrix whose column j holds S(b_j).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from math import gcd
from typing import Mapping, Sequence


from . import axioms
from .assoc import Algebra, _cols
from .coalgebra import CoalgebraSC, _raw_tensor, grouplikes, new_coalgebra, simple_decomposition, coradical
from .errors import (AntipodeAxiomFails, BadParameter, DimensionMismatch, ExceedsCap, InternalMismatch, NotAssociative,
                     NotBialgebra, NotClosed, NotHopfMap, NotSubcoalgebra, UnitFails)
from .exact_linalg.cyclotomic import CycNumber
from .exact_linalg.matrix import ExactMatrix, SubspaceBasis, hstack, kernel, kron, rank, raw_of


class HopfAlgebraSC:
    def __init__(self, coalg: CoalgebraSC, mu: Mapping, unit: Sequence, S: ExactMatrix):
        self.coalgebra = coalg
        self.mu = dict(mu)
        self.unit = list(unit)
        self.S = S

    # delegate the coalgebra side
    @property
    def dim(self) -> int:
        return self.coalgebra.dim

    @property
    def m(self) -> int:
        return self.coalgebra.m

    @property
    def labels(self) -> tuple:
        return self.coalgebra.labels

    @property
    def delta(self) -> dict:
        return self.coalgebra.delta

    @property
    def eps(self) -> list:
        return self.coalgebra.eps

    def __repr__(self):
        return f"HopfAlgebraSC(dim={self.dim}, m={self.m})"

    @cached_property
    def mulmat(self) -> ExactMatrix:
        """dim x dim^2 with x*y = mulmat @ kron(x, y)."""
        n = self.dim
        return ExactMatrix.from_raw_dict(n, n * n, {(k, i * n + j): c for (i, j, k), c in self.mu.items()}, self.m)

    @cached_property
    def unit_vector(self) -> ExactMatrix:
        return ExactMatrix.from_raw_dict(self.dim, 1, {(i, 0): c for i, c in enumerate(self.unit)}, self.m)

    @cached_property
    def algebra(self) -> Algebra:
        return Algebra(self.mulmat, self.unit_vector)

    def mul(self, x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
        return self.algebra.mul(x, y)

    def element(self, coeffs: Mapping) -> ExactMatrix:
        return self.coalgebra.element(coeffs)

    def basis_vector(self, i: int) -> ExactMatrix:
        return self.coalgebra.basis_vector(i)

    def antipode(self, x: ExactMatrix) -> ExactMatrix:
        return self.S @ x

    @cached_property
    def _dual(self) -> "HopfAlgebraSC":
        return _dual(self)


@dataclass(frozen=True)
class HopfType:
    g_count: int
    g_dual_count: int

    def __iter__(self):
        return iter((self.g_count, self.g_dual_count))


@dataclass
class GroupStructure:
    elements: list                    # grouplike vectors, identity first
    table: list                       # table[i][j] = index of g_i g_j
    orders: list
    abelian: bool
    invariants: tuple | None          # invariant factors (abelian only)

    @property
    def order(self) -> int:
        return len(self.elements)

    def describe(self) -> str:
        if self.order == 1:
            return "trivial"
        if self.abelian:
            return " x ".join(f"C{d}" for d in self.invariants)
        exp = 1
        for o in self.orders:
            exp = exp * o // gcd(exp, o)
        return f"nonabelian of order {self.order}, exponent {exp}"


@dataclass
class ExactSequenceReport:
    injective: bool
    surjective: bool
    composite_trivial: bool
    kernel_is_ideal: bool
    coinvariants_match: bool
    dim_identity: bool
    witnesses: dict = dc_field(default_factory=dict)

    @property
    def conditions(self) -> tuple:
        return (self.injective, self.surjective, self.composite_trivial,
                self.kernel_is_ideal, self.coinvariants_match)

    @property
    def exact(self) -> bool:
        return all(self.conditions)


# ---------------------------------------------------------------- construction

def new_hopf(mu, unit, delta, eps, S, labels=None, m: int = 1) -> HopfAlgebraSC:
    """Validate every axiom exactly; raise the first failure with a witness."""
    C = new_coalgebra(delta, eps, labels, m)
    n = C.dim
    mu_d, n2 = _raw_tensor(mu, n, m)
    if n2 != n or any(not (0 <= x < n) for key in mu_d for x in key):
        raise DimensionMismatch("mu has the wrong size")
    u = [raw_of(x, m) for x in unit]
    if len(u) != n:
        raise DimensionMismatch("unit has the wrong size")
    if not isinstance(S, ExactMatrix):
        S = ExactMatrix.from_rows(S, m)
    if S.shape != (n, n):
        raise DimensionMismatch("antipode must be dim x dim")
    S = S.embed(m) if S.m != m else S
    return _validate(C, mu_d, u, S)


def _validate(C: CoalgebraSC, mu: dict, unit: list, S: ExactMatrix) -> HopfAlgebraSC:
    n, m = C.dim, C.m
    bad = axioms.assoc_defect(mu, n, m)
    if bad is not None:
        raise NotAssociative(f"associativity fails: (b_{bad[0]} b_{bad[1]}) b_{bad[2]} at b_{bad[3]}", witness=bad)
    bad = axioms.unit_defect(mu, unit, n, m)
    if bad is not None:
        raise UnitFails(f"unit law fails on b_{bad}", witness=bad)
    bad = axioms.bialgebra_defect(mu, C.delta, C.eps, unit, n, m)
    if bad is not None:
        raise NotBialgebra(f"bialgebra axiom {bad[0]} fails at {bad[1]}", witness=bad)
    Sd = {(a, j): c for (a, j), c in S.nonzero_raw().items()}
    bad = axioms.antipode_defect(mu, C.delta, C.eps, unit, Sd, n, m)
    if bad is not None:
        raise AntipodeAxiomFails(f"antipode axiom ({bad[0]}) fails on b_{bad[1]}", witness=bad)
    return HopfAlgebraSC(C, mu, unit, S)


def _dual(H: HopfAlgebraSC) -> HopfAlgebraSC:
    delta = {(k, i, j): c for (i, j, k), c in H.mu.items()}
    mu = {(j, k, i): c for (i, j, k), c in H.delta.items()}
    labels = [f"{lab}*" for lab in H.labels]
    C = CoalgebraSC(H.dim, H.m, delta, list(H.unit), labels)
    return HopfAlgebraSC(C, mu, list(H.eps), H.S.T)


def dual_hopf(H: HopfAlgebraSC, check: bool = True) -> HopfAlgebraSC:
    """H^* in the dual basis.  Transposition preserves every axiom; `check`
    re-runs the validation anyway."""
    D = H._dual
    if check:
        new_coalgebra(D.delta, D.eps, D.labels, D.m)
        _validate(D.coalgebra, D.mu, D.unit, D.S)
    return D


def tensor_hopf(H: HopfAlgebraSC, K: HopfAlgebraSC, check: bool = True) -> HopfAlgebraSC:
    m = H.m * K.m // gcd(H.m, K.m)
    from .exact_linalg.cyclotomic import embed_poly, field
    F = field(m)

    def up(c, src):
        return embed_poly(c, src, m)

    nK = K.dim
    idx = lambda a, b: a * nK + b  # noqa: E731

    def prod(T1, T2, m1, m2):
        out = {}
        for (a, c, e), x in T1.items():
            x = up(x, m1)
            for (b, d, f), y in T2.items():
                out[(idx(a, b), idx(c, d), idx(e, f))] = F.reduce(x * up(y, m2))
        return out

    delta = prod(H.delta, K.delta, H.m, K.m)
    mu = prod(H.mu, K.mu, H.m, K.m)
    eps = [F.reduce(up(x, H.m) * up(y, K.m)) for x in H.eps for y in K.eps]
    unit = [F.reduce(up(x, H.m) * up(y, K.m)) for x in H.unit for y in K.unit]
    S = kron(H.S.embed(m), K.S.embed(m))
    labels = [f"{a}.{b}" for a in H.labels for b in K.labels]
    if check:
        return new_hopf(mu, unit, delta, eps, S, labels, m)
    return HopfAlgebraSC(CoalgebraSC(H.dim * nK, m, delta, eps, labels), mu, unit, S)


def embed_hopf(H: HopfAlgebraSC, target: int) -> HopfAlgebraSC:
    """The same Hopf algebra over Q(zeta_target); requires m | target."""
    from .exact_linalg.cyclotomic import embed_poly
    if target == H.m:
        return H
    if target < 1 or target % H.m:
        raise BadParameter(f"field order {H.m} does not divide {target}")
    mu = {k: embed_poly(v, H.m, target) for k, v in H.mu.items()}
    unit = [embed_poly(v, H.m, target) for v in H.unit]
    return HopfAlgebraSC(H.coalgebra.embed(target), mu, unit, H.S.embed(target))


# ---------------------------------------------------------------- invariants

def antipode_order(H: HopfAlgebraSC, cap: int | None = None) -> int:
    cap = 4 * H.dim if cap is None else cap
    if cap < 1:
        raise ValueError("cap must be >= 1")
    P = H.S
    for k in range(1, cap + 1):
        if P.is_identity():
            return k
        P = P @ H.S
    raise ExceedsCap(f"S^n != id for n <= {cap}")


def is_semisimple(H: HopfAlgebraSC) -> bool:
    return (H.S @ H.S).is_identity()


def _vec_key(v: ExactMatrix):
    return tuple(sorted((k, str(c)) for k, c in v.nonzero_raw().items()))


def grouplike_group(H: HopfAlgebraSC) -> GroupStructure:
    gs = grouplikes(H.coalgebra)
    pos = {_vec_key(g): i for i, g in enumerate(gs)}
    i1 = pos.get(_vec_key(H.unit_vector))
    if i1 is None:
        raise NotClosed("the unit is not among the grouplikes")
    gs = [gs[i1]] + gs[:i1] + gs[i1 + 1:]
    pos = {_vec_key(g): i for i, g in enumerate(gs)}
    n = len(gs)
    table = [[0] * n for _ in range(n)]
    G = hstack(gs) if gs else None
    for i, a in enumerate(gs):
        prods = left_multiplication(H, a) @ G
        for j in range(n):
            k = pos.get(_vec_key(prods.select(None, [j])))
            if k is None:
                raise NotClosed(f"product of grouplikes {i}, {j} is not grouplike", witness=(i, j))
            table[i][j] = k
        if _vec_key(H.S @ a) not in pos:
            raise NotClosed(f"S of grouplike {i} is not grouplike", witness=(i,))
    orders = []
    for i in range(n):
        k, cur = 1, i
        while cur != 0:
            cur = table[cur][i]
            k += 1
        orders.append(k)
    abelian = all(table[i][j] == table[j][i] for i in range(n) for j in range(n))
    inv = _invariant_factors(table, orders) if abelian else None
    return GroupStructure(gs, table, orders, abelian, inv)


def _factorize(n: int) -> dict:
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _invariant_factors(table, orders) -> tuple:
    """Invariant factors d_1 | d_2 | ... of a finite abelian group."""
    n = len(orders)
    if n == 1:
        return ()
    primary: dict = {}
    for p, e in _factorize(n).items():
        # a_k = log_p #{x : x^(p^k) = 1}
        a = [0]
        for k in range(1, e + 1):
            cnt = sum(1 for o in orders if (p ** k) % o == 0)
            a.append(round(_log(cnt, p)))
        # number of cyclic factors of order >= p^k is a_k - a_{k-1}
        ge = [a[k] - a[k - 1] for k in range(1, e + 1)] + [0]
        parts = []
        for k in range(1, e + 1):
            parts += [p ** k] * (ge[k - 1] - ge[k])
        primary[p] = sorted(parts, reverse=True)
    width = max(len(v) for v in primary.values())
    facs = []
    for i in range(width):
        d = 1
        for v in primary.values():
            if i < len(v):
                d *= v[i]
        facs.append(d)
    return tuple(sorted(facs))


def _log(x: int, p: int) -> float:
    k = 0
    while x > 1:
        x //= p
        k += 1
    return k


def hopf_type(H: HopfAlgebraSC) -> HopfType:
    return HopfType(len(grouplikes(H.coalgebra)), len(grouplikes(dual_hopf(H, check=False).coalgebra)))


def is_pointed(H: HopfAlgebraSC) -> bool:
    """All simple subcoalgebras 1-dimensional (cosemisimple allowed)."""
    return coradical(H.coalgebra).dim == len(grouplikes(H.coalgebra))


def is_copointed(H: HopfAlgebraSC) -> bool:
    return is_pointed(dual_hopf(H, check=False))


def is_pointed_nontrivial(H: HopfAlgebraSC) -> bool:
    """The narrower convention: pointed and not cosemisimple."""
    return is_pointed(H) and coradical(H.coalgebra).dim < H.dim


# ---------------------------------------------------------------- maps

def left_multiplication(H: HopfAlgebraSC, h: ExactMatrix) -> ExactMatrix:
    """Matrix of x -> h x."""
    return H.algebra.lmul(h)


def right_multiplication(H: HopfAlgebraSC, h: ExactMatrix) -> ExactMatrix:
    """Matrix of x -> x h."""
    return H.algebra.rmul(h)


def adjoint_action(H: HopfAlgebraSC, h: ExactMatrix, side: str = "left") -> ExactMatrix:
    """ad_l(h)(x) = h_1 x S(h_2); ad_r(h)(x) = S(h_1) x h_2."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    Z = H.coalgebra.comul(h).nonzero_raw()
    n = H.dim
    acc = ExactMatrix.zeros(n, n, H.m)
    for (j, k), c in Z.items():
        bj, bk = H.basis_vector(j), H.basis_vector(k)
        if side == "left":
            T = left_multiplication(H, bj) @ right_multiplication(H, H.S @ bk)
        else:
            T = left_multiplication(H, H.S @ bj) @ right_multiplication(H, bk)
        acc = acc + T.scale(CycNumber._raw(H.m, c))
    return acc


def is_hopf_map(src: HopfAlgebraSC, dst: HopfAlgebraSC, f: ExactMatrix) -> str | None:
    """None if f: src -> dst is a Hopf map, else the failing property."""
    if f.shape != (dst.dim, src.dim):
        return "shape"
    if not f @ src.mulmat == dst.mulmat @ kron(f, f):
        return "multiplication"
    if not f @ src.unit_vector == dst.unit_vector:
        return "unit"
    if not dst.coalgebra.delta_matrix @ f == kron(f, f) @ src.coalgebra.delta_matrix:
        return "comultiplication"
    if not dst.coalgebra.counit_row @ f == src.coalgebra.counit_row:
        return "counit"
    return None


def _require_hopf_map(src, dst, f, name):
    bad = is_hopf_map(src, dst, f)
    if bad is not None:
        raise NotHopfMap(f"{name} does not preserve {bad}")


def coinvariants(H: HopfAlgebraSC, pi: ExactMatrix, B: HopfAlgebraSC, side: str = "right") -> SubspaceBasis:
    """Right: {x : (id (x) pi) Delta x = x (x) 1}; left: {x : (pi (x) id) Delta x = 1 (x) x}."""
    _require_hopf_map(H, B, pi, "pi")
    n = H.dim
    I = ExactMatrix.identity(n, H.m)
    D = H.coalgebra.delta_matrix
    if side == "right":
        M = kron(I, pi) @ D - kron(I, B.unit_vector)
    elif side == "left":
        M = kron(pi, I) @ D - kron(B.unit_vector, I)
    else:
        raise ValueError("side must be 'left' or 'right'")
    return kernel(M)


def check_exact_sequence(A: HopfAlgebraSC, iota: ExactMatrix, H: HopfAlgebraSC, pi: ExactMatrix,
                         B: HopfAlgebraSC) -> ExactSequenceReport:
    _require_hopf_map(A, H, iota, "iota")
    _require_hopf_map(H, B, pi, "pi")
    wit: dict = {}
    inj = rank(iota) == A.dim
    surj = rank(pi) == B.dim
    comp = pi @ iota == B.unit_vector @ A.coalgebra.counit_row
    # A^+ H, with A^+ = ker eps_A
    Aplus = kernel(A.coalgebra.counit_row)
    gens = []
    for a in _cols(Aplus):
        La = left_multiplication(H, iota @ a)
        gens.append(La)
    AH = SubspaceBasis.span(hstack(gens).T, H.dim) if gens else SubspaceBasis.zero(H.dim, H.m)
    ker = kernel(pi)
    ideal = AH == ker
    if not ideal:
        wit["kernel"] = (ker.dim, AH.dim)
    co = coinvariants(H, pi, B, "right")
    imgA = SubspaceBasis.span(iota.T, H.dim)
    match = co == imgA
    if not match:
        wit["coinvariants"] = (co.dim, imgA.dim)
    return ExactSequenceReport(inj, surj, comp, ideal, match, H.dim == co.dim * B.dim, wit)


def subalgebra_generated(H: HopfAlgebraSC, seed: SubspaceBasis) -> SubspaceBasis:
    """Smallest subalgebra containing a subcoalgebra `seed`; it is a sub-Hopf algebra."""
    if not H.coalgebra.is_subcoalgebra(seed):
        raise NotSubcoalgebra("seed is not a subcoalgebra")
    n = H.dim
    gens = _cols(seed)
    W = SubspaceBasis.span(hstack(gens + [H.unit_vector]).T, n)
    Ls = [left_multiplication(H, g) for g in gens]
    while True:
        cols = W.matrix.T
        new = SubspaceBasis.span(hstack([cols] + [L @ cols for L in Ls]).T, n)
        if new.dim == W.dim:
            break
        W = new
    if not H.coalgebra.is_subcoalgebra(W):
        raise InternalMismatch("generated subalgebra is not a subcoalgebra")
    if not W.contains_vectors(H.S @ W.matrix.T):
        raise InternalMismatch("generated sub-bialgebra is not stable under S")
    return W


def block_permutation(H: HopfAlgebraSC, T: ExactMatrix) -> list[int]:
    """Index map tau -> tau' with T(D_tau) = D_tau' for a map T permuting the simple blocks
    (the antipode, or left/right multiplication by a grouplike)."""
    blocks = simple_decomposition(H.coalgebra)
    where = {b.basis: b.index for b in blocks}
    out = []
    for b in blocks:
        img = SubspaceBasis.span((T @ b.basis.matrix.T).T, H.dim)
        if img not in where:
            raise NotClosed(f"image of block {b.index} is not a simple block", witness=(b.index,))
        out.append(where[img])
    return out
