"""Normal forms for finite-order (anti-)automorphisms of the matrix coalgebra M*(d).

A map on M*(d) is a d^2 x d^2 matrix acting on column vectors in the basis
e_ij, index i*d + j (0-based).  Write E for the d x d matrix whose entries
are the basis elements.  Every coalgebra automorphism has the form
f(E) = U E U^-1 and every anti-automorphism the form f(E) = A E^T A^-1,
both read entrywise.  A change of multiplicative matrix e = P e~ P^-1
turns U into P U P^-1 and A into P A P^T.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .coalgebra import SimpleBlock
from .errors import (InternalMismatch, NotCoalgebraMap, NotFiniteOrder, NotInvertible, NotStable,
                     OrderOne)
from .exact_linalg.cyclotomic import CycNumber, root_of_unity_order
from .exact_linalg.matrix import ExactMatrix, hstack, inverse, kernel, kron, solve
from .exact_linalg.poly import finite_order, finite_order_eigendecomposition

AUTO = "automorphism"
ANTI = "anti-automorphism"


@dataclass
class ComatrixMap:
    d: int
    kind: str
    matrix: ExactMatrix
    declared_order_hint: int | None = None

    def __post_init__(self):
        if self.kind not in (AUTO, ANTI):
            raise ValueError(f"kind must be {AUTO!r} or {ANTI!r}")
        if self.matrix.shape != (self.d * self.d, self.d * self.d):
            raise ValueError(f"matrix must be {self.d ** 2} x {self.d ** 2}")

    @property
    def m(self) -> int:
        return self.matrix.m


@dataclass
class NormalFormResult:
    kind: str
    d: int
    order: int                      # ord f (automorphism) or ord f^2 (anti)
    conjugator: ExactMatrix         # U or A~ in the input basis
    basis_change: ExactMatrix       # P: new multiplicative matrix is P e P^-1
    new_basis: ExactMatrix          # columns: new e_ij in input coordinates
    omegas: tuple                   # eigenvalues of U (normalized) or of B = A~ (A~^-1)^T
    # anti-automorphism data
    A: ExactMatrix | None = None
    a_plus: int = 0
    a_minus: int = 0
    blocks: tuple = ()              # ((a_j, lambda_j), ...)
    A_plus: ExactMatrix | None = None
    A_minus: ExactMatrix | None = None
    A_blocks: tuple = ()
    notes: list = dc_field(default_factory=list)

    def ratio(self, i: int, j: int) -> CycNumber:
        return self.omegas[i] / self.omegas[j]

    def ratio_multiset(self) -> list:
        """Sorted coefficient tuples of all omega_i / omega_j."""
        d = self.d
        return sorted(self.ratio(i, j).sort_key() for i in range(d) for j in range(d))

    @property
    def lam(self) -> CycNumber | None:
        """lambda of the d = 3 form A_lambda (or the single lambda_1 when s = 1)."""
        return self.blocks[0][1] if len(self.blocks) == 1 else None

    @property
    def stefan_omega(self) -> CycNumber | None:
        """For d = 2 anti-automorphisms: omega with f(e_12) = omega^-1 e_12."""
        if self.kind != ANTI or self.d != 2:
            return None
        return self.blocks[0][1].inverse()


# ---------------------------------------------------------------- map assembly

def conjugation_map(U: ExactMatrix) -> ExactMatrix:
    """Matrix of e_ij -> (U E U^-1)_ij."""
    return kron(U.T, inverse(U))


def anti_map(A: ExactMatrix) -> ExactMatrix:
    """Matrix of e_ij -> (A E^T A^-1)_ij."""
    d = A.rows
    K = kron(inverse(A), A.T)         # column (j, i) holds the image of e_ij
    return K.select(None, [j * d + i for i in range(d) for j in range(d)])


def _first_nonzero(M: ExactMatrix) -> CycNumber:
    for i in range(M.rows):
        for j in range(M.cols):
            c = M[i, j]
            if not c.is_zero():
                return c
    raise NotInvertible("zero matrix")


def recover_conjugator(f: ComatrixMap) -> ExactMatrix:
    """U with f(E) = U E U^-1, or A~ with f(E) = A~ E^T A~^-1 for the anti kind.

    Solves f(E) X = X E (resp. X E^T) entrywise; the solution space must be
    a line.  The result is scaled so its first nonzero entry is 1.
    """
    d, m = f.d, f.m
    n = d * d
    F = f.matrix
    ent: dict = {}

    def add(key, v):
        ent[key] = ent.get(key, 0) + v

    for i in range(d):
        for j in range(d):
            for r in range(n):
                row = (i * d + j) * n + r
                for k in range(d):
                    c = F.raw(r, i * d + k)
                    if not c.is_zero():
                        add((row, k * d + j), c)
                # right-hand side: sum_k X_ik e_kj  (or e_jk for the anti kind)
                a, b = divmod(r, d)
                if f.kind == AUTO and b == j:
                    add((row, i * d + a), -1)
                elif f.kind == ANTI and a == j:
                    add((row, i * d + b), -1)
    M = ExactMatrix.from_raw_dict(d * d * n, n, ent, m)
    K = kernel(M)
    if K.dim != 1:
        raise NotCoalgebraMap(f"not a coalgebra {f.kind} of M*({d}): "
                              f"conjugator space has dimension {K.dim}")
    X = K.matrix.reshape(d, d)
    X = X.scale(_first_nonzero(X).inverse())
    try:
        rebuilt = conjugation_map(X) if f.kind == AUTO else anti_map(X)
    except NotInvertible:
        raise NotInvertible("conjugator is singular") from None
    if rebuilt != F:
        raise NotCoalgebraMap(f"map is not a coalgebra {f.kind} of M*({d})")
    return X


def detect_kind(matrix: ExactMatrix, d: int) -> str:
    """AUTO or ANTI, whichever the matrix is; NotCoalgebraMap if neither."""
    for kind in (AUTO, ANTI):
        try:
            recover_conjugator(ComatrixMap(d, kind, matrix))
            return kind
        except (NotCoalgebraMap, NotInvertible):
            continue
    raise NotCoalgebraMap(f"neither a coalgebra automorphism nor an anti-automorphism of M*({d})")


def _map_order(F: ExactMatrix, cap: int | None) -> int:
    n, c = finite_order(F, cap)
    if c != 1:
        raise NotFiniteOrder("power of the map is a nontrivial scalar")
    return n


def _new_basis(P: ExactMatrix) -> ExactMatrix:
    # column (i, j) holds (P e~ P^-1)_ij
    return kron(P.T, inverse(P))


def _eigen(M: ExactMatrix, cap: int | None):
    """[(eigenvalue, eigenvector column)] with multiplicity, in eigenspace order."""
    out = []
    for lam, E in finite_order_eigendecomposition(M, cap):
        for k in range(E.dim):
            out.append((lam, E.matrix.select([k]).T))
    return out


# ---------------------------------------------------------------- automorphisms

def automorphism_normal_form(f: ComatrixMap, cap: int | None = None) -> NormalFormResult:
    if f.kind != AUTO:
        raise ValueError("automorphism_normal_form needs an automorphism")
    cap = cap or f.declared_order_hint
    n = _map_order(f.matrix, cap)
    U = recover_conjugator(f)
    pairs = _eigen(U, cap or 4 * f.d * f.d * max(n, 1))
    # scale so the sorted omega tuple is least among all normalizations
    best = None
    for c in {lam for lam, _ in pairs}:
        cand = sorted(((lam / c).sort_key(), k) for k, (lam, _) in enumerate(pairs))
        if best is None or [t for t, _ in cand] < [t for t, _ in best[1]]:
            best = (c, cand)
    c, order = best
    omegas = tuple(pairs[k][0] / c for _, k in order)
    V = hstack([pairs[k][1] for _, k in order])
    P = inverse(V)
    Q = _new_basis(P)
    res = NormalFormResult(AUTO, f.d, n, U, P, Q, omegas)
    _check_auto(f, res)
    return res


def _check_auto(f: ComatrixMap, res: NormalFormResult) -> None:
    d = f.d
    FQ = f.matrix @ res.new_basis
    for i in range(d):
        for j in range(d):
            k = i * d + j
            r = res.ratio(i, j)
            if FQ.select(None, [k]) != res.new_basis.select(None, [k]).scale(r):
                raise InternalMismatch(f"f(e_{i + 1}{j + 1}) is not omega_i/omega_j e_ij")
            o = root_of_unity_order(r)
            if o is None or res.order % o:
                raise InternalMismatch(f"ratio omega_{i + 1}/omega_{j + 1} is not a {res.order}-th root of unity")


# ---------------------------------------------------------------- anti-automorphisms

def antiautomorphism_normal_form(f: ComatrixMap, cap: int | None = None) -> NormalFormResult:
    if f.kind != ANTI:
        raise ValueError("antiautomorphism_normal_form needs an anti-automorphism")
    cap = cap or f.declared_order_hint
    d = f.d
    n = _map_order(f.matrix @ f.matrix, cap)
    if n == 1:
        raise OrderOne("f^2 = id; the normal form needs 1 < ord(f^2)")
    At = recover_conjugator(f)
    B = At @ inverse(At).T
    pairs = _eigen(B, cap or 4 * d * d * n)
    # ordering: lambda_1.. lambda_s, 1.., -1.., lambda_s^-1.., lambda_1^-1..
    one = CycNumber.rational(1, B.m)
    byval: dict = {}
    for lam, v in pairs:
        byval.setdefault(lam, []).append(v)
    lams = []
    for lam in byval:
        if lam == one or lam == -one:
            continue
        inv = lam.inverse()
        if inv not in byval or len(byval[inv]) != len(byval[lam]):
            raise InternalMismatch("eigenvalues of B do not pair with their inverses")
        if lam.sort_key() < inv.sort_key():
            lams.append(lam)
    lams.sort(key=CycNumber.sort_key)
    seq = [(lam, 0, l) for l, lam in enumerate(lams)]
    seq += [(one, 1, None), (-one, 2, None)]
    seq += [(lam.inverse(), 3, l) for l, lam in reversed(list(enumerate(lams)))]
    cols, omegas, groups = [], [], []
    for lam, tag, l in seq:
        vs = byval.get(lam, [])
        groups.append((tag, l, list(range(len(cols), len(cols) + len(vs)))))
        cols.extend(vs)
        omegas.extend([lam] * len(vs))
    V = hstack(cols)
    P = inverse(V)
    A = P @ At @ P.T
    idx_plus = next(g for t, _, g in groups if t == 1)
    idx_minus = next(g for t, _, g in groups if t == 2)
    up = {l: g for t, l, g in groups if t == 0}
    down = {l: g for t, l, g in groups if t == 3}
    # scale away the free scalar of A~, then make every A_l the identity
    if idx_plus:
        s = _first_nonzero(A.select(idx_plus, idx_plus))
    elif idx_minus:
        s = _first_nonzero(A.select(idx_minus, idx_minus))
    else:
        s = None
    if s is not None:
        A = A.scale(s.inverse())
        At = At.scale(s.inverse())
    ent = {(i, i): 1 for i in range(d)}
    for l in range(len(lams)):
        Ainv = inverse(A.select(down[l], up[l]))
        for a, i in enumerate(down[l]):
            for b, j in enumerate(down[l]):
                ent[(i, j)] = Ainv.raw(a, b)
    X = ExactMatrix.from_raw_dict(d, d, ent, B.m)
    A = X @ A @ X.T
    P = X @ P
    Q = _new_basis(P)
    res = NormalFormResult(
        ANTI, d, n, At, P, Q, tuple(omegas), A=A,
        a_plus=len(idx_plus), a_minus=len(idx_minus),
        blocks=tuple((len(up[l]), lams[l]) for l in range(len(lams))),
        A_plus=A.select(idx_plus, idx_plus) if idx_plus else None,
        A_minus=A.select(idx_minus, idx_minus) if idx_minus else None,
        A_blocks=tuple(A.select(down[l], up[l]) for l in range(len(lams))),
    )
    _check_anti(f, res, up, down, idx_plus, idx_minus)
    return res


def _zero_outside(A: ExactMatrix, allowed: set) -> bool:
    return all((i, j) in allowed or A[i, j].is_zero() for i in range(A.rows) for j in range(A.cols))


def _check_anti(f: ComatrixMap, res: NormalFormResult, up, down, ip, im) -> None:
    d, n, A = res.d, res.order, res.A
    om = res.omegas
    D = ExactMatrix.from_raw_dict(d, d, {(i, i): om[i].raw for i in range(d)}, A.m)
    if A @ inverse(A).T != D:
        raise InternalMismatch("A (A^-1)^T is not diag(omega)")
    # f in the new basis is afforded by A
    if f.matrix @ res.new_basis != res.new_basis @ anti_map(A):
        raise InternalMismatch("A does not afford f in the new basis")
    for i in range(d):
        for j in range(d):
            if A[i, j] != om[i] * A[j, i]:
                raise InternalMismatch(f"a_ij != omega_i a_ji at ({i}, {j})")
    allowed = {(i, j) for i in ip for j in ip} | {(i, j) for i in im for j in im}
    for l in up:
        if len(up[l]) != len(down[l]):
            raise InternalMismatch(f"|I_-{l + 1}| != |I_+{l + 1}|")
        allowed |= {(i, j) for i in up[l] for j in down[l]}
        allowed |= {(i, j) for i in down[l] for j in up[l]}
    if not _zero_outside(A, allowed):
        raise InternalMismatch("A is not in the anti-diagonal block layout")
    if res.A_plus is not None and res.A_plus != res.A_plus.T:
        raise InternalMismatch("A_+ is not symmetric")
    if res.A_minus is not None and res.A_minus != -res.A_minus.T:
        raise InternalMismatch("A_- is not antisymmetric")
    if res.a_plus + res.a_minus + 2 * sum(a for a, _ in res.blocks) != d:
        raise InternalMismatch("d != a_+ + a_- + 2 sum a_j")
    lams = [lam for _, lam in res.blocks]
    for name, ok in conditions_abc(lams, n, res.a_plus, res.a_minus).items():
        if not ok:
            raise InternalMismatch(f"condition ({name}) fails")


def _is_root(x: CycNumber, n: int) -> bool:
    return x ** n == 1


def conditions_abc(lams: Sequence[CycNumber], n: int, a_plus: int, a_minus: int) -> dict:
    """The three root-of-unity conditions on the lambda_j, as booleans."""
    a = all(_is_root(x * x, n) for x in lams) and all(
        _is_root(x / y, n) and _is_root(x * y, n) for x in lams for y in lams)
    b = a_plus == 0 or all(_is_root(x, n) for x in lams)
    c = a_minus == 0 or all(_is_root(-x, n) for x in lams)
    return {"a": a, "b": b, "c": c}


def normal_form(f: ComatrixMap, cap: int | None = None) -> NormalFormResult:
    if f.kind == AUTO:
        return automorphism_normal_form(f, cap)
    return antiautomorphism_normal_form(f, cap)


# ---------------------------------------------------------------- antipode on a block

@dataclass
class AntipodeBlockReport:
    block_index: int
    d: int
    order_S: int
    square: NormalFormResult            # automorphism normal form of S^2 on the block
    anti: NormalFormResult | None       # anti normal form of S, when ord(S^2) > 1
    note: str = ""


def block_map(H, block: SimpleBlock, T: ExactMatrix) -> ExactMatrix:
    """Matrix of T restricted to the block, in its multiplicative-matrix basis."""
    if block.multiplicative_matrix is None:
        raise NotStable("block has no multiplicative matrix")
    Qb = hstack([u for row in block.multiplicative_matrix for u in row])
    X = solve(Qb, T @ Qb)
    if X is None:
        raise NotStable(f"block {block.index} is not stable under the map",
                        witness=(block.index,))
    return X


def verify_antipode_on_block(H, block: SimpleBlock, cap: int | None = None) -> AntipodeBlockReport:
    d = block.comodule_dim
    F = block_map(H, block, H.S)
    k = _map_order(F, cap or 8 * d * d + 8)
    sq = automorphism_normal_form(ComatrixMap(d, AUTO, F @ F), cap)
    try:
        anti = antiautomorphism_normal_form(ComatrixMap(d, ANTI, F), cap)
        note = ""
    except OrderOne:
        anti, note = None, "S^2 is the identity on the block (OrderOne for the anti form)"
    return AntipodeBlockReport(block.index, d, k, sq, anti, note)
