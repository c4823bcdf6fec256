"""Dense exact matrices over Q(zeta_m) and canonical subspaces.

A matrix is kept as phi(m) rational component matrices, A = sum_t A_t z^t,
each a flint ``fmpq_mat`` (``None`` for an all-zero component).  Products
go through flint; echelon forms use restriction of scalars to Q.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

import flint
import numpy as np

from ..errors import DimensionMismatch, NotInvertible
from .cyclotomic import CycNumber, _to_fmpq, as_cyc, field

_Q0 = flint.fmpq(0)
_Q1 = flint.fmpq(1)


def _zero_mat(r: int, c: int) -> flint.fmpq_mat:
    return flint.fmpq_mat(r, c)


def _is_zero_mat(M: flint.fmpq_mat) -> bool:
    return M == flint.fmpq_mat(M.nrows(), M.ncols())


def raw_of(x, m: int) -> flint.fmpq_poly:
    """Reduced fmpq_poly for any scalar living in Q(zeta_m)."""
    if isinstance(x, flint.fmpq_poly):
        return x
    return as_cyc(x, m).raw


class ExactMatrix:
    """rows x cols matrix with entries in Q(zeta_m).  Immutable by convention."""

    __slots__ = ("rows", "cols", "m", "_c")

    def __init__(self, rows: int, cols: int, comps: Sequence, m: int):
        self.rows = rows
        self.cols = cols
        self.m = m
        phi = field(m).phi
        cs = list(comps) + [None] * (phi - len(comps))
        self._c = [None if (c is None or _is_zero_mat(c)) else c for c in cs]

    # ------------------------------------------------------------ builders
    @classmethod
    def from_raw_dict(cls, rows: int, cols: int, entries: dict, m: int) -> "ExactMatrix":
        phi = field(m).phi
        lists: list = [None] * phi
        for (r, c), v in entries.items():
            p = raw_of(v, m)
            if p.is_zero():
                continue
            for t, a in enumerate(p.coeffs()):
                if a:
                    if lists[t] is None:
                        lists[t] = [_Q0] * (rows * cols)
                    lists[t][r * cols + c] = a
        comps = [None if L is None else flint.fmpq_mat(rows, cols, L) for L in lists]
        return cls(rows, cols, comps, m)

    @classmethod
    def from_rows(cls, data: Sequence[Sequence], m: int | None = None) -> "ExactMatrix":
        data = [list(r) for r in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if m is None:
            m = _common_order(x for r in data for x in r)
        ent = {}
        for i, r in enumerate(data):
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
            for j, x in enumerate(r):
                ent[(i, j)] = x
        return cls.from_raw_dict(rows, cols, ent, m)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Sequence, m: int | None = None):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch("entries length != rows*cols")
        if m is None:
            m = _common_order(entries)
        return cls.from_raw_dict(rows, cols, {(k // cols, k % cols): x for k, x in enumerate(entries) if x != 0}, m)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], m: int, rows: int | None = None):
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        ent = {}
        for j, col in enumerate(columns):
            for i, x in enumerate(col):
                ent[(i, j)] = x
        return cls.from_raw_dict(rows, len(columns), ent, m)

    @classmethod
    def zeros(cls, rows: int, cols: int, m: int = 1) -> "ExactMatrix":
        return cls(rows, cols, [], m)

    @classmethod
    def identity(cls, n: int, m: int = 1) -> "ExactMatrix":
        I = flint.fmpq_mat(n, n)
        for i in range(n):
            I[i, i] = 1
        return cls(n, n, [I], m)

    @classmethod
    def scalar(cls, n: int, s, m: int) -> "ExactMatrix":
        return cls.identity(n, m).scale(s)

    # ------------------------------------------------------------ access
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def phi(self) -> int:
        return len(self._c)

    def comp(self, t: int) -> flint.fmpq_mat:
        c = self._c[t]
        return _zero_mat(self.rows, self.cols) if c is None else c

    def raw(self, i: int, j: int) -> flint.fmpq_poly:
        return flint.fmpq_poly([(c[i, j] if c is not None else _Q0) for c in self._c])

    def __getitem__(self, ij) -> CycNumber:
        i, j = ij
        return CycNumber._raw(self.m, self.raw(i, j))

    @property
    def entries(self) -> tuple:
        return tuple(x for row in self.to_lists() for x in row)

    def to_lists(self) -> list[list[CycNumber]]:
        return [[CycNumber._raw(self.m, p) for p in row] for row in self.raw_lists()]

    def raw_lists(self) -> list[list[flint.fmpq_poly]]:
        r, c = self.rows, self.cols
        flats = [None if M is None else M.entries() for M in self._c]
        live = [(t, f) for t, f in enumerate(flats) if f is not None]
        out = []
        for i in range(r):
            row = []
            for j in range(c):
                k = i * c + j
                coeffs = [_Q0] * len(flats)
                for t, f in live:
                    coeffs[t] = f[k]
                row.append(flint.fmpq_poly(coeffs))
            out.append(row)
        return out

    def nonzero_raw(self) -> dict:
        """{(i, j): raw} over the nonzero entries."""
        c = self.cols
        flats = [(t, M.entries()) for t, M in enumerate(self._c) if M is not None]
        acc: dict = {}
        for t, f in flats:
            for k, a in enumerate(f):
                if a:
                    acc.setdefault(k, [_Q0] * len(self._c))[t] = a
        return {(k // c, k % c): flint.fmpq_poly(v) for k, v in acc.items()}

    def row(self, i: int) -> tuple:
        return tuple(self[i, j] for j in range(self.cols))

    def column(self, j: int) -> tuple:
        return tuple(self[i, j] for i in range(self.rows))

    # ------------------------------------------------------------ structure
    def is_zero(self) -> bool:
        return all(c is None for c in self._c)

    def is_rational(self) -> bool:
        return all(c is None for c in self._c[1:])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        a, b = _align(self, other)
        return all(_ceq(x, y) for x, y in zip(a._c, b._c))

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(str(c) for c in self._c)))

    def embed(self, target: int) -> "ExactMatrix":
        if target == self.m:
            return self
        if target % self.m:
            raise ValueError(f"order {self.m} does not divide {target}")
        F = field(target)
        step = target // self.m
        acc: dict = {}
        for t, M in enumerate(self._c):
            if M is None:
                continue
            for v, a in enumerate(F.zeta_power(t * step).coeffs()):
                if a:
                    acc[v] = acc[v] + a * M if v in acc else a * M
        return ExactMatrix(self.rows, self.cols, [acc.get(v) for v in range(F.phi)], target)

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, [None if c is None else c.transpose() for c in self._c], self.m)

    def transpose(self) -> "ExactMatrix":
        return self.T

    # ------------------------------------------------------------ arithmetic
    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        a, b = _align(self, other)
        if a.shape != b.shape:
            raise DimensionMismatch(f"{a.shape} + {b.shape}")
        return ExactMatrix(a.rows, a.cols, [_cadd(x, y) for x, y in zip(a._c, b._c)], a.m)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [None if c is None else -c for c in self._c], self.m)

    def scale(self, s) -> "ExactMatrix":
        if isinstance(s, CycNumber) and self.m % s.m:
            L = self.m * s.m // gcd(self.m, s.m)
            return self.embed(L).scale(s)
        p = raw_of(s, self.m)
        F = field(self.m)
        acc: dict = {}
        for t, M in enumerate(self._c):
            if M is None:
                continue
            for u, a in enumerate(p.coeffs()):
                if not a:
                    continue
                for v, b in enumerate(F.powers[t + u].coeffs()):
                    if b:
                        term = (a * b) * M
                        acc[v] = acc[v] + term if v in acc else term
        return ExactMatrix(self.rows, self.cols, [acc.get(v) for v in range(F.phi)], self.m)

    def __mul__(self, s):
        if isinstance(s, ExactMatrix):
            return self @ s
        return self.scale(s)

    __rmul__ = scale

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        a, b = _align(self, other)
        if a.cols != b.rows:
            raise DimensionMismatch(f"{a.shape} @ {b.shape}")
        F = field(a.m)
        acc: dict = {}
        for s, A in enumerate(a._c):
            if A is None:
                continue
            for t, B in enumerate(b._c):
                if B is None:
                    continue
                P = A * B
                acc[s + t] = acc[s + t] + P if (s + t) in acc else P
        if F.phi == 1:
            return ExactMatrix(a.rows, b.cols, [acc.get(0)], a.m)
        out: dict = {}
        for u, M in acc.items():
            if u < F.phi:
                out[u] = out[u] + M if u in out else M
                continue
            for v, c in enumerate(F.powers[u].coeffs()):
                if c:
                    term = c * M
                    out[v] = out[v] + term if v in out else term
        return ExactMatrix(a.rows, b.cols, [out.get(v) for v in range(F.phi)], a.m)

    def __pow__(self, n: int) -> "ExactMatrix":
        if self.rows != self.cols:
            raise DimensionMismatch("power of non-square matrix")
        if n < 0:
            return inverse(self) ** (-n)
        out = ExactMatrix.identity(self.rows, self.m)
        base = self
        while n:
            if n & 1:
                out = out @ base
            n >>= 1
            if n:
                base = base @ base
        return out

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == ExactMatrix.identity(self.rows, self.m)

    def scalar_value(self):
        """c if self == c*Id, else None."""
        if self.rows != self.cols:
            return None
        if self.rows == 0:
            return CycNumber.rational(1, self.m)
        c = self[0, 0]
        return c if self == ExactMatrix.scalar(self.rows, c, self.m) else None

    # ------------------------------------------------------------ slicing
    def select(self, row_idx: Sequence[int] | None = None, col_idx: Sequence[int] | None = None) -> "ExactMatrix":
        ri = list(range(self.rows)) if row_idx is None else list(row_idx)
        ci = list(range(self.cols)) if col_idx is None else list(col_idx)
        comps = []
        for M in self._c:
            if M is None:
                comps.append(None)
                continue
            arr = _np(M)
            sub = arr[np.ix_(ri, ci)] if ri and ci else np.empty((len(ri), len(ci)), dtype=object)
            comps.append(_fl(sub))
        return ExactMatrix(len(ri), len(ci), comps, self.m)

    def reshape(self, rows: int, cols: int) -> "ExactMatrix":
        if rows * cols != self.rows * self.cols:
            raise DimensionMismatch("reshape size")
        comps = [None if M is None else _fl(_np(M).reshape(rows, cols)) for M in self._c]
        return ExactMatrix(rows, cols, comps, self.m)

    def components_np(self) -> list:
        return [None if M is None else _np(M) for M in self._c]

    @classmethod
    def from_components_np(cls, arrs: Sequence, m: int, shape: tuple[int, int]):
        return cls(shape[0], shape[1], [None if a is None else _fl(a) for a in arrs], m)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, m={self.m})"

    def __str__(self):
        rows = [" ".join(str(x) for x in r) for r in self.to_lists()]
        return "[" + "\n ".join(rows) + "]"


def _np(M: flint.fmpq_mat) -> np.ndarray:
    r, c = M.nrows(), M.ncols()
    arr = np.empty((r, c), dtype=object)
    if r and c:
        arr.ravel()[:] = M.entries()
    return arr


def _fl(arr: np.ndarray) -> flint.fmpq_mat:
    r, c = arr.shape
    if r == 0 or c == 0:
        return flint.fmpq_mat(r, c)
    return flint.fmpq_mat(r, c, [x if isinstance(x, flint.fmpq) else _to_fmpq(x) for x in arr.ravel().tolist()])


def _ceq(x, y) -> bool:
    if x is None and y is None:
        return True
    if x is None:
        return _is_zero_mat(y)
    if y is None:
        return _is_zero_mat(x)
    return x == y


def _cadd(x, y):
    if x is None:
        return y
    if y is None:
        return x
    return x + y


def _common_order(xs: Iterable) -> int:
    m = 1
    for x in xs:
        if isinstance(x, CycNumber):
            m = m * x.m // gcd(m, x.m)
    return m


def _align(a: ExactMatrix, b: ExactMatrix):
    if a.m == b.m:
        return a, b
    L = a.m * b.m // gcd(a.m, b.m)
    return a.embed(L), b.embed(L)


def hstack(mats: Sequence[ExactMatrix]) -> ExactMatrix:
    m = _common_order_m(mats)
    mats = [M.embed(m) for M in mats]
    rows = mats[0].rows
    phi = field(m).phi
    comps = []
    for t in range(phi):
        if all(M._c[t] is None for M in mats):
            comps.append(None)
            continue
        comps.append(_fl(np.hstack([_np(M.comp(t)) for M in mats])))
    return ExactMatrix(rows, sum(M.cols for M in mats), comps, m)


def vstack(mats: Sequence[ExactMatrix]) -> ExactMatrix:
    m = _common_order_m(mats)
    mats = [M.embed(m) for M in mats]
    cols = mats[0].cols
    phi = field(m).phi
    comps = []
    for t in range(phi):
        if all(M._c[t] is None for M in mats):
            comps.append(None)
            continue
        comps.append(_fl(np.vstack([_np(M.comp(t)) for M in mats])))
    return ExactMatrix(sum(M.rows for M in mats), cols, comps, m)


def _common_order_m(mats: Sequence[ExactMatrix]) -> int:
    m = 1
    for M in mats:
        m = m * M.m // gcd(m, M.m)
    return m


def kron(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    """Kronecker product, index (i*rB + k, j*cB + l)."""
    A, B = _align(A, B)
    F = field(A.m)
    acc: dict = {}
    for s, X in enumerate(A._c):
        if X is None:
            continue
        Xn = _np(X)
        for t, Y in enumerate(B._c):
            if Y is None:
                continue
            P = np.kron(Xn, _np(Y))
            for v, c in enumerate(F.powers[s + t].coeffs()):
                if c:
                    term = P * c
                    acc[v] = acc[v] + term if v in acc else term
    return ExactMatrix.from_components_np([acc.get(v) for v in range(F.phi)], A.m, (A.rows * B.rows, A.cols * B.cols))


# ======================================================= restriction of scalars

def _mult_tables(m: int) -> list[np.ndarray]:
    """M_t[s, u] = coefficient u of z^(s+t); integer arrays."""
    F = field(m)
    out = []
    for t in range(F.phi):
        M = np.zeros((F.phi, F.phi), dtype=object)
        for s in range(F.phi):
            for u, c in enumerate(F.powers[s + t].coeffs()):
                M[s, u] = int(c)
        out.append(M)
    return out


_MT_CACHE: dict = {}


def _restrict_int(A: ExactMatrix) -> flint.fmpz_mat:
    """Integer matrix whose row space over Q is the Q-span of z^s * rows(A)."""
    phi = A.phi
    r, c = A.rows, A.cols
    if phi == 1:
        M = A.comp(0)
        num, den = M.numer_denom()
        return num
    if A.m not in _MT_CACHE:
        _MT_CACHE[A.m] = _mult_tables(A.m)
    MT = _MT_CACHE[A.m]
    nums = []
    dens = []
    for t, M in enumerate(A._c):
        if M is None:
            continue
        num, den = M.numer_denom()
        nums.append((t, num, int(den)))
        dens.append(int(den))
    L = 1
    for d in dens:
        L = L * d // gcd(L, d)
    big = 0
    parts = []
    for t, num, den in nums:
        arr = np.array([int(x) for x in num.entries()], dtype=object).reshape(r, c) * (L // den)
        if arr.size:
            big = max(big, max(abs(int(x)) for x in arr.ravel()))
        parts.append((t, arr))
    safe = big * 2 * phi < 2 ** 62
    acc = None
    for t, arr in parts:
        if safe:
            k = np.kron(arr.astype(np.int64), MT[t].astype(np.int64))
        else:
            k = np.kron(arr, MT[t])
        acc = k if acc is None else acc + k
    if acc is None:
        return flint.fmpz_mat(r * phi, c * phi)
    return flint.fmpz_mat(acc.tolist())


def _rref_raw(A: ExactMatrix):
    """Canonical K-rref.  Returns (list of rows as raw poly lists, pivots)."""
    phi = A.phi
    if A.rows == 0 or A.cols == 0:
        return [], []
    Z = _restrict_int(A)
    R, den, rank = Z.rref()
    if rank == 0:
        return [], []
    # take the first `rank` rows cheaply
    S = flint.fmpz_mat(rank, Z.nrows())
    for i in range(rank):
        S[i, i] = 1
    top = (S * R).entries()
    width = A.cols * phi
    den = flint.fmpq(den)
    rows, pivots = [], []
    for i in range(rank):
        row = top[i * width:(i + 1) * width]
        lead = next(k for k, x in enumerate(row) if x)
        if lead % phi:
            continue
        pivots.append(lead // phi)
        out = []
        for j in range(A.cols):
            seg = row[j * phi:(j + 1) * phi]
            out.append(flint.fmpq_poly([flint.fmpq(x) / den for x in seg]))
        rows.append(out)
    return rows, pivots


def rref(A: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    rows, piv = _rref_raw(A)
    ent = {(i, j): p for i, row in enumerate(rows) for j, p in enumerate(row) if not p.is_zero()}
    return ExactMatrix.from_raw_dict(len(rows), A.cols, ent, A.m), piv


def rank(A: ExactMatrix) -> int:
    if A.rows == 0 or A.cols == 0:
        return 0
    return _restrict_int(A).rank() // A.phi


# ======================================================= subspaces

class SubspaceBasis:
    """Subspace of K^n stored as its canonical reduced row echelon basis."""

    __slots__ = ("ambient_dim", "matrix", "pivots")

    def __init__(self, ambient_dim: int, matrix: ExactMatrix, pivots: Sequence[int]):
        self.ambient_dim = ambient_dim
        self.matrix = matrix
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, vectors: ExactMatrix | Sequence[Sequence], ambient_dim: int | None = None, m: int | None = None):
        """Canonical basis of the row span of `vectors`."""
        if not isinstance(vectors, ExactMatrix):
            vectors = list(vectors)
            if not vectors:
                return cls.zero(ambient_dim or 0, m or 1)
            vectors = ExactMatrix.from_rows(vectors, m)
        n = vectors.cols if ambient_dim is None else ambient_dim
        if vectors.cols != n:
            raise DimensionMismatch("vector length != ambient_dim")
        R, piv = rref(vectors)
        return cls(n, R, piv)

    @classmethod
    def zero(cls, n: int, m: int = 1) -> "SubspaceBasis":
        return cls(n, ExactMatrix.zeros(0, n, m), ())

    @classmethod
    def full(cls, n: int, m: int = 1) -> "SubspaceBasis":
        return cls(n, ExactMatrix.identity(n, m), tuple(range(n)))

    @property
    def m(self) -> int:
        return self.matrix.m

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def __len__(self) -> int:
        return self.dim

    @property
    def vectors(self) -> tuple:
        return tuple(self.matrix.row(i) for i in range(self.dim))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.pivots == other.pivots
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.ambient_dim, self.pivots))

    def __repr__(self):
        return f"SubspaceBasis(dim={self.dim}, ambient={self.ambient_dim})"

    def embed(self, target: int) -> "SubspaceBasis":
        return SubspaceBasis(self.ambient_dim, self.matrix.embed(target), self.pivots)

    def quotient_map(self) -> ExactMatrix:
        """(n - dim) x n matrix with kernel exactly this subspace."""
        n = self.ambient_dim
        free = [j for j in range(n) if j not in set(self.pivots)]
        ent: dict = {}
        rows = self.matrix.nonzero_raw()
        col_pos = {j: k for k, j in enumerate(free)}
        for k, j in enumerate(free):
            ent[(k, j)] = flint.fmpq_poly([1])
        for (r, c), p in rows.items():
            if c in col_pos:
                ent[(col_pos[c], self.pivots[r])] = -p
        return ExactMatrix.from_raw_dict(len(free), n, ent, self.m)

    def coordinates(self, v: ExactMatrix) -> ExactMatrix:
        """Coordinates (dim x k) of the columns of v, assumed to lie in the subspace."""
        return v.select(self.pivots, None)

    def contains(self, other: "SubspaceBasis") -> bool:
        if other.dim == 0:
            return True
        return (self.quotient_map() @ other.matrix.T).is_zero()

    def contains_vectors(self, V: ExactMatrix) -> bool:
        """V given as columns."""
        if V.cols == 0:
            return True
        return (self.quotient_map() @ V).is_zero()

    def __add__(self, other: "SubspaceBasis") -> "SubspaceBasis":
        return subspace_sum(self, other)

    def __and__(self, other: "SubspaceBasis") -> "SubspaceBasis":
        return intersect(self, other)


def subspace_sum(U: SubspaceBasis, V: SubspaceBasis) -> SubspaceBasis:
    if U.ambient_dim != V.ambient_dim:
        raise DimensionMismatch("ambient dims differ")
    if U.dim == 0:
        return V
    if V.dim == 0:
        return U
    return SubspaceBasis.span(vstack([U.matrix, V.matrix]), U.ambient_dim)


# ======================================================= named operations

def kernel(M: ExactMatrix) -> SubspaceBasis:
    """Canonical basis of {x : M x = 0}."""
    n = M.cols
    if M.rows == 0:
        return SubspaceBasis.full(n, M.m)
    rows, piv = _rref_raw(M)
    pset = set(piv)
    free = [j for j in range(n) if j not in pset]
    if not free:
        return SubspaceBasis.zero(n, M.m)
    ent: dict = {}
    one = flint.fmpq_poly([1])
    for k, f in enumerate(free):
        ent[(k, f)] = one
        for i, p in enumerate(piv):
            x = rows[i][f]
            if not x.is_zero():
                ent[(k, p)] = -x
    N = ExactMatrix.from_raw_dict(len(free), n, ent, M.m)
    return SubspaceBasis.span(N, n)


def preimage(M: ExactMatrix, W: SubspaceBasis) -> SubspaceBasis:
    """{x : M x in W}."""
    if W.ambient_dim != M.rows:
        raise DimensionMismatch(f"W lives in K^{W.ambient_dim}, M maps into K^{M.rows}")
    Q = W.quotient_map()
    if Q.rows == 0:
        return SubspaceBasis.full(M.cols, M.m)
    return kernel(Q @ M)


def intersect(U: SubspaceBasis, V: SubspaceBasis) -> SubspaceBasis:
    if U.ambient_dim != V.ambient_dim:
        raise DimensionMismatch("ambient dims differ")
    if U.dim == 0 or V.dim == 0:
        return SubspaceBasis.zero(U.ambient_dim, U.m)
    QU, QV = U.quotient_map(), V.quotient_map()
    if QU.rows == 0:
        return V
    if QV.rows == 0:
        return U
    return kernel(vstack([QU, QV]))


def image(M: ExactMatrix) -> SubspaceBasis:
    """Column space of M."""
    return SubspaceBasis.span(M.T, M.rows)


def solve(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix | None:
    """Some X with A X = B, or None when inconsistent."""
    if A.rows != B.rows:
        raise DimensionMismatch("solve: row counts differ")
    A, B = _align(A, B)
    aug = hstack([A, B])
    rows, piv = _rref_raw(aug)
    n = A.cols
    if any(p >= n for p in piv):
        return None
    ent = {}
    for i, p in enumerate(piv):
        for k in range(B.cols):
            x = rows[i][n + k]
            if not x.is_zero():
                ent[(p, k)] = x
    return ExactMatrix.from_raw_dict(n, B.cols, ent, A.m)


def inverse(A: ExactMatrix) -> ExactMatrix:
    if A.rows != A.cols:
        raise DimensionMismatch("inverse of non-square matrix")
    n = A.rows
    if n == 0:
        return A
    if A.phi == 1:
        M = A.comp(0)
        if M.rank() < n:
            raise NotInvertible("singular matrix")
        return ExactMatrix(n, n, [M.inv()], A.m)
    X = solve(A, ExactMatrix.identity(n, A.m))
    if X is None:
        raise NotInvertible("singular matrix")
    return X


def column_vector(v: Sequence, m: int) -> ExactMatrix:
    return ExactMatrix.from_columns([list(v)], m, rows=len(v))
