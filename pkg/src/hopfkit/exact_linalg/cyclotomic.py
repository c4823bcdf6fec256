"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored in the power basis 1, z, ..., z^(phi(m)-1), reduced
modulo the m-th cyclotomic polynomial.  Internally the coefficient vector
is a flint ``fmpq_poly``; the public surface only exposes ``Fraction``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

import flint

from ..errors import DivisionByZero, ParseError

Rational = Fraction
Scalar = Union["CycNumber", int, Fraction]

_ZERO = flint.fmpq_poly([])


def _totient(n: int) -> int:
    out, k, p = n, n, 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            out -= out // p
        p += 1
    if k > 1:
        out -= out // k
    return out


def _mobius(n: int) -> int:
    sign, k, p = 1, n, 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            sign = -sign
        p += 1
    if k > 1:
        sign = -sign
    return sign


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class CycField:
    """Per-order constants shared by all elements of Q(zeta_m)."""

    __slots__ = ("m", "phi", "modulus", "powers", "traces", "units")

    def __init__(self, m: int):
        if m < 1:
            raise ValueError(f"cyclotomic order must be >= 1, got {m}")
        self.m = m
        self.phi = _totient(m)
        self.modulus = flint.fmpq_poly(list(flint.fmpz_poly.cyclotomic(m).coeffs()))
        # z^k reduced, for 0 <= k < max(m, 2*phi - 1)
        top = max(m, 2 * self.phi - 1)
        self.powers = [flint.fmpq_poly([0] * k + [1]) % self.modulus for k in range(top)]
        tr = []
        for t in range(self.phi):
            g = gcd(m, t)
            q = m // g
            tr.append(flint.fmpq(_mobius(q) * self.phi // _totient(q)))
        self.traces = tr
        self.units = [k for k in range(1, m + 1) if gcd(k, m) == 1]

    def reduce(self, poly: flint.fmpq_poly) -> flint.fmpq_poly:
        if poly.degree() < self.phi:
            return poly
        return poly % self.modulus

    def zeta_power(self, k: int) -> flint.fmpq_poly:
        return self.powers[k % self.m]

    def coeff_list(self, poly: flint.fmpq_poly) -> list:
        cs = poly.coeffs()
        return cs + [flint.fmpq(0)] * (self.phi - len(cs))

    def trace(self, poly: flint.fmpq_poly) -> flint.fmpq:
        s = flint.fmpq(0)
        for c, t in zip(poly.coeffs(), self.traces):
            if c:
                s += c * t
        return s

    def galois(self, poly: flint.fmpq_poly, k: int) -> flint.fmpq_poly:
        """Apply z -> z^k."""
        out = _ZERO
        for t, c in enumerate(poly.coeffs()):
            if c:
                out += c * self.powers[(t * k) % self.m]
        return out

    def inverse(self, poly: flint.fmpq_poly) -> flint.fmpq_poly:
        if poly.is_zero():
            raise DivisionByZero("inverse of zero in Q(zeta_%d)" % self.m)
        if poly.degree() == 0:
            return flint.fmpq_poly([1 / poly.coeffs()[0]])
        g, s, _ = poly.xgcd(self.modulus)
        return self.reduce(s / g)


@lru_cache(maxsize=None)
def field(m: int) -> CycField:
    return CycField(m)


def embed_poly(poly: flint.fmpq_poly, m: int, target: int) -> flint.fmpq_poly:
    """Image of an element of Q(zeta_m) in Q(zeta_target), m | target."""
    if m == target:
        return poly
    if target % m:
        raise ValueError(f"Q(zeta_{m}) does not embed in Q(zeta_{target})")
    step = target // m
    F = field(target)
    out = _ZERO
    for t, c in enumerate(poly.coeffs()):
        if c:
            out += c * F.zeta_power(t * step)
    return out


class CycNumber:
    """An element of Q(zeta_m).  Immutable."""

    __slots__ = ("_m", "_p")

    def __init__(self, coeffs: Iterable = (), m: int = 1):
        F = field(m)
        self._m = m
        self._p = F.reduce(flint.fmpq_poly([_to_fmpq(c) for c in coeffs]))

    @classmethod
    def _raw(cls, m: int, poly: flint.fmpq_poly) -> "CycNumber":
        obj = object.__new__(cls)
        obj._m = m
        obj._p = poly
        return obj

    # -- construction helpers
    @classmethod
    def rational(cls, value, m: int = 1) -> "CycNumber":
        return cls._raw(m, flint.fmpq_poly([_to_fmpq(value)]))

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "CycNumber":
        return cls._raw(m, field(m).zeta_power(k))

    # -- views
    @property
    def m(self) -> int:
        return self._m

    @property
    def order(self) -> int:
        return self._m

    @property
    def coeffs(self) -> tuple:
        F = field(self._m)
        return tuple(Fraction(int(c.p), int(c.q)) for c in F.coeff_list(self._p))

    @property
    def raw(self) -> flint.fmpq_poly:
        return self._p

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_rational(self) -> bool:
        return self._p.degree() <= 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        if self._p.is_zero():
            return Fraction(0)
        c = self._p.coeffs()[0]
        return Fraction(int(c.p), int(c.q))

    def sort_key(self) -> tuple:
        return self.coeffs

    # -- field change
    def embed(self, target: int) -> "CycNumber":
        return CycNumber._raw(target, embed_poly(self._p, self._m, target))

    def galois(self, k: int) -> "CycNumber":
        return CycNumber._raw(self._m, field(self._m).galois(self._p, k))

    def _coerce(self, other):
        if isinstance(other, CycNumber):
            if other._m == self._m:
                return self._m, self._p, other._p
            L = _lcm(self._m, other._m)
            return L, embed_poly(self._p, self._m, L), embed_poly(other._p, other._m, L)
        if isinstance(other, (int, Fraction, flint.fmpq)):
            return self._m, self._p, flint.fmpq_poly([_to_fmpq(other)])
        return None

    # -- arithmetic
    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return CycNumber._raw(c[0], c[1] + c[2])

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return CycNumber._raw(c[0], c[1] - c[2])

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return CycNumber._raw(c[0], c[2] - c[1])

    def __neg__(self):
        return CycNumber._raw(self._m, -self._p)

    def __pos__(self):
        return self

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return CycNumber._raw(c[0], field(c[0]).reduce(c[1] * c[2]))

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        return CycNumber._raw(self._m, field(self._m).inverse(self._p))

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        F = field(c[0])
        return CycNumber._raw(c[0], F.reduce(c[1] * F.inverse(c[2])))

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        F = field(c[0])
        return CycNumber._raw(c[0], F.reduce(c[2] * F.inverse(c[1])))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        F = field(self._m)
        base = self._p if n >= 0 else F.inverse(self._p)
        n = abs(n)
        out = flint.fmpq_poly([1])
        while n:
            if n & 1:
                out = F.reduce(out * base)
            n >>= 1
            if n:
                base = F.reduce(base * base)
        return CycNumber._raw(self._m, out)

    # -- comparison
    def __eq__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return c[1] == c[2]

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        # normalized trace is invariant under field embeddings
        F = field(self._m)
        if self._p.degree() <= 0:
            return hash(self._p.coeffs()[0] if self._p.degree() == 0 else flint.fmpq(0))
        return hash(F.trace(self._p) / F.phi) ^ 0x5BD1E995

    def __bool__(self):
        return not self._p.is_zero()

    def __repr__(self):
        return f"CycNumber({format_coeff(self)!r}, m={self._m})"

    def __str__(self):
        return format_coeff(self)


def _to_fmpq(c) -> flint.fmpq:
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, int):
        return flint.fmpq(c)
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    if isinstance(c, flint.fmpz):
        return flint.fmpq(c)
    if isinstance(c, str):
        return _to_fmpq(Fraction(c))
    raise TypeError(f"not a rational coefficient: {c!r}")


def as_cyc(x: Scalar, m: int) -> CycNumber:
    """Coerce a scalar into Q(zeta_m) (embedding if x lives in a subfield)."""
    if isinstance(x, CycNumber):
        if x.m == m:
            return x
        if m % x.m == 0:
            return x.embed(m)
        if x.is_rational():
            return CycNumber.rational(x.to_fraction(), m)
        raise ValueError(f"{x} (order {x.m}) does not live in Q(zeta_{m})")
    return CycNumber.rational(x, m)


# ---------------------------------------------------------------- named operations

def cyc_reduce(raw_coeffs: Sequence, m: int) -> CycNumber:
    """Residue of sum raw_coeffs[k] z^k modulo the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return CycNumber(raw_coeffs, m)


def cyc_inverse(a: CycNumber) -> CycNumber:
    return a.inverse()


def root_of_unity_order(a: CycNumber) -> int | None:
    """Least n >= 1 with a^n = 1, or None.

    Every root of unity in Q(zeta_m) has order dividing lcm(2, m), so only
    divisors of that number need testing.
    """
    if a.is_zero():
        return None
    L = _lcm(2, a.m)
    if a ** L != 1:
        return None
    for n in range(1, L + 1):
        if L % n == 0 and a ** n == 1:
            return n
    return None  # unreachable


def roots_of_unity(m: int) -> list[CycNumber]:
    """All roots of unity contained in Q(zeta_m), ordered by exponent."""
    L = _lcm(2, m)
    base = CycNumber.zeta(L, 1)
    if L != m:
        # zeta_{2m} = -zeta_m^((m+1)/2) for odd m
        z = CycNumber.zeta(m, (m + 1) // 2)
        base = -z
    return [base ** k for k in range(L)]


# ---------------------------------------------------------------- text form

def format_coeff(a: CycNumber) -> str:
    """Canonical text: '0', '3/4', '1-2*z+1/3*z^2', 'z^3', '-z'."""
    terms = []
    for t, c in enumerate(a.coeffs):
        if c == 0:
            continue
        mono = "" if t == 0 else ("z" if t == 1 else f"z^{t}")
        if t == 0:
            body = str(c)
        elif c == 1:
            body = mono
        elif c == -1:
            body = "-" + mono
        else:
            body = f"{c}*{mono}"
        if terms and not body.startswith("-"):
            body = "+" + body
        terms.append(body)
    return "".join(terms) if terms else "0"


_TERM = re.compile(r"([+-]?)(?:(\d+(?:/\d+)?)(?:\*(z(?:\^(\d+))?))?|(z(?:\^(\d+))?))")


def parse_coeff(text: str, m: int) -> CycNumber:
    """Inverse of :func:`format_coeff`; accepts any order of terms."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty coefficient")
    pos = 0
    acc: dict[int, Fraction] = {}
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if not mt or mt.end() == pos or (pos > 0 and not mt.group(1)):
            raise ParseError(f"bad coefficient {text!r} at offset {pos}")
        sign = -1 if mt.group(1) == "-" else 1
        if mt.group(2) is not None:
            try:
                c = Fraction(mt.group(2))
            except ZeroDivisionError:
                raise ParseError(f"zero denominator in {text!r}") from None
            if mt.group(3):
                k = int(mt.group(4)) if mt.group(4) else 1
            else:
                k = 0
        else:
            c = Fraction(1)
            k = int(mt.group(6)) if mt.group(6) else 1
        acc[k] = acc.get(k, Fraction(0)) + sign * c
        pos = mt.end()
    top = max(acc) if acc else 0
    raw = [acc.get(k, Fraction(0)) for k in range(top + 1)]
    return CycNumber(raw, m)
