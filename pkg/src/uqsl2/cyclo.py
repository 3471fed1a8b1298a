"""Exact arithmetic in the cyclotomic field Q(q), q a fixed primitive N-th root
of unity (N odd, default 3).

Elements are stored fully reduced modulo the N-th cyclotomic polynomial
Phi_N, as vectors of phi(N) rationals in the power basis {1, q, ..,
q^(phi(N)-1)}.  Because Phi_N is irreducible this is a field: the zero test
is exact (all coordinates zero) and every nonzero element is invertible.

Complex conjugation is the field automorphism q |-> q^(N-1).  Signs of
conjugation-fixed ("real") elements are decided by an adaptive-precision
interval evaluation at the embedding q = exp(2*pi*i*k/N); exactness of the
zero test guarantees termination.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

ENV_SIGN_BITS = "UQSL2_SIGN_BITS"


class DivisionByZero(ZeroDivisionError):
    """Inversion of the zero element."""


class NotReal(ValueError):
    """sign_real applied to an element not fixed by conjugation."""


class UnsupportedN(ValueError):
    """Operation undefined for this N (e.g. sqrt_q with N even)."""


def _poly_divmod(num, den):
    # exact division in Q[x]; coefficient lists low -> high
    num = list(num)
    out = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    dlead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / dlead
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return out, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients (low -> high, monic, integral) of Phi_n."""
    if n == 1:
        return (Fraction(-1), Fraction(1))
    poly = [Fraction(0)] * (n + 1)
    poly[0], poly[n] = Fraction(-1), Fraction(1)  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert rem == [Fraction(0)] or rem == [0]
    return tuple(poly)


class CycloField:
    """The field Q(q) for one fixed N, with precomputed reduction data.

    Use :func:`field` to obtain the shared instance for a given N.
    """

    def __init__(self, N: int):
        if N < 2:
            raise ValueError("N must be >= 2")
        self.N = N
        phi_poly = cyclotomic_polynomial(N)
        self.degree = len(phi_poly) - 1
        self.modulus = phi_poly
        # q^m reduced mod Phi_N, for m = 0 .. 2*(degree-1); row m is a coeff vector
        rows = []
        cur = [Fraction(0)] * self.degree
        cur[0] = Fraction(1)
        for _ in range(2 * self.degree - 1):
            rows.append(tuple(cur))
            nxt = [Fraction(0)] + cur[:-1]
            lead = cur[-1]
            if lead:
                for j in range(self.degree):
                    nxt[j] -= lead * phi_poly[j]
            cur = nxt
        self._power_rows = rows
        # conj sends q^j to q^(j*(N-1) mod N), reduced
        self._conj_rows = tuple(self.root_power(j * (N - 1)).coeffs
                                for j in range(self.degree))

    # -- constructors ------------------------------------------------------

    def zero(self) -> "CycloNum":
        return CycloNum(self, (Fraction(0),) * self.degree)

    def one(self) -> "CycloNum":
        return self.scalar(1)

    def scalar(self, r) -> "CycloNum":
        v = [Fraction(0)] * self.degree
        v[0] = Fraction(r)
        return CycloNum(self, tuple(v))

    def q(self) -> "CycloNum":
        return self.root_power(1)

    def root_power(self, m: int) -> "CycloNum":
        """q^m for any integer m (exponent taken mod N)."""
        m %= self.N
        if m < self.degree:
            v = [Fraction(0)] * self.degree
            v[m] = Fraction(1)
            return CycloNum(self, tuple(v))
        # reduce q^m by repeated multiplication through the cached rows
        x = self.root_power(self.degree - 1)
        for _ in range(m - self.degree + 1):
            x = x * self.q()
        return x

    def from_coeffs(self, coeffs) -> "CycloNum":
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.degree:
            raise ValueError("expected %d coefficients" % self.degree)
        return CycloNum(self, coeffs)

    def sqrt_q(self) -> "CycloNum":
        """The square root q^((N+1)/2) of q; requires N odd."""
        if self.N % 2 == 0:
            raise UnsupportedN("square root of q in Q(q) needs N odd")
        return self.root_power((self.N + 1) // 2)

    def embedding(self, k: int = 1, precision: int = 0) -> "EmbeddingChoice":
        e = EmbeddingChoice(k, precision or default_sign_bits())
        if math.gcd(e.k, self.N) != 1:
            raise ValueError("embedding index %d not coprime to %d" % (e.k, self.N))
        return e


@lru_cache(maxsize=None)
def field(N: int) -> CycloField:
    return CycloField(N)


@dataclass(frozen=True)
class EmbeddingChoice:
    """Selects the embedding q |-> exp(2*pi*i*k/N) and a starting precision."""

    k: int = 1
    precision: int = 64


def default_sign_bits() -> int:
    try:
        return max(16, int(os.environ.get(ENV_SIGN_BITS, "64")))
    except ValueError:
        return 64


class CycloNum:
    """An element of Q(q), immutable, always in canonical reduced form."""

    __slots__ = ("field", "coeffs", "_hash", "_inv")

    def __init__(self, fld: CycloField, coeffs: tuple):
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_inv", None)

    def __setattr__(self, *a):
        raise AttributeError("CycloNum is immutable")

    # -- helpers -----------------------------------------------------------

    def _promote(self, other):
        if isinstance(other, CycloNum):
            if other.field is not self.field:
                raise ValueError("mixed cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not rational: %s" % self)
        return self.coeffs[0]

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        o = self._promote(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloNum(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._promote(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloNum(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._promote(other)
        if o is NotImplemented:
            return NotImplemented
        d = self.field.degree
        a, b = self.coeffs, o.coeffs
        conv = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        rows = self.field._power_rows
        out = [Fraction(0)] * d
        for m, cm in enumerate(conv):
            if cm:
                row = rows[m]
                for j in range(d):
                    if row[j]:
                        out[j] += cm * row[j]
        return CycloNum(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self._inv is not None:
            return self._inv
        if self.is_zero():
            raise DivisionByZero("cannot invert 0 in Q(q)")
        # extended euclid in Q[x] against Phi_N; track u with r_i = u_i * self mod Phi_N
        r0, r1 = list(self.field.modulus), list(self.coeffs)
        while len(r1) > 1 and r1[-1] == 0:
            r1.pop()
        u0, u1 = [Fraction(0)], [Fraction(1)]
        while not (len(r1) == 1 and r1[0] == 0):
            quo, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            prod = [Fraction(0)] * (len(quo) + len(u1) - 1)
            for i, qi in enumerate(quo):
                if qi:
                    for j, uj in enumerate(u1):
                        prod[i + j] += qi * uj
            new_u = [Fraction(0)] * max(len(u0), len(prod))
            for i, c in enumerate(u0):
                new_u[i] += c
            for i, c in enumerate(prod):
                new_u[i] -= c
            while len(new_u) > 1 and new_u[-1] == 0:
                new_u.pop()
            u0, u1 = u1, new_u
        # r0 is the nonzero constant gcd and u0 * self = r0 mod Phi_N
        assert len(r0) == 1 and r0[0] != 0
        inv_lead = Fraction(1) / r0[0]
        out = self.field.zero()
        for m, cm in enumerate(u0):
            if cm:
                out = out + (cm * inv_lead) * self.field.root_power(m)
        object.__setattr__(self, "_inv", out)
        object.__setattr__(out, "_inv", self)
        return out

    def __truediv__(self, other):
        o = self._promote(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "CycloNum":
        rows = self.field._conj_rows
        d = self.field.degree
        out = [Fraction(0)] * d
        for j, cj in enumerate(self.coeffs):
            if cj:
                row = rows[j]
                for i in range(d):
                    if row[i]:
                        out[i] += cj * row[i]
        return CycloNum(self.field, tuple(out))

    def is_real(self) -> bool:
        return self.conj() == self

    # -- comparisons, hashing, rendering ------------------------------------

    def __eq__(self, other):
        o = self._promote(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.field.N, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                parts.append((c < 0, str(abs(c))))
                continue
            mono = "q" if j == 1 else "q^%d" % j
            if abs(c) == 1:
                parts.append((c < 0, mono))
            else:
                parts.append((c < 0, "%s*%s" % (abs(c), mono)))
        if not parts:
            return "0"
        neg, txt = parts[0]
        out = ("-" if neg else "") + txt
        for neg, txt in parts[1:]:
            out += (" - " if neg else " + ") + txt
        return out

    __repr__ = __str__


def conj(x: CycloNum) -> CycloNum:
    return x.conj()


# -- certified sign of real elements ---------------------------------------


def real_interval(x: CycloNum, emb: EmbeddingChoice, bits: int):
    """Enclosure of Re(x) at q = exp(2*pi*i*k/N), as an mpmath iv interval."""
    iv = mpmath.iv
    old = iv.prec
    try:
        iv.prec = bits
        N = x.field.N
        two_pi = 2 * iv.pi
        total = iv.mpf(0)
        for j, c in enumerate(x.coeffs):
            if c:
                ang = two_pi * ((j * emb.k) % N) / N
                total += (iv.mpf(c.numerator) / c.denominator) * iv.cos(ang)
        return total
    finally:
        iv.prec = old


def imag_interval(x: CycloNum, emb: EmbeddingChoice, bits: int):
    """Enclosure of Im(x) at q = exp(2*pi*i*k/N)."""
    iv = mpmath.iv
    old = iv.prec
    try:
        iv.prec = bits
        N = x.field.N
        two_pi = 2 * iv.pi
        total = iv.mpf(0)
        for j, c in enumerate(x.coeffs):
            if c:
                ang = two_pi * ((j * emb.k) % N) / N
                total += (iv.mpf(c.numerator) / c.denominator) * iv.sin(ang)
        return total
    finally:
        iv.prec = old


def sign_real(x: CycloNum, emb: EmbeddingChoice | None = None) -> int:
    """Exact sign (-1, 0, +1) of a conjugation-fixed element under the embedding.

    Zero is decided from the coordinates alone; a nonzero element has nonzero
    image under every primitive embedding (Phi_N is irreducible), so interval
    refinement terminates.
    """
    if emb is None:
        emb = EmbeddingChoice(1, default_sign_bits())
    if math.gcd(emb.k, x.field.N) != 1:
        raise ValueError("embedding index %d not coprime to %d" % (emb.k, x.field.N))
    if not x.is_real():
        raise NotReal("element is not fixed by conjugation: %s" % x)
    if x.is_zero():
        return 0
    bits = max(16, emb.precision)
    while True:
        box = real_interval(x, emb, bits)
        if box.a > 0:
            return 1
        if box.b < 0:
            return -1
        bits *= 2


def numeric_value(x: CycloNum, emb: EmbeddingChoice | None = None, dps: int = 60):
    """High-precision floating approximation of x, for test oracles only."""
    if emb is None:
        emb = EmbeddingChoice(1, default_sign_bits())
    with mpmath.workdps(dps):
        N = x.field.N
        q = mpmath.e ** (2j * mpmath.pi * emb.k / N)
        return sum(mpmath.mpf(c.numerator) / c.denominator * q**j
                   for j, c in enumerate(x.coeffs))
