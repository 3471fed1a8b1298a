"""The N^3-dimensional Hopf algebra H with generators X+, X-, K.

Relations:  K X+- = q^{+-2} X+- K,   [X+, X-] = (K - K^-1)/(q - q^-1),
            K^N = 1,   X+^N = X-^N = 0.
Coproducts: D(X+) = X+ (x) 1 + K (x) X+,   D(X-) = X- (x) K^-1 + 1 (x) X-,
            D(K)  = K (x) K.

Elements are sparse maps from PBW monomials X+^a X-^b K^c (stored as integer
triples (a, b, c) with 0 <= a, b, c < N) to Q(q) coefficients.  The product
normal-orders by a cached rewrite of adjacent generator pairs, pruning zero
coefficients eagerly so equality is coefficient-wise.
"""

from __future__ import annotations

from functools import lru_cache

from . import cyclo


class HAlgebra:
    """Container for one N: basis bookkeeping and cached structure maps."""

    def __init__(self, N: int):
        if N < 3 or N % 2 == 0:
            raise cyclo.UnsupportedN("N must be odd and >= 3")
        self.N = N
        self.field = cyclo.field(N)
        self.basis = [(a, b, c) for a in range(N) for b in range(N) for c in range(N)]
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.dim = N**3
        self._mono_cache = {}
        self._mid_cache = {}
        self._cop_cache = {}
        self._antipode_cache = {}
        self._antipode_inv_cache = {}
        q = self.field.q()
        self._casimir_coef = (q - q.inverse()).inverse()  # 1/(q - q^-1)

    # -- element constructors ------------------------------------------------

    def zero(self):
        return HElement(self, {})

    def one(self):
        return self.monomial((0, 0, 0))

    def monomial(self, m, coef=1):
        c = coef if isinstance(coef, cyclo.CycloNum) else self.field.scalar(coef)
        if not c:
            return self.zero()
        return HElement(self, {tuple(m): c})

    def x_plus(self):
        return self.monomial((1, 0, 0))

    def x_minus(self):
        return self.monomial((0, 1, 0))

    def k(self, power=1):
        return self.monomial((0, 0, power % self.N))

    def k_inv(self):
        return self.k(self.N - 1)

    def generators(self):
        return {"Xp": self.x_plus(), "Xm": self.x_minus(), "K": self.k()}

    def from_coords(self, coords):
        """Element with the given coefficient per basis monomial (lex order)."""
        terms = {}
        for m, c in zip(self.basis, coords):
            if c:
                terms[m] = c
        return HElement(self, terms)

    # -- normal ordering -----------------------------------------------------

    def _xm_xp(self, b):
        """X-^b X+ as a normal-ordered term dict."""
        key = b
        hit = self._mid_cache.get(key)
        if hit is not None:
            return hit
        F = self.field
        if b == 0:
            out = {(1, 0, 0): F.one()}
        else:
            out = {}
            # E(b) = E(b-1) X-  -  X-^{b-1} (K - K^-1)/(q - q^-1)
            for (al, be, ga), v in self._xm_xp(b - 1).items():
                if be + 1 < self.N:
                    _accum(out, (al, be + 1, ga), v * F.root_power(-2 * ga))
            c1 = self._casimir_coef
            _accum(out, (0, b - 1, 1), -c1)
            _accum(out, (0, b - 1, self.N - 1), c1)
        out = {m: v for m, v in out.items() if v}
        self._mid_cache[key] = out
        return out

    def _mono_mul(self, m1, m2):
        """Product of two PBW monomials as a normal-ordered term dict."""
        key = (m1, m2)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        N, F = self.N, self.field
        a, b, c = m1
        a2, b2, c2 = m2
        out = {}
        if a2 == 0:
            # X+^a X-^b K^c X-^{b2} K^{c2}
            if b + b2 < N:
                _accum(out, (a, b + b2, (c + c2) % N), F.root_power(-2 * c * b2))
        else:
            # move K^c across X+^{a2}, then eat X+ factors one at a time
            coef = F.root_power(2 * a2 * c)
            mid = {(a, b, 0): coef}
            for _ in range(a2):
                nxt = {}
                for (al, be, ga), v in mid.items():
                    # (al, be, ga) * X+ = q^{2 ga} X+^{al} (X-^{be} X+) K^{ga}
                    vv = v * F.root_power(2 * ga)
                    for (al2, be2, ga2), w in self._xm_xp(be).items():
                        if al + al2 < N:
                            _accum(nxt, (al + al2, be2, (ga + ga2) % N), vv * w)
                mid = {m: v for m, v in nxt.items() if v}
            # re-attach K^c, cross it (with the accumulated K^ga) over X-^{b2}
            for (al, be, ga), v in mid.items():
                if be + b2 < N:
                    _accum(out, (al, be + b2, (ga + c + c2) % N),
                           v * F.root_power(-2 * (ga + c) * b2))
        out = {m: v for m, v in out.items() if v}
        self._mono_cache[key] = out
        return out

    # -- coalgebra -----------------------------------------------------------

    def _mono_coproduct(self, m):
        hit = self._cop_cache.get(m)
        if hit is not None:
            return hit
        F = self.field
        one = F.one()
        a, b, c = m
        # D(X+) = X+ (x) 1 + K (x) X+ ; D(X-) = X- (x) K^-1 + 1 (x) X- ; D(K) = K (x) K
        cur = {((0, 0, 0), (0, 0, 0)): one}
        dxp = {((1, 0, 0), (0, 0, 0)): one, ((0, 0, 1), (1, 0, 0)): one}
        dxm = {((0, 1, 0), (0, 0, self.N - 1)): one, ((0, 0, 0), (0, 1, 0)): one}
        for _ in range(a):
            cur = self._tensor_mul(cur, dxp)
        for _ in range(b):
            cur = self._tensor_mul(cur, dxm)
        if c:
            dk = {((0, 0, c), (0, 0, c)): one}
            cur = self._tensor_mul(cur, dk)
        self._cop_cache[m] = cur
        return cur

    def _tensor_mul(self, t1, t2):
        """Componentwise product in H (x) H (no braiding)."""
        out = {}
        for (u1, u2), v in t1.items():
            for (w1, w2), v2 in t2.items():
                coef = v * v2
                for p1, c1 in self._mono_mul(u1, w1).items():
                    left = coef * c1
                    for p2, c2 in self._mono_mul(u2, w2).items():
                        _accum(out, (p1, p2), left * c2)
        return {k: v for k, v in out.items() if v}

    def _mono_antipode(self, m):
        hit = self._antipode_cache.get(m)
        if hit is None:
            a, b, c = m
            sk = self.k(-1)
            sxp = -(self.k(-1) * self.x_plus())
            sxm = -(self.x_minus() * self.k())
            hit = (sk**c) * (sxm**b) * (sxp**a)
            self._antipode_cache[m] = hit
        return hit

    def _mono_antipode_inv(self, m):
        hit = self._antipode_inv_cache.get(m)
        if hit is None:
            a, b, c = m
            sk = self.k(-1)
            sxp = -(self.x_plus() * self.k(-1))
            sxm = -(self.k() * self.x_minus())
            hit = (sk**c) * (sxm**b) * (sxp**a)
            self._antipode_inv_cache[m] = hit
        return hit


def _accum(d, key, val):
    cur = d.get(key)
    if cur is None:
        d[key] = val
    else:
        d[key] = cur + val


@lru_cache(maxsize=None)
def algebra(N: int = 3) -> HAlgebra:
    return HAlgebra(N)


class HElement:
    """Sparse element of H; immutable by convention (never mutate .terms)."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: HAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    # -- ring structure ------------------------------------------------------

    def _coef(self, other):
        if isinstance(other, cyclo.CycloNum):
            return other
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.alg.field.scalar(other)
        return None

    def __add__(self, other):
        if not isinstance(other, HElement):
            c = self._coef(other)
            if c is None:
                return NotImplemented
            other = self.alg.monomial((0, 0, 0), c)
        out = dict(self.terms)
        for m, v in other.terms.items():
            _accum(out, m, v)
        return HElement(self.alg, {m: v for m, v in out.items() if v})

    __radd__ = __add__

    def __neg__(self):
        return HElement(self.alg, {m: -v for m, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, HElement) else -self._coef(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, HElement):
            c = self._coef(other)
            if c is None:
                return NotImplemented
            if not c:
                return self.alg.zero()
            return HElement(self.alg, {m: c * v for m, v in self.terms.items()})
        alg = self.alg
        out = {}
        for m1, v1 in self.terms.items():
            for m2, v2 in other.terms.items():
                coef = v1 * v2
                for m, w in alg._mono_mul(m1, m2).items():
                    _accum(out, m, coef * w)
        return HElement(alg, {m: v for m, v in out.items() if v})

    def __rmul__(self, other):
        c = self._coef(other)
        if c is None:
            return NotImplemented
        return self * c

    def __pow__(self, n: int):
        assert n >= 0
        out = self.alg.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, HElement):
            return self.terms == other.terms
        c = self._coef(other)
        if c is None:
            return NotImplemented
        return self == self.alg.monomial((0, 0, 0), c)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.alg.N, tuple(sorted(self.terms.items(),
                                              key=lambda kv: kv[0]))))

    def coords(self):
        """Dense coefficient vector over the lex-ordered PBW basis."""
        zero = self.alg.field.zero()
        out = [zero] * self.alg.dim
        for m, v in self.terms.items():
            out[self.alg.index[m]] = v
        return out

    def coefficient(self, m):
        return self.terms.get(tuple(m), self.alg.field.zero())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            a, b, c = m
            names = []
            for e, g in ((a, "Xp"), (b, "Xm"), (c, "K")):
                if e == 1:
                    names.append(g)
                elif e > 1:
                    names.append("%s^%d" % (g, e))
            mono = " ".join(names) if names else "1"
            parts.append("(%s) * %s" % (self.terms[m], mono))
        return " + ".join(parts)

    __repr__ = __str__


# -- Hopf structure maps -----------------------------------------------------


def multiply(x: HElement, y: HElement) -> HElement:
    return x * y


def coproduct(x: HElement) -> "HTensorElement":
    alg = x.alg
    out = {}
    for m, v in x.terms.items():
        for t, w in alg._mono_coproduct(m).items():
            _accum(out, t, v * w)
    return HTensorElement(alg, {k: v for k, v in out.items() if v})


def counit(x: HElement) -> cyclo.CycloNum:
    total = x.alg.field.zero()
    for (a, b, c), v in x.terms.items():
        if a == 0 and b == 0:
            total = total + v
    return total


def antipode(x: HElement) -> HElement:
    out = x.alg.zero()
    for m, v in x.terms.items():
        out = out + v * x.alg._mono_antipode(m)
    return out


def antipode_inverse(x: HElement) -> HElement:
    out = x.alg.zero()
    for m, v in x.terms.items():
        out = out + v * x.alg._mono_antipode_inv(m)
    return out


class HTensorElement:
    """Sparse element of H (x) H."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: HAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def __add__(self, other):
        out = dict(self.terms)
        for t, v in other.terms.items():
            _accum(out, t, v)
        return HTensorElement(self.alg, {k: v for k, v in out.items() if v})

    def __neg__(self):
        return HTensorElement(self.alg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HTensorElement):
            return HTensorElement(self.alg,
                                  self.alg._tensor_mul(self.terms, other.terms))
        return HTensorElement(self.alg,
                              {k: v * other for k, v in self.terms.items() if v * other})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, HTensorElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def flip(self) -> "HTensorElement":
        return HTensorElement(self.alg,
                              {(b, a): v for (a, b), v in self.terms.items()})

    def pairs(self):
        """Iterate (h1, h2, coefficient) triples of pure tensors."""
        for (m1, m2), v in self.terms.items():
            yield self.alg.monomial(m1), self.alg.monomial(m2), v

    def apply_right(self, func) -> HElement:
        """Sum of h1 * func(h2) over all terms; func maps HElement -> scalar."""
        out = self.alg.zero()
        for (m1, m2), v in self.terms.items():
            s = func(self.alg.monomial(m2))
            if s:
                out = out + (v * s) * self.alg.monomial(m1)
        return out

    def apply_left(self, func) -> HElement:
        out = self.alg.zero()
        for (m1, m2), v in self.terms.items():
            s = func(self.alg.monomial(m1))
            if s:
                out = out + (v * s) * self.alg.monomial(m2)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (m1, m2) in sorted(self.terms):
            v = self.terms[(m1, m2)]
            bits.append("(%s) * [%s (x) %s]"
                        % (v, _mono_str(m1), _mono_str(m2)))
        return " + ".join(bits)

    __repr__ = __str__


def _mono_str(m):
    a, b, c = m
    names = []
    for e, g in ((a, "Xp"), (b, "Xm"), (c, "K")):
        if e == 1:
            names.append(g)
        elif e > 1:
            names.append("%s^%d" % (g, e))
    return " ".join(names) if names else "1"


def tensor_coproduct_op(x: HElement) -> HTensorElement:
    """The opposite coproduct D^op = flip . D."""
    return coproduct(x).flip()
