"""The reduced function algebra F dual to H (reduced SL_q(2) at q^N = 1).

Generators a, b, c, d with ab = qba, ac = qca, bc = cb, bd = qdb, cd = qdc,
ad - da = (q - q^-1) bc and ad - qbc = 1, reduced by a^N = d^N = 1,
b^N = c^N = 0.  The determinant relation eliminates d as a basis letter:
d = a^(N-1) (1 + q b c), so monomials a^i b^j c^k (0 <= i, j, k < N) form an
N^3-dimensional basis.

The pairing with H is pinned on generators by the fundamental representation
rho(K) = diag(q, q^-1), rho(X+) = E12, rho(X-) = E21, i.e. <T_ij, h> =
rho(h)_ij for T = ((a, b), (c, d)), and extended by the duality laws
<f f', h> = <f (x) f', D h> and <D f, h (x) h'> = <f, h h'>.  The extension is
computed from tensor powers of the fundamental representation.
"""

from __future__ import annotations

from functools import lru_cache

from . import cyclo, hopf


class FAlgebra:
    def __init__(self, N: int):
        if N < 3 or N % 2 == 0:
            raise cyclo.UnsupportedN("N must be odd and >= 3")
        self.N = N
        self.field = cyclo.field(N)
        self.basis = [(i, j, k) for i in range(N) for j in range(N) for k in range(N)]
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.dim = N**3
        self._tensor_gens = {}  # m -> generator matrices of rho^(x)m, sparse dicts
        self._pair_matrix = {}  # (m, h_monomial) -> sparse matrix of h in rho^(x)m
        self._dpow = {}

    # -- constructors ----------------------------------------------------------

    def zero(self):
        return FElement(self, {})

    def one(self):
        return self.monomial((0, 0, 0))

    def monomial(self, m, coef=1):
        c = coef if isinstance(coef, cyclo.CycloNum) else self.field.scalar(coef)
        if not c:
            return self.zero()
        return FElement(self, {tuple(m): c})

    def a(self):
        return self.monomial((1, 0, 0))

    def b(self):
        return self.monomial((0, 1, 0))

    def c(self):
        return self.monomial((0, 0, 1))

    def d(self):
        """a^-1 (1 + q b c), expanded in the monomial basis."""
        q = self.field.q()
        return (self.monomial((self.N - 1, 0, 0))
                + self.monomial((self.N - 1, 1, 1), q))

    def d_power(self, i):
        hit = self._dpow.get(i)
        if hit is None:
            hit = self.one()
            for _ in range(i):
                hit = hit * self.d()
            self._dpow[i] = hit
        return hit

    def generators(self):
        return {"a": self.a(), "b": self.b(), "c": self.c(), "d": self.d()}

    # -- pairing machinery -------------------------------------------------------

    def _fund(self):
        F = self.field
        q = F.q()
        z, o = F.zero(), F.one()
        rho = {
            "Xp": {(0, 1): o},
            "Xm": {(1, 0): o},
            "K": {(0, 0): q, (1, 1): q.inverse()},
        }
        return rho

    def _tensor_generators(self, m):
        """Generator matrices of the m-fold tensor power of the fundamental rep."""
        hit = self._tensor_gens.get(m)
        if hit is not None:
            return hit
        F = self.field
        if m == 0:
            hit = {"Xp": {}, "Xm": {}, "K": {(0, 0): F.one()}}
        else:
            prev = self._tensor_generators(m - 1)
            rho = self._fund()
            eye_prev = {(i, i): F.one() for i in range(2 ** (m - 1))}
            eye2 = {(0, 0): F.one(), (1, 1): F.one()}
            hit = {
                # D(X+) = X+ (x) 1 + K (x) X+
                "Xp": _sp_add(_sp_kron(prev["Xp"], eye2, 2),
                              _sp_kron(prev["K"], rho["Xp"], 2)),
                # D(X-) = X- (x) K^-1 + 1 (x) X-
                "Xm": _sp_add(_sp_kron(prev["Xm"], _sp_inv_diag(rho["K"]), 2),
                              _sp_kron(eye_prev, rho["Xm"], 2)),
                "K": _sp_kron(prev["K"], rho["K"], 2),
            }
        self._tensor_gens[m] = hit
        return hit

    def _h_matrix(self, m, hmono):
        """Matrix of the PBW monomial in the m-fold tensor power rep."""
        key = (m, hmono)
        hit = self._pair_matrix.get(key)
        if hit is not None:
            return hit
        gens = self._tensor_generators(m)
        a, b, c = hmono
        size = 2**m
        out = {(i, i): self.field.one() for i in range(size)}
        for _ in range(a):
            out = _sp_mul(out, gens["Xp"])
        for _ in range(b):
            out = _sp_mul(out, gens["Xm"])
        for _ in range(c):
            out = _sp_mul(out, gens["K"])
        self._pair_matrix[key] = out
        return out

    def pair_monomials(self, fmono, hmono) -> cyclo.CycloNum:
        i, j, k = fmono
        m = i + j + k
        # letter a = T_11, b = T_12, c = T_21 (1-based); build row/col bit strings
        rowbits = [0] * i + [0] * j + [1] * k
        colbits = [0] * i + [1] * j + [0] * k
        row = 0
        for t in rowbits:
            row = (row << 1) | t
        col = 0
        for t in colbits:
            col = (col << 1) | t
        return self._h_matrix(m, hmono).get((row, col), self.field.zero())


@lru_cache(maxsize=None)
def falgebra(N: int = 3) -> FAlgebra:
    return FAlgebra(N)


# -- sparse helpers ------------------------------------------------------------


def _sp_add(A, B):
    out = dict(A)
    for k, v in B.items():
        w = out.get(k)
        w = v if w is None else w + v
        if w:
            out[k] = w
        elif k in out:
            del out[k]
    return out


def _sp_mul(A, B):
    rows = {}
    for (i, j), v in B.items():
        rows.setdefault(i, []).append((j, v))
    out = {}
    for (i, j), v in A.items():
        for (k, w) in rows.get(j, ()):
            key = (i, k)
            cur = out.get(key)
            term = v * w
            out[key] = term if cur is None else cur + term
    return {k: v for k, v in out.items() if v}


def _sp_kron(A, B, bdim):
    out = {}
    for (i, j), v in A.items():
        for (k, l), w in B.items():
            out[(i * bdim + k, j * bdim + l)] = v * w
    return out


def _sp_inv_diag(D):
    return {k: v.inverse() for k, v in D.items()}


class FElement:
    """Sparse element of F in the a^i b^j c^k basis."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: FAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def _coef(self, other):
        if isinstance(other, cyclo.CycloNum):
            return other
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.alg.field.scalar(other)
        return None

    def __add__(self, other):
        if not isinstance(other, FElement):
            c = self._coef(other)
            if c is None:
                return NotImplemented
            other = self.alg.monomial((0, 0, 0), c)
        out = dict(self.terms)
        for m, v in other.terms.items():
            hopf._accum(out, m, v)
        return FElement(self.alg, {m: v for m, v in out.items() if v})

    __radd__ = __add__

    def __neg__(self):
        return FElement(self.alg, {m: -v for m, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, FElement)
                       else -self._coef(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FElement):
            c = self._coef(other)
            if c is None:
                return NotImplemented
            if not c:
                return self.alg.zero()
            return FElement(self.alg, {m: c * v for m, v in self.terms.items()})
        N = self.alg.N
        F = self.alg.field
        out = {}
        for (i, j, k), v in self.terms.items():
            for (i2, j2, k2), w in other.terms.items():
                if j + j2 >= N or k + k2 >= N:
                    continue
                # b^j c^k a^{i2} = q^{-i2 (j+k)} a^{i2} b^j c^k
                coef = v * w * F.root_power(-i2 * (j + k))
                hopf._accum(out, ((i + i2) % N, j + j2, k + k2), coef)
        return FElement(self.alg, {m: v for m, v in out.items() if v})

    def __rmul__(self, other):
        c = self._coef(other)
        if c is None:
            return NotImplemented
        return self * c

    def __pow__(self, n: int):
        assert n >= 0
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, FElement):
            return self.terms == other.terms
        c = self._coef(other)
        if c is None:
            return NotImplemented
        return self == self.alg.monomial((0, 0, 0), c)

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.alg.N, tuple(sorted(self.terms.items()))))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            i, j, k = m
            names = []
            for e, g in ((i, "a"), (j, "b"), (k, "c")):
                if e == 1:
                    names.append(g)
                elif e > 1:
                    names.append("%s^%d" % (g, e))
            mono = " ".join(names) if names else "1"
            parts.append("(%s) * %s" % (self.terms[m], mono))
        return " + ".join(parts)

    __repr__ = __str__


class FTensorElement:
    """Sparse element of F (x) F (componentwise product)."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: FAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def __add__(self, other):
        out = dict(self.terms)
        for t, v in other.terms.items():
            hopf._accum(out, t, v)
        return FTensorElement(self.alg, {k: v for k, v in out.items() if v})

    def __sub__(self, other):
        return self + FTensorElement(other.alg,
                                     {k: -v for k, v in other.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, FTensorElement):
            return FTensorElement(self.alg,
                                  {k: v * other for k, v in self.terms.items()
                                   if v * other})
        out = {}
        for (u1, u2), v in self.terms.items():
            for (w1, w2), v2 in other.terms.items():
                coef = v * v2
                left = self.alg.monomial(u1) * self.alg.monomial(w1)
                right = self.alg.monomial(u2) * self.alg.monomial(w2)
                for p1, c1 in left.terms.items():
                    for p2, c2 in right.terms.items():
                        hopf._accum(out, (p1, p2), coef * c1 * c2)
        return FTensorElement(self.alg, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, FTensorElement) and self.terms == other.terms

    def flip(self):
        return FTensorElement(self.alg,
                              {(b, a): v for (a, b), v in self.terms.items()})

    def pairs(self):
        for (m1, m2), v in self.terms.items():
            yield self.alg.monomial(m1), self.alg.monomial(m2), v


# -- Hopf operations on F -------------------------------------------------------


def f_multiply(f: FElement, g: FElement) -> FElement:
    return f * g


def _gen_coproducts(alg: FAlgebra):
    one = alg.field.one()
    a, b, c, d = (alg.a(), alg.b(), alg.c(), alg.d())
    table = {}
    for name, pieces in (
        ("a", ((a, a), (b, c))),
        ("b", ((a, b), (b, d))),
        ("c", ((c, a), (d, c))),
        ("d", ((c, b), (d, d))),
    ):
        t = FTensorElement(alg, {})
        for left, right in pieces:
            cur = {}
            for m1, c1 in left.terms.items():
                for m2, c2 in right.terms.items():
                    hopf._accum(cur, (m1, m2), c1 * c2)
            t = t + FTensorElement(alg, cur)
        table[name] = t
    return table


def f_coproduct(f: FElement) -> FTensorElement:
    alg = f.alg
    gc = _gen_coproducts(alg)
    out = FTensorElement(alg, {})
    unit = FTensorElement(alg, {((0, 0, 0), (0, 0, 0)): alg.field.one()})
    for (i, j, k), v in f.terms.items():
        cur = unit
        for _ in range(i):
            cur = cur * gc["a"]
        for _ in range(j):
            cur = cur * gc["b"]
        for _ in range(k):
            cur = cur * gc["c"]
        out = out + v * cur
    return out


def f_counit(f: FElement) -> cyclo.CycloNum:
    total = f.alg.field.zero()
    for (i, j, k), v in f.terms.items():
        if j == 0 and k == 0:
            total = total + v
    return total


def f_antipode(f: FElement) -> FElement:
    """Antipode from the inverse matrix: S(a) = d, S(b) = -q^-1 b,
    S(c) = -q c, S(d) = a, extended antimultiplicatively."""
    alg = f.alg
    q = alg.field.q()
    out = alg.zero()
    for (i, j, k), v in f.terms.items():
        piece = alg.monomial((0, 0, 0), v)
        # S(a^i b^j c^k) = S(c)^k S(b)^j S(a)^i
        piece = piece * (((-q) * alg.c()) ** k)
        piece = piece * (((-q.inverse()) * alg.b()) ** j)
        piece = piece * alg.d_power(i)
        out = out + piece
    return out


def pairing(f: FElement, h: hopf.HElement) -> cyclo.CycloNum:
    assert f.alg.N == h.alg.N
    total = f.alg.field.zero()
    for fm, vf in f.terms.items():
        for hm, vh in h.terms.items():
            p = f.alg.pair_monomials(fm, hm)
            if p:
                total = total + vf * vh * p
    return total


def tensor_pairing(t: FTensorElement, th: hopf.HTensorElement) -> cyclo.CycloNum:
    total = t.alg.field.zero()
    for (f1, f2), v in t.terms.items():
        for (h1, h2), w in th.terms.items():
            p1 = t.alg.pair_monomials(f1, h1)
            if not p1:
                continue
            p2 = t.alg.pair_monomials(f2, h2)
            if p2:
                total = total + v * w * p1 * p2
    return total


# -- stars on F ------------------------------------------------------------------


class FStar:
    """Star on F: the SL_q(2,R) Hopf star or a twisted star, by kind name."""

    def __init__(self, alg: FAlgebra, kind: str):
        if kind not in ("hopf", "twisted+", "twisted-"):
            raise ValueError("unknown star kind %r" % kind)
        self.alg = alg
        self.kind = kind
        if kind == "hopf":
            self.images = {"a": alg.a(), "b": alg.b(), "c": alg.c(), "d": alg.d()}
        else:
            sgn = 1 if kind == "twisted+" else -1
            self.images = {"a": alg.a(), "b": sgn * alg.c(),
                           "c": sgn * alg.b(), "d": alg.d()}
        self._cache = {}

    def apply(self, f: FElement) -> FElement:
        out = self.alg.zero()
        for m, v in f.terms.items():
            out = out + v.conj() * self._mono(m)
        return out

    def _mono(self, m):
        hit = self._cache.get(m)
        if hit is None:
            i, j, k = m
            hit = (self.images["c"] ** k) * (self.images["b"] ** j) \
                * (self.images["a"] ** i)
            self._cache[m] = hit
        return hit


def f_star(kind_or_star, f: FElement) -> FElement:
    s = kind_or_star if isinstance(kind_or_star, FStar) else FStar(f.alg, kind_or_star)
    return s.apply(f)


def check_star_duality(alg: FAlgebra, kind: str, hstar) -> dict:
    """Duality of stars on all (generator of F) x (PBW basis of H) pairs.

    Hopf law:    <f*, h> = conj <f, (S h)*>
    twisted law: <f*, h> = conj <f, h*>
    """
    H = hopf.algebra(alg.N)
    fs = FStar(alg, kind)
    failures = []
    for name, f in alg.generators().items():
        for m in H.basis:
            h = H.monomial(m)
            lhs = pairing(fs.apply(f), h)
            if kind == "hopf":
                rhs = pairing(f, hstar.apply(hopf.antipode(h))).conj()
            else:
                rhs = pairing(f, hstar.apply(h)).conj()
            if lhs != rhs:
                failures.append((name, m))
    return {"name": "star-duality", "kind": kind, "ok": not failures,
            "failures": failures}


# -- invariant integrals as elements of F ----------------------------------------


def lambda_left(alg: FAlgebra) -> FElement:
    """(1 + a + ... + a^(N-1)) b^(N-1) c^(N-1)."""
    N = alg.N
    s = alg.zero()
    for i in range(N):
        s = s + alg.monomial((i, 0, 0))
    return s * alg.monomial((0, N - 1, N - 1))


def lambda_right(alg: FAlgebra) -> FElement:
    N = alg.N
    s = alg.zero()
    for i in range(N):
        s = s + alg.monomial((i, 0, 0))
    return alg.monomial((0, N - 1, N - 1)) * s


# -- quantum metric identities ----------------------------------------------------


def quantum_metric_check(alg: FAlgebra, kind: str) -> dict:
    """Exactly verify the 2x2 metric identity in M(2, F).

    Hopf star:    T^dag Sigma T = Sigma with Sigma = ((0, q^-1/2), (-q^1/2, 0)).
    Twisted star: (S T)^dag Sigma_pm T = Sigma_pm with Sigma_pm = diag(1, +-1).
    """
    F = alg.field
    fs = FStar(alg, kind)
    a, b, c, d = alg.a(), alg.b(), alg.c(), alg.d()
    T = [[a, b], [c, d]]
    if kind == "hopf":
        s = F.sqrt_q()
        sigma = [[F.zero(), s.inverse()], [-s, F.zero()]]
        left = T
    else:
        sgn = F.one() if kind == "twisted+" else -F.one()
        sigma = [[F.one(), F.zero()], [F.zero(), sgn]]
        left = [[f_antipode(x) for x in row] for row in T]
    # dag: transpose + entrywise star
    left_dag = [[fs.apply(left[j][i]) for j in range(2)] for i in range(2)]
    failures = []
    for i in range(2):
        for j in range(2):
            acc = alg.zero()
            for k in range(2):
                for l in range(2):
                    if sigma[k][l]:
                        acc = acc + left_dag[i][k] * sigma[k][l] * T[l][j]
            expected = alg.monomial((0, 0, 0), sigma[i][j]) if sigma[i][j] else alg.zero()
            if acc != expected:
                failures.append(((i, j), str(acc)))
    return {"name": "quantum-metric", "kind": kind, "ok": not failures,
            "failures": failures}
