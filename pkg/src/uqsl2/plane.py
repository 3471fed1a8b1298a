"""The reduced quantum plane M: x y = q y x with x^N = y^N = 1.

M is a right comodule algebra for F (coaction delta_R(x y) = (x y) . T) and
hence a left module algebra for H via h |> z = (id (x) <h,.>) delta_R(z);
the left coaction delta_L gives the right action used by the twisted star
compatibility law.  Monomials x^r y^s (exponents mod N) form an N^2 basis.
"""

from __future__ import annotations

from functools import lru_cache

from . import cyclo, funalg, hopf


class IncompatiblePair(ValueError):
    """Star kinds on H and M do not match."""


class MAlgebra:
    def __init__(self, N: int):
        if N < 3 or N % 2 == 0:
            raise cyclo.UnsupportedN("N must be odd and >= 3")
        self.N = N
        self.field = cyclo.field(N)
        self.falg = funalg.falgebra(N)
        self.basis = [(r, s) for r in range(N) for s in range(N)]
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.dim = N * N
        self._act_mats = None

    def zero(self):
        return MElement(self, {})

    def one(self):
        return self.monomial((0, 0))

    def monomial(self, m, coef=1):
        c = coef if isinstance(coef, cyclo.CycloNum) else self.field.scalar(coef)
        if not c:
            return self.zero()
        return MElement(self, {tuple(m): c})

    def x(self):
        return self.monomial((1, 0))

    def y(self):
        return self.monomial((0, 1))

    # -- coactions -------------------------------------------------------------

    def coact_right(self, z: "MElement") -> dict:
        """delta_R(z) in M (x) F as {((r,s),(i,j,k)): coef}.

        delta_R(x) = x (x) a + y (x) c,  delta_R(y) = x (x) b + y (x) d,
        extended as an algebra homomorphism (componentwise products).
        """
        FA = self.falg
        one = self.field.one()
        dx = {((1, 0), (1, 0, 0)): one, ((0, 1), (0, 0, 1)): one}
        dy = _tensor_add(
            {((1, 0), (0, 1, 0)): one},
            {((0, 1), fm): c for fm, c in FA.d().terms.items()})
        out = {}
        for (r, s), v in z.terms.items():
            cur = {((0, 0), (0, 0, 0)): one}
            for _ in range(r):
                cur = self._tensor_mul_mf(cur, dx)
            for _ in range(s):
                cur = self._tensor_mul_mf(cur, dy)
            for key, w in cur.items():
                hopf._accum(out, key, v * w)
        return {k: v for k, v in out.items() if v}

    def coact_left(self, z: "MElement") -> dict:
        """delta_L(z) in F (x) M: delta_L(x) = a (x) x + b (x) y,
        delta_L(y) = c (x) x + d (x) y."""
        FA = self.falg
        one = self.field.one()
        dx = {((1, 0, 0), (1, 0)): one, ((0, 1, 0), (0, 1)): one}
        dy = _tensor_add(
            {((0, 0, 1), (1, 0)): one},
            {(fm, (0, 1)): c for fm, c in FA.d().terms.items()})
        out = {}
        for (r, s), v in z.terms.items():
            cur = {((0, 0, 0), (0, 0)): one}
            for _ in range(r):
                cur = self._tensor_mul_fm(cur, dx)
            for _ in range(s):
                cur = self._tensor_mul_fm(cur, dy)
            for key, w in cur.items():
                hopf._accum(out, key, v * w)
        return {k: v for k, v in out.items() if v}

    def _tensor_mul_mf(self, t1, t2):
        out = {}
        for (m1, f1), v in t1.items():
            for (m2, f2), w in t2.items():
                coef = v * w
                mm = self.monomial(m1) * self.monomial(m2)
                ff = self.falg.monomial(f1) * self.falg.monomial(f2)
                for km, cm in mm.terms.items():
                    for kf, cf in ff.terms.items():
                        hopf._accum(out, (km, kf), coef * cm * cf)
        return {k: v for k, v in out.items() if v}

    def _tensor_mul_fm(self, t1, t2):
        out = {}
        for (f1, m1), v in t1.items():
            for (f2, m2), w in t2.items():
                coef = v * w
                ff = self.falg.monomial(f1) * self.falg.monomial(f2)
                mm = self.monomial(m1) * self.monomial(m2)
                for kf, cf in ff.terms.items():
                    for km, cm in mm.terms.items():
                        hopf._accum(out, (kf, km), coef * cf * cm)
        return {k: v for k, v in out.items() if v}

    # -- actions ---------------------------------------------------------------

    def action_matrices(self) -> dict:
        """Matrices of the left action of X+, X-, K on the monomial basis."""
        if self._act_mats is None:
            H = hopf.algebra(self.N)
            gens = {"Xp": H.x_plus(), "Xm": H.x_minus(), "K": H.k()}
            mats = {g: [[self.field.zero() for _ in range(self.dim)]
                        for _ in range(self.dim)] for g in gens}
            for j, m in enumerate(self.basis):
                dr = self.coact_right(self.monomial(m))
                for g, h in gens.items():
                    for (mm, fm), v in dr.items():
                        p = funalg.pairing(self.falg.monomial(fm), h)
                        if p:
                            mats[g][self.index[mm]][j] = \
                                mats[g][self.index[mm]][j] + v * p
            self._act_mats = mats
        return self._act_mats

    def act_left(self, h: hopf.HElement, z: "MElement") -> "MElement":
        """h |> z = (id (x) <h, .>) delta_R(z)."""
        out = self.zero()
        for (mm, fm), v in self.coact_right(z).items():
            p = funalg.pairing(self.falg.monomial(fm), h)
            if p:
                out = out + self.monomial(mm, v * p)
        return out

    def act_right(self, z: "MElement", h: hopf.HElement) -> "MElement":
        """z <| h = (<h, .> (x) id) delta_L(z)."""
        out = self.zero()
        for (fm, mm), v in self.coact_left(z).items():
            p = funalg.pairing(self.falg.monomial(fm), h)
            if p:
                out = out + self.monomial(mm, v * p)
        return out

    # -- stars -------------------------------------------------------------------

    def m_star(self, kind: str, z: "MElement") -> "MElement":
        """x* = x, y* = y (hopf) or y* = +-y (twisted), antimultiplicative."""
        if kind not in ("hopf", "twisted+", "twisted-"):
            raise ValueError("unknown star kind %r" % kind)
        sgn = -1 if kind == "twisted-" else 1
        F = self.field
        out = self.zero()
        for (r, s), v in z.terms.items():
            # (x^r y^s)* = (y*)^s (x*)^r = (+-1)^s q^{-rs} x^r y^s
            coef = v.conj() * F.root_power(-r * s)
            if sgn == -1 and s % 2 == 1:
                coef = -coef
            out = out + self.monomial((r, s), coef)
        return out


def _tensor_add(t1, t2):
    out = dict(t1)
    for k, v in t2.items():
        hopf._accum(out, k, v)
    return out


@lru_cache(maxsize=None)
def malgebra(N: int = 3) -> MAlgebra:
    return MAlgebra(N)


class MElement:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: MAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def _coef(self, other):
        if isinstance(other, cyclo.CycloNum):
            return other
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.alg.field.scalar(other)
        return None

    def __add__(self, other):
        if not isinstance(other, MElement):
            c = self._coef(other)
            if c is None:
                return NotImplemented
            other = self.alg.monomial((0, 0), c)
        out = dict(self.terms)
        for m, v in other.terms.items():
            hopf._accum(out, m, v)
        return MElement(self.alg, {m: v for m, v in out.items() if v})

    __radd__ = __add__

    def __neg__(self):
        return MElement(self.alg, {m: -v for m, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, MElement)
                       else -self._coef(other))

    def __mul__(self, other):
        if not isinstance(other, MElement):
            c = self._coef(other)
            if c is None:
                return NotImplemented
            if not c:
                return self.alg.zero()
            return MElement(self.alg, {m: c * v for m, v in self.terms.items()})
        N = self.alg.N
        F = self.alg.field
        out = {}
        for (r, s), v in self.terms.items():
            for (p, t), w in other.terms.items():
                # y^s x^p = q^{-sp} x^p y^s; exponents wrap since x^N = y^N = 1
                hopf._accum(out, ((r + p) % N, (s + t) % N),
                            v * w * F.root_power(-s * p))
        return MElement(self.alg, {m: v for m, v in out.items() if v})

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
        if isinstance(other, MElement):
            return self.terms == other.terms
        c = self._coef(other)
        if c is None:
            return NotImplemented
        return self == self.alg.monomial((0, 0), c)

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.alg.N, tuple(sorted(self.terms.items()))))

    def coords(self):
        zero = self.alg.field.zero()
        out = [zero] * self.alg.dim
        for m, v in self.terms.items():
            out[self.alg.index[m]] = v
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            r, s = m
            names = []
            for e, g in ((r, "x"), (s, "y")):
                if e == 1:
                    names.append(g)
                elif e > 1:
                    names.append("%s^%d" % (g, e))
            mono = " ".join(names) if names else "1"
            parts.append("(%s) * %s" % (self.terms[m], mono))
        return " + ".join(parts)

    __repr__ = __str__


def m_multiply(z: MElement, w: MElement) -> MElement:
    return z * w


def left_mult_matrices(alg: MAlgebra) -> dict:
    """Matrices of left multiplication by x and y on the monomial basis."""
    out = {}
    for name, gen in (("x", alg.x()), ("y", alg.y())):
        M = [[alg.field.zero() for _ in range(alg.dim)] for _ in range(alg.dim)]
        for j, m in enumerate(alg.basis):
            prod = gen * alg.monomial(m)
            for mm, v in prod.terms.items():
                M[alg.index[mm]][j] = v
        out[name] = M
    return out


# -- checks --------------------------------------------------------------------


def check_module_algebra(alg: MAlgebra) -> dict:
    """h |> (z w) = (h_1 |> z)(h_2 |> w) for generators h and all monomial pairs."""
    H = hopf.algebra(alg.N)
    failures = []
    for gname, h in (("Xp", H.x_plus()), ("Xm", H.x_minus()), ("K", H.k())):
        dh = hopf.coproduct(h)
        for m1 in alg.basis:
            z = alg.monomial(m1)
            for m2 in alg.basis:
                w = alg.monomial(m2)
                lhs = alg.act_left(h, z * w)
                rhs = alg.zero()
                for (u, v), cf in dh.terms.items():
                    rhs = rhs + cf * (alg.act_left(H.monomial(u), z)
                                      * alg.act_left(H.monomial(v), w))
                if lhs != rhs:
                    failures.append((gname, m1, m2))
    return {"name": "module-algebra", "ok": not failures, "failures": failures}


def check_coaction_axiom(alg: MAlgebra) -> dict:
    """(delta_R (x) id) delta_R = (id (x) D_F) delta_R on all monomials."""
    failures = []
    for m in alg.basis:
        dr = alg.coact_right(alg.monomial(m))
        lhs = {}
        for (mm, fm), v in dr.items():
            for (mm2, fm2), w in alg.coact_right(alg.monomial(mm)).items():
                hopf._accum(lhs, (mm2, fm2, fm), v * w)
        rhs = {}
        for (mm, fm), v in dr.items():
            for (f1, f2), w in funalg.f_coproduct(alg.falg.monomial(fm)).terms.items():
                hopf._accum(rhs, (mm, f1, f2), v * w)
        if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
            failures.append(m)
    return {"name": "coaction-axiom", "ok": not failures, "failures": failures}


def check_m_star_compat(alg: MAlgebra, kind: str, hstar) -> dict:
    """Hopf law: h |> z* = [(S h)* |> z]*;  twisted law: z* <| h = [h* |> z]*."""
    if hstar.kind != kind:
        raise IncompatiblePair("star kind on H (%s) does not match %s"
                               % (hstar.kind, kind))
    H = hopf.algebra(alg.N)
    failures = []
    for gname, h in (("Xp", H.x_plus()), ("Xm", H.x_minus()), ("K", H.k())):
        for m in alg.basis:
            z = alg.monomial(m)
            if kind == "hopf":
                lhs = alg.act_left(h, alg.m_star(kind, z))
                rhs = alg.m_star(kind,
                                 alg.act_left(hstar.apply(hopf.antipode(h)), z))
            else:
                lhs = alg.act_right(alg.m_star(kind, z), h)
                rhs = alg.m_star(kind, alg.act_left(hstar.apply(h), z))
            if lhs != rhs:
                failures.append((gname, m))
    return {"name": "m-star-compatibility", "kind": kind,
            "ok": not failures, "failures": failures}


def matrix_unit_basis(alg: MAlgebra):
    """N^2 matrix units realizing M ~ M(N, C): discrete Fourier idempotents in
    x composed with shifts in y.  E[a][b] = e_a y^(a-b) with
    e_a = (1/N) sum_r q^(-ar) x^r."""
    from fractions import Fraction
    N = alg.N
    F = alg.field
    units = {}
    for a in range(N):
        e_a = alg.zero()
        for r in range(N):
            e_a = e_a + alg.monomial((r, 0),
                                     F.root_power(-a * r) * Fraction(1, N))
        for b in range(N):
            units[(a, b)] = e_a * (alg.y() ** ((a - b) % N))
    return units


def plane_representation(alg: MAlgebra):
    """The N^2-dimensional representation of H on M via the left action."""
    from . import reps
    return reps.Representation(hopf.algebra(alg.N), "plane",
                               alg.action_matrices(),
                               labels=["x^%d y^%d" % m for m in alg.basis])


def module_algebra_forms(alg: MAlgebra, kind: str):
    """Solve for forms invariant under both the H action and multiplication,
    normalizing (xy, xy) = 1 when the solution line permits."""
    from . import forms, linalg
    rep = plane_representation(alg)
    lm = left_mult_matrices(alg)
    sgn = -1 if kind == "twisted-" else 1
    F = alg.field
    mult_ops = [(lm["x"], lm["x"]),
                (lm["y"], linalg.mat_scale(F.scalar(sgn), lm["y"]))]
    space = forms.solve_module_algebra_form(rep, kind, mult_ops)
    if space.real_dim == 1:
        ixy = alg.index[(1, 1)]
        pivot = space.basis_forms[0].matrix[ixy][ixy]
        if pivot:
            space.basis_forms[0] = space.basis_forms[0].scale(pivot.inverse())
    return space


def decompose_module(alg: MAlgebra):
    """Split M into indecomposable summands under the left H action; returns
    (dimension, irreducible flag, socle dimension) triples plus the pieces."""
    from . import reps
    rep = plane_representation(alg)
    out = []
    for piece, sub in reps.decompose_representation(rep):
        irreducible = reps.module_radical(piece).dim == 0
        out.append({"dim": piece.dim, "irreducible": irreducible,
                    "socle_dim": reps.module_socle(piece).dim,
                    "rep": piece, "submodule": sub})
    return out


def check_matrix_algebra_iso(alg: MAlgebra) -> dict:
    """Multiplication table E_ab E_cd = delta_bc E_ad, exhaustively."""
    units = matrix_unit_basis(alg)
    N = alg.N
    failures = []
    for (a, b), e1 in units.items():
        for (c, d), e2 in units.items():
            expected = units[(a, d)] if b == c else alg.zero()
            if e1 * e2 != expected:
                failures.append(((a, b), (c, d)))
    # the units must also span: N^2 of them, linearly independent
    from . import linalg
    vecs = [units[k].coords() for k in sorted(units)]
    if len(linalg.span_echelon(vecs)) != N * N:
        failures.append("not spanning")
    return {"name": "matrix-algebra-iso", "ok": not failures, "failures": failures}
