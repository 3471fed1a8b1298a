"""Adjoint action, quantum trace, Killing forms and invariant integrals on H.

The adjoint action is ad_X(Y) = X_1 Y S(X_2).  With u = K^-1 (the group-like
element implementing S^2(h) = u h u^-1), the quantum trace in a
representation is Tr_q(X) = Tr(rho(u) rho(X)), and the Killing form in the
left regular representation is (X, Y)_u = Tr_q(X Y).  Composing with a star
gives the sesquilinear form (X, Y) = Tr_q(X* Y), hermitian for the Hopf star
(up to a unit phase that can be absorbed) and provably not hermitianizable
for the twisted stars.

The invariant integrals are the dual-basis functionals
int_L = (X+^(N-1) X-^(N-1) K)^*  and  int_R = (X+^(N-1) X-^(N-1) K^-1)^*;
they give the scalar product (X, Y)_L = int_L(X* Y), which for the Hopf star
is hermitian and nondegenerate, and positive definite on a Wedderburn
complement of the radical.
"""

from __future__ import annotations

import random

from . import cyclo, forms, hopf, linalg, reps, stars


def adjoint_action(x: hopf.HElement, y: hopf.HElement) -> hopf.HElement:
    out = x.alg.zero()
    for (m1, m2), c in hopf.coproduct(x).terms.items():
        out = out + c * (x.alg.monomial(m1) * y
                         * hopf.antipode(x.alg.monomial(m2)))
    return out


def quantum_trace(rep: reps.Representation, x: hopf.HElement) -> cyclo.CycloNum:
    """Tr(rho(K^-1) rho(x)) in the given representation."""
    alg = x.alg
    if rep.name == "regular":
        return reps.trace_of_left_mult(alg.k_inv() * x)
    M = rep.matrix_of(alg.k_inv() * x)
    t = alg.field.zero()
    for i in range(rep.dim):
        t = t + M[i][i]
    return t


def killing_form(x: hopf.HElement, y: hopf.HElement) -> cyclo.CycloNum:
    """(X, Y)_u = Tr_q(X Y) in the left regular representation."""
    return reps.trace_of_left_mult(x.alg.k_inv() * x * y)


def _unit_phases(F):
    out = []
    for j in range(F.N):
        out.append(F.root_power(j))
        out.append(-F.root_power(j))
    return out


def hermitianized_killing(N: int, star_kind: str) -> dict:
    """Gram matrix of (X, Y) = Tr_q(X* Y) on the PBW basis, with the phase
    normalization and hermiticity analysis."""
    A = hopf.algebra(N)
    F = A.field
    st = stars.star_structure(A, star_kind)
    rows = []
    for m in A.basis:
        left = A.k_inv() * st.apply(A.monomial(m))
        row = []
        for n in A.basis:
            row.append(reps.trace_of_left_mult(left * A.monomial(n)))
        rows.append(row)
    G = rows
    Gd = linalg.dagger(G)
    if linalg.mat_eq(G, Gd):
        return {"form": forms.HermitianForm(G, True), "hermitian": True,
                "phase": F.one(), "witness": None}
    # try to absorb a unit phase: mu G hermitian <=> G^dag = (mu/conj mu) G
    for mu in _unit_phases(F):
        MG = linalg.mat_scale(mu, G)
        if linalg.mat_eq(MG, linalg.dagger(MG)):
            return {"form": forms.HermitianForm(MG, True), "hermitian": True,
                    "phase": mu, "witness": None}
    witness = None
    for i in range(A.dim):
        for j in range(A.dim):
            if G[i][j] != Gd[i][j]:
                witness = (i, j, G[i][j], Gd[i][j])
                break
        if witness:
            break
    return {"form": forms.HermitianForm(G, False), "hermitian": False,
            "phase": None, "witness": witness}


def adjoint_table_check(N: int = 3) -> dict:
    """The nine adjoint-action identities on generators."""
    A = hopf.algebra(N)
    F = A.field
    q = F.q()
    K, Xp, Xm = A.k(), A.x_plus(), A.x_minus()
    one = A.one()
    inv = (q - q.inverse()).inverse()
    expected = [
        ("ad_K(K)", K, K, K),
        ("ad_K(Xm)", K, Xm, (q**-2) * Xm),
        ("ad_K(Xp)", K, Xp, (q**2) * Xp),
        ("ad_Xp(K)", Xp, K, (1 - q**2) * (Xp * K)),
        ("ad_Xp(Xp)", Xp, Xp, (1 - q**2) * (Xp * Xp)),
        ("ad_Xp(Xm)", Xp, Xm,
         (1 - q**-2) * (Xp * Xm) + ((q**3 - q).inverse()) * (K - A.k_inv())),
        ("ad_Xm(K)", Xm, K, (1 - q**-2) * (Xm * K * K)),
        ("ad_Xm(Xm)", Xm, Xm, A.zero()),
        ("ad_Xm(Xp)", Xm, Xp, inv * (one - K * K)),
    ]
    failures = []
    for name, x, y, want in expected:
        if adjoint_action(x, y) != want:
            failures.append(name)
    return {"name": "adjoint-table", "ok": not failures, "failures": failures}


def check_ad_is_action(N: int = 3, samples: int = 40, seed: int = 17) -> dict:
    """ad_{XY}(Z) = ad_X(ad_Y(Z)) and ad_X(YZ) = ad_{X_1}(Y) ad_{X_2}(Z)."""
    A = hopf.algebra(N)
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        x, y, z = (A.monomial(rng.choice(A.basis), rng.randint(1, 3))
                   for _ in range(3))
        if adjoint_action(x * y, z) != adjoint_action(x, adjoint_action(y, z)):
            failures.append(("left-action", str(x), str(y), str(z)))
        lhs = adjoint_action(x, y * z)
        rhs = A.zero()
        for (m1, m2), c in hopf.coproduct(x).terms.items():
            rhs = rhs + c * (adjoint_action(A.monomial(m1), y)
                             * adjoint_action(A.monomial(m2), z))
        if lhs != rhs:
            failures.append(("multiplicativity", str(x), str(y), str(z)))
    return {"name": "ad-action-laws", "ok": not failures, "failures": failures}


def check_trace_lemma(N: int = 3, samples: int = 40, seed: int = 23) -> dict:
    """Tr(u ad_X(Y)) = Tr(u Y) eps(X) in the regular representation."""
    A = hopf.algebra(N)
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        x, y = (A.monomial(rng.choice(A.basis), rng.randint(1, 3))
                for _ in range(2))
        lhs = reps.trace_of_left_mult(A.k_inv() * adjoint_action(x, y))
        rhs = reps.trace_of_left_mult(A.k_inv() * y) * hopf.counit(x)
        if lhs != rhs:
            failures.append((str(x), str(y)))
    return {"name": "trace-lemma", "ok": not failures, "failures": failures}


def check_killing_symmetry(N: int = 3, samples: int = 30, seed: int = 5) -> dict:
    """(Y, X)_u = (X, S^2(Y))_u."""
    A = hopf.algebra(N)
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        x, y = (A.monomial(rng.choice(A.basis), rng.randint(1, 3))
                for _ in range(2))
        if killing_form(y, x) != killing_form(x, hopf.antipode(hopf.antipode(y))):
            failures.append((str(x), str(y)))
    return {"name": "killing-symmetry", "ok": not failures, "failures": failures}


def check_killing_invariances(N: int, star_kind: str, samples: int = 25,
                              seed: int = 9) -> dict:
    """Adjoint invariance of (.,.)_u; for the Hopf star also the hermitianized
    invariances and multiplication invariance of Tr_q(X* Y)."""
    A = hopf.algebra(N)
    st = stars.star_structure(A, star_kind)
    rng = random.Random(seed)
    failures = []

    def hk(x, y):
        return reps.trace_of_left_mult(A.k_inv() * st.apply(x) * y)

    gens = {"Xp": A.x_plus(), "Xm": A.x_minus(), "K": A.k()}
    for _ in range(samples):
        x, y = (A.monomial(rng.choice(A.basis), rng.randint(1, 3))
                for _ in range(2))
        for gname, z in gens.items():
            dz = hopf.coproduct(z)
            # (ad_{Z_1}(X), ad_{Z_2}(Y))_u = (X, Y)_u eps(Z)
            total = A.field.zero()
            for (m1, m2), c in dz.terms.items():
                total = total + c * killing_form(
                    adjoint_action(A.monomial(m1), x),
                    adjoint_action(A.monomial(m2), y))
            if total != killing_form(x, y) * hopf.counit(z):
                failures.append(("ad-invariance", gname))
            if star_kind == "hopf":
                # (ad_{(S Z_1)*}(X), ad_{Z_2}(Y)) = (X, Y) eps(Z)
                total = A.field.zero()
                for (m1, m2), c in dz.terms.items():
                    total = total + c * hk(
                        adjoint_action(st.apply(hopf.antipode(A.monomial(m1))), x),
                        adjoint_action(A.monomial(m2), y))
                if total != hk(x, y) * hopf.counit(z):
                    failures.append(("hermitianized-ad-invariance", gname))
                # (ad_Z(X), Y) = (X, ad_{Z*}(Y))
                if hk(adjoint_action(z, x), y) != hk(x, adjoint_action(st.apply(z), y)):
                    failures.append(("star-representation", gname))
        # (X Y, Z) = (Y, X* Z)
        z = A.monomial(rng.choice(A.basis), rng.randint(1, 3))
        if hk(x * y, z) != hk(y, st.apply(x) * z):
            failures.append(("multiplication-invariance",))
    return {"name": "killing-invariances", "kind": star_kind,
            "ok": not failures, "failures": failures}


# -- invariant integrals ------------------------------------------------------------


class LinearFunctional:
    """A functional on H given by its values on the PBW basis."""

    def __init__(self, alg: hopf.HAlgebra, values: dict, name=""):
        self.alg = alg
        self.values = values
        self.name = name

    def __call__(self, x: hopf.HElement) -> cyclo.CycloNum:
        total = self.alg.field.zero()
        for m, c in x.terms.items():
            v = self.values.get(m)
            if v:
                total = total + c * v
        return total


def integrals(N: int = 3):
    """(int_L, int_R): the dual-basis functionals of X+^(N-1) X-^(N-1) K and
    X+^(N-1) X-^(N-1) K^-1."""
    A = hopf.algebra(N)
    one = A.field.one()
    int_l = LinearFunctional(A, {(N - 1, N - 1, 1): one}, "int_L")
    int_r = LinearFunctional(A, {(N - 1, N - 1, N - 1): one}, "int_R")
    return int_l, int_r


def check_integral_invariance(N: int = 3) -> dict:
    """Left invariance h_1 int_L(h_2) = int_L(h) 1 on every monomial, the
    mirrored law for int_R, failure of the crossed laws, and
    non-unimodularity (no nonzero bi-invariant functional)."""
    A = hopf.algebra(N)
    F = A.field
    int_l, int_r = integrals(N)
    failures = []
    left_ok_for_r = True
    right_ok_for_l = True
    for m in A.basis:
        h = A.monomial(m)
        dh = hopf.coproduct(h)
        if dh.apply_right(int_l) != int_l(h) * A.one():
            failures.append(("left-invariance", m))
        if dh.apply_left(int_r) != int_r(h) * A.one():
            failures.append(("right-invariance", m))
        if dh.apply_left(int_l) != int_l(h) * A.one():
            right_ok_for_l = False
        if dh.apply_right(int_r) != int_r(h) * A.one():
            left_ok_for_r = False
    if right_ok_for_l:
        failures.append(("int_L unexpectedly right-invariant",))
    if left_ok_for_r:
        failures.append(("int_R unexpectedly left-invariant",))
    if int_l(A.one()):
        failures.append(("int_L(1) != 0",))
    # invariant-functional solution spaces
    left_dim = len(_invariant_functionals(A, side="left"))
    both = _invariant_functionals(A, side="both")
    if left_dim != 1:
        failures.append(("left-invariant space dim", left_dim))
    if both:
        failures.append(("bi-invariant space dim", len(both)))
    return {"name": "integral-invariance", "ok": not failures,
            "failures": failures, "left_invariant_dim": left_dim,
            "bi_invariant_dim": len(both)}


def _invariant_functionals(A, side):
    F = A.field
    rows = []
    for m in A.basis:
        h = A.monomial(m)
        dh = hopf.coproduct(h)
        # unknown phi values per basis monomial; for "left":
        #   sum h1 phi(h2) - phi(h) 1 = 0
        if side in ("left", "both"):
            per_pos = [dict() for _ in range(A.dim)]
            for (m1, m2), c in dh.terms.items():
                per_pos[A.index[m1]][A.index[m2]] = \
                    per_pos[A.index[m1]].get(A.index[m2], F.zero()) + c
            per_pos[A.index[(0, 0, 0)]][A.index[m]] = \
                per_pos[A.index[(0, 0, 0)]].get(A.index[m], F.zero()) - F.one()
            for row in per_pos:
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
        if side in ("right", "both"):
            per_pos = [dict() for _ in range(A.dim)]
            for (m1, m2), c in dh.terms.items():
                per_pos[A.index[m2]][A.index[m1]] = \
                    per_pos[A.index[m2]].get(A.index[m1], F.zero()) + c
            per_pos[A.index[(0, 0, 0)]][A.index[m]] = \
                per_pos[A.index[(0, 0, 0)]].get(A.index[m], F.zero()) - F.one()
            for row in per_pos:
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    return linalg.sparse_nullspace(rows, A.dim, F)


def integral_gram(N: int, star_kind: str, side: str = "left"):
    """Gram matrix of (X, Y) = int(X* Y) on the PBW basis."""
    A = hopf.algebra(N)
    st = stars.star_structure(A, star_kind)
    int_l, int_r = integrals(N)
    func = int_l if side == "left" else int_r
    G = []
    for m in A.basis:
        left = st.apply(A.monomial(m))
        row = []
        for n in A.basis:
            row.append(func(left * A.monomial(n)))
        G.append(row)
    return G


def integral_scalar_product(N: int, star_kind: str, emb=None) -> dict:
    """The integral scalar product and its analysis block."""
    A = hopf.algebra(N)
    F = A.field
    G = integral_gram(N, star_kind)
    Gd = linalg.dagger(G)
    hermitian = linalg.mat_eq(G, Gd)
    symmetric = linalg.mat_eq(G, linalg.transpose(G))
    out = {"gram": G, "hermitian": hermitian, "symmetric": symmetric}
    out["rank"] = linalg.rank(G)
    out["nondegenerate"] = out["rank"] == A.dim
    if hermitian:
        form = forms.HermitianForm(G, True)
        out["signature"] = forms.signature(form, emb)
        W = reps.wedderburn(N)
        vectors = [c.coords() for c in W.complement_basis]
        out["complement_signature"] = forms.signature(form.restrict(vectors), emb)
        out["form"] = form
    else:
        witness = None
        for i in range(A.dim):
            for j in range(A.dim):
                if G[i][j] != Gd[i][j]:
                    witness = (i, j, G[i][j], Gd[i][j])
                    break
            if witness:
                break
        out["witness"] = witness
        # hermitian conjugation swaps the left and right integrals instead:
        # int_L(X* Y) = conj(int_R(Y* X)), exactly
        GR = integral_gram(N, star_kind, side="right")
        out["left_right_dagger_duality"] = linalg.mat_eq(G, linalg.dagger(GR))
    return out


def check_integral_product_invariance(N: int, star_kind: str, samples=20,
                                      seed=31) -> dict:
    """For the Hopf star: 1_H (X, Y) = X_1* Y_1 (X_2, Y_2); for the twisted
    stars the mixed law 1_H (X, Y) = X_2* Y_1 (X_1, Y_2).  Also hermiticity of
    integral values int_L(X*) = conj(int_L(X)) on all monomials (Hopf)."""
    A = hopf.algebra(N)
    st = stars.star_structure(A, star_kind)
    int_l, _ = integrals(N)
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        x, y = (A.monomial(rng.choice(A.basis), rng.randint(1, 3))
                for _ in range(2))
        dx = hopf.coproduct(x)
        dy = hopf.coproduct(y)
        acc = A.zero()
        for (x1, x2), cx in dx.terms.items():
            for (y1, y2), cy in dy.terms.items():
                if star_kind == "hopf":
                    scal = int_l(st.apply(A.monomial(x2)) * A.monomial(y2))
                    if scal:
                        acc = acc + (cx.conj() * cy * scal) * \
                            (st.apply(A.monomial(x1)) * A.monomial(y1))
                else:
                    scal = int_l(st.apply(A.monomial(x1)) * A.monomial(y2))
                    if scal:
                        acc = acc + (cx.conj() * cy * scal) * \
                            (st.apply(A.monomial(x2)) * A.monomial(y1))
        target = int_l(st.apply(x) * y) * A.one()
        if acc != target:
            failures.append(("coproduct-invariance", str(x), str(y)))
    if star_kind == "hopf":
        for m in A.basis:
            h = A.monomial(m)
            if int_l(st.apply(h)) != int_l(h).conj():
                failures.append(("integral-hermiticity", m))
    return {"name": "integral-product-invariance", "kind": star_kind,
            "ok": not failures, "failures": failures}
