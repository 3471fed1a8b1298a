"""Invariant sesquilinear forms on representations of H.

For a star structure * and a representation with generator matrices ||h||,
an invariant scalar product (antilinear in the first slot, G_ij = (v_i, v_j))
is a solution of

    ||h||^dag G = G ||h*||   for h in {X+, X-, K}     and     G = G^dag.

The solver first diagonalizes K (its matrix has finite order, so it is
diagonalizable over Q(q)), which reduces the K-condition to a support
constraint on G; the remaining conditions are solved as a sparse linear
system over Q(q).  Hermiticity is a conjugation-semilinear condition, so it
is imposed afterwards over the rationals by splitting each coefficient into
its phi(N) rational coordinates; by Galois descent the hermitian solutions
form a space of the same dimension over the conjugation-fixed subfield
(plain Q when N = 3), and that count is the ``real dimension'' reported.

Signatures are computed by exact hermitian congruence (diagonal pivots, with
2 x 2 hyperbolic blocks wherever all remaining diagonal entries vanish),
deciding pivot signs with the certified sign oracle; Sylvester's law makes
the result basis independent.
"""

from __future__ import annotations

from fractions import Fraction

from . import cyclo, hopf, linalg, reps, stars


class NotHermitian(ValueError):
    """Signature/Witt request on a matrix that is not hermitian."""


class HermitianForm:
    def __init__(self, matrix, hermitian=None):
        self.matrix = matrix
        self.dim = len(matrix)
        if hermitian is None:
            hermitian = linalg.mat_eq(matrix, linalg.dagger(matrix))
        self.hermitian = hermitian

    def __repr__(self):
        return "HermitianForm(dim=%d, hermitian=%s)" % (self.dim, self.hermitian)

    def scale(self, c):
        return HermitianForm(linalg.mat_scale(c, self.matrix), None)

    def add(self, other):
        return HermitianForm(linalg.mat_add(self.matrix, other.matrix), None)

    def value(self, v, w):
        """(v, w) = v^dag G w."""
        Gw = linalg.mat_vec(self.matrix, w)
        total = None
        for a, b in zip(v, Gw):
            term = a.conj() * b
            total = term if total is None else total + term
        return total

    def restrict(self, vectors):
        """Gram matrix of the form on the span of the given vectors."""
        n = len(vectors)
        out = []
        for i in range(n):
            out.append([self.value(vectors[i], vectors[j]) for j in range(n)])
        return HermitianForm(out, None)

    def kernel(self, fld):
        return linalg.nullspace(self.matrix, fld)

    def rank(self):
        return linalg.rank(self.matrix)


class FormSolutionSpace:
    def __init__(self, rep, star_kind, basis_forms, complex_dim):
        self.rep = rep
        self.star_kind = star_kind
        self.basis_forms = basis_forms
        self.real_dim = len(basis_forms)
        self.complex_dim = complex_dim

    def __repr__(self):
        return "FormSolutionSpace(%r, %r, real_dim=%d)" % (
            getattr(self.rep, "name", "?"), self.star_kind, self.real_dim)


# -- solver ----------------------------------------------------------------------


def star_matrix_pairs(rep, star_kind):
    """Condition pairs (||h||, ||h*||) for the three generators."""
    alg = rep.alg
    if rep.k_order == alg.N:
        s = stars.star_structure(alg, star_kind)
        return [(rep.mats[g], rep.matrix_of(s.generator_images[g]))
                for g in ("Xp", "Xm", "K")]
    # doubled K order (the 2N^3-dimensional cover): star images on generators
    q = alg.field.q()
    K = rep.mats["K"]
    Xp, Xm = rep.mats["Xp"], rep.mats["Xm"]
    if star_kind == "hopf":
        return [(Xp, linalg.mat_scale(-q.inverse(), Xp)),
                (Xm, linalg.mat_scale(-q, Xm)),
                (K, K)]
    sgn = 1 if star_kind == "twisted+" else -1
    kinv = rep.k_inverse()
    return [(Xp, linalg.mat_scale(alg.field.scalar(sgn), Xm)),
            (Xm, linalg.mat_scale(alg.field.scalar(sgn), Xp)),
            (K, kinv)]


def _k_eigenbasis(rep):
    """Eigenvector matrix P of ||K|| and its inverse, plus eigenvalue list."""
    F = rep.alg.field
    spaces = reps.weight_spaces(rep)
    cols = []
    eigvals = []
    for key in sorted(spaces, key=str):
        mu = F.root_power(key) if isinstance(key, int) \
            else -F.root_power(key[1])
        for v in spaces[key]:
            cols.append(list(v))
            eigvals.append(mu)
    P = linalg.transpose(cols)
    return P, linalg.mat_inverse(P, F), eigvals


def solve_forms(rep, star_kind, extra_pairs=()) -> FormSolutionSpace:
    """All hermitian solutions of the invariance system for the given star.

    ``extra_pairs`` adds multiplication-invariance conditions (L, L_star) for
    module-algebra solves.
    """
    F = rep.alg.field
    n = rep.dim
    pairs = star_matrix_pairs(rep, star_kind) + list(extra_pairs)
    P, Pinv, eig = _k_eigenbasis(rep)
    # transform all conditions to the K-eigenbasis
    tpairs = []
    for A, B in pairs:
        tpairs.append((linalg.mat_mul(Pinv, linalg.mat_mul(A, P)),
                       linalg.mat_mul(Pinv, linalg.mat_mul(B, P))))
    # K-condition: conj(eig_i) G_ij = G_ij * beta_j with B_K diagonal
    KA, KB = tpairs[2]  # the K generator pair
    for i in range(n):
        for j in range(n):
            if i != j:
                assert not KA[i][j] and not KB[i][j], \
                    "K matrices not diagonal in eigenbasis"
    support = []
    index = {}
    for i in range(n):
        for j in range(n):
            if eig[i].conj() == KB[j][j]:
                index[(i, j)] = len(support)
                support.append((i, j))
    # remaining conditions as sparse rows over the supported unknowns
    rows = []
    for A, B in (tpairs[0], tpairs[1]) + tuple(tpairs[3:]):
        Adag = linalg.dagger(A)
        for i in range(n):
            for j in range(n):
                row = {}
                for k in range(n):
                    if Adag[i][k] and (k, j) in index:
                        t = index[(k, j)]
                        row[t] = row.get(t, F.zero()) + Adag[i][k]
                for l in range(n):
                    if B[l][j] and (i, l) in index:
                        t = index[(i, l)]
                        row[t] = row.get(t, F.zero()) - B[l][j]
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    sols = linalg.sparse_nullspace(rows, len(support), F)
    complex_dim = len(sols)
    # hermitian descent over the rationals
    basis_forms = _hermitian_descent(rep, sols, support, P, Pinv)
    return FormSolutionSpace(rep, star_kind, basis_forms, complex_dim)


def _hermitian_descent(rep, sols, support, P, Pinv):
    """Rational solutions of G = G^dag inside the complex solution span,
    mapped back to the original basis."""
    F = rep.alg.field
    n = rep.dim
    deg = F.degree
    m = len(sols)
    if m == 0:
        return []
    # dagger in the primed basis is not plain dagger (the eigenbasis change is
    # not unitary), so transform each solution back to the original basis first
    gs = []
    PinvD = linalg.dagger(Pinv)
    for s in sols:
        Gp = linalg.zeros(F, n, n)
        for (i, j), t in zip(support, range(len(support))):
            if s[t]:
                Gp[i][j] = s[t]
        gs.append(linalg.mat_mul(PinvD, linalg.mat_mul(Gp, Pinv)))
    # unknowns: t_alpha = sum_d u_{alpha d} q^d; condition per entry (i, j):
    #   sum_alpha t_alpha gs[alpha][i][j] - conj(t_alpha) conj(gs[alpha][j][i]) = 0
    rows = []
    qpow = [F.root_power(d) for d in range(deg)]
    for i in range(n):
        for j in range(i, n):
            coeffs = []
            for alpha in range(m):
                a = gs[alpha][i][j]
                b = gs[alpha][j][i].conj()
                for d in range(deg):
                    coeffs.append(qpow[d] * a - qpow[d].conj() * b)
            for comp in range(deg):
                row = {}
                for t, c in enumerate(coeffs):
                    if c.coeffs[comp]:
                        row[t] = c.coeffs[comp]
                if row:
                    rows.append(row)
    rat = linalg.sparse_nullspace(rows, m * deg, linalg.QQ)
    forms = []
    for sol in rat:
        G = linalg.zeros(F, n, n)
        for alpha in range(m):
            t = F.from_coeffs(sol[alpha * deg:(alpha + 1) * deg])
            if t:
                G = linalg.mat_add(G, linalg.mat_scale(t, gs[alpha]))
        form = HermitianForm(G)
        assert form.hermitian
        forms.append(form)
    # By Galois descent the hermitian space has dimension m over the
    # conjugation-fixed subfield; the rational solve returns a basis over Q,
    # which overcounts by [fixed field : Q] (trivial for N = 3).  A subset
    # staying linearly independent over Q(q) is a fixed-field basis.
    if len(forms) == m:
        return forms
    kept = []
    ech, piv = [], []
    for f in forms:
        flat = [e for row in f.matrix for e in row]
        if linalg.solve_coords(ech, piv, flat) is None:
            kept.append(f)
            ech, piv = linalg.rref(ech + [flat])
        if len(kept) == m:
            break
    assert len(kept) == m or not forms, (len(kept), m)
    return kept


def solve_module_algebra_form(rep, star_kind, mult_ops) -> FormSolutionSpace:
    """Forms invariant under both the H action and left multiplication.

    ``mult_ops`` is a list of (L, L_star) matrices for algebra generators z:
    the conditions L^dag G = G L_star are intersected with the H-invariance
    system.
    """
    return solve_forms(rep, star_kind, extra_pairs=tuple(mult_ops))


# -- signatures --------------------------------------------------------------------


def signature(f: HermitianForm, emb: cyclo.EmbeddingChoice | None = None):
    """(n_plus, n_minus, n_zero) by exact congruence reduction."""
    if not f.hermitian:
        raise NotHermitian("signature of a non-hermitian matrix")
    M = [row[:] for row in f.matrix]
    n = f.dim
    active = list(range(n))
    npos = nneg = 0
    while active:
        piv = None
        for i in active:
            if M[i][i]:
                piv = i
                break
        if piv is not None:
            d = M[piv][piv]
            assert d.is_real()
            if cyclo.sign_real(d, emb) > 0:
                npos += 1
            else:
                nneg += 1
            rest = [i for i in active if i != piv]
            for i in rest:
                ci = M[i][piv]
                if ci:
                    for j in rest:
                        M[i][j] = M[i][j] - ci * M[piv][j] / d
            active = rest
            continue
        off = None
        for ii, i in enumerate(active):
            for j in active[ii + 1:]:
                if M[i][j]:
                    off = (i, j)
                    break
            if off:
                break
        if off is None:
            return (npos, nneg, len(active))
        i, j = off
        c = M[i][j]
        cbar = M[j][i]
        npos += 1
        nneg += 1
        rest = [k for k in active if k not in (i, j)]
        for k in rest:
            a = M[k][i]
            b = M[k][j]
            if a or b:
                for l in rest:
                    # Schur complement of the hyperbolic block [[0, c], [cbar, 0]]
                    M[k][l] = M[k][l] - a * M[j][l] / cbar - b * M[i][l] / c
        active = rest
    return (npos, nneg, 0)


def witt_decomposition(f: HermitianForm, emb=None):
    """(index, human decomposition string): dim = index + index + anisotropic
    + radical, with zero parts omitted from the rendering."""
    npos, nneg, nzero = signature(f, emb)
    index = min(npos, nneg)
    parts = [str(index), str(index)] if index else []
    aniso = abs(npos - nneg)
    if aniso:
        parts.append(str(aniso))
    if nzero:
        parts.append(str(nzero))
    if not parts:
        parts = ["0"]
    return index, "%d = %s" % (f.dim, " + ".join(parts))


def canonical_signature(sig):
    """Collapse the overall-sign ambiguity of a one-line family: prefer the
    representative with n_plus >= n_minus."""
    npos, nneg, nzero = sig
    return (nneg, npos, nzero) if nneg > npos else sig


def sample_signatures(space: FormSolutionSpace, emb=None, seed=7, extra=24):
    """Signatures over a deterministic sample of the real solution family.

    Returns {"all": set, "max_rank": set, "rank": max rank found}.
    """
    import random
    rng = random.Random(seed)
    samples = []
    for f in space.basis_forms:
        samples.append(f)
        samples.append(f.scale(space.rep.alg.field.scalar(-1)))
    for a in range(len(space.basis_forms)):
        for b in range(a + 1, len(space.basis_forms)):
            samples.append(space.basis_forms[a].add(space.basis_forms[b]))
    F = space.rep.alg.field
    for _ in range(extra):
        G = None
        for f in space.basis_forms:
            c = F.scalar(Fraction(rng.randint(-4, 4)))
            piece = f.scale(c)
            G = piece if G is None else G.add(piece)
        if G is not None:
            samples.append(G)
    sigs = {}
    for f in samples:
        if not any(any(row) for row in f.matrix):
            continue
        s = signature(HermitianForm(f.matrix), emb)
        sigs.setdefault(s[0] + s[1], set()).add(s)
    if not sigs:
        return {"all": set(), "max_rank": set(), "rank": 0}
    maxrank = max(sigs)
    allsigs = set()
    for v in sigs.values():
        allsigs |= v
    return {"all": allsigs, "max_rank": sigs[maxrank], "rank": maxrank}


def check_invariance(space: FormSolutionSpace, star_kind, samples=6, seed=3):
    """The invariance law eps(h) (z, w) = ((* S h_1) |> z, h_2 |> w) for
    generators h and random vectors, for every basis form."""
    import random
    rng = random.Random(seed)
    rep = space.rep
    alg = rep.alg
    F = alg.field
    if rep.k_order != alg.N:
        raise ValueError("invariance check needs an H representation")
    st = stars.star_structure(alg, star_kind)
    failures = []
    gens = {"Xp": alg.x_plus(), "Xm": alg.x_minus(), "K": alg.k()}
    for form in space.basis_forms:
        for gname, h in gens.items():
            dh = hopf.coproduct(h)
            # sum over Delta h of rho((S h_1)*)^dag G rho(h_2) == eps(h) G
            acc = linalg.zeros(F, rep.dim, rep.dim)
            for (m1, m2), c in dh.terms.items():
                left = rep.matrix_of(st.apply(hopf.antipode(alg.monomial(m1))))
                right = rep.matrix_of(alg.monomial(m2))
                term = linalg.mat_mul(linalg.dagger(left),
                                      linalg.mat_mul(form.matrix, right))
                acc = linalg.mat_add(acc, linalg.mat_scale(c, term))
            target = linalg.mat_scale(hopf.counit(h), form.matrix)
            if not linalg.mat_eq(acc, target):
                failures.append(gname)
    # spot-check with random vectors as well
    for form in space.basis_forms[:1]:
        for _ in range(samples):
            z = [F.scalar(rng.randint(-3, 3)) for _ in range(rep.dim)]
            w = [F.scalar(rng.randint(-3, 3)) for _ in range(rep.dim)]
            for gname, h in gens.items():
                dh = hopf.coproduct(h)
                total = F.zero()
                for (m1, m2), c in dh.terms.items():
                    zz = rep.apply(st.apply(hopf.antipode(alg.monomial(m1))), z)
                    ww = rep.apply(alg.monomial(m2), w)
                    total = total + c * form.value(zz, ww)
                if total != hopf.counit(h) * form.value(z, w):
                    failures.append((gname, "vector"))
    return {"name": "invariance", "kind": star_kind,
            "ok": not failures, "failures": failures}
