"""Representation theory of H.

Builds the left regular representation, computes the Jacobson radical as the
kernel of the trace form (x, y) -> Tr(L_x L_y) (valid in characteristic
zero), lifts the central idempotents of H/J and a full matrix-unit basis to
obtain a Wedderburn complement, decomposes the regular module into projective
indecomposables, and extracts the submodule lattice of each PIM (radical,
socle, and the one-parameter family of intermediate submodules).

For N = 3 the named modules are

    3_irr                the projective irreducible
    6_odd > 5_odd > 3_odd(lambda) > 1_irr   (PIM, radical, intermediate, socle)
    6_eve > 4_eve > 3_eve(lambda) > socle;  2_eve = 6_eve / 4_eve

All subquotients carry induced exact generator matrices, so every downstream
computation (invariant forms, signatures) is basis independent.
"""

from __future__ import annotations

from functools import lru_cache

from . import cyclo, hopf, linalg


class NotPIM(ValueError):
    """Submodule-lattice request on a module that is not projective
    indecomposable."""


class LiftingDivergence(RuntimeError):
    """Idempotent lifting failed to stabilize (signals an arithmetic bug)."""


class DecompositionError(RuntimeError):
    """Direct-sum decomposition outside the supported (multiplicity-free
    socle) regime."""


GEN_NAMES = ("Xp", "Xm", "K")


class Representation:
    """An exact matrix representation of H on a based vector space.

    ``mats`` maps generator names to dim x dim matrices over Q(q), columns
    holding the images of basis vectors.  ``k_order`` is the multiplicative
    order of the K matrix (N here; 2N for the double cover's extra sector).
    """

    def __init__(self, alg: hopf.HAlgebra, name, mats, labels=None, k_order=None):
        self.alg = alg
        self.name = name
        self.mats = mats
        self.dim = len(mats["K"])
        self.basis_labels = list(labels) if labels else \
            ["v%d" % i for i in range(self.dim)]
        self.k_order = k_order or alg.N
        self._pow_cache = {}

    def __repr__(self):
        return "Representation(%r, dim=%d)" % (self.name, self.dim)

    def gen(self, name):
        return self.mats[name]

    def _gen_power(self, name, e):
        key = (name, e)
        hit = self._pow_cache.get(key)
        if hit is None:
            if e == 0:
                hit = linalg.identity(self.alg.field, self.dim)
            else:
                hit = linalg.mat_mul(self._gen_power(name, e - 1), self.mats[name])
            self._pow_cache[key] = hit
        return hit

    def k_inverse(self):
        return self._gen_power("K", self.k_order - 1)

    def matrix_of(self, h: hopf.HElement):
        """Matrix of an arbitrary element of H."""
        out = linalg.zeros(self.alg.field, self.dim, self.dim)
        for (a, b, c), v in h.terms.items():
            M = linalg.mat_mul(linalg.mat_mul(self._gen_power("Xp", a),
                                              self._gen_power("Xm", b)),
                               self._gen_power("K", c))
            out = linalg.mat_add(out, linalg.mat_scale(v, M))
        return out

    def apply(self, h, vec):
        return linalg.mat_vec(self.matrix_of(h), vec)

    def check_relations(self) -> dict:
        """The defining relations, as exact matrix identities."""
        F = self.alg.field
        N = self.alg.N
        q = F.q()
        Km, Xpm, Xmm = self.mats["K"], self.mats["Xp"], self.mats["Xm"]
        Kinv = self.k_inverse()
        failures = []
        if not linalg.mat_eq(linalg.mat_mul(Km, Xpm),
                             linalg.mat_scale(q * q, linalg.mat_mul(Xpm, Km))):
            failures.append("K Xp != q^2 Xp K")
        if not linalg.mat_eq(linalg.mat_mul(Km, Xmm),
                             linalg.mat_scale((q * q).inverse(),
                                              linalg.mat_mul(Xmm, Km))):
            failures.append("K Xm != q^-2 Xm K")
        comm = linalg.mat_sub(linalg.mat_mul(Xpm, Xmm), linalg.mat_mul(Xmm, Xpm))
        rhs = linalg.mat_scale((q - q.inverse()).inverse(),
                               linalg.mat_sub(Km, Kinv))
        if not linalg.mat_eq(comm, rhs):
            failures.append("[Xp, Xm] != (K - K^-1)/(q - q^-1)")
        if not linalg.mat_eq(self._gen_power("K", self.k_order),
                             linalg.identity(F, self.dim)):
            failures.append("K^%d != 1" % self.k_order)
        if not linalg.is_zero_matrix(self._gen_power("Xp", N)):
            failures.append("Xp^N != 0")
        if not linalg.is_zero_matrix(self._gen_power("Xm", N)):
            failures.append("Xm^N != 0")
        return {"name": "relations", "rep": self.name,
                "ok": not failures, "failures": failures}


class Submodule:
    """A generator-stable subspace of a representation, stored as a reduced
    echelon basis (canonical for subspace equality)."""

    def __init__(self, parent: Representation, vectors):
        ech, piv = linalg.rref(list(vectors))
        self.parent = parent
        self.basis = ech
        self.pivots = piv
        self.dim = len(ech)

    def __repr__(self):
        return "Submodule(dim=%d of %r)" % (self.dim, self.parent.name)

    def contains(self, v) -> bool:
        return linalg.solve_coords(self.basis, self.pivots, v) is not None

    def coords_of(self, v):
        return linalg.solve_coords(self.basis, self.pivots, v)

    def same_as(self, other) -> bool:
        return self.pivots == other.pivots and \
            all(tuple(a) == tuple(b) for a, b in zip(self.basis, other.basis))

    def is_stable(self) -> bool:
        for g in GEN_NAMES:
            M = self.parent.mats[g]
            for v in self.basis:
                if not self.contains(linalg.mat_vec(M, v)):
                    return False
        return True


def restrict(rep: Representation, sub: Submodule, name) -> Representation:
    """Induced representation on a stable subspace (in its echelon basis)."""
    mats = {}
    for g in GEN_NAMES:
        M = rep.mats[g]
        cols = []
        for v in sub.basis:
            w = linalg.mat_vec(M, v)
            c = sub.coords_of(w)
            assert c is not None, "subspace not stable under %s" % g
            cols.append(c)
        mats[g] = linalg.transpose(cols)
    return Representation(rep.alg, name, mats, k_order=rep.k_order)


def quotient(rep: Representation, sub: Submodule, name) -> Representation:
    """Induced representation on the echelon complement of a stable subspace."""
    pivset = set(sub.pivots)
    comp = [i for i in range(rep.dim) if i not in pivset]

    def project(v):
        # reduce v modulo the submodule, then read off complement coords
        v = list(v)
        for row, c in zip(sub.basis, sub.pivots):
            f = v[c]
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        return [v[i] for i in comp]

    F = rep.alg.field
    mats = {}
    for g in GEN_NAMES:
        M = rep.mats[g]
        cols = []
        for i in comp:
            e = [F.zero()] * rep.dim
            e[i] = F.one()
            cols.append(project(linalg.mat_vec(M, e)))
        mats[g] = linalg.transpose(cols)
    out = Representation(rep.alg, name, mats, k_order=rep.k_order)
    out.complement_indices = comp
    return out


# -- the regular representation and algebra-level data --------------------------


@lru_cache(maxsize=None)
def regular_representation(N: int = 3) -> Representation:
    A = hopf.algebra(N)
    mats = {}
    for gname, g in (("Xp", A.x_plus()), ("Xm", A.x_minus()), ("K", A.k())):
        M = linalg.zeros(A.field, A.dim, A.dim)
        for j, m in enumerate(A.basis):
            prod = g * A.monomial(m)
            for mm, v in prod.terms.items():
                M[A.index[mm]][j] = v
        mats[gname] = M
    labels = [hopf._mono_str(m) for m in A.basis]
    return Representation(A, "regular", mats, labels)


@lru_cache(maxsize=None)
def left_mult_trace(N: int = 3):
    """tau(m) = Tr(L_m) for every PBW monomial, as a list over the lex basis."""
    A = hopf.algebra(N)
    out = []
    for m in A.basis:
        total = A.field.zero()
        for b in A.basis:
            coeff = A._mono_mul(m, b).get(b)
            if coeff:
                total = total + coeff
        out.append(total)
    return out


def trace_of_left_mult(x: hopf.HElement) -> cyclo.CycloNum:
    tau = left_mult_trace(x.alg.N)
    total = x.alg.field.zero()
    for m, v in x.terms.items():
        total = total + v * tau[x.alg.index[m]]
    return total


@lru_cache(maxsize=None)
def jacobson_radical(N: int = 3) -> Submodule:
    """Radical of H as the kernel of (x, y) -> Tr(L_{xy}); dimension N^3 - (sum
    of squares of irreducible dimensions' lifts)."""
    A = hopf.algebra(N)
    tau = left_mult_trace(N)
    rows = []
    for u in A.basis:
        row = {}
        for v in A.basis:
            total = A.field.zero()
            for m, c in A._mono_mul(u, v).items():
                t = tau[A.index[m]]
                if t:
                    total = total + c * t
            if total:
                row[A.index[v]] = total
        rows.append(row)
    kernel = linalg.sparse_nullspace(rows, A.dim, A.field)
    return Submodule(regular_representation(N), kernel)


class SemisimpleQuotient:
    """H/J with multiplication induced on the echelon complement of J."""

    def __init__(self, N):
        self.N = N
        self.alg = hopf.algebra(N)
        self.rad = jacobson_radical(N)
        pivset = set(self.rad.pivots)
        self.comp = [i for i in range(self.alg.dim) if i not in pivset]
        self.dim = len(self.comp)

    def project(self, x: hopf.HElement):
        """Coordinates of x + J in the complement basis."""
        v = x.coords()
        for row, c in zip(self.rad.basis, self.rad.pivots):
            f = v[c]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return [v[i] for i in self.comp]

    def lift(self, coords) -> hopf.HElement:
        vec = [self.alg.field.zero()] * self.alg.dim
        for i, c in zip(self.comp, coords):
            vec[i] = c
        return self.alg.from_coords(vec)

    def multiply(self, c1, c2):
        return self.project(self.lift(c1) * self.lift(c2))


@lru_cache(maxsize=None)
def semisimple_quotient(N: int = 3) -> SemisimpleQuotient:
    return SemisimpleQuotient(N)


@lru_cache(maxsize=None)
def irreducible_representation(N: int, d: int) -> Representation:
    """The d-dimensional irreducible (1 <= d <= N), in its weight basis:
    K v_j = q^(d-1-2j) v_j, X+ v_j = [j] v_{j-1}, X- v_j = [d-1-j] v_{j+1}."""
    assert 1 <= d <= N
    A = hopf.algebra(N)
    F = A.field
    q = F.q()

    def qint(m):
        return (q**m - q**-m) * (q - q.inverse()).inverse()

    K = linalg.zeros(F, d, d)
    Xp = linalg.zeros(F, d, d)
    Xm = linalg.zeros(F, d, d)
    for j in range(d):
        K[j][j] = F.root_power(d - 1 - 2 * j)
        if j > 0:
            Xp[j - 1][j] = qint(j)
        if j < d - 1:
            Xm[j + 1][j] = qint(d - 1 - j)
    rep = Representation(A, "%d_weight" % d, {"Xp": Xp, "Xm": Xm, "K": K})
    assert rep.check_relations()["ok"]
    return rep


def _scalar_of(rep: Representation, x: hopf.HElement):
    """The scalar by which x acts, if it acts scalarly (else None)."""
    M = rep.matrix_of(x)
    s = M[0][0]
    F = rep.alg.field
    for i in range(rep.dim):
        for j in range(rep.dim):
            expect = s if i == j else F.zero()
            if M[i][j] != expect:
                return None
    return s


@lru_cache(maxsize=None)
def quotient_center(N: int = 3):
    """Basis of the center of H/J, in quotient coordinates."""
    Q = semisimple_quotient(N)
    F = Q.alg.field
    n = Q.dim
    # multiplication tables: rows of condition z b - b z = 0 per basis b
    rows = []
    basis_elems = [Q.lift([F.one() if i == j else F.zero() for j in range(n)])
                   for i in range(n)]
    for b in basis_elems:
        # condition on unknown z (coords c_i): sum_i c_i (e_i b - b e_i) = 0
        cols = []
        for e in basis_elems:
            cols.append(Q.project(e * b - b * e))
        for pos in range(n):
            row = {}
            for i, col in enumerate(cols):
                if col[pos]:
                    row[i] = col[pos]
            if row:
                rows.append(row)
    return linalg.sparse_nullspace(rows, n, F)


@lru_cache(maxsize=None)
def quotient_central_idempotents(N: int = 3):
    """Central primitive idempotents of H/J, one per irreducible, returned as
    (irrep_dim, quotient_coords) sorted by decreasing dimension."""
    Q = semisimple_quotient(N)
    F = Q.alg.field
    Z = quotient_center(N)
    dims = list(range(N, 0, -1))
    evals = []  # evals[r][alpha] = scalar of z_alpha on irrep of dim dims[r]
    for d in dims:
        rep = irreducible_representation(N, d)
        row = []
        for z in Z:
            s = _scalar_of(rep, Q.lift(z))
            assert s is not None, "center basis element not scalar on irrep"
            row.append(s)
        evals.append(row)
    assert len(Z) == len(dims), (len(Z), dims)
    inv = linalg.mat_inverse(evals, F)
    out = []
    for r, d in enumerate(dims):
        coeffs = [inv[alpha][r] for alpha in range(len(Z))]
        coords = [F.zero()] * Q.dim
        for alpha, c in enumerate(coeffs):
            if c:
                coords = [a + c * b for a, b in zip(coords, Z[alpha])]
        out.append((d, coords))
    return out


def newton_lift_idempotent(x: hopf.HElement, max_iter: int = 64) -> hopf.HElement:
    """Lift an idempotent-mod-nilpotents to an exact idempotent via
    e <- 3 e^2 - 2 e^3."""
    e = x
    for _ in range(max_iter):
        e2 = e * e
        if e2 == e:
            return e
        e = 3 * e2 - 2 * (e2 * e)
    raise LiftingDivergence("idempotent lifting did not stabilize")


def _corner_lift(seed: hopf.HElement, prev: list) -> hopf.HElement:
    """Lift inside the corner (1 - sum prev) H (1 - sum prev), staying
    orthogonal to the already-lifted idempotents."""
    alg = seed.alg
    c = alg.one()
    for f in prev:
        c = c - f
    return newton_lift_idempotent(c * seed * c)


class WedderburnData:
    def __init__(self, N):
        self.N = N
        A = hopf.algebra(N)
        self.alg = A
        Q = semisimple_quotient(N)
        self.quotient = Q
        F = A.field
        centrals = quotient_central_idempotents(N)
        self.block_irrep_dims = [d for d, _ in centrals]
        self.block_dims = [d * d for d, _ in centrals]

        # matrix units of H/J per block, via the irreducible representations:
        # u is the unique element of ebar (H/J) ebar with sigma_d(u) = E_jk
        units_bar = {}
        for d, ecoords in centrals:
            rep = irreducible_representation(N, d)
            ebar = Q.lift(ecoords)
            # solve sigma_d restricted to the corner: build corner basis first
            corner = []
            for i in range(Q.dim):
                basis_coords = [F.one() if t == i else F.zero()
                                for t in range(Q.dim)]
                v = Q.project(ebar * Q.lift(basis_coords) * ebar)
                corner.append(v)
            corner_basis, piv = linalg.rref(corner)
            assert len(corner_basis) == d * d
            # evaluate sigma_d on the corner basis
            imgs = [rep.matrix_of(Q.lift(v)) for v in corner_basis]
            # solve for each matrix unit E_jk
            rows = [[imgs[t][i][j] for t in range(len(imgs))]
                    for i in range(d) for j in range(d)]
            for j in range(d):
                for k in range(d):
                    rhs = [F.one() if (i1, j1) == (j, k) else F.zero()
                           for i1 in range(d) for j1 in range(d)]
                    coeffs = _solve_dense(rows, rhs, F)
                    coords = [F.zero()] * Q.dim
                    for t, c in enumerate(coeffs):
                        if c:
                            coords = [a + c * b
                                      for a, b in zip(coords, corner_basis[t])]
                    units_bar[(d, j, k)] = coords

        # lift the diagonal units sequentially to orthogonal idempotents of H
        lifted_diag = {}
        prev = []
        for d, _ in centrals:
            for j in range(d):
                f = _corner_lift(Q.lift(units_bar[(d, j, j)]), prev)
                lifted_diag[(d, j)] = f
                prev.append(f)
        total = A.zero()
        for f in prev:
            total = total + f
        assert total == A.one(), "lifted idempotents do not sum to 1"
        self.primitive_idempotents = prev
        self.primitive_idempotent_blocks = [d for d, _ in centrals
                                            for _ in range(d)]

        # off-diagonal units: u_1k = f_1 xhat f_k, u_k1 = yhat (u_1k yhat)^-1 ...
        units = {}
        for d, _ in centrals:
            f1 = lifted_diag[(d, 0)]
            units[(d, 0, 0)] = f1
            u_1k = {0: f1}
            u_k1 = {0: f1}
            for k in range(1, d):
                fk = lifted_diag[(d, k)]
                x = f1 * Q.lift(units_bar[(d, 0, k)]) * fk
                y = fk * Q.lift(units_bar[(d, k, 0)]) * f1
                xy = x * y  # in f1 H f1, congruent to f1 mod J
                inv = _corner_inverse(xy, f1)
                u_1k[k] = x
                u_k1[k] = y * inv
            for j in range(d):
                for k in range(d):
                    units[(d, j, k)] = u_k1[j] * u_1k[k] if (j, k) != (0, 0) \
                        else f1
        self.matrix_units = units
        self.central_idempotents = []
        for d, _ in centrals:
            z = A.zero()
            for j in range(d):
                z = z + units[(d, j, j)]
            self.central_idempotents.append(z)
        self.complement_basis = [units[(d, j, k)]
                                 for d, _ in centrals
                                 for j in range(d) for k in range(d)]


def _solve_dense(rows, rhs, fld):
    """Solve rows * x = rhs for a unique solution."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ech, piv = linalg.rref(aug)
    n = len(rows[0])
    sol = [fld.zero()] * n
    for r, c in enumerate(piv):
        assert c < n, "inconsistent system"
        sol[c] = ech[r][n]
    # pivots must cover all columns for uniqueness
    assert piv == list(range(n)) or set(piv) == set(range(n))
    return sol


def _corner_inverse(x: hopf.HElement, f: hopf.HElement) -> hopf.HElement:
    """Inverse of x in the corner algebra f H f when x = f - n with n
    nilpotent."""
    n = f - x
    inv = f
    power = n
    guard = 0
    while power:
        inv = inv + power
        power = power * n
        guard += 1
        if guard > 64:
            raise LiftingDivergence("corner inverse did not terminate")
    return inv


@lru_cache(maxsize=None)
def wedderburn(N: int = 3) -> WedderburnData:
    return WedderburnData(N)


def wedderburn_structure(N: int = 3) -> dict:
    W = wedderburn(N)
    return {
        "block_dims": W.block_dims,
        "block_irrep_dims": W.block_irrep_dims,
        "central_idempotents": W.central_idempotents,
        "complement_basis": W.complement_basis,
        "primitive_idempotents": W.primitive_idempotents,
    }


# -- projective indecomposables ---------------------------------------------------


def pim_label(N, dim, head_dim):
    if dim == N:
        return "%d_irr" % N
    if N == 3:
        return "6_eve" if head_dim == 2 else "6_odd"
    return "P%d" % head_dim


@lru_cache(maxsize=None)
def pim_decomposition(N: int = 3):
    """One representative per isomorphism class of projective indecomposable,
    with multiplicities; classes are told apart by (dim, head dim)."""
    A = hopf.algebra(N)
    reg = regular_representation(N)
    W = wedderburn(N)
    rad = jacobson_radical(N)
    classes = {}
    for f, blk in zip(W.primitive_idempotents, W.primitive_idempotent_blocks):
        # H f = column space of right multiplication by f
        vecs = []
        for m in A.basis:
            vecs.append((A.monomial(m) * f).coords())
        sub = Submodule(reg, vecs)
        rep = restrict(reg, sub, "pim")
        radsub = module_radical(rep)
        head_dim = rep.dim - radsub.dim
        key = (rep.dim, head_dim)
        if key in classes:
            classes[key]["multiplicity"] += 1
        else:
            label = pim_label(N, rep.dim, head_dim)
            rep.name = label
            classes[key] = {"rep": rep, "submodule": sub, "dim": rep.dim,
                            "head_dim": head_dim, "multiplicity": 1,
                            "label": label}
    out = sorted(classes.values(), key=lambda c: (c["dim"], c["head_dim"]))
    total = sum(c["dim"] * c["multiplicity"] for c in out)
    assert total == A.dim
    return tuple(out)


def radical_elements(N):
    A = hopf.algebra(N)
    return [A.from_coords(v) for v in jacobson_radical(N).basis]


def module_radical(rep: Representation) -> Submodule:
    """J . V for the algebra radical J."""
    F = rep.alg.field
    vecs = []
    for j in radical_elements(rep.alg.N):
        M = rep.matrix_of(j)
        for col in range(rep.dim):
            v = [M[row][col] for row in range(rep.dim)]
            if any(v):
                vecs.append(v)
    return Submodule(rep, vecs)


def module_socle(rep: Representation) -> Submodule:
    """{v : J v = 0}."""
    stacked = []
    for j in radical_elements(rep.alg.N):
        stacked.extend(rep.matrix_of(j))
    if not stacked:
        stacked = [[rep.alg.field.zero()] * rep.dim]
    return Submodule(rep, linalg.nullspace(stacked, rep.alg.field))


def cyclic_submodule(rep: Representation, v) -> Submodule:
    ech, piv = linalg.rref([list(v)])
    work = [list(r) for r in ech]
    queue = [list(r) for r in ech]
    while queue:
        w = queue.pop()
        for g in GEN_NAMES:
            img = linalg.mat_vec(rep.mats[g], w)
            c = linalg.solve_coords(work, piv, img)
            if c is None:
                work.append(img)
                work, piv = linalg.rref(work)
                queue.append(img)
    return Submodule(rep, work)


def weight_spaces(rep: Representation):
    """Eigenspaces of the K matrix, keyed by the power e with eigenvalue
    q^e (and, for doubled K-orders, by ('-', e) for eigenvalue -q^e)."""
    F = rep.alg.field
    N = rep.alg.N
    out = {}
    total = 0
    for e in range(N):
        mu = F.root_power(e)
        space = linalg.eigenspace(rep.mats["K"], mu, F)
        if space:
            out[e] = space
            total += len(space)
        if rep.k_order != N:
            space = linalg.eigenspace(rep.mats["K"], -mu, F)
            if space:
                out[("-", e)] = space
                total += len(space)
    assert total == rep.dim, "K matrix is not diagonalizable over Q(q)"
    return out


def intermediate_submodules(pim: Representation, lambdas=(0,)) -> list:
    """The dimension-N submodules socle < S(lambda) < radical of a PIM.

    rad(P)/socle(P) is a direct sum of two copies of one irreducible; the
    N-dimensional submodules correspond to the lines {w1 + lambda w2} in any
    of its 2-dimensional K-weight spaces.  lambda = None selects the point at
    infinity (the line spanned by w2).
    """
    N = pim.alg.N
    rad = module_radical(pim)
    soc = module_socle(pim)
    radrep = restrict(pim, rad, "radical")
    soc_in_rad = Submodule(radrep, [rad.coords_of(v) for v in soc.basis])
    qrep = quotient(radrep, soc_in_rad, "middle")
    spaces = weight_spaces(qrep)
    key = sorted(k for k in spaces if len(spaces[k]) == 2)
    if not key:
        raise NotPIM("no 2-dimensional weight space in rad/socle")
    w1q, w2q = spaces[key[0]]

    def lift_to_pim(qvec):
        # quotient coords -> radical-rep coords -> parent coords
        full = [pim.alg.field.zero()] * radrep.dim
        for i, c in zip(qrep.complement_indices, qvec):
            full[i] = c
        out = [pim.alg.field.zero()] * pim.dim
        for c, basis_vec in zip(full, rad.basis):
            if c:
                out = [a + c * b for a, b in zip(out, basis_vec)]
        return out

    out = []
    for lam in lambdas:
        if lam is None:
            vq = list(w2q)
        else:
            lam_c = lam if isinstance(lam, cyclo.CycloNum) \
                else pim.alg.field.scalar(lam)
            vq = [a + lam_c * b for a, b in zip(w1q, w2q)]
        v = lift_to_pim(vq)
        vecs = list(soc.basis) + list(cyclic_submodule(pim, v).basis)
        sub = Submodule(pim, vecs)
        assert sub.is_stable() and sub.dim == N, sub.dim
        out.append(sub)
    return out


def is_pim(rep: Representation) -> bool:
    for cls in pim_decomposition(rep.alg.N):
        if cls["dim"] == rep.dim and representations_isomorphic(rep, cls["rep"]):
            return True
    return False


def submodule_lattice(pim: Representation, lambdas=(0, 1, None)) -> dict:
    """Radical, socle and the intermediate family of a projective
    indecomposable; raises NotPIM otherwise."""
    if not is_pim(pim):
        raise NotPIM("submodule lattice is only computed for projective "
                     "indecomposables")
    rad = module_radical(pim)
    soc = module_socle(pim)
    result = {
        "dim": pim.dim,
        "radical_dim": rad.dim,
        "socle_dim": soc.dim,
        "radical": rad,
        "socle": soc,
    }
    if rad.dim:
        inters = intermediate_submodules(pim, lambdas)
        result["intermediates"] = inters
        result["intermediate_dims"] = sorted({s.dim for s in inters})
        # chains 0 < socle < intermediate < radical < P
        for s in inters:
            assert all(rad.contains(v) for v in s.basis)
            assert all(s.contains(v) for v in soc.basis)
    else:
        result["intermediates"] = []
        result["intermediate_dims"] = []
    return result


@lru_cache(maxsize=None)
def named_modules(N: int = 3) -> dict:
    """The indecomposables used throughout: for N = 3 the eight modules
    3_irr, 6_odd, 5_odd, 3_odd, 1_irr, 6_eve, 4_eve, 3_eve, 2_eve."""
    if N != 3:
        raise cyclo.UnsupportedN("named modules are tabulated for N = 3")
    pims = {c["label"]: c["rep"] for c in pim_decomposition(N)}
    out = {"3_irr": pims["3_irr"], "6_odd": pims["6_odd"], "6_eve": pims["6_eve"]}
    odd, eve = pims["6_odd"], pims["6_eve"]
    out["5_odd"] = restrict(odd, module_radical(odd), "5_odd")
    out["4_eve"] = restrict(eve, module_radical(eve), "4_eve")
    out["3_odd"] = restrict(odd, intermediate_submodules(odd, (0,))[0], "3_odd")
    out["3_eve"] = restrict(eve, intermediate_submodules(eve, (0,))[0], "3_eve")
    out["1_irr"] = restrict(odd, module_socle(odd), "1_irr")
    out["2_eve"] = quotient(eve, module_radical(eve), "2_eve")
    return out


# -- hom spaces, isomorphism and direct-sum decomposition -------------------------


def hom_space(r1: Representation, r2: Representation):
    """Basis of Hom_H(r1, r2) = {M : M r1(g) = r2(g) M}."""
    F = r1.alg.field
    n1, n2 = r1.dim, r2.dim
    rows = []
    for g in GEN_NAMES:
        A1, A2 = r1.mats[g], r2.mats[g]
        # (M A1 - A2 M)[i][j] = 0 ; unknowns M[a][b] indexed a*n1+b
        for i in range(n2):
            for j in range(n1):
                row = {}
                for k in range(n1):
                    if A1[k][j]:
                        key = i * n1 + k
                        row[key] = row.get(key, F.zero()) + A1[k][j]
                for k in range(n2):
                    if A2[i][k]:
                        key = k * n1 + j
                        row[key] = row.get(key, F.zero()) - A2[i][k]
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    sols = linalg.sparse_nullspace(rows, n1 * n2, F)
    mats = []
    for s in sols:
        mats.append([[s[i * n1 + j] for j in range(n1)] for i in range(n2)])
    return mats


def representations_isomorphic(r1: Representation, r2: Representation) -> bool:
    if r1.dim != r2.dim:
        return False
    homs = hom_space(r1, r2)
    if not homs:
        return False
    for M in homs:
        if linalg.rank(M) == r1.dim:
            return True
    # try a few small combinations
    import random
    rng = random.Random(12345)
    F = r1.alg.field
    for _ in range(24):
        M = linalg.zeros(F, r2.dim, r1.dim)
        for H in homs:
            M = linalg.mat_add(M, linalg.mat_scale(
                F.scalar(rng.randint(-3, 3)), H))
        if linalg.rank(M) == r1.dim:
            return True
    return False


def endomorphism_radical_dim(rep: Representation):
    """(dim End, dim rad End) via the matrix trace form, char-0 criterion."""
    E = hom_space(rep, rep)
    F = rep.alg.field
    k = len(E)
    gram = [[_mat_trace(linalg.mat_mul(E[i], E[j]), F) for j in range(k)]
            for i in range(k)]
    return k, k - linalg.rank(gram)


def _mat_trace(M, F):
    t = F.zero()
    for i in range(len(M)):
        t = t + M[i][i]
    return t


def is_indecomposable(rep: Representation) -> bool:
    k, r = endomorphism_radical_dim(rep)
    return k - r == 1


@lru_cache(maxsize=None)
def algebra_central_idempotents(N: int = 3):
    """Central primitive idempotents of H itself (the block units), obtained
    by lifting the liftable sums of central idempotents of H/J inside the
    center of H."""
    A = hopf.algebra(N)
    F = A.field
    # center of H: solve z b = b z over the monomial basis
    rows = []
    for b in A.basis:
        cols = []
        for m in A.basis:
            e = A.monomial(m)
            bb = A.monomial(b)
            cols.append((e * bb - bb * e).coords())
        for pos in range(A.dim):
            row = {}
            for i, col in enumerate(cols):
                if col[pos]:
                    row[i] = col[pos]
            if row:
                rows.append(row)
    zbasis = [A.from_coords(v)
              for v in linalg.sparse_nullspace(rows, A.dim, F)]
    # evaluate center on the irreducibles: scalars per block
    centrals = quotient_central_idempotents(N)
    dims = [d for d, _ in centrals]
    evals = []
    for z in zbasis:
        row = []
        for d in dims:
            s = _scalar_of(irreducible_representation(N, d), z)
            assert s is not None
            row.append(s)
        evals.append(row)
    # partition the blocks: d ~ d' iff all central evaluations agree
    classes = []
    for i, d in enumerate(dims):
        placed = False
        for cls in classes:
            j = cls[0]
            if all(row[i] == row[j] for row in evals):
                cls.append(i)
                placed = True
                break
        if not placed:
            classes.append([i])
    # for each class, solve for a central element evaluating to its indicator,
    # then Newton-lift inside the (commutative) center
    ech_rows = [[evals[t][i] for i in range(len(dims))] for t in range(len(zbasis))]
    out = []
    for cls in classes:
        rhs = [F.one() if i in cls else F.zero() for i in range(len(dims))]
        coeffs = _solve_least(ech_rows, rhs, F)
        z0 = A.zero()
        for t, c in enumerate(coeffs):
            if c:
                z0 = z0 + c * zbasis[t]
        e = newton_lift_idempotent(z0)
        out.append({"idempotent": e, "irrep_dims": [dims[i] for i in cls]})
    return tuple(out)


def _solve_least(rows, rhs, F):
    """Solve an overdetermined consistent system rows^T ... : find x with
    sum_t x_t rows[t] = rhs (rows are vectors)."""
    mat = [list(r) for r in linalg.transpose(rows)]
    aug = [mat[i] + [rhs[i]] for i in range(len(mat))]
    ech, piv = linalg.rref(aug)
    ncols = len(rows)
    sol = [F.zero()] * ncols
    for r, c in enumerate(piv):
        if c == ncols:
            raise ValueError("inconsistent system")
        sol[c] = ech[r][ncols]
    return sol


def decompose_representation(rep: Representation):
    """Split a representation into indecomposable direct summands.

    First splits along the central block idempotents of H, then along socle
    isotypes within each block component (sufficient when no two summands
    share a socle isotype, which covers the quantum plane.)
    """
    N = rep.alg.N
    F = rep.alg.field
    summands = []
    for blk in algebra_central_idempotents(N):
        P = rep.matrix_of(blk["idempotent"])
        image = [v for v in linalg.transpose(P) if any(v)]
        if not image:
            continue
        comp = Submodule(rep, image)
        comp_rep = restrict(rep, comp, "component")
        pieces = _split_by_socle_isotype(comp_rep)
        for piece_rep, piece_sub in pieces:
            # record as submodule of the original representation
            vecs = []
            for v in piece_sub.basis:
                w = [F.zero()] * rep.dim
                for c, bv in zip(v, comp.basis):
                    if c:
                        w = [x + c * y for x, y in zip(w, bv)]
                vecs.append(w)
            summands.append((piece_rep, Submodule(rep, vecs)))
    total = sum(r.dim for r, _ in summands)
    if total != rep.dim:
        raise DecompositionError("components do not fill the module")
    return summands


def _split_by_socle_isotype(rep: Representation):
    N = rep.alg.N
    F = rep.alg.field
    soc = module_socle(rep)
    socrep = restrict(rep, soc, "socle")
    isotype_vecs = {}
    for d in range(1, N + 1):
        irr = irreducible_representation(N, d)
        homs = hom_space(irr, socrep)
        vecs = []
        for M in homs:
            for col in linalg.transpose(M):
                if any(col):
                    # back to rep coordinates
                    w = [F.zero()] * rep.dim
                    for c, bv in zip(col, soc.basis):
                        if c:
                            w = [x + c * y for x, y in zip(w, bv)]
                    vecs.append(w)
        if vecs:
            isotype_vecs[d] = linalg.span_echelon(vecs)
    if len(isotype_vecs) == 1:
        if not is_indecomposable(rep):
            raise DecompositionError("summands share a socle isotype")
        return [(rep, Submodule(rep, linalg.identity(F, rep.dim)))]
    # solve for the projection fixing one isotype and killing the others
    E = hom_space(rep, rep)
    pieces = []
    for d, vecs in sorted(isotype_vecs.items()):
        rows = []
        rhs = []
        for dd, vv in sorted(isotype_vecs.items()):
            for v in vv:
                target = v if dd == d else None
                for pos in range(rep.dim):
                    rows.append([linalg.row_dot(E[t][pos], v)
                                 for t in range(len(E))])
                    rhs.append(v[pos] if target is not None else F.zero())
        coeffs = _solve_affine(rows, rhs, F)
        proj = linalg.zeros(F, rep.dim, rep.dim)
        for t, c in enumerate(coeffs):
            if c:
                proj = linalg.mat_add(proj, linalg.mat_scale(c, E[t]))
        if not linalg.mat_eq(linalg.mat_mul(proj, proj), proj):
            raise DecompositionError("socle-isotype projector not idempotent")
        image = [v for v in linalg.transpose(proj) if any(v)]
        sub = Submodule(rep, image)
        piece = restrict(rep, sub, "summand_%d" % sub.dim)
        if not is_indecomposable(piece):
            raise DecompositionError("split summand is decomposable")
        pieces.append((piece, sub))
    return pieces


def _solve_affine(rows, rhs, F):
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ech, piv = linalg.rref(aug)
    sol = [F.zero()] * ncols
    for r, c in enumerate(piv):
        if c == ncols:
            raise ValueError("inconsistent affine system")
        sol[c] = ech[r][ncols]
    return sol
