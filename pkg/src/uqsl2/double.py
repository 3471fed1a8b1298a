"""The 2N^3-dimensional cover of H with K of order 2N, realized concretely by
the block embedding

    K~ = diag(K, -K),   X~+ = diag(X+, X+),   X~- = diag(X-, -X-),

inside H (+) H.  Its indecomposables split into two sectors by the value of
the central element K~^N: the omega = +1 sector consists of the
representations of H itself, while the omega = -1 sector (3-_irr, 6-_odd,
6-_eve and their subquotients) is obtained by flipping the signs of K and
X- in any H representation.  The twisted stars extend with K~* = K~^-1, and
sign conclusions for invariant forms are exchanged between the two sectors.
"""

from __future__ import annotations

from . import hopf, linalg, reps


class DoubleElement:
    """A pair (upper, lower) of H elements, multiplied componentwise."""

    __slots__ = ("alg", "upper", "lower")

    def __init__(self, alg: hopf.HAlgebra, upper, lower):
        self.alg = alg
        self.upper = upper
        self.lower = lower

    def __add__(self, other):
        return DoubleElement(self.alg, self.upper + other.upper,
                             self.lower + other.lower)

    def __sub__(self, other):
        return DoubleElement(self.alg, self.upper - other.upper,
                             self.lower - other.lower)

    def __mul__(self, other):
        if isinstance(other, DoubleElement):
            return DoubleElement(self.alg, self.upper * other.upper,
                                 self.lower * other.lower)
        return DoubleElement(self.alg, self.upper * other, self.lower * other)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = double_one(self.alg)
        base = self
        for _ in range(n):
            out = out * base
        return out

    def __eq__(self, other):
        return isinstance(other, DoubleElement) and \
            self.upper == other.upper and self.lower == other.lower

    def __repr__(self):
        return "DoubleElement(upper=%s, lower=%s)" % (self.upper, self.lower)


def double_one(alg):
    return DoubleElement(alg, alg.one(), alg.one())


def double_generators(alg: hopf.HAlgebra):
    return {
        "K": DoubleElement(alg, alg.k(), -1 * alg.k()),
        "Xp": DoubleElement(alg, alg.x_plus(), alg.x_plus()),
        "Xm": DoubleElement(alg, alg.x_minus(), -1 * alg.x_minus()),
    }


def k_order(alg: hopf.HAlgebra) -> int:
    """Multiplicative order of K~."""
    gens = double_generators(alg)
    k = gens["K"]
    power = k
    order = 1
    while power != double_one(alg):
        power = power * k
        order += 1
        assert order <= 4 * alg.N
    return order


def double_basis_spans(alg: hopf.HAlgebra) -> int:
    """Dimension of the span of the PBW-type monomials X~+^a X~-^b K~^c with
    0 <= c < 2N, inside H (+) H."""
    gens = double_generators(alg)
    vecs = []
    N = alg.N
    for a in range(N):
        for b in range(N):
            for c in range(2 * N):
                el = (gens["Xp"] ** a) * (gens["Xm"] ** b) * (gens["K"] ** c)
                vecs.append(list(el.upper.coords()) + list(el.lower.coords()))
    return len(linalg.span_echelon(vecs))


def omega_minus(rep: reps.Representation, name=None) -> reps.Representation:
    """The omega = -1 partner of an H representation: K -> -K, X- -> -X-,
    X+ -> X+ (the lower block of the embedding)."""
    F = rep.alg.field
    mats = {
        "Xp": [row[:] for row in rep.mats["Xp"]],
        "Xm": linalg.mat_scale(F.scalar(-1), rep.mats["Xm"]),
        "K": linalg.mat_scale(F.scalar(-1), rep.mats["K"]),
    }
    return reps.Representation(rep.alg, name or (rep.name + "-"), mats,
                               labels=rep.basis_labels, k_order=2 * rep.alg.N)


def double_regular_representation(N: int = 3) -> reps.Representation:
    """Left regular representation of the double: block diagonal sum of the
    regular representation and its omega = -1 partner."""
    reg = reps.regular_representation(N)
    neg = omega_minus(reg)
    F = reg.alg.field
    dim = 2 * reg.dim
    mats = {}
    for g in ("Xp", "Xm", "K"):
        M = linalg.zeros(F, dim, dim)
        for i in range(reg.dim):
            for j in range(reg.dim):
                M[i][j] = reg.mats[g][i][j]
                M[reg.dim + i][reg.dim + j] = neg.mats[g][i][j]
        mats[g] = M
    return reps.Representation(reg.alg, "double-regular", mats,
                               k_order=2 * N)


def build_double(N: int = 3) -> dict:
    """Structure report: dimension, K~ order, the central element K~^N, and
    the omega = +-1 representation families."""
    alg = hopf.algebra(N)
    gens = double_generators(alg)
    kN = gens["K"] ** N
    report = {
        "dim": double_basis_spans(alg),
        "k_order": k_order(alg),
        "kN_is_central_involution": (kN * kN == double_one(alg)
                                     and kN != double_one(alg)),
    }
    named = reps.named_modules(N) if N == 3 else {}
    plus = dict(named)
    minus = {name + "-": omega_minus(rep, name + "-")
             for name, rep in named.items()}
    report["omega_plus"] = plus
    report["omega_minus"] = minus
    return report


def check_double_relations(N: int = 3) -> dict:
    """Defining relations with K~^(2N) = 1 on the generator pairs, plus the
    sector statement: K~^N acts as +1 on omega = +1 representations and as
    -1 on omega = -1 representations."""
    alg = hopf.algebra(N)
    F = alg.field
    q = F.q()
    gens = double_generators(alg)
    K, Xp, Xm = gens["K"], gens["Xp"], gens["Xm"]
    failures = []
    qsq = q * q

    def scaled(el, c):
        return DoubleElement(alg, c * el.upper, c * el.lower)

    if K * Xp != scaled(Xp * K, qsq):
        failures.append("K Xp != q^2 Xp K")
    if K * Xm != scaled(Xm * K, qsq.inverse()):
        failures.append("K Xm != q^-2 Xm K")
    comm = Xp * Xm - Xm * Xp
    kinv = K ** (2 * N - 1)
    rhs = scaled(K - kinv, (q - q.inverse()).inverse())
    if comm != rhs:
        failures.append("commutator relation")
    if K ** (2 * N) != double_one(alg):
        failures.append("K^2N != 1")
    if (Xp ** N).upper or (Xp ** N).lower or (Xm ** N).upper or (Xm ** N).lower:
        failures.append("X^N != 0")
    if N == 3:
        named = reps.named_modules(N)
        plus = named["3_irr"]
        minus = omega_minus(named["3_irr"])
        idp = linalg.identity(F, plus.dim)
        if not linalg.mat_eq(plus._gen_power("K", N), idp):
            failures.append("K~^N != +1 on omega=+1")
        if not linalg.mat_eq(minus._gen_power("K", N),
                             linalg.mat_scale(F.scalar(-1), idp)):
            failures.append("K~^N != -1 on omega=-1")
        if not minus.check_relations()["ok"]:
            failures.append("omega=-1 relations")
    return {"name": "double-relations", "ok": not failures, "failures": failures}
