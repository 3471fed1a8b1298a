"""Tensor products of representations under the coproduct and its opposite,
and the closure dichotomy of star representations.

[rho1 (x) rho2][h] = (rho1 (x) rho2)(D h); replacing D by D^op gives the
opposite tensor product.  With G = G1 (x) G2 on the tensor space, a plain
Hopf star keeps the product a star representation; a twisted star instead
satisfies [rho1 (x) rho2][h*] = ([rho1 (x)op rho2][h])^dag, and plain closure
fails with an explicit generator witness.
"""

from __future__ import annotations

from . import hopf, linalg, reps, stars


class PreconditionFailed(ValueError):
    """Inputs to check_star_closure are not star representations."""


def tensor(r1: reps.Representation, r2: reps.Representation,
           law: str = "Delta") -> reps.Representation:
    """The tensor-product representation for law in {"Delta", "DeltaOp"}."""
    assert law in ("Delta", "DeltaOp")
    alg = r1.alg
    F = alg.field
    dim = r1.dim * r2.dim
    mats = {}
    for gname, gen in (("Xp", alg.x_plus()), ("Xm", alg.x_minus()),
                       ("K", alg.k())):
        dh = hopf.coproduct(gen)
        if law == "DeltaOp":
            dh = dh.flip()
        M = linalg.zeros(F, dim, dim)
        for (m1, m2), c in dh.terms.items():
            piece = linalg.kron(r1.matrix_of(alg.monomial(m1)),
                                r2.matrix_of(alg.monomial(m2)))
            M = linalg.mat_add(M, linalg.mat_scale(c, piece))
        mats[gname] = M
    labels = ["%s|%s" % (a, b) for a in r1.basis_labels for b in r2.basis_labels]
    name = "%s(x)%s" % (r1.name, r2.name) if law == "Delta" \
        else "%s(x)op%s" % (r1.name, r2.name)
    return reps.Representation(alg, name, mats, labels)


def _is_star_rep(rep, star_kind, G):
    for A, B in _condition_pairs(rep, star_kind):
        if not linalg.mat_eq(linalg.mat_mul(linalg.dagger(A), G),
                             linalg.mat_mul(G, B)):
            return False
    return True


def _condition_pairs(rep, star_kind):
    from .forms import star_matrix_pairs
    return star_matrix_pairs(rep, star_kind)


def check_star_closure(r1, r2, star_kind, G1, G2) -> dict:
    """Closure report for the pair with the tensor form G = G1 (x) G2.

    Hopf star: verifies ||h||_D^dag G = G ||h*||_D on generators.
    Twisted:   verifies ||h||_Dop^dag G = G ||h*||_D, and exhibits a
               generator witnessing the failure of plain closure.
    """
    alg = r1.alg
    if not _is_star_rep(r1, star_kind, G1.matrix):
        raise PreconditionFailed("first factor is not a *-representation")
    if not _is_star_rep(r2, star_kind, G2.matrix):
        raise PreconditionFailed("second factor is not a *-representation")
    st = stars.star_structure(alg, star_kind)
    G = linalg.kron(G1.matrix, G2.matrix)
    td = tensor(r1, r2, "Delta")
    top = tensor(r1, r2, "DeltaOp")
    plain_ok = {}
    op_ok = {}
    for gname in ("Xp", "Xm", "K"):
        img = st.generator_images[gname]
        star_mat = td.matrix_of(img)
        lhs_plain = linalg.mat_mul(linalg.dagger(td.mats[gname]), G)
        lhs_op = linalg.mat_mul(linalg.dagger(top.mats[gname]), G)
        rhs = linalg.mat_mul(G, star_mat)
        plain_ok[gname] = linalg.mat_eq(lhs_plain, rhs)
        op_ok[gname] = linalg.mat_eq(lhs_op, rhs)
    report = {
        "name": "tensor-star-closure",
        "kind": star_kind,
        "pair": (r1.name, r2.name),
        "plain_closure": plain_ok,
        "op_closure": op_ok,
    }
    if star_kind == "hopf":
        report["ok"] = all(plain_ok.values())
    else:
        witnesses = [g for g, v in plain_ok.items() if not v]
        report["ok"] = all(op_ok.values()) and bool(witnesses)
        report["plain_failure_witness"] = witnesses[0] if witnesses else None
    return report
