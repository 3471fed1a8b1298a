"""Star structures on H.

Three involutions are built in:

* ``hopf``      X+* = -q^-1 X+,  X-* = -q X-,  K* = K      (plain coproduct law)
* ``twisted+``  X+* = +X-,       X-* = +X+,    K* = K^-1   (twisted law, SU(2) type)
* ``twisted-``  X+* = -X-,       X-* = -X+,    K* = K^-1   (twisted law, SU(1,1) type)

Each extends to all of H antilinearly and antimultiplicatively.  A plain-law
star satisfies D(x*) = (* (x) *) D(x); a twisted-law star satisfies
D(x*) = (* (x) *) D^op(x).  User-supplied stars are accepted as generator
images and every law is re-checked rather than assumed.
"""

from __future__ import annotations

from . import hopf

KINDS = ("hopf", "twisted+", "twisted-")


class StarStructure:
    def __init__(self, alg: hopf.HAlgebra, kind: str, images: dict, law: str):
        assert law in ("plain", "twisted")
        self.alg = alg
        self.kind = kind
        self.generator_images = images  # {"Xp": HElement, "Xm": ..., "K": ...}
        self.law = law
        self._mono_cache = {}

    def __repr__(self):
        return "StarStructure(%r)" % self.kind

    def apply(self, x: hopf.HElement) -> hopf.HElement:
        """Antilinear antimultiplicative extension to all of H."""
        out = x.alg.zero()
        for m, v in x.terms.items():
            out = out + v.conj() * self._mono_star(m)
        return out

    def _mono_star(self, m):
        hit = self._mono_cache.get(m)
        if hit is None:
            a, b, c = m
            img = self.generator_images
            # (X+^a X-^b K^c)* = (K*)^c (X-*)^b (X+*)^a
            hit = (img["K"] ** c) * (img["Xm"] ** b) * (img["Xp"] ** a)
            self._mono_cache[m] = hit
        return hit

    def tensor_apply(self, t: hopf.HTensorElement) -> hopf.HTensorElement:
        """(* (x) *) on H (x) H, antilinear on coefficients."""
        out = hopf.HTensorElement(t.alg, {})
        for (m1, m2), v in t.terms.items():
            left = self._mono_star(m1)
            right = self._mono_star(m2)
            piece = {}
            for u, cu in left.terms.items():
                for w, cw in right.terms.items():
                    hopf._accum(piece, (u, w), v.conj() * cu * cw)
            out = out + hopf.HTensorElement(t.alg, piece)
        return hopf.HTensorElement(t.alg, {k: v for k, v in out.terms.items() if v})


def hopf_star(alg: hopf.HAlgebra) -> StarStructure:
    q = alg.field.q()
    images = {
        "Xp": -(q.inverse()) * alg.x_plus(),
        "Xm": -q * alg.x_minus(),
        "K": alg.k(),
    }
    return StarStructure(alg, "hopf", images, "plain")


def twisted_star(alg: hopf.HAlgebra, sign: int) -> StarStructure:
    assert sign in (1, -1)
    images = {
        "Xp": sign * alg.x_minus(),
        "Xm": sign * alg.x_plus(),
        "K": alg.k_inv(),
    }
    return StarStructure(alg, "twisted+" if sign == 1 else "twisted-",
                         images, "twisted")


def star_structure(alg: hopf.HAlgebra, kind: str) -> StarStructure:
    if kind == "hopf":
        return hopf_star(alg)
    if kind == "twisted+":
        return twisted_star(alg, 1)
    if kind == "twisted-":
        return twisted_star(alg, -1)
    raise ValueError("unknown star kind %r (expected one of %s)" % (kind, (KINDS,)))


def custom_star(alg: hopf.HAlgebra, images: dict, law: str) -> StarStructure:
    """Wrap user generator images; all laws must be re-checked by the caller."""
    return StarStructure(alg, "custom", dict(images), law)


def star(s: StarStructure, x: hopf.HElement) -> hopf.HElement:
    return s.apply(x)


# -- law checks ---------------------------------------------------------------


def check_coproduct_law(s: StarStructure) -> dict:
    """Verify D(m*) against the star's coproduct law on every PBW monomial.

    Returns a report listing the violating monomials (empty => law holds).
    """
    failures = []
    for m in s.alg.basis:
        x = s.alg.monomial(m)
        lhs = hopf.coproduct(s.apply(x))
        delta = hopf.coproduct(x)
        if s.law == "twisted":
            delta = delta.flip()
        rhs = s.tensor_apply(delta)
        if lhs != rhs:
            failures.append(m)
    return {"name": "coproduct-law", "kind": s.kind, "law": s.law,
            "ok": not failures, "failures": failures}


def check_antipode_relation(s: StarStructure) -> dict:
    """S * S * = id for plain-law stars; S * = * S for twisted-law stars."""
    failures = []
    for m in s.alg.basis:
        x = s.alg.monomial(m)
        if s.law == "plain":
            ok = hopf.antipode(s.apply(hopf.antipode(s.apply(x)))) == x
        else:
            ok = hopf.antipode(s.apply(x)) == s.apply(hopf.antipode(x))
        if not ok:
            failures.append(m)
    return {"name": "antipode-relation", "kind": s.kind, "law": s.law,
            "ok": not failures, "failures": failures}


def check_involution(s: StarStructure, samples) -> dict:
    failures = [str(x) for x in samples if s.apply(s.apply(x)) != x]
    return {"name": "involution", "kind": s.kind, "ok": not failures,
            "failures": failures}


def check_antimultiplicative(s: StarStructure, pairs) -> dict:
    failures = []
    for x, y in pairs:
        if s.apply(x * y) != s.apply(y) * s.apply(x):
            failures.append((str(x), str(y)))
    return {"name": "antimultiplicative", "kind": s.kind, "ok": not failures,
            "failures": failures}


def check_counit_compat(s: StarStructure) -> dict:
    """eps(x*) = conj(eps(x)) on all basis monomials."""
    failures = []
    for m in s.alg.basis:
        x = s.alg.monomial(m)
        if hopf.counit(s.apply(x)) != hopf.counit(x).conj():
            failures.append(m)
    return {"name": "counit-star", "kind": s.kind, "ok": not failures,
            "failures": failures}
