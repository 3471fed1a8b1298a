import random

import pytest

from uqsl2 import hopf, stars
from uqsl2.hopf import algebra, antipode, coproduct, counit

A = algebra(3)
F = A.field
q = F.q()


def rand_elems(n, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        e = A.zero()
        for _ in range(3):
            e = e + rng.randint(-3, 3) * A.monomial(rng.choice(A.basis))
        out.append(e)
    return out


def test_generator_images():
    s = stars.star_structure(A, "hopf")
    assert s.generator_images["Xp"] == -(q.inverse()) * A.x_plus()
    assert s.generator_images["Xm"] == -q * A.x_minus()
    assert s.generator_images["K"] == A.k()
    sp = stars.star_structure(A, "twisted+")
    assert sp.generator_images["Xp"] == A.x_minus()
    assert sp.generator_images["K"] == A.k_inv()
    sm = stars.star_structure(A, "twisted-")
    assert sm.generator_images["Xm"] == -A.x_plus()


def test_hopf_star_of_xpxm():
    # (X+ X-)* = (-q X-)(-q^-1 X+) = X- X+, then normal ordered
    s = stars.star_structure(A, "hopf")
    assert s.apply(A.x_plus() * A.x_minus()) == A.x_minus() * A.x_plus()


def test_antilinearity_twisted():
    s = stars.star_structure(A, "twisted+")
    assert s.apply(q * A.x_plus()) == q.inverse() * A.x_minus()


@pytest.mark.parametrize("kind", stars.KINDS)
def test_coproduct_law(kind):
    s = stars.star_structure(A, kind)
    rep = stars.check_coproduct_law(s)
    assert rep["ok"], rep["failures"][:3]


@pytest.mark.parametrize("kind", stars.KINDS)
def test_antipode_relation(kind):
    s = stars.star_structure(A, kind)
    rep = stars.check_antipode_relation(s)
    assert rep["ok"], rep["failures"][:3]
    # explicit instances
    x = A.x_plus()
    if kind == "hopf":
        assert antipode(s.apply(antipode(s.apply(x)))) == x
    else:
        assert antipode(s.apply(A.k())) == s.apply(antipode(A.k())) == A.k_inv()
    assert antipode(s.apply(A.one())) == A.one()


def test_twisted_fails_plain_law_on_xp():
    s = stars.star_structure(A, "twisted+")
    x = A.x_plus()
    assert coproduct(s.apply(x)) != s.tensor_apply(coproduct(x))


def test_hopf_is_unique_plain_star_of_the_three():
    for kind in stars.KINDS:
        s = stars.star_structure(A, kind)
        plain = all(coproduct(s.apply(A.monomial(m)))
                    == s.tensor_apply(coproduct(A.monomial(m)))
                    for m in A.basis)
        twisted = all(coproduct(s.apply(A.monomial(m)))
                      == s.tensor_apply(coproduct(A.monomial(m)).flip())
                      for m in A.basis)
        assert plain == (kind == "hopf")
        assert twisted == (kind != "hopf")


def test_both_laws_agree_on_k():
    for kind in stars.KINDS:
        s = stars.star_structure(A, kind)
        x = A.k()
        assert s.tensor_apply(coproduct(x)) == s.tensor_apply(coproduct(x).flip())


@pytest.mark.parametrize("kind", stars.KINDS)
def test_involution_and_antimultiplicativity(kind):
    s = stars.star_structure(A, kind)
    samples = rand_elems(12, seed=hash(kind) % 1000)
    assert stars.check_involution(s, samples)["ok"]
    pairs = [(samples[i], samples[i + 1]) for i in range(10)]
    assert stars.check_antimultiplicative(s, pairs)["ok"]


@pytest.mark.parametrize("kind", stars.KINDS)
def test_counit_compatibility(kind):
    s = stars.star_structure(A, kind)
    assert stars.check_counit_compat(s)["ok"]


def test_custom_star_laws_are_rechecked():
    # X+* = X+, X-* = X-, K* = K is antimultiplicative but fails the
    # coproduct laws; the report should list violations rather than assume
    bogus = stars.custom_star(
        A, {"Xp": A.x_plus(), "Xm": A.x_minus(), "K": A.k()}, "plain")
    rep = stars.check_coproduct_law(bogus)
    assert not rep["ok"] and rep["failures"]
