"""Command line front end.

Every computation is exposed through a subcommand; each writes a short human
table to stdout and, with --emit PATH, a deterministic JSON report.  Exit
codes: 0 success, 1 usage error, 2 a paper-derived verification failed,
3 internal error.  The starting precision of the certified sign oracle can
be set with the environment variable UQSL2_SIGN_BITS.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, cyclo, double, forms, funalg, hopf, killing
from . import linalg, plane, reps, stars, tensorrep

STAR_KINDS = ("hopf", "twisted+", "twisted-")
FORM_REPS = ("3_irr", "6_odd", "5_odd", "3_odd", "6_eve", "4_eve", "3_eve",
             "2_eve", "regular")


class UsageError(Exception):
    pass


class VerificationFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _text(x):
    if isinstance(x, cyclo.CycloNum):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_text(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _text(v) for k, v in x.items()}
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def _report(command, params, payload):
    return {"command": command, "parameters": _text(params),
            "payload": _text(payload), "version": __version__}


def _emit(report, path):
    if path:
        with open(path, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _common(sub, star=True):
    sub.add_argument("--N", type=int, default=3, help="odd N >= 3 (default 3)")
    if star:
        sub.add_argument("--star", choices=STAR_KINDS, default="hopf")
    sub.add_argument("--embedding", type=int, default=1, metavar="K",
                     help="embedding q -> exp(2 pi i K / N)")
    sub.add_argument("--emit", metavar="PATH", help="write a JSON report")


def _sig(s):
    return list(s)


def build_parser():
    p = _Parser(prog="uqsl2", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    subs = p.add_subparsers(dest="command", required=True)

    s = subs.add_parser("check-axioms", help="Hopf axiom and star law suites")
    _common(s, star=False)

    s = subs.add_parser("stars", help="star structure tables and laws")
    _common(s)

    s = subs.add_parser("reps", help="regular representation structure")
    _common(s, star=False)

    s = subs.add_parser("forms", help="invariant forms on a named module")
    _common(s)
    s.add_argument("--rep", choices=FORM_REPS, required=True)

    s = subs.add_parser("plane", help="quantum plane module algebra")
    _common(s)

    s = subs.add_parser("killing", help="Killing scalar product analysis")
    _common(s)

    s = subs.add_parser("integral", help="integral scalar product analysis")
    _common(s)
    s.add_argument("--analyze", action="store_true",
                   help="include the full Gram matrix in the report")

    s = subs.add_parser("tensor", help="tensor product star closure")
    _common(s)

    s = subs.add_parser("double", help="the 2N^3-dimensional cover")
    _common(s)
    s.add_argument("--analyze", action="store_true",
                   help="solve the 2N^3-dimensional regular representation")
    return p


# -- subcommand bodies --------------------------------------------------------------


def cmd_check_axioms(args, out):
    N = args.N
    A = hopf.algebra(N)
    failures = []

    def check(name, ok):
        out.write("%-44s %s\n" % (name, "PASS" if ok else "FAIL"))
        if not ok:
            failures.append(name)

    import random
    rng = random.Random(0)
    ok = True
    for _ in range(40):
        x, y, z = (A.monomial(rng.choice(A.basis)) for _ in range(3))
        ok = ok and (x * y) * z == x * (y * z)
    check("associativity (random monomial triples)", ok)
    ok = True
    for m in A.basis:
        t = hopf.coproduct(A.monomial(m))
        left, right = {}, {}
        for (u, v), c in t.terms.items():
            for (u1, u2), c2 in A._mono_coproduct(u).items():
                hopf._accum(left, (u1, u2, v), c * c2)
            for (v1, v2), c2 in A._mono_coproduct(v).items():
                hopf._accum(right, (u, v1, v2), c * c2)
        ok = ok and {k: v for k, v in left.items() if v} == \
            {k: v for k, v in right.items() if v}
    check("coassociativity (all PBW monomials)", ok)
    ok = True
    for m in A.basis:
        x = A.monomial(m)
        t = hopf.coproduct(x)
        ok = ok and t.apply_left(hopf.counit) == x \
            and t.apply_right(hopf.counit) == x
    check("counit law", ok)
    ok = True
    for m in A.basis:
        x = A.monomial(m)
        acc = A.zero()
        acc2 = A.zero()
        for (u, v), c in hopf.coproduct(x).terms.items():
            acc = acc + c * (hopf.antipode(A.monomial(u)) * A.monomial(v))
            acc2 = acc2 + c * (A.monomial(u) * hopf.antipode(A.monomial(v)))
        e = hopf.counit(x) * A.one()
        ok = ok and acc == e and acc2 == e
    check("antipode law (both sides)", ok)
    ok = all(hopf.antipode(hopf.antipode(A.monomial(m)))
             == A.k_inv() * A.monomial(m) * A.k() for m in A.basis)
    check("S^2(h) = K^-1 h K", ok)
    for kind in STAR_KINDS:
        st = stars.star_structure(A, kind)
        check("star %s coproduct law" % kind,
              stars.check_coproduct_law(st)["ok"])
        check("star %s antipode relation" % kind,
              stars.check_antipode_relation(st)["ok"])
        check("star %s counit compatibility" % kind,
              stars.check_counit_compat(st)["ok"])
    return {"checks_failed": failures}, failures


def cmd_stars(args, out):
    A = hopf.algebra(args.N)
    st = stars.star_structure(A, args.star)
    images = {g: str(v) for g, v in st.generator_images.items()}
    cop = stars.check_coproduct_law(st)
    anti = stars.check_antipode_relation(st)
    out.write("star kind: %s (law: %s)\n" % (st.kind, st.law))
    for g in ("Xp", "Xm", "K"):
        out.write("  %s* = %s\n" % (g, images[g]))
    out.write("coproduct law: %s\n" % ("PASS" if cop["ok"] else "FAIL"))
    out.write("antipode relation: %s\n" % ("PASS" if anti["ok"] else "FAIL"))
    failures = [] if cop["ok"] and anti["ok"] else ["star-laws"]
    return {"kind": st.kind, "law": st.law, "generator_images": images,
            "coproduct_law_ok": cop["ok"],
            "antipode_relation_ok": anti["ok"]}, failures


def cmd_reps(args, out):
    N = args.N
    reg = reps.regular_representation(N)
    rad = reps.jacobson_radical(N)
    W = reps.wedderburn_structure(N)
    pims = reps.pim_decomposition(N)
    payload = {
        "dim": reg.dim,
        "radical_dim": rad.dim,
        "block_dims": W["block_dims"],
        "pims": [{"label": c["label"], "dim": c["dim"],
                  "head_dim": c["head_dim"],
                  "multiplicity": c["multiplicity"]} for c in pims],
    }
    failures = []
    if not reg.check_relations()["ok"]:
        failures.append("regular-relations")
    out.write("dim H = %d, radical dim = %d, blocks %s\n"
              % (reg.dim, rad.dim, W["block_dims"]))
    for c in payload["pims"]:
        out.write("  PIM %-6s dim %d  head %d  multiplicity %d\n"
                  % (c["label"], c["dim"], c["head_dim"], c["multiplicity"]))
    if N == 3:
        odd = reps.named_modules(3)["6_odd"]
        lat = reps.submodule_lattice(odd)
        payload["lattice_6_odd"] = {"radical_dim": lat["radical_dim"],
                                    "socle_dim": lat["socle_dim"],
                                    "intermediate_dims": lat["intermediate_dims"]}
    return payload, failures


def _form_payload(space, emb):
    sigs = forms.sample_signatures(space, emb)
    payload = {
        "real_dim": space.real_dim,
        "max_rank_signatures": sorted(_sig(s) for s in sigs["max_rank"]),
        "all_signatures": sorted(_sig(s) for s in sigs["all"]),
    }
    if space.real_dim:
        f = space.basis_forms[0]
        payload["sample_signature"] = _sig(forms.signature(f, emb))
        windex, wdec = forms.witt_decomposition(f, emb)
        payload["witt_index"] = windex
        payload["witt_decomposition"] = wdec
        payload["basis_form_sample"] = [[str(v) for v in row]
                                        for row in f.matrix]
    return payload


def cmd_forms(args, out):
    N = args.N
    emb = cyclo.field(N).embedding(args.embedding)
    if args.rep == "regular":
        rep = reps.regular_representation(N)
    else:
        if N != 3:
            raise UsageError("named modules require N = 3")
        rep = reps.named_modules(3)[args.rep]
    space = forms.solve_forms(rep, args.star)
    payload = _form_payload(space, emb)
    payload["rep"] = args.rep
    out.write("rep %s, star %s: real_dim %d\n"
              % (args.rep, args.star, space.real_dim))
    if space.real_dim:
        out.write("  signatures (max rank): %s\n"
                  % payload["max_rank_signatures"])
        out.write("  witt: %s\n" % payload["witt_decomposition"])
    return payload, []


def cmd_plane(args, out):
    N = args.N
    emb = cyclo.field(N).embedding(args.embedding)
    MA = plane.malgebra(N)
    failures = []
    space = plane.module_algebra_forms(MA, args.star)
    payload = {"star": args.star, "real_dim": space.real_dim}
    out.write("plane module-algebra forms (%s): real_dim %d\n"
              % (args.star, space.real_dim))
    if space.real_dim:
        f = space.basis_forms[0]
        payload["signature"] = _sig(forms.signature(f, emb))
        windex, wdec = forms.witt_decomposition(f, emb)
        payload["witt_decomposition"] = wdec
        support_ok = all(not f.matrix[i][j]
                         or (sum((MA.basis[i][0], MA.basis[j][0])) == 2
                             and sum((MA.basis[i][1], MA.basis[j][1])) == 2)
                         for i in range(MA.dim) for j in range(MA.dim))
        payload["support_rule_ok"] = support_ok
        out.write("  signature %s, witt %s, support rule %s\n"
                  % (payload["signature"], wdec, support_ok))
        if not support_ok:
            failures.append("support-rule")
    summands = plane.decompose_module(MA)
    payload["decomposition"] = [{"dim": s["dim"],
                                 "irreducible": s["irreducible"],
                                 "socle_dim": s["socle_dim"]}
                                for s in summands]
    out.write("  decomposition: %s\n"
              % [(s["dim"], "irr" if s["irreducible"] else "ind")
                 for s in summands])
    units = plane.check_matrix_algebra_iso(MA)
    payload["matrix_algebra_iso_ok"] = units["ok"]
    if not units["ok"]:
        failures.append("matrix-units")
    return payload, failures


def cmd_killing(args, out):
    N = args.N
    emb = cyclo.field(N).embedding(args.embedding)
    failures = []
    table = killing.adjoint_table_check(N)
    if not table["ok"]:
        failures.append("adjoint-table")
    hk = killing.hermitianized_killing(N, args.star)
    payload = {"star": args.star, "adjoint_table_ok": table["ok"],
               "hermitian": hk["hermitian"]}
    out.write("adjoint table: %s\n" % ("PASS" if table["ok"] else "FAIL"))
    out.write("hermitianized Killing: hermitian=%s\n" % hk["hermitian"])
    if hk["hermitian"]:
        form = hk["form"]
        payload["rank"] = form.rank()
        payload["signature"] = _sig(forms.signature(form, emb))
        rad = reps.jacobson_radical(N)
        ker = form.kernel(hopf.algebra(N).field)
        payload["kernel_equals_radical"] = linalg.subspace_equal(
            ker, [list(v) for v in rad.basis])
        W = reps.wedderburn(N)
        vecs = [c.coords() for c in W.complement_basis]
        payload["complement_signature"] = _sig(
            forms.signature(form.restrict(vecs), emb))
        out.write("  rank %d, signature %s, kernel == radical: %s\n"
                  % (payload["rank"], payload["signature"],
                     payload["kernel_equals_radical"]))
        out.write("  complement signature: %s\n"
                  % payload["complement_signature"])
        if not payload["kernel_equals_radical"]:
            failures.append("kernel-radical")
    else:
        payload["witness"] = _text(hk["witness"])
        out.write("  non-hermitian witness: %s\n" % payload["witness"])
    return payload, failures


def cmd_integral(args, out):
    N = args.N
    emb = cyclo.field(N).embedding(args.embedding)
    failures = []
    inv = killing.check_integral_invariance(N)
    if not inv["ok"]:
        failures.append("integral-invariance")
    isp = killing.integral_scalar_product(N, args.star, emb)
    payload = {"star": args.star, "invariance_ok": inv["ok"],
               "left_invariant_dim": inv["left_invariant_dim"],
               "bi_invariant_dim": inv["bi_invariant_dim"],
               "hermitian": isp["hermitian"], "symmetric": isp["symmetric"],
               "nondegenerate": isp["nondegenerate"]}
    out.write("integral invariance: %s (left-invariant dim %d, bi-invariant"
              " dim %d)\n" % ("PASS" if inv["ok"] else "FAIL",
                              inv["left_invariant_dim"],
                              inv["bi_invariant_dim"]))
    out.write("scalar product: hermitian=%s symmetric=%s nondegenerate=%s\n"
              % (isp["hermitian"], isp["symmetric"], isp["nondegenerate"]))
    if isp["hermitian"]:
        payload["signature"] = _sig(isp["signature"])
        payload["complement_signature"] = _sig(isp["complement_signature"])
        out.write("  signature %s, complement signature %s\n"
                  % (payload["signature"], payload["complement_signature"]))
    else:
        payload["witness"] = _text(isp["witness"])
        payload["left_right_dagger_duality"] = isp["left_right_dagger_duality"]
        out.write("  witness %s; int_L(X* Y) = conj int_R(Y* X): %s\n"
                  % (payload["witness"], isp["left_right_dagger_duality"]))
    if args.analyze:
        payload["gram"] = [[str(v) for v in row] for row in isp["gram"]]
    return payload, failures


def cmd_tensor(args, out):
    if args.N != 3:
        raise UsageError("tensor closure report requires N = 3")
    nm = reps.named_modules(3)
    pair = {"3_irr": nm["3_irr"], "2_eve": nm["2_eve"]}
    Gs = {k: forms.solve_forms(r, args.star).basis_forms[0]
          for k, r in pair.items()}
    failures = []
    results = []
    for n1 in ("3_irr", "2_eve"):
        for n2 in ("3_irr", "2_eve"):
            r = tensorrep.check_star_closure(pair[n1], pair[n2], args.star,
                                             Gs[n1], Gs[n2])
            results.append({"pair": [n1, n2], "ok": r["ok"],
                            "plain_closure": r["plain_closure"],
                            "op_closure": r.get("op_closure"),
                            "witness": r.get("plain_failure_witness")})
            out.write("%s (x) %s: %s\n"
                      % (n1, n2, "PASS" if r["ok"] else "FAIL"))
            if not r["ok"]:
                failures.append("closure-%s-%s" % (n1, n2))
    return {"star": args.star, "results": results}, failures


def cmd_double(args, out):
    N = args.N
    emb = cyclo.field(N).embedding(args.embedding)
    rep = double.build_double(N)
    rel = double.check_double_relations(N)
    failures = [] if rel["ok"] else ["double-relations"]
    payload = {"dim": rep["dim"], "k_order": rep["k_order"],
               "relations_ok": rel["ok"]}
    out.write("dim = %d, K~ order = %d, relations %s\n"
              % (rep["dim"], rep["k_order"], "PASS" if rel["ok"] else "FAIL"))
    if N == 3 and args.star != "hopf":
        nm = reps.named_modules(3)
        plus = forms.solve_forms(nm["3_irr"], args.star)
        minus = forms.solve_forms(double.omega_minus(nm["3_irr"]), args.star)
        sp = sorted(_sig(s) for s in forms.sample_signatures(plus, emb)["max_rank"])
        sm = sorted(_sig(s) for s in forms.sample_signatures(minus, emb)["max_rank"])
        payload["signature_3_irr"] = sp
        payload["signature_3_minus_irr"] = sm
        out.write("3_irr %s signatures: %s\n" % (args.star, sp))
        out.write("3-_irr %s signatures: %s\n" % (args.star, sm))
    if args.analyze:
        dreg = double.double_regular_representation(N)
        space = forms.solve_forms(dreg, args.star)
        payload["regular_real_dim"] = space.real_dim
        out.write("double regular representation: real_dim %d\n"
                  % space.real_dim)
    return payload, failures


COMMANDS = {
    "check-axioms": cmd_check_axioms,
    "stars": cmd_stars,
    "reps": cmd_reps,
    "forms": cmd_forms,
    "plane": cmd_plane,
    "killing": cmd_killing,
    "integral": cmd_integral,
    "tensor": cmd_tensor,
    "double": cmd_double,
}


def run(argv, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "N", 3) < 3 or args.N % 2 == 0:
            raise UsageError("N must be odd and >= 3")
        if getattr(args, "embedding", 1) is not None and \
                hasattr(args, "embedding"):
            import math
            if math.gcd(args.embedding, args.N) != 1:
                raise UsageError("embedding index must be coprime to N")
        payload, failures = COMMANDS[args.command](args, out)
        params = {"N": args.N, "star": getattr(args, "star", None),
                  "embedding": getattr(args, "embedding", None)}
        if getattr(args, "rep", None):
            params["rep"] = args.rep
        report = _report(args.command, params, payload)
        _emit(report, getattr(args, "emit", None))
        if failures:
            out.write("verification failures: %s\n" % failures)
            return 2
        return 0
    except UsageError as exc:
        out.write("usage error: %s\n" % exc)
        return 1
    except VerificationFailure as exc:
        out.write("verification failure: %s\n" % exc)
        return 2
    except SystemExit as exc:  # argparse --help / --version
        code = exc.code
        return 0 if code in (0, None) else 1
    except Exception as exc:  # pragma: no cover - defensive
        out.write("internal error: %r\n" % exc)
        return 3


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
