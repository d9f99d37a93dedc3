"""Command-line front end: ``weakdual <subcommand> [options]``.

Compositions are comma separated (``0,3,0,2``).  Partitions may also be
written as digit strings (``332``).  Permutations are digit strings below ten
values and comma separated above.  Exit status is 0 on success, 1 when an
oracle or positivity check fails, and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Sequence

from . import bases as B
from . import dualequiv as de
from . import permwords as pw
from . import tableaux as tb
from .foundations import (
    FUNDAMENTAL_F,
    KEY,
    SLIDE,
    BasisExpansion,
    ExpansionError,
    Polynomial,
    expand_in_key,
    expand_in_schur,
    expand_in_slide,
    fundamental_F,
    increasing_composition,
    is_partition,
    pad,
    polynomial_to_expansion,
    realize,
    slide,
    weak_compositions,
)


class OracleFailure(Exception):
    pass


# ---------------------------------------------------------------------------
# argument types


def composition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "()", "-"):
        return ()
    try:
        parts = tuple(int(t) for t in text.strip("()").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a composition: {text!r}")
    if any(p < 0 for p in parts):
        raise argparse.ArgumentTypeError(f"negative part in {text!r}")
    return parts


def strong_composition(text: str) -> tuple[int, ...]:
    parts = composition(text)
    if 0 in parts:
        raise argparse.ArgumentTypeError(f"zero part in strong composition {text!r}")
    return parts


def partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text.isdigit() and "," not in text and len(text) > 1:
        parts = tuple(int(ch) for ch in text)
    else:
        parts = composition(text)
    parts = tuple(p for p in parts if p)
    if not is_partition(parts):
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}")
    return parts


def permutation(text: str) -> tuple[int, ...]:
    try:
        return pw.parse_permutation(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


# ---------------------------------------------------------------------------
# output helpers


def _emit(args, exp: BasisExpansion, **header) -> None:
    if args.json:
        print(exp.to_json(**header))
    else:
        print(exp.to_text())


def _as_basis(p: Polynomial, basis: str) -> BasisExpansion:
    if basis == "monomial":
        return polynomial_to_expansion(p)
    if basis == "slide":
        return expand_in_slide(p)
    if basis == "key":
        return expand_in_key(p)
    if basis == "schur":
        return expand_in_schur(p)
    raise ExpansionError(f"basis {basis} is not available here")


def _oracle(args, exp: BasisExpansion, truth: Polynomial, nvars: int) -> None:
    """Rebuild the polynomial from ``exp`` by monomial arithmetic."""
    if not args.oracle:
        return
    if exp.basis == FUNDAMENTAL_F:
        got = Polynomial.zero(nvars)
        for alpha, c in exp.items():
            got = got + fundamental_F(alpha, nvars) * c
    else:
        got = realize(exp, nvars)
    if truth.nvars < nvars:
        truth = truth.pad(nvars)
    if got != truth:
        raise OracleFailure(f"oracle mismatch: {exp.to_text()}")
    print("oracle: ok", file=sys.stderr)


# ---------------------------------------------------------------------------
# subcommands


def cmd_schur(args) -> None:
    k = args.nvars or max(len(args.lam), 1)
    p = B.schur_poly(args.lam, k)
    if args.basis == "F":
        exp = B.schur_F_expansion(args.lam)
        _oracle(args, exp, p, k)
    else:
        exp = _as_basis(p, args.basis)
        _oracle(args, exp, p, k)
    _emit(args, exp, family="SCHUR", **{"lambda": list(args.lam)}, nvars=k)


def cmd_key(args) -> None:
    p = B.key_poly(args.a)
    exp = B.key_slide_expansion(args.a) if args.basis == "slide" else _as_basis(p, args.basis)
    _oracle(args, exp, p, len(args.a))
    _emit(args, exp, family="KEY", a=list(args.a))


def cmd_schubert(args) -> None:
    w = args.w
    nv = args.nvars or B.schubert_nvars(w)
    p = B.schubert_poly(w, nv)
    if args.basis == "key":
        exp = B.schubert_key_expansion(w)
        if nv != B.schubert_nvars(w):
            exp = expand_in_key(p)
    elif args.basis == "slide":
        exp = B.schubert_slide_expansion(w, nv)
    else:
        exp = _as_basis(p, args.basis)
    _oracle(args, exp, p, nv)
    _emit(args, exp, family="SCHUBERT", w=list(w), nvars=nv)


def cmd_stanley(args) -> None:
    w = args.w
    nv = max(pw.inv(w), 1)
    exp = B.stanley_schur_expansion(w) if args.basis == "schur" else B.stanley_F_expansion(w)
    if args.oracle:
        _oracle(args, exp, B.stanley_poly(w, nv), nv)
    _emit(args, exp, family="STANLEY", w=list(w), nvars=nv)


def cmd_skew_key(args) -> None:
    d = args.d
    if (args.lam is None) == (args.a is None):
        raise argparse.ArgumentTypeError("give exactly one of --lambda and --a")
    if args.lam is not None:
        a = increasing_composition(args.lam, len(d))
    else:
        a = pad(args.a, len(d))
    p = B.skew_key_poly(d, a)
    if args.basis == "stable":
        exp = B.skew_key_stable_limit(d, a)
        _emit(args, exp, family="SKEW_KEY_LIMIT", d=list(d), a=list(a))
        return
    if args.basis == "slide":
        exp = B.skew_key_slide_expansion(d, a)
    elif args.basis == "monomial":
        exp = polynomial_to_expansion(p)
    elif args.lam is not None:
        exp = B.skew_key_expansion(d, args.lam)
    else:
        exp = B.skew_key_signed_expansion(d, a)
    _oracle(args, exp, p, len(d))
    _emit(args, exp, family="SKEW_KEY", d=list(d), a=list(a))


def cmd_skew_schur(args) -> None:
    if args.basis == "F":
        fam = de.syt_family(args.lam, args.mu)
        exp = BasisExpansion(FUNDAMENTAL_F, Counter(fam.Des(T) for T in fam.carrier))
    else:
        exp = B.skew_schur_expansion(args.lam, args.mu)
    if args.oracle:
        k = args.nvars or max(len(args.lam), 1)
        _oracle(args, exp, B.skew_schur_poly(args.lam, args.mu, k), k)
    _emit(args, exp, family="SKEW_SCHUR", **{"lambda": list(args.lam), "mu": list(args.mu)})


def cmd_product(args) -> None:
    if args.schur is not None:
        n = args.nvars or max(len(args.a), len(args.schur), 1)
        exp = B.key_times_schur(args.a, args.schur, n)
        if args.oracle:
            _oracle(args, exp, B.key_poly(pad(args.a, n)) * B.schur_poly(args.schur, n), n)
        _emit(args, exp, family="KEY_TIMES_SCHUR", b=list(args.a), **{"lambda": list(args.schur)}, n=n)
        return
    if args.b is None:
        raise argparse.ArgumentTypeError("product needs --b or --schur")
    n = max(len(args.a), len(args.b))
    a, b = pad(args.a, n), pad(args.b, n)
    if args.basis == "slide":
        exp = B.key_product_slide_model(a, b, model=args.model)
    else:
        exp = B.slide_to_key(B.key_product_slide_model(a, b, model=args.model))
    _oracle(args, exp, B.key_poly(a) * B.key_poly(b), n)
    _emit(args, exp, family="KEY_PRODUCT", a=list(a), b=list(b), model=args.model)


def cmd_lr(args) -> None:
    exp = B.lr_coefficients(args.mu, args.nu)
    if args.oracle:
        k = len(args.mu) + len(args.nu) or 1
        _oracle(args, exp, B.schur_poly(args.mu, k) * B.schur_poly(args.nu, k), k)
    _emit(args, exp, family="LR", mu=list(args.mu), nu=list(args.nu))


def cmd_shuffle(args) -> None:
    exp = B.shuffle_product(args.alpha, args.beta, witness=args.witness)
    if args.oracle:
        k = sum(args.alpha) + sum(args.beta) or 1
        truth = fundamental_F(args.alpha, k) * fundamental_F(args.beta, k)
        _oracle(args, exp, truth, k)
    _emit(args, exp, family="SHUFFLE", alpha=list(args.alpha), beta=list(args.beta))


def cmd_slide_product(args) -> None:
    if len(args.a) != len(args.b):
        raise argparse.ArgumentTypeError("slide-product needs compositions of equal length")
    exp = B.slide_product(args.a, args.b)
    _oracle(args, exp, slide(args.a) * slide(args.b), len(args.a))
    _emit(args, exp, family="SLIDE_PRODUCT", a=list(args.a), b=list(args.b))


def cmd_reduced_words(args) -> None:
    w = args.w
    nv = args.nvars or B.schubert_nvars(w)
    rows = []
    for rho in pw.reduced_words(w):
        des = pw.weak_descent_word(rho, nv)
        rows.append({"word": list(rho), "Des": list(pw.descent_composition(rho)),
                     "des": None if des is None else list(des)})
    if args.json:
        print(json.dumps({"w": list(w), "count": len(rows), "words": rows}))
        return
    for r in rows:
        des = "virtual" if r["des"] is None else "(" + ",".join(map(str, r["des"])) + ")"
        print(f"{''.join(map(str, r['word']))}  Des=({','.join(map(str, r['Des']))})  des={des}")
    print(f"{len(rows)} reduced words")


def _tableaux_for(args) -> tuple[list, callable]:
    kind = args.kind
    if kind == "syt":
        items = tb.enumerate_syt(args.lam, args.mu or ())
        return items, lambda T: tb.syt_descent_composition(T)
    if kind == "skt":
        return tb.enumerate_skt(args.a), tb.weak_descent_tableau
    if kind == "qkt":
        return tb.enumerate_qkt(args.a), lambda D: D.weight()
    if kind == "skew-skt":
        return tb.enumerate_skew_skt(args.d, pad(args.a, len(args.d))), tb.weak_descent_tableau
    if kind == "product-skt":
        n = max(len(args.a), len(args.b))
        return tb.enumerate_product_skt(pad(args.a, n), pad(args.b, n)), tb.weak_descent_tableau
    raise argparse.ArgumentTypeError(f"unknown kind {kind}")


def _need(args, *names) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise argparse.ArgumentTypeError("missing option(s): " + ", ".join("--" + m.replace("lam", "lambda") for m in missing))


def cmd_tableaux(args) -> None:
    needs = {"syt": ("lam",), "skt": ("a",), "qkt": ("a",), "skew-skt": ("d", "a"), "product-skt": ("a", "b")}
    _need(args, *needs[args.kind])
    items, stat = _tableaux_for(args)
    if args.json:
        doc = [{"rows": T.rows() if isinstance(T, tb.Filling) else [list(c) + [v] for c, v in T.cells],
                "stat": None if stat(T) is None else list(stat(T))} for T in items]
        print(json.dumps({"kind": args.kind, "count": len(items), "tableaux": doc}))
        return
    for T in items:
        s = stat(T)
        print(T.render())
        print("  ->", "virtual" if s is None else "(" + ",".join(map(str, s)) + ")")
        print()
    print(f"{len(items)} tableaux")


def _family(args) -> de.InvolutionFamily:
    weak = getattr(args, "weak", False)
    if args.w is not None:
        return de.reduced_word_family(pw.shift(args.w, args.stabilize), weak=weak)
    if args.lam is not None:
        return de.syt_family(args.lam, args.mu or ())
    z = (0,) * args.stabilize
    if args.d is not None:
        _need(args, "a")
        return de.skew_skt_family(z + args.d, z + pad(args.a, len(args.d)))
    if args.a is not None and args.b is not None:
        n = max(len(args.a), len(args.b))
        return de.product_skt_family(z + pad(args.a, n), z + pad(args.b, n))
    if args.a is not None:
        return de.skt_family(z + args.a)
    raise argparse.ArgumentTypeError("choose a carrier with --w, --lambda, --a, --d or --a/--b")


def _fmt(x) -> str:
    if isinstance(x, tb.Filling):
        return de.tb_label(x)
    return "".join(map(str, x)) if all(v < 10 for v in x) else ",".join(map(str, x))


def cmd_classes(args) -> None:
    fam = _family(args)
    if args.dot:
        print(de.to_dot(fam))
        return
    out = []
    for cls in de.classes(fam):
        stat = fam.des if args.weak and fam.des is not None else fam.Des
        vals = [stat(x) for x in cls.members]
        if args.weak:
            cnt = Counter(v for v in vals if v is not None)
            exp = B.slide_to_key(BasisExpansion(SLIDE, cnt)) if cnt else BasisExpansion(KEY, {})
        else:
            exp = B.F_to_schur(BasisExpansion(FUNDAMENTAL_F, Counter(vals)))
        out.append((cls, vals, exp))
    if args.json:
        print(json.dumps([{"class_size": len(c), "members": [_fmt(x) for x in c.members],
                           "des_list": [None if v is None else list(v) for v in vals],
                           "expansion": e.to_dict()} for c, vals, e in out]))
        return
    for k, (cls, vals, exp) in enumerate(out, 1):
        print(f"class {k}: size {len(cls)}  {exp.to_text()}")
        for x, v in zip(cls.members, vals):
            print(f"  {_fmt(x)}  {'virtual' if v is None else v}")


def cmd_rectify(args) -> None:
    fam = _family(args)
    rows = []
    for cls in de.classes(fam):
        if args.weak:
            psi = de.weak_rectification(fam, cls.members[0])
            shape = min(T.shape for T in psi.values())
            anchor = next(x for x, T in psi.items() if T == tb.yamanouchi_key(shape))
            rows.append((anchor, psi[anchor]))
        else:
            phi = de.rectification(fam, cls.members[0])
            anchor = next(x for x, T in phi.items() if T == tb.super_standard(T.shape))
            rows.append((anchor, phi[anchor]))
    if args.json:
        print(json.dumps([{"anchor": _fmt(x), "shape": list(T.shape), "tableau": T.rows()} for x, T in rows]))
        return
    for x, T in rows:
        print(f"{_fmt(x)} -> shape ({','.join(map(str, T.shape))})")
        print(T.render())
        print()


def cmd_check_axioms(args) -> None:
    reports = []
    fam_kind = args.family
    if fam_kind == "words":
        for span in range(args.max_span + 1):
            reports.append(de.check_local_words(span, weak=args.weak))
    elif fam_kind == "skt":
        for s in range(1, args.max_size + 1):
            for L in range(1, args.max_length + 1):
                for a in weak_compositions(s, L):
                    if args.weak:
                        fam = de.stabilized_skt_family(a, s)
                        reports.append(de.check_weak_dual_equivalence(fam, stable=True))
                    else:
                        reports.append(de.check_dual_equivalence(de.skt_family(a)))
    else:
        fam = _family(args)
        if args.weak:
            reports.append(de.check_weak_dual_equivalence(fam, stable=args.stabilize > 0))
        else:
            reports.append(de.check_dual_equivalence(fam))
    failed = [r for r in reports if not r.passed]
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], default=de._json_default))
    else:
        shown = reports if args.verbose or len(reports) <= 20 else failed
        for r in shown:
            print(r.summary())
            for f in r.failures[:5]:
                print("   ", json.dumps(f, default=de._json_default))
        total = sum(r.classes_checked for r in reports)
        print(f"{len(reports) - len(failed)}/{len(reports)} carriers passed, {total} classes checked")
    if failed:
        raise OracleFailure(f"{len(failed)} carrier(s) failed")


def cmd_expand(args) -> None:
    try:
        p = Polynomial.from_text(args.poly, args.nvars)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    exp = _as_basis(p, args.basis)
    _oracle(args, exp, p, p.nvars)
    _emit(args, exp, family="EXPAND", poly=args.poly)


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--oracle", action="store_true", help="re-verify by monomial arithmetic")

    p = argparse.ArgumentParser(prog="weakdual", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    s = add("schur", cmd_schur, "Schur polynomial s_lambda(x_1..x_k)")
    s.add_argument("--lambda", dest="lam", type=partition, required=True)
    s.add_argument("--nvars", type=int)
    s.add_argument("--basis", choices=["monomial", "F", "slide", "key"], default="F")

    s = add("key", cmd_key, "key polynomial")
    s.add_argument("--a", type=composition, required=True)
    s.add_argument("--basis", choices=["slide", "monomial", "key"], default="slide")

    s = add("schubert", cmd_schubert, "Schubert polynomial")
    s.add_argument("--w", type=permutation, required=True)
    s.add_argument("--nvars", type=int)
    s.add_argument("--basis", choices=["key", "slide", "monomial"], default="key")

    s = add("stanley", cmd_stanley, "Stanley symmetric function")
    s.add_argument("--w", type=permutation, required=True)
    s.add_argument("--basis", choices=["schur", "F"], default="schur")

    s = add("skew-key", cmd_skew_key, "skew key polynomial d/a")
    s.add_argument("--d", type=composition, required=True)
    s.add_argument("--a", type=composition, help="inner shape (signed expansion)")
    s.add_argument("--lambda", dest="lam", type=partition, help="inner shape sorted weakly increasing")
    s.add_argument("--basis", choices=["key", "slide", "monomial", "stable"], default="key")

    s = add("skew-schur", cmd_skew_schur, "skew Schur function lambda/mu")
    s.add_argument("--lambda", dest="lam", type=partition, required=True)
    s.add_argument("--mu", type=partition, default=())
    s.add_argument("--nvars", type=int)
    s.add_argument("--basis", choices=["schur", "F"], default="schur")

    s = add("product", cmd_product, "key times key, or key times Schur with --schur")
    s.add_argument("--a", type=composition, required=True)
    s.add_argument("--b", type=composition)
    s.add_argument("--schur", type=partition, help="partition factor placed on the right")
    s.add_argument("--nvars", type=int)
    s.add_argument("--model", choices=list(B.PRODUCT_MODELS), default="bijection")
    s.add_argument("--basis", choices=["key", "slide"], default="key")

    s = add("lr", cmd_lr, "Littlewood-Richardson coefficients of s_mu s_nu")
    s.add_argument("--mu", type=partition, required=True)
    s.add_argument("--nu", type=partition, required=True)

    s = add("shuffle", cmd_shuffle, "shuffle product of fundamental quasisymmetric functions")
    s.add_argument("--alpha", type=strong_composition, required=True)
    s.add_argument("--beta", type=strong_composition, required=True)
    s.add_argument("--witness", choices=["plateau", "distinct"], default="plateau")

    s = add("slide-product", cmd_slide_product, "slide product of fundamental slide polynomials")
    s.add_argument("--a", type=composition, required=True)
    s.add_argument("--b", type=composition, required=True)

    s = add("reduced-words", cmd_reduced_words, "reduced words with Des and des")
    s.add_argument("--w", type=permutation, required=True)
    s.add_argument("--nvars", type=int)

    s = add("tableaux", cmd_tableaux, "enumerate tableaux")
    s.add_argument("--kind", choices=["syt", "skt", "qkt", "skew-skt", "product-skt"], required=True)
    s.add_argument("--lambda", dest="lam", type=partition)
    s.add_argument("--mu", type=partition)
    s.add_argument("--a", type=composition)
    s.add_argument("--b", type=composition)
    s.add_argument("--d", type=composition)

    for name, func, help_ in (("classes", cmd_classes, "dual equivalence classes"),
                              ("rectify", cmd_rectify, "rectify one anchor per class"),
                              ("check-axioms", cmd_check_axioms, "verify dual equivalence axioms")):
        s = add(name, func, help_)
        s.add_argument("--w", type=permutation)
        s.add_argument("--lambda", dest="lam", type=partition)
        s.add_argument("--mu", type=partition)
        s.add_argument("--a", type=composition)
        s.add_argument("--b", type=composition)
        s.add_argument("--d", type=composition)
        s.add_argument("--weak", action="store_true", help="weak dual equivalence and des")
        s.add_argument("--stabilize", type=int, default=0, metavar="M", help="prepend M zero rows (or 1^M for words)")
        if name == "classes":
            s.add_argument("--dot", action="store_true", help="print a graph in dot format")
        if name == "check-axioms":
            s.add_argument("--family", choices=["words", "skt", "given"], default="given")
            s.add_argument("--max-span", type=int, default=2)
            s.add_argument("--max-size", type=int, default=6)
            s.add_argument("--max-length", type=int, default=4)
            s.add_argument("--verbose", action="store_true")

    s = add("expand", cmd_expand, "expand a polynomial given as text")
    s.add_argument("--poly", required=True, help='e.g. "1 x^(1,0) + 1 x^(0,1)"')
    s.add_argument("--nvars", type=int)
    s.add_argument("--basis", choices=["slide", "key", "schur", "monomial"], default="key")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except (OracleFailure, B.OracleMismatch, B.PositivityError, de.RectificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ExpansionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def run(argv: Sequence[str] | None = None) -> int:
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
