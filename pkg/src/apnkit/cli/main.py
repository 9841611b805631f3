"""Command-line entry point: verify, build, ybe, correspond, factorize, search.

Exit codes: 0 all checks pass, 1 an identity fails (the report is still
written), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .. import search as srch
from ..algebra import check_apn, check_novikov
from ..bialgebra.coalgebra import InternalConsistencyError, check_apn_bialgebra, check_apn_coalgebra
from ..bialgebra.factorizable import (canonical_s, check_quadratic_rb, double_algebra,
                                      double_bialgebra, factorizable_to_rb, factorize,
                                      rb_to_factorizable)
from ..bialgebra.ybe import (check_factorizable, check_quasi_triangular, coboundary_delta,
                             ybe_residual)
from ..exactlin import FieldError, as_field
from ..forms import check_quadratic_apn, check_quasi_frobenius
from ..matched_pair import build_apn_sum, check_apn_matched_pair
from ..operators import (AAPNStructure, check_anti_o_operator, check_o_operator_apn,
                         check_o_operator_novikov, check_relative_rb, check_rota_baxter_apn,
                         check_rota_baxter_novikov, check_strong, compatible_apn_from_anti_o)
from ..report import IdentityReport
from ..representation import (check_apn_rep, check_novikov_rep, coregular_apn_rep, dual_apn_rep,
                              regular_apn_rep, regular_novikov_rep, semidirect_apn)
from .documents import (Document, DocumentError, apn_json, apn_rep_json, cobracket_json,
                        dumps, field_json, load, matrix_json, novikov_json, sparse_json)

VERIFY = ("novikov", "apn", "rep", "coalgebra", "bialgebra", "matched-pair", "quasi-frobenius",
          "quadratic", "rb", "relative-rb", "anti-o", "o-operator", "quasi-triangular",
          "factorizable")
BUILD = ("associated", "semidirect", "dual-rep", "matched-sum", "double", "coboundary",
         "compatible-apn", "double-bialgebra")


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------- helpers


def _params(items) -> dict:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"--param expects name=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _doc(args) -> Document:
    if not args.file:
        raise UsageError("an input document is required")
    try:
        return load(args.file, args.field, _params(args.param), args.coerce)
    except OSError as e:
        raise UsageError(f"{args.file}: {e.strerror}") from None


def _weight(doc: Document, args, default=0):
    if args.weight is not None:
        return doc.reader.coef(args.weight, "--weight")
    return doc.scalar("weight", default)


def _tensor(doc: Document, args, A):
    if args.s == "canonical":
        if A.dim % 2:
            raise UsageError("--s canonical needs an even dimension (A + A*)")
        return canonical_s(A.field, A.dim // 2)
    return doc.tensor("s", A.dim)


def _apn_rep(doc: Document, args, A):
    choice = args.rep or ("doc" if doc.has("rep") else "regular")
    if choice == "regular":
        return regular_apn_rep(A)
    if choice == "coregular":
        return coregular_apn_rep(A)
    return doc.apn_rep()


def _novikov_rep(doc: Document, args, N):
    choice = args.rep or ("doc" if doc.has("rep") else "regular")
    return regular_novikov_rep(N) if choice == "regular" else doc.novikov_rep()


def _values(args, F):
    if args.values is None:
        return None
    text = args.values.strip()
    try:
        if ":" in text:
            lo, hi = (int(t) for t in text.split(":", 1))
            return list(range(lo, hi + 1))
        return [F.scalar(t.strip(), coerce=args.coerce) for t in text.split(",") if t.strip()]
    except (ValueError, FieldError) as e:
        raise UsageError(f"--values: {e}") from None


def _result(command: str, report: IdentityReport | None, **extra) -> dict:
    out = {"command": command}
    if report is not None:
        out.update(report.to_json())
    else:
        out["passed"] = True
    out.update(extra)
    return out


# ---------------------------------------------------------------- verify


def cmd_verify(args) -> dict:
    doc = _doc(args)
    what = args.what
    name = f"verify {what}"
    if what == "novikov":
        return _result(name, check_novikov(doc.novikov()))
    if what == "matched-pair":
        return _result(name, check_apn_matched_pair(doc.matched_pair()))
    if what == "coalgebra":
        return _result(name, check_apn_coalgebra(doc.cobracket()))
    if what == "quasi-frobenius":
        N = doc.novikov()
        return _result(name, check_quasi_frobenius(N, doc.matrix("omega", (N.dim, N.dim))))
    if what == "anti-o":
        N = doc.novikov()
        rep = _novikov_rep(doc, args, N)
        T = doc.matrix("T", (N.dim, rep.dim))
        return _result(name, check_anti_o_operator(N, rep, T),
                       strong=check_strong(N, rep, T).passed)
    if doc.kind() == "novikov":
        N = doc.novikov()
        if what == "rep":
            return _result(name, check_novikov_rep(N, doc.novikov_rep()))
        if what == "rb":
            return _result(name, check_rota_baxter_novikov(N, doc.matrix("P", (N.dim, N.dim)),
                                                           _weight(doc, args)))
        if what == "o-operator":
            rep = _novikov_rep(doc, args, N)
            return _result(name, check_o_operator_novikov(N, rep, doc.matrix("T", (N.dim, rep.dim))))
        raise UsageError(f"verify {what} needs an APN document (ops succ/prec)")
    A = doc.apn()
    n = A.dim
    if what == "apn":
        return _result(name, check_apn(A))
    if what == "rep":
        return _result(name, check_apn_rep(A, doc.apn_rep()))
    if what == "bialgebra":
        return _result(name, check_apn_bialgebra(A, doc.cobracket()))
    if what == "quadratic":
        return _result(name, check_quadratic_apn(A, doc.matrix("omega", (n, n))))
    if what == "rb":
        P, lam = doc.matrix("P", (n, n)), _weight(doc, args)
        if doc.has("omega"):
            return _result(name, check_quadratic_rb(A, P, doc.matrix("omega", (n, n)), lam))
        return _result(name, check_rota_baxter_apn(A, P, lam))
    if what == "relative-rb":
        V = doc.module_algebra()
        S = AAPNStructure(A, doc.apn_rep(), V)
        return _result(name, check_relative_rb(S, doc.matrix("T", (n, V.dim)), _weight(doc, args)))
    if what == "o-operator":
        rep = _apn_rep(doc, args, A)
        return _result(name, check_o_operator_apn(A, rep, doc.matrix("T", (n, rep.dim)),
                                                  _weight(doc, args)))
    if what == "quasi-triangular":
        return _result(name, check_quasi_triangular(A, _tensor(doc, args, A)))
    if what == "factorizable":
        return _result(name, check_factorizable(A, _tensor(doc, args, A)))
    raise UsageError(f"unknown verify target {what!r}")  # pragma: no cover


# ---------------------------------------------------------------- build


def cmd_build(args) -> dict:
    doc = _doc(args)
    what = args.what
    name = f"build {what}"
    if what == "compatible-apn":
        N = doc.novikov()
        rep = _novikov_rep(doc, args, N)
        T = doc.matrix("T", (N.dim, rep.dim))
        rep_ok = check_anti_o_operator(N, rep, T)
        B = compatible_apn_from_anti_o(N, rep, T)
        return _result(name, rep_ok, output=apn_json(B))
    if what == "matched-sum":
        mp = doc.matched_pair()
        return _result(name, check_apn_matched_pair(mp), output=apn_json(build_apn_sum(mp)))
    A = doc.apn()
    F = A.field
    if what == "associated":
        return _result(name, check_apn(A), output=novikov_json(A.associated()))
    if what == "semidirect":
        rep = _apn_rep(doc, args, A)
        return _result(name, check_apn_rep(A, rep), output=apn_json(semidirect_apn(A, rep)))
    if what == "dual-rep":
        rep = dual_apn_rep(_apn_rep(doc, args, A))
        out = {"field": field_json(F), "dim": A.dim, "ops": apn_json(A)["ops"],
               "rep": apn_rep_json(rep)}
        return _result(name, check_apn_rep(A, rep), output=out)
    if what == "double":
        D = double_algebra(A, doc.cobracket())
        out = apn_json(D)
        out["s"] = sparse_json(F, canonical_s(F, A.dim))
        return _result(name, check_apn(D), output=out)
    if what == "coboundary":
        s = _tensor(doc, args, A)
        delta = coboundary_delta(A, s)
        out = apn_json(A)
        out["s"] = sparse_json(F, s)
        out["cobracket"] = cobracket_json(delta)
        return _result(name, check_apn_bialgebra(A, delta), output=out)
    if what == "double-bialgebra":
        delta = doc.cobracket()
        pre = check_apn_bialgebra(A, delta)
        if not pre.passed:
            return _result(name, pre)
        Db = double_bialgebra(A, delta, check=False)
        out = apn_json(Db.algebra)
        out["s"] = sparse_json(F, Db.s)
        out["cobracket"] = cobracket_json(Db.delta)
        return _result(name, check_factorizable(Db.algebra, Db.s), output=out)
    raise UsageError(f"unknown build target {what!r}")  # pragma: no cover


# ---------------------------------------------------------------- ybe / correspond / factorize


def cmd_ybe(args) -> dict:
    doc = _doc(args)
    A = doc.apn()
    F = A.field
    n = A.dim
    if args.action == "check":
        s = _tensor(doc, args, A)
        rep = IdentityReport(F).add("YE6", ybe_residual(A, s)[..., None], (n, n, n))
        if args.skew_only:
            rep.add("skew", (s + s.T)[..., None], (n, n))
        return _result("ybe check", rep)
    support = None
    if doc.has("support"):
        support = [tuple(p) for p in doc.raw["support"]]
    res = srch.search_ybe_solutions(A, _values(args, F), args.skew_only, support,
                                    args.budget, args.workers)
    return _result("ybe search", None, solutions=[sparse_json(F, s) for s in res.items],
                   count=len(res), examined=res.examined, truncated=res.truncated)


def cmd_correspond(args) -> dict:
    doc = _doc(args)
    A = doc.apn()
    F = A.field
    n = A.dim
    lam = _weight(doc, args, 1)
    if args.direction == "rb-to-bialgebra":
        P, w = doc.matrix("P", (n, n)), doc.matrix("omega", (n, n))
        pre = check_quadratic_rb(A, P, w, lam)
        if not pre.passed:
            return _result("correspond rb-to-bialgebra", pre)
        s = rb_to_factorizable(A, P, w, lam)
        out = apn_json(A)
        out["s"] = sparse_json(F, s)
        out["cobracket"] = cobracket_json(coboundary_delta(A, s))
        return _result("correspond rb-to-bialgebra", check_factorizable(A, s), output=out)
    s = _tensor(doc, args, A)
    pre = check_factorizable(A, s)
    if not pre.passed:
        return _result("correspond bialgebra-to-rb", pre)
    P, w = factorizable_to_rb(A, s, lam, check=False)
    out = apn_json(A)
    out.update(P=matrix_json(F, P), omega=matrix_json(F, w), weight=F.fmt(lam))
    return _result("correspond bialgebra-to-rb", check_quadratic_rb(A, P, w, lam), output=out)


def cmd_factorize(args) -> dict:
    doc = _doc(args)
    A = doc.apn()
    F = A.field
    s = _tensor(doc, args, A)
    pre = check_factorizable(A, s)
    if not pre.passed:
        return _result("factorize", pre)
    if args.x is not None:
        x = doc.reader.vector([t.strip() for t in args.x.split(",")], "--x", A.dim)
    else:
        x = doc.reader.vector(doc.raw.get("x"), "x", A.dim)
    x1, x2 = factorize(A, s, x, check=False)
    rep = IdentityReport(F).add("x1-x2=x", (x1 - x2 - x)[None, :], (1,))
    return _result("factorize", rep, x1=[F.fmt(v) for v in x1], x2=[F.fmt(v) for v in x2])


def cmd_search(args) -> dict:
    if args.target == "apn":
        if args.field is None or args.dim is None:
            raise UsageError("search apn needs --field and --dim")
        F = as_field(args.field)
        res = srch.enumerate_apn(F, args.dim, _values(args, F), args.max_nonzero,
                                 args.budget, args.workers)
        algs = [{k: v for k, v in apn_json(A).items() if k != "field"} for A in res.items]
        return _result("search apn", None, field=field_json(F), algebras=algs, count=len(res),
                       examined=res.examined, truncated=res.truncated)
    doc = _doc(args)
    A = doc.apn()
    F = A.field
    rep = _apn_rep(doc, args, A)
    res = srch.search_o_operators(A, rep, _values(args, F), args.budget, args.workers)
    return _result("search o-operators", None, operators=[matrix_json(F, T) for T in res.items],
                   count=len(res), examined=res.examined, truncated=res.truncated)


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="override the document field: Q or gf:p")
    common.add_argument("--param", action="append", metavar="NAME=VALUE",
                        help="value for a named parameter in coefficients (repeatable)")
    common.add_argument("--coerce", action="store_true",
                        help="map rational literals into GF(p) by inverting denominators")
    common.add_argument("--json", action="store_true", help="print the JSON report on stdout")
    common.add_argument("--json-out", metavar="PATH", help="also write the JSON report to PATH")
    common.add_argument("--weight", help="weight lambda (overrides the document)")
    common.add_argument("--s", choices=("doc", "canonical"), default="doc",
                        help="use the document's s or the canonical sum e_i (x) e_i*")
    common.add_argument("--rep", choices=("doc", "regular", "coregular"),
                        help="representation source (default: the document's, else regular)")
    common.add_argument("--skew-only", action="store_true")
    common.add_argument("--budget", type=int, default=None, help="candidate cap for searches")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--values", help="search grid: LO:HI or a comma list (write --values=-2:2)")

    p = argparse.ArgumentParser(prog="apnkit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify", parents=[common], help="check a structure")
    v.add_argument("what", choices=VERIFY)
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("build", parents=[common], help="construct a derived structure")
    b.add_argument("what", choices=BUILD)
    b.add_argument("file")
    b.set_defaults(func=cmd_build)

    y = sub.add_parser("ybe", parents=[common], help="Yang-Baxter residuals and solution search")
    y.add_argument("action", choices=("check", "search"))
    y.add_argument("file")
    y.set_defaults(func=cmd_ybe)

    c = sub.add_parser("correspond", parents=[common], help="Rota-Baxter <-> factorizable")
    c.add_argument("direction", choices=("rb-to-bialgebra", "bialgebra-to-rb"))
    c.add_argument("file")
    c.set_defaults(func=cmd_correspond)

    f = sub.add_parser("factorize", parents=[common], help="split x = x1 - x2")
    f.add_argument("file")
    f.add_argument("--x", help="comma-separated coordinates of x")
    f.set_defaults(func=cmd_factorize)

    s = sub.add_parser("search", parents=[common], help="brute-force enumeration")
    s.add_argument("target", choices=("apn", "o-operators"))
    s.add_argument("file", nargs="?")
    s.add_argument("--dim", type=int)
    s.add_argument("--max-nonzero", type=int, default=None)
    s.set_defaults(func=cmd_search)
    return p


def render_text(result: dict) -> str:
    status = "PASS" if result.get("passed") else "FAIL"
    lines = [f"{status} {result['command']}"]
    if "checked" in result:
        lines[0] += f" ({len(result['checked'])} identities)"
    for w in result.get("witnesses", [])[:20]:
        idx = "(" + ",".join(str(i) for i in w["indices"]) + ")"
        lines.append(f"  {w['identity']} at {idx}: [{', '.join(w['residual'])}]")
    extra = len(result.get("witnesses", [])) - 20
    if extra > 0:
        lines.append(f"  ... {extra} more witnesses")
    for key in ("count", "examined", "truncated", "strong", "x1", "x2"):
        if key in result:
            lines.append(f"  {key}: {result[key]}")
    if "output" in result:
        lines.append(dumps(result["output"]).rstrip())
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        result = args.func(args)
    except (UsageError, DocumentError, FieldError) as e:
        print(f"apnkit: error: {e}", file=sys.stderr)
        return 2
    except InternalConsistencyError as e:
        print(f"apnkit: internal consistency failure: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"apnkit: error: {e}", file=sys.stderr)
        return 2
    text = dumps(result)
    if args.json_out:
        Path(args.json_out).write_text(text)
    sys.stdout.write(text if args.json else render_text(result))
    return 0 if result.get("passed") else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
