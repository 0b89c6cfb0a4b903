"""``homcheck``: check identities, run constructions, browse the catalog, search, verify suites.

Exit codes: 0 holds / success, 1 identity fails (or search finds nothing,
or a suite has failing rows), 2 precondition failure, 64 usage or parse
error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from homalg import catalog, core, io, suites
from homalg import constructions as C
from homalg import identities as ids
from homalg.core import CheckReport, HomAlgebra, LinearMap, Verdict
from homalg.tensor import format_rational

EXIT_OK, EXIT_FAILS, EXIT_PRECONDITION, EXIT_USAGE = 0, 1, 2, 64
_EXIT = {Verdict.HOLDS: EXIT_OK, Verdict.FAILS: EXIT_FAILS, Verdict.PRECONDITION: EXIT_PRECONDITION}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(path: str) -> io.AlgebraDocument:
    try:
        return io.load_document(path)
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None
    except io.ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def format_report(report: CheckReport, basis=None) -> str:
    lines = [
        f"identity: {report.identity}",
        f"form: {report.form or '-'}",
        f"verdict: {report.verdict.value}",
    ]
    if report.clause:
        lines.append(f"clause: {report.clause}")
    if report.witness is not None:
        w = report.witness
        at = w.labels(basis) if basis is not None else tuple(map(str, w.indices))
        lines.append(f"witness: ({', '.join(at)})")
        lines.append(f"residual: ({', '.join(format_rational(c) for c in w.residual)})")
    if report.verdict is Verdict.PRECONDITION:
        cause = report.cause.describe(basis) if report.cause is not None else report.note
        lines.append(f"cause: {cause}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# verbs


def cmd_check(args) -> int:
    doc = _load(args.file)
    if args.identity not in ids.CHECKERS:
        raise UsageError(f"unknown identity {args.identity!r}; known: {', '.join(sorted(ids.CHECKERS))}")
    kind, _, forms = ids.CHECKERS[args.identity]
    if doc.kind != kind:
        raise UsageError(f"{args.identity!r} applies to {kind} documents, {args.file} is {doc.kind}")
    if args.form is not None and args.form not in forms:
        raise UsageError(f"{args.identity!r} has forms {list(forms) or 'none'}, not {args.form!r}")
    report = ids.check(args.identity, doc.value, args.form)
    sys.stdout.write(format_report(report, doc.basis))
    if args.report:
        _write(args.report, io.dumps_report([io.report_dict(report, doc.basis) | {"file": args.file}]))
    return _EXIT[report.verdict]


def _morphism(path: str | None, dim: int) -> LinearMap:
    if path is None:
        raise UsageError("this functor needs --morphism FILE")
    doc = _load(path)
    if doc.kind != "map":
        raise UsageError(f"{path}: --morphism expects a document of kind 'map', got {doc.kind!r}")
    if doc.value.dim != dim:
        raise UsageError(f"{path}: morphism of dimension {doc.value.dim} for an algebra of dimension {dim}")
    return doc.value


def cmd_construct(args) -> int:
    doc = _load(args.file)
    if args.functor not in C.FUNCTORS:
        raise UsageError(f"unknown functor {args.functor!r}; known: {', '.join(sorted(C.FUNCTORS))}")
    if doc.kind != "binary":
        raise UsageError(f"functors take binary documents, {args.file} is {doc.kind}")
    fn, params = C.FUNCTORS[args.functor]
    A: HomAlgebra = doc.value
    kwargs = {}
    provenance = {"functor": args.functor, "inputs": [Path(args.file).name]}
    if "morphism" in params:
        kwargs["m"] = _morphism(args.morphism, A.dim)
        provenance["inputs"].append(Path(args.morphism).name)
    if "n" in params:
        if args.n is None or args.n < 0:
            raise UsageError("alpha-n-lts needs --n K with K >= 0")
        kwargs["n"] = args.n
    if "side" in params:
        kwargs["side"] = args.side
        provenance["side"] = args.side
    if args.functor not in ("commutator", "plus", "opposite"):
        kwargs["check"] = not args.no_check
    try:
        out = fn(A, **kwargs)
    except C.PreconditionError as exc:
        sys.stderr.write(f"precondition failed for {args.functor}:\n{format_report(exc.report, A.basis)}")
        return EXIT_PRECONDITION
    power = (out.provenance or {}).get("twist_power")
    if power is not None:
        provenance["twist_power"] = power
    name = f"{args.functor}({doc.name or Path(args.file).stem})"
    _write(args.output, io.dumps(out, name, {"provenance": provenance}))
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for n in catalog.names():
            e = catalog.get(n)
            source = e.provenance.get("source", "")
            sys.stdout.write(f"{n:<10} {e.kind:<8} dim {e.payload.dim:<3} {source}\n")
        return EXIT_OK
    if args.name is None:
        raise UsageError("catalog show needs an entry name")
    try:
        entry = catalog.get(args.name)
    except catalog.UnknownEntry:
        raise UsageError(f"unknown catalog entry {args.name!r}; known: {', '.join(catalog.names())}") from None
    _write(args.output, catalog.to_text(entry))
    return EXIT_OK


def _parse_want(text: str) -> tuple[str, Verdict, str | None]:
    pred, sep, verdict = text.partition("=")
    if not sep:
        raise UsageError(f"--want expects NAME[:FORM]=holds|fails|precondition, got {text!r}")
    name, _, form = pred.partition(":")
    if name not in ids.CHECKERS:
        raise UsageError(f"unknown identity {name!r} in --want")
    try:
        v = Verdict(verdict)
    except ValueError:
        raise UsageError(f"verdict must be holds, fails or precondition, got {verdict!r}") from None
    return name, v, form or None


def _parse_dims(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        dims = list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError:
        raise UsageError(f"--dims expects N or A..B, got {text!r}") from None
    if not dims or min(dims) < 1:
        raise UsageError(f"--dims must name positive dimensions, got {text!r}")
    return dims


def cmd_search(args) -> int:
    preds = [_parse_want(w) for w in args.want]
    dims = _parse_dims(args.dims)
    if args.budget < 1:
        raise UsageError("--budget must be at least 1")
    if args.generator != "auto" and args.generator not in catalog.GENERATORS:
        raise UsageError(f"unknown generator {args.generator!r}")
    entry = catalog.search(preds, dims, args.budget, args.seed, args.generator)
    if entry is None:
        sys.stderr.write(f"no algebra met the predicates within {args.budget} attempts\n")
        return EXIT_FAILS
    _write(args.output, catalog.to_text(entry))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    if any(n not in suites.SUITES for n in names):
        raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(suites.SUITES)}, all")
    results = [suites.run(n) for n in names]
    for r in results:
        sys.stdout.write(f"== {r.suite}: {suites.SUITES[r.suite][0]}\n{r.table()}\n")
    if args.report:
        rows = [
            {"suite": r.suite, "subject": row.subject, "check": row.check,
             "verdict": "pass" if row.passed else "fail", **({"detail": row.detail} if row.detail else {})}
            for r in results for row in r.rows
        ]
        _write(args.report, io.dumps_report(rows))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILS


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="homcheck", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="check one identity on an algebra file")
    c.add_argument("file")
    c.add_argument("--identity", required=True, help=", ".join(sorted(ids.CHECKERS)))
    c.add_argument("--form", help="identity variant (hom-malcev: direct|eq23|eq24, right-alternative: "
                                  "direct|eq41|eq42, left-alternative: direct|eq43|eq44, bracket-associator: right|left)")
    c.add_argument("--report", help="also write a structured report to this file")
    c.set_defaults(run=cmd_check)

    k = sub.add_parser("construct", help="apply a construction functor")
    k.add_argument("file")
    k.add_argument("--functor", required=True, help=", ".join(sorted(C.FUNCTORS)))
    k.add_argument("--morphism", help="map document for yau-twist, alpha-n-lts, lts-from-morphism")
    k.add_argument("--n", type=int, help="twist power for alpha-n-lts")
    k.add_argument("--side", choices=("right", "left"), default="right")
    k.add_argument("--no-check", action="store_true", help="skip the functor's precondition checks")
    k.add_argument("-o", "--output", help="output file (default: stdout)")
    k.set_defaults(run=cmd_construct)

    g = sub.add_parser("catalog", help="list or show shipped example algebras")
    g.add_argument("action", choices=("list", "show"))
    g.add_argument("name", nargs="?")
    g.add_argument("-o", "--output")
    g.set_defaults(run=cmd_catalog)

    s = sub.add_parser("search", help="search seeded random algebras for given verdicts")
    s.add_argument("--want", action="append", required=True, metavar="NAME[:FORM]=VERDICT")
    s.add_argument("--dims", default="2..4", help="N or A..B")
    s.add_argument("--budget", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--generator", default="auto", help="auto, " + ", ".join(sorted(catalog.GENERATORS)))
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_search)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("--suite", required=True, help=", ".join(suites.SUITES) + ", all")
    v.add_argument("--report", help="also write the rows as a structured report")
    v.set_defaults(run=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ids.default_workers()
    except ValueError as exc:
        sys.stderr.write(f"homcheck: {exc}\n")
        return EXIT_USAGE
    try:
        return args.run(args)
    except UsageError as exc:
        sys.stderr.write(f"homcheck: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
