"""Property suites: each result of the theory as rows of pass/fail checks over a corpus.

The corpus is the shipped catalog, algebras derived from it (commutator
algebras of Hom-alternative entries, opposites of one-sided Hom-alternative
entries) and a seeded random family of anticommutative algebras.  Suite ids
are the interface names used by ``homcheck verify --suite``.
"""
from __future__ import annotations

import random
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from functools import cache

from homalg import catalog, core
from homalg import constructions as C
from homalg import identities as ids
from homalg.core import CheckReport, HomAlgebra, LinearMap, Verdict


@dataclass(frozen=True)
class Row:
    subject: str
    check: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    rows: tuple[Row, ...]

    @property
    def passed(self) -> bool:
        return bool(self.rows) and all(r.passed for r in self.rows)

    def table(self) -> str:
        width = max((len(r.subject) for r in self.rows), default=0)
        lines = [
            f"{'PASS' if r.passed else 'FAIL'}  {r.subject:<{width}}  {r.check}" + (f"  ({r.detail})" if r.detail else "")
            for r in self.rows
        ]
        n_ok = sum(r.passed for r in self.rows)
        lines.append(f"{self.suite}: {n_ok}/{len(self.rows)} passed")
        return "\n".join(lines)


def _report_row(subject: str, check: str, report: CheckReport, want: Verdict = Verdict.HOLDS) -> Row:
    return Row(subject, check, report.verdict is want, "" if report.verdict is want else report.describe())


def _equal_row(subject: str, check: str, a, b) -> Row:
    return Row(subject, check, a == b, "" if a == b else "tensors differ")


# ---------------------------------------------------------------------------
# corpus


def _named(A: HomAlgebra, name: str) -> HomAlgebra:
    return HomAlgebra(A.product, A.twist, A.basis, {"name": name})


RANDOM_CORPUS_SIZE = 50
RANDOM_CORPUS_SEED = 7


@cache
def random_corpus(size: int = RANDOM_CORPUS_SIZE, seed: int = RANDOM_CORPUS_SEED) -> tuple[HomAlgebra, ...]:
    """Seeded anticommutative algebras of dimension 2..4; odd members carry a multiplicative diagonal twist."""
    out = []
    for k in range(size):
        dim = 2 + k % 3
        rng = random.Random(f"{seed}/{k}")
        if k % 2 == 0:
            A = catalog.random_anticommutative(dim, rng.getrandbits(64), rng.choice((0.3, 0.5, 0.7)))
        else:
            weights = [rng.choice((1, 2, 3, 6)) for _ in range(dim)]
            A = catalog.random_with_diagonal_twist(dim, rng.getrandbits(64), weights, anticommutative=True,
                                                   density=rng.choice((0.3, 0.5, 0.7)))
        out.append(_named(A, f"random-{seed}-{k}"))
    return tuple(out)


def _binary_entries() -> list[catalog.CatalogEntry]:
    return [e for e in catalog.entries() if e.kind == "binary"]


def _name(A) -> str:
    return A.provenance["name"]


def _holds(entry, *identities) -> bool:
    return all(entry.expects(i) for i in identities)


@cache
def hom_alternative_algebras() -> tuple[HomAlgebra, ...]:
    return tuple(
        e.payload for e in _binary_entries() if _holds(e, "multiplicative", "right-alternative", "left-alternative")
    )


@cache
def malcev_algebras() -> tuple[HomAlgebra, ...]:
    """Multiplicative Hom-Malcev algebras: catalog entries plus commutators of Hom-alternative entries."""
    out = [e.payload for e in _binary_entries() if _holds(e, "multiplicative", "hom-malcev")]
    out += [_named(core.commutator_algebra(A), f"comm({_name(A)})") for A in hom_alternative_algebras()]
    return tuple(out)


@cache
def one_sided_algebras() -> tuple[tuple[HomAlgebra, str], ...]:
    """Multiplicative one-sided Hom-alternative algebras with their side, opposites included."""
    out = []
    for e in _binary_entries():
        if not e.expects("multiplicative"):
            continue
        for side in ("right", "left"):
            if e.expects(f"{side}-alternative"):
                out.append((e.payload, side))
        if e.expects("right-alternative") and not e.expects("left-alternative"):
            out.append((_named(core.opposite_algebra(e.payload), f"op({e.name})"), "left"))
    return tuple(out)


def _classical_with_morphisms() -> Iterator[tuple[HomAlgebra, str, LinearMap]]:
    for e in _binary_entries():
        if e.morphisms and e.payload.twist.is_identity() and e.expects("hom-malcev"):
            for mname, m in e.morphisms:
                yield e.payload, mname, m


# ---------------------------------------------------------------------------
# suites


def suite_loos_lts(workers=None) -> list[Row]:
    rows = []
    for A in malcev_algebras():
        n = _name(A)
        T = C.loos_ternary(A)
        rows.append(_report_row(n, "loos bracket is a Hom-Lts", ids.check_hom_lts(T, workers)))
        rows.append(_report_row(n, "loos bracket is multiplicative", core.is_multiplicative_ternary(T)))
        rows.append(_equal_row(n, "expanded route = Jacobian route", T.product, C.loos_ternary(A, "jacobian").product))
    return rows


def suite_loos_compatibility(workers=None) -> list[Row]:
    return [_report_row(_name(A), "loos compatibility", ids.check_loos_compatibility(A, workers))
            for A in malcev_algebras()]


def suite_twisted_lts(workers=None) -> list[Row]:
    rows = []
    for A, mname, m in _classical_with_morphisms():
        subject = f"{_name(A)}/{mname}"
        T = C.lts_from_malcev_morphism(A, m)
        rows.append(_equal_row(subject, "twist-then-loos = m^2 of classical loos", T.product,
                               C.alpha_n_lts(A, m, 2).product))
        rows.append(_report_row(subject, "twist-then-loos is a Hom-Lts", ids.check_hom_lts(T, workers)))
        rows.append(_report_row(subject, "Yau twist is Hom-Malcev", ids.check_hom_malcev(C.yau_twist(A, m), workers=workers)))
    return rows


def suite_bol_from_malcev(workers=None) -> list[Row]:
    return [_report_row(_name(A), "Malcev Bol algebra", ids.check_hom_bol(C.bol_from_malcev(A), workers))
            for A in malcev_algebras()]


def suite_bol_from_hom_alternative(workers=None) -> list[Row]:
    rows = []
    for A in hom_alternative_algebras():
        n = _name(A)
        B = C.bol_from_hom_alternative(A)
        M = C.bol_from_malcev(core.commutator_algebra(A))
        rows.append(_report_row(n, "commutator algebra is Hom-Malcev",
                                ids.check_hom_malcev(core.commutator_algebra(A), workers=workers)))
        rows.append(_report_row(n, "Hom-alternative Bol algebra", ids.check_hom_bol(B, workers)))
        rows.append(_equal_row(n, "equals Malcev Bol of the commutator",
                               (B.bracket, B.triple, B.twist), (M.bracket, M.triple, M.twist)))
    return rows


def _agreement_row(subject: str, check: str, reports: dict[str, CheckReport]) -> Row:
    verdicts = {f: r.verdict for f, r in reports.items()}
    same = len(set(verdicts.values())) == 1
    detail = ", ".join(f"{f}={v.value}" for f, v in verdicts.items())
    return Row(subject, check, same, detail)


def lemma_4_1_corpus() -> list[HomAlgebra]:
    out = [e.payload for e in _binary_entries()]
    out += [_named(core.opposite_algebra(A), f"op({_name(A)})") for A, s in one_sided_algebras() if s == "right"]
    out += list(random_corpus())
    return out


def suite_alternative_forms(workers=None) -> list[Row]:
    rows = []
    for A in lemma_4_1_corpus():
        n = _name(A)
        rows.append(_agreement_row(n, "right-alternative forms agree", {
            f: ids.check_right_hom_alternative(A, f, workers) for f in ids.RIGHT_ALTERNATIVE_FORMS}))
        rows.append(_agreement_row(n, "left-alternative forms agree", {
            f: ids.check_left_hom_alternative(A, f, workers) for f in ids.LEFT_ALTERNATIVE_FORMS}))
    return rows


def suite_bracket_associator(workers=None) -> list[Row]:
    return [
        _report_row(_name(A), f"bracket associator ({side})", ids.check_bracket_associator(A, side, workers))
        for A, side in one_sided_algebras()
    ]


def suite_alternative_triple(workers=None) -> list[Row]:
    rows = []
    for A, side in one_sided_algebras():
        n = _name(A)
        T = C.ternary_from_alternative(A, side)
        rows.append(_equal_row(n, f"{side} alternative triple = Jordan triple", T.product, C.jordan_triple(A).product))
        if side == "left" and n.startswith("op("):
            original = core.opposite_algebra(A)
            rows.append(_equal_row(n, "left triple of opposite = right triple", T.product,
                                   C.ternary_from_alternative(original, "right").product))
    return rows


def suite_one_sided_bol(workers=None) -> list[Row]:
    rows = []
    for A, side in one_sided_algebras():
        n = _name(A)
        rows.append(_report_row(n, f"one-sided Bol algebra ({side})",
                                ids.check_hom_bol(C.bol_from_one_sided_alternative(A, side), workers)))
        rows.append(_report_row(n, f"{side} alternative triple is a Hom-Lts",
                                ids.check_hom_lts(C.ternary_from_alternative(A, side), workers)))
        rows.append(_equal_row(n, "alternative triple = Jordan triple", C.ternary_from_alternative(A, side).product,
                               C.jordan_triple(A).product))
        rows.append(_report_row(n, "plus algebra is Hom-Jordan", ids.check_hom_jordan(core.plus_algebra(A), workers)))
        J = C.jordan_lts(A)
        rows.append(_equal_row(n, "Jordan Lts = 2 x Jordan triple", J.product, C.jordan_triple(A).product.scale(2)))
        rows.append(_report_row(n, "Jordan Lts is a Hom-Lts", ids.check_hom_lts(J, workers)))
    return rows


def suite_jordan_triple(workers=None) -> list[Row]:
    rows = []
    for e in _binary_entries():
        if not e.expects("multiplicative"):
            continue
        T = C.jordan_triple(e.payload)
        rows.append(_report_row(e.name, "Jordan triple is a Hom-triple system", ids.check_hom_triple(T, workers)))
        rows.append(_report_row(e.name, "Jordan triple is multiplicative", core.is_multiplicative_ternary(T)))
    return rows


def suite_alpha_n_lts(workers=None) -> list[Row]:
    rows = []
    for A, mname, m in _classical_with_morphisms():
        subject = f"{_name(A)}/{mname}"
        classical = C.loos_ternary(A).product
        for n in range(4):
            T = C.alpha_n_lts(A, m, n)
            rows.append(_report_row(subject, f"n={n} is a Hom-Lts", ids.check_hom_lts(T, workers)))
            rows.append(_equal_row(subject, f"n={n} = m^{n} of classical loos", T.product,
                                   classical.apply_last(core.power(m, n).matrix)))
        rows.append(_equal_row(subject, "n=2 = twist-then-loos", C.alpha_n_lts(A, m, 2).product,
                               C.lts_from_malcev_morphism(A, m).product))
    return rows


def malcev_corpus() -> list[HomAlgebra]:
    out = [e.payload for e in _binary_entries() if _holds(e, "anticommutative", "multiplicative")]
    out += [A for A in malcev_algebras() if _name(A).startswith("comm(")]
    out += list(random_corpus())
    return out


def suite_malcev_forms(workers=None) -> list[Row]:
    rows = []
    for A in malcev_corpus():
        n = _name(A)
        reports = {f: ids.check_hom_malcev(A, f, workers) for f in ids.MALCEV_FORMS}
        rows.append(_agreement_row(n, "Hom-Malcev forms agree", reports))
        lie = ids.check_hom_lie(A, workers)
        if lie.holds:
            rows.append(_report_row(n, "Hom-Lie implies Hom-Malcev", reports["eq23"]))
    return rows


SUITES: dict[str, tuple[str, Callable[..., list[Row]]]] = {
    "thm-3.2": ("Loos-type bracket of a multiplicative Hom-Malcev algebra is a Hom-Lts", suite_loos_lts),
    "lemma-3.1": ("product / Loos bracket compatibility", suite_loos_compatibility),
    "prop-3.4": ("Yau twist then Loos bracket = twisted classical Loos bracket", suite_twisted_lts),
    "thm-3.5": ("Bol algebra from a multiplicative Hom-Malcev algebra", suite_bol_from_malcev),
    "cor-3.6": ("Bol algebra from a multiplicative Hom-alternative algebra", suite_bol_from_hom_alternative),
    "lemma-4.1": ("equivalent forms of one-sided Hom-alternativity", suite_alternative_forms),
    "lemma-4.2": ("associator of a commutator in one-sided Hom-alternative algebras", suite_bracket_associator),
    "prop-4.3": ("alternative ternary product = Jordan triple", suite_alternative_triple),
    "thm-4.4": ("Bol algebra from a one-sided Hom-alternative algebra", suite_one_sided_bol),
    "prop-2.9": ("Jordan triple of a multiplicative algebra is a Hom-triple system", suite_jordan_triple),
    "prop-2.11": ("m^n-twisted Loos brackets are Hom-Lts", suite_alpha_n_lts),
    "equiv-2.2-2.3-2.4": ("the three Hom-Malcev forms agree", suite_malcev_forms),
}


class UnknownSuite(KeyError):
    pass


def run(suite: str, workers=None) -> SuiteResult:
    try:
        _, fn = SUITES[suite]
    except KeyError:
        raise UnknownSuite(suite) from None
    return SuiteResult(suite, tuple(fn(workers)))
