"""Acceptance criteria 1-10, each timed against its runtime limit.

Every criterion prints one ``PASS``/``FAIL`` line.  Run directly
(``python tests/test_acceptance.py``) for just the summary lines.
Catalog loading, which re-verifies every stored claim, happens once
before the clocks start.
"""
from __future__ import annotations

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from homalg import catalog, core, io, suites  # noqa: E402
from homalg import constructions as C  # noqa: E402
from homalg import identities as ids  # noqa: E402
from homalg.core import Element, LinearMap, Verdict  # noqa: E402


class Failed(AssertionError):
    pass


def expect(cond: bool, what: str) -> None:
    if not cond:
        raise Failed(what)


def payload(name: str):
    return catalog.get(name).payload


def label(A) -> str:
    return (A.provenance or {}).get("name", "?")


# ---------------------------------------------------------------------------
# the criteria


def c1_loos_lts():
    algebras = suites.malcev_algebras()
    names = {label(A) for A in algebras}
    expect({"sl2", "sl2t", "m4", "dm"} <= names, f"corpus lacks required entries: {sorted(names)}")
    dm = next(A for A in algebras if label(A) == "dm")
    expect(not dm.twist.is_identity() and catalog.get("dm").provenance["source"] == "search",
           "no diagonal-twist random entry")
    for A in algebras:
        r = ids.check_hom_lts(C.loos_ternary(A))
        expect(r.holds, f"{label(A)}: {r.describe()}")
    return f"{len(algebras)} algebras"


def c2_loos_compatibility():
    algebras = suites.malcev_algebras()
    for A in algebras:
        r = ids.check_loos_compatibility(A)
        expect(r.holds, f"{label(A)}: {r.describe()}")
    return f"{len(algebras)} algebras"


def c3_bol():
    n = 0
    for A in suites.malcev_algebras():
        r = ids.check_hom_bol(C.bol_from_malcev(A))
        expect(r.holds, f"bol_from_malcev({label(A)}): {r.describe()}")
        n += 1
    alternative = suites.hom_alternative_algebras()
    expect(len(alternative) >= 3, "too few Hom-alternative entries")
    for A in alternative:
        B = C.bol_from_hom_alternative(A)
        r = ids.check_hom_bol(B)
        expect(r.holds, f"bol_from_hom_alternative({label(A)}): {r.describe()}")
        expect(B == C.bol_from_malcev(core.commutator_algebra(A)), f"{label(A)}: differs from the commutator route")
        n += 1
    return f"{n} Bol algebras"


def c4_one_sided():
    ra = payload("ra_np")
    op = core.opposite_algebra(ra)
    for A, side in ((ra, "right"), (op, "left")):
        r = ids.check_hom_bol(C.bol_from_one_sided_alternative(A, side))
        expect(r.holds, f"{side}: {r.describe()}")
        J = C.jordan_triple(A).product
        expect(C.ternary_from_alternative(A, side).product == J, f"{side}: alternative triple != Jordan triple")
        expect(C.jordan_lts(A).product == J.scale(2), f"{side}: Jordan Lts != 2 x Jordan triple")
    return "ra_np right, op(ra_np) left"


def c5_equivalence():
    malcev = suites.malcev_corpus()
    expect(sum(label(A).startswith("random-") for A in malcev) == 50, "random corpus is not 50 algebras")
    for A in malcev:
        verdicts = {f: ids.check_hom_malcev(A, f).verdict for f in ids.MALCEV_FORMS}
        expect(len(set(verdicts.values())) == 1, f"{label(A)}: Hom-Malcev forms disagree {verdicts}")
    one_sided = list({label(A): A for A in list(malcev) + suites.lemma_4_1_corpus()}.values())
    for A in one_sided:
        r = {f: ids.check_right_hom_alternative(A, f).verdict for f in ids.RIGHT_ALTERNATIVE_FORMS}
        l_ = {f: ids.check_left_hom_alternative(A, f).verdict for f in ids.LEFT_ALTERNATIVE_FORMS}
        expect(len(set(r.values())) == 1, f"{label(A)}: right forms disagree {r}")
        expect(len(set(l_.values())) == 1, f"{label(A)}: left forms disagree {l_}")
    return f"{len(malcev)} Hom-Malcev, {len(one_sided)} one-sided subjects"


def c6_jordan_and_alpha_n():
    n = 0
    for e in catalog.entries():
        if e.kind == "binary" and e.expects("multiplicative"):
            r = ids.check_hom_triple(C.jordan_triple(e.payload))
            expect(r.holds, f"jordan_triple({e.name}): {r.describe()}")
            n += 1
    for name in ("sl2", "m4"):
        e = catalog.get(name)
        for mname, m in e.morphisms:
            for k in range(4):
                r = ids.check_hom_lts(C.alpha_n_lts(e.payload, m, k))
                expect(r.holds, f"alpha_n_lts({name}, {mname}, {k}): {r.describe()}")
            expect(C.alpha_n_lts(e.payload, m, 2) == C.lts_from_malcev_morphism(e.payload, m),
                   f"{name}/{mname}: n = 2 differs from the Yau-twist route")
    return f"{n} Jordan triples"


CLASSICAL = {
    "anticommutative": "anticommutative",
    "commutative": "commutative",
    "hom-associative": "associative",
    "hom-lie": "lie",
    "hom-jordan": "jordan",
}


def _reduction_corpus():
    out = [e.payload for e in catalog.entries() if e.kind == "binary"]
    ra = payload("ra_np")
    out += [core.opposite_algebra(ra), core.plus_algebra(ra), core.plus_algebra(payload("assoc2"))]
    out += list(suites.random_corpus())
    rng = random.Random(2)
    for k in range(10):
        dim = 2 + k % 2
        c = [[[rng.choice((0, 0, 0, 1, -1)) for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
        out.append(core.HomAlgebra(c))
    return out


def c7_reduction():
    checked = 0
    for A in _reduction_corpus():
        B = A.with_twist(LinearMap.identity(A.dim))
        N = oracles.Naive.of(B)
        pairs = [(ids.check(h, B).holds, c) for h, c in CLASSICAL.items()]
        pairs += [(ids.check_hom_malcev(B, f).holds, "malcev") for f in ids.MALCEV_FORMS]
        pairs += [(ids.check_right_hom_alternative(B, f).holds, "right-alternative") for f in ids.RIGHT_ALTERNATIVE_FORMS]
        pairs += [(ids.check_left_hom_alternative(B, f).holds, "left-alternative") for f in ids.LEFT_ALTERNATIVE_FORMS]
        classical = {}
        for hom, c in pairs:
            if c not in classical:
                classical[c] = oracles.classical_holds(c, N)
            expect(hom == classical[c], f"{label(A)}: Hom verdict {hom} vs classical {c} {classical[c]}")
            checked += 1
    return f"{checked} verdict pairs"


def c8_negative_controls():
    m4 = catalog.get("m4")
    r = ids.check_hom_lie(m4.payload)
    stored = m4.claim("hom-lie").witness
    expect(r.verdict is Verdict.FAILS and r.witness == stored, "m4 does not fail Hom-Lie at its stored witness")
    xs = [Element.basis(4, i) for i in stored.indices]
    expect(bool(core.hom_jacobian(m4.payload, *xs)) and core.hom_jacobian(m4.payload, *xs) == stored.residual,
           "stored m4 witness does not reproduce its residual")
    r = ids.check_left_hom_alternative(payload("ra_np"))
    expect(r.verdict is Verdict.FAILS, "ra_np does not fail left Hom-alternativity")
    tern = catalog.get("tern2")
    p = tern.provenance
    regenerated = catalog.candidate(p["seed"], p["attempt"], p["dims"], p["generator"])
    expect(regenerated == tern.payload, "tern2 is not reproduced by its seed")
    r = ids.check_ternary_hom_nambu(regenerated)
    expect(r.verdict is Verdict.FAILS and r.witness == tern.claim("ternary-hom-nambu").witness,
           "tern2 does not fail Nambu at its stored witness")
    return "m4, ra_np, tern2"


def _multilinear(op, args, rng) -> bool:
    """op is linear in each argument at random elements and a random scalar."""
    from fractions import Fraction
    q = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    for pos in range(len(args)):
        other = ids.random_element(len(args[pos]), rng)
        mixed = list(args)
        mixed[pos] = args[pos] * q + other
        swapped = list(args)
        swapped[pos] = other
        if op(*mixed) != op(*args) * q + op(*swapped):
            return False
    return True


def c9_engine_soundness():
    rng = random.Random(9)
    probes = 0
    for e in catalog.entries():
        A = e.payload
        for name, s in ids.REGISTRY.items():
            if s.kind != e.kind or ids.scan(s, A) is not None:
                continue
            bad = ids.probe(s, A, rng, count=20)
            if bad:
                raise Failed(f"{e.name}/{name}: basis scan holds but a random probe gives {bad[0][1]}")
            probes += 20
    for e in catalog.entries():
        A, n = e.payload, e.payload.dim

        def els(k):
            return [ids.random_element(n, rng) for _ in range(k)]

        if e.kind == "binary":
            ops = [(lambda x, y: core.multiply(A, x, y), 2), (lambda x, y: core.jordan_product(A, x, y), 2),
                   (lambda x, y, z: core.hom_associator(A, x, y, z), 3),
                   (lambda x, y, z: core.hom_jacobian(A, x, y, z), 3),
                   (lambda x, y, z: core.hom_jordan_associator(A, x, y, z), 3), (lambda x: A.twist(x), 1)]
        elif e.kind == "ternary":
            ops = [(lambda x, y, z: core.ternary_apply(A, x, y, z), 3)]
        else:
            ops = []
        for op, k in ops:
            for _ in range(3):
                expect(_multilinear(op, els(k), rng), f"{e.name}: an operator is not multilinear")
    return f"{probes} probes"


def c10_round_trip():
    files = sorted(catalog.DATA_DIR.glob("*.homalg"))
    expect(len(files) == len(catalog.names()) >= 10, "catalog files missing")
    for p in files:
        text = p.read_bytes().decode("utf-8")
        d = io.parse(text)
        once = io.dumps(d.value, d.name, d.meta)
        expect(once == text, f"{p.name}: serialize(parse(file)) differs from the file")
        expect(io.dumps(io.parse(once).value, d.name, d.meta) == once, f"{p.name}: not byte-stable")
        expect(io.parse(once).value == d.value, f"{p.name}: value changed in the round trip")
    return f"{len(files)} files"


CRITERIA = [
    (1, "Loos bracket of Hom-Malcev entries is a Hom-Lts", 5.0, c1_loos_lts),
    (2, "product / Loos bracket compatibility", 2.0, c2_loos_compatibility),
    (3, "Bol algebras from Hom-Malcev and Hom-alternative algebras", 5.0, c3_bol),
    (4, "Bol algebras from one-sided Hom-alternative algebras", 5.0, c4_one_sided),
    (5, "equivalent identity forms agree", 30.0, c5_equivalence),
    (6, "Jordan triples and m^n-twisted Loos brackets", 10.0, c6_jordan_and_alpha_n),
    (7, "reduction to classical identities at twist = id", 10.0, c7_reduction),
    (8, "negative controls", 2.0, c8_negative_controls),
    (9, "engine soundness: probes and multilinearity", 10.0, c9_engine_soundness),
    (10, "round trip of shipped files", 1.0, c10_round_trip),
]


def evaluate(number: int) -> tuple[bool, str]:
    _, title, limit, fn = CRITERIA[number - 1]
    start = time.perf_counter()
    try:
        detail = fn()
        ok, why = True, detail
    except Failed as exc:
        ok, why = False, str(exc)
    elapsed = time.perf_counter() - start
    if ok and elapsed >= limit:
        ok, why = False, f"{why}; too slow"
    status = "PASS" if ok else "FAIL"
    return ok, f"criterion {number:>2}: {status}  {title} [{elapsed:.2f} s / limit {limit:g} s] {why}"


def _warm():
    catalog.entries()
    suites.random_corpus()


@pytest.fixture(scope="module", autouse=True)
def warm_catalog():
    _warm()


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA])
def test_criterion(number, capsys):
    ok, line = evaluate(number)
    with capsys.disabled():
        print(f"\n{line}")
    assert ok, line


if __name__ == "__main__":
    _warm()
    results = [evaluate(n) for n, *_ in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
