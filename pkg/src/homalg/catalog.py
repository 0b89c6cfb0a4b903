"""Shipped example algebras, seeded generators and a counterexample search.

Every catalog file records *claims* (checker name, expected verdict and,
for failures, the witness the checker reports).  :func:`get` re-runs all
claims and recorded morphisms on load, so a corrupted or stale file is a
hard error rather than a silent wrong answer.

The files under ``data/`` are produced by :func:`mint`; each definition
states the verdicts it is meant to exhibit, minting refuses to write an
entry whose scans disagree, and the remaining claims are whatever the
scans report at minting time.
"""
from __future__ import annotations

import functools
import itertools
import random
from collections.abc import Callable, Iterable, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from homalg import constructions as C
from homalg import core, io
from homalg import identities as ids
from homalg.core import (
    CheckReport,
    Element,
    HomAlgebra,
    HomBolAlgebra,
    LinearMap,
    TernaryHomAlgebra,
    Verdict,
    Witness,
)
from homalg.tensor import QTensor, format_rational, parse_rational

DATA_DIR = Path(__file__).parent / "data"


class UnknownEntry(KeyError):
    pass


class CatalogError(RuntimeError):
    """A catalog file whose claims do not re-verify."""


# ---------------------------------------------------------------------------
# entries


@dataclass(frozen=True)
class Claim:
    identity: str
    expect: Verdict
    form: str | None = None
    witness: Witness | None = None

    @classmethod
    def from_report(cls, report: CheckReport) -> Claim:
        return cls(report.identity, report.verdict, report.form, report.witness)

    def to_dict(self) -> dict:
        out: dict = {"identity": self.identity, "expect": self.expect.value}
        if self.form is not None:
            out["form"] = self.form
        if self.witness is not None:
            out["witness"] = {
                "at": list(self.witness.indices),
                "residual": [format_rational(c) for c in self.witness.residual],
            }
        return out

    @classmethod
    def from_dict(cls, d: Mapping) -> Claim:
        w = d.get("witness")
        witness = None
        if w is not None:
            witness = Witness(tuple(w["at"]), Element(tuple(parse_rational(c) for c in w["residual"])))
        return cls(d["identity"], Verdict(d["expect"]), d.get("form"), witness)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    payload: HomAlgebra | TernaryHomAlgebra | HomBolAlgebra
    morphisms: tuple[tuple[str, LinearMap], ...] = ()
    claims: tuple[Claim, ...] = ()
    provenance: Mapping = field(default_factory=dict)

    @property
    def kind(self) -> str:
        return io.kind_of(self.payload)

    def morphism(self, name: str) -> LinearMap:
        for n, m in self.morphisms:
            if n == name:
                return m
        raise KeyError(f"{self.name} has no morphism {name!r}")

    def claim(self, identity: str, form: str | None = None) -> Claim:
        for c in self.claims:
            if c.identity == identity and (form is None or c.form == form):
                return c
        raise KeyError(f"{self.name} has no claim about {identity!r}")

    def expects(self, identity: str, verdict: Verdict = Verdict.HOLDS) -> bool:
        try:
            return self.claim(identity).expect is verdict
        except KeyError:
            return False


def run_claim(claim: Claim, payload) -> CheckReport:
    return ids.check(claim.identity, payload, claim.form)


def verify(entry: CatalogEntry) -> list[str]:
    """Mismatches between the entry's claims/morphisms and fresh scans (empty if all re-verify)."""
    problems = []
    for claim in entry.claims:
        report = run_claim(claim, entry.payload)
        label = claim.identity + (f"[{claim.form}]" if claim.form else "")
        if report.verdict is not claim.expect:
            problems.append(f"{label}: expected {claim.expect.value}, scan says {report.verdict.value}")
        elif claim.witness is not None and report.witness != claim.witness:
            problems.append(f"{label}: stored witness differs from the scan's first witness")
    for name, m in entry.morphisms:
        if not isinstance(entry.payload, HomAlgebra) or not core.is_morphism(entry.payload, m).holds:
            problems.append(f"morphism {name!r} is not a morphism of the product")
    return problems


def to_text(entry: CatalogEntry) -> str:
    meta: dict = {"provenance": dict(entry.provenance), "claims": [c.to_dict() for c in entry.claims]}
    if entry.morphisms:
        meta["morphisms"] = [
            {"name": n, "matrix": [[format_rational(v) for v in row] for row in m.rows()]} for n, m in entry.morphisms
        ]
    return io.dumps(entry.payload, entry.name, meta)


def from_document(doc: io.AlgebraDocument) -> CatalogEntry:
    meta = doc.meta
    morphisms = tuple(
        (m["name"], LinearMap.from_rows([[parse_rational(v) for v in row] for row in m["matrix"]]))
        for m in meta.get("morphisms", [])
    )
    claims = tuple(Claim.from_dict(c) for c in meta.get("claims", []))
    return CatalogEntry(doc.name or "", doc.value, morphisms, claims, dict(meta.get("provenance", {})))


def names() -> list[str]:
    return sorted(p.stem for p in DATA_DIR.glob("*" + io.SUFFIX))


def path(name: str) -> Path:
    p = DATA_DIR / f"{name}{io.SUFFIX}"
    if not p.is_file():
        raise UnknownEntry(name)
    return p


@functools.cache
def get(name: str) -> CatalogEntry:
    """Load a shipped entry and re-verify every claim and morphism."""
    entry = from_document(io.load_document(path(name)))
    problems = verify(entry)
    if problems:
        raise CatalogError(f"catalog entry {name!r} does not re-verify: " + "; ".join(problems))
    return entry


def entries() -> list[CatalogEntry]:
    return [get(n) for n in names()]


# ---------------------------------------------------------------------------
# generators

_NUMERATORS = (-2, -1, 1, 2)
_DENOMINATORS = (1, 2)


def _coefficient(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(_NUMERATORS), rng.choice(_DENOMINATORS))


def random_anticommutative(dim: int, seed, density: float = 0.5) -> HomAlgebra:
    """Skew product with entries in {+-1, +-2} / {1, 2}, twist = identity."""
    if dim < 1:
        raise ValueError("dim must be positive")
    rng = random.Random(seed)
    entries = {}
    for i, j in itertools.combinations(range(dim), 2):
        for k in range(dim):
            if rng.random() < density:
                v = _coefficient(rng)
                entries[(i, j, k)] = v
                entries[(j, i, k)] = -v
    return HomAlgebra(QTensor.from_entries((dim,) * 3, entries))


def random_with_diagonal_twist(dim: int, seed, weights: Sequence, anticommutative: bool = False,
                               density: float = 0.5) -> HomAlgebra:
    """Twist diag(weights); c[i][j][k] may be nonzero only when w_i w_j = w_k, so the twist is multiplicative."""
    w = [Fraction(parse_rational(x) if isinstance(x, str) else x) for x in weights]
    if len(w) != dim:
        raise ValueError(f"{len(w)} weights for dimension {dim}")
    if any(x == 0 for x in w):
        raise ValueError("weights must be nonzero")
    rng = random.Random(seed)
    entries = {}
    pairs = itertools.combinations(range(dim), 2) if anticommutative else itertools.product(range(dim), repeat=2)
    for i, j in pairs:
        for k in range(dim):
            if w[i] * w[j] != w[k] or rng.random() >= density:
                continue
            v = _coefficient(rng)
            entries[(i, j, k)] = v
            if anticommutative:
                entries[(j, i, k)] = -v
    return HomAlgebra(QTensor.from_entries((dim,) * 3, entries), LinearMap.diag(w))


def random_ternary(dim: int, seed, density: float = 0.5) -> TernaryHomAlgebra:
    rng = random.Random(seed)
    entries = {}
    for idx in itertools.product(range(dim), repeat=4):
        if rng.random() < density:
            entries[idx] = _coefficient(rng)
    return TernaryHomAlgebra(QTensor.from_entries((dim,) * 4, entries))


# ---------------------------------------------------------------------------
# search

_DENSITIES = (0.3, 0.5, 0.7)


def _weights(rng: random.Random, dim: int, choices: Sequence[int]) -> list[int]:
    while True:
        w = [rng.choice(choices) for _ in range(dim)]
        if any(x != 1 for x in w):
            return w


def _gen_anticommutative(dim, rng):
    return random_anticommutative(dim, rng.getrandbits(64), rng.choice(_DENSITIES))


def _gen_diagonal(dim, rng):
    w = _weights(rng, dim, (1, 2))
    return random_with_diagonal_twist(dim, rng.getrandbits(64), w, density=rng.choice(_DENSITIES))


def _gen_graded(dim, rng):
    w = _weights(rng, dim, (1, 2, 3, 6))
    return random_with_diagonal_twist(dim, rng.getrandbits(64), w, anticommutative=True, density=rng.choice(_DENSITIES))


def _gen_ternary(dim, rng):
    return random_ternary(dim, rng.getrandbits(64), rng.choice(_DENSITIES))


GENERATORS: dict[str, Callable] = {
    "anticommutative": _gen_anticommutative,
    "diagonal": _gen_diagonal,
    "graded-anticommutative": _gen_graded,
    "ternary": _gen_ternary,
}

_NEEDS_SKEW = {"anticommutative", "hom-lie", "hom-malcev", "loos-compatibility"}


def pick_generator(predicates) -> str:
    """Generator suited to the predicates: ternary, twisted anticommutative, or diagonal-twist general."""
    names_ = {p[0] for p in predicates}
    if any(ids.CHECKERS[n][0] == "ternary" for n in names_):
        return "ternary"
    if names_ == {"anticommutative"}:
        return "anticommutative"
    if names_ & _NEEDS_SKEW:
        return "graded-anticommutative"
    return "diagonal"


def _normalize_predicates(predicates) -> list[tuple[str, Verdict, str | None]]:
    out = []
    for p in predicates:
        name, verdict, form = (tuple(p) + (None,))[:3]
        if name not in ids.CHECKERS:
            raise ids.UnknownIdentity(name)
        out.append((name, Verdict(verdict) if not isinstance(verdict, Verdict) else verdict, form))
    return out


def attempt_rng(seed, attempt: int) -> random.Random:
    return random.Random(f"{seed}/{attempt}")


def candidate(seed, attempt: int, dims: Sequence[int], generator: str):
    """The algebra generated at one attempt; depends only on (seed, attempt, dims, generator)."""
    rng = attempt_rng(seed, attempt)
    return GENERATORS[generator](rng.choice(list(dims)), rng)


def _try(seed, attempt, dims, generator, preds) -> tuple[object, list[CheckReport]] | None:
    A = candidate(seed, attempt, dims, generator)
    reports = []
    for name, verdict, form in preds:
        r = ids.check(name, A, form)
        if r.verdict is not verdict:
            return None
        reports.append(r)
    return A, reports


def search(predicates, dims: Iterable[int], budget: int, seed=0, generator: str = "auto",
           start: int = 0, workers: int = 1) -> CatalogEntry | None:
    """First generated algebra (smallest attempt index) meeting every (checker, verdict[, form]) predicate."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    preds = _normalize_predicates(predicates)
    dims = list(dims)
    gen = pick_generator(preds) if generator == "auto" else generator
    if gen not in GENERATORS:
        raise ValueError(f"unknown generator {gen!r}; have {sorted(GENERATORS)}")
    attempts = range(start, start + budget)
    if workers <= 1:
        hits = ((a, _try(seed, a, dims, gen, preds)) for a in attempts)
        found = next(((a, h) for a, h in hits if h is not None), None)
    else:
        found = None
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for lo in range(attempts.start, attempts.stop, workers):
                batch = list(range(lo, min(lo + workers, attempts.stop)))
                results = list(pool.map(lambda a: _try(seed, a, dims, gen, preds), batch))
                found = next(((a, h) for a, h in zip(batch, results) if h is not None), None)
                if found is not None:
                    break
    if found is None:
        return None
    attempt, (A, reports) = found
    prov = {"source": "search", "seed": seed, "attempt": attempt, "generator": gen, "dims": dims}
    name = f"search-{seed}-{attempt}"
    return CatalogEntry(name, _named(A, name), (), tuple(Claim.from_report(r) for r in reports), prov)


def _named(value, name: str):
    prov = {"name": name}
    if isinstance(value, HomAlgebra):
        return HomAlgebra(value.product, value.twist, value.basis, prov)
    if isinstance(value, TernaryHomAlgebra):
        return TernaryHomAlgebra(value.product, value.twists, value.basis, prov)
    return HomBolAlgebra(value.bracket, value.triple, value.twist, value.basis, prov)


# ---------------------------------------------------------------------------
# minting the shipped entries

BINARY_CLAIMS = (
    "anticommutative", "commutative", "multiplicative", "hom-associative", "hom-lie", "hom-malcev",
    "right-alternative", "left-alternative", "hom-jordan",
)
TERNARY_CLAIMS = ("ternary-multiplicative", "hom-triple", "ternary-hom-nambu", "hom-lts")
BOL_CLAIMS = ("hom-bol",)


def standard_claims(payload) -> tuple[Claim, ...]:
    kind = io.kind_of(payload)
    names_ = {"binary": BINARY_CLAIMS, "ternary": TERNARY_CLAIMS, "bol": BOL_CLAIMS}[kind]
    return tuple(Claim.from_report(ids.check(n, payload)) for n in names_)


def _skew_table(table: Mapping) -> dict:
    full = {}
    for (a, b), out in table.items():
        full[(a, b)] = dict(out)
        full[(b, a)] = {k: -Fraction(v) for k, v in out.items()}
    return full


def _sl2() -> HomAlgebra:
    return HomAlgebra.from_table(
        ("h", "e", "f"), _skew_table({("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}})
    )


def _m4() -> HomAlgebra:
    # the 4-dimensional non-Lie Malcev algebra in its usual table
    return HomAlgebra.from_table(
        ("e1", "e2", "e3", "e4"),
        _skew_table({("e1", "e2"): {"e2": -1}, ("e1", "e3"): {"e3": -1}, ("e1", "e4"): {"e4": 1},
                     ("e2", "e3"): {"e4": 2}}),
    )


SL2_TORUS = LinearMap.diag([1, 2, Fraction(1, 2)])
# e1 fixed, g = [[2, 0], [1, 1]] on span(e2, e3), e4 scaled by det g
M4_SHEAR = LinearMap.from_rows([[1, 0, 0, 0], [0, 2, 0, 0], [0, 1, 1, 0], [0, 0, 0, 2]])
M4_TORUS = LinearMap.diag([1, 2, 3, 6])


def _assoc2() -> HomAlgebra:
    return HomAlgebra.from_table(("u", "v"), {("u", "u"): {"u": 1}, ("u", "v"): {"v": 1}, ("v", "u"): {"v": 1}})


def _octonions() -> HomAlgebra:
    basis = ("1",) + tuple(f"i{k}" for k in range(1, 8))
    table = {}
    for b in basis:
        table[("1", b)] = {b: 1}
        if b != "1":
            table[(b, "1")] = {b: 1}
            table[(b, b)] = {"1": -1}
    for k in range(7):
        a, b, c = (f"i{(k + s) % 7 + 1}" for s in (0, 1, 3))
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            table[(x, y)] = {z: 1}
            table[(y, x)] = {z: -1}
    return HomAlgebra.from_table(basis, table)


def _zorn() -> HomAlgebra:
    """Split octonions as Zorn vector matrices [[a, u], [v, b]]."""
    basis = ("a", "b", "u1", "u2", "u3", "v1", "v2", "v3")
    table: dict = {}

    def put(x, y, z, c):
        table.setdefault((x, y), {})
        table[(x, y)][z] = table[(x, y)].get(z, 0) + c

    put("a", "a", "a", 1)
    put("b", "b", "b", 1)
    for k in "123":
        put("a", f"u{k}", f"u{k}", 1)  # a u'
        put(f"u{k}", "b", f"u{k}", 1)  # b' u
        put(f"v{k}", "a", f"v{k}", 1)  # a' v
        put("b", f"v{k}", f"v{k}", 1)  # b v'
        put(f"u{k}", f"v{k}", "a", 1)  # u . v'
        put(f"v{k}", f"u{k}", "b", 1)  # v . u'
    for i, j, k in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        put(f"u{i}", f"u{j}", f"v{k}", 1)  # u x u'
        put(f"u{j}", f"u{i}", f"v{k}", -1)
        put(f"v{i}", f"v{j}", f"u{k}", -1)  # - v x v'
        put(f"v{j}", f"v{i}", f"u{k}", 1)
    return HomAlgebra.from_table(basis, table)


# u_i -> t_i u_i, v_i -> v_i / t_i with t1 t2 t3 = 1
ZORN_TORUS = LinearMap.diag([1, 1, 2, -1, Fraction(-1, 2), Fraction(1, 2), -1, -2])


def _mat2() -> HomAlgebra:
    basis = ("E11", "E12", "E21", "E22")
    table = {}
    for a, b in itertools.product("12", repeat=2):
        for c, d in itertools.product("12", repeat=2):
            if b == c:
                table[(f"E{a}{b}", f"E{c}{d}")] = {f"E{a}{d}": 1}
    return HomAlgebra.from_table(basis, table)


# conjugation by diag(2, 1)
MAT2_CONJUGATION = LinearMap.diag([1, 2, Fraction(1, 2), 1])


def _jnc2() -> HomAlgebra:
    return HomAlgebra.from_table(("u", "v"), {("v", "v"): {"u": 1}, ("u", "u"): {"v": 1}})


def _with(value, name: str, provenance: Mapping):
    return _named(value, name), dict(provenance)


def _search_entry(name: str, predicates, dims, budget: int, seed, generator="auto"):
    found = search(predicates, dims, budget, seed, generator)
    if found is None:
        raise CatalogError(f"search for {name!r} exhausted its budget")
    return _named(found.payload, name), dict(found.provenance)


@dataclass(frozen=True)
class Definition:
    build: Callable[[], tuple]
    expect: Mapping[str, str] = field(default_factory=dict)
    morphisms: tuple[tuple[str, LinearMap], ...] = ()


def _definitions() -> dict[str, Definition]:
    sl2, m4 = _sl2(), _m4()
    lit = "standard table"
    return {
        "zero2": Definition(
            lambda: _with(HomAlgebra(QTensor.zeros((2, 2, 2))), "zero2", {"source": "zero algebra"}),
            {"hom-lie": "holds", "hom-associative": "holds"},
        ),
        "assoc2": Definition(
            lambda: _with(_assoc2(), "assoc2", {"source": "K[t]/(t^2), u = 1, v = t"}),
            {"hom-associative": "holds", "commutative": "holds", "anticommutative": "fails"},
        ),
        "sl2": Definition(
            lambda: _with(sl2, "sl2", {"source": lit}),
            {"hom-lie": "holds", "hom-malcev": "holds"},
            (("torus", SL2_TORUS),),
        ),
        "sl2t": Definition(
            lambda: _with(C.yau_twist(sl2, SL2_TORUS), "sl2t", {"source": "yau-twist", "of": "sl2", "morphism": "torus"}),
            {"hom-lie": "holds", "multiplicative": "holds"},
        ),
        "m4": Definition(
            lambda: _with(m4, "m4", {"source": lit}),
            {"hom-malcev": "holds", "hom-lie": "fails"},
            (("shear", M4_SHEAR), ("torus", M4_TORUS)),
        ),
        "m4t": Definition(
            lambda: _with(C.yau_twist(m4, M4_SHEAR), "m4t", {"source": "yau-twist", "of": "m4", "morphism": "shear"}),
            {"hom-malcev": "holds", "hom-lie": "fails", "multiplicative": "holds"},
        ),
        "dm": Definition(
            lambda: _search_entry(
                "dm",
                [("multiplicative", "holds"), ("hom-malcev", "holds"), ("hom-lie", "fails")],
                range(4, 6), 5000, 2024,
            ),
            {"hom-malcev": "holds", "hom-lie": "fails", "multiplicative": "holds"},
        ),
        "oct": Definition(
            lambda: _with(_octonions(), "oct", {"source": "Cayley octonions, i_k i_(k+1) = i_(k+3)"}),
            {"right-alternative": "holds", "left-alternative": "holds", "hom-associative": "fails"},
        ),
        "zorn8t": Definition(
            lambda: _with(
                C.yau_twist(_zorn(), ZORN_TORUS), "zorn8t",
                {"source": "yau-twist", "of": "split octonions (Zorn vector matrices)", "morphism": "torus (2, -1, -1/2)"},
            ),
            {"right-alternative": "holds", "left-alternative": "holds", "multiplicative": "holds",
             "hom-associative": "fails"},
        ),
        "mat2t": Definition(
            lambda: _with(
                C.yau_twist(_mat2(), MAT2_CONJUGATION), "mat2t",
                {"source": "yau-twist", "of": "2x2 matrices", "morphism": "conjugation by diag(2, 1)"},
            ),
            {"hom-associative": "holds", "multiplicative": "holds"},
        ),
        "ra_np": Definition(
            lambda: _search_entry(
                "ra_np",
                [("multiplicative", "holds"), ("right-alternative", "holds"), ("left-alternative", "fails")],
                [3], 20000, 2024,
            ),
            {"right-alternative": "holds", "left-alternative": "fails", "multiplicative": "holds"},
        ),
        "jnc2": Definition(
            lambda: _with(_jnc2(), "jnc2", {"source": "v*v = u, u*u = v"}),
            {"commutative": "holds"},
        ),
        "tern2": Definition(
            lambda: _search_entry("tern2", [("ternary-hom-nambu", "fails")], [2], 100, 2024),
            {"ternary-hom-nambu": "fails"},
        ),
        "lts-sl2": Definition(
            lambda: _with(C.loos_ternary(sl2), "lts-sl2", {"source": "loos-lts", "of": "sl2"}),
            {"hom-lts": "holds"},
        ),
        "bol-m4": Definition(
            lambda: _with(C.bol_from_malcev(m4), "bol-m4", {"source": "bol-malcev", "of": "m4"}),
            {"hom-bol": "holds"},
        ),
    }


def definition_names() -> list[str]:
    return sorted(_definitions())


def mint(name: str) -> CatalogEntry:
    """Build an entry from its definition, recording the verdicts the scans report."""
    try:
        d = _definitions()[name]
    except KeyError:
        raise UnknownEntry(name) from None
    payload, provenance = d.build()
    claims = standard_claims(payload)
    got = {c.identity: c.expect.value for c in claims}
    wrong = {k: (v, got.get(k)) for k, v in d.expect.items() if got.get(k) != v}
    if wrong:
        raise CatalogError(f"{name}: intended verdicts not reproduced (intended, scanned): {wrong}")
    entry = CatalogEntry(name, payload, d.morphisms, claims, provenance)
    problems = verify(entry)
    if problems:
        raise CatalogError(f"{name}: " + "; ".join(problems))
    return entry


def write(directory: Path | str = DATA_DIR, only: Iterable[str] | None = None) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for name in only or definition_names():
        p = directory / f"{name}{io.SUFFIX}"
        p.write_text(to_text(mint(name)), encoding="utf-8")
        out.append(p)
    return out
