"""
The bundled corpus: algebra files with machine-checkable expectations.

Every expectation carries a provenance tag: `published` for values read off a
published example or figure, `trivial` for values that follow from the
definitions, `derived` for values of the committed completions of partially
specified examples.
"""

import logging
import os
from itertools import combinations
from typing import Callable, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from noloopwb.algebra.basis import AlgebraBasis, build_algebra
from noloopwb.algebra.presentation import Presentation
from noloopwb.certifier.filtration import chain_from_generators, enumerate_alpha_chains, verify_alpha_filtration
from noloopwb.certifier.graph import certify_no_loop
from noloopwb.cleaving.diagram import build_functor
from noloopwb.cleaving.functor import representation_infinite_witness, verify_cleaving
from noloopwb.cli.fileformat import parse_algebra_file, parse_chain_file, parse_diagram_file
from noloopwb.config import WorkbenchConfig
from noloopwb.exceptions import WorkbenchError
from noloopwb.homology.modules import intersect, loop_count, projective, simple, submodule_generated, whole
from noloopwb.homology.resolution import projective_dimension
from noloopwb.raycat.category import build_ray_category
from noloopwb.structure.loops import arrows_from
from noloopwb.structure.pennyfarthing import detect_penny_farthings, well_formed

logger = logging.getLogger(__name__)

CORPUS_DEPTH = 20
CORPUS_BUDGET = 5000

Provenance = Literal["published", "trivial", "derived"]


class Expectation(BaseModel):
    check: str = Field(description="Name of a check in CHECKS")
    expected: str
    provenance: Provenance


class CorpusEntry(BaseModel):
    name: str
    file: str = Field(description="File name inside the corpus directory")
    vertex: str = Field(description="The vertex x the checks look at")
    description: str = ""
    chain: Optional[str] = Field(default=None, description="Chain file read by the chain-verdict check")
    diagram: Optional[str] = Field(default=None, description="Diagram file read by the cleave check")
    expectations: List[Expectation] = Field(default_factory=list)

    def path(self, corpus_dir: Optional[str] = None) -> str:
        return os.path.join(corpus_dir or WorkbenchConfig.CORPUS_DIR, self.file)

    def presentation(self, corpus_dir: Optional[str] = None) -> Presentation:
        with open(self.path(corpus_dir), encoding="utf-8") as f:
            return parse_algebra_file(f.read())

    def algebra(self, corpus_dir: Optional[str] = None) -> AlgebraBasis:
        return build_algebra(self.presentation(corpus_dir))


class CheckResult(BaseModel):
    entry: str
    check: str
    expected: str
    actual: str
    provenance: Provenance

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


Check = Callable[[AlgebraBasis, CorpusEntry, Optional[str]], str]


def _read_companion(entry: CorpusEntry, name: Optional[str], corpus_dir: Optional[str]) -> str:
    if name is None:
        raise ValueError(f"corpus entry {entry.name!r} names no companion file for this check")
    with open(os.path.join(corpus_dir or WorkbenchConfig.CORPUS_DIR, name), encoding="utf-8") as f:
        return f.read()


def _projective_dims(a: AlgebraBasis, entry: CorpusEntry, corpus_dir: Optional[str]) -> str:
    return ",".join(f"{v}={projective(a, v).dim}" for v in a.vertices)


def _loop_count(a: AlgebraBasis, entry: CorpusEntry, corpus_dir: Optional[str]) -> str:
    return str(loop_count(a, entry.vertex))


def _pd_simple(a: AlgebraBasis, entry: CorpusEntry, corpus_dir: Optional[str]) -> str:
    report = projective_dimension(simple(a, entry.vertex), CORPUS_DEPTH)
    return f"Finite({report.value})" if report.is_finite else f"Exceeds({report.value})"


def _penny_farthings(a: AlgebraBasis, entry: CorpusEntry, corpus_dir: Optional[str]) -> str:
    found = well_formed(detect_penny_farthings(a))
    return "; ".join(
        f"{pf.base_vertex} type({pf.relation_type}) f={','.join(map(str, pf.f))}" for pf in found
    ) or "none"


def _zero_intersections(a: AlgebraBasis, entry: CorpusEntry, corpus_dir: Optional[str]) -> str:
    """Pairs among the arrows leaving x and the nonzero loop squares whose submodules meet in 0."""
    x = entry.vertex
    px = projective(a, x)
    labels = [p.label for p in arrows_from(a, x)]
    for loop in a.quiver.loops_at(x):
        square = f"{loop.name}.{loop.name}"
        if not a.element(square).is_zero:
            labels.append(square)
    generated = [submodule_generated(px, [label]) for label in labels]
    pairs = [
        f"{labels[i]}|{labels[j]}"
        for i, j in combinations(range(len(labels)), 2)
        if intersect(generated[i], generated[j]).is_zero()
    ]
    return ", ".join(pairs) or "none"


def _forced_factors(a: AlgebraBasis, entry: CorpusEntry, corpus_dir: Optional[str]) -> str:
    """Vertices whose simple is a factor of some interior term in every α-stable chain of P_x."""
    x = entry.vertex
    loops = a.quiver.loops_at(x)
    if not loops:
        return "no loop"
    chains = enumerate_alpha_chains(a, loops[0].name, whole(projective(a, x)))
    if not chains:
        return "no chain"
    forced = set(a.vertices)
    for chain in chains:
        met = {v for term in chain[1:-1] for v, d in term.dimension_vector().items() if d}
        forced &= met
    return ",".join(v for v in a.vertices if v in forced) or "none"


def _chain_verdict(a: AlgebraBasis, entry: CorpusEntry, corpus_dir: Optional[str]) -> str:
    x = entry.vertex
    terms = parse_chain_file(_read_companion(entry, entry.chain, corpus_dir))
    chain = chain_from_generators(a, x, terms)
    try:
        cert = verify_alpha_filtration(a, x, a.quiver.loops_at(x)[0].name, chain, CORPUS_DEPTH)
    except WorkbenchError as e:
        return f"rejected: {type(e).__name__}"
    return cert.describe()


def _cleave(a: AlgebraBasis, entry: CorpusEntry, corpus_dir: Optional[str]) -> str:
    parsed = parse_diagram_file(_read_companion(entry, entry.diagram, corpus_dir))
    rc = build_ray_category(a)
    functor = build_functor(parsed.diagram, rc, parsed.images)
    report = verify_cleaving(rc, parsed.diagram, functor)
    if not report.ok:
        return f"not cleaving: condition {report.condition}"
    witness = representation_infinite_witness(rc, parsed.diagram, functor)
    return "cleaving; representation-infinite" if witness.emitted else "cleaving"


def _certify_status(a: AlgebraBasis, entry: CorpusEntry, corpus_dir: Optional[str]) -> str:
    return certify_no_loop(a, entry.vertex, CORPUS_DEPTH, CORPUS_BUDGET).status


CHECKS: Dict[str, Check] = {
    "projective-dims": _projective_dims,
    "loop-count": _loop_count,
    "pd-simple": _pd_simple,
    "penny-farthings": _penny_farthings,
    "zero-intersections": _zero_intersections,
    "forced-factors": _forced_factors,
    "chain-verdict": _chain_verdict,
    "cleave": _cleave,
    "certify-status": _certify_status,
}


def _expect(check: str, expected: str, provenance: Provenance) -> Expectation:
    return Expectation(check=check, expected=expected, provenance=provenance)


ALL_ENTRIES: List[CorpusEntry] = [
    CorpusEntry(
        name="a2",
        file="a2.alg",
        vertex="x",
        description="hereditary A2",
        expectations=[
            _expect("projective-dims", "x=2,y=1", "trivial"),
            _expect("pd-simple", "Finite(1)", "trivial"),
            _expect("loop-count", "0", "trivial"),
            _expect("certify-status", "pass", "trivial"),
        ],
    ),
    CorpusEntry(
        name="example1",
        file="example1.alg",
        chain="example1.chn",
        diagram="example1.dgm",
        vertex="x",
        description="loop at x with a three-arrow neighbourhood",
        expectations=[
            _expect("projective-dims", "x=7,y1=3,y2=4,z=4", "derived"),
            _expect("zero-intersections", "beta1|gamma1, gamma1|alpha.alpha", "published"),
            _expect("chain-verdict", f"Inconclusive({CORPUS_DEPTH})", "derived"),
            _expect("cleave", "not cleaving: condition b", "derived"),
            _expect("certify-status", "pass", "published"),
            _expect("loop-count", "1", "trivial"),
        ],
    ),
    CorpusEntry(
        name="example2-ambient",
        file="example2-ambient.alg",
        vertex="x",
        description="the submodule generated by gamma admits a single α-stable chain",
        expectations=[
            _expect("projective-dims", "x=6,y=4,z=6,zp=4,w=7", "derived"),
            _expect("zero-intersections", "beta1|gamma, gamma|alpha.alpha", "derived"),
            _expect("forced-factors", "x,z", "derived"),
            _expect("loop-count", "1", "trivial"),
        ],
    ),
    CorpusEntry(
        name="kronecker",
        file="kronecker.alg",
        vertex="x",
        expectations=[
            _expect("projective-dims", "x=3,y=1", "trivial"),
            _expect("pd-simple", "Finite(1)", "trivial"),
        ],
    ),
    CorpusEntry(
        name="l34-witness",
        file="l34-witness.alg",
        diagram="l34.dgm",
        vertex="x",
        description="carries a cleaving square of type A~3",
        expectations=[
            _expect("loop-count", "1", "trivial"),
            _expect("cleave", "cleaving; representation-infinite", "derived"),
        ],
    ),
    CorpusEntry(
        name="loopnil2",
        file="loopnil2.alg",
        vertex="x",
        expectations=[
            _expect("projective-dims", "x=2", "trivial"),
            _expect("pd-simple", f"Exceeds({CORPUS_DEPTH})", "trivial"),
            _expect("penny-farthings", "none", "trivial"),
            _expect("certify-status", "pass", "trivial"),
        ],
    ),
    CorpusEntry(
        name="loopnil3",
        file="loopnil3.alg",
        vertex="x",
        expectations=[
            _expect("projective-dims", "x=3", "trivial"),
            _expect("pd-simple", f"Exceeds({CORPUS_DEPTH})", "trivial"),
        ],
    ),
    CorpusEntry(
        name="pf-case-1",
        file="pf-case-1.alg",
        chain="pf-powers.chn",
        vertex="x",
        expectations=[
            _expect("projective-dims", "x=7,y=4,z=1", "derived"),
            _expect("chain-verdict", f"Inconclusive({CORPUS_DEPTH})", "derived"),
            _expect("penny-farthings", "x type(1) f=1", "published"),
            _expect("certify-status", "pass", "published"),
        ],
    ),
    CorpusEntry(
        name="pf-case-2",
        file="pf-case-2.alg",
        vertex="x",
        expectations=[
            _expect("penny-farthings", "x type(1) f=1", "published"),
            _expect("certify-status", "pass", "published"),
        ],
    ),
    CorpusEntry(
        name="pf-case-3",
        file="pf-case-3.alg",
        vertex="x",
        expectations=[
            _expect("penny-farthings", "x type(1) f=1,2", "published"),
            _expect("certify-status", "pass", "published"),
        ],
    ),
    CorpusEntry(
        name="pf2",
        file="pf2.alg",
        vertex="z1",
        expectations=[
            _expect("penny-farthings", "z1 type(1) f=1", "published"),
        ],
    ),
    CorpusEntry(
        name="pf2-type2",
        file="pf2-type2.alg",
        vertex="z1",
        expectations=[
            _expect("penny-farthings", "z1 type(2) f=2", "published"),
        ],
    ),
]


def get_entry(name: str) -> CorpusEntry:
    for entry in ALL_ENTRIES:
        if entry.name == name:
            return entry
    raise KeyError(f"no corpus entry named {name!r}")


def run_entry(entry: CorpusEntry, corpus_dir: Optional[str] = None) -> List[CheckResult]:
    a = entry.algebra(corpus_dir)
    results = []
    for e in entry.expectations:
        actual = CHECKS[e.check](a, entry, corpus_dir)
        result = CheckResult(
            entry=entry.name, check=e.check, expected=e.expected, actual=actual, provenance=e.provenance
        )
        if not result.ok:
            logger.warning("%s %s: expected %s, got %s", entry.name, e.check, e.expected, actual)
        results.append(result)
    return results


def run_corpus(entries: Optional[List[CorpusEntry]] = None, corpus_dir: Optional[str] = None) -> List[CheckResult]:
    """Run every expectation, entries in name order."""
    results: List[CheckResult] = []
    for entry in sorted(entries or ALL_ENTRIES, key=lambda e: e.name):
        results.extend(run_entry(entry, corpus_dir))
    return results
