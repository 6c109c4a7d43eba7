"""
Exact construction of Λ = kQ/I as a based algebra.

The spanning set is every path of length <= N that contains no monomial
relation. The ideal subspace is spanned by u·g·v for the binomial relations g
(terms longer than N dropped). Columns are ordered largest path first, so the
pivots of the reduced row echelon form are the paths that get rewritten and
the remaining paths form the basis.
"""

import logging
from collections import defaultdict
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator

from noloopwb.algebra import linalg
from noloopwb.algebra.fields import FieldSpec
from noloopwb.algebra.presentation import Presentation
from noloopwb.algebra.quiver import Path, Quiver
from noloopwb.config import WorkbenchConfig
from noloopwb.exceptions import NotAdmissible, UnknownVertex

logger = logging.getLogger(__name__)

Terms = Dict[Path, Any]


class Element(BaseModel):
    """Finite combination of basis paths with nonzero coefficients."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    terms: Terms = Field(default_factory=dict)

    @field_validator("terms")
    @classmethod
    def _drop_zeros(cls, terms: Terms) -> Terms:
        return {p: c for p, c in terms.items() if c}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def support(self) -> List[Path]:
        return list(self.terms)

    def single(self) -> Optional[Tuple[Path, Any]]:
        """(path, coefficient) when the element is a multiple of one basis path."""
        if len(self.terms) != 1:
            return None
        return next(iter(self.terms.items()))

    def __add__(self, other: "Element") -> "Element":
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms[p] + c if p in terms else c
        return Element(terms=terms)

    def __neg__(self) -> "Element":
        return Element(terms={p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scaled(self, c) -> "Element":
        return Element(terms={p: x * c for p, x in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms


RawCombination = Union[Element, Path, Dict[Path, Any], Iterable[Tuple[Any, Path]]]


class AlgebraBasis(BaseModel):
    """The computed algebra: basis paths, normal forms and structure constants."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str = ""
    field: FieldSpec
    quiver: Quiver = Field(description="Quiver whose paths represent elements")
    vertices: Tuple[str, ...] = Field(description="Objects of the algebra (all of Q, or the vertices of e)")
    bound: int
    paths: Tuple[Path, ...] = Field(description="Basis paths in path order")
    normal_forms: Dict[Path, Terms] = Field(
        description="Normal form of every path of length < N without a monomial subpath"
    )
    products: Dict[Tuple[Path, Path], Terms] = Field(
        description="Normal form of p·q for composable basis paths p, q"
    )
    presentation: Optional[Presentation] = None

    _index: Dict[Path, int] = PrivateAttr(default_factory=dict)
    _pairs: Dict[Tuple[str, str], Tuple[Path, ...]] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        self._index = {p: i for i, p in enumerate(self.paths)}
        pairs = defaultdict(list)
        for p in self.paths:
            pairs[(p.source, p.target)].append(p)
        self._pairs = {k: tuple(v) for k, v in pairs.items()}

    # ----- shape -----

    @property
    def dimension(self) -> int:
        return len(self.paths)

    @property
    def K(self):
        return self.field.domain

    def check_vertex(self, v: str) -> str:
        if v not in self.vertices:
            raise UnknownVertex(f"unknown vertex {v!r}")
        return v

    def hom_space(self, x: str, y: str) -> Tuple[Path, ...]:
        """Ordered basis of e_x Λ e_y."""
        self.check_vertex(x)
        self.check_vertex(y)
        return self._pairs.get((x, y), ())

    def index(self, p: Path) -> int:
        return self._index[p]

    def is_basis_path(self, p: Path) -> bool:
        return p in self._index

    # ----- elements -----

    def element(self, path: Union[Path, str]) -> Element:
        """Normal form of a single path (given as Path or text like 'alpha.beta1')."""
        if isinstance(path, str):
            path = self.quiver.parse_path(path)
        return self.normal_form(path)

    def idempotent(self, x: str) -> Element:
        return Element(terms={self.quiver.trivial(self.check_vertex(x)): self.field.one})

    def one(self) -> Element:
        return Element(terms={self.quiver.trivial(v): self.field.one for v in self.vertices})

    def _path_terms(self, p: Path) -> Terms:
        if p.source not in self.vertices or p.target not in self.vertices:
            raise UnknownVertex(f"path {p.label} leaves the vertices of {self.name or 'the algebra'}")
        if p.length >= self.bound:
            return {}
        # Anything missing from the table contains a monomial relation.
        return self.normal_forms.get(p, {})

    def normal_form(self, combination: RawCombination) -> Element:
        """Rewrite a scalar-path combination onto basis paths."""
        if isinstance(combination, Element):
            items = [(c, p) for p, c in combination.terms.items()]
        elif isinstance(combination, Path):
            items = [(self.field.one, combination)]
        elif isinstance(combination, dict):
            items = [(c, p) for p, c in combination.items()]
        else:
            items = list(combination)
        result: Terms = {}
        for c, p in items:
            for q, d in self._path_terms(p).items():
                linalg.add_scaled(result, {q: d}, c)
        return Element(terms=result)

    def multiply(self, u: Element, v: Element) -> Element:
        result: Terms = {}
        for p, c in u.terms.items():
            for q, d in v.terms.items():
                if p.target != q.source:
                    continue
                for r, e in self.products[(p, q)].items():
                    linalg.add_scaled(result, {r: e}, c * d)
        return Element(terms=result)

    def product(self, *factors: Union[Element, Path, str]) -> Element:
        """Left-to-right product of elements, paths or path texts."""
        result = None
        for f in factors:
            if not isinstance(f, Element):
                f = self.element(f)
            result = f if result is None else self.multiply(result, f)
        return result if result is not None else self.one()

    # ----- coordinates -----

    def vector(self, e: Element) -> linalg.Vector:
        return {self._index[p]: c for p, c in e.terms.items()}

    def from_vector(self, v: linalg.Vector) -> Element:
        return Element(terms={self.paths[i]: c for i, c in v.items()})

    def radical_power_basis(self, k: int) -> List[Element]:
        """Echelon basis of J^k, spanned by k-fold products of radical basis paths."""
        if k < 0:
            raise ValueError("k must be non-negative")
        if k == 0:
            return [Element(terms={p: self.field.one}) for p in self.paths]
        radical = [Element(terms={p: self.field.one}) for p in self.paths if not p.is_trivial]
        layer = radical
        for _ in range(k - 1):
            products = [self.multiply(b, r) for b in layer for r in radical]
            rows, _ = linalg.rref((self.vector(e) for e in products), self.dimension, self.K)
            layer = [self.from_vector(r) for r in rows]
            if not layer:
                break
        rows, _ = linalg.rref((self.vector(e) for e in layer), self.dimension, self.K)
        return [self.from_vector(r) for r in rows]

    def in_span(self, e: Element, span: Sequence[Element]) -> bool:
        rows, pivots = linalg.rref((self.vector(s) for s in span), self.dimension, self.K)
        return not linalg.reduce_vector(self.vector(e), rows, pivots)

    def format(self, e: Element) -> str:
        if e.is_zero:
            return "0"
        parts = []
        for p in sorted(e.terms, key=self.quiver.path_key):
            c = self.field.format(e.terms[p])
            parts.append(p.label if c == "1" else f"({c}) {p.label}")
        return " + ".join(parts)


def _contains_monomial_suffix(arrows: Tuple[str, ...], monomials: Dict[int, set]) -> bool:
    for length, words in monomials.items():
        if len(arrows) >= length and arrows[-length:] in words:
            return True
    return False


def _surviving_paths(p: Presentation) -> List[Path]:
    """Paths of length <= N with no monomial subpath, pruned as they grow."""
    q = p.quiver
    monomials: Dict[int, set] = defaultdict(set)
    for m in p.monomials:
        monomials[m.path.length].add(m.path.arrows)

    survivors: List[Path] = []
    layer = [q.trivial(v) for v in q.vertices]
    while layer:
        survivors.extend(layer)
        if len(survivors) > WorkbenchConfig.MAX_PATHS:
            raise NotAdmissible(
                f"more than {WorkbenchConfig.MAX_PATHS} paths below the bound; "
                "the relations do not look admissible for this N"
            )
        if layer[0].length >= p.bound:
            break
        nxt = []
        for path in layer:
            for a in q.arrows_from(path.target):
                arrows = path.arrows + (a.name,)
                if not _contains_monomial_suffix(arrows, monomials):
                    nxt.append(Path(source=path.source, target=a.target, arrows=arrows))
        layer = nxt
    return survivors


def build_algebra(p: Presentation) -> AlgebraBasis:
    """Compute basis, normal forms and structure constants of kQ/I."""
    q = p.quiver
    K = p.field.domain
    N = p.bound

    for r in p.relations:
        if r.min_length < 2:
            raise NotAdmissible(f"relation '{r.describe(p.field)}' has a path of length < 2")

    survivors = _surviving_paths(p)
    ordered = sorted(survivors, key=q.path_key, reverse=True)
    column = {path: i for i, path in enumerate(ordered)}

    by_target = defaultdict(list)
    by_source = defaultdict(list)
    for path in survivors:
        by_target[path.target].append(path)
        by_source[path.source].append(path)

    generators = []
    for g in p.binomials:
        room = N - g.min_length
        for u in by_target[g.left.source]:
            if u.length > room:
                continue
            for v in by_source[g.left.target]:
                if u.length + v.length > room:
                    continue
                row: linalg.Vector = {}
                for term, c in ((g.left, K.one), (g.right, -g.coefficient)):
                    full = Path(source=u.source, target=v.target, arrows=u.arrows + term.arrows + v.arrows)
                    i = column.get(full)
                    if i is not None:
                        linalg.add_scaled(row, {i: c}, K.one)
                if row:
                    generators.append(row)

    rows, pivots = linalg.rref(generators, len(ordered), K)
    logger.debug(
        "%s: %d paths, %d ideal generators, ideal rank %d",
        p.name or "algebra", len(ordered), len(generators), len(pivots),
    )

    pivot_rows = {ordered[pc]: row for pc, row in zip(pivots, rows)}
    # Rows are reduced, so a length-N path lies in the ideal iff its row is the unit vector.
    for path in survivors:
        if path.length != N:
            continue
        row = pivot_rows.get(path)
        if row is None or row.keys() != {column[path]}:
            raise NotAdmissible(f"path {path.label} of length N={N} is not in the ideal")

    normal_forms: Dict[Path, Terms] = {}
    for path in survivors:
        if path.length >= N:
            continue
        row = pivot_rows.get(path)
        if row is None:
            normal_forms[path] = {path: K.one}
        else:
            normal_forms[path] = {ordered[i]: -c for i, c in row.items() if ordered[i] != path}

    basis = sorted((path for path in normal_forms if path not in pivot_rows), key=q.path_key)
    products: Dict[Tuple[Path, Path], Terms] = {}
    for a in basis:
        for b in basis:
            if a.target != b.source:
                continue
            ab = Path(source=a.source, target=b.target, arrows=a.arrows + b.arrows)
            products[(a, b)] = {} if ab.length >= N else normal_forms.get(ab, {})

    logger.info("%s: dim %d over %s", p.name or "algebra", len(basis), p.field.describe())
    return AlgebraBasis(
        name=p.name,
        field=p.field,
        quiver=q,
        vertices=q.vertices,
        bound=N,
        paths=tuple(basis),
        normal_forms=normal_forms,
        products=products,
        presentation=p,
    )
