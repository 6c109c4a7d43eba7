"""
Finite-dimensional right Λ-modules and submodule arithmetic.

A module carries an explicit basis, each basis vector tagged with the vertex
v such that m = m·e_v, and one action matrix per arrow (images of the basis
vectors under right multiplication). Submodules are stored as reduced row
echelon bases in the ambient coordinates, so equal submodules have equal rows.
"""

import logging
from collections import Counter
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from noloopwb.algebra import linalg
from noloopwb.algebra.basis import AlgebraBasis, Element
from noloopwb.algebra.quiver import Path
from noloopwb.exceptions import AmbientMismatch, ElementNotInModule

logger = logging.getLogger(__name__)

Vector = linalg.Vector


class RightModule(BaseModel):
    """A right module given by tagged basis symbols and per-arrow action matrices."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str = Field(default="", description="Display name, e.g. 'P_x'")
    algebra: AlgebraBasis
    labels: Tuple[str, ...] = Field(description="Basis symbols")
    tags: Tuple[str, ...] = Field(description="Supporting vertex of each basis symbol")
    action: Dict[str, Tuple[Vector, ...]] = Field(
        description="arrow name -> images of the basis vectors under that arrow"
    )
    projective_vertex: Optional[str] = Field(
        default=None, description="x when this module is P_x = e_x Λ with basis paths"
    )
    basis_paths: Tuple[Path, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def K(self):
        return self.algebra.K

    def unit(self, i: int) -> Vector:
        return {i: self.K.one}

    def dimension_vector(self) -> Dict[str, int]:
        counts = Counter(self.tags)
        return {v: counts.get(v, 0) for v in self.algebra.vertices}

    def act(self, v: Vector, arrow: str) -> Vector:
        images = self.action[arrow]
        result: Vector = {}
        for i, c in v.items():
            linalg.add_scaled(result, images[i], c)
        return result

    def project(self, v: Vector, vertex: str) -> Vector:
        """v·e_vertex."""
        return {i: c for i, c in v.items() if self.tags[i] == vertex}

    def act_path(self, v: Vector, path: Path) -> Vector:
        result = self.project(v, path.source)
        for a in path.arrows:
            if not result:
                break
            result = self.act(result, a)
        return result

    def act_element(self, v: Vector, e: Element) -> Vector:
        result: Vector = {}
        for p, c in e.terms.items():
            linalg.add_scaled(result, self.act_path(v, p), c)
        return result

    def homogeneous_parts(self, v: Vector) -> List[Vector]:
        parts = []
        for vertex in self.algebra.vertices:
            part = self.project(v, vertex)
            if part:
                parts.append(part)
        return parts

    # ----- P_x coordinates -----

    def vector_of(self, e: Union[Element, Path, str]) -> Vector:
        """Coordinates of an algebra element lying in P_x = e_x Λ."""
        if self.projective_vertex is None:
            raise ElementNotInModule(f"{self.name or 'module'} is not a projective e_x Λ")
        if not isinstance(e, Element):
            e = self.algebra.element(e)
        index = {p: i for i, p in enumerate(self.basis_paths)}
        v: Vector = {}
        for p, c in e.terms.items():
            if p not in index:
                raise ElementNotInModule(f"{p.label} is not in {self.name}")
            v[index[p]] = c
        return v

    def element_of(self, v: Vector) -> Element:
        if self.projective_vertex is None:
            raise ElementNotInModule(f"{self.name or 'module'} is not a projective e_x Λ")
        return Element(terms={self.basis_paths[i]: c for i, c in v.items()})

    def format_vector(self, v: Vector) -> str:
        if not v:
            return "0"
        parts = []
        for i in sorted(v):
            c = self.algebra.field.format(v[i])
            parts.append(self.labels[i] if c == "1" else f"({c}) {self.labels[i]}")
        return " + ".join(parts)

    def is_zero(self) -> bool:
        return self.dim == 0

    def fingerprint(self) -> Tuple:
        """Isomorphism invariants: dimension vector and the rank of every arrow action."""
        ranks = tuple(
            linalg.rank(self.action[a.name], self.dim, self.K) for a in self.algebra.quiver.arrows
        )
        return tuple(self.dimension_vector().values()), ranks


class Submodule(BaseModel):
    """An action-closed subspace of an ambient module, in rref coordinates."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ambient: RightModule
    rows: Tuple[Vector, ...] = ()
    pivots: Tuple[int, ...] = ()
    generators: Tuple[str, ...] = Field(default=(), description="Generator labels for display")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    @property
    def key(self) -> Tuple:
        """Hashable identity of the subspace (rref is canonical)."""
        return tuple(tuple(sorted(r.items())) for r in self.rows)

    @property
    def label(self) -> str:
        if self.is_zero():
            return "0"
        if self.dim == self.ambient.dim and self.ambient.name:
            return self.ambient.name
        if self.generators:
            return "<" + ", ".join(self.generators) + ">"
        return "<" + ", ".join(self.basis_labels()) + ">"

    def tags(self) -> List[str]:
        return [self.ambient.tags[p] for p in self.pivots]

    def basis_labels(self) -> List[str]:
        return [self.ambient.format_vector(r) for r in self.rows]

    def dimension_vector(self) -> Dict[str, int]:
        counts = Counter(self.tags())
        return {v: counts.get(v, 0) for v in self.ambient.algebra.vertices}

    def contains(self, v: Vector) -> bool:
        return not linalg.reduce_vector(v, self.rows, self.pivots)

    def contains_submodule(self, other: "Submodule") -> bool:
        _same_ambient(self, other)
        return all(self.contains(r) for r in other.rows)

    def same_as(self, other: "Submodule") -> bool:
        return self.ambient is other.ambient and self.key == other.key

    def with_generators(self, generators: Sequence[str]) -> "Submodule":
        return self.model_copy(update={"generators": tuple(generators)})

    def to_module(self, name: str = "") -> RightModule:
        """The submodule as a module in its own right (basis = its rref rows)."""
        amb = self.ambient
        action = {}
        for a in amb.algebra.quiver.arrows:
            images = []
            for r in self.rows:
                image = amb.act(r, a.name)
                coords = linalg.coordinates(image, self.pivots)
                images.append({j: c for j, c in enumerate(coords) if c})
            action[a.name] = tuple(images)
        return RightModule(
            name=name or self.label,
            algebra=amb.algebra,
            labels=tuple(self.basis_labels()),
            tags=tuple(self.tags()),
            action=action,
        )


def _same_ambient(*subs: Submodule) -> RightModule:
    first = subs[0].ambient
    for s in subs[1:]:
        if s.ambient is not first and s.ambient != first:
            raise AmbientMismatch("submodules of different modules")
    return first


def _make(m: RightModule, vectors: Iterable[Vector], generators: Sequence[str] = ()) -> Submodule:
    rows, pivots = linalg.rref(vectors, m.dim, m.K)
    return Submodule(ambient=m, rows=tuple(rows), pivots=pivots, generators=tuple(generators))


# ----- constructors -----

def projective(a: AlgebraBasis, x: str) -> RightModule:
    """P_x = e_x Λ with basis the basis paths starting at x."""
    a.check_vertex(x)
    paths = [p for p in a.paths if p.source == x]
    index = {p: i for i, p in enumerate(paths)}
    action = {}
    for arrow in a.quiver.arrows:
        if not a.is_basis_path(a.quiver.path([arrow.name])):
            # Only happens inside a corner algebra; such arrows act as zero there.
            action[arrow.name] = tuple({} for _ in paths)
            continue
        step = a.quiver.path([arrow.name])
        images = []
        for p in paths:
            if p.target != arrow.source:
                images.append({})
                continue
            images.append({index[q]: c for q, c in a.products[(p, step)].items()})
        action[arrow.name] = tuple(images)
    return RightModule(
        name=f"P_{x}",
        algebra=a,
        labels=tuple(p.label for p in paths),
        tags=tuple(p.target for p in paths),
        action=action,
        projective_vertex=x,
        basis_paths=tuple(paths),
    )


def simple(a: AlgebraBasis, x: str) -> RightModule:
    a.check_vertex(x)
    return RightModule(
        name=f"S_{x}",
        algebra=a,
        labels=(f"S_{x}",),
        tags=(x,),
        action={arrow.name: ({},) for arrow in a.quiver.arrows},
    )


def zero_module(a: AlgebraBasis) -> RightModule:
    return RightModule(name="0", algebra=a, labels=(), tags=(), action={arrow.name: () for arrow in a.quiver.arrows})


def direct_sum(a: AlgebraBasis, modules: Sequence[RightModule], name: str = "") -> RightModule:
    labels, tags = [], []
    action = {arrow.name: [] for arrow in a.quiver.arrows}
    offset = 0
    for k, m in enumerate(modules):
        labels.extend(f"{k}:{label}" for label in m.labels)
        tags.extend(m.tags)
        for arrow, images in m.action.items():
            action[arrow].extend({offset + i: c for i, c in img.items()} for img in images)
        offset += m.dim
    return RightModule(
        name=name or " + ".join(m.name for m in modules) or "0",
        algebra=a,
        labels=tuple(labels),
        tags=tuple(tags),
        action={k: tuple(v) for k, v in action.items()},
    )


# ----- submodule operations -----

def _closure(m: RightModule, vectors: Iterable[Vector]) -> Tuple[List[Vector], Tuple[int, ...]]:
    seeds = [part for v in vectors for part in m.homogeneous_parts(v)]
    rows, pivots = linalg.rref(seeds, m.dim, m.K)
    frontier = list(rows)
    arrows = [a.name for a in m.algebra.quiver.arrows]
    while frontier:
        fresh = []
        for v in frontier:
            for a in arrows:
                residue = linalg.reduce_vector(m.act(v, a), rows, pivots)
                if residue:
                    fresh.append(residue)
        if not fresh:
            break
        rows, pivots = linalg.rref(rows + fresh, m.dim, m.K)
        frontier = fresh
    return rows, pivots


def submodule_generated(
    m: RightModule,
    gens: Sequence[Union[Vector, Element, Path, str]],
    labels: Optional[Sequence[str]] = None,
) -> Submodule:
    """Smallest submodule containing gens (vectors, or algebra elements when m is P_x)."""
    vectors, names = [], []
    for g in gens:
        if isinstance(g, dict):
            for i in g:
                if not 0 <= i < m.dim:
                    raise ElementNotInModule(f"coordinate {i} outside {m.name}")
            vectors.append(g)
            names.append(m.format_vector(g))
        else:
            v = m.vector_of(g)
            vectors.append(v)
            names.append(g if isinstance(g, str) else m.format_vector(v))
    rows, pivots = _closure(m, vectors)
    return Submodule(
        ambient=m,
        rows=tuple(rows),
        pivots=pivots,
        generators=tuple(labels) if labels is not None else tuple(names),
    )


def whole(m: RightModule) -> Submodule:
    return _make(m, (m.unit(i) for i in range(m.dim)), generators=(m.name,) if m.name else ())


def zero_submodule(m: RightModule) -> Submodule:
    return Submodule(ambient=m)


def radical(m: Union[RightModule, Submodule]) -> Submodule:
    """m·J, as a submodule of m (or of the ambient when m is a submodule)."""
    if isinstance(m, Submodule):
        amb, vectors = m.ambient, m.rows
    else:
        amb, vectors = m, [m.unit(i) for i in range(m.dim)]
    images = [amb.act(v, a.name) for v in vectors for a in amb.algebra.quiver.arrows]
    rows, pivots = _closure(amb, images)
    return Submodule(ambient=amb, rows=tuple(rows), pivots=pivots)


def top(m: Union[RightModule, Submodule]) -> List[str]:
    """Composition factors of m/rad m, as a sorted multiset of vertices."""
    dims = m.dimension_vector()
    rad = radical(m).dimension_vector()
    vertices = []
    for v, d in dims.items():
        vertices.extend([v] * (d - rad[v]))
    return vertices


def radical_layers(m: Union[RightModule, Submodule]) -> List[List[str]]:
    """Tops of m, rad m, rad² m, ... (the Loewy layers)."""
    layers = []
    current = m if isinstance(m, Submodule) else whole(m)
    while not current.is_zero():
        layers.append(top(current))
        current = radical(current)
    return layers


def composition_factors(m: Union[RightModule, Submodule]) -> List[str]:
    return [v for layer in radical_layers(m) for v in layer]


def intersect(s1: Submodule, s2: Submodule) -> Submodule:
    amb = _same_ambient(s1, s2)
    return _make(amb, linalg.intersection(s1.rows, s2.rows, amb.dim, amb.K))


def module_sum(*subs: Submodule) -> Submodule:
    amb = _same_ambient(*subs)
    gens = tuple(g for s in subs for g in s.generators)
    return _make(amb, [r for s in subs for r in s.rows], generators=gens)


def is_direct_sum(subs: Sequence[Submodule]) -> bool:
    if not subs:
        return True
    return module_sum(*subs).dim == sum(s.dim for s in subs)


def quotient(m: RightModule, s: Submodule, name: str = "") -> RightModule:
    """m/s with basis the coordinates of m that are not pivots of s."""
    if s.ambient is not m and s.ambient != m:
        raise AmbientMismatch("quotient by a submodule of another module")
    pivots = set(s.pivots)
    kept = [i for i in range(m.dim) if i not in pivots]
    position = {i: k for k, i in enumerate(kept)}
    action = {}
    for arrow, images in m.action.items():
        new_images = []
        for i in kept:
            residue = linalg.reduce_vector(images[i], s.rows, s.pivots)
            new_images.append({position[j]: c for j, c in residue.items()})
        action[arrow] = tuple(new_images)
    return RightModule(
        name=name or f"{m.name}/{s.label}",
        algebra=m.algebra,
        labels=tuple(m.labels[i] for i in kept),
        tags=tuple(m.tags[i] for i in kept),
        action=action,
    )


def _left_multiplier(a: AlgebraBasis, w: Union[Element, str], s: Submodule) -> Tuple[RightModule, Element]:
    amb = s.ambient
    x = amb.projective_vertex
    if x is None:
        raise AmbientMismatch("left multiplication needs a submodule of some P_x")
    if isinstance(w, str):
        w = a.element(w)
    for p in w.terms:
        if p.source != x or p.target != x:
            raise AmbientMismatch(f"{p.label} does not map P_{x} into itself")
    return amb, w


def kernel_of_left_multiplication(a: AlgebraBasis, w: Union[Element, str], s: Submodule) -> Submodule:
    """{m in s : w·m = 0} for w in e_x Λ e_x."""
    amb, w = _left_multiplier(a, w, s)
    images = [amb.vector_of(a.multiply(w, amb.element_of(r))) for r in s.rows]
    combos = linalg.kernel(images, amb.dim, amb.K)
    vectors = []
    for combo in combos:
        v: Vector = {}
        for k, c in combo.items():
            linalg.add_scaled(v, s.rows[k], c)
        vectors.append(v)
    rows, pivots = _closure(amb, vectors)
    return Submodule(ambient=amb, rows=tuple(rows), pivots=pivots)


def left_multiply_submodule(a: AlgebraBasis, w: Union[Element, str], s: Submodule) -> Submodule:
    """w·s, again a submodule of P_x."""
    amb, w = _left_multiplier(a, w, s)
    images = [amb.vector_of(a.multiply(w, amb.element_of(r))) for r in s.rows]
    rows, pivots = _closure(amb, images)
    return Submodule(ambient=amb, rows=tuple(rows), pivots=pivots)


def loop_count(a: AlgebraBasis, x: str) -> int:
    """Loops at x in the presentation quiver (= dim Ext¹(S_x, S_x) for admissible I)."""
    a.check_vertex(x)
    return len(a.quiver.loops_at(x))
