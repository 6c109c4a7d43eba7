"""
Finite acyclic diagrams and ray functors out of them.

The morphisms of a diagram are the classes of its paths under the congruence
generated by the declared equalities. A class is zero when one of its paths
contains a declared-zero path.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from noloopwb.algebra.quiver import Arrow, Path, Quiver
from noloopwb.exceptions import IllFormedFunctor, MalformedPresentation
from noloopwb.raycat.category import Ray, RayCategory

logger = logging.getLogger(__name__)


class Diagram(BaseModel):
    """Quiver without oriented cycles plus commutativity and zero relations."""

    model_config = ConfigDict(frozen=True)

    name: str = ""
    quiver: Quiver
    equalities: Tuple[Tuple[Path, Path], ...] = Field(default=(), description="Pairs of parallel paths declared equal")
    zeros: Tuple[Path, ...] = Field(default=(), description="Paths declared zero (dotted lines)")

    _classes: Dict[Path, Path] = PrivateAttr(default_factory=dict)
    _zero: frozenset = PrivateAttr(default=frozenset())

    @model_validator(mode="after")
    def _check(self):
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.quiver.vertices)
        graph.add_edges_from((a.source, a.target) for a in self.quiver.arrows)
        if not nx.is_directed_acyclic_graph(graph):
            raise MalformedPresentation("diagram quiver has an oriented cycle")
        for v, w in self.equalities:
            if (v.source, v.target) != (w.source, w.target):
                raise MalformedPresentation(f"diagram equality joins non-parallel {v.label} and {w.label}")
        return self

    def model_post_init(self, __context) -> None:
        paths = self.paths()
        key = self.quiver.path_key
        parent = {p: p for p in paths}

        def find(p: Path) -> Path:
            while parent[p] != p:
                parent[p] = parent[parent[p]]
                p = parent[p]
            return p

        def union(p: Path, q: Path) -> None:
            rp, rq = find(p), find(q)
            if rp != rq:
                small, large = sorted((rp, rq), key=key)
                parent[large] = small

        for v, w in self.equalities:
            for p in paths:
                for q in paths:
                    left, right = p.concat(v), p.concat(w)
                    if left is None:
                        continue
                    full_left, full_right = left.concat(q), right.concat(q)
                    if full_left is not None:
                        union(full_left, full_right)

        self._classes = {p: find(p) for p in paths}
        zero_roots = {self._classes[p] for p in paths if any(self._contains(p, z) for z in self.zeros)}
        self._zero = frozenset(zero_roots)

    @staticmethod
    def _contains(p: Path, sub: Path) -> bool:
        n, m = p.length, sub.length
        return any(p.arrows[i:i + m] == sub.arrows for i in range(n - m + 1)) if m else False

    def paths(self) -> List[Path]:
        """Every path of the quiver (finite: no oriented cycles)."""
        longest = len(self.quiver.vertices)
        return [p for v in self.quiver.vertices for p in self.quiver.paths_from(v, longest)]

    def morphism(self, p: Union[Path, str]) -> Optional[Path]:
        """Smallest path of p's class, or None when p is zero."""
        if isinstance(p, str):
            p = self.quiver.parse_path(p)
        root = self._classes[p]
        return None if root in self._zero else root

    def morphisms(self) -> List[Path]:
        """Nonzero morphisms, identities included, by representative."""
        reps = {r for r in self._classes.values() if r not in self._zero}
        return sorted(reps, key=self.quiver.path_key)

    def morphisms_from(self, v: str) -> List[Path]:
        return [m for m in self.morphisms() if m.source == v]

    def morphisms_to(self, v: str) -> List[Path]:
        return [m for m in self.morphisms() if m.target == v]

    def compose(self, p: Optional[Path], q: Optional[Path]) -> Optional[Path]:
        if p is None or q is None:
            return None
        pq = p.concat(q)
        return None if pq is None else self.morphism(pq)

    def is_irreducible(self, m: Path) -> bool:
        """A nonzero class all of whose paths are single arrows."""
        if self.morphism(m) is None:
            return False
        members = [p for p, r in self._classes.items() if r == self._classes[m]]
        return all(p.length == 1 for p in members)

    def irreducible_morphisms(self) -> List[Path]:
        return [m for m in self.morphisms() if not m.is_trivial and self.is_irreducible(m)]


class RayFunctor(BaseModel):
    """Assignment of objects to diagram vertices and nonzero rays to diagram arrows."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    diagram: Diagram
    category: RayCategory
    vertex_map: Dict[str, str]
    arrow_map: Dict[str, Ray]

    def image(self, p: Union[Path, str]) -> Optional[Ray]:
        """F of a diagram path; None for zero."""
        if isinstance(p, str):
            p = self.diagram.quiver.parse_path(p)
        rc = self.category
        if p.is_trivial:
            return rc.ray(rc.algebra.quiver.trivial(self.vertex_map[p.source]))
        result = self.arrow_map[p.arrows[0]]
        for name in p.arrows[1:]:
            result = rc.compose(result, self.arrow_map[name])
            if result is None:
                return None
        return result

    def describe(self) -> List[str]:
        return [f"{name} -> {ray.label}" for name, ray in self.arrow_map.items()]


def build_functor(
    diagram: Diagram,
    category: RayCategory,
    arrow_images: Dict[str, Union[Path, str]],
    vertex_images: Optional[Dict[str, str]] = None,
) -> RayFunctor:
    """Check endpoints and declared relations, inferring vertex images from arrow images."""
    vertex_map = dict(vertex_images or {})
    arrow_map: Dict[str, Ray] = {}
    q = diagram.quiver
    for arrow in q.arrows:
        if arrow.name not in arrow_images:
            raise IllFormedFunctor(f"no image for diagram arrow {arrow.name}")
        ray = category.ray(arrow_images[arrow.name])
        if ray is None:
            raise IllFormedFunctor(f"diagram arrow {arrow.name} is sent to zero")
        for end, obj in ((arrow.source, ray.source), (arrow.target, ray.target)):
            if vertex_map.setdefault(end, obj) != obj:
                raise IllFormedFunctor(
                    f"diagram vertex {end} sent to both {vertex_map[end]} and {obj} (arrow {arrow.name})"
                )
        arrow_map[arrow.name] = ray
    missing = [v for v in q.vertices if v not in vertex_map]
    if missing:
        raise IllFormedFunctor(f"no object for isolated diagram vertices {', '.join(missing)}")
    for v in vertex_map.values():
        category.algebra.check_vertex(v)

    functor = RayFunctor(diagram=diagram, category=category, vertex_map=vertex_map, arrow_map=arrow_map)
    for v, w in diagram.equalities:
        if functor.image(v) != functor.image(w):
            raise IllFormedFunctor(f"{v.label} = {w.label} in the diagram but their images differ")
    for z in diagram.zeros:
        image = functor.image(z)
        if image is not None:
            raise IllFormedFunctor(f"{z.label} is zero in the diagram but maps to {image.label}")
    logger.debug("functor on %s: %s", diagram.name or "diagram", ", ".join(functor.describe()))
    return functor


def diagram_from_arrows(
    name: str,
    vertices: Sequence[str],
    arrows: Sequence[Tuple[str, str, str]],
    equalities: Sequence[Tuple[str, str]] = (),
    zeros: Sequence[str] = (),
) -> Diagram:
    """Convenience constructor from (name, source, target) triples and path texts."""
    quiver = Quiver(
        vertices=tuple(vertices),
        arrows=tuple(Arrow(name=n, source=s, target=t) for n, s, t in arrows),
    )
    return Diagram(
        name=name,
        quiver=quiver,
        equalities=tuple((quiver.parse_path(v), quiver.parse_path(w)) for v, w in equalities),
        zeros=tuple(quiver.parse_path(z) for z in zeros),
    )
