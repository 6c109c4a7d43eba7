"""
Interlaced paths and contours.

Two parallel paths are related when they share a frame v = p·v'·q,
w = p·w'·q with p, q not both trivial and v', w' of the same nonzero ray;
interlacing is the transitive closure. A contour is a pair of parallel paths
with the same nonzero ray that are not interlaced.
"""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from noloopwb.algebra.basis import AlgebraBasis
from noloopwb.algebra.quiver import Path
from noloopwb.exceptions import UnknownVertex

logger = logging.getLogger(__name__)


class Contour(BaseModel):
    """A non-interlaced pair (v, w) with v⃗ = w⃗ ≠ 0, v before w in path order."""

    model_config = ConfigDict(frozen=True)

    v: Path
    w: Path
    ray: Path = Field(description="Basis path representing the common ray")
    loop: Optional[str] = Field(default=None, description="σ when one side is a power σ^t of a loop")
    power: Optional[int] = Field(default=None, description="t when one side is σ^t")
    deep: Optional[bool] = Field(default=None, description="σ^{t+1} = 0, for loop-power contours")

    @property
    def label(self) -> str:
        return f"({self.v.label}, {self.w.label})"


def ray_of(a: AlgebraBasis, p: Path) -> Optional[Path]:
    """Basis path whose scalar class contains p, or None when p is zero or not a single class."""
    try:
        single = a.normal_form(p).single()
    except UnknownVertex:
        # Inside a corner algebra, paths through omitted vertices are not morphisms.
        return None
    return None if single is None else single[0]


def _parallel_paths(a: AlgebraBasis, x: str, y: str, max_length: int) -> List[Path]:
    return [p for p in a.quiver.paths_from(x, max_length) if p.target == y]


def _shares_frame(a: AlgebraBasis, v: Path, w: Path, rays: Dict[Path, Optional[Path]]) -> bool:
    q = a.quiver
    n, m = v.length, w.length
    for i in range(0, min(n, m) + 1):
        if v.arrows[:i] != w.arrows[:i]:
            break
        for j in range(0, min(n, m) - i + 1):
            if i + j == 0:
                continue
            if j and v.arrows[n - j:] != w.arrows[m - j:]:
                break
            v_mid = v.subpath(i, n - j, q)
            w_mid = w.subpath(i, m - j, q)
            r = rays.setdefault(v_mid, ray_of(a, v_mid))
            if r is not None and r == rays.setdefault(w_mid, ray_of(a, w_mid)):
                return True
    return False


def interlacing_graph(a: AlgebraBasis, x: str, y: str, max_length: Optional[int] = None) -> nx.Graph:
    """Paths x -> y up to max_length (default N-1), joined when they share a frame."""
    if max_length is None:
        max_length = a.bound - 1
    paths = _parallel_paths(a, x, y, max_length)
    rays: Dict[Path, Optional[Path]] = {}
    graph = nx.Graph()
    graph.add_nodes_from(paths)
    for v, w in combinations(paths, 2):
        if _shares_frame(a, v, w, rays):
            graph.add_edge(v, w)
    return graph


def interlaced(a: AlgebraBasis, v: Path, w: Path, graph: Optional[nx.Graph] = None) -> bool:
    if (v.source, v.target) != (w.source, w.target):
        raise ValueError(f"{v.label} and {w.label} are not parallel")
    if v == w:
        # v = v·e·e frames itself as soon as it has an arrow.
        return v.length >= 1
    if graph is None:
        graph = interlacing_graph(a, v.source, v.target, max(a.bound - 1, v.length, w.length))
    if v not in graph or w not in graph:
        return False
    return nx.has_path(graph, v, w)


def _loop_power(p: Path) -> Optional[Tuple[str, int]]:
    if p.length >= 1 and len(set(p.arrows)) == 1 and p.source == p.target:
        return p.arrows[0], p.length
    return None


def contours(a: AlgebraBasis, max_length: int) -> List[Contour]:
    """All contours with both paths of length 1..max_length, canonically ordered."""
    if max_length > a.bound:
        raise ValueError(f"max length {max_length} exceeds the nilpotency bound {a.bound}")
    key = a.quiver.path_key
    found: List[Contour] = []
    for x in a.vertices:
        for y in a.vertices:
            paths = [p for p in _parallel_paths(a, x, y, max_length) if p.length >= 1]
            rays = {p: ray_of(a, p) for p in paths}
            classes: Dict[Path, List[Path]] = {}
            for p in paths:
                if rays[p] is not None:
                    classes.setdefault(rays[p], []).append(p)
            if not any(len(ps) > 1 for ps in classes.values()):
                continue
            graph = interlacing_graph(a, x, y, max(a.bound - 1, max_length))
            for ray, ps in classes.items():
                for v, w in combinations(sorted(ps, key=key), 2):
                    if nx.has_path(graph, v, w):
                        continue
                    found.append(_contour(a, v, w, ray))
    found.sort(key=lambda c: (key(c.v), key(c.w)))
    logger.debug("%s: %d contours up to length %d", a.name, len(found), max_length)
    return found


def _contour(a: AlgebraBasis, v: Path, w: Path, ray: Path) -> Contour:
    for side in (v, w):
        lp = _loop_power(side)
        if lp is not None:
            loop, t = lp
            higher = Path(source=side.source, target=side.target, arrows=(loop,) * (t + 1))
            return Contour(v=v, w=w, ray=ray, loop=loop, power=t, deep=a.normal_form(higher).is_zero)
    return Contour(v=v, w=w, ray=ray)


def is_deep(a: AlgebraBasis, c: Contour) -> bool:
    return bool(c.deep)
