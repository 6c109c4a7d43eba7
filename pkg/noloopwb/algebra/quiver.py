"""
Quivers and paths.

Paths compose left to right: the path "alpha.beta1" runs along alpha and then
along beta1, so the target of each arrow is the source of the next.
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from noloopwb.exceptions import EmptyQuiver, MalformedPresentation, UnknownArrow, UnknownVertex


class Arrow(BaseModel):
    """A named arrow source -> target; loops allowed."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(description="Unique arrow name")
    source: str = Field(description="Source vertex")
    target: str = Field(description="Target vertex")

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


class Path(BaseModel):
    """A path given by its source, target and arrow sequence (empty = e_source)."""

    model_config = ConfigDict(frozen=True)

    source: str
    target: str
    arrows: Tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def label(self) -> str:
        if self.is_trivial:
            return f"e_{self.source}"
        return ".".join(self.arrows)

    def __str__(self) -> str:
        return self.label

    def __repr__(self) -> str:
        return f"Path({self.label})"

    def concat(self, other: "Path") -> Optional["Path"]:
        """self followed by other, or None when the junction vertices differ."""
        if self.target != other.source:
            return None
        return Path(source=self.source, target=other.target, arrows=self.arrows + other.arrows)

    def subpath(self, start: int, stop: int, quiver: "Quiver") -> "Path":
        """Arrows start..stop-1 as a path (trivial at the right vertex when empty)."""
        arrows = self.arrows[start:stop]
        if arrows:
            return quiver.path(arrows)
        vertex = self.source if start == 0 else quiver.arrow(self.arrows[start - 1]).target
        return Path(source=vertex, target=vertex)


class Quiver(BaseModel):
    """Finite quiver with ordered vertices and arrows."""

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[str, ...] = Field(description="Vertex names in declaration order")
    arrows: Tuple[Arrow, ...] = Field(default=(), description="Arrows in declaration order")

    _arrow_index: Dict[str, int] = PrivateAttr(default_factory=dict)
    _vertex_index: Dict[str, int] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _check_names(self):
        if not self.vertices:
            raise EmptyQuiver("a quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise MalformedPresentation("duplicate vertex names")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise MalformedPresentation("duplicate arrow names")
        known = set(self.vertices)
        for a in self.arrows:
            if a.source not in known or a.target not in known:
                raise MalformedPresentation(f"arrow {a.name} has a dangling endpoint")
        return self

    def model_post_init(self, __context) -> None:
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self._arrow_index = {a.name: i for i, a in enumerate(self.arrows)}

    def arrow(self, name: str) -> Arrow:
        try:
            return self.arrows[self._arrow_index[name]]
        except KeyError:
            raise UnknownArrow(f"unknown arrow {name!r}") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._arrow_index

    def check_vertex(self, v: str) -> str:
        if v not in self._vertex_index:
            raise UnknownVertex(f"unknown vertex {v!r}")
        return v

    def vertex_index(self, v: str) -> int:
        return self._vertex_index[self.check_vertex(v)]

    def arrows_from(self, v: str) -> List[Arrow]:
        self.check_vertex(v)
        return [a for a in self.arrows if a.source == v]

    def arrows_to(self, v: str) -> List[Arrow]:
        self.check_vertex(v)
        return [a for a in self.arrows if a.target == v]

    def loops_at(self, v: str) -> List[Arrow]:
        return [a for a in self.arrows_from(v) if a.is_loop]

    def trivial(self, v: str) -> Path:
        self.check_vertex(v)
        return Path(source=v, target=v)

    def path(self, arrows: Sequence[str]) -> Path:
        """Validated path from a non-empty arrow sequence."""
        if not arrows:
            raise ValueError("use Quiver.trivial for trivial paths")
        first = self.arrow(arrows[0])
        current = first.target
        for name in arrows[1:]:
            a = self.arrow(name)
            if a.source != current:
                raise MalformedPresentation(f"arrows do not compose at {name!r} in {'.'.join(arrows)}")
            current = a.target
        return Path(source=first.source, target=current, arrows=tuple(arrows))

    def parse_path(self, text: str) -> Path:
        """'e_x' or dot-separated arrow names."""
        text = text.strip()
        if text.startswith("e_") and not self.has_arrow(text):
            return self.trivial(text[2:])
        return self.path([part.strip() for part in text.split(".")])

    def path_key(self, p: Path) -> Tuple:
        """Path order: length, then arrow declaration order (vertex order for e_x)."""
        if p.is_trivial:
            return (0, (self._vertex_index[p.source],))
        return (p.length, tuple(self._arrow_index[a] for a in p.arrows))

    def paths_from(self, v: str, max_length: int) -> Iterable[Path]:
        """All paths starting at v of length <= max_length, by length."""
        layer = [self.trivial(v)]
        while layer:
            yield from layer
            if layer[0].length >= max_length:
                return
            nxt = []
            for p in layer:
                for a in self.arrows_from(p.target):
                    nxt.append(Path(source=p.source, target=a.target, arrows=p.arrows + (a.name,)))
            layer = nxt

    def renamed(self, vertex_names: Dict[str, str], arrow_names: Dict[str, str]) -> "Quiver":
        return Quiver(
            vertices=tuple(vertex_names[v] for v in self.vertices),
            arrows=tuple(
                Arrow(name=arrow_names[a.name], source=vertex_names[a.source], target=vertex_names[a.target])
                for a in self.arrows
            ),
        )
