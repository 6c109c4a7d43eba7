"""
The `noloopwb/1` text format for algebras, cleaving diagrams and chains.

    noloopwb/1
    [meta]
    name: example1
    notes: free text, may repeat
    [field]
    rationals            (or: prime 2)
    [vertices]
    x y1 y2 z
    [arrows]
    alpha: x -> x
    [relations]
    zero: alpha.gamma1
    equal: alpha.alpha = (3/2) beta1.beta2.beta3
    [bound]
    5

Diagram files use [meta] [vertices] [arrows] [relations] plus a [functor]
section of `maps-to: arrow = path` lines; chain files have a single [chain]
section with one term per line (comma-separated generators, `e_x` for P_x,
`0` for the zero module). `#` starts a comment.
"""

import logging
import re
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from noloopwb.algebra.fields import RATIONALS, FieldSpec, prime_field
from noloopwb.algebra.presentation import Binomial, Monomial, Presentation
from noloopwb.algebra.quiver import Arrow, Path, Quiver
from noloopwb.cleaving.diagram import Diagram
from noloopwb.config import FILE_FORMAT_HEADER
from noloopwb.exceptions import ParseError, WorkbenchError

logger = logging.getLogger(__name__)

Line = Tuple[int, str]

ALGEBRA_SECTIONS = ("meta", "field", "vertices", "arrows", "relations", "bound")
DIAGRAM_SECTIONS = ("meta", "vertices", "arrows", "relations", "functor")
CHAIN_SECTIONS = ("meta", "chain")

_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_']*$")
_ARROW = re.compile(r"^([^:\s]+)\s*:\s*(\S+)\s*->\s*(\S+)$")
_SCALAR = re.compile(r"^\(([^)]*)\)\s*(.+)$")


class DiagramFile(BaseModel):
    model_config = ConfigDict(frozen=True)

    diagram: Diagram
    images: Dict[str, str] = Field(description="Diagram arrow -> representative path text")


def _sections(text: str, allowed: Tuple[str, ...], required: Tuple[str, ...]) -> Dict[str, List[Line]]:
    lines = text.splitlines()
    numbered = [(i, raw.split("#", 1)[0].strip()) for i, raw in enumerate(lines, start=1)]
    numbered = [(i, s) for i, s in numbered if s]
    if not numbered or numbered[0][1] != FILE_FORMAT_HEADER:
        raise ParseError(numbered[0][0] if numbered else 1, f"missing header line '{FILE_FORMAT_HEADER}'")

    sections: Dict[str, List[Line]] = {}
    current: Optional[str] = None
    for i, s in numbered[1:]:
        if s.startswith("[") and s.endswith("]"):
            current = s[1:-1].strip()
            if current not in allowed:
                raise ParseError(i, f"unknown section [{current}]")
            if current in sections:
                raise ParseError(i, f"duplicate section [{current}]")
            sections[current] = [(i, s)]
            continue
        if current is None:
            raise ParseError(i, "content before the first section")
        sections[current].append((i, s))
    for name in required:
        if name not in sections:
            raise ParseError(len(lines) or 1, f"missing section [{name}]")
    return {name: body for name, body in sections.items()}


def _body(section: List[Line]) -> List[Line]:
    return section[1:]


def _meta(section: Optional[List[Line]]) -> Tuple[str, str]:
    name, notes = "", []
    for i, s in _body(section or []):
        key, sep, value = s.partition(":")
        if not sep:
            raise ParseError(i, f"expected 'key: value', got {s!r}")
        key, value = key.strip(), value.strip()
        if key == "name":
            name = value
        elif key == "notes":
            notes.append(value)
        else:
            raise ParseError(i, f"unknown meta key {key!r}")
    return name, "\n".join(notes)


def _field(section: List[Line]) -> FieldSpec:
    body = _body(section)
    if len(body) != 1:
        raise ParseError(section[0][0], "[field] takes exactly one line")
    i, s = body[0]
    parts = s.split()
    if parts == ["rationals"]:
        return RATIONALS
    if len(parts) == 2 and parts[0] == "prime" and parts[1].isdigit():
        try:
            return prime_field(int(parts[1]))
        except WorkbenchError as e:
            raise ParseError(i, str(e)) from None
    raise ParseError(i, f"unknown field {s!r}")


def _vertices(section: List[Line]) -> Tuple[str, ...]:
    seen: List[str] = []
    for i, s in _body(section):
        for v in s.split():
            if not _NAME.match(v):
                raise ParseError(i, f"bad vertex name {v!r}")
            if v in seen:
                raise ParseError(i, f"duplicate vertex {v!r}")
            seen.append(v)
    if not seen:
        raise ParseError(section[0][0], "no vertices")
    return tuple(seen)


def _arrows(section: Optional[List[Line]], vertices: Tuple[str, ...]) -> Tuple[Arrow, ...]:
    arrows: List[Arrow] = []
    names = set()
    for i, s in _body(section or []):
        m = _ARROW.match(s)
        if not m:
            raise ParseError(i, f"expected 'name: source -> target', got {s!r}")
        name, source, target = m.groups()
        if not _NAME.match(name):
            raise ParseError(i, f"bad arrow name {name!r}")
        if name in names or name in vertices:
            raise ParseError(i, f"duplicate name {name!r}")
        for end in (source, target):
            if end not in vertices:
                raise ParseError(i, f"arrow {name} has dangling endpoint {end!r}")
        names.add(name)
        arrows.append(Arrow(name=name, source=source, target=target))
    return tuple(arrows)


def _path(quiver: Quiver, i: int, text: str) -> Path:
    try:
        return quiver.parse_path(text)
    except (WorkbenchError, ValueError) as e:
        raise ParseError(i, str(e)) from None


def _relation(quiver: Quiver, field: FieldSpec, i: int, s: str, scalars: bool = True):
    kind, sep, rest = s.partition(":")
    kind, rest = kind.strip(), rest.strip()
    if not sep:
        raise ParseError(i, f"expected 'zero: path' or 'equal: path = path', got {s!r}")
    if kind == "zero":
        p = _path(quiver, i, rest)
        if p.length < 2:
            raise ParseError(i, f"relation path {p.label} has length < 2")
        return Monomial(path=p)
    if kind != "equal":
        raise ParseError(i, f"unknown relation kind {kind!r}")
    left_text, sep, right_text = rest.partition("=")
    if not sep:
        raise ParseError(i, "equal relation needs '='")
    coefficient = field.one
    m = _SCALAR.match(right_text.strip())
    if m:
        if not scalars:
            raise ParseError(i, "diagram relations take no scalars")
        try:
            coefficient = field.scalar(m.group(1))
        except ValueError as e:
            raise ParseError(i, str(e)) from None
        right_text = m.group(2)
    left, right = _path(quiver, i, left_text), _path(quiver, i, right_text)
    if (left.source, left.target) != (right.source, right.target):
        raise ParseError(i, f"binomial joins non-parallel paths {left.label} and {right.label}")
    if scalars and min(left.length, right.length) < 2:
        raise ParseError(i, "relation has a path of length < 2")
    if not coefficient:
        raise ParseError(i, "binomial coefficient must be nonzero")
    return Binomial(left=left, right=right, coefficient=coefficient)


def parse_algebra_file(text: str) -> Presentation:
    """Strict parse of an algebra file; errors carry the offending line."""
    sections = _sections(text, ALGEBRA_SECTIONS, ("field", "vertices", "bound"))
    name, notes = _meta(sections.get("meta"))
    field = _field(sections["field"])
    vertices = _vertices(sections["vertices"])
    quiver = Quiver(vertices=vertices, arrows=_arrows(sections.get("arrows"), vertices))
    relations = tuple(_relation(quiver, field, i, s) for i, s in _body(sections.get("relations", [])))

    body = _body(sections["bound"])
    if len(body) != 1 or not body[0][1].isdigit():
        raise ParseError(sections["bound"][0][0], "[bound] takes one integer")
    i, s = body[0]
    try:
        presentation = Presentation(
            name=name, notes=notes, field=field, quiver=quiver, relations=relations, bound=int(s)
        )
    except WorkbenchError as e:
        raise ParseError(i, str(e)) from None
    logger.debug("parsed %s: %d vertices, %d arrows, %d relations",
                 name or "algebra", len(vertices), len(quiver.arrows), len(relations))
    return presentation


def serialize_presentation(p: Presentation) -> str:
    """Canonical text of a presentation; parse_algebra_file reads it back."""
    out = [FILE_FORMAT_HEADER]
    if p.name or p.notes:
        out.append("[meta]")
        if p.name:
            out.append(f"name: {p.name}")
        out.extend(f"notes: {line}" for line in p.notes.splitlines())
    out += ["[field]", p.field.describe(), "[vertices]", " ".join(p.quiver.vertices)]
    if p.quiver.arrows:
        out.append("[arrows]")
        out.extend(f"{a.name}: {a.source} -> {a.target}" for a in p.quiver.arrows)
    if p.relations:
        out.append("[relations]")
        out.extend(r.describe(p.field) for r in p.relations)
    out += ["[bound]", str(p.bound)]
    return "\n".join(out) + "\n"


def parse_diagram_file(text: str) -> DiagramFile:
    sections = _sections(text, DIAGRAM_SECTIONS, ("vertices", "arrows", "functor"))
    name, _ = _meta(sections.get("meta"))
    vertices = _vertices(sections["vertices"])
    quiver = Quiver(vertices=vertices, arrows=_arrows(sections["arrows"], vertices))

    equalities, zeros = [], []
    for i, s in _body(sections.get("relations", [])):
        r = _relation(quiver, RATIONALS, i, s, scalars=False)
        if isinstance(r, Monomial):
            zeros.append(r.path)
        else:
            equalities.append((r.left, r.right))

    images: Dict[str, str] = {}
    for i, s in _body(sections["functor"]):
        key, sep, rest = s.partition(":")
        arrow, eq, path = rest.partition("=")
        if key.strip() != "maps-to" or not sep or not eq:
            raise ParseError(i, f"expected 'maps-to: arrow = path', got {s!r}")
        arrow = arrow.strip()
        if not quiver.has_arrow(arrow):
            raise ParseError(i, f"unknown diagram arrow {arrow!r}")
        if arrow in images:
            raise ParseError(i, f"arrow {arrow} mapped twice")
        images[arrow] = path.strip()

    try:
        diagram = Diagram(name=name, quiver=quiver, equalities=tuple(equalities), zeros=tuple(zeros))
    except WorkbenchError as e:
        raise ParseError(sections["arrows"][0][0], str(e)) from None
    return DiagramFile(diagram=diagram, images=images)


def parse_chain_file(text: str) -> List[List[str]]:
    """Generator lists of the chain terms, top first."""
    sections = _sections(text, CHAIN_SECTIONS, ("chain",))
    terms = []
    for i, s in _body(sections["chain"]):
        generators = [g.strip() for g in s.split(",")]
        if any(not g for g in generators):
            raise ParseError(i, f"empty generator in {s!r}")
        terms.append(generators)
    if not terms:
        raise ParseError(sections["chain"][0][0], "empty chain")
    return terms
