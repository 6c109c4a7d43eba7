"""
Presentations kQ/I: a quiver, monomial and binomial relations, a nilpotency
bound N and the coefficient field.
"""

from typing import Annotated, Any, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from noloopwb.algebra.fields import FieldSpec, RATIONALS
from noloopwb.algebra.quiver import Path, Quiver
from noloopwb.exceptions import MalformedPresentation


class Monomial(BaseModel):
    """A path declared zero."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["zero"] = "zero"
    path: Path

    @property
    def min_length(self) -> int:
        return self.path.length

    def describe(self, field: FieldSpec) -> str:
        return f"zero: {self.path.label}"


class Binomial(BaseModel):
    """left - coefficient * right lies in I."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["equal"] = "equal"
    left: Path
    right: Path
    coefficient: Any = Field(description="Nonzero scalar of the field")

    @model_validator(mode="after")
    def _check_parallel(self):
        if (self.left.source, self.left.target) != (self.right.source, self.right.target):
            raise MalformedPresentation(
                f"binomial joins non-parallel paths {self.left.label} and {self.right.label}"
            )
        if not self.coefficient:
            raise MalformedPresentation("binomial coefficient must be nonzero")
        return self

    @property
    def min_length(self) -> int:
        return min(self.left.length, self.right.length)

    def describe(self, field: FieldSpec) -> str:
        c = field.format(self.coefficient)
        scalar = "" if c == "1" else f"({c}) "
        return f"equal: {self.left.label} = {scalar}{self.right.label}"


Relation = Annotated[Union[Monomial, Binomial], Field(discriminator="kind")]


class Presentation(BaseModel):
    """User-facing definition of a bound quiver algebra."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(default="", description="Short name, e.g. 'example1'")
    notes: str = Field(default="", description="Provenance notes")
    field: FieldSpec = Field(default=RATIONALS, description="Coefficient field")
    quiver: Quiver
    relations: Tuple[Relation, ...] = ()
    bound: int = Field(description="Nilpotency bound N with J^N = 0 intended")

    @model_validator(mode="after")
    def _check_bound(self):
        if self.bound < 2:
            raise MalformedPresentation(f"nilpotency bound must be at least 2, got {self.bound}")
        return self

    @property
    def monomials(self) -> Tuple[Monomial, ...]:
        return tuple(r for r in self.relations if isinstance(r, Monomial))

    @property
    def binomials(self) -> Tuple[Binomial, ...]:
        return tuple(r for r in self.relations if isinstance(r, Binomial))

    def with_bound(self, bound: int) -> "Presentation":
        return self.model_copy(update={"bound": bound})

    def zero(self, text: str) -> Monomial:
        return Monomial(path=self.quiver.parse_path(text))

    def equal(self, left: str, right: str, coefficient: Optional[Any] = None) -> Binomial:
        c = self.field.one if coefficient is None else self.field.scalar(coefficient)
        return Binomial(left=self.quiver.parse_path(left), right=self.quiver.parse_path(right), coefficient=c)
