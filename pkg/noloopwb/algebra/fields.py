"""
Exact coefficient fields: the rationals or a prime field GF(p).
"""

from functools import lru_cache
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import Rational, isprime
from sympy.polys.domains import GF, QQ

from noloopwb.exceptions import MalformedPresentation


@lru_cache(maxsize=None)
def _domain(kind: str, prime: Optional[int]):
    if kind == "rationals":
        return QQ
    return GF(prime, symmetric=False)


class FieldSpec(BaseModel):
    """Field descriptor of a presentation."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["rationals", "prime"] = Field(
        default="rationals", description="'rationals' or 'prime'"
    )
    prime: Optional[int] = Field(
        default=None, description="Characteristic of the prime field"
    )

    @model_validator(mode="after")
    def _check_prime(self):
        if self.kind == "prime" and (self.prime is None or not isprime(self.prime)):
            raise MalformedPresentation(f"prime field needs a prime characteristic, got {self.prime}")
        if self.kind == "rationals" and self.prime is not None:
            raise MalformedPresentation("the rationals take no characteristic")
        return self

    @property
    def domain(self):
        """The sympy domain (QQ or GF(p)) holding the scalars."""
        return _domain(self.kind, self.prime)

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "rationals" else self.prime

    @property
    def one(self):
        return self.domain.one

    @property
    def zero(self):
        return self.domain.zero

    def scalar(self, value: Any):
        """Convert an int, a Fraction-like or a 'p/q' string into the field."""
        K = self.domain
        if isinstance(value, str):
            try:
                value = Rational(value.strip())
            except (TypeError, ValueError) as e:
                raise ValueError(f"not a scalar: {value!r}") from e
        value = Rational(value)
        numerator = K.convert(int(value.p))
        denominator = K.convert(int(value.q))
        if not denominator:
            raise ValueError(f"{value} is undefined in characteristic {self.characteristic}")
        return K.quo(numerator, denominator)

    def format(self, c) -> str:
        """Canonical text of a scalar: 'p/q' over QQ, a residue 0..p-1 over GF(p)."""
        K = self.domain
        if self.kind == "prime":
            return str(int(K.to_sympy(c)) % self.prime)
        return str(K.to_sympy(c))

    def describe(self) -> str:
        return "rationals" if self.kind == "rationals" else f"prime {self.prime}"


RATIONALS = FieldSpec()


def prime_field(p: int) -> FieldSpec:
    return FieldSpec(kind="prime", prime=p)
