"""
Shared result records.
"""

from typing import List, Optional

from pydantic import BaseModel, Field


class CheckResult(BaseModel):
    """Outcome of an exhaustive check: ok, or the first witness in canonical order."""

    ok: bool = Field(description="True when the property holds everywhere")
    witness: Optional[List[str]] = Field(
        default=None, description="Labels of the offending objects when ok is False"
    )
    message: str = Field(default="", description="Human-readable explanation of the witness")

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "CheckResult":
        return cls(ok=True)

    @classmethod
    def failed(cls, witness: List[str], message: str) -> "CheckResult":
        return cls(ok=False, witness=witness, message=message)
