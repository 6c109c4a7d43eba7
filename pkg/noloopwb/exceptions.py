"""
Errors raised by the workbench.

Every error derives from WorkbenchError so callers (the certify workflow, the
CLI) can downgrade failures to diagnostics with a single except clause.
"""

from typing import Optional


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class EmptyQuiver(WorkbenchError):
    """The presentation has no vertices."""


class NotAdmissible(WorkbenchError):
    """A length-N path survives, or a relation is shorter than two arrows."""


class MalformedPresentation(WorkbenchError):
    """Duplicate names, dangling endpoints, non-parallel binomials."""


class UnknownArrow(WorkbenchError):
    pass


class UnknownVertex(WorkbenchError):
    pass


class AmbientMismatch(WorkbenchError):
    """Submodules (or an element and a module) live in different ambients."""


class ElementNotInModule(WorkbenchError):
    pass


class NonStandardPresentation(WorkbenchError):
    """Basis paths do not multiply to scalar multiples of basis paths."""

    def __init__(self, message: str, witness: Optional[tuple] = None):
        super().__init__(message)
        self.witness = witness


class NotLong(WorkbenchError):
    pass


class NotALoop(WorkbenchError):
    pass


class IllFormedFunctor(WorkbenchError):
    pass


class NotAChain(WorkbenchError):
    pass


class NotAlphaStable(WorkbenchError):
    """alpha * M_i is not contained in M_{i+1}."""

    def __init__(self, index: int, element: str):
        super().__init__(f"alpha * M_{index} not contained in M_{index + 1}: {element}")
        self.index = index
        self.element = element


class BudgetExhausted(WorkbenchError):
    """Search stopped before exhausting the candidate space."""

    def __init__(self, budget: int, expanded: int):
        super().__init__(f"search budget {budget} exhausted after {expanded} expansions")
        self.budget = budget
        self.expanded = expanded


class ParseError(WorkbenchError):
    """Line-numbered error from the algebra/diagram/chain file parser."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
