"""
Named candidate α-filtrations instantiated from the loop data at x.
"""

import logging
from typing import Callable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from noloopwb.exceptions import WorkbenchError
from noloopwb.certifier.context import LoopContext
from noloopwb.homology.modules import (
    Submodule,
    kernel_of_left_multiplication,
    module_sum,
    whole,
    zero_submodule,
)

logger = logging.getLogger(__name__)


class ChainTemplate(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    shape: str
    terms: Tuple[Submodule, ...]

    def labels(self) -> List[str]:
        return [m.label for m in self.terms]


def _normalize(ctx: LoopContext, middle: List[Submodule]) -> Tuple[Submodule, ...]:
    """P_x, the given terms, 0; repeated neighbours collapsed."""
    terms = [whole(ctx.px)]
    for m in middle + [zero_submodule(ctx.px)]:
        if not m.same_as(terms[-1]):
            terms.append(m)
    return tuple(terms)


def _powers_from(ctx: LoopContext, k: int) -> List[Submodule]:
    """⟨α^k⟩, ⟨α^{k+1}⟩, ... while nonzero."""
    terms = []
    while not ctx.is_zero(ctx.power(k)):
        terms.append(ctx.sub(ctx.power(k)))
        k += 1
    return terms


def powers(ctx: LoopContext) -> List[Submodule]:
    return _powers_from(ctx, 1)


def kernel_chain(ctx: LoopContext) -> List[Submodule]:
    """⟨α,β₁⟩ ⊃ ⟨β₁⟩⊕⟨αβ₁⟩ ⊃ ⟨αβ₁⟩⊕K ⊃ K with K = ker(λ_α: ⟨β₁⟩ -> ⟨αβ₁⟩)."""
    b, ab = ctx.beta1, ctx.times(ctx.loop, ctx.beta1)
    kernel = kernel_of_left_multiplication(ctx.algebra, ctx.loop, ctx.sub(b)).with_generators(["K"])
    return [
        ctx.sub(ctx.loop, b),
        ctx.sub(b, ab),
        module_sum(ctx.sub(ab), kernel),
        kernel,
    ]


def two_arrow_powers(ctx: LoopContext) -> List[Submodule]:
    """⟨α,β₁⟩ ⊃ ⟨α²⟩⊕⟨αβ₁⟩ ⊃ ⟨α³⟩ ⊃ ... ⊃ ⟨α^t⟩."""
    return [
        ctx.sub(ctx.loop, ctx.beta1),
        ctx.sub(ctx.power(2), ctx.times(ctx.loop, ctx.beta1)),
    ] + _powers_from(ctx, 3)


def loop_and_gamma(ctx: LoopContext) -> List[Submodule]:
    """⟨α,γ⟩ ⊃ ⟨α², αγ⟩."""
    return [ctx.sub(ctx.loop, ctx.gamma), ctx.sub(ctx.power(2), ctx.times(ctx.loop, ctx.gamma))]


def _three_arrow(second: Callable[[LoopContext], List[str]]) -> Callable[[LoopContext], List[Submodule]]:
    def build(ctx: LoopContext) -> List[Submodule]:
        return [ctx.sub(ctx.loop, ctx.beta1, ctx.gamma), ctx.sub(*second(ctx))] + _powers_from(ctx, 3)

    return build


three_arrow_alpha_gamma = _three_arrow(lambda c: [c.power(2), c.times(c.loop, c.gamma)])
three_arrow_alpha_beta1 = _three_arrow(lambda c: [c.power(2), c.times(c.loop, c.beta1)])
three_arrow_gamma_alpha_beta1 = _three_arrow(lambda c: [c.power(2), c.gamma, c.times(c.loop, c.beta1)])


_TEMPLATES: List[Tuple[str, str, Callable[[LoopContext], bool], Callable[[LoopContext], List[Submodule]]]] = [
    ("powers", "P_x ⊃ <α> ⊃ <α²> ⊃ ... ⊃ 0", lambda c: True, powers),
    (
        "two-arrows/kernel",
        "P_x ⊃ <α,β1> ⊃ <β1>+<αβ1> ⊃ <αβ1>+K ⊃ K ⊃ 0",
        lambda c: len(c.x_plus) == 2 and c.beta1 is not None and c.t == 2,
        kernel_chain,
    ),
    (
        "two-arrows/powers",
        "P_x ⊃ <α,β1> ⊃ <α²>+<αβ1> ⊃ <α³> ⊃ ... ⊃ 0",
        lambda c: len(c.x_plus) == 2 and c.beta1 is not None,
        two_arrow_powers,
    ),
    (
        "three-arrows/loop-and-gamma",
        "P_x ⊃ <α,γ> ⊃ <α²,αγ> ⊃ 0",
        lambda c: c.gamma is not None,
        loop_and_gamma,
    ),
    (
        "three-arrows/alpha-gamma",
        "P_x ⊃ <α,β1,γ> ⊃ <α²>+<αγ> ⊃ <α³> ⊃ ... ⊃ 0",
        lambda c: c.gamma is not None,
        three_arrow_alpha_gamma,
    ),
    (
        "three-arrows/alpha-beta1",
        "P_x ⊃ <α,β1,γ> ⊃ <α²>+<αβ1> ⊃ <α³> ⊃ ... ⊃ 0",
        lambda c: c.gamma is not None,
        three_arrow_alpha_beta1,
    ),
    (
        "three-arrows/gamma-alpha-beta1",
        "P_x ⊃ <α,β1,γ> ⊃ <α²>+<γ,αβ1> ⊃ <α³> ⊃ ... ⊃ 0",
        lambda c: c.gamma is not None,
        three_arrow_gamma_alpha_beta1,
    ),
]

TEMPLATE_NAMES = tuple(name for name, _, _, _ in _TEMPLATES)


def template_filtrations(ctx: LoopContext, prefer: Optional[str] = None) -> List[ChainTemplate]:
    """Every template whose data is available, the preferred one first."""
    chains = []
    for name, shape, applies, build in _TEMPLATES:
        if not applies(ctx):
            continue
        try:
            terms = _normalize(ctx, build(ctx))
        except WorkbenchError as e:
            logger.debug("template %s not instantiated: %s", name, e)
            continue
        chains.append(ChainTemplate(name=name, shape=shape, terms=terms))
    if prefer is not None:
        chains.sort(key=lambda c: c.name != prefer)
    return chains
