"""
Branch selection at a loop: which family of filtrations the structure at x
points to, and the template to try first.
"""

from typing import Optional, Tuple

from noloopwb.certifier.context import LoopContext


def choose_branch(ctx: LoopContext) -> Tuple[str, Optional[str]]:
    """(branch name, preferred template or None)."""
    if ctx.has_penny_farthing:
        return "penny-farthing", "powers"
    if not ctx.standard or ctx.t is None or ctx.beta1 is None:
        return "generic", None

    al, b = ctx.loop, ctx.beta1
    ab = ctx.times(al, b)
    if len(ctx.x_plus) == 2:
        if ctx.long_within(ctx.power(3), ctx.times(ctx.power(2), b)) is True:
            return "two-arrows/small-long-set", "powers"
        if ctx.t == 2:
            return "two-arrows/kernel", "two-arrows/kernel"
        return "two-arrows/powers", "two-arrows/powers"

    if len(ctx.x_plus) == 3 and ctx.gamma is not None:
        g = ctx.gamma
        ag = ctx.times(al, g)
        if ctx.long_within(ctx.power(2), ab, ag) is True:
            return "three-arrows/long-set-in-degree-two", "three-arrows/loop-and-gamma"
        if ctx.long_within(ctx.power(ctx.t), ctx.times(ctx.power(2), b)) is True:
            return "three-arrows/long-set-powers", "powers"
        if ctx.is_zero(ab):
            return "three-arrows/alpha-beta1-zero", "three-arrows/alpha-gamma"
        if ctx.apart([g], [ab]):
            return "three-arrows/gamma-apart-from-alpha-beta1", "three-arrows/alpha-beta1"
        if ctx.apart([g], [b]):
            return "three-arrows/gamma-apart-from-beta1", "three-arrows/gamma-alpha-beta1"
        return "three-arrows/unresolved", None

    return "generic", None
