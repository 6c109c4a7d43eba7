"""
Structural predicates at the loop α: vanishing products and trivial
intersections of path-generated submodules of P_x, each with the flags of
the hypotheses under which it is expected to hold for mild algebras.
"""

import logging
from enum import Enum
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel, Field

from noloopwb.certifier.context import LoopContext
from noloopwb.raycat.contours import ray_of

logger = logging.getLogger(__name__)


class PredicateValue(str, Enum):
    TRUE = "true"
    FALSE = "false"
    NOT_APPLICABLE = "not-applicable"


class Predicate(BaseModel):
    name: str
    statement: str
    value: PredicateValue
    hypotheses: Dict[str, Optional[bool]] = Field(default_factory=dict)
    reason: str = Field(default="", description="Why the predicate is not applicable")

    @property
    def hypotheses_hold(self) -> bool:
        return all(v is True for v in self.hypotheses.values())

    @property
    def contradicts_hypotheses(self) -> bool:
        """Expected to hold here, evaluated false."""
        return self.hypotheses_hold and self.value == PredicateValue.FALSE


def _value(flag: bool) -> PredicateValue:
    return PredicateValue.TRUE if flag else PredicateValue.FALSE


def _not(flag: Optional[bool]) -> Optional[bool]:
    return None if flag is None else not flag


def _no_factorization(ctx: LoopContext, prefix: str, target: str) -> bool:
    """prefix·ρ ≠ target for every ray ρ of Λ(x)."""
    a = ctx.local
    goal = ray_of(a, a.quiver.parse_path(target))
    if goal is None:
        return True
    start = a.quiver.parse_path(prefix)
    for rho in a.paths:
        if rho.source != start.target:
            continue
        if ray_of(a, start.concat(rho)) == goal:
            return False
    return True


def _alpha_squared_kills(ctx: LoopContext) -> bool:
    """α²ρ = 0 for every basis path ρ at x outside {e_x, α, ..., α^{t-2}}."""
    a = ctx.local
    exempt = {a.quiver.trivial(ctx.vertex)}
    exempt |= {a.quiver.path([ctx.loop] * k) for k in range(1, (ctx.t or 2) - 1)}
    square = a.quiver.path([ctx.loop, ctx.loop])
    for rho in a.paths:
        if rho.source != ctx.vertex or rho in exempt:
            continue
        if not a.normal_form(square.concat(rho)).is_zero:
            return False
    return True


def evaluate_lemma_predicates(ctx: LoopContext) -> List[Predicate]:
    """Evaluate every predicate; those needing missing data come back not applicable."""
    c = ctx
    al, b, g, t = c.loop, c.beta1, c.gamma, c.t
    a2 = c.power(2)
    ab, ag = c.times(al, b), c.times(al, g)
    a2b, a2g = c.times(a2, b), c.times(a2, g)

    small_long = c.long_within(a2, ab, ag)
    power_long = c.long_within(c.power(t) if t else None, a2b)
    two_long = c.long_within(c.power(3), a2b)
    flags = {
        "standard": c.standard,
        "penny-farthing free": not c.has_penny_farthing,
        "t defined": t is not None,
    }

    predicates: List[Predicate] = []

    def add(name: str, statement: str, needs: List[Optional[str]], compute: Callable[[], bool], **hyp):
        hypotheses = dict(flags)
        hypotheses.update({k.replace("_", " "): v for k, v in hyp.items()})
        reason = ""
        if c.has_penny_farthing:
            reason = "penny-farthing present"
        elif t is None:
            reason = "no loop contour at x"
        elif any(n is None for n in needs):
            reason = "gamma undefined" if g is None else "beta1 undefined"
        if reason:
            predicates.append(
                Predicate(name=name, statement=statement, value=PredicateValue.NOT_APPLICABLE,
                          hypotheses=hypotheses, reason=reason)
            )
            return
        predicates.append(Predicate(name=name, statement=statement, value=_value(compute()), hypotheses=hypotheses))

    add("beta1-apart-from-alpha-beta1", "<β1> ∩ <αβ1> = 0", [b], lambda: c.apart([b], [ab]))
    add("alpha2-beta1-vanishes", "α²β1 = 0", [b], lambda: c.is_zero(a2b),
        t_at_least_3=t is not None and t >= 3, long_not_in_alpha3_alpha2beta1=_not(two_long))
    add("alpha2-beta1-apart-from-alpha-beta1", "<α²,β1> ∩ <αβ1> = 0", [b], lambda: c.apart([a2, b], [ab]),
        alpha2_apart_from_alpha_beta1=b is not None and c.apart([a2], [ab]),
        beta1_apart_from_alpha_beta1=b is not None and c.apart([b], [ab]))
    add("alpha2-kills-rays", "α²ρ = 0 for rays ρ outside e_x, α, ..., α^(t-2); <α²> ∩ <αβ1> = 0", [b],
        lambda: _alpha_squared_kills(c) and c.apart([a2], [ab]),
        two_arrows=len(c.x_plus) == 2, t_at_least_3=t is not None and t >= 3,
        long_not_in_alpha3_alpha2beta1=_not(two_long))
    add("alpha2-beta1-apart-two-arrows", "<α²,β1> ∩ <αβ1> = 0 (two arrows at x)", [b],
        lambda: c.apart([a2, b], [ab]),
        two_arrows=len(c.x_plus) == 2, t_at_least_3=t is not None and t >= 3,
        long_not_in_alpha3_alpha2beta1=_not(two_long))
    add("alpha-gamma-unreachable", "β1v ≠ αγ ≠ γw for all rays v, w", [b, g],
        lambda: _no_factorization(c, b, ag) and _no_factorization(c, g, ag),
        alpha_gamma_nonzero=g is not None and not c.is_zero(ag))
    add("alpha-gamma-vanishes", "αγ = 0", [g], lambda: c.is_zero(ag), t_at_least_3=t is not None and t >= 3)
    add("alpha-beta1-or-alpha-gamma-vanishes", "αβ1 = 0 or αγ = 0", [b, g],
        lambda: c.is_zero(ab) or c.is_zero(ag), long_not_in_degree_two=_not(small_long))
    add("gamma-misses-alpha-beta1", "γw ≠ αβ1 for all rays w", [b, g], lambda: _no_factorization(c, g, ab),
        alpha2_beta1_nonzero=b is not None and not c.is_zero(a2b))

    low = t == 2 or power_long is False
    add("alpha2-annihilates", "α²β1 = 0 = α²γ and α²ρ = 0 beyond α^(t-2)", [b, g],
        lambda: c.is_zero(a2b) and c.is_zero(a2g) and _alpha_squared_kills(c), t_two_or_long_not_in_powers=low)
    add("beta1-apart-from-alpha-gamma", "<β1> ∩ <αγ> = 0", [b, g], lambda: c.apart([b], [ag]),
        t_two_or_long_not_in_powers=low)
    add("gamma-apart-from-alpha2", "<γ> ∩ <β1> = 0 implies <γ> ∩ <α²> = 0", [b, g],
        lambda: not c.apart([g], [b]) or c.apart([g], [a2]), t_two_or_long_not_in_powers=low)
    add("gamma-apart-from-alpha-t-or-alpha-beta1", "<γ> ∩ <α^t> = 0 or <γ> ∩ <αβ1> = 0", [b, g],
        lambda: c.apart([g], [c.power(t)]) or c.apart([g], [ab]), t_two_or_long_not_in_powers=low)
    add("gamma-apart-from-alpha-beta1-or-beta1", "<γ> ∩ <αβ1> = 0 or <γ> ∩ <β1> = 0", [b, g],
        lambda: c.apart([g], [ab]) or c.apart([g], [b]), t_two_or_long_not_in_powers=low)
    add("alpha2-apart", "<αβ1> ∩ <α²> = 0 and <αγ> ∩ <α²> = 0", [b, g],
        lambda: c.apart([ab], [a2]) and c.apart([ag], [a2]), t_two_or_long_not_in_powers=low)
    add("gamma-apart-from-alpha-gamma", "<γ> ∩ <αγ> = 0", [g], lambda: c.apart([g], [ag]),
        long_not_in_degree_two=_not(small_long))

    beyond = _not(power_long) is True and _not(small_long) is True
    add("split-alpha-beta1", "αγ = 0 and <γ> ∩ <αβ1> = 0 imply <β1,γ,α²> ∩ <αβ1> = 0", [b, g],
        lambda: not (c.is_zero(ag) and c.apart([g], [ab])) or c.apart([b, g, a2], [ab]),
        long_beyond_both_sets=beyond)
    add("split-gamma-alpha-beta1", "αγ = 0 and <γ> ∩ <β1> = 0 imply <β1,α²> ∩ <γ,αβ1> = 0", [b, g],
        lambda: not (c.is_zero(ag) and c.apart([g], [b])) or c.apart([b, a2], [g, ab]),
        long_beyond_both_sets=beyond)
    add("split-alpha-gamma", "αβ1 = 0 implies <β1,γ,α²> ∩ <αγ> = 0", [b, g],
        lambda: not c.is_zero(ab) or c.apart([b, g, a2], [ag]),
        long_beyond_both_sets=beyond)

    predicates.extend(_general_predicates(c))
    logger.debug("%d predicates at %s", len(predicates), c.vertex)
    return predicates


def _general_predicates(c: LoopContext) -> List[Predicate]:
    """Predicates that do not need the loop contour."""
    a = c.local
    found = [pf for pf in c.penny_farthings if not pf.is_malformed]
    if found:
        base = Predicate(
            name="penny-farthing-at-x",
            statement="every penny-farthing has base vertex x",
            value=_value(all(pf.base_vertex == c.vertex for pf in found)),
            hypotheses={"penny-farthing present": True},
        )
    else:
        base = Predicate(
            name="penny-farthing-at-x",
            statement="every penny-farthing has base vertex x",
            value=PredicateValue.NOT_APPLICABLE,
            reason="no penny-farthing",
        )

    if c.multiplicative:
        independent = all(
            len({ray_of(a, p) for p in a.hom_space(u, v)}) == len(a.hom_space(u, v))
            for u in a.vertices
            for v in a.vertices
        )
        rays = Predicate(
            name="rays-independent",
            statement="distinct nonzero rays are linearly independent (#rays = dim e_u Λ e_v)",
            value=_value(independent),
            hypotheses={"standard": c.standard},
        )
    else:
        rays = Predicate(
            name="rays-independent",
            statement="distinct nonzero rays are linearly independent (#rays = dim e_u Λ e_v)",
            value=PredicateValue.NOT_APPLICABLE,
            reason="no multiplicative basis",
        )
    return [base, rays]


def predicate_map(predicates: List[Predicate]) -> Dict[str, PredicateValue]:
    return {p.name: p.value for p in predicates}
