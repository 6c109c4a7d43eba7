"""
α-filtrations of P_x: verification, the lattice of path-generated
submodules, exhaustive chain enumeration and the budgeted search.

A chain P_x = M_0 ⊃ M_1 ⊃ ... ⊃ M_n = 0 is an α-filtration when
α·M_i ⊆ M_{i+1} for every i, α acting by left multiplication. It has finite
projective dimension when every interior term M_1 ... M_{n-1} does.
"""

import logging
from typing import Dict, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from noloopwb.algebra.basis import AlgebraBasis
from noloopwb.config import WorkbenchConfig
from noloopwb.exceptions import BudgetExhausted, NotAChain, NotALoop, NotAlphaStable
from noloopwb.homology.modules import (
    RightModule,
    Submodule,
    left_multiply_submodule,
    module_sum,
    projective,
    submodule_generated,
    whole,
    zero_submodule,
)
from noloopwb.homology.resolution import PdReport, projective_dimension

logger = logging.getLogger(__name__)


class AlphaFiltration(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ambient: RightModule = Field(description="P_x")
    loop: str
    terms: Tuple[Submodule, ...] = Field(description="M_0 = P_x, ..., M_n = 0")

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def labels(self) -> List[str]:
        return [m.label for m in self.terms]

    def describe(self) -> str:
        return " ⊃ ".join(self.labels())


class TermReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    index: int
    label: str
    dim: int
    pd: PdReport


class FiltrationCertificate(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    filtration: AlphaFiltration
    depth: int
    reports: List[TermReport] = Field(default_factory=list, description="One report per interior term")
    verdict: Literal["all-finite", "inconclusive"]

    @property
    def all_finite(self) -> bool:
        return self.verdict == "all-finite"

    def describe(self) -> str:
        tag = "AllFinite" if self.all_finite else "Inconclusive"
        return f"{tag}({self.depth})"


def check_loop(a: AlgebraBasis, x: str, alpha: str) -> None:
    arrow = a.quiver.arrow(alpha)
    if not arrow.is_loop or arrow.source != a.check_vertex(x):
        raise NotALoop(f"{alpha} is not a loop at {x}")


def _alpha_image(a: AlgebraBasis, alpha: str, m: Submodule) -> Submodule:
    return left_multiply_submodule(a, alpha, m)


def check_alpha_stable(a: AlgebraBasis, alpha: str, chain: Sequence[Submodule]) -> None:
    """Raise NotAlphaStable at the first i with α·M_i ⊄ M_{i+1}."""
    for i in range(len(chain) - 1):
        image = _alpha_image(a, alpha, chain[i])
        for row in image.rows:
            if not chain[i + 1].contains(row):
                raise NotAlphaStable(i, chain[i].ambient.format_vector(row))


def chain_from_generators(a: AlgebraBasis, x: str, terms: Sequence[Sequence[str]]) -> List[Submodule]:
    """Submodules of P_x from generator lists; `e_x` is P_x itself and `0` the zero module."""
    px = projective(a, x)
    chain = []
    for generators in terms:
        generators = list(generators)
        if generators == ["0"]:
            chain.append(zero_submodule(px))
        elif generators == [f"e_{x}"]:
            chain.append(whole(px))
        else:
            chain.append(submodule_generated(px, [a.element(g) for g in generators], labels=generators))
    return chain


def verify_alpha_filtration(
    a: AlgebraBasis,
    x: str,
    alpha: str,
    chain: Sequence[Submodule],
    depth: Optional[int] = None,
) -> FiltrationCertificate:
    """Check the chain shape, α-stability and the pd of the interior terms."""
    check_loop(a, x, alpha)
    depth = WorkbenchConfig.PD_DEPTH if depth is None else depth
    if len(chain) < 2:
        raise NotAChain("a filtration needs at least P_x and 0")
    px = chain[0].ambient
    if px.projective_vertex != x or chain[0].dim != px.dim:
        raise NotAChain(f"the first term must be P_{x}")
    if not chain[-1].is_zero():
        raise NotAChain("the last term must be 0")
    for i in range(len(chain) - 1):
        upper, lower = chain[i], chain[i + 1]
        foreign = lower.ambient is not px and lower.ambient != px
        if foreign or not upper.contains_submodule(lower) or upper.dim == lower.dim:
            raise NotAChain(f"M_{i} = {upper.label} does not strictly contain M_{i + 1} = {lower.label}")
    check_alpha_stable(a, alpha, chain)

    reports = []
    for i, term in enumerate(chain[1:-1], start=1):
        report = projective_dimension(term.to_module(), depth)
        reports.append(TermReport(index=i, label=term.label, dim=term.dim, pd=report))
    verdict = "all-finite" if all(r.pd.is_finite for r in reports) else "inconclusive"
    filtration = AlphaFiltration(ambient=px, loop=alpha, terms=tuple(chain))
    logger.debug("%s: %s", filtration.describe(), verdict)
    return FiltrationCertificate(filtration=filtration, depth=depth, reports=reports, verdict=verdict)


def path_generated_submodules(px: RightModule) -> List[Submodule]:
    """Every submodule generated by a set of basis paths, ordered by (dim desc, generators).

    Each submodule keeps the first generator set found with the fewest paths.
    """
    paths = list(px.basis_paths)
    zero = zero_submodule(px)
    found: Dict[Tuple, Submodule] = {zero.key: zero}
    index: Dict[Tuple, Tuple[int, ...]] = {zero.key: ()}
    cyclic = [submodule_generated(px, [p]) for p in paths]
    layer = [zero]
    while layer:
        nxt = []
        for s in layer:
            used = index[s.key]
            for k in range(len(paths)):
                if s.contains(px.vector_of(paths[k])):
                    continue
                t = module_sum(s, cyclic[k]) if not s.is_zero() else cyclic[k]
                if t.key in found:
                    continue
                gens = tuple(sorted(used + (k,)))
                index[t.key] = gens
                t = t.with_generators([paths[j].label for j in gens])
                found[t.key] = t
                nxt.append(t)
        layer = nxt
    return sorted(found.values(), key=lambda s: (-s.dim, index[s.key]))


class _PdCache:
    def __init__(self, depth: Optional[int]):
        self.depth = depth
        self.reports: Dict[Tuple, PdReport] = {}

    def finite(self, m: Submodule) -> bool:
        if self.depth is None:
            return True
        if m.key not in self.reports:
            self.reports[m.key] = projective_dimension(m.to_module(), self.depth)
        return self.reports[m.key].is_finite


def _successors(a: AlgebraBasis, alpha: str, m: Submodule, lattice: List[Submodule]) -> List[Submodule]:
    image = _alpha_image(a, alpha, m)
    return [
        s for s in lattice
        if s.dim < m.dim and m.contains_submodule(s) and s.contains_submodule(image)
    ]


def enumerate_alpha_chains(
    a: AlgebraBasis,
    alpha: str,
    top: Submodule,
    depth: Optional[int] = None,
    limit: int = 10000,
) -> List[List[Submodule]]:
    """All α-stable strict chains top ⊃ ... ⊃ 0 through path-generated submodules.

    With a depth, terms strictly between top and 0 must have Finite pd at that depth.
    """
    px = top.ambient
    check_loop(a, px.projective_vertex, alpha)
    lattice = [s for s in path_generated_submodules(px) if top.contains_submodule(s)]
    pd = _PdCache(depth)
    chains: List[List[Submodule]] = []

    def walk(chain: List[Submodule]) -> None:
        if len(chains) >= limit:
            return
        current = chain[-1]
        if current.is_zero():
            chains.append(list(chain))
            return
        for s in _successors(a, alpha, current, lattice):
            if not s.is_zero() and not pd.finite(s):
                continue
            chain.append(s)
            walk(chain)
            chain.pop()

    walk([top])
    return chains


def search_alpha_filtration(
    a: AlgebraBasis,
    x: str,
    alpha: str,
    depth: Optional[int] = None,
    budget: Optional[int] = None,
) -> Optional[AlphaFiltration]:
    """Depth-first search for an α-filtration of P_x whose interior terms have Finite pd.

    Successors are tried by dimension descending, then by generator set. Returns
    None when the space is exhausted; raises BudgetExhausted when it is not.
    """
    check_loop(a, x, alpha)
    depth = WorkbenchConfig.PD_DEPTH if depth is None else depth
    budget = WorkbenchConfig.SEARCH_BUDGET if budget is None else budget
    px = projective(a, x)
    lattice = path_generated_submodules(px)
    pd = _PdCache(depth)
    dead = set()
    expanded = 0

    def walk(chain: List[Submodule]) -> bool:
        nonlocal expanded
        current = chain[-1]
        if current.is_zero():
            return True
        if current.key in dead:
            return False
        expanded += 1
        if expanded > budget:
            raise BudgetExhausted(budget, expanded - 1)
        for s in _successors(a, alpha, current, lattice):
            if not s.is_zero() and not pd.finite(s):
                continue
            chain.append(s)
            if walk(chain):
                return True
            chain.pop()
        dead.add(current.key)
        return False

    start = whole(px)
    chain = [start]
    found = walk(chain)
    logger.info("filtration search at %s: %d expansions, %s", x, expanded, "found" if found else "none")
    if not found:
        return None
    return AlphaFiltration(ambient=px, loop=alpha, terms=tuple(chain))
