"""
Ray categories of standard presentations.

Rays are realized as scalar classes of basis paths: for a presentation with a
multiplicative basis each product of basis paths is zero or a nonzero multiple
of one basis path, so composing rays is a table lookup.
"""

import logging
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from noloopwb.algebra.basis import AlgebraBasis
from noloopwb.algebra.quiver import Path
from noloopwb.exceptions import NonStandardPresentation, NotLong
from noloopwb.models import CheckResult

logger = logging.getLogger(__name__)


class Ray(BaseModel):
    """Class of a basis path up to nonzero scalars."""

    model_config = ConfigDict(frozen=True)

    representative: Path

    @property
    def source(self) -> str:
        return self.representative.source

    @property
    def target(self) -> str:
        return self.representative.target

    @property
    def is_identity(self) -> bool:
        return self.representative.is_trivial

    @property
    def label(self) -> str:
        return self.representative.label

    def __str__(self) -> str:
        return self.label


def verify_multiplicative_basis(a: AlgebraBasis) -> CheckResult:
    """Every product of basis paths is 0 or a scalar multiple of one basis path."""
    for (p, q), terms in a.products.items():
        if len(terms) > 1:
            return CheckResult.failed(
                [p.label, q.label],
                f"{p.label}·{q.label} = {a.format(a.multiply(a.element(p), a.element(q)))}",
            )
    return CheckResult.passed()


class RayCategory(BaseModel):
    """Objects, nonzero rays and the composition-with-zero table."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    algebra: AlgebraBasis
    rays: Tuple[Ray, ...] = Field(description="Nonzero rays, identities included, in path order")
    table: Dict[Tuple[Path, Path], Optional[Path]] = Field(
        description="(μ, ν) -> representative of μν, or None for zero; composable pairs only"
    )
    irreducible: FrozenSet[Path] = Field(description="Rays with representative in J \\ J²")
    long: FrozenSet[Path] = Field(description="The long morphisms ℒ")
    removed: FrozenSet[Path] = Field(default=frozenset(), description="Rays set to zero by quotients")

    _by_rep: Dict[Path, Ray] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        self._by_rep = {r.representative: r for r in self.rays}

    @property
    def objects(self) -> Tuple[str, ...]:
        return self.algebra.vertices

    def ray(self, rep: Union[Path, str, Ray]) -> Optional[Ray]:
        """Ray of a path (any path, normalized first); None when it is zero."""
        if isinstance(rep, Ray):
            rep = rep.representative
        if isinstance(rep, str):
            rep = self.algebra.quiver.parse_path(rep)
        if rep in self._by_rep:
            return self._by_rep[rep]
        single = self.algebra.normal_form(rep).single()
        if single is None:
            return None
        return self._by_rep.get(single[0])

    def rays_between(self, x: str, y: str) -> List[Ray]:
        return [r for r in self.rays if r.source == x and r.target == y]

    def compose(self, mu: Optional[Ray], nu: Optional[Ray]) -> Optional[Ray]:
        """μν (μ first, then ν); None stands for the zero morphism."""
        if mu is None or nu is None or mu.target != nu.source:
            return None
        rep = self.table.get((mu.representative, nu.representative))
        return None if rep is None else self._by_rep[rep]

    def is_irreducible(self, ray: Ray) -> bool:
        return ray.representative in self.irreducible

    def is_long(self, ray: Ray) -> bool:
        return ray.representative in self.long

    def non_isomorphisms(self) -> List[Ray]:
        return [r for r in self.rays if not r.is_identity]

    def long_morphisms(self) -> List[Ray]:
        return [self._by_rep[p] for p in sorted(self.long, key=self.algebra.quiver.path_key)]


def _long_set(rays: Tuple[Ray, ...], table, irreducible) -> FrozenSet[Path]:
    by_rep = {r.representative: r for r in rays}
    non_iso = [r for r in rays if not r.is_identity]

    def composes_to_zero(mu: Ray, nu: Ray) -> bool:
        rep = table.get((mu.representative, nu.representative))
        return rep is None or rep not in by_rep

    long = set()
    for eta in non_iso:
        if eta.representative in irreducible:
            continue
        left = all(composes_to_zero(nu, eta) for nu in non_iso if nu.target == eta.source)
        right = all(composes_to_zero(eta, nu) for nu in non_iso if nu.source == eta.target)
        if left and right:
            long.add(eta.representative)
    return frozenset(long)


def build_ray_category(a: AlgebraBasis) -> RayCategory:
    check = verify_multiplicative_basis(a)
    if not check.ok:
        raise NonStandardPresentation(
            f"no multiplicative basis: {check.message}", witness=tuple(check.witness)
        )
    rays = tuple(Ray(representative=p) for p in a.paths)
    table: Dict[Tuple[Path, Path], Optional[Path]] = {}
    for (p, q), terms in a.products.items():
        table[(p, q)] = next(iter(terms)) if terms else None

    square = a.radical_power_basis(2)
    irreducible = frozenset(
        p for p in a.paths if not p.is_trivial and not a.in_span(a.element(p), square)
    )
    long = _long_set(rays, table, irreducible)
    logger.debug("%s: %d rays, %d irreducible, %d long", a.name, len(rays), len(irreducible), len(long))
    return RayCategory(algebra=a, rays=rays, table=table, irreducible=irreducible, long=long)


def quotient_by_ray(rc: RayCategory, eta: Union[Ray, Path, str]) -> RayCategory:
    """A⃗/η: the long morphism η becomes zero, nothing else changes."""
    ray = rc.ray(eta)
    if ray is None or not rc.is_long(ray):
        raise NotLong(f"{eta} is not a long morphism")
    dead = ray.representative
    rays = tuple(r for r in rc.rays if r.representative != dead)
    table = {
        k: (None if v == dead else v)
        for k, v in rc.table.items()
        if dead not in k
    }
    long = _long_set(rays, table, rc.irreducible)
    return RayCategory(
        algebra=rc.algebra,
        rays=rays,
        table=table,
        irreducible=rc.irreducible,
        long=long,
        removed=rc.removed | {dead},
    )


def check_cancellation(rc: RayCategory) -> CheckResult:
    """λμκ = λνκ ≠ 0 forces μ = ν, checked over every composable quadruple."""
    for mu, nu in product(rc.rays, repeat=2):
        if mu == nu or (mu.source, mu.target) != (nu.source, nu.target):
            continue
        for lam in rc.rays:
            if lam.target != mu.source:
                continue
            lam_mu = rc.compose(lam, mu)
            lam_nu = rc.compose(lam, nu)
            if lam_mu is None or lam_nu is None:
                continue
            for kappa in rc.rays:
                if kappa.source != mu.target:
                    continue
                left = rc.compose(lam_mu, kappa)
                if left is not None and left == rc.compose(lam_nu, kappa):
                    return CheckResult.failed(
                        [lam.label, mu.label, nu.label, kappa.label],
                        f"{lam}·{mu}·{kappa} = {lam}·{nu}·{kappa} = {left} with {mu} != {nu}",
                    )
    return CheckResult.passed()


def check_associativity(rc: RayCategory) -> CheckResult:
    for mu in rc.rays:
        for nu in rc.rays:
            if mu.target != nu.source:
                continue
            mu_nu = rc.compose(mu, nu)
            for kappa in rc.rays:
                if nu.target != kappa.source:
                    continue
                if rc.compose(mu_nu, kappa) != rc.compose(mu, rc.compose(nu, kappa)):
                    return CheckResult.failed([mu.label, nu.label, kappa.label], "composition is not associative")
    return CheckResult.passed()
