import pytest
from hypothesis import given

from noloopwb.exceptions import NotLong
from noloopwb.raycat import (
    build_ray_category,
    check_associativity,
    check_cancellation,
    contours,
    interlaced,
    quotient_by_ray,
    verify_multiplicative_basis,
)
from tests.strategies import monomial_algebras


def test_uniserial_loop_category(loopnil3):
    rc = build_ray_category(loopnil3)
    assert [r.label for r in rc.rays] == ["e_x", "alpha", "alpha.alpha"]
    assert [r.label for r in rc.long_morphisms()] == ["alpha.alpha"]
    assert rc.is_irreducible(rc.ray("alpha"))
    assert rc.compose(rc.ray("alpha"), rc.ray("alpha.alpha")) is None
    assert check_cancellation(rc).ok


def test_quotient_removes_only_the_long_ray(loopnil3):
    rc = build_ray_category(loopnil3)
    smaller = quotient_by_ray(rc, "alpha.alpha")
    assert [r.label for r in smaller.rays] == ["e_x", "alpha"]
    assert smaller.compose(smaller.ray("alpha"), smaller.ray("alpha")) is None
    assert smaller.long_morphisms() == []


def test_quotient_by_a_short_ray_is_refused(loopnil3):
    rc = build_ray_category(loopnil3)
    with pytest.raises(NotLong):
        quotient_by_ray(rc, "alpha")


def test_rays_match_hom_spaces(example1):
    rc = build_ray_category(example1)
    for x in example1.vertices:
        for y in example1.vertices:
            assert len(rc.rays_between(x, y)) == len(example1.hom_space(x, y))


def test_equal_paths_share_a_ray(example1):
    rc = build_ray_category(example1)
    assert rc.ray("beta1.beta2.beta3") == rc.ray("alpha.alpha")
    assert rc.ray("alpha.gamma1") is None
    assert verify_multiplicative_basis(example1).ok


def test_loop_contour_in_example1(example1):
    found = [c for c in contours(example1, 4) if c.loop == "alpha"]
    assert found
    first = found[0]
    assert first.power == 2
    assert first.v.label == "alpha.alpha"
    assert first.w.label == "beta1.beta2.beta3"
    assert not interlaced(example1, first.v, first.w)


def test_no_contours_without_parallel_paths(loopnil3):
    assert contours(loopnil3, 2) == []


def test_contour_length_is_bounded(loopnil3):
    with pytest.raises(ValueError):
        contours(loopnil3, 4)


@given(monomial_algebras())
def test_monomial_ray_categories_are_well_behaved(a):
    rc = build_ray_category(a)
    assert len(rc.rays) == a.dimension
    assert check_associativity(rc).ok
    assert check_cancellation(rc).ok
