import pytest
from hypothesis import given

from noloopwb.exceptions import AmbientMismatch
from noloopwb.homology import (
    composition_factors,
    euler_characteristic,
    intersect,
    kernel_of_left_multiplication,
    left_multiply_submodule,
    loop_count,
    module_sum,
    projective,
    projective_cover,
    projective_dimension,
    quotient,
    radical,
    radical_layers,
    simple,
    submodule_generated,
    top,
)
from tests.strategies import monomial_algebras, random_algebra_runs


def test_simple_pd_of_a2(a2):
    assert str(projective_dimension(simple(a2, "x"), 10)) == "Finite(1)"
    assert str(projective_dimension(simple(a2, "y"), 10)) == "Finite(0)"


def test_kronecker_resolution(kronecker):
    report = projective_dimension(simple(kronecker, "x"), 10)
    assert report.is_finite and report.value == 1
    assert report.cover_dimension_vectors == [{"x": 1, "y": 2}, {"x": 0, "y": 2}]
    assert euler_characteristic(report) == {"x": 1, "y": 0}


def test_loop_gives_periodic_syzygies(loopnil2):
    report = projective_dimension(simple(loopnil2, "x"), 5)
    assert not report.is_finite
    assert report.value == 5
    assert report.period == 1
    assert report.periodic_from == 0


def test_negative_depth_is_rejected(a2):
    with pytest.raises(ValueError):
        projective_dimension(simple(a2, "x"), -1)


def test_loewy_layers_of_uniserial_projective(loopnil3):
    px = projective(loopnil3, "x")
    assert radical_layers(px) == [["x"], ["x"], ["x"]]
    assert top(px) == ["x"]
    assert composition_factors(px) == ["x", "x", "x"]
    assert loop_count(loopnil3, "x") == 1


def test_example1_submodules(example1):
    px = projective(example1, "x")
    b1 = submodule_generated(px, ["beta1"])
    g1 = submodule_generated(px, ["gamma1"])
    a2 = submodule_generated(px, ["alpha.alpha"])
    assert b1.dim == 3
    assert g1.dim == 2
    assert intersect(b1, g1).is_zero()
    assert intersect(a2, g1).is_zero()
    assert module_sum(b1, g1).dim == 5


def test_alpha_times_submodule(example1):
    px = projective(example1, "x")
    alpha_gamma = submodule_generated(px, ["alpha", "gamma1"])
    image = left_multiply_submodule(example1, "alpha", alpha_gamma)
    assert image.key == submodule_generated(px, ["alpha.alpha"]).key


def test_kernel_of_alpha(example1):
    px = projective(example1, "x")
    b1 = submodule_generated(px, ["beta1"])
    kernel = kernel_of_left_multiplication(example1, "alpha", b1)
    assert kernel.dim == 2
    assert kernel.contains(px.vector_of("beta1.beta2"))
    assert kernel.contains(px.vector_of("alpha.alpha"))


def test_quotient_dimension(example1):
    px = projective(example1, "x")
    assert submodule_generated(px, ["alpha"]).dim == 3
    assert quotient(px, submodule_generated(px, ["alpha"])).dim == 4


def test_submodules_of_different_modules_do_not_mix(example1):
    first = submodule_generated(projective(example1, "x"), ["alpha"])
    second = submodule_generated(projective(example1, "y1"), ["beta2"])
    with pytest.raises(AmbientMismatch):
        intersect(first, second)


@random_algebra_runs
@given(monomial_algebras())
def test_euler_characteristic_of_finite_resolutions(a):
    for v in a.vertices:
        s = simple(a, v)
        report = projective_dimension(s, 6)
        if report.is_finite:
            assert euler_characteristic(report) == s.dimension_vector()


@random_algebra_runs
@given(monomial_algebras())
def test_syzygies_lie_in_the_radical_of_the_cover(a):
    for v in a.vertices:
        current = simple(a, v)
        for _ in range(3):
            cover = projective_cover(current)
            kernel = cover.kernel()
            assert radical(cover.module).contains_submodule(kernel)
            if kernel.is_zero():
                break
            current = kernel.to_module()
