import pytest
from hypothesis import given

from noloopwb.algebra import (
    RATIONALS,
    Arrow,
    Binomial,
    FieldSpec,
    Monomial,
    Presentation,
    Quiver,
    build_algebra,
    prime_field,
)
from noloopwb.corpus import get_entry
from noloopwb.exceptions import EmptyQuiver, MalformedPresentation, NotAdmissible
from noloopwb.homology import projective
from tests.strategies import monomial_algebras


def loop_quiver():
    return Quiver(vertices=("x",), arrows=(Arrow(name="alpha", source="x", target="x"),))


def test_dimensions_of_small_algebras(a2, kronecker, loopnil2, loopnil3):
    assert a2.dimension == 3
    assert kronecker.dimension == 4
    assert loopnil2.dimension == 2
    assert loopnil3.dimension == 3


def test_example1_projective_basis(example1):
    labels = set(projective(example1, "x").labels)
    assert labels == {"e_x", "alpha", "beta1", "gamma1", "alpha.alpha", "alpha.beta1", "beta1.beta2"}


def test_binomials_keep_the_smaller_path(example1):
    assert example1.element("beta1.beta2.beta3") == example1.element("alpha.alpha")
    assert example1.element("gamma1.gamma2") == example1.element("alpha.beta1")


def test_zero_relations_and_products(example1):
    assert example1.element("alpha.gamma1").is_zero
    assert example1.product("alpha", "alpha") == example1.element("alpha.alpha")
    assert example1.product("beta1", "beta2", "beta3") == example1.element("alpha.alpha")


def test_idempotents_are_orthogonal(a2):
    ex, ey = a2.idempotent("x"), a2.idempotent("y")
    assert a2.multiply(ex, ey).is_zero
    assert a2.multiply(ex, ex) == ex
    assert a2.multiply(a2.one(), a2.element("a")) == a2.element("a")


def test_loop_without_relations_is_not_admissible():
    p = Presentation(name="free-loop", quiver=loop_quiver(), bound=2)
    with pytest.raises(NotAdmissible):
        build_algebra(p)


def test_relation_of_length_one_is_rejected():
    q = loop_quiver()
    p = Presentation(quiver=q, relations=(Monomial(path=q.path(["alpha"])),), bound=2)
    with pytest.raises(NotAdmissible):
        build_algebra(p)


def test_malformed_inputs():
    with pytest.raises(MalformedPresentation):
        FieldSpec(kind="prime", prime=4)
    with pytest.raises(MalformedPresentation):
        Quiver(vertices=("x",), arrows=(Arrow(name="a", source="x", target="y"),))
    with pytest.raises(EmptyQuiver):
        Quiver(vertices=())
    with pytest.raises(MalformedPresentation):
        Presentation(quiver=loop_quiver(), bound=1)


def test_prime_field_coefficients():
    f = prime_field(3)
    assert f.characteristic == 3
    assert f.format(f.scalar(4)) == "1"
    assert f.format(f.scalar("1/2")) == "2"
    with pytest.raises(ValueError):
        f.scalar("1/3")


@given(monomial_algebras())
def test_products_of_basis_paths_stay_in_the_basis(a):
    for p in a.paths:
        for q in a.paths:
            if p.target != q.source:
                continue
            product = a.product(p, q)
            assert len(product.terms) <= 1
            for path in product.terms:
                assert a.is_basis_path(path)


@given(monomial_algebras())
def test_dimension_is_sum_of_projectives(a):
    assert a.dimension == sum(projective(a, v).dim for v in a.vertices)


def test_bound_must_kill_the_long_side_of_a_binomial():
    q = Quiver(
        vertices=("x", "y"),
        arrows=(
            Arrow(name="a", source="x", target="x"),
            Arrow(name="c", source="x", target="y"),
            Arrow(name="d", source="y", target="x"),
        ),
    )
    relations = (
        Binomial(left=q.path(["a", "a", "a"]), right=q.path(["c", "d"]), coefficient=RATIONALS.one),
        Monomial(path=q.path(["a", "c"])),
        Monomial(path=q.path(["d", "a"])),
        Monomial(path=q.path(["c", "d", "c"])),
        Monomial(path=q.path(["d", "c", "d"])),
    )
    with pytest.raises(NotAdmissible):
        build_algebra(Presentation(name="a3-equals-cd", quiver=q, relations=relations, bound=3))


def composable_triples(a):
    for p in a.paths:
        for q in a.paths:
            if q.source != p.target:
                continue
            for r in a.paths:
                if r.source == q.target:
                    yield p, q, r


def assert_associative(a):
    for p, q, r in composable_triples(a):
        left = a.multiply(a.multiply(a.element(p), a.element(q)), a.element(r))
        right = a.multiply(a.element(p), a.multiply(a.element(q), a.element(r)))
        assert left == right, f"({p.label}·{q.label})·{r.label} != {p.label}·({q.label}·{r.label})"


def assert_same_based_algebra(a, b):
    assert [p.label for p in b.paths] == [p.label for p in a.paths]
    for p in a.paths:
        for q in a.paths:
            if p.target == q.source:
                assert b.format(b.product(p, q)) == a.format(a.product(p, q))


@pytest.mark.parametrize("name", ["example1", "example2-ambient", "l34-witness", "pf-case-3", "pf2-type2"])
def test_binomial_algebras_are_associative(name):
    assert_associative(get_entry(name).algebra())


@given(monomial_algebras(max_vertices=3, max_arrows=4))
def test_monomial_algebras_are_associative(a):
    assert_associative(a)


@pytest.mark.parametrize("name", ["example1", "pf-case-1", "pf2-type2", "loopnil3"])
def test_raising_the_bound_changes_nothing(name):
    a = get_entry(name).algebra()
    assert_same_based_algebra(a, build_algebra(a.presentation.with_bound(a.bound + 1)))


@given(monomial_algebras())
def test_raising_the_bound_of_random_algebras_changes_nothing(a):
    assert_same_based_algebra(a, build_algebra(a.presentation.with_bound(a.bound + 1)))
