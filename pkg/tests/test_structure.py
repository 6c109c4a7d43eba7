import pytest
from hypothesis import given, strategies as st

from noloopwb.algebra import Arrow, Binomial, Monomial, Presentation, Quiver, build_algebra
from noloopwb.corpus import get_entry
from noloopwb.exceptions import NotALoop
from noloopwb.structure import (
    arrows_from,
    check_distributive,
    contour_partner,
    detect_penny_farthings,
    minimal_loop_contour,
    minimal_loop_power,
    neighborhood,
    well_formed,
)


def test_neighborhood_of_example1_is_everything(example1):
    result = neighborhood(example1, "x")
    assert result.vertices == ("x", "y1", "y2", "z")
    assert result.algebra.dimension == example1.dimension


def test_neighborhood_skips_far_vertices(example2):
    result = neighborhood(example2, "x")
    assert set(result.vertices) == {"x", "y", "z", "zp"}
    assert "w" not in result.algebra.vertices


def test_arrows_leaving_x(example1):
    assert [p.label for p in arrows_from(example1, "x")] == ["alpha", "beta1", "gamma1"]


def test_distributivity(loopnil3, kronecker):
    assert check_distributive(loopnil3).ok
    result = check_distributive(kronecker)
    assert not result.ok
    assert result.witness == ["x", "y"]


def test_minimal_loop_contour(example1):
    c = minimal_loop_contour(example1, "alpha")
    assert c.power == 2
    assert contour_partner(c).label == "beta1.beta2.beta3"
    assert minimal_loop_power(example1, "alpha") == 2


def test_nilpotent_loop_has_no_contour(loopnil3):
    assert minimal_loop_contour(loopnil3, "alpha") is None


def test_contour_needs_a_loop(example1):
    with pytest.raises(NotALoop):
        minimal_loop_contour(example1, "beta1")


@pytest.mark.parametrize(
    "name,base,kind,f",
    [
        ("pf2", "z1", 1, (1,)),
        ("pf2-type2", "z1", 2, (2,)),
        ("pf-case-1", "x", 1, (1,)),
        ("pf-case-2", "x", 1, (1,)),
        ("pf-case-3", "x", 1, (1, 2)),
    ],
)
def test_penny_farthing_classification(name, base, kind, f):
    found = well_formed(detect_penny_farthings(get_entry(name).algebra()))
    assert len(found) == 1
    pf = found[0]
    assert pf.base_vertex == base
    assert pf.relation_type == kind
    assert pf.f == f


def test_malformed_penny_farthing_is_reported(example1):
    found = detect_penny_farthings(example1)
    assert found
    assert all(pf.is_malformed for pf in found)
    assert well_formed(found) == []


def test_no_penny_farthing_without_loop(a2):
    assert detect_penny_farthings(a2) == []


def relabel(p, vertex_names, arrow_names):
    """Copy of a presentation with vertices and arrows renamed, declaration order kept."""
    q = p.quiver
    vmap = dict(zip(q.vertices, vertex_names))
    amap = dict(zip((a.name for a in q.arrows), arrow_names))
    renamed = Quiver(
        vertices=tuple(vmap[v] for v in q.vertices),
        arrows=tuple(Arrow(name=amap[a.name], source=vmap[a.source], target=vmap[a.target]) for a in q.arrows),
    )

    def path(old):
        return renamed.path([amap[name] for name in old.arrows])

    relations = []
    for r in p.relations:
        if isinstance(r, Monomial):
            relations.append(Monomial(path=path(r.path)))
        else:
            relations.append(Binomial(left=path(r.left), right=path(r.right), coefficient=r.coefficient))
    presentation = Presentation(
        name=p.name, field=p.field, quiver=renamed, relations=tuple(relations), bound=p.bound
    )
    return presentation, vmap, amap


@given(
    name=st.sampled_from(["pf2", "pf2-type2", "pf-case-1", "pf-case-3"]),
    data=st.data(),
)
def test_penny_farthings_survive_relabeling(name, data):
    p = get_entry(name).presentation()
    q = p.quiver
    vertex_names = data.draw(st.permutations([f"n{i}" for i in range(len(q.vertices))]))
    arrow_names = data.draw(st.permutations([f"r{i}" for i in range(len(q.arrows))]))
    renamed, vmap, amap = relabel(p, vertex_names, arrow_names)

    expected = [
        (vmap[pf.base_vertex], amap[pf.loop], tuple(amap[r] for r in pf.cycle), pf.relation_type, pf.f)
        for pf in well_formed(detect_penny_farthings(build_algebra(p)))
    ]
    found = [
        (pf.base_vertex, pf.loop, pf.cycle, pf.relation_type, pf.f)
        for pf in well_formed(detect_penny_farthings(build_algebra(renamed)))
    ]
    assert sorted(found) == sorted(expected)
