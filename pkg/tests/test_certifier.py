from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from noloopwb.certifier import (
    PredicateValue,
    build_loop_context,
    certify_no_loop,
    choose_branch,
    enumerate_alpha_chains,
    evaluate_lemma_predicates,
    search_alpha_filtration,
    template_filtrations,
    verify_alpha_filtration,
)
from noloopwb.certifier.routing import route_after_inspect, route_after_structure, route_after_templates
from noloopwb.certifier.state import add_error, create_initial_state
from noloopwb.corpus import ALL_ENTRIES, get_entry
from noloopwb.exceptions import NotAChain, NotALoop, NotAlphaStable
from noloopwb.homology import projective, submodule_generated, whole, zero_submodule
from tests.strategies import monomial_algebras, random_algebra_runs


def example1_chain(a):
    px = projective(a, "x")
    return [
        whole(px),
        submodule_generated(px, ["alpha", "gamma1"]),
        submodule_generated(px, ["alpha.alpha"]),
        zero_submodule(px),
    ]


def test_verify_example1_chain(example1):
    cert = verify_alpha_filtration(example1, "x", "alpha", example1_chain(example1), depth=6)
    assert cert.filtration.length == 3
    assert [r.index for r in cert.reports] == [1, 2]
    assert cert.verdict == "inconclusive"
    assert cert.describe() == "Inconclusive(6)"


def test_chain_must_be_alpha_stable(example1):
    px = projective(example1, "x")
    chain = [whole(px), submodule_generated(px, ["gamma1"]), zero_submodule(px)]
    with pytest.raises(NotAlphaStable):
        verify_alpha_filtration(example1, "x", "alpha", chain, depth=4)


def test_chain_shape_is_checked(example1):
    px = projective(example1, "x")
    with pytest.raises(NotAChain):
        verify_alpha_filtration(example1, "x", "alpha", [whole(px)], depth=4)
    with pytest.raises(NotAChain):
        verify_alpha_filtration(example1, "x", "alpha", [whole(px), submodule_generated(px, ["alpha"])], depth=4)


def test_filtration_needs_a_loop(example1):
    with pytest.raises(NotALoop):
        verify_alpha_filtration(example1, "x", "beta1", example1_chain(example1), depth=4)


def test_single_alpha_chain_below_gamma(example2):
    px = projective(example2, "x")
    top = submodule_generated(px, ["gamma"])
    assert top.dim == 2
    chains = enumerate_alpha_chains(example2, "alpha", top)
    assert len(chains) == 1
    assert [m.dim for m in chains[0]] == [2, 1, 0]


def test_search_finds_nothing_for_a_nilpotent_loop(loopnil2):
    assert search_alpha_filtration(loopnil2, "x", "alpha", depth=6, budget=100) is None


def test_loop_context_of_example1(example1):
    ctx = build_loop_context(example1, "x")
    assert ctx.loop == "alpha"
    assert ctx.t == 2
    assert ctx.beta1 == "beta1"
    assert ctx.gamma == "gamma1"
    assert ctx.x_plus == ("alpha", "beta1", "gamma1")
    assert ctx.multiplicative
    assert not ctx.has_penny_farthing


def test_example1_predicates(example1):
    values = {p.name: p.value for p in evaluate_lemma_predicates(build_loop_context(example1, "x"))}
    assert values["alpha-gamma-vanishes"] == PredicateValue.TRUE
    assert values["beta1-apart-from-alpha-beta1"] == PredicateValue.TRUE
    assert values["alpha2-beta1-vanishes"] == PredicateValue.TRUE
    assert values["penny-farthing-at-x"] == PredicateValue.NOT_APPLICABLE


def test_predicates_without_contour(loopnil2):
    ctx = build_loop_context(loopnil2, "x")
    assert ctx.t is None
    predicates = evaluate_lemma_predicates(ctx)
    contour_bound = [p for p in predicates if p.reason == "no loop contour at x"]
    assert contour_bound
    assert all(p.value == PredicateValue.NOT_APPLICABLE for p in contour_bound)
    assert choose_branch(ctx) == ("generic", None)


def test_penny_farthing_branch(pf_case_1):
    ctx = build_loop_context(pf_case_1, "x")
    assert ctx.has_penny_farthing
    assert choose_branch(ctx) == ("penny-farthing", "powers")
    names = [template.name for template in template_filtrations(ctx, prefer="powers")]
    assert names[0] == "powers"


def test_certify_without_loop(a2):
    report = certify_no_loop(a2, "x", depth=6)
    assert not report.has_loop
    assert report.status == "pass"
    assert report.conclusion == "no loop at x: nothing to certify"


def test_certify_nilpotent_loop(loopnil2):
    report = certify_no_loop(loopnil2, "x", depth=6, budget=100)
    assert report.has_loop
    assert report.branch == "generic"
    assert report.certificate is None
    assert report.status == "pass"
    assert report.conclusion == "consistent with strong no loop conjecture at depth 6"
    assert any(a.source == "search" for a in report.attempts)


def test_report_lines_end_with_the_verdict(loopnil2):
    lines = certify_no_loop(loopnil2, "x", depth=4, budget=50).lines()
    assert lines[-1] == "status: pass"
    assert lines[-2].startswith("conclusion: ")


def loop_certificate_and_finite_pd(report):
    certified = report.certificate is not None and report.certificate.all_finite
    finite = report.simple_pd is not None and report.simple_pd.is_finite
    return report.has_loop and certified and finite


@pytest.mark.parametrize("entry", ALL_ENTRIES, ids=lambda e: e.name)
def test_loops_never_get_a_certificate(entry):
    report = certify_no_loop(entry.algebra(), entry.vertex, depth=8, budget=500)
    assert not loop_certificate_and_finite_pd(report)


@random_algebra_runs
@given(monomial_algebras(max_vertices=3, max_arrows=3))
def test_random_loops_never_get_a_certificate(a):
    report = certify_no_loop(a, "v0", depth=6, budget=200)
    assert not loop_certificate_and_finite_pd(report)


def test_routing(loopnil2, a2):
    state = create_initial_state(a2, "x", 4, 10)
    state["loop"] = None
    assert route_after_inspect(state) == "no_loop"
    state["loop"] = "alpha"
    assert route_after_inspect(state) == "loop"
    state["context"] = None
    assert route_after_structure(state) == "search"
    state["certificate"] = None
    assert route_after_templates(state) == "search"


def test_errors_are_collected(a2):
    state = create_initial_state(a2, "x", 4, 10)
    add_error(state, "structure", "boom")
    assert state["errors"][-1]["step"] == "structure"
    assert state["errors"][-1]["error"] == "boom"


@pytest.mark.parametrize("name", ["pf-case-1", "pf-case-2", "pf-case-3"])
def test_powers_of_the_loop_form_a_filtration(name):
    a = get_entry(name).algebra()
    px = projective(a, "x")
    chain = [whole(px)]
    k = 1
    while not a.element(".".join(["alpha"] * k)).is_zero:
        chain.append(submodule_generated(px, [".".join(["alpha"] * k)]))
        k += 1
    chain.append(zero_submodule(px))
    cert = verify_alpha_filtration(a, "x", "alpha", chain, depth=4)
    assert cert.filtration.length == k


@lru_cache(maxsize=None)
def corpus_algebra(name):
    return get_entry(name).algebra()


def powers_chain(a, x="x", loop="alpha"):
    px = projective(a, x)
    chain = [whole(px)]
    power = [loop]
    while not a.element(".".join(power)).is_zero:
        chain.append(submodule_generated(px, [".".join(power)]))
        power.append(loop)
    chain.append(zero_submodule(px))
    return chain


def valid_chain(name):
    a = corpus_algebra(name)
    return a, example1_chain(a) if name == "example1" else powers_chain(a)


def perturb(chain, kind, i):
    chain = list(chain)
    if kind == "drop":
        del chain[1 + i % (len(chain) - 2)]
    elif kind == "swap":
        j = i % (len(chain) - 1)
        chain[j], chain[j + 1] = chain[j + 1], chain[j]
    else:
        j = i % len(chain)
        chain.insert(j, chain[j])
    return chain


@given(
    name=st.sampled_from(["example1", "pf-case-1", "pf-case-2", "pf-case-3"]),
    kind=st.sampled_from(["drop", "swap", "repeat"]),
    i=st.integers(min_value=0, max_value=20),
)
def test_perturbed_filtrations_are_rejected(name, kind, i):
    a, chain = valid_chain(name)
    verify_alpha_filtration(a, "x", "alpha", chain, depth=2)
    with pytest.raises((NotAChain, NotAlphaStable)):
        verify_alpha_filtration(a, "x", "alpha", perturb(chain, kind, i), depth=2)


def assert_search_matches_enumeration(a, x, alpha, depth):
    found = search_alpha_filtration(a, x, alpha, depth=depth, budget=10**6)
    chains = enumerate_alpha_chains(a, alpha, whole(projective(a, x)), depth=depth)
    assert (found is None) == (chains == [])
    if found is not None:
        assert verify_alpha_filtration(a, x, alpha, list(found.terms), depth).all_finite


@pytest.mark.parametrize("entry", ALL_ENTRIES, ids=lambda e: e.name)
def test_search_agrees_with_enumeration(entry):
    a = corpus_algebra(entry.name)
    loops = a.quiver.loops_at(entry.vertex)
    if not loops or projective(a, entry.vertex).dim > 8:
        pytest.skip("needs a loop and dim P_x <= 8")
    assert_search_matches_enumeration(a, entry.vertex, loops[0].name, depth=4)


@given(monomial_algebras(max_vertices=3, max_arrows=3))
def test_search_agrees_with_enumeration_on_random_algebras(a):
    if not a.quiver.loops_at("v0") or projective(a, "v0").dim > 8:
        return
    assert_search_matches_enumeration(a, "v0", "alpha", depth=4)


def test_every_alpha_chain_of_example2_meets_s_z(example2):
    chains = enumerate_alpha_chains(example2, "alpha", whole(projective(example2, "x")))
    assert chains
    for chain in chains:
        assert any(term.dimension_vector().get("z", 0) for term in chain[1:-1])
    assert search_alpha_filtration(example2, "x", "alpha", depth=4, budget=10**6) is None


@pytest.mark.parametrize("depth", [10, 25, 50])
def test_nilpotent_loop_stays_periodic_up_to_depth_50(loopnil2, depth):
    report = certify_no_loop(loopnil2, "x", depth=depth, budget=100)
    pd = report.simple_pd
    assert not pd.is_finite
    assert pd.value == depth
    assert (pd.periodic_from, pd.period) == (0, 1)
    assert f"pd(S_x): Exceeds({depth}) [syzygies repeat from step 0 with period 1]" in report.lines()
    assert report.status == "pass"
