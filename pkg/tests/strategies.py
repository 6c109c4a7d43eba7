"""
Hypothesis strategies for random admissible presentations.
"""

from hypothesis import settings, strategies as st

from noloopwb.algebra import Arrow, Monomial, Presentation, Quiver, build_algebra

# The homology and certifier properties run over 200 random presentations.
random_algebra_runs = settings(max_examples=200, deadline=None)


@st.composite
def monomial_presentations(draw, max_vertices: int = 4, max_arrows: int = 5):
    """Forward arrows between up to four vertices, optionally one nilpotent loop at v0.

    Every path of length 6 contains the loop relation, so the bound 6 is admissible.
    """
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    vertices = tuple(f"v{i}" for i in range(n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=max_arrows)) if pairs else []
    arrows = [Arrow(name=f"a{k}", source=vertices[i], target=vertices[j]) for k, (i, j) in enumerate(chosen)]
    loop_power = draw(st.sampled_from([0, 2, 3]))
    if loop_power:
        arrows.append(Arrow(name="alpha", source="v0", target="v0"))
    quiver = Quiver(vertices=vertices, arrows=tuple(arrows))

    composable = [
        (p.name, q.name)
        for p in arrows
        for q in arrows
        if p.target == q.source and not (p.is_loop and q.is_loop)
    ]
    zeros = draw(st.lists(st.sampled_from(composable), unique=True, max_size=3)) if composable else []
    relations = [Monomial(path=quiver.path(list(pair))) for pair in zeros]
    if loop_power:
        relations.append(Monomial(path=quiver.path(["alpha"] * loop_power)))
    return Presentation(name="random", quiver=quiver, relations=tuple(relations), bound=6)


@st.composite
def monomial_algebras(draw, max_vertices: int = 4, max_arrows: int = 5):
    return build_algebra(draw(monomial_presentations(max_vertices, max_arrows)))
