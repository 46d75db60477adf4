import pytest

from severi import degeneration as dg
from severi.profiles import Profile
from severi.states import (
    InvalidState,
    SeveriState,
    dimension,
    key_tuple,
    normalize,
    symbol,
)
from tests.conftest import random_normalized_state


def simple_state(d, N, g, a, b):
    return SeveriState(
        d=d,
        N=N,
        g=g,
        alpha=tuple((1, f"p{i+1}") for i in range(a)),
        betas=((Profile.ones(b), symbol("L", b)),),
    )


def shapes(terms):
    return sorted(set((t.kind, t.m, t.tau.entries) for t in terms))


def test_simple_d2_single_type_one_term():
    terms = dg.successors_simple(simple_state(2, 2, 2, 0, 2))
    assert shapes(terms) == [("I", 0, ())]
    child = terms[0].child
    assert child.alpha_profile() == Profile.ones(1)
    assert child.betas[0][0] == Profile.ones(1)


def test_simple_d3_single_type_one_term():
    # m(tau) would need to exceed what the class equation allows
    terms = dg.successors_simple(simple_state(3, 2, 2, 0, 3))
    assert shapes(terms) == [("I", 0, ())]


def test_simple_type_two_terms_when_fixed_points_present():
    # with two fixed points to release, tau = (2) appears for every m
    terms = dg.successors_simple(simple_state(4, 2, 3, 2, 2))
    got = shapes(terms)
    for m in (1, 2):
        assert ("IIa", m, (2,)) in got
        assert ("IIb", m, (2,)) in got
    assert all(dimension(t.child) == dimension(simple_state(4, 2, 3, 2, 2)) - 1 for t in terms)


def test_simple_type_one_requires_two_moving_points():
    terms = dg.successors_simple(simple_state(2, 3, 2, 1, 1))
    assert all(t.kind != "I" for t in terms)


def test_simple_requires_genus_at_least_two():
    with pytest.raises(InvalidState):
        dg.successors_simple(simple_state(2, 2, 1, 0, 2))


def test_simple_type_one_updates_bundle():
    terms = dg.successors_simple(simple_state(2, 2, 2, 0, 2))
    (term,) = terms
    bundle = term.child.betas[0][1]
    assert bundle.degree == 1
    names = bundle.point_names()
    assert len(names) == 1  # the new fixed point was subtracted


def test_no_tau_equal_one_ever():
    for state in [simple_state(4, 3, 3, 2, 2), simple_state(5, 2, 2, 3, 2)]:
        for t in dg.successors_simple(state):
            assert t.tau.entries != (1,)
        nstate, _ = normalize(state)
        for t in dg.successors_general(nstate):
            assert t.tau.entries != (1,)


def test_general_requires_normalized():
    s = SeveriState(d=3, N=1, g=1, alpha=(), betas=((Profile.of(3), symbol("L", 3)),))
    with pytest.raises(InvalidState):
        dg.successors_general(s)


def test_general_type_one_distinct_children():
    s = SeveriState(
        d=5,
        N=3,
        g=1,
        alpha=(),
        betas=(
            (Profile.of(2, 1), symbol("L1", 3)),
            (Profile.ones(2), symbol("L2", 2)),
        ),
    )
    t1 = [t for t in dg.successors_general(s) if t.kind == "I"]
    assert len(t1) == 3
    assert sorted(t.dropped for t in t1) == [((0, 1),), ((0, 2),), ((1, 1),)]
    for t in t1:
        (j, n), = t.dropped
        # the new fixed point enters with the removed tangency order
        assert max(order for order, _ in t.child.alpha) >= 1
        assert t.child.betas[j][1].degree == s.betas[j][1].degree - n


def test_general_agrees_with_simple_up_to_small_tau(rng):
    """On common ground the two statements differ exactly by the size-one
    tau terms, which only the transverse-case statement admits."""
    checked = 0
    while checked < 20:
        d = rng.randint(2, 5)
        b = rng.randint(2, d)
        a = d - b
        g = rng.randint(2, 5)
        N = rng.randint(1, 4)
        s = simple_state(d, N, g, a, b)
        simple = dg.successors_simple(s)
        general = dg.successors_general(s)

        def norm_kind(t):
            if t.kind == "II":
                return "IIa" if not t.kept else "IIb"
            return t.kind

        simple_keys = {
            (t.kind, t.m, t.tau.entries, key_tuple(t.child)) for t in simple
        }
        general_keys = {
            (norm_kind(t), t.m, t.tau.entries, key_tuple(t.child)) for t in general
        }
        assert general_keys <= simple_keys
        extra = simple_keys - general_keys
        assert all(len(k[2]) == 1 for k in extra)
        checked += 1


def test_dimension_drop_on_random_corpus(rng):
    for _ in range(60):
        s = random_normalized_state(rng)
        parent_dim = dimension(s)
        for t in dg.successors_general(s):
            assert dimension(t.child) == parent_dim - 1


def test_class_bookkeeping(rng):
    for _ in range(40):
        s = random_normalized_state(rng)
        for t in dg.successors_general(s):
            assert t.child.d == s.d
            if t.kind == "I":
                assert t.child.N == s.N
            else:
                assert t.child.N == s.N - t.m
                kept_degrees = sum(s.betas[j][1].degree for j in t.kept)
                new_bundle = t.child.betas[-1][1]
                alpha_kept = sum(o for o, _ in t.child.alpha)
                assert new_bundle.degree == s.d - alpha_kept - kept_degrees


def test_forest_chain_shape():
    root = simple_state(2, 2, 2, 0, 2)
    forest = dg.build_forest([root], floor=0)
    assert not forest.truncated
    assert len(forest.roots) == 1
    dims = sorted(dimension(s) for s in forest.nodes.values())
    assert dims[0] == 0 and dims[-1] == 4
    for e in forest.edges:
        assert dimension(forest.nodes[e.child]) == dimension(forest.nodes[e.parent]) - 1
    # ignoring the split-off multiplicity, the shapes form a chain
    shapes_by_dim = {}
    for s in forest.nodes.values():
        shape = (s.d, s.g, s.alpha_profile().entries, tuple(sorted(b.entries for b, _ in s.betas)))
        shapes_by_dim.setdefault(dimension(s), set()).add(shape)
    assert all(len(v) == 1 for v in shapes_by_dim.values())


def test_forest_retains_negative_genus():
    root = simple_state(2, 2, 1, 0, 2)
    forest = dg.build_forest([root], floor=-6)
    assert min(s.g for s in forest.nodes.values()) < 0


def test_forest_empty_roots():
    forest = dg.build_forest([], floor=0)
    assert forest.nodes == {} and forest.edges == [] and forest.roots == ()


def test_forest_idempotent_and_acyclic():
    root = simple_state(3, 2, 2, 1, 2)
    f1 = dg.build_forest([root], floor=0)
    f2 = dg.build_forest([root], floor=0)
    assert f1.to_json() == f2.to_json()
    # dimension strictly drops along edges, so cycles are impossible; check anyway
    children = {}
    for e in f1.edges:
        children.setdefault(e.parent, set()).add(e.child)
    seen = set()

    def dfs(k, stack):
        assert k not in stack
        if k in seen:
            return
        seen.add(k)
        for c in children.get(k, ()):
            dfs(c, stack | {k})

    for r in f1.roots:
        dfs(r, frozenset())


def test_forest_node_budget():
    root = simple_state(6, 6, 6, 0, 6)
    forest = dg.build_forest([root], floor=0, max_nodes=5)
    assert forest.truncated
    assert len(forest.nodes) <= 5


def test_normalization_factor_lands_on_edge():
    # a IIb child with singleton tau group gets normalized on insertion
    root = simple_state(4, 2, 3, 2, 2)
    forest = dg.build_forest([root], floor=0, max_nodes=3000)
    assert any(e.factor == 4 for e in forest.edges)  # tau=(2) singleton: 2^2


def test_limit_stable_map():
    root = simple_state(4, 2, 3, 2, 2)
    terms = {(t.kind, t.m, t.tau.entries): t for t in dg.successors_simple(root)}
    t = terms[("IIa", 1, (2,))]
    shape = dg.limit_stable_map(t)
    assert shape.nodes == 1
    assert shape.cover_degree_partitions == ((1,),)
    t = terms[("IIa", 2, (1, 1))]
    shape = dg.limit_stable_map(t)
    assert shape.nodes == 2
    assert shape.cover_degree_partitions == ((2,), (1, 1))
    t = terms[("IIa", 2, (2,))]
    shape = dg.limit_stable_map(t)
    assert shape.cover_degree_partitions == ((2,),)
    type_one = next(t for t in dg.successors_simple(root) if t.kind == "I")
    with pytest.raises(ValueError):
        dg.limit_stable_map(type_one)


def test_dot_output_is_deterministic():
    root = simple_state(2, 2, 2, 0, 2)
    f = dg.build_forest([root], floor=0)
    assert dg.forest_to_dot(f) == dg.forest_to_dot(f)
    assert dg.forest_to_dot(f).startswith("digraph")
