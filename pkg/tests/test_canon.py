import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import nx_orbits, permutation_isomorphic, random_graph, to_nx
from turansq.canon import (
    are_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    vertex_orbits,
)
from turansq.constructions import F, S, build
from turansq.errors import CapacityError
from turansq.graph import complete_graph, empty_graph, from_edges


def cycle(n):
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def test_eleven_classes_on_four_vertices():
    pairs = list(itertools.combinations(range(4), 2))
    forms = set()
    for mask in range(64):
        forms.add(canonical_form(from_edges(4, [p for t, p in enumerate(pairs) if mask >> t & 1])))
    assert len(forms) == 11


def test_c5_relabelled(rng):
    g = cycle(5)
    for _ in range(20):
        perm = list(range(5))
        rng.shuffle(perm)
        assert canonical_form(g.permute(perm)) == canonical_form(g)


def test_p4_differs_from_claw():
    p4 = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    claw = from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert canonical_form(p4) != canonical_form(claw)


def test_k3_not_p3():
    assert not are_isomorphic(complete_graph(3), from_edges(3, [(0, 1), (1, 2)]))


def test_star_case_of_F_is_S():
    a, b = build(S(4, 8)), build(F(4, 4, 8))
    assert are_isomorphic(a, b)
    assert permutation_isomorphic(a, b)


def test_different_orders_not_isomorphic():
    assert not are_isomorphic(empty_graph(3), empty_graph(4))


def test_canonical_graph_is_isomorphic_relabelling(rng):
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 9))
        c = canonical_graph(g)
        lab = canonical_labeling(g)
        assert sorted(lab) == list(range(g.n))
        assert nx.is_isomorphic(to_nx(g), to_nx(c))
        assert canonical_form(g).graph() == c


def test_capacity():
    with pytest.raises(CapacityError):
        canonical_form(empty_graph(17))
    with pytest.raises(CapacityError):
        are_isomorphic(empty_graph(17), empty_graph(17))
    assert canonical_form(empty_graph(40), cap=64).n == 40


def test_hard_regular_graphs():
    # vertex-transitive and strongly regular cases stress the refinement
    petersen = nx.petersen_graph()
    g = from_edges(10, petersen.edges())
    perm = list(range(10))
    random.Random(3).shuffle(perm)
    assert canonical_form(g) == canonical_form(g.permute(perm))
    # C6 vs two triangles: same degree sequence
    assert not are_isomorphic(cycle(6), from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
    # 4x4 rook graph vs Shrikhande graph: both srg(16,6,2,2)
    rook = from_edges(16, [(u, v) for u in range(16) for v in range(u + 1, 16)
                           if (u // 4 == v // 4) != (u % 4 == v % 4)])
    shr = from_edges(16, [(u, v) for u in range(16) for v in range(u + 1, 16)
                          if ((v // 4 - u // 4) % 4, (v % 4 - u % 4) % 4)
                          in {(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)}])
    assert rook.degrees() == [6] * 16 and shr.degrees() == [6] * 16
    assert not are_isomorphic(rook, shr)


def test_orbits_match_networkx(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 8), rng.choice([0.3, 0.5, 0.7]))
        assert vertex_orbits(g) == nx_orbits(g)
    assert vertex_orbits(build(S(4, 8))) == nx_orbits(build(S(4, 8)))


def test_permutation_oracle_agreement(rng):
    # pairs with equal degree sequences are the interesting ones
    for _ in range(1000):
        n = rng.randint(1, 6)
        g = random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        h = g.permute(perm)
        if rng.random() < 0.5 and n >= 2:
            u, v = rng.sample(range(n), 2)
            h = h.remove_edge(u, v) if h.has_edge(u, v) else h.add_edge(u, v)
            w, x = rng.sample(range(n), 2)
            h = h.remove_edge(w, x) if h.has_edge(w, x) else h.add_edge(w, x)
        assert are_isomorphic(g, h) == permutation_isomorphic(g, h)


@st.composite
def graph_and_perm(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    perm = draw(st.permutations(range(n)))
    return from_edges(n, [p for t, p in enumerate(pairs) if mask >> t & 1]), perm


@given(graph_and_perm())
@settings(max_examples=300, deadline=None)
def test_invariance_property(gp):
    g, perm = gp
    assert canonical_form(g.permute(perm)) == canonical_form(g)
