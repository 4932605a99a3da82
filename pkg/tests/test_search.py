import json

import networkx as nx
import pytest

from oracles import naive_extremal, naive_free_at, to_nx
from turansq.canon import canonical_form
from turansq.constructions import (
    E,
    F,
    G0,
    H,
    S,
    Tmatch,
    build,
    flattened_tetrahedron,
    square_path,
    t_prime,
)
from turansq.containment import Pattern, contains_subgraph, parse_pattern, path_graph
from turansq.errors import CapacityError, DomainError, SearchLimitExceeded
from turansq.formulas import closed_form_ex
from turansq.graph import complete_graph, empty_graph
from turansq.search import (
    SearchConfig,
    enumerate_free_at,
    ex_value,
    level_thresholds,
    search_max_edges,
)

CATALOG = {
    "P3sq": build(square_path(3)),
    "P4sq": build(square_path(4)),
    "P5sq": build(square_path(5)),
    "P6sq": build(square_path(6)),
    "T": build(flattened_tetrahedron()),
    "Tprime": build(t_prime()),
    "P3": path_graph(3),
    "P4": path_graph(4),
    "P5": path_graph(5),
    "P6": path_graph(6),
    "K4": complete_graph(4),
}


def forms(specs):
    return {canonical_form(build(s)) for s in specs}


@pytest.mark.parametrize("name", list(CATALOG))
def test_matches_naive_enumeration(name):
    pat = CATALOG[name]
    for n in range(1, 7):
        value, classes = naive_extremal(n, pat.n, tuple(pat.edges()))
        res = search_max_edges(n, Pattern(pat))
        assert res.max_edges == value, (name, n)
        assert len(res.classes) == len(classes), (name, n)
        for h in classes:
            assert any(nx.is_isomorphic(h, to_nx(g)) for _, g in res.extremal)


def test_p5sq_n5():
    res = search_max_edges(5, Pattern(CATALOG["P5sq"]))
    assert res.max_edges == 7
    assert set(res.classes) == forms([G0(), E(2, 5), E(3, 5)])


def test_t_n6_has_five_classes():
    res = search_max_edges(6, Pattern(CATALOG["T"]))
    assert res.max_edges == 11 and len(res.classes) == 5
    assert forms([Tmatch(3, 6), Tmatch(4, 6), S(3, 6)]) <= set(res.classes)


def test_t_n7():
    res = search_max_edges(7, Pattern(CATALOG["T"]))
    assert res.max_edges == 15
    assert set(res.classes) == forms([Tmatch(4, 7), S(4, 7)])


def test_pattern_larger_than_host():
    res = search_max_edges(4, Pattern(CATALOG["P5sq"]))
    assert res.max_edges == 6 and res.nodes_explored == 0
    assert res.classes == (canonical_form(complete_graph(4)),)


def test_p6sq_n9():
    res = search_max_edges(9, Pattern(CATALOG["P6sq"]))
    assert res.max_edges == 24
    assert set(res.classes) == forms([F(5, 2, 9), S(5, 9), H(6, 9)])


def test_enumerate_prop11_case():
    got = set(enumerate_free_at(8, Pattern(CATALOG["T"]), 19))
    base = build(Tmatch(4, 8))
    expected = {canonical_form(base.remove_edge(u, v)) for u, v in base.edges()}
    expected |= forms([S(4, 8), S(5, 8)])
    assert got == expected and len(got) == 3


def test_enumerate_small_examples():
    assert enumerate_free_at(4, Pattern(complete_graph(3)), 5) == ()
    assert enumerate_free_at(3, Pattern(CATALOG["P5sq"]), 3) == (canonical_form(complete_graph(3)),)
    assert enumerate_free_at(0, Pattern(complete_graph(3)), 0) == (canonical_form(empty_graph(0)),)
    with pytest.raises(ValueError):
        enumerate_free_at(4, Pattern(complete_graph(3)), 7)


@pytest.mark.parametrize("name", ["P4sq", "T", "P5"])
def test_enumerate_matches_naive(name):
    pat = CATALOG[name]
    for n in (5, 6):
        for m in range(0, n * (n - 1) // 2 + 1, 2):
            oracle = naive_free_at(n, pat.n, tuple(pat.edges()), m)
            got = enumerate_free_at(n, Pattern(pat), m)
            assert len(got) == len(oracle), (n, m)
            for h in oracle:
                assert canonical_form(build_from_nx(h)) in got


def build_from_nx(h):
    from turansq.graph import from_edges
    return from_edges(h.number_of_nodes(), h.edges())


def test_extremal_soundness_and_lower_bounds():
    cases = [("P5sq", E, lambda n: ((n + 1) // 2, n)), ("T", Tmatch, lambda n: ((n + 1) // 2, n))]
    for name, fam, args in cases:
        pat = Pattern(CATALOG[name])
        for n in range(6, 10):
            res = search_max_edges(n, pat)
            assert res.max_edges >= build(fam(*args(n))).m
            for form, g in res.extremal:
                assert g.m == res.max_edges and g.n == n
                assert contains_subgraph(g, pat) is None
                assert canonical_form(g) == form
            assert len(set(res.classes)) == len(res.classes)


def test_monotone_in_n():
    for name in ("P4sq", "P5sq", "P6sq", "T", "P4"):
        vals = [ex_value(n, Pattern(CATALOG[name])) for n in range(1, 11)]
        assert vals == sorted(vals)


def test_values_match_closed_forms():
    for n in range(4, 11):
        assert ex_value(n, Pattern(CATALOG["P4sq"])) == closed_form_ex("P4sq", n)
        if n != 5:
            assert ex_value(n, Pattern(CATALOG["T"])) == closed_form_ex("FlatTetra", n)
            assert ex_value(n, Pattern(CATALOG["P6sq"])) == closed_form_ex("P6sq", n)


@pytest.mark.parametrize("sel,n", [("flat-tetra", 9), ("square-path:6", 9), ("square-path:5", 8)])
def test_deterministic_across_thread_budgets(sel, n):
    pat = parse_pattern(sel)
    outs = {json.dumps(search_max_edges(n, pat, SearchConfig(threads=t)).to_dict(False))
            for t in (1, 2, 8)}
    assert len(outs) == 1


def test_node_limit_gives_inexact_partial():
    with pytest.raises(SearchLimitExceeded) as info:
        search_max_edges(9, parse_pattern("square-path:6"), SearchConfig(node_limit=3))
    part = info.value.partial
    assert part.exact is False and part.extremal == ()
    assert part.to_dict(False)["exact"] is False


def test_seed_floor():
    pat = parse_pattern("flat-tetra")
    assert search_max_edges(8, pat, SearchConfig(seed=20)).max_edges == 20
    with pytest.raises(ValueError):
        search_max_edges(8, pat, SearchConfig(seed=21))


def test_guards():
    with pytest.raises(CapacityError):
        search_max_edges(17, parse_pattern("clique:3"))
    with pytest.raises(DomainError):
        search_max_edges(5, Pattern(empty_graph(2)))
    with pytest.raises(ValueError):
        SearchConfig(threads=0)


def test_collect_false_reports_value_only():
    res = search_max_edges(7, parse_pattern("flat-tetra"), SearchConfig(collect_extremal=False))
    assert res.max_edges == 15 and res.extremal == ()


def test_level_thresholds():
    assert level_thresholds(5, 7) == [0, 0, 1, 3, 5, 7]
    req = level_thresholds(9, 24)
    assert req[-1] == 24
    assert all(req[k] <= req[k + 1] for k in range(9))
