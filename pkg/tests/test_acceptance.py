"""Acceptance criteria, one test per criterion line.

Each test records its outcome in ``conftest.ACCEPTANCE`` so the session ends
with a PASS/FAIL line per criterion.  Run ``python3 tests/test_acceptance.py``
to get the same lines without the rest of the suite.
"""

import contextlib
import json
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE  # noqa: E402
from oracles import permutation_isomorphic  # noqa: E402
from turansq.canon import canonical_form  # noqa: E402
from turansq.constructions import (  # noqa: E402
    E,
    G0,
    S,
    Tmatch,
    build,
    complete_bipartite,
    conjecture_graph,
    expected_edges,
    faudree_schelp_a,
    flattened_tetrahedron,
    p5_extremal_specs,
    p6_extremal_specs,
    square_path,
    t_extremal_specs,
)
from turansq.containment import Pattern, contains_subgraph, is_embedding, lemma12_witness  # noqa: E402
from turansq.containment import path_graph  # noqa: E402
from turansq.errors import ConstructionError  # noqa: E402
from turansq.formulas import (  # noqa: E402
    conjecture_bound,
    closed_form_ex,
    f_P6,
    f_T,
    faudree_schelp_ex,
    valid_range,
)
from turansq.graph import decode_graph6, encode_graph6, from_edges  # noqa: E402
from turansq.search import SearchConfig, enumerate_free_at, search_max_edges  # noqa: E402
from turansq.verify import faudree_schelp_specs, verify_claim  # noqa: E402


@contextlib.contextmanager
def criterion(cid, desc, budget_s):
    """Record PASS only when the body finishes without error inside its time budget."""
    ok = False
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed <= budget_s, f"{elapsed:.1f}s over the {budget_s}s budget"
        ok = True
    finally:
        ACCEPTANCE.append((cid, desc, ok))


def sq(k):
    return Pattern(build(square_path(k)))


def forms(specs):
    return {canonical_form(build(s)) for s in specs}


def test_1a_square_p3():
    with criterion("1a", "ex(n,P3^2) = floor(n^2/4), unique bipartite extremal, n = 3..9", 300):
        for n in range(3, 10):
            res = search_max_edges(n, sq(3))
            assert res.max_edges == n * n // 4, n
            assert set(res.classes) == forms([complete_bipartite(n // 2, n - n // 2)]), n


def test_1b_square_p4_values():
    with criterion("1b-values", "ex(n,P4^2) = floor(n^2/4), n = 4..9", 300):
        for n in range(4, 10):
            assert search_max_edges(n, sq(4)).max_edges == n * n // 4, n


def test_1b_square_p4_uniqueness():
    # the claimed unique extremal graph is not unique for n = 5, 6; left failing
    with criterion("1b-unique", "P4^2 extremal graph unique for n = 5..9", 300):
        counts = {n: len(search_max_edges(n, sq(4)).classes) for n in range(5, 10)}
        bip = {n: forms([complete_bipartite(n // 2, n - n // 2)]) for n in range(5, 10)}
        for n in range(5, 10):
            assert bip[n] <= set(search_max_edges(n, sq(4)).classes), n
        assert counts == {n: 1 for n in range(5, 10)}, f"class counts {counts}"


def test_1c_square_p5():
    with criterion("1c", "ex(n,P5^2) = floor((n^2+n)/4) with exact extremal classes, n = 5..9",
                   900):
        for n in range(5, 10):
            res = search_max_edges(n, sq(5))
            assert res.max_edges == (n * n + n) // 4, n
            assert set(res.classes) == forms(p5_extremal_specs(n)), n
        assert set(search_max_edges(5, sq(5)).classes) == forms([G0(), E(2, 5), E(3, 5)])
        for n in (5, 6, 9):
            assert len(search_max_edges(n, sq(5)).classes) >= 2


T = Pattern(build(flattened_tetrahedron()))


def _fig8_classes():
    k5 = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    pendant = from_edges(6, k5 + [(4, 5)])
    k5e = [e for e in k5 if e != (3, 4)]
    bridge = from_edges(6, k5e + [(3, 5), (4, 5)])
    specs = forms([Tmatch(3, 6), Tmatch(4, 6), S(3, 6)])
    return specs | {canonical_form(pendant), canonical_form(bridge)}


def test_1d_flat_tetrahedron():
    with criterion("1d", "ex(n,T) = f_T(n) (ex(5,T) = 10) with extremal classes at n = 6..9",
                   900):
        for n in (4, 6, 7, 8, 9):
            assert search_max_edges(n, T).max_edges == f_T(n), n
        assert search_max_edges(5, T).max_edges == 10
        for n in (7, 8, 9):
            assert set(search_max_edges(n, T).classes) == forms(t_extremal_specs(n)), n
        six = set(search_max_edges(6, T).classes)
        assert len(six) == 5 and six == _fig8_classes()


def test_1e_square_p6_values_and_members():
    with criterion("1e-values", "ex(n,P6^2) = 12,15,19,24 with listed members, n = 6..9", 1800):
        p6 = sq(6)
        for n, want in zip(range(6, 10), (12, 15, 19, 24)):
            res = search_max_edges(n, p6)
            assert res.max_edges == want == f_P6(n), n
            assert set(res.classes) == forms(p6_extremal_specs(n)), n


def test_1e_square_p6_class_counts():
    # F(4,4,8) and F(5,5,8) coincide, so n = 8 has three classes; left failing
    with criterion("1e-counts", "P6^2 extremal class counts 1,3,4,3 for n = 6..9", 1800):
        counts = [len(search_max_edges(n, sq(6)).classes) for n in range(6, 10)]
        assert counts == [1, 3, 4, 3], f"class counts {counts}"


@pytest.mark.slow
def test_1e_stretch():
    res10 = search_max_edges(10, sq(6), SearchConfig(collect_extremal=False))
    res11 = search_max_edges(11, sq(6), SearchConfig(collect_extremal=False))
    ACCEPTANCE.append(("1e-stretch", "ex(10,P6^2) = 30, ex(11,P6^2) = 36 (not gating)",
                       (res10.max_edges, res11.max_edges) == (30, 36)))
    assert (res10.max_edges, res11.max_edges) == (30, 36)


def test_2_near_extremal_flat_tetrahedron():
    with criterion("2", "T-free graphs on 8 vertices with 19 edges = {T^4_8 - e, S^4_8, S^5_8}",
                   600):
        got = set(enumerate_free_at(8, T, 19))
        base = build(Tmatch(4, 8))
        want = {canonical_form(base.remove_edge(u, v)) for u, v in base.edges()}
        want |= forms([S(4, 8), S(5, 8)])
        assert got == want


def _free_with_count(spec, pat, count):
    g = build(spec)
    assert g.m == count == expected_edges(spec), spec
    assert contains_subgraph(g, pat) is None, spec


def test_3_construction_suite():
    with criterion("3", "families are pattern-free with closed-form edge counts, n = 4..40", 120):
        checked = 0
        p3, p4, p5, p6 = sq(3), sq(4), sq(5), sq(6)
        paths = {l: Pattern(path_graph(l)) for l in range(3, 7)}
        for n in range(4, 41):
            bip = complete_bipartite(n // 2, n - n // 2)
            _free_with_count(bip, p3, n * n // 4)
            _free_with_count(bip, p4, n * n // 4)
            for spec in p5_extremal_specs(n) if n >= 5 else []:
                _free_with_count(spec, p5, (n * n + n) // 4)
            if n != 5:
                _free_with_count(Tmatch((n + 1) // 2, n), T, f_T(n))
            if n not in (5, 6):
                for spec in t_extremal_specs(n):
                    _free_with_count(spec, T, f_T(n))
            if n >= 6:
                for spec in p6_extremal_specs(n):
                    _free_with_count(spec, p6, f_P6(n))
            for l in range(3, 7):
                if n >= l:
                    for spec in faudree_schelp_specs(n, l):
                        _free_with_count(spec, paths[l], faudree_schelp_ex(n, l))
            checked += 1
        assert checked == 37


def test_4_walk_embedding():
    with criterion("4", "walk embeds P^2_{floor(3r/2)+1}, 2 <= r <= 10, r <= n <= 12", 60):
        for r in range(2, 11):
            pat = build(square_path(3 * r // 2 + 1))
            for n in range(max(r, 3), 13):
                host, walk = lemma12_witness(n, r)
                assert is_embedding(host, pat, walk), (n, r)
        assert verify_claim("lemma12", range(2, 13)).passed


def test_5_paths():
    with criterion("5", "ex(n,P_l) by search = path formula; (a)/(b) free, l = 3..6, n = l..9",
                   600):
        for l in range(3, 7):
            pat = Pattern(path_graph(l))
            for n in range(l, 10):
                res = search_max_edges(n, pat)
                assert res.max_edges == faudree_schelp_ex(n, l), (n, l)
                specs = faudree_schelp_specs(n, l)
                assert specs and specs[0] == faudree_schelp_a(n, l)
                for spec in specs:
                    _free_with_count(spec, pat, res.max_edges)
                assert forms(specs) <= set(res.classes), (n, l)


def _conjecture_rows(ks):
    bad = []
    for k in ks:
        target = {3: "P3sq", 4: "P4sq", 5: "P5sq", 6: "P6sq"}[k]
        c = 2 * k // 3 - 1
        for n in range(k, 41):
            if not valid_range(target, n):
                continue
            b = conjecture_bound(k, n)
            gap = b.value - closed_form_ex(target, n)
            ok = 0 <= gap < 1
            if b.argmax_i % c == 0:
                try:
                    ok = ok and build(conjecture_graph(k, b.argmax_i, n)).m == b.value
                except ConstructionError:
                    ok = False
            if not ok:
                bad.append((k, n, str(gap)))
    return bad


def test_6_conjecture_k3_to_5():
    with criterion("6-k3..5", "0 <= bound - ex < 1 and construction attains bound, k = 3..5", 60):
        assert _conjecture_rows([3, 4, 5]) == []


def test_6_conjecture_k6():
    # the gap is exactly 1 for n = 1, 2, 3 (mod 6); left failing
    with criterion("6-k6", "0 <= bound - ex < 1 and construction attains bound, k = 6", 60):
        bad = _conjecture_rows([6])
        assert bad == [], f"{len(bad)} rows off, first {bad[:3]}"


def _random_graph(rng, n):
    p = rng.random()
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def _relabel(g, perm):
    return from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_7_property_suites():
    with criterion("7", "graph6 round-trip, relabel invariance, permutation oracle, "
                        "determinism across 1/2/8 threads", 600):
        rng = random.Random(7)
        for _ in range(10_000):
            g = _random_graph(rng, rng.randint(0, 60))
            assert decode_graph6(encode_graph6(g)) == g
        for _ in range(1000):
            g = _random_graph(rng, rng.randint(1, 14))
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(_relabel(g, perm)) == canonical_form(g)
        for _ in range(1000):
            n = rng.randint(1, 7)
            g, h = _random_graph(rng, n), _random_graph(rng, n)
            if rng.random() < 0.5:
                perm = list(range(n))
                rng.shuffle(perm)
                h = _relabel(g, perm)
            assert (canonical_form(g) == canonical_form(h)) == permutation_isomorphic(g, h)
        for sel_k, n in ((6, 9), (5, 9), (4, 8)):
            dumps = {json.dumps(search_max_edges(n, sq(sel_k), SearchConfig(threads=t))
                                .to_dict(False)) for t in (1, 2, 8)}
            assert len(dumps) == 1
        reports = {verify_claim("thm8", range(6, 10), cfg=SearchConfig(threads=t)).to_json(False)
                   for t in (1, 2, 8)}
        assert len(reports) == 1


if __name__ == "__main__":
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)
