"""Exact ex(n, H) by isomorph-free generation with edge-count bounds.

Graphs are grown one vertex at a time.  A child ``G + v`` is kept only if
``v`` is its canonical deletion vertex: a minimum-degree vertex, chosen among
those by neighbour-degree sum and then by canonical position.  Every H-free
graph is therefore reached exactly once, through a chain of induced subgraphs
each obtained by deleting a minimum-degree vertex.

Deleting a minimum-degree vertex from a graph with ``e`` edges on ``k + 1``
vertices leaves at least ``e - floor(2e / (k + 1))`` edges.  For a target of
``t`` edges on ``n`` vertices this gives a required edge count at every
level, which prunes almost everything when ``t`` is near ex(n, H).

ex(n, H) is found top-down: starting from ``floor(n * ex(n-1) / (n-2))`` (the
averaging bound) each pass enumerates all H-free graphs with at least ``t``
edges; the first non-empty pass gives the maximum.
"""

from __future__ import annotations

import time
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import kernels
from .canon import CANON_CAP, CanonicalForm, form_from_code
from .containment import Pattern, embedding_through
from .errors import CapacityError, DomainError, SearchLimitExceeded
from .graph import Graph, complete_graph, empty_graph

SEARCH_CAP = CANON_CAP


@dataclass(frozen=True)
class SearchConfig:
    threads: int = 1
    seed: int | None = None
    node_limit: int | None = None
    collect_extremal: bool = True

    def __post_init__(self) -> None:
        if self.threads < 1:
            raise ValueError("thread budget must be >= 1")


@dataclass
class SearchResult:
    n: int
    pattern: str
    max_edges: int
    extremal: tuple[tuple[CanonicalForm, Graph], ...]
    nodes_explored: int
    elapsed: float = field(compare=False)
    exact: bool = True

    @property
    def classes(self) -> tuple[CanonicalForm, ...]:
        return tuple(form for form, _ in self.extremal)

    def to_dict(self, include_elapsed: bool = True) -> dict:
        d = {
            "n": self.n,
            "pattern": self.pattern,
            "max_edges": self.max_edges,
            "exact": self.exact,
            "extremal": [form.graph6 for form, _ in self.extremal],
            "nodes": self.nodes_explored,
        }
        if include_elapsed:
            d["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return d


def level_thresholds(n: int, t: int) -> list[int]:
    """Minimum edge count at each level 0..n of a chain ending in >= t edges."""
    req = [0] * (n + 1)
    req[n] = max(t, 0)
    for k in range(n - 1, 0, -1):
        e = req[k + 1]
        req[k] = max(e - (2 * e) // (k + 1), 0)
    return req


class _NodeLimit(Exception):
    pass


class _Enumerator:
    """One pass: all H-free graphs on n vertices with at least ``t`` edges."""

    def __init__(
        self,
        pattern: Pattern,
        n: int,
        t: int,
        exact_m: int | None = None,
        node_limit: int | None = None,
        stop_at_first: bool = False,
    ) -> None:
        self.pattern = pattern
        self.n = n
        self.req = level_thresholds(n, t)
        self.exact_m = exact_m
        self.node_limit = node_limit
        self.stop_at_first = stop_at_first
        self.nodes = 0
        self.found: dict[tuple[int, ...], list[int]] = {}
        self.done = False

    def _count(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _NodeLimit

    def children(self, rows: list[int], e: int, pcode: tuple[int, ...]):
        """Accepted children of a node, in deterministic order."""
        k = len(rows)
        degs = [r.bit_count() for r in rows]
        delta = min(degs)
        smin = max(0, self.req[k + 1] - e)
        smax = min(k, delta + 1)
        if self.exact_m is not None:
            smax = min(smax, self.exact_m - e)
        out: dict[tuple[int, ...], tuple[list[int], int]] = {}
        pattern = self.pattern
        bit_k = 1 << k
        for s in range(smin, smax + 1):
            forced = 0
            nforced = 0
            free = []
            for u in range(k):
                if degs[u] == s - 1:
                    forced |= 1 << u
                    nforced += 1
                elif degs[u] >= s:
                    free.append(u)
            if nforced > s:
                continue
            for comb in combinations(free, s - nforced):
                S = forced
                for u in comb:
                    S |= 1 << u
                child = [r | bit_k if (S >> u) & 1 else r for u, r in enumerate(rows)]
                child.append(S)
                # candidates for the canonical deletion vertex
                inv_k = 0
                mins = [k]
                for u in range(k):
                    d = degs[u] + ((S >> u) & 1)
                    if d == s:
                        mins.append(u)
                    if (S >> u) & 1:
                        inv_k += d
                if len(mins) > 1:
                    invs = {}
                    for u in mins:
                        tot = 0
                        r = child[u]
                        while r:
                            low = r & -r
                            tot += child[low.bit_length() - 1].bit_count()
                            r ^= low
                        invs[u] = tot
                    top = max(invs.values())
                    if inv_k < top:
                        continue
                    tied = [u for u in mins if invs[u] == top]
                else:
                    tied = [k]
                if embedding_through(child, pattern, k) is not None:
                    continue
                lab, code = kernels.canon_label(k + 1, child)
                if code in out:
                    continue
                if len(tied) > 1:
                    pos = {v: p for p, v in enumerate(lab)}
                    w = max(tied, key=pos.__getitem__)
                    if w != k and kernels.canon_label(k, _delete(child, w))[1] != pcode:
                        continue
                out[code] = (child, e + s)
        return out

    def expand(self, rows: list[int], e: int, pcode: tuple[int, ...]) -> None:
        k = len(rows)
        for code, (child, ce) in self.children(rows, e, pcode).items():
            if self.done:
                return
            self._count()
            if k + 1 == self.n:
                self.found[code] = child
                if self.stop_at_first:
                    self.done = True
                    return
            else:
                self.expand(child, ce, code)

    def frontier(self, rows, e, pcode, depth: int):
        """Nodes at ``depth`` vertices (counted), plus leaves met on the way."""
        level = [(rows, e, pcode)]
        for k in range(len(rows), depth):
            nxt = []
            for r0, e0, c0 in level:
                for code, (child, ce) in self.children(r0, e0, c0).items():
                    self._count()
                    if k + 1 == self.n:
                        self.found[code] = child
                    else:
                        nxt.append((child, ce, code))
            level = nxt
        return level


def _delete(rows: list[int], w: int) -> list[int]:
    low = (1 << w) - 1
    return [(r & low) | ((r >> (w + 1)) << w) for u, r in enumerate(rows) if u != w]


def _subtree(args):
    pattern, n, t, exact_m, node_limit, rows, e, code = args
    en = _Enumerator(pattern, n, t, exact_m, node_limit)
    try:
        en.expand(rows, e, code)
    except _NodeLimit:
        return None, en.nodes
    return en.found, en.nodes


_PARALLEL_DEPTH = 4


def _run_pass(
    pattern: Pattern,
    n: int,
    t: int,
    exact_m: int | None,
    node_limit: int | None,
    threads: int,
    stop_at_first: bool = False,
) -> tuple[dict[tuple[int, ...], list[int]], int]:
    """Every H-free graph on n >= 1 vertices with >= t (or == exact_m) edges."""
    en = _Enumerator(pattern, n, t, exact_m, node_limit, stop_at_first)
    root = [0]
    root_code = (0,)
    try:
        en._count()
        if n == 1:
            if t <= 0 and (exact_m is None or exact_m == 0):
                en.found[root_code] = root
            return en.found, en.nodes
        if threads == 1 or n <= _PARALLEL_DEPTH + 1:
            en.expand(root, 0, root_code)
            return en.found, en.nodes
        frontier = en.frontier(root, 0, root_code, _PARALLEL_DEPTH)
    except _NodeLimit:
        raise SearchLimitExceeded(_partial(pattern, n, en.found, en.nodes)) from None
    remaining = None if node_limit is None else node_limit - en.nodes
    jobs = [(pattern, n, t, exact_m, remaining, r, e, c) for r, e, c in frontier]
    found = dict(en.found)
    nodes = en.nodes
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for sub, cnt in pool.map(_subtree, jobs):
            nodes += cnt
            if sub is None:
                raise SearchLimitExceeded(_partial(pattern, n, found, nodes))
            found.update(sub)
    return found, nodes


def _partial(pattern: Pattern, n: int, found, nodes: int) -> SearchResult:
    best = max((sum(r.bit_count() for r in rows) // 2 for rows in found.values()), default=-1)
    return SearchResult(n, pattern.name, best, (), nodes, 0.0, exact=False)


_EX_CACHE: dict[tuple, tuple[int, int]] = {}


def _pattern_key(pattern: Pattern) -> tuple:
    g = pattern.graph
    if g.n <= CANON_CAP:
        return ("c", g.n, kernels.canon_label(g.n, g.rows)[1])
    return ("r", g.n, g.rows)


def _ex_bootstrap(pattern: Pattern, n: int) -> tuple[int, int]:
    """(ex(n, H), nodes spent); serial, memoised, deterministic."""
    if pattern.k > n:
        return n * (n - 1) // 2, 0
    key = (_pattern_key(pattern), n)
    if key in _EX_CACHE:
        return _EX_CACHE[key]
    prev, nodes = _ex_bootstrap(pattern, n - 1)
    upper = _upper_bound(n, prev)
    for t in range(upper, prev - 1, -1):
        found, cnt = _run_pass(pattern, n, t, None, None, 1, stop_at_first=True)
        nodes += cnt
        if found:
            _EX_CACHE[key] = (t, nodes)
            return t, nodes
    raise AssertionError("adding an isolated vertex preserves freeness")


def _upper_bound(n: int, prev: int) -> int:
    full = n * (n - 1) // 2
    if n <= 2:
        return full
    return min(full, n * prev // (n - 2))


def _check_pattern(pattern: Pattern | Graph) -> Pattern:
    if isinstance(pattern, Graph):
        pattern = Pattern(pattern)
    if pattern.graph.m == 0:
        raise DomainError("pattern has no edges; every large enough graph contains it")
    return pattern


def _materialise(found: dict, keep: Iterable[tuple[int, ...]]) -> tuple:
    items = [(form_from_code(code), Graph._trusted(found[code])) for code in keep]
    items.sort(key=lambda it: it[0].bytes)
    return tuple(items)


def search_max_edges(n: int, pattern: Pattern | Graph, cfg: SearchConfig | None = None) -> SearchResult:
    """Exact ex(n, H) and, if requested, every extremal graph up to isomorphism."""
    cfg = cfg or SearchConfig()
    pattern = _check_pattern(pattern)
    start = time.perf_counter()
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > SEARCH_CAP:
        raise CapacityError(f"exhaustive search capped at n={SEARCH_CAP}")
    if pattern.k > n:
        g = complete_graph(n)
        from .canon import canonical_form

        ext = ((canonical_form(g), g),) if cfg.collect_extremal else ()
        return SearchResult(n, pattern.name, g.m, ext, 0, time.perf_counter() - start)

    prev, nodes = _ex_bootstrap(pattern, n - 1) if n >= 1 else (0, 0)
    upper = _upper_bound(n, prev)
    floor = prev
    if cfg.seed is not None:
        if cfg.seed > upper:
            raise ValueError(f"seed {cfg.seed} exceeds the upper bound {upper}")
        floor = max(floor, cfg.seed)
    spent = 0
    for t in range(upper, floor - 1, -1):
        limit = None if cfg.node_limit is None else cfg.node_limit - spent
        try:
            found, cnt = _run_pass(pattern, n, t, None, limit, cfg.threads)
        except SearchLimitExceeded as exc:
            exc.partial.nodes_explored += nodes + spent
            exc.partial.max_edges = max(exc.partial.max_edges, prev)
            exc.partial.elapsed = time.perf_counter() - start
            raise
        spent += cnt
        if found:
            break
    else:
        raise ValueError(f"no H-free graph reaches the seed {cfg.seed}")
    best = max(sum(r.bit_count() for r in rows) // 2 for rows in found.values())
    keep = [c for c, rows in found.items() if sum(r.bit_count() for r in rows) // 2 == best]
    ext = _materialise(found, keep) if cfg.collect_extremal else ()
    return SearchResult(n, pattern.name, best, ext, nodes + spent, time.perf_counter() - start)


def enumerate_free_at(
    n: int, pattern: Pattern | Graph, m: int, cfg: SearchConfig | None = None
) -> tuple[CanonicalForm, ...]:
    """All isomorphism classes of H-free graphs with n vertices and m edges, sorted."""
    cfg = cfg or SearchConfig()
    pattern = _check_pattern(pattern)
    if n > SEARCH_CAP:
        raise CapacityError(f"exhaustive search capped at n={SEARCH_CAP}")
    if not 0 <= m <= n * (n - 1) // 2:
        raise ValueError(f"m={m} outside 0..C(n,2)")
    if n == 0:
        from .canon import canonical_form

        return (canonical_form(empty_graph(0)),)
    found, _ = _run_pass(pattern, n, m, m, cfg.node_limit, cfg.threads)
    return tuple(form for form, _ in _materialise(found, found))


def ex_value(n: int, pattern: Pattern | Graph) -> int:
    """ex(n, H) only; memoised across calls."""
    pattern = _check_pattern(pattern)
    if n > SEARCH_CAP and pattern.k <= n:
        raise CapacityError(f"exhaustive search capped at n={SEARCH_CAP}")
    return _ex_bootstrap(pattern, n)[0]


__all__ = [
    "SearchConfig",
    "SearchResult",
    "enumerate_free_at",
    "ex_value",
    "level_thresholds",
    "search_max_edges",
]
