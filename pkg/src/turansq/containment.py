"""Non-induced subgraph containment with embedding witnesses.

A :class:`Pattern` precomputes visit orders for the backtracking kernel: one
global order (highest-degree vertex first, then neighbours-first) and one
anchored order per automorphism orbit, used by the search to look only for
embeddings through a newly added vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .canon import CANON_CAP, vertex_orbits
from .errors import DomainError
from .graph import Graph, from_edges, iter_bits


def _visit_order(g: Graph, first: int) -> list[int]:
    deg = g.degrees()
    order = [first]
    placed = 1 << first
    while len(order) < g.n:
        best = None
        best_key = None
        for v in range(g.n):
            if (placed >> v) & 1:
                continue
            key = ((g.rows[v] & placed).bit_count(), deg[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    return order


@dataclass(frozen=True)
class _Plan:
    order: tuple[int, ...]
    back: tuple[int, ...]
    pdeg: tuple[int, ...]


def _plan(g: Graph, order: list[int]) -> _Plan:
    pos = {v: i for i, v in enumerate(order)}
    back = []
    for i, v in enumerate(order):
        b = 0
        for u in iter_bits(g.rows[v]):
            if pos[u] < i:
                b |= 1 << pos[u]
        back.append(b)
    return _Plan(tuple(order), tuple(back), tuple(g.degree(v) for v in order))


@dataclass(frozen=True)
class Pattern:
    """A forbidden graph prepared for repeated containment queries."""

    graph: Graph
    name: str = ""
    order: tuple[int, ...] = field(init=False)
    degree_sequence: tuple[int, ...] = field(init=False)
    _global: _Plan = field(init=False, repr=False, compare=False)
    _anchored: tuple[_Plan, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        g = self.graph
        if g.n < 1:
            raise DomainError("pattern must have at least one vertex")
        deg = g.degrees()
        first = max(range(g.n), key=lambda v: (deg[v], -v))
        plan = _plan(g, _visit_order(g, first))
        if g.n <= CANON_CAP:
            orbit = vertex_orbits(g)
            reps = sorted(set(orbit))
        else:
            reps = list(range(g.n))
        anchored = tuple(_plan(g, _visit_order(g, q)) for q in reps)
        object.__setattr__(self, "order", plan.order)
        object.__setattr__(self, "degree_sequence", tuple(sorted(deg, reverse=True)))
        object.__setattr__(self, "_global", plan)
        object.__setattr__(self, "_anchored", anchored)
        if not self.name:
            from .graph import encode_graph6

            object.__setattr__(self, "name", "g6:" + encode_graph6(g))

    @property
    def k(self) -> int:
        return self.graph.n

    def __str__(self) -> str:
        return self.name


def _unplan(plan: _Plan, img: list[int]) -> tuple[int, ...]:
    out = [0] * len(img)
    for i, v in enumerate(plan.order):
        out[v] = img[i]
    return tuple(out)


def contains_subgraph(host: Graph, pattern: Pattern | Graph) -> tuple[int, ...] | None:
    """Embedding ``pattern vertex -> host vertex`` if one exists, else None."""
    if isinstance(pattern, Graph):
        pattern = Pattern(pattern)
    if pattern.k > host.n or pattern.graph.m > host.m:
        return None
    plan = pattern._global
    img = kernels.find_embedding(host.rows, pattern.k, plan.order, plan.back, plan.pdeg)
    return None if img is None else _unplan(plan, img)


def embedding_through(rows, pattern: Pattern, v: int) -> tuple[int, ...] | None:
    """Embedding into adjacency ``rows`` whose image contains vertex ``v``."""
    if pattern.k > len(rows):
        return None
    for plan in pattern._anchored:
        img = kernels.find_embedding(rows, pattern.k, plan.order, plan.back, plan.pdeg, v)
        if img is not None:
            return _unplan(plan, img)
    return None


def is_embedding(host: Graph, pattern: Graph, emb) -> bool:
    """Independent witness check: injective and edge-preserving."""
    if len(emb) != pattern.n or len(set(emb)) != len(emb):
        return False
    if any(not 0 <= x < host.n for x in emb):
        return False
    return all(host.has_edge(emb[u], emb[v]) for u, v in pattern.edges())


def lemma12_witness(n: int, r: int) -> tuple[Graph, tuple[int, ...]]:
    """K_{n,n} with a path on r vertices inside class X, and the squared-path walk.

    X is ``0..n-1`` with the path ``0-1-...-(r-1)``; Y is ``n..2n-1``.  The
    returned tuple lists host vertices in squared-path order, so consecutive
    entries and entries two apart are host edges.  Its length is
    ``3r//2 + 1``.
    """
    if r < 2 or n < r:
        raise DomainError(f"need 2 <= r <= n, got r={r}, n={n}")
    edges = [(x, n + y) for x in range(n) for y in range(n)]
    edges += [(x, x + 1) for x in range(r - 1)]
    host = from_edges(2 * n, edges)
    s = r // 2
    walk: list[int] = []
    for t in range(s):
        walk += [n + t, 2 * t, 2 * t + 1]
    walk.append(n + s)
    if r % 2:
        walk.append(2 * s)
    return host, tuple(walk)


def path_graph(l: int) -> Graph:
    """The path on ``l`` vertices."""
    return from_edges(l, [(a, a + 1) for a in range(l - 1)])


def parse_pattern(selector: str) -> Pattern:
    """Resolve ``square-path:<k>``, ``flat-tetra``, ``t-prime``, ``clique:<n>``,
    ``path:<l>`` or ``g6:<graph6>`` to a :class:`Pattern`."""
    from .constructions import build, flattened_tetrahedron, square_path, t_prime
    from .graph import complete_graph, decode_graph6

    kind, _, arg = selector.strip().partition(":")
    if kind == "flat-tetra" and not arg:
        return Pattern(build(flattened_tetrahedron()), selector)
    if kind == "t-prime" and not arg:
        return Pattern(build(t_prime()), selector)
    if kind == "g6" and arg:
        return Pattern(decode_graph6(arg), selector)
    if kind in ("square-path", "clique", "path"):
        try:
            size = int(arg)
        except ValueError:
            raise DomainError(f"pattern {selector!r}: expected an integer after ':'") from None
        if size < 1:
            raise DomainError(f"pattern {selector!r}: size must be >= 1")
        if kind == "square-path":
            g = build(square_path(size))
        elif kind == "clique":
            g = complete_graph(size)
        else:
            g = path_graph(size)
        return Pattern(g, selector)
    raise DomainError(
        f"unknown pattern {selector!r}; use square-path:<k>, flat-tetra, t-prime, "
        "clique:<n>, path:<l> or g6:<string>"
    )
