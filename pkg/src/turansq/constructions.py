"""Builders for the named graphs and extremal families.

Bipartite-based families put class X (size ``i``) on vertices ``0..i-1`` and
class Y on ``i..n-1``.  Inside X the layout is: disjoint triangles, then the
star (centre first), then matched pairs on consecutive vertices.

>>> expected_edges(E(4, 8))
18
>>> build(square_path(5)).m
7
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .errors import ConstructionError
from .graph import Graph, from_edges


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    params: tuple[tuple[str, int], ...] = ()

    def __getitem__(self, key: str) -> int:
        for k, v in self.params:
            if k == key:
                return v
        raise KeyError(key)

    def __str__(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.kind}({args})"


def _spec(kind: str, **params: int) -> ConstructionSpec:
    for k, v in params.items():
        if not isinstance(v, int) or isinstance(v, bool):
            raise ConstructionError(f"{kind}: parameter {k} must be an integer")
    return ConstructionSpec(kind, tuple(params.items()))


def square_path(k: int) -> ConstructionSpec:
    return _spec("SquarePath", k=k)


def flattened_tetrahedron() -> ConstructionSpec:
    return _spec("FlattenedTetrahedron")


def t_prime() -> ConstructionSpec:
    return _spec("TPrime")


def E(i: int, n: int) -> ConstructionSpec:
    return _spec("E", i=i, n=n)


def Tmatch(i: int, n: int) -> ConstructionSpec:
    return _spec("Tmatch", i=i, n=n)


def S(i: int, n: int) -> ConstructionSpec:
    return _spec("S", i=i, n=n)


def F(i: int, j: int, n: int) -> ConstructionSpec:
    return _spec("F", i=i, j=j, n=n)


def H(i: int, n: int) -> ConstructionSpec:
    return _spec("H", i=i, n=n)


def G0() -> ConstructionSpec:
    return _spec("G0")


def turan(n: int, r: int) -> ConstructionSpec:
    return _spec("Turan", n=n, r=r)


def complete_bipartite(a: int, b: int) -> ConstructionSpec:
    return _spec("CompleteBipartite", a=a, b=b)


def conjecture_graph(k: int, i: int, n: int) -> ConstructionSpec:
    return _spec("ConjectureGraph", k=k, i=i, n=n)


def faudree_schelp_a(n: int, l: int) -> ConstructionSpec:
    return _spec("FaudreeSchelpA", n=n, l=l)


def faudree_schelp_b(n: int, l: int, t: int) -> ConstructionSpec:
    return _spec("FaudreeSchelpB", n=n, l=l, t=t)


# validation -----------------------------------------------------------------

def _require(cond: bool, spec: ConstructionSpec, what: str) -> None:
    if not cond:
        raise ConstructionError(f"{spec}: requires {what}")


def _validate(spec: ConstructionSpec) -> None:
    kind = spec.kind
    p = dict(spec.params)
    if kind == "SquarePath":
        _require(p["k"] >= 1, spec, "k >= 1")
    elif kind in ("E", "Tmatch", "S", "H"):
        _require(1 <= p["i"] <= p["n"], spec, "1 <= i <= n")
        if kind == "H":
            _require(p["i"] % 3 == 0, spec, "3 | i")
    elif kind == "F":
        i, j = p["i"], p["j"]
        _require(1 <= i <= p["n"], spec, "1 <= i <= n")
        _require(1 <= j <= i, spec, "1 <= j <= i")
        _require((i - j) % 3 == 0, spec, "3 | (i - j)")
    elif kind == "Turan":
        _require(p["n"] >= 0 and p["r"] >= 1, spec, "n >= 0 and r >= 1")
    elif kind == "CompleteBipartite":
        _require(p["a"] >= 0 and p["b"] >= 0, spec, "a, b >= 0")
    elif kind == "ConjectureGraph":
        k, i, n = p["k"], p["i"], p["n"]
        _require(k >= 3, spec, "k >= 3")
        c = 2 * k // 3 - 1
        _require(0 <= i <= n, spec, "0 <= i <= n")
        _require(i % c == 0, spec, f"(floor(2k/3) - 1) = {c} divides i")
    elif kind == "FaudreeSchelpA":
        _require(p["n"] >= 0 and p["l"] >= 2, spec, "n >= 0 and l >= 2")
    elif kind == "FaudreeSchelpB":
        n, l, t = p["n"], p["l"], p["t"]
        _require(l >= 2 and l % 2 == 0, spec, "l even and >= 2")
        _require(n >= 0, spec, "n >= 0")
        r = n % (l - 1)
        _require(r in (l // 2 % (l - 1), (l // 2 - 1) % (l - 1)), spec,
                 "n = l/2 or l/2 - 1 (mod l - 1)")
        _require(0 <= t <= n // (l - 1), spec, "0 <= t <= floor(n / (l - 1))")
        _require(n - t * (l - 1) >= l // 2 - 1, spec, "room for K_{l/2-1}")
    elif kind not in ("FlattenedTetrahedron", "TPrime", "G0"):
        raise ConstructionError(f"unknown construction {kind!r}")


# building -------------------------------------------------------------------

def _clique(vs) -> list[tuple[int, int]]:
    vs = list(vs)
    return [(a, b) for x, a in enumerate(vs) for b in vs[x + 1:]]


def _bipartite(i: int, n: int) -> list[tuple[int, int]]:
    return [(x, y) for x in range(i) for y in range(i, n)]


def _matching(start: int, size: int) -> list[tuple[int, int]]:
    return [(start + 2 * t, start + 2 * t + 1) for t in range(size // 2)]


def _star(start: int, size: int) -> list[tuple[int, int]]:
    return [(start, start + t) for t in range(1, size)]


def _triangles(start: int, count: int) -> list[tuple[int, int]]:
    out = []
    for t in range(count):
        out += _clique(range(start + 3 * t, start + 3 * t + 3))
    return out


# a b c d e f: corners a, d, f; midpoints b (a-d), c (a-f), e (d-f)
_TRIFORCE = [(0, 1), (1, 3), (0, 2), (2, 5), (3, 4), (4, 5), (1, 2), (2, 4), (1, 4)]
_DIAGONALS = [(0, 4), (3, 2), (1, 5)]


def _edges(spec: ConstructionSpec) -> tuple[int, list[tuple[int, int]]]:
    kind = spec.kind
    p = dict(spec.params)
    if kind == "SquarePath":
        k = p["k"]
        return k, [(a, a + d) for a in range(k) for d in (1, 2) if a + d < k]
    if kind == "FlattenedTetrahedron":
        return 6, list(_TRIFORCE)
    if kind == "TPrime":
        return 6, _TRIFORCE + _DIAGONALS
    if kind == "G0":
        return 5, _clique(range(4)) + [(0, 4)]
    if kind == "CompleteBipartite":
        a, b = p["a"], p["b"]
        return a + b, _bipartite(a, a + b)
    if kind == "Turan":
        n, r = p["n"], p["r"]
        sizes = [n // r + (1 if t < n % r else 0) for t in range(r)]
        bounds = []
        s = 0
        for sz in sizes:
            bounds.append((s, s + sz))
            s += sz
        edges = []
        for x, (a0, a1) in enumerate(bounds):
            for b0, b1 in bounds[x + 1:]:
                edges += [(u, v) for u in range(a0, a1) for v in range(b0, b1)]
        return n, edges
    if kind in ("E", "Tmatch", "S", "F", "H"):
        i, n = p["i"], p["n"]
        edges = _bipartite(i, n)
        if kind == "E":
            edges += _matching(0, i)
        elif kind == "Tmatch":
            edges += _matching(0, i) + _matching(i, n - i)
        elif kind == "S":
            edges += _star(0, i)
        elif kind == "F":
            t = (i - p["j"]) // 3
            edges += _triangles(0, t) + _star(3 * t, p["j"])
        else:
            edges += _triangles(0, i // 3)
        return n, edges
    if kind == "ConjectureGraph":
        k, i, n = p["k"], p["i"], p["n"]
        c = 2 * k // 3 - 1
        edges = _bipartite(i, n)
        for t in range(i // c):
            edges += _clique(range(t * c, t * c + c))
        return n, edges
    if kind == "FaudreeSchelpA":
        n, l = p["n"], p["l"]
        size = l - 1
        edges = []
        for t in range(n // size):
            edges += _clique(range(t * size, t * size + size))
        edges += _clique(range(n - n % size, n))
        return n, edges
    if kind == "FaudreeSchelpB":
        n, l, t = p["n"], p["l"], p["t"]
        size = l - 1
        edges = []
        for c in range(t):
            edges += _clique(range(c * size, c * size + size))
        hub0 = t * size
        hubs = range(hub0, hub0 + l // 2 - 1)
        edges += _clique(hubs)
        edges += [(h, v) for h in hubs for v in range(hub0 + l // 2 - 1, n)]
        return n, edges
    raise ConstructionError(f"unknown construction {kind!r}")


def build(spec: ConstructionSpec) -> Graph:
    _validate(spec)
    n, edges = _edges(spec)
    return from_edges(n, edges)


def expected_edges(spec: ConstructionSpec) -> int:
    """Closed-form edge count, computed without building the graph."""
    _validate(spec)
    kind = spec.kind
    p = dict(spec.params)
    if kind in ("E", "Tmatch", "S", "F", "H"):
        i, n = p["i"], p["n"]
        base = i * (n - i)
        return base + {
            "E": i // 2,
            "Tmatch": i // 2 + (n - i) // 2,
            "S": i - 1,
            "F": i - 1,
            "H": i,
        }[kind]
    if kind == "ConjectureGraph":
        k, i, n = p["k"], p["i"], p["n"]
        return i * (n - i) + i * (2 * k // 3 - 2) // 2
    if kind == "SquarePath":
        return max(2 * p["k"] - 3, 0)
    fixed: dict[str, int] = {"FlattenedTetrahedron": 9, "TPrime": 12, "G0": 7}
    if kind in fixed:
        return fixed[kind]
    if kind == "CompleteBipartite":
        return p["a"] * p["b"]
    if kind == "Turan":
        n, r = p["n"], p["r"]
        sizes = [n // r + (1 if t < n % r else 0) for t in range(r)]
        return (n * n - sum(s * s for s in sizes)) // 2
    if kind == "FaudreeSchelpA":
        n, l = p["n"], p["l"]
        m, r = divmod(n, l - 1)
        return m * (l - 1) * (l - 2) // 2 + r * (r - 1) // 2
    if kind == "FaudreeSchelpB":
        n, l, t = p["n"], p["l"], p["t"]
        h = l // 2 - 1
        rest = n - t * (l - 1) - h
        return t * (l - 1) * (l - 2) // 2 + h * (h - 1) // 2 + h * rest
    raise ConstructionError(f"unknown construction {kind!r}")


def vertex_names(spec: ConstructionSpec) -> list[str]:
    """Display labels matching the fixed layout (x1.., y1.. for bipartite families)."""
    _validate(spec)
    kind = spec.kind
    p = dict(spec.params)
    if kind in ("E", "Tmatch", "S", "F", "H", "ConjectureGraph"):
        i, n = p["i"], p["n"]
        return [f"x{t + 1}" for t in range(i)] + [f"y{t + 1}" for t in range(n - i)]
    if kind == "CompleteBipartite":
        return [f"x{t + 1}" for t in range(p["a"])] + [f"y{t + 1}" for t in range(p["b"])]
    if kind in ("FlattenedTetrahedron", "TPrime"):
        return list("abcdef")
    n, _ = _edges(spec)
    return [f"v{t + 1}" for t in range(n)]


# extremal families per target ---------------------------------------------

def _f_family(i: int, n: int) -> list[ConstructionSpec]:
    return [F(i, j, n) for j in range(i, 0, -3)][::-1]


def p6_extremal_specs(n: int) -> list[ConstructionSpec]:
    """Extremal P6^2-free graphs per residue of n mod 6 (n >= 6)."""
    half_up = (n + 1) // 2
    r = n % 6
    if r == 1:
        return _f_family(half_up, n) + [H(n // 2, n)]
    if r == 2:
        return _f_family(n // 2, n) + _f_family(n // 2 + 1, n)
    if r == 3:
        return _f_family(half_up, n) + [H(half_up + 1, n)]
    return [H({0: n // 2, 4: n // 2 + 1, 5: half_up}[r], n)]


def t_extremal_specs(n: int) -> list[ConstructionSpec]:
    """Extremal T-free graphs per residue of n mod 4 (n not 5, 6)."""
    half_up = (n + 1) // 2
    r = n % 4
    if r == 0:
        return [Tmatch(n // 2, n)]
    if r == 2:
        return [Tmatch(n // 2, n), Tmatch(n // 2 + 1, n), S(n // 2, n)]
    return [Tmatch(half_up, n), S(half_up, n)]


def p5_extremal_specs(n: int) -> list[ConstructionSpec]:
    """Extremal P5^2-free graphs (n >= 5)."""
    if n == 5:
        return [E(2, 5), E(3, 5), G0()]
    if n % 4 == 1:
        return [E((n + 1) // 2, n), E(n // 2, n)]
    if n % 4 == 2:
        # ceil(n/2) = floor(n/2) here; the second class matches the larger side
        return [E(n // 2, n), E(n // 2 + 1, n)]
    return [E((n + 1) // 2, n)]


FAMILY_BUILDERS: dict[str, Callable[..., ConstructionSpec]] = {
    "square-path": square_path,
    "flat-tetra": flattened_tetrahedron,
    "t-prime": t_prime,
    "E": E,
    "Tmatch": Tmatch,
    "S": S,
    "F": F,
    "H": H,
    "G0": G0,
    "turan": turan,
    "bipartite": complete_bipartite,
    "conjecture": conjecture_graph,
    "fs-a": faudree_schelp_a,
    "fs-b": faudree_schelp_b,
}
