"""Dense simple graphs stored as bitset adjacency rows, plus the graph6 codec.

Row ``v`` is a Python int whose bit ``u`` is set iff ``{u, v}`` is an edge.
Graphs are immutable; every mutator returns a new value.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from .errors import CapacityError, Graph6ParseError, InvalidEdgeError

VERTEX_CAP = 512


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        total = 0
        for v, row in enumerate(self.rows):
            if row & ~full or (row >> v) & 1:
                raise InvalidEdgeError(f"row {v} has a loop or out-of-range bit")
            total += row.bit_count()
        for v, row in enumerate(self.rows):
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not (self.rows[u] >> v) & 1:
                    raise InvalidEdgeError(f"asymmetric adjacency at {{{u}, {v}}}")
                r ^= low
        object.__setattr__(self, "m", total // 2)

    @classmethod
    def _trusted(cls, rows: Sequence[int], m: int | None = None) -> Graph:
        # Skips validation; callers guarantee symmetry and an empty diagonal.
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(rows))
        object.__setattr__(g, "rows", tuple(rows))
        if m is None:
            m = sum(r.bit_count() for r in rows) // 2
        object.__setattr__(g, "m", m)
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, row in enumerate(self.rows):
            for u in iter_bits(row >> (v + 1)):
                yield v, v + 1 + u

    def add_edge(self, u: int, v: int) -> Graph:
        return add_edge(self, u, v)

    def remove_edge(self, u: int, v: int) -> Graph:
        _check_pair(self, u, v)
        if not self.has_edge(u, v):
            return self
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(rows, self.m - 1)

    def delete_vertex(self, v: int) -> Graph:
        """Drop ``v`` and shift later vertices down by one."""
        if not 0 <= v < self.n:
            raise InvalidEdgeError(f"vertex {v} out of range")
        low = (1 << v) - 1
        rows = []
        for u, row in enumerate(self.rows):
            if u != v:
                rows.append((row & low) | ((row >> (v + 1)) << v))
        return Graph._trusted(rows, self.m - self.degree(v))

    def permute(self, perm: Sequence[int]) -> Graph:
        """Relabel so that old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            acc = 0
            for u in iter_bits(row):
                acc |= 1 << perm[u]
            rows[perm[v]] = acc
        return Graph._trusted(rows, self.m)

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            acc = 0
            for u in iter_bits(self.rows[v]):
                if u in pos:
                    acc |= 1 << pos[u]
            rows.append(acc)
        return Graph._trusted(rows)

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        rows = list(self.rows) + [r << shift for r in other.rows]
        return Graph._trusted(rows, self.m + other.m)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={encode_graph6(self)!r})"


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _check_pair(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise InvalidEdgeError(f"loop at vertex {u}")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise InvalidEdgeError(f"edge {{{u}, {v}}} out of range for n={g.n}")


def empty_graph(n: int, cap: int = VERTEX_CAP) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n > cap:
        raise CapacityError(f"n={n} exceeds vertex cap {cap}")
    return Graph._trusted([0] * n, 0)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_pair(g, u, v)
    if g.has_edge(u, v):
        return g
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph._trusted(rows, g.m + 1)


def from_edges(n: int, edges: Iterable[tuple[int, int]], cap: int = VERTEX_CAP) -> Graph:
    g = empty_graph(n, cap)
    rows = [0] * n
    for u, v in edges:
        _check_pair(g, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(rows)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted([full & ~(1 << v) for v in range(n)], n * (n - 1) // 2)


# graph6 ---------------------------------------------------------------------

_G6_HEADER = b">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def encode_graph6(g: Graph) -> str:
    out = bytearray(_encode_n(g.n))
    acc = nbits = 0
    rows = g.rows
    for j in range(1, g.n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def decode_graph6(text: str | bytes, cap: int = VERTEX_CAP) -> Graph:
    data = text.encode("ascii", "replace") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    start = len(_G6_HEADER) if data.startswith(_G6_HEADER) else 0
    body = data[start:]
    for k, b in enumerate(body):
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"byte {b!r} outside printable range 63-126", start + k)
    if not body:
        raise Graph6ParseError("empty input", start)

    if body[0] != 126:
        n, pos = body[0] - 63, 1
    elif len(body) >= 2 and body[1] == 126:
        if len(body) < 8:
            raise Graph6ParseError("truncated 8-byte vertex-count header", start + len(body))
        n, pos = 0, 8
        for b in body[2:8]:
            n = (n << 6) | (b - 63)
    else:
        if len(body) < 4:
            raise Graph6ParseError("truncated 4-byte vertex-count header", start + len(body))
        n, pos = 0, 4
        for b in body[1:4]:
            n = (n << 6) | (b - 63)
    if n > cap:
        raise CapacityError(f"graph6 vertex count {n} exceeds cap {cap}")

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(body) - pos
    if have < need:
        raise Graph6ParseError(f"expected {need} data bytes, found {have}", start + len(body))
    if have > need:
        raise Graph6ParseError("trailing bytes after graph data", start + pos + need)

    rows = [0] * n
    bit = 0
    i = 0
    j = 1
    for k in range(need):
        chunk = body[pos + k] - 63
        for s in range(5, -1, -1):
            if bit >= nbits:
                if (chunk >> s) & 1:
                    raise Graph6ParseError("non-zero padding bits", start + pos + k)
                continue
            if (chunk >> s) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph._trusted(rows)
