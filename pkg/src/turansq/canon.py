"""Canonical forms and isomorphism testing on top of the labelling kernel."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from . import kernels
from .errors import CapacityError
from .graph import Graph, decode_graph6, encode_graph6

CANON_CAP = 16


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """graph6 bytes of the canonically relabelled graph.

    Equal forms mean isomorphic graphs; ordering is by the bytes, which gives
    reports a stable class order.
    """

    bytes: bytes
    n: int

    @property
    def graph6(self) -> str:
        return self.bytes.decode("ascii")

    def graph(self) -> Graph:
        return decode_graph6(self.bytes)

    def __str__(self) -> str:
        return self.graph6


def canonical_labeling(
    g: Graph, colors: Sequence[int] | None = None, cap: int = CANON_CAP
) -> list[int]:
    """Vertex order such that ``g.permute`` by its inverse is canonical."""
    if g.n > cap:
        raise CapacityError(f"canonicalisation capped at n={cap}, got {g.n}")
    lab, _ = kernels.canon_label(g.n, g.rows, colors)
    return lab


def canonical_graph(g: Graph, cap: int = CANON_CAP) -> Graph:
    if g.n > cap:
        raise CapacityError(f"canonicalisation capped at n={cap}, got {g.n}")
    _, code = kernels.canon_label(g.n, g.rows)
    return Graph._trusted(list(code), g.m)


def canonical_form(g: Graph, cap: int = CANON_CAP) -> CanonicalForm:
    return CanonicalForm(encode_graph6(canonical_graph(g, cap)).encode("ascii"), g.n)


def form_from_code(code: Sequence[int]) -> CanonicalForm:
    # ``code`` as returned by the kernel: already the canonical rows.
    g = Graph._trusted(list(code))
    return CanonicalForm(encode_graph6(g).encode("ascii"), g.n)


def are_isomorphic(g: Graph, h: Graph, cap: int = CANON_CAP) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if g.n > cap:
        raise CapacityError(f"canonicalisation capped at n={cap}, got {g.n}")
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return kernels.canon_label(g.n, g.rows)[1] == kernels.canon_label(h.n, h.rows)[1]


def vertex_orbits(g: Graph, cap: int = CANON_CAP) -> list[int]:
    """Orbit id per vertex under Aut(g): the smallest vertex of its orbit."""
    if g.n > cap:
        raise CapacityError(f"canonicalisation capped at n={cap}, got {g.n}")
    rep: list[int] = []
    seen: dict[tuple[int, ...], int] = {}
    for v in range(g.n):
        colors = [0] * g.n
        colors[v] = 1
        _, code = kernels.canon_label(g.n, g.rows, colors)
        rep.append(seen.setdefault(code, v))
    return rep
