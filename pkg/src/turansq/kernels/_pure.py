"""Reference implementations of the two hot kernels.

Both kernels take adjacency as a sequence of int bitmask rows.  The compiled
module mirrors these functions exactly, including tie-breaking, so the two
backends return identical canonical codes.
"""

from __future__ import annotations

from collections.abc import Sequence

MAX_CANON_N = 64
MAX_PATTERN_K = 64


def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    # Split every cell by neighbour counts into all current cells until stable.
    while True:
        masks = []
        for c in cells:
            mk = 0
            for v in c:
                mk |= 1 << v
            masks.append(mk)
        new: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            keyed = sorted(
                (tuple((rows[v] & mk).bit_count() for mk in masks), v) for v in c
            )
            group = [keyed[0][1]]
            for (k0, _), (k1, v) in zip(keyed, keyed[1:]):
                if k1 != k0:
                    new.append(group)
                    group = [v]
                else:
                    group.append(v)
            new.append(group)
        if len(new) == len(cells):
            return new
        cells = new


def _leaf_code(rows: Sequence[int], lab: list[int]) -> tuple[int, ...]:
    pos = [0] * len(lab)
    for p, v in enumerate(lab):
        pos[v] = p
    code = []
    for v in lab:
        acc = 0
        r = rows[v]
        while r:
            low = r & -r
            acc |= 1 << pos[low.bit_length() - 1]
            r ^= low
        code.append(acc)
    return tuple(code)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def canon_label(
    n: int, rows: Sequence[int], colors: Sequence[int] | None = None
) -> tuple[list[int], tuple[int, ...]]:
    """Return ``(lab, code)``: ``lab[p]`` is the vertex placed at position ``p``.

    ``code`` is the tuple of relabelled adjacency rows, maximal over the
    individualisation-refinement tree; it is identical for isomorphic inputs.
    ``colors`` restricts isomorphisms to colour-preserving ones.
    """
    if n == 0:
        return [], ()
    if colors is None:
        cells = [list(range(n))]
    else:
        order = sorted(range(n), key=lambda v: (colors[v], v))
        cells = [[order[0]]]
        for a, b in zip(order, order[1:]):
            if colors[a] != colors[b]:
                cells.append([b])
            else:
                cells[-1].append(b)
    cells = _refine(rows, cells)

    st: dict = {"first": None, "best": None}
    gens: list[list[int]] = []

    def common(a: list[int], b: list[int]) -> int:
        c = 0
        for x, y in zip(a, b):
            if x != y:
                break
            c += 1
        return c

    def dfs(cells: list[list[int]], path: list[int]) -> int:
        depth = len(path)
        if len(cells) == n:
            lab = [c[0] for c in cells]
            code = _leaf_code(rows, lab)
            if st["first"] is None:
                st["first"] = st["best"] = (code, lab, path)
                return depth
            fcode, flab, fpath = st["first"]
            bcode, blab, bpath = st["best"]
            if code == fcode:
                gamma = [0] * n
                for p in range(n):
                    gamma[lab[p]] = flab[p]
                gens.append(gamma)
                return common(path, fpath)
            if code == bcode:
                gamma = [0] * n
                for p in range(n):
                    gamma[lab[p]] = blab[p]
                gens.append(gamma)
                return common(path, bpath)
            if code > bcode:
                st["best"] = (code, lab, path)
            return depth

        ti = -1
        for i, c in enumerate(cells):
            if len(c) > 1 and (ti < 0 or len(c) < len(cells[ti])):
                ti = i
        cell = cells[ti]
        tried: list[int] = []
        for v in cell:
            if tried:
                parent = list(range(n))
                for g in gens:
                    if all(g[p] == p for p in path):
                        for x in range(n):
                            a, b = _find(parent, x), _find(parent, g[x])
                            if a != b:
                                parent[a] = b
                rv = _find(parent, v)
                if any(_find(parent, u) == rv for u in tried):
                    continue
            tried.append(v)
            child = cells[:ti] + [[v], [u for u in cell if u != v]] + cells[ti + 1:]
            r = dfs(_refine(rows, child), path + [v])
            if r < depth:
                return r
        return depth

    dfs(cells, [])
    code, lab, _ = st["best"]
    return lab, code


def find_embedding(
    host_rows: Sequence[int],
    k: int,
    order: Sequence[int],
    back: Sequence[int],
    pdeg: Sequence[int],
    anchor: int = -1,
) -> list[int] | None:
    """Backtracking non-induced subgraph search.

    Pattern position ``i`` must land on a host vertex adjacent to the images of
    every earlier position in the bitmask ``back[i]`` and of host degree at
    least ``pdeg[i]``.  Returns host vertices per position, or None.  With
    ``anchor >= 0`` position 0 is pinned to that host vertex.
    ``order`` is accepted for signature parity with the compiled kernel.
    """
    n = len(host_rows)
    if k > n:
        return None
    if k == 0:
        return []
    hdeg = [r.bit_count() for r in host_rows]
    by_deg: dict[int, int] = {}
    degok = []
    for d in pdeg:
        if d not in by_deg:
            mk = 0
            for v in range(n):
                if hdeg[v] >= d:
                    mk |= 1 << v
            by_deg[d] = mk
        degok.append(by_deg[d])
    backs = []
    for b in back:
        lst = []
        while b:
            low = b & -b
            lst.append(low.bit_length() - 1)
            b ^= low
        backs.append(lst)

    img = [0] * k
    cand = [0] * k
    if anchor >= 0:
        if not (degok[0] >> anchor) & 1:
            return None
        img[0] = anchor
        used = 1 << anchor
        base = 1
    else:
        used = 0
        base = 0
    if base == k:
        return img

    def candidates(i: int, used: int) -> int:
        c = degok[i] & ~used
        for j in backs[i]:
            c &= host_rows[img[j]]
            if not c:
                break
        return c

    i = base
    cand[i] = candidates(i, used)
    while True:
        c = cand[i]
        if not c:
            i -= 1
            if i < base:
                return None
            used &= ~(1 << img[i])
            continue
        low = c & -c
        cand[i] = c ^ low
        img[i] = low.bit_length() - 1
        used |= low
        if i + 1 == k:
            return img
        i += 1
        cand[i] = candidates(i, used)
