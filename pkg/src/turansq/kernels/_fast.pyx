# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled versions of the canonical-labelling and embedding kernels.

Semantics match ``_pure`` exactly; see that module for the contracts.
Canonical labelling is limited to 64 vertices (one word per row), embedding
search to 512 host vertices and 64 pattern vertices.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy, memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64
    MAXW = 8

MAX_CANON_N = MAXN
MAX_PATTERN_K = MAXN
MAX_HOST_N = MAXN * MAXW


cdef struct Part:
    int ncells
    int lab[MAXN]
    int start[MAXN + 1]


cdef struct CanonState:
    int n
    uint64_t rows[MAXN]
    int have_first
    uint64_t first_code[MAXN]
    int first_lab[MAXN]
    int first_path[MAXN]
    int first_len
    uint64_t best_code[MAXN]
    int best_lab[MAXN]
    int best_path[MAXN]
    int best_len
    int* gens
    int ngens
    int cap_gens
    int path[MAXN]


cdef inline int _cmp_keys(int* ka, int a, int* kb, int b, int nc) nogil:
    cdef int t
    for t in range(nc):
        if ka[t] != kb[t]:
            return -1 if ka[t] < kb[t] else 1
    if a != b:
        return -1 if a < b else 1
    return 0


cdef void _refine(CanonState* st, Part* p) nogil:
    cdef uint64_t masks[MAXN]
    cdef int keys[MAXN * MAXN]
    cdef int idx[MAXN]
    cdef Part q
    cdef int c, s, e, i, j, t, v, nc, size, tmp, nq, pos
    cdef uint64_t mk
    while True:
        nc = p.ncells
        for c in range(nc):
            mk = 0
            for i in range(p.start[c], p.start[c + 1]):
                mk |= (<uint64_t>1) << p.lab[i]
            masks[c] = mk
        nq = 0
        pos = 0
        for c in range(nc):
            s = p.start[c]
            e = p.start[c + 1]
            size = e - s
            if size == 1:
                q.start[nq] = pos
                q.lab[pos] = p.lab[s]
                pos += 1
                nq += 1
                continue
            for i in range(size):
                v = p.lab[s + i]
                idx[i] = i
                for t in range(nc):
                    keys[i * MAXN + t] = __builtin_popcountll(st.rows[v] & masks[t])
            # insertion sort by (key vector, vertex)
            for i in range(1, size):
                tmp = idx[i]
                j = i - 1
                while j >= 0 and _cmp_keys(&keys[idx[j] * MAXN], p.lab[s + idx[j]],
                                           &keys[tmp * MAXN], p.lab[s + tmp], nc) > 0:
                    idx[j + 1] = idx[j]
                    j -= 1
                idx[j + 1] = tmp
            q.start[nq] = pos
            nq += 1
            q.lab[pos] = p.lab[s + idx[0]]
            pos += 1
            for i in range(1, size):
                for t in range(nc):
                    if keys[idx[i] * MAXN + t] != keys[idx[i - 1] * MAXN + t]:
                        q.start[nq] = pos
                        nq += 1
                        break
                q.lab[pos] = p.lab[s + idx[i]]
                pos += 1
        q.start[nq] = pos
        q.ncells = nq
        memcpy(p, &q, sizeof(Part))
        if nq == nc:
            return


cdef void _leaf_code(CanonState* st, Part* p, uint64_t* code) nogil:
    cdef int pos[MAXN]
    cdef int i, n = st.n
    cdef uint64_t r, acc
    for i in range(n):
        pos[p.lab[i]] = i
    for i in range(n):
        r = st.rows[p.lab[i]]
        acc = 0
        while r:
            acc |= (<uint64_t>1) << pos[__builtin_ctzll(r)]
            r &= r - 1
        code[i] = acc


cdef int _cmp_code(uint64_t* a, uint64_t* b, int n) nogil:
    cdef int i
    for i in range(n):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


cdef int _common(int* a, int la, int* b, int lb) nogil:
    cdef int c = 0
    while c < la and c < lb and a[c] == b[c]:
        c += 1
    return c


cdef int _add_gen(CanonState* st, int* lab, int* target) nogil:
    cdef int p, n = st.n
    cdef int* g
    if st.ngens == st.cap_gens:
        st.cap_gens = st.cap_gens * 2 + 8
        g = <int*> realloc(st.gens, st.cap_gens * MAXN * sizeof(int))
        if g == NULL:
            return -1
        st.gens = g
    g = &st.gens[st.ngens * MAXN]
    for p in range(n):
        g[lab[p]] = target[p]
    st.ngens += 1
    return 0


cdef inline int _uf_find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef int _dfs(CanonState* st, Part* p, int depth) nogil:
    cdef int n = st.n
    cdef uint64_t code[MAXN]
    cdef int leaflab[MAXN]
    cdef int i, ti, v, r, s, e, k, x, a, b, gi, ok, rv, skip
    cdef int tried[MAXN]
    cdef int ntried = 0
    cdef int cell[MAXN]
    cdef int csize
    cdef int parent[MAXN]
    cdef int* g
    cdef Part child
    if p.ncells == n:
        _leaf_code(st, p, code)
        for i in range(n):
            leaflab[i] = p.lab[i]
        if not st.have_first:
            st.have_first = 1
            memcpy(st.first_code, code, n * sizeof(uint64_t))
            memcpy(st.best_code, code, n * sizeof(uint64_t))
            memcpy(st.first_lab, leaflab, n * sizeof(int))
            memcpy(st.best_lab, leaflab, n * sizeof(int))
            memcpy(st.first_path, st.path, depth * sizeof(int))
            memcpy(st.best_path, st.path, depth * sizeof(int))
            st.first_len = depth
            st.best_len = depth
            return depth
        if _cmp_code(code, st.first_code, n) == 0:
            _add_gen(st, leaflab, st.first_lab)
            return _common(st.path, depth, st.first_path, st.first_len)
        r = _cmp_code(code, st.best_code, n)
        if r == 0:
            _add_gen(st, leaflab, st.best_lab)
            return _common(st.path, depth, st.best_path, st.best_len)
        if r > 0:
            memcpy(st.best_code, code, n * sizeof(uint64_t))
            memcpy(st.best_lab, leaflab, n * sizeof(int))
            memcpy(st.best_path, st.path, depth * sizeof(int))
            st.best_len = depth
        return depth

    ti = -1
    for i in range(p.ncells):
        csize = p.start[i + 1] - p.start[i]
        if csize > 1 and (ti < 0 or csize < p.start[ti + 1] - p.start[ti]):
            ti = i
    s = p.start[ti]
    e = p.start[ti + 1]
    csize = e - s
    for i in range(csize):
        cell[i] = p.lab[s + i]

    for k in range(csize):
        v = cell[k]
        if ntried > 0:
            for x in range(n):
                parent[x] = x
            for gi in range(st.ngens):
                g = &st.gens[gi * MAXN]
                ok = 1
                for i in range(depth):
                    if g[st.path[i]] != st.path[i]:
                        ok = 0
                        break
                if ok:
                    for x in range(n):
                        a = _uf_find(parent, x)
                        b = _uf_find(parent, g[x])
                        if a != b:
                            parent[a] = b
            rv = _uf_find(parent, v)
            skip = 0
            for i in range(ntried):
                if _uf_find(parent, tried[i]) == rv:
                    skip = 1
                    break
            if skip:
                continue
        tried[ntried] = v
        ntried += 1
        # individualise v: cells before ti, [v], rest of cell, cells after
        child.ncells = p.ncells + 1
        for i in range(ti + 1):
            child.start[i] = p.start[i]
        child.start[ti + 1] = s + 1
        for i in range(ti + 1, p.ncells + 1):
            child.start[i + 1] = p.start[i]
        for i in range(s):
            child.lab[i] = p.lab[i]
        child.lab[s] = v
        x = s + 1
        for i in range(csize):
            if cell[i] != v:
                child.lab[x] = cell[i]
                x += 1
        for i in range(e, n):
            child.lab[i] = p.lab[i]
        _refine(st, &child)
        st.path[depth] = v
        r = _dfs(st, &child, depth + 1)
        if r < depth:
            return r
    return depth


def canon_label(int n, rows, colors=None):
    """Compiled twin of ``_pure.canon_label`` (n <= 64)."""
    if n > MAXN:
        raise ValueError("canon_label kernel supports at most 64 vertices")
    if n == 0:
        return [], ()
    cdef CanonState* st = <CanonState*> malloc(sizeof(CanonState))
    if st == NULL:
        raise MemoryError()
    cdef Part p
    cdef int i, v
    st.n = n
    st.have_first = 0
    st.gens = NULL
    st.ngens = 0
    st.cap_gens = 0
    for i in range(n):
        st.rows[i] = <uint64_t> rows[i]
    if colors is None:
        p.ncells = 1
        p.start[0] = 0
        p.start[1] = n
        for i in range(n):
            p.lab[i] = i
    else:
        order = sorted(range(n), key=lambda u: (colors[u], u))
        p.ncells = 0
        for i in range(n):
            v = order[i]
            if i == 0 or colors[order[i - 1]] != colors[v]:
                p.start[p.ncells] = i
                p.ncells += 1
            p.lab[i] = v
        p.start[p.ncells] = n
    try:
        with nogil:
            _refine(st, &p)
            _dfs(st, &p, 0)
        lab = [st.best_lab[i] for i in range(n)]
        code = tuple([st.best_code[i] for i in range(n)])
    finally:
        free(st.gens)
        free(st)
    return lab, code


cdef struct EmbedState:
    int n
    int w
    int k
    uint64_t* host      # n * w words
    uint64_t* degok     # k * w words
    uint64_t* cand      # k * w words
    int* back           # k * MAXN positions
    int* nback          # k
    int* img            # k


cdef int _embed(EmbedState* st, int base) nogil:
    cdef int w = st.w, k = st.k
    cdef uint64_t used[MAXW]
    cdef int i, t, j, word, v, any_bit
    cdef uint64_t* c
    cdef uint64_t* hr
    memset(used, 0, sizeof(used))
    for i in range(base):
        used[st.img[i] >> 6] |= (<uint64_t>1) << (st.img[i] & 63)
    i = base
    # compute cand[i]
    c = &st.cand[i * w]
    for word in range(w):
        c[word] = st.degok[i * w + word] & ~used[word]
    for t in range(st.nback[i]):
        hr = &st.host[st.img[st.back[i * MAXN + t]] * w]
        for word in range(w):
            c[word] &= hr[word]
    while True:
        c = &st.cand[i * w]
        v = -1
        for word in range(w):
            if c[word]:
                v = word * 64 + __builtin_ctzll(c[word])
                c[word] &= c[word] - 1
                break
        if v < 0:
            i -= 1
            if i < base:
                return 0
            used[st.img[i] >> 6] &= ~((<uint64_t>1) << (st.img[i] & 63))
            continue
        st.img[i] = v
        used[v >> 6] |= (<uint64_t>1) << (v & 63)
        if i + 1 == k:
            return 1
        i += 1
        c = &st.cand[i * w]
        for word in range(w):
            c[word] = st.degok[i * w + word] & ~used[word]
        for t in range(st.nback[i]):
            hr = &st.host[st.img[st.back[i * MAXN + t]] * w]
            any_bit = 0
            for word in range(w):
                c[word] &= hr[word]
                any_bit |= c[word] != 0
            if not any_bit:
                break


def find_embedding(host_rows, int k, order, back, pdeg, int anchor=-1):
    """Compiled twin of ``_pure.find_embedding``."""
    cdef int n = len(host_rows)
    if k > n:
        return None
    if k == 0:
        return []
    if n > MAXN * MAXW or k > MAXN:
        raise ValueError("find_embedding kernel size limits exceeded")
    cdef int w = (n + 63) // 64
    cdef EmbedState st
    cdef int i, t, v, word, found, d
    cdef object row, b
    cdef uint64_t lowmask = 0xFFFFFFFFFFFFFFFF
    st.n = n
    st.w = w
    st.k = k
    st.host = <uint64_t*> malloc(n * w * sizeof(uint64_t))
    st.degok = <uint64_t*> malloc(k * w * sizeof(uint64_t))
    st.cand = <uint64_t*> malloc(k * w * sizeof(uint64_t))
    st.back = <int*> malloc(k * MAXN * sizeof(int))
    st.nback = <int*> malloc(k * sizeof(int))
    st.img = <int*> malloc(k * sizeof(int))
    cdef int* hdeg = <int*> malloc(n * sizeof(int))
    if (st.host == NULL or st.degok == NULL or st.cand == NULL or st.back == NULL
            or st.nback == NULL or st.img == NULL or hdeg == NULL):
        free(st.host); free(st.degok); free(st.cand); free(st.back)
        free(st.nback); free(st.img); free(hdeg)
        raise MemoryError()
    try:
        for v in range(n):
            row = host_rows[v]
            d = 0
            for word in range(w):
                st.host[v * w + word] = <uint64_t> ((row >> (64 * word)) & lowmask)
                d += __builtin_popcountll(st.host[v * w + word])
            hdeg[v] = d
        for i in range(k):
            d = pdeg[i]
            for word in range(w):
                st.degok[i * w + word] = 0
            for v in range(n):
                if hdeg[v] >= d:
                    st.degok[i * w + (v >> 6)] |= (<uint64_t>1) << (v & 63)
            b = back[i]
            t = 0
            while b:
                low = b & -b
                st.back[i * MAXN + t] = low.bit_length() - 1
                t += 1
                b ^= low
            st.nback[i] = t
        if anchor >= 0:
            if not (st.degok[anchor >> 6] >> (anchor & 63)) & 1:
                return None
            st.img[0] = anchor
            if k == 1:
                return [anchor]
            with nogil:
                found = _embed(&st, 1)
        else:
            with nogil:
                found = _embed(&st, 0)
        if not found:
            return None
        return [st.img[i] for i in range(k)]
    finally:
        free(st.host); free(st.degok); free(st.cand); free(st.back)
        free(st.nback); free(st.img); free(hdeg)
