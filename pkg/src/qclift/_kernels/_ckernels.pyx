# cython: boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled hot kernels: closed-walk enumeration and BFS girth."""

import numpy as np
cimport numpy as cnp
from libcpp.vector cimport vector

cnp.import_array()


cdef bint _is_canonical(int* walk, int n) noexcept nogil:
    cdef int e0 = walk[0]
    cdef int k, i, a, b
    for k in range(n):
        if walk[k] != e0:
            continue
        if k:
            for i in range(n):
                a = walk[(k + i) % n]
                b = walk[i]
                if a != b:
                    if a < b:
                        return False
                    break
        for i in range(n):
            a = walk[(k - i + n) % n]
            b = walk[i]
            if a != b:
                if a < b:
                    return False
                break
    return True


cdef void _walks_from(int e0, bint start_on_check,
                      const int[::1] edge_check, const int[::1] edge_var,
                      const int[::1] check_ptr, const int[::1] check_edges,
                      const int[::1] var_ptr, const int[::1] var_edges,
                      int max_len, vector[vector[int]]& out) noexcept nogil:
    # Explicit-stack DFS; cursor[d] is the next incidence slot to try at depth d.
    cdef vector[int] walk = vector[int](max_len + 1)
    cdef vector[int] node = vector[int](max_len + 1)
    cdef vector[bint] on_check = vector[bint](max_len + 1)
    cdef vector[int] cursor = vector[int](max_len + 1)
    cdef int start_node, depth, f, lo, hi, i
    cdef bint side

    walk[0] = e0
    if start_on_check:
        start_node = edge_check[e0]
        node[1] = edge_var[e0]
        on_check[1] = False
    else:
        start_node = edge_var[e0]
        node[1] = edge_check[e0]
        on_check[1] = True
    depth = 1
    cursor[1] = -1

    while depth >= 1:
        side = on_check[depth]
        if cursor[depth] == -1:
            # first visit at this depth: test for closure
            if depth >= 4 and depth % 2 == 0 and node[depth] == start_node \
                    and side == start_on_check and walk[depth - 1] != e0 \
                    and _is_canonical(&walk[0], depth):
                for i in range(depth):
                    out[depth].push_back(walk[i])
            if depth == max_len:
                depth -= 1
                continue
            if side:
                cursor[depth] = check_ptr[node[depth]]
            else:
                cursor[depth] = var_ptr[node[depth]]
        if side:
            hi = check_ptr[node[depth] + 1]
        else:
            hi = var_ptr[node[depth] + 1]
        f = -1
        while cursor[depth] < hi:
            lo = cursor[depth]
            cursor[depth] = lo + 1
            if side:
                f = check_edges[lo]
            else:
                f = var_edges[lo]
            if f < e0 or f == walk[depth - 1]:
                f = -1
                continue
            break
        if f < 0:
            depth -= 1
            continue
        walk[depth] = f
        if side:
            node[depth + 1] = edge_var[f]
        else:
            node[depth + 1] = edge_check[f]
        on_check[depth + 1] = not side
        cursor[depth + 1] = -1
        depth += 1


def closed_walks(edge_check, edge_var, check_ptr, check_edges, var_ptr, var_edges, int max_len):
    """Enumerate tailless, backtrack-free closed walks of length 4..max_len.

    Same contract and output order as ``_pykernels.closed_walks``.
    """
    cdef const int[::1] ec = np.ascontiguousarray(edge_check, dtype=np.int32)
    cdef const int[::1] ev = np.ascontiguousarray(edge_var, dtype=np.int32)
    cdef const int[::1] cp = np.ascontiguousarray(check_ptr, dtype=np.int32)
    cdef const int[::1] ce = np.ascontiguousarray(check_edges, dtype=np.int32)
    cdef const int[::1] vp = np.ascontiguousarray(var_ptr, dtype=np.int32)
    cdef const int[::1] ve = np.ascontiguousarray(var_edges, dtype=np.int32)
    cdef vector[vector[int]] out = vector[vector[int]](max(max_len, 0) + 1)
    cdef int e0, n_edges = ec.shape[0]

    if max_len >= 4:
        with nogil:
            for e0 in range(n_edges):
                _walks_from(e0, True, ec, ev, cp, ce, vp, ve, max_len, out)
                _walks_from(e0, False, ec, ev, cp, ce, vp, ve, max_len, out)

    result = {}
    cdef int length
    cdef cnp.ndarray[cnp.int32_t, ndim=1] flat
    for length in range(4, max_len + 1, 2):
        flat = np.empty(out[length].size(), dtype=np.int32)
        if out[length].size():
            for e0 in range(<int>out[length].size()):
                flat[e0] = out[length][e0]
        result[length] = flat.reshape(-1, length)
    return result


def bfs_girth(indptr, indices, int cap):
    """Girth of an undirected graph given in CSR form, or 0 if it exceeds ``cap``."""
    cdef const int[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef const int[::1] idx = np.ascontiguousarray(indices, dtype=np.int32)
    cdef int n = ptr.shape[0] - 1
    cdef int best = cap + 1
    cdef vector[int] dist = vector[int](n, -1)
    cdef vector[int] parent = vector[int](n, -1)
    cdef vector[int] queue = vector[int](n)
    cdef int root, head, tail, level_end, u, w, du, j, length

    with nogil:
        for root in range(n):
            dist[root] = 0
            queue[0] = root
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                du = dist[u]
                if 2 * du + 1 >= best:
                    break
                head += 1
                for j in range(ptr[u], ptr[u + 1]):
                    w = idx[j]
                    if w == parent[u]:
                        continue
                    if dist[w] < 0:
                        dist[w] = du + 1
                        parent[w] = u
                        queue[tail] = w
                        tail += 1
                    else:
                        length = du + dist[w] + 1
                        if length < best:
                            best = length
            for j in range(tail):
                dist[queue[j]] = -1
                parent[queue[j]] = -1
    return best if best <= cap else 0
