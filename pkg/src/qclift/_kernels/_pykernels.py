"""Pure-Python versions of the hot kernels.

These mirror ``_ckernels.pyx`` line for line and produce identical output
(same walks, same order), so either backend can serve as the reference for
the other.
"""

import numpy as np


def _is_canonical(walk):
    # ``walk[0]`` is the smallest edge index in the walk (enforced by the DFS),
    # so only rotations that start on another occurrence of it can compete.
    n = len(walk)
    e0 = walk[0]
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
            a = walk[(k - i) % n]
            b = walk[i]
            if a != b:
                if a < b:
                    return False
                break
    return True


def closed_walks(edge_check, edge_var, check_ptr, check_edges, var_ptr, var_edges, max_len):
    """Enumerate tailless, backtrack-free closed walks of length 4..max_len.

    The graph is bipartite with edges ``e`` joining check ``edge_check[e]`` and
    variable ``edge_var[e]``; ``*_ptr``/``*_edges`` are CSR incidence lists.
    Each walk is returned once, as the lexicographically smallest of its
    rotations and reflections (a sequence of edge indices).

    Returns a dict mapping each even length to an ``(count, length)`` int32 array.
    """
    edge_check = [int(v) for v in edge_check]
    edge_var = [int(v) for v in edge_var]
    check_adj = [
        [int(e) for e in check_edges[check_ptr[c]:check_ptr[c + 1]]]
        for c in range(len(check_ptr) - 1)
    ]
    var_adj = [
        [int(e) for e in var_edges[var_ptr[v]:var_ptr[v + 1]]]
        for v in range(len(var_ptr) - 1)
    ]
    found = {length: [] for length in range(4, max_len + 1, 2)}
    walk = []

    def extend(on_check, node, start_on_check, start_node):
        depth = len(walk)
        if depth >= 4 and depth % 2 == 0 and node == start_node \
                and on_check == start_on_check and walk[-1] != walk[0] \
                and _is_canonical(walk):
            found[depth].append(tuple(walk))
        if depth == max_len:
            return
        e0 = walk[0]
        last = walk[-1]
        for f in (check_adj[node] if on_check else var_adj[node]):
            if f < e0 or f == last:
                continue
            walk.append(f)
            if on_check:
                extend(False, edge_var[f], start_on_check, start_node)
            else:
                extend(True, edge_check[f], start_on_check, start_node)
            walk.pop()

    if max_len >= 4:
        for e0 in range(len(edge_check)):
            walk.append(e0)
            # start at the check end, then at the variable end
            extend(False, edge_var[e0], True, edge_check[e0])
            extend(True, edge_check[e0], False, edge_var[e0])
            walk.pop()

    return {
        length: np.array(rows, dtype=np.int32).reshape(len(rows), length)
        for length, rows in found.items()
    }


def bfs_girth(indptr, indices, cap):
    """Girth of an undirected graph given in CSR form, or 0 if it exceeds ``cap``."""
    n = len(indptr) - 1
    adj = [[int(w) for w in indices[indptr[u]:indptr[u + 1]]] for u in range(n)]
    best = cap + 1
    dist = [-1] * n
    parent = [-1] * n
    for root in range(n):
        touched = [root]
        dist[root] = 0
        frontier = [root]
        while frontier and 2 * dist[frontier[0]] + 1 < best:
            nxt = []
            for u in frontier:
                du = dist[u]
                for w in adj[u]:
                    if w == parent[u]:
                        continue
                    if dist[w] < 0:
                        dist[w] = du + 1
                        parent[w] = u
                        touched.append(w)
                        nxt.append(w)
                    else:
                        length = du + dist[w] + 1
                        if length < best:
                            best = length
            frontier = nxt
        for u in touched:
            dist[u] = -1
            parent[u] = -1
    return best if best <= cap else 0
