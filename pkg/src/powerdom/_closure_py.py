"""Pure-Python closure kernels.

Same signatures as the compiled module ``powerdom._closure``; used when
the extension is unavailable or POWERDOM_PURE_PYTHON=1 is set. Operates
on CSR adjacency (indptr/indices int32 arrays) and uint8 masks.
"""

from __future__ import annotations

import numpy as np

COMPILED = False


def closure_mask(indptr, indices, n, seed):
    """Dominated-node mask for an undirected graph.

    Rule 1: every seed node dominates itself and its neighbors. Rule 2:
    a dominated node with exactly one undominated neighbor dominates it.
    """
    dom = np.zeros(n, dtype=np.uint8)
    for v in range(n):
        if seed[v]:
            dom[v] = 1
            for i in range(indptr[v], indptr[v + 1]):
                dom[indices[i]] = 1
    undom = np.zeros(n, dtype=np.int32)
    for v in range(n):
        c = 0
        for i in range(indptr[v], indptr[v + 1]):
            if not dom[indices[i]]:
                c += 1
        undom[v] = c
    stack = [v for v in range(n) if dom[v] and undom[v] == 1]
    while stack:
        v = stack.pop()
        if not dom[v] or undom[v] != 1:
            continue
        w = -1
        for i in range(indptr[v], indptr[v + 1]):
            if not dom[indices[i]]:
                w = indices[i]
                break
        dom[w] = 1
        for i in range(indptr[w], indptr[w + 1]):
            x = indices[i]
            undom[x] -= 1
            if dom[x] and undom[x] == 1:
                stack.append(x)
        if undom[w] == 1:
            stack.append(w)
    return dom


def directed_closure_mask(out_indptr, out_indices, in_indptr, in_indices, n, seed):
    """Dominated-node mask for a directed graph.

    Rules mirror the undirected ones on out-neighborhoods: a seed node
    dominates itself and its out-neighbors; a dominated node with exactly
    one undominated out-neighbor dominates it.
    """
    dom = np.zeros(n, dtype=np.uint8)
    for v in range(n):
        if seed[v]:
            dom[v] = 1
            for i in range(out_indptr[v], out_indptr[v + 1]):
                dom[out_indices[i]] = 1
    undom = np.zeros(n, dtype=np.int32)
    for v in range(n):
        c = 0
        for i in range(out_indptr[v], out_indptr[v + 1]):
            if not dom[out_indices[i]]:
                c += 1
        undom[v] = c
    stack = [v for v in range(n) if dom[v] and undom[v] == 1]
    while stack:
        v = stack.pop()
        if not dom[v] or undom[v] != 1:
            continue
        w = -1
        for i in range(out_indptr[v], out_indptr[v + 1]):
            if not dom[out_indices[i]]:
                w = out_indices[i]
                break
        dom[w] = 1
        for i in range(in_indptr[w], in_indptr[w + 1]):
            x = in_indices[i]
            undom[x] -= 1
            if dom[x] and undom[x] == 1:
                stack.append(x)
        if undom[w] == 1:
            stack.append(w)
    return dom
