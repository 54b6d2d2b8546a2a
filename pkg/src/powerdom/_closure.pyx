# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled closure kernels. Mirrors powerdom._closure_py exactly."""

import numpy as np

COMPILED = True


def closure_mask(int[:] indptr, int[:] indices, int n, unsigned char[:] seed):
    dom_arr = np.zeros(n, dtype=np.uint8)
    undom_arr = np.zeros(n, dtype=np.int32)
    # A node is pushed when it becomes dominated or loses an undominated
    # neighbor, so n + 2m pushes bound the stack.
    stack_arr = np.zeros(max(n + 2 * indptr[n], 1), dtype=np.int32)
    cdef unsigned char[:] dom = dom_arr
    cdef int[:] undom = undom_arr
    cdef int[:] stack = stack_arr
    cdef int top = 0, v, w, x, i, c
    for v in range(n):
        if seed[v]:
            dom[v] = 1
            for i in range(indptr[v], indptr[v + 1]):
                dom[indices[i]] = 1
    for v in range(n):
        c = 0
        for i in range(indptr[v], indptr[v + 1]):
            if not dom[indices[i]]:
                c += 1
        undom[v] = c
        if dom[v] and c == 1:
            stack[top] = v
            top += 1
    while top > 0:
        top -= 1
        v = stack[top]
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
                stack[top] = x
                top += 1
        if undom[w] == 1:
            stack[top] = w
            top += 1
    return dom_arr


def directed_closure_mask(int[:] out_indptr, int[:] out_indices,
                          int[:] in_indptr, int[:] in_indices,
                          int n, unsigned char[:] seed):
    dom_arr = np.zeros(n, dtype=np.uint8)
    undom_arr = np.zeros(n, dtype=np.int32)
    # Each node is pushed when it gets dominated or a neighbor does, so
    # n + m pushes bound the stack; allocate generously.
    stack_arr = np.zeros(max(n + in_indptr[n] + out_indptr[n], 1), dtype=np.int32)
    cdef unsigned char[:] dom = dom_arr
    cdef int[:] undom = undom_arr
    cdef int[:] stack = stack_arr
    cdef int top = 0, v, w, x, i, c
    for v in range(n):
        if seed[v]:
            dom[v] = 1
            for i in range(out_indptr[v], out_indptr[v + 1]):
                dom[out_indices[i]] = 1
    for v in range(n):
        c = 0
        for i in range(out_indptr[v], out_indptr[v + 1]):
            if not dom[out_indices[i]]:
                c += 1
        undom[v] = c
        if dom[v] and c == 1:
            stack[top] = v
            top += 1
    while top > 0:
        top -= 1
        v = stack[top]
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
                stack[top] = x
                top += 1
        if undom[w] == 1:
            stack[top] = w
            top += 1
    return dom_arr
