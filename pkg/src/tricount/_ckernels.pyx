# cython: language_level=3, boundscheck=False, wraparound=False
# cython: initializedcheck=False, cdivision=True
"""Compiled sparse kernels: SpGEMM, Hadamard product, row-intersection sums.

Mirrors the contracts of ``tricount._pykernels`` bit for bit; the
``tricount.kernels`` dispatcher picks whichever is available.
"""

import numpy as np

cimport numpy as cnp
from libc.stdlib cimport qsort

cnp.import_array()

INDEX_DTYPE = np.int64
VALUE_DTYPE = np.uint64

ctypedef cnp.int64_t idx_t
ctypedef cnp.uint64_t val_t


cdef int _cmp_idx(const void* pa, const void* pb) noexcept nogil:
    cdef idx_t a = (<const idx_t*> pa)[0]
    cdef idx_t b = (<const idx_t*> pb)[0]
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def spgemm(const idx_t[::1] a_indptr, const idx_t[::1] a_indices,
           const val_t[::1] a_values,
           const idx_t[::1] b_indptr, const idx_t[::1] b_indices,
           const val_t[::1] b_values,
           Py_ssize_t n_rows, Py_ssize_t n_cols):
    """Sparse matrix product under the integer count semiring.

    Two passes of Gustavson's method: a symbolic pass sizes each output
    row exactly, a numeric pass accumulates into a dense scratch array and
    emits columns in sorted order.
    """
    out_indptr_arr = np.zeros(n_rows + 1, dtype=INDEX_DTYPE)
    cdef idx_t[::1] out_indptr = out_indptr_arr
    # Generation stamps avoid clearing the scratch arrays between rows; the
    # numeric pass uses generations offset by n_rows so they never collide
    # with the symbolic ones.
    cdef idx_t[::1] stamp = np.full(n_cols if n_cols else 1, -1,
                                    dtype=INDEX_DTYPE)
    cdef Py_ssize_t i, t, s, nnz, ntouched, w
    cdef idx_t k, j
    cdef val_t a_ik

    nnz = 0
    for i in range(n_rows):
        for t in range(a_indptr[i], a_indptr[i + 1]):
            k = a_indices[t]
            for s in range(b_indptr[k], b_indptr[k + 1]):
                j = b_indices[s]
                if stamp[j] != i:
                    stamp[j] = i
                    nnz += 1
        out_indptr[i + 1] = nnz

    out_cols_arr = np.empty(nnz, dtype=INDEX_DTYPE)
    out_vals_arr = np.empty(nnz, dtype=VALUE_DTYPE)
    cdef idx_t[::1] out_cols = out_cols_arr
    cdef val_t[::1] out_vals = out_vals_arr
    cdef val_t[::1] acc = np.zeros(n_cols if n_cols else 1,
                                   dtype=VALUE_DTYPE)
    cdef idx_t[::1] touched = np.empty(n_cols if n_cols else 1,
                                       dtype=INDEX_DTYPE)

    nnz = 0
    for i in range(n_rows):
        ntouched = 0
        for t in range(a_indptr[i], a_indptr[i + 1]):
            k = a_indices[t]
            a_ik = a_values[t]
            for s in range(b_indptr[k], b_indptr[k + 1]):
                j = b_indices[s]
                if stamp[j] != i + n_rows:
                    stamp[j] = i + n_rows
                    acc[j] = 0
                    touched[ntouched] = j
                    ntouched += 1
                acc[j] += a_ik * b_values[s]
        if ntouched > 1:
            qsort(&touched[0], ntouched, sizeof(idx_t), _cmp_idx)
        for w in range(ntouched):
            j = touched[w]
            out_cols[nnz] = j
            out_vals[nnz] = acc[j]
            nnz += 1

    return out_indptr_arr, out_cols_arr, out_vals_arr


def hadamard(const idx_t[::1] a_indptr, const idx_t[::1] a_indices,
             const val_t[::1] a_values,
             const idx_t[::1] b_indptr, const idx_t[::1] b_indices,
             const val_t[::1] b_values,
             Py_ssize_t n_rows):
    """Element-wise product of two same-shape CSR matrices (sorted merge)."""
    cdef Py_ssize_t bound = min(a_indices.shape[0], b_indices.shape[0])
    out_indptr_arr = np.zeros(n_rows + 1, dtype=INDEX_DTYPE)
    out_cols_arr = np.empty(bound, dtype=INDEX_DTYPE)
    out_vals_arr = np.empty(bound, dtype=VALUE_DTYPE)
    cdef idx_t[::1] out_indptr = out_indptr_arr
    cdef idx_t[::1] out_cols = out_cols_arr
    cdef val_t[::1] out_vals = out_vals_arr
    cdef Py_ssize_t i, t, t_end, s, s_end, nnz
    cdef idx_t ca, cb

    nnz = 0
    for i in range(n_rows):
        t = a_indptr[i]
        t_end = a_indptr[i + 1]
        s = b_indptr[i]
        s_end = b_indptr[i + 1]
        while t < t_end and s < s_end:
            ca = a_indices[t]
            cb = b_indices[s]
            if ca == cb:
                out_cols[nnz] = ca
                out_vals[nnz] = a_values[t] * b_values[s]
                nnz += 1
                t += 1
                s += 1
            elif ca < cb:
                t += 1
            else:
                s += 1
        out_indptr[i + 1] = nnz

    return out_indptr_arr, out_cols_arr[:nnz].copy(), out_vals_arr[:nnz].copy()


def row_intersection_sum(const idx_t[::1] x_indptr,
                         const idx_t[::1] x_indices,
                         const idx_t[::1] y_indptr,
                         const idx_t[::1] y_indices,
                         const idx_t[::1] left, const idx_t[::1] right):
    """Total size of ``row(X, left[t]) & row(Y, right[t])`` over all pairs."""
    cdef unsigned long long total = 0
    cdef Py_ssize_t p, t, t_end, s, s_end
    cdef idx_t i, j, a, b

    for p in range(left.shape[0]):
        i = left[p]
        j = right[p]
        t = x_indptr[i]
        t_end = x_indptr[i + 1]
        s = y_indptr[j]
        s_end = y_indptr[j + 1]
        while t < t_end and s < s_end:
            a = x_indices[t]
            b = y_indices[s]
            if a == b:
                total += 1
                t += 1
                s += 1
            elif a < b:
                t += 1
            else:
                s += 1
    return total


def bounded_intersection_sum(const idx_t[::1] indptr,
                             const idx_t[::1] indices,
                             const idx_t[::1] left, const idx_t[::1] right):
    """Like :func:`row_intersection_sum` on one matrix, but a shared member
    ``w`` is counted only when ``w > right[t]``."""
    cdef unsigned long long total = 0
    cdef Py_ssize_t p, t, t_end, s, s_end
    cdef idx_t u, v, a, b

    for p in range(left.shape[0]):
        u = left[p]
        v = right[p]
        t = indptr[u]
        t_end = indptr[u + 1]
        s = indptr[v]
        s_end = indptr[v + 1]
        while t < t_end and s < s_end:
            a = indices[t]
            b = indices[s]
            if a == b:
                if a > v:
                    total += 1
                t += 1
                s += 1
            elif a < b:
                t += 1
            else:
                s += 1
    return total
