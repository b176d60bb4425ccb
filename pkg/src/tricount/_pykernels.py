"""Pure-Python implementations of the hot sparse kernels.

Same contracts and bit-identical results as the compiled module
``tricount._ckernels``, just much slower.  Used as an import-time fallback
when the extension is unavailable and as a cross-check in the test suite.

All kernels take raw CSR components (``int64`` offsets/indices, ``uint64``
values) and assume column indices are sorted within each row.
"""

import numpy as np

INDEX_DTYPE = np.int64
VALUE_DTYPE = np.uint64


def spgemm(a_indptr, a_indices, a_values, b_indptr, b_indices, b_values,
           n_rows, n_cols):
    """Sparse matrix product under the integer count semiring.

    Row-at-a-time accumulation (Gustavson's method) with a dict scratch
    space.  Returns ``(indptr, indices, values)`` with sorted columns and
    no stored zeros.
    """
    ap = a_indptr.tolist()
    ai = a_indices.tolist()
    av = a_values.tolist()
    bp = b_indptr.tolist()
    bi = b_indices.tolist()
    bv = b_values.tolist()

    out_indptr = np.zeros(n_rows + 1, dtype=INDEX_DTYPE)
    out_cols = []
    out_vals = []
    acc = {}
    for i in range(n_rows):
        acc.clear()
        for t in range(ap[i], ap[i + 1]):
            k = ai[t]
            a_ik = av[t]
            for s in range(bp[k], bp[k + 1]):
                j = bi[s]
                acc[j] = acc.get(j, 0) + a_ik * bv[s]
        for j in sorted(acc):
            out_cols.append(j)
            out_vals.append(acc[j])
        out_indptr[i + 1] = len(out_cols)
    return (out_indptr,
            np.asarray(out_cols, dtype=INDEX_DTYPE),
            np.asarray(out_vals, dtype=VALUE_DTYPE))


def hadamard(a_indptr, a_indices, a_values, b_indptr, b_indices, b_values,
             n_rows):
    """Element-wise product of two same-shape CSR matrices (sorted merge)."""
    ap = a_indptr.tolist()
    ai = a_indices.tolist()
    av = a_values.tolist()
    bp = b_indptr.tolist()
    bi = b_indices.tolist()
    bv = b_values.tolist()

    out_indptr = np.zeros(n_rows + 1, dtype=INDEX_DTYPE)
    out_cols = []
    out_vals = []
    for i in range(n_rows):
        t, t_end = ap[i], ap[i + 1]
        s, s_end = bp[i], bp[i + 1]
        while t < t_end and s < s_end:
            ca, cb = ai[t], bi[s]
            if ca == cb:
                out_cols.append(ca)
                out_vals.append(av[t] * bv[s])
                t += 1
                s += 1
            elif ca < cb:
                t += 1
            else:
                s += 1
        out_indptr[i + 1] = len(out_cols)
    return (out_indptr,
            np.asarray(out_cols, dtype=INDEX_DTYPE),
            np.asarray(out_vals, dtype=VALUE_DTYPE))


def row_intersection_sum(x_indptr, x_indices, y_indptr, y_indices,
                         left, right):
    """Total size of ``row(X, left[t]) & row(Y, right[t])`` over all pairs."""
    xp = x_indptr.tolist()
    xi = x_indices.tolist()
    yp = y_indptr.tolist()
    yi = y_indices.tolist()

    total = 0
    for i, j in zip(left.tolist(), right.tolist()):
        t, t_end = xp[i], xp[i + 1]
        s, s_end = yp[j], yp[j + 1]
        while t < t_end and s < s_end:
            a, b = xi[t], yi[s]
            if a == b:
                total += 1
                t += 1
                s += 1
            elif a < b:
                t += 1
            else:
                s += 1
    return total


def bounded_intersection_sum(indptr, indices, left, right):
    """Like :func:`row_intersection_sum` on one matrix, but a shared member
    ``w`` is counted only when ``w > right[t]``."""
    ip = indptr.tolist()
    ix = indices.tolist()

    total = 0
    for u, v in zip(left.tolist(), right.tolist()):
        t, t_end = ip[u], ip[u + 1]
        s, s_end = ip[v], ip[v + 1]
        while t < t_end and s < s_end:
            a, b = ix[t], ix[s]
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
