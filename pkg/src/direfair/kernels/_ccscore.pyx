# Compiled scoring kernel for the Chamberlin-Courant rule.
#
# API and results are identical to direfair.kernels.pure; this version exists
# because exhaustive subset search over C(m, k) committees dominates runtime.

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"


def betacc_committee_score(positions, members):
    """Chamberlin-Courant (Borda misrepresentation) score of a committee."""
    cdef cnp.ndarray[cnp.int64_t, ndim=2] pos = np.ascontiguousarray(positions, dtype=np.int64)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] mem = np.asarray(sorted(members), dtype=np.intp)
    cdef Py_ssize_t n = pos.shape[0]
    cdef Py_ssize_t m = pos.shape[1]
    cdef Py_ssize_t nm = mem.shape[0]
    cdef Py_ssize_t v, i
    cdef long long total = 0
    cdef long long best, p
    if nm == 0:
        return 0
    for v in range(n):
        best = pos[v, mem[0]]
        for i in range(1, nm):
            p = pos[v, mem[i]]
            if p < best:
                best = p
        total += m - 1 - best
    return int(total)


cdef long long _bound(long long[:] cur, long long[:, :] suffix_best, Py_ssize_t next_c, Py_ssize_t n):
    cdef Py_ssize_t v
    cdef long long total = 0
    cdef long long a, b
    for v in range(n):
        a = cur[v]
        b = suffix_best[next_c, v]
        total += a if a > b else b
    return total


cdef void _search(long long[:, :] gains, long long[:, :] suffix_best,
                  Py_ssize_t next_c, Py_ssize_t depth, Py_ssize_t k,
                  Py_ssize_t n, Py_ssize_t m,
                  long long[:, :] cur_stack, Py_ssize_t[:] chosen,
                  long long *best_score, Py_ssize_t[:] best_members):
    cdef Py_ssize_t c, v
    cdef long long score, g
    if depth == k:
        score = 0
        for v in range(n):
            score += cur_stack[depth, v]
        if score > best_score[0]:
            best_score[0] = score
            for c in range(k):
                best_members[c] = chosen[c]
        return
    if m - next_c < k - depth:
        return
    if _bound(cur_stack[depth], suffix_best, next_c, n) <= best_score[0]:
        return
    for c in range(next_c, m - (k - depth) + 1):
        for v in range(n):
            g = gains[v, c]
            cur_stack[depth + 1, v] = g if g > cur_stack[depth, v] else cur_stack[depth, v]
        chosen[depth] = c
        _search(gains, suffix_best, c + 1, depth + 1, k, n, m,
                cur_stack, chosen, best_score, best_members)
        if _bound(cur_stack[depth], suffix_best, c + 1, n) <= best_score[0]:
            break


def betacc_best_committee(positions, k):
    """Exact best k-committee under the Chamberlin-Courant rule."""
    cdef cnp.ndarray[cnp.int64_t, ndim=2] pos = np.ascontiguousarray(positions, dtype=np.int64)
    cdef Py_ssize_t n = pos.shape[0]
    cdef Py_ssize_t m = pos.shape[1]
    cdef Py_ssize_t kk = k
    if not 1 <= kk <= m:
        raise ValueError(f"committee size {k} out of range [1, {m}]")
    gains_np = (m - 1 - pos).astype(np.int64)
    suffix_np = np.empty((m + 1, n), dtype=np.int64)
    suffix_np[m] = -1
    for c in range(m - 1, -1, -1):
        suffix_np[c] = np.maximum(suffix_np[c + 1], gains_np[:, c])

    cdef long long[:, :] gains = gains_np
    cdef long long[:, :] suffix_best = suffix_np
    cdef long long[:, :] cur_stack = np.zeros((kk + 1, n), dtype=np.int64)
    cdef Py_ssize_t[:] chosen = np.zeros(kk, dtype=np.intp)
    cdef Py_ssize_t[:] best_members = np.zeros(kk, dtype=np.intp)
    cdef long long best_score = -1

    _search(gains, suffix_best, 0, 0, kk, n, m, cur_stack, chosen,
            &best_score, best_members)
    return int(best_score), tuple(int(best_members[i]) for i in range(kk))
