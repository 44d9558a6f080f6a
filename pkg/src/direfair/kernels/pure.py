"""Pure numpy/Python fallback for the compiled scoring kernel.

Mirrors the API of ``direfair.kernels._ccscore`` exactly; results are
bit-identical between the two backends.
"""

import numpy as np

BACKEND = "pure"


def betacc_committee_score(positions, members):
    """Chamberlin-Courant (Borda misrepresentation) score of a committee.

    positions: (n, m) int array, positions[v, c] = 0-based rank of candidate c
    in voter v's ranking. Each voter contributes m - 1 - min position over the
    committee members.
    """
    members = np.asarray(sorted(members), dtype=np.intp)
    if members.size == 0:
        return 0
    m = positions.shape[1]
    return int((m - 1 - positions[:, members].min(axis=1)).sum())


def betacc_best_committee(positions, k):
    """Exact best k-committee under the Chamberlin-Courant rule.

    Depth-first branch and bound over candidates in ascending id order, so the
    lexicographically smallest member set wins among score ties. The bound adds,
    per voter, the best score attainable from the not-yet-considered suffix of
    candidates; CC is monotone, so the bound is admissible.
    """
    positions = np.ascontiguousarray(positions, dtype=np.int64)
    n, m = positions.shape
    if not 1 <= k <= m:
        raise ValueError(f"committee size {k} out of range [1, {m}]")
    gains = (m - 1 - positions).astype(np.int64)  # gains[v, c]
    # suffix_best[c, v] = max over c' >= c of gains[v, c']
    suffix_best = np.empty((m + 1, n), dtype=np.int64)
    suffix_best[m] = -1
    for c in range(m - 1, -1, -1):
        suffix_best[c] = np.maximum(suffix_best[c + 1], gains[:, c])

    best_score = -1
    best_members = None
    chosen = []
    cur = np.zeros(n, dtype=np.int64)  # best gain so far per voter (empty = 0)

    def recurse(next_c, cur):
        nonlocal best_score, best_members
        if len(chosen) == k:
            score = int(cur.sum())
            if score > best_score:
                best_score = score
                best_members = tuple(chosen)
            return
        slots = k - len(chosen)
        if m - next_c < slots:
            return
        bound = int(np.maximum(cur, suffix_best[next_c]).sum())
        if bound <= best_score:
            return
        for c in range(next_c, m - slots + 1):
            chosen.append(c)
            recurse(c + 1, np.maximum(cur, gains[:, c]))
            chosen.pop()
            # after the first complete committee, equal-score later sets lose
            if int(np.maximum(cur, suffix_best[c + 1]).sum()) <= best_score:
                break

    recurse(0, cur)
    return best_score, best_members
