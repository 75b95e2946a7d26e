"""Invariant-based alignment of two character tables up to row and column permutations."""

import numpy as np
from scipy.optimize import linear_sum_assignment


def column_key(col, digits=6):
    return tuple(sorted((round(z.real, digits) + 0.0, round(z.imag, digits) + 0.0) for z in col))


def align(ours, ref, tol=1e-8):
    """Return (rows, cols) with ours[rows][:, cols] equal to ref within ``tol``, or None.

    Columns are matched only to columns with the same multiset of values. A
    partial column assignment is kept only while some row permutation agrees
    with it on every chosen column (checked by an assignment problem).
    """
    R, C = ref.shape
    cands = [[i for i in range(ours.shape[1]) if column_key(ours[:, i]) == column_key(ref[:, j])] for j in range(C)]
    order = sorted(range(C), key=lambda j: len(cands[j]))

    def rows_for(assign):
        if not assign:
            return np.arange(R)
        js = list(assign)
        A, B = ref[:, js], ours[:, [assign[j] for j in js]]
        bad = (np.abs(A[:, None, :] - B[None, :, :]).max(axis=2) > tol).astype(float)
        r, c = linear_sum_assignment(bad)
        return None if bad[r, c].sum() else c

    def solve(t, assign, used):
        rows = rows_for(assign)
        if rows is None:
            return None
        if t == C:
            return rows, [assign[j] for j in range(C)]
        j = order[t]
        for i in cands[j]:
            if i not in used:
                assign[j] = i
                found = solve(t + 1, assign, used | {i})
                if found:
                    return found
                del assign[j]
        return None

    return solve(0, {}, frozenset())
