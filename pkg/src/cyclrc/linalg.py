"""Dense linear algebra over a FieldSpec.

Two flavors: single-matrix routines (rref, rank, nullspace) used for code
machinery, and batched routines operating on stacks of small matrices, which
carry the heavy enumeration loops (support scans, zero-core sweeps) at numpy
speed.  All matrices are numpy int64 arrays of element indices.
"""

from __future__ import annotations

import numpy as np

from .field import FieldSpec


def rref(F: FieldSpec, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    M = np.array(M, dtype=np.int64, copy=True)
    if M.size == 0:
        return M.reshape(0, M.shape[1] if M.ndim == 2 else 0), []
    rows, cols = M.shape
    piv_cols: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if len(nz) == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        M[r] = F.vdiv_nz(M[r], int(M[r, c]))
        other = np.nonzero(M[:, c])[0]
        other = other[other != r]
        if len(other):
            factors = M[other, c]
            M[other] = F.vsub(M[other], F.vmul(factors[:, None], M[r][None, :]))
        piv_cols.append(c)
        r += 1
    return M[:r], piv_cols


def rank(F: FieldSpec, M) -> int:
    return rref(F, M)[0].shape[0]


def nullspace(F: FieldSpec, M) -> np.ndarray:
    """Basis of the right kernel, one vector per row."""
    M = np.asarray(M, dtype=np.int64)
    cols = M.shape[1]
    R, piv = rref(F, M)
    pivset = set(piv)
    free = [c for c in range(cols) if c not in pivset]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for i, pc in enumerate(piv):
            basis[bi, pc] = F.neg(int(R[i, fc]))
    return basis


def mat_vec(F: FieldSpec, M, v) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    acc = np.zeros(M.shape[0], dtype=np.int64)
    for j in range(M.shape[1]):
        if v[j]:
            acc = F.vadd(acc, F.vmul(M[:, j], int(v[j])))
    return acc


def mat_mul(F: FieldSpec, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for j in range(A.shape[1]):
        col = A[:, j]
        row = B[j, :]
        out = F.vadd(out, F.vmul(col[:, None], row[None, :]))
    return out


# ---------------------------------------------------------------------------
# Batched routines.  mats has shape (batch, rows, cols).


def batch_rank(F: FieldSpec, mats) -> np.ndarray:
    mats = np.array(mats, dtype=np.int64, copy=True)
    nb, rows, cols = mats.shape
    piv = np.zeros(nb, dtype=np.int64)
    ridx = np.arange(rows)
    for c in range(cols):
        col = mats[:, :, c]
        cand = (col != 0) & (ridx[None, :] >= piv[:, None])
        has = cand.any(axis=1)
        bi = np.nonzero(has)[0]
        if len(bi) == 0:
            continue
        sel = np.argmax(cand[bi], axis=1)
        r0 = piv[bi]
        swap = sel != r0
        if swap.any():
            sb = bi[swap]
            a, b = piv[sb], sel[swap]
            tmp = mats[sb, a, :].copy()
            mats[sb, a, :] = mats[sb, b, :]
            mats[sb, b, :] = tmp
        pivrow = mats[bi, r0, :]
        pivval = mats[bi, r0, c]
        below = ridx[None, :] > r0[:, None]
        colv = np.where(below, mats[bi, :, c], 0)
        factors = F.vdiv_nz(colv, pivval[:, None])
        delta = F.vmul(factors[:, :, None], pivrow[:, None, :])
        mats[bi] = F.vsub(mats[bi], delta)
        piv[bi] += 1
    return piv


def batch_det(F: FieldSpec, mats) -> np.ndarray:
    """Determinants of a stack of square matrices (0 for singular ones)."""
    mats = np.array(mats, dtype=np.int64, copy=True)
    nb, n, n2 = mats.shape
    assert n == n2
    det = np.ones(nb, dtype=np.int64)
    alive = np.ones(nb, dtype=bool)
    ridx = np.arange(n)
    piv = np.zeros(nb, dtype=np.int64)
    for c in range(n):
        col = mats[:, :, c]
        cand = (col != 0) & (ridx[None, :] >= piv[:, None])
        has = cand.any(axis=1)
        died = alive & ~has
        det[died] = 0
        alive &= has
        bi = np.nonzero(alive)[0]
        if len(bi) == 0:
            break
        sel = np.argmax(cand[bi], axis=1)
        r0 = piv[bi]
        swap = sel != r0
        if swap.any():
            sb = bi[swap]
            a, b = piv[sb], sel[swap]
            tmp = mats[sb, a, :].copy()
            mats[sb, a, :] = mats[sb, b, :]
            mats[sb, b, :] = tmp
            det[sb] = F.vneg(det[sb])
        pivval = mats[bi, piv[bi], c]
        det[bi] = F.vmul(det[bi], pivval)
        pivrow = mats[bi, piv[bi], :]
        below = ridx[None, :] > piv[bi][:, None]
        colv = np.where(below, mats[bi, :, c], 0)
        factors = F.vdiv_nz(colv, pivval[:, None])
        delta = F.vmul(factors[:, :, None], pivrow[:, None, :])
        mats[bi] = F.vsub(mats[bi], delta)
        piv[bi] += 1
    det[~alive] = 0
    return det


def batch_nullvec(F: FieldSpec, mats) -> np.ndarray:
    """One kernel vector for each (c-1) x c matrix via signed maximal minors.

    Rows of the result are all-zero exactly for the batch entries whose rank
    is below c-1 (kernel dimension > 1); callers handle those separately.
    """
    mats = np.asarray(mats, dtype=np.int64)
    nb, r, c = mats.shape
    assert r == c - 1
    out = np.empty((nb, c), dtype=np.int64)
    cols = np.arange(c)
    for j in range(c):
        sub = mats[:, :, cols != j]
        dj = batch_det(F, sub)
        if j % 2 == 1:
            dj = F.vneg(dj)
        out[:, j] = dj
    return out
