"""Exact Gaussian elimination over F_{p^e}.

Works on coefficient-plane arrays of shape (e, rows, cols); the FpMatrix
wrappers at the bottom are what the rest of the package uses.  Row
operations are vectorized per plane, pivot inversions go through
FieldScalar, and everything stays in integer arithmetic.
"""

from __future__ import annotations

import numpy as np

from .gf import FieldScalar, quadratic_modulus
from .matrices import FpMatrix, _outer_planes, _scale_planes


def _as_planes(a, e):
    a = np.array(a, dtype=np.int64)
    if a.ndim == 2:
        a = a[np.newaxis, :, :]
    assert a.ndim == 3 and a.shape[0] == e
    return a


def rref_planes(planes, p, e):
    """Reduced row echelon form; returns (array, pivot column list)."""
    mod = quadratic_modulus(p) if e == 2 else None
    r_mat = _as_planes(planes, e) % p
    nrows, ncols = r_mat.shape[1], r_mat.shape[2]
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = None
        for i in range(r, nrows):
            if r_mat[:, i, c].any():
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            r_mat[:, [r, piv], :] = r_mat[:, [piv, r], :]
        s = FieldScalar(p, e, tuple(int(x) for x in r_mat[:, r, c]))
        r_mat[:, r, :] = _scale_planes(s.inverse().coords, r_mat[:, r, :], p, mod)
        col = r_mat[:, :, c].copy()
        col[:, r] = 0
        if col.any():
            r_mat = (r_mat - _outer_planes(col, r_mat[:, r, :], p, mod)) % p
        pivots.append(c)
        r += 1
    return r_mat, pivots


def rank_planes(planes, p, e) -> int:
    return len(rref_planes(planes, p, e)[1])


def null_space_planes(planes, p, e):
    """Basis of the right null space, as a list of (e, cols) vectors."""
    r_mat, pivots = rref_planes(planes, p, e)
    ncols = r_mat.shape[2]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros((e, ncols), dtype=np.int64)
        v[0, f] = 1
        for row, c in enumerate(pivots):
            v[:, c] = (-r_mat[:, row, f]) % p
        basis.append(v)
    return basis


def det(m: FpMatrix) -> FieldScalar:
    """Determinant by forward elimination, exact over the field."""
    p, e, n = m.p, m.e, m.n
    mod = quadratic_modulus(p) if e == 2 else None
    a = m.planes.copy()
    acc = FieldScalar.one(p, e)
    sign = 1
    for c in range(n):
        piv = None
        for i in range(c, n):
            if a[:, i, c].any():
                piv = i
                break
        if piv is None:
            return FieldScalar.zero(p, e)
        if piv != c:
            a[:, [c, piv], :] = a[:, [piv, c], :]
            sign = -sign
        s = FieldScalar(p, e, tuple(int(x) for x in a[:, c, c]))
        acc = acc * s
        a[:, c, :] = _scale_planes(s.inverse().coords, a[:, c, :], p, mod)
        col = a[:, :, c].copy()
        col[:, : c + 1] = 0
        if col.any():
            a = (a - _outer_planes(col, a[:, c, :], p, mod)) % p
    if sign < 0:
        acc = -acc
    return acc


def inv(m: FpMatrix) -> FpMatrix:
    """Matrix inverse; raises ZeroDivisionError when singular."""
    p, e, n = m.p, m.e, m.n
    aug = np.zeros((e, n, 2 * n), dtype=np.int64)
    aug[:, :, :n] = m.planes
    aug[0, :, n:] = np.eye(n, dtype=np.int64)
    r_mat, pivots = rref_planes(aug, p, e)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is not invertible")
    return FpMatrix(p, e, r_mat[:, :, n:])


def rank(m: FpMatrix) -> int:
    return rank_planes(m.planes, p=m.p, e=m.e)


def matrix_rows_rank(mats) -> int:
    """Rank of the span of the given matrices inside the full matrix space."""
    mats = list(mats)
    if not mats:
        return 0
    first = mats[0]
    p, e, n = first.p, first.e, first.n
    stacked = np.stack([m.planes.reshape(e, n * n) for m in mats], axis=1)
    return rank_planes(stacked, p, e)


def span_basis(mats):
    """Reduce a list of matrices to a basis of their span (rref rows)."""
    mats = list(mats)
    if not mats:
        return []
    first = mats[0]
    p, e, n = first.p, first.e, first.n
    stacked = np.stack([m.planes.reshape(e, n * n) for m in mats], axis=1)
    r_mat, pivots = rref_planes(stacked, p, e)
    return [FpMatrix(p, e, r_mat[:, i, :].reshape(e, n, n)) for i in range(len(pivots))]
