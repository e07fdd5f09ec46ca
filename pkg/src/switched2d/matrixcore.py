"""Dense symmetric-matrix numerics used by every other module.

Eigenvalues are computed by Householder tridiagonalization followed by
implicit-shift QL sweeps (EISPACK tred1/tql1 lineage).  At the block orders
used here (<= ~20) this is robust and keeps the definiteness checks
independent of any external eigensolver.

Inversion policy: Cholesky for symmetric positive definite inputs, LU with
partial pivoting otherwise; condition estimates above ``COND_LIMIT`` raise
``SingularBlock``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimError, InvalidMatrix, SingularBlock

MARGIN_ANALYSIS = 1e-9
MARGIN_SYNTHESIS = 1e-7
COND_LIMIT = 1e12

_EPS = np.finfo(float).eps
_MAX_QL_SWEEPS = 60


def as_symmetric(matrix, tol: float = 1e-8) -> np.ndarray:
    """Validate and return a float copy of a symmetric matrix.

    Mirroring removes rounding skew up to ``tol``; a larger asymmetry or any
    non-finite entry raises ``InvalidMatrix``.
    """
    m = np.array(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise InvalidMatrix(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidMatrix("matrix has non-finite entries")
    skew = np.max(np.abs(m - m.T)) if m.size else 0.0
    scale = max(1.0, float(np.max(np.abs(m))))
    if skew > tol * scale:
        raise InvalidMatrix(f"matrix is not symmetric (max skew {skew:.3e})")
    return symmetrize(m)


def symmetrize(m: np.ndarray) -> np.ndarray:
    """Return (M + M^T)/2."""
    return 0.5 * (m + m.T)


def _householder_tridiag(a: np.ndarray):
    """Reduce a symmetric matrix to tridiagonal form; values-only variant.

    Returns (d, e): diagonal and subdiagonal (e[0] unused).
    """
    a = a.copy()
    n = a.shape[0]
    d = np.zeros(n)
    e = np.zeros(n)
    for i in range(n - 1, 0, -1):
        l = i - 1
        h = 0.0
        if l > 0:
            scale = float(np.sum(np.abs(a[i, :i])))
            if scale == 0.0:
                e[i] = a[i, l]
            else:
                a[i, :i] /= scale
                h = float(np.dot(a[i, :i], a[i, :i]))
                f = a[i, l]
                g = -np.sqrt(h) if f >= 0.0 else np.sqrt(h)
                e[i] = scale * g
                h -= f * g
                a[i, l] = f - g
                f = 0.0
                for j in range(i):
                    g = float(np.dot(a[j, : j + 1], a[i, : j + 1]))
                    if j + 1 < i:
                        g += float(np.dot(a[j + 1 : i, j], a[i, j + 1 : i]))
                    e[j] = g / h
                    f += e[j] * a[i, j]
                hh = f / (h + h)
                for j in range(i):
                    f = a[i, j]
                    g = e[j] - hh * f
                    e[j] = g
                    a[j, : j + 1] -= f * e[: j + 1] + g * a[i, : j + 1]
        else:
            e[i] = a[i, l]
        d[i] = h
    for i in range(n):
        d[i] = a[i, i]
    e[0] = 0.0
    return d, e


def _tql_eigvals(d: np.ndarray, e: np.ndarray) -> np.ndarray:
    """Implicit-shift QL on a symmetric tridiagonal (d, e); e[0] unused."""
    n = len(d)
    d = d.copy()
    # shift subdiagonal so e[i] couples d[i] and d[i+1]
    e = np.roll(e.copy(), -1)
    e[n - 1] = 0.0
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > _MAX_QL_SWEEPS:
                raise SingularBlock("QL iteration failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = np.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + (r if g >= 0.0 else -r))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = np.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.sort(d)


def sym_eigvals(matrix) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, ascending."""
    s = as_symmetric(matrix)
    n = s.shape[0]
    if n == 1:
        return s[0, :1].copy()
    if n == 2:
        a, b, c = s[0, 0], s[0, 1], s[1, 1]
        tr = a + c
        disc = np.hypot(a - c, 2.0 * b)
        return np.sort(np.array([0.5 * (tr - disc), 0.5 * (tr + disc)]))
    d, e = _householder_tridiag(s)
    return _tql_eigvals(d, e)


@dataclass
class DefinitenessReport:
    ok: bool
    kind: str
    lam_min: float
    lam_max: float
    margin: float


def check_definiteness(matrix, kind: str, margin: float = 0.0) -> DefinitenessReport:
    """Margin-shifted definiteness test.

    PD: lam_min > margin; ND: lam_max < -margin;
    PSD: lam_min >= -margin; NSD: lam_max <= margin.
    """
    if margin < 0:
        raise ValueError("margin must be nonnegative")
    w = sym_eigvals(matrix)
    lam_min, lam_max = float(w[0]), float(w[-1])
    if kind == "PD":
        ok = lam_min > margin
    elif kind == "ND":
        ok = lam_max < -margin
    elif kind == "PSD":
        ok = lam_min >= -margin
    elif kind == "NSD":
        ok = lam_max <= margin
    else:
        raise ValueError(f"unknown definiteness kind {kind!r}")
    return DefinitenessReport(ok, kind, lam_min, lam_max, margin)


def cond_estimate_sym(matrix) -> float:
    """|lambda|_max / |lambda|_min for a symmetric matrix (inf if singular)."""
    w = np.abs(sym_eigvals(matrix))
    lo = float(np.min(w))
    hi = float(np.max(w))
    if lo == 0.0:
        return np.inf
    return hi / lo


def invert_sym(matrix) -> np.ndarray:
    """Invert a symmetric matrix (Cholesky when SPD, LU otherwise)."""
    s = as_symmetric(matrix)
    if cond_estimate_sym(s) > COND_LIMIT:
        raise SingularBlock("symmetric block too ill-conditioned to invert")
    try:
        low = np.linalg.cholesky(s)
        linv = np.linalg.solve(low, np.eye(s.shape[0]))
        return symmetrize(linv.T @ linv)
    except np.linalg.LinAlgError:
        return symmetrize(np.linalg.inv(s))


def invert_general(matrix) -> np.ndarray:
    """Invert a general square matrix by LU with partial pivoting."""
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimError(f"cannot invert non-square shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidMatrix("matrix has non-finite entries")
    if np.linalg.cond(m) > COND_LIMIT:
        raise SingularBlock("block too ill-conditioned to invert")
    return np.linalg.inv(m)


@dataclass
class SchurReport:
    full_nd: bool
    cond_ii: bool
    cond_iii: bool


def schur_equivalence_check(s11, s12, s22, margin: float = 0.0) -> SchurReport:
    """Evaluate the three equivalent negativity conditions of a 2x2 block matrix.

    full_nd tests the assembled matrix; cond_ii eliminates the (1,1) block,
    cond_iii the (2,2) block.  The required block inverses raise
    ``SingularBlock`` when too ill-conditioned.
    """
    a = as_symmetric(s11)
    c = as_symmetric(s22)
    b = np.atleast_2d(np.asarray(s12, dtype=float))
    if b.shape != (a.shape[0], c.shape[0]):
        raise DimError(
            f"coupling block shape {b.shape} incompatible with "
            f"{a.shape[0]}x{c.shape[0]} split"
        )
    full = assemble_blocks([a.shape[0], c.shape[0]], {(0, 0): a, (0, 1): b, (1, 1): c})
    full_nd = check_definiteness(full, "ND", margin).ok
    comp_ii = c - b.T @ invert_sym(a) @ b
    cond_ii = (
        check_definiteness(a, "ND", margin).ok
        and check_definiteness(comp_ii, "ND", margin).ok
    )
    comp_iii = a - b @ invert_sym(c) @ b.T
    cond_iii = (
        check_definiteness(c, "ND", margin).ok
        and check_definiteness(comp_iii, "ND", margin).ok
    )
    return SchurReport(full_nd, cond_ii, cond_iii)


def congruence(matrix, transform) -> np.ndarray:
    """T^T S T, symmetrized.  Preserves the eigen-signature for invertible T."""
    s = as_symmetric(matrix)
    t = np.asarray(transform, dtype=float)
    if t.ndim != 2 or t.shape[0] != s.shape[0]:
        raise DimError(f"transform shape {t.shape} incompatible with order {s.shape[0]}")
    return symmetrize(t.T @ s @ t)


def assemble_blocks(row_sizes, blocks, col_sizes=None, symmetric: bool = True) -> np.ndarray:
    """Assemble a block matrix from an upper-triangle block dictionary.

    ``blocks`` maps (block_row, block_col) to sub-matrices; absent blocks are
    zero.  For symmetric targets only blocks with block_col >= block_row may be
    given; the lower triangle is mirrored.  Every provided block must match its
    declared slot size.
    """
    rs = list(int(r) for r in row_sizes)
    cs = rs if col_sizes is None else list(int(c) for c in col_sizes)
    if any(r <= 0 for r in rs) or any(c <= 0 for c in cs):
        raise DimError("block sizes must be positive")
    ro = np.concatenate([[0], np.cumsum(rs)])
    co = np.concatenate([[0], np.cumsum(cs)])
    out = np.zeros((ro[-1], co[-1]))
    for (bi, bj), blk in blocks.items():
        if not (0 <= bi < len(rs) and 0 <= bj < len(cs)):
            raise DimError(f"block index ({bi}, {bj}) out of range")
        if symmetric and bj < bi:
            raise DimError("symmetric assembly takes upper-triangle blocks only")
        b = np.atleast_2d(np.asarray(blk, dtype=float))
        want = (rs[bi], cs[bj])
        if b.shape != want:
            raise DimError(f"block ({bi}, {bj}) has shape {b.shape}, slot wants {want}")
        out[ro[bi] : ro[bi + 1], co[bj] : co[bj + 1]] = b
    if symmetric:
        if rs != cs:
            raise DimError("symmetric assembly needs matching row/col sizes")
        out = np.triu(out) + np.triu(out, 1).T
    return out


def diag_split(block_h: np.ndarray, block_v: np.ndarray) -> np.ndarray:
    """diag{M_h, M_v} for the horizontal/vertical split used throughout."""
    bh = np.atleast_2d(np.asarray(block_h, dtype=float))
    bv = np.atleast_2d(np.asarray(block_v, dtype=float))
    out = np.zeros((bh.shape[0] + bv.shape[0], bh.shape[1] + bv.shape[1]))
    out[: bh.shape[0], : bh.shape[1]] = bh
    out[bh.shape[0] :, bh.shape[1] :] = bv
    return out
