"""Dense complex operator arithmetic and tolerance-controlled kernel solvers.

Operators are plain complex ndarrays.  They act on the column-major
vectorization of a rectangular matrix V, and the single convention fixed here
is

    kron_action(a, b) @ vec(V) == vec(a @ V @ b)

for square a, b of compatible sizes.  Every other module reuses vec/unvec and
kron_action rather than restating the flattening order.

Rank decisions use one relative rule throughout: a singular value sigma is
treated as zero when sigma <= tol * max(m, n) * sigma_max.  Kernel solvers
accept explicit constraint matrices; large constraint systems are reduced to
a Gram (normal-equations) eigenproblem, with the threshold squared so the
same rule applies.
"""

from __future__ import annotations

import numpy as np

DEFAULT_TOL = 1e-9

# Stacked constraint systems below this many rows go through a direct SVD;
# larger ones through the Gram eigensolver.
_DIRECT_SVD_ROWS = 4096


def ensure_operator(x, dim=None):
    """Validate and return x as a square, finite complex matrix."""
    m = np.asarray(x, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"operator must be square, got shape {m.shape}")
    if dim is not None and m.shape[0] != dim:
        raise ValueError(f"operator must be {dim}x{dim}, got {m.shape[0]}x{m.shape[0]}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("operator has non-finite entries")
    return m


def vec(m):
    """Column-major flattening."""
    return np.asarray(m, dtype=complex).reshape(-1, order="F")


def unvec(v, rows, cols):
    """Inverse of vec for a rows x cols matrix."""
    return np.asarray(v, dtype=complex).reshape((rows, cols), order="F")


def kron_action(a, b):
    """Operator sending vec(V) to vec(a V b) for V of shape (a.rows, b.rows).

    a multiplies from the left, b from the right.  Both factors must be
    square; the primary use is a in M_8 and b in M_4, giving a 32x32
    operator, but the construction is generic in the dimensions.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"left factor must be square, got {a.shape}")
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ValueError(f"right factor must be square, got {b.shape}")
    return np.kron(b.T, a)


def adjoint(op):
    """Conjugate transpose."""
    return np.asarray(op).conj().T


def hs_inner(x, y):
    """Hilbert-Schmidt inner product Tr(x* y), antilinear in x."""
    return complex(np.vdot(np.asarray(x), np.asarray(y)))


def hs_norm(x):
    """Hilbert-Schmidt (Frobenius) norm."""
    return float(np.linalg.norm(np.asarray(x)))


def identity(n):
    return np.eye(n, dtype=complex)


def commutator(x, y):
    return x @ y - y @ x


def anticommutator(x, y):
    return x @ y + y @ x


class AntilinearOperator:
    """Antilinear map v -> K conj(v) with a real orthogonal matrix K.

    Houses the real structure: K orthogonal makes the map an antiunitary
    isometry.  conjugate_operator gives the linear map X -> J X J^{-1}.
    """

    def __init__(self, matrix, tol=1e-12):
        k = np.asarray(matrix, dtype=float)
        if k.ndim != 2 or k.shape[0] != k.shape[1]:
            raise ValueError(f"antilinear matrix must be square, got {k.shape}")
        if np.linalg.norm(k @ k.T - np.eye(k.shape[0])) > tol * k.shape[0]:
            raise ValueError("antilinear matrix must be orthogonal")
        self.matrix = k

    @property
    def dim(self):
        return self.matrix.shape[0]

    def apply(self, v):
        return self.matrix @ np.conj(np.asarray(v, dtype=complex))

    def apply_inverse(self, v):
        return self.matrix.T @ np.conj(np.asarray(v, dtype=complex))

    def conjugate_operator(self, x):
        """J X J^{-1} for a linear operator X, again as a matrix."""
        return self.matrix @ np.conj(np.asarray(x, dtype=complex)) @ self.matrix.T

    def commutation_residual(self, x):
        """HS norm of X J - J X, i.e. of X K - K conj(X)."""
        x = np.asarray(x, dtype=complex)
        return float(np.linalg.norm(x @ self.matrix - self.matrix @ np.conj(x)))


def rank_from_singular_values(sigma, shape, tol):
    """Number of singular values above tol * max(shape) * sigma_max."""
    if len(sigma) == 0:
        return 0
    cut = tol * max(shape) * sigma[0]
    return int(np.sum(sigma > cut))


def orthonormal_rows(rows, tol=DEFAULT_TOL, field="complex"):
    """Orthonormal basis (as rows) of the span of the given flat vectors.

    field='complex' spans over C with the standard Hermitian inner product;
    field='real' spans over R, orthonormal for Re <u, v>.  Rows are
    normalized before the rank decision so tolerances are scale-free in the
    generating coefficients; rows more than a tolerance factor smaller than
    the largest one are noise at the working precision and are dropped
    rather than amplified.
    """
    v = np.asarray(rows, dtype=complex)
    if v.ndim == 1:
        v = v.reshape(1, -1)
    if v.size == 0:
        return v.reshape(0, v.shape[-1] if v.ndim == 2 else 0)
    norms = np.linalg.norm(v, axis=1)
    top = norms.max()
    if top == 0.0:
        return v[:0]
    keep = norms > tol * top
    v = v[keep] / norms[keep, None]
    if field == "complex":
        _, sigma, vh = np.linalg.svd(v, full_matrices=False)
        r = rank_from_singular_values(sigma, v.shape, tol)
        return vh[:r]
    if field == "real":
        w = np.hstack([v.real, v.imag])
        _, sigma, vh = np.linalg.svd(w, full_matrices=False)
        r = rank_from_singular_values(sigma, w.shape, tol)
        n = v.shape[1]
        return vh[:r, :n] + 1j * vh[:r, n:]
    raise ValueError(f"unknown field {field!r}")


def kernel_from_gram(gram, scale, tol):
    """Orthonormal kernel rows of a PSD Gram matrix.

    The Gram eigenvalues are squared singular values of the stacked
    constraint matrix, so the rank threshold is squared as well; scale plays
    the role of max(m, n).
    """
    w, u = np.linalg.eigh(gram)
    w = np.clip(w, 0.0, None)
    if w.size == 0:
        return u.T[:0]
    top = w[-1]
    cut = (tol * scale) ** 2 * top
    keep = w <= cut
    return u[:, keep].T


def null_space(constraints, n_unknowns, tol=DEFAULT_TOL):
    """Orthonormal basis (rows) of the common kernel over C.

    constraints is a sequence of (m_i, n_unknowns) matrices; an empty
    sequence returns the full space.
    """
    mats = [np.atleast_2d(np.asarray(c, dtype=complex)) for c in constraints]
    mats = [m for m in mats if m.size]
    if not mats:
        return np.eye(n_unknowns, dtype=complex)
    for m in mats:
        if m.shape[1] != n_unknowns:
            raise ValueError(f"constraint has {m.shape[1]} columns, expected {n_unknowns}")
    rows = sum(m.shape[0] for m in mats)
    if rows <= _DIRECT_SVD_ROWS:
        stacked = np.vstack(mats)
        _, sigma, vh = np.linalg.svd(stacked, full_matrices=True)
        r = rank_from_singular_values(sigma, stacked.shape, tol)
        return vh[r:]
    gram = np.zeros((n_unknowns, n_unknowns), dtype=complex)
    for m in mats:
        gram += m.conj().T @ m
    return kernel_from_gram(gram, max(rows, n_unknowns), tol)


def realify_gram(gram):
    """Real 2n x 2n quadratic form of a complex Hermitian Gram matrix.

    With v = x + i y, the form v* G v equals [x; y]^T R [x; y] where
    R = [[Re G, -Im G], [Im G, Re G]].
    """
    a = gram.real
    b = gram.imag
    return np.block([[a, -b], [b, a]])


def _realify_constraint(lin, anti):
    """Real matrix of the R-linear map v -> lin v + anti conj(v) on [x; y]."""
    n = lin.shape[1] if lin is not None else anti.shape[1]
    la = lin.real if lin is not None else np.zeros((n, n))
    lb = lin.imag if lin is not None else np.zeros((n, n))
    ma = anti.real if anti is not None else np.zeros((n, n))
    mb = anti.imag if anti is not None else np.zeros((n, n))
    return np.block([[la + ma, -lb + mb], [lb + mb, la - ma]])


def real_null_space(linear, antilinear, n_unknowns, tol=DEFAULT_TOL, linear_gram=None):
    """Real-linear common kernel of mixed linear/antilinear constraints.

    linear: sequence of (m_i, n) complex matrices L, constraint L v = 0.
    antilinear: sequence of (L, M) pairs, constraint L v + M conj(v) = 0
      (either member may be None).
    linear_gram: optional precomputed Hermitian sum of L* L for additional
      linear constraints, merged into the system.

    Returns rows of complex length-n vectors spanning the solution set over
    R, orthonormal for Re <u, v>.
    """
    n = n_unknowns
    gram = np.zeros((2 * n, 2 * n))
    scale = 2 * n
    cgram = np.zeros((n, n), dtype=complex)
    if linear_gram is not None:
        cgram += linear_gram
        scale += 2 * n
    for l in linear:
        l = np.atleast_2d(np.asarray(l, dtype=complex))
        cgram += l.conj().T @ l
        scale += 2 * l.shape[0]
    gram += realify_gram(cgram)
    for lin, anti in antilinear:
        lin = None if lin is None else np.atleast_2d(np.asarray(lin, dtype=complex))
        anti = None if anti is None else np.atleast_2d(np.asarray(anti, dtype=complex))
        r = _realify_constraint(lin, anti)
        gram += r.T @ r
        scale += r.shape[0]
    # Symmetrize against roundoff before the eigensolve.
    gram = 0.5 * (gram + gram.T)
    w, u = np.linalg.eigh(gram)
    w = np.clip(w, 0.0, None)
    top = w[-1] if w.size else 0.0
    if top == 0.0:
        kernel = u.T
    else:
        cut = (tol * scale) ** 2 * top
        kernel = u[:, w <= cut].T
    return kernel[:, :n] + 1j * kernel[:, n:]
