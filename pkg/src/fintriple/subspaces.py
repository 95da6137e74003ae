"""Operator subspaces as first-class values.

An OperatorSubspace stores an orthonormal Hilbert-Schmidt basis of a space of
n x n operators, either over C or over R (real spans arise from antilinear
constraints; the basis matrices are still complex, orthonormal for the real
part of the HS inner product).  Sum, intersection, complement, membership and
commutant all reduce subspace questions to the single rank rule in linalg.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .linalg import DEFAULT_TOL


class FieldMismatchError(ValueError):
    pass


class OperatorSubspace:
    """Span of n x n operators with an orthonormal HS basis.

    flat holds the basis as rows of length n*n (column-major vec); it is
    orthonormalized at construction unless the caller asserts it already is.
    Immutable after construction.
    """

    def __init__(self, flat, n, field="complex", tol=DEFAULT_TOL, orthonormal=False):
        if field not in ("complex", "real"):
            raise ValueError(f"unknown field {field!r}")
        flat = np.asarray(flat, dtype=complex).reshape(-1, n * n)
        if not orthonormal:
            flat = linalg.orthonormal_rows(flat, tol=tol, field=field)
        self.flat = flat
        self.n = n
        self.field = field
        self.tol = tol

    @classmethod
    def from_matrices(cls, mats, field="complex", tol=DEFAULT_TOL):
        mats = list(mats)
        if not mats:
            raise ValueError("need at least one matrix to infer the dimension")
        n = np.asarray(mats[0]).shape[0]
        flat = np.array([linalg.vec(m) for m in mats])
        return cls(flat, n, field=field, tol=tol)

    @property
    def dim(self):
        """Dimension over the subspace's own scalar field."""
        return self.flat.shape[0]

    @property
    def ambient_dim(self):
        return self.n * self.n

    def basis_matrices(self):
        return [linalg.unvec(row, self.n, self.n) for row in self.flat]

    def coefficients(self, x):
        v = linalg.vec(x)
        c = self.flat.conj() @ v
        if self.field == "real":
            c = c.real
        return c

    def project(self, x):
        c = self.coefficients(x)
        return linalg.unvec(c @ self.flat, self.n, self.n)

    def residual(self, x):
        """HS distance from x to the subspace."""
        return linalg.hs_norm(np.asarray(x, dtype=complex) - self.project(x))

    def contains(self, x, tol=None):
        """True iff ||x - P(x)|| <= tol * ||x||; the zero operator is always in."""
        tol = self.tol if tol is None else tol
        nrm = linalg.hs_norm(x)
        if nrm == 0.0:
            return True
        return self.residual(x) <= tol * nrm

    def contains_all(self, mats, tol=None):
        return all(self.contains(m, tol=tol) for m in mats)

    def __repr__(self):
        return f"OperatorSubspace(dim={self.dim}, n={self.n}, field={self.field!r})"


def _check_compatible(s, t):
    if s.n != t.n:
        raise FieldMismatchError("ambient dimensions differ")
    if s.field != t.field:
        raise FieldMismatchError(f"scalar fields differ: {s.field} vs {t.field}")


def span_of(mats, field="complex", tol=DEFAULT_TOL, n=None):
    """Orthonormalized span of a list of operators."""
    mats = list(mats)
    if not mats:
        if n is None:
            raise ValueError("empty generator list needs an explicit ambient n")
        return OperatorSubspace(np.zeros((0, n * n)), n, field=field, tol=tol, orthonormal=True)
    return OperatorSubspace.from_matrices(mats, field=field, tol=tol)


def subspace_sum(s, t):
    """Span of the union."""
    _check_compatible(s, t)
    flat = np.vstack([s.flat, t.flat])
    return OperatorSubspace(flat, s.n, field=s.field, tol=min(s.tol, t.tol))


def intersect(s, t):
    """Intersection, computed inside the span of s.

    Looks for combinations of the basis of s whose component outside t
    vanishes: the left null space of the residual matrix.  Because the basis
    rows are unit vectors, the rank cut is taken against an absolute scale of
    1 rather than the largest residual (which is legitimately ~0 when s is a
    subset of t).
    """
    _check_compatible(s, t)
    tol = min(s.tol, t.tol)
    if s.dim == 0 or t.dim == 0:
        return OperatorSubspace(np.zeros((0, s.ambient_dim)), s.n, field=s.field,
                                tol=tol, orthonormal=True)
    coeff = s.flat @ t.flat.conj().T
    if s.field == "real":
        coeff = coeff.real
    outside = s.flat - coeff @ t.flat
    if s.field == "real":
        work = np.hstack([outside.real, outside.imag])
    else:
        work = outside
    u, sigma, _ = np.linalg.svd(work, full_matrices=True)
    cut = tol * max(work.shape)
    r = int(np.sum(sigma > cut))
    combos = u[:, r:].conj().T
    if combos.shape[0] == 0:
        return OperatorSubspace(np.zeros((0, s.ambient_dim)), s.n, field=s.field,
                                tol=tol, orthonormal=True)
    flat = combos @ s.flat
    return OperatorSubspace(flat, s.n, field=s.field, tol=tol, orthonormal=True)


def equals(s, t, tol=None):
    """Mutual containment at the working tolerance."""
    _check_compatible(s, t)
    if s.dim != t.dim:
        return False
    mats_s = [linalg.unvec(row, s.n, s.n) for row in s.flat]
    mats_t = [linalg.unvec(row, t.n, t.n) for row in t.flat]
    return t.contains_all(mats_s, tol=tol) and s.contains_all(mats_t, tol=tol)


def complement(s):
    """HS-orthogonal complement within the ambient operator space."""
    n2 = s.ambient_dim
    if s.field == "complex":
        if s.dim == 0:
            return OperatorSubspace(np.eye(n2, dtype=complex), s.n, field="complex",
                                    tol=s.tol, orthonormal=True)
        _, _, vh = np.linalg.svd(s.flat, full_matrices=True)
        return OperatorSubspace(vh[s.dim:], s.n, field="complex", tol=s.tol, orthonormal=True)
    if s.dim == 0:
        basis = np.vstack([np.eye(n2, dtype=complex), 1j * np.eye(n2, dtype=complex)])
        return OperatorSubspace(basis, s.n, field="real", tol=s.tol, orthonormal=True)
    w = np.hstack([s.flat.real, s.flat.imag])
    _, _, vh = np.linalg.svd(w, full_matrices=True)
    comp = vh[s.dim:]
    flat = comp[:, :n2] + 1j * comp[:, n2:]
    return OperatorSubspace(flat, s.n, field="real", tol=s.tol, orthonormal=True)


def commutator_gram(gens):
    """Hermitian Gram operator of the map X -> ([X, g])_g on vec(X).

    Sum over generators of M_g* M_g with M_g = g^T (x) 1 - 1 (x) g, expanded
    so only n x n kroneckers are formed.
    """
    gens = [np.asarray(g, dtype=complex) for g in gens]
    n = gens[0].shape[0]
    eye = np.eye(n, dtype=complex)
    left = np.zeros((n, n), dtype=complex)
    right = np.zeros((n, n), dtype=complex)
    gram = np.zeros((n * n, n * n), dtype=complex)
    for g in gens:
        left += g.conj() @ g.T
        right += g.conj().T @ g
        gram -= np.kron(g.conj(), g) + np.kron(g.T, g.conj().T)
    gram += np.kron(left, eye) + np.kron(eye, right)
    gram = 0.5 * (gram + gram.conj().T)
    return gram


def commutant(gens, field="complex", tol=DEFAULT_TOL, extra_gram=None, n=None):
    """All X with [X, g] = 0 for every generator, over the chosen field.

    Commutation constraints are C-linear in X, so the real-field variant
    simply doubles the span (useful only in combination with antilinear
    constraints elsewhere).  Generators are span-reduced first so the cost is
    governed by the dimension of the generated space, not the list length.
    extra_gram, if given, is added to the constraint Gram operator (used to
    impose further linear conditions such as commutation with a grading).
    """
    gens = [np.asarray(g, dtype=complex) for g in gens]
    if not gens and extra_gram is not None:
        n = int(round(np.sqrt(extra_gram.shape[0])))
    if not gens and extra_gram is None:
        if n is None:
            raise ValueError("empty generator list needs an explicit ambient n")
        full = np.eye(n * n, dtype=complex)
        if field == "real":
            full = np.vstack([full, 1j * full])
        return OperatorSubspace(full, n, field=field, tol=tol, orthonormal=(field == "complex"))
    if gens:
        n = gens[0].shape[0]
        reduced = linalg.orthonormal_rows(np.array([linalg.vec(g) for g in gens]), tol=tol)
        gen_mats = [linalg.unvec(row, n, n) for row in reduced]
        gram = commutator_gram(gen_mats)
        scale = (len(gen_mats) + 1) * n * n
    else:
        gram = np.zeros((n * n, n * n), dtype=complex)
        scale = n * n
    if extra_gram is not None:
        gram = gram + extra_gram
        gram = 0.5 * (gram + gram.conj().T)
    if field == "complex":
        kernel = linalg.kernel_from_gram(gram, scale, tol)
        return OperatorSubspace(kernel, n, field="complex", tol=tol, orthonormal=True)
    flat = linalg.real_null_space([], [], n * n, tol=tol, linear_gram=gram)
    return OperatorSubspace(flat, n, field="real", tol=tol, orthonormal=True)
