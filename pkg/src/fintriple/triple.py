"""Finite real spectral triples and their axioms.

A FiniteTriple is a plain record of the data (algebra generators, opposite
generators, Dirac operator, real structure, optional grading).  Nothing is
enforced at construction beyond shapes: the axioms are what this workbench
*checks*, so order conditions, sign relations and grading compatibility are
exposed as residual-valued operations.  A residual is zero (up to tolerance)
exactly when the corresponding axiom holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg, subspaces
from .linalg import DEFAULT_TOL, AntilinearOperator


class SignIndeterminateError(ValueError):
    """Neither sign satisfies a real-structure relation within tolerance."""


class FirstOrderError(ValueError):
    """Operation requires the first-order condition, which fails."""


#: KO-dimension lookup, even case: (eps, eps_prime, eps_dblprime) -> n mod 8.
KO_TABLE_EVEN = {(1, 1, 1): 0, (-1, 1, -1): 2, (-1, 1, 1): 4, (1, 1, -1): 6}
#: Odd case: (eps, eps_prime) -> n mod 8.
KO_TABLE_ODD = {(1, -1): 1, (-1, 1): 3, (-1, -1): 5, (1, 1): 7}

# Commutators smaller than this multiple of ||D|| are treated as exactly zero
# when normalizing first-order violations.
_COMMUTATOR_FLOOR = 1e-12


@dataclass(frozen=True)
class FiniteTriple:
    """Data of a finite real spectral triple on C^n.

    free_part, when set, is the declared component of the Dirac operator
    outside the algebra commutant (the part generating one-forms); catalog
    constructors fill it in, and obstruction checks use it.
    """

    algebra_gens: tuple
    opposite_gens: tuple
    dirac: np.ndarray
    real_structure: AntilinearOperator
    grading: np.ndarray | None = None
    free_part: np.ndarray | None = None
    label: str = ""

    @property
    def n(self):
        return self.dirac.shape[0]

    @property
    def is_even(self):
        return self.grading is not None


@dataclass(frozen=True)
class SignTable:
    """Signs of the real-structure relations and the KO-dimension they select.

    vacuous lists relations where both signs fit (e.g. J D = D J with D = 0);
    the convention there is +1.  ko_dimension is None when the detected signs
    do not appear in the standard table.
    """

    eps: int
    eps_prime: int
    eps_dblprime: int | None
    ko_dimension: int | None
    residuals: dict = field(default_factory=dict)
    vacuous: tuple = ()


def opposite_generators(gens, real_structure):
    """J a J^{-1} for each generator."""
    return tuple(real_structure.conjugate_operator(g) for g in gens)


def _normalized(mats):
    out = []
    for m in mats:
        nrm = linalg.hs_norm(m)
        if nrm > 0.0:
            out.append(np.asarray(m, dtype=complex) / nrm)
    return out


def zeroth_order_violation(t):
    """Largest ||[a, b°]|| over HS-normalized generator pairs."""
    left = _normalized(t.algebra_gens)
    right = _normalized(t.opposite_gens)
    worst = 0.0
    for a in left:
        for b in right:
            worst = max(worst, linalg.hs_norm(a @ b - b @ a))
    return worst


def first_order_violation(t):
    """Largest relative ||[[D, a], b°]|| over generator pairs.

    Each double commutator is normalized by ||[D, a]|| (with b° HS-unit), so
    the result is scale-free in both D and the generators: it vanishes to
    machine precision when the condition holds and is order one when a
    one-form genuinely fails to commute with the opposite algebra.  Pairs
    whose one-form is numerically zero contribute nothing.
    """
    d = np.asarray(t.dirac, dtype=complex)
    d_norm = linalg.hs_norm(d)
    if d_norm == 0.0:
        return 0.0
    left = _normalized(t.algebra_gens)
    right = _normalized(t.opposite_gens)
    floor = _COMMUTATOR_FLOOR * d_norm
    worst = 0.0
    for a in left:
        c = d @ a - a @ d
        c_norm = linalg.hs_norm(c)
        if c_norm <= floor:
            continue
        for b in right:
            worst = max(worst, linalg.hs_norm(c @ b - b @ c) / c_norm)
    return worst


def _pick_sign(residual_plus, residual_minus, relation, tol):
    if residual_plus <= tol and residual_minus <= tol:
        return 1, residual_plus, True
    if residual_plus <= tol:
        return 1, residual_plus, False
    if residual_minus <= tol:
        return -1, residual_minus, False
    raise SignIndeterminateError(
        f"sign-indeterminate: {relation} residuals "
        f"(+1: {residual_plus:.3e}, -1: {residual_minus:.3e}) both exceed tol={tol:g}"
    )


def sign_table(t, tol=1e-10):
    """Detect (eps, eps', eps'') and look up the KO-dimension.

    Residuals are HS norms normalized by the size of the operators involved,
    so a clean sign gives ~0 and the opposite sign gives 2.
    """
    k = t.real_structure.matrix
    n = t.n
    eye_norm = np.sqrt(n)
    jj = k @ k  # J^2 acts linearly since K is real
    r_eps = {s: float(np.linalg.norm(jj - s * np.eye(n))) / eye_norm for s in (1, -1)}
    eps, res_eps, vac_eps = _pick_sign(r_eps[1], r_eps[-1], "J^2 = eps", tol)

    d = np.asarray(t.dirac, dtype=complex)
    d_norm = linalg.hs_norm(d)
    vacuous = []
    if vac_eps:
        vacuous.append("eps")
    if d_norm == 0.0:
        eps_prime, res_prime = 1, 0.0
        vacuous.append("eps_prime")
    else:
        r_p = {s: float(np.linalg.norm(k @ np.conj(d) - s * d @ k)) / d_norm for s in (1, -1)}
        eps_prime, res_prime, vac = _pick_sign(r_p[1], r_p[-1], "J D = eps' D J", tol)
        if vac:
            vacuous.append("eps_prime")

    residuals = {"eps": res_eps, "eps_prime": res_prime}
    if t.grading is None:
        ko = KO_TABLE_ODD.get((eps, eps_prime))
        return SignTable(eps, eps_prime, None, ko, residuals, tuple(vacuous))

    g = np.asarray(t.grading, dtype=complex)
    g_norm = linalg.hs_norm(g)
    r_pp = {s: float(np.linalg.norm(k @ np.conj(g) - s * g @ k)) / g_norm for s in (1, -1)}
    eps_dbl, res_dbl, vac = _pick_sign(r_pp[1], r_pp[-1], "J gamma = eps'' gamma J", tol)
    if vac:
        vacuous.append("eps_dblprime")
    residuals["eps_dblprime"] = res_dbl
    ko = KO_TABLE_EVEN.get((eps, eps_prime, eps_dbl))
    return SignTable(eps, eps_prime, eps_dbl, ko, residuals, tuple(vacuous))


def grading_compatible(free_part, grading, tol=DEFAULT_TOL):
    """True iff the grading anticommutes with the given Dirac component."""
    d0 = np.asarray(free_part, dtype=complex)
    g = np.asarray(grading, dtype=complex)
    nrm = linalg.hs_norm(d0)
    if nrm == 0.0:
        return True
    return linalg.hs_norm(g @ d0 + d0 @ g) <= tol * 2.0 * nrm


@dataclass(frozen=True)
class DiracDecomposition:
    """Least-squares splitting D = D0 + D1 with D0 in (A°)' and D1 in A'.

    The splitting is the minimum-norm solution; ambiguity_dim records the
    dimension of A' ∩ (A°)' responsible for its non-uniqueness.  When D
    commutes with J, j_symmetric_part is a self-adjoint D0' with
    D = D0' + J D0' J and j_residual the achieved error.
    """

    free_part: np.ndarray
    commuting_part: np.ndarray
    residual: float
    ambiguity_dim: int
    j_symmetric_part: np.ndarray | None = None
    j_residual: float | None = None


def decompose_dirac(t, tol=DEFAULT_TOL, algebra_commutant=None, opposite_commutant=None):
    """Split the Dirac operator per the first-order structure theorem.

    Raises FirstOrderError when the first-order condition fails.  The two
    commutants may be passed in to avoid recomputation.
    """
    violation = first_order_violation(t)
    if violation > tol:
        raise FirstOrderError(f"not-first-order: violation {violation:.3e} > tol {tol:g}")
    n = t.n
    if algebra_commutant is None:
        algebra_commutant = subspaces.commutant(t.algebra_gens, tol=tol)
    if opposite_commutant is None:
        opposite_commutant = subspaces.commutant(t.opposite_gens, tol=tol)

    d = np.asarray(t.dirac, dtype=complex)
    b0 = opposite_commutant.flat
    b1 = algebra_commutant.flat
    stacked = np.vstack([b0, b1])
    coeffs, *_ = np.linalg.lstsq(stacked.T, linalg.vec(d), rcond=None)
    d0 = linalg.unvec(coeffs[: b0.shape[0]] @ b0, n, n)
    d1 = linalg.unvec(coeffs[b0.shape[0]:] @ b1, n, n)
    residual = linalg.hs_norm(d - d0 - d1)
    ambiguity = subspaces.intersect(algebra_commutant, opposite_commutant).dim

    j_sym = None
    j_res = None
    j = t.real_structure
    d_norm = max(linalg.hs_norm(d), 1.0)
    if j.commutation_residual(d) <= tol * d_norm:
        # Constructive route: shift the ambiguity so D1 = J D0 J, then take
        # the self-adjoint part, which absorbs the skew piece.
        correction = d1 - j.conjugate_operator(d0)
        shifted = d0 + 0.5 * correction
        sym = 0.5 * (shifted + shifted.conj().T)
        j_sym = sym
        j_res = linalg.hs_norm(d - sym - j.conjugate_operator(sym))
    return DiracDecomposition(d0, d1, residual, ambiguity, j_sym, j_res)


def axiom_residuals(t):
    """Residuals of every defining axiom, for reports and tests.

    Keys with value ~0 mean the axiom holds.  Grading keys are absent for
    odd triples.
    """
    d = np.asarray(t.dirac, dtype=complex)
    d_scale = max(linalg.hs_norm(d), 1.0)
    out = {
        "dirac_hermitian": linalg.hs_norm(d - d.conj().T) / d_scale,
        "zeroth_order": zeroth_order_violation(t),
        "first_order": first_order_violation(t),
    }
    if t.grading is not None:
        g = np.asarray(t.grading, dtype=complex)
        n = t.n
        out["grading_involution"] = linalg.hs_norm(g @ g - np.eye(n)) / np.sqrt(n)
        out["grading_hermitian"] = linalg.hs_norm(g - g.conj().T) / np.sqrt(n)
        worst = 0.0
        for a in _normalized(t.algebra_gens):
            worst = max(worst, linalg.hs_norm(g @ a - a @ g))
        out["grading_commutes_algebra"] = worst
        out["grading_anticommutes_dirac"] = linalg.hs_norm(g @ d + d @ g) / (2.0 * d_scale)
    return out
