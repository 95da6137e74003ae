"""Executable forms of the main structure theorems.

one_forms spans the differentials a [D, b]; clifford closes algebra plus
one-forms (plus the grading for the even variant) into a *-algebra; the
Morita property compares the Clifford commutant with the complexified
opposite algebra; the obstruction and irreducibility checks certify the
negative results by explicit commuting witnesses and real commutants.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import catalog, linalg, star_algebra, subspaces
from .linalg import DEFAULT_TOL
from .subspaces import OperatorSubspace
from .triple import first_order_violation, zeroth_order_violation


class OrderConditionError(ValueError):
    """The zeroth or first order condition fails where it is required."""


def algebra_span(t, tol=DEFAULT_TOL):
    """Complex span of the represented algebra."""
    return subspaces.span_of(t.algebra_gens, field="complex", tol=tol)


def opposite_span(t, tol=DEFAULT_TOL, unitalized=False):
    """Complex span of the opposite algebra.

    With unitalized=True the identity is adjoined when missing; the Morita
    comparison for degenerate representations is against this minimal
    unitalization, which has the same commutant.
    """
    span = subspaces.span_of(t.opposite_gens, field="complex", tol=tol)
    if unitalized and not span.contains(linalg.identity(t.n)):
        flat = np.vstack([span.flat, linalg.vec(linalg.identity(t.n))])
        span = OperatorSubspace(flat, t.n, field="complex", tol=tol)
    return span


def one_forms(t, tol=DEFAULT_TOL):
    """Complex span of a [D, b] over the represented algebra.

    Computed over a basis of the complex span of the generators; the span is
    a two-sided module over the algebra by the Leibniz identity, which the
    test-suite verifies rather than assumes.
    """
    basis = algebra_span(t, tol=tol).basis_matrices()
    if not basis:
        return subspaces.span_of([], field="complex", tol=tol, n=t.n)
    d = np.asarray(t.dirac, dtype=complex)
    commutators = [d @ b - b @ d for b in basis]
    products = [a @ c for a in basis for c in commutators]
    return subspaces.span_of(products, field="complex", tol=tol, n=t.n)


def clifford(t, even=False, tol=DEFAULT_TOL, one_form_space=None):
    """The *-algebra generated by the algebra and its one-forms.

    even=True additionally adjoins the grading; it requires an even triple.
    """
    if even and t.grading is None:
        raise ValueError("even Clifford algebra requires a grading")
    if one_form_space is None:
        one_form_space = one_forms(t, tol=tol)
    gens = list(algebra_span(t, tol=tol).basis_matrices())
    gens += one_form_space.basis_matrices()
    if even:
        gens.append(np.asarray(t.grading, dtype=complex))
    return star_algebra.star_closure(gens, tol=tol)


@dataclass(frozen=True)
class MoritaVerdict:
    """Outcome of the Morita-equivalence comparison.

    property_m is True when the odd Clifford commutant equals the
    (complexified, minimally unitalized) opposite algebra; the with-grading
    fields repeat the comparison for the even Clifford algebra and are None
    for odd triples.  On failure, witness is a unit commutant element
    HS-orthogonal to the opposite algebra.
    """

    clifford_odd_dim: int
    clifford_even_dim: int | None
    commutant_odd_dim: int
    commutant_even_dim: int | None
    opposite_dim: int
    property_m: bool
    property_m_with_grading: bool | None
    witness: np.ndarray | None
    witness_side: str | None


def _orthogonal_witness(commutant_space, opposite):
    """Unit element of the commutant orthogonal to the opposite algebra."""
    resid = commutant_space.flat - (
        commutant_space.flat @ opposite.flat.conj().T) @ opposite.flat
    norms = np.linalg.norm(resid, axis=1)
    idx = int(np.argmax(norms))
    if norms[idx] == 0.0:
        return None
    w = resid[idx] / norms[idx]
    return linalg.unvec(w, commutant_space.n, commutant_space.n)


def property_m(t, with_grading=False, tol=DEFAULT_TOL, clifford_odd=None):
    """Morita check: does the Clifford commutant equal the opposite algebra?

    Requires the order conditions; raises OrderConditionError otherwise.
    The even-side commutant is computed from the odd Clifford basis plus the
    grading (same commutant as the closed even algebra), and the even
    Clifford dimension via the bicommutant.
    """
    z = zeroth_order_violation(t)
    f = first_order_violation(t)
    if z > tol or f > tol:
        raise OrderConditionError(
            f"order-conditions-violated (zeroth {z:.3e}, first {f:.3e}, tol {tol:g})")
    if with_grading and t.grading is None:
        raise ValueError("with_grading requires an even triple")
    cl = clifford(t, even=False, tol=tol) if clifford_odd is None else clifford_odd
    comm_odd = subspaces.commutant(cl.basis_matrices(), tol=tol)
    opp = opposite_span(t, tol=tol, unitalized=True)
    holds_odd = subspaces.equals(comm_odd, opp)

    comm_even = None
    cl_even_dim = None
    holds_even = None
    if with_grading:
        comm_even = subspaces.commutant(
            cl.basis_matrices() + [np.asarray(t.grading, dtype=complex)], tol=tol)
        cl_even_dim = subspaces.commutant(comm_even.basis_matrices(), tol=tol).dim
        holds_even = subspaces.equals(comm_even, opp)

    witness = None
    side = None
    if with_grading and holds_even is False:
        witness = _orthogonal_witness(comm_even, opp)
        side = "even"
    elif not holds_odd:
        witness = _orthogonal_witness(comm_odd, opp)
        side = "odd"
    return MoritaVerdict(
        clifford_odd_dim=cl.dim,
        clifford_even_dim=cl_even_dim,
        commutant_odd_dim=comm_odd.dim,
        commutant_even_dim=None if comm_even is None else comm_even.dim,
        opposite_dim=opp.dim,
        property_m=holds_odd,
        property_m_with_grading=holds_even,
        witness=witness,
        witness_side=side,
    )


def obstruction_check(x, t, mode, free_part=None, tol=DEFAULT_TOL):
    """Certify that the grading lies outside a generated algebra.

    mode 'algebra_d0': x must commute with the algebra generators and the
    Dirac free part; 'with_opposite' additionally with the opposite
    generators; 'zero_chain' with algebra and opposite generators only (no
    Dirac).  In every mode x must anticommute with the grading: conjugation
    by such an x fixes the generated algebra pointwise but flips the
    grading, so the grading cannot belong to it.
    """
    if t.grading is None:
        raise ValueError("obstruction check requires a grading")
    x = np.asarray(x, dtype=complex)
    x_norm = linalg.hs_norm(x)
    if x_norm == 0.0:
        return False
    if mode not in ("algebra_d0", "with_opposite", "zero_chain"):
        raise ValueError(f"unknown obstruction mode {mode!r}")
    targets = list(t.algebra_gens)
    if mode in ("with_opposite", "zero_chain"):
        targets += list(t.opposite_gens)
    if mode in ("algebra_d0", "with_opposite"):
        d0 = free_part if free_part is not None else t.free_part
        if d0 is None:
            raise ValueError("mode needs the Dirac free part and none is declared")
        targets.append(np.asarray(d0, dtype=complex))
    for g in targets:
        scale = max(linalg.hs_norm(g), 1.0) * x_norm
        if linalg.hs_norm(x @ g - g @ x) > tol * scale:
            return False
    g = np.asarray(t.grading, dtype=complex)
    anti = linalg.hs_norm(x @ g + g @ x)
    return anti <= tol * linalg.hs_norm(g) * x_norm


@dataclass(frozen=True)
class IrreducibilityVerdict:
    """Real commutant of the full triple data and the projection criterion.

    commutant_dim_real counts real dimensions of everything commuting with
    the algebra, the Dirac operator, the grading (if any) and the real
    structure; selfadjoint_dim counts its Hermitian part.  The triple is
    irreducible exactly when no nontrivial commuting projection exists,
    i.e. when the Hermitian part is spanned by the identity alone.
    """

    irreducible: bool
    commutant_dim_real: int
    selfadjoint_dim: int
    witness: np.ndarray | None


def _real_commutant_with_j(gens, extra_ops, k_matrix, n, tol):
    mats = [np.asarray(g, dtype=complex) for g in gens]
    reduced = linalg.orthonormal_rows(
        np.array([linalg.vec(g) for g in mats]), tol=tol)
    gen_mats = [linalg.unvec(row, n, n) for row in reduced]
    for op in extra_ops:
        op = np.asarray(op, dtype=complex)
        nrm = linalg.hs_norm(op)
        if nrm > 0.0:
            gen_mats.append(op / nrm)
    gram = subspaces.commutator_gram(gen_mats)
    eye = np.eye(n, dtype=complex)
    lin = np.kron(k_matrix.T.astype(complex), eye)
    anti = -np.kron(eye, k_matrix.astype(complex))
    flat = linalg.real_null_space([], [(lin, anti)], n * n, tol=tol, linear_gram=gram)
    return OperatorSubspace(flat, n, field="real", tol=tol, orthonormal=True)


def _selfadjoint_subbasis(space, tol):
    """Real basis of the Hermitian elements of a real-linear operator space."""
    if space.dim == 0:
        return []
    cols = []
    for row in space.flat:
        m = linalg.unvec(row, space.n, space.n)
        cols.append(linalg.vec(m - m.conj().T))
    a = np.array(cols).T  # (n^2, d) complex, columns indexed by basis
    system = np.vstack([a.real, a.imag])
    _, sigma, vh = np.linalg.svd(system, full_matrices=True)
    cut = tol * max(system.shape)
    rank = int(np.sum(sigma > cut))
    combos = vh[rank:]
    mats = []
    for c in combos:
        m = linalg.unvec(c @ space.flat, space.n, space.n)
        mats.append(0.5 * (m + m.conj().T))
    return mats


def irreducible(t, tol=DEFAULT_TOL, cluster_gap=1e-6):
    """Projection-based irreducibility of the full triple data.

    Computes the real commutant with the real-structure constraint, then its
    Hermitian part.  If the Hermitian part is larger than the span of the
    identity, a non-scalar self-adjoint element is spectrally decomposed and
    the eigenprojection onto its lowest eigenvalue cluster (gap threshold
    cluster_gap) is returned as an explicit reducing projection.
    """
    n = t.n
    extra = [t.dirac]
    if t.grading is not None:
        extra.append(t.grading)
    comm = _real_commutant_with_j(t.algebra_gens, extra,
                                  t.real_structure.matrix, n, tol)
    herm = _selfadjoint_subbasis(comm, tol)
    sa_dim = len(herm)
    if sa_dim <= 1:
        return IrreducibilityVerdict(True, comm.dim, sa_dim, None)
    eye_dir = linalg.vec(linalg.identity(n)) / np.sqrt(n)
    witness_source = None
    best = 0.0
    for m in herm:
        v = linalg.vec(m)
        coeff = np.real(np.vdot(eye_dir, v))
        resid = v - coeff * eye_dir
        nrm = float(np.linalg.norm(resid))
        if nrm > best:
            best = nrm
            witness_source = linalg.unvec(resid, n, n)
    if witness_source is None or best <= tol:
        return IrreducibilityVerdict(True, comm.dim, sa_dim, None)
    s = 0.5 * (witness_source + witness_source.conj().T)
    vals, vecs = np.linalg.eigh(s)
    scale = max(float(vals[-1] - vals[0]), 1.0)
    split = 1
    for i in range(1, len(vals)):
        if vals[i] - vals[i - 1] > cluster_gap * scale:
            split = i
            break
    projection = vecs[:, :split] @ vecs[:, :split].conj().T
    return IrreducibilityVerdict(False, comm.dim, sa_dim, projection)


def zero_chain_membership(x, algebra_gens, opposite_gens, tol=DEFAULT_TOL):
    """Is x in the complex linear span of algebra plus opposite algebra?"""
    span = subspaces.span_of(list(algebra_gens) + list(opposite_gens),
                             field="complex", tol=tol)
    return span.contains(x)


def weak_orientability_aev(which="standard", tol=DEFAULT_TOL):
    """Membership of a grading in the Pati-Salam algebra plus its conjugate.

    Every zero-chain is a cycle, so membership in this linear sum implies
    orientability in the weak sense.
    """
    gens = catalog.algebra_aev_generators()
    j = catalog.real_structure()
    opp = [j.conjugate_operator(g) for g in gens]
    return zero_chain_membership(catalog.grading(which), gens, opp, tol=tol)
