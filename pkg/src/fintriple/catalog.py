"""Constructors for the concrete Standard-Model internal geometry.

Everything here is an explicit matrix built from the frozen slot layout: the
three algebra representations (the real algebra C+H+M3, its complex
degenerate cousin C+M2+M3, and the Pati-Salam algebra H+H+M4), the real
structure, both gradings, the Dirac family and its named one-form
generators, the gauge-group representations, and the witness operators used
by the obstruction and irreducibility arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import linalg, layout
from .layout import HILBERT_DIM, LEFT_DIM, RIGHT_DIM, left_unit, right_unit
from .linalg import AntilinearOperator, DEFAULT_TOL, kron_action
from .triple import FiniteTriple, opposite_generators

ALGEBRA_CHOICES = ("A_F", "B_F", "A_ev")
GRADING_CHOICES = ("standard", "nonstandard", "none")
DIRAC_CHOICES = ("zero", "CC", "CC_plus_Gamma", "custom")

_EYE4 = np.eye(RIGHT_DIM, dtype=complex)
_EYE8 = np.eye(LEFT_DIM, dtype=complex)


@dataclass(frozen=True)
class DiracParams:
    """Coefficients of the Dirac family.

    The four Yukawa-type couplings, the right-handed Majorana-type coupling
    and omega are complex; delta and gamma are real.  Zero values are
    allowed everywhere (the theorems impose non-vanishing as hypotheses, not
    the constructors).
    """

    ups_nu: complex = 0j
    ups_e: complex = 0j
    ups_u: complex = 0j
    ups_d: complex = 0j
    ups_r: complex = 0j
    omega: complex = 0j
    delta: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        values = [self.ups_nu, self.ups_e, self.ups_u, self.ups_d,
                  self.ups_r, self.omega, self.delta, self.gamma]
        if not all(np.isfinite(np.asarray(values, dtype=complex).view(float))):
            raise ValueError("Dirac coefficients must be finite")


#: Golden-fixture coefficient values used by the committed matrix fixtures.
FIXTURE_PARAMS = DiracParams(ups_nu=1, ups_e=2, ups_u=3, ups_d=4,
                             ups_r=5, omega=6, delta=7.0, gamma=8.0)


@dataclass(frozen=True)
class TripleConfig:
    """Input parameters selecting one concrete triple.

    The Pati-Salam algebra only pairs with the standard grading; the
    degenerate-representation algebra and the default one accept either
    grading or none.
    """

    algebra: str = "A_F"
    grading: str = "nonstandard"
    dirac: str = "CC"
    params: DiracParams = DiracParams()
    custom_matrix: np.ndarray | None = None
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if self.algebra not in ALGEBRA_CHOICES:
            raise ValueError(f"unknown algebra {self.algebra!r}")
        if self.grading not in GRADING_CHOICES:
            raise ValueError(f"unknown grading {self.grading!r}")
        if self.dirac not in DIRAC_CHOICES:
            raise ValueError(f"unknown dirac kind {self.dirac!r}")
        if self.algebra == "A_ev" and self.grading != "standard":
            raise ValueError("algebra A_ev only pairs with the standard grading")
        if self.dirac == "custom" and self.custom_matrix is None:
            raise ValueError("dirac kind 'custom' needs a matrix")
        if not (0 < self.tol < 1):
            raise ValueError(f"tolerance {self.tol} out of range")


def quaternion_units():
    """Real basis {1, i s1, i s2, i s3} of the quaternions as 2x2 matrices."""
    return [
        np.eye(2, dtype=complex),
        np.array([[0, 1j], [1j, 0]]),
        np.array([[0, 1], [-1, 0]], dtype=complex),
        np.array([[1j, 0], [0, -1j]]),
    ]


def _embed_af(lam_top, lam_second, q, m):
    """8x8 block matrix diag(lam_top, lam_second, q, lam_top, m)."""
    a = np.zeros((LEFT_DIM, LEFT_DIM), dtype=complex)
    a[0, 0] = lam_top
    a[1, 1] = lam_second
    a[2:4, 2:4] = q
    a[4, 4] = lam_top
    a[5:8, 5:8] = m
    return a


def algebra_af_element(lam, q, m):
    """Representation of (lam, q, m) in C + H + M3 acting from the left."""
    return kron_action(_embed_af(lam, np.conj(lam), q, m), _EYE4)


def algebra_af_generators():
    """Real-linear generating family of the represented C + H + M3.

    Two generators carry the complex scalar slot (value 1 and i, with the
    conjugate entry tracking it), four the quaternion units, and eighteen a
    real basis of the 3x3 block.  The complex span has dimension 15.
    """
    zero2 = np.zeros((2, 2))
    zero3 = np.zeros((3, 3))
    gens = [algebra_af_element(1.0, zero2, zero3),
            algebra_af_element(1j, zero2, zero3)]
    gens += [algebra_af_element(0.0, u, zero3) for u in quaternion_units()]
    for k in range(1, 4):
        for l in range(1, 4):
            m_unit = layout.unit(3, k, l)
            gens.append(algebra_af_element(0.0, zero2, m_unit))
            gens.append(algebra_af_element(0.0, zero2, 1j * m_unit))
    return gens


def algebra_bf_element(lam, q, m):
    """Degenerate representation of (lam, q, m) in C + M2 + M3.

    Identical to the C + H + M3 block form except that the slot tracking the
    conjugate scalar is held at zero, and all three summands are complex.
    """
    a = np.zeros((LEFT_DIM, LEFT_DIM), dtype=complex)
    a[0, 0] = lam
    a[2:4, 2:4] = q
    a[4, 4] = lam
    a[5:8, 5:8] = m
    return kron_action(a, _EYE4)


def algebra_bf_generators():
    """Complex-linear generators of the degenerate representation (dim 14)."""
    zero2 = np.zeros((2, 2))
    zero3 = np.zeros((3, 3))
    gens = [algebra_bf_element(1.0, zero2, zero3)]
    gens += [algebra_bf_element(0.0, layout.unit(2, k, l), zero3)
             for k in range(1, 3) for l in range(1, 3)]
    gens += [algebra_bf_element(0.0, zero2, layout.unit(3, k, l))
             for k in range(1, 4) for l in range(1, 4)]
    return gens


def algebra_aev_element(x, y, m):
    """Representation of (x, y, m) in H + H + M4 acting from the left."""
    a = np.zeros((LEFT_DIM, LEFT_DIM), dtype=complex)
    a[0:2, 0:2] = x
    a[2:4, 2:4] = y
    a[4:8, 4:8] = m
    return kron_action(a, _EYE4)


def algebra_aev_generators():
    """Real-linear generating family of the Pati-Salam algebra (dim_C 24)."""
    zero2 = np.zeros((2, 2))
    zero4 = np.zeros((4, 4))
    gens = [algebra_aev_element(u, zero2, zero4) for u in quaternion_units()]
    gens += [algebra_aev_element(zero2, u, zero4) for u in quaternion_units()]
    for k in range(1, 5):
        for l in range(1, 5):
            m_unit = layout.unit(4, k, l)
            gens.append(algebra_aev_element(zero2, zero2, m_unit))
            gens.append(algebra_aev_element(zero2, zero2, 1j * m_unit))
    return gens


def real_structure():
    """Charge conjugation: swap the particle/antiparticle 4x4 blocks and
    Hermitian-transpose each, giving v -> K conj(v) with K a symmetric
    permutation (so the square is +1)."""
    k = np.zeros((HILBERT_DIM, HILBERT_DIM))
    for r in range(1, LEFT_DIM + 1):
        for c in range(1, RIGHT_DIM + 1):
            if r <= 4:
                target = layout.slot_index(4 + c, r)
            else:
                target = layout.slot_index(c, r - 4)
            k[target, layout.slot_index(r, c)] = 1.0
    return AntilinearOperator(k)


def grading(kind):
    """One of the two diagonal chirality operators.

    The standard one separates left from right handedness uniformly; the
    non-standard one assigns opposite parity to chiral leptons and quarks
    (they agree on leptons and differ by a sign on quarks).
    """
    diag_lr = np.diag([1, 1, -1, -1, 0, 0, 0, 0]).astype(complex)
    if kind == "standard":
        lower = np.diag([0, 0, 0, 0, -1, -1, -1, -1]).astype(complex)
        return (kron_action(diag_lr, _EYE4)
                + kron_action(lower, np.diag([1, 1, -1, -1]).astype(complex)))
    if kind == "nonstandard":
        lower = np.diag([0, 0, 0, 0, -1, 1, 1, 1]).astype(complex)
        return (kron_action(diag_lr, np.diag([1, -1, -1, -1]).astype(complex))
                + kron_action(lower, np.diag([1, 1, -1, -1]).astype(complex)))
    raise ValueError(f"unknown grading kind {kind!r}")


def dirac_free_part(params, include_gamma=False):
    """The Dirac component generating one-forms.

    Lepton block: Yukawa entries coupling right and left rows, the omega
    entry mixing the down-type right slot with the antilepton row, and the
    delta entries mixing leptons with quarks inside the antiparticle rows.
    Quark block: Yukawa and delta entries only.  include_gamma adds the
    extra antiparticle-row coupling in the down-type right column.
    """
    p = params
    lepton = np.zeros((LEFT_DIM, LEFT_DIM), dtype=complex)
    lepton[0, 2] = np.conj(p.ups_nu)
    lepton[2, 0] = p.ups_nu
    lepton[1, 3] = np.conj(p.ups_e)
    lepton[3, 1] = p.ups_e
    lepton[1, 4] = np.conj(p.omega)
    lepton[4, 1] = p.omega
    lepton[4, 5] = p.delta
    lepton[5, 4] = p.delta
    quark = np.zeros((LEFT_DIM, LEFT_DIM), dtype=complex)
    quark[0, 2] = np.conj(p.ups_u)
    quark[2, 0] = p.ups_u
    quark[1, 3] = np.conj(p.ups_d)
    quark[3, 1] = p.ups_d
    quark[4, 5] = p.delta
    quark[5, 4] = p.delta
    d0 = (kron_action(lepton, right_unit(1, 1))
          + kron_action(quark, _EYE4 - right_unit(1, 1)))
    if include_gamma:
        d0 = d0 + p.gamma * kron_action(left_unit(5, 7) + left_unit(7, 5),
                                        right_unit(2, 2))
    return d0


def dirac_majorana_term(ups_r):
    """The term coupling the right-handed neutrino to its conjugate slot;
    it lies in both commutants and commutes with the real structure."""
    block = ups_r * left_unit(5, 1) + np.conj(ups_r) * left_unit(1, 5)
    return kron_action(block, right_unit(1, 1))


def build_dirac(config):
    """Assemble the Hermitian Dirac operator selected by the config.

    Returns (dirac, free_part); free_part is the declared component outside
    the algebra commutant (None for custom matrices).
    """
    if config.dirac == "zero":
        z = np.zeros((HILBERT_DIM, HILBERT_DIM), dtype=complex)
        return z, z
    if config.dirac == "custom":
        d = linalg.ensure_operator(config.custom_matrix, HILBERT_DIM)
        if linalg.hs_norm(d - d.conj().T) > config.tol * max(linalg.hs_norm(d), 1.0):
            raise ValueError("custom Dirac matrix must be Hermitian")
        return d, None
    include_gamma = config.dirac == "CC_plus_Gamma"
    d0 = dirac_free_part(config.params, include_gamma=include_gamma)
    j = real_structure()
    d = d0 + j.conjugate_operator(d0) + dirac_majorana_term(config.params.ups_r)
    return d, d0


def build_triple(config):
    """FiniteTriple for the configured algebra, grading and Dirac operator."""
    if config.algebra == "A_F":
        gens = algebra_af_generators()
    elif config.algebra == "B_F":
        gens = algebra_bf_generators()
    else:
        gens = algebra_aev_generators()
    j = real_structure()
    gamma_op = None if config.grading == "none" else grading(config.grading)
    dirac, free = build_dirac(config)
    return FiniteTriple(
        algebra_gens=tuple(gens),
        opposite_gens=opposite_generators(gens, j),
        dirac=dirac,
        real_structure=j,
        grading=gamma_op,
        free_part=free,
        label=f"{config.algebra}/{config.grading}/{config.dirac}",
    )


# ---------------------------------------------------------------------------
# Gauge group representations


@dataclass(frozen=True)
class GroupElement:
    """Element (phase, weak 2x2 block, color 3x3 block) of the gauge group."""

    phase: complex
    weak: np.ndarray
    color: np.ndarray

    def unitarity_defect(self):
        defect = abs(abs(self.phase) - 1.0)
        defect = max(defect, float(np.linalg.norm(
            self.weak @ self.weak.conj().T - np.eye(2))))
        defect = max(defect, float(np.linalg.norm(
            self.color @ self.color.conj().T - np.eye(3))))
        return defect


def _require_unitary(g, tol=1e-9):
    defect = g.unitarity_defect()
    if defect > tol:
        raise ValueError(f"group element is not unitary (defect {defect:.3e})")


def pi_tilde(lam, weak, color):
    """Linearized building block: the algebra representation evaluated at a
    possibly non-quaternionic 2x2 block and arbitrary 3x3 block."""
    return kron_action(_embed_af(lam, np.conj(lam), weak, color), _EYE4)


def pi_sm(g):
    """Unitary representation of the Standard-Model gauge group.

    Implemented through the factorized form a J a J^{-1} with the rescaled
    arguments (phase^3, weak, conj(phase) * color); pi_sm_direct gives the
    explicit two-summand block form for cross-checking.
    """
    _require_unitary(g)
    a = pi_tilde(g.phase ** 3, g.weak, np.conj(g.phase) * g.color)
    j = real_structure()
    return a @ j.conjugate_operator(a)


def pi_sm_direct(g):
    """The same representation written as one summand per sector."""
    _require_unitary(g)
    lam, q, m = g.phase, g.weak, g.color
    l1 = np.zeros((4, 4), dtype=complex)
    l1[0, 0] = lam ** 3
    l1[1, 1] = np.conj(lam) ** 3
    l1[2:4, 2:4] = q
    r1 = np.zeros((4, 4), dtype=complex)
    r1[0, 0] = np.conj(lam) ** 3
    r1[1:4, 1:4] = lam * m.conj().T
    l2 = np.zeros((4, 4), dtype=complex)
    l2[0, 0] = lam ** 3
    l2[1:4, 1:4] = np.conj(lam) * m
    r2 = np.zeros((4, 4), dtype=complex)
    r2[0, 0] = np.conj(lam) ** 3
    r2[1, 1] = lam ** 3
    r2[2:4, 2:4] = q.conj().T
    upper = np.zeros((LEFT_DIM, LEFT_DIM), dtype=complex)
    upper[0:4, 0:4] = l1
    lower = np.zeros((LEFT_DIM, LEFT_DIM), dtype=complex)
    lower[4:8, 4:8] = l2
    return kron_action(upper, r1) + kron_action(lower, r2)


def rho_degenerate(g):
    """Unitary representation of U(1) x U(2) x U(3) for the degenerate
    representation: fundamental piece on the conjugate lepton column, its
    dual, and the adjoint piece on the rest."""
    _require_unitary(g)
    b4 = np.zeros((4, 4), dtype=complex)
    b4[0, 0] = g.phase
    b4[1:4, 1:4] = g.color
    u4 = np.zeros((4, 4), dtype=complex)
    u4[0, 0] = g.phase
    u4[2:4, 2:4] = g.weak
    lower_b = np.zeros((LEFT_DIM, LEFT_DIM), dtype=complex)
    lower_b[4:8, 4:8] = b4
    upper_u = np.zeros((LEFT_DIM, LEFT_DIM), dtype=complex)
    upper_u[0:4, 0:4] = u4
    e22 = right_unit(2, 2)
    pibar0 = kron_action(lower_b, e22)
    pi1 = kron_action(upper_u, _EYE4) + kron_action(lower_b, _EYE4 - e22)
    j = real_structure()
    return pibar0 + j.conjugate_operator(pibar0) + pi1 @ j.conjugate_operator(pi1)


def cover_map(g):
    """The covering homomorphism (lam, q, m) -> (lam^6, lam^3 q, lam^2 m)
    from the Standard-Model gauge group into U(1) x U(2) x U(3)."""
    return GroupElement(phase=g.phase ** 6, weak=g.phase ** 3 * g.weak,
                        color=g.phase ** 2 * g.color)


def z6_elements():
    """The six central elements (mu, mu^3 1_2, mu^4 1_3), mu^6 = 1, forming
    the kernel of the Standard-Model representation."""
    out = []
    for k in range(6):
        mu = np.exp(2j * np.pi * k / 6)
        out.append(GroupElement(phase=mu, weak=mu ** 3 * np.eye(2, dtype=complex),
                                color=mu ** 4 * np.eye(3, dtype=complex)))
    return out


def random_unitary(rng, n):
    """Haar-ish unitary from a QR factorization with phase fixing."""
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def random_group_element(rng, special=False):
    """Random unitary group element; special=True normalizes determinants
    so the blocks land in SU(2) and SU(3)."""
    phase = np.exp(2j * np.pi * rng.random())
    weak = random_unitary(rng, 2)
    color = random_unitary(rng, 3)
    if special:
        weak = weak / np.linalg.det(weak) ** (1 / 2)
        color = color / np.linalg.det(color) ** (1 / 3)
    return GroupElement(phase=phase, weak=weak, color=color)


# ---------------------------------------------------------------------------
# One-form generators and witness operators


def one_form_generators(params, include_gamma=False):
    """The named generators of the one-form bimodule for the Dirac family.

    omega_nu and omega_e carry the Yukawa couplings on the up- and down-type
    left rows; xi and eta come from the omega and delta entries; zeta (only
    with the extra coupling present) from the gamma entry.
    """
    p = params
    omega_nu = kron_action(left_unit(3, 1),
                           p.ups_nu * right_unit(1, 1)
                           + p.ups_u * (_EYE4 - right_unit(1, 1)))
    omega_e = kron_action(left_unit(4, 2),
                          p.ups_e * right_unit(1, 1)
                          + p.ups_d * (_EYE4 - right_unit(1, 1)))
    xi = kron_action(left_unit(5, 2), right_unit(1, 1))
    eta = kron_action(left_unit(5, 6), _EYE4)
    gens = [omega_nu, omega_e, xi, eta]
    if include_gamma:
        gens.append(kron_action(left_unit(5, 7), right_unit(2, 2)))
    return gens


def lepton_projection():
    """Projection onto the subspace containing only leptons."""
    block = sum(left_unit(i, i) for i in range(1, 5))
    return kron_action(block, right_unit(1, 1)) + kron_action(left_unit(5, 5), _EYE4)


def witness_catalog(params=FIXTURE_PARAMS):
    """Named operators quoted by the obstruction and reducibility arguments."""
    cat = {
        "e55_block": kron_action(left_unit(5, 5), _EYE4 - right_unit(1, 1)),
        "e55_e23": kron_action(left_unit(5, 5), right_unit(2, 3)),
        "e15_e11": kron_action(left_unit(1, 5), right_unit(1, 1)),
        "lepton_projection": lepton_projection(),
    }
    omega_nu, omega_e, xi, eta, zeta = one_form_generators(params, include_gamma=True)
    cat.update({"omega_nu": omega_nu, "omega_e": omega_e,
                "xi": xi, "eta": eta, "zeta": zeta})
    return cat


def with_params(config, **updates):
    """Copy of a config with some Dirac coefficients replaced."""
    return replace(config, params=replace(config.params, **updates))
