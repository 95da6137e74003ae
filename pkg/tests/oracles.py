"""Hand-coded block forms used as independent oracles.

Each builder writes the expected parametrized matrices entry by entry from
the block displays, with no use of the solver or the kron helpers under
test.  Subspace equality between a solver result and one of these spans is
the dual-route check.
"""

import numpy as np


def _unit8(i, j):
    m = np.zeros((8, 8), dtype=complex)
    m[i - 1, j - 1] = 1.0
    return m


def _unit4(i, j):
    m = np.zeros((4, 4), dtype=complex)
    m[i - 1, j - 1] = 1.0
    return m


def _act(left, right):
    """Operator V -> left @ V @ right on vec (column-major), via explicit
    index loops rather than a Kronecker product."""
    op = np.zeros((32, 32), dtype=complex)
    for r_out in range(8):
        for c_out in range(4):
            for r_in in range(8):
                for c_in in range(4):
                    op[r_out + 8 * c_out, r_in + 8 * c_in] = (
                        left[r_out, r_in] * right[c_in, c_out])
    return op


def cf_block_basis():
    """The seven-parameter 8x8 commutant block form: a 2x2 block spread over
    rows/cols {1, 5}, a scalar at (2,2), a scalar times identity on rows 3-4
    and another on rows 6-8."""
    basis = [
        _unit8(1, 1), _unit8(1, 5), _unit8(5, 1), _unit8(5, 5),
        _unit8(2, 2),
        _unit8(3, 3) + _unit8(4, 4),
        _unit8(6, 6) + _unit8(7, 7) + _unit8(8, 8),
    ]
    return basis


def af_commutant_basis():
    """The 112-dimensional algebra commutant: block form tensor all of M4."""
    mats = []
    for c in cf_block_basis():
        for k in range(1, 5):
            for l in range(1, 5):
                mats.append(_act(c, _unit4(k, l)))
    return mats


def af_opposite_commutant_basis():
    """The 112-dimensional opposite commutant: an arbitrary 8x8 block on the
    lepton column, block-diagonal 4+4 blocks on the remaining columns with
    the upper 4x4 shared between the down-type right column and the
    left-handed columns."""
    mats = []
    e11 = _unit4(1, 1)
    e22 = _unit4(2, 2)
    e34 = _unit4(3, 3) + _unit4(4, 4)
    for i in range(1, 9):
        for j in range(1, 9):
            mats.append(_act(_unit8(i, j), e11))
    for i in range(1, 5):  # shared upper block on columns 2-4
        for j in range(1, 5):
            mats.append(_act(_unit8(i, j), e22 + e34))
    for i in range(5, 9):  # independent lower blocks
        for j in range(5, 9):
            mats.append(_act(_unit8(i, j), e22))
            mats.append(_act(_unit8(i, j), e34))
    return mats


def aev_commutant_basis():
    """The 48-dimensional Pati-Salam commutant: three scalar blocks of sizes
    2, 2, 4 tensor all of M4."""
    blocks = [
        _unit8(1, 1) + _unit8(2, 2),
        _unit8(3, 3) + _unit8(4, 4),
        sum(_unit8(i, i) for i in range(5, 9)),
    ]
    mats = []
    for b in blocks:
        for k in range(1, 5):
            for l in range(1, 5):
                mats.append(_act(b, _unit4(k, l)))
    return mats


def clifford_commutant_19_basis():
    """The 19-parameter odd-Clifford commutant: a shared scalar on the
    lepton slots plus two independent 3x3 blocks on the color slots of each
    particle/antiparticle half."""
    p_up = sum(_unit8(i, i) for i in range(1, 5))
    p_low = sum(_unit8(i, i) for i in range(5, 9))
    mats = [_act(p_up, _unit4(1, 1)) + _act(p_low, _unit4(1, 1))]
    for k in range(2, 5):
        for l in range(2, 5):
            mats.append(_act(p_up, _unit4(k, l)))
            mats.append(_act(p_low, _unit4(k, l)))
    return mats


def opposite_center_basis():
    """The four-parameter center of the (complexified) opposite algebra."""
    p_up = sum(_unit8(i, i) for i in range(1, 5))
    p_low = sum(_unit8(i, i) for i in range(5, 9))
    e11 = _unit4(1, 1)
    e22 = _unit4(2, 2)
    color = _unit4(3, 3) + _unit4(4, 4)
    shared = _act(p_up, e11) + _act(p_low, e11)
    return [
        shared,
        _act(p_low, e22),
        _act(p_up, e22 + color),
        _act(p_low, color),
    ]


def opposite_algebra_basis():
    """Fifteen explicit basis elements of the complexified opposite algebra:
    upper half acted on from the right by (scalar + 3x3 block), lower half
    by (two scalars + 2x2 block)."""
    p_up = sum(_unit8(i, i) for i in range(1, 5))
    p_low = sum(_unit8(i, i) for i in range(5, 9))
    mats = [
        _act(p_up, _unit4(1, 1)) + _act(p_low, _unit4(1, 1)),
        _act(p_low, _unit4(2, 2)),
    ]
    for k in range(2, 5):
        for l in range(2, 5):
            mats.append(_act(p_up, _unit4(k, l)))
    for k in range(3, 5):
        for l in range(3, 5):
            mats.append(_act(p_low, _unit4(k, l)))
    return mats


def expected_real_structure():
    """Permutation-with-conjugation matrix built by chasing slots: particle
    slot (r, c) goes to (4 + c, r), antiparticle slot (r, c) to (c, r - 4)."""
    k = np.zeros((32, 32))
    for r in range(1, 9):
        for c in range(1, 5):
            if r <= 4:
                r2, c2 = 4 + c, r
            else:
                r2, c2 = c, r - 4
            k[(r2 - 1) + 8 * (c2 - 1), (r - 1) + 8 * (c - 1)] = 1.0
    return k


#: Per-slot sign of the standard grading: right-handed particles +1,
#: left-handed -1; antiparticle rows carry -1 on right-handed columns and
#: +1 on left-handed columns.
STANDARD_SIGNS = [
    [+1, +1, +1, +1],
    [+1, +1, +1, +1],
    [-1, -1, -1, -1],
    [-1, -1, -1, -1],
    [-1, -1, +1, +1],
    [-1, -1, +1, +1],
    [-1, -1, +1, +1],
    [-1, -1, +1, +1],
]

#: The non-standard grading flips the sign on every quark slot (particle
#: rows: color columns; antiparticle rows 6-8) and keeps the lepton slots.
NONSTANDARD_SIGNS = [
    [+1, -1, -1, -1],
    [+1, -1, -1, -1],
    [-1, +1, +1, +1],
    [-1, +1, +1, +1],
    [-1, -1, +1, +1],
    [+1, +1, -1, -1],
    [+1, +1, -1, -1],
    [+1, +1, -1, -1],
]


def expected_grading(signs):
    return np.diag(np.array(
        [signs[r][c] for c in range(4) for r in range(8)], dtype=complex))


def expected_dirac_free_part_fixture():
    """The augmented Dirac free component at coefficients (1,...,8): lepton
    block entries on column 1, quark block entries on columns 2-4, and the
    gamma entry on column 2, written as explicit (row, col, columns, value)
    records."""
    entries = [
        # lepton block (column 1): ups_nu=1, ups_e=2, omega=6, delta=7
        (1, 3, [1], 1.0), (3, 1, [1], 1.0),
        (2, 4, [1], 2.0), (4, 2, [1], 2.0),
        (2, 5, [1], 6.0), (5, 2, [1], 6.0),
        (5, 6, [1], 7.0), (6, 5, [1], 7.0),
        # quark block (columns 2-4): ups_u=3, ups_d=4, delta=7
        (1, 3, [2, 3, 4], 3.0), (3, 1, [2, 3, 4], 3.0),
        (2, 4, [2, 3, 4], 4.0), (4, 2, [2, 3, 4], 4.0),
        (5, 6, [2, 3, 4], 7.0), (6, 5, [2, 3, 4], 7.0),
        # gamma term (column 2): gamma=8
        (5, 7, [2], 8.0), (7, 5, [2], 8.0),
    ]
    op = np.zeros((32, 32), dtype=complex)
    for i, j, cols, val in entries:
        for c in cols:
            op[(i - 1) + 8 * (c - 1), (j - 1) + 8 * (c - 1)] += val
    return op


def expected_majorana_fixture():
    """The right-handed coupling at value 5: slots (1,1) <-> (5,1)."""
    op = np.zeros((32, 32), dtype=complex)
    op[(5 - 1), (1 - 1)] = 5.0
    op[(1 - 1), (5 - 1)] = 5.0
    return op
