import numpy as np
import pytest

from fintriple import catalog, linalg, star_algebra, subspaces

import oracles


def _rand_complex(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def _unit_op(i, j, k, l):
    return linalg.kron_action(oracles._unit8(i, j), oracles._unit4(k, l))


def test_span_of_deduplicates():
    x = _unit_op(1, 1, 1, 1)
    s = subspaces.span_of([x, 2.0 * x])
    assert s.dim == 1


def test_span_dimensions():
    assert subspaces.span_of(catalog.algebra_af_generators()).dim == 15
    assert subspaces.span_of(catalog.algebra_bf_generators()).dim == 14


def test_basis_orthonormal_and_self_membership(af_commutant):
    gram = af_commutant.flat @ af_commutant.flat.conj().T
    assert np.linalg.norm(gram - np.eye(af_commutant.dim)) <= 1e-12
    assert af_commutant.dim == af_commutant.flat.shape[0]
    for m in af_commutant.basis_matrices():
        assert af_commutant.contains(m)
        assert af_commutant.residual(m) <= 1e-12


def test_contains_identity_span():
    s = subspaces.span_of([np.eye(32, dtype=complex)])
    assert s.contains(np.eye(32))
    assert s.contains(np.zeros((32, 32)))
    assert not s.contains(_unit_op(1, 2, 1, 1))


def test_opposite_algebra_membership_witness():
    opp_oracle = oracles.opposite_algebra_basis()
    span = subspaces.span_of(opp_oracle)
    assert span.dim == 15
    # the solver's version of the same span agrees
    t = catalog.build_triple(catalog.TripleConfig(
        algebra="A_F", grading="none", dirac="zero"))
    solver_span = subspaces.span_of(t.opposite_gens)
    assert subspaces.equals(span, solver_span)
    witness = catalog.witness_catalog()["e55_block"]
    np.testing.assert_allclose(
        witness,
        _unit_op(5, 5, 2, 2) + _unit_op(5, 5, 3, 3) + _unit_op(5, 5, 4, 4))
    assert not span.contains(witness)
    # coordinate oracle: least squares against the explicit 15-element basis
    stacked = np.array([linalg.vec(m) for m in opp_oracle])
    coeff, *_ = np.linalg.lstsq(stacked.T, linalg.vec(witness), rcond=None)
    resid = np.linalg.norm(stacked.T @ coeff - linalg.vec(witness))
    assert resid > 0.5


def test_majorana_term_in_both_commutants(af_commutant, af_opposite_commutant):
    d_r = catalog.dirac_majorana_term(2.0 - 1.0j)
    inter = subspaces.intersect(af_commutant, af_opposite_commutant)
    assert inter.contains(d_r)


def test_intersect_self():
    s = subspaces.span_of(catalog.algebra_af_generators())
    assert subspaces.equals(subspaces.intersect(s, s), s)


def test_sum_dimension_identity(af_commutant, af_opposite_commutant):
    assert af_commutant.dim == 112
    assert af_opposite_commutant.dim == 112
    inter = subspaces.intersect(af_commutant, af_opposite_commutant)
    total = subspaces.subspace_sum(af_commutant, af_opposite_commutant)
    assert total.dim == 112 + 112 - inter.dim


def test_bicommutant_equals_closure_random():
    rng = np.random.default_rng(17)
    for _ in range(5):
        gens = [_rand_complex(rng, 6, 6) for _ in range(2)]
        gens.append(np.eye(6, dtype=complex))
        closure = star_algebra.star_closure(gens)
        double = subspaces.commutant(
            subspaces.commutant(closure.basis_matrices()).basis_matrices())
        assert subspaces.equals(double, closure.space)


def test_commutant_schur():
    shift = np.roll(np.eye(32, dtype=complex), 1, axis=0)
    diag = np.diag(np.arange(1, 33).astype(complex))
    comm = subspaces.commutant([shift, diag])
    assert comm.dim == 1
    assert comm.contains(np.eye(32))


def test_commutant_af_equals_block_form(af_commutant):
    oracle = subspaces.span_of(oracles.af_commutant_basis())
    assert oracle.dim == 112
    assert subspaces.equals(af_commutant, oracle)


def test_commutant_opposite_equals_lemma_form(af_opposite_commutant):
    oracle = subspaces.span_of(oracles.af_opposite_commutant_basis())
    assert oracle.dim == 112
    assert subspaces.equals(af_opposite_commutant, oracle)


def test_commutant_aev_equals_block_form():
    comm = subspaces.commutant(catalog.algebra_aev_generators())
    oracle = subspaces.span_of(oracles.aev_commutant_basis())
    assert comm.dim == 48
    assert subspaces.equals(comm, oracle)


def test_af_span_inside_aev_span():
    af = subspaces.span_of(catalog.algebra_af_generators())
    aev = subspaces.span_of(catalog.algebra_aev_generators())
    assert all(aev.contains(m) for m in af.basis_matrices())


def test_projection_idempotent():
    rng = np.random.default_rng(23)
    s = subspaces.span_of(catalog.algebra_af_generators())
    x = _rand_complex(rng, 32, 32)
    once = s.project(x)
    twice = s.project(once)
    assert linalg.hs_norm(once - twice) <= 1e-12 * max(linalg.hs_norm(once), 1.0)


def test_monotonicity():
    s = subspaces.span_of(catalog.algebra_af_generators())
    t = subspaces.span_of(catalog.algebra_bf_generators())
    total = subspaces.subspace_sum(s, t)
    inter = subspaces.intersect(s, t)
    assert all(total.contains(m) for m in s.basis_matrices())
    assert all(s.contains(m) for m in inter.basis_matrices())


def test_commutant_antitone():
    gens = catalog.algebra_af_generators()
    small = subspaces.commutant(gens[:6])
    big = subspaces.commutant(gens)
    assert all(small.contains(m) for m in big.basis_matrices())


def test_double_complement():
    s = subspaces.span_of(catalog.algebra_af_generators())
    back = subspaces.complement(subspaces.complement(s))
    assert subspaces.equals(back, s)


def test_real_field_mismatch():
    s = subspaces.span_of([np.eye(4, dtype=complex)], field="complex")
    t = subspaces.span_of([np.eye(4, dtype=complex)], field="real")
    with pytest.raises(subspaces.FieldMismatchError):
        subspaces.subspace_sum(s, t)


def test_real_field_span():
    # over R, x and ix are independent
    x = _unit_op(1, 2, 1, 1)
    assert subspaces.span_of([x, 1j * x], field="real").dim == 2
    assert subspaces.span_of([x, 1j * x], field="complex").dim == 1
