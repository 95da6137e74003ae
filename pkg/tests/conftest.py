import numpy as np
import pytest

from fintriple import catalog, morita, subspaces

#: Fixed nonzero coefficient draw used by most example tests; satisfies the
#: separation hypotheses (ups_nu != +-ups_u by a wide margin).
BASE = catalog.DiracParams(
    ups_nu=1.1 + 0.2j, ups_e=0.8 - 0.4j, ups_u=2.3 + 0.1j, ups_d=0.7 + 0.3j,
    ups_r=1.4 - 0.2j, omega=0.9 + 0.5j, delta=1.2, gamma=0.8)


def draw_params(rng, with_gamma=False, **overrides):
    """Random coefficients bounded away from zero, with the up-type Yukawa
    separation |ups_nu^2 - ups_u^2| kept away from zero as well."""
    def cpl():
        return (0.6 + 0.8 * rng.random()) * np.exp(2j * np.pi * rng.random())

    while True:
        values = {
            "ups_nu": cpl(), "ups_e": cpl(), "ups_u": cpl(), "ups_d": cpl(),
            "ups_r": cpl(), "omega": cpl(),
            "delta": float((0.6 + 0.8 * rng.random()) * rng.choice([-1, 1])),
        }
        if with_gamma:
            values["gamma"] = float((0.6 + 0.8 * rng.random()) * rng.choice([-1, 1]))
        values.update(overrides)
        sep = abs(values["ups_nu"] ** 2 - values["ups_u"] ** 2)
        if sep >= 0.3:
            return catalog.DiracParams(**values)


@pytest.fixture(scope="session")
def thm1_triple():
    return catalog.build_triple(catalog.TripleConfig(
        algebra="A_F", grading="nonstandard", dirac="CC", params=BASE))


@pytest.fixture(scope="session")
def thm2_triple():
    return catalog.build_triple(catalog.TripleConfig(
        algebra="A_F", grading="none", dirac="CC_plus_Gamma", params=BASE))


@pytest.fixture(scope="session")
def original_cc_triple():
    params = catalog.DiracParams(
        ups_nu=BASE.ups_nu, ups_e=BASE.ups_e, ups_u=BASE.ups_u,
        ups_d=BASE.ups_d, ups_r=BASE.ups_r, omega=0j, delta=0.0)
    return catalog.build_triple(catalog.TripleConfig(
        algebra="A_F", grading="standard", dirac="CC", params=params))


@pytest.fixture(scope="session")
def pati_salam_triple():
    return catalog.build_triple(catalog.TripleConfig(
        algebra="A_ev", grading="standard", dirac="CC", params=BASE))


@pytest.fixture(scope="session")
def af_commutant(thm1_triple):
    return subspaces.commutant(thm1_triple.algebra_gens)


@pytest.fixture(scope="session")
def af_opposite_commutant(thm1_triple):
    return subspaces.commutant(thm1_triple.opposite_gens)


@pytest.fixture(scope="session")
def thm1_clifford(thm1_triple):
    return morita.clifford(thm1_triple, even=False)


@pytest.fixture(scope="session")
def thm2_clifford(thm2_triple):
    return morita.clifford(thm2_triple, even=False)
