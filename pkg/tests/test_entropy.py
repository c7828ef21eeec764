"""Entropy family: scalar oracles, coincidences, limits, covariance."""

import numpy as np
import pytest

from renyivar import entropy, errors, spectral


def _diag_pd(*vals):
    return spectral.pd_from(spectral.hermitian_from(np.diag(np.asarray(vals, dtype=float))))


RHO = _diag_pd(0.5, 0.5)
SIG = _diag_pd(0.25, 0.75)


def test_petz_self_zero():
    rho = spectral.random_density(3, 1)
    assert entropy.petz_renyi(rho, rho, 2.0) == pytest.approx(0.0, abs=1e-12)


def test_petz_scalar_oracle():
    assert entropy.petz_renyi(RHO, SIG, 2.0) == pytest.approx(np.log(4.0 / 3.0), abs=1e-12)


def test_petz_dim_one():
    a, b = _diag_pd(0.7), _diag_pd(0.2)
    alpha = 1.7
    expect = np.log(0.7 ** alpha * 0.2 ** (1 - alpha)) / (alpha - 1)
    assert entropy.petz_renyi(a, b, alpha) == pytest.approx(expect)


def test_alpha_one_excluded():
    for f in (entropy.petz_renyi, entropy.sandwiched_renyi):
        with pytest.raises(errors.AlphaIsOneError):
            f(RHO, SIG, 1.0)


def test_quasi_self_trace():
    a = spectral.random_pd(3, 4)
    for alpha in (0.5, 2.0):
        assert entropy.sandwiched_quasi(a, a, alpha) == pytest.approx(float(np.trace(a.mat).real))


def test_quasi_half_is_fidelity():
    a = spectral.random_pd(3, 5)
    b = spectral.random_pd(3, 6)
    assert entropy.sandwiched_quasi(a, b, 0.5) == pytest.approx(entropy.fidelity(a, b))


def test_sandwiched_matches_petz_commuting():
    for alpha in (0.5, 2.0, 3.0):
        assert entropy.sandwiched_renyi(RHO, SIG, alpha) == pytest.approx(
            entropy.petz_renyi(RHO, SIG, alpha), abs=1e-10)


def test_alpha_z_collapses():
    a = spectral.random_density(3, 7)
    b = spectral.random_density(3, 8)
    assert entropy.alpha_z(a, b, 2.0, 1.0) == pytest.approx(entropy.petz_renyi(a, b, 2.0), abs=1e-10)
    assert entropy.alpha_z(a, b, 2.0, 2.0) == pytest.approx(entropy.sandwiched_renyi(a, b, 2.0), abs=1e-10)
    with pytest.raises(errors.ZNotPositiveError):
        entropy.alpha_z(a, b, 2.0, 0.0)


def test_alpha_z_diagonal_z_independent():
    expect = np.log(0.5 ** 2 / 0.25 + 0.5 ** 2 / 0.75)
    for z in (0.7, 1.0, 3.0):
        assert entropy.alpha_z(RHO, SIG, 2.0, z) == pytest.approx(expect, abs=1e-10)


def test_fidelity_examples():
    rho = spectral.random_density(3, 9)
    assert entropy.fidelity(rho, rho) == pytest.approx(1.0, abs=1e-10)
    assert entropy.fidelity(RHO, SIG) == pytest.approx(np.sqrt(0.125) + np.sqrt(0.375))
    i2 = spectral.identity_pd(2)
    assert entropy.fidelity(i2, i2) == pytest.approx(2.0)


def test_umegaki_examples():
    a = spectral.random_density(3, 10)
    assert entropy.umegaki(a, a) == pytest.approx(0.0, abs=1e-12)
    expect = 0.5 * np.log(2.0) + 0.5 * np.log(2.0 / 3.0)
    assert entropy.umegaki(RHO, SIG) == pytest.approx(expect, abs=1e-12)
    c = 0.3
    b = spectral.pd_from(spectral.hermitian_from(c * a.mat))
    assert entropy.umegaki(a, b) == pytest.approx(-np.log(c), abs=1e-10)


def test_max_relative_examples():
    b = spectral.random_pd(3, 11)
    a = spectral.pd_from(spectral.hermitian_from(2.0 * b.mat))
    assert entropy.max_relative(a, b) == pytest.approx(np.log(2.0), abs=1e-10)
    assert entropy.max_relative(b, b) == pytest.approx(0.0, abs=1e-10)
    assert entropy.max_relative(_diag_pd(1, 3), _diag_pd(2, 1)) == pytest.approx(np.log(3.0))


def test_thompson_examples():
    a = spectral.random_pd(3, 12)
    assert entropy.thompson_metric(a, a) == pytest.approx(0.0, abs=1e-10)
    assert entropy.thompson_metric(_diag_pd(2.0, 0.5), spectral.identity_pd(2)) == pytest.approx(np.log(2.0))


def test_thompson_two_expressions_agree():
    for seed in range(5):
        a = spectral.random_pd(3, [13, seed])
        b = spectral.random_pd(3, [14, seed])
        assert entropy.thompson_metric(a, b) == pytest.approx(
            entropy.thompson_metric_lognorm(a, b), abs=1e-9)


def test_unitary_covariance():
    rng = np.random.default_rng(15)
    a = spectral.random_pd(3, 16)
    b = spectral.random_pd(3, 17)
    u = spectral.haar_unitary(3, rng)
    def rot(p):
        return spectral.pd_from(spectral.hermitian_from(u @ p.mat @ u.conj().T))
    au, bu = rot(a), rot(b)
    checks = [
        (entropy.petz_renyi, (2.0,)), (entropy.sandwiched_renyi, (0.7,)),
        (entropy.fidelity, ()), (entropy.umegaki, ()),
        (entropy.max_relative, ()), (entropy.thompson_metric, ()),
    ]
    for f, extra in checks:
        assert f(au, bu, *extra) == pytest.approx(f(a, b, *extra), abs=1e-9)


def test_commuting_families_agree():
    a = _diag_pd(0.2, 0.3, 0.5)
    b = _diag_pd(0.6, 0.3, 0.1)
    for alpha in (0.5, 2.0):
        p = entropy.petz_renyi(a, b, alpha)
        assert entropy.sandwiched_renyi(a, b, alpha) == pytest.approx(p, abs=1e-10)
        assert entropy.alpha_z(a, b, alpha, 1.7) == pytest.approx(p, abs=1e-10)


def test_alpha_to_one_limit():
    a = spectral.random_density(3, 18)
    b = spectral.random_density(3, 19)
    ume = entropy.umegaki(a, b)
    errs = [max(abs(entropy.sandwiched_renyi(a, b, 1 + h) - ume),
                abs(entropy.sandwiched_renyi(a, b, 1 - h) - ume)) for h in (1e-3, 1e-4)]
    assert 5.0 <= errs[0] / errs[1] <= 20.0


def test_alpha_to_infinity_limit_is_one_sided():
    """Large alpha converges to max_relative(A,B); 1/alpha envelope."""
    for seed in range(4):
        a = spectral.random_density(3, [20, seed])
        b = spectral.random_density(3, [21, seed])
        dmax = entropy.max_relative(a, b)
        g3 = abs(entropy.sandwiched_renyi(a, b, 1e3) - dmax)
        g4 = abs(entropy.sandwiched_renyi(a, b, 1e4) - dmax)
        assert g3 <= 5.0 / 1e3 and g4 <= 5.0 / 1e4
        assert g4 <= g3 + 1e-12
