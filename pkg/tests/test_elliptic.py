import random

import pytest

from springpendulum.elliptic import (
    PendulumParams,
    critical_energies,
    energy_residual,
    invariants_from_params,
    particular_orbit_series,
    wp_series,
)
from springpendulum.errors import RegimeMismatchError
from springpendulum.exact import QQ, sqrt_rational


def wp_identity_residual(g2, g3, terms):
    wp = wp_series(g2, g3, terms)
    d = wp.derivative()
    return d.mul(d) - wp.mul(wp).mul(wp).scale(4) + wp.scale(g2) + g3


def test_wp_identity_known_invariants():
    res = wp_identity_residual(QQ(16, 27), QQ(148, 3645), 30)
    assert res.is_zero() and res.order >= 20


def test_wp_leading_coefficients():
    wp = wp_series(QQ(2), QQ(3), 10)
    assert wp.coeff(-2) == 1 and wp.coeff(0) == 0
    assert wp.coeff(2) == QQ(2, 20) and wp.coeff(4) == QQ(3, 28)


def test_wp_identity_random():
    rng = random.Random(7)
    for _ in range(5):
        g2, g3 = QQ(rng.randint(-30, 30), rng.randint(1, 9)), QQ(rng.randint(-30, 30), rng.randint(1, 9))
        assert wp_identity_residual(g2, g3, 24).is_zero()


@pytest.mark.parametrize(
    "k,a,E_s,E_u",
    [(3, 2, QQ(-29, 24), QQ(-7, 6)), (QQ(4, 3), QQ(-4, 3), QQ(-23, 18), QQ(1, 2))],
)
def test_critical_energies(k, a, E_s, E_u):
    crit = critical_energies(k, a)
    assert crit.real and crit.E_s == E_s and crit.E_u == E_u


def test_critical_energies_complex_and_classical():
    assert not critical_energies(1, 1).real
    with pytest.raises(RegimeMismatchError):
        critical_energies(1, 0)


def test_critical_energy_is_degenerate():
    # the discriminant vanishes exactly at the critical energies
    for E in (QQ(-23, 18), QQ(1, 2)):
        assert invariants_from_params(PendulumParams(QQ(4, 3), QQ(-4, 3), E)).degenerate
    assert not invariants_from_params(PendulumParams(QQ(4, 3), QQ(-4, 3), QQ(-4, 5))).degenerate


def test_invariants_values():
    ell = invariants_from_params(PendulumParams(QQ(4, 3), QQ(-4, 3), QQ(-4, 5)))
    assert (ell.g2, ell.g3) == (QQ(16, 27), QQ(148, 3645))
    assert ell.delta == ell.g2**3 - 27 * ell.g3**2


def test_orbit_series_satisfies_energy_relation():
    for k, a, E in [(QQ(4, 3), QQ(-4, 3), QQ(-4, 5)), (QQ(2), QQ(3), QQ(1, 7)), (QQ(-1, 2), QQ(5), QQ(2))]:
        p = PendulumParams(k, a, E)
        r, pr = particular_orbit_series(p, 20)
        res = energy_residual(p, r, pr)
        assert res.is_zero() and res.order >= 10


def test_orbit_pole_order():
    r, _ = particular_orbit_series(PendulumParams(QQ(4, 3), QQ(-4, 3), QQ(-4, 5)), 10)
    assert r.val == -2 and r.coeff(-2) == QQ(6) / QQ(-4, 3)


def test_critical_energy_surd_form():
    crit = critical_energies(1, QQ(-1))
    s = sqrt_rational(5)
    assert crit.E_u - crit.E_s == 2 * s * 5 / 12
