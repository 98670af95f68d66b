import random
from fractions import Fraction

import pytest

from oracles import hamilton_residuals, second_order_closed_forms, series_equal_on_overlap
from springpendulum.elliptic import critical_energies
from springpendulum.errors import DegenerateEnergyError, DomainError
from springpendulum.exact import QQ, LaurentSeries
from springpendulum.galois.hove import CONSTANTS, HoveEngine, hove_obstruction, second_order_rhs, seed_budget

K0, E0 = QQ(4, 3), QQ(-4, 5)


def inside_energy(k, rng):
    crit = critical_energies(k, -k)
    lo, hi = float(crit.E_s), float(crit.E_u)
    E = Fraction(lo + (hi - lo) * rng.uniform(0.2, 0.8)).limit_denominator(50)
    E = QQ(E.numerator, E.denominator)
    assert crit.contains(E)
    return E


def random_lame_ks(n, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        k = QQ(rng.randint(1, 30), rng.randint(1, 7))
        if rng.random() < 0.3:
            k = -k - 4  # k < -4 also gives real critical energies
        if k not in out and k not in (K0,):
            out.append(k)
    return [(k, inside_energy(k, rng)) for k in out]


# ---------------------------------------------------------------- orders and residues


def test_orders_two_to_five():
    rep = hove_obstruction(K0, E0, 5)
    assert not rep.obstruction
    assert [r.order for r in rep.orders] == [2, 3, 4, 5]
    for rec in rep.orders:
        assert rec.valuation_r == -(rec.order + 2)
        assert all(not p for p in rec.residues.values())


@pytest.mark.slow
def test_orders_six_and_seven():
    rep = hove_obstruction(K0, E0, 7)
    assert not rep.obstruction
    assert [r.valuation_r for r in rep.orders] == [-4, -5, -6, -7, -8, -9]


def test_series_solve_hamilton_equations():
    # residuals rebuilt with generic jet arithmetic must vanish where certified
    eng = HoveEngine(K0, E0, seed_budget(4))
    for _ in range(3):
        eng.step()
    res = hamilton_residuals(eng, 4)
    for name, jet in res.items():
        for j in range(5):
            s = jet[j]
            assert s.order > 0, (name, j)
            assert s.is_zero(), (name, j)


def test_result_independent_of_seed_budget():
    a = hove_obstruction(K0, E0, 3)
    b = hove_obstruction(K0, E0, 3, seeds=seed_budget(3) + 6)
    assert a.budget["seeds"] != b.budget["seeds"]
    assert a.to_json(include_budget=False) == b.to_json(include_budget=False)


def test_other_energy_also_passes():
    rep = hove_obstruction(K0, QQ(-1), 3)
    assert not rep.obstruction


def test_negative_control_detects_residue(monkeypatch):
    orig = HoveEngine.rhs
    c1 = CONSTANTS.gens()[0]

    def poisoned(self, j):
        (F, G, K), parts = orig(self, j)
        # u_A ~ t^4, so a t^-5 forcing term leaves a t^-1 integrand
        bump = LaurentSeries(-5, [c1], F.order, ring=CONSTANTS)
        return (F + bump, G, K), parts

    monkeypatch.setattr(HoveEngine, "rhs", poisoned)
    rep = hove_obstruction(K0, E0, 3)
    assert rep.obstruction and rep.obstruction_order == 2
    assert rep.record(2).residues["tangential_A"]


# ---------------------------------------------------------------- domain checks


def test_degenerate_energy():
    with pytest.raises(DegenerateEnergyError):
        hove_obstruction(K0, QQ(1, 2), 2)


@pytest.mark.parametrize("k,E", [(K0, QQ(2)), (K0, QQ(-3)), (QQ(0), QQ(0)), (QQ(-2), QQ(0))])
def test_domain_errors(k, E):
    with pytest.raises(DomainError):
        hove_obstruction(k, E, 2)


def test_max_order_validated():
    with pytest.raises(ValueError):
        hove_obstruction(K0, E0, 1)


# ---------------------------------------------------------------- second-order structure


@pytest.mark.parametrize("k,E", random_lame_ks(3, 7) + [(K0, E0)])
def test_second_variational_forcing(k, E):
    F2, T2, eng = second_order_rhs(k, E)
    cF, cT = second_order_closed_forms(eng)
    assert series_equal_on_overlap(F2, cF)
    assert series_equal_on_overlap(T2, cT)


def test_second_order_leading_terms():
    F2, T2, _ = second_order_rhs(K0, E0)
    assert F2.val == -6 and T2.val == 1
