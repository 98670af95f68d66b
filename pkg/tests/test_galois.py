import random

import pytest

from springpendulum.elliptic import PendulumParams, particular_orbit_series
from springpendulum.errors import DegenerateEnergyError, RegimeMismatchError
from springpendulum.exact import QQ, LaurentSeries, sqrt_rational
from springpendulum.fuchsian import LOG, RationalFunction, UPoly, kimura_solvable, singular_exponents
from springpendulum.galois import (
    ALGEBRAIC_E0,
    FAMILY_EMPTY,
    KIMURA_FAIL,
    LAME,
    OBSTRUCTION,
    PASS,
    RIEMANN_1,
    RIEMANN_2,
    SL2,
    TIME_DOMAIN,
    build_nve,
    churchill_witness,
    classical_verdict,
    confluence1_witness,
    confluence2_witness,
    energy_E0,
    generic_verdict,
    ve1_matrix,
    verdict,
)
from springpendulum.galois.nve import phi_q_from_orbit

X = RationalFunction.x()


def k_grid():
    out = set()
    for p in range(-12, 13):
        for q in range(1, 13):
            k = QQ(p, q)
            if k != 0 and k > -1:
                out.add(k)
    return sorted(out)


# ---------------------------------------------------------------- NVE variants


def test_riemann_confluence_1_matches_closed_form():
    k = QQ(-3, 4)
    ode = build_nve(PendulumParams(k, 0), RIEMANN_1).ode
    c = 1 / (1 + k)
    assert ode.p == 2 / X + 1 / (X - 1)
    assert ode.q == -c / ((X - 1) * (X - 1)) + c / (X * (X - 1))


@pytest.mark.parametrize("k", [QQ(-3, 4), QQ(2), QQ(1, 5)])
def test_riemann_confluence_2_form(k):
    ode = build_nve(PendulumParams(k, 0), RIEMANN_2).ode
    assert ode.p == QQ(5, 2) / X + QQ(1, 2) / (X - 1)
    assert ode.q == -1 / (2 * (1 + k) * X * X * (X - 1))


def test_riemann_confluence_2_family_exponents():
    # for k in the family the exponent difference at z = 0 is |p + 1/2|
    for p in range(-6, 6):
        if p * p + p - 2 == 0:
            continue
        k = QQ(-p * (p + 1), p * p + p - 2)
        if k == 0:
            continue
        assert confluence2_witness(k) is not None
        data = {str(d.location): d for d in singular_exponents(build_nve(PendulumParams(k, 0), RIEMANN_2).ode, detect_logs=False)}
        assert data["0"].difference == abs(QQ(2 * p + 1, 2))


def test_algebraic_nve_example():
    nve = build_nve(PendulumParams(1, 1), ALGEBRAIC_E0)
    assert nve.data["E0"] == "3/4" and nve.params.E == QQ(3, 4)
    data = singular_exponents(nve.ode)
    points = [d for d in data if d.kind == "point"]
    factors = [d for d in data if d.kind == "factor"]
    assert [d.location for d in points] == [QQ(-1, 4)]
    assert sum(d.multiplicity for d in factors) + sum(1 for d in data if d.kind == "point" and d.location != QQ(-1, 4)) == 3
    assert any(d.kind == "infinity" for d in data)


def test_energy_E0_values():
    assert energy_E0(1, 1) == QQ(3, 4)
    assert energy_E0(2, 3) == QQ(215, 108)


def test_lame_variant():
    nve = build_nve(PendulumParams(QQ(4, 3), QQ(-4, 3), QQ(-4, 5)), LAME, terms=12)
    q = nve.ode.q
    # xi'' = (6 wp + 2/3) xi
    assert q.coeff(-2) == -6 and q.coeff(0) == QQ(-2, 3)
    assert nve.data["n"] == "2" and nve.data["B"] == "2/3"


def test_time_domain_matches_phi_form():
    for k, a, E in [(QQ(2), QQ(3), QQ(1, 7)), (QQ(4, 3), QQ(-4, 3), QQ(-4, 5)), (QQ(-1, 3), QQ(5, 2), QQ(0))]:
        p = PendulumParams(k, a, E)
        q1 = build_nve(p, TIME_DOMAIN, terms=14).ode.q
        q2 = phi_q_from_orbit(p, 14)
        assert q1.agrees_with(q2)


def test_time_domain_collapses_to_lame():
    p = PendulumParams(QQ(4, 3), QQ(-4, 3), QQ(-4, 5))
    q1 = build_nve(p, TIME_DOMAIN, terms=14).ode.q
    q2 = build_nve(p, LAME, terms=14).ode.q
    assert q1.agrees_with(q2)


@pytest.mark.parametrize(
    "params,variant",
    [
        (PendulumParams(1, 1), RIEMANN_1),
        (PendulumParams(1, 0), ALGEBRAIC_E0),
        (PendulumParams(1, -1), ALGEBRAIC_E0),
        (PendulumParams(1, 1, 1), LAME),
    ],
)
def test_regime_mismatch(params, variant):
    with pytest.raises(RegimeMismatchError):
        build_nve(params, variant)


def test_lame_degenerate_energy():
    with pytest.raises(DegenerateEnergyError):
        build_nve(PendulumParams(QQ(4, 3), QQ(-4, 3), QQ(1, 2)), LAME)


# ---------------------------------------------------------------- VE1


def test_ve1_blocks_and_tangent_vector():
    p = PendulumParams(QQ(4, 3), QQ(-4, 3), QQ(-4, 5))
    m = ve1_matrix(p, 16)
    assert m.blocks_decoupled()
    r, pr = particular_orbit_series(p, 16)
    tangent = [pr, pr.derivative(), LaurentSeries.zero(), LaurentSeries.zero()]
    image = m.apply(tangent)
    for lhs, rhs in zip([x.derivative() for x in tangent], image):
        assert (lhs - rhs).is_zero()


# ---------------------------------------------------------------- verdicts


def test_family_witnesses():
    assert confluence1_witness(QQ(-3, 4)) == 0
    assert confluence1_witness(QQ(-15, 16)) == 2
    assert confluence1_witness(QQ(1)) is None
    assert confluence2_witness(QQ(-3, 2)) == 2
    assert confluence2_witness(QQ(1)) is None
    assert churchill_witness(QQ(0)) == 1


def test_classical_examples():
    assert classical_verdict(0).outcome == PASS
    v = classical_verdict(1)
    assert v.outcome == OBSTRUCTION and v.kind == KIMURA_FAIL and v.witness["stage"] == "confluence_1"
    v = classical_verdict(QQ(-3, 4))
    assert v.outcome == OBSTRUCTION and v.kind == FAMILY_EMPTY and v.witness["stage"] == "confluence_2"
    assert v.witness["confluence_1"]["m"] == 0
    with pytest.raises(RegimeMismatchError):
        classical_verdict(-1)


def test_classical_below_minus_one():
    v = classical_verdict(-2)
    assert v.kind == KIMURA_FAIL


def test_classical_agrees_with_kimura_on_grid():
    for k in k_grid()[::5]:
        v = classical_verdict(k)
        kv = kimura_solvable(1, 2, 2 / sqrt_rational(1 + k))
        if not kv.solvable:
            assert v.kind == KIMURA_FAIL


def test_generic_examples():
    for k, a in [(1, 1), (2, 3), (QQ(1, 2), QQ(-3, 7))]:
        v = generic_verdict(k, a)
        assert v.outcome == OBSTRUCTION and v.kind == SL2
        assert v.witness["log_at_x0"]["log_flag"] == LOG
        assert v.witness["exponential_solutions"]["solutions"] == []
        assert v.witness["rejected_x_minus_x0"]
    assert generic_verdict(2, 3).witness["E0"] == "215/108"


def test_generic_rejects_other_regimes():
    with pytest.raises(RegimeMismatchError):
        generic_verdict(QQ(4, 3), QQ(-4, 3))
    with pytest.raises(RegimeMismatchError):
        generic_verdict(1, 0)


def test_verdict_dispatch():
    assert verdict(0, 0).outcome == PASS
    assert verdict(1, 1).kind == SL2
    v = verdict(QQ(4, 3), QQ(-4, 3), QQ(-4, 5), max_order=2)
    assert v.outcome == PASS and v.witness["orders"][0]["valuation_r"] == -4


def test_generic_random_pairs():
    rng = random.Random(5)
    done = 0
    while done < 3:
        k, a = QQ(rng.randint(-9, 9), rng.randint(1, 4)), QQ(rng.randint(-9, 9), rng.randint(1, 4))
        if a == 0 or a == -k:
            continue
        try:
            v = generic_verdict(k, a)
        except DegenerateEnergyError:
            continue
        assert v.kind == SL2
        done += 1
