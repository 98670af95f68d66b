"""Variational equations of the spring pendulum and the integrability verdicts."""

from .hove import (
    CONSTANTS,
    HoveEngine,
    HoveReport,
    OrderRecord,
    VE1Basis,
    check_lame_energy,
    hove_obstruction,
    second_order_rhs,
    seed_budget,
)
from .nve import (
    ALGEBRAIC_E0,
    LAME,
    NVE,
    RIEMANN_1,
    RIEMANN_2,
    TIME_DOMAIN,
    VARIANTS,
    VE1Matrix,
    algebraic_nve,
    build_nve,
    energy_E0,
    radial_nve,
    riemann_confluence_1,
    riemann_confluence_2,
    time_domain_q,
    ve1_matrix,
)
from .verdicts import (
    FAMILY_EMPTY,
    HOVE_RESIDUE,
    KIMURA_FAIL,
    OBSTRUCTION,
    PASS,
    SL2,
    Verdict,
    churchill_witness,
    classical_verdict,
    confluence1_witness,
    confluence2_witness,
    generic_verdict,
    hove_verdict,
    verdict,
)

__all__ = [
    "ALGEBRAIC_E0",
    "CONSTANTS",
    "FAMILY_EMPTY",
    "HOVE_RESIDUE",
    "KIMURA_FAIL",
    "LAME",
    "NVE",
    "OBSTRUCTION",
    "PASS",
    "RIEMANN_1",
    "RIEMANN_2",
    "SL2",
    "TIME_DOMAIN",
    "VARIANTS",
    "HoveEngine",
    "HoveReport",
    "OrderRecord",
    "VE1Basis",
    "VE1Matrix",
    "Verdict",
    "algebraic_nve",
    "build_nve",
    "check_lame_energy",
    "churchill_witness",
    "classical_verdict",
    "confluence1_witness",
    "confluence2_witness",
    "energy_E0",
    "generic_verdict",
    "hove_obstruction",
    "hove_verdict",
    "radial_nve",
    "riemann_confluence_1",
    "riemann_confluence_2",
    "second_order_rhs",
    "seed_budget",
    "time_domain_q",
    "ve1_matrix",
    "verdict",
]
