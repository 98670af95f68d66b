"""Floating-point dynamics of the planar spring pendulum."""

from . import kernel
from .dynamics import (
    CSV_HEADER,
    PhaseState,
    Section,
    SectionPoint,
    Seed,
    SeedResult,
    StepStats,
    Trajectory,
    hamiltonian_energy,
    integrate_orbit,
    lift_seed,
    poincare_section,
    read_section_csv,
    refine_crossing,
    seed_grid,
    vector_field,
    write_section_csv,
)

__all__ = [
    "CSV_HEADER",
    "PhaseState",
    "Section",
    "SectionPoint",
    "Seed",
    "SeedResult",
    "StepStats",
    "Trajectory",
    "hamiltonian_energy",
    "integrate_orbit",
    "kernel",
    "lift_seed",
    "poincare_section",
    "read_section_csv",
    "refine_crossing",
    "seed_grid",
    "vector_field",
    "write_section_csv",
]
