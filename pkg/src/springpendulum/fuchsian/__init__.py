"""Solvability tools for second-order linear ODEs."""

from .expsol import (
    Candidate,
    ExponentialSearch,
    ExponentialSolution,
    find_exponential_solutions,
    search_exponential_solutions,
)
from .frobenius import FrobeniusBasis, FrobeniusSolution, frobenius_basis, log_flag_at
from .kimura import KimuraVerdict, kimura_solvable, verify_kimura
from .lame import LameClassification, classify_lame
from .ode import LOG, NO_LOG, UNDETERMINED, FuchsianODE, SeriesODE, SingularPointData, exponent_sum, singular_exponents
from .ratfunc import RationalFunction, UPoly

__all__ = [
    "LOG",
    "NO_LOG",
    "UNDETERMINED",
    "Candidate",
    "ExponentialSearch",
    "ExponentialSolution",
    "FrobeniusBasis",
    "FrobeniusSolution",
    "FuchsianODE",
    "KimuraVerdict",
    "LameClassification",
    "RationalFunction",
    "SeriesODE",
    "SingularPointData",
    "UPoly",
    "classify_lame",
    "exponent_sum",
    "find_exponential_solutions",
    "frobenius_basis",
    "kimura_solvable",
    "log_flag_at",
    "search_exponential_solutions",
    "singular_exponents",
    "verify_kimura",
]
