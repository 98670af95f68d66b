"""Exact arithmetic kernel: rationals, quadratic surds, polynomial
coefficient rings, truncated Laurent series and eps-jets."""

from .jets import EpsJet, NonNilpotentError, binomial_taylor, compose_analytic, cos_taylor, sin_taylor
from .laurent import INF, LaurentSeries, NotInvertibleError, TruncationError
from .linalg import LinearSolution, solve_linear
from .poly import Poly, PolyRing, RingMismatchError
from .rational import BACKEND, QQ, RationalParseError, fmt_rational, parse_rational, qq
from .surd import MixedRadicandError, QuadSurd, parse_exact, quadratic_roots, sqrt_rational

__all__ = [
    "BACKEND",
    "INF",
    "QQ",
    "EpsJet",
    "LaurentSeries",
    "LinearSolution",
    "MixedRadicandError",
    "NonNilpotentError",
    "NotInvertibleError",
    "Poly",
    "PolyRing",
    "QuadSurd",
    "RationalParseError",
    "RingMismatchError",
    "TruncationError",
    "binomial_taylor",
    "compose_analytic",
    "cos_taylor",
    "fmt_rational",
    "parse_exact",
    "parse_rational",
    "qq",
    "quadratic_roots",
    "sin_taylor",
    "solve_linear",
    "sqrt_rational",
]
