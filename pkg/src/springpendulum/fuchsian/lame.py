"""Catalogue lookup for the Lamé equation ``xi'' = (n(n+1) wp + B) xi``."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DegenerateEnergyError
from ..exact import fmt_rational, qq

HERMITE = "lame-hermite"
BHC = "bhc-candidate"
BALDASSARRI = "baldassarri-candidate"
OUTSIDE = "outside-catalogue"


@dataclass(frozen=True)
class LameClassification:
    label: str
    n: object  # representative with n >= -1/2 (n and -n-1 give the same equation)
    B: object
    condition: str  # "none", or "unchecked" when only necessary conditions were tested

    @property
    def necessary_only(self) -> bool:
        return self.condition == "unchecked"

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "n": fmt_rational(self.n),
            "B": fmt_rational(self.B),
            "algebraic_condition": self.condition,
            "necessary_only": self.necessary_only,
        }


def normalize_n(n):
    n = qq(n)
    return n if 2 * n + 1 >= 0 else -n - 1


def classify_lame(n, B, g2, g3) -> LameClassification:
    g2, g3, B = qq(g2), qq(g3), qq(B)
    if g2**3 - 27 * g3**2 == 0:
        raise DegenerateEnergyError("Lame equation with vanishing discriminant")
    n = normalize_n(n)
    if n.denominator == 1:
        return LameClassification(HERMITE, n, B, "none")
    h = n + qq("1/2")  # >= 0 after normalization
    if h.denominator == 1:
        return LameClassification(BHC, n, B, "unchecked")
    if any((h * k).denominator == 1 for k in (3, 4, 5)):
        return LameClassification(BALDASSARRI, n, B, "unchecked")
    return LameClassification(OUTSIDE, n, B, "none")
