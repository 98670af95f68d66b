"""Kimura's solvability test for the Riemann P equation, from the three
exponent differences."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..exact import QQ, QuadSurd, fmt_rational

SOLVABLE_A = "solvable_case_A"
SOLVABLE_B = "solvable_case_B"
NOT_SOLVABLE = "not_solvable"

_H = QQ(1, 2)
_T1, _T2 = QQ(1, 3), QQ(2, 3)
_Q1 = QQ(1, 4)
_F1, _F2, _F3, _F4 = QQ(1, 5), QQ(2, 5), QQ(3, 5), QQ(4, 5)

# (offsets, parity constraint); None marks the arbitrary slot of family 1
FAMILIES = {
    1: ((_H, _H, None), False),
    2: ((_H, _T1, _T1), False),
    3: ((_T2, _T1, _T1), True),
    4: ((_H, _T1, _Q1), False),
    5: ((_T2, _Q1, _Q1), True),
    6: ((_H, _T1, _F1), False),
    7: ((_F2, _T1, _T1), True),
    8: ((_T2, _F1, _F1), True),
    9: ((_H, _F2, _F1), True),
    10: ((_F3, _T1, _F1), True),
    11: ((_F2, _F2, _F2), True),
    12: ((_T2, _T1, _F1), True),
    13: ((_F4, _F1, _F1), True),
    14: ((_H, _F2, _T1), True),
    15: ((_F3, _F2, _T1), True),
}

_CASE_A_SIGNS = ((1, 1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, -1))


@dataclass(frozen=True)
class KimuraVerdict:
    outcome: str
    witness: dict = field(default_factory=dict)

    @property
    def solvable(self) -> bool:
        return self.outcome != NOT_SOLVABLE

    def to_json(self) -> dict:
        return {"outcome": self.outcome, "witness": self.witness}


def _as_surd(x) -> QuadSurd:
    return QuadSurd.of(x)


def odd_integer_sum(terms) -> bool:
    """Whether a signed sum of surds is an odd integer.  Surds with distinct
    square-free radicands are independent over QQ, so each radicand's
    coefficients must cancel separately."""
    rat = QQ(0)
    surds: dict[int, object] = {}
    for t in terms:
        rat += t.rational
        if t.coeff:
            surds[t.radicand] = surds.get(t.radicand, QQ(0)) + t.coeff
    if any(c != 0 for c in surds.values()):
        return False
    return rat.denominator == 1 and int(rat) % 2 == 1


def _int_offset(value: QuadSurd, offset):
    """``value - offset`` if it is an integer, else None."""
    if not value.is_rational():
        return None
    d = value.rational - offset
    return int(d) if d.denominator == 1 else None


def _match_family(triple, offsets, parity):
    ints = []
    for v, off in zip(triple, offsets):
        if off is None:
            continue
        n = _int_offset(v, off)
        if n is None:
            return None
        ints.append(n)
    if parity and sum(ints) % 2:
        return None
    return ints


def kimura_solvable(lam, mu, nu) -> KimuraVerdict:
    diffs = tuple(_as_surd(v) for v in (lam, mu, nu))
    for signs in _CASE_A_SIGNS:
        terms = [d * s for d, s in zip(diffs, signs)]
        if odd_integer_sum(terms):
            total = terms[0] + terms[1] + terms[2]
            return KimuraVerdict(SOLVABLE_A, {"signs": list(signs), "sum": total.to_str()})

    for fam, (offsets, parity) in FAMILIES.items():
        for perm in itertools.permutations(range(3)):
            for signs in itertools.product((1, -1), repeat=3):
                triple = [diffs[perm[i]] * signs[i] for i in range(3)]
                ints = _match_family(triple, offsets, parity)
                if ints is None:
                    continue
                return KimuraVerdict(
                    SOLVABLE_B,
                    {
                        "family": fam,
                        "permutation": list(perm),
                        "signs": list(signs),
                        "integers": ints,
                        "values": [t.to_str() for t in triple],
                    },
                )
    return KimuraVerdict(NOT_SOLVABLE, {"differences": [d.to_str() for d in diffs]})


def verify_kimura(verdict: KimuraVerdict, lam, mu, nu) -> bool:
    """Re-check a witness against Kimura's conditions."""
    diffs = tuple(_as_surd(v) for v in (lam, mu, nu))
    w = verdict.witness
    if verdict.outcome == SOLVABLE_A:
        terms = [d * s for d, s in zip(diffs, w["signs"])]
        return tuple(w["signs"]) in _CASE_A_SIGNS and odd_integer_sum(terms)
    if verdict.outcome == SOLVABLE_B:
        offsets, parity = FAMILIES[w["family"]]
        perm, signs = w["permutation"], w["signs"]
        if sorted(perm) != [0, 1, 2] or any(s not in (1, -1) for s in signs):
            return False
        triple = [diffs[perm[i]] * signs[i] for i in range(3)]
        ints = _match_family(triple, offsets, parity)
        return ints is not None and ints == list(w["integers"])
    return not kimura_solvable(*diffs).solvable


def describe_family(fam: int) -> str:
    offsets, parity = FAMILIES[fam]
    slots = ["arbitrary" if o is None else f"{fmt_rational(o)}+{v}" for o, v in zip(offsets, "lmq")]
    return ", ".join(slots) + (" (l+m+q even)" if parity else "")
