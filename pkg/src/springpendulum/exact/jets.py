"""Polynomials in a formal parameter eps, truncated at eps^K, with Laurent
series coefficients.

``jet[j]`` is the coefficient of ``eps^j``.  Products are graded: the
order-``j`` coefficient of ``a*b`` only reads orders ``<= j`` of the factors.
"""

from __future__ import annotations

from math import factorial

from .laurent import LaurentSeries
from .rational import QQ


class NonNilpotentError(ValueError):
    pass


class EpsJet:
    __slots__ = ("terms", "K")

    def __init__(self, terms, K: int):
        terms = list(terms)[: K + 1]
        zero = LaurentSeries.zero()
        while len(terms) < K + 1:
            terms.append(zero)
        self.terms = tuple(terms)
        self.K = K

    @classmethod
    def constant(cls, series: LaurentSeries, K: int) -> "EpsJet":
        return cls([series], K)

    def __getitem__(self, j: int) -> LaurentSeries:
        return self.terms[j]

    def __add__(self, other):
        if isinstance(other, EpsJet):
            K = min(self.K, other.K)
            return EpsJet([self.terms[j] + other.terms[j] for j in range(K + 1)], K)
        # scalar or series shifts the eps^0 term only
        return EpsJet([self.terms[0] + other, *self.terms[1:]], self.K)

    __radd__ = __add__

    def __neg__(self):
        return EpsJet([-t for t in self.terms], self.K)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "EpsJet":
        return EpsJet([t.scale(c) for t in self.terms], self.K)

    def __mul__(self, other):
        if not isinstance(other, EpsJet):
            if isinstance(other, LaurentSeries):
                return EpsJet([t.mul(other) for t in self.terms], self.K)
            return self.scale(other)
        K = min(self.K, other.K)
        out = []
        for j in range(K + 1):
            acc = None
            for i in range(j + 1):
                p = self.terms[i].mul(other.terms[j - i])
                acc = p if acc is None else acc + p
            out.append(acc)
        return EpsJet(out, K)

    __rmul__ = __mul__

    def is_nilpotent(self) -> bool:
        return self.terms[0].is_zero()


def compose_analytic(taylor, arg: EpsJet) -> EpsJet:
    """``sum_n taylor[n] * arg**n`` truncated at ``eps^K``.

    ``arg`` must have a vanishing ``eps^0`` coefficient, so only the first
    ``K+1`` Taylor coefficients contribute.
    """
    if not arg.is_nilpotent():
        raise NonNilpotentError("compose_analytic needs an argument with zero eps^0 term")
    K = arg.K
    taylor = list(taylor)
    result_terms = [LaurentSeries.zero() for _ in range(K + 1)]
    if taylor and taylor[0]:
        result_terms[0] = LaurentSeries.monomial(0, taylor[0])
    result = EpsJet(result_terms, K)
    power = arg
    for n in range(1, min(K, len(taylor) - 1) + 1):
        if taylor[n]:
            result = result + power.scale(taylor[n])
        if n < K:
            power = power * arg
    return result


def cos_taylor(K: int):
    return [QQ(0) if n % 2 else QQ((-1) ** (n // 2), factorial(n)) for n in range(K + 1)]


def sin_taylor(K: int):
    return [QQ((-1) ** ((n - 1) // 2), factorial(n)) if n % 2 else QQ(0) for n in range(K + 1)]


def binomial_taylor(alpha, K: int):
    """Taylor coefficients of ``(1+x)^alpha``."""
    out = [QQ(1)]
    c = QQ(1)
    for n in range(1, K + 1):
        c = c * (QQ(alpha) - (n - 1)) / n
        out.append(c)
    return out
