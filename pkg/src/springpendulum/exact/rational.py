"""Rational scalars used throughout the exact pipeline.

``QQ`` is gmpy2's ``mpq`` when gmpy2 is importable and falls back to
:class:`fractions.Fraction` otherwise.  Setting the environment variable
``SPRINGPENDULUM_PURE_PYTHON=1`` forces the fallback.  Both types compare
and hash equal for equal values, so callers may freely pass ``Fraction`` or
``int`` arguments; :func:`qq` converts to the active backend.
"""

from __future__ import annotations

import os
import re
from fractions import Fraction

PURE_PYTHON = os.environ.get("SPRINGPENDULUM_PURE_PYTHON", "") not in ("", "0")

QQ: type
if PURE_PYTHON:
    QQ = Fraction
    BACKEND = "fraction"
else:
    try:
        from gmpy2 import mpq as QQ  # type: ignore[no-redef]

        BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover - depends on environment
        QQ = Fraction
        BACKEND = "fraction"

RATIONAL_TYPES: tuple = (int, Fraction) if QQ is Fraction else (int, Fraction, QQ)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_DECIMAL_RE = re.compile(r"^\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*$")

ZERO = QQ(0)
ONE = QQ(1)


class RationalParseError(ValueError):
    pass


def is_rational(x) -> bool:
    return isinstance(x, RATIONAL_TYPES) and not isinstance(x, bool)


def qq(x) -> "QQ":
    """Convert ``x`` (int, Fraction, mpq or ``"p/q"`` string) to ``QQ``."""
    if isinstance(x, QQ):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return QQ(x)
    if isinstance(x, Fraction) or hasattr(x, "denominator"):
        return QQ(int(x.numerator), int(x.denominator))
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_rational(text: str, allow_decimal: bool = False) -> "QQ":
    """Parse ``"p/q"`` or an integer; decimals only when ``allow_decimal``."""
    m = _RATIONAL_RE.match(text)
    if m:
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise RationalParseError(f"zero denominator in {text!r}")
        return QQ(num, den)
    if allow_decimal and _DECIMAL_RE.match(text):
        f = Fraction(text.strip())
        return QQ(f.numerator, f.denominator)
    raise RationalParseError(f"malformed rational {text!r}; expected 'p/q'")


def fmt_rational(x) -> str:
    x = qq(x)
    return f"{int(x.numerator)}/{int(x.denominator)}"


def to_fraction(x) -> Fraction:
    x = qq(x)
    return Fraction(int(x.numerator), int(x.denominator))


def is_integer(x) -> bool:
    return qq(x).denominator == 1
