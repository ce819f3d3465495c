"""Small shared helpers."""

from __future__ import annotations

import os
from fractions import Fraction


def as_fraction(x) -> Fraction:
    """Exact rational from int, Fraction, or decimal string/float."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(str(x))
    return Fraction(x)


def oracle_limit(default: int) -> int:
    """Size cap for brute-force oracles; SEPKIT_ORACLE_LIMIT overrides."""
    raw = os.environ.get("SEPKIT_ORACLE_LIMIT")
    if raw is None:
        return default
    return int(raw)
