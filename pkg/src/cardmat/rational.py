"""Exact rational scalars and their wire format ("7/8", "-3")."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Point = tuple  # tuple[Fraction, ...], one entry per ground-set element


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or string")
    if isinstance(value, str):
        # typeset minus signs show up when values are copied from documents
        value = value.strip().replace("−", "-")
    return Fraction(value)


def as_point(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(as_rational(v) for v in values)


def fmt(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def fmt_all(values: Sequence) -> list[str]:
    return [fmt(v) for v in values]


def parse_list(text: str) -> tuple[Fraction, ...]:
    """Parse ``"7/8,7/8,1/8"`` into a tuple of Fractions."""
    text = text.strip()
    if not text:
        return ()
    return tuple(as_rational(tok) for tok in text.split(","))
