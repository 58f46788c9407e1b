"""Exact rationals and their JSON wire format.

``fractions.Fraction`` already keeps values in lowest terms with a positive
denominator, so it is used directly as the coefficient type.
"""

from fractions import Fraction

ExactRational = Fraction


def to_json(q):
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def from_json(obj):
    if isinstance(obj, dict):
        den = int(obj["den"])
        if den <= 0:
            raise ValueError(f"denominator must be positive, got {den}")
        return Fraction(int(obj["num"]), den)
    if isinstance(obj, (int, str)):
        return Fraction(obj)
    raise TypeError(f"cannot read a rational from {obj!r}")


def fmt(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
