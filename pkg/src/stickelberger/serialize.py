"""JSON-safe encoding: rationals as "num/den", integers beyond 2^53 as decimal strings."""
from __future__ import annotations

import json
from dataclasses import asdict, is_dataclass
from fractions import Fraction

from .charsum import TupleA
from .cyclo import CycloElem

SAFE_INT = 2**53


def encode_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def decode_rational(s: str) -> Fraction:
    num, _, den = str(s).partition("/")
    return Fraction(int(num), int(den) if den else 1)


def encode_int(n: int):
    return n if -SAFE_INT < n < SAFE_INT else str(n)


def decode_int(v) -> int:
    return int(v)


def decode_cyclo(obj: dict) -> CycloElem:
    return CycloElem.from_json(obj)


def to_jsonable(obj):
    """Recursively convert library values into plain JSON types."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return encode_int(obj)
    if isinstance(obj, float):
        return obj if obj == obj and abs(obj) != float("inf") else str(obj)
    if isinstance(obj, Fraction):
        return encode_rational(obj)
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, TupleA):
        return {"d": obj.d, "a": list(obj.comps)}
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    if is_dataclass(obj):
        return to_jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, separators=(",", ":"))
