from .conditions import ConditionReport, LocalData, check_conditions, local_data
from .poly import FpPoly, Place, RatFun
from .presets import PRESET_PRIMES, preset
from .weierstrass import INFINITY, CurvePoint, WeierstrassCurve


def curve_invariants(E: WeierstrassCurve) -> dict:
    """Discriminant, j-invariant and Hasse invariant of E."""
    return {"discriminant": E.discriminant, "j": E.j_invariant, "hasse": E.hasse_invariant()}


def frobenius_twist(E: WeierstrassCurve) -> WeierstrassCurve:
    return E.frobenius_twist()


def point_order(E: WeierstrassCurve, P: CurvePoint, n: int) -> bool:
    return E.point_order(P, n)


__all__ = [
    "ConditionReport", "CurvePoint", "FpPoly", "INFINITY", "LocalData", "PRESET_PRIMES", "Place",
    "RatFun", "WeierstrassCurve", "check_conditions", "curve_invariants", "frobenius_twist",
    "local_data", "point_order", "preset",
]
