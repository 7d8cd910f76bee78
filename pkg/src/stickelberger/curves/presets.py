"""The five non-isotrivial example curves, with their stated invariants and torsion data."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import PreconditionError
from .poly import FpPoly, RatFun
from .weierstrass import WeierstrassCurve


def _t(p):
    return FpPoly.t(p)


def _curve(p: int, a1=0, a2=0, a3=0, a4=0, a6=0) -> WeierstrassCurve:
    return WeierstrassCurve.from_coeffs(p, (a1, a2, a3, a4, a6))


@dataclass(frozen=True)
class Preset:
    p: int
    curve: WeierstrassCurve
    hasse: RatFun
    discriminant: RatFun
    j: RatFun
    ramification: dict            # place name -> stated index
    multiplicative: tuple[str, ...]
    torsion_points: tuple = ()    # (x, y) on the Frobenius twist, with stated order
    torsion_order: int | None = None
    torsion_x_only: tuple = field(default=())  # x-coordinates (order stated) when y is not given


def _build(p: int) -> Preset:
    t = _t(p)
    r = RatFun
    if p == 2:
        E = _curve(2, a1=t - 1, a3=(t - 1) ** 2)
        return Preset(2, E, r(t - 1), r(t * (t - 1) ** 8), r((t - 1) ** 4, t),
                      {"t + 1": 3}, ("t", "inf"),
                      (((t - 1) ** 2, (t - 1) ** 3),), 2)
    if p == 3:
        E = _curve(3, a2=(t - 1) ** 2, a4=t * (t - 1) ** 3)
        pts = ((t ** 2 * (t - 1) ** 4, t ** 2 * (t - 1) ** 6),
               (t ** 2 * (t - 1) ** 4, -(t ** 2) * (t - 1) ** 6))
        return Preset(3, E, r((t - 1) ** 2), r(-(t ** 2) * (t - 1) ** 9),
                      r(-((t - 1) ** 3), t ** 2), {"t + 2": 4}, ("t", "inf"), pts, 3)
    if p == 5:
        E = _curve(5, a4=3 * (t - 1) ** 4, a6=(t + 1) * (t - 1) ** 5)
        xs = (2 * (t - 1) ** 8 * (t ** 2 + 2 * t - 1), 2 * (t - 1) ** 8 * (t ** 2 - 2 * t - 1))
        return Preset(5, E, r((t - 1) ** 4), r(2 * t * (t - 1) ** 10), r((t - 1) ** 2, 2 * t),
                      {"t + 4": 6}, ("t", "inf"), torsion_order=5, torsion_x_only=xs)
    if p == 7:
        E = _curve(7, a4=(t - 1) * (t + 1) ** 3, a6=5 * (t - 1) * (t + 1) ** 5)
        return Preset(7, E, r((t - 1) * (t + 1) ** 5), r(2 * (t - 1) ** 2 * (t + 1) ** 9),
                      r(4 * (t - 1)), {"t + 6": 6, "t + 1": 4}, ("inf",))
    if p == 11:
        E = _curve(11, a4=8 * (t - 1) * (t + 1) ** 3, a6=2 * (t - 1) * (t + 1) ** 5)
        return Preset(11, E, r((t - 1) ** 2 * (t + 1) ** 8), r(9 * (t - 1) ** 2 * (t + 1) ** 9),
                      r(5 * (t - 1)), {"t + 10": 6, "t + 1": 4}, ("inf",))
    raise PreconditionError(f"no preset curve for p={p}")


PRESET_PRIMES = (2, 3, 5, 7, 11)


def preset(name_or_p) -> Preset:
    """Look up ``paper-pP`` (or a bare prime P)."""
    if isinstance(name_or_p, str):
        name = name_or_p.strip().lower()
        if not name.startswith("paper-p"):
            raise PreconditionError(f"unknown preset {name_or_p!r}")
        p = int(name[len("paper-p"):])
    else:
        p = int(name_or_p)
    if p not in PRESET_PRIMES:
        raise PreconditionError(f"no preset curve for p={p}")
    return _build(p)
