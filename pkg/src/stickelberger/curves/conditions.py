"""Local reduction types at places of F_p(t) and the three rank-bound conditions."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .poly import Place, places_of
from .weierstrass import WeierstrassCurve

INF = float("inf")


@dataclass(frozen=True)
class LocalData:
    place: str
    ord_delta: int
    ord_delta_min: int | None
    ord_j: int | float
    kind: str  # good | multiplicative | potentially_good | potentially_multiplicative | unclassified
    ramification: int | None = None
    tame: bool | None = None
    inequality: Fraction | None = None
    inequality_ok: bool | None = None

    def to_json(self) -> dict:
        out = {k: v for k, v in self.__dict__.items() if v is not None}
        if isinstance(self.ord_j, float):
            out["ord_j"] = "inf"
        if self.inequality is not None:
            out["inequality"] = f"{self.inequality.numerator}/{self.inequality.denominator}"
        return out


def local_data(E: WeierstrassCurve, place: Place) -> LocalData:
    """Reduction type of E at ``place`` after minimalising the model there.

    Residue characteristic >= 5: the c4/c6 criterion gives the minimal
    discriminant.  Characteristic 2 or 3: only scalings are tried, and a
    model whose scaled discriminant valuation stays >= 12 is unclassified.
    """
    p = E.p
    vD = E.discriminant.ord(place)
    vj = E.j_invariant.ord(place)
    vc4 = E.c4.ord(place)
    if p >= 5:
        vc6 = E.c6.ord(place)
        k = min(_floor_div(vc4, 4), _floor_div(vc6, 6), vD // 12)
        minimal_known = True
    else:
        k = min(_floor_div(a.ord(place), w) for a, w in zip(E.a_invariants, (1, 2, 3, 4, 6)))
        minimal_known = vD - 12 * k < 12
    vDm = vD - 12 * k
    vc4m = vc4 - 4 * k
    if not minimal_known:
        return LocalData(str(place), vD, None, vj, "unclassified")
    if vDm == 0:
        return LocalData(str(place), vD, 0, vj, "good")
    if vc4m == 0:
        return LocalData(str(place), vD, vDm, vj, "multiplicative")
    if vj >= 0:
        e = 12 // math.gcd(vDm, 12)
        return LocalData(str(place), vD, vDm, vj, "potentially_good", e, e % p != 0)
    return LocalData(str(place), vD, vDm, vj, "potentially_multiplicative")


def _floor_div(v, w):
    return v // w if v != INF else 10**9


def inequality_value(E: WeierstrassCurve, place: Place, A=None) -> Fraction:
    """ord(A)/(p-1) - ord(Delta)/12 for the model's own differential."""
    A = E.hasse_invariant() if A is None else A
    return Fraction(A.ord(place), E.p - 1) - Fraction(E.discriminant.ord(place), 12)


@dataclass
class ConditionReport:
    p: int
    places: list[LocalData] = field(default_factory=list)
    good_or_mult_at_0_inf: bool = False
    tame_potentially_good: bool = False
    inequality: bool = False

    @property
    def all_pass(self) -> bool:
        return self.good_or_mult_at_0_inf and self.tame_potentially_good and self.inequality

    def place(self, name: str) -> LocalData:
        for pl in self.places:
            if pl.place == name:
                return pl
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "places": [pl.to_json() for pl in self.places],
            "conditions": {
                "good_or_multiplicative_at_0_and_inf": self.good_or_mult_at_0_inf,
                "tame_potentially_good_at_finite_nonzero": self.tame_potentially_good,
                "hasse_discriminant_inequality": self.inequality,
            },
            "all_pass": self.all_pass,
        }


def check_conditions(E: WeierstrassCurve) -> ConditionReport:
    """Classify every relevant place and evaluate the three conditions."""
    p = E.p
    A = E.hasse_invariant()
    zero, inf = Place.zero(p), Place.infinity(p)
    finite = places_of(E.discriminant, E.c4, A, *E.a_invariants)
    report = ConditionReport(p)
    ends_ok = True
    for pl in (zero, inf):
        data = local_data(E, pl)
        report.places.append(data)
        ends_ok = ends_ok and data.kind in ("good", "multiplicative")
    tame_ok = ineq_ok = True
    for pl in finite:
        if pl == zero:
            continue
        data = local_data(E, pl)
        value = inequality_value(E, pl, A)
        ok = value < Fraction(1, p)
        data = LocalData(**{**data.__dict__, "inequality": value, "inequality_ok": ok})
        report.places.append(data)
        tame_ok = tame_ok and (data.kind == "good" or (data.kind == "potentially_good" and data.tame))
        ineq_ok = ineq_ok and ok
    report.good_or_mult_at_0_inf = ends_ok
    report.tame_potentially_good = tame_ok
    report.inequality = ineq_ok
    return report
