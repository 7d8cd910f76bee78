"""Polynomials and rational functions over F_p in one variable t."""
from __future__ import annotations

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor, gf_irreducible_p

from ..errors import PreconditionError


class FpPoly:
    """Immutable polynomial over F_p, coefficients low degree first."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        c = [int(x) % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.p = p
        self.coeffs = tuple(c)

    @classmethod
    def t(cls, p: int) -> "FpPoly":
        return cls(p, (0, 1))

    @classmethod
    def const(cls, p: int, c: int) -> "FpPoly":
        return cls(p, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = FpPoly.const(self.p, other)
        return isinstance(other, FpPoly) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def _coerce(self, other) -> "FpPoly":
        if isinstance(other, int):
            return FpPoly.const(self.p, other)
        if other.p != self.p:
            raise PreconditionError("characteristic mismatch")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return FpPoly(self.p, (x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return FpPoly(self.p, (-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return FpPoly(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPoly(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = FpPoly.const(self.p, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dd = other.degree
        inv = pow(other.lead, -1, p)
        quot = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] * inv % p
            if c:
                quot[k - dd] = c
                for i, oc in enumerate(other.coeffs):
                    rem[k - dd + i] = (rem[k - dd + i] - c * oc) % p
        return FpPoly(p, quot), FpPoly(p, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "FpPoly":
        if self.is_zero():
            return self
        inv = pow(self.lead, -1, self.p)
        return FpPoly(self.p, (c * inv for c in self.coeffs))

    def gcd(self, other) -> "FpPoly":
        a, b = self, self._coerce(other)
        while b:
            a, b = b, a % b
        return a.monic()

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def frobenius(self) -> "FpPoly":
        """f(t)^p, which over F_p is f(t^p)."""
        out = [0] * (self.p * max(self.degree, 0) + 1)
        for i, c in enumerate(self.coeffs):
            out[i * self.p] = c
        return FpPoly(self.p, out)

    def valuation_at(self, place: "FpPoly") -> int:
        """Multiplicity of the irreducible ``place`` in self (self != 0)."""
        if self.is_zero():
            raise PreconditionError("valuation of the zero polynomial")
        v = 0
        f = self
        while True:
            q, r = divmod(f, place)
            if r:
                return v
            f, v = q, v + 1

    def factor(self) -> tuple[int, list[tuple["FpPoly", int]]]:
        """(leading coefficient, [(monic irreducible, multiplicity)])."""
        if self.is_zero():
            raise PreconditionError("cannot factor 0")
        lc, facs = gf_factor([ZZ(c) for c in reversed(self.coeffs)], self.p, ZZ)
        return int(lc), sorted(((FpPoly(self.p, [int(c) for c in reversed(g)]), m) for g, m in facs),
                               key=lambda fm: (fm[0].degree, fm[0].coeffs))

    def is_irreducible(self) -> bool:
        return self.degree >= 1 and bool(
            gf_irreducible_p([ZZ(c) for c in reversed(self.coeffs)], self.p, ZZ))

    def __repr__(self):
        return f"FpPoly({self.p}, {list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


class RatFun:
    """numer/denom in F_p(t), canonical: denom monic and coprime to numer."""

    __slots__ = ("numer", "denom")

    def __init__(self, numer: FpPoly, denom: FpPoly | None = None):
        p = numer.p
        if denom is None:
            denom = FpPoly.const(p, 1)
        if denom.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = numer.gcd(denom)
        if g.degree > 0:
            numer, denom = numer // g, denom // g
        inv = pow(denom.lead, -1, p)
        self.numer = numer * inv
        self.denom = denom * inv

    @classmethod
    def const(cls, p: int, c: int) -> "RatFun":
        return cls(FpPoly.const(p, c))

    @classmethod
    def t(cls, p: int) -> "RatFun":
        return cls(FpPoly.t(p))

    @property
    def p(self) -> int:
        return self.numer.p

    def is_zero(self) -> bool:
        return self.numer.is_zero()

    def is_constant(self) -> bool:
        return self.numer.degree <= 0 and self.denom.degree == 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFun.const(self.p, other)
        if isinstance(other, FpPoly):
            other = RatFun(other)
        return isinstance(other, RatFun) and self.numer == other.numer and self.denom == other.denom

    def __hash__(self):
        return hash((self.numer, self.denom))

    def _coerce(self, other) -> "RatFun":
        if isinstance(other, int):
            return RatFun.const(self.p, other)
        if isinstance(other, FpPoly):
            return RatFun(other)
        return other

    def __add__(self, other):
        o = self._coerce(other)
        return RatFun(self.numer * o.denom + o.numer * self.denom, self.denom * o.denom)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.numer, self.denom)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RatFun(self.numer * o.numer, self.denom * o.denom)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0")
        return RatFun(self.denom, self.numer)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFun(self.numer**n, self.denom**n)

    def frobenius(self) -> "RatFun":
        return RatFun(self.numer.frobenius(), self.denom.frobenius())

    def ord(self, place: "Place") -> int | float:
        """Valuation at a place; +inf for the zero function."""
        if self.is_zero():
            return float("inf")
        if place.is_infinite:
            return self.denom.degree - self.numer.degree
        return self.numer.valuation_at(place.poly) - self.denom.valuation_at(place.poly)

    def to_json(self) -> dict:
        return {"numer": list(self.numer.coeffs), "denom": list(self.denom.coeffs)}

    @classmethod
    def from_json(cls, p: int, obj: dict) -> "RatFun":
        return cls(FpPoly(p, obj["numer"]), FpPoly(p, obj["denom"]))

    def __repr__(self):
        return f"RatFun({self})"

    def __str__(self):
        if self.denom.degree == 0:
            return str(self.numer)
        return f"({self.numer})/({self.denom})"


class Place:
    """A place of F_p(t): a monic irreducible polynomial, or infinity."""

    __slots__ = ("poly", "p")

    def __init__(self, p: int, poly: FpPoly | None):
        if poly is not None:
            poly = poly.monic()
            if not poly.is_irreducible():
                raise PreconditionError(f"{poly} is not irreducible over F_{p}")
        self.p = p
        self.poly = poly

    @classmethod
    def infinity(cls, p: int) -> "Place":
        return cls(p, None)

    @classmethod
    def zero(cls, p: int) -> "Place":
        return cls(p, FpPoly.t(p))

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def is_zero_place(self) -> bool:
        return self.poly is not None and self.poly.coeffs == (0, 1)

    def __eq__(self, other):
        return isinstance(other, Place) and (self.p, self.poly) == (other.p, other.poly)

    def __hash__(self):
        return hash((self.p, self.poly))

    def __str__(self):
        return "inf" if self.poly is None else str(self.poly)

    def __repr__(self):
        return f"Place({self})"


def places_of(*fns: RatFun) -> list[Place]:
    """Finite places where any of the given nonzero functions has a zero or pole."""
    found = {}
    for r in fns:
        if r.is_zero():
            continue
        for poly in (r.numer, r.denom):
            if poly.degree > 0:
                for g, _ in poly.factor()[1]:
                    found[g] = Place(r.p, g)
    return sorted(found.values(), key=lambda pl: (pl.poly.degree, pl.poly.coeffs))

