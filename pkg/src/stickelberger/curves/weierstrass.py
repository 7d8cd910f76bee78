"""Long Weierstrass curves over F_p(t): invariants, group law, division polynomials."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import PreconditionError
from .poly import FpPoly, RatFun


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_p(t)."""

    p: int
    a1: RatFun
    a2: RatFun
    a3: RatFun
    a4: RatFun
    a6: RatFun

    def __post_init__(self):
        if self.discriminant.is_zero():
            raise PreconditionError("singular Weierstrass equation (discriminant 0)")

    @classmethod
    def from_coeffs(cls, p: int, coeffs) -> "WeierstrassCurve":
        """Build from five entries, each an int, FpPoly, RatFun or coefficient list."""
        def conv(c):
            if isinstance(c, RatFun):
                return c
            if isinstance(c, FpPoly):
                return RatFun(c)
            if isinstance(c, int):
                return RatFun.const(p, c)
            return RatFun(FpPoly(p, c))
        return cls(p, *(conv(c) for c in coeffs))

    @property
    def a_invariants(self) -> tuple[RatFun, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.a_invariants
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def c4(self) -> RatFun:
        b2, b4, _, _ = self.b_invariants
        return b2 * b2 - 24 * b4

    @property
    def c6(self) -> RatFun:
        b2, b4, b6, _ = self.b_invariants
        return -(b2 ** 3) + 36 * b2 * b4 - 216 * b6

    @property
    def discriminant(self) -> RatFun:
        b2, b4, b6, b8 = self.b_invariants
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def j_invariant(self) -> RatFun:
        return self.c4 ** 3 / self.discriminant

    def hasse_invariant(self) -> RatFun:
        """A(E, dx/(2y + a1 x + a3)).

        p = 2: a1.  p odd: the x^(p-1) coefficient of F^((p-1)/2), where
        y^2 = F(x) = x^3 + (b2/4) x^2 + (b4/2) x + b6/4 is the completed square.
        """
        if self.p == 2:
            return self.a1
        b2, b4, b6, _ = self.b_invariants
        inv2 = pow(2, -1, self.p)
        inv4 = inv2 * inv2
        cubic = [b6 * inv4, b4 * inv2, b2 * inv4, RatFun.const(self.p, 1)]
        power = [RatFun.const(self.p, 1)]
        for _ in range((self.p - 1) // 2):
            nxt = [RatFun.const(self.p, 0)] * (len(power) + 3)
            for i, u in enumerate(power):
                for j, v in enumerate(cubic):
                    nxt[i + j] = nxt[i + j] + u * v
            power = nxt
        return power[self.p - 1]

    # -- isomorphisms and twists --------------------------------------------

    def change_coordinates(self, u: RatFun, r=0, s=0, t=0) -> "WeierstrassCurve":
        """Model for x = u^2 x' + r, y = u^3 y' + s u^2 x' + t."""
        u = _as_ratfun(self.p, u)
        r, s, t = (_as_ratfun(self.p, v) for v in (r, s, t))
        a1, a2, a3, a4, a6 = self.a_invariants
        na1 = (a1 + 2 * s) / u
        na2 = (a2 - s * a1 + 3 * r - s * s) / u ** 2
        na3 = (a3 + r * a1 + 2 * t) / u ** 3
        na4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u ** 4
        na6 = (a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1) / u ** 6
        return WeierstrassCurve(self.p, na1, na2, na3, na4, na6)

    def frobenius_twist(self) -> "WeierstrassCurve":
        """E^(p): every coefficient raised to the p-th power."""
        return WeierstrassCurve(self.p, *(c.frobenius() for c in self.a_invariants))

    # -- points -----------------------------------------------------------------

    def point(self, x, y) -> "CurvePoint":
        pt = CurvePoint(_as_ratfun(self.p, x), _as_ratfun(self.p, y))
        if not self.contains(pt):
            raise PreconditionError(f"({x}, {y}) is not on the curve")
        return pt

    def contains(self, pt: "CurvePoint") -> bool:
        if pt.is_infinity:
            return True
        a1, a2, a3, a4, a6 = self.a_invariants
        x, y = pt.x, pt.y
        return (y * y + a1 * x * y + a3 * y) == (x ** 3 + a2 * x * x + a4 * x + a6)

    def negate(self, pt: "CurvePoint") -> "CurvePoint":
        if pt.is_infinity:
            return pt
        return CurvePoint(pt.x, -pt.y - self.a1 * pt.x - self.a3)

    def add(self, P: "CurvePoint", Q: "CurvePoint") -> "CurvePoint":
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        a1, a2, a3, a4, a6 = self.a_invariants
        if P.x == Q.x:
            if P.y + Q.y + a1 * Q.x + a3 == 0:
                return INFINITY
            lam_num = 3 * P.x * P.x + 2 * a2 * P.x + a4 - a1 * P.y
            lam_den = 2 * P.y + a1 * P.x + a3
        else:
            lam_num = Q.y - P.y
            lam_den = Q.x - P.x
        lam = lam_num / lam_den
        nu = P.y - lam * P.x
        x3 = lam * lam + a1 * lam - a2 - P.x - Q.x
        y3 = -(lam + a1) * x3 - nu - a3
        return CurvePoint(x3, y3)

    def multiply(self, n: int, P: "CurvePoint") -> "CurvePoint":
        if n < 0:
            return self.multiply(-n, self.negate(P))
        result = INFINITY
        addend = P
        while n:
            if n & 1:
                result = self.add(result, addend)
            n >>= 1
            if n:
                addend = self.add(addend, addend)
        return result

    def point_order(self, P: "CurvePoint", n: int) -> bool:
        """True iff P has exact order n (n <= 12)."""
        if not 1 <= n <= 12:
            raise PreconditionError("n must be in [1, 12]")
        if not self.contains(P):
            raise PreconditionError("point is not on the curve")
        Q = INFINITY
        for m in range(1, n + 1):
            Q = self.add(Q, P)
            if Q.is_infinity:
                return m == n
        return False

    # -- division polynomials ---------------------------------------------------

    def division_polynomial(self, n: int) -> list[RatFun]:
        """f_n in x (coefficients in F_p(t), low degree first).

        f_n = psi_n for odd n and psi_n / psi_2 for even n, so that for a
        point P with 2P != O, nP = O iff f_n(x(P)) = 0.
        """
        if n < 0:
            raise PreconditionError("n must be >= 0")
        return _division_polys(self, n)[n]

    def evaluate(self, coeffs: list[RatFun], x: RatFun) -> RatFun:
        acc = RatFun.const(self.p, 0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc


class CurvePoint:
    """Affine point (x, y) over F_p(t), or the point at infinity."""

    __slots__ = ("x", "y")

    def __init__(self, x: RatFun | None, y: RatFun | None):
        self.x = x
        self.y = y

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __eq__(self, other):
        return isinstance(other, CurvePoint) and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = CurvePoint(None, None)


def _as_ratfun(p, v) -> RatFun:
    if isinstance(v, RatFun):
        return v
    if isinstance(v, FpPoly):
        return RatFun(v)
    if isinstance(v, int):
        return RatFun.const(p, v)
    return RatFun(FpPoly(p, v))


# polynomial-in-x helpers over F_p(t)
def _padd(a, b, zero):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n)]


def _pmul(a, b, zero):
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u.is_zero():
            continue
        for j, v in enumerate(b):
            out[i + j] = out[i + j] + u * v
    return out


def _pneg(a):
    return [-c for c in a]


def _division_polys(E: WeierstrassCurve, n: int) -> list[list[RatFun]]:
    zero = RatFun.const(E.p, 0)
    one = RatFun.const(E.p, 1)

    def c(k):
        return RatFun.const(E.p, k)

    b2, b4, b6, b8 = E.b_invariants
    F = [b6, 2 * b4, b2, c(4)]          # psi_2^2
    F2 = _pmul(F, F, zero)
    f = [[], [one], [one],
         [b8, 3 * b6, 3 * b4, b2, c(3)],
         [b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, c(2)]]
    for k in range(5, n + 1):
        m = k // 2
        if k % 2:
            left = _pmul(f[m + 2], _pmul(f[m], _pmul(f[m], f[m], zero), zero), zero)
            right = _pmul(f[m - 1], _pmul(f[m + 1], _pmul(f[m + 1], f[m + 1], zero), zero), zero)
            if m % 2 == 0:
                left = _pmul(F2, left, zero)
            else:
                right = _pmul(F2, right, zero)
            f.append(_padd(left, _pneg(right), zero))
        else:
            inner = _padd(_pmul(f[m + 2], _pmul(f[m - 1], f[m - 1], zero), zero),
                          _pneg(_pmul(f[m - 2], _pmul(f[m + 1], f[m + 1], zero), zero)), zero)
            f.append(_pmul(f[m], inner, zero))
    return f
