"""Exact arithmetic in Z[zeta_m] on the reduced power basis."""
from __future__ import annotations

import cmath
import math
from functools import lru_cache

from sympy import divisors, mobius, totient

from .errors import PreconditionError
from .ff import FieldCtx, PadicRing, teichmuller_lift


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, low degree first, via prod (x^k - 1)^mu(m/k)."""
    if m < 1:
        raise PreconditionError("conductor must be >= 1")
    num = [1]
    den = [1]
    for k in divisors(m):
        mu = mobius(m // k)
        if mu == 1:
            num = _mul_binomial(num, k)
        elif mu == -1:
            den = _mul_binomial(den, k)
    quot = _exact_div(num, den)
    if quot[-1] < 0:
        quot = [-c for c in quot]
    return tuple(quot)


def _mul_binomial(a, k):
    # a * (x^k - 1)
    out = [0] * (len(a) + k)
    for i, c in enumerate(a):
        out[i + k] += c
        out[i] -= c
    return out


def _exact_div(num, den):
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k] // lead
        quot[k - dd] = c
        if c:
            for i, dc in enumerate(den):
                num[k - dd + i] -= c * dc
    return quot


@lru_cache(maxsize=None)
def _phi_sparse(m: int):
    phi = cyclotomic_poly(m)
    return len(phi) - 1, tuple((i, c) for i, c in enumerate(phi[:-1]) if c)


def _reduce(vec, m):
    """Reduce sum(vec[k] zeta^k) to the power basis of length phi(m)."""
    deg, sparse = _phi_sparse(m)
    folded = [0] * max(m, deg)
    for k, c in enumerate(vec):
        if c:
            folded[k % m] += c
    for k in range(len(folded) - 1, deg - 1, -1):
        c = folded[k]
        if c:
            off = k - deg
            for i, pc in sparse:
                folded[off + i] -= c * pc
            folded[k] = 0
    return tuple(folded[:deg])


class CycloElem:
    """An element of Z[zeta_m], m >= 1, with canonical coefficient vector."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        deg = len(cyclotomic_poly(m)) - 1
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != deg:
            raise PreconditionError(f"expected {deg} coefficients for m={m}")
        self.m = m
        self.coeffs = coeffs

    @classmethod
    def from_group_ring(cls, m: int, vec) -> "CycloElem":
        """sum(vec[k] * zeta_m^k) for an arbitrary-length integer vector."""
        return cls(m, _reduce(vec, m))

    @classmethod
    def integer(cls, m: int, n: int) -> "CycloElem":
        deg = len(cyclotomic_poly(m)) - 1
        return cls(m, (n,) + (0,) * (deg - 1))

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "CycloElem":
        vec = [0] * m
        vec[k % m] = 1
        return cls.from_group_ring(m, vec)

    def __repr__(self):
        return f"CycloElem(m={self.m}, coeffs={list(self.coeffs)})"

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational() and self.coeffs[0] == other
        return isinstance(other, CycloElem) and self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def _check(self, other):
        if isinstance(other, int):
            return CycloElem.integer(self.m, other)
        if other.m != self.m:
            raise PreconditionError(f"conductor mismatch: {self.m} vs {other.m}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return CycloElem(self.m, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.m, (-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloElem(self.m, (other * a for a in self.coeffs))
        other = self._check(other)
        prod = [0] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycloElem(self.m, _reduce(prod, self.m))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PreconditionError("negative powers are not supported")
        result = CycloElem.integer(self.m, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def conj(self) -> "CycloElem":
        return galois_apply(self, -1)

    def trace(self) -> int:
        """Trace from Q(zeta_m) to Q (Ramanujan sums on the power basis)."""
        return sum(c * _ramanujan(self.m, j) for j, c in enumerate(self.coeffs) if c)

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "CycloElem":
        return cls(int(obj["m"]), (int(c) for c in obj["coeffs"]))


@lru_cache(maxsize=4096)
def _ramanujan(m: int, j: int) -> int:
    g = math.gcd(j, m)
    mm = m // g
    return int(mobius(mm)) * int(totient(m)) // int(totient(mm))


def galois_apply(e: CycloElem, s: int) -> CycloElem:
    """sigma_s: zeta -> zeta^s."""
    if math.gcd(s, e.m) != 1:
        raise PreconditionError(f"{s} is not a unit mod {e.m}")
    vec = [0] * e.m
    for j, c in enumerate(e.coeffs):
        vec[(j * s) % e.m] += c
    return CycloElem.from_group_ring(e.m, vec)


def embed_complex(e: CycloElem, k: int = 1) -> complex:
    """Image of e under zeta_m -> exp(2 pi i k / m)."""
    if math.gcd(k, e.m) != 1:
        raise PreconditionError(f"{k} is not a unit mod {e.m}")
    re, im = [], []
    for j, c in enumerate(e.coeffs):
        if c:
            z = cmath.exp(2j * math.pi * ((j * k) % e.m) / e.m)
            re.append(c * z.real)
            im.append(c * z.imag)
    return complex(math.fsum(re), math.fsum(im))


def zeta_image(ctx: FieldCtx, d: int, N: int):
    """Teichmuller lift of g^((q-1)/d): the image of zeta_d at the fixed prime."""
    if (ctx.q - 1) % d:
        raise PreconditionError(f"{d} does not divide q-1 = {ctx.q - 1}")
    return teichmuller_lift(ctx, ctx.pow(ctx.generator, (ctx.q - 1) // d), N)


def padic_ord(e: CycloElem, ctx: FieldCtx, N: int) -> int | None:
    """Valuation of e at the prime of Q(zeta_d) fixed by zeta_d -> t(g^((q-1)/d)).

    Works in W_N(F_q).  Returns None when the image vanishes mod p^N, meaning
    the valuation is at least N.
    """
    d = e.m
    if (ctx.q - 1) % d:
        raise PreconditionError(f"{d} does not divide q-1 = {ctx.q - 1}")
    if e.is_zero():
        raise PreconditionError("valuation of 0")
    ring = PadicRing(ctx, N)
    z = zeta_image(ctx, d, N)
    acc = ring.scalar(0)
    power = ring.scalar(1)
    for c in e.coeffs:
        if c:
            acc = ring.add(acc, ring.mul(ring.scalar(c), power))
        power = ring.mul(power, z)
    return acc.valuation(ctx.p)
