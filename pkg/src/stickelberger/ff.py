"""Finite fields F_q with full discrete-log tables, and unramified p-adic lifts.

A field element is encoded as the integer ``sum(c[i] * p**i)`` where ``c`` is
its coordinate vector on the power basis of the modulus root ``x``.  The root
``x`` is a generator of the multiplicative group, so ``dlog(x) == 1``.
"""
from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import factorint, isprime

from .errors import InternalError, PreconditionError

DEFAULT_TABLE_BOUND = 2**22


# -- dense polynomials over Z/nZ, coefficient lists low degree first --------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mulmod(a, b, modulus, n):
    """(a*b) mod (n, modulus) for a monic ``modulus`` of degree f."""
    f = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for k in range(len(prod) - 1, f - 1, -1):
        c = prod[k] % n
        if c:
            off = k - f
            for i in range(f):
                prod[off + i] -= c * modulus[i]
        prod[k] = 0
    res = [c % n for c in prod[:f]]
    return res + [0] * (f - len(res))


def _powmod(a, e, modulus, n):
    f = len(modulus) - 1
    result = [1 % n] + [0] * (f - 1)
    base = list(a)
    while e:
        if e & 1:
            result = _mulmod(result, base, modulus, n)
        e >>= 1
        if e:
            base = _mulmod(base, base, modulus, n)
    return result


def _is_primitive(modulus, p):
    f = len(modulus) - 1
    q = p**f
    x = [0, 1] + [0] * (f - 2) if f > 1 else [(-modulus[0]) % p]
    one = [1] + [0] * (f - 1)
    if _powmod(x, q - 1, modulus, p) != one:
        return False
    return all(_powmod(x, (q - 1) // r, modulus, p) != one for r in factorint(q - 1))


def primitive_modulus(p: int, f: int) -> tuple[int, ...]:
    """Smallest monic primitive polynomial of degree f over F_p.

    Candidates are ordered lexicographically on (c_0, ..., c_{f-1}).
    The returned tuple includes the leading 1.
    """
    for low in itertools.product(range(p), repeat=f):
        if low[0] == 0:
            continue
        modulus = tuple(low) + (1,)
        if _is_primitive(modulus, p):
            return modulus
    raise InternalError(f"no primitive polynomial of degree {f} over F_{p}")


# -- the field context ------------------------------------------------------

class FieldCtx:
    """A concrete F_q, q = p**f, with exp/log tables for the generator x.

    ``exp_table[k]`` is the encoding of x**k for 0 <= k < q-1 and
    ``log_table[e]`` the exponent of the element encoded by e (-1 at e = 0).
    Both arrays are read-only; contexts are safe to share.
    """

    __slots__ = ("p", "f", "q", "modulus", "exp_table", "log_table", "_trace")

    def __init__(self, p: int, f: int, modulus: tuple[int, ...]):
        self.p = p
        self.f = f
        self.q = p**f
        self.modulus = modulus
        exp_table, log_table = self._build_tables()
        exp_table.setflags(write=False)
        log_table.setflags(write=False)
        self.exp_table = exp_table
        self.log_table = log_table
        self._trace = None

    def _build_tables(self):
        p, f, q = self.p, self.f, self.q
        exp_table = np.empty(q - 1, dtype=np.int64)
        log_table = np.full(q, -1, dtype=np.int64)
        neg_m = [(-c) % p for c in self.modulus[:f]]
        powers = [p**i for i in range(f)]
        coeffs = [1] + [0] * (f - 1)
        for k in range(q - 1):
            e = sum(c * w for c, w in zip(coeffs, powers))
            if log_table[e] != -1:
                raise InternalError("modulus root is not a generator")
            exp_table[k] = e
            log_table[e] = k
            # multiply by x
            top = coeffs[-1]
            coeffs = [0] + coeffs[:-1]
            if top:
                coeffs = [(c + top * m) % p for c, m in zip(coeffs, neg_m)]
        return exp_table, log_table

    def __repr__(self):
        return f"FieldCtx(p={self.p}, f={self.f}, modulus={self.modulus})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.f, self.modulus) == (
            other.p, other.f, other.modulus)

    def __hash__(self):
        return hash((self.p, self.f, self.modulus))

    def fingerprint(self) -> str:
        h = hashlib.sha256()
        h.update(repr((self.p, self.f, self.modulus)).encode())
        h.update(self.exp_table.tobytes())
        h.update(self.log_table.tobytes())
        return h.hexdigest()

    # encoding helpers
    def element(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.f:
            raise PreconditionError(f"expected at most {self.f} coefficients")
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def coeffs(self, e: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.f):
            e, r = divmod(e, self.p)
            out.append(r)
        return tuple(out)

    @property
    def generator(self) -> int:
        return int(self.exp_table[1]) if self.q > 2 else 1

    @property
    def minus_one_log(self) -> int:
        """dlog(-1): (q-1)/2 in odd characteristic, 0 in characteristic 2."""
        return 0 if self.p == 2 else (self.q - 1) // 2

    # arithmetic on encoded elements
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.element(x + y for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.element(-x for x in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        k = (self.log_table[a] + self.log_table[b]) % (self.q - 1)
        return int(self.exp_table[k])

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n <= 0:
                raise PreconditionError("0 has no non-positive powers")
            return 0
        return int(self.exp_table[(int(self.log_table[a]) * n) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise PreconditionError("0 is not invertible")
        return self.pow(a, -1)

    def trace(self, a: int) -> int:
        """Absolute trace F_q -> F_p, returned as an integer in [0, p)."""
        if self._trace is None:
            # Tr is F_p-linear, so the traces of the basis x^i suffice.
            basis = []
            for i in range(self.f):
                xi = self.element([0] * i + [1])
                t = 0
                y = xi
                for _ in range(self.f):
                    t = self.add(t, y)
                    y = self.pow(y, self.p)
                basis.append(self.coeffs(t)[0])
            self._trace = tuple(basis)
        return sum(c * t for c, t in zip(self.coeffs(a), self._trace)) % self.p

    def minus_one_logs(self) -> np.ndarray:
        """Array L with L[k] = dlog(1 - x**k), and L[0] = -1 (1 - 1 = 0)."""
        # x - 1 only changes the constant coordinate; 1 - x = -(x - 1).
        e = self.exp_table
        shifted = np.where(e % self.p == 0, e + (self.p - 1), e - 1)
        logs = self.log_table[shifted]
        out = np.where(logs < 0, -1, (logs + self.minus_one_log) % (self.q - 1))
        return out


@lru_cache(maxsize=64)
def make_field(p: int, f: int = 1, table_bound: int = DEFAULT_TABLE_BOUND) -> FieldCtx:
    """Build (and memoize) the deterministic context for F_{p^f}."""
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise PreconditionError(f"{p} is not prime")
    if f < 1:
        raise PreconditionError("extension degree must be >= 1")
    if p**f > table_bound:
        raise PreconditionError(f"q = {p}^{f} exceeds table bound {table_bound}")
    return FieldCtx(p, f, primitive_modulus(p, f))


def dlog(ctx: FieldCtx, x: int) -> int:
    if x == 0:
        raise PreconditionError("dlog of 0")
    return int(ctx.log_table[x])


# -- unramified p-adic lifts -----------------------------------------------

@dataclass(frozen=True)
class PadicElem:
    """Element of W_N(F_q) = (Z/p^N)[x]/(lift of the modulus)."""

    coeffs: tuple[int, ...]
    precision: int

    def valuation(self, p: int) -> int | None:
        """Largest v < precision with p^v dividing every coordinate; None if zero."""
        v = self.precision
        for c in self.coeffs:
            if c:
                k = 0
                while c % p == 0:
                    c //= p
                    k += 1
                v = min(v, k)
        return None if v >= self.precision else v


class PadicRing:
    """Arithmetic in W_N(F_q) for a given field context."""

    def __init__(self, ctx: FieldCtx, precision: int):
        if precision < 1:
            raise PreconditionError("precision must be >= 1")
        self.ctx = ctx
        self.precision = precision
        self.modulus_n = ctx.p**precision

    def make(self, coeffs) -> PadicElem:
        coeffs = [c % self.modulus_n for c in coeffs]
        coeffs += [0] * (self.ctx.f - len(coeffs))
        return PadicElem(tuple(coeffs), self.precision)

    def scalar(self, n: int) -> PadicElem:
        return self.make([n])

    def lift(self, x: int) -> PadicElem:
        """Naive digit lift of an F_q element (not the Teichmuller lift)."""
        return self.make(self.ctx.coeffs(x))

    def add(self, a: PadicElem, b: PadicElem) -> PadicElem:
        return self.make([x + y for x, y in zip(a.coeffs, b.coeffs)])

    def mul(self, a: PadicElem, b: PadicElem) -> PadicElem:
        if self.ctx.f == 1:
            return self.make([a.coeffs[0] * b.coeffs[0]])
        return PadicElem(tuple(_mulmod(a.coeffs, b.coeffs, self.ctx.modulus, self.modulus_n)),
                         self.precision)

    def pow(self, a: PadicElem, e: int) -> PadicElem:
        if self.ctx.f == 1:
            return self.make([pow(a.coeffs[0], e, self.modulus_n)])
        return PadicElem(tuple(_powmod(a.coeffs, e, self.ctx.modulus, self.modulus_n)),
                         self.precision)

    def reduce(self, a: PadicElem) -> int:
        return self.ctx.element(a.coeffs)


def teichmuller_lift(ctx: FieldCtx, x: int, N: int) -> PadicElem:
    """The (q-1)-th root of unity in W_N(F_q) reducing to x.

    Iterates y -> y^q from the digit lift; each step gains at least one
    p-adic digit, so N steps reach the fixed point.
    """
    if x == 0:
        raise PreconditionError("0 has no Teichmuller lift")
    ring = PadicRing(ctx, N)
    y = ring.lift(x)
    for _ in range(N):
        nxt = ring.pow(y, ctx.q)
        if nxt == y:
            break
        y = nxt
    return y
