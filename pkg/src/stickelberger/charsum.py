"""Gauss and Jacobi sums over F_q, and naive Fermat point counts.

Characters are realised through discrete logs: the residue a mod d stands
for x -> zeta_d^(-a * dlog x), i.e. t^(-a(q-1)/d) for the Teichmuller
character t.  CHARACTER_SIGN is that exponent sign.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cyclo import CycloElem, embed_complex
from .errors import PreconditionError
from .ff import FieldCtx

CHARACTER_SIGN = -1
DEFAULT_EXACT_GAUSS_BOUND = 512


@dataclass(frozen=True)
class TupleA:
    """(a_0, ..., a_{w+1}) mod d, nonzero entries summing to 0."""

    d: int
    comps: tuple[int, ...]

    def __post_init__(self):
        if self.d < 1:
            raise PreconditionError("d must be >= 1")
        comps = tuple(int(a) % self.d for a in self.comps)
        object.__setattr__(self, "comps", comps)
        if len(comps) < 3:
            raise PreconditionError("a tuple needs at least 3 components (w >= 1)")
        if any(a == 0 for a in comps):
            raise PreconditionError(f"zero component in {comps} mod {self.d}")
        if sum(comps) % self.d:
            raise PreconditionError(f"components of {comps} do not sum to 0 mod {self.d}")

    @property
    def w(self) -> int:
        return len(self.comps) - 2

    @property
    def primitive(self) -> bool:
        return math.gcd(self.d, *self.comps) == 1

    def scale(self, s: int) -> "TupleA":
        return TupleA(self.d, tuple(s * a for a in self.comps))

    def primitive_part(self) -> "TupleA":
        e = math.gcd(self.d, *self.comps)
        return TupleA(self.d // e, tuple(a // e for a in self.comps))

    def __neg__(self):
        return self.scale(-1)


def _check_divides(ctx: FieldCtx, d: int):
    if d < 1 or (ctx.q - 1) % d:
        raise PreconditionError(f"d={d} does not divide q-1 = {ctx.q - 1}")


# -- Jacobi sums -------------------------------------------------------------

@lru_cache(maxsize=256)
def cyclotomic_numbers(ctx: FieldCtx, d: int) -> np.ndarray:
    """M[i, j] = #{x != 0, 1 : dlog x = i, dlog(1 - x) = j  (mod d)}."""
    _check_divides(ctx, d)
    k = np.arange(ctx.q - 1)
    other = ctx.minus_one_logs()
    keep = other >= 0
    idx = (k[keep] % d) * d + (other[keep] % d)
    counts = np.bincount(idx, minlength=d * d).reshape(d, d)
    counts.setflags(write=False)
    return counts


def _ring_mul(u, v, d):
    out = [0] * d
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    out[(i + j) % d] += a * b
    return out


def _monomial(k, d):
    v = [0] * d
    v[k % d] = 1
    return v


def _pair_sum(M, b, c, d):
    """Group-ring vector of sum_{x != 0,1} chi_b(x) chi_c(1 - x)."""
    i = np.arange(d)
    expo = (CHARACTER_SIGN * (b * i[:, None] + c * i[None, :])) % d
    vec = np.bincount(expo.ravel(), weights=M.ravel(), minlength=d)
    return [int(round(x)) for x in vec]


def jacobi_group_ring(ctx: FieldCtx, a: TupleA) -> list[int]:
    """J_q(a) as a vector in Z[C_d] (before reduction to the power basis).

    Uses J = G(-1) where G(y) = sum over x_1 + ... + x_{w+1} = y of
    prod chi_i(x_i); G is built one character at a time from the values
    G(1) and G(0), since G(y) = chi(y) G(1) for y != 0.
    """
    d = a.d
    _check_divides(ctx, d)
    M = cyclotomic_numbers(ctx, d)
    L = ctx.minus_one_log
    chars = a.comps[1:]
    g1 = _monomial(0, d)
    g0 = [0] * d
    acc = chars[0]
    for c in chars[1:]:
        new1 = [x + y for x, y in zip(g0, _ring_mul(g1, _pair_sum(M, acc, c, d), d))]
        if (acc + c) % d == 0:
            shift = _monomial(CHARACTER_SIGN * c * L, d)
            new0 = [(ctx.q - 1) * x for x in _ring_mul(g1, shift, d)]
        else:
            new0 = [0] * d
        g1, g0 = new1, new0
        acc = (acc + c) % d
    return _ring_mul(g1, _monomial(CHARACTER_SIGN * acc * L, d), d)


def jacobi_sum(ctx: FieldCtx, a: TupleA) -> CycloElem:
    """Exact J_q(a) in Z[zeta_d]."""
    return CycloElem.from_group_ring(a.d, jacobi_group_ring(ctx, a))


def jacobi_sum_naive(ctx: FieldCtx, a: TupleA) -> CycloElem:
    """Definitional J_q(a): full loop over x_0 + ... + x_{w+1} = 0.

    Costs q^(w+1) steps; intended as an oracle for small fields.
    """
    d = a.d
    _check_divides(ctx, d)
    logs = [int(v) for v in ctx.log_table]
    nonzero = range(1, ctx.q)
    counts = [0] * d
    for xs in itertools.product(nonzero, repeat=a.w + 1):
        s = 0
        for x in xs:
            s = ctx.add(s, x)
        last = ctx.neg(s)
        if last == 0:
            continue
        k = sum(ai * logs[x] for ai, x in zip(a.comps, xs + (last,)))
        counts[(CHARACTER_SIGN * k) % d] += 1
    for c in counts:
        if c % (ctx.q - 1):
            raise ArithmeticError("Jacobi sum class counts not divisible by q-1")
    return CycloElem.from_group_ring(d, [c // (ctx.q - 1) for c in counts])


def jacobi_complex(ctx: FieldCtx, a: TupleA) -> complex:
    return embed_complex(jacobi_sum(ctx, a), 1)


# -- Gauss sums --------------------------------------------------------------

def gauss_sum(ctx: FieldCtx, a: int, d: int, exact: bool = False,
              exact_bound: int = DEFAULT_EXACT_GAUSS_BOUND):
    """G_q(a) = -sum_{x != 0} chi_a(x) psi(Tr x), psi(u) = exp(2 pi i u / p).

    Exact mode returns an element of Z[zeta_{pd}] (zeta_p = zeta_{pd}^d,
    zeta_d = zeta_{pd}^p); complex mode returns its image under
    zeta_{pd} -> exp(2 pi i / pd).
    """
    _check_divides(ctx, d)
    p, q = ctx.p, ctx.q
    a %= d
    if exact and q > exact_bound:
        raise PreconditionError(f"exact Gauss sums need q <= {exact_bound}")
    if exact:
        m = p * d
        vec = [0] * m
        for k in range(q - 1):
            tr = ctx.trace(int(ctx.exp_table[k]))
            vec[(CHARACTER_SIGN * a * k * p + tr * d) % m] -= 1
        return CycloElem.from_group_ring(m, vec)
    re, im = [], []
    for k in range(q - 1):
        tr = ctx.trace(int(ctx.exp_table[k]))
        z = cmath.exp(2j * math.pi * ((CHARACTER_SIGN * a * k * p + tr * d) % (p * d)) / (p * d))
        re.append(-z.real)
        im.append(-z.imag)
    return complex(math.fsum(re), math.fsum(im))


@dataclass(frozen=True)
class WeilProductReport:
    holds: bool
    residual: float
    tolerance: float
    jacobi: complex
    product: complex


def weil_product_check(ctx: FieldCtx, a: TupleA, rel_tol: float = 1e-6) -> WeilProductReport:
    """Compare J_q(a) with (-1)^w q^-1 prod G_q(a_i) in the k=1 embedding."""
    _check_divides(ctx, a.d)
    j = jacobi_complex(ctx, a)
    prod = complex(1.0)
    for ai in a.comps:
        prod *= gauss_sum(ctx, ai, a.d)
    prod *= (-1) ** a.w / ctx.q
    residual = abs(j - prod)
    tol = rel_tol * ctx.q ** (a.w / 2)
    return WeilProductReport(residual < tol, residual, tol, j, prod)


# -- Fermat curves -----------------------------------------------------------

def fermat_count_naive(ctx: FieldCtx, d: int) -> int:
    """Projective points of x^d + y^d + z^d = 0 over F_q.

    Charts: z = 1 (all x, y), then z = 0, y = 1 (all x); z = y = 0 is never
    a solution.
    """
    if d < 1 or d % ctx.p == 0:
        raise PreconditionError(f"p={ctx.p} divides d={d}")
    q = ctx.q
    powd = [0] + [ctx.pow(x, d) for x in range(1, q)]
    hist: dict[int, int] = {}
    for v in powd:
        hist[v] = hist.get(v, 0) + 1
    minus_one = ctx.neg(1)
    affine = 0
    for u, cu in hist.items():
        affine += cu * hist.get(ctx.sub(minus_one, u), 0)
    at_infinity = hist.get(minus_one, 0)
    return affine + at_infinity
