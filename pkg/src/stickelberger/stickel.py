"""Fractional-part valuation formulas and the combinatorics built on them.

All values are exact ``Fraction``s; no verdict path touches floating point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from sympy import n_order

from .charsum import TupleA, jacobi_sum
from .cyclo import CycloElem, galois_apply, padic_ord
from .errors import PreconditionError
from .ff import FieldCtx


def frac(x: Fraction) -> Fraction:
    """<x>, the representative of x mod Z in [0, 1)."""
    return x - math.floor(x)


def multiplicative_order(p: int, d: int) -> int:
    """Order of p in (Z/dZ)^x (1 for d = 1)."""
    if math.gcd(p, d) != 1:
        raise PreconditionError(f"{p} is not a unit mod {d}")
    return 1 if d == 1 else int(n_order(p, d))


def units(d: int) -> list[int]:
    return [s for s in range(1, d + 1) if math.gcd(s, d) == 1] if d > 1 else [0]


def _orbit_sum(p: int, f: int, d: int, a: int) -> int:
    """d * sum_{j<f} <p^j a / d>, as an integer."""
    total = 0
    pj = 1
    for _ in range(f):
        total += (pj * a) % d
        pj = (pj * p) % d
    return total


def frac_val_sum(p: int, f: int, d: int, a, subtract_f: bool | None = None):
    """Stickelberger-type valuation from fractional parts.

    With a single residue ``a`` (Gauss mode) returns
    (p-1) * sum_j <p^j a/d>.  With a sequence of residues (Jacobi mode)
    returns sum_i sum_j <p^j a_i/d> - f.  Both are integers when
    p^f = 1 mod d; ``subtract_f`` overrides the mode's default.
    """
    if d < 1 or d % p == 0:
        raise PreconditionError(f"p={p} divides d={d}")
    if pow(p, f, d) != 1 % d:
        raise PreconditionError(f"{p}^{f} is not 1 mod {d}")
    jacobi_mode = not isinstance(a, int)
    residues = list(a) if jacobi_mode else [a]
    if any(r % d == 0 for r in residues):
        raise PreconditionError("residues must be nonzero mod d")
    total = Fraction(sum(_orbit_sum(p, f, d, r) for r in residues), d)
    if subtract_f is None:
        subtract_f = jacobi_mode
    if not jacobi_mode:
        total *= p - 1
    if subtract_f:
        total -= f
    return int(total) if total.denominator == 1 else total


def jacobi_valuation(p: int, a: TupleA) -> int:
    """Predicted ord at the fixed prime of J_q(a), using the minimal f."""
    return frac_val_sum(p, multiplicative_order(p, a.d), a.d, a.comps)


# -- oracle comparison -------------------------------------------------------

@dataclass(frozen=True)
class ValuationComparison:
    tuple: TupleA
    q: int
    formula: int
    oracle: int | None
    precision: int

    @property
    def agrees(self) -> bool:
        return self.oracle == self.formula


def compare_valuation(ctx: FieldCtx, a: TupleA, slack: int = 2,
                      value: CycloElem | None = None) -> ValuationComparison:
    """Formula vs. p-adic evaluation of the definitional Jacobi sum at q = ctx.q."""
    f = ctx.f
    formula = frac_val_sum(ctx.p, f, a.d, a.comps)
    N = a.w * f + slack
    j = value if value is not None else jacobi_sum(ctx, a)
    return ValuationComparison(a, ctx.q, formula, padic_ord(j, ctx, N), N)


def orbit_valuations_match(ctx: FieldCtx, a: TupleA, slack: int = 2) -> bool:
    """Convention-free check: multisets over all primes above p agree.

    ord at sigma_s(P) of J equals ord at P of sigma_s^{-1}(J) = J(s^{-1} a).
    """
    f = ctx.f
    N = a.w * f + slack
    j = jacobi_sum(ctx, a)
    oracle = sorted(padic_ord(galois_apply(j, s), ctx, N) for s in units(a.d))
    formula = sorted(frac_val_sum(ctx.p, f, a.d, a.scale(s).comps) for s in units(a.d))
    return oracle == formula


# -- supersingular tuples ----------------------------------------------------

def is_degenerate(comps, d: int) -> bool:
    """True when a proper nonempty sub-multiset sums to 0 mod d."""
    n = len(comps)
    return any(sum(sub) % d == 0
               for r in range(1, n)
               for sub in combinations(comps, r))


@dataclass(frozen=True)
class SupersingularVerdict:
    tuple: TupleA
    p: int
    f: int
    per_s: dict = field(repr=False)
    verdict: bool
    degenerate: bool


def is_supersingular(p: int, a: TupleA, early_exit: bool = False) -> SupersingularVerdict:
    """Check sum_i sum_j <s p^j a_i / d> == 2f for every unit s (w = 2 tuples).

    With ``early_exit`` the scan stops at the first failing s and ``per_s``
    holds only the values examined.
    """
    d = a.d
    if a.w != 2:
        raise PreconditionError("supersingularity is defined for w = 2 tuples")
    if d % p == 0:
        raise PreconditionError(f"p={p} divides d={d}")
    f = multiplicative_order(p, d)
    target = 2 * f * d
    per_s = {}
    verdict = True
    for s in units(d):
        total = sum(_orbit_sum(p, f, d, (s * ai) % d) for ai in a.comps)
        per_s[s] = Fraction(total, d)
        if total != target:
            verdict = False
            if early_exit:
                break
    return SupersingularVerdict(a, p, f, per_s, verdict, is_degenerate(a.comps, d))


# -- level lowering ----------------------------------------------------------

def level_lowering_identity(d: int, ell: int, a: int) -> tuple[Fraction, Fraction]:
    """Both sides of sum_{s in <1+d/ell>} <sa/d> = <a/(d/ell)> + (ell-1)/2."""
    if d % (ell * ell):
        raise PreconditionError(f"{ell}^2 does not divide {d}")
    if a % ell == 0:
        raise PreconditionError(f"{ell} divides {a}")
    h = 1 + d // ell
    subgroup = {pow(h, k, d) for k in range(ell)}
    lhs = sum((Fraction((s * a) % d, d) for s in subgroup), Fraction(0))
    dd = d // ell
    rhs = Fraction(a % dd, dd) + Fraction(ell - 1, 2)
    return lhs, rhs


@dataclass(frozen=True)
class LevelLowerReport:
    source: TupleA
    image: TupleA
    ell: int
    identity_holds: bool
    source_supersingular: bool | None = None
    image_supersingular: bool | None = None

    @property
    def preserves_supersingular(self) -> bool | None:
        if self.source_supersingular is None:
            return None
        return (not self.source_supersingular) or bool(self.image_supersingular)


def level_lower(d: int, ell: int, a: TupleA, p: int | None = None) -> LevelLowerReport:
    """Reduce a in A_{d,w} to A_{d/ell,w}, verifying the averaging identity.

    With ``p`` given, also classifies source and image (w = 2 only).
    """
    if a.d != d:
        raise PreconditionError("tuple modulus does not match d")
    if d % (ell * ell):
        raise PreconditionError(f"{ell}^2 does not divide {d}")
    if any(ai % ell == 0 for ai in a.comps):
        raise PreconditionError(f"{ell} divides a component of {a.comps}")
    holds = True
    for ai in a.comps:
        lhs, rhs = level_lowering_identity(d, ell, ai)
        holds = holds and lhs == rhs
    image = TupleA(d // ell, a.comps)
    src_ss = img_ss = None
    if p is not None and a.w == 2:
        src_ss = is_supersingular(p, a, early_exit=True).verdict
        img_ss = is_supersingular(p, image, early_exit=True).verdict
    return LevelLowerReport(a, image, ell, holds, src_ss, img_ss)


# -- subgroup averages and degrees ------------------------------------------

def generated_subgroup(d: int, gens) -> list[int]:
    """Elements of the subgroup of (Z/dZ)^x generated by ``gens``, sorted."""
    elems = {1 % d}
    for g in gens:
        if math.gcd(g, d) != 1:
            raise PreconditionError(f"{g} is not a unit mod {d}")
    frontier = list(elems)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = (x * g) % d
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return sorted(elems)


def subgroup_average(d: int, gens, a: int) -> Fraction:
    """(1/|H|) sum_{t in H} <t a / d>."""
    if a % d == 0:
        raise PreconditionError("a must be nonzero mod d")
    H = generated_subgroup(d, gens)
    return Fraction(sum((t * a) % d for t in H), d * len(H))


def jacobi_degree(ctx: FieldCtx, a: TupleA) -> int:
    """[Q(J_q(a)) : Q], as the number of distinct J_q(s a) over units s."""
    return len({jacobi_sum(ctx, a.scale(s)) for s in units(a.d)})
