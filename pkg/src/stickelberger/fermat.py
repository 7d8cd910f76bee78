"""Fermat curves x^d + y^d + z^d = 0: tuple sets, zeta data, p-rank, new parts."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from sympy import divisors

from .charsum import TupleA, jacobi_sum
from .cyclo import CycloElem, galois_apply
from .errors import PreconditionError
from .ff import FieldCtx
from .stickel import frac_val_sum, multiplicative_order, units


def enumerate_tuples(d: int, w: int = 1, primitive_only: bool = False) -> list[TupleA]:
    """All of A_{d,w} (or A'_{d,w}) in lexicographic order."""
    if d < 1 or w < 1:
        raise PreconditionError("need d >= 1 and w >= 1")
    out = []
    for head in product(range(1, d), repeat=w + 1):
        last = (-sum(head)) % d
        if last == 0:
            continue
        comps = head + (last,)
        if primitive_only and math.gcd(d, *comps) != 1:
            continue
        out.append(TupleA(d, comps))
    return out


def galois_orbits(tuples: list[TupleA]) -> list[list[TupleA]]:
    """Partition into orbits under a -> s a, s a unit mod d."""
    remaining = {t.comps: t for t in tuples}
    orbits = []
    for t in tuples:
        if t.comps not in remaining:
            continue
        orbit = {}
        for s in units(t.d):
            u = t.scale(s)
            if u.comps in remaining:
                orbit[u.comps] = remaining.pop(u.comps)
        orbits.append(list(orbit.values()))
    return orbits


@dataclass
class ZetaData:
    """Numerator data of Z(F_d / F_q, T) = prod(1 - alpha T) / ((1-T)(1-qT)).

    The Frobenius eigenvalues are alpha(a) = -J_q(a) for a in A_{d,1}
    (with J_q the definitional Jacobi sum; the count is q+1 - sum alpha).
    """

    d: int
    q: int
    genus: int
    tuples: list[TupleA]
    jacobi: list[CycloElem]
    orbit_reps: list[TupleA] = field(default_factory=list)
    orbit_sizes: list[int] = field(default_factory=list)

    @property
    def eigenvalues(self) -> list[CycloElem]:
        return [-j for j in self.jacobi]

    def power_sum(self, k: int) -> int:
        """s_k = sum alpha^k, summed orbit by orbit through the field trace."""
        total = 0
        for rep, size in zip(self.orbit_reps, self.orbit_sizes):
            alpha = -self.jacobi[self._index[rep.comps]]
            tr = (alpha ** k).trace()
            stab = len(units(self.d)) // size
            total += tr // stab
        return total

    def power_sum_direct(self, k: int) -> int:
        if not self.jacobi:
            return 0
        total = sum((alpha ** k for alpha in self.eigenvalues), CycloElem.integer(self.d, 0))
        if not total.is_rational():
            raise ArithmeticError("power sum is not a rational integer")
        return total.coeffs[0]

    def count(self, k: int = 1) -> int:
        """N_k = #F_d(F_{q^k}) = q^k + 1 - s_k."""
        return self.q**k + 1 - self.power_sum(k)

    @cached_property
    def _index(self):
        return {t.comps: i for i, t in enumerate(self.tuples)}

    def to_json(self, max_k: int = 1) -> dict:
        return {
            "d": self.d,
            "q": self.q,
            "genus": self.genus,
            "orbits": [
                {"representative": list(rep.comps), "size": size,
                 "jacobi": self.jacobi[self._index[rep.comps]].to_json()}
                for rep, size in zip(self.orbit_reps, self.orbit_sizes)
            ],
            "eigenvalues": [{"tuple": list(t.comps), "value": e.to_json()}
                            for t, e in zip(self.tuples, self.eigenvalues)],
            "power_sums": [str(self.power_sum(k)) for k in range(1, max_k + 1)],
            "counts": [str(self.count(k)) for k in range(1, max_k + 1)],
        }


def zeta_numerator(ctx: FieldCtx, d: int) -> ZetaData:
    if d < 1 or (ctx.q - 1) % d:
        raise PreconditionError(f"d={d} does not divide q-1 = {ctx.q - 1}")
    tuples = enumerate_tuples(d, 1)
    values = [None] * len(tuples)
    index = {t.comps: i for i, t in enumerate(tuples)}
    reps, sizes = [], []
    for orbit in galois_orbits(tuples):
        rep = orbit[0]
        j = jacobi_sum(ctx, rep)
        reps.append(rep)
        sizes.append(len(orbit))
        for s in units(d):
            u = rep.scale(s)
            if values[index[u.comps]] is None:
                values[index[u.comps]] = galois_apply(j, s)
    genus = (d - 1) * (d - 2) // 2
    return ZetaData(d, ctx.q, genus, tuples, values, reps, sizes)


@dataclass(frozen=True)
class PRankReport:
    p: int
    d: int
    f: int
    p_rank: int
    new_p_rank: int
    genus: int


def p_rank(p: int, d: int) -> PRankReport:
    """Count of unit eigenvalues at the fixed prime over F_{p^f}, f = ord_d(p)."""
    if d % p == 0:
        raise PreconditionError(f"p={p} divides d={d}")
    f = multiplicative_order(p, d)
    rank = new = 0
    for t in enumerate_tuples(d, 1):
        if frac_val_sum(p, f, d, t.comps) == 0:
            rank += 1
            if t.primitive:
                new += 1
    return PRankReport(p, d, f, rank, new, (d - 1) * (d - 2) // 2)


def new_old_dims(d: int) -> dict:
    """genus(d), dim of the new part, and the sum of new dims over divisors."""
    if d < 1:
        raise PreconditionError("d must be >= 1")

    def dim_new(e):
        return len(enumerate_tuples(e, 1, primitive_only=True)) // 2

    genus = (d - 1) * (d - 2) // 2
    old_sum = sum(dim_new(e) for e in divisors(d))
    if old_sum != genus:
        raise ArithmeticError(f"new dimensions over divisors of {d} sum to {old_sum}, not {genus}")
    return {"d": d, "genus": genus, "dim_new": dim_new(d), "dim_sum_over_divisors": old_sum}
