"""Ranks of E: y^2 + xy = x^3 - t over Fbar_p(t^(1/d)) by supersingular counting."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from sympy import factorint, isprime, primerange

from .charsum import TupleA
from .errors import PreconditionError
from .parallel import parallel_map
from .stickel import is_supersingular

TOWER_PATTERN = (1, -6, 2, 3)


def tower_tuple(d: int, t: int) -> TupleA:
    return TupleA(d, tuple(c * t for c in TOWER_PATTERN))


def s_primes(p: int, bound: int | None = None) -> list[int]:
    """Primes ell > 3 with p = 1 mod ell (optionally ell <= bound)."""
    top = p - 1 if bound is None else min(p - 1, bound)
    return [ell for ell in primerange(5, top + 1) if (p - 1) % ell == 0]


@dataclass
class TowerRankReport:
    p: int
    d: int
    supersingular_t: list[int]
    rank: int
    degenerate_count: int
    s_set: list[int]
    d_is_s_product: bool
    degenerate_t: list[int] = field(default_factory=list)

    @property
    def nondegenerate_rank(self) -> int:
        return self.rank - self.degenerate_count

    def to_json(self) -> dict:
        out = asdict(self)
        out["degenerate"] = out.pop("degenerate_count")
        out["nondegenerate_rank"] = self.nondegenerate_rank
        return out


def _classify(args):
    p, d, t = args
    v = is_supersingular(p, tower_tuple(d, t), early_exit=True)
    return t, v.verdict, v.degenerate


def tower_rank(p: int, d: int, workers: int = 1) -> TowerRankReport:
    """Count t in Z/d - {0} with (t, -6t, 2t, 3t) supersingular.

    Degenerate tuples are counted in ``rank`` and listed separately.
    """
    if not isprime(p):
        raise PreconditionError(f"{p} is not prime")
    if d < 2 or math.gcd(d, 6 * p) != 1:
        raise PreconditionError(f"need d > 1 with gcd(d, 6p) = 1, got d={d}, p={p}")
    results = parallel_map(_classify, [(p, d, t) for t in range(1, d)], workers)
    ss = [t for t, verdict, _ in results if verdict]
    degenerate = [t for t, verdict, degen in results if verdict and degen]
    primes = sorted(factorint(d))
    s_set = s_primes(p)
    return TowerRankReport(
        p=p,
        d=d,
        supersingular_t=ss,
        rank=len(ss),
        degenerate_count=len(degenerate),
        s_set=[ell for ell in primes if ell in s_set],
        d_is_s_product=all(ell in s_set for ell in primes),
        degenerate_t=degenerate,
    )


def s_products(p: int, d_max: int) -> list[int]:
    """All d in (1, d_max] whose prime factors lie in S(p)."""
    out = {1}
    for ell in s_primes(p, d_max):
        for base in sorted(out):
            x = base * ell
            while x <= d_max:
                out.add(x)
                x *= ell
    return sorted(out - {1})


def verify_nonisol(p: int, d_max: int, workers: int = 1) -> list[dict]:
    """Tower ranks for every S-product d <= d_max.

    Rows whose d involves 5 carry a caveat and are not asserted: there the
    pattern (t, -6t, 2t, 3t) is (t, -t, 2t, -2t) mod 5 and can be degenerate.
    """
    if not isprime(p):
        raise PreconditionError(f"{p} is not prime")
    rows = []
    for d in s_products(p, d_max):
        rep = tower_rank(p, d, workers)
        row = {"d": d, "rank": rep.rank, "degenerate": rep.degenerate_count}
        if d % 5 == 0:
            row["caveat"] = "d divisible by 5: degenerate tuples possible; rank not asserted"
            row["asserted"] = False
        else:
            row["asserted"] = True
            row["holds"] = rep.rank == 0
        rows.append(row)
    return rows
