"""Exact scans of subgroup averages of fractional parts.

Subgroups of index <= n in G = (Z/dZ)^x are found as annihilators of the
subgroups of order <= n in the character group, using a cyclic
decomposition of G.  Averages are exact; the only floating point here is in
the clearly labelled fit and log-ratio outputs.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np
from sympy import factorint, primitive_root, totient

from .errors import PreconditionError
from .ff import make_field
from .fermat import enumerate_tuples, galois_orbits
from .stickel import frac_val_sum, generated_subgroup, jacobi_degree, multiplicative_order

DEFAULT_D_LIMIT = 5000


# -- structure of (Z/dZ)^x ---------------------------------------------------

def _crt_lift(x: int, mod: int, d: int) -> int:
    """The unit congruent to x mod ``mod`` and to 1 mod d/mod."""
    rest = d // mod
    if rest == 1:
        return x % d
    # y = x + mod*k with y = 1 mod rest
    k = ((1 - x) * pow(mod, -1, rest)) % rest
    return (x + mod * k) % d


def cyclic_decomposition(d: int) -> list[tuple[int, int]]:
    """[(generator, order)] with G = prod of the cyclic groups they generate."""
    parts = []
    for ell, e in factorint(d).items():
        pe = ell**e
        if ell == 2:
            if e == 2:
                parts.append((_crt_lift(3, pe, d), 2))
            elif e >= 3:
                parts.append((_crt_lift(pe - 1, pe, d), 2))
                parts.append((_crt_lift(5, pe, d), 2 ** (e - 2)))
        else:
            parts.append((_crt_lift(int(primitive_root(pe)), pe, d), pe // ell * (ell - 1)))
    return parts


@dataclass(frozen=True)
class UnitGroup:
    d: int
    gens: tuple[int, ...]
    orders: tuple[int, ...]
    elements: np.ndarray  # element with coordinate vector coords[i]
    coords: np.ndarray


@lru_cache(maxsize=128)
def unit_group(d: int) -> UnitGroup:
    dec = cyclic_decomposition(d)
    gens = tuple(g for g, _ in dec)
    orders = tuple(n for _, n in dec)
    coords = list(product(*(range(n) for n in orders))) or [()]
    elems = []
    for c in coords:
        x = 1 % d
        for g, e in zip(gens, c):
            x = x * pow(g, e, d) % d
        elems.append(x)
    coords_arr = np.array(coords, dtype=np.int64).reshape(len(coords), len(orders))
    return UnitGroup(d, gens, orders, np.array(elems, dtype=np.int64), coords_arr)


def _char_order(c, orders) -> int:
    out = 1
    for ci, ni in zip(c, orders):
        out = math.lcm(out, ni // math.gcd(ci, ni))
    return out


def _char_span(gens, orders) -> frozenset:
    elems = {tuple(0 for _ in orders)}
    frontier = list(elems)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = tuple((a + b) % n for a, b, n in zip(x, g, orders))
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return frozenset(elems)


def small_character_groups(orders, n: int) -> list[tuple[tuple, ...]]:
    """Generating sets of all subgroups of order <= n in prod Z/orders[i]."""
    small = [c for c in product(*(range(k) for k in orders)) if 1 < _char_order(c, orders) <= n]
    seen = {frozenset({tuple(0 for _ in orders)}): ()}
    frontier = list(seen.items())
    while frontier:
        span, gens = frontier.pop()
        for c in small:
            if c in span:
                continue
            new = _char_span(gens + (c,), orders)
            if len(new) <= n and new not in seen:
                seen[new] = gens + (c,)
                frontier.append((new, gens + (c,)))
    return list(seen.values())


def subgroups_of_small_index(d: int, n: int) -> list[np.ndarray]:
    """Every subgroup H of (Z/dZ)^x with [G:H] <= n, as sorted element arrays."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if d > DEFAULT_D_LIMIT:
        raise PreconditionError(f"d={d} exceeds the subgroup enumeration limit {DEFAULT_D_LIMIT}")
    if d <= 2:
        return [np.array([1 % d], dtype=np.int64)]
    G = unit_group(d)
    L = math.lcm(*G.orders)
    scale = np.array([L // k for k in G.orders], dtype=np.int64)
    out = []
    for chars in small_character_groups(G.orders, n):
        mask = np.ones(len(G.elements), dtype=bool)
        for c in chars:
            mask &= (G.coords @ (np.array(c, dtype=np.int64) * scale)) % L == 0
        out.append(np.sort(G.elements[mask]))
    return out


def subgroup_generators(d: int, H) -> list[int]:
    """A small generating set of the subgroup H (greedy)."""
    target = set(int(x) for x in H)
    gens: list[int] = []
    span = {1 % d}
    for x in sorted(target):
        if x not in span:
            gens.append(x)
            span = set(generated_subgroup(d, gens))
        if span == target:
            break
    return gens


# -- scans -------------------------------------------------------------------

@dataclass(frozen=True)
class ScanRow:
    d: int
    n: int
    value: Fraction
    gens: tuple[int, ...]
    a: int

    def to_json(self) -> dict:
        return {"d": self.d, "n": self.n, "value": f"{self.value.numerator}/{self.value.denominator}",
                "witness": {"gens": list(self.gens), "a": self.a}}


def _coset_sums(d: int, H: np.ndarray, residues: np.ndarray) -> np.ndarray:
    return ((residues[:, None] * H[None, :]) % d).sum(axis=1)


def estimate_row(d: int, n: int) -> ScanRow:
    """max over index-<=n H and units a of |avg_H <ta/d> - 1/2|."""
    if d < 2:
        raise PreconditionError("d must be >= 2")
    G = np.sort(unit_group(d).elements) if d > 2 else np.array([1], dtype=np.int64)
    best = None
    for H in subgroups_of_small_index(d, n):
        S = _coset_sums(d, H, G)
        dev = np.abs(2 * S - d * len(H))
        i = int(np.argmax(dev))
        val = Fraction(int(dev[i]), 2 * d * len(H))
        if best is None or val > best[0]:
            best = (val, H, int(G[i]))
    val, H, a = best
    return ScanRow(d, n, val, tuple(subgroup_generators(d, H)), a)


def basic_estimate_scan(d_range, n: int) -> list[ScanRow]:
    return [estimate_row(d, n) for d in d_range]


def delta_row(d: int, n: int) -> ScanRow:
    """min over index-<=n H and nonzero a mod d of avg_H <ta/d>."""
    residues = np.arange(1, d, dtype=np.int64)
    best = None
    for H in subgroups_of_small_index(d, n):
        S = _coset_sums(d, H, residues)
        i = int(np.argmin(S))
        val = Fraction(int(S[i]), d * len(H))
        if best is None or val < best[0]:
            best = (val, H, int(residues[i]))
    val, H, a = best
    return ScanRow(d, n, val, tuple(subgroup_generators(d, H)), a)


def delta_scan(d_max: int, n: int) -> ScanRow:
    """Empirical delta_n over 2 <= d <= d_max, with its witness."""
    best = None
    for d in range(2, d_max + 1):
        row = delta_row(d, n)
        if best is None or row.value < best.value:
            best = row
    return ScanRow(best.d, n, best.value, best.gens, best.a)


def polya_vinogradov_fit(rows: list[ScanRow]) -> float:
    """Smallest C with value <= C n sqrt(d) log d / phi(d) on every row (report only)."""
    c = 0.0
    for r in rows:
        if r.d > 2:
            c = max(c, float(r.value) * int(totient(r.d)) / (r.n * math.sqrt(r.d) * math.log(r.d)))
    return c


# -- two large d_i -------------------------------------------------------------

def _largest_prime_powers(limit: int) -> list[int]:
    spf = list(range(limit + 1))
    for i in range(2, int(limit**0.5) + 1):
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
    out = [0, 1] + [0] * (limit - 1)
    for d in range(2, limit + 1):
        x, best = d, 1
        while x > 1:
            ell, pe = spf[x], 1
            while x % ell == 0:
                x //= ell
                pe *= ell
            best = max(best, pe)
        out[d] = best
    return out


def _sample_tuples(d: int, w: int, k: int, rng: random.Random, lpp: int) -> list[tuple[int, ...]]:
    out = []
    # structured candidate: one component divisible by the largest prime power
    head = (lpp % d,) + (1,) * w
    last = (-sum(head)) % d
    if head[0] and last:
        out.append(head + (last,))
    tries = 0
    while len(out) < k and tries < 20 * k:
        tries += 1
        head = tuple(rng.randrange(1, d) for _ in range(w + 1))
        last = (-sum(head)) % d
        comps = head + (last,)
        if last and math.gcd(d, *comps) == 1:
            out.append(comps)
    return out


def two_large_di_check(d_max: int, w: int = 1, samples: int = 4, seed: int = 0) -> dict:
    """Largest prime power of d divides at least two d_i = d / gcd(d, a_i).

    Checks a seeded sample of primitive tuples per d in [3, d_max].  The
    ratio (largest prime power)/log d is reported as a float.
    """
    rng = random.Random(seed)
    lpp = _largest_prime_powers(d_max)
    checked = violations = 0
    first_violation = None
    min_ratio, argmin = math.inf, None
    for d in range(3, d_max + 1):
        ratio = lpp[d] / math.log(d)
        if ratio < min_ratio:
            min_ratio, argmin = ratio, d
        for comps in _sample_tuples(d, w, samples, rng, lpp[d]):
            checked += 1
            hits = sum(1 for a in comps if (d // math.gcd(d, a)) % lpp[d] == 0)
            if hits < 2:
                violations += 1
                first_violation = first_violation or (d, comps)
    return {"d_max": d_max, "w": w, "checked": checked, "violations": violations,
            "first_violation": first_violation, "min_ratio": min_ratio, "argmin_d": argmin}


def d_values(comps, d: int) -> list[int]:
    return [d // math.gcd(d, a) for a in comps]


# -- low degree valuations -----------------------------------------------------

def low_degree_valuation_scan(p: int, d_list, n: int, q_bound: int = 10**4) -> list[dict]:
    """Per d: min of ord/f over primitive w=1 tuples whose Jacobi sum has degree <= n."""
    rows = []
    for d in d_list:
        if d % p == 0 or d < 3:
            rows.append({"d": d, "skipped": "p divides d or d < 3"})
            continue
        f = multiplicative_order(p, d)
        q = p**f
        if q > q_bound:
            rows.append({"d": d, "skipped": f"q = {p}^{f} exceeds {q_bound}"})
            continue
        ctx = make_field(p, f)
        best = None
        witness = None
        for orbit in galois_orbits(enumerate_tuples(d, 1, primitive_only=True)):
            if jacobi_degree(ctx, orbit[0]) > n:
                continue
            for t in orbit:
                v = Fraction(frac_val_sum(p, f, d, t.comps), f)
                if best is None or v < best:
                    best, witness = v, t
        rows.append({"d": d, "q": q, "min": best, "witness": witness})
    return rows
