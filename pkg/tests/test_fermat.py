from itertools import product

import pytest
from sympy import divisors, primerange

from stickelberger.charsum import fermat_count_naive
from stickelberger.errors import PreconditionError
from stickelberger.fermat import enumerate_tuples, galois_orbits, new_old_dims, p_rank, zeta_numerator
from stickelberger.ff import make_field


def _brute_projective_count(p, d):
    """Points of x^d + y^d + z^d = 0 over a prime field, by direct enumeration."""
    pts = 0
    for x, y, z in product(range(p), repeat=3):
        if (x, y, z) != (0, 0, 0) and (pow(x, d, p) + pow(y, d, p) + pow(z, d, p)) % p == 0:
            pts += 1
    return pts // (p - 1)


@pytest.mark.parametrize("p,d", [(7, 3), (13, 3), (13, 4), (13, 6), (11, 5), (5, 4)])
def test_naive_count_matches_brute_force(p, d):
    assert fermat_count_naive(make_field(p), d) == _brute_projective_count(p, d)


@pytest.mark.parametrize("p,f,d", [(2, 2, 3), (7, 1, 3), (13, 1, 4), (2, 4, 5), (7, 2, 6), (3, 2, 8)])
def test_zeta_counts_over_extensions(p, f, d):
    ctx = make_field(p, f)
    z = zeta_numerator(ctx, d)
    assert z.count(1) == fermat_count_naive(ctx, d)
    if ctx.q ** 2 <= 4096:
        assert z.count(2) == fermat_count_naive(make_field(p, 2 * f), d)
    for k in (1, 2, 3):
        assert z.power_sum(k) == z.power_sum_direct(k)


def test_zeta_json_shape():
    out = zeta_numerator(make_field(2, 2), 3).to_json(max_k=2)
    assert out["counts"][0] == "9" and out["genus"] == 1


@pytest.mark.parametrize("d", range(1, 51))
def test_tuple_counts(d):
    assert len(enumerate_tuples(d, 1)) == (d - 1) * (d - 2)
    assert sum(len(enumerate_tuples(e, 1, primitive_only=True)) for e in divisors(d)) == (d - 1) * (d - 2)


def test_orbits_partition():
    ts = enumerate_tuples(12, 1)
    orbits = galois_orbits(ts)
    assert sum(len(o) for o in orbits) == len(ts)
    assert len({t.comps for o in orbits for t in o}) == len(ts)


def test_p_rank_values():
    assert p_rank(7, 3).p_rank == 1
    assert p_rank(2, 3).p_rank == 0
    assert p_rank(2, 5).p_rank == 0


@pytest.mark.parametrize("d", [3, 4, 5, 7, 8, 9])
def test_p_rank_zero_when_minus_one_is_a_power_of_p(d):
    for p in primerange(2, 60):
        if d % p == 0:
            continue
        f = 1
        while pow(p, f, d) != 1:
            f += 1
        has_minus_one = any(pow(p, k, d) == d - 1 for k in range(f))
        if has_minus_one:
            assert p_rank(p, d).p_rank == 0


@pytest.mark.parametrize("d", [3, 5, 7])
def test_ordinary_when_p_is_one_mod_d(d):
    for p in primerange(2, 80):
        if p % d == 1:
            rep = p_rank(p, d)
            assert rep.p_rank == rep.genus


def test_new_old_dims():
    assert new_old_dims(4) == {"d": 4, "genus": 3, "dim_new": 3, "dim_sum_over_divisors": 3}
    assert new_old_dims(6)["genus"] == 10


def test_preconditions():
    with pytest.raises(PreconditionError):
        zeta_numerator(make_field(7), 4)
    with pytest.raises(PreconditionError):
        p_rank(3, 6)
