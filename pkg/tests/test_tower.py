
import pytest
from hypothesis import given, strategies as st

from stickelberger.errors import PreconditionError
from stickelberger.stickel import units
from stickelberger.tower import s_primes, s_products, tower_rank, tower_tuple, verify_nonisol


@pytest.mark.parametrize("p,d", [(23, 11), (23, 121), (29, 7), (29, 49)])
def test_rank_zero_on_s_products(p, d):
    rep = tower_rank(p, d)
    assert rep.rank == 0 and rep.degenerate_count == 0 and rep.d_is_s_product


@pytest.mark.parametrize("p,d,rank", [(2, 13, 12), (3, 7, 6)])
def test_full_rank_when_minus_one_is_a_power_of_p(p, d, rank):
    rep = tower_rank(p, d)
    assert rep.rank == rank and rep.degenerate_count == 0


def test_five_is_reported_not_asserted():
    rep = tower_rank(11, 25)
    assert rep.rank == 24 and rep.degenerate_count == 4
    assert tower_rank(11, 5).degenerate_count == 4


@given(st.sampled_from([(2, 13), (5, 13), (7, 11), (13, 11), (29, 7), (2, 35), (3, 11)]), st.data())
def test_supersingular_set_stable_under_units(pd, data):
    p, d = pd
    rep = tower_rank(p, d)
    s = data.draw(st.sampled_from(units(d)))
    assert sorted(t * s % d for t in rep.supersingular_t) == rep.supersingular_t


def test_parallel_matches_serial():
    assert tower_rank(7, 143, workers=2).supersingular_t == tower_rank(7, 143, workers=1).supersingular_t


def test_s_primes_and_products():
    assert s_primes(23) == [11]
    assert s_primes(2) == []
    assert s_products(29, 50) == [7, 49]
    assert s_products(31, 30) == [5, 25]


def test_verify_nonisol():
    assert verify_nonisol(2, 50) == []
    rows = verify_nonisol(23, 130)
    assert [r["d"] for r in rows] == [11, 121]
    assert all(r["asserted"] and r["holds"] for r in rows)
    rows = verify_nonisol(11, 30)
    assert all(not r["asserted"] and "caveat" in r for r in rows)


def test_tower_tuple():
    assert tower_tuple(11, 1).comps == (1, 5, 2, 3)


@pytest.mark.parametrize("p,d", [(23, 6), (5, 15), (4, 7), (7, 1)])
def test_preconditions(p, d):
    with pytest.raises(PreconditionError):
        tower_rank(p, d)
