import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from stickelberger.charsum import TupleA, jacobi_sum, jacobi_sum_naive
from stickelberger.cyclo import padic_ord
from stickelberger.errors import PreconditionError
from stickelberger.fermat import enumerate_tuples
from stickelberger.ff import make_field
from stickelberger.stickel import (
    compare_valuation, frac_val_sum, generated_subgroup, is_degenerate, is_supersingular,
    jacobi_degree, level_lower, level_lowering_identity, multiplicative_order,
    orbit_valuations_match, subgroup_average, units,
)


def test_gauss_mode_hand_values():
    assert frac_val_sum(7, 1, 3, 1) == 2
    assert frac_val_sum(7, 1, 3, 2) == 4
    assert frac_val_sum(2, 2, 3, 1) == 1  # <1/3> + <2/3> = 1


def test_jacobi_mode_hand_values():
    assert frac_val_sum(7, 1, 3, (1, 1, 1)) == 0
    assert frac_val_sum(7, 1, 3, (2, 2, 2)) == 1
    assert frac_val_sum(2, 2, 3, (1, 1, 1)) == 1


@pytest.mark.parametrize("p,f,d", [(7, 1, 3), (13, 1, 4), (2, 4, 5), (3, 2, 8), (2, 3, 7), (11, 1, 5)])
def test_formula_matches_naive_sum_valuation(p, f, d):
    ctx = make_field(p, f)
    for t in enumerate_tuples(d, 1):
        v = padic_ord(jacobi_sum_naive(ctx, t), ctx, f + 2)
        assert v == frac_val_sum(p, f, d, t.comps)


@pytest.mark.parametrize("p,f,d", [(5, 2, 8), (2, 6, 9), (3, 4, 10)])
def test_compare_and_orbit_fallback(p, f, d):
    ctx = make_field(p, f)
    for t in enumerate_tuples(d, 1, primitive_only=True)[:12]:
        assert compare_valuation(ctx, t).agrees
        assert orbit_valuations_match(ctx, t)


@given(st.integers(2, 60).flatmap(lambda d: st.tuples(st.just(d), st.lists(
    st.integers(1, d - 1), min_size=3, max_size=5))))
def test_valuation_range_and_scaling_by_p(args):
    d, head = args
    last = (-sum(head)) % d
    assume(last != 0)
    comps = tuple(head) + (last,)
    for p in (2, 3, 5, 7):
        if d % p == 0:
            continue
        f = multiplicative_order(p, d)
        w = len(comps) - 2
        v = frac_val_sum(p, f, d, comps)
        assert 0 <= v <= w * f
        # replacing a by p*a permutes the inner sums
        assert frac_val_sum(p, f, d, tuple(p * a % d for a in comps)) == v


def test_supersingular_small():
    v = is_supersingular(2, TupleA(5, (1, 1, 1, 2)))
    assert v.verdict and not v.degenerate
    assert is_supersingular(2, TupleA(3, (1, 1, 2, 2))).degenerate


@pytest.mark.parametrize("p,f,d", [(7, 1, 3), (5, 1, 4), (13, 1, 4), (2, 2, 3), (2, 4, 5), (3, 2, 8)])
def test_supersingular_iff_q_times_root_of_unity(p, f, d):
    ctx = make_field(p, f)
    order = 2 * d if d % 2 else d
    for t in enumerate_tuples(d, 2):
        j = jacobi_sum(ctx, t)
        assert is_supersingular(p, t).verdict == (j ** order == ctx.q ** (2 * order // 2)), t


@given(st.sampled_from([(2, 13), (3, 7), (5, 7), (2, 21), (11, 13)]), st.data())
def test_verdict_invariant_under_units(pd, data):
    p, d = pd
    comps = data.draw(st.lists(st.integers(1, d - 1), min_size=3, max_size=3))
    last = (-sum(comps)) % d
    assume(last)
    t = TupleA(d, tuple(comps) + (last,))
    s = data.draw(st.sampled_from(units(d)))
    assert is_supersingular(p, t).verdict == is_supersingular(p, t.scale(s)).verdict


def test_degenerate():
    assert is_degenerate((1, 4, 2, 3), 5)
    assert not is_degenerate((1, 1, 1, 2), 5)


def _admissible():
    def build(d_ell):
        d, ell = d_ell
        return st.lists(st.integers(1, d - 1).filter(lambda a: a % ell), min_size=3, max_size=3).map(
            lambda c: (d, ell, c))
    pairs = [(k * l * l, l) for l in (2, 3, 5, 7) for k in range(1, 500 // (l * l) + 1)]
    return st.sampled_from(pairs).flatmap(build)


@given(_admissible())
def test_level_lowering_identity(args):
    d, ell, comps = args
    for a in comps:
        lhs, rhs = level_lowering_identity(d, ell, a)
        assert lhs == rhs


@given(_admissible(), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_level_lowering_preserves_supersingular(args, p):
    d, ell, comps = args
    last = (-sum(comps)) % d
    assume(last % ell and d % p)
    rep = level_lower(d, ell, TupleA(d, tuple(comps) + (last,)), p=p)
    assert rep.identity_holds and rep.preserves_supersingular


def test_level_lowering_preconditions():
    with pytest.raises(PreconditionError):
        level_lowering_identity(12, 3, 1)
    with pytest.raises(PreconditionError):
        level_lowering_identity(18, 3, 3)


def test_subgroup_helpers():
    assert generated_subgroup(8, [3]) == [1, 3]
    assert subgroup_average(8, [3], 1) == Fraction(1, 4)
    assert subgroup_average(7, [3], 2) == Fraction(1, 2)


def test_jacobi_degree():
    assert jacobi_degree(make_field(7), TupleA(3, (1, 1, 1))) == 2
    assert jacobi_degree(make_field(2, 2), TupleA(3, (1, 1, 1))) == 1


def test_multiplicative_order():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(3, 1) == 1
    assert all(math.gcd(u, 12) == 1 for u in units(12))
