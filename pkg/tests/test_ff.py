import pytest
from hypothesis import given, strategies as st
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem

from stickelberger.errors import PreconditionError
from stickelberger.ff import PadicRing, dlog, make_field, primitive_modulus, teichmuller_lift

FIELDS = [(2, 1), (2, 3), (2, 4), (3, 2), (5, 1), (5, 2), (7, 1), (7, 2), (11, 1), (13, 1)]


def _oracle_mul(ctx, a, b):
    """Schoolbook product of the coefficient vectors, reduced by the modulus (sympy)."""
    ca = [ZZ(c) for c in reversed(ctx.coeffs(a))]
    cb = [ZZ(c) for c in reversed(ctx.coeffs(b))]
    mod = [ZZ(c) for c in reversed(ctx.modulus)]
    r = gf_rem(gf_mul(ca, cb, ctx.p, ZZ), mod, ctx.p, ZZ)
    r = [int(c) for c in reversed(r)]
    return ctx.element(r + [0] * (ctx.f - len(r)))


def test_small_prime_field_tables():
    ctx = make_field(5)
    assert ctx.generator == 3
    assert dlog(ctx, 4) == 2
    assert [int(x) for x in ctx.exp_table] == [1, 3, 4, 2]


def test_f16_modulus_is_smallest_primitive():
    assert primitive_modulus(2, 4) == (1, 0, 0, 1, 1)


@pytest.mark.parametrize("p,f", FIELDS)
def test_modulus_is_irreducible_and_generator_has_full_order(p, f):
    ctx = make_field(p, f)
    assert gf_irreducible_p([ZZ(c) for c in reversed(ctx.modulus)], p, ZZ)
    assert len(set(int(x) for x in ctx.exp_table)) == ctx.q - 1
    assert int(ctx.log_table[0]) == -1


@pytest.mark.parametrize("p,f", FIELDS)
def test_multiplication_matches_polynomial_oracle(p, f):
    ctx = make_field(p, f)
    for a in range(ctx.q):
        for b in range(0, ctx.q, max(1, ctx.q // 17)):
            assert ctx.mul(a, b) == _oracle_mul(ctx, a, b)


def test_determinism():
    a, b = make_field(3, 3), make_field(3, 3, table_bound=10**6)
    assert a.modulus == b.modulus and a.fingerprint() == b.fingerprint()


@pytest.mark.parametrize("p,f", [(4, 1), (1, 1), (2, 0)])
def test_bad_parameters(p, f):
    with pytest.raises(PreconditionError):
        make_field(p, f)


def test_table_bound():
    with pytest.raises(PreconditionError):
        make_field(2, 10, table_bound=512)


@given(st.sampled_from(FIELDS), st.data())
def test_dlog_homomorphism(pf, data):
    ctx = make_field(*pf)
    x = data.draw(st.integers(1, ctx.q - 1))
    y = data.draw(st.integers(1, ctx.q - 1))
    assert dlog(ctx, ctx.mul(x, y)) == (dlog(ctx, x) + dlog(ctx, y)) % (ctx.q - 1)
    assert ctx.mul(x, ctx.inv(x)) == 1


@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(pf, data):
    ctx = make_field(*pf)
    x, y, z = (data.draw(st.integers(0, ctx.q - 1)) for _ in range(3))
    assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))
    assert ctx.add(x, ctx.neg(x)) == 0
    assert ctx.pow(x, ctx.q) == x


@pytest.mark.parametrize("p,f", FIELDS)
def test_trace_is_additive_and_frobenius_invariant(p, f):
    ctx = make_field(p, f)
    for x in range(0, ctx.q, max(1, ctx.q // 11)):
        assert ctx.trace(x) == ctx.trace(ctx.pow(x, p))
        assert ctx.trace(ctx.add(x, 1)) == (ctx.trace(x) + f) % p


def test_minus_one_logs():
    ctx = make_field(7)
    L = ctx.minus_one_logs()
    assert int(L[0]) == -1
    for k in range(1, 6):
        x = int(ctx.exp_table[k])
        assert int(L[k]) == dlog(ctx, ctx.sub(1, x))


def test_teichmuller_small_case():
    ctx = make_field(5)
    lift = teichmuller_lift(ctx, 2, 3)
    assert lift.coeffs[0] % 125 == 57


@pytest.mark.parametrize("p,f", [(2, 3), (3, 2), (5, 2), (7, 1)])
def test_teichmuller_is_root_of_unity_lifting_x(p, f):
    ctx = make_field(p, f)
    N = 4
    R = PadicRing(ctx, N)
    for x in range(1, ctx.q, max(1, ctx.q // 7)):
        y = teichmuller_lift(ctx, x, N)
        assert R.reduce(y) == x
        assert R.pow(y, ctx.q - 1) == R.scalar(1)
