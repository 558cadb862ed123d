import pytest

from polyan.exceptions import NotInvertibleError, PreconditionError, ReducibleError
from polyan.gf2poly import order_of_t
from polyan.intpoly import IntPoly
from polyan.modring import (RingCtx, invert, order_of_t_brute, power, power_of_t, reverse,
                            rho_w, ring_mul)

from oracles import brute_ring_order_of_t, int_poly_mod, int_poly_mul, irreducible_patterns

IRRED_10 = irreducible_patterns(10)
IRRED_16 = [q for q in irreducible_patterns(16) if q.bit_length() > 11]


def random_lift(rng, bits):
    """Integer polynomial congruent to ``bits`` mod 2, coefficients in {-1,0,1,2,3}."""
    r = bits.bit_length() - 1
    return IntPoly([rng.choice((-1, 1, 3)) if bits >> j & 1 else rng.choice((0, 2))
                    for j in range(r + 1)])


def random_elem(rng, ctx):
    return ctx.element([rng.getrandbits(ctx.w) for _ in range(ctx.r)])


def test_reverse_examples(rng):
    assert reverse(IntPoly([1, -1, 1])) == IntPoly([1, -1, 1])
    assert reverse(IntPoly([1, 1, 0, 0, 1])) == IntPoly([1, 0, 0, 1, 1])
    with pytest.raises(ValueError):
        reverse(IntPoly([0, 1, 1]))
    for _ in range(10_000):
        c = [rng.randint(-3, 3) for _ in range(rng.randint(1, 12))]
        c[0] = c[0] or 1
        c[-1] = c[-1] or 1
        q = IntPoly(c)
        assert reverse(reverse(q)) == q


def test_ctx_rejects_even_ends():
    with pytest.raises(PreconditionError):
        RingCtx(IntPoly([2, 1, 1]), 4)
    with pytest.raises(PreconditionError):
        RingCtx(IntPoly([1, 1, 2]), 4)


def test_ring_mul_example():
    ctx = RingCtx(IntPoly([1, -1, 1]), 2)
    assert ring_mul(ctx.t(), ctx.t()).to_list() == [3, 1]
    assert int_poly_mod([0, 0, 1], [1, -1, 1], 4) == [3, 1]
    a = ctx.element([2, 3])
    assert ring_mul(a, ctx.one()) == a


@pytest.mark.parametrize("w", [1, 5, 32, 63, 64])
def test_ring_mul_matches_oracle(rng, w):
    for _ in range(200):
        q = random_lift(rng, rng.choice(IRRED_10))
        if q.degree < 1:
            continue
        ctx = RingCtx(q, w)
        a, b = random_elem(rng, ctx), random_elem(rng, ctx)
        want = int_poly_mod(int_poly_mul(a.to_list(), b.to_list()), list(q.coeffs), 1 << w)
        assert ring_mul(a, b).to_list() == want


def test_ring_mul_commutes(rng):
    for _ in range(10_000):
        ctx = RingCtx(random_lift(rng, rng.choice(IRRED_10)), rng.randint(1, 64))
        a, b = random_elem(rng, ctx), random_elem(rng, ctx)
        assert ring_mul(a, b) == ring_mul(b, a)


def test_ring_mul_ctx_mismatch():
    c1 = RingCtx(IntPoly([1, 1, 1]), 4)
    c2 = RingCtx(IntPoly([1, 1, 1]), 4)
    with pytest.raises(ValueError):
        ring_mul(c1.t(), c2.t())


@pytest.mark.parametrize("w", [2, 3, 16, 64])
def test_power_of_t_examples(w):
    ctx = RingCtx(IntPoly([1, -1, 1]), w)
    assert power_of_t(ctx, 3).to_list() == [(1 << w) - 1, 0]
    assert power_of_t(ctx, 0).is_constant(1)
    assert power_of_t(ctx, 6).is_constant(1)


def test_power_of_t_matches_repeated_mul(rng):
    for _ in range(3):
        ctx = RingCtx(random_lift(rng, rng.choice(IRRED_10)), rng.randint(1, 64))
        x = ctx.one()
        for n in range(1001):
            assert power_of_t(ctx, n) == x
            x = ring_mul(x, ctx.t())


def test_invert_examples():
    ctx = RingCtx(IntPoly([1, 1, 0, 1]), 64)
    assert invert(ctx.one()) == ctx.one()
    bad = RingCtx(IntPoly([-1, 0, 1]), 3)
    with pytest.raises(NotInvertibleError):
        invert(bad.element([1, 1]))


def test_invert_random(rng):
    for _ in range(2000):
        ctx = RingCtx(random_lift(rng, rng.choice(IRRED_16)), rng.randint(1, 64))
        a = random_elem(rng, ctx)
        if a.mod2() == 0:
            with pytest.raises(NotInvertibleError):
                invert(a)
            continue
        assert ring_mul(a, invert(a)) == ctx.one()


def test_rho_w_examples():
    q = IntPoly([1, -1, 1])
    assert rho_w(RingCtx(q, 1), 3) == 3
    assert rho_w(RingCtx(q, 3), 3) == 6
    assert rho_w(RingCtx(IntPoly([1, 1, 1]), 2), 3) == 3 == brute_ring_order_of_t([1, 1, 1], 4)
    assert rho_w(RingCtx(IntPoly([1, 1, 0, 1]), 3), 7) == 28 == brute_ring_order_of_t([1, 1, 0, 1], 8)


def test_rho_w_refuses_reducible():
    ctx = RingCtx(IntPoly([-1, 0, 1]), 1)
    with pytest.raises(ReducibleError):
        rho_w(ctx, 1)
    assert order_of_t_brute(ctx) == 2


def test_rho_w_rejects_wrong_lambda():
    with pytest.raises(ValueError):
        rho_w(RingCtx(IntPoly([1, 1, 0, 1]), 3), 3)


def test_rho_w_structure(rng):
    for bits in IRRED_10:
        q = random_lift(rng, bits)
        lam = order_of_t(bits)
        prev = None
        for w in range(1, 9):
            rho = rho_w(RingCtx(q, w), lam)
            assert (lam << (w - 1)) % rho == 0 and rho % lam == 0
            if prev is not None:
                assert rho in (prev, 2 * prev)
            prev = rho


def test_rho_w_matches_brute_order(rng):
    for bits in IRRED_10[:40]:
        q = random_lift(rng, bits)
        lam = order_of_t(bits)
        for w in (1, 2, 3, 4):
            assert rho_w(RingCtx(q, w), lam) == brute_ring_order_of_t(list(q.coeffs), 1 << w)


def test_squaring_lifts_congruence(rng):
    # X = Y mod (2^w, Q)  =>  X^2 = Y^2 mod (2^(w+1), Q)
    for _ in range(500):
        q = random_lift(rng, rng.choice(IRRED_10))
        w = rng.randint(1, 30)
        big = RingCtx(q, w + 1)
        x = random_elem(rng, big)
        noise = [rng.getrandbits(1) << w for _ in range(q.degree)]
        y = big.element([a + b for a, b in zip(x.to_list(), noise)])
        assert power(x, 2) == power(y, 2)


def test_squares_mod8_iff_pm_mod4(rng):
    # Q irreducible: X^2 = Y^2 mod (8, Q)  <=>  X = +-Y mod (4, Q)
    for _ in range(3000):
        q = random_lift(rng, rng.choice(IRRED_10))
        ctx = RingCtx(q, 3)
        x = random_elem(rng, ctx)
        if rng.random() < 0.5:
            y = random_elem(rng, ctx)
        else:
            sign = rng.choice((1, -1))
            y = ctx.element([sign * a + 4 * rng.getrandbits(1) for a in x.to_list()])
        lhs = power(x, 2) == power(y, 2)
        xs, ys = x.reduce(2), y.reduce(2)
        rhs = xs == ys or xs == [(-a) % 4 for a in ys]
        assert lhs == rhs
