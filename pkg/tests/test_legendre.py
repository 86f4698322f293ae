import math
import random

import pytest

from supercong.arith import PrimeCtx, inv_mod, jacobi, primes_in
from supercong.curves import CubicCurve, power_sum
from supercong.legendre import (
    PolyArg,
    binom_mod_p,
    legendre_eval,
    parity_check,
    truncated_128_sum,
)


def test_low_degree_values():
    ctx = PrimeCtx(11)
    assert legendre_eval(0, 9, ctx) == 1
    assert legendre_eval(1, 9, ctx) == 9
    assert legendre_eval(2, 3, PrimeCtx(7)) == 6
    assert legendre_eval(2, PolyArg(3, "direct"), PrimeCtx(7)) == 6


def test_degree_bound():
    with pytest.raises(ValueError):
        legendre_eval(11, 2, PrimeCtx(11))


def test_binom_mod_p_matches_exact():
    for p in (5, 11, 13):
        ctx = PrimeCtx(p)
        for a in range(2 * p - 1):
            for b in range(a + 1):
                assert binom_mod_p(a, b, ctx) == math.comb(a, b) % p


def test_parity_examples():
    assert parity_check(1, 5, PrimeCtx(11))
    assert parity_check(2, 3, PrimeCtx(7))
    ctx = PrimeCtx(101)
    rng = random.Random(4)
    for _ in range(10):
        assert parity_check(ctx.qcap, rng.randrange(101), ctx)


def test_parity_sweep():
    rng = random.Random(8)
    for p in primes_in(5, 200):
        ctx = PrimeCtx(p)
        for _ in range(5):
            assert parity_check(rng.randrange(p // 2 + 1),
                                rng.randrange(p), ctx)


def test_truncated_sum_examples():
    assert truncated_128_sum(1, PrimeCtx(11)) == 1
    c11 = PrimeCtx(11)
    assert truncated_128_sum(3, c11) == legendre_eval(2, 3, c11)
    c13 = PrimeCtx(13)
    t = (1 - 128) % 13
    direct = sum(math.comb(4 * k, 2 * k) * math.comb(2 * k, k)
                 for k in range(4)) % 13
    assert truncated_128_sum(t, c13) == direct == 11
    assert legendre_eval(3, t, c13) == 11


def test_truncated_sum_equals_p_quarter_eval():
    """30 random arguments per prime up to 500."""
    rng = random.Random(14)
    for p in primes_in(5, 500):
        ctx = PrimeCtx(p)
        for _ in range(30):
            t = rng.randrange(p)
            assert truncated_128_sum(t, ctx) == legendre_eval(ctx.qcap, t,
                                                              ctx), (p, t)


def test_three_term_recurrence_chain():
    """(n+1) P_{n+1} = (2n+1) t P_n - n P_{n-1}: an independent route."""
    rng = random.Random(15)
    for p in primes_in(5, 300):
        ctx = PrimeCtx(p)
        t = rng.randrange(p)
        chain = [1, t]
        for n in range(1, ctx.qcap):
            nxt = ((2 * n + 1) * t * chain[n] - n * chain[n - 1]) \
                * inv_mod(n + 1, p) % p
            chain.append(nxt)
        picks = {0, 1, ctx.qcap, ctx.qcap // 2, rng.randrange(ctx.qcap + 1)}
        for n in picks:
            assert chain[n] == legendre_eval(n, t, ctx), (p, n, t)


def test_cubic_power_sum_route():
    """P_[p/4](u) = -(6/p) sum_x (x^3 - 3(3u+5)/2 x + 9u+7)**((p-1)/2)."""
    rng = random.Random(16)
    for p in primes_in(5, 300):
        ctx = PrimeCtx(p)
        inv2 = inv_mod(2, p)
        for _ in range(3):
            u = rng.randrange(p)
            b = -3 * (3 * u + 5) * inv2 % p
            c = (9 * u + 7) % p
            ps = power_sum(CubicCurve.reduced(0, b, c, ctx), ctx)
            rhs = -jacobi(6, p) * ps % p
            assert legendre_eval(ctx.qcap, u, ctx) == rhs, (p, u)
