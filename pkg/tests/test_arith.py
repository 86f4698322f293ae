import random

import pytest
from hypothesis import given, strategies as st

from supercong.arith import (
    PrimeCtx,
    ValuedResidue,
    batch_inverse,
    factorial_vp,
    inv_mod,
    is_prime,
    jacobi,
    primes_in,
    quad_char,
    sqrt_mod_p,
    sqrt_mod_p2,
)


def test_prime_ctx_fields():
    ctx = PrimeCtx(11)
    assert (ctx.p, ctx.p2, ctx.half, ctx.qcap) == (11, 121, 5, 2)


@pytest.mark.parametrize("bad", [-7, 0, 1, 2, 3, 4, 9, 15, 2**31 + 1])
def test_prime_ctx_rejects_non_primes_and_small(bad):
    with pytest.raises(ValueError):
        PrimeCtx(bad)


def test_prime_ctx_accepts_large_prime():
    ctx = PrimeCtx(2**31 - 1)
    assert ctx.p2 == (2**31 - 1) ** 2


def test_is_prime_spot():
    assert [n for n in range(60) if is_prime(n)] == primes_in(0, 59)
    assert is_prime(2**31 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7


def test_jacobi_examples():
    assert jacobi(0, 7) == 0
    assert jacobi(2, 7) == 1
    assert jacobi(-1, 11) == -1


@pytest.mark.parametrize("n", [0, -3, 4, 10])
def test_jacobi_rejects_bad_modulus(n):
    with pytest.raises(ValueError):
        jacobi(2, n)


@given(st.integers(-50, 50), st.integers(-50, 50),
       st.integers(0, 49).map(lambda k: 2 * k + 1))
def test_jacobi_multiplicative(a, b, n):
    assert jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n)


def test_quad_char_examples():
    assert quad_char(0, PrimeCtx(11)) == 0
    assert quad_char(3, PrimeCtx(7)) == -1
    assert quad_char(4, PrimeCtx(7)) == 1


def test_quad_char_agrees_with_jacobi():
    for p in primes_in(5, 97):
        ctx = PrimeCtx(p)
        for a in range(p):
            assert quad_char(a, ctx) == jacobi(a, p)


def test_sqrt_examples():
    assert sqrt_mod_p(2, PrimeCtx(7)) == (3, 4)
    assert sqrt_mod_p(5, PrimeCtx(11)) == (4, 7)
    assert sqrt_mod_p(2, PrimeCtx(5)) == ()
    assert sqrt_mod_p(0, PrimeCtx(13)) == (0,)


def test_sqrt_consistency_with_character():
    # covers both the p = 3 mod 4 shortcut and the Tonelli-Shanks path
    for p in primes_in(5, 113):
        ctx = PrimeCtx(p)
        for a in range(1, p):
            roots = sqrt_mod_p(a, ctx)
            assert (quad_char(a, ctx) == 1) == bool(roots)
            for r in roots:
                assert r * r % p == a
            if roots:
                assert roots == (roots[0], p - roots[0])
                assert roots[0] <= roots[1]


def test_sqrt_mod_p2_lifts():
    for p in (5, 7, 11, 13, 17, 41):
        ctx = PrimeCtx(p)
        for a in range(1, ctx.p2):
            roots = sqrt_mod_p2(a, ctx)
            for r in roots:
                assert r * r % ctx.p2 == a % ctx.p2
            if a % p != 0:
                assert bool(roots) == (quad_char(a, ctx) == 1)
            elif a % ctx.p2 != 0:
                assert roots == ()


def test_inv_mod_examples():
    assert inv_mod(6, 121) == 101
    assert inv_mod(1, 25) == 1
    with pytest.raises(ValueError):
        inv_mod(11, 121)


def test_batch_inverse_matches_inv_mod():
    rng = random.Random(1)
    for m in (121, 169, 2021 * 2021):
        xs = [rng.randrange(1, m) for _ in range(50)]
        xs = [x for x in xs if inv_gcd_ok(x, m)]
        assert batch_inverse(xs, m) == [inv_mod(x, m) for x in xs]
    assert batch_inverse([], 25) == []


def inv_gcd_ok(x, m):
    import math

    return math.gcd(x, m) == 1


def test_factorial_vp_examples():
    ctx = PrimeCtx(5)
    assert factorial_vp(0, ctx) == ValuedResidue(ctx, 0, 1)
    assert factorial_vp(5, ctx) == ValuedResidue(ctx, 1, 24)
    assert factorial_vp(10, ctx) == ValuedResidue(ctx, 2, 2)


def test_factorial_vp_legendre_formula():
    for p in (5, 7, 11, 13):
        ctx = PrimeCtx(p)
        for n in range(201):
            expected = 0
            q = p
            while q <= n:
                expected += n // q
                q *= p
            assert factorial_vp(n, ctx).e == expected


def test_valued_residue_reduction_rules():
    ctx = PrimeCtx(7)
    assert ValuedResidue(ctx, 0, 3).residue() == 3
    assert ValuedResidue(ctx, 1, 3).residue() == 21
    assert ValuedResidue(ctx, 2, 3).residue() == 0
    assert ValuedResidue(ctx, 5, 3).residue() == 0
    assert ValuedResidue.from_int(0, ctx).residue() == 0
    with pytest.raises(ValueError):
        ValuedResidue(ctx, 0, 7)  # not a unit
    with pytest.raises(ValueError):
        ValuedResidue(ctx, 1, 0)  # malformed zero


def test_valued_residue_from_int_strips_valuation():
    ctx = PrimeCtx(5)
    v = ValuedResidue.from_int(2 * 5**3, ctx)
    assert (v.e, v.u) == (3, 2)
    assert ValuedResidue.from_int(-50, ctx).residue() == (-2 * 25) % 25


def test_valued_residue_multiplication_properties():
    ctx = PrimeCtx(13)
    rng = random.Random(2)
    vals = [ValuedResidue.from_int(rng.randrange(1, 10**6), ctx)
            for _ in range(30)]
    vals.append(ValuedResidue.from_int(0, ctx))
    for _ in range(200):
        a, b, c = rng.choice(vals), rng.choice(vals), rng.choice(vals)
        assert (a * b).residue() == (b * a).residue()
        assert ((a * b) * c).residue() == (a * (b * c)).residue()


def test_valued_residue_mul_matches_integers():
    ctx = PrimeCtx(5)
    rng = random.Random(3)
    for _ in range(200):
        x, y = rng.randrange(1, 5000), rng.randrange(1, 5000)
        prod = (ValuedResidue.from_int(x, ctx)
                * ValuedResidue.from_int(y, ctx))
        assert prod.residue() == x * y % 25
