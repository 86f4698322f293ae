"""Central binomial products and their truncated sums mod p**2.

The terms of interest are

    s(k) = C(2k,k)**2 * C(4k,2k) = (4k)! / k!**4
    t(k) = C(2k,k)    * C(4k,2k) = (4k)! / ((2k)! * k!**2)

both tracked with their p-adic valuation so the truncated sums

    S(m) = sum_{k=0}^{p-1} s(k) * m**(-k)      (mod p**2)
    T(x) = sum_{k=0}^{p-1} t(k) * x**k         (mod p**2)

are exact.  sum_S has two independent evaluation routes: the fast
valued-residue path and a big-integer oracle (sum_S_exact) that clears
denominators and reduces once at the end.

The polynomial identity

    sum_k s(k) * C(k, m-k) * (-64)**(m-k)
      = sum_k t(k) * t-coefficient-reversed(m-k)          (over Z)

is checked exactly via lemma21_sides; both sides satisfy the three-term
recurrence probed by lemma21_recurrence_residual.  (The identity has
rational-function certificates in the WZ style,

    -4096 k^2 (m+2)(m-2k)(m-2k+1) / ((m-k+1)(m-k+2))            [left]
    16 k^2 (4m-4k+1)(4m-4k+3)(16m^2-16mk+55m-26k+46)
        / ((m-k+1)^2 (m-k+2)^2)                                 [right]

recorded here for reference; only the recurrence is verified, numerically.)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .arith import PrimeCtx, ValuedResidue, batch_inverse, inv_mod

__all__ = [
    "CentralSumParams",
    "binom_exact",
    "central_series",
    "central_term",
    "lemma21_recurrence_residual",
    "lemma21_sides",
    "sum_S",
    "sum_S_exact",
    "sum_T",
    "t_series",
    "t_term",
    "theorem21_check",
]


def binom_exact(n: int, k: int) -> int:
    """C(n, k) as an exact integer; 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def central_term(k: int, ctx: PrimeCtx) -> ValuedResidue:
    """(4k)!/k!**4 with its p-divisibility tracked (single-k route)."""
    if not 0 <= k <= ctx.p - 1:
        raise ValueError(f"k must be in [0, p-1], got {k}")
    from .arith import factorial_vp

    return factorial_vp(4 * k, ctx).div(factorial_vp(k, ctx).pow(4))


def t_term(k: int, ctx: PrimeCtx) -> ValuedResidue:
    """(4k)!/((2k)! k!**2) with its p-divisibility tracked."""
    if not 0 <= k <= ctx.p - 1:
        raise ValueError(f"k must be in [0, p-1], got {k}")
    from .arith import factorial_vp

    return (factorial_vp(4 * k, ctx)
            .div(factorial_vp(2 * k, ctx))
            .div(factorial_vp(k, ctx).pow(2)))


@lru_cache(maxsize=512)
def _series(ctx: PrimeCtx) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Residues mod p**2 of s(k) and t(k) for k = 0..p-1, built incrementally.

    Factorial units and valuations advance with k; the only factors
    divisible by p on the way to (4k)! are p, 2p, 3p themselves, and
    denominator factorials stay below p, so one batched inversion covers
    every k.
    """
    p, p2 = ctx.p, ctx.p2
    u4 = u2 = u1 = 1
    e4 = e2 = 0  # k! is never divisible by p for k < p
    num_u, num_e4, num_e2 = [1], [0], [0]
    den_s, den_t = [1], [1]
    for k in range(1, p):
        i = k
        u1 = u1 * i % p2
        for i in (2 * k - 1, 2 * k):
            while i % p == 0:
                i //= p
                e2 += 1
            u2 = u2 * i % p2
        for i in (4 * k - 3, 4 * k - 2, 4 * k - 1, 4 * k):
            while i % p == 0:
                i //= p
                e4 += 1
            u4 = u4 * i % p2
        num_u.append(u4)
        num_e4.append(e4)
        num_e2.append(e2)
        den_s.append(pow(u1, 4, p2))
        den_t.append(u2 * u1 * u1 % p2)
    inv_all = batch_inverse(den_s + den_t, p2)
    s_out, t_out = [], []
    for k in range(p):
        es = num_e4[k]
        et = num_e4[k] - num_e2[k]
        us = num_u[k] * inv_all[k] % p2
        ut = num_u[k] * inv_all[p + k] % p2
        s_out.append(0 if es >= 2 else us * p % p2 if es == 1 else us)
        t_out.append(0 if et >= 2 else ut * p % p2 if et == 1 else ut)
    return tuple(s_out), tuple(t_out)


def central_series(ctx: PrimeCtx) -> tuple[int, ...]:
    """Residues mod p**2 of (4k)!/k!**4 for k = 0..p-1."""
    return _series(ctx)[0]


def t_series(ctx: PrimeCtx) -> tuple[int, ...]:
    """Residues mod p**2 of (4k)!/((2k)! k!**2) for k = 0..p-1."""
    return _series(ctx)[1]


@dataclass(frozen=True)
class CentralSumParams:
    """Sum argument m (integer or rational in Z_p) with p not dividing m."""

    m: int | Fraction
    ctx: PrimeCtx
    m_inv: int = field(init=False)

    def __post_init__(self) -> None:
        m = self.m
        num = m.numerator if isinstance(m, Fraction) else int(m)
        den = m.denominator if isinstance(m, Fraction) else 1
        p = self.ctx.p
        if num == 0:
            raise ValueError("m must be nonzero")
        if den % p == 0:
            raise ValueError(f"m = {m} is not a p-adic integer for p = {p}")
        if num % p == 0:
            raise ValueError(f"p = {p} divides m = {m}")
        object.__setattr__(self, "m_inv",
                           den * inv_mod(num, self.ctx.p2) % self.ctx.p2)


@lru_cache(maxsize=65536)
def _sum_s_cached(m_inv: int, ctx: PrimeCtx) -> int:
    p2 = ctx.p2
    acc = 0
    yk = 1
    for s in central_series(ctx):
        acc = (acc + s * yk) % p2
        yk = yk * m_inv % p2
    return acc


def sum_S(params: CentralSumParams) -> int:
    """sum_{k=0}^{p-1} (4k)!/k!**4 * m**(-k) reduced mod p**2."""
    return _sum_s_cached(params.m_inv, params.ctx)


def sum_S_exact(m: int | Fraction, ctx: PrimeCtx) -> int:
    """Big-integer oracle for sum_S: clear denominators, reduce once.

    Independent of the valued-residue route; intended for modest p.
    """
    num = m.numerator if isinstance(m, Fraction) else int(m)
    den = m.denominator if isinstance(m, Fraction) else 1
    p, p2 = ctx.p, ctx.p2
    if num == 0 or num % p == 0 or den % p == 0:
        raise ValueError(f"m = {m} must be a nonzero p-adic unit argument")
    total = 0
    for k in range(p):
        term = math.comb(2 * k, k) ** 2 * math.comb(4 * k, 2 * k)
        total += term * den ** k * num ** (p - 1 - k)
    return total * pow(inv_mod(num, p2), p - 1, p2) % p2


def sum_T(x: int, ctx: PrimeCtx) -> int:
    """sum_{k=0}^{p-1} (4k)!/((2k)! k!**2) * x**k mod p**2."""
    p2 = ctx.p2
    x %= p2
    acc = 0
    xk = 1
    for t in t_series(ctx):
        acc = (acc + t * xk) % p2
        xk = xk * x % p2
    return acc


def theorem21_check(x: int, ctx: PrimeCtx) -> bool:
    """Does sum_k s(k) (x(1-64x))**k = T(x)**2 hold mod p**2?"""
    p2 = ctx.p2
    x %= p2
    y = x * (1 - 64 * x) % p2
    acc = 0
    yk = 1
    for s in central_series(ctx):
        acc = (acc + s * yk) % p2
        yk = yk * y % p2
    t = sum_T(x, ctx)
    return acc == t * t % p2


def lemma21_sides(m: int) -> tuple[int, int]:
    """Both sides of the degree-m convolution identity, as exact integers.

    L = sum_k s(k) C(k, m-k) (-64)**(m-k)
    R = sum_k t(k) t(m-k)
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    left = 0
    for k in range((m + 1) // 2, m + 1):
        left += (math.comb(2 * k, k) ** 2 * math.comb(4 * k, 2 * k)
                 * math.comb(k, m - k) * (-64) ** (m - k))
    right = 0
    for k in range(m + 1):
        j = m - k
        right += (math.comb(2 * k, k) * math.comb(4 * k, 2 * k)
                  * math.comb(2 * j, j) * math.comb(4 * j, 2 * j))
    return left, right


def lemma21_recurrence_residual(m: int, S: Callable[[int], int]) -> int:
    """Residual of the three-term recurrence both identity sides satisfy.

    1024 (m+1)(2m+1)(2m+3) S(m) - 8 (2m+3)(8m**2+24m+19) S(m+1)
        + (m+2)**3 S(m+2)
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    return (1024 * (m + 1) * (2 * m + 1) * (2 * m + 3) * S(m)
            - 8 * (2 * m + 3) * (8 * m * m + 24 * m + 19) * S(m + 1)
            + (m + 2) ** 3 * S(m + 2))
