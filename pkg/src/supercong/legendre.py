"""Legendre polynomials over F_p and the truncated-sum form of P_[p/4].

P_n is evaluated through its explicit finite sum

    P_n(t) = 2**(-n) * sum_{k=0}^{[n/2]} C(n,k) (-1)**k C(2n-2k, n) t**(n-2k)

with all arithmetic mod p.  The derivative (Rodrigues) form is not used.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import PrimeCtx, inv_mod

__all__ = [
    "PolyArg",
    "binom_mod_p",
    "legendre_eval",
    "parity_check",
    "truncated_128_sum",
]


@dataclass(frozen=True)
class PolyArg:
    """A polynomial argument t in [0, p) plus a tag saying where it came
    from (a chosen square root, or a direct rational reduction)."""

    t: int
    provenance: str = "direct"


@lru_cache(maxsize=512)
def _fact_tables(ctx: PrimeCtx) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Unit parts of i! mod p and their inverses, for i = 0 .. 2p-2.

    The single factor p inside i! (for i >= p) is stripped, so entries are
    units; the stripped valuation is recovered from the index.
    """
    p = ctx.p
    n = 2 * p - 1
    fac = [1] * n
    for i in range(1, n):
        f = i // p if i % p == 0 else i
        fac[i] = fac[i - 1] * f % p
    inv = [1] * n
    inv[n - 1] = inv_mod(fac[n - 1], p)
    for i in range(n - 1, 0, -1):
        f = i // p if i % p == 0 else i
        inv[i - 1] = inv[i] * f % p
    return tuple(fac), tuple(inv)


def binom_mod_p(a: int, b: int, ctx: PrimeCtx) -> int:
    """C(a, b) mod p for 0 <= a <= 2p-2 (Kummer carry gives at most one p)."""
    if b < 0 or b > a:
        return 0
    p = ctx.p
    fac, inv = _fact_tables(ctx)
    e = (a >= p) - (b >= p) - (a - b >= p)
    if e > 0:
        return 0
    return fac[a] * inv[b] % p * inv[a - b] % p


def _arg(t: int | PolyArg) -> int:
    return t.t if isinstance(t, PolyArg) else t


def legendre_eval(n: int, t: int | PolyArg, ctx: PrimeCtx) -> int:
    """P_n(t) mod p via the explicit finite sum; requires n <= p-1."""
    p = ctx.p
    if not 0 <= n <= p - 1:
        raise ValueError(f"n must be in [0, p-1], got {n}")
    tv = _arg(t) % p
    t2 = tv * tv % p
    acc = 0
    tp = 1 if n % 2 == 0 else tv  # t**(n-2k) at k = [n/2], ascending after
    for k in range(n // 2, -1, -1):
        term = binom_mod_p(n, k, ctx) * binom_mod_p(2 * n - 2 * k, n, ctx) % p
        term = term * tp % p
        acc = (acc - term if k % 2 else acc + term) % p
        tp = tp * t2 % p
    return acc * inv_mod(pow(2, n, p), p) % p


def parity_check(n: int, t: int | PolyArg, ctx: PrimeCtx) -> bool:
    """Does P_n(-t) = (-1)**n P_n(t) hold mod p?"""
    p = ctx.p
    tv = _arg(t) % p
    lhs = legendre_eval(n, (p - tv) % p, ctx)
    rhs = legendre_eval(n, tv, ctx)
    if n % 2:
        rhs = (p - rhs) % p
    return lhs == rhs


def truncated_128_sum(t: int | PolyArg, ctx: PrimeCtx) -> int:
    """sum_{k=0}^{[p/4]} C(4k,2k) C(2k,k) ((1-t)/128)**k mod p.

    Equals P_[p/4](t) mod p.
    """
    p = ctx.p
    tv = _arg(t) % p
    w = (1 - tv) * inv_mod(128, p) % p
    fac, inv = _fact_tables(ctx)
    acc = 0
    wk = 1
    for k in range(ctx.qcap + 1):
        term = fac[4 * k] * inv[2 * k] % p * inv[k] % p * inv[k] % p
        acc = (acc + term * wk) % p
        wk = wk * w % p
    return acc
