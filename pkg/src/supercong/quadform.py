"""Representations of primes by binary quadratic forms x^2 + d y^2.

cornacchia solves x^2 + d y^2 = p for prime p (complete: it finds a
solution whenever one exists).  represent is the exhaustive oracle, also
used for the scaled targets 4p = u^2 + d v^2 and 2p = x^2 + d y^2 and for
forms a x^2 + d y^2 with a > 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import PrimeCtx, is_prime, jacobi, sqrt_mod_p

__all__ = [
    "QuadRep",
    "cornacchia",
    "cornacchia_scaled",
    "normalize",
    "represent",
]


@dataclass(frozen=True)
class QuadRep:
    """A representation x^2 + d y^2 of p (or of 4p when scaled)."""

    d: int
    x: int
    y: int
    scaled: bool = False

    def value(self) -> int:
        return self.x * self.x + self.d * self.y * self.y


def represent(d: int, n: int, a: int = 1) -> tuple[int, int] | None:
    """Smallest-y solution (x, y) of a x^2 + d y^2 = n with x, y >= 0,
    by exhaustive search; None when there is none."""
    if d < 1 or a < 1 or n < 0:
        raise ValueError("d, a must be positive and n nonnegative")
    for y in range(math.isqrt(n // d) + 1):
        r = n - d * y * y
        if r % a:
            continue
        x = math.isqrt(r // a)
        if a * x * x == r:
            return x, y
    return None


def cornacchia(d: int, p: int) -> QuadRep | None:
    """Representation p = x^2 + d y^2 for prime p, or None.

    Classic algorithm: seed with the square root of -d mod p lying in
    (p/2, p), run the Euclidean remainder chain down to sqrt(p), and test
    the leftover.  Deterministic; returns the smallest-y representation.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if d % p == 0:
        raise ValueError("p must not divide d")
    if p <= 3 or d >= p:
        # Tiny p, or y forced to 0: settle directly.
        xy = represent(d, p)
        return QuadRep(d, *xy) if xy else None
    ctx = PrimeCtx(p)
    roots = sqrt_mod_p(-d % p, ctx)
    if not roots:
        return None
    x0 = roots[1] if roots[-1] > p // 2 else roots[0]
    if 2 * x0 < p:
        x0 = p - x0
    a, b = p, x0
    lim = math.isqrt(p)
    while b > lim:
        a, b = b, a % b
    r = p - b * b
    if r % d:
        return None
    c = r // d
    y = math.isqrt(c)
    if y * y != c:
        return None
    x = b
    if d == 1 and y > x:
        x, y = y, x
    return QuadRep(d, x, y)


def cornacchia_scaled(d: int, p: int) -> QuadRep | None:
    """Representation 4p = u^2 + d v^2 (exhaustive-backed), or None."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    xy = represent(d, 4 * p)
    return QuadRep(d, xy[0], xy[1], scaled=True) if xy else None


def normalize(rep: QuadRep, convention: str = "nonneg") -> QuadRep:
    """Sign-adjust x to the requested convention.

    Conventions: "nonneg" (x >= 0), "one_mod_4" (x = 1 mod 4, requires x
    odd), "one_mod_3" (x = 1 mod 3, requires 3 not dividing x).
    """
    x = abs(rep.x)
    y = abs(rep.y)
    if convention == "nonneg":
        pass
    elif convention == "one_mod_4":
        if x % 2 == 0:
            raise ValueError(f"x = {rep.x} is even; no sign gives x = 1 mod 4")
        if x % 4 != 1:
            x = -x
    elif convention == "one_mod_3":
        if x % 3 == 0:
            raise ValueError(f"3 divides x = {rep.x}; no sign gives x = 1 mod 3")
        if x % 3 != 1:
            x = -x
    else:
        raise ValueError(f"unknown normalization convention {convention!r}")
    return QuadRep(rep.d, x, y, rep.scaled)
