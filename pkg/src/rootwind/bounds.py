"""Degree functions of the inductive degree-halving argument for complex
roots, with their growth bounds.

beta(d) is the degree reached by repeatedly passing from d to d(d-1)/2 until
an odd number appears; gamma(d) is the worst case of beta(2e) for e <= d.
Both are exact integers and the bounds below are checked in exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class BoundViolation(AssertionError):
    pass


@lru_cache(maxsize=None)
def beta(d: int) -> int:
    if d < 1:
        raise ValueError("beta is defined for d >= 1")
    while d % 2 == 0:
        d = d * (d - 1) // 2
    return d


def gamma(d: int) -> int:
    if d < 1:
        raise ValueError("gamma is defined for d >= 1")
    return max(beta(2 * e) for e in range(1, d + 1))


def two_adic(d: int) -> tuple[int, int]:
    """(k, s) with d = 2**k * s and s odd."""
    k = 0
    while d % 2 == 0:
        d //= 2
        k += 1
    return k, d


def beta_sandwich(d: int) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds on beta(d) valid for d >= 4."""
    k, s = two_adic(d)
    base = Fraction(2) ** (k - 1) * s
    lower = Fraction(8, 3) * (Fraction(3, 4) * base) ** (2 ** k)
    upper = 2 * base ** (2 ** k)
    return lower, upper


@dataclass(frozen=True)
class DegreeBoundReport:
    d: int
    beta: int
    gamma: int
    beta_lower: Fraction | None
    beta_upper: Fraction | None
    beta_upper_simple: Fraction | None
    gamma_lower_simple: Fraction | None
    gamma_lower: Fraction | None
    gamma_upper: int
    d_squared: int


def bound_check(d: int) -> DegreeBoundReport:
    """Evaluate beta, gamma and their bounds at d, asserting every inequality
    that applies (the sandwich bounds need d >= 4)."""
    b, g = beta(d), gamma(d)

    def need(ok, what):
        if not ok:
            raise BoundViolation(f"d={d}: {what}")

    need(b % 2 == 1, "beta is even")
    need(d * d <= g, "d^2 > gamma")
    g_up = 2 * d ** (2 * d)
    need(g <= g_up, "gamma above 2 d^(2d)")
    lo = up = simple = g_lo_simple = g_lo = None
    if d >= 4:
        lo, up = beta_sandwich(d)
        simple = 2 * Fraction(d, 2) ** d
        need(lo <= b <= up, "beta outside its sandwich")
        need(up <= simple, "sandwich upper bound above 2 (d/2)^d")
        kp = d.bit_length() - 1
        g_lo_simple = Fraction(3, 8) ** (d - 1) * d ** d
        g_lo = Fraction(8, 3) * (Fraction(3, 4) * 2 ** kp) ** (2 ** (kp + 1))
        need(g_lo_simple < g_lo, "(3/8)^(d-1) d^d not below the power-of-two bound")
        need(g_lo <= beta(2 ** (kp + 1)) <= g, "gamma lower bound fails")
    return DegreeBoundReport(d, b, g, lo, up, simple, g_lo_simple, g_lo, g_up, d * d)
