"""Arithmetic genus formulas for the level-N curves and the asymptotic
rate-versus-distance bounds (entropy lower bound, the sqrt(q)-1 line, the
genus-based sum inequality).

Genus arithmetic is exact rational; only the bound curves use binary64.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegralGenus, NotASquare, PreconditionFailed
from .ffcore import is_prime, legendre_symbol

GENUS_ZERO_LEVELS = (1, 3, 4, 5, 6, 7, 8, 9, 12, 13, 16, 18, 25)
GENUS_ONE_LEVELS = (11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49)


@dataclass(frozen=True)
class GenusReport:
    N: int
    mu: int
    mu2: int
    mu3: int
    mu_inf: int
    genus: int


@dataclass(frozen=True)
class RatePoint:
    delta: float
    R: float

    def __post_init__(self):
        if not (0.0 <= self.delta <= 1.0 and 0.0 <= self.R <= 1.0):
            raise ValueError("rate points live in the unit square")


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("totient needs n >= 1")
    result = n
    for q in _prime_factors(n):
        result -= result // q
    return result


def mu(N: int) -> int:
    """Index N * prod_(p | N) (1 + 1/p), an integer for every N >= 1."""
    if N < 1:
        raise ValueError("level must be positive")
    value = Fraction(N)
    for q in _prime_factors(N):
        value *= Fraction(q + 1, q)
    assert value.denominator == 1
    return int(value)


def _mu2(N: int) -> int:
    # zero when 4 | N; the factor at p = 2 is 1 (the symbol (-4/2) vanishes)
    if N % 4 == 0:
        return 0
    value = 1
    for q in _prime_factors(N):
        if q == 2:
            continue
        value *= 1 + legendre_symbol(-4, q)
    return value


def _mu3(N: int) -> int:
    # zero when 2 | N or 9 | N; the factor at p = 3 is 1 ((-3/3) vanishes)
    if N % 2 == 0 or N % 9 == 0:
        return 0
    value = 1
    for q in _prime_factors(N):
        if q == 3:
            continue
        value *= 1 + legendre_symbol(-3, q)
    return value


def _mu_inf(N: int) -> int:
    total = 0
    for d in range(1, N + 1):
        if N % d == 0:
            total += euler_phi(math.gcd(d, N // d))
    return total


def genus_x0(N: int) -> GenusReport:
    """Genus of the level-N curve: 1 + mu/12 - mu2/4 - mu3/3 - mu_inf/2,
    evaluated in exact rationals and required to be a nonnegative integer."""
    m = mu(N)
    m2 = _mu2(N)
    m3 = _mu3(N)
    minf = _mu_inf(N)
    g = 1 + Fraction(m, 12) - Fraction(m2, 4) - Fraction(m3, 3) - Fraction(minf, 2)
    if g.denominator != 1 or g < 0:
        raise NonIntegralGenus(f"genus formula gave {g} at level {N}")
    return GenusReport(N=N, mu=m, mu2=m2, mu3=m3, mu_inf=minf, genus=int(g))


def genus_prime_1mod12(N: int) -> int:
    """(N - 1)/12 - 1 for primes N = 1 + 12m; must agree with genus_x0."""
    if not is_prime(N) or N % 12 != 1:
        raise PreconditionFailed(f"{N} is not a prime congruent to 1 mod 12")
    return (N - 1) // 12 - 1


def gv_bound(q: int, delta: float) -> float:
    """Entropy lower bound 1 - H_q(delta) with H_q the q-ary entropy,
    clamped to 0 on [(q-1)/q, 1]; conventions 0*log 0 = 0."""
    if q < 2:
        raise ValueError("alphabet size must be at least 2")
    if not 0.0 <= delta <= 1.0:
        raise ValueError("delta must lie in [0, 1]")
    if delta == 0.0:
        return 1.0
    if delta >= (q - 1) / q:
        return 0.0
    lg = lambda v: math.log(v) / math.log(q)
    entropy = delta * lg(q - 1) - delta * lg(delta) - (1 - delta) * lg(1 - delta)
    return 1.0 - entropy


def tvz_line(q: int, delta: float) -> float:
    """max(0, 1 - delta - 1/(sqrt(q) - 1)) for square q."""
    root = math.isqrt(q)
    if root * root != q:
        raise NotASquare(f"{q} is not a perfect square")
    if not 0.0 <= delta <= 1.0:
        raise ValueError("delta must lie in [0, 1]")
    if root == 2:
        return 0.0
    return max(0.0, 1.0 - delta - 1.0 / (root - 1))


def tvz_exceeds_gv(q: int, grid: int = 1000) -> tuple[float, float] | None:
    """Maximal interval of delta where the sqrt(q)-1 line rises strictly
    above the entropy bound, refined to 1e-9 by bisection; None when the
    excess set is empty on the scanned grid."""
    root = math.isqrt(q)
    if root * root != q:
        raise NotASquare(f"{q} is not a perfect square")
    if grid < 100:
        raise ValueError("grid must have at least 100 points")
    guard = 1e-12
    diff = lambda d: tvz_line(q, d) - gv_bound(q, d)
    xs = [i / grid for i in range(grid + 1)]
    above = [x for x in xs if diff(x) > guard]
    if not above:
        return None
    lo_idx = xs.index(above[0])
    hi_idx = xs.index(above[-1])

    def bisect(neg: float, pos: float) -> float:
        # diff(neg) <= guard < diff(pos); locate the crossing to 1e-9
        while abs(pos - neg) > 1e-9:
            mid = (neg + pos) / 2
            if diff(mid) > guard:
                pos = mid
            else:
                neg = mid
        return (neg + pos) / 2

    left = above[0] if lo_idx == 0 else bisect(xs[lo_idx - 1], above[0])
    right = above[-1] if hi_idx == len(xs) - 1 else bisect(xs[hi_idx + 1], above[-1])
    return (left, right)


def prop7_bound(g: int, n: int) -> float:
    """Lower bound 1 - (g - 1)/n on (d + k)/n."""
    if n < 1:
        raise ValueError("length must be positive")
    return 1.0 - (g - 1) / n
