"""Truncated integer Laurent series in q and the classical expansions built
from them: Euler products, eta quotients, Eisenstein series E4/E6, the
discriminant series Delta, the j-invariant, and the weight-2 level-11
eigenform coefficients.

Every coefficient is an exact Python integer. A series knows the lowest
exponent it stores and the truncation order M: coefficients are exact for
all exponents e < M (exponents below `low` are exactly zero), and every
ring operation propagates the tightest truncation that stays valid.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    FractionalExponent,
    NonUnitLeadingCoefficient,
    TruncationTooSmall,
    UnsupportedWeight,
)


@dataclass(frozen=True)
class LaurentSeries:
    """Integer Laurent series known exactly for exponents in [low, trunc)."""

    low: int
    coeffs: tuple[int, ...]
    trunc: int

    def __post_init__(self):
        if len(self.coeffs) != self.trunc - self.low:
            raise ValueError("coefficient count must equal trunc - low")

    @classmethod
    def from_coeffs(cls, low: int, coeffs: Sequence[int]) -> "LaurentSeries":
        coeffs = tuple(int(c) for c in coeffs)
        return cls(low, coeffs, low + len(coeffs))

    @classmethod
    def one(cls, trunc: int) -> "LaurentSeries":
        return cls.from_coeffs(0, [1] + [0] * (trunc - 1))

    @classmethod
    def monomial(cls, c: int, e: int, trunc: int) -> "LaurentSeries":
        return cls.from_coeffs(e, [c] + [0] * (trunc - e - 1))

    def coeff(self, e: int) -> int:
        if e >= self.trunc:
            raise TruncationTooSmall(f"coefficient of q^{e} unknown beyond order {self.trunc}")
        if e < self.low:
            return 0
        return self.coeffs[e - self.low]

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return self.low + i
        return self.trunc

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def trimmed(self) -> "LaurentSeries":
        """Advance `low` past stored leading zeros (truncation unchanged)."""
        v = self.valuation()
        if v == self.low:
            return self
        return LaurentSeries(v, self.coeffs[v - self.low :], self.trunc)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        trunc = min(self.trunc, other.trunc)
        low = min(self.low, other.low)
        out = [0] * (trunc - low)
        for src in (self, other):
            for i, c in enumerate(src.coeffs):
                e = src.low + i
                if e < trunc:
                    out[e - low] += c
        return LaurentSeries(low, tuple(out), trunc)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.low, tuple(-c for c in self.coeffs), self.trunc)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def scale(self, c: int) -> "LaurentSeries":
        return LaurentSeries(self.low, tuple(c * v for v in self.coeffs), self.trunc)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        # A product coefficient at exponent e is known only when every
        # contributing pair is known: e < min(trunc_a + low_b, trunc_b + low_a).
        low = self.low + other.low
        trunc = min(self.trunc + other.low, other.trunc + self.low)
        if trunc <= low:
            raise TruncationTooSmall("product truncation collapsed to nothing")
        out = [0] * (trunc - low)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            ea = self.low + i
            for j, b in enumerate(other.coeffs):
                e = ea + other.low + j
                if e >= trunc:
                    break
                if b:
                    out[e - low] += a * b
        return LaurentSeries(low, tuple(out), trunc)

    def pow(self, e: int) -> "LaurentSeries":
        if e < 0:
            return self.inverse().pow(-e)
        if e == 0:
            return LaurentSeries.one(max(self.trunc - self.low, 1))
        result = self
        for _ in range(e - 1):
            result = result * self
        return result

    def inverse(self) -> "LaurentSeries":
        """Inverse of a series whose leading coefficient is a unit of Z."""
        v = self.valuation()
        if v >= self.trunc:
            raise NonUnitLeadingCoefficient("cannot invert the zero series")
        lead = self.coeff(v)
        if lead not in (1, -1):
            raise NonUnitLeadingCoefficient(
                f"leading coefficient {lead} is not a unit over the integers"
            )
        rel = self.trunc - v  # relative precision of the unit part
        unit = [self.coeff(v + i) * lead for i in range(rel)]
        inv = [0] * rel
        inv[0] = 1
        for k in range(1, rel):
            inv[k] = -sum(unit[i] * inv[k - i] for i in range(1, k + 1))
        out = tuple(c * lead for c in inv)
        return LaurentSeries(-v, out, rel - v)

    def substitute_power(self, N: int) -> "LaurentSeries":
        """The series in q^N: exponents scale by N, truncation becomes N*trunc."""
        if N < 1:
            raise ValueError("substitution power must be positive")
        low = N * self.low
        trunc = N * self.trunc
        out = [0] * (trunc - low)
        for i, c in enumerate(self.coeffs):
            out[N * (self.low + i) - low] = c
        return LaurentSeries(low, tuple(out), trunc)

    def shift(self, t: int) -> "LaurentSeries":
        """Multiplication by q^t."""
        return LaurentSeries(self.low + t, self.coeffs, self.trunc + t)

    def divide_exact(self, c: int) -> "LaurentSeries":
        if any(v % c for v in self.coeffs):
            raise ValueError(f"series is not divisible by {c}")
        return LaurentSeries(self.low, tuple(v // c for v in self.coeffs), self.trunc)

    def text(self) -> str:
        """Render as `c_{-1}*q^-1 + c_0 + c_1*q + ...` skipping zero terms."""
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.low + i
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*q")
            else:
                parts.append(f"{c}*q^{e}")
        return " + ".join(parts) if parts else "0"


def sigma(r: int, n: int) -> int:
    """Sum of r-th powers of the positive divisors of n."""
    if n < 1:
        raise ValueError("sigma needs n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**r
            e = n // d
            if e != d:
                total += e**r
        d += 1
    return total


def euler_product(M: int, scale: int = 1) -> LaurentSeries:
    """prod_{n>=1} (1 - q^(scale*n)) expanded to order M."""
    coeffs = [0] * M
    if M > 0:
        coeffs[0] = 1
    n = scale
    while n < M:
        for i in range(M - 1, n - 1, -1):
            coeffs[i] -= coeffs[i - n]
        n += scale
    return LaurentSeries.from_coeffs(0, coeffs)


@dataclass(frozen=True)
class EtaQuotientSpec:
    """Factors (scale d, exponent e) of a product of rescaled eta functions."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for d, _ in self.factors:
            if d < 1:
                raise ValueError("eta scale must be a positive integer")

    def leading_power_times_24(self) -> int:
        return sum(d * e for d, e in self.factors)


def eta_quotient(spec: EtaQuotientSpec, M: int) -> LaurentSeries:
    """q^(sum d*e/24) * prod_d (prod_n (1 - q^(d*n)))^(e_d), to order M."""
    t24 = spec.leading_power_times_24()
    if t24 % 24:
        raise FractionalExponent(f"sum of d*e is {t24}, not divisible by 24")
    t = t24 // 24
    rel = M - t
    if rel <= 0:
        raise TruncationTooSmall(f"truncation {M} does not reach the leading power {t}")
    result = LaurentSeries.one(rel)
    for d, e in spec.factors:
        base = euler_product(rel, d)
        if e < 0:
            base = base.inverse()
            e = -e
        for _ in range(e):
            result = result * base
    return result.shift(t)


def eisenstein_normalized(k: int, M: int) -> LaurentSeries:
    """E4 = 1 + 240*sum sigma_3(n) q^n or E6 = 1 - 504*sum sigma_5(n) q^n."""
    if k == 4:
        c, r = 240, 3
    elif k == 6:
        c, r = -504, 5
    else:
        raise UnsupportedWeight(f"weight {k} not supported, use 4 or 6")
    coeffs = [1] + [c * sigma(r, n) for n in range(1, M)]
    return LaurentSeries.from_coeffs(0, coeffs[:M])


def delta_series(M: int) -> LaurentSeries:
    """(E4^3 - E6^2)/1728, the normalized discriminant series q - 24q^2 + ..."""
    e4 = eisenstein_normalized(4, M)
    e6 = eisenstein_normalized(6, M)
    num = e4 * e4 * e4 - e6 * e6
    return num.divide_exact(1728).trimmed()


def j_series(M: int) -> LaurentSeries:
    """The j-invariant q^-1 + 744 + 196884q + ... exact to order M.

    With the normalizations used here Delta already absorbs the factor
    1728, so j equals E4^3 / Delta.
    """
    me = M + 2  # inversion of Delta costs two orders of precision
    e4 = eisenstein_normalized(4, me)
    e4c = e4 * e4 * e4
    j = e4c * delta_series(me).inverse()
    return LaurentSeries(j.low, j.coeffs[: M - j.low], M)


LEVEL11_ETA_SPEC = EtaQuotientSpec(factors=((1, 2), (11, 2)))


def hecke_coeff_level11(n: int, M: int | None = None) -> int:
    """Coefficient a_n of q^n in the weight-2 level-11 eigenform
    q * prod (1-q^n)^2 (1-q^(11n))^2."""
    if n < 1:
        raise ValueError("coefficient index must be positive")
    if M is None:
        M = n + 1
    if n >= M:
        raise TruncationTooSmall(f"need truncation above {n}, got {M}")
    return eta_quotient(LEVEL11_ETA_SPEC, M).coeff(n)


@dataclass(frozen=True)
class ModularPolyResult:
    """Outcome of substituting (j(q), j(q^N)) into a candidate polynomial."""

    vanishes: bool
    degrees_ok: bool
    checked_to: int
    residual: LaurentSeries

    @property
    def ok(self) -> bool:
        return self.vanishes and self.degrees_ok


def modular_poly_check(
    H: Mapping[tuple[int, int], int], N: int, M: int
) -> ModularPolyResult:
    """Substitute x = j(q), y = j(q^N) into H and test vanishing to order M.

    H maps (x-degree, y-degree) to integer coefficients. The result also
    reports whether the degree in each variable equals the expected index
    mu(N) of the level-N curve.
    """
    from .bounds import mu  # local import, bounds has no qseries dependency

    deg_x = max((a for (a, b), c in H.items() if c), default=0)
    deg_y = max((b for (a, b), c in H.items() if c), default=0)
    degrees_ok = deg_x == deg_y == mu(N)

    # Enough base precision that every monomial stays valid past order M.
    base = M + (deg_x + N * deg_y) + 4
    j1 = j_series(base)
    jn = j1.substitute_power(N)
    pow1 = {0: LaurentSeries.one(base)}
    for a in range(1, deg_x + 1):
        pow1[a] = pow1[a - 1] * j1
    pown = {0: LaurentSeries.one(N * base)}
    for b in range(1, deg_y + 1):
        pown[b] = pown[b - 1] * jn

    acc: LaurentSeries | None = None
    for (a, b), c in sorted(H.items()):
        if not c:
            continue
        term = (pow1[a] * pown[b]).scale(c)
        acc = term if acc is None else acc + term
    if acc is None:
        acc = LaurentSeries.monomial(0, 0, M)
    if acc.trunc < M:
        raise TruncationTooSmall(
            f"could only verify to order {acc.trunc}, caller asked for {M}"
        )
    residual = LaurentSeries(acc.low, acc.coeffs[: M - acc.low], M)
    return ModularPolyResult(
        vanishes=residual.is_zero(),
        degrees_ok=degrees_ok,
        checked_to=M,
        residual=residual,
    )
