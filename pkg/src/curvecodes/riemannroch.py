"""Explicit function bases for the two divisor shapes used by the codes:

* pole-bounded monomials x^i y^j at the single point at infinity of an
  elliptic or odd-degree hyperelliptic model, and
* the fixed conic-intersection space on the level-19 cubic, spanned by
  degree-2 forms over phi = x^2 + y^2 + z^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .curves import CurvePoint
from .errors import DenominatorVanishes, InfinityEvaluation, ZeroTriple
from .ffcore import inv_mod

ELLIPTIC_Y_WEIGHT = 3


@dataclass(frozen=True)
class MonomialFunction:
    """x^i y^j with j in {0, 1}; pole order at infinity is 2i + w*j where
    w is 3 on an elliptic model and deg f on an odd hyperelliptic one."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < 0 or self.j not in (0, 1):
            raise ValueError("need i >= 0 and j in {0, 1}")

    def pole_order(self, y_weight: int = ELLIPTIC_Y_WEIGHT) -> int:
        return 2 * self.i + y_weight * self.j

    def evaluate(self, pt: CurvePoint, p: int) -> int:
        if pt.is_infinity:
            raise InfinityEvaluation("monomials have their pole at infinity")
        return pow(pt.x, self.i, p) * pow(pt.y, self.j, p) % p

    def __repr__(self):
        parts = []
        if self.i:
            parts.append("x" if self.i == 1 else f"x^{self.i}")
        if self.j:
            parts.append("y")
        return "*".join(parts) if parts else "1"


def one_point_basis(a: int, y_weight: int = ELLIPTIC_Y_WEIGHT) -> tuple[MonomialFunction, ...]:
    """Monomials of pole order <= a at the point at infinity, sorted by
    pole order. For elliptic models (y_weight 3) and a >= 1 the count is a;
    below 2g - 1 on hyperelliptic models the enumeration is reported as is."""
    if a < 0:
        raise ValueError("pole bound must be nonnegative")
    mons = [
        MonomialFunction(i, j)
        for j in (0, 1)
        for i in range((a - y_weight * j) // 2 + 1)
        if 2 * i + y_weight * j <= a
    ]
    return tuple(sorted(mons, key=lambda m: m.pole_order(y_weight)))


QuadraticForm = Mapping[tuple[int, int, int], int]

PHI: QuadraticForm = {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}


def _eval_form(form: QuadraticForm, triple: tuple[int, int, int], p: int) -> int:
    x, y, z = triple
    total = 0
    for (i, j, k), c in form.items():
        total += c * pow(x, i, p) * pow(y, j, p) * pow(z, k, p)
    return total % p


@dataclass(frozen=True)
class ProjectiveFormRatio:
    """Quotient of two integer quadratic forms in (x, y, z); equal degrees
    make the value independent of projective scaling."""

    numerator: tuple[tuple[tuple[int, int, int], int], ...]
    denominator: tuple[tuple[tuple[int, int, int], int], ...]
    label: str

    @classmethod
    def of(cls, numerator: QuadraticForm, denominator: QuadraticForm, label: str):
        return cls(tuple(sorted(numerator.items())), tuple(sorted(denominator.items())), label)

    def evaluate(self, triple: tuple[int, int, int], p: int) -> int:
        if all(v % p == 0 for v in triple):
            raise ZeroTriple("(0, 0, 0) is not a projective point")
        den = _eval_form(dict(self.denominator), triple, p)
        if den == 0:
            raise DenominatorVanishes(f"denominator of {self.label} vanishes at {triple}")
        num = _eval_form(dict(self.numerator), triple, p)
        return num * inv_mod(den, p) % p

    def __repr__(self):
        return self.label


def conic_basis() -> tuple[ProjectiveFormRatio, ...]:
    """The six ratios {1, x^2/phi, y^2/phi, z^2/phi, xy/phi, yz/phi} with
    1 represented as phi/phi. Linear independence at any chosen point set
    is an empirical matter: the evaluation matrix rank decides."""
    mono = lambda e: {e: 1}
    return (
        ProjectiveFormRatio.of(PHI, PHI, "1"),
        ProjectiveFormRatio.of(mono((2, 0, 0)), PHI, "x^2/phi"),
        ProjectiveFormRatio.of(mono((0, 2, 0)), PHI, "y^2/phi"),
        ProjectiveFormRatio.of(mono((0, 0, 2)), PHI, "z^2/phi"),
        ProjectiveFormRatio.of(mono((1, 1, 0)), PHI, "xy/phi"),
        ProjectiveFormRatio.of(mono((0, 1, 1)), PHI, "yz/phi"),
    )


def eval_monomial(m: MonomialFunction, pt: CurvePoint, p: int) -> int:
    return m.evaluate(pt, p)


def eval_projective(r: ProjectiveFormRatio, triple: tuple[int, int, int], p: int) -> int:
    return r.evaluate(triple, p)


def quadratic_monomial_basis() -> tuple[ProjectiveFormRatio, ...]:
    """All six quadratic monomials over phi. This is the span the printed
    6x9 matrix of the worked conic example actually uses (xz in place of
    the constant), and it has full rank 6 at the nine rational points."""
    mono = lambda e: {e: 1}
    return (
        ProjectiveFormRatio.of(mono((2, 0, 0)), PHI, "x^2/phi"),
        ProjectiveFormRatio.of(mono((0, 2, 0)), PHI, "y^2/phi"),
        ProjectiveFormRatio.of(mono((0, 0, 2)), PHI, "z^2/phi"),
        ProjectiveFormRatio.of(mono((1, 1, 0)), PHI, "xy/phi"),
        ProjectiveFormRatio.of(mono((0, 1, 1)), PHI, "yz/phi"),
        ProjectiveFormRatio.of(mono((1, 0, 1)), PHI, "xz/phi"),
    )
