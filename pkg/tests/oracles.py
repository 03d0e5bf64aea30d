"""Deliberately naive reference implementations used as independent
oracles. Nothing here shares code with the package's fast paths: points
come from double loops over the field, weight counts from enumerating
every codeword in pure Python, and linear algebra runs over Fractions.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd


def naive_legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    squares = {x * x % p for x in range(1, p)}
    return 1 if a in squares else -1


def naive_points(h, f, p):
    """Affine solutions of y^2 + h(x) y = f(x) by exhaustion."""
    def ev(c, x):
        return sum(ci * pow(x, i, p) for i, ci in enumerate(c)) % p

    return sorted(
        (x, y)
        for x in range(p)
        for y in range(p)
        if (y * y + ev(h, x) * y - ev(f, x)) % p == 0
    )


def naive_weight_counts(rows, p: int):
    """Weight counts over the row span, one codeword at a time."""
    if not rows:
        return [1]
    n = len(rows[0])
    counts = [0] * (n + 1)
    for coeffs in product(range(p), repeat=len(rows)):
        w = 0
        for j in range(n):
            v = sum(coeffs[i] * rows[i][j] for i in range(len(rows)))
            if v % p:
                w += 1
        counts[w] += 1
    return counts


def naive_sigma(r: int, n: int) -> int:
    return sum(d**r for d in range(1, n + 1) if n % d == 0)


def naive_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def count_points_gf_p2(f, p: int, nonresidue: int) -> int:
    """|{y^2 = f(x)}| over GF(p^2) = GF(p)[t]/(t^2 - nonresidue), plus one
    point at infinity for odd-degree f. Pure quadratic-field arithmetic."""
    def mul(a, b):
        # (a0 + a1 t)(b0 + b1 t), t^2 = nonresidue
        return (
            (a[0] * b[0] + nonresidue * a[1] * b[1]) % p,
            (a[0] * b[1] + a[1] * b[0]) % p,
        )

    def ev(x):
        acc = (0, 0)
        for c in reversed(f):
            acc = mul(acc, x)
            acc = ((acc[0] + c) % p, acc[1])
        return acc

    elements = [(u, v) for u in range(p) for v in range(p)]
    squares = {}
    for e in elements:
        squares.setdefault(mul(e, e), 0)
        squares[mul(e, e)] += 1
    count = 0
    for x in elements:
        fx = ev(x)
        count += squares.get(fx, 0)
    return count + 1


def fraction_kernel(rows: list[list[int]]) -> list[list[Fraction]]:
    """Basis of the right kernel of the matrix, exact over Q."""
    mat = [[Fraction(v) for v in row] for row in rows]
    ncols = len(mat[0]) if mat else 0
    pivots: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pv = mat[r][c]
        mat[r] = [v / pv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                fct = mat[i][c]
                mat[i] = [x - fct * y for x, y in zip(mat[i], mat[r])]
        pivots[c] = r
        r += 1
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for c, rr in pivots.items():
            vec[c] = -mat[rr][fc]
        basis.append(vec)
    return basis
