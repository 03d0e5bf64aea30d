"""Exact arithmetic over prime fields GF(p): scalars, vectors, matrices.

All values are plain Python integers reduced into [0, p); matrices are
immutable row-major tuples. Nothing here ever touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    CompositeModulus,
    EvenModulus,
    LengthMismatch,
    ModulusMismatch,
    NotSystematic,
    ZeroInverse,
)

MAX_MODULUS = 2**31

_verified_primes: set[int] = set()


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for desk-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def require_prime(p: int) -> int:
    if p in _verified_primes:
        return p
    if not isinstance(p, int) or p < 2 or p >= MAX_MODULUS or not is_prime(p):
        raise CompositeModulus(f"modulus {p!r} is not a prime below 2^31")
    _verified_primes.add(p)
    return p


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse in GF({p})")
    return pow(a, p - 2, p)


@dataclass(frozen=True)
class PrimeFieldElement:
    """A residue in GF(p). Arithmetic stays reduced and exact."""

    value: int
    p: int

    def __post_init__(self):
        require_prime(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> "PrimeFieldElement":
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ModulusMismatch(f"GF({self.p}) vs GF({other.p})")
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return PrimeFieldElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return PrimeFieldElement(self.value - other.value, self.p)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return PrimeFieldElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return PrimeFieldElement(pow(self.value, e, self.p), self.p)

    def inverse(self) -> "PrimeFieldElement":
        return PrimeFieldElement(inv_mod(self.value, self.p), self.p)

    def __int__(self) -> int:
        return self.value


_FIELD_OPS = {"add", "sub", "mul", "div", "pow", "inv", "neg"}


def field_arith(a: PrimeFieldElement, b, op: str) -> PrimeFieldElement:
    """Single-dispatch field arithmetic. `b` is an exponent for `pow`,
    ignored for the unary ops `inv` and `neg`."""
    if op not in _FIELD_OPS:
        raise ValueError(f"unknown field op {op!r}")
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if op == "pow":
        return a ** int(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    return a / b


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for odd prime p via Euler's criterion."""
    require_prime(p)
    if p == 2:
        raise EvenModulus("Legendre symbol needs an odd prime")
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


@dataclass(frozen=True)
class FFVector:
    """Vector over GF(p), entries stored as reduced integers."""

    entries: tuple[int, ...]
    p: int

    def __post_init__(self):
        require_prime(self.p)
        object.__setattr__(self, "entries", tuple(v % self.p for v in self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def weight(self) -> int:
        return sum(1 for v in self.entries if v)


def hamming(x: FFVector, y: FFVector) -> int:
    """Number of coordinates where x and y differ."""
    if x.p != y.p:
        raise ModulusMismatch(f"GF({x.p}) vs GF({y.p})")
    if len(x) != len(y):
        raise LengthMismatch(f"lengths {len(x)} vs {len(y)}")
    return sum(1 for a, b in zip(x.entries, y.entries) if a != b)


@dataclass(frozen=True)
class FFMatrix:
    """Dense row-major matrix over GF(p)."""

    rows: int
    cols: int
    entries: tuple[int, ...]
    p: int

    def __post_init__(self):
        require_prime(self.p)
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match rows*cols")
        object.__setattr__(self, "entries", tuple(v % self.p for v in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], p: int) -> "FFMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(v for r in rows for v in r)
        return cls(len(rows), ncols, flat, p)

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_list(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "FFMatrix":
        rows = self.row_list()
        return FFMatrix.from_rows(
            [[rows[i][j] for i in range(self.rows)] for j in range(self.cols)], self.p
        )

    def __matmul__(self, other: "FFMatrix") -> "FFMatrix":
        if self.p != other.p:
            raise ModulusMismatch(f"GF({self.p}) vs GF({other.p})")
        if self.cols != other.rows:
            raise ValueError("inner dimensions disagree")
        a, b, p = self.row_list(), other.row_list(), self.p
        out = [
            [sum(a[i][t] * b[t][j] for t in range(self.cols)) % p for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return FFMatrix.from_rows(out, p) if out else FFMatrix(0, other.cols, (), p)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries)


def _rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = inv_mod(rows[r][c], p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def standard_form(G: FFMatrix) -> tuple[FFMatrix, tuple[int, ...], int]:
    """Reduced row echelon form of G with its pivot bookkeeping.

    Returns (Gstd, column_permutation, rank). Gstd is the RREF with the
    original column order. column_permutation is a tuple sigma such that
    picking columns in the order sigma moves the pivot columns to the
    front, so the first `rank` rows become [I | A]; it is the identity
    whenever the leading `rank` columns are already the pivots.
    """
    rows, pivots = _rref(G.row_list(), G.p)
    rank = len(pivots)
    non_pivots = [c for c in range(G.cols) if c not in pivots]
    perm = tuple(pivots + non_pivots)
    return FFMatrix.from_rows(rows, G.p) if rows else G, perm, rank


def apply_column_permutation(M: FFMatrix, perm: Sequence[int]) -> FFMatrix:
    rows = M.row_list()
    return FFMatrix.from_rows([[r[j] for j in perm] for r in rows], M.p)


def invert_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


def check_matrix(Gstd: FFMatrix) -> FFMatrix:
    """Parity-check matrix [-A^T | I] for a systematic generator [I | A]."""
    k, n, p = Gstd.rows, Gstd.cols, Gstd.p
    if k > n:
        raise NotSystematic("more rows than columns")
    rows = Gstd.row_list()
    for i in range(k):
        for j in range(k):
            if rows[i][j] != (1 if i == j else 0):
                raise NotSystematic("left block is not the identity")
    a = [[rows[i][k + j] for j in range(n - k)] for i in range(k)]
    h = [
        [(-a[i][j]) % p for i in range(k)] + [1 if t == j else 0 for t in range(n - k)]
        for j in range(n - k)
    ]
    return FFMatrix.from_rows(h, p) if h else FFMatrix(0, n, (), p)


def matrix_rank(M: FFMatrix) -> int:
    return len(_rref(M.row_list(), M.p)[1])


def row_space_contains(M: FFMatrix, rows: Iterable[Sequence[int]]) -> bool:
    """True when every given row lies in the row space of M."""
    base = matrix_rank(M)
    stacked = M.row_list() + [list(r) for r in rows]
    return len(_rref(stacked, M.p)[1]) == base
