"""Evaluation codes and their invariants: generator and check matrices,
exact weight distributions (direct or through the dual and the MacWilliams
transform), minimum distance, and the degree-a template consistency check.

The codeword enumeration walks all p^k information vectors (or the dual's
p^(n-k)) with a vectorized kernel: a base table holds the span of the last
few generator rows, the remaining rows drive a prefix loop, and per-prefix
weights reduce to column comparisons against a target vector. Counts are
exact int64 tallies merged into Python integers.
"""
from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb, gcd, factorial
from typing import Sequence

import numpy as np

from .errors import (
    DenominatorVanishes,
    DuplicatePoint,
    InfinityEvaluation,
    NonIntegralResult,
    SupportCollision,
    TooLarge,
)
from .ffcore import (
    FFMatrix,
    apply_column_permutation,
    check_matrix,
    inv_mod,
    invert_permutation,
    standard_form,
)

DEFAULT_MAX_WORDS = 2_100_000_000
_BASE_CAP = 5_000_000
_CHUNK = 1 << 17


@dataclass(frozen=True)
class LinearCode:
    """Linear [n, k] code over GF(p) with a full-rank generator matrix."""

    p: int
    n: int
    k: int
    generator: FFMatrix
    provenance: str = ""
    dropped_rows: tuple[int, ...] = ()
    raw_generator: FFMatrix | None = None


@dataclass(frozen=True)
class WeightDistribution:
    """Counts A_0..A_n of codewords by Hamming weight."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise ValueError("weight counts must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    def total(self) -> int:
        return sum(self.counts)

    def min_nonzero_weight(self) -> int:
        for w in range(1, len(self.counts)):
            if self.counts[w]:
                return w
        raise ValueError("distribution has no nonzero-weight words")

    def polynomial_text(self, convention: str = "table2") -> str:
        """Render as a one-variable polynomial. `table2` uses exponent n-w
        (the zero word prints as x^n), `plain` uses exponent w."""
        n = self.n
        if convention == "table2":
            terms = [(n - w, c) for w, c in enumerate(self.counts) if c]
            terms.sort(key=lambda t: -t[0])
        elif convention == "plain":
            terms = [(w, c) for w, c in enumerate(self.counts) if c]
            terms.sort(key=lambda t: t[0])
        else:
            raise ValueError(f"unknown convention {convention!r}")
        parts = []
        for e, c in terms:
            if e == 0:
                parts.append(str(c))
            else:
                x = "x" if e == 1 else f"x^{e}"
                parts.append(x if c == 1 else f"{c}{x}")
        return "+".join(parts) if parts else "0"


@dataclass(frozen=True)
class CodeParameters:
    n: int
    k: int
    d: int
    mds: bool
    t: int


@dataclass(frozen=True)
class ShokrollahiResult:
    """Fit of a weight distribution against the degree-a enumerator
    template x^n + sum_(i<a) C(n,i)(q^(a-i)-1)(x-1)^i + B_a (x-1)^a."""

    consistent: bool
    B_a: int | None
    gcd_condition_holds: bool


# ---------------------------------------------------------------------------
# code construction

def _projective_key(triple: tuple[int, int, int], p: int) -> tuple[int, int, int]:
    reduced = tuple(v % p for v in triple)
    for v in reduced:
        if v:
            s = inv_mod(v, p)
            return tuple(u * s % p for u in reduced)
    return reduced


def evaluation_code(
    basis: Sequence, points: Sequence, p: int, provenance: str = ""
) -> LinearCode:
    """Code spanned by (f(P_1), ..., f(P_n)) over the basis functions.

    Points must be pairwise distinct and disjoint from the divisor support
    (affine for pole-at-infinity monomials, denominator nonvanishing for
    projective ratios). Dependent rows are dropped with a warning and the
    dimension becomes the matrix rank.
    """
    from .curves import CurvePoint

    if not basis:
        raise ValueError("basis must be nonempty")
    if not points:
        raise ValueError("need at least one evaluation point")
    seen = set()
    for pt in points:
        if isinstance(pt, CurvePoint):
            if pt.is_infinity:
                raise SupportCollision("the divisor is supported at infinity")
            key = ("affine", pt.x % p, pt.y % p)
        else:
            key = ("proj",) + _projective_key(tuple(pt), p)
        if key in seen:
            raise DuplicatePoint(f"evaluation point {pt} repeats")
        seen.add(key)

    rows = []
    for f in basis:
        row = []
        for pt in points:
            try:
                row.append(f.evaluate(pt, p) % p)
            except (InfinityEvaluation, DenominatorVanishes) as exc:
                raise SupportCollision(str(exc)) from exc
        rows.append(row)
    raw = FFMatrix.from_rows(rows, p)

    kept: list[int] = []
    span: list[list[int]] = []
    pivots: list[int] = []
    for idx, row in enumerate(rows):
        work = [v % p for v in row]
        for prow, pc in zip(span, pivots):
            if work[pc]:
                f = work[pc]
                work = [(a - f * b) % p for a, b in zip(work, prow)]
        pc = next((j for j, v in enumerate(work) if v), None)
        if pc is None:
            continue
        s = inv_mod(work[pc], p)
        span.append([v * s % p for v in work])
        pivots.append(pc)
        kept.append(idx)
    dropped = tuple(i for i in range(len(rows)) if i not in kept)
    if dropped:
        warnings.warn(
            f"evaluation matrix rank {len(kept)} < {len(rows)} basis functions; "
            f"dropping dependent rows {dropped}",
            stacklevel=2,
        )
    gen = FFMatrix.from_rows([rows[i] for i in kept], p)
    return LinearCode(
        p=p,
        n=len(points),
        k=len(kept),
        generator=gen,
        provenance=provenance,
        dropped_rows=dropped,
        raw_generator=raw,
    )


def parity_check_matrix(code: LinearCode) -> FFMatrix:
    """H with H * G^T = 0 and rank n - k, in the original column order."""
    gstd, perm, rank = standard_form(code.generator)
    if rank != code.k:
        raise ValueError("generator matrix is not full rank")
    sys_rows = apply_column_permutation(gstd, perm).row_list()[:rank]
    h_perm = check_matrix(FFMatrix.from_rows(sys_rows, code.p))
    h = apply_column_permutation(h_perm, invert_permutation(perm))
    prod = h @ code.generator.transpose()
    assert prod.is_zero(), "parity-check construction failed"
    return h


def systematic_form(code: LinearCode) -> tuple[FFMatrix, tuple[int, ...]]:
    """([I | A], column permutation) for the code's generator."""
    gstd, perm, rank = standard_form(code.generator)
    if rank != code.k:
        raise ValueError("generator matrix is not full rank")
    return apply_column_permutation(gstd, perm), perm


# ---------------------------------------------------------------------------
# weight enumeration engine

def _build_base(rows: np.ndarray, p: int, n: int, dtype) -> np.ndarray:
    """Column table of every combination of the given rows: shape
    (n, p^len(rows)), contiguous along the combination axis. Entries stay
    below p, so one add plus a conditional subtract keeps them reduced
    without any per-element division."""
    table = np.zeros((n, 1), dtype=dtype)
    for row in rows:
        m = table.shape[1]
        out = np.empty((n, m * p), dtype=dtype)
        for c in range(p):
            off = ((c * row) % p).astype(dtype)
            blk = out[:, c * m : (c + 1) * m]
            np.add(table, off[:, None], out=blk)
            np.subtract(blk, p, out=blk, where=blk >= p)
        table = out
    return table


def _count_prefix_range(
    rows: list[tuple[int, ...]],
    p: int,
    n: int,
    base_digits: int,
    start: int,
    end: int,
) -> list[int]:
    """Weight counts for prefix indices [start, end), base span included."""
    # uint8 needs headroom for the pre-reduction sum (< 2p) and weights (<= n)
    dtype = np.uint8 if 2 * p <= 255 and n < 256 else np.int64
    k = len(rows)
    grows = np.array(rows, dtype=np.int64)
    base = _build_base(grows[k - base_digits :], p, n, dtype)
    m = base.shape[1]
    head = grows[: k - base_digits]
    counts = np.zeros(n + 1, dtype=np.int64)
    acc = np.empty(min(_CHUNK, m), dtype=dtype)
    tmp = np.empty(min(_CHUNK, m), dtype=dtype)
    for pidx in range(start, end):
        digits = []
        q = pidx
        for _ in range(len(head)):
            digits.append(q % p)
            q //= p
        digits.reverse()  # most significant digit first: lexicographic order
        offset = np.zeros(n, dtype=np.int64)
        for d, row in zip(digits, head):
            offset = (offset + d * row) % p
        target = ((p - offset) % p).astype(dtype)
        for lo in range(0, m, _CHUNK):
            hi = min(lo + _CHUNK, m)
            a = acc[: hi - lo]
            b = tmp[: hi - lo]
            np.not_equal(base[0, lo:hi], target[0], out=a)
            for c in range(1, n):
                np.not_equal(base[c, lo:hi], target[c], out=b)
                a += b
            counts += np.bincount(a, minlength=n + 1)
    return [int(v) for v in counts]


def _span_weight_counts(
    rows: Sequence[Sequence[int]], p: int, n: int, jobs: int = 1
) -> list[int]:
    """Exact weight counts over the row span, all p^k words included."""
    rows = [tuple(int(v) % p for v in r) for r in rows]
    for r in rows:
        if len(r) != n:
            raise ValueError("row length disagrees with code length")
    k = len(rows)
    if k == 0:
        return [1] + [0] * n
    base_digits = 1
    while base_digits < k and p ** (base_digits + 1) <= _BASE_CAP:
        base_digits += 1
    prefixes = p ** (k - base_digits)
    if jobs <= 1 or prefixes < 2 * jobs:
        return _count_prefix_range(rows, p, n, base_digits, 0, prefixes)
    bounds = [prefixes * i // jobs for i in range(jobs + 1)]
    totals = [0] * (n + 1)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_count_prefix_range, rows, p, n, base_digits, lo, hi)
            for lo, hi in zip(bounds, bounds[1:])
            if hi > lo
        ]
        for fut in futures:
            for w, c in enumerate(fut.result()):
                totals[w] += c
    return totals


def weight_distribution(
    code: LinearCode,
    strategy: str = "auto",
    max_words: int = DEFAULT_MAX_WORDS,
    jobs: int = 1,
) -> WeightDistribution:
    """Exact weight distribution A_0..A_n.

    `auto` enumerates the p^k codewords when k <= n-k and otherwise the
    dual's p^(n-k) words followed by the MacWilliams transform. Either side
    can be forced with `direct` or `dual`. Budgets above `max_words`
    enumerated words raise TooLarge.
    """
    p, n, k = code.p, code.n, code.k
    if strategy == "auto":
        strategy = "direct" if k <= n - k else "dual"
    if strategy not in ("direct", "dual"):
        raise ValueError(f"unknown strategy {strategy!r}")
    words = p**k if strategy == "direct" else p ** (n - k)
    if words > max_words:
        raise TooLarge(
            f"{strategy} enumeration needs {words} words, budget is {max_words}"
        )
    if strategy == "direct":
        counts = _span_weight_counts(code.generator.row_list(), p, n, jobs=jobs)
        dist = WeightDistribution(tuple(counts))
    else:
        h = parity_check_matrix(code)
        counts = _span_weight_counts(h.row_list(), p, n, jobs=jobs)
        dual_dist = WeightDistribution(tuple(counts))
        dist = macwilliams_transform(dual_dist, n, n - k, p)
    if dist.counts[0] != 1 or dist.total() != p**k:
        raise NonIntegralResult("weight distribution failed its sum checks")
    return dist


def macwilliams_transform(W: WeightDistribution, n: int, k: int, p: int) -> WeightDistribution:
    """Distribution of the dual of an (n, k) code over GF(p) whose own
    distribution is W, via the Krawtchouk kernel, exactly in integers."""
    if W.n != n:
        raise ValueError("distribution length disagrees with n")
    size = p**k
    out = []
    for w in range(n + 1):
        total = 0
        for v, a_v in enumerate(W.counts):
            if not a_v:
                continue
            kw = 0
            for j in range(max(0, w - (n - v)), min(v, w) + 1):
                kw += (-1) ** j * (p - 1) ** (w - j) * comb(v, j) * comb(n - v, w - j)
            total += a_v * kw
        q, r = divmod(total, size)
        if r:
            raise NonIntegralResult(f"dual count at weight {w} is {total}/{size}")
        out.append(q)
    return WeightDistribution(tuple(out))


def min_distance(code: LinearCode, **kwargs) -> int:
    """Minimum nonzero codeword weight."""
    if code.k == 0:
        raise ValueError("the zero code has no minimum distance")
    return weight_distribution(code, **kwargs).min_nonzero_weight()


def code_parameters(code: LinearCode, **kwargs) -> CodeParameters:
    d = min_distance(code, **kwargs)
    return CodeParameters(
        n=code.n, k=code.k, d=d, mds=(d == code.n - code.k + 1), t=(d - 1) // 2
    )


def code_parameters_from_distribution(
    W: WeightDistribution, n: int, k: int
) -> CodeParameters:
    d = W.min_nonzero_weight()
    return CodeParameters(n=n, k=k, d=d, mds=(d == n - k + 1), t=(d - 1) // 2)


# ---------------------------------------------------------------------------
# enumerator template and parameter inequalities

def _poly_sub(a: list[int], b: list[int]) -> list[int]:
    size = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(size)
    ]


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                out[i + j] += av * bv
    return out


def _divide_by_x_minus_1(r: list[int]) -> tuple[list[int], int]:
    d = len(r) - 1
    while d > 0 and r[d] == 0:
        d -= 1
    if d == 0:
        return [0], r[0]
    q = [0] * d
    q[d - 1] = r[d]
    for i in range(d - 2, -1, -1):
        q[i] = r[i + 1] + q[i + 1]
    rem = r[0] + q[0]
    return q, rem


def shokrollahi_check(
    W: WeightDistribution, n: int, a: int, p: int
) -> ShokrollahiResult:
    """Solve for the constant B_a making W fit the degree-a template.

    The distribution converts to sum_w A_w x^(n-w); after subtracting
    x^n + sum_(i<a) C(n,i)(p^(a-i)-1)(x-1)^i the remainder must be exactly
    B_a (x-1)^a with B_a a nonnegative integer.
    """
    if W.n != n:
        raise ValueError("distribution length disagrees with n")
    poly = [0] * (n + 1)
    for w, c in enumerate(W.counts):
        poly[n - w] += c
    fixed = [0] * (n + 1)
    fixed[n] = 1
    xm1 = [1]
    for i in range(a):
        term = comb(n, i) * (p ** (a - i) - 1)
        for e, c in enumerate(xm1):
            fixed[e] += term * c
        xm1 = _poly_mul(xm1, [-1, 1])
    rest = _poly_sub(poly, fixed)
    for _ in range(a):
        rest, rem = _divide_by_x_minus_1(rest)
        if rem != 0:
            return ShokrollahiResult(False, None, gcd(n, factorial(a)) == 1)
    constant_ok = all(c == 0 for c in rest[1:]) and rest[0] >= 0
    b_a = rest[0] if constant_ok else None
    return ShokrollahiResult(constant_ok, b_a, gcd(n, factorial(a)) == 1)


def elliptic_sum_property(params: CodeParameters, g: int) -> bool:
    """k + d >= n - g + 1 always, sharpened to n <= k+d <= n+1 at genus 1."""
    n, k, d = params.n, params.k, params.d
    if k + d < n - g + 1:
        return False
    if g == 1 and not (n <= k + d <= n + 1):
        return False
    return True
