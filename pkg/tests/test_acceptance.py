"""Acceptance suite: one test per criterion, each printing a PASS/FAIL
line (run with `pytest -s tests/test_acceptance.py` to see them inline).

Exact-integer checks carry zero tolerance; real-valued checks use 1e-9.
The heavy enumerations share the session-scoped distribution fixture; the
deepest cross-check enumerates 13^9 dual words and runs by default, while
the 13^10-word variant is opt-in via `-m slow`.
"""
from __future__ import annotations

import time
import warnings

import pytest

from conftest import criterion, table2_code, x7x_code
from curvecodes import agcodes, bounds, curves, qseries, report, riemannroch
from curvecodes.agcodes import (
    code_parameters,
    code_parameters_from_distribution,
    macwilliams_transform,
    parity_check_matrix,
    shokrollahi_check,
    weight_distribution,
)
from curvecodes.errors import TooLarge
from curvecodes.ffcore import is_prime

TOL = 1e-9

TABLE2_FULL = {
    2: {0: 1, 15: 96, 16: 12, 17: 60},
    3: {0: 1, 14: 456, 15: 264, 16: 960, 17: 516},
    4: {0: 1, 13: 1608, 14: 1728, 15: 8016, 16: 9684, 17: 7524},
}
TABLE2_PARTIAL = {
    5: ({12: 4104, 13: 8040}, 94644),
    6: ({11: 8232, 12: 24864}, 1239540),
    7: ({10: 12984, 11: 57624}, 16090116),
    8: ({9: 16272, 10: 103200}, 209219292),
    9: ({8: 16176, 9: 146136}, 2719777524),
    10: ({7: 12912, 8: 162600}, 35357193732),
}


def test_criterion_1_table2_reproduction(table2_dists):
    with criterion(1, "weight enumerator table reproduced for a=2..10"):
        start = time.monotonic()
        for a in (2, 3, 4):
            got = {w: c for w, c in enumerate(table2_dists[a].counts) if c}
            assert got == TABLE2_FULL[a], f"a={a}"
        for a in (5, 6):
            # full rows are elided in print; every printed coefficient must match
            lead, const = TABLE2_PARTIAL[a]
            for w, c in lead.items():
                assert table2_dists[a].counts[w] == c, f"a={a}, w={w}"
            assert table2_dists[a].counts[17] == const
        for a in (7, 8, 9, 10):
            lead, const = TABLE2_PARTIAL[a]
            for w, c in lead.items():
                assert table2_dists[a].counts[w] == c, f"a={a}, w={w}"
            assert table2_dists[a].counts[17] == const
        for a in range(2, 11):
            assert table2_dists[a].total() == 13**a
        elapsed = time.monotonic() - start
        assert elapsed < 120, f"post-fixture checks took {elapsed}s"


def test_criterion_1_runtime_budget():
    # the two largest single enumerations stated in the runtime note,
    # measured fresh: the 4.8M-word direct side and the 63M-word dual side
    with criterion(1, "runtime: a=6 direct and a=10 dual well under the two-minute budget"):
        start = time.monotonic()
        weight_distribution(table2_code(6), strategy="direct")
        weight_distribution(table2_code(10), strategy="dual")
        assert time.monotonic() - start < 120


def test_criterion_2_dual_direct_agreement(table2_dists):
    with criterion(2, "direct and dual+transform paths agree (zero tolerance)"):
        for code in (x7x_code(2), x7x_code(4)):
            assert (
                weight_distribution(code, strategy="direct").counts
                == weight_distribution(code, strategy="dual").counts
            )
        pts = [
            pt
            for pt in curves.enumerate_points(curves.x0_model(19).model, 3)
            if not pt.is_infinity
        ]
        small = agcodes.evaluation_code(riemannroch.one_point_basis(2), pts, 3)
        assert (
            weight_distribution(small, strategy="direct").counts
            == weight_distribution(small, strategy="dual").counts
        )
        # deepest both-feasible point of the [17, a] family: 13^8 direct
        # against 13^9 dual words
        direct = weight_distribution(table2_code(8), strategy="direct", jobs=2)
        dual = weight_distribution(
            table2_code(8), strategy="dual", max_words=11_000_000_000, jobs=2
        )
        assert direct.counts == dual.counts
        assert direct.counts == table2_dists[8].counts


def test_criterion_2_infeasible_sides_are_guarded():
    # for a <= 7 the dual side needs 13^10..13^15 words; the operation
    # refuses rather than pretending the check ran
    with criterion(2, "out-of-reach dual enumerations raise TooLarge (a=2..7)"):
        for a in (2, 7):
            with pytest.raises(TooLarge):
                weight_distribution(table2_code(a), strategy="dual")


@pytest.mark.slow
def test_criterion_2_slow_a7_dual():
    with criterion(2, "a=7: direct equals dual path (13^10 words, slow)"):
        direct = weight_distribution(table2_code(7), strategy="direct", jobs=2)
        dual = weight_distribution(
            table2_code(7), strategy="dual", max_words=140_000_000_000, jobs=2
        )
        assert direct.counts == dual.counts


@pytest.mark.slow
def test_criterion_2_slow_a9_direct():
    # the a=9 row is consumed through the dual path; confirm it against a
    # full 13^9-word direct enumeration
    with criterion(2, "a=9: dual path equals direct enumeration (13^9 words, slow)"):
        dual = weight_distribution(table2_code(9), strategy="dual", jobs=2)
        direct = weight_distribution(
            table2_code(9), strategy="direct", max_words=11_000_000_000, jobs=2
        )
        assert direct.counts == dual.counts


@pytest.mark.slow
def test_criterion_2_slow_a10_direct():
    with criterion(2, "a=10: dual path equals direct enumeration (13^10 words, slow)"):
        dual = weight_distribution(table2_code(10), strategy="dual", jobs=2)
        direct = weight_distribution(
            table2_code(10), strategy="direct", max_words=140_000_000_000, jobs=2
        )
        assert direct.counts == dual.counts


def test_criterion_2_transform_involution(table2_dists):
    with criterion(2, "transform involution on computed distributions"):
        for a in range(2, 11):
            dual = macwilliams_transform(table2_dists[a], 17, a, 13)
            assert dual.counts[0] == 1 and dual.total() == 13 ** (17 - a)
            back = macwilliams_transform(dual, 17, 17 - a, 13)
            assert back.counts == table2_dists[a].counts


def test_criterion_3_minimum_weight_erratum(table2_dists):
    with criterion(3, "a=3 minimum-weight count: 456 (table) correct, 384 (text) erratum"):
        a14 = table2_dists[3].counts[14]
        assert a14 == 456
        assert a14 != 384
        assert table2_dists[3].min_nonzero_weight() == 14


def test_criterion_4_x7x_codes():
    with criterion(4, "[7,2,6] and [7,3,5] codes with exact enumerators, MDS, H G^T = 0"):
        c2 = x7x_code(2)
        d2 = weight_distribution(c2)
        p2 = code_parameters(c2)
        assert (p2.n, p2.k, p2.d) == (7, 2, 6)
        assert d2.polynomial_text("plain") == "1+42x^6+6x^7"
        assert p2.mds
        c4 = x7x_code(4)
        d4 = weight_distribution(c4)
        p4 = code_parameters(c4)
        assert (p4.n, p4.k, p4.d) == (7, 3, 5)
        assert d4.polynomial_text("plain") == "1+126x^5+84x^6+132x^7"
        for code in (c2, c4):
            h = parity_check_matrix(code)
            assert (h @ code.generator.transpose()).is_zero()


def test_criterion_5_point_counts():
    with criterion(5, "point enumerations match the printed listings"):
        pts = curves.enumerate_points(curves.x0_model(19).model, 13)
        assert [(pt.x, pt.y) for pt in pts if not pt.is_infinity] == [
            (0, 0), (0, 12), (1, 6), (3, 0), (3, 12), (4, 2), (4, 10),
            (5, 3), (5, 9), (8, 3), (8, 9), (9, 0), (9, 12), (11, 4),
            (11, 8), (12, 3), (12, 9),
        ]
        assert len(pts) == 18
        for p in (3, 7, 11, 19):
            m = curves.WeierstrassModel(0, 0, 0, -1, 0)
            assert len(curves.enumerate_points(m, p)) == p + 1
        pts3 = curves.enumerate_points(curves.x0_model(19).model, 3)
        assert len(pts3) == 6
        assert [(pt.x, pt.y) for pt in pts3 if not pt.is_infinity] == [
            (0, 0), (0, 2), (1, 0), (1, 2), (2, 1),
        ]


def test_criterion_6_hecke_cross_validation():
    with criterion(6, "trace by count equals eta coefficient at p in {2,3,5,7,13}"):
        for p in (2, 3, 5, 7, 13):
            assert curves.hecke_trace_by_count(11, p) == qseries.hecke_coeff_level11(p)
        assert curves.hecke_trace_by_count(11, 3) == -1


def test_criterion_7_qseries():
    with criterion(7, "j coefficients, the seven eta-form terms, eta^24 to order 60"):
        j = qseries.j_series(4)
        assert [j.coeff(e) for e in range(-1, 4)] == [
            1, 744, 196884, 21493760, 864299970,
        ]
        f = qseries.eta_quotient(qseries.LEVEL11_ETA_SPEC, 8)
        assert [f.coeff(n) for n in range(1, 8)] == [1, -2, -1, 2, 1, 2, -2]
        d = qseries.delta_series(60)
        e = qseries.eta_quotient(qseries.EtaQuotientSpec(((1, 24),)), 60)
        assert d.low == e.low and d.coeffs == e.coeffs


def test_criterion_8_genus_formula():
    with criterion(8, "genus values for both level lists and the prime shortcut"):
        for N in bounds.GENUS_ONE_LEVELS:
            assert bounds.genus_x0(N).genus == 1, N
        for N in bounds.GENUS_ZERO_LEVELS:
            assert bounds.genus_x0(N).genus == 0, N
        for N in range(13, 602, 12):
            if is_prime(N):
                assert bounds.genus_prime_1mod12(N) == bounds.genus_x0(N).genus


def test_criterion_9_template_fit(table2_dists):
    with criterion(9, "degree-2 template with B_2 = 96 and zero remainder"):
        res = shokrollahi_check(table2_dists[2], 17, 2, 13)
        assert res.consistent
        assert res.B_a == 96
        assert res.gcd_condition_holds


def test_criterion_10_bounds(table2_dists):
    with criterion(10, "bound endpoints, the excess interval, sum inequality"):
        for q in (2, 3, 4, 49):
            assert abs(bounds.gv_bound(q, 0.0) - 1.0) < TOL
            assert abs(bounds.gv_bound(q, (q - 1) / q)) < TOL
        assert bounds.tvz_exceeds_gv(49) is not None
        assert bounds.tvz_exceeds_gv(4) is None
        for a in range(2, 11):
            par = code_parameters_from_distribution(table2_dists[a], 17, a)
            assert (par.d + par.k) / 17 >= bounds.prop7_bound(1, 17) - TOL
        for code, genus in ((x7x_code(2), 3), (x7x_code(4), 3)):
            par = code_parameters(code)
            assert (par.d + par.k) / par.n >= bounds.prop7_bound(genus, par.n) - TOL
        full_conic = agcodes.evaluation_code(
            riemannroch.quadratic_monomial_basis(), report.CONIC_POINTS, 7
        )
        par = code_parameters(full_conic)
        assert (par.d + par.k) / par.n >= bounds.prop7_bound(1, par.n) - TOL
        assert par.d + par.k == par.n  # genus 1: equality, 6 + 3 = 9
        # the rank-5 subcode spanned by the defective printed family sits
        # strictly below the bound: it does not span the full function space,
        # so the dimension count behind the inequality does not apply to it
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            conic = agcodes.evaluation_code(
                riemannroch.conic_basis(), report.CONIC_POINTS, 7
            )
        sub = code_parameters(conic)
        assert (sub.d + sub.k) / sub.n < bounds.prop7_bound(1, sub.n)


def test_criterion_11_conic_example():
    with criterion(11, "conic example recomputed; printed-matrix errata adjudicated"):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            code = agcodes.evaluation_code(
                riemannroch.conic_basis(), report.CONIC_POINTS, 7
            )
        assert code.raw_generator.rows == 6 and code.raw_generator.cols == 9
        assert code.k == 5  # the stated family is dependent: rank 5, not 6
        dist = weight_distribution(code)
        assert dist.min_nonzero_weight() == 3  # printed claim holds regardless
        full = agcodes.evaluation_code(
            riemannroch.quadratic_monomial_basis(), report.CONIC_POINTS, 7
        )
        assert full.k == 6
        assert weight_distribution(full).min_nonzero_weight() == 3
        h = parity_check_matrix(code)
        assert (h @ code.generator.transpose()).is_zero()

        rep = report.build_report(only="example13")
        status = {row.ident: row.status for row in rep.rows}
        assert status["e1"] == "ERRATUM"  # rank 5 dependency
        assert status["e2"] == "ERRATUM"  # printed matrix skips the phi division
        assert status["e3"] == "ERRATUM"  # the [1, 0, 2] entry
        assert status["e5"] == "ERRATUM"  # printed check matrix first row
        assert status["e4"] == "REPORT"
        for ident in ("e6", "e7", "e8", "e9"):
            assert status[ident] == "PASS"
        assert rep.ok
