from __future__ import annotations

import random

import pytest
import sympy

from curvecodes import errors
from curvecodes.curves import (
    CATALOG_LEVELS,
    CurvePoint,
    HyperellipticModel,
    INFINITY,
    WeierstrassModel,
    discriminant,
    ec_add,
    ec_mul,
    ec_neg,
    enumerate_points,
    frobenius_count,
    group_structure,
    hasse_interval,
    hecke_trace_by_count,
    on_curve,
    point_order,
    poly_discriminant,
    x0_model,
)
from curvecodes.ffcore import is_prime
from curvecodes.qseries import hecke_coeff_level11
from oracles import count_points_gf_p2, naive_points

GOOD_PRIMES = [p for p in range(2, 102) if is_prime(p)]
X7X = HyperellipticModel(f=(0, -1, 0, 0, 0, 0, 0, 1))  # y^2 = x^7 - x


class TestDiscriminant:
    @pytest.mark.parametrize(
        "N,expected",
        [(11, -11), (32, 64), (14, -28), (20, 80), (27, -27), (36, -1769472), (49, -1404928)],
    )
    def test_catalog_values(self, N, expected):
        assert x0_model(N).discriminant == expected

    def test_all_catalog_recomputed(self):
        for N in CATALOG_LEVELS:
            entry = x0_model(N)
            assert discriminant(entry.model) == entry.discriminant

    @pytest.mark.parametrize(
        "coeffs",
        [(0, -1, 0, 0, 0, 1), (1, 4, -6, 4, 1), (3, 1, 2), (-3, -6, -9, 6, 1)],
    )
    def test_poly_discriminant_against_sympy(self, coeffs):
        x = sympy.symbols("x")
        poly = sum(c * x**i for i, c in enumerate(coeffs))
        assert poly_discriminant(tuple(coeffs)) == sympy.discriminant(poly, x)


class TestEnumeration:
    def test_level19_f13_matches_printed_list(self):
        pts = enumerate_points(x0_model(19).model, 13)
        assert len(pts) == 18
        affine = [(pt.x, pt.y) for pt in pts if not pt.is_infinity]
        assert affine == [
            (0, 0), (0, 12), (1, 6), (3, 0), (3, 12), (4, 2), (4, 10),
            (5, 3), (5, 9), (8, 3), (8, 9), (9, 0), (9, 12), (11, 4),
            (11, 8), (12, 3), (12, 9),
        ]
        assert pts[-1].is_infinity

    def test_level11_f3_has_five_points(self):
        pts = enumerate_points(x0_model(11).model, 3)
        assert [(pt.x, pt.y) for pt in pts if not pt.is_infinity] == [
            (0, 0), (0, 2), (1, 0), (1, 2),
        ]
        assert len(pts) == 5  # [2, 1] does not satisfy the equation

    def test_level19_f3_has_six_points(self):
        pts = enumerate_points(x0_model(19).model, 3)
        assert len(pts) == 6
        assert (2, 1) in {(pt.x, pt.y) for pt in pts if not pt.is_infinity}

    @pytest.mark.parametrize("p", [3, 7, 11, 19, 23])
    def test_x3_minus_x_count(self, p):
        assert len(enumerate_points(WeierstrassModel(0, 0, 0, -1, 0), p)) == p + 1

    def test_x7_minus_x_over_f7(self):
        pts = enumerate_points(X7X, 7)
        assert [(pt.x, pt.y) for pt in pts if not pt.is_infinity] == [
            (x, 0) for x in range(7)
        ]
        assert len(pts) == 8

    def test_singular_reduction(self):
        with pytest.raises(errors.SingularReduction):
            enumerate_points(x0_model(11).model, 11)

    @pytest.mark.parametrize("N", CATALOG_LEVELS)
    def test_hasse_window_all_good_primes(self, N):
        entry = x0_model(N)
        for p in GOOD_PRIMES:
            if entry.discriminant % p == 0:
                continue
            count = len(enumerate_points(entry.model, p))
            lo, hi = hasse_interval(p)
            assert lo <= count <= hi, (N, p, count)

    @pytest.mark.parametrize("N", CATALOG_LEVELS)
    def test_affine_agrees_with_naive(self, N):
        entry = x0_model(N)
        if isinstance(entry.model, WeierstrassModel):
            h, f = entry.model.h_coeffs(), entry.model.f_coeffs()
        else:
            h, f = entry.model.h, entry.model.f
        for p in [p for p in GOOD_PRIMES if p <= 23]:
            if entry.discriminant % p == 0:
                continue
            got = [(pt.x, pt.y) for pt in enumerate_points(entry.model, p) if not pt.is_infinity]
            assert got == naive_points(h, f, p), (N, p)

    def test_points_sorted_infinity_last(self):
        pts = enumerate_points(x0_model(19).model, 13)
        affine = [pt for pt in pts if not pt.is_infinity]
        assert affine == sorted(affine, key=lambda q: (q.x, q.y))
        assert all(pt.is_infinity for pt in pts[len(affine):])


class TestGroupLaw:
    MODEL = x0_model(19).model
    P13 = 13

    def test_identity_and_inverse(self):
        pts = enumerate_points(self.MODEL, self.P13)
        for pt in pts:
            assert ec_add(pt, INFINITY, self.MODEL, self.P13) == pt
            assert ec_add(pt, ec_neg(pt, self.MODEL, self.P13), self.MODEL, self.P13) == INFINITY

    def test_not_on_curve_rejected(self):
        with pytest.raises(errors.PointNotOnCurve):
            ec_add(CurvePoint(2, 2), INFINITY, self.MODEL, self.P13)

    @pytest.mark.parametrize(
        "model,p",
        [
            (MODEL, 13),
            (WeierstrassModel(0, 0, 0, -1, 0), 7),
            (WeierstrassModel(7, 4, 2, 1, 0), 13),  # nonzero a1/a3 branch
        ],
    )
    def test_group_axioms_random_triples(self, model, p):
        pts = enumerate_points(model, p)
        rng = random.Random(20240311)
        for _ in range(200):
            a, b, c = (rng.choice(pts) for _ in range(3))
            ab_c = ec_add(ec_add(a, b, model, p), c, model, p)
            a_bc = ec_add(a, ec_add(b, c, model, p), model, p)
            assert ab_c == a_bc
            assert ec_add(a, b, model, p) == ec_add(b, a, model, p)

    def test_orders_divide_group_order(self):
        pts = enumerate_points(self.MODEL, self.P13)
        assert len(pts) == 18
        for pt in pts:
            assert 18 % point_order(pt, self.MODEL, self.P13) == 0

    def test_scalar_multiple_matches_repeated_add(self):
        pts = enumerate_points(self.MODEL, self.P13)
        pt = pts[0]
        acc = INFINITY
        for n in range(1, 19):
            acc = ec_add(acc, pt, self.MODEL, self.P13)
            assert ec_mul(n, pt, self.MODEL, self.P13) == acc

    def test_dispatcher(self):
        from curvecodes.curves import ec_group

        pts = enumerate_points(self.MODEL, self.P13)
        P, Q = pts[0], pts[4]
        assert ec_group(P, Q, self.MODEL, self.P13, "add") == ec_add(P, Q, self.MODEL, self.P13)
        assert ec_group(P, None, self.MODEL, self.P13, "neg") == ec_neg(P, self.MODEL, self.P13)
        assert ec_group(P, None, self.MODEL, self.P13, "mul", n=5) == ec_mul(5, P, self.MODEL, self.P13)
        with pytest.raises(ValueError):
            ec_group(P, None, self.MODEL, self.P13, "mul")
        with pytest.raises(ValueError):
            ec_group(P, Q, self.MODEL, self.P13, "xor")


class TestGroupStructure:
    def test_level19_f13(self):
        d1, d2 = group_structure(x0_model(19).model, 13)
        assert d1 * d2 == 18 and d2 % d1 == 0

    def test_full_two_torsion_forces_even_d1(self):
        d1, d2 = group_structure(WeierstrassModel(0, 0, 0, -1, 0), 7)
        assert d1 % 2 == 0 and d1 * d2 == 8

    def test_prime_order_group_is_cyclic(self):
        d1, d2 = group_structure(x0_model(11).model, 3)
        assert (d1, d2) == (1, 5)


class TestCatalog:
    def test_examples(self):
        assert x0_model(11).discriminant == -11
        assert x0_model(20).discriminant == 80
        assert x0_model(27).discriminant == -27

    def test_missing_level(self):
        with pytest.raises(errors.NoModelForLevel):
            x0_model(13)


class TestHeckeTrace:
    def test_level11_p3(self):
        assert hecke_trace_by_count(11, 3) == -1

    def test_level11_p2(self):
        assert hecke_trace_by_count(11, 2) == -2

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 13])
    def test_matches_eta_coefficient(self, p):
        assert hecke_trace_by_count(11, p) == hecke_coeff_level11(p)

    def test_bad_reduction(self):
        with pytest.raises(errors.BadReduction):
            hecke_trace_by_count(11, 11)


class TestFrobeniusCount:
    def test_k1(self):
        for a_p in (-3, 0, 2):
            assert frobenius_count(a_p, 5, 1) == 5 + 1 - a_p

    def test_supersingular_f9(self):
        assert frobenius_count(0, 3, 2) == 16

    def test_against_gf9_exhaustion(self):
        # y^2 = x^3 - x over GF(9); -1 is not a square mod 3
        assert count_points_gf_p2((0, -1, 0, 1), 3, nonresidue=-1) == 16

    def test_against_gf25_exhaustion(self):
        # same curve over GF(5): 8 points, so the trace is -2; the recursion
        # then predicts 25 + 1 - (4 - 10) = 32 over GF(25)
        assert len(enumerate_points(WeierstrassModel(0, 0, 0, -1, 0), 5)) == 8
        assert frobenius_count(-2, 5, 2) == 32
        assert count_points_gf_p2((0, -1, 0, 1), 5, nonresidue=2) == 32

    def test_hasse_violation(self):
        with pytest.raises(errors.HasseViolation):
            frobenius_count(4, 3, 1)


def test_on_curve_infinity_always():
    assert on_curve(x0_model(11).model, INFINITY, 5)
