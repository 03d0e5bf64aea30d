from __future__ import annotations

import sys
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from curvecodes import agcodes, curves, riemannroch


def table2_code(a: int) -> agcodes.LinearCode:
    pts = [
        pt
        for pt in curves.enumerate_points(curves.x0_model(19).model, 13)
        if not pt.is_infinity
    ]
    return agcodes.evaluation_code(riemannroch.one_point_basis(a), pts, 13)


def x7x_code(a: int) -> agcodes.LinearCode:
    model = curves.HyperellipticModel(f=(0, -1, 0, 0, 0, 0, 0, 1))
    pts = [pt for pt in curves.enumerate_points(model, 7) if not pt.is_infinity]
    return agcodes.evaluation_code(
        riemannroch.one_point_basis(a, y_weight=7), pts, 7
    )


@pytest.fixture(scope="session")
def table2_dists():
    """Weight distributions of the [17, a] family, auto strategy."""
    return {
        a: agcodes.weight_distribution(table2_code(a), jobs=2) for a in range(2, 11)
    }


@contextmanager
def criterion(num: int, description: str):
    """Print one pass/fail line per acceptance criterion."""
    try:
        yield
    except BaseException:
        print(f"[criterion {num:2d}] FAIL: {description}")
        raise
    print(f"[criterion {num:2d}] PASS: {description}")
