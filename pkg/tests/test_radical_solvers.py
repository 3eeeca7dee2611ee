import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from core.models import MonicPolynomial, RootMultiset
from core.poly_core import evaluate, match_roots
from core.radical_solvers import (
    OMEGA, cardano_branches, polish_root, principal_cbrt, solve_cubic, solve_quadratic,
)

parts = st.floats(min_value=-2, max_value=2, allow_nan=False)
complex_values = st.builds(complex, parts, parts)
real_values = parts.map(complex)


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol


# ------------------------------------------------------------------ #
#  Quadratic                                                          #
# ------------------------------------------------------------------ #

def test_quadratic_unit_roots_branch_labels():
    roots = solve_quadratic(0, -1)
    assert roots.y1 == -1
    assert roots.y2 == 1


def test_quadratic_double_root():
    roots = solve_quadratic(-2, 1)
    assert roots.as_tuple() == (1, 1)


def test_quadratic_imaginary_roots():
    roots = solve_quadratic(0, 1)
    assert close(roots.y1, -1j)
    assert close(roots.y2, 1j)


def test_quadratic_zero_constant_term():
    roots = solve_quadratic(3, 0)
    assert sorted((roots.y1, roots.y2), key=lambda z: z.real) == [-3, 0]


def test_quadratic_avoids_cancellation():
    # roots near -1e8 and -1e-8; the textbook formula loses the small one
    roots = solve_quadratic(1e8 + 1e-8, 1.0)
    small = roots.y2
    assert abs(small + 1e-8) <= 1e-20


@given(complex_values, complex_values)
@settings(max_examples=500)
def test_quadratic_vieta(b1, b0):
    roots = solve_quadratic(b1, b0)
    bound = 1e-12 * (1 + abs(b1) + abs(b0))
    assert abs(roots.y1 + roots.y2 + b1) <= bound
    assert abs(roots.y1 * roots.y2 - b0) <= bound


@given(real_values, real_values)
def test_quadratic_real_inputs_conjugate_closed(b1, b0):
    roots = solve_quadratic(b1, b0)
    y1, y2 = roots.as_tuple()
    assert min(abs(y1.conjugate() - y1), abs(y1.conjugate() - y2)) <= 1e-10


# ------------------------------------------------------------------ #
#  Cubic                                                              #
# ------------------------------------------------------------------ #

def test_principal_cube_root_branch():
    assert close(principal_cbrt(8), 2)
    assert close(principal_cbrt(-8), 2 * cmath.exp(1j * math.pi / 3))
    assert close(principal_cbrt(complex(-8, -0.0)), 2 * cmath.exp(1j * math.pi / 3))
    assert principal_cbrt(0) == 0


def test_cubic_roots_of_unity():
    roots = RootMultiset(solve_cubic(0, 0, -1).as_tuple())
    expected = RootMultiset((1, OMEGA, OMEGA.conjugate()))
    assert match_roots(roots, expected).max_distance <= 1e-12


def test_cubic_integer_roots():
    roots = solve_cubic(-6, 11, -6).as_tuple()
    for got, want in zip(roots, (1, 2, 3)):
        assert close(got, want, 1e-12)


def test_cubic_triple_zero():
    assert solve_cubic(0, 0, 0).as_tuple() == (0, 0, 0)


def test_cubic_output_is_sorted():
    roots = solve_cubic(1 + 2j, -3, 0.5j).as_tuple()
    keys = [(z.real, z.imag) for z in roots]
    assert keys == sorted(keys)


def test_cardano_pairing_constraint():
    # for a depressed cubic, the branches sum to zero and each satisfies t^3 + p t + q = 0
    branches = cardano_branches(0, -7, 6)  # roots 1, 2, -3
    assert close(sum(branches), 0, 1e-12)
    for t in branches:
        assert abs(t ** 3 - 7 * t + 6) <= 1e-11


def test_casus_irreducibilis():
    # three real roots; the complex path must still return them (tiny imaginary parts)
    roots = solve_cubic(0, -7, 6).as_tuple()
    for got, want in zip(roots, (-3, 1, 2)):
        assert close(got, want, 1e-12)


@given(complex_values, complex_values, complex_values)
@settings(max_examples=500)
def test_cubic_residuals(a2, a1, a0):
    p = MonicPolynomial((a0, a1, a2))
    for z in solve_cubic(a2, a1, a0).as_tuple():
        assert abs(evaluate(p, z)) <= 1e-9 * p.residual_scale(z)


@given(complex_values, complex_values, complex_values)
@settings(max_examples=300)
def test_cubic_vieta(a2, a1, a0):
    z1, z2, z3 = solve_cubic(a2, a1, a0).as_tuple()
    scale = 1 + max(abs(a2), abs(a1), abs(a0))
    assert abs(z1 + z2 + z3 + a2) <= 1e-9 * scale ** 3
    assert abs(z1 * z2 + z1 * z3 + z2 * z3 - a1) <= 1e-9 * scale ** 3
    assert abs(z1 * z2 * z3 + a0) <= 1e-9 * scale ** 3


@given(complex_values, complex_values, complex_values)
def test_cubic_branch_determinism(a2, a1, a0):
    assert solve_cubic(a2, a1, a0) == solve_cubic(a2, a1, a0)


@given(real_values, real_values, real_values)
@settings(max_examples=300)
def test_cubic_real_inputs_conjugate_closed(a2, a1, a0):
    roots = solve_cubic(a2, a1, a0).as_tuple()
    for z in roots:
        assert min(abs(z.conjugate() - w) for w in roots) <= 1e-10 * (1 + abs(z)) ** 3


# ------------------------------------------------------------------ #
#  Polishing                                                          #
# ------------------------------------------------------------------ #

def test_polish_quadratic():
    p = MonicPolynomial((-1, 0))
    assert abs(polish_root(p, 1.001, 2) - 1) <= 1e-9


def test_polish_fixed_point():
    assert polish_root(MonicPolynomial((-1, 0, 0)), 1, 2) == 1


def test_polish_multiple_root_guard():
    p = MonicPolynomial((0,) * 6)
    z = polish_root(p, 0.1, 2)
    assert abs(z) < 0.1 or z == 0.1


def test_polish_respects_step_cap():
    p = MonicPolynomial((-2, 0))
    once = polish_root(p, 1.0, 1)
    assert once == pytest.approx(1.5)


def test_polish_zero_steps_is_identity():
    assert polish_root(MonicPolynomial((-2, 0)), 1.0, 0) == 1.0
