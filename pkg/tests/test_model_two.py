import cmath

import pytest

from core import model_two
from core.errors import ConstraintRejectedError, InvalidPolynomialError
from core.model_two import ModelTwoParams
from core.models import MonicPolynomial, RootMultiset, sextic
from core.oracle import oracle_roots
from core.poly_core import compose, evaluate, match_roots, max_coefficient_difference
from utils.sampling import random_complex, random_params

WORKED = ModelTwoParams(1, 2, 3, 1, 1)
WORKED_COEFFS = (7, 11, 17, 13, 9, 3)
SIXTH_ROOTS_OF_UNITY = RootMultiset(tuple(cmath.exp(2j * cmath.pi * k / 6) for k in range(6)))


def draws(rng, count):
    return [random_params(rng, 2) for _ in range(count)]


# ------------------------------------------------------------------ #
#  Forward map                                                        #
# ------------------------------------------------------------------ #

@pytest.mark.parametrize("params, expected", [
    ((0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0)),
    ((-1, 0, 0, 0, 0), (-1, 0, 0, 0, 0, 0)),
    ((1, 2, 3, 1, 1), WORKED_COEFFS),
    ((0, -1, 0, 0, 0), (0, 0, -1, 0, 0, 0)),
])
def test_coefficients_examples(params, expected):
    c = model_two.coefficients_from_params(ModelTwoParams.from_sequence(params))
    assert c.coeffs == tuple(complex(x) for x in expected)


def test_forward_map_agrees_with_composition(rng):
    for p in draws(rng, 1000):
        direct = model_two.coefficients_from_params(p)
        composed = compose(model_two.outer_polynomial(p), model_two.inner_polynomial(p))
        assert max_coefficient_difference(direct, composed) <= 1e-12 * (1 + direct.coefficient_scale())


# ------------------------------------------------------------------ #
#  Radical solve                                                      #
# ------------------------------------------------------------------ #

def test_solve_all_zero():
    roots = model_two.solve(ModelTwoParams(0, 0, 0, 0, 0))
    assert all(z == 0 for z in roots.values())


def test_solve_z6_minus_one_golden():
    roots = model_two.solve(ModelTwoParams(-1, 0, 0, 0, 0))
    assert match_roots(roots.values(), SIXTH_ROOTS_OF_UNITY).max_distance <= 1e-12


def test_solve_z6_minus_z2():
    # z^2 (z^4 - 1); the double root at 0 is only resolved to about sqrt(eps)
    roots = model_two.solve(ModelTwoParams(0, -1, 0, 0, 0))
    expected = RootMultiset((0, 0, 1, -1, 1j, -1j))
    assert match_roots(roots.values(), expected).max_distance <= 1e-6


def test_solve_labels_and_resolvents():
    roots = model_two.solve(WORKED)
    assert sorted((r.mu, r.lam) for r in roots.roots) == [(mu, lam) for mu in (1, 2, 3) for lam in (1, 2)]
    assert [y.label for y in roots.resolvents] == [1, 2, 3]
    inner = model_two.inner_polynomial(WORKED)
    for r in roots.roots:
        y = roots.resolvents[r.mu - 1].value
        assert abs(evaluate(inner, r.value) - y) <= 1e-9 * (1 + abs(y))


def test_solve_worked_example_matches_oracle():
    report = match_roots(model_two.solve(WORKED).values(), oracle_roots(sextic(WORKED_COEFFS)))
    assert report.max_distance <= 1e-6


def test_root_residuals(rng):
    for p in draws(rng, 1000):
        c = model_two.coefficients_from_params(p)
        for z in model_two.solve(p).values():
            assert abs(evaluate(c, z)) <= 1e-8 * c.residual_scale(z)


def test_oracle_equivalence(rng):
    for p in draws(rng, 200):
        c = model_two.coefficients_from_params(p)
        assert match_roots(model_two.solve(p).values(), oracle_roots(c)).max_distance <= 1e-6


def test_explicit_roots_are_the_unpolished_roots():
    explicit = RootMultiset(tuple(model_two.explicit_root(WORKED, k, lam) for k in range(3) for lam in (1, 2)))
    unpolished = model_two.solve(WORKED, polish_steps=0).values()
    assert match_roots(explicit, unpolished).max_distance == 0


# ------------------------------------------------------------------ #
#  Constraints                                                        #
# ------------------------------------------------------------------ #

def test_constraints_worked_vector():
    report = model_two.constraint_residuals(sextic(WORKED_COEFFS))
    assert report.residual_1 == 0
    assert abs(report.residual_2) <= 1e-12 * report.scale_2
    assert report.satisfied
    assert report.scale == 1 + 17 ** 3
    assert report.scale_2 == 1 + 17 ** 5


def test_constraints_z6_minus_one():
    report = model_two.constraint_residuals(sextic((-1, 0, 0, 0, 0, 0)))
    assert report.residual_1 == 0
    assert report.residual_2 == 0


def test_constraint_one_is_linear_in_c3():
    eps = 1e-3
    report = model_two.constraint_residuals(sextic((7, 11, 17, 13 + eps, 9, 3)))
    assert report.residual_1 == pytest.approx(27 * eps, abs=1e-12)
    assert report.residual_2 == 0
    assert not report.satisfied


def test_constraints_need_a_sextic():
    with pytest.raises(InvalidPolynomialError):
        model_two.constraint_residuals(MonicPolynomial((0,) * 7))


def test_constraint_closure(rng):
    for p in draws(rng, 1000):
        report = model_two.constraint_residuals(model_two.coefficients_from_params(p))
        assert abs(report.residual_1) <= 1e-10 * report.scale
        assert abs(report.residual_2) <= 1e-10 * report.scale_2


# ------------------------------------------------------------------ #
#  Recovery                                                           #
# ------------------------------------------------------------------ #

@pytest.mark.parametrize("coeffs, free, expected", [
    (WORKED_COEFFS, 1, (1, 2, 3, 1, 1)),
    (WORKED_COEFFS, 0, (7, 11, 6, 0, 1)),
    ((-1, 0, 0, 0, 0, 0), 0, (-1, 0, 0, 0, 0)),
])
def test_recover_examples(coeffs, free, expected):
    p = model_two.recover_params(sextic(coeffs), free_b0=free)
    assert p.as_tuple() == pytest.approx(expected, abs=1e-12)
    assert max_coefficient_difference(model_two.coefficients_from_params(p), sextic(coeffs)) <= 1e-12


def test_printed_a1_does_not_round_trip():
    c = sextic(WORKED_COEFFS)
    assert model_two.direct_a1(c, 1) == 2
    assert model_two.printed_a1(c, 1) == -7
    # the printed form carries an extra a2 (2 b0 + b1^2) = 3 * 3
    assert model_two.direct_a1(c, 1) - model_two.printed_a1(c, 1) == 9

    direct = model_two.recover_params(c, free_b0=1)
    printed = model_two.recover_params(c, free_b0=1, use_printed_a1=True)
    assert max_coefficient_difference(model_two.coefficients_from_params(direct), c) == 0
    assert max_coefficient_difference(model_two.coefficients_from_params(printed), c) >= 9


def test_printed_a1_with_single_a2_term_matches_direct(rng):
    for p in draws(rng, 50):
        c = model_two.coefficients_from_params(p)
        c2, c4, c5 = c.coeffs[2], c.coeffs[4], c.coeffs[5]
        b0 = p.b0
        corrected = (c2
                     - (3 * c4 - 9 * b0 - c5 ** 2) * (18 * b0 + c5 ** 2) / 27
                     - b0 * (9 * b0 + c5 ** 2) / 3)
        assert abs(corrected - model_two.direct_a1(c, b0)) <= 1e-10 * (1 + c.coefficient_scale()) ** 2
        assert abs(corrected - p.a1) <= 1e-10 * (1 + c.coefficient_scale()) ** 2


def test_recover_rejects_out_of_family():
    with pytest.raises(ConstraintRejectedError) as info:
        model_two.recover_params(sextic((10, 14, 25, 19, 13, 6)))
    assert info.value.report.model == 2
    assert abs(info.value.report.residual_1) == pytest.approx(189)


def test_recovery_round_trip(rng):
    for p in draws(rng, 200):
        c = model_two.coefficients_from_params(p)
        free = random_complex(rng, 1)[0]
        recovered = model_two.recover_params(c, free_b0=free)
        assert recovered.b0 == free
        scale = model_two.constraint_residuals(c).scale
        assert max_coefficient_difference(model_two.coefficients_from_params(recovered), c) <= 1e-9 * scale


def test_fiber_invariance(rng):
    for p in draws(rng, 200):
        c = model_two.coefficients_from_params(p)
        first_free, second_free = random_complex(rng, 2)
        first, first_roots = model_two.solve_coefficients(c, free_b0=first_free)
        second, second_roots = model_two.solve_coefficients(c, free_b0=second_free)
        scale = model_two.constraint_residuals(c).scale
        assert max_coefficient_difference(
            model_two.coefficients_from_params(first),
            model_two.coefficients_from_params(second),
        ) <= 1e-9 * scale
        assert match_roots(first_roots.values(), second_roots.values()).max_distance <= 1e-7
