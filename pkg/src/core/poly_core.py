"""
Complex polynomial primitives: evaluation, construction from roots,
composition and root-multiset comparison.
"""
import itertools
import logging
from typing import List, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as npoly

from core.errors import RootCountMismatchError
from core.models import MatchReport, MonicPolynomial, RootMultiset

logger = logging.getLogger(__name__)

# Above this size the exhaustive pairing search is replaced by a greedy one
MATCH_EXHAUSTIVE_LIMIT = 8


def evaluate(p: MonicPolynomial, z: complex) -> complex:
    """
    Evaluate P(z) by Horner's scheme.

    Args:
        p: Monic polynomial (leading coefficient exactly 1)
        z: Evaluation point

    Returns:
        P(z), computed with exactly p.degree multiplications
    """
    value = 1 + 0j
    for c in reversed(p.coeffs):
        value = value * z + c
    return value


def evaluate_with_derivative(p: MonicPolynomial, z: complex) -> Tuple[complex, complex]:
    """Return (P(z), P'(z)) in a single Horner pass."""
    value = 1 + 0j
    slope = 0j
    for c in reversed(p.coeffs):
        slope = slope * z + value
        value = value * z + c
    return value, slope


def polynomial_from_roots(roots: RootMultiset) -> MonicPolynomial:
    """
    Expand prod (z - r) by multiplying in one linear factor at a time.

    Args:
        roots: Non-empty root multiset

    Returns:
        The monic polynomial with exactly these roots
    """
    if len(roots) == 0:
        raise ValueError("polynomial_from_roots needs at least one root")

    full: List[complex] = [1 + 0j]  # ascending, leading coefficient last
    for r in roots:
        shifted = [0j] + full
        for i, c in enumerate(full):
            shifted[i] -= r * c
        full = shifted
    return MonicPolynomial(tuple(full[:-1]))


def compose(outer: MonicPolynomial, inner: MonicPolynomial) -> MonicPolynomial:
    """
    Expand outer(inner(z)).

    The outer polynomial is applied by Horner's scheme with polynomial
    arithmetic: the running value is multiplied by inner(z) and the next
    outer coefficient is added.

    Args:
        outer: Monic polynomial of degree m
        inner: Monic polynomial of degree k

    Returns:
        Monic polynomial of degree m * k
    """
    inner_full = np.array(inner.full_coefficients(), dtype=complex)
    running = np.array([1 + 0j])
    for c in reversed(outer.coeffs):
        running = npoly.polyadd(npoly.polymul(running, inner_full), [c])

    degree = outer.degree * inner.degree
    # leading term is the product of leading ones, so numpy never trims it
    return MonicPolynomial(tuple(complex(c) for c in running[:degree]))


def max_coefficient_difference(p: MonicPolynomial, q: MonicPolynomial) -> float:
    """max_n |p_n - q_n| for polynomials of equal degree"""
    if p.degree != q.degree:
        raise ValueError(f"Degree mismatch: {p.degree} vs {q.degree}")
    return max(abs(a - b) for a, b in zip(p.coeffs, q.coeffs))


def match_roots(a: RootMultiset, b: RootMultiset) -> MatchReport:
    """
    Pair the roots of a with the roots of b, minimising the total distance.

    The minimum is exact up to MATCH_EXHAUSTIVE_LIMIT roots. Larger multisets
    get a greedy nearest-pair assignment (logged as a warning), whose total
    distance may exceed the minimum.

    Args:
        a: First multiset
        b: Second multiset, same size

    Returns:
        MatchReport with pairing[i] the index in b matched to a[i]
    """
    n = len(a)
    if n != len(b):
        raise RootCountMismatchError(f"Cannot match {n} roots against {len(b)}")
    if n == 0:
        return MatchReport(pairing=(), max_distance=0.0, total_distance=0.0)

    distances = [[abs(x - y) for y in b] for x in a]

    if n > MATCH_EXHAUSTIVE_LIMIT:
        logger.warning("Matching %d roots greedily; pairing may be suboptimal", n)
        pairing = _greedy_pairing(distances)
    else:
        pairing = _exhaustive_pairing(distances)

    matched = [distances[i][j] for i, j in enumerate(pairing)]
    return MatchReport(
        pairing=tuple(pairing),
        max_distance=max(matched),
        total_distance=sum(matched),
    )


def _exhaustive_pairing(distances: Sequence[Sequence[float]]) -> Tuple[int, ...]:
    n = len(distances)
    best: Tuple[int, ...] = tuple(range(n))
    best_total = float("inf")
    for perm in itertools.permutations(range(n)):
        total = 0.0
        for i, j in enumerate(perm):
            total += distances[i][j]
            if total >= best_total:
                break
        else:
            best, best_total = perm, total
    return best


def _greedy_pairing(distances: Sequence[Sequence[float]]) -> Tuple[int, ...]:
    n = len(distances)
    candidates = sorted((distances[i][j], i, j) for i in range(n) for j in range(n))
    pairing = [-1] * n
    used = set()
    for _, i, j in candidates:
        if pairing[i] == -1 and j not in used:
            pairing[i] = j
            used.add(j)
    return tuple(pairing)
