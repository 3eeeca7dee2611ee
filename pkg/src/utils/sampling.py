"""
Random instance generation - seeded draws of parameters and coefficients
"""
from typing import Union

import numpy as np

from config import BENCH_PARAM_RANGE
from core.model_one import ModelOneParams
from core.model_two import ModelTwoParams
from core.models import MonicPolynomial


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator; the same seed always yields the same stream."""
    return np.random.Generator(np.random.PCG64(seed))


def random_complex(rng: np.random.Generator, size: int, spread: float = BENCH_PARAM_RANGE) -> list:
    """size complex numbers with re, im uniform in [-spread, spread]"""
    parts = rng.uniform(-spread, spread, size=(size, 2))
    return [complex(re, im) for re, im in parts]


def random_params(rng: np.random.Generator, model: int,
                  spread: float = BENCH_PARAM_RANGE) -> Union[ModelOneParams, ModelTwoParams]:
    values = random_complex(rng, 5, spread)
    if model == 1:
        return ModelOneParams.from_sequence(values)
    if model == 2:
        return ModelTwoParams.from_sequence(values)
    raise ValueError(f"Unknown model {model}")


def random_sextic(rng: np.random.Generator, spread: float = BENCH_PARAM_RANGE) -> MonicPolynomial:
    """A generic monic sextic (almost surely in neither family)."""
    return MonicPolynomial(tuple(random_complex(rng, 6, spread)))
