"""Shared fixtures: planted instances with known spectral structure."""

import numpy as np
import pytest

from pseudoherm.ensembles import planted_matrix


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


@pytest.fixture
def planted_paired(rng):
    """6x6 with one conjugate pair, a d=2 real level and two simple reals."""
    return planted_matrix(rng, 6, "paired")


@pytest.fixture
def planted_real(rng):
    """5x5 all-real, non-normal, includes a degenerate level."""
    while True:
        pm = planted_matrix(rng, 5, "real")
        if any(d > 1 for _, d in pm.levels):
            return pm


@pytest.fixture
def planted_unpaired(rng):
    return planted_matrix(rng, 4, "unpaired")


def planted_3x3_conjugate(seed=7):
    """The fixed planted example: spectrum {1+2i, 1-2i, 3}."""
    rng = np.random.default_rng(seed)
    while True:
        s = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        if np.linalg.cond(s) < 20:
            break
    vals = np.array([1 + 2j, 1 - 2j, 3.0])
    return s @ np.diag(vals) @ np.linalg.inv(s), vals
