"""JSON serialization for matrices, coefficient families and metrics.

The shared matrix format is ``{"n": int, "data": [[re, im], ...]}`` with
n*n row-major entries written at full double precision.  Readers reject
wrong-length data arrays.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .antilinear import CoefficientFamily
from .errors import DimensionMismatchError, NonFiniteError
from .metric import MetricOperator


def matrix_to_dict(m) -> dict:
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
    flat = m.reshape(-1)
    return {"n": int(m.shape[0]), "data": [[float(z.real), float(z.imag)] for z in flat]}


def matrix_from_dict(payload: dict) -> np.ndarray:
    n = int(payload["n"])
    data = payload["data"]
    if n < 1:
        raise DimensionMismatchError("matrix dimension must be at least 1")
    if len(data) != n * n:
        raise DimensionMismatchError(f"data has {len(data)} entries, expected {n * n}")
    values = np.array([complex(re, im) for re, im in data], dtype=np.complex128)
    if not np.all(np.isfinite(values.real)) or not np.all(np.isfinite(values.imag)):
        raise NonFiniteError("matrix data contains NaN or Inf")
    return values.reshape(n, n)


def save_matrix(path, m) -> None:
    Path(path).write_text(json.dumps(matrix_to_dict(m)))


def load_matrix(path) -> np.ndarray:
    return matrix_from_dict(json.loads(Path(path).read_text()))


def coefficients_to_list(coeffs: CoefficientFamily) -> list[dict]:
    """Serialize as a JSON list of blocks in the shared matrix format,
    indexed by level order."""
    return [matrix_to_dict(b) for b in coeffs.blocks]


def coefficients_from_list(payload: list) -> CoefficientFamily:
    return CoefficientFamily(tuple(matrix_from_dict(item) for item in payload))


def save_coefficients(path, coeffs: CoefficientFamily) -> None:
    Path(path).write_text(json.dumps(coefficients_to_list(coeffs)))


def load_coefficients(path) -> CoefficientFamily:
    return coefficients_from_list(json.loads(Path(path).read_text()))


def metric_to_dict(metric: MetricOperator) -> dict:
    return {
        "eta": matrix_to_dict(metric.matrix),
        "positive_definite": bool(metric.positive_definite),
        "factor": None if metric.factor is None else matrix_to_dict(metric.factor),
    }


def metric_from_dict(payload: dict) -> MetricOperator:
    factor = payload.get("factor")
    return MetricOperator(
        matrix=matrix_from_dict(payload["eta"]),
        positive_definite=bool(payload["positive_definite"]),
        factor=None if factor is None else matrix_from_dict(factor),
    )
