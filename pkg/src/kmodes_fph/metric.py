"""Simple matching dissimilarity: the number of attributes on which two
encoded categorical vectors disagree. Results are exact integers."""
from __future__ import annotations

import numpy as np

from .errors import DimensionError


def simple_matching(x, z) -> int:
    x = np.asarray(x)
    z = np.asarray(z)
    if x.shape != z.shape or x.ndim != 1:
        raise DimensionError(f"cannot compare vectors of shape {x.shape} and {z.shape}")
    return int(np.count_nonzero(x != z))


def distances_to(rows: np.ndarray, z) -> np.ndarray:
    """Distance from every row of ``rows`` to the single vector ``z``."""
    z = np.asarray(z)
    if rows.ndim != 2 or z.shape != (rows.shape[1],):
        raise DimensionError(f"rows {rows.shape} incompatible with vector {z.shape}")
    return np.count_nonzero(rows != z, axis=1).astype(np.int64)


def distance_matrix(rows: np.ndarray, centers: np.ndarray) -> np.ndarray:
    """n x k matrix of distances between rows and centers."""
    centers = np.asarray(centers)
    if centers.ndim != 2 or rows.ndim != 2 or centers.shape[1] != rows.shape[1]:
        raise DimensionError(f"rows {rows.shape} incompatible with centers {centers.shape}")
    out = np.empty((rows.shape[0], centers.shape[0]), dtype=np.int64)
    for l, z in enumerate(centers):
        out[:, l] = np.count_nonzero(rows != z, axis=1)
    return out
