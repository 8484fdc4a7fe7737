"""The k-modes alternating minimization.

Each iteration fixes the centers and assigns every object to its nearest
center, then fixes the assignment and replaces each center by the
per-attribute mode of its cluster. Both half-steps are exact minimizers,
so the cost never increases. All ties go to the lowest cluster index or
lowest attribute code.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dataset import Dataset
from .errors import ConfigError, DimensionError
from .metric import distance_matrix

DEFAULT_MAX_ITERS = 100


@dataclass(frozen=True, eq=False)
class RunResult:
    centers: np.ndarray
    assignment: np.ndarray
    objective: int
    iterations: int
    # Cost after the initial assignment and after every (update, assign) pair.
    history: tuple[int, ...] = field(default=())
    converged: bool = True
    accuracy: float | None = None


def _check_centers(ds: Dataset, centers) -> np.ndarray:
    centers = np.asarray(centers)
    if centers.ndim != 2 or centers.shape[0] == 0:
        raise ConfigError("need at least one center")
    if centers.shape[1] != ds.m:
        raise DimensionError(f"centers have {centers.shape[1]} attributes, dataset has {ds.m}")
    return centers


def assign_step(ds: Dataset, centers) -> np.ndarray:
    """Nearest center for every object; np.argmin keeps the lowest index on ties."""
    centers = _check_centers(ds, centers)
    return np.argmin(distance_matrix(ds.rows, centers), axis=1).astype(np.int64)


def update_modes(ds: Dataset, assignment, k: int, previous) -> np.ndarray:
    """Per-cluster, per-attribute mode. Empty clusters keep their previous center."""
    if k < 1:
        raise ConfigError("k must be at least 1")
    previous = np.asarray(previous)
    if previous.shape != (k, ds.m):
        raise DimensionError(f"previous centers shape {previous.shape}, expected {(k, ds.m)}")
    assignment = np.asarray(assignment)
    if assignment.shape != (ds.n,):
        raise DimensionError(f"assignment length {assignment.shape}, expected ({ds.n},)")
    centers = previous.astype(ds.rows.dtype, copy=True)
    for l in range(k):
        members = ds.rows[assignment == l]
        if members.shape[0] == 0:
            continue
        for j, p in enumerate(ds.domain_sizes):
            centers[l, j] = np.argmax(np.bincount(members[:, j], minlength=p))
    return centers


def objective(ds: Dataset, assignment, centers) -> int:
    """Total simple matching distance from each object to its assigned center."""
    centers = _check_centers(ds, centers)
    assignment = np.asarray(assignment)
    if assignment.shape != (ds.n,):
        raise DimensionError(f"assignment length {assignment.shape}, expected ({ds.n},)")
    return int(np.count_nonzero(ds.rows != centers[assignment]))


def kmodes(ds: Dataset, initial, max_iters: int = DEFAULT_MAX_ITERS) -> RunResult:
    """Run k-modes from the given initial centers.

    Stops once the assignment is unchanged between consecutive iterations, or
    after ``max_iters`` iterations. One iteration is a mode update followed by
    a reassignment.
    """
    centers = _check_centers(ds, initial).astype(ds.rows.dtype, copy=True)
    k = centers.shape[0]
    if k > ds.n:
        raise ConfigError(f"k={k} exceeds the number of objects n={ds.n}")
    if max_iters < 1:
        raise ConfigError("max_iters must be at least 1")

    assignment = assign_step(ds, centers)
    history = [objective(ds, assignment, centers)]
    iterations = 0
    converged = False
    while iterations < max_iters:
        iterations += 1
        centers = update_modes(ds, assignment, k, centers)
        new = assign_step(ds, centers)
        history.append(objective(ds, new, centers))
        if np.array_equal(new, assignment):
            converged = True
            break
        assignment = new

    return RunResult(
        centers=centers,
        assignment=assignment,
        objective=history[-1],
        iterations=iterations,
        history=tuple(history),
        converged=converged,
    )
