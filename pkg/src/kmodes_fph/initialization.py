"""Initial center selection: random rows, farthest-point (random first row),
and farthest-point with a frequency-scored first row.

Random draws use numpy's PCG64 bit generator seeded with the given 64-bit
integer, so a seed maps to the same rows on every platform.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import Dataset, FrequencyTable, global_frequency_table
from .errors import ConfigError, ConsistencyError
from .metric import distance_matrix, distances_to

METHODS = ("random", "bfph", "nfph")


@dataclass(frozen=True, eq=False)
class Seeding:
    """Chosen row indices (in selection order) and copies of those rows."""

    indices: np.ndarray
    centers: np.ndarray
    # For farthest-point chains: the max-min distance at which each of
    # centers 1..k-1 was picked.
    separations: tuple[int, ...] = ()
    distance_updates: int = 0

    @property
    def duplicate_centers(self) -> bool:
        return len({c.tobytes() for c in self.centers}) < len(self.centers)


def make_rng(seed: int) -> np.random.Generator:
    if not 0 <= seed < 2**64:
        raise ConfigError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def _check_k(ds: Dataset, k: int) -> None:
    if k < 1:
        raise ConfigError("k must be at least 1")
    if k > ds.n:
        raise ConfigError(f"k={k} exceeds the number of objects n={ds.n}")


def _seeding(ds: Dataset, indices, **kw) -> Seeding:
    indices = np.asarray(indices, dtype=np.int64)
    return Seeding(indices=indices, centers=ds.rows[indices].copy(), **kw)


def init_random(ds: Dataset, k: int, seed: int) -> Seeding:
    _check_k(ds, k)
    return _seeding(ds, make_rng(seed).choice(ds.n, size=k, replace=False))


def farthest_point_chain(ds: Dataset, first: int, k: int) -> Seeding:
    """Greedy max-min selection starting from row ``first``.

    Keeps a running distance-to-nearest-chosen array, refreshed once per
    chosen center except the last, i.e. (k-1)*n distance evaluations. Ties
    go to the lowest row index; rows already chosen are never picked again,
    so with duplicate rows the centers may repeat as vectors but not as rows.
    """
    _check_k(ds, k)
    if not 0 <= first < ds.n:
        raise ConfigError(f"first row {first} out of range for n={ds.n}")
    chosen = [int(first)]
    separations = []
    nearest = np.full(ds.n, np.iinfo(np.int64).max, dtype=np.int64)
    updates = 0
    for _ in range(1, k):
        np.minimum(nearest, distances_to(ds.rows, ds.rows[chosen[-1]]), out=nearest)
        updates += ds.n
        candidates = nearest.copy()
        candidates[chosen] = -1
        nxt = int(np.argmax(candidates))
        separations.append(int(candidates[nxt]))
        chosen.append(nxt)
    return _seeding(ds, chosen, separations=tuple(separations), distance_updates=updates)


def init_bfph(ds: Dataset, k: int, seed: int) -> Seeding:
    _check_k(ds, k)
    first = int(make_rng(seed).integers(ds.n))
    return farthest_point_chain(ds, first, k)


def point_scores(ds: Dataset, freq: FrequencyTable) -> np.ndarray:
    """Sum over attributes of the dataset-wide frequency of each row's value."""
    if len(freq) != ds.m or freq.size != ds.n:
        raise ConsistencyError(
            f"frequency table covers {freq.size} rows x {len(freq)} attributes, "
            f"dataset is {ds.n} x {ds.m}"
        )
    scores = np.zeros(ds.n, dtype=np.int64)
    for j in range(ds.m):
        table = freq[j]
        if table.shape[0] != ds.domain_sizes[j] or int(table.sum()) != ds.n:
            raise ConsistencyError(f"attribute {j}: frequency table does not match dataset")
        scores += table[ds.rows[:, j]]
    return scores


def init_nfph(ds: Dataset, k: int) -> Seeding:
    _check_k(ds, k)
    scores = point_scores(ds, global_frequency_table(ds))
    return farthest_point_chain(ds, int(np.argmax(scores)), k)


def initialize(ds: Dataset, method: str, k: int, seed: int = 0) -> Seeding:
    if method == "random":
        return init_random(ds, k, seed)
    if method == "bfph":
        return init_bfph(ds, k, seed)
    if method == "nfph":
        return init_nfph(ds, k)
    raise ConfigError(f"unknown init method {method!r}; expected one of {METHODS}")


def partition_radius(ds: Dataset, centers) -> int:
    """Largest distance from any object to its nearest center."""
    centers = np.asarray(centers)
    if centers.ndim != 2 or centers.shape[0] == 0:
        raise ConfigError("need at least one center")
    return int(distance_matrix(ds.rows, centers).min(axis=1).max())
