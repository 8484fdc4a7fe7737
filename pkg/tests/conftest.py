import os
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kmodes_fph import Dataset, encode_records
from kmodes_fph.manifests import DATA_ENV, stock_dataset

ROOT = Path(__file__).resolve().parents[1]
DATA_DIR = Path(os.environ.get(DATA_ENV, ROOT / "data"))

_criteria: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion outcome for the end-of-run summary."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        _criteria.append((label, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _criteria:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")


def stock_path(name: str) -> Path:
    return stock_dataset(name).path(DATA_DIR)


def require_stock(name: str) -> Path:
    """Path of a stock dataset file; a missing file is a test failure, not a skip."""
    path = stock_path(name)
    if not path.is_file():
        pytest.fail(
            f"{name} data file not found at {path}; run `kmodes-fph fetch {name}` "
            f"or place the UCI file there (or set {DATA_ENV})"
        )
    return path


def make_ds(rows, labels=None):
    rows = [[str(v) for v in r] for r in rows]
    if labels is None:
        return encode_records(rows)
    return encode_records([r + [str(y)] for r, y in zip(rows, labels)], class_col=len(rows[0]))


def code_ds(rows, labels=None):
    """Dataset whose codes are exactly the given non-negative integers."""
    rows = np.asarray(rows, dtype=np.int64)
    dictionaries = tuple(tuple(str(v) for v in range(int(rows[:, j].max()) + 1)) for j in range(rows.shape[1]))
    if labels is None:
        return Dataset(rows, dictionaries)
    labels = np.asarray(labels)
    return Dataset(rows, dictionaries, labels=labels,
                   class_dictionary=tuple(str(v) for v in range(int(labels.max()) + 1)))


def random_ds(rng: np.random.Generator, n: int, m: int, p: int):
    return code_ds(rng.integers(p, size=(n, m)))
