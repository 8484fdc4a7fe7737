"""Loading and dictionary-encoding of delimited categorical data.

Every attribute value (including the missing-value token) becomes a dense
integer code, assigned in first-seen order per column. Row order is kept
exactly as in the file because downstream tie-breaks depend on row index.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import BoundsError, EmptyInputError, ParseError, SchemaError

CODE_DTYPE = np.int32


@dataclass(frozen=True)
class DatasetSchema:
    """How to read one delimited file.

    ``class_col`` is the 0-based index of the class column in the raw file,
    or None when the file carries no labels.
    """

    class_col: int | None = None
    delimiter: str = ","
    missing: str = "?"
    header: bool = False
    name: str = ""


@dataclass(frozen=True, eq=False)
class Dataset:
    rows: np.ndarray
    dictionaries: tuple[tuple[str, ...], ...]
    labels: np.ndarray | None = None
    class_dictionary: tuple[str, ...] = ()
    name: str = ""
    missing: str = "?"

    def __post_init__(self):
        rows = np.array(self.rows, dtype=CODE_DTYPE, copy=True)
        if rows.ndim != 2:
            raise SchemaError(f"rows must be a 2-d matrix, got shape {rows.shape}")
        if rows.shape[1] != len(self.dictionaries):
            raise SchemaError(
                f"{rows.shape[1]} attribute columns but {len(self.dictionaries)} dictionaries"
            )
        for j, values in enumerate(self.dictionaries):
            if len(set(values)) != len(values):
                raise SchemaError(f"attribute {j}: duplicate values in dictionary")
            col = rows[:, j]
            if col.size and (col.min() < 0 or col.max() >= len(values)):
                raise SchemaError(f"attribute {j}: code outside dictionary")
        rows.setflags(write=False)
        object.__setattr__(self, "rows", rows)
        if self.labels is not None:
            labels = np.array(self.labels, dtype=CODE_DTYPE, copy=True)
            if labels.shape != (rows.shape[0],):
                raise SchemaError(f"labels must have length {rows.shape[0]}")
            if labels.size and (labels.min() < 0 or labels.max() >= len(self.class_dictionary)):
                raise SchemaError("label code outside class dictionary")
            labels.setflags(write=False)
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.rows.shape[0]

    @property
    def m(self) -> int:
        return self.rows.shape[1]

    @property
    def domain_sizes(self) -> tuple[int, ...]:
        return tuple(len(d) for d in self.dictionaries)

    @property
    def n_classes(self) -> int:
        return len(self.class_dictionary)

    def class_distribution(self) -> list[int]:
        if self.labels is None:
            return []
        return np.bincount(self.labels, minlength=self.n_classes).tolist()

    def decode_row(self, i: int) -> list[str]:
        return [self.dictionaries[j][c] for j, c in enumerate(self.rows[i])]

    def decode(self, codes: Sequence[int]) -> list[str]:
        return [self.dictionaries[j][int(c)] for j, c in enumerate(codes)]


def encode_records(
    records: Iterable[Sequence[str]],
    class_col: int | None = None,
    name: str = "",
    missing: str = "?",
) -> Dataset:
    """Dictionary-encode already split records (first-seen order per column)."""
    lookups: list[dict[str, int]] | None = None
    class_lookup: dict[str, int] = {}
    codes: list[list[int]] = []
    labels: list[int] = []
    width = None
    for lineno, record in enumerate(records, start=1):
        if width is None:
            width = len(record)
            if class_col is not None and not 0 <= class_col < width:
                raise SchemaError(f"class column {class_col} out of range for {width} columns")
            lookups = [{} for _ in range(width - (class_col is not None))]
        elif len(record) != width:
            raise ParseError(f"expected {width} fields, found {len(record)}", line=lineno)
        row = []
        attr = 0
        for col, token in enumerate(record):
            if col == class_col:
                labels.append(class_lookup.setdefault(token, len(class_lookup)))
                continue
            lookup = lookups[attr]
            row.append(lookup.setdefault(token, len(lookup)))
            attr += 1
        codes.append(row)
    if width is None:
        raise EmptyInputError("no records")
    dictionaries = tuple(tuple(lookup) for lookup in lookups)
    rows = np.array(codes, dtype=CODE_DTYPE).reshape(len(codes), len(dictionaries))
    if class_col is None:
        return Dataset(rows, dictionaries, name=name, missing=missing)
    return Dataset(
        rows,
        dictionaries,
        labels=np.array(labels, dtype=CODE_DTYPE),
        class_dictionary=tuple(class_lookup),
        name=name,
        missing=missing,
    )


def load_dataset(path: str | Path, schema: DatasetSchema = DatasetSchema()) -> Dataset:
    """Read a delimited categorical file.

    Blank lines are skipped. The missing token needs no special handling: it
    is encoded like any other category value. Ragged rows raise ParseError
    carrying the physical line number.
    """
    path = Path(path)
    if len(schema.delimiter) != 1:
        raise SchemaError(f"delimiter must be one character, got {schema.delimiter!r}")
    with path.open(newline="") as fh:
        reader = csv.reader(fh, delimiter=schema.delimiter)
        numbered = [(reader.line_num, rec) for rec in reader]
    numbered = [(ln, rec) for ln, rec in numbered if any(tok.strip() for tok in rec)]
    if schema.header and numbered:
        numbered = numbered[1:]
    if not numbered:
        raise EmptyInputError(f"{path}: no data rows")
    width = len(numbered[0][1])
    for ln, rec in numbered:
        if len(rec) != width:
            raise ParseError(f"{path}: expected {width} fields, found {len(rec)}", line=ln)
    return encode_records(
        (rec for _, rec in numbered),
        class_col=schema.class_col,
        name=schema.name or path.stem,
        missing=schema.missing,
    )


@dataclass(frozen=True, eq=False)
class FrequencyTable:
    """Per-attribute value counts over some set of rows.

    ``counts[j][v]`` is the number of rows whose attribute ``j`` has code
    ``v``. Codes are dense, so a length-``p_j`` array does the job of the
    per-attribute hash table.
    """

    counts: tuple[np.ndarray, ...]
    size: int = field(default=0)

    def __getitem__(self, j: int) -> np.ndarray:
        return self.counts[j]

    def __len__(self) -> int:
        return len(self.counts)

    def as_dicts(self) -> list[dict[int, int]]:
        """Non-zero entries only, as ``{code: count}`` per attribute."""
        return [{int(v): int(c) for v, c in enumerate(col) if c} for col in self.counts]


def _table(rows: np.ndarray, domain_sizes: Sequence[int]) -> FrequencyTable:
    counts = []
    for j, p in enumerate(domain_sizes):
        col = np.bincount(rows[:, j], minlength=p).astype(np.int64)
        col.setflags(write=False)
        counts.append(col)
    return FrequencyTable(tuple(counts), size=rows.shape[0])


def global_frequency_table(ds: Dataset) -> FrequencyTable:
    if ds.n == 0:
        raise EmptyInputError("dataset has no rows")
    return _table(ds.rows, ds.domain_sizes)


def cluster_frequency_table(ds: Dataset, assignment, cluster: int, k: int | None = None) -> FrequencyTable:
    assignment = np.asarray(assignment)
    if assignment.shape != (ds.n,):
        raise BoundsError(f"assignment length {assignment.shape} does not match n={ds.n}")
    k = int(assignment.max()) + 1 if k is None and assignment.size else k
    if not 0 <= cluster < (k or 0):
        raise BoundsError(f"cluster {cluster} out of range for k={k}")
    return _table(ds.rows[assignment == cluster], ds.domain_sizes)
