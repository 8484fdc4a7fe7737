"""Stock dataset manifests and data-file resolution.

Data files are never shipped with the package. They are looked up in a data
directory: the ``--data-dir`` option, else ``$KMODES_FPH_DATA``, else
``./data``.
"""
from __future__ import annotations

import json
import os
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .dataset import DatasetSchema
from .errors import SchemaError

DATA_ENV = "KMODES_FPH_DATA"


@dataclass(frozen=True)
class DatasetEntry:
    name: str
    file: str
    schema: DatasetSchema
    url: str | None = None
    k: int | None = None
    expected: dict | None = None

    def path(self, data_dir: str | Path | None = None) -> Path:
        p = Path(self.file)
        if p.is_absolute():
            return p
        return default_data_dir(data_dir) / p


def default_data_dir(data_dir: str | Path | None = None) -> Path:
    if data_dir is not None:
        return Path(data_dir)
    return Path(os.environ.get(DATA_ENV, "data"))


def stock_names() -> list[str]:
    files = resources.files(__package__).joinpath("manifests").iterdir()
    names = sorted(f.name[:-5] for f in files if f.name.endswith(".json"))
    return [n for n in names if "datasets" not in _read_stock(n)]


def _read_stock(name: str) -> dict:
    res = resources.files(__package__).joinpath("manifests", f"{name}.json")
    if not res.is_file():
        raise SchemaError(f"no stock manifest named {name!r}")
    return json.loads(res.read_text())


def _entry(raw: dict) -> DatasetEntry:
    try:
        name = raw["name"]
        file = raw["file"]
    except KeyError as exc:
        raise SchemaError(f"dataset entry missing {exc.args[0]!r}") from None
    class_col = raw.get("class_col")
    schema = DatasetSchema(
        class_col=None if class_col in (None, "none") else int(class_col),
        delimiter=raw.get("delimiter", ","),
        missing=raw.get("missing", "?"),
        header=bool(raw.get("header", False)),
        name=name,
    )
    return DatasetEntry(name, file, schema, raw.get("url"), raw.get("k"), raw.get("expected"))


def stock_dataset(name: str) -> DatasetEntry:
    raw = _read_stock(name)
    if "datasets" in raw:
        raise SchemaError(f"{name!r} is a benchmark manifest, not a dataset")
    return _entry(raw)


@dataclass(frozen=True)
class BenchManifest:
    name: str
    datasets: tuple[DatasetEntry, ...]
    methods: tuple[str, ...] = ("random", "bfph", "nfph")
    runs: int = 100
    base_seed: int = 0
    max_iters: int = 100


def load_manifest(ref: str | Path) -> BenchManifest:
    """Load a benchmark manifest from a path, or by stock name (e.g. ``table2``).

    Each dataset item is either a stock dataset name or an inline entry.
    """
    path = Path(ref)
    if path.suffix == ".json" and path.is_file():
        raw = json.loads(path.read_text())
    else:
        raw = _read_stock(str(ref))
    if "datasets" not in raw:
        raw = {"name": raw["name"], "datasets": [raw]}
    entries = tuple(
        stock_dataset(item) if isinstance(item, str) else _entry(item) for item in raw["datasets"]
    )
    return BenchManifest(
        name=raw.get("name", path.stem),
        datasets=entries,
        methods=tuple(raw.get("methods", ("random", "bfph", "nfph"))),
        runs=int(raw.get("runs", 100)),
        base_seed=int(raw.get("base_seed", 0)),
        max_iters=int(raw.get("max_iters", 100)),
    )


def fetch(entry: DatasetEntry, data_dir: str | Path | None = None, overwrite: bool = False) -> Path:
    """Download a dataset file from its documented URL into the data directory."""
    if not entry.url:
        raise SchemaError(f"dataset {entry.name!r} has no download URL")
    dest = entry.path(data_dir)
    if dest.exists() and not overwrite:
        return dest
    dest.parent.mkdir(parents=True, exist_ok=True)
    tmp = dest.with_suffix(dest.suffix + ".part")
    with urllib.request.urlopen(entry.url, timeout=60) as resp, tmp.open("wb") as fh:
        fh.write(resp.read())
    tmp.replace(dest)
    return dest
