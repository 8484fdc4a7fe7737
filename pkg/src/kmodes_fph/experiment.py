"""Seeded experiment batches and their reports.

Run ``r`` of an experiment uses seed ``base_seed + r``. Runs are
independent and may execute in worker processes, but results are always
collected in run order, so a report is a pure function of its config.
"""
from __future__ import annotations

import json
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from functools import partial
from typing import IO, Iterable, Sequence

from . import __version__
from .core import DEFAULT_MAX_ITERS, kmodes
from .dataset import Dataset, DatasetSchema, load_dataset
from .errors import ConfigError, KModesError
from .evaluation import clustering_accuracy
from .initialization import METHODS, initialize

DEFAULT_RUNS = 100
FORMATS = ("tsv", "json")

TSV_COLUMNS = (
    "record", "run", "seed", "accuracy", "accuracy_pct", "objective", "iterations",
    "converged", "duplicate_centers", "accuracy_min", "accuracy_max", "accuracy_std",
)


@dataclass(frozen=True)
class ExperimentConfig:
    data: str
    schema: DatasetSchema = DatasetSchema()
    method: str = "nfph"
    k: int | None = None
    runs: int | None = None
    base_seed: int = 0
    max_iters: int = DEFAULT_MAX_ITERS
    fmt: str = "tsv"

    def normalized(self) -> "ExperimentConfig":
        if self.method not in METHODS:
            raise ConfigError(f"unknown init method {self.method!r}; expected one of {METHODS}")
        if self.fmt not in FORMATS:
            raise ConfigError(f"unknown format {self.fmt!r}; expected one of {FORMATS}")
        runs = DEFAULT_RUNS if self.runs is None else self.runs
        if runs < 1:
            raise ConfigError("runs must be at least 1")
        if self.method == "nfph":
            runs = 1
        if self.k is not None and self.k < 1:
            raise ConfigError("k must be at least 1")
        if self.max_iters < 1:
            raise ConfigError("max_iters must be at least 1")
        if not 0 <= self.base_seed < 2**64:
            raise ConfigError("seed must be an unsigned 64-bit integer")
        return replace(self, runs=runs)

    def seed_for(self, run: int) -> int:
        return (self.base_seed + run) % 2**64

    def echo(self) -> dict:
        d = asdict(self)
        d["schema"] = asdict(self.schema)
        return d


@dataclass(frozen=True)
class RunRecord:
    run: int
    seed: int | None
    accuracy: float | None
    correct: int | None
    objective: int
    iterations: int
    converged: bool
    first_index: int
    duplicate_centers: bool


@dataclass(frozen=True)
class ExperimentReport:
    config: dict
    dataset: dict
    k: int
    runs: tuple[RunRecord, ...]
    version: str = __version__
    aggregate: dict = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "aggregate", _aggregate(self.runs))

    @property
    def mean_accuracy(self) -> float | None:
        return self.aggregate["accuracy_mean"]

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "config": self.config,
            "dataset": self.dataset,
            "k": self.k,
            "runs": [asdict(r) for r in self.runs],
            "aggregate": self.aggregate,
        }


def _aggregate(runs: Sequence[RunRecord]) -> dict:
    accs = [r.accuracy for r in runs if r.accuracy is not None]
    out = {
        "runs": len(runs),
        "accuracy_mean": None,
        "accuracy_min": None,
        "accuracy_max": None,
        "accuracy_std": None,
        "objective_mean": statistics.fmean(r.objective for r in runs),
        "iterations_mean": statistics.fmean(r.iterations for r in runs),
        "converged_runs": sum(r.converged for r in runs),
        "duplicate_center_runs": sum(r.duplicate_centers for r in runs),
    }
    if accs:
        out.update(
            accuracy_mean=statistics.fmean(accs),
            accuracy_min=min(accs),
            accuracy_max=max(accs),
            accuracy_std=statistics.pstdev(accs),
        )
    return out


def single_run(ds: Dataset, method: str, k: int, max_iters: int, seed: int | None) -> RunRecord:
    seeding = initialize(ds, method, k, 0 if seed is None else seed)
    result = kmodes(ds, seeding.centers, max_iters=max_iters)
    acc = None
    if ds.labels is not None:
        acc = clustering_accuracy(result.assignment, ds.labels, k, ds.n_classes)
    return RunRecord(
        run=-1,
        seed=seed,
        accuracy=None if acc is None else acc.accuracy,
        correct=None if acc is None else acc.correct,
        objective=result.objective,
        iterations=result.iterations,
        converged=result.converged,
        first_index=int(seeding.indices[0]),
        duplicate_centers=seeding.duplicate_centers,
    )


def _run_indexed(ds, method, k, max_iters, run_seed):
    run, seed = run_seed
    return replace(single_run(ds, method, k, max_iters, seed), run=run)


def run_experiment(cfg: ExperimentConfig, workers: int = 1, dataset: Dataset | None = None) -> ExperimentReport:
    cfg = cfg.normalized()
    ds = dataset if dataset is not None else load_dataset(cfg.data, cfg.schema)
    k = cfg.k
    if k is None:
        if ds.labels is None:
            raise ConfigError("k is required when the dataset has no class column")
        k = ds.n_classes
    if k > ds.n:
        raise ConfigError(f"k={k} exceeds the number of objects n={ds.n}")

    jobs = [(r, None if cfg.method == "nfph" else cfg.seed_for(r)) for r in range(cfg.runs)]
    work = partial(_run_indexed, ds, cfg.method, k, cfg.max_iters)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(work, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        records = [work(job) for job in jobs]

    return ExperimentReport(
        config=cfg.echo(),
        dataset={
            "name": ds.name,
            "n": ds.n,
            "m": ds.m,
            "classes": ds.n_classes,
            "class_distribution": ds.class_distribution(),
        },
        k=k,
        runs=tuple(records),
    )


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _pct(acc: float | None) -> str:
    return "" if acc is None else f"{100 * acc:.2f}"


def report_tsv_lines(report: ExperimentReport) -> list[str]:
    lines = ["\t".join(TSV_COLUMNS)]
    for r in report.runs:
        fields = ["run", r.run, r.seed, r.accuracy, _pct(r.accuracy), r.objective, r.iterations,
                  r.converged, r.duplicate_centers, None, None, None]
        lines.append("\t".join(_fmt(f) for f in fields))
    a = report.aggregate
    fields = ["mean", a["runs"], None, a["accuracy_mean"], _pct(a["accuracy_mean"]),
              a["objective_mean"], a["iterations_mean"], a["converged_runs"],
              a["duplicate_center_runs"], a["accuracy_min"], a["accuracy_max"], a["accuracy_std"]]
    lines.append("\t".join(_fmt(f) for f in fields))
    return lines


def emit_report(report: ExperimentReport, fmt: str, sink: IO[str]) -> None:
    """Write ``report`` as TSV (header, one line per run, one aggregate line) or JSON."""
    if fmt == "tsv":
        text = "\n".join(report_tsv_lines(report)) + "\n"
    elif fmt == "json":
        text = json.dumps(report.to_dict(), indent=2) + "\n"
    else:
        raise ConfigError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    try:
        sink.write(text)
        sink.flush()
    except (OSError, ValueError) as exc:
        raise OSError(f"failed to write report: {exc}") from exc


# -- benchmark matrix ------------------------------------------------------

@dataclass(frozen=True)
class BenchmarkCell:
    dataset: str
    method: str
    mean_accuracy: float | None = None
    runs: int = 0
    error: str | None = None


@dataclass(frozen=True)
class BenchmarkReport:
    datasets: tuple[str, ...]
    methods: tuple[str, ...]
    cells: tuple[BenchmarkCell, ...]
    version: str = __version__

    def cell(self, dataset: str, method: str) -> BenchmarkCell:
        for c in self.cells:
            if c.dataset == dataset and c.method == method:
                return c
        raise KeyError((dataset, method))

    def column_average(self, method: str) -> float | None:
        vals = [c.mean_accuracy for c in self.cells if c.method == method and c.mean_accuracy is not None]
        return statistics.fmean(vals) if vals else None

    @property
    def complete(self) -> bool:
        return all(c.error is None for c in self.cells)

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "datasets": list(self.datasets),
            "methods": list(self.methods),
            "cells": [asdict(c) for c in self.cells],
            "average": {m: self.column_average(m) for m in self.methods},
        }


def run_benchmark_suite(configs: Iterable[ExperimentConfig], workers: int = 1) -> BenchmarkReport:
    """Run every config; failures become error cells instead of aborting the suite."""
    cells = []
    datasets: list[str] = []
    methods: list[str] = []
    for cfg in configs:
        name = cfg.schema.name or cfg.data
        if name not in datasets:
            datasets.append(name)
        if cfg.method not in methods:
            methods.append(cfg.method)
        try:
            rep = run_experiment(cfg, workers=workers)
        except (KModesError, OSError) as exc:
            cells.append(BenchmarkCell(name, cfg.method, error=f"{type(exc).__name__}: {exc}"))
            continue
        cells.append(BenchmarkCell(name, cfg.method, rep.mean_accuracy, len(rep.runs)))
    return BenchmarkReport(tuple(datasets), tuple(methods), tuple(cells))


def benchmark_tsv_lines(bench: BenchmarkReport) -> list[str]:
    """Table of mean accuracy in percent, datasets by methods, plus an ``Avg.`` row."""
    lines = ["\t".join(("dataset",) + bench.methods)]
    for d in bench.datasets:
        row = [d]
        for m in bench.methods:
            try:
                c = bench.cell(d, m)
            except KeyError:
                row.append("")
                continue
            row.append("error" if c.error else _pct(c.mean_accuracy))
        lines.append("\t".join(row))
    lines.append("\t".join(["Avg."] + [_pct(bench.column_average(m)) for m in bench.methods]))
    for c in bench.cells:
        if c.error:
            lines.append(f"# error\t{c.dataset}\t{c.method}\t{c.error}")
    return lines


def emit_benchmark(bench: BenchmarkReport, fmt: str, sink: IO[str]) -> None:
    if fmt == "tsv":
        sink.write("\n".join(benchmark_tsv_lines(bench)) + "\n")
    elif fmt == "json":
        sink.write(json.dumps(bench.to_dict(), indent=2) + "\n")
    else:
        raise ConfigError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    sink.flush()

