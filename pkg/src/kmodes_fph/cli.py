"""Command line entry point.

    kmodes-fph run --data FILE --class-col 0 --init nfph
    kmodes-fph run --stock soybean --init random --runs 100 --seed 7
    kmodes-fph bench table2 --format tsv
    kmodes-fph fetch voting zoo

``run`` is the default subcommand, so ``kmodes-fph --data FILE ...`` works too.
"""
from __future__ import annotations

import argparse
import contextlib
import logging
import sys
from pathlib import Path

from . import __version__
from .dataset import DatasetSchema
from .errors import KModesError
from .experiment import (
    FORMATS,
    ExperimentConfig,
    emit_benchmark,
    emit_report,
    run_benchmark_suite,
    run_experiment,
)
from .initialization import METHODS
from .manifests import fetch, load_manifest, stock_dataset, stock_names

log = logging.getLogger("kmodes_fph")

SUBCOMMANDS = ("run", "bench", "fetch")


def _class_col(text: str) -> int | None:
    if text.lower() == "none":
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an index or 'none', got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("class column index must be non-negative")
    return value


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kmodes-fph", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command")

    run = sub.add_parser("run", help="run one experiment (one dataset, one initializer)")
    src = run.add_mutually_exclusive_group(required=True)
    src.add_argument("--data", help="path to a delimited data file")
    src.add_argument("--stock", choices=stock_names(), help="use a stock dataset schema")
    run.add_argument("--data-dir", help="directory holding stock data files")
    run.add_argument("--class-col", type=_class_col, default=None, help="class column index or 'none'")
    run.add_argument("--delimiter", default=None)
    run.add_argument("--missing", default=None)
    run.add_argument("--header", action="store_true", help="skip the first line")
    run.add_argument("--k", type=_positive, default=None, help="clusters (default: number of classes)")
    run.add_argument("--init", choices=METHODS, default="nfph")
    run.add_argument("--runs", type=_positive, default=None, help="default 100; nfph always 1")
    run.add_argument("--seed", type=_u64, default=0, help="base seed; run r uses seed+r")
    run.add_argument("--max-iters", type=_positive, default=100)
    run.add_argument("--workers", type=_positive, default=1)
    run.add_argument("--format", choices=FORMATS, default="tsv")
    run.add_argument("--out", default="stdout")

    bench = sub.add_parser("bench", help="run a benchmark manifest (dataset x method matrix)")
    bench.add_argument("manifest", nargs="?", default="table2", help="manifest path or stock name")
    bench.add_argument("--data-dir")
    bench.add_argument("--runs", type=_positive, default=None)
    bench.add_argument("--seed", type=_u64, default=None)
    bench.add_argument("--max-iters", type=_positive, default=None)
    bench.add_argument("--workers", type=_positive, default=1)
    bench.add_argument("--format", choices=FORMATS, default="tsv")
    bench.add_argument("--out", default="stdout")

    fetch_p = sub.add_parser("fetch", help="download stock datasets from their documented URLs")
    fetch_p.add_argument("names", nargs="*", help="stock dataset names (default: all)")
    fetch_p.add_argument("--data-dir")
    fetch_p.add_argument("--force", action="store_true")
    return parser


@contextlib.contextmanager
def _open_sink(target: str):
    if target in ("-", "stdout"):
        yield sys.stdout
        return
    path = Path(target)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        yield fh


def _run_config(args) -> ExperimentConfig:
    if args.stock:
        entry = stock_dataset(args.stock)
        base = entry.schema
        data = str(entry.path(args.data_dir))
        class_col = base.class_col if args.class_col is None else args.class_col
    else:
        base = DatasetSchema(name=Path(args.data).stem)
        data = args.data
        class_col = args.class_col
    schema = DatasetSchema(
        class_col=class_col,
        delimiter=base.delimiter if args.delimiter is None else args.delimiter,
        missing=base.missing if args.missing is None else args.missing,
        header=base.header or args.header,
        name=base.name,
    )
    return ExperimentConfig(
        data=data,
        schema=schema,
        method=args.init,
        k=args.k,
        runs=args.runs,
        base_seed=args.seed,
        max_iters=args.max_iters,
        fmt=args.format,
    )


def cmd_run(args) -> int:
    cfg = _run_config(args)
    report = run_experiment(cfg, workers=args.workers)
    with _open_sink(args.out) as sink:
        emit_report(report, cfg.fmt, sink)
    return 0


def bench_configs(manifest, data_dir=None, runs=None, seed=None, max_iters=None):
    for entry in manifest.datasets:
        for method in manifest.methods:
            yield ExperimentConfig(
                data=str(entry.path(data_dir)),
                schema=entry.schema,
                method=method,
                k=entry.k,
                runs=manifest.runs if runs is None else runs,
                base_seed=manifest.base_seed if seed is None else seed,
                max_iters=manifest.max_iters if max_iters is None else max_iters,
            )


def cmd_bench(args) -> int:
    manifest = load_manifest(args.manifest)
    configs = list(bench_configs(manifest, args.data_dir, args.runs, args.seed, args.max_iters))
    bench = run_benchmark_suite(configs, workers=args.workers)
    with _open_sink(args.out) as sink:
        emit_benchmark(bench, args.format, sink)
    if not bench.complete:
        for cell in bench.cells:
            if cell.error:
                log.error("%s/%s: %s", cell.dataset, cell.method, cell.error)
        return 1
    return 0


def cmd_fetch(args) -> int:
    for name in args.names or stock_names():
        entry = stock_dataset(name)
        path = fetch(entry, args.data_dir, overwrite=args.force)
        print(f"{name}\t{path}")
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0].startswith("-") and argv[0] not in ("-h", "--help", "--version", "-v", "--verbose"):
        argv.insert(0, "run")
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2
    handler = {"run": cmd_run, "bench": cmd_bench, "fetch": cmd_fetch}[args.command]
    try:
        return handler(args)
    except (KModesError, OSError) as exc:
        log.error("%s", exc)
        return 1
