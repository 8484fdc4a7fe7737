import json
import subprocess
import sys

import pytest

from kmodes_fph.cli import main
from kmodes_fph.manifests import (
    DatasetEntry,
    fetch,
    load_manifest,
    stock_dataset,
    stock_names,
)
from kmodes_fph.dataset import DatasetSchema
from kmodes_fph.errors import SchemaError


@pytest.fixture
def data_file(tmp_path):
    rows = ["y,a,b,c", "y,a,b,d", "n,x,y,z", "n,x,y,c", "y,a,q,c", "n,x,y,?"]
    path = tmp_path / "small.data"
    path.write_text("\n".join(rows) + "\n")
    return path


def test_run_json_to_file(data_file, tmp_path):
    out = tmp_path / "rep.json"
    code = main(["run", "--data", str(data_file), "--class-col", "0", "--init", "bfph",
                 "--runs", "4", "--seed", "10", "--format", "json", "--out", str(out)])
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["k"] == 2
    assert [r["seed"] for r in rep["runs"]] == [10, 11, 12, 13]
    assert rep["config"]["max_iters"] == 100
    assert rep["dataset"]["n"] == 6


def test_run_is_default_subcommand(data_file, capsys):
    assert main(["--data", str(data_file), "--class-col", "0", "--init", "nfph"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3 and lines[0].startswith("record\trun\tseed")


def test_missing_token_and_no_class(data_file, capsys):
    assert main(["--data", str(data_file), "--class-col", "none", "--k", "2", "--missing", "NA"]) == 0
    assert capsys.readouterr().out.splitlines()[-1].split("\t")[3] == ""


def test_error_exit_codes(data_file, tmp_path):
    assert main(["--data", str(tmp_path / "nope.data"), "--class-col", "0"]) == 1
    assert main(["--data", str(data_file), "--class-col", "9"]) == 1
    assert main(["--data", str(data_file), "--class-col", "0", "--k", "7"]) == 1
    with pytest.raises(SystemExit) as info:
        main(["--data", str(data_file), "--init", "kmeans++"])
    assert info.value.code != 0
    with pytest.raises(SystemExit):
        main(["--data", str(data_file), "--seed", "-3"])
    assert main([]) == 2


def test_bench_with_inline_manifest(data_file, tmp_path, capsys):
    manifest = tmp_path / "m.json"
    manifest.write_text(json.dumps({
        "name": "mini",
        "datasets": [{"name": "small", "file": str(data_file), "class_col": 0}],
        "methods": ["random", "nfph"],
        "runs": 3,
    }))
    assert main(["bench", str(manifest)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "dataset\trandom\tnfph"
    assert lines[1].startswith("small\t")
    assert lines[2].startswith("Avg.\t")


def test_bench_missing_data_is_partial_and_nonzero(tmp_path, capsys):
    code = main(["bench", "table2", "--data-dir", str(tmp_path), "--runs", "2"])
    assert code == 1
    out = capsys.readouterr().out
    assert "Avg." in out and "# error" in out


def test_stock_manifests():
    assert stock_names() == ["mushroom", "soybean", "voting", "zoo"]
    table2 = load_manifest("table2")
    assert [d.name for d in table2.datasets] == ["voting", "mushroom", "soybean", "zoo"]
    assert table2.methods == ("random", "bfph", "nfph") and table2.runs == 100
    assert stock_dataset("mushroom").schema.class_col == 0
    assert stock_dataset("soybean").schema.class_col == 35
    assert stock_dataset("zoo").schema.class_col == 17
    with pytest.raises(SchemaError):
        stock_dataset("table2")
    with pytest.raises(SchemaError):
        stock_dataset("iris")


def test_fetch_copies_from_url(tmp_path, data_file):
    entry = DatasetEntry("small", "small.data", DatasetSchema(class_col=0), url=data_file.as_uri())
    dest = fetch(entry, tmp_path / "dl")
    assert dest.read_text() == data_file.read_text()
    assert fetch(entry, tmp_path / "dl") == dest


def test_module_entry_point(data_file):
    proc = subprocess.run(
        [sys.executable, "-m", "kmodes_fph", "--data", str(data_file), "--class-col", "0", "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["aggregate"]["runs"] == 1
