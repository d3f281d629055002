"""End-to-end CLI behaviour through subprocess, exit codes included."""

from __future__ import annotations

import json
import os
import subprocess
import sys

from actree import gen_complete, gen_layered, serialize_edge_list

DIAMOND = "4 4 0\n0 1 1\n0 2 4\n1 3 2\n2 3 1\n"


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "actree", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def test_decompose_single_node(tmp_path):
    path = tmp_path / "one.edges"
    path.write_text("1 0 0\n")
    proc = run_cli("decompose", str(path))
    assert proc.returncode == 0
    assert proc.stdout.strip() == '{"components":{},"width":1}'


def test_decompose_layered_width(tmp_path):
    path = tmp_path / "layered.edges"
    path.write_text(serialize_edge_list(gen_layered(2, seed=0)))
    proc = run_cli("decompose", str(path))
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["width"] == 2
    assert set(doc["components"]) == {"0"}


def test_decompose_json_includes_idom(tmp_path):
    path = tmp_path / "d.edges"
    path.write_text(DIAMOND)
    proc = run_cli("decompose", str(path), "--json")
    doc = json.loads(proc.stdout)
    assert doc["idom"] == [0, 0, 0, 0]


def test_decompose_malformed_exits_2(tmp_path):
    path = tmp_path / "bad.edges"
    path.write_text("4 4 0\n0 1 1\nnot an arc\n")
    proc = run_cli("decompose", str(path))
    assert proc.returncode == 2
    assert "line 3" in proc.stderr


def test_decompose_prunes_with_warning(tmp_path):
    path = tmp_path / "unreachable.edges"
    path.write_text("3 1 0\n0 1 1\n")
    proc = run_cli("decompose", str(path))
    assert proc.returncode == 0
    assert "unreachable" in proc.stderr and "2" in proc.stderr
    assert json.loads(proc.stdout)["width"] == 2


def test_missing_file_exits_2():
    proc = run_cli("decompose", "/no/such/file.edges")
    assert proc.returncode == 2


def test_negative_weight_exits_3(tmp_path):
    path = tmp_path / "neg.edges"
    path.write_text("2 1 0\n0 1 -3\n")
    proc = run_cli("sssp", str(path))
    assert proc.returncode == 3


def test_sssp_recursive_verify(tmp_path):
    path = tmp_path / "d.edges"
    path.write_text(DIAMOND)
    proc = run_cli("sssp", str(path), "--algo", "recursive", "--verify")
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["dist"] == [0.0, 1.0, 4.0, 3.0]
    assert doc["parent"][0] is None
    assert doc["stats"]["pops"] == 4


def test_sssp_engines_agree(tmp_path):
    path = tmp_path / "d.edges"
    path.write_text(DIAMOND)
    by_algo = {}
    for algo in ("dijkstra", "recursive", "dag"):
        proc = run_cli("sssp", str(path), "--algo", algo)
        assert proc.returncode == 0
        by_algo[algo] = json.loads(proc.stdout)["dist"]
    assert by_algo["dijkstra"] == by_algo["recursive"] == by_algo["dag"]


def test_sssp_dag_on_cycle_exits_3(tmp_path):
    path = tmp_path / "cycle.edges"
    path.write_text("3 3 0\n0 1 1\n1 2 1\n2 0 1\n")
    proc = run_cli("sssp", str(path), "--algo", "dag")
    assert proc.returncode == 3


def test_width_fixtures(tmp_path):
    layered = tmp_path / "l.edges"
    layered.write_text(serialize_edge_list(gen_layered(3, seed=1)))
    assert run_cli("width", str(layered)).stdout.strip() == "2"

    complete = tmp_path / "k3.edges"
    complete.write_text(serialize_edge_list(gen_complete(3)))
    proc = run_cli("width", str(complete), "--exact")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "3"

    one = tmp_path / "one.edges"
    one.write_text("1 0 0\n")
    assert run_cli("width", str(one)).stdout.strip() == "1"


def test_width_exact_guard(tmp_path):
    path = tmp_path / "big.edges"
    path.write_text(serialize_edge_list(gen_complete(13)))
    proc = run_cli("width", str(path), "--exact")
    assert proc.returncode == 2


def test_dimacs_autodetect(tmp_path):
    path = tmp_path / "g.gr"
    path.write_text("c tiny\np sp 2 1\na 1 2 7\n")
    proc = run_cli("sssp", str(path), "--algo", "dijkstra")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dist"] == [0.0, 7.0]


def test_bench_dag_family(tmp_path):
    out = tmp_path / "bench.csv"
    proc = run_cli(
        "bench", "--family", "dag", "--sizes", "32,64", "--seeds", "1,2",
        "--out", str(out),
    )
    assert proc.returncode == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "family,n,e,seed,algo,ns,pops,decreases,max_queue,width"
    rows = [dict(zip(lines[0].split(","), line.split(","))) for line in lines[1:]]
    assert {r["algo"] for r in rows} == {"actree", "dijkstra", "recursive", "dag"}
    for r in rows:
        assert int(r["ns"]) >= 0
        assert r["width"] == "2"
        if r["algo"] == "recursive":
            assert int(r["max_queue"]) <= 1
            assert int(r["pops"]) == int(r["n"])
            assert int(r["decreases"]) <= int(r["e"])


def test_bench_is_deterministic_apart_from_timing(tmp_path):
    args = ("bench", "--family", "random", "--sizes", "64", "--seeds", "5")
    first = run_cli(*args).stdout.splitlines()
    second = run_cli(*args).stdout.splitlines()

    def strip_ns(lines):
        return [
            ",".join(f for i, f in enumerate(line.split(",")) if i != 5)
            for line in lines
        ]

    assert strip_ns(first) == strip_ns(second)


def test_bench_seed_defaults_to_env(tmp_path):
    proc = run_cli(
        "bench", "--family", "dag", "--sizes", "16",
        env_extra={"ACTREE_SEED": "77"},
    )
    assert proc.returncode == 0
    assert all(line.split(",")[3] == "77" for line in proc.stdout.splitlines()[1:])


def test_bench_size_exponent_syntax():
    proc = run_cli("bench", "--family", "dag", "--sizes", "2^4..2^5")
    assert proc.returncode == 0
    sizes = {line.split(",")[1] for line in proc.stdout.splitlines()[1:]}
    assert sizes == {"16", "32"}


def test_bench_usage_errors():
    assert run_cli("bench", "--family", "dag", "--sizes", "").returncode == 2
    assert run_cli("bench", "--family", "nope", "--sizes", "8").returncode == 2
