# Copyright 2026 The splcit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import csv
import os
import pathlib

import pytest

import splcit

DATA = pathlib.Path(os.environ.get("SPLCIT_DATA_DIR",
                                   pathlib.Path(__file__).resolve().parents[2] / "data"))


@pytest.fixture(scope="module")
def gpl():
    return splcit.load_model(str(DATA / "models" / "gpl.fm"))


def test_gpl_counts(gpl):
    assert gpl.name == "gpl"
    assert gpl.size == 18
    assert splcit.count_products(gpl) == 73
    assert len(splcit.products(gpl)) == 73
    assert len(splcit.valid_tsets(gpl)) == 418
    assert len(splcit.classify_features(gpl)["core"]) == 5


def test_validity_and_aliases(gpl):
    assert gpl.index_of("Number") == gpl.index_of("Num")
    assert splcit.is_satisfiable(gpl, ["Kruskal", "DFS"])
    assert not splcit.is_satisfiable(gpl, [], ["Directed", "Undirected"])


def test_generate_and_verify(gpl):
    for algorithm in ("greedy", "annealing", "genetic"):
        suite = splcit.generate(gpl, algorithm, 2, 1)
        result = splcit.verify(gpl, suite)
        assert result["ok"], algorithm
        metrics = splcit.suite_metrics(gpl, suite)
        assert metrics["size"] == len(suite)
        assert metrics["mean_tuple_frequency"] == pytest.approx(153 / 418, abs=1e-12)
    partial = splcit.verify(gpl, suite[:1])
    assert not partial["ok"]
    assert partial["uncovered"]


def test_metric_values(gpl):
    fs1 = ["GPL", "Driver", "GraphType", "Weight", "Search", "Algorithms", "Benchmark",
           "Undirected", "DFS", "CC", "Kruskal"]
    fs7 = ["GPL", "Driver", "GraphType", "Weight", "Search", "Algorithms", "Benchmark",
           "Undirected", "DFS", "Num", "CC", "Cycle"]
    assert splcit.similarity(gpl, fs1, fs7) == 0.625
    assert splcit.tuple_frequency(gpl, ["Kruskal", "DFS"], [], [fs1, fs7]) == 0.5


def test_stats():
    assert splcit.a12([1, 2, 3], [1, 2, 3]) == 0.5
    assert splcit.wilcoxon([1, 2, 3], [4, 5, 6]) == pytest.approx(0.1)
    assert splcit.spearman([1, 2, 3, 4], [10, 20, 30, 40]) == pytest.approx(1.0)
    with pytest.raises(splcit.SplcitError):
        splcit.spearman([1, 1, 1], [1, 2, 3])


def test_errors():
    with pytest.raises(splcit.ParseError):
        splcit.parse_model("model m\nroot R\noptional A Ghost\n")
    ten = splcit.parse_model("model m\nroot R\n" +
                             "".join(f"optional C{i} R\n" for i in range(10)))
    assert splcit.count_products(ten) == 1024
    with pytest.raises(splcit.CapExceededError):
        splcit.count_products(ten, 100)
    assert issubclass(splcit.ParseError, splcit.SplcitError)


def test_synthetic_and_analyze():
    model = splcit.synthetic_model(12, seed=3, name="demo")
    assert model.size == 12
    again = splcit.synthetic_model(12, seed=3, name="demo")
    assert model.serialize() == again.serialize()
    report = splcit.analyze(model)
    assert report["features"] == 12
    assert report["dead"] == []


def test_run_benchmark(tmp_path):
    config = tmp_path / "bench.toml"
    config.write_text(f'models = ["{DATA / "models" / "gpl.fm"}"]\n'
                      'algorithms = ["greedy", "genetic"]\nruns = 2\n')
    rows = splcit.run_benchmark(str(config), str(tmp_path / "out"))
    assert [r["algorithm"] for r in rows] == ["genetic", "greedy"]
    with open(tmp_path / "out" / "runs.csv", newline="") as f:
        assert len(list(csv.DictReader(f))) == 4
