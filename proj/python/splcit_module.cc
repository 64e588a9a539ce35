// Copyright 2026 The splcit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Products cross the boundary as lists of selected feature
// names; t-sets as (selected, deselected) pairs of name lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splcit/bench.h"
#include "splcit/error.h"
#include "splcit/feature_model.h"
#include "splcit/generators.h"
#include "splcit/metrics.h"
#include "splcit/sat.h"
#include "splcit/stats.h"
#include "splcit/synthetic.h"
#include "splcit/tset.h"

namespace py = pybind11;

namespace splcit {
namespace {

using Names = std::vector<std::string>;

Names ToNames(const FeatureModel& model, std::span<const int> ids) {
  Names out;
  for (int f : ids) out.push_back(model.feature(f).name);
  return out;
}

std::vector<Names> ToNames(const FeatureModel& model, std::span<const FeatureSet> suite) {
  std::vector<Names> out;
  for (const FeatureSet& p : suite) out.push_back(ToNames(model, p.sel()));
  return out;
}

std::vector<FeatureSet> FromNames(const FeatureModel& model,
                                  const std::vector<Names>& suite) {
  std::vector<FeatureSet> out;
  for (const Names& p : suite) out.push_back(FeatureSet::FromNames(model, p));
  return out;
}

std::vector<int> Indices(const FeatureModel& model, const Names& names) {
  std::vector<int> out;
  for (const std::string& n : names) {
    const auto index = model.IndexOf(n);
    if (!index) throw Error(ErrorCode::kInvalidArgument, "unknown feature '" + n + "'");
    out.push_back(*index);
  }
  return out;
}

TSet ToTSet(const FeatureModel& model, const Names& sel, const Names& notsel) {
  return TSet(Indices(model, sel), Indices(model, notsel));
}

py::tuple FromTSet(const FeatureModel& model, const TSet& ts) {
  return py::make_tuple(ToNames(model, ts.sel()), ToNames(model, ts.notsel()));
}

Algorithm AlgorithmOf(const std::string& name) {
  const auto a = ParseAlgorithm(name);
  if (!a) throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + name + "'");
  return *a;
}

py::dict Classification(const FeatureModel& model) {
  const FeatureClassification c = ClassifyFeaturesWithSolver(model);
  py::dict d;
  d["core"] = ToNames(model, c.core);
  d["variant"] = ToNames(model, c.variant);
  d["dead"] = ToNames(model, c.dead);
  return d;
}

}  // namespace
}  // namespace splcit

PYBIND11_MODULE(_splcit, m) {
  using namespace splcit;
  m.doc() = "Pairwise covering arrays for feature models";

  static py::exception<Error> error(m, "SplcitError");
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<CapExceededError> cap_error(m, "CapExceededError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const CapExceededError& e) {
      py::set_error(cap_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<FeatureModel>(m, "FeatureModel")
      .def_property_readonly("name", &FeatureModel::name)
      .def_property_readonly("size", &FeatureModel::size)
      .def_property_readonly("features", &FeatureModel::FeatureList)
      .def("index_of", &FeatureModel::IndexOf, py::arg("name"))
      .def("serialize", [](const FeatureModel& model) { return SerializeModel(model); })
      .def("__len__", &FeatureModel::size)
      .def("__repr__", [](const FeatureModel& model) {
        return "<FeatureModel " + model.name() + " with " + std::to_string(model.size()) +
               " features>";
      });

  m.def("parse_model", [](const std::string& text) { return ParseModel(text); },
        py::arg("text"));
  m.def("load_model", &LoadModel, py::arg("path"));
  m.def(
      "synthetic_model",
      [](int features, std::uint64_t seed, const std::string& name, double group_rate,
         double xor_share, double mandatory_share, double ctc_density) {
        return MakeSyntheticModel(
            {name, features, group_rate, xor_share, mandatory_share, ctc_density, seed});
      },
      py::arg("features"), py::arg("seed") = 0, py::arg("name") = "synthetic",
      py::arg("group_rate") = 0.3, py::arg("xor_share") = 0.5,
      py::arg("mandatory_share") = 0.25, py::arg("ctc_density") = 0.1);

  m.def(
      "is_valid",
      [](const FeatureModel& model, const Names& selected) {
        return ValidateFeatureSet(model, FeatureSet::FromNames(model, selected));
      },
      py::arg("model"), py::arg("selected"));
  m.def(
      "is_satisfiable",
      [](const FeatureModel& model, const Names& selected, const Names& deselected) {
        return IsValidTSet(model, ToTSet(model, selected, deselected));
      },
      py::arg("model"), py::arg("selected") = Names{}, py::arg("deselected") = Names{});
  m.def("count_products", &CountProducts, py::arg("model"),
        py::arg("cap") = kDefaultEnumerationCap);
  m.def(
      "products",
      [](const FeatureModel& model, std::uint64_t cap) {
        return ToNames(model, EnumerateProducts(model, cap));
      },
      py::arg("model"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("classify_features", &Classification, py::arg("model"));
  m.def(
      "valid_tsets",
      [](const FeatureModel& model, int t) {
        py::list out;
        const TSetUniverse universe = EnumerateValidTSets(model, t);
        for (const TSet& ts : universe.tsets()) {
          out.append(FromTSet(model, ts));
        }
        return out;
      },
      py::arg("model"), py::arg("t") = 2);

  m.def(
      "generate",
      [](const FeatureModel& model, const std::string& algorithm, int t,
         std::uint64_t seed) {
        GeneratorConfig config;
        config.seed = seed;
        CoveringArray array;
        {
          py::gil_scoped_release release;
          array = Generate(Problem(model, t), AlgorithmOf(algorithm), config);
        }
        return ToNames(model, array.products);
      },
      py::arg("model"), py::arg("algorithm") = "greedy", py::arg("t") = 2,
      py::arg("seed") = 0);
  m.def(
      "verify",
      [](const FeatureModel& model, const std::vector<Names>& suite, int t) {
        const VerificationResult r =
            VerifyCoveringArray(model, EnumerateValidTSets(model, t), FromNames(model, suite));
        py::list uncovered;
        for (const TSet& ts : r.uncovered) uncovered.append(FromTSet(model, ts));
        py::dict d;
        d["ok"] = r.ok();
        d["invalid_rows"] = r.invalid_rows;
        d["uncovered"] = uncovered;
        return d;
      },
      py::arg("model"), py::arg("suite"), py::arg("t") = 2);

  m.def(
      "similarity",
      [](const FeatureModel& model, const Names& a, const Names& b) {
        return Similarity(FeatureSet::FromNames(model, a), FeatureSet::FromNames(model, b),
                          ClassifyFeaturesWithSolver(model));
      },
      py::arg("model"), py::arg("a"), py::arg("b"));
  m.def(
      "suite_similarity",
      [](const FeatureModel& model, const std::vector<Names>& suite) {
        return TestSuiteSimilarity(FromNames(model, suite), ClassifyFeaturesWithSolver(model));
      },
      py::arg("model"), py::arg("suite"));
  m.def(
      "tuple_frequency",
      [](const FeatureModel& model, const Names& selected, const Names& deselected,
         const std::vector<Names>& suite) {
        return TupleFrequency(ToTSet(model, selected, deselected), FromNames(model, suite));
      },
      py::arg("model"), py::arg("selected"), py::arg("deselected"), py::arg("suite"));
  m.def(
      "suite_metrics",
      [](const FeatureModel& model, const std::vector<Names>& suite, int t) {
        CoveringArray array;
        array.t = t;
        array.products = FromNames(model, suite);
        const SuiteMetrics s = ComputeSuiteMetrics(ClassifyFeaturesWithSolver(model),
                                                   EnumerateValidTSets(model, t), array);
        py::dict d;
        d["size"] = s.size;
        d["similarity"] = s.similarity;
        d["mean_tuple_frequency"] = s.mean_tuple_frequency;
        d["tuple_frequencies"] = s.tuple_frequencies;
        d["histogram"] = std::vector<std::size_t>(s.frequency_histogram.begin(),
                                                  s.frequency_histogram.end());
        return d;
      },
      py::arg("model"), py::arg("suite"), py::arg("t") = 2);

  using Values = std::vector<double>;
  m.def("wilcoxon", [](const Values& a, const Values& b) { return WilcoxonRankSum(a, b); },
        py::arg("a"), py::arg("b"));
  m.def("a12", [](const Values& a, const Values& b) { return A12(a, b); }, py::arg("a"),
        py::arg("b"));
  m.def("spearman", [](const Values& x, const Values& y) { return Spearman(x, y); },
        py::arg("x"), py::arg("y"));

  m.def(
      "analyze",
      [](const FeatureModel& model, std::uint64_t cap) {
        const ModelReport r = AnalyzeModel(model, cap);
        py::dict d;
        d["name"] = r.name;
        d["features"] = r.features;
        d["products"] = r.products;
        d["tsets"] = r.pair_tsets;
        d["core"] = r.core;
        d["variant"] = r.variant;
        d["dead"] = r.dead;
        return d;
      },
      py::arg("model"), py::arg("cap") = kDefaultEnumerationCap);
  m.def(
      "run_benchmark",
      [](const std::string& config_path, const std::string& output_dir, int runs,
         int workers) {
        BenchmarkConfig config = LoadBenchmarkConfig(config_path);
        if (runs > 0) config.runs = runs;
        if (workers >= 0) config.workers = workers;
        ComparisonReport report;
        {
          py::gil_scoped_release release;
          report = RunBenchmark(config);
          if (!output_dir.empty()) EmitReports(report, output_dir);
        }
        py::list rows;
        for (const CellSummary& c : report.summary) {
          py::dict d;
          d["model"] = c.model;
          d["algorithm"] = std::string(AlgorithmName(c.algorithm));
          d["runs"] = c.runs;
          d["size"] = c.mean_size;
          d["performance_ms"] = c.mean_ms;
          d["similarity"] = c.mean_similarity;
          rows.append(d);
        }
        return rows;
      },
      py::arg("config"), py::arg("output_dir") = "", py::arg("runs") = 0,
      py::arg("workers") = -1);
}
