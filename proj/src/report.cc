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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "splcit/bench.h"
#include "splcit/error.h"

namespace splcit {
namespace {

namespace fs = std::filesystem;

void WriteFile(const fs::path& path, const std::string& contents) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + path.parent_path().string());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  out.close();
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

std::string Name(Algorithm a) { return std::string(AlgorithmName(a)); }

std::string Optional(const std::optional<double>& v) {
  return v ? FormatReal(*v) : std::string("NA");
}

std::string Fixed(double v, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

std::string Pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string ModelsCsv(const ComparisonReport& report) {
  std::string out = "model,features,products,tsets\n";
  for (const ModelInfo& m : report.models) {
    out += m.name + "," + std::to_string(m.features) + "," +
           (m.products ? std::to_string(*m.products) : std::string("NA")) + "," +
           std::to_string(m.tsets) + "\n";
  }
  return out;
}

std::string TimingsCsv(const ComparisonReport& report) {
  std::string out = "model,algorithm,run,seed,generation_ms\n";
  for (const RunRecord& r : report.runs) {
    out += r.model + "," + Name(r.algorithm) + "," + std::to_string(r.run) + "," +
           std::to_string(r.seed) + "," + std::to_string(r.generation_ms) + "\n";
  }
  return out;
}

std::string SummaryCsv(const ComparisonReport& report) {
  std::string out = "model,algorithm,runs,size,performance_ms,similarity\n";
  for (const CellSummary& c : report.summary) {
    out += c.model + "," + Name(c.algorithm) + "," + std::to_string(c.runs) + "," +
           FormatReal(c.mean_size) + "," + FormatReal(c.mean_ms) + "," +
           FormatReal(c.mean_similarity) + "\n";
  }
  return out;
}

std::string PairwiseCsv(const ComparisonReport& report) {
  std::string out = "model,metric,algoA,algoB,p_value,significant,a12\n";
  for (const PairwiseRow& p : report.pairwise) {
    out += p.model + "," + p.metric + "," + Name(p.a) + "," + Name(p.b) + "," +
           FormatReal(p.result.p_value) + "," +
           (p.result.significant() ? "true" : "false") + "," + FormatReal(p.result.a12) +
           "\n";
  }
  return out;
}

std::string CorrelationsCsv(const ComparisonReport& report) {
  std::string out = "variable";
  for (std::string_view name : kCorrelationNames) out += "," + std::string(name);
  out += "\n";
  for (int i = 0; i < kCorrelationVariables; ++i) {
    out += std::string(kCorrelationNames[i]);
    for (int j = 0; j < kCorrelationVariables; ++j) {
      out += "," + Optional(report.correlations.values[i][j]);
    }
    out += "\n";
  }
  return out;
}

// One table per model plus a pooled one; '*' marks the lowest mean per
// column, which is the preferred value for all three metrics.
std::string SummaryText(const ComparisonReport& report) {
  std::ostringstream out;
  out << "Covering-array benchmark, t=" << report.t << "\n"
      << "Performance is wall-clock generation time in ms; model parsing and t-set\n"
      << "universe construction are excluded. '*' marks the best (lowest) mean.\n";

  const auto table = [&](const std::string& title, const std::vector<CellSummary>& rows) {
    out << "\n" << title << "\n";
    out << "  " << Pad("algorithm", 12) << Pad("runs", 6) << Pad("size", 12)
        << Pad("perf_ms", 14) << "similarity\n";
    double best[3] = {0, 0, 0};
    for (int k = 0; k < 3; ++k) {
      best[k] = std::numeric_limits<double>::infinity();
      for (const CellSummary& c : rows) {
        const double v = k == 0 ? c.mean_size : k == 1 ? c.mean_ms : c.mean_similarity;
        best[k] = std::min(best[k], v);
      }
    }
    for (const CellSummary& c : rows) {
      const auto cell = [&](double v, int k, int digits, std::size_t width) {
        return Pad(Fixed(v, digits) + (v == best[k] ? "*" : ""), width);
      };
      out << "  " << Pad(Name(c.algorithm), 12) << Pad(std::to_string(c.runs), 6)
          << cell(c.mean_size, 0, 2, 12) << cell(c.mean_ms, 1, 1, 14)
          << cell(c.mean_similarity, 2, 4, 0) << "\n";
    }
  };

  std::map<Algorithm, std::vector<const CellSummary*>> by_algorithm;
  std::vector<Algorithm> order;
  for (const ModelInfo& m : report.models) {
    std::vector<CellSummary> rows;
    for (const CellSummary& c : report.summary) {
      if (c.model == m.name) rows.push_back(c);
    }
    std::string title = "model " + m.name + " (NF=" + std::to_string(m.features) +
                        ", NP=" +
                        (m.products ? std::to_string(*m.products) : std::string("> cap")) +
                        ", |TS|=" + std::to_string(m.tsets) + ")";
    table(title, rows);
  }
  for (const CellSummary& c : report.summary) {
    if (!by_algorithm.count(c.algorithm)) order.push_back(c.algorithm);
    by_algorithm[c.algorithm].push_back(&c);
  }
  if (report.models.size() > 1) {
    // Pooled means weight every run equally.
    std::vector<CellSummary> pooled;
    for (Algorithm a : order) {
      CellSummary p{std::string(kPooledModel), a, 0, 0, 0, 0};
      for (const CellSummary* c : by_algorithm[a]) {
        const double n = static_cast<double>(c->runs);
        p.runs += c->runs;
        p.mean_size += c->mean_size * n;
        p.mean_ms += c->mean_ms * n;
        p.mean_similarity += c->mean_similarity * n;
      }
      const double n = static_cast<double>(p.runs);
      p.mean_size /= n;
      p.mean_ms /= n;
      p.mean_similarity /= n;
      pooled.push_back(p);
    }
    table("all models", pooled);
  }

  bool header = false;
  for (const PairwiseRow& p : report.pairwise) {
    if (p.model != kPooledModel || !p.result.significant() ||
        AlgorithmName(p.a) > AlgorithmName(p.b)) {
      continue;
    }
    if (!header) {
      out << "\nSignificant pooled differences (p < " << kSignificanceLevel << ")\n";
      header = true;
    }
    out << "  " << Pad(p.metric, 12) << Name(p.a) << " vs " << Name(p.b)
        << ": p=" << FormatReal(p.result.p_value) << " A12=" << Fixed(p.result.a12, 3)
        << "\n";
  }

  if (!report.skipped.empty()) {
    out << "\nSkipped models\n";
    for (const SkippedModel& s : report.skipped) {
      out << "  " << s.path << ": " << s.reason << "\n";
    }
  }
  return out.str();
}

std::vector<std::string> Names(const FeatureModel& model, const std::vector<int>& ids) {
  std::vector<std::string> out;
  for (int f : ids) out.push_back(model.feature(f).name);
  return out;
}

std::string Join(const std::vector<std::string>& names) {
  if (names.empty()) return "-";
  std::string out;
  for (const std::string& n : names) out += (out.empty() ? "" : " ") + n;
  return out;
}

}  // namespace

std::string RunsCsvHeader() {
  std::string header = "model,algorithm,run,seed,size,similarity,mean_tuple_frequency";
  for (int k = 0; k < kHistogramBuckets; ++k) header += ",h" + std::to_string(k);
  return header;
}

std::string RunsCsvRow(const RunRecord& r) {
  std::string row = r.model + "," + Name(r.algorithm) + "," + std::to_string(r.run) +
                    "," + std::to_string(r.seed) + "," + std::to_string(r.size) + "," +
                    FormatReal(r.similarity) + "," + Optional(r.mean_tuple_frequency);
  for (std::size_t h : r.histogram) row += "," + std::to_string(h);
  return row;
}

std::string ArchivedArrayPath(const RunRecord& r) {
  return "arrays/" + r.model + "/" + Name(r.algorithm) + "-run" + std::to_string(r.run) +
         "-seed" + std::to_string(r.seed) + ".ca";
}

void EmitReports(const ComparisonReport& report, const std::string& dir) {
  const fs::path root(dir);
  std::string runs = RunsCsvHeader() + "\n";
  for (const RunRecord& r : report.runs) runs += RunsCsvRow(r) + "\n";
  WriteFile(root / "runs.csv", runs);
  WriteFile(root / "timings.csv", TimingsCsv(report));
  WriteFile(root / "models.csv", ModelsCsv(report));
  WriteFile(root / "summary.csv", SummaryCsv(report));
  WriteFile(root / "pairwise.csv", PairwiseCsv(report));
  WriteFile(root / "correlations.csv", CorrelationsCsv(report));
  WriteFile(root / "summary.txt", SummaryText(report));

  std::map<std::string, const FeatureModel*> models;
  for (const ModelInfo& m : report.models) {
    if (m.model) models[m.name] = m.model.get();
  }
  for (const RunRecord& r : report.runs) {
    const auto it = models.find(r.model);
    if (it == models.end()) continue;
    WriteFile(root / ArchivedArrayPath(r), SerializeCoveringArray(*it->second, r.array));
  }
}

ModelReport AnalyzeModel(const FeatureModel& model, std::uint64_t cap) {
  ModelReport r;
  r.name = model.name();
  r.features = model.size();
  r.cap = cap;
  try {
    r.products = CountProducts(model, cap);
  } catch (const CapExceededError&) {
    r.products.reset();
  }
  r.void_model = r.products && *r.products == 0;
  if (r.void_model) {
    for (const Feature& f : model.features()) r.dead.push_back(f.name);
    return r;
  }
  r.pair_tsets = EnumerateValidTSets(model, 2).size();
  const FeatureClassification classes = ClassifyFeaturesWithSolver(model);
  r.core = Names(model, classes.core);
  r.variant = Names(model, classes.variant);
  r.dead = Names(model, classes.dead);
  return r;
}

std::string FormatModelReport(const ModelReport& r) {
  std::ostringstream out;
  out << "model: " << r.name << "\n"
      << "features (NF): " << r.features << "\n"
      << "products (NP): "
      << (r.products ? std::to_string(*r.products) : "> " + std::to_string(r.cap)) << "\n"
      << "valid 2-sets (|TS|): " << r.pair_tsets << "\n"
      << "core (" << r.core.size() << "): " << Join(r.core) << "\n"
      << "variant (" << r.variant.size() << "): " << Join(r.variant) << "\n"
      << "dead (" << r.dead.size() << "): " << Join(r.dead) << "\n";
  if (r.void_model) {
    out << "warning: the model has no valid products\n";
  } else if (!r.dead.empty()) {
    out << "warning: " << r.dead.size() << " dead feature(s)\n";
  }
  return out.str();
}

}  // namespace splcit
