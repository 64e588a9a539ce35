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

#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "splcit/bench.h"
#include "splcit/error.h"

namespace splcit {
namespace {

struct Value {
  enum class Kind { kString, kNumber, kBool, kArray };
  Kind kind = Kind::kString;
  std::string text;  // string contents or the number token
  bool boolean = false;
  std::vector<Value> items;
  int line = 0;
  int column = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  int line() const { return line_; }
  int column() const { return column_; }

  char get() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  // Spaces, tabs and a trailing comment; newlines too when `newlines`.
  void SkipBlank(bool newlines) {
    while (!done()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        get();
      } else if (c == '#') {
        while (!done() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  void EndOfLine() {
    SkipBlank(false);
    if (done()) return;
    if (peek() != '\n') Fail(std::string("unexpected '") + peek() + "'");
    get();
  }

  std::string Key() {
    std::string key;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                       peek() == '_' || peek() == '-')) {
      key += get();
    }
    if (key.empty()) Fail("expected a key");
    return key;
  }

  Value ParseValue() {
    Value v;
    v.line = line_;
    v.column = column_;
    const char c = peek();
    if (c == '"') {
      get();
      while (true) {
        if (done() || peek() == '\n') Fail("unterminated string");
        char ch = get();
        if (ch == '"') break;
        if (ch == '\\') {
          if (done()) Fail("unterminated string");
          switch (const char e = get(); e) {
            case '"': ch = '"'; break;
            case '\\': ch = '\\'; break;
            case 'n': ch = '\n'; break;
            case 't': ch = '\t'; break;
            default: Fail(std::string("unknown escape \\") + e);
          }
        }
        v.text += ch;
      }
      v.kind = Value::Kind::kString;
    } else if (c == '[') {
      get();
      v.kind = Value::Kind::kArray;
      while (true) {
        SkipBlank(true);
        if (peek() == ']') break;
        v.items.push_back(ParseValue());
        if (v.items.back().kind != v.items.front().kind) {
          throw ParseError("mixed value types in array", v.items.back().line,
                           v.items.back().column);
        }
        SkipBlank(true);
        if (peek() == ',') {
          get();
        } else if (peek() != ']') {
          Fail("expected ',' or ']'");
        }
      }
      get();
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' ||
               c == '.') {
      while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '.' || peek() == '-' || peek() == '+')) {
        v.text += get();
      }
      v.kind = Value::Kind::kNumber;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string word = Key();
      if (word != "true" && word != "false") {
        throw ParseError("unknown value '" + word + "'", v.line, v.column);
      }
      v.kind = Value::Kind::kBool;
      v.boolean = word == "true";
    } else {
      Fail("expected a value");
    }
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

[[noreturn]] void Bad(const Value& v, const std::string& message) {
  throw ParseError(message, v.line, v.column);
}

template <typename Int>
Int AsInteger(const Value& v, Int min_value) {
  if (v.kind != Value::Kind::kNumber) Bad(v, "expected an integer");
  Int out{};
  const char* first = v.text.data();
  const char* last = first + v.text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) Bad(v, "invalid integer '" + v.text + "'");
  if (out < min_value) Bad(v, "value out of range");
  return out;
}

int AsInt(const Value& v, int min_value) { return AsInteger<int>(v, min_value); }

double AsReal(const Value& v) {
  if (v.kind != Value::Kind::kNumber) Bad(v, "expected a number");
  double out = 0.0;
  const char* first = v.text.data();
  const char* last = first + v.text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || !std::isfinite(out)) {
    Bad(v, "invalid number '" + v.text + "'");
  }
  return out;
}

std::string AsString(const Value& v) {
  if (v.kind != Value::Kind::kString) Bad(v, "expected a string");
  return v.text;
}

std::vector<std::string> AsStrings(const Value& v) {
  if (v.kind != Value::Kind::kArray) Bad(v, "expected an array of strings");
  std::vector<std::string> out;
  for (const Value& item : v.items) out.push_back(AsString(item));
  return out;
}

std::string Resolve(const std::string& base_dir, const std::string& path) {
  const std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) return p.lexically_normal().string();
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

void Assign(BenchmarkConfig& config, const std::string& table, const std::string& key,
            const Value& v, const std::string& base_dir) {
  AnnealingParams& sa = config.generator.annealing;
  GeneticParams& ga = config.generator.genetic;
  if (table.empty()) {
    if (key == "models") {
      config.model_paths.clear();
      for (const std::string& path : AsStrings(v)) {
        config.model_paths.push_back(Resolve(base_dir, path));
      }
    } else if (key == "algorithms") {
      config.algorithms.clear();
      for (const Value& item : v.kind == Value::Kind::kArray ? v.items
                                                             : std::vector<Value>{v}) {
        const auto algorithm = ParseAlgorithm(AsString(item));
        if (!algorithm) Bad(item, "unknown algorithm '" + item.text + "'");
        config.algorithms.push_back(*algorithm);
      }
    } else if (key == "t") {
      config.t = AsInt(v, 1);
    } else if (key == "runs") {
      config.runs = AsInt(v, 1);
    } else if (key == "base_seed") {
      config.base_seed = AsInteger<std::uint64_t>(v, 0);
    } else if (key == "workers") {
      config.workers = AsInt(v, 0);
    } else if (key == "output_dir") {
      config.output_dir = Resolve(base_dir, AsString(v));
    } else if (key == "enumeration_cap") {
      config.enumeration_cap = AsInteger<std::uint64_t>(v, 1);
    } else {
      Bad(v, "unknown key '" + key + "'");
    }
  } else if (table == "annealing") {
    if (key == "initial_temperature") {
      sa.initial_temperature = AsReal(v);
    } else if (key == "cooling_factor") {
      sa.cooling_factor = AsReal(v);
    } else if (key == "moves_per_temperature") {
      sa.moves_per_temperature = AsInt(v, 1);
    } else if (key == "min_temperature") {
      sa.min_temperature = AsReal(v);
    } else if (key == "max_restarts") {
      sa.max_restarts = AsInt(v, 1);
    } else {
      Bad(v, "unknown key 'annealing." + key + "'");
    }
  } else if (table == "genetic") {
    if (key == "population_size") {
      ga.population_size = AsInt(v, 1);
    } else if (key == "crossover_rate") {
      ga.crossover_rate = AsReal(v);
    } else if (key == "mutation_rate") {
      ga.mutation_rate = AsReal(v);
    } else if (key == "generations_per_product") {
      ga.generations_per_product = AsInt(v, 1);
    } else {
      Bad(v, "unknown key 'genetic." + key + "'");
    }
  } else if (key == "candidate_pool") {
    config.generator.greedy.candidate_pool = AsInt(v, 0);
  } else {
    Bad(v, "unknown key 'greedy." + key + "'");
  }
}

}  // namespace

void BenchmarkConfig::Validate() const {
  if (model_paths.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "bench config lists no models");
  }
  if (algorithms.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "bench config lists no algorithms");
  }
  if (t < 1) throw Error(ErrorCode::kInvalidArgument, "t must be >= 1");
  if (runs < 1) throw Error(ErrorCode::kInvalidArgument, "runs must be >= 1");
  if (workers < 0) throw Error(ErrorCode::kInvalidArgument, "workers must be >= 0");
  std::set<Algorithm> seen;
  for (Algorithm a : algorithms) {
    if (!seen.insert(a).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "algorithm listed twice: " + std::string(AlgorithmName(a)));
    }
  }
  generator.Validate();
}

BenchmarkConfig ParseBenchmarkConfig(std::string_view text, const std::string& base_dir) {
  BenchmarkConfig config;
  Reader in(text);
  std::string table;
  std::set<std::string> seen_keys;
  std::set<std::string> seen_tables;
  while (true) {
    in.SkipBlank(true);
    if (in.done()) break;
    if (in.peek() == '[') {
      const int line = in.line();
      const int column = in.column();
      in.get();
      in.SkipBlank(false);
      table = in.Key();
      in.SkipBlank(false);
      if (in.peek() != ']') in.Fail("expected ']'");
      in.get();
      if (table != "annealing" && table != "genetic" && table != "greedy") {
        throw ParseError("unknown table '" + table + "'", line, column);
      }
      if (!seen_tables.insert(table).second) {
        throw ParseError("duplicate table '" + table + "'", line, column);
      }
      in.EndOfLine();
      continue;
    }
    const int line = in.line();
    const int column = in.column();
    const std::string key = in.Key();
    in.SkipBlank(false);
    if (in.peek() != '=') in.Fail("expected '='");
    in.get();
    in.SkipBlank(false);
    const Value value = in.ParseValue();
    if (!seen_keys.insert(table + "." + key).second) {
      throw ParseError("duplicate key '" + key + "'", line, column);
    }
    Assign(config, table, key, value, base_dir);
    in.EndOfLine();
  }
  return config;
}

BenchmarkConfig LoadBenchmarkConfig(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return ParseBenchmarkConfig(buffer.str(),
                              std::filesystem::path(path).parent_path().string());
}

}  // namespace splcit
