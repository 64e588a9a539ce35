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

#include "splcit/feature_model.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "splcit/error.h"

namespace splcit {
namespace {

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

bool IsValidName(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == '#' || c == ' ' || c == '\t' || c == '\r' || c == '\n';
  });
}

}  // namespace

FeatureModel FeatureModel::Create(
    std::string name, std::vector<Feature> features,
    std::vector<FeatureGroup> groups,
    std::vector<CrossTreeConstraint> constraints,
    std::vector<std::pair<std::string, int>> aliases) {
  const int n = static_cast<int>(features.size());
  if (n == 0) Invalid("model has no features");
  if (!IsValidName(name)) Invalid("invalid model name '" + name + "'");

  FeatureModel model;
  for (int i = 0; i < n; ++i) {
    const Feature& f = features[i];
    if (!IsValidName(f.name)) Invalid("invalid feature name '" + f.name + "'");
    if (!model.index_.emplace(f.name, i).second) {
      Invalid("duplicate feature name '" + f.name + "'");
    }
    if (i == 0) {
      if (f.relation != Relation::kRoot || f.parent != -1 || f.group != -1) {
        Invalid("feature 0 must be the root");
      }
      continue;
    }
    if (f.relation == Relation::kRoot) {
      Invalid("more than one root: '" + f.name + "'");
    }
    if (f.parent < 0 || f.parent >= n || f.parent == i) {
      Invalid("feature '" + f.name + "' has no valid parent");
    }
    const bool grouped = f.relation == Relation::kXorMember ||
                         f.relation == Relation::kOrMember;
    if (grouped != (f.group >= 0)) {
      Invalid("feature '" + f.name + "' has inconsistent group membership");
    }
    // Only group lines may reference a parent declared later.
    if (!grouped && f.parent > i) {
      Invalid("feature '" + f.name + "' is declared before its parent");
    }
  }

  // Every upward walk must reach the root within n steps.
  for (int i = 1; i < n; ++i) {
    int cursor = i;
    int steps = 0;
    while (cursor != 0) {
      cursor = features[cursor].parent;
      if (++steps > n) Invalid("parent edges form a cycle");
    }
  }

  for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
    const FeatureGroup& group = groups[g];
    if (group.members.size() < 2) Invalid("group with fewer than 2 members");
    if (group.parent < 0 || group.parent >= n) Invalid("group parent missing");
    const Relation expected = group.kind == GroupKind::kXor
                                  ? Relation::kXorMember
                                  : Relation::kOrMember;
    for (std::size_t k = 0; k < group.members.size(); ++k) {
      const int m = group.members[k];
      if (m <= 0 || m >= n) Invalid("group member out of range");
      const Feature& f = features[m];
      if (f.group != g || f.parent != group.parent || f.relation != expected) {
        Invalid("group member '" + f.name + "' disagrees with its group");
      }
      // Members are declared together by one group statement.
      if (k > 0 && m != group.members[k - 1] + 1) {
        Invalid("group members must be declared contiguously");
      }
    }
  }
  for (int i = 1; i < n; ++i) {
    const int g = features[i].group;
    if (g >= static_cast<int>(groups.size())) Invalid("unknown group id");
  }

  for (const CrossTreeConstraint& c : constraints) {
    if (c.source < 0 || c.source >= n || c.target < 0 || c.target >= n) {
      Invalid("constraint references an unknown feature");
    }
    if (c.source == c.target) {
      Invalid("constraint endpoints must be distinct");
    }
  }

  for (const auto& [alias, target] : aliases) {
    if (!IsValidName(alias)) Invalid("invalid alias '" + alias + "'");
    if (target < 0 || target >= n) Invalid("alias target out of range");
    if (!model.index_.emplace(alias, target).second) {
      Invalid("alias '" + alias + "' collides with an existing name");
    }
  }

  model.name_ = std::move(name);
  model.features_ = std::move(features);
  model.groups_ = std::move(groups);
  model.constraints_ = std::move(constraints);
  model.aliases_ = std::move(aliases);
  return model;
}

std::vector<std::string> FeatureModel::FeatureList() const {
  std::vector<std::string> names;
  names.reserve(features_.size());
  for (const Feature& f : features_) names.push_back(f.name);
  return names;
}

std::optional<int> FeatureModel::IndexOf(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> FeatureModel::Children(int index) const {
  std::vector<int> children;
  for (int i = 1; i < size(); ++i) {
    if (features_[i].parent == index) children.push_back(i);
  }
  return children;
}

FeatureSet FeatureSet::FromSelected(int feature_count,
                                    std::span<const int> selected) {
  std::vector<std::uint8_t> bits(feature_count, 0);
  for (int i : selected) {
    if (i < 0 || i >= feature_count) {
      throw Error(ErrorCode::kInvalidArgument, "feature index out of range");
    }
    bits[i] = 1;
  }
  return FeatureSet(std::move(bits));
}

FeatureSet FeatureSet::FromNames(const FeatureModel& model,
                                 std::span<const std::string> selected) {
  std::vector<std::uint8_t> bits(model.size(), 0);
  for (const std::string& name : selected) {
    auto index = model.IndexOf(name);
    if (!index) {
      throw Error(ErrorCode::kInvalidArgument, "unknown feature '" + name + "'");
    }
    bits[*index] = 1;
  }
  return FeatureSet(std::move(bits));
}

std::vector<int> FeatureSet::sel() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (selected_[i]) out.push_back(i);
  }
  return out;
}

std::vector<int> FeatureSet::notsel() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (!selected_[i]) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// .fm parser

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

std::vector<Token> Tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '#') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

struct PendingGroup {
  Token parent;
  int line = 0;
  std::size_t group_id = 0;
};

class ModelParser {
 public:
  FeatureModel Parse(std::string_view text) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      ParseLine(Tokenize(text.substr(pos, end - pos)), line_no);
      pos = end + 1;
    }
    if (model_name_.empty()) throw ParseError("missing 'model' statement", 1, 1);
    if (features_.empty()) {
      throw ParseError("missing 'root' statement", line_no, 1);
    }
    ResolveGroups();
    return FeatureModel::Create(model_name_, std::move(features_),
                                std::move(groups_), std::move(constraints_),
                                std::move(aliases_));
  }

 private:
  void ParseLine(const std::vector<Token>& tokens, int line) {
    if (tokens.empty()) return;
    const std::string_view keyword = tokens[0].text;
    if (model_name_.empty()) {
      if (keyword != "model") {
        throw ParseError("expected 'model <name>' first", line, tokens[0].column);
      }
      ExpectArity(tokens, 2, line);
      model_name_ = std::string(tokens[1].text);
      return;
    }
    if (features_.empty()) {
      if (keyword != "root") {
        throw ParseError("expected 'root <feature>' after 'model'", line,
                         tokens[0].column);
      }
      ExpectArity(tokens, 2, line);
      Declare(tokens[1], line, Feature{std::string(tokens[1].text)});
      return;
    }
    if (keyword == "mandatory" || keyword == "optional") {
      ExpectArity(tokens, 3, line);
      const int parent = Resolve(tokens[2], line, "unknown parent");
      Feature f{std::string(tokens[1].text), parent,
                keyword == "mandatory" ? Relation::kMandatory
                                       : Relation::kOptional};
      Declare(tokens[1], line, std::move(f));
    } else if (keyword == "xor" || keyword == "or") {
      if (tokens.size() < 2) {
        throw ParseError("expected '" + std::string(keyword) +
                             " <parent> <child1> <child2> ...'",
                         line, tokens[0].column);
      }
      if (tokens.size() < 4) {
        throw ParseError("group with fewer than 2 members", line,
                         tokens[0].column);
      }
      const bool is_xor = keyword == "xor";
      FeatureGroup group{-1, is_xor ? GroupKind::kXor : GroupKind::kOr, {}};
      const int group_id = static_cast<int>(groups_.size());
      for (std::size_t k = 2; k < tokens.size(); ++k) {
        Feature f{std::string(tokens[k].text), -1,
                  is_xor ? Relation::kXorMember : Relation::kOrMember,
                  group_id};
        group.members.push_back(Declare(tokens[k], line, std::move(f)));
      }
      groups_.push_back(std::move(group));
      pending_.push_back({tokens[1], line, static_cast<std::size_t>(group_id)});
    } else if (keyword == "requires" || keyword == "excludes") {
      ExpectArity(tokens, 3, line);
      const int a = Resolve(tokens[1], line, "constraint references unknown feature");
      const int b = Resolve(tokens[2], line, "constraint references unknown feature");
      if (a == b) {
        throw ParseError("constraint endpoints must be distinct", line,
                         tokens[2].column);
      }
      constraints_.push_back({keyword == "requires" ? ConstraintKind::kRequires
                                                    : ConstraintKind::kExcludes,
                              a, b});
    } else if (keyword == "alias") {
      ExpectArity(tokens, 3, line);
      const int target = Resolve(tokens[2], line, "alias of unknown feature");
      const std::string alias(tokens[1].text);
      if (names_.count(alias)) {
        throw ParseError("duplicate feature name '" + alias + "'", line,
                         tokens[1].column);
      }
      names_.emplace(alias, target);
      aliases_.emplace_back(alias, target);
    } else if (keyword == "model" || keyword == "root") {
      throw ParseError("'" + std::string(keyword) + "' may appear only once",
                       line, tokens[0].column);
    } else {
      throw ParseError("unknown statement '" + std::string(keyword) + "'", line,
                       tokens[0].column);
    }
  }

  static void ExpectArity(const std::vector<Token>& tokens, std::size_t n,
                          int line) {
    if (tokens.size() != n) {
      const int column = tokens.size() > n ? tokens[n].column : tokens[0].column;
      throw ParseError("'" + std::string(tokens[0].text) + "' expects " +
                           std::to_string(n - 1) + " argument(s)",
                       line, column);
    }
  }

  int Declare(const Token& token, int line, Feature feature) {
    const std::string name(token.text);
    if (names_.count(name)) {
      throw ParseError("duplicate feature name '" + name + "'", line,
                       token.column);
    }
    const int index = static_cast<int>(features_.size());
    names_.emplace(name, index);
    features_.push_back(std::move(feature));
    return index;
  }

  int Resolve(const Token& token, int line, const char* what) const {
    auto it = names_.find(std::string(token.text));
    if (it == names_.end()) {
      throw ParseError(std::string(what) + " '" + std::string(token.text) + "'",
                       line, token.column);
    }
    return it->second;
  }

  void ResolveGroups() {
    for (const PendingGroup& p : pending_) {
      const int parent = Resolve(p.parent, p.line, "unknown parent");
      FeatureGroup& group = groups_[p.group_id];
      group.parent = parent;
      for (int m : group.members) {
        if (m == parent) {
          throw ParseError("feature cannot be its own parent", p.line,
                           p.parent.column);
        }
        features_[m].parent = parent;
      }
    }
    // Forward references in group lines can close a cycle.
    const int n = static_cast<int>(features_.size());
    for (const PendingGroup& p : pending_) {
      int cursor = groups_[p.group_id].parent;
      for (int steps = 0; cursor != 0; ++steps) {
        if (steps > n) {
          throw ParseError("parent edges form a cycle", p.line,
                           p.parent.column);
        }
        cursor = features_[cursor].parent;
      }
    }
  }

  std::string model_name_;
  std::vector<Feature> features_;
  std::vector<FeatureGroup> groups_;
  std::vector<CrossTreeConstraint> constraints_;
  std::vector<std::pair<std::string, int>> aliases_;
  std::unordered_map<std::string, int> names_;
  std::vector<PendingGroup> pending_;
};

}  // namespace

FeatureModel ParseModel(std::string_view text) {
  return ModelParser().Parse(text);
}

FeatureModel LoadModel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read model file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseModel(buffer.str());
}

std::string SerializeModel(const FeatureModel& model) {
  std::ostringstream out;
  const auto& features = model.features();
  out << "model " << model.name() << "\n";
  out << "root " << features[0].name << "\n";
  std::vector<bool> group_done(model.groups().size(), false);
  for (int i = 1; i < model.size(); ++i) {
    const Feature& f = features[i];
    switch (f.relation) {
      case Relation::kMandatory:
        out << "mandatory " << f.name << " " << features[f.parent].name << "\n";
        break;
      case Relation::kOptional:
        out << "optional " << f.name << " " << features[f.parent].name << "\n";
        break;
      case Relation::kXorMember:
      case Relation::kOrMember: {
        if (group_done[f.group]) break;
        group_done[f.group] = true;
        const FeatureGroup& g = model.groups()[f.group];
        out << (g.kind == GroupKind::kXor ? "xor " : "or ")
            << features[g.parent].name;
        for (int m : g.members) out << " " << features[m].name;
        out << "\n";
        break;
      }
      case Relation::kRoot:
        break;
    }
  }
  for (const CrossTreeConstraint& c : model.constraints()) {
    out << (c.kind == ConstraintKind::kRequires ? "requires " : "excludes ")
        << features[c.source].name << " " << features[c.target].name << "\n";
  }
  for (const auto& [alias, target] : model.aliases()) {
    out << "alias " << alias << " " << features[target].name << "\n";
  }
  return out.str();
}

bool ValidateFeatureSet(const FeatureModel& model, const FeatureSet& product) {
  if (product.size() != model.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "feature set has " + std::to_string(product.size()) +
                    " features, model has " + std::to_string(model.size()));
  }
  if (!product.selected(0)) return false;
  for (int i = 1; i < model.size(); ++i) {
    const Feature& f = model.feature(i);
    const bool parent_on = product.selected(f.parent);
    if (product.selected(i) && !parent_on) return false;
    if (f.relation == Relation::kMandatory && parent_on && !product.selected(i)) {
      return false;
    }
  }
  for (const FeatureGroup& g : model.groups()) {
    if (!product.selected(g.parent)) continue;
    const auto on = std::count_if(g.members.begin(), g.members.end(),
                                  [&](int m) { return product.selected(m); });
    if (g.kind == GroupKind::kXor ? on != 1 : on < 1) return false;
  }
  for (const CrossTreeConstraint& c : model.constraints()) {
    const bool a = product.selected(c.source);
    const bool b = product.selected(c.target);
    if (c.kind == ConstraintKind::kRequires ? (a && !b) : (a && b)) {
      return false;
    }
  }
  return true;
}

FeatureClassification ClassifyFeatures(
    const FeatureModel& model, std::span<const FeatureSet> all_products) {
  if (all_products.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "model '" + model.name() + "' is void: it has no valid products");
  }
  std::vector<std::size_t> counts(model.size(), 0);
  for (const FeatureSet& p : all_products) {
    if (p.size() != model.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "product size mismatch");
    }
    for (int i = 0; i < model.size(); ++i) counts[i] += p.selected(i);
  }
  FeatureClassification result;
  for (int i = 0; i < model.size(); ++i) {
    if (counts[i] == all_products.size()) {
      result.core.push_back(i);
    } else if (counts[i] == 0) {
      result.dead.push_back(i);
    } else {
      result.variant.push_back(i);
    }
  }
  return result;
}

}  // namespace splcit
