// Copyright 2026 The CWI Toolkit Authors.
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

#include "cwi/model_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cwi/error.h"

namespace cwi {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Corrupt(const std::string &why) {
  throw Error(ErrorCode::kCorruptModel, why);
}

Json MaskToJson(FeatureMask mask) {
  Json names = Json::array();
  for (FeatureId id : mask.Features()) names.push_back(FeatureName(id));
  return names;
}

FeatureMask MaskFromJson(const Json &j) {
  std::uint32_t bits = 0;
  for (const Json &name : j) {
    bits |= 1u << Index(FeatureFromName(name.get<std::string>()));
  }
  if (bits == 0) Corrupt("empty feature_mask");
  return FeatureMask(bits);
}

Json ConfigToJson(const TrainConfig &c) {
  Json j;
  j["num_trees"] = c.num_trees;
  j["features_per_split"] = c.features_per_split;
  j["max_depth"] = c.max_depth;
  j["min_leaf_size"] = c.min_leaf_size;
  j["seed"] = c.seed;
  j["bootstrap"] = c.bootstrap;
  return j;
}

TrainConfig ConfigFromJson(const Json &j) {
  TrainConfig c;
  c.num_trees = j.at("num_trees").get<int>();
  c.features_per_split = j.at("features_per_split").get<int>();
  c.max_depth = j.at("max_depth").get<int>();
  c.min_leaf_size = j.at("min_leaf_size").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.bootstrap = j.at("bootstrap").get<bool>();
  return c;
}

Json NodeToJson(const DecisionTree &tree, int index) {
  const DecisionTree::Node &node = tree.nodes()[index];
  Json j;
  switch (node.kind) {
    case DecisionTree::NodeKind::kLeaf:
      j["kind"] = "leaf";
      break;
    case DecisionTree::NodeKind::kNumeric:
      j["kind"] = "numeric";
      j["feature"] = FeatureName(node.feature);
      j["threshold"] = node.threshold;
      break;
    case DecisionTree::NodeKind::kCategorical:
      j["kind"] = "categorical";
      j["feature"] = FeatureName(node.feature);
      break;
  }
  j["counts"] = {node.counts[0], node.counts[1]};
  if (node.kind == DecisionTree::NodeKind::kNumeric) {
    j["left"] = NodeToJson(tree, node.left);
    j["right"] = NodeToJson(tree, node.right);
  } else if (node.kind == DecisionTree::NodeKind::kCategorical) {
    Json branches = Json::object();
    std::string default_branch;
    for (const auto &[category, child] : node.branches) {
      branches[category] = NodeToJson(tree, child);
      if (child == node.default_child) default_branch = category;
    }
    j["branches"] = std::move(branches);
    j["default"] = default_branch;
  }
  return j;
}

// Appends the subtree rooted at `j` to `nodes` in preorder and returns the
// index of its root.
int NodeFromJson(const Json &j, std::vector<DecisionTree::Node> &nodes) {
  const int index = static_cast<int>(nodes.size());
  nodes.emplace_back();
  DecisionTree::Node node;
  const Json &counts = j.at("counts");
  if (counts.size() != 2) Corrupt("node counts must have two entries");
  node.counts = {counts[0].get<std::size_t>(), counts[1].get<std::size_t>()};
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "leaf") {
    if (node.counts[0] + node.counts[1] == 0) Corrupt("empty leaf");
    node.kind = DecisionTree::NodeKind::kLeaf;
  } else if (kind == "numeric") {
    node.kind = DecisionTree::NodeKind::kNumeric;
    node.feature = FeatureFromName(j.at("feature").get<std::string>());
    if (IsCategorical(node.feature)) Corrupt("numeric split on pos_tag");
    node.threshold = j.at("threshold").get<double>();
    node.left = NodeFromJson(j.at("left"), nodes);
    node.right = NodeFromJson(j.at("right"), nodes);
  } else if (kind == "categorical") {
    node.kind = DecisionTree::NodeKind::kCategorical;
    node.feature = FeatureFromName(j.at("feature").get<std::string>());
    if (!IsCategorical(node.feature)) Corrupt("categorical split on number");
    std::vector<std::string> names;
    for (const auto &item : j.at("branches").items()) names.push_back(item.key());
    std::sort(names.begin(), names.end());
    if (names.empty()) Corrupt("categorical node without branches");
    const std::string default_branch = j.at("default").get<std::string>();
    for (const std::string &name : names) {
      const int child = NodeFromJson(j.at("branches").at(name), nodes);
      node.branches.emplace_back(name, child);
      if (name == default_branch) node.default_child = child;
    }
    if (node.default_child < 0) Corrupt("default branch not among branches");
  } else {
    Corrupt("unknown node kind '" + kind + "'");
  }
  nodes[index] = std::move(node);
  return index;
}

Json NaiveBayesToJson(const NaiveBayesModel &m) {
  Json j;
  j["priors"] = {m.priors[0], m.priors[1]};
  Json numeric = Json::object();
  for (FeatureId id : m.feature_mask.Features()) {
    if (IsCategorical(id)) continue;
    const auto &g = m.gaussians[Index(id)];
    Json f;
    f["mean"] = {g[0].mean, g[1].mean};
    f["variance"] = {g[0].variance, g[1].variance};
    f["variance_floor"] = m.variance_floors[Index(id)];
    numeric[std::string(FeatureName(id))] = std::move(f);
  }
  j["numeric"] = std::move(numeric);
  if (m.feature_mask.Contains(FeatureId::kPosTag)) {
    Json cat;
    cat["categories"] = m.categories;
    cat["probabilities"] = {m.category_probs[0], m.category_probs[1]};
    cat["unseen"] = {m.unseen_category_probs[0], m.unseen_category_probs[1]};
    j["pos_tag"] = std::move(cat);
  }
  return j;
}

NaiveBayesModel NaiveBayesFromJson(const Json &j, FeatureMask mask) {
  NaiveBayesModel m;
  m.feature_mask = mask;
  m.priors = {j.at("priors").at(0).get<double>(),
              j.at("priors").at(1).get<double>()};
  for (FeatureId id : mask.Features()) {
    if (IsCategorical(id)) continue;
    const Json &f = j.at("numeric").at(std::string(FeatureName(id)));
    for (int c = 0; c < 2; ++c) {
      m.gaussians[Index(id)][c].mean = f.at("mean").at(c).get<double>();
      m.gaussians[Index(id)][c].variance = f.at("variance").at(c).get<double>();
      if (!(m.gaussians[Index(id)][c].variance > 0.0)) {
        Corrupt("non-positive variance");
      }
    }
    m.variance_floors[Index(id)] = f.at("variance_floor").get<double>();
  }
  if (mask.Contains(FeatureId::kPosTag)) {
    const Json &cat = j.at("pos_tag");
    m.categories = cat.at("categories").get<std::vector<std::string>>();
    for (int c = 0; c < 2; ++c) {
      m.category_probs[c] =
          cat.at("probabilities").at(c).get<std::vector<double>>();
      if (m.category_probs[c].size() != m.categories.size()) {
        Corrupt("category table size mismatch");
      }
      m.unseen_category_probs[c] = cat.at("unseen").at(c).get<double>();
    }
  }
  return m;
}

}  // namespace

std::string SerializeModel(const Model &model) {
  Json j;
  j["schema_version"] = kModelSchemaVersion;
  if (const auto *forest = std::get_if<RandomForestModel>(&model)) {
    j["model_kind"] = "random_forest";
    j["feature_mask"] = MaskToJson(forest->feature_mask);
    j["config"] = ConfigToJson(forest->config);
    Json trees = Json::array();
    for (const DecisionTree &tree : forest->trees) {
      trees.push_back(NodeToJson(tree, 0));
    }
    j["trees"] = std::move(trees);
  } else {
    const auto &nb = std::get<NaiveBayesModel>(model);
    j["model_kind"] = "naive_bayes";
    j["feature_mask"] = MaskToJson(nb.feature_mask);
    j["config"] = Json::object();
    j["nb_params"] = NaiveBayesToJson(nb);
  }
  return j.dump(1) + "\n";
}

Model DeserializeModel(const std::string &text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception &e) {
    Corrupt(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema_version")) {
    throw Error(ErrorCode::kSchemaVersionMismatch, "no schema_version field");
  }
  if (!j["schema_version"].is_number_integer() ||
      j["schema_version"].get<long long>() != kModelSchemaVersion) {
    throw Error(ErrorCode::kSchemaVersionMismatch,
                "expected schema_version " +
                    std::to_string(kModelSchemaVersion) + ", found " +
                    j["schema_version"].dump());
  }
  try {
    const std::string kind = j.at("model_kind").get<std::string>();
    const FeatureMask mask = MaskFromJson(j.at("feature_mask"));
    if (kind == "random_forest") {
      RandomForestModel forest;
      forest.feature_mask = mask;
      forest.config = ConfigFromJson(j.at("config"));
      for (const Json &t : j.at("trees")) {
        std::vector<DecisionTree::Node> nodes;
        NodeFromJson(t, nodes);
        forest.trees.emplace_back(std::move(nodes));
      }
      if (forest.trees.size() !=
          static_cast<std::size_t>(forest.config.num_trees)) {
        Corrupt("tree count differs from config.num_trees");
      }
      return forest;
    }
    if (kind == "naive_bayes") return NaiveBayesFromJson(j.at("nb_params"), mask);
    Corrupt("unknown model_kind '" + kind + "'");
  } catch (const Json::exception &e) {
    Corrupt(e.what());
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kCorruptModel) throw;
    Corrupt(e.what());
  }
}

void SaveModel(const Model &model, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << SerializeModel(model);
  out.close();
  if (!out) throw Error(ErrorCode::kIoError, "write failure on " + path);
}

Model LoadModel(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return DeserializeModel(buffer.str());
}

double PredictProbability(const Model &model, const FeatureVector &fv) {
  if (const auto *forest = std::get_if<RandomForestModel>(&model)) {
    return PredictProba(*forest, fv);
  }
  return PredictNaiveBayes(std::get<NaiveBayesModel>(model), fv);
}

FeatureMask ModelFeatureMask(const Model &model) {
  return std::visit([](const auto &m) { return m.feature_mask; }, model);
}

}  // namespace cwi
