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

#include "cwi/cli.h"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cwi/corpus_io.h"
#include "cwi/error.h"
#include "cwi/evaluation.h"
#include "cwi/feature_selection.h"
#include "cwi/features.h"
#include "cwi/lexical_resources.h"
#include "cwi/model_io.h"
#include "cwi/prediction.h"

namespace cwi {
namespace {

struct RunConfig {
  std::string subcommand;
  ResourcePaths resources;
  std::string data;
  std::string model;
  std::string out;
  std::uint64_t seed = 42;
  double threshold = 0.5;
  std::string learner = "forest";
  TrainConfig train;
  int k = 10;
  std::string features = "all";
  std::string method = "ig";
  int threads = 1;
};

// Raised for flag combinations CLI11 cannot check on its own.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors caused by flag values rather than by data.
bool IsFlagError(ErrorCode code) {
  return code == ErrorCode::kBadConfig || code == ErrorCode::kBadFeatureMask ||
         code == ErrorCode::kBadThreshold || code == ErrorCode::kBadK;
}

void Require(const std::string &value, const std::string &flag) {
  if (value.empty()) throw UsageError(flag + " is required");
}

void RequireResources(const RunConfig &config) {
  Require(config.resources.frequency_table, "--freq");
  Require(config.resources.wordnet_dir, "--wordnet");
  Require(config.resources.mrc_file, "--mrc");
  Require(config.resources.tagger_lexicon, "--tagger-lexicon");
}

// Whether the first non-blank line of `path` has a label column.
bool DetectLabeled(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (IsBlank(line)) continue;
    return SplitFields(StripCarriageReturn(line), '\t').size() == 4;
  }
  throw Error(ErrorCode::kEmptyDataset, path + " has no instances");
}

// Writes to --out when given, otherwise to `fallback`.
class Output {
 public:
  Output(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error(ErrorCode::kIoError, "cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream &stream() { return *stream_; }
  bool to_file() const { return file_ != nullptr; }
  void Close(const std::string &path) {
    if (file_) {
      file_->close();
      if (!*file_) throw Error(ErrorCode::kIoError, "write failure on " + path);
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream *stream_;
};

FeatureDataset LoadTrainingFeatures(const RunConfig &config) {
  RequireResources(config);
  Require(config.data, "--data");
  const ResourceBundle resources = LoadResources(config.resources);
  const Dataset dataset = LoadDataset(config.data, /*labeled=*/true);
  return BuildFeatureMatrix(dataset, resources)
      .WithMask(FeatureMask::Parse(config.features));
}

int CmdExtract(const RunConfig &config, std::ostream &out, std::ostream &err) {
  RequireResources(config);
  Require(config.data, "--data");
  const ResourceBundle resources = LoadResources(config.resources);
  const Dataset dataset = LoadDataset(config.data, DetectLabeled(config.data));
  const FeatureDataset features = BuildFeatureMatrix(dataset, resources);
  Output output(config.out, out);
  WriteFeatureMatrix(features, output.stream());
  output.Close(config.out);
  (output.to_file() ? out : err) << "rows\t" << features.size() << '\n';
  return kExitOk;
}

int CmdTrain(const RunConfig &config, std::ostream &out) {
  Require(config.model, "--model");
  const LearnerKind kind = ParseLearnerKind(config.learner);
  if (kind == LearnerKind::kOracle) throw UsageError("oracle cannot be saved");
  const FeatureDataset data = LoadTrainingFeatures(config);
  TrainConfig train = config.train;
  train.seed = config.seed;
  const Model model = TrainModel(kind, data, train, config.threads);
  SaveModel(model, config.model);

  out << "learner\t" << LearnerKindName(kind) << '\n';
  if (const auto *forest = std::get_if<RandomForestModel>(&model)) {
    out << "trees\t" << forest->trees.size() << '\n';
    out << "features_per_split\t" << forest->config.features_per_split << '\n';
  }
  out << "seed\t" << config.seed << '\n';
  out << "features\t" << data.mask().ToString() << '\n';
  out << "instances\t" << data.size() << '\n';
  out << "model\t" << config.model << '\n';
  return kExitOk;
}

int CmdPredict(const RunConfig &config, std::ostream &out, std::ostream &err) {
  RequireResources(config);
  Require(config.data, "--data");
  Require(config.model, "--model");
  const Model model = LoadModel(config.model);
  const FeatureMask mask = ModelFeatureMask(model);
  const ResourceBundle resources = LoadResources(config.resources);
  // Validate the threshold before touching the input.
  Classify(0.0, config.threshold);

  std::ifstream in(config.data);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + config.data);
  const bool labeled = DetectLabeled(config.data);
  Output output(config.out, out);
  std::string line;
  std::size_t line_number = 0;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    try {
      const Instance instance = ParseInstance(line, labeled);
      const double p =
          PredictProbability(model, Extract(instance, resources, mask));
      const Prediction prediction = Classify(p, config.threshold);
      output.stream() << FormatPredictionLine(line, prediction.predicted_label,
                                              prediction.probability_complex)
                      << '\n';
      ++rows;
    } catch (const Error &e) {
      Rethrow(e, config.data + ":" + std::to_string(line_number));
    }
  }
  output.Close(config.out);
  (output.to_file() ? out : err) << "rows\t" << rows << '\n';
  return kExitOk;
}

int CmdCrossValidate(const RunConfig &config, std::ostream &out) {
  const LearnerKind kind = ParseLearnerKind(config.learner);
  const FeatureDataset data = LoadTrainingFeatures(config);
  const auto learner = MakeLearner(kind, config.train, config.threads);
  const CrossValidationResult cv =
      CrossValidate(*learner, data, config.k, config.seed, config.threshold);
  std::ostringstream title;
  title << "learner\t" << LearnerKindName(kind) << "\nfeatures\t"
        << data.mask().ToString() << "\nfolds\t" << config.k << "\nseed\t"
        << config.seed << "\nthreshold\t" << config.threshold;
  Output output(config.out, out);
  WriteReport(title.str(), cv.pooled, output.stream());
  output.Close(config.out);
  return kExitOk;
}

int CmdSelectFeatures(const RunConfig &config, std::ostream &out) {
  if (config.method != "ig" && config.method != "wrapper") {
    throw UsageError("--method must be ig or wrapper");
  }
  const FeatureDataset data = LoadTrainingFeatures(config);
  Output output(config.out, out);
  if (config.method == "ig") {
    WriteRanking(RankFeatures(data), output.stream());
  } else {
    const LearnerKind kind = ParseLearnerKind(config.learner);
    const auto learner = MakeLearner(kind, config.train, config.threads);
    const WrapperResult result = WrapperSubsetSelection(
        data, *learner, config.k, config.seed, config.threshold);
    WriteWrapperLog(result, output.stream());
    char accuracy[32];
    std::snprintf(accuracy, sizeof(accuracy), "%.6f", result.best_accuracy);
    output.stream() << "best\t" << result.best.bits() << '\t'
                    << result.best.ToString() << '\t' << accuracy << '\n';
  }
  output.Close(config.out);
  return kExitOk;
}

void AddSharedFlags(CLI::App *cmd, RunConfig &c) {
  cmd->add_option("--freq", c.resources.frequency_table,
                   "Frequency table (word<TAB>count)")
      ->envname("CWI_FREQ");
  cmd->add_option("--wordnet", c.resources.wordnet_dir,
                  "WordNet dict directory")
      ->envname("CWI_WORDNET");
  cmd->add_option("--mrc", c.resources.mrc_file, "MRC2 database file")
      ->envname("CWI_MRC");
  cmd->add_option("--tagger-lexicon", c.resources.tagger_lexicon,
                  "POS lexicon (word<TAB>tag)")
      ->envname("CWI_TAGGER_LEXICON");
  cmd->add_option("--data", c.data, "Instance file");
  cmd->add_option("--model", c.model, "Model file");
  cmd->add_option("--out", c.out, "Output file (default: stdout)");
  cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  cmd->add_option("--threshold", c.threshold, "Probability threshold for complex")
      ->capture_default_str();
  cmd->add_option("--learner", c.learner, "nb, tree or forest")
      ->capture_default_str();
  cmd->add_option("--trees", c.train.num_trees, "Forest size")
      ->capture_default_str();
  cmd->add_option("--mtry", c.train.features_per_split,
                  "Candidate features per split")
      ->capture_default_str();
  cmd->add_option("--min-leaf", c.train.min_leaf_size, "Minimum rows per leaf")
      ->capture_default_str();
  cmd->add_option("--max-depth", c.train.max_depth, "Depth limit, 0 = none")
      ->capture_default_str();
  cmd->add_option("--k", c.k, "Cross-validation folds")->capture_default_str();
  cmd->add_option("--features", c.features,
                  "Comma-separated feature names or 'all'")
      ->capture_default_str();
  cmd->add_option("--method", c.method, "Selection method: ig or wrapper")
      ->capture_default_str();
  cmd->add_option("--threads", c.threads, "Parallel tree training threads")
      ->capture_default_str();
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  RunConfig config;
  CLI::App app{"Complex word identification toolkit", "cwi"};
  app.require_subcommand(1);
  const std::vector<std::pair<const char *, const char *>> subcommands = {
      {"extract", "Write the feature matrix of an instance file"},
      {"train", "Train a model on a labeled instance file"},
      {"predict", "Label an instance file with a trained model"},
      {"cross-validate", "Stratified k-fold evaluation report"},
      {"select-features", "Information-gain ranking or wrapper selection"},
  };
  for (const auto &[name, help] : subcommands) {
    CLI::App *cmd = app.add_subcommand(name, help);
    AddSharedFlags(cmd, config);
    cmd->callback([&config, name = std::string(name)] {
      config.subcommand = name;
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  }

  try {
    if (config.threads < 1) throw UsageError("--threads must be positive");
    if (config.subcommand == "extract") return CmdExtract(config, out, err);
    if (config.subcommand == "train") return CmdTrain(config, out);
    if (config.subcommand == "predict") return CmdPredict(config, out, err);
    if (config.subcommand == "cross-validate") {
      return CmdCrossValidate(config, out);
    }
    return CmdSelectFeatures(config, out);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return IsFlagError(e.code()) ? kExitUsageError : kExitRuntimeError;
  }
}

}  // namespace cwi
