#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace hrm::gbm {

inline constexpr std::string_view kGbmVersion = "hrmgbm-1";

using Rows = std::vector<std::vector<double>>;

enum class BaseLearner { None, Rule };
std::string_view to_string(BaseLearner b);
BaseLearner parse_base_learner(std::string_view s);

struct GbmConfig {
  std::size_t max_depth = 4;
  double eta = 0.3;
  std::size_t max_rounds = 200;
  std::size_t early_stop_patience = 10;
  double reg_lambda = 1.0;
  double gamma = 0.0;
  double min_child_weight = 1.0;
  double base_margin_scale = 1.0;

  // Throws ConfigError.
  void validate() const;
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double weight = 0.0;  // leaf value before shrinkage

  bool is_leaf() const { return feature < 0; }
  bool operator==(const TreeNode&) const = default;
};

// Rows with x[feature] < threshold go left.
struct RegressionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  double predict(std::span<const double> row) const;
  std::size_t depth() const;
  bool operator==(const RegressionTree&) const = default;
};

struct BoostedModel {
  std::size_t classes = 8;
  std::size_t feature_count = 0;
  BaseLearner base = BaseLearner::None;
  double eta = 0.3;
  double base_margin_scale = 1.0;
  std::vector<std::vector<RegressionTree>> rounds;  // [round][class]

  std::size_t node_count() const;
  bool operator==(const BoostedModel&) const = default;
};

// Row i = B * onehot(labels[i]).
Rows encode_base_margins(std::span<const std::size_t> labels, std::size_t classes, double scale);

struct EvalSet {
  const Rows* features = nullptr;
  std::span<const std::size_t> labels;
  const Rows* base_margins = nullptr;  // required when the model has a base learner
};

struct FitReport {
  std::vector<double> valid_loss;  // index 0 is before any tree
  std::size_t best_round = 0;      // number of rounds kept
};

// Softmax boosting with K trees per round and second-order leaf weights.
// Early stopping applies when `valid` is given; the best-round model is kept.
BoostedModel fit(const Rows& features, std::span<const std::size_t> labels, const Rows* base_margins,
                 const GbmConfig& config, const std::optional<EvalSet>& valid = std::nullopt,
                 FitReport* report = nullptr, std::size_t classes = 8);

// One tree on given gradients and hessians (exposed for the split oracle tests).
RegressionTree build_tree(const Rows& features, std::span<const double> grad, std::span<const double> hess,
                          const GbmConfig& config);

// Margins before softmax. Throws SchemaError on a feature-count mismatch and
// ConfigError when base margins are required but missing.
Rows predict_margin(const BoostedModel& model, const Rows& features, const Rows* base_margins = nullptr);
Rows predict_soft(const BoostedModel& model, const Rows& features, const Rows* base_margins = nullptr);
std::vector<std::vector<std::size_t>> predict_top(const BoostedModel& model, const Rows& features, std::size_t k,
                                                  const Rows* base_margins = nullptr);

std::vector<double> softmax(std::span<const double> margins);
double mean_cross_entropy(const Rows& probs, std::span<const std::size_t> labels);

nlohmann::json to_json(const BoostedModel& model);
BoostedModel boosted_model_from_json(const nlohmann::json& j);
void save_model(const BoostedModel& model, const std::string& path);
BoostedModel load_model(const std::string& path);

// Selection sweep: depth 3/4/5 x base none/rule x 14/13 features.
struct SweepEntry {
  std::string name;  // xgb-1 .. xgb-12
  std::size_t depth = 0;
  BaseLearner base = BaseLearner::None;
  std::size_t features = 14;
  double train_accuracy = 0.0;
  double valid_accuracy = 0.0;
  std::size_t parameters = 0;
  BoostedModel model;
};

struct StudyTable {
  Rows features;                         // 14 columns, the last being the rule label
  std::vector<std::size_t> labels;       // 8-class truth
  std::vector<std::size_t> rule_labels;  // 8-class rule output
};

// Keeps the first `count` columns of each row.
Rows take_columns(const Rows& rows, std::size_t count);

struct SweepSpec {
  std::size_t depth = 4;
  BaseLearner base = BaseLearner::Rule;
  std::size_t features = 14;
};
std::vector<SweepSpec> default_sweep();

// Trains every spec; returns entries in input order and the index of the
// winner (validation accuracy, ties to fewer parameters, then earlier entry).
std::vector<SweepEntry> selection_sweep(const StudyTable& train, const StudyTable& valid,
                                        std::span<const SweepSpec> specs, const GbmConfig& base_config,
                                        std::size_t* winner = nullptr);

}  // namespace hrm::gbm
