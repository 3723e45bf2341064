#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hrm/core/types.hpp"
#include "hrm/rules/rule_model.hpp"

namespace hrm::features {

inline constexpr double kIrpNormalizer = 15.0;
inline constexpr std::size_t kOriginalFeatureCount = 13;
inline constexpr std::size_t kAugmentedFeatureCount = 14;

enum class Counting { Hard, Soft };

struct FeatureOptions {
  Counting counting = Counting::Hard;
  bool include_upright = false;
};

// Swallow-level model outputs for one study, one entry per swallow.
struct SwallowPredictions {
  std::vector<std::array<double, kSwallowTypeCount>> type_probs;
  std::vector<std::array<double, kPressurizationCount>> press_probs;
  std::vector<double> irp;  // mmHg
  std::vector<Position> positions;

  std::size_t size() const { return irp.size(); }
};

// One-hot "predictions" from the stored labels.
SwallowPredictions from_ground_truth(const StudyRecord& study);

struct FeatureVector {
  double irp_max_n = 0.0;
  double irp_min_n = 0.0;
  double irp_median_n = 0.0;
  double irp_mean_n = 0.0;
  std::array<double, kPressurizationCount> press_prob{};
  std::array<double, kSwallowTypeCount> type_prob{};
  std::optional<StudyDiagnosis> rule_label;

  // 13 values, or 14 with the rule label appended as its integer id.
  std::vector<double> values() const;
  std::size_t size() const { return rule_label ? kAugmentedFeatureCount : kOriginalFeatureCount; }
};

// Column names in values() order.
const std::array<std::string, kAugmentedFeatureCount>& column_names();

// Throws EmptyStudy when no swallow survives the position filter and
// DataError for length mismatches.
FeatureVector aggregate(const SwallowPredictions& preds, const FeatureOptions& options = {});

// Rule-tree summary in raw mmHg, consistent with aggregate().
rules::StudySummary summarize(const SwallowPredictions& preds, const FeatureOptions& options = {});

FeatureVector augment(FeatureVector fv, StudyDiagnosis rule_label);

// Feature matrix as CSV: optional study_id and label columns, then features.
std::string to_csv(std::span<const FeatureVector> rows, std::span<const std::string> study_ids,
                   std::span<const StudyDiagnosis> labels);

}  // namespace hrm::features
