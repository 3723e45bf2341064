#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "hrm/core/types.hpp"

namespace hrm::rules {

// Branch cutoffs of the decision tree.
//   a1: IRP cutoff in mmHg
//   a2: premature / pan-esophageal / hypercontractile fraction threshold
//   a3: weak-or-failed / fragmented fraction threshold
struct RuleParams {
  double a1 = 15.0;
  double a2 = 0.2;
  double a3 = 0.5;

  bool operator==(const RuleParams&) const = default;
};

inline constexpr RuleParams kNominalParams{15.0, 0.2, 0.5};

// Throws ConfigError outside a1 in [5, 30], a2/a3 in (0, 1).
void validate(const RuleParams& params);

struct StudySummary {
  double irp_median = 0.0;  // mmHg
  std::array<double, kSwallowTypeCount> p_type{};
  std::array<double, kPressurizationCount> p_press{};
};

// Fraction comparisons allow this much slack so sums like 0.1 + 0.4 meet a
// threshold of 0.5.
inline constexpr double kFractionSlack = 1e-9;

RawDiagnosis10 classify_rule(const StudySummary& summary, const RuleParams& params);

inline StudyDiagnosis classify_merged(const StudySummary& summary, const RuleParams& params) {
  return merge_to8(classify_rule(summary, params));
}

// Summary from ground-truth swallow labels. Supine swallows only unless
// include_upright is set.
StudySummary ground_truth_summary(const StudyRecord& study, bool include_upright = false);

struct LabeledSummary {
  StudySummary summary;
  StudyDiagnosis label = StudyDiagnosis::NEM;
};

double accuracy(std::span<const LabeledSummary> data, const RuleParams& params);

struct GridRange {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;

  // Inclusive points lo, lo + step, ... <= hi (up to rounding).
  std::vector<double> points() const;
};

struct GridSpec {
  GridRange a1{12.0, 17.0, 0.5};
  GridRange a2{0.1, 0.3, 0.01};
  GridRange a3{0.4, 0.6, 0.01};

  std::size_t size() const;
};

struct GridSearchResult {
  RuleParams best;
  double train_accuracy = 0.0;
  double validation_accuracy = 0.0;
  std::size_t points_visited = 0;
};

// Exhaustive scan maximizing training accuracy; ties resolve to the
// lexicographically smallest (a1, a2, a3). Throws ConfigError on an empty
// grid or empty training data.
GridSearchResult grid_search(std::span<const LabeledSummary> train,
                             std::span<const LabeledSummary> validation, const GridSpec& grid);

}  // namespace hrm::rules
