#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace hrm::blend {

inline constexpr std::string_view kBlendVersion = "hrmblend-1";

using Rows = std::vector<std::vector<double>>;
// PS[j][k]: precision of model j when it predicts class k.
using PrecisionMatrix = std::vector<std::vector<double>>;

enum class OutputKind { SoftProbability, SingleIndex };
enum class PrecisionSource { Training, Validation };
std::string_view to_string(OutputKind k);
std::string_view to_string(PrecisionSource s);
OutputKind parse_output_kind(std::string_view s);
PrecisionSource parse_precision_source(std::string_view s);

// predictions[j][i] is model j's label for row i. TP/(TP+FP), 0 when a class
// is never predicted; with `laplace` (TP+1)/(TP+FP+K).
PrecisionMatrix precision_scores(const std::vector<std::vector<std::size_t>>& predictions,
                                 std::span<const std::size_t> truth, std::size_t classes, bool laplace = false);

std::vector<double> one_hot(std::size_t label, std::size_t classes);

struct Blended {
  std::vector<double> probs;
  bool uniform_fallback = false;  // every weighted entry was zero
};

// B[k] = C * sum_j PS[j][k] * M_j[k], normalized to sum 1.
Blended blend(std::span<const std::vector<double>> members, const PrecisionMatrix& ps);

struct BlendSpec {
  std::vector<std::string> members;
  OutputKind output_kind = OutputKind::SoftProbability;
  PrecisionSource source = PrecisionSource::Training;
  bool laplace = false;
  PrecisionMatrix precision;

  bool operator==(const BlendSpec&) const = default;
};

nlohmann::json to_json(const BlendSpec& spec);
BlendSpec blend_spec_from_json(const nlohmann::json& j);

// Converts member outputs to the spec's output kind and blends row by row.
// member_rows[j] holds member j's soft rows (one-hot for single-index models).
Rows apply_blend(const BlendSpec& spec, const std::vector<const Rows*>& member_rows,
                 std::vector<bool>* fallback_flags = nullptr);

// A pre-trained sub-model's outputs on the training and validation studies.
struct MemberOutputs {
  std::string name;
  bool single_index = false;  // native output is a label, stored one-hot
  Rows train;
  Rows valid;
};

struct SweepRow {
  std::string name;
  OutputKind kind = OutputKind::SoftProbability;
  double train_top1 = 0.0;
  double valid_top1 = 0.0;
  double valid_top2 = 0.0;
  BlendSpec spec;  // empty precision for single-model rows
};

// Rows for every single member in its native kind plus every combination
// under both output kinds, ranked by validation top-2, then top-1.
std::vector<SweepRow> blend_sweep(std::span<const MemberOutputs> members,
                                  const std::vector<std::vector<std::size_t>>& combinations,
                                  std::span<const std::size_t> train_truth, std::span<const std::size_t> valid_truth,
                                  PrecisionSource source = PrecisionSource::Training, bool laplace = false);

// All multi-member subsets of {0..n-1} in size-then-lexicographic order.
std::vector<std::vector<std::size_t>> default_combinations(std::size_t members);

}  // namespace hrm::blend
