#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "hrm/blend/blending.hpp"
#include "hrm/core/types.hpp"
#include "hrm/features/study_features.hpp"
#include "hrm/gbm/booster.hpp"
#include "hrm/nn/network.hpp"
#include "hrm/rules/rule_model.hpp"

namespace hrm::pipeline {

inline constexpr std::string_view kBundleVersion = "hrmbundle-1";
inline constexpr std::string_view kReportVersion = "hrmdiag-1";

// Everything needed to go from pressure matrices to a diagnosis.
struct Bundle {
  std::optional<nn::Network<float>> type_net;
  std::optional<nn::Network<float>> pressurization_net;
  std::optional<nn::Network<float>> irp_net;
  rules::RuleParams rule = rules::kNominalParams;
  features::FeatureOptions features;
  std::optional<gbm::BoostedModel> gbm;
  std::optional<nn::Network<float>> ann;
  std::optional<blend::BlendSpec> blend;

  // Throws BundleError unless all swallow models and >= 1 study model exist.
  void check_complete() const;
};

// Writes bundle.json plus model files into `dir`; returns written paths.
std::vector<std::filesystem::path> save_bundle(Bundle& bundle, const std::filesystem::path& dir);
// Throws BundleError for missing pieces.
Bundle load_bundle(const std::filesystem::path& dir);

struct SwallowOutput {
  Position position = Position::Supine;
  std::array<double, kSwallowTypeCount> type_probs{};
  std::array<double, kPressurizationCount> press_probs{};
  double irp = 0.0;
};

struct DiagnosisReport {
  std::string study_id;
  std::vector<SwallowOutput> swallows;
  features::FeatureVector features;  // with rule label
  RawDiagnosis10 rule_raw = RawDiagnosis10::NEM;
  StudyDiagnosis rule_label = StudyDiagnosis::NEM;
  std::map<std::string, std::vector<double>> model_probs;  // "xgb", "ann", "rule"
  std::optional<std::vector<double>> blended;
  bool blend_fallback = false;
  std::vector<double> final_probs;
  std::vector<StudyDiagnosis> top2;
};

// Swallow-level inference for one study (matrices and positions only).
features::SwallowPredictions infer_swallows(const nn::Network<float>& type_net,
                                            const nn::Network<float>& pressurization_net,
                                            const nn::Network<float>& irp_net, const StudyRecord& study);
features::SwallowPredictions infer_swallows(const Bundle& bundle, const StudyRecord& study);

// Study-model outputs given features that already carry the rule label.
std::map<std::string, std::vector<double>> study_model_outputs(const Bundle& bundle, const features::FeatureVector& fv);

// Full inference path. Throws BundleError for an incomplete bundle and
// DataError for a malformed study.
DiagnosisReport predict_study(const Bundle& bundle, const StudyRecord& study);

nlohmann::json to_json(const DiagnosisReport& report);
// JSON Schema (draft 2020-12) describing to_json(DiagnosisReport).
nlohmann::json diagnosis_report_schema();

}  // namespace hrm::pipeline
