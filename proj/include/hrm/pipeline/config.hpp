#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "hrm/ann/study_ann.hpp"
#include "hrm/blend/blending.hpp"
#include "hrm/core/split.hpp"
#include "hrm/features/study_features.hpp"
#include "hrm/gbm/booster.hpp"
#include "hrm/nn/trainer.hpp"
#include "hrm/rules/rule_model.hpp"
#include "hrm/synth/generator.hpp"

namespace hrm::pipeline {

inline constexpr std::string_view kConfigVersion = "hrmcfg-1";

struct SynthSection {
  bool enabled = true;
  std::size_t total_studies = 200;
  synth::ClassCounts counts;  // overrides total_studies when non-empty
  double noise_sigma = 2.0;
};

struct RuleSection {
  rules::RuleParams params = rules::kNominalParams;
  bool grid_search = true;
  rules::GridSpec grid;
};

struct GbmSection {
  gbm::GbmConfig config;
  bool sweep = false;
  gbm::SweepSpec selected;  // used when sweep is off
};

struct AnnSection {
  std::vector<ann::AnnConfig> configs;  // one entry disables selection
  nn::TrainConfig train = ann::default_train_config();
};

struct BlendSection {
  std::vector<std::string> members{"xgb", "ann", "rule"};
  blend::PrecisionSource source = blend::PrecisionSource::Training;
  bool laplace = false;
};

struct PipelineConfig {
  std::filesystem::path dataset_dir;
  std::filesystem::path output_dir;
  std::uint64_t seed = 7;
  SynthSection synth;
  SplitFractions fractions = kDefaultFractions;
  nn::TrainConfig type_net;
  nn::TrainConfig pressurization_net;
  nn::TrainConfig irp_net;
  RuleSection rule;
  features::FeatureOptions features;
  GbmSection gbm;
  AnnSection ann;
  BlendSection blend;

  // Throws ConfigError on any inconsistency.
  void validate() const;
};

// Defaults used when a section or key is absent.
nn::TrainConfig default_swallow_train_config(nn::LossKind loss);

// Unknown keys and a wrong version are ConfigErrors. Relative paths resolve
// against `base_dir`.
PipelineConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
PipelineConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const PipelineConfig& config);

}  // namespace hrm::pipeline
