#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "hrm/core/dataset_io.hpp"
#include "hrm/eval/report.hpp"
#include "hrm/gbm/booster.hpp"
#include "hrm/nn/trainer.hpp"
#include "hrm/pipeline/bundle.hpp"
#include "hrm/pipeline/config.hpp"

namespace hrm::pipeline {

inline constexpr std::string_view kRunVersion = "hrmrun-1";

enum class SwallowTask { Type, Pressurization, Irp };
std::string_view to_string(SwallowTask t);
SwallowTask parse_swallow_task(std::string_view s);

// All swallows of the given studies as network inputs with the task's labels.
nn::Examples swallow_examples(std::span<const StudyRecord* const> studies, SwallowTask task);

// Builds, initializes and trains the task's network. The IRP output bias
// starts at the mean training target.
nn::Network<float> train_swallow_model(SwallowTask task, const nn::Examples& train, const nn::Examples& valid,
                                       const nn::TrainConfig& config, nn::TrainHistory* history = nullptr,
                                       const nn::EpochCallback& on_epoch = {});

// Rule-tree input computed from predicted swallow outputs.
std::vector<rules::LabeledSummary> predicted_summaries(std::span<const features::SwallowPredictions> preds,
                                                       std::span<const StudyRecord* const> studies,
                                                       const features::FeatureOptions& options);

// Study table (14 columns, rule label last) from predicted swallow outputs.
gbm::StudyTable study_table(std::span<const features::SwallowPredictions> preds,
                            std::span<const StudyRecord* const> studies, const rules::RuleParams& rule,
                            const features::FeatureOptions& options);

// Feature CSV with study_id and label columns; the last column is the rule label.
std::string feature_csv(const gbm::StudyTable& table, std::span<const std::string> study_ids);
struct FeatureCsv {
  std::vector<std::string> study_ids;
  gbm::StudyTable table;
};
// Throws FormatError on malformed text.
FeatureCsv parse_feature_csv(const std::string& text);

// Soft outputs of one study-level model over a table.
gbm::Rows gbm_outputs(const gbm::BoostedModel& model, const gbm::StudyTable& table);
gbm::Rows ann_outputs(const nn::Network<float>& net, const gbm::StudyTable& table);
gbm::Rows rule_outputs(const gbm::StudyTable& table);

std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_file(const std::filesystem::path& path);

struct StageRecord {
  std::string name;
  std::string status;  // "ok" or "failed"
};

struct ArtifactRecord {
  std::string path;  // relative to the output directory
  std::string sha256;
  std::uintmax_t bytes = 0;
};

struct RunManifest {
  std::uint64_t seed = 0;
  std::string config_sha256;
  std::vector<StageRecord> stages;
  std::vector<ArtifactRecord> artifacts;
  std::optional<std::string> failed_stage;
  std::optional<std::string> error;
};

nlohmann::json to_json(const RunManifest& m);

// Stage runner over one output directory. Each stage reads its inputs from
// disk (or from this object's cache) and writes its artifacts once.
//
//   <out>/dataset/            synthesized or imported dataset with split
//   <out>/models/             swallow nets, rule.json, gbm.json, ann.hrmnet, blend.json
//   <out>/features/           {train,validation,test}.csv
//   <out>/reports/            metrics.json/.csv, confusion SVGs, sweep tables
//   <out>/bundle/             self-contained inference bundle
//   <out>/manifest.json       artifact hashes and stage status
//   <out>/timings.json        wall-clock seconds per stage
class Workspace {
 public:
  explicit Workspace(PipelineConfig config, std::ostream* log = nullptr);

  const PipelineConfig& config() const { return config_; }
  std::filesystem::path dataset_dir() const;
  std::filesystem::path models_dir() const { return config_.output_dir / "models"; }
  std::filesystem::path features_dir() const { return config_.output_dir / "features"; }
  std::filesystem::path reports_dir() const { return config_.output_dir / "reports"; }
  std::filesystem::path bundle_dir() const { return config_.output_dir / "bundle"; }

  void synth();
  void split();
  void train_swallow(SwallowTask task);
  void rule();
  void build_features();
  void train_gbm();
  void train_ann();
  // Sweeps members and combinations and keeps the top-ranked row. With a
  // fixed kind, blends exactly the configured members under that kind.
  void blend(std::optional<blend::OutputKind> fixed_kind = std::nullopt);
  void evaluate();
  void bundle();

  // All stages in dependency order. Writes manifest.json even on failure and
  // rethrows the stage error.
  RunManifest run();

  const Dataset& dataset();
  const std::vector<features::SwallowPredictions>& predictions(Partition p);
  rules::RuleParams rule_params();
  FeatureCsv features(Partition p);
  // Swallow entries always; study entries once the feature tables exist.
  eval::MetricsReport metrics();

 private:
  void log(const std::string& line);
  nn::Network<float>& swallow_net(SwallowTask task);
  std::vector<const StudyRecord*> studies(Partition p);

  PipelineConfig config_;
  std::ostream* log_ = nullptr;
  std::optional<Dataset> dataset_;
  std::map<SwallowTask, nn::Network<float>> nets_;
  std::map<Partition, std::vector<features::SwallowPredictions>> preds_;
};

// Hashes every file under `dir` except manifest.json and timings.json.
std::vector<ArtifactRecord> hash_artifacts(const std::filesystem::path& dir);

}  // namespace hrm::pipeline
