#pragma once

#include <span>
#include <string>
#include <vector>

#include "hrm/gbm/booster.hpp"
#include "hrm/nn/network.hpp"
#include "hrm/nn/trainer.hpp"

namespace hrm::ann {

struct AnnConfig {
  std::string name = "ANN-1";
  std::size_t layers = 6;    // dense layers including the output
  std::size_t width_k = 1;
  std::size_t features = 14;
  bool class_weights = false;

  // Throws ConfigError.
  void validate() const;
};

// Flatten(Nx) -> 2 x Dense(50K) -> (layers - 3) x Dense(25K) -> Dense(8, softmax).
nn::NetworkSpec build_study_ann(const AnnConfig& config);
// Closed-form trainable parameter count of build_study_ann(config).
std::size_t parameter_count(const AnnConfig& config);

// ANN-1 .. ANN-10; ANN-5 and ANN-10 use class weights.
std::vector<AnnConfig> reference_configs();

// lr 1e-3, batch 32, patience 20, restarts 2.
nn::TrainConfig default_train_config();

nn::Tensor<float> to_tensor(const gbm::Rows& rows, std::size_t features);

// Features with a training standard deviation below this are left unscaled.
inline constexpr double kMinFeatureStd = 1e-9;
// Stores per-feature mean and population standard deviation of `rows` in the
// network input stage.
void standardize_inputs(nn::NetworkSpec& spec, const gbm::Rows& rows);

gbm::Rows predict_soft(const nn::Network<float>& net, const gbm::Rows& rows);

struct AnnTrained {
  AnnConfig config;
  nn::Network<float> net;
  nn::TrainHistory history;
  double train_accuracy = 0.0;
  double valid_accuracy = 0.0;
  std::size_t parameters = 0;
};

AnnTrained train_study_ann(const AnnConfig& config, const gbm::StudyTable& train, const gbm::StudyTable& valid,
                           const nn::TrainConfig& train_config);

// Trains each config; entries keep input order. The winner has the best
// validation accuracy, ties to fewer parameters, then the earlier config.
std::vector<AnnTrained> selection_sweep(const gbm::StudyTable& train, const gbm::StudyTable& valid,
                                        std::span<const AnnConfig> configs, const nn::TrainConfig& train_config,
                                        std::size_t* winner = nullptr);

}  // namespace hrm::ann
