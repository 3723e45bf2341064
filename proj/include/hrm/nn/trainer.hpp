#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hrm/error.hpp"
#include "hrm/nn/network.hpp"

namespace hrm::nn {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

enum class LossKind { CrossEntropy, WeightedIrp };

struct TrainConfig {
  AdamConfig adam;
  std::size_t batch_size = 32;
  std::size_t max_epochs = 50;  // total over all runs
  std::size_t patience = 10;
  std::size_t restarts = 2;
  LossKind loss = LossKind::CrossEntropy;
  double lambda = 5.0;
  double y_o = 15.0;
  std::uint64_t seed = 0;
  // Per-class loss weights for cross-entropy; empty means unweighted.
  std::vector<double> class_weights;

  // Throws ConfigError.
  void validate() const;
};

// Labelled examples: `labels` for classifiers, `targets` for regression.
struct Examples {
  Tensor<float> x;
  std::vector<std::size_t> labels;
  std::vector<double> targets;

  std::size_t size() const { return x.batch(); }
  Examples subset(std::span<const std::size_t> rows) const;
};

struct EpochRecord {
  std::size_t epoch = 0;  // 1-based, counted across runs
  std::size_t run = 0;    // 0 is the fresh run
  double train_loss = 0.0;
  double valid_loss = 0.0;
  double metric = 0.0;  // accuracy (classify) or MAE (regress)
  bool checkpoint = false;

  bool operator==(const EpochRecord&) const = default;
};

struct TrainHistory {
  std::vector<EpochRecord> epochs;
  double best_metric = 0.0;
  std::size_t best_epoch = 0;
};

class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, Network<float>::Snapshot checkpoint, TrainHistory history)
      : Error(ErrorCategory::Training, "DivergenceError: " + what),
        checkpoint_(std::move(checkpoint)),
        history_(std::move(history)) {}
  const Network<float>::Snapshot& checkpoint() const { return checkpoint_; }
  const TrainHistory& history() const { return history_; }

 private:
  Network<float>::Snapshot checkpoint_;
  TrainHistory history_;
};

class Adam {
 public:
  explicit Adam(AdamConfig cfg) : cfg_(cfg) {}
  void step(std::vector<ParamRef<float>>& params);
  void reset();

 private:
  AdamConfig cfg_;
  std::vector<std::vector<float>> m_, v_;
  std::size_t t_ = 0;
};

using EpochCallback = std::function<void(const EpochRecord&)>;

// Mini-batch training with best-validation checkpointing and restarts.
// On return `net` holds the best checkpoint.
TrainHistory train(Network<float>& net, const Examples& train_set, const Examples& valid_set,
                   const TrainConfig& config, const EpochCallback& on_epoch = {});

// Class probabilities, one row per example.
Tensor<float> predict_soft(const Network<float>& net, const Tensor<float>& x, std::size_t batch = 128);
// Regression outputs clamped at zero.
std::vector<double> predict_irp(const Network<float>& net, const Tensor<float>& x, std::size_t batch = 128);

// Inverse class frequency normalized to a mean weight of 1 over samples.
std::vector<double> balanced_class_weights(std::span<const std::size_t> labels, std::size_t classes);

double accuracy(const Tensor<float>& probs, std::span<const std::size_t> labels);
double mean_absolute_error(std::span<const double> preds, std::span<const double> targets);

}  // namespace hrm::nn
