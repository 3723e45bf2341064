#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hrm/nn/tensor.hpp"

namespace hrm::nn {

inline constexpr double kProbabilityFloor = 1e-12;

struct LossValue {
  double loss = 0.0;
  double grad = 0.0;  // d(loss)/d(prediction)
};

// -log p(label), p clamped below at kProbabilityFloor.
double cross_entropy(std::span<const double> probs, std::size_t label);

// Weighted squared error for IRP regression. The weight depends on the
// target only and peaks at 1 when target == y_o.
double irp_weight(double target, double lambda, double y_o);
LossValue irp_loss(double pred, double target, double lambda, double y_o);

template <typename T>
struct BatchLoss {
  double loss = 0.0;  // mean over the batch
  Tensor<T> grad;     // w.r.t. logits (classification) or predictions (regression)
};

// Softmax cross-entropy over rows of `probs`; gradient (p - onehot) * w / n is
// taken w.r.t. the logits. Empty `weights` means all ones.
template <typename T>
BatchLoss<T> cross_entropy_batch(const Tensor<T>& probs, std::span<const std::size_t> labels,
                                 std::span<const double> weights = {});

template <typename T>
BatchLoss<T> irp_loss_batch(const Tensor<T>& preds, std::span<const double> targets, double lambda,
                            double y_o);

}  // namespace hrm::nn
