#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hrm/nn/layers.hpp"

namespace hrm::nn {

enum class Head { Classify, Regress };

// Architecture description: ordered layers plus input geometry.
struct NetworkSpec {
  std::string name;
  Shape input_shape;
  std::vector<LayerSpec> layers;
  Head head = Head::Classify;
  // Inputs are multiplied by this before the first layer (mmHg -> O(1)).
  double input_scale = 1.0;
  // Optional per-element standardization (x - mean) / std applied before
  // input_scale; empty means none.
  std::vector<double> input_mean;
  std::vector<double> input_std;

  // Per-layer output shapes, one entry per layer. Throws GeometryError.
  std::vector<Shape> trace() const;
  // Summary trace: input shape first, a batchnorm folded into the
  // preceding convolution row.
  std::vector<Shape> table_trace() const;
  std::size_t output_size() const;

  bool operator==(const NetworkSpec&) const = default;
};

template <typename T>
class Network {
 public:
  using Snapshot = std::vector<std::vector<T>>;

  // Layers built with zero weights; call initialize() before training.
  explicit Network(NetworkSpec spec);
  Network(NetworkSpec spec, std::uint64_t seed);

  Network(const Network& other);
  Network& operator=(const Network& other);
  Network(Network&&) noexcept = default;
  Network& operator=(Network&&) noexcept = default;

  const NetworkSpec& spec() const { return spec_; }
  std::size_t layer_count() const { return layers_.size(); }
  Layer<T>& layer(std::size_t i) { return *layers_[i]; }

  void initialize(std::uint64_t seed);

  // Inference mode. Throws GeometryError on an input shape mismatch.
  Tensor<T> infer(const Tensor<T>& x) const;
  // Training mode with caches for backward().
  Tensor<T> forward(const Tensor<T>& x);
  // Backpropagates d(loss)/d(output). With from_logits the gradient is taken
  // w.r.t. the final pre-activation (fused softmax cross-entropy).
  void backward(const Tensor<T>& grad, bool from_logits);

  void zero_grad();
  std::vector<ParamRef<T>> parameters();
  std::vector<StateRef<T>> states();
  std::size_t parameter_count();

  // Parameters followed by state, in a fixed order.
  Snapshot snapshot();
  void restore(const Snapshot& snap);

 private:
  void build();
  Tensor<T> scaled(const Tensor<T>& x) const;

  NetworkSpec spec_;
  std::vector<std::unique_ptr<Layer<T>>> layers_;
};

}  // namespace hrm::nn
