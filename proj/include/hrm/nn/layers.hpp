#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hrm/core/random.hpp"
#include "hrm/error.hpp"
#include "hrm/nn/tensor.hpp"

namespace hrm::nn {

enum class LayerKind { Conv2D, BatchNorm, MaxPool, GlobalAvgPool, Dense, Flatten };
enum class Activation { Linear, Relu, Softmax };

std::string_view to_string(LayerKind k);
std::string_view to_string(Activation a);
LayerKind parse_layer_kind(std::string_view s);
Activation parse_activation(std::string_view s);

// Declarative layer description. `kernel` doubles as the pooling window.
struct LayerSpec {
  LayerKind kind = LayerKind::Dense;
  std::array<std::size_t, 2> kernel{1, 1};
  std::array<std::size_t, 2> stride{1, 1};
  std::size_t units = 0;  // conv filters or dense width
  Activation activation = Activation::Linear;

  static LayerSpec conv2d(std::size_t filters, std::array<std::size_t, 2> kernel,
                          std::array<std::size_t, 2> stride);
  static LayerSpec batchnorm(Activation act = Activation::Relu);
  static LayerSpec maxpool(std::array<std::size_t, 2> window, std::array<std::size_t, 2> stride);
  static LayerSpec global_avg_pool();
  static LayerSpec dense(std::size_t units, Activation act);
  static LayerSpec flatten();

  bool operator==(const LayerSpec&) const = default;
};

// Trainable parameter block with its gradient accumulator.
template <typename T>
struct ParamRef {
  std::string name;
  std::span<T> values;
  std::span<T> grads;
};

// Non-trainable persistent state (batchnorm running statistics).
template <typename T>
struct StateRef {
  std::string name;
  std::span<T> values;
};

// Numerical blow-up inside a layer.
class NonFiniteError : public Error {
 public:
  explicit NonFiniteError(const std::string& what)
      : Error(ErrorCategory::Training, "NonFiniteError: " + what) {}
};

template <typename T>
class Layer {
 public:
  Layer(LayerSpec spec, Shape input_shape) : spec_(spec), input_shape_(std::move(input_shape)) {}
  virtual ~Layer() = default;

  const LayerSpec& spec() const { return spec_; }
  const Shape& input_shape() const { return input_shape_; }
  const Shape& output_shape() const { return output_shape_; }

  // Inference-mode forward pass; does not touch caches.
  virtual Tensor<T> infer(const Tensor<T>& x) const = 0;
  // Training-mode forward pass; caches what backward needs.
  virtual Tensor<T> forward(const Tensor<T>& x) = 0;
  // Accumulates parameter gradients and returns d(loss)/d(input). With
  // skip_activation the incoming gradient is taken w.r.t. the pre-activation.
  virtual Tensor<T> backward(const Tensor<T>& grad_out, bool skip_activation = false) = 0;

  virtual std::vector<ParamRef<T>> params() { return {}; }
  virtual std::vector<StateRef<T>> state() { return {}; }
  virtual void initialize(Rng& /*rng*/) {}

  // The first layer never needs an input gradient.
  void set_needs_input_grad(bool v) { needs_input_grad_ = v; }

  std::size_t parameter_count();

 protected:
  LayerSpec spec_;
  Shape input_shape_;
  Shape output_shape_;
  bool needs_input_grad_ = true;
};

// Builds a layer for a given per-example input shape. Throws GeometryError
// when the geometry is invalid (e.g. kernel larger than input).
template <typename T>
std::unique_ptr<Layer<T>> make_layer(const LayerSpec& spec, const Shape& input_shape);

// Activation helpers shared by layers and tests. `values` holds rows of
// `width` entries; softmax normalizes each row.
template <typename T>
void apply_activation(Activation act, std::span<T> values, std::size_t width);
template <typename T>
void activation_backward(Activation act, std::span<const T> activated, std::span<T> grad,
                         std::size_t width);

}  // namespace hrm::nn
