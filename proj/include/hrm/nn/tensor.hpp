#pragma once

#include <cstddef>
#include <new>
#include <span>
#include <string>
#include <vector>

namespace hrm::nn {

// Per-example shape: (h, w, c) for feature maps or (d) for vectors.
using Shape = std::vector<std::size_t>;

std::size_t element_count(const Shape& shape);
std::string shape_string(const Shape& shape);

// Storage with a fixed 64-byte alignment. Vectorized kernels choose their
// scalar peeling from the data address, so a fixed alignment keeps the
// summation order, and therefore every result bit, independent of where the
// heap placed a buffer.
template <typename T>
struct AlignedAllocator {
  using value_type = T;
  static constexpr std::align_val_t kAlignment{64};

  AlignedAllocator() = default;
  template <typename U>
  AlignedAllocator(const AlignedAllocator<U>&) noexcept {}

  T* allocate(std::size_t n) { return static_cast<T*>(::operator new(n * sizeof(T), kAlignment)); }
  void deallocate(T* p, std::size_t) noexcept { ::operator delete(p, kAlignment); }

  template <typename U>
  bool operator==(const AlignedAllocator<U>&) const noexcept {
    return true;
  }
};

template <typename T>
using AlignedVector = std::vector<T, AlignedAllocator<T>>;

// Dense batch-major tensor. shape()[0] is the batch dimension.
template <typename T>
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t batch, const Shape& example_shape, T fill = T(0));
  // Throws GeometryError when data.size() does not match the shape.
  Tensor(std::size_t batch, const Shape& example_shape, std::vector<T> data);

  std::size_t batch() const { return batch_; }
  const Shape& example_shape() const { return example_shape_; }
  std::size_t example_size() const { return example_size_; }
  std::size_t size() const { return data_.size(); }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::span<T> values() { return data_; }
  std::span<const T> values() const { return data_; }
  std::span<T> example(std::size_t n) { return values().subspan(n * example_size_, example_size_); }
  std::span<const T> example(std::size_t n) const {
    return values().subspan(n * example_size_, example_size_);
  }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  // Same data, different per-example shape of equal element count.
  Tensor reshaped(const Shape& example_shape) const&;
  Tensor reshaped(const Shape& example_shape) &&;

  bool all_finite() const;

 private:
  std::size_t batch_ = 0;
  Shape example_shape_;
  std::size_t example_size_ = 0;
  AlignedVector<T> data_;
};

}  // namespace hrm::nn
