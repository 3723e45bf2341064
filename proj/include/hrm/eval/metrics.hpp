#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hrm::eval {

// counts[truth][prediction]
struct ConfusionMatrix {
  std::size_t classes = 0;
  std::vector<std::vector<std::size_t>> counts;

  std::size_t total() const;
  std::size_t support(std::size_t truth) const;
  std::size_t predicted(std::size_t pred) const;
  double accuracy() const;
};

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

// Throws DataError on length mismatch or a label outside [0, K).
ConfusionMatrix confusion_matrix(std::span<const std::size_t> preds, std::span<const std::size_t> truth,
                                 std::size_t classes);
// 0/0 is reported as 0.
std::vector<ClassScores> prf1(const ConfusionMatrix& cm);

// Indices of the k largest entries, descending; equal values by ascending index.
std::vector<std::size_t> top_k_labels(std::span<const double> probs, std::size_t k);
std::size_t argmax(std::span<const double> probs);

// Rows are flattened with `classes` entries each. k > classes -> ConfigError.
double top_k_accuracy(std::span<const double> probs, std::size_t classes, std::span<const std::size_t> truth,
                      std::size_t k);
double accuracy(std::span<const std::size_t> preds, std::span<const std::size_t> truth);
double mae(std::span<const double> preds, std::span<const double> truth);

}  // namespace hrm::eval
