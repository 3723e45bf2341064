#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hrm/core/types.hpp"

namespace hrm {

using SplitFractions = std::array<double, 3>;
inline constexpr SplitFractions kDefaultFractions{0.70, 0.15, 0.15};

// Largest-remainder apportionment of `count` items to the fractions.
// Remainder ties go to the earlier partition.
std::array<std::size_t, 3> largest_remainder(std::size_t count, const SplitFractions& fractions);

// Per-diagnosis seeded shuffle, then largest-remainder allocation into
// train/validation/test. Throws ConfigError for invalid fractions and
// ClassTooSmall when a present class has fewer than 3 studies.
DatasetSplit stratified_split(std::span<const StudyRecord> studies,
                              const SplitFractions& fractions, std::uint64_t seed);

// Throws ConfigError unless fractions are non-negative and sum to 1.
void validate_fractions(const SplitFractions& fractions);

}  // namespace hrm
