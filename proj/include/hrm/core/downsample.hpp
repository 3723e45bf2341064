#pragma once

#include <cstddef>
#include <span>

#include "hrm/core/types.hpp"

namespace hrm {

inline constexpr std::size_t kRawRateHz = 100;
inline constexpr std::size_t kDecimation = 10;
inline constexpr std::size_t kRawWindow = kSamples * kDecimation;  // 2400 samples = 24 s

// Raw recording at 100 Hz, row-major channels x samples.
struct RawRecording {
  std::size_t channels = 0;
  std::size_t samples = 0;
  std::span<const float> values;
};

// Block-mean decimation of the 24 s window starting at onset_index.
// Throws ChannelMismatch when channels != 36 and InsufficientWindow when fewer
// than 2400 samples follow the onset.
PressureMatrix downsample(const RawRecording& raw, std::size_t onset_index);

}  // namespace hrm
