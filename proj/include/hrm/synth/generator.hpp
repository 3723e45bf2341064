#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hrm/core/random.hpp"
#include "hrm/core/types.hpp"

namespace hrm::synth {

// Channel layout of the generated field.
inline constexpr std::size_t kUesLast = 2;        // channels 0-2: upper sphincter
inline constexpr std::size_t kBodyFirst = 4;      // PEP elevation span 4..30
inline constexpr std::size_t kBodyLast = 30;
inline constexpr std::size_t kEgjFirst = 31;      // EGJ band 31..34
inline constexpr std::size_t kEgjLast = 34;
inline constexpr std::size_t kRelaxBegin = 10;    // EGJ trough columns [10, 90)
inline constexpr std::size_t kRelaxEnd = 90;
inline constexpr std::size_t kIrpWindow = 100;    // 10 s post-onset
inline constexpr std::size_t kIrpLowest = 40;     // 4 s worth of columns

// Type modifiers applied to the nominal wave.
inline constexpr double kWeakScale = 0.3;
inline constexpr double kFailedScale = 0.03;
inline constexpr double kHyperScale = 2.5;
inline constexpr double kPrematureTransitScale = 0.35;
inline constexpr double kUprightEgjOffset = -5.0;

struct SwallowGenParams {
  double body_amplitude = 100.0;    // mmHg, nominal peak of the contraction ridge
  int wave_onset_channel = 4;
  int wave_end_channel = 30;
  double wave_start = 1.0;          // s after onset the ridge leaves the onset channel
  double transit_time = 7.0;        // s from onset channel to end channel
  int break_span = 5;               // channels zeroed in a fragmented wave
  double egj_rest = 30.0;           // mmHg
  double pressurization_level = 40.0;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
  Position position = Position::Supine;
};

// Draws randomized nominal parameters (used by study generation).
SwallowGenParams sample_swallow_params(Rng& rng, double noise_sigma);

// Renders one labeled swallow. Out-of-range parameters are clamped and a note
// is appended to `warnings` when provided.
SwallowRecord synth_swallow(SwallowType type, PressurizationType pressurization, double irp_target,
                            const SwallowGenParams& params,
                            std::vector<std::string>* warnings = nullptr);

// Surrogate IRP: mean of the 40 lowest columns of the EGJ band average over
// the first 10 s, clamped at 0.
double oracle_irp(const PressureMatrix& matrix);

struct StudyGenSpec {
  StudyDiagnosis diagnosis = StudyDiagnosis::NEM;
  std::uint64_t seed = 0;
  double noise_sigma = 0.0;
};

StudyRecord synth_study(const StudyGenSpec& spec);

using ClassCounts = std::map<StudyDiagnosis, std::size_t>;

// Reference training-set class counts used for the default profile.
inline constexpr std::array<std::size_t, 8> kReferenceTrainCounts{55, 47, 93, 64, 207, 27, 565, 165};

// Reference proportions scaled to `total` studies by largest remainder.
ClassCounts default_profile(std::size_t total = 200);

// Studies are emitted class by class with ids "S0000", "S0001", ...
std::vector<StudyRecord> synth_dataset(const ClassCounts& counts, std::uint64_t seed,
                                       double noise_sigma);

}  // namespace hrm::synth
