#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hrm {

inline constexpr std::size_t kChannels = 36;
inline constexpr std::size_t kSamples = 240;   // 24 s at 10 Hz
inline constexpr std::size_t kMatrixSize = kChannels * kSamples;
inline constexpr double kPressureMin = -50.0;
inline constexpr double kPressureMax = 500.0;

// 36 x 240 pressure field in mmHg. Rows are sensor channels ordered
// proximal to distal, columns are 10 Hz samples from swallow onset.
class PressureMatrix {
 public:
  // All-zero matrix.
  PressureMatrix();
  // Validates shape, finiteness and the clinical plausibility bound.
  explicit PressureMatrix(std::vector<float> values);

  float at(std::size_t channel, std::size_t sample) const {
    return values_[channel * kSamples + sample];
  }
  std::span<const float> values() const { return values_; }
  std::span<const float> row(std::size_t channel) const {
    return std::span<const float>(values_).subspan(channel * kSamples, kSamples);
  }

  bool operator==(const PressureMatrix&) const = default;

 private:
  std::vector<float> values_;
};

enum class SwallowType { N = 0, W = 1, F = 2, FR = 3, P = 4, H = 5 };
enum class PressurizationType { NP = 0, CP = 1, PEP = 2 };
enum class StudyDiagnosis { ABC = 0, T1A = 1, T2A = 2, T3A = 3, EGJOO = 4, JES = 5, NEM = 6, IEM = 7 };
// Rule-tree output before the 10 -> 8 merge. Ids 0..7 coincide with StudyDiagnosis.
enum class RawDiagnosis10 { ABC = 0, T1A = 1, T2A = 2, T3A = 3, EGJOO = 4, JES = 5, NEM = 6, IEM = 7, DES = 8, FRP = 9 };
enum class Position { Supine = 0, Upright = 1 };

inline constexpr std::size_t kSwallowTypeCount = 6;
inline constexpr std::size_t kPressurizationCount = 3;
inline constexpr std::size_t kDiagnosisCount = 8;
inline constexpr std::size_t kSupineSwallows = 10;
inline constexpr std::size_t kUprightSwallows = 5;

std::string_view to_string(SwallowType v);
std::string_view to_string(PressurizationType v);
std::string_view to_string(StudyDiagnosis v);
std::string_view to_string(RawDiagnosis10 v);
std::string_view to_string(Position v);

// Parsers throw DataError on unknown labels.
SwallowType parse_swallow_type(std::string_view s);
PressurizationType parse_pressurization(std::string_view s);
StudyDiagnosis parse_diagnosis(std::string_view s);
RawDiagnosis10 parse_raw_diagnosis(std::string_view s);
Position parse_position(std::string_view s);

// Throws DataError when id is out of range.
StudyDiagnosis diagnosis_from_id(int id);

// DES -> T3A, FRP -> IEM, identity otherwise.
StudyDiagnosis merge_to8(RawDiagnosis10 raw);

struct SwallowRecord {
  PressureMatrix matrix;
  Position position = Position::Supine;
  SwallowType type_label = SwallowType::N;
  PressurizationType pressurization_label = PressurizationType::NP;
  double irp_label = 0.0;  // mmHg

  bool operator==(const SwallowRecord&) const = default;
};

struct StudyRecord {
  std::string study_id;
  std::vector<SwallowRecord> swallows;
  StudyDiagnosis diagnosis = StudyDiagnosis::NEM;

  bool operator==(const StudyRecord&) const = default;
};

// Checks the 10 supine + 5 upright layout and per-swallow label sanity.
void validate_study(const StudyRecord& study);

enum class Partition { Train = 0, Validation = 1, Test = 2 };
std::string_view to_string(Partition p);
Partition parse_partition(std::string_view s);

struct DatasetSplit {
  std::vector<std::string> train;
  std::vector<std::string> validation;
  std::vector<std::string> test;

  const std::vector<std::string>& ids(Partition p) const;
  std::optional<Partition> partition_of(std::string_view study_id) const;
  bool operator==(const DatasetSplit&) const = default;
};

}  // namespace hrm
