#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hrm/core/types.hpp"

namespace hrm {

inline constexpr std::string_view kDatasetVersion = "hrmds-1";
inline constexpr std::size_t kBlobBytes = kMatrixSize * sizeof(float);  // 34,560

struct Dataset {
  std::vector<StudyRecord> studies;
  std::optional<DatasetSplit> split;  // absent until `split` has run

  const StudyRecord& study(std::string_view id) const;
  std::vector<const StudyRecord*> partition(Partition p) const;
};

// Writes `manifest.json` plus one raw little-endian float32 blob per swallow
// under `directory/swallows/`. Returns the manifest path.
std::filesystem::path save_dataset(std::span<const StudyRecord> studies,
                                   const std::optional<DatasetSplit>& split,
                                   const std::filesystem::path& directory);

// Throws FormatError for malformed blobs/manifest JSON and ManifestError when
// the manifest and the blobs on disk disagree.
Dataset load_dataset(const std::filesystem::path& directory);

// Little-endian float32 encode/decode of one matrix blob.
std::vector<std::uint8_t> encode_matrix(const PressureMatrix& m);
PressureMatrix decode_matrix(std::span<const std::uint8_t> bytes);

// Shared binary helpers used by the dataset and model formats.
void append_f32_le(std::vector<std::uint8_t>& out, float v);
float read_f32_le(const std::uint8_t* p);
std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace hrm
