#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "json.hpp"
#include "hrm/nn/network.hpp"
#include "hrm/nn/trainer.hpp"

namespace hrm::nn {

inline constexpr std::string_view kModelVersion = "hrmnet-1";

nlohmann::json to_json(const NetworkSpec& spec);
NetworkSpec network_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TrainConfig& cfg);
// Keys absent from `j` keep their value in `defaults`.
TrainConfig train_config_from_json(const nlohmann::json& j, const TrainConfig& defaults = {});

struct StoredModel {
  Network<float> net;
  nlohmann::json train_config;
  nlohmann::json metrics;
};

// Layout: "hrmnet-1\n", u64 LE header length, JSON header, float32 LE blobs.
std::vector<std::uint8_t> encode_model(Network<float>& net, const nlohmann::json& train_config = {},
                                       const nlohmann::json& metrics = {});
StoredModel decode_model(std::span<const std::uint8_t> bytes);

void save_model(Network<float>& net, const std::filesystem::path& path,
                const nlohmann::json& train_config = {}, const nlohmann::json& metrics = {});
// Throws FormatError on malformed input, IoError when unreadable.
StoredModel load_model(const std::filesystem::path& path);

}  // namespace hrm::nn
