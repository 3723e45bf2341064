#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "hrm/eval/metrics.hpp"

namespace hrm::eval {

inline constexpr std::string_view kEvalVersion = "hrmeval-1";

// Metrics of one model on one partition.
struct MetricsEntry {
  std::string model;
  std::string partition;
  std::map<std::string, double> scalars;  // accuracy, top2_accuracy, mae, ...
  std::optional<ConfusionMatrix> confusion;
  std::vector<std::string> class_names;

  bool operator==(const MetricsEntry&) const;
};

struct MetricsReport {
  std::vector<MetricsEntry> entries;

  const MetricsEntry* find(std::string_view model, std::string_view partition) const;
  bool operator==(const MetricsReport&) const = default;
};

// Classification entry with accuracy, top-2 accuracy, confusion and per-class scores.
MetricsEntry classification_entry(std::string model, std::string partition, std::span<const double> probs,
                                  std::span<const std::size_t> truth, std::vector<std::string> class_names);

nlohmann::json to_json(const MetricsReport& report);
MetricsReport metrics_report_from_json(const nlohmann::json& j);

std::string to_csv(const MetricsReport& report);
std::string confusion_svg(const ConfusionMatrix& cm, const std::vector<std::string>& class_names,
                          const std::string& title);

enum class ReportFormat { Json, Csv, SvgHeatmap };
ReportFormat parse_report_format(std::string_view s);

// SvgHeatmap writes the first entry carrying a confusion matrix.
// Throws IoError when the path is not writable.
void export_report(const MetricsReport& report, const std::filesystem::path& path, ReportFormat format);

}  // namespace hrm::eval
