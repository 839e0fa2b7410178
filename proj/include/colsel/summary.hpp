#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace colsel {

/// Structured result of one CLI run, serialized as JSON.
struct RunSummary {
  std::string method;

  // parameters
  std::size_t l = 0;
  std::optional<std::size_t> r;
  std::optional<std::size_t> partitions;
  std::optional<std::size_t> k;
  std::optional<std::size_t> trials;
  std::optional<std::string> sketch;
  std::optional<std::string> assignment;
  std::uint64_t seed = 0;

  std::vector<std::size_t> selected;  // 0-based, selection order
  bool exhausted = false;
  bool target_reconstructed = false;
  std::optional<double> css_error;     // F
  std::optional<double> target_error;  // F-bar, when a sketch or target was used
  std::optional<double> relative_accuracy;

  // distributed pipeline accounting
  std::optional<std::size_t> columns_moved;
  std::optional<std::size_t> broadcast_values;
  std::optional<std::vector<std::size_t>> picks_per_partition;

  /// Phase name -> seconds. Only emitted when timing output is requested,
  /// so that summaries stay byte-identical across repeated runs.
  std::vector<std::pair<std::string, double>> timings;
};

/// Pretty-printed JSON document with a trailing newline.
std::string to_json_text(const RunSummary& summary);

}  // namespace colsel
