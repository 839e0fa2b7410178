#include "colsel/summary.hpp"

#include <json.hpp>

namespace colsel {

namespace {

template <typename T>
void put(nlohmann::ordered_json& j, const char* key, const std::optional<T>& value) {
  if (value) j[key] = *value;
}

}  // namespace

std::string to_json_text(const RunSummary& s) {
  nlohmann::ordered_json params;
  params["l"] = s.l;
  put(params, "r", s.r);
  put(params, "partitions", s.partitions);
  put(params, "k", s.k);
  put(params, "trials", s.trials);
  put(params, "sketch", s.sketch);
  put(params, "assignment", s.assignment);
  params["seed"] = s.seed;

  nlohmann::ordered_json doc;
  doc["method"] = s.method;
  doc["parameters"] = std::move(params);
  doc["selected"] = s.selected;
  doc["exhausted"] = s.exhausted;
  doc["target_reconstructed"] = s.target_reconstructed;
  put(doc, "css_error", s.css_error);
  put(doc, "target_error", s.target_error);
  put(doc, "relative_accuracy", s.relative_accuracy);
  put(doc, "columns_moved", s.columns_moved);
  put(doc, "broadcast_values", s.broadcast_values);
  put(doc, "picks_per_partition", s.picks_per_partition);
  if (!s.timings.empty()) {
    nlohmann::ordered_json t;
    for (const auto& [phase, seconds] : s.timings) t[phase] = seconds;
    doc["timings"] = std::move(t);
  }
  return doc.dump(2) + "\n";
}

}  // namespace colsel
