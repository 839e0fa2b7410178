#include "colsel/distributed.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "colsel/error.hpp"
#include "colsel/generalized.hpp"
#include "colsel/linalg.hpp"
#include "colsel/parallel.hpp"

namespace colsel {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::size_t> to_global(const ColumnSet& local, const std::vector<std::size_t>& map) {
  std::vector<std::size_t> out;
  out.reserve(local.size());
  for (auto j : local) out.push_back(map[j]);
  return out;
}

}  // namespace

std::string_view to_string(Assignment assignment) {
  return assignment == Assignment::contiguous ? "contiguous" : "round-robin";
}

Assignment parse_assignment(std::string_view name) {
  if (name == "contiguous") return Assignment::contiguous;
  if (name == "round-robin") return Assignment::round_robin;
  throw InvalidArgument("unknown assignment '" + std::string(name) + "'");
}

std::size_t DistributedConfig::per_partition_budget() const {
  return partitions == 0 ? 0 : (l + partitions - 1) / partitions;
}

void DistributedConfig::validate(std::size_t n) const {
  if (partitions < 1) throw InvalidArgument("partition count must be at least 1");
  if (l < 1 || l > n) {
    throw InvalidArgument("column budget l=" + std::to_string(l) + " must satisfy 1 <= l <= " +
                          std::to_string(n));
  }
  if (r < 1) throw InvalidArgument("sketch dimension r must be at least 1");
  if (partitions > n) {
    throw PartitionError("cannot split " + std::to_string(n) + " columns into " +
                         std::to_string(partitions) + " partitions");
  }
}

std::vector<ColumnPartition> partition_columns(const Matrix& a, std::size_t c,
                                               Assignment assignment) {
  const std::size_t n = a.cols();
  if (c < 1 || c > n) {
    throw PartitionError("cannot split " + std::to_string(n) + " columns into " +
                         std::to_string(c) + " partitions");
  }
  std::vector<std::vector<std::size_t>> maps(c);
  if (assignment == Assignment::contiguous) {
    const std::size_t base = n / c;
    const std::size_t extra = n % c;
    std::size_t next = 0;
    for (std::size_t b = 0; b < c; ++b) {
      const std::size_t size = base + (b < extra ? 1 : 0);
      for (std::size_t k = 0; k < size; ++k) maps[b].push_back(next++);
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) maps[j % c].push_back(j);
  }

  std::vector<ColumnPartition> parts;
  parts.reserve(c);
  for (std::size_t b = 0; b < c; ++b) {
    Matrix block = gather_columns(a, ColumnSet(maps[b]));
    parts.push_back({b, std::move(block), std::move(maps[b])});
  }
  return parts;
}

PartitionResult map_phase(const ColumnPartition& partition, const Matrix& b, std::size_t l_b) {
  if (l_b < 1) throw InvalidArgument("per-partition budget must be at least 1");
  const std::size_t budget = std::min(l_b, partition.columns.cols());
  SelectionResult picked = generalized_select(partition.columns, b, budget);

  PartitionResult out;
  out.partition_id = partition.id;
  out.global = to_global(picked.selected, partition.global_index);
  out.columns = gather_columns(partition.columns.dense(), picked.selected);
  out.exhausted = picked.selected.size() < l_b;
  out.local = std::move(picked.selected);
  return out;
}

ReduceResult reduce_phase(std::span<const PartitionResult> results, const Matrix& b,
                          std::size_t l) {
  if (results.empty()) throw InvalidArgument("reduce phase needs at least one map result");
  if (l < 1) throw InvalidArgument("column budget must be at least 1");

  std::vector<const PartitionResult*> ordered;
  for (const auto& res : results) ordered.push_back(&res);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](auto* x, auto* y) { return x->partition_id < y->partition_id; });

  std::vector<std::size_t> global;
  Eigen::Index width = 0;
  for (const auto* res : ordered) {
    if (static_cast<std::size_t>(res->columns.cols()) != res->global.size()) {
      throw DimensionError("partition " + std::to_string(res->partition_id) +
                           " emitted mismatched column data");
    }
    if (res->global.empty()) continue;
    if (static_cast<std::size_t>(res->columns.rows()) != b.rows()) {
      throw DimensionError("partition " + std::to_string(res->partition_id) +
                           " emitted columns with the wrong row count");
    }
    for (auto g : res->global) {
      if (std::find(global.begin(), global.end(), g) != global.end()) {
        throw TilingError("global column " + std::to_string(g) +
                          " was emitted by more than one partition");
      }
      global.push_back(g);
    }
    width += res->columns.cols();
  }
  if (global.empty()) throw ExhaustedError("no partition emitted any columns");

  Dense stacked(static_cast<Eigen::Index>(b.rows()), width);
  Eigen::Index at = 0;
  for (const auto* res : ordered) {
    stacked.middleCols(at, res->columns.cols()) = res->columns;
    at += res->columns.cols();
  }
  const Matrix candidates(std::move(stacked));

  const std::size_t budget = std::min(l, candidates.cols());
  SelectionResult picked = generalized_select(candidates, b, budget);

  ReduceResult out;
  out.selected = ColumnSet(to_global(picked.selected, global));
  out.columns = gather_columns(candidates.dense(), picked.selected);
  out.target_error = target_criterion(candidates, picked.selected, b);
  out.exhausted = picked.selected.size() < l && !picked.target_reconstructed;
  out.target_reconstructed = picked.target_reconstructed;
  return out;
}

DistributedResult distributed_select(const Matrix& a, const DistributedConfig& config) {
  config.validate(a.cols());
  const auto parts = partition_columns(a, config.partitions, config.assignment);

  DistributedResult result;
  auto start = Clock::now();
  const Matrix sketch(sketch_partitioned(parts, config.sketch_spec(), config.threads));
  result.report.sketch_seconds = seconds_since(start);

  const std::size_t l_b = config.per_partition_budget();
  start = Clock::now();
  std::vector<PartitionResult> emitted(parts.size());
  parallel_for(parts.size(), config.threads,
               [&](std::size_t k) { emitted[k] = map_phase(parts[k], sketch, l_b); });
  result.report.map_seconds = seconds_since(start);

  start = Clock::now();
  ReduceResult reduced = reduce_phase(emitted, sketch, config.l);
  result.report.reduce_seconds = seconds_since(start);

  result.report.per_partition_budget = l_b;
  for (const auto& res : emitted) {
    result.report.picks_per_partition.push_back(res.global.size());
    result.report.columns_moved += res.global.size();
  }
  result.report.broadcast_values = config.partitions * a.rows() * config.r;
  result.report.target_error = reduced.target_error;
  result.report.css_error = css_criterion(a, reduced.selected);

  result.selected = std::move(reduced.selected);
  result.exhausted = reduced.exhausted;
  result.target_reconstructed = reduced.target_reconstructed;
  result.sketch = sketch.dense();
  return result;
}

SelectionResult naive_distributed_baseline(const Matrix& a, const DistributedConfig& config) {
  config.validate(a.cols());
  const auto parts = partition_columns(a, config.partitions, config.assignment);
  const std::size_t l_b = config.per_partition_budget();

  std::vector<SelectionResult> local(parts.size());
  parallel_for(parts.size(), config.threads, [&](std::size_t k) {
    local[k] = greedy_select(parts[k].columns, std::min(l_b, parts[k].columns.cols()));
  });

  std::vector<std::size_t> pooled;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (auto j : local[k].selected) pooled.push_back(parts[k].global_index[j]);
  }

  SelectionResult out;
  if (pooled.size() <= config.l) {
    out.selected = ColumnSet(pooled);
    out.exhausted = pooled.size() < config.l;
    return out;
  }
  const ColumnSet pool(pooled);
  SelectionResult reduced = greedy_select(gather_columns(a, pool), config.l);
  for (auto j : reduced.selected) out.selected.push_back(pooled[j]);
  out.exhausted = reduced.exhausted;
  return out;
}

}  // namespace colsel
