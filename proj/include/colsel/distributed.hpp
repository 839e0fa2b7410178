#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "colsel/greedy.hpp"
#include "colsel/matrix.hpp"
#include "colsel/sketch.hpp"

namespace colsel {

/// How columns are dealt to partitions.
///   contiguous:  balanced consecutive ranges, larger blocks first (10 / 3 -> 4,3,3)
///   round_robin: column j goes to partition j mod c
enum class Assignment { contiguous, round_robin };

std::string_view to_string(Assignment assignment);
/// Accepts "contiguous" and "round-robin".
Assignment parse_assignment(std::string_view name);

struct DistributedConfig {
  std::size_t partitions = 1;  // c
  std::size_t l = 1;           // global budget
  Assignment assignment = Assignment::contiguous;
  SketchKind sketch_kind = SketchKind::gaussian;
  std::size_t r = 1;
  std::uint64_t seed = 0;
  std::size_t threads = 1;  // map-phase and sketch workers; results never depend on it

  /// ceil(l / c), so that the reduce phase always sees at least l candidates.
  std::size_t per_partition_budget() const;
  SketchSpec sketch_spec() const { return {sketch_kind, r, seed}; }
  /// Throws InvalidArgument / PartitionError if unusable for an n-column matrix.
  void validate(std::size_t n) const;
};

/// What one map task emits: its local picks, their global positions and the
/// picked column data.
struct PartitionResult {
  std::size_t partition_id = 0;
  ColumnSet local;
  std::vector<std::size_t> global;
  Dense columns;
  bool exhausted = false;
};

struct ReduceResult {
  ColumnSet selected;  // global indices, selection order
  Dense columns;
  double target_error = 0.0;  // ||B - P B||_F^2 over the selection
  bool exhausted = false;
  bool target_reconstructed = false;
};

struct DistributedReport {
  double target_error = 0.0;  // F-bar on the sketch
  double css_error = 0.0;     // F on A
  double sketch_seconds = 0.0;
  double map_seconds = 0.0;
  double reduce_seconds = 0.0;
  std::size_t per_partition_budget = 0;
  std::vector<std::size_t> picks_per_partition;
  std::size_t columns_moved = 0;     // column vectors crossing the map/reduce boundary
  std::size_t broadcast_values = 0;  // c * m * r values for sharing the sketch
};

struct DistributedResult {
  ColumnSet selected;
  bool exhausted = false;
  bool target_reconstructed = false;
  Dense sketch;
  DistributedReport report;
};

/// Splits A's columns into c partitions. Throws PartitionError when c > n.
std::vector<ColumnPartition> partition_columns(const Matrix& a, std::size_t c,
                                               Assignment assignment);

/// Generalized selection of up to l_b columns of one partition against B.
PartitionResult map_phase(const ColumnPartition& partition, const Matrix& b, std::size_t l_b);

/// Generalized selection of l columns over the union of map-phase picks,
/// concatenated in partition-id order. Duplicate global columns are rejected.
ReduceResult reduce_phase(std::span<const PartitionResult> results, const Matrix& b, std::size_t l);

/// Sketch, broadcast, map, barrier, reduce.
DistributedResult distributed_select(const Matrix& a, const DistributedConfig& config);

/// Per-partition plain greedy on local data (no shared sketch), union, then a
/// plain greedy pass over the union when it holds more than l columns.
SelectionResult naive_distributed_baseline(const Matrix& a, const DistributedConfig& config);

}  // namespace colsel
