#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colsel/matrix.hpp"

namespace colsel {

/// Entry distribution of the projection matrix Omega.
///   gaussian:    standard normal
///   sign:        +1 / -1 with equal probability
///   sparse_sign: +sqrt(3), 0, -sqrt(3) with probabilities 1/6, 2/3, 1/6
///   identity:    Omega = I (requires r = n); exists for exactness checks
enum class SketchKind { gaussian, sign, sparse_sign, identity };

std::string_view to_string(SketchKind kind);
/// Accepts "gaussian", "sign", "sparse-sign", "identity".
SketchKind parse_sketch_kind(std::string_view name);

struct SketchSpec {
  SketchKind kind = SketchKind::gaussian;
  std::size_t r = 1;
  std::uint64_t seed = 0;
};

/// A block of columns of some larger matrix plus the global position of each.
struct ColumnPartition {
  std::size_t id = 0;
  Matrix columns;
  std::vector<std::size_t> global_index;
};

/// Row i of Omega. Depends only on (spec, i): callers on any thread or
/// partition regenerate identical values without a materialized Omega.
Vector omega_row(const SketchSpec& spec, std::size_t i);

/// B = A Omega accumulated as the sum of rank-1 terms A_:i Omega_i:.
Dense sketch_matrix(const Matrix& a, const SketchSpec& spec);

/// Same sum, visiting columns in the given order (a permutation of 0..n-1).
Dense sketch_matrix(const Matrix& a, const SketchSpec& spec, std::span<const std::size_t> order);

/// Per-partition partial sketches accumulated independently (up to `threads`
/// at once), then summed in partition order. Partitions must tile the global
/// column range 0..N-1 exactly once.
Dense sketch_partitioned(std::span<const ColumnPartition> partitions, const SketchSpec& spec,
                         std::size_t threads = 1);

}  // namespace colsel
