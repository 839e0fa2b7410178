#include "colsel/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "colsel/error.hpp"
#include "colsel/parallel.hpp"
#include "colsel/seed.hpp"

namespace colsel {

namespace {

void check_spec(const SketchSpec& spec) {
  if (spec.r < 1) throw InvalidArgument("sketch dimension r must be at least 1");
}

void check_identity(const SketchSpec& spec, std::size_t n) {
  if (spec.kind == SketchKind::identity && spec.r != n) {
    throw DimensionError("identity sketch needs r = n (r=" + std::to_string(spec.r) +
                         ", n=" + std::to_string(n) + ")");
  }
}

void accumulate(Dense& out, const Dense& columns, std::span<const std::size_t> global_index,
                const SketchSpec& spec, std::span<const std::size_t> order) {
  for (std::size_t j : order) {
    const Vector row = omega_row(spec, global_index[j]);
    out.noalias() += columns.col(static_cast<Eigen::Index>(j)) * row.transpose();
  }
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace

std::string_view to_string(SketchKind kind) {
  switch (kind) {
    case SketchKind::gaussian: return "gaussian";
    case SketchKind::sign: return "sign";
    case SketchKind::sparse_sign: return "sparse-sign";
    case SketchKind::identity: return "identity";
  }
  return "unknown";
}

SketchKind parse_sketch_kind(std::string_view name) {
  if (name == "gaussian") return SketchKind::gaussian;
  if (name == "sign") return SketchKind::sign;
  if (name == "sparse-sign") return SketchKind::sparse_sign;
  if (name == "identity") return SketchKind::identity;
  throw InvalidArgument("unknown sketch kind '" + std::string(name) + "'");
}

Vector omega_row(const SketchSpec& spec, std::size_t i) {
  check_spec(spec);
  const auto r = static_cast<Eigen::Index>(spec.r);
  if (spec.kind == SketchKind::identity) {
    if (i >= spec.r) {
      throw BoundsError("identity sketch row " + std::to_string(i) + " out of range for r=" +
                        std::to_string(spec.r));
    }
    return Vector::Unit(r, static_cast<Eigen::Index>(i));
  }

  std::mt19937_64 engine(derive_seed(spec.seed, i));
  Vector row(r);
  switch (spec.kind) {
    case SketchKind::gaussian: {
      std::normal_distribution<double> normal;
      for (Eigen::Index j = 0; j < r; ++j) row(j) = normal(engine);
      break;
    }
    case SketchKind::sign:
      for (Eigen::Index j = 0; j < r; ++j) row(j) = (engine() >> 63) ? 1.0 : -1.0;
      break;
    case SketchKind::sparse_sign: {
      const double root3 = std::sqrt(3.0);
      for (Eigen::Index j = 0; j < r; ++j) {
        // top 3 bits give 8 buckets; reject 6 and 7 for an exact 1/6 split
        std::uint64_t bucket = engine() >> 61;
        while (bucket >= 6) bucket = engine() >> 61;
        row(j) = bucket == 0 ? root3 : bucket == 1 ? -root3 : 0.0;
      }
      break;
    }
    case SketchKind::identity: break;
  }
  return row;
}

Dense sketch_matrix(const Matrix& a, const SketchSpec& spec) {
  const auto order = iota(a.cols());
  return sketch_matrix(a, spec, order);
}

Dense sketch_matrix(const Matrix& a, const SketchSpec& spec, std::span<const std::size_t> order) {
  check_spec(spec);
  check_identity(spec, a.cols());
  std::vector<bool> seen(a.cols(), false);
  if (order.size() != a.cols()) {
    throw InvalidArgument("column order must list every column exactly once");
  }
  for (auto j : order) {
    if (j >= a.cols() || seen[j]) {
      throw InvalidArgument("column order must list every column exactly once");
    }
    seen[j] = true;
  }
  const auto global = iota(a.cols());
  Dense out = Dense::Zero(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(spec.r));
  accumulate(out, a.dense(), global, spec, order);
  return out;
}

Dense sketch_partitioned(std::span<const ColumnPartition> partitions, const SketchSpec& spec,
                         std::size_t threads) {
  check_spec(spec);
  if (partitions.empty()) throw InvalidArgument("no partitions to sketch");

  const std::size_t m = partitions.front().columns.rows();
  std::size_t total = 0;
  for (const auto& part : partitions) {
    if (part.columns.rows() != m) {
      throw DimensionError("partition " + std::to_string(part.id) + " has " +
                           std::to_string(part.columns.rows()) + " rows, expected " +
                           std::to_string(m));
    }
    if (part.global_index.size() != part.columns.cols()) {
      throw DimensionError("partition " + std::to_string(part.id) +
                           " index map does not match its column count");
    }
    total += part.columns.cols();
  }
  std::vector<bool> seen(total, false);
  for (const auto& part : partitions) {
    for (auto g : part.global_index) {
      if (g >= total) {
        throw TilingError("global column " + std::to_string(g) + " leaves a gap in 0.." +
                          std::to_string(total - 1));
      }
      if (seen[g]) throw TilingError("global column " + std::to_string(g) + " appears twice");
      seen[g] = true;
    }
  }
  check_identity(spec, total);

  std::vector<std::size_t> by_id = iota(partitions.size());
  std::stable_sort(by_id.begin(), by_id.end(), [&](std::size_t x, std::size_t y) {
    return partitions[x].id < partitions[y].id;
  });

  const auto rows = static_cast<Eigen::Index>(m);
  const auto r = static_cast<Eigen::Index>(spec.r);
  std::vector<Dense> partial(partitions.size());
  parallel_for(partitions.size(), threads, [&](std::size_t k) {
    const ColumnPartition& part = partitions[k];
    partial[k] = Dense::Zero(rows, r);
    const auto order = iota(part.columns.cols());
    accumulate(partial[k], part.columns.dense(), part.global_index, spec, order);
  });

  Dense out = Dense::Zero(rows, r);
  for (auto k : by_id) out += partial[k];
  return out;
}

}  // namespace colsel
