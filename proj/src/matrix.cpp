#include "colsel/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "colsel/error.hpp"

namespace colsel {

Matrix::Matrix(Dense values) : values_(std::move(values)) {
  if (values_.rows() < 1 || values_.cols() < 1) {
    throw DimensionError("matrix must have at least one row and one column, got " +
                         std::to_string(values_.rows()) + "x" + std::to_string(values_.cols()));
  }
  if (!values_.allFinite()) {
    for (Eigen::Index j = 0; j < values_.cols(); ++j) {
      for (Eigen::Index i = 0; i < values_.rows(); ++i) {
        if (!std::isfinite(values_(i, j))) {
          throw NonFiniteError("non-finite entry at (" + std::to_string(i) + ", " +
                               std::to_string(j) + ")");
        }
      }
    }
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::span<const double> column_major)
    : Matrix([&] {
        if (column_major.size() != rows * cols) {
          throw DimensionError("expected " + std::to_string(rows * cols) + " values, got " +
                               std::to_string(column_major.size()));
        }
        return Dense(Eigen::Map<const Dense>(column_major.data(),
                                             static_cast<Eigen::Index>(rows),
                                             static_cast<Eigen::Index>(cols)));
      }()) {}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const auto m = static_cast<Eigen::Index>(rows.size());
  const auto n = m == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  Dense d(m, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw DimensionError("ragged row " + std::to_string(i));
    }
    Eigen::Index j = 0;
    for (double v : row) d(i, j++) = v;
    ++i;
  }
  return Matrix(std::move(d));
}

Matrix Matrix::identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return Matrix(Dense::Identity(k, k));
}

ColumnSet::ColumnSet(std::initializer_list<std::size_t> indices)
    : ColumnSet(std::vector<std::size_t>(indices)) {}

ColumnSet::ColumnSet(std::vector<std::size_t> indices) {
  indices_.reserve(indices.size());
  for (auto i : indices) push_back(i);
}

void ColumnSet::push_back(std::size_t index) {
  if (contains(index)) {
    throw InvalidArgument("duplicate column index " + std::to_string(index));
  }
  indices_.push_back(index);
}

bool ColumnSet::contains(std::size_t index) const {
  return std::find(indices_.begin(), indices_.end(), index) != indices_.end();
}

void ColumnSet::check_bounds(std::size_t cols) const {
  for (auto i : indices_) {
    if (i >= cols) {
      throw BoundsError("column index " + std::to_string(i) + " out of range for " +
                        std::to_string(cols) + " columns");
    }
  }
}

Dense gather_columns(const Dense& a, const ColumnSet& set) {
  set.check_bounds(static_cast<std::size_t>(a.cols()));
  Dense out(a.rows(), static_cast<Eigen::Index>(set.size()));
  for (std::size_t k = 0; k < set.size(); ++k) {
    out.col(static_cast<Eigen::Index>(k)) = a.col(static_cast<Eigen::Index>(set[k]));
  }
  return out;
}

Matrix gather_columns(const Matrix& a, const ColumnSet& set) {
  return Matrix(gather_columns(a.dense(), set));
}

}  // namespace colsel
