#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace colsel {

using Dense = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Immutable dense real matrix, column-major. Construction rejects empty
/// shapes and non-finite entries; every other operation can assume both.
class Matrix {
 public:
  explicit Matrix(Dense values);
  Matrix(std::size_t rows, std::size_t cols, std::span<const double> column_major);

  /// Row-major nested initializer, handy for small literals.
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return static_cast<std::size_t>(values_.rows()); }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(values_.cols()); }
  double operator()(std::size_t i, std::size_t j) const {
    return values_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  const Dense& dense() const noexcept { return values_; }
  auto col(std::size_t j) const { return values_.col(static_cast<Eigen::Index>(j)); }

  double frobenius_sq() const { return values_.squaredNorm(); }

 private:
  Dense values_;
};

/// Ordered list of distinct 0-based column positions. Order is selection order.
class ColumnSet {
 public:
  ColumnSet() = default;
  ColumnSet(std::initializer_list<std::size_t> indices);
  explicit ColumnSet(std::vector<std::size_t> indices);

  /// Appends a column; throws InvalidArgument on a duplicate.
  void push_back(std::size_t index);

  bool contains(std::size_t index) const;
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

  /// Throws BoundsError if any index is >= cols.
  void check_bounds(std::size_t cols) const;

  friend bool operator==(const ColumnSet&, const ColumnSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Copies the columns of `a` listed in `set`, in set order.
Dense gather_columns(const Dense& a, const ColumnSet& set);
Matrix gather_columns(const Matrix& a, const ColumnSet& set);

}  // namespace colsel
