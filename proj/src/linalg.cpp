#include "colsel/linalg.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "colsel/error.hpp"

namespace colsel {

namespace {

// Orthogonalizes `columns` left to right. Dependent columns are reported in
// `dependent` (by position) and left out of the returned basis.
Dense gram_schmidt(const Dense& columns, std::vector<std::size_t>& dependent) {
  const Eigen::Index m = columns.rows();
  Dense q(m, columns.cols());
  Eigen::Index rank = 0;
  for (Eigen::Index j = 0; j < columns.cols(); ++j) {
    Vector v = columns.col(j);
    const double original = v.norm();
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index r = 0; r < rank; ++r) {
        v -= q.col(r).dot(v) * q.col(r);
      }
    }
    const double residual = v.norm();
    if (original == 0.0 || residual <= kBasisRankTolerance * original) {
      dependent.push_back(static_cast<std::size_t>(j));
      continue;
    }
    q.col(rank++) = v / residual;
  }
  q.conservativeResize(m, rank);
  return q;
}

void check_rank(std::size_t k, std::size_t available) {
  if (k == 0 || k > available) {
    throw InvalidRankError("rank k=" + std::to_string(k) + " must satisfy 1 <= k <= " +
                           std::to_string(available));
  }
}

SvdResult truncate(SvdResult svd, std::size_t k) {
  const auto kk = static_cast<Eigen::Index>(k);
  svd.u = svd.u.leftCols(kk).eval();
  svd.singular_values = svd.singular_values.head(kk).eval();
  svd.v = svd.v.leftCols(kk).eval();
  return svd;
}

Dense thin_q(const Dense& y) {
  Eigen::HouseholderQR<Dense> qr(y);
  return qr.householderQ() * Dense::Identity(y.rows(), y.cols());
}

}  // namespace

Dense SvdResult::reconstruct() const {
  return u * singular_values.asDiagonal() * v.transpose();
}

Dense orthonormal_basis(const Matrix& a, const ColumnSet& s) {
  s.check_bounds(a.cols());
  std::vector<std::size_t> dependent;
  Dense q = gram_schmidt(gather_columns(a.dense(), s), dependent);
  if (!dependent.empty()) {
    std::vector<std::size_t> offending;
    std::string names;
    for (auto pos : dependent) {
      offending.push_back(s[pos]);
      names += (names.empty() ? "" : ", ") + std::to_string(s[pos]);
    }
    throw DegenerateBasisError(std::move(offending),
                               "selected columns are numerically dependent: {" + names + "}");
  }
  return q;
}

Dense span_basis(const Dense& columns) {
  std::vector<std::size_t> dependent;
  return gram_schmidt(columns, dependent);
}

Dense project_onto_columns(const Matrix& a, const ColumnSet& s, const Dense& x) {
  if (static_cast<std::size_t>(x.rows()) != a.rows()) {
    throw DimensionError("projection target has " + std::to_string(x.rows()) +
                         " rows, basis has " + std::to_string(a.rows()));
  }
  const Dense q = orthonormal_basis(a, s);
  return q * (q.transpose() * x);
}

double css_criterion(const Matrix& a, const ColumnSet& s) {
  if (s.empty()) return a.frobenius_sq();
  return (a.dense() - project_onto_columns(a, s, a.dense())).squaredNorm();
}

double target_criterion(const Matrix& a, const ColumnSet& s, const Matrix& b) {
  if (b.rows() != a.rows()) {
    throw DimensionError("target has " + std::to_string(b.rows()) + " rows, source has " +
                         std::to_string(a.rows()));
  }
  if (s.empty()) return b.frobenius_sq();
  return (b.dense() - project_onto_columns(a, s, b.dense())).squaredNorm();
}

double span_residual_sq(const Matrix& a, const ColumnSet& s) {
  const Dense q = span_basis(gather_columns(a.dense(), s));
  return (a.dense() - q * (q.transpose() * a.dense())).squaredNorm();
}

Dense embed_columns(const Matrix& a, const ColumnSet& s) {
  return orthonormal_basis(a, s).transpose() * a.dense();
}

Dense rank_k_column_approx(const Matrix& a, const ColumnSet& s, std::size_t k) {
  return approx_svd_from_columns(a, s, k).reconstruct();
}

SvdResult approx_svd_from_columns(const Matrix& a, const ColumnSet& s, std::size_t k) {
  check_rank(k, s.size());
  const Dense q = orthonormal_basis(a, s);
  SvdResult w = truncate(exact_svd(q.transpose() * a.dense()), k);
  w.u = q * w.u;
  return w;
}

SvdResult exact_svd(const Dense& a) {
  Eigen::BDCSVD<Dense> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

SvdResult randomized_svd(const Matrix& a, std::size_t k, std::size_t oversample,
                         std::size_t power_iters, std::uint64_t seed) {
  const std::size_t min_dim = std::min(a.rows(), a.cols());
  check_rank(k, min_dim);
  const auto width = static_cast<Eigen::Index>(std::min(k + oversample, min_dim));
  const Dense& mat = a.dense();

  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal;
  Dense omega(mat.cols(), width);
  for (Eigen::Index j = 0; j < width; ++j) {
    for (Eigen::Index i = 0; i < mat.cols(); ++i) omega(i, j) = normal(engine);
  }

  Dense q = thin_q(mat * omega);
  for (std::size_t it = 0; it < power_iters; ++it) {
    const Dense z = thin_q(mat.transpose() * q);
    q = thin_q(mat * z);
  }

  SvdResult small = exact_svd(q.transpose() * mat);
  small.u = q * small.u;
  return truncate(std::move(small), k);
}

double best_rank_k_error_sq(const Matrix& a, std::size_t k, std::uint64_t seed) {
  const std::size_t min_dim = std::min(a.rows(), a.cols());
  if (k >= min_dim) return 0.0;
  if (min_dim <= kExactSvdLimit) {
    const Vector sv = exact_svd(a.dense()).singular_values;
    return sv.tail(sv.size() - static_cast<Eigen::Index>(k)).squaredNorm();
  }
  const SvdResult approx = randomized_svd(a, k, 10, 2, seed);
  return std::max(0.0, a.frobenius_sq() - approx.singular_values.squaredNorm());
}

}  // namespace colsel
