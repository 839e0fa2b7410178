#pragma once

#include <cstddef>
#include <cstdint>

#include "colsel/matrix.hpp"

namespace colsel {

/// Thin SVD factors; singular values are non-increasing and non-negative.
struct SvdResult {
  Dense u;                 // m x k
  Vector singular_values;  // k
  Dense v;                 // n x k

  Dense reconstruct() const;
};

/// A basis column is treated as dependent when its residual after
/// orthogonalization against earlier basis columns is at most this fraction
/// of its original norm.
inline constexpr double kBasisRankTolerance = 1e-12;

/// Exact dense SVD is used for metrics up to this min(m, n).
inline constexpr std::size_t kExactSvdLimit = 512;

/// Orthonormal Q with range(Q) = range(A_:S), built by modified Gram-Schmidt
/// with one reorthogonalization pass. Throws DegenerateBasisError naming every
/// dependent column. An empty set yields an m x 0 matrix.
Dense orthonormal_basis(const Matrix& a, const ColumnSet& s);

/// Same construction, but dependent columns are dropped instead of rejected.
Dense span_basis(const Dense& columns);

/// P^(S) X, the projection of X's columns onto span(A_:S).
Dense project_onto_columns(const Matrix& a, const ColumnSet& s, const Dense& x);

/// ||A - P^(S) A||_F^2. The empty set gives ||A||_F^2.
double css_criterion(const Matrix& a, const ColumnSet& s);

/// ||B - P^(S) B||_F^2 where S indexes columns of the source matrix A.
double target_criterion(const Matrix& a, const ColumnSet& s, const Matrix& b);

/// Residual ||A - P A||_F^2 over span(A_:S), silently ignoring dependent columns.
double span_residual_sq(const Matrix& a, const ColumnSet& s);

/// W = Q^T A with Q = orthonormal_basis(A, S); shape |S| x n.
Dense embed_columns(const Matrix& a, const ColumnSet& s);

/// Rank-k approximation of A restricted to span(A_:S): Q times the best
/// rank-k approximation of W = Q^T A. Requires 1 <= k <= |S|.
Dense rank_k_column_approx(const Matrix& a, const ColumnSet& s, std::size_t k);

/// Approximate leading singular triplets of A from the selected columns:
/// U = Q U_W, with the singular values and right vectors of W.
SvdResult approx_svd_from_columns(const Matrix& a, const ColumnSet& s, std::size_t k);

/// Thin exact SVD (all min(m, n) triplets).
SvdResult exact_svd(const Dense& a);

/// Randomized range finder + small exact SVD, with `power_iters` rounds of
/// re-orthonormalized subspace iteration. Deterministic for a fixed seed.
SvdResult randomized_svd(const Matrix& a, std::size_t k, std::size_t oversample,
                         std::size_t power_iters, std::uint64_t seed);

/// ||A - A_k||_F^2 for the best rank-k approximation. Exact for
/// min(m, n) <= kExactSvdLimit, otherwise estimated with randomized_svd.
double best_rank_k_error_sq(const Matrix& a, std::size_t k, std::uint64_t seed = 0);

}  // namespace colsel
