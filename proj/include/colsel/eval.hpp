#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colsel/greedy.hpp"
#include "colsel/matrix.hpp"

namespace colsel {

struct EvalReport {
  std::string method;
  ColumnSet selected;
  double css_error = 0.0;
  std::optional<double> relative_accuracy;  // percent
  double seconds = 0.0;
  std::vector<std::uint64_t> seeds;
};

/// Pieces of the relative accuracy metric. All errors are Frobenius norms,
/// not squared norms.
struct RelativeAccuracy {
  double percent = 0.0;
  double uniform_error = 0.0;    // mean over trials of ||A - A_U||_F
  double selection_error = 0.0;  // ||A - A_S||_F
  double svd_error = 0.0;        // ||A - A_l||_F, best rank l = |S|
};

/// Where S sits between uniform sampling (0%) and the rank-|S| SVD (100%).
/// Uniform trial t draws uniform_select(n, |S|, seed + t). Throws
/// UndefinedMetricError when uniform sampling is already within
/// 1e-12 ||A||_F of the SVD optimum.
RelativeAccuracy relative_accuracy_detail(const Matrix& a, const ColumnSet& s,
                                          std::size_t uniform_trials, std::uint64_t seed);
double relative_accuracy(const Matrix& a, const ColumnSet& s, std::size_t uniform_trials,
                         std::uint64_t seed);

/// l distinct indices out of n, sampled uniformly without replacement.
ColumnSet uniform_select(std::size_t n, std::size_t l, std::uint64_t seed);

enum class SamplingMode { uniform, column_norm, svd_rows };
std::string_view to_string(SamplingMode mode);

/// Randomized phase: sample min(n, ceil(l ln l)) distinct columns with the
/// mode's probabilities. Deterministic phase: greedy_select on the sampled
/// columns (kept in index order) down to l.
SelectionResult hybrid_select(const Matrix& a, std::size_t l, SamplingMode mode,
                              std::uint64_t seed);

/// Columns that best reconstruct B = U_k Sigma_k from randomized_svd(A, k).
SelectionResult sketch_svd_select(const Matrix& a, std::size_t l, std::size_t k,
                                  std::uint64_t seed);

/// Largest m or n accepted by the naive oracles.
inline constexpr std::size_t kOracleLimit = 64;

/// Literal greedy: every step evaluates F(S + {i}) by explicit projection for
/// every remaining candidate and takes the smallest; candidates within
/// 1e-9 ||A||_F^2 of the best count as tied and the lowest index wins.
SelectionResult naive_greedy_oracle(const Matrix& a, std::size_t l);

/// Literal generalized greedy: forms E, F and H = F^T E every step.
SelectionResult naive_generalized_oracle(const Matrix& a, const Matrix& b, std::size_t l);

}  // namespace colsel
