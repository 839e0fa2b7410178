#pragma once

#include <cstddef>
#include <vector>

#include "colsel/greedy.hpp"

namespace colsel {

/// Scores for selecting columns of a source A that reconstruct a target B.
/// f_i = ||H_:i||^2 with H = F^T E; upsilon vectors have length cols(B).
struct GeneralizedState {
  SelectionState scores;
  std::vector<Vector> upsilon_history;
  double target_norm_sq = 0.0;
};

/// The target counts as reconstructed once max f_i <= this * ||B||_F^2 * max g_i.
inline constexpr double kTargetTolerance = 1e-12;

/// f_i = ||B^T A_:i||^2, g_i = ||A_:i||^2. Throws DimensionError when the
/// row counts differ.
GeneralizedState generalized_init(const Matrix& a, const Matrix& b);

/// One generalized iteration; same contract as select_next.
std::size_t generalized_next(GeneralizedState& state, const Matrix& a, const Matrix& b);

/// True when every remaining candidate has (relatively) zero marginal value.
bool target_reconstructed(const GeneralizedState& state);

/// Greedy generalized selection of up to l columns of A for target B.
SelectionResult generalized_select(const Matrix& a, const Matrix& b, std::size_t l);

}  // namespace colsel
