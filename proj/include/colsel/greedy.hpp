#pragma once

#include <cstddef>
#include <vector>

#include "colsel/matrix.hpp"

namespace colsel {

/// Candidates whose residual Gram diagonal drops to this fraction of its
/// initial value are removed from consideration.
inline constexpr double kCandidateTolerance = 1e-12;

/// Greedy selection scores. f_i is the criterion numerator, g_i = G_ii its
/// denominator; omega_history holds one length-n update vector per pick and
/// basis_history the matching unit residual direction E_:p / ||E_:p|| (length m).
/// The residual E and its Gram matrix G are never formed.
struct SelectionState {
  Vector f;
  Vector g;
  Vector initial_g;
  std::vector<Vector> omega_history;
  std::vector<Vector> basis_history;
  ColumnSet selected;
  std::vector<bool> active;

  std::size_t active_count() const;
  bool has_candidates() const { return active_count() > 0; }
};

struct SelectionResult {
  ColumnSet selected;
  /// Fewer than l columns were selectable (rank of A below the budget).
  bool exhausted = false;
  /// Generalized selection only: the target was reconstructed before l picks.
  bool target_reconstructed = false;
};

/// f_i = ||A^T A_:i||^2, g_i = ||A_:i||^2. Columns with g_i <= 1e-12 max g
/// start inactive. Throws ExhaustedError for an all-zero matrix.
SelectionState init_state(const Matrix& a);

/// One iteration of the greedy loop: picks argmax f_i / g_i over active
/// candidates (smallest index on ties), appends the new omega vector and
/// updates f, g in place. Returns the selected column. Throws
/// DependentColumnError, leaving the state untouched, if the pick turns out to
/// be numerically dependent on the columns already selected.
std::size_t select_next(SelectionState& state, const Matrix& a);

/// Greedy column subset selection of up to l columns, in selection order.
SelectionResult greedy_select(const Matrix& a, std::size_t l);

}  // namespace colsel
