#pragma once

// Shared score machinery for plain and generalized greedy selection. Both
// paths run the exact same floating-point operations when the target equals
// the source, so generalized_select(A, A, l) reproduces greedy_select(A, l).

#include <cstddef>
#include <vector>

#include "colsel/greedy.hpp"

namespace colsel::detail {

/// f from the column norms of target^T * source, g from the source column norms.
SelectionState init_scores(const Dense& source, const Dense& target);

/// argmax_i f_i / g_i over active candidates, first index wins ties.
/// Throws ExhaustedError when nothing is active.
std::size_t best_candidate(const SelectionState& state);

/// Applies the pick of column p. When `upsilon_history` is null the target is
/// the source itself and omega doubles as upsilon.
void apply_selection(SelectionState& state, const Dense& source, const Dense& target,
                     std::vector<Vector>* upsilon_history, std::size_t p);

}  // namespace colsel::detail
