#include "colsel/generalized.hpp"

#include <string>

#include "colsel/error.hpp"
#include "score_update.hpp"

namespace colsel {

GeneralizedState generalized_init(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw DimensionError("source has " + std::to_string(a.rows()) + " rows but target has " +
                         std::to_string(b.rows()));
  }
  GeneralizedState state;
  state.scores = detail::init_scores(a.dense(), b.dense());
  state.target_norm_sq = b.frobenius_sq();
  return state;
}

std::size_t generalized_next(GeneralizedState& state, const Matrix& a, const Matrix& b) {
  const std::size_t p = detail::best_candidate(state.scores);
  detail::apply_selection(state.scores, a.dense(), b.dense(), &state.upsilon_history, p);
  return p;
}

bool target_reconstructed(const GeneralizedState& state) {
  const SelectionState& s = state.scores;
  double max_f = 0.0;
  double max_g = 0.0;
  for (std::size_t i = 0; i < s.active.size(); ++i) {
    if (!s.active[i]) continue;
    const auto k = static_cast<Eigen::Index>(i);
    max_f = std::max(max_f, s.f(k));
    max_g = std::max(max_g, s.g(k));
  }
  return max_f <= kTargetTolerance * state.target_norm_sq * max_g;
}

SelectionResult generalized_select(const Matrix& a, const Matrix& b, std::size_t l) {
  if (l < 1 || l > a.cols()) {
    throw InvalidArgument("column budget l=" + std::to_string(l) + " must satisfy 1 <= l <= " +
                          std::to_string(a.cols()));
  }
  SelectionResult result;
  GeneralizedState state;
  try {
    state = generalized_init(a, b);
  } catch (const ExhaustedError&) {
    result.exhausted = true;
    return result;
  }
  while (state.scores.selected.size() < l) {
    if (!state.scores.has_candidates()) {
      result.exhausted = true;
      break;
    }
    if (target_reconstructed(state)) {
      result.target_reconstructed = true;
      break;
    }
    try {
      generalized_next(state, a, b);
    } catch (const DependentColumnError&) {
      state.scores.active[detail::best_candidate(state.scores)] = false;
    }
  }
  result.selected = std::move(state.scores.selected);
  return result;
}

}  // namespace colsel
