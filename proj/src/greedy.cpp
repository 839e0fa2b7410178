#include "colsel/greedy.hpp"

#include <algorithm>
#include <string>

#include "colsel/error.hpp"
#include "score_update.hpp"

namespace colsel {

std::size_t SelectionState::active_count() const {
  return static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
}

SelectionState init_state(const Matrix& a) {
  return detail::init_scores(a.dense(), a.dense());
}

std::size_t select_next(SelectionState& state, const Matrix& a) {
  const std::size_t p = detail::best_candidate(state);
  detail::apply_selection(state, a.dense(), a.dense(), nullptr, p);
  return p;
}

SelectionResult greedy_select(const Matrix& a, std::size_t l) {
  if (l < 1 || l > a.cols()) {
    throw InvalidArgument("column budget l=" + std::to_string(l) + " must satisfy 1 <= l <= " +
                          std::to_string(a.cols()));
  }
  SelectionResult result;
  SelectionState state;
  try {
    state = init_state(a);
  } catch (const ExhaustedError&) {
    result.exhausted = true;
    return result;
  }
  while (state.selected.size() < l) {
    if (!state.has_candidates()) {
      result.exhausted = true;
      break;
    }
    try {
      select_next(state, a);
    } catch (const DependentColumnError&) {
      // scores drifted above the exclusion threshold; the exact pivot decides
      state.active[detail::best_candidate(state)] = false;
    }
  }
  result.selected = std::move(state.selected);
  return result;
}

}  // namespace colsel
