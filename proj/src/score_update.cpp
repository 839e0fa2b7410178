#include "score_update.hpp"

#include <cmath>
#include <string>

#include "colsel/error.hpp"

namespace colsel::detail {

SelectionState init_scores(const Dense& source, const Dense& target) {
  SelectionState state;
  // One product per column, so a column's scores depend on its data alone
  // (duplicated columns score identically, whatever their position).
  state.f.resize(source.cols());
  state.g.resize(source.cols());
  for (Eigen::Index i = 0; i < source.cols(); ++i) {
    state.f(i) = (target.transpose() * source.col(i)).squaredNorm();
    state.g(i) = source.col(i).squaredNorm();
  }
  state.initial_g = state.g;

  const double floor = kCandidateTolerance * state.g.maxCoeff();
  state.active.resize(static_cast<std::size_t>(source.cols()));
  for (Eigen::Index i = 0; i < source.cols(); ++i) {
    state.active[static_cast<std::size_t>(i)] = state.g(i) > floor;
  }
  if (!state.has_candidates()) {
    throw ExhaustedError("matrix has no nonzero columns to select");
  }
  return state;
}

std::size_t best_candidate(const SelectionState& state) {
  std::size_t best = state.active.size();
  double best_score = 0.0;
  for (std::size_t i = 0; i < state.active.size(); ++i) {
    if (!state.active[i]) continue;
    const auto k = static_cast<Eigen::Index>(i);
    const double score = state.f(k) / state.g(k);
    if (best == state.active.size() || score > best_score) {
      best = i;
      best_score = score;
    }
  }
  if (best == state.active.size()) {
    throw ExhaustedError("no active candidate columns remain");
  }
  return best;
}

void apply_selection(SelectionState& state, const Dense& source, const Dense& target,
                     std::vector<Vector>* upsilon_history, std::size_t p) {
  const auto pk = static_cast<Eigen::Index>(p);
  const std::vector<Vector>& omegas = state.omega_history;
  const std::vector<Vector>& upsilons = upsilon_history ? *upsilon_history : omegas;

  // delta = G_:p = E^T E_:p = A^T E_:p, because E_:p is orthogonal to the
  // selected span. Forming E_:p against the stored basis (two Gram-Schmidt
  // passes) instead of subtracting earlier omegas from A^T A_:p keeps the
  // pivot accurate; the Gram form squares the conditioning of A_:S.
  Vector residual = source.col(pk);
  for (int pass = 0; pass < 2; ++pass) {
    for (const Vector& q : state.basis_history) residual -= q.dot(residual) * q;
  }
  const double pivot = residual.squaredNorm();
  if (!(pivot > kCandidateTolerance * state.initial_g(pk))) {
    throw DependentColumnError("column " + std::to_string(p) +
                               " is numerically dependent on the selected columns");
  }
  const double root = std::sqrt(pivot);
  Vector q = residual / root;
  // omega = delta / sqrt(delta_p)
  Vector omega = source.transpose() * q;

  // gamma = H_:p = B^T E_:p for a distinct target; upsilon = gamma / sqrt(delta_p).
  Vector upsilon;
  if (upsilon_history) upsilon = target.transpose() * q;
  const Vector& ups = upsilon_history ? upsilon : omega;

  // H^T upsilon over all candidates, using every earlier pick in the history.
  Vector h = source.transpose() * (target * ups);
  for (std::size_t r = 0; r < omegas.size(); ++r) h -= upsilons[r].dot(ups) * omegas[r];

  state.f.array() += -2.0 * omega.array() * h.array() + ups.squaredNorm() * omega.array().square();
  state.g.array() -= omega.array().square();

  if (upsilon_history) upsilon_history->push_back(std::move(upsilon));
  state.omega_history.push_back(std::move(omega));
  state.basis_history.push_back(std::move(q));
  state.selected.push_back(p);
  state.active[p] = false;

  for (std::size_t i = 0; i < state.active.size(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    if (state.active[i] && state.g(k) <= kCandidateTolerance * state.initial_g(k)) {
      state.active[i] = false;
    }
  }
}

}  // namespace colsel::detail
