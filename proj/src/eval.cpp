#include "colsel/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "colsel/error.hpp"
#include "colsel/generalized.hpp"
#include "colsel/linalg.hpp"
#include "colsel/seed.hpp"

namespace colsel {

namespace {

void check_oracle_scale(const Matrix& a) {
  if (a.rows() > kOracleLimit || a.cols() > kOracleLimit) {
    throw OracleScaleError("naive oracles accept at most " + std::to_string(kOracleLimit) +
                           " rows and columns");
  }
}

void check_budget(std::size_t l, std::size_t n) {
  if (l < 1 || l > n) {
    throw InvalidArgument("column budget l=" + std::to_string(l) + " must satisfy 1 <= l <= " +
                          std::to_string(n));
  }
}

// Residual of A (or B) after projecting on span(A_:S); E = A when S is empty.
Dense residual(const Matrix& a, const ColumnSet& s, const Dense& x) {
  if (s.empty()) return x;
  return x - project_onto_columns(a, s, x);
}

// Candidates still eligible under the production exclusion rules, judged from
// the explicit residual E.
std::vector<std::size_t> eligible(const Matrix& a, const ColumnSet& s, const Dense& e) {
  const Vector initial = a.dense().colwise().squaredNorm().transpose();
  const double floor = kCandidateTolerance * initial.maxCoeff();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    if (s.contains(i) || initial(k) <= floor) continue;
    if (e.col(k).squaredNorm() <= kCandidateTolerance * initial(k)) continue;
    out.push_back(i);
  }
  return out;
}

}  // namespace

RelativeAccuracy relative_accuracy_detail(const Matrix& a, const ColumnSet& s,
                                          std::size_t uniform_trials, std::uint64_t seed) {
  if (s.empty()) throw InvalidArgument("relative accuracy needs a nonempty selection");
  if (uniform_trials < 1) throw InvalidArgument("uniform_trials must be at least 1");
  s.check_bounds(a.cols());
  const std::size_t l = s.size();

  RelativeAccuracy out;
  double total = 0.0;
  for (std::size_t t = 0; t < uniform_trials; ++t) {
    total += std::sqrt(span_residual_sq(a, uniform_select(a.cols(), l, seed + t)));
  }
  out.uniform_error = total / static_cast<double>(uniform_trials);
  out.selection_error = std::sqrt(span_residual_sq(a, s));
  out.svd_error = std::sqrt(best_rank_k_error_sq(a, l, derive_seed(seed, streams::svd)));

  const double denominator = out.uniform_error - out.svd_error;
  if (denominator <= 1e-12 * std::sqrt(a.frobenius_sq())) {
    throw UndefinedMetricError("uniform sampling already matches the rank-" + std::to_string(l) +
                               " SVD error; relative accuracy is undefined");
  }
  out.percent = (out.uniform_error - out.selection_error) / denominator * 100.0;
  return out;
}

double relative_accuracy(const Matrix& a, const ColumnSet& s, std::size_t uniform_trials,
                         std::uint64_t seed) {
  return relative_accuracy_detail(a, s, uniform_trials, seed).percent;
}

ColumnSet uniform_select(std::size_t n, std::size_t l, std::uint64_t seed) {
  if (l > n) throw InvalidArgument("cannot draw " + std::to_string(l) + " of " + std::to_string(n));
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<std::size_t> picked;
  picked.reserve(l);
  std::mt19937_64 engine(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(picked), l, engine);
  return ColumnSet(std::move(picked));
}

std::string_view to_string(SamplingMode mode) {
  switch (mode) {
    case SamplingMode::uniform: return "uniform";
    case SamplingMode::column_norm: return "column-norm";
    case SamplingMode::svd_rows: return "svd-rows";
  }
  return "unknown";
}

SelectionResult hybrid_select(const Matrix& a, std::size_t l, SamplingMode mode,
                              std::uint64_t seed) {
  const std::size_t n = a.cols();
  if (l < 2) throw InvalidArgument("hybrid selection needs l >= 2");
  check_budget(l, n);

  std::vector<double> weights(n, 1.0);
  if (mode == SamplingMode::column_norm) {
    for (std::size_t i = 0; i < n; ++i) weights[i] = a.col(i).squaredNorm();
  } else if (mode == SamplingMode::svd_rows) {
    const std::size_t k = std::min(l, std::min(a.rows(), n));
    const SvdResult svd = randomized_svd(a, k, 10, 2, derive_seed(seed, streams::svd));
    for (std::size_t i = 0; i < n; ++i) {
      weights[i] = svd.v.row(static_cast<Eigen::Index>(i)).squaredNorm();
    }
  }
  if (std::accumulate(weights.begin(), weights.end(), 0.0) <= 0.0) {
    throw DegenerateDistributionError("sampling probabilities have zero total mass");
  }

  const auto target = static_cast<std::size_t>(
      std::ceil(static_cast<double>(l) * std::log(static_cast<double>(l))));
  const std::size_t draws = std::min(n, std::max(target, l));
  std::mt19937_64 engine(derive_seed(seed, streams::hybrid));
  std::vector<std::size_t> sampled;
  while (sampled.size() < draws &&
         std::accumulate(weights.begin(), weights.end(), 0.0) > 0.0) {
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    const std::size_t i = pick(engine);
    sampled.push_back(i);
    weights[i] = 0.0;
  }
  std::sort(sampled.begin(), sampled.end());

  const ColumnSet pool(sampled);
  SelectionResult local = greedy_select(gather_columns(a, pool), std::min(l, pool.size()));
  SelectionResult out;
  for (auto j : local.selected) out.selected.push_back(sampled[j]);
  out.exhausted = out.selected.size() < l;
  return out;
}

SelectionResult sketch_svd_select(const Matrix& a, std::size_t l, std::size_t k,
                                  std::uint64_t seed) {
  check_budget(l, a.cols());
  const SvdResult svd = randomized_svd(a, k, 10, 2, seed);
  const Matrix target(svd.u * svd.singular_values.asDiagonal());
  return generalized_select(a, target, l);
}

SelectionResult naive_greedy_oracle(const Matrix& a, std::size_t l) {
  check_oracle_scale(a);
  check_budget(l, a.cols());
  const double tie = 1e-9 * a.frobenius_sq();

  SelectionResult out;
  while (out.selected.size() < l) {
    const Dense e = residual(a, out.selected, a.dense());
    const auto candidates = eligible(a, out.selected, e);
    if (candidates.empty()) {
      out.exhausted = true;
      break;
    }
    std::vector<double> errors;
    for (auto i : candidates) {
      ColumnSet trial = out.selected;
      trial.push_back(i);
      errors.push_back(css_criterion(a, trial));
    }
    const double best = *std::min_element(errors.begin(), errors.end());
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (errors[k] <= best + tie) {
        out.selected.push_back(candidates[k]);
        break;
      }
    }
  }
  return out;
}

SelectionResult naive_generalized_oracle(const Matrix& a, const Matrix& b, std::size_t l) {
  check_oracle_scale(a);
  check_budget(l, a.cols());
  if (a.rows() != b.rows()) throw DimensionError("source and target row counts differ");
  const double target_sq = b.frobenius_sq();
  const double tie = 1e-9 * target_sq;

  SelectionResult out;
  while (out.selected.size() < l) {
    const Dense e = residual(a, out.selected, a.dense());
    const Dense f = residual(a, out.selected, b.dense());
    const Dense h = f.transpose() * e;
    const auto candidates = eligible(a, out.selected, e);
    if (candidates.empty()) {
      out.exhausted = true;
      break;
    }
    std::vector<double> scores;
    double max_num = 0.0;
    double max_den = 0.0;
    for (auto i : candidates) {
      const auto k = static_cast<Eigen::Index>(i);
      const double num = h.col(k).squaredNorm();
      const double den = e.col(k).squaredNorm();
      max_num = std::max(max_num, num);
      max_den = std::max(max_den, den);
      scores.push_back(num / den);
    }
    if (max_num <= 1e-12 * target_sq * max_den) {
      out.target_reconstructed = true;
      break;
    }
    const double best = *std::max_element(scores.begin(), scores.end());
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (scores[k] >= best - tie) {
        out.selected.push_back(candidates[k]);
        break;
      }
    }
  }
  return out;
}

}  // namespace colsel
