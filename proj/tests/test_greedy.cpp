#include <doctest.h>

#include <cmath>

#include "colsel/error.hpp"
#include "colsel/eval.hpp"
#include "colsel/generalized.hpp"
#include "colsel/greedy.hpp"
#include "colsel/linalg.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace colsel;
using namespace colsel::testing;

namespace {

double rel(double x, double ref) {
  const double scale = std::max(std::abs(ref), 1e-300);
  return std::abs(x - ref) / scale;
}

// Checks f and g of every active candidate against the explicit residual Gram.
void check_scores(const SelectionState& state, const Matrix& a) {
  const DirectScores direct = direct_scores(a.dense(), a.dense(), state.selected.indices());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    if (!state.active[i]) continue;
    const auto k = static_cast<Eigen::Index>(i);
    CHECK(rel(state.g(k), direct.g(k)) < 1e-8);
    CHECK(rel(state.f(k), direct.f(k)) < 1e-8);
    CHECK(state.g(k) >= -1e-9 * state.initial_g(k));
  }
}

}  // namespace

TEST_SUITE("greedy") {
  TEST_CASE("init_state") {
    const SelectionState s = init_state(Matrix::identity(2));
    CHECK(s.f == Vector::Ones(2));
    CHECK(s.g == Vector::Ones(2));
    CHECK(s.omega_history.empty());
    CHECK(s.selected.empty());

    Dense d = gaussian_dense(5, 3, 1);
    d.col(1) = d.col(0);
    const SelectionState dup = init_state(Matrix(d));
    CHECK(dup.f(0) == dup.f(1));
    CHECK(dup.g(0) == dup.g(1));

    const Matrix a = random_matrix(6, 4, 2);
    const SelectionState r = init_state(a);
    const Dense gram = a.dense().transpose() * a.dense();
    for (Eigen::Index i = 0; i < 4; ++i) {
      CHECK(rel(r.f(i), gram.col(i).squaredNorm()) < 1e-10);
      CHECK(rel(r.g(i), gram(i, i)) < 1e-10);
    }

    CHECK_THROWS_AS(init_state(Matrix(Dense::Zero(3, 3))), ExhaustedError);
  }

  TEST_CASE("negligible columns start inactive") {
    Dense d = gaussian_dense(4, 3, 5);
    d.col(1) *= 1e-7;  // squared norm ratio 1e-14 < 1e-12
    const SelectionState s = init_state(Matrix(d));
    CHECK(s.active[0]);
    CHECK_FALSE(s.active[1]);
    CHECK(s.active[2]);
  }

  TEST_CASE("select_next on orthogonal columns picks the largest norm") {
    Dense d = Dense::Zero(4, 3);
    d(0, 0) = 1;
    d(1, 1) = 3;
    d(2, 2) = 2;
    const Matrix a(d);
    SelectionState s = init_state(a);
    CHECK(select_next(s, a) == 1);
    CHECK(select_next(s, a) == 2);
    CHECK(select_next(s, a) == 0);
    CHECK_THROWS_AS(select_next(s, a), ExhaustedError);
  }

  TEST_CASE("duplicated columns are eliminated") {
    Dense d = gaussian_dense(5, 3, 7);
    d.col(1) = d.col(0);
    d.col(0) *= 4;  // make column 0 the first pick
    d.col(1) *= 4;
    const Matrix a(d);
    SelectionState s = init_state(a);
    const std::size_t p = select_next(s, a);
    const std::size_t other = p == 0 ? 1 : 0;
    REQUIRE((p == 0 || p == 1));
    CHECK(s.g(static_cast<Eigen::Index>(other)) <= 1e-9 * s.initial_g(static_cast<Eigen::Index>(other)));
    CHECK_FALSE(s.active[other]);
    CHECK(s.selected.size() == s.omega_history.size());
    CHECK_FALSE(s.active[p]);
  }

  TEST_CASE("greedy_select contracts") {
    CHECK(greedy_select(Matrix::identity(3), 3).selected == ColumnSet{0, 1, 2});

    const Matrix parallel = Matrix::from_rows({{1, 2, -3}, {2, 4, -6}, {0.5, 1, -1.5}});
    const SelectionResult one = greedy_select(parallel, 3);
    CHECK(one.selected.size() == 1);
    CHECK(one.exhausted);

    const Matrix a = random_matrix(4, 6, 9);
    CHECK_THROWS_AS(greedy_select(a, 0), InvalidArgument);
    CHECK_THROWS_AS(greedy_select(a, 7), InvalidArgument);

    const SelectionResult zero = greedy_select(Matrix(Dense::Zero(3, 2)), 1);
    CHECK(zero.selected.empty());
    CHECK(zero.exhausted);
  }

  TEST_CASE("greedy_select matches the naive oracle") {
    const Matrix a = graded_matrix(8, 12, 13);
    SelectionState s = init_state(a);
    ColumnSet steps;
    for (int t = 0; t < 4; ++t) steps.push_back(select_next(s, a));
    CHECK(steps == naive_greedy_oracle(a, 4).selected);

    const Matrix b = random_matrix(20, 30, 14);
    const ColumnSet g = greedy_select(b, 5).selected;
    const ColumnSet o = naive_greedy_oracle(b, 5).selected;
    CHECK(g == o);
    CHECK(rel(css_criterion(b, g), normal_equation_criterion(b.dense(), o.indices())) < 1e-9);
  }

  TEST_CASE("score consistency, telescoping and descent") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const std::size_t m = 6 + seed % 20;
      const std::size_t n = 5 + (seed * 7) % 25;
      const Matrix a = random_matrix(m, n, 300 + seed);
      SelectionState s = init_state(a);
      double previous = a.frobenius_sq();
      // stop short of full rank: the relative check is meaningless once F = 0
      for (std::size_t t = 0; t < std::min<std::size_t>(6, std::min(m, n) - 1); ++t) {
        const Vector f = s.f;
        const Vector g = s.g;
        const std::size_t p = select_next(s, a);
        const auto k = static_cast<Eigen::Index>(p);
        const double now = normal_equation_criterion(a.dense(), s.selected.indices());
        CHECK(rel(now, previous - f(k) / g(k)) < 1e-8);
        CHECK(now <= previous + 1e-9 * a.frobenius_sq());
        check_scores(s, a);
        previous = now;
      }
    }
  }

  TEST_CASE("exact cover stops at the rank") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Matrix a = low_rank_matrix(15, 20, 4, 400 + seed);
      const SelectionResult r = greedy_select(a, 8);
      CHECK(r.selected.size() == 4);
      CHECK(r.exhausted);
      CHECK(normal_equation_criterion(a.dense(), r.selected.indices()) <= 1e-9 * a.frobenius_sq());
    }
  }

  TEST_CASE("exhaustion survives ill-conditioned selected columns") {
    // the first five picks here leave a residual that the Gram-form update
    // can only resolve to about 1e-11 of the column norm
    const Matrix a = low_rank_matrix(24, 25, 6, 120'004);
    const SelectionResult r = greedy_select(a, 7);
    CHECK(r.selected.size() == 6);
    CHECK(r.exhausted);
    CHECK(generalized_select(a, a, 7).selected == r.selected);
  }

  TEST_CASE("deterministic") {
    const Matrix a = random_matrix(30, 40, 500);
    CHECK(greedy_select(a, 10).selected == greedy_select(a, 10).selected);
  }
}
