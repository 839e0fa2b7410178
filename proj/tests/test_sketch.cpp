#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "colsel/distributed.hpp"
#include "colsel/error.hpp"
#include "colsel/eval.hpp"
#include "colsel/linalg.hpp"
#include "colsel/sketch.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace colsel;
using namespace colsel::testing;

namespace {

// Omega materialized row by row, for the direct-multiply oracle.
Dense materialize(const SketchSpec& spec, std::size_t n) {
  Dense omega(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(spec.r));
  for (std::size_t i = 0; i < n; ++i) omega.row(static_cast<Eigen::Index>(i)) = omega_row(spec, i);
  return omega;
}

std::vector<ColumnPartition> split(const Matrix& a, std::vector<std::size_t> sizes) {
  std::vector<ColumnPartition> parts;
  std::size_t start = 0;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    std::vector<std::size_t> idx(sizes[b]);
    std::iota(idx.begin(), idx.end(), start);
    parts.push_back({b, gather_columns(a, ColumnSet(idx)), idx});
    start += sizes[b];
  }
  return parts;
}

}  // namespace

TEST_SUITE("sketch") {
  TEST_CASE("kind names round-trip") {
    for (auto k : {SketchKind::gaussian, SketchKind::sign, SketchKind::sparse_sign,
                   SketchKind::identity}) {
      CHECK(parse_sketch_kind(to_string(k)) == k);
    }
    CHECK(to_string(SketchKind::sparse_sign) == "sparse-sign");
    CHECK_THROWS_AS(parse_sketch_kind("cauchy"), InvalidArgument);
  }

  TEST_CASE("omega_row") {
    const SketchSpec id{SketchKind::identity, 5, 0};
    const Vector e2 = omega_row(id, 2);
    CHECK(e2 == Vector::Unit(5, 2));
    CHECK_THROWS_AS(omega_row(id, 5), BoundsError);

    const SketchSpec g{SketchKind::gaussian, 64, 123};
    Vector from_thread;
    std::thread worker([&] { from_thread = omega_row(g, 17); });
    worker.join();
    const Vector here = omega_row(g, 17);
    CHECK(from_thread == here);
    CHECK(omega_row(g, 16) != here);
    CHECK(omega_row(SketchSpec{SketchKind::gaussian, 64, 124}, 17) != here);
  }

  TEST_CASE("gaussian entries are standard normal") {
    const Vector v = omega_row(SketchSpec{SketchKind::gaussian, 1000, 42}, 0);
    const double mean = v.mean();
    const double var = (v.array() - mean).square().sum() / (v.size() - 1);
    CHECK(std::abs(mean) <= 4.0 / std::sqrt(1000.0));
    CHECK(std::abs(var - 1.0) <= 0.15);
  }

  TEST_CASE("sign and sparse-sign entry distributions") {
    std::size_t plus = 0;
    std::size_t total = 0;
    for (std::size_t i = 0; i < 20; ++i) {
      const Vector v = omega_row(SketchSpec{SketchKind::sign, 500, 7}, i);
      for (double x : v) {
        CHECK(std::abs(x) == 1.0);
        plus += x > 0;
        ++total;
      }
    }
    // binomial(10000, 1/2): sd = 50
    CHECK(std::abs(static_cast<double>(plus) - total / 2.0) < 4 * 50);

    std::size_t zeros = 0;
    std::size_t pos = 0;
    std::size_t neg = 0;
    const double s3 = std::sqrt(3.0);
    for (std::size_t i = 0; i < 20; ++i) {
      const Vector v = omega_row(SketchSpec{SketchKind::sparse_sign, 600, 8}, i);
      for (double x : v) {
        if (x == 0.0) ++zeros;
        else if (x == s3) ++pos;
        else if (x == -s3) ++neg;
        else FAIL("unexpected sparse-sign entry " << x);
      }
    }
    // 12000 draws: expected 8000 zeros (sd ~52), 2000 of each sign (sd ~41)
    CHECK(std::abs(static_cast<double>(zeros) - 8000) < 4 * 52);
    CHECK(std::abs(static_cast<double>(pos) - 2000) < 4 * 41);
    CHECK(std::abs(static_cast<double>(neg) - 2000) < 4 * 41);
  }

  TEST_CASE("sketch_matrix") {
    const Matrix a = random_matrix(6, 4, 1);
    CHECK(sketch_matrix(a, SketchSpec{SketchKind::identity, 4, 0}) == a.dense());
    CHECK_THROWS_AS(sketch_matrix(a, SketchSpec{SketchKind::identity, 3, 0}), DimensionError);
    CHECK_THROWS_AS(sketch_matrix(a, SketchSpec{SketchKind::gaussian, 0, 0}), InvalidArgument);

    Dense one = Dense::Zero(5, 7);
    one.col(3) = gaussian_dense(5, 1, 2).col(0);
    const SketchSpec spec{SketchKind::gaussian, 3, 9};
    const Dense expected = one.col(3) * omega_row(spec, 3).transpose();
    CHECK(sketch_matrix(Matrix(one), spec) == expected);

    const Matrix b = random_matrix(30, 50, 3);
    for (auto kind : {SketchKind::gaussian, SketchKind::sign, SketchKind::sparse_sign}) {
      const SketchSpec s{kind, 10, 77};
      const Dense direct = b.dense() * materialize(s, 50);
      CHECK(relative_frobenius(sketch_matrix(b, s), direct) < 1e-10);
    }
  }

  TEST_CASE("column processing order does not matter") {
    const Matrix a = random_matrix(12, 20, 5);
    const SketchSpec spec{SketchKind::gaussian, 6, 5};
    std::vector<std::size_t> order(20);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(5);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(relative_frobenius(sketch_matrix(a, spec, order), sketch_matrix(a, spec)) < 1e-9);
    order[0] = order[1];
    CHECK_THROWS_AS(sketch_matrix(a, spec, order), InvalidArgument);
  }

  TEST_CASE("sketch_partitioned") {
    const Matrix a = random_matrix(20, 40, 6);
    const SketchSpec spec{SketchKind::gaussian, 8, 6};
    const Dense whole = sketch_matrix(a, spec);

    const auto single = split(a, {40});
    CHECK(sketch_partitioned(single, spec) == whole);

    const auto two = split(a, {25, 15});
    CHECK(relative_frobenius(sketch_partitioned(two, spec), whole) < 1e-12);

    const auto three = split(a, {14, 13, 13});
    const Dense direct = a.dense() * materialize(spec, 40);
    CHECK(relative_frobenius(sketch_partitioned(three, spec), direct) < 1e-9);
    CHECK(sketch_partitioned(three, spec, 3) == sketch_partitioned(three, spec, 1));

    // round-robin tiling from the distributed module
    const auto rr = partition_columns(a, 3, Assignment::round_robin);
    CHECK(relative_frobenius(sketch_partitioned(rr, spec), whole) < 1e-9);
  }

  TEST_CASE("sketch_partitioned rejects bad tilings") {
    const Matrix a = random_matrix(5, 6, 7);
    const SketchSpec spec{SketchKind::gaussian, 2, 7};
    auto parts = split(a, {3, 3});
    parts[1].global_index = {2, 4, 5};
    CHECK_THROWS_AS(sketch_partitioned(parts, spec), TilingError);

    parts = split(a, {3, 3});
    parts[1].global_index = {3, 4, 7};
    CHECK_THROWS_AS(sketch_partitioned(parts, spec), TilingError);

    parts = split(a, {3, 3});
    parts[1].columns = random_matrix(4, 3, 8);
    CHECK_THROWS_AS(sketch_partitioned(parts, spec), DimensionError);

    parts = split(a, {3, 3});
    parts[0].global_index.pop_back();
    CHECK_THROWS_AS(sketch_partitioned(parts, spec), DimensionError);
  }

  TEST_CASE("row distances are preserved") {
    const Matrix x = random_matrix(100, 200, 8);
    const SketchSpec spec{SketchKind::gaussian, 400, 8};
    const Dense y = sketch_matrix(x, spec) / std::sqrt(400.0);
    std::size_t good = 0;
    std::size_t pairs = 0;
    for (Eigen::Index i = 0; i < 100; ++i) {
      for (Eigen::Index j = i + 1; j < 100; ++j) {
        const double before = (x.dense().row(i) - x.dense().row(j)).squaredNorm();
        const double after = (y.row(i) - y.row(j)).squaredNorm();
        const double ratio = after / before;
        good += ratio >= 0.7 && ratio <= 1.3;
        ++pairs;
      }
    }
    CHECK(pairs == 4950);
    CHECK(static_cast<double>(good) >= 0.95 * static_cast<double>(pairs));
  }

  TEST_CASE("sketched criterion tracks the exact criterion") {
    std::size_t good = 0;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
      const Matrix a = random_matrix(50, 80, 1000 + trial);
      const ColumnSet s = uniform_select(80, 5, 2000 + trial);
      const Matrix b(sketch_matrix(a, SketchSpec{SketchKind::gaussian, 200, 3000 + trial}));
      const double exact = css_criterion(a, s);
      const double sketched = target_criterion(a, s, b) / 200.0;
      good += std::abs(sketched - exact) <= 0.35 * exact;
    }
    CHECK(good >= 90);
  }
}
