#include <doctest.h>

#include <cmath>

#include "colsel/error.hpp"
#include "colsel/greedy.hpp"
#include "colsel/linalg.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace colsel;
using namespace colsel::testing;

namespace {

double rel(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("project_onto_columns") {
    const Matrix i2 = Matrix::identity(2);
    CHECK(project_onto_columns(i2, {0}, i2.dense()) == (Dense(2, 2) << 1, 0, 0, 0).finished());

    const Matrix v = Matrix::from_rows({{3}, {4}});
    CHECK(relative_frobenius(project_onto_columns(v, {0}, v.dense()), v.dense()) < 1e-15);

    const Matrix a = random_matrix(6, 4, 11);
    const Dense p = project_onto_columns(a, {0, 2}, a.dense());
    CHECK(relative_frobenius(p, normal_equation_projection(a.dense(), {0, 2}, a.dense())) < 1e-10);

    CHECK_THROWS_AS(project_onto_columns(a, {0}, Dense::Ones(5, 1)), DimensionError);
  }

  TEST_CASE("degenerate bases name the offending columns") {
    Dense d = gaussian_dense(5, 4, 3);
    d.col(2) = 2.0 * d.col(0) - d.col(1);
    d.col(3) = d.col(0);
    const Matrix a(d);
    try {
      orthonormal_basis(a, {0, 1, 2, 3});
      FAIL("expected DegenerateBasisError");
    } catch (const DegenerateBasisError& e) {
      CHECK(e.indices() == std::vector<std::size_t>{2, 3});
    }
    CHECK_THROWS_AS(css_criterion(a, {0, 3}), DegenerateBasisError);
    CHECK(span_basis(d).cols() == 2);
  }

  TEST_CASE("css_criterion") {
    const Matrix a = random_matrix(8, 5, 21);
    CHECK(css_criterion(a, {}) == doctest::Approx(a.frobenius_sq()).epsilon(1e-15));
    CHECK(css_criterion(a, {0, 1, 2, 3, 4}) <= 1e-9 * a.frobenius_sq());

    // rank-one projection written out directly
    const Vector c = a.col(1);
    const Dense direct = a.dense() - c * (c.transpose() * a.dense()) / c.squaredNorm();
    CHECK(rel(css_criterion(a, {1}), direct.squaredNorm()) < 1e-12);
  }

  TEST_CASE("orthonormal_basis") {
    const Matrix e = Matrix::identity(4);
    const Dense q = orthonormal_basis(e, {1, 3});
    CHECK((q * q.transpose() * gather_columns(e.dense(), {1, 3}) -
           gather_columns(e.dense(), {1, 3})).norm() < 1e-10);

    const Matrix col = Matrix::from_rows({{0}, {3}, {4}});
    const Dense q1 = orthonormal_basis(col, {0});
    CHECK(std::abs(q1(0, 0)) < 1e-15);
    CHECK(std::abs(std::abs(q1(1, 0)) - 0.6) < 1e-15);
    CHECK(std::abs(std::abs(q1(2, 0)) - 0.8) < 1e-15);
    CHECK(q1(1, 0) * q1(2, 0) > 0);

    const Matrix a = random_matrix(10, 3, 31);
    const Dense qa = orthonormal_basis(a, {0, 1, 2});
    CHECK((qa.transpose() * qa - Dense::Identity(3, 3)).norm() < 1e-10);
    CHECK(relative_frobenius(qa * qa.transpose() * a.dense(), a.dense()) < 1e-9);

    CHECK(orthonormal_basis(a, {}).cols() == 0);
  }

  TEST_CASE("embed_columns") {
    const Matrix i3 = Matrix::identity(3);
    CHECK(embed_columns(i3, {0, 1}) == Dense::Identity(3, 3).topRows(2));

    const Matrix sq = random_matrix(5, 5, 41);
    CHECK(rel(embed_columns(sq, {0, 1, 2, 3, 4}).norm(), std::sqrt(sq.frobenius_sq())) < 1e-10);

    const Matrix a = random_matrix(7, 5, 42);
    const Dense w = embed_columns(a, {0, 3});
    CHECK(w.rows() == 2);
    CHECK(w.cols() == 5);
    const double pythagoras = a.frobenius_sq() - w.squaredNorm();
    CHECK(rel(pythagoras, normal_equation_criterion(a.dense(), {0, 3})) < 1e-9);
  }

  TEST_CASE("rank_k_column_approx") {
    const Matrix a = random_matrix(9, 6, 51);
    const Dense full = rank_k_column_approx(a, {0, 1, 4}, 3);
    CHECK(relative_frobenius(full, normal_equation_projection(a.dense(), {0, 1, 4}, a.dense())) <
          1e-9);
    CHECK_THROWS_AS(rank_k_column_approx(a, {0, 1, 4}, 0), InvalidRankError);
    CHECK_THROWS_AS(rank_k_column_approx(a, {0, 1, 4}, 4), InvalidRankError);

    const double err2 = (a.dense() - rank_k_column_approx(a, {0, 1, 4}, 2)).squaredNorm();
    const double err3 = (a.dense() - full).squaredNorm();
    CHECK(err2 >= jacobi_rank_k_error_sq(a.dense(), 2) * (1 - 1e-12));
    // truncating to k = 2 can only lose accuracy relative to the untruncated k = 3
    CHECK(err3 <= err2 * (1 + 1e-12));
    // and the loss is exactly the discarded singular value of W = Q^T A
    const double sigma3 = exact_svd(embed_columns(a, {0, 1, 4})).singular_values(2);
    CHECK(rel(err2, err3 + sigma3 * sigma3) < 1e-9);
  }

  TEST_CASE("approx_svd_from_columns") {
    const Matrix a = low_rank_matrix(10, 7, 3, 61);
    // three generic columns span the whole column space
    const SvdResult approx = approx_svd_from_columns(a, {0, 1, 2}, 3);
    const Eigen::VectorXd exact = jacobi_singular_values(a.dense());
    for (Eigen::Index k = 0; k < 3; ++k) {
      CHECK(rel(approx.singular_values(k), exact(k)) < 1e-8);
    }
    CHECK((approx.u.transpose() * approx.u - Dense::Identity(3, 3)).norm() < 1e-8);

    const Matrix b = random_matrix(9, 6, 62);
    const SvdResult two = approx_svd_from_columns(b, {0, 1, 4}, 2);
    CHECK(relative_frobenius(two.reconstruct(), rank_k_column_approx(b, {0, 1, 4}, 2)) < 1e-9);

    const Matrix c = random_matrix(12, 8, 63);
    const ColumnSet picks = greedy_select(c, 4).selected;
    const SvdResult s = approx_svd_from_columns(c, picks, 2);
    CHECK(s.singular_values(0) <= jacobi_singular_values(c.dense())(0) * (1 + 1e-8));
    CHECK(s.singular_values(0) >= s.singular_values(1));
  }

  TEST_CASE("exact_svd satisfies the SvdResult invariants") {
    const Matrix a = random_matrix(9, 5, 71);
    const SvdResult s = exact_svd(a.dense());
    CHECK((s.u.transpose() * s.u - Dense::Identity(5, 5)).norm() < 1e-8);
    CHECK((s.v.transpose() * s.v - Dense::Identity(5, 5)).norm() < 1e-8);
    for (Eigen::Index k = 0; k + 1 < s.singular_values.size(); ++k) {
      CHECK(s.singular_values(k) >= s.singular_values(k + 1));
    }
    CHECK(s.singular_values.minCoeff() >= 0);
    CHECK(relative_frobenius(s.reconstruct(), a.dense()) < 1e-12);
    CHECK((s.singular_values - jacobi_singular_values(a.dense())).norm() < 1e-12);
  }

  TEST_CASE("randomized_svd") {
    Dense diag = Dense::Zero(5, 5);
    for (int k = 0; k < 5; ++k) diag(k, k) = 5 - k;
    const SvdResult d = randomized_svd(Matrix(diag), 2, 3, 2, 1);
    CHECK(std::abs(d.singular_values(0) - 5) < 1e-6);
    CHECK(std::abs(d.singular_values(1) - 4) < 1e-6);

    const Matrix a = random_matrix(50, 40, 81);
    const SvdResult r1 = randomized_svd(a, 5, 10, 2, 99);
    const SvdResult r2 = randomized_svd(a, 5, 10, 2, 99);
    CHECK(r1.singular_values == r2.singular_values);
    CHECK(r1.u == r2.u);

    const double err = (a.dense() - r1.reconstruct()).norm();
    const double best = std::sqrt(jacobi_rank_k_error_sq(a.dense(), 5));
    CHECK(err <= 1.05 * best);
    CHECK((r1.u.transpose() * r1.u - Dense::Identity(5, 5)).norm() < 1e-8);
    CHECK((r1.v.transpose() * r1.v - Dense::Identity(5, 5)).norm() < 1e-8);

    CHECK_THROWS_AS(randomized_svd(a, 41, 10, 2, 1), InvalidRankError);
    CHECK_THROWS_AS(randomized_svd(a, 0, 10, 2, 1), InvalidRankError);
  }

  TEST_CASE("best_rank_k_error_sq matches the Jacobi oracle") {
    const Matrix a = random_matrix(20, 15, 91);
    for (std::size_t k : {1u, 5u, 14u}) {
      CHECK(rel(best_rank_k_error_sq(a, k), jacobi_rank_k_error_sq(a.dense(), k)) < 1e-9);
    }
    CHECK(best_rank_k_error_sq(a, 15) == 0.0);
  }

  TEST_CASE("projection contract and Pythagoras over seeded inputs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Matrix a = random_matrix(12, 9, 100 + seed);
      const ColumnSet s{seed % 9, (seed + 4) % 9, (seed + 7) % 9};
      const Dense p = project_onto_columns(a, s, a.dense());
      const Dense pp = project_onto_columns(a, s, p);
      CHECK(relative_frobenius(pp, p) < 1e-10);
      const double inner = ((a.dense() - p).cwiseProduct(p)).sum();
      CHECK(std::abs(inner) <= 1e-9 * a.frobenius_sq());
      CHECK(rel(css_criterion(a, s), a.frobenius_sq() - p.squaredNorm()) < 1e-9);

      // monotonicity along a chain of supersets, and the SVD floor
      ColumnSet grow;
      double previous = css_criterion(a, grow);
      for (std::size_t j = 0; j < 9; ++j) {
        grow.push_back((j * 4 + seed) % 9);
        const double now = css_criterion(a, grow);
        CHECK(now <= previous + 1e-9 * a.frobenius_sq());
        CHECK(now >= jacobi_rank_k_error_sq(a.dense(), grow.size()) - 1e-9 * a.frobenius_sq());
        previous = now;
      }
    }
  }
}
