#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>

#include "cliffcheck/minimal.hpp"
#include "cliffcheck/unitary.hpp"

using Eigen::VectorXd;
using minimal::analytic_mean_curvature;
using minimal::ProductSphereEmbedding;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = std::sqrt(0.5);
}  // namespace

TEST_CASE("analytic mean curvature formula") {
  CHECK(analytic_mean_curvature(4, 4, kInvSqrt2, kInvSqrt2) == doctest::Approx(0.0));
  // (4*(0.8/0.6) - 4*(0.6/0.8)) / 8 = 7/24
  CHECK(analytic_mean_curvature(4, 4, 0.6, 0.8) == doctest::Approx(7.0 / 24).epsilon(1e-12));
  // Clifford torus in S^3
  CHECK(analytic_mean_curvature(1, 1, kInvSqrt2, kInvSqrt2) == doctest::Approx(0.0));
  CHECK_THROWS_AS(analytic_mean_curvature(4, 4, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("embedding invariants") {
  CHECK_THROWS_AS(ProductSphereEmbedding(4, 4, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ProductSphereEmbedding(0, 4, kInvSqrt2, kInvSqrt2), std::invalid_argument);

  const ProductSphereEmbedding e(4, 4, kInvSqrt2, kInvSqrt2);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const VectorXd u = unitary::random_unit_vector(5, rng);
    const VectorXd v = unitary::random_unit_vector(5, rng);
    const VectorXd x = e.embed(u, v);
    CHECK(std::abs(x.squaredNorm() - 1.0) < 1e-12);
    // normal is unit and tangent to the ambient sphere
    const VectorXd nu = e.normal(u, v);
    CHECK(std::abs(nu.squaredNorm() - 1.0) < 1e-12);
    CHECK(std::abs(nu.dot(x)) < 1e-12);
  }
}

TEST_CASE("numeric H matches analytic H across factor shapes") {
  std::mt19937_64 rng(2);
  const double h = 1e-3;
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      const double r = minimal::minimal_radius(p, q);
      const ProductSphereEmbedding e(p, q, r, std::sqrt(1.0 - r * r));
      for (int t = 0; t < 50; ++t) {
        const VectorXd u = unitary::random_unit_vector(p + 1, rng);
        const VectorXd v = unitary::random_unit_vector(q + 1, rng);
        const auto s = minimal::numeric_mean_curvature(e, u, v, h);
        CHECK(std::abs(s.h_numeric - s.h_analytic) < 1e-4);
        CHECK(std::abs(s.h_analytic) < 1e-12);  // minimal radius
      }
      // away from the minimal radius the agreement must hold as well
      const ProductSphereEmbedding tilted(p, q, 0.6, 0.8);
      for (int t = 0; t < 10; ++t) {
        const VectorXd u = unitary::random_unit_vector(p + 1, rng);
        const VectorXd v = unitary::random_unit_vector(q + 1, rng);
        const auto s = minimal::numeric_mean_curvature(tilted, u, v, h);
        CHECK(std::abs(s.h_numeric - s.h_analytic) < 1e-4);
      }
    }
}

TEST_CASE("numeric H at r = 0.6 and off-minimal radii") {
  std::mt19937_64 rng(3);
  const ProductSphereEmbedding e(4, 4, 0.6, 0.8);
  for (int t = 0; t < 20; ++t) {
    const VectorXd u = unitary::random_unit_vector(5, rng);
    const VectorXd v = unitary::random_unit_vector(5, rng);
    const auto s = minimal::numeric_mean_curvature(e, u, v, 1e-3);
    CHECK(std::abs(s.h_numeric - 7.0 / 24) < 1e-3);
  }
}

TEST_CASE("second-order convergence: defect ratio ~ 4 when halving h") {
  std::mt19937_64 rng(4);
  const ProductSphereEmbedding e(4, 4, 0.6, 0.8);
  const VectorXd u = unitary::random_unit_vector(5, rng);
  const VectorXd v = unitary::random_unit_vector(5, rng);
  const double exact = 7.0 / 24;
  const double d1 = std::abs(minimal::numeric_mean_curvature(e, u, v, 4e-3).h_numeric - exact);
  const double d2 = std::abs(minimal::numeric_mean_curvature(e, u, v, 2e-3).h_numeric - exact);
  CHECK(d1 / d2 == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("numeric pipeline validates inputs") {
  const ProductSphereEmbedding e(4, 4, kInvSqrt2, kInvSqrt2);
  std::mt19937_64 rng(5);
  const VectorXd u = unitary::random_unit_vector(5, rng);
  const VectorXd v = unitary::random_unit_vector(5, rng);
  CHECK_THROWS_AS(minimal::numeric_mean_curvature(e, 1.1 * u, v, 1e-3),
                  std::invalid_argument);
  CHECK_THROWS_AS(minimal::numeric_mean_curvature(e, u, v, 1e-7), std::invalid_argument);
  CHECK_THROWS_AS(minimal::numeric_mean_curvature(e, u.head(4), v, 1e-3),
                  std::invalid_argument);
}

TEST_CASE("Clifford torus in S^3") {
  std::mt19937_64 rng(6);
  const ProductSphereEmbedding e(1, 1, kInvSqrt2, kInvSqrt2);
  for (int t = 0; t < 50; ++t) {
    const VectorXd u = unitary::random_unit_vector(2, rng);
    const VectorXd v = unitary::random_unit_vector(2, rng);
    CHECK(std::abs(minimal::numeric_mean_curvature(e, u, v, 1e-3).h_numeric) < 1e-4);
  }
}

TEST_CASE("sphere volumes, closed forms") {
  CHECK(minimal::sphere_volume(8, 1.0) ==
        doctest::Approx(32.0 * std::pow(kPi, 4) / 105.0).epsilon(1e-12));
  CHECK(minimal::sphere_volume(8, 1.0) == doctest::Approx(29.6866).epsilon(1e-4));
  CHECK(minimal::sphere_volume(4, 1.0) ==
        doctest::Approx(8.0 * kPi * kPi / 3.0).epsilon(1e-12));
  CHECK(minimal::sphere_volume(4, 1.0) == doctest::Approx(26.3189).epsilon(1e-4));
  CHECK(minimal::sphere_volume(0, 1.0) == doctest::Approx(2.0));
  CHECK(minimal::sphere_volume(1, 2.0) == doctest::Approx(4.0 * kPi));
  CHECK_THROWS_AS(minimal::sphere_volume(-1, 1.0), std::invalid_argument);
}

TEST_CASE("H(r) root location and single sign change") {
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      const double root = minimal::mean_curvature_root(p, q, 1e-12);
      CHECK(std::abs(root - minimal::minimal_radius(p, q)) < 1e-10);

      // exactly one sign change on a grid over (0,1)
      int changes = 0;
      double prev = analytic_mean_curvature(p, q, 0.001, std::sqrt(1 - 0.001 * 0.001));
      for (int k = 2; k < 1000; ++k) {
        const double r = k / 1000.0;
        const double cur = analytic_mean_curvature(p, q, r, std::sqrt(1 - r * r));
        if ((prev > 0) != (cur > 0)) ++changes;
        prev = cur;
      }
      CHECK(changes == 1);
    }
  CHECK(minimal::mean_curvature_root(4, 4) == doctest::Approx(kInvSqrt2).epsilon(1e-10));
}

TEST_CASE("vacuum volume report") {
  const auto rep = minimal::vacuum_volume_report(42, 10, 1e-3);
  CHECK(rep.product_volume == doctest::Approx(4.0 * std::pow(kPi, 4) / 9.0).epsilon(1e-12));
  CHECK(rep.product_volume == doctest::Approx(43.2930).epsilon(1e-4));
  CHECK(rep.great_volume == doctest::Approx(29.6866).epsilon(1e-4));
  CHECK(rep.great_smaller);
  CHECK(rep.max_abs_h_product < 1e-4);
  CHECK(rep.max_abs_h_great == 0.0);  // constant normal field
}

TEST_CASE("great sphere pipeline") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    VectorXd x(10);
    x.head(9) = unitary::random_unit_vector(9, rng);
    x(9) = 0.0;
    CHECK(minimal::great_sphere_numeric_mean_curvature(x, 1e-3) == 0.0);
  }
  VectorXd off(10);
  off.setZero();
  off(9) = 1.0;
  CHECK_THROWS_AS(minimal::great_sphere_numeric_mean_curvature(off, 1e-3),
                  std::invalid_argument);
}

TEST_CASE("curvature CSV dump") {
  std::mt19937_64 rng(8);
  const ProductSphereEmbedding e(4, 4, kInvSqrt2, kInvSqrt2);
  std::vector<minimal::CurvatureSample> rows;
  for (int t = 0; t < 3; ++t)
    rows.push_back(minimal::numeric_mean_curvature(e, unitary::random_unit_vector(5, rng),
                                                   unitary::random_unit_vector(5, rng), 1e-3));
  const std::string path = "curvature_test.csv";
  minimal::write_curvature_csv(path, rows);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "x1,x2,x3,x4,x5,x6,x7,x8,x9,x10,H_numeric,H_analytic,h");
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 3);
  in.close();
  std::remove(path.c_str());

  CHECK_THROWS_AS(minimal::write_curvature_csv("/nonexistent-dir/x.csv", rows),
                  std::ios_base::failure);
}
