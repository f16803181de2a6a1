#include "doctest.h"

#include <cmath>

#include "signedspan/bounds.hpp"
#include "signedspan/core.hpp"

using namespace signedspan;
using namespace signedspan::bounds;

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt6 = std::sqrt(6.0);
constexpr double kTol = 1e-9;
}  // namespace

TEST_CASE("theorem0 bound golden values") {
  // n = 4: (8*16 - 56 + 3)/25 = 3 = d* C(4,2), so d = 1/2 sits on the first branch.
  const auto small = theorem0_bound(4, 0.5, 1, 1);
  CHECK(small.case_taken == "d<=d*");
  CHECK(small.value == doctest::Approx(0.5 + (1.5 - kSqrt2) / 3 - 3.0).epsilon(kTol));
  const auto small2 = theorem0_bound(4, 0.5, 2, 1);
  CHECK(small2.value == doctest::Approx(0.5 + (1.5 - kSqrt2) / 5 - 3.0).epsilon(kTol));
  CHECK(small2.value < 0);

  const auto mid = theorem0_bound(100, 0.5, 2, 100);
  CHECK(mid.case_taken == "d<=d*");
  const double coefficient = 0.5 + (1.5 - kSqrt2) / 5 - 3.0 / 97;
  CHECK(mid.value == doctest::Approx(100 * coefficient).epsilon(kTol));
  CHECK(mid.value == doctest::Approx(48.623).epsilon(1e-4));

  for (int n : {10, 25, 80}) {
    const auto full = theorem0_bound(n, 1.0, 3, 10);
    CHECK(full.case_taken == "d>d*");
    CHECK(full.value == doctest::Approx((1.0 - 3.0 / (n - 3)) * 10).epsilon(kTol));
  }
  CHECK_THROWS_AS(theorem0_bound(3, 0.5, 1, 1), InputError);
  CHECK_THROWS_AS(theorem0_bound(10, 1.5, 1, 1), InputError);
}

TEST_CASE("exact and floating branch choice agree away from the threshold") {
  for (long long n = 4; n <= 60; ++n) {
    const long long pairs = pair_count(n);
    for (long long plus = 0; plus <= pairs; plus += std::max(1LL, pairs / 37)) {
      const auto exact = theorem0_bound_exact(n, plus, 2, n);
      const bool first = 25 * plus <= 8 * n * n - 14 * n + 3;
      CHECK(exact.case_taken == (first ? "d<=d*" : "d>d*"));
      const auto approx = theorem0_bound(n, static_cast<double>(plus) / pairs, 2, n);
      CHECK(approx.case_taken == exact.case_taken);
      CHECK(approx.value == doctest::Approx(exact.value).epsilon(1e-12));
    }
  }
}

TEST_CASE("d* lies in [1/2, 16/25] and equals 1/2 at n = 4") {
  CHECK(d_star(4) == doctest::Approx(0.5).epsilon(1e-15));
  for (long long n = 4; n <= 5000; ++n) {
    CHECK(d_star(n) >= 0.5 - 1e-12);
    CHECK(d_star(n) <= 16.0 / 25.0 + 1e-12);
  }
}

TEST_CASE("density inequalities behind the case split") {
  for (int i = 0; i <= 1000; ++i) {
    const double d = i / 1000.0;
    CHECK(d <= std::sqrt(d) + 1e-15);
    if (d <= 0.64) CHECK(d <= 2 - 2 * std::sqrt(1 - d) + 1e-12);
  }
}

TEST_CASE("path target") {
  CHECK(path_target(10) == doctest::Approx(23 - std::sqrt(341.0)).epsilon(kTol));
  CHECK(path_target(10) == doctest::Approx(4.534).epsilon(1e-3));
  CHECK(path_target(4) == doctest::Approx(11 - std::sqrt(89.0)).epsilon(kTol));
  CHECK(path_target(12) == doctest::Approx(27 - std::sqrt(457.0)).epsilon(kTol));
  // value / n increases towards 2 - sqrt 2.
  double previous = -1;
  for (long long n = 10; n <= 10000000; n *= 10) {
    const double ratio = path_target(n) / static_cast<double>(n);
    CHECK(ratio > previous);
    CHECK(ratio < 2 - kSqrt2);
    previous = ratio;
  }
  CHECK(std::abs(previous - (2 - kSqrt2)) < 1e-5);
}

TEST_CASE("named constants") {
  const auto c = constants(4);
  CHECK(c.at("c1") == doctest::Approx(0.5858).epsilon(1e-4));
  CHECK(c.at("c1") == doctest::Approx(2 - kSqrt2).epsilon(kTol));
  CHECK(c.at("c3_upper") == doctest::Approx(1 - kSqrt2 / 3).epsilon(kTol));
  CHECK(c.at("corollary1") == doctest::Approx(3 - 2 * kSqrt2).epsilon(kTol));
  CHECK(c.at("thm1ii") == doctest::Approx(3 * kSqrt2 / 4 - 0.5).epsilon(kTol));
  CHECK(c.at("balogh_reference") * 128 == doctest::Approx(1.0));
  CHECK(c.at("c_delta_lower(2)") == doctest::Approx(0.5 + (3 - 2 * kSqrt2) / 10).epsilon(kTol));
  CHECK(c.at("c_delta_lower(2)") == doctest::Approx(0.5172).epsilon(1e-4));
  for (int delta = 1; delta <= 4; ++delta) {
    CHECK(c_delta_lower(delta) < c_delta_upper(delta));
    CHECK(c_delta_upper(delta) == doctest::Approx(0.5 + 0.5 / delta));
  }
}

TEST_CASE("h and f") {
  CHECK(h_function(0, 0, 0, 1.0 / 3) == doctest::Approx(0.5).epsilon(kTol));
  CHECK(f_function(0, 0) == doctest::Approx(2 - kSqrt2).epsilon(kTol));
  const double t3 = 5 * kSqrt2 / 12 - 0.5;
  CHECK(f_function(0, t3) == doctest::Approx(3 * kSqrt2 / 4 - 0.5).epsilon(kTol));

  // Exact algebra at that point: the radicand is 16 (t3 + 1/2)^2 - 2 with
  // (t3 + 1/2)^2 = 50/144.
  const Rational radicand = Rational(16) * Rational(50, 144) - Rational(2);
  CHECK(radicand == Rational(32, 9));

  // f(t1, 0) is affine with slope 3 - 2 sqrt 2.
  for (int i = 0; i <= 30; ++i) {
    const double t1 = i / 90.0;
    CHECK(f_function(t1, 0) == doctest::Approx((3 - 2 * kSqrt2) * t1 + 2 - kSqrt2).epsilon(1e-12));
  }
}

TEST_CASE("the eliminated t2 satisfies h = 1/4 and the simplex constraint") {
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; i + j <= 40; ++j) {
      const double t1 = i / 120.0, t3 = j / 120.0;
      const double t2 = recovered_t2(t1, t3);
      const double t0 = 1.0 / 3 - t1 - t2 - t3;
      CHECK(h_function(t0, t1, t2, t3) == doctest::Approx(0.25).epsilon(1e-10));
      CHECK(f_function(t1, t3) == doctest::Approx(t1 + 2 * t2 + 3 * t3).epsilon(1e-12));
    }
  }
}

TEST_CASE("triangle program: analytic route") {
  const auto report = solve_triangle_program_analytic();
  CHECK(report.interior_stationary.empty());
  CHECK(std::abs(report.analytic.value - (3 * kSqrt2 / 4 - 0.5)) < kTol);
  CHECK(std::abs(report.analytic.t1) < kTol);
  CHECK(std::abs(report.analytic.t3 - (5 * kSqrt2 / 12 - 0.5)) < kTol);
  CHECK(std::abs(report.side_t3_zero.value - (2 - kSqrt2)) < kTol);
  CHECK(std::abs(report.side_t1_zero.value - (3 * kSqrt2 / 4 - 0.5)) < kTol);
  CHECK(std::abs(report.side_hypotenuse.value - (14.0 / 3 - 5 * kSqrt6 / 3)) < kTol);
  CHECK(std::abs(report.side_hypotenuse.t1 - (5 * kSqrt6 / 18 - 0.5)) < kTol);
  CHECK(report.candidates.size() >= 5);
}

TEST_CASE("triangle program: grid route agrees") {
  const auto grid = solve_triangle_program_grid();
  const double optimum = 3 * kSqrt2 / 4 - 0.5;
  CHECK(std::abs(grid.value - optimum) < 1e-6);
  CHECK(grid.value >= optimum - 1e-12);
  const auto coarse = solve_triangle_program_grid(30);
  CHECK(std::abs(coarse.value - optimum) < 1e-4);
}
