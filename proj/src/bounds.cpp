#include "signedspan/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "signedspan/core.hpp"
#include "signedspan/matching.hpp"

namespace signedspan::bounds {
namespace {

const double kSqrt2 = std::sqrt(2.0);

double choose2(long long n) { return static_cast<double>(pair_count(n)); }

double theorem0_coefficient(long long n, double d, int max_degree, bool first) {
  const double denom = 2.0 * max_degree + 1.0;
  const double gain = first ? (2.0 - d - 2.0 * std::sqrt(1.0 - d)) : (std::sqrt(d) - d);
  return d + gain / denom - 3.0 / static_cast<double>(n - 3);
}

void check_theorem0_inputs(long long n, double d, int max_degree, double m) {
  if (n < 4) throw InputError("theorem0_bound: n must be at least 4");
  if (!(d >= 0.0 && d <= 1.0)) throw InputError("theorem0_bound: d must lie in [0,1]");
  if (max_degree < 1) throw InputError("theorem0_bound: max degree must be at least 1");
  if (!(m >= 0.0)) throw InputError("theorem0_bound: m must be non-negative");
}

BoundReport make_theorem0(long long n, double d, int max_degree, double m, bool first) {
  BoundReport r;
  r.name = "theorem0_bound";
  r.inputs = {{"n", static_cast<double>(n)},
              {"d", d},
              {"delta", static_cast<double>(max_degree)},
              {"m", m},
              {"d_star", d_star(n)}};
  r.value = theorem0_coefficient(n, d, max_degree, first) * m;
  r.case_taken = first ? "d<=d*" : "d>d*";
  return r;
}

// R(t1, t3) = 8t1^2 + 32 t1 t3 + 16 t3^2 + 8t1 + 16t3 + 2 restricted to the
// line (t1, t3) = p + s q, as the coefficients of a s^2 + b s + c.
struct Quadratic {
  double a, b, c;
  double operator()(double s) const { return (a * s + b) * s + c; }
};

Quadratic radicand_along(double p1, double p3, double q1, double q3) {
  const double a = 8 * q1 * q1 + 32 * q1 * q3 + 16 * q3 * q3;
  const double b = 16 * p1 * q1 + 32 * (p1 * q3 + p3 * q1) + 32 * p3 * q3 + 8 * q1 + 16 * q3;
  const double c = 8 * p1 * p1 + 32 * p1 * p3 + 16 * p3 * p3 + 8 * p1 + 16 * p3 + 2;
  return {a, b, c};
}

std::vector<double> real_roots(double a, double b, double c) {
  const double eps = 1e-14;
  if (std::abs(a) < eps) {
    if (std::abs(b) < eps) return {};
    return {-c / b};
  }
  const double disc = b * b - 4 * a * c;
  if (disc < -eps) return {};
  const double root = std::sqrt(std::max(disc, 0.0));
  // Cancellation-free pair of roots.
  const double q = -0.5 * (b + std::copysign(root, b));
  std::vector<double> out{q / a};
  if (std::abs(q) > eps) out.push_back(c / q);
  return out;
}

// Stationary points of f along the segment p + s q, s in [0,1]. f along the
// segment is L0 + Ls s - sqrt(R(s)); f' = 0 iff 2 Ls sqrt(R) = R'(s), which
// squares to 4 Ls^2 R = R'^2 with R' sharing the sign of Ls.
std::vector<double> segment_stationary(double p1, double p3, double q1, double q3) {
  const Quadratic r = radicand_along(p1, p3, q1, q3);
  const double slope = 3 * q1 + 5 * q3;
  const double l2 = 4 * slope * slope;
  const auto roots = real_roots(l2 * r.a - 4 * r.a * r.a, l2 * r.b - 4 * r.a * r.b,
                                l2 * r.c - r.b * r.b);
  std::vector<double> out;
  for (double s : roots) {
    if (s < -1e-12 || s > 1 + 1e-12) continue;
    const double deriv = 2 * r.a * s + r.b;
    if (deriv * slope < 0) continue;
    out.push_back(std::clamp(s, 0.0, 1.0));
  }
  return out;
}

ProgramPoint at(double t1, double t3, std::string where) {
  return {f_function(t1, t3), t1, t3, std::move(where)};
}

ProgramPoint minimize_side(double p1, double p3, double q1, double q3, const std::string& name,
                           std::vector<ProgramPoint>& candidates) {
  std::vector<ProgramPoint> local{at(p1, p3, name + ":start"),
                                  at(p1 + q1, p3 + q3, name + ":end")};
  for (double s : segment_stationary(p1, p3, q1, q3))
    local.push_back(at(p1 + s * q1, p3 + s * q3, name + ":stationary"));
  candidates.insert(candidates.end(), local.begin(), local.end());
  return *std::min_element(local.begin(), local.end(),
                           [](const auto& x, const auto& y) { return x.value < y.value; });
}

bool feasible(double t1, double t3) { return t1 >= 0 && t3 >= 0 && t1 + t3 <= 1.0 / 3.0; }

}  // namespace

double d_star(long long n) {
  return (8.0 * n * n - 14.0 * n + 3.0) / 25.0 / choose2(n);
}

BoundReport theorem0_bound(long long n, double d, int max_degree, double m) {
  check_theorem0_inputs(n, d, max_degree, m);
  const double lhs = 25.0 * d * choose2(n);
  const double rhs = 8.0 * n * n - 14.0 * n + 3.0;
  return make_theorem0(n, d, max_degree, m, lhs <= rhs + 1e-9 * std::max(1.0, rhs));
}

BoundReport theorem0_bound_exact(long long n, long long plus_count, int max_degree,
                                 long long m) {
  if (n < 4) throw InputError("theorem0_bound: n must be at least 4");
  if (plus_count < 0 || plus_count > pair_count(n))
    throw InputError("theorem0_bound: plus count outside 0..C(n,2)");
  const double d = static_cast<double>(plus_count) / choose2(n);
  check_theorem0_inputs(n, d, max_degree, static_cast<double>(m));
  BoundReport r = make_theorem0(n, d, max_degree, static_cast<double>(m),
                                erdos_gallai_first_branch(n, plus_count));
  r.inputs["plus_count"] = static_cast<double>(plus_count);
  return r;
}

double path_target(long long n) {
  if (n < 1) throw InputError("path_target: n must be at least 1");
  const double nn = static_cast<double>(n);
  return 2 * nn + 3 - std::sqrt(2 * nn * nn + 14 * nn + 1);
}

double c_delta_lower(int max_degree) {
  if (max_degree < 1) throw InputError("max degree must be at least 1");
  return 0.5 + (3.0 - 2.0 * kSqrt2) / (4.0 * max_degree + 2.0);
}

double c_delta_upper(int max_degree) {
  if (max_degree < 1) throw InputError("max degree must be at least 1");
  return 0.5 + 1.0 / (2.0 * max_degree);
}

std::map<std::string, double> constants(int max_delta) {
  std::map<std::string, double> out{
      {"c1", 2.0 - kSqrt2},
      {"c2_lower_triangle_factor", 3.0 * kSqrt2 / 4.0 - 0.5},
      // Conjectured, not proved: c2 = c1.
      {"c2_conjectured", 2.0 - kSqrt2},
      {"c3_upper", 1.0 - kSqrt2 / 3.0},
      {"corollary1", 3.0 - 2.0 * kSqrt2},
      {"thm1ii", 3.0 * kSqrt2 / 4.0 - 0.5},
      {"balogh_reference", 1.0 / 128.0},
  };
  for (int delta = 1; delta <= max_delta; ++delta) {
    const std::string suffix = "(" + std::to_string(delta) + ")";
    out["c_delta_lower" + suffix] = c_delta_lower(delta);
    out["c_delta_upper" + suffix] = c_delta_upper(delta);
    out["subgraph_discrepancy" + suffix] = (3.0 - 2.0 * kSqrt2) / (2.0 * delta + 1.0);
  }
  return out;
}

double h_function(double t0, double t1, double t2, double t3) {
  return t1 * t1 / 2 + 5 * t2 * t2 / 2 + 9 * t3 * t3 / 2 + 3 * t0 * (t2 + t3) + 4 * t1 * t2 +
         6 * t1 * t3 + 7 * t2 * t3;
}

double f_function(double t1, double t3) {
  const double radicand = 8 * t1 * t1 + (32 * t3 + 8) * t1 + 16 * t3 * t3 + 16 * t3 + 2;
  if (radicand < 0) throw InputError("f_function: negative radicand");
  return 3 * t1 + 5 * t3 + 2 - std::sqrt(radicand);
}

double recovered_t2(double t1, double t3) { return (f_function(t1, t3) - t1 - 3 * t3) / 2; }

TriangleProgramReport solve_triangle_program_analytic() {
  TriangleProgramReport report;
  const double third = 1.0 / 3.0;

  // grad f = 0 needs 5 dR/dt1 = 3 dR/dt3, i.e. 64 t3 = 16 t1 + 8, and then
  // 6 sqrt(R) = dR/dt1. On the line t3 = t1/4 + 1/8 we square the latter.
  {
    const Quadratic r = radicand_along(0.0, 0.125, 1.0, 0.25);
    // dR/dt1 = 16 t1 + 32 t3 + 8 = 24 s + 12 on the line.
    const double alpha = 24, beta = 12;
    for (double s : real_roots(36 * r.a - alpha * alpha, 36 * r.b - 2 * alpha * beta,
                               36 * r.c - beta * beta)) {
      const double t1 = s, t3 = 0.25 * s + 0.125;
      if (alpha * s + beta < 0) continue;
      if (t1 > 0 && t3 > 0 && t1 + t3 < third)
        report.interior_stationary.push_back(at(t1, t3, "interior"));
    }
  }
  report.candidates = report.interior_stationary;

  report.side_t3_zero = minimize_side(0, 0, third, 0, "t3=0", report.candidates);
  report.side_t1_zero = minimize_side(0, 0, 0, third, "t1=0", report.candidates);
  report.side_hypotenuse = minimize_side(0, third, third, -third, "t1+t3=1/3", report.candidates);

  report.analytic = *std::min_element(
      report.candidates.begin(), report.candidates.end(),
      [](const auto& x, const auto& y) { return x.value < y.value; });
  return report;
}

ProgramPoint solve_triangle_program_grid(int resolution) {
  if (resolution < 1) throw InputError("grid resolution must be positive");
  const double step = 1.0 / (3.0 * resolution);
  ProgramPoint best{std::numeric_limits<double>::infinity(), 0, 0, "grid"};
  for (int i = 0; i <= resolution; ++i) {
    for (int j = 0; i + j <= resolution; ++j) {
      const double t1 = i * step, t3 = j * step;
      const double v = f_function(t1, t3);
      if (v < best.value) best = {v, t1, t3, "grid"};
    }
  }
  // Projected compass search.
  auto project = [](double& t1, double& t3) {
    t1 = std::max(t1, 0.0);
    t3 = std::max(t3, 0.0);
    const double excess = t1 + t3 - 1.0 / 3.0;
    if (excess > 0) {
      t1 -= excess / 2;
      t3 -= excess / 2;
      t1 = std::max(t1, 0.0);
      t3 = std::max(t3, 0.0);
      if (t1 + t3 > 1.0 / 3.0) t3 = 1.0 / 3.0 - t1;
    }
  };
  static constexpr std::array<std::array<double, 2>, 8> kDirections{{
      {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}, {1, 1}, {-1, -1}}};
  double h = step;
  while (h > 1e-13) {
    bool moved = false;
    for (const auto& dir : kDirections) {
      double t1 = best.t1 + h * dir[0], t3 = best.t3 + h * dir[1];
      project(t1, t3);
      if (!feasible(t1, t3)) continue;
      const double v = f_function(t1, t3);
      if (v < best.value) {
        best = {v, t1, t3, "grid+refine"};
        moved = true;
      }
    }
    if (!moved) h /= 2;
  }
  return best;
}

TriangleProgramReport solve_triangle_program() {
  TriangleProgramReport report = solve_triangle_program_analytic();
  report.grid = solve_triangle_program_grid();
  return report;
}

}  // namespace signedspan::bounds
