#pragma once

#include <map>
#include <string>
#include <vector>

namespace signedspan::bounds {

struct BoundReport {
  std::string name;
  std::map<std::string, double> inputs;
  double value = 0.0;
  std::string case_taken;
};

// Density threshold d* with d* C(n,2) = (8n^2 - 14n + 3)/25.
double d_star(long long n);

// Guaranteed plus-edge count for some copy of a pattern with m edges and
// maximum degree at most max_degree in a host of order n and plus-density d.
// The branch is chosen by d*C(n,2) <= (8n^2-14n+3)/25 with a 1e-9 slack on
// the scaled comparison.
BoundReport theorem0_bound(long long n, double d, int max_degree, double m);
// Same value with the branch decided exactly from the integer plus count.
BoundReport theorem0_bound_exact(long long n, long long plus_count, int max_degree,
                                 long long m);

// 2n + 3 - sqrt(2n^2 + 14n + 1): plus-edges a maximal path system reaches in
// a balanced labeling of order n >= 10.
double path_target(long long n);

double c_delta_lower(int max_degree);
double c_delta_upper(int max_degree);
// Named constants; c_delta_lower/upper are listed for Delta = 1..max_delta.
std::map<std::string, double> constants(int max_delta = 4);

double h_function(double t0, double t1, double t2, double t3);
// Objective t1 + 2t2 + 3t3 after eliminating t0 and t2 via h = 1/4 and
// t0 + t1 + t2 + t3 = 1/3. Throws on a negative radicand.
double f_function(double t1, double t3);
// The t2 recovered from (t1, t3) on that elimination.
double recovered_t2(double t1, double t3);

struct ProgramPoint {
  double value = 0.0;
  double t1 = 0.0;
  double t3 = 0.0;
  std::string where;
};

struct TriangleProgramReport {
  ProgramPoint analytic;
  ProgramPoint grid;
  // Minima over the three sides of {t1, t3 >= 0, t1 + t3 <= 1/3}.
  ProgramPoint side_t3_zero;
  ProgramPoint side_t1_zero;
  ProgramPoint side_hypotenuse;
  // Interior points with grad f = 0 (expected: none).
  std::vector<ProgramPoint> interior_stationary;
  // Every candidate examined by the analytic route.
  std::vector<ProgramPoint> candidates;
};

// Minimizes f over the triangle by boundary analysis of the stationary points.
TriangleProgramReport solve_triangle_program_analytic();
// Dense grid followed by projected compass search from the best grid point.
ProgramPoint solve_triangle_program_grid(int resolution = 600);
// Both routes; grid field filled from solve_triangle_program_grid().
TriangleProgramReport solve_triangle_program();

}  // namespace signedspan::bounds
