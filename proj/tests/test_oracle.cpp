#include "doctest.h"
#include "helpers.hpp"

#include "signedspan/generators.hpp"
#include "signedspan/oracle.hpp"

using namespace signedspan;
using testing::host_from;
using testing::pattern_from;

TEST_CASE("spectrum examples") {
  const auto host = host_from(4, {{1, 2}, {3, 4}, {1, 3}});
  const auto matching = pattern_from(4, {{1, 2}, {3, 4}});
  const auto s = oracle::spectrum(host, matching);
  CHECK(s.values == std::vector<long long>{0, 1, 2});
  CHECK(s.mean == 1);
  CHECK(s.permutations == 24);
  CHECK(s.multiplicities.at(0) == 8);
  CHECK(s.multiplicities.at(1) == 8);
  CHECK(s.multiplicities.at(2) == 8);

  const auto star = host_from(4, {{1, 2}, {1, 3}, {1, 4}});
  const auto t = oracle::spectrum(star, matching);
  CHECK(t.values == std::vector<long long>{1});
  CHECK(t.mean == 1);
  CHECK(t.max_gap == 0);

  const auto full = oracle::spectrum(SignedCompleteGraph::all_plus(6),
                                     generators::pattern_factory(generators::PatternKind::kPath, 6));
  CHECK(full.values == std::vector<long long>{5});
}

TEST_CASE("spectrum agrees with a direct histogram") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 4 + static_cast<int>(seed % 4);
    const auto host = generators::random_labeling(n, 0.5, seed);
    const auto pattern =
        generators::pattern_factory(generators::PatternKind::kRandomBounded, n, 2, seed + 3);
    std::map<long long, long long> hist;
    testing::for_each_permutation(n, [&](const std::vector<Vertex>& images) {
      ++hist[testing::count_plus(host, pattern, images)];
    });
    const auto s = oracle::spectrum(host, pattern);
    REQUIRE(s.multiplicities.size() == hist.size());
    for (const auto& [value, count] : hist) CHECK(s.multiplicities.at(value) == count);
  }
}

TEST_CASE("averaging identity, gap bound and a value near the mean") {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const auto host = generators::random_labeling(n, 0.25 + 0.1 * static_cast<double>(seed % 6), seed);
    const auto pattern = generators::pattern_factory(generators::PatternKind::kRandomBounded, n,
                                                     1 + static_cast<int>(seed % 3), seed);
    const auto s = oracle::spectrum(host, pattern);
    CHECK(s.mean == host.density() * Rational(static_cast<long long>(pattern.m())));
    CHECK(s.max_gap <= pattern.max_degree() + pattern.min_degree());
    CHECK(oracle::has_value_near_mean(s, pattern));
  }
}

TEST_CASE("caps are enforced") {
  CHECK_THROWS_AS(oracle::spectrum(SignedCompleteGraph::all_plus(11),
                                   generators::pattern_factory(generators::PatternKind::kPath, 11)),
                  InputError);
  CHECK_THROWS_AS(oracle::best_hamiltonian(SignedCompleteGraph::all_plus(12)), InputError);
  CHECK_THROWS_AS(oracle::best_hamiltonian(SignedCompleteGraph::all_plus(2)), InputError);
  CHECK_THROWS_AS(oracle::best_triangle_factor(SignedCompleteGraph::all_plus(15)), InputError);
  CHECK_THROWS_AS(oracle::best_triangle_factor(SignedCompleteGraph::all_plus(8)), InputError);
}

TEST_CASE("best Hamiltonian cycle") {
  const auto host = host_from(4, {{1, 2}, {3, 4}, {1, 3}});
  const auto best = oracle::best_hamiltonian(host);
  CHECK(best.max_plus == 3);
  CHECK(best.max_abs_sum == 2);
  CHECK(best.cycles == 3);
  CHECK(cycle_plus_count(host, best.cycle) == 3);

  const auto minus = oracle::best_hamiltonian(SignedCompleteGraph::all_minus(7));
  CHECK(minus.max_plus == 0);
  CHECK(minus.max_abs_sum == 7);
  CHECK(minus.cycles == 360);

  // Direct enumeration of all orderings as a cross-check.
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const int n = 5 + static_cast<int>(seed % 3);
    const auto h = generators::random_labeling(n, 0.5, seed);
    long long max_plus = 0, max_abs = 0;
    testing::for_each_permutation(n, [&](const std::vector<Vertex>& order) {
      max_plus = std::max(max_plus, cycle_plus_count(h, order));
      max_abs = std::max(max_abs, std::abs(cycle_signed_sum(h, order)));
    });
    const auto b = oracle::best_hamiltonian(h);
    CHECK(b.max_plus == max_plus);
    CHECK(b.max_abs_sum == max_abs);
  }
}

TEST_CASE("best triangle factor") {
  const auto full = oracle::best_triangle_factor(SignedCompleteGraph::all_plus(9));
  CHECK(full.max_plus == 9);
  CHECK(full.factors == 280);
  CHECK(oracle::best_triangle_factor(SignedCompleteGraph::all_minus(12)).factors == 15400);

  const auto planted = generators::planted_cliques(9, 3);
  const auto best = oracle::best_triangle_factor(planted);
  CHECK(best.max_plus == 9);
  CHECK(triangle_profile(planted, best.factor).plus_total == 9);
}
