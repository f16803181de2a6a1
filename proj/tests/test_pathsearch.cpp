#include "doctest.h"
#include "helpers.hpp"

#include "signedspan/bounds.hpp"
#include "signedspan/generators.hpp"
#include "signedspan/oracle.hpp"
#include "signedspan/pathsearch.hpp"

using namespace signedspan;
using testing::host_from;

namespace {

constexpr PathMove kAllMoves[] = {PathMove::kAddEdge, PathMove::kInsert,
                                  PathMove::kMergeViaIsolated, PathMove::kRerouteInterior,
                                  PathMove::kEndpointSwap};

bool is_hamiltonian(int n, const std::vector<Vertex>& cycle) {
  if (static_cast<int>(cycle.size()) != n) return false;
  std::vector<char> seen(n + 1, 0);
  for (Vertex v : cycle) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Every path edge appears as consecutive vertices of the cycle.
bool contains_paths(const std::vector<Vertex>& cycle, const PathSystem& system) {
  const std::size_t n = cycle.size();
  std::vector<std::size_t> at(n + 1);
  for (std::size_t i = 0; i < n; ++i) at[cycle[i]] = i;
  for (const auto& p : system.paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const std::size_t a = at[p[i]], b = at[p[i + 1]];
      if ((a + 1) % n != b && (b + 1) % n != a) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("local search examples") {
  const auto host = host_from(4, {{1, 2}, {1, 3}, {3, 4}});
  const auto result = path_local_search(host);
  REQUIRE(result.system.paths.size() == 1);
  CHECK(result.system.paths[0] == std::vector<Vertex>{2, 1, 3, 4});
  CHECK(result.system.edge_count() == 3);

  const auto cycle = assemble_hamiltonian(host, result.system);
  CHECK(is_hamiltonian(4, cycle));
  CHECK(cycle == std::vector<Vertex>{2, 1, 3, 4});
  CHECK(cycle_plus_count(host, cycle) == 3);

  const auto none = path_local_search(SignedCompleteGraph::all_minus(6));
  CHECK(none.system.paths.empty());
  const auto any = assemble_hamiltonian(SignedCompleteGraph::all_minus(6), none.system);
  CHECK(is_hamiltonian(6, any));
}

TEST_CASE("assembly of trivial systems") {
  const auto full = SignedCompleteGraph::all_plus(7);
  const auto cycle = assemble_hamiltonian(full, PathSystem{7, {}});
  CHECK(cycle_plus_count(full, cycle) == 7);

  const auto path_host = host_from(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  const PathSystem whole{5, {{1, 2, 3, 4, 5}}};
  const auto closed = assemble_hamiltonian(path_host, whole);
  CHECK(closed == std::vector<Vertex>{1, 2, 3, 4, 5});
  CHECK(cycle_plus_count(path_host, closed) == 4);
  CHECK_THROWS_AS(assemble_hamiltonian(SignedCompleteGraph::all_plus(2), PathSystem{2, {}}),
                  InputError);
}

TEST_CASE("validation rejects malformed systems") {
  const auto host = host_from(5, {{1, 2}, {2, 3}, {3, 4}});
  CHECK_NOTHROW(validate_path_system(host, PathSystem{5, {{1, 2, 3}}}));
  CHECK_THROWS_AS(validate_path_system(host, PathSystem{5, {{1}}}), InputError);
  CHECK_THROWS_AS(validate_path_system(host, PathSystem{5, {{1, 2}, {2, 3}}}), InputError);
  CHECK_THROWS_AS(validate_path_system(host, PathSystem{5, {{4, 5}}}), InputError);
  CHECK_THROWS_AS(validate_path_system(host, PathSystem{4, {{1, 2}}}), InputError);
  CHECK_THROWS_AS(validate_path_system(host, PathSystem{5, {{1, 9}}}), InputError);
  CHECK_THROWS_AS(assemble_hamiltonian(host, PathSystem{5, {{4, 5}}}), InputError);
}

TEST_CASE("stats") {
  const PathSystem system{9, {{1, 2, 3}, {4, 5}, {6, 7, 8}}};
  const auto s = path_stats(system);
  CHECK(s.k == 3);
  CHECK(s.m_h == 5);
  CHECK(s.n1 == 2 * s.k);
  CHECK(s.n2 == s.m_h - s.k);
  CHECK(s.n0 == 9 - s.m_h - s.k);
  CHECK(s.ell == 2);
}

TEST_CASE("individual moves are detected") {
  // insert: 3 sees both ends of the path edge 12.
  const auto ins = host_from(4, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(has_improving_move(ins, PathSystem{4, {{1, 2}}}, PathMove::kInsert));
  CHECK(has_improving_move(ins, PathSystem{4, {{1, 2}}}, PathMove::kAddEdge));

  // merge: paths 1-2-3 and 4-5-6, isolated 7 adjacent to 2 and 5.
  const auto merge = host_from(7, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {2, 7}, {5, 7}});
  const PathSystem two{7, {{1, 2, 3}, {4, 5, 6}}};
  CHECK(has_improving_move(merge, two, PathMove::kMergeViaIsolated));
  CHECK_FALSE(has_improving_move(merge, two, PathMove::kInsert));

  // A Hamiltonian path admits nothing.
  const auto path_host = host_from(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  for (PathMove move : kAllMoves)
    CHECK_FALSE(has_improving_move(path_host, PathSystem{5, {{1, 2, 3, 4, 5}}}, move));
}

TEST_CASE("fixed points on balanced hosts meet the target and pass every certificate") {
  for (int n = 8; n <= 28; n += 4) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      for (bool minus_first : {false, true}) {
        const auto host = minus_first ? generators::random_balanced(n + 1, seed)
                                      : generators::random_balanced(n, seed);
        const auto result = path_local_search(host);
        REQUIRE_NOTHROW(validate_path_system(host, result.system));
        for (PathMove move : kAllMoves) CHECK_FALSE(has_improving_move(host, result.system, move));
        const auto cert = certify_path_system(host, result.system);
        INFO(cert.failure);
        CHECK(cert.passed());
        if (host.n() >= 10)
          CHECK(static_cast<double>(result.system.edge_count()) >= bounds::path_target(host.n()));

        const auto cycle = assemble_hamiltonian(host, result.system);
        CHECK(is_hamiltonian(host.n(), cycle));
        CHECK(contains_paths(cycle, result.system));
        CHECK(cycle_plus_count(host, cycle) >= result.system.edge_count());
      }
    }
  }
}

TEST_CASE("local search from a matching start and from empty both terminate at fixed points") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto host = generators::random_labeling(15, 0.2 + 0.03 * static_cast<double>(seed), seed);
    const auto greedy = greedy_matching_start(host);
    REQUIRE_NOTHROW(validate_path_system(host, greedy));
    for (const auto& start : {greedy, PathSystem{15, {}}}) {
      const auto result = path_local_search(host, start);
      CHECK(result.system.edge_count() >= start.edge_count());
      for (PathMove move : kAllMoves) CHECK_FALSE(has_improving_move(host, result.system, move));
      long long accepted = 0;
      for (long long a : result.accepted) accepted += a;
      CHECK(accepted <= 15 * 15);
      CHECK(result.system == canonicalize(result.system));
    }
  }
}

TEST_CASE("heuristic cycles never beat the exhaustive optimum") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 6 + static_cast<int>(seed % 4);
    const auto host = generators::random_labeling(n, 0.5, seed + 40);
    const auto system = path_local_search(host).system;
    const auto cycle = assemble_hamiltonian(host, system);
    const auto best = oracle::best_hamiltonian(host);
    CHECK(cycle_plus_count(host, cycle) <= best.max_plus);
    CHECK(system.edge_count() <= best.max_plus);
  }
  const auto bip = generators::bipartite_minus_matching(8);
  const auto cycle = assemble_hamiltonian(bip, path_local_search(bip).system);
  CHECK(oracle::best_hamiltonian(bip).max_plus >= cycle_plus_count(bip, cycle));
}

TEST_CASE("discrepancy pipeline") {
  CHECK_THROWS_AS(discrepancy_hamiltonian(SignedCompleteGraph::all_plus(3)), InputError);

  const auto full = discrepancy_hamiltonian(SignedCompleteGraph::all_plus(9));
  CHECK(full.signed_sum == 9);

  const auto balanced = generators::random_balanced(12, 5);
  const auto b = discrepancy_hamiltonian(balanced);
  CHECK(b.flips == 0);
  CHECK(b.signed_sum == 2 * cycle_plus_count(balanced, b.cycle) - 12);
  CHECK(b.signed_sum >= 2 * b.system_edges - 12);

  // Surplus 2 needs one flip; the unflipped sum is at least the balanced one.
  const auto k4 = host_from(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}});
  const auto r = discrepancy_hamiltonian(k4);
  CHECK(r.flips == 1);
  CHECK(is_hamiltonian(4, r.cycle));
  CHECK(r.signed_sum >= 2 * r.balanced_plus - 4);
  CHECK(r.signed_sum <= oracle::best_hamiltonian(k4).max_abs_sum);

  for (int n = 5; n <= 23; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const double d = 0.15 + 0.1 * static_cast<double>((n + seed) % 8);
      const auto host = generators::random_labeling(n, d, seed * 31 + n);
      const auto out = discrepancy_hamiltonian(host);
      REQUIRE(is_hamiltonian(n, out.cycle));
      CHECK(out.signed_sum == cycle_signed_sum(host, out.cycle));
      CHECK(out.oriented_sum() >= out.guarantee);
      CHECK(out.reduced_signed_sum >= 2 * out.system_edges - (n - static_cast<int>(out.removed.size())));
      CHECK(out.removed.size() == static_cast<std::size_t>(n % 4 == 2 ? 1 : n % 4 == 3 ? 2 : 0));
      if (n <= 9) CHECK(std::abs(out.signed_sum) <= oracle::best_hamiltonian(host).max_abs_sum);
    }
  }
}
