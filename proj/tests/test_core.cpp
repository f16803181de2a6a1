#include "doctest.h"
#include "helpers.hpp"

#include "signedspan/generators.hpp"
#include "signedspan/random.hpp"

using namespace signedspan;
using testing::host_from;
using testing::pattern_from;

TEST_CASE("score counts plus and minus edges of the image") {
  const auto host = host_from(4, {{1, 2}, {3, 4}, {1, 3}});
  const auto pattern = pattern_from(4, {{1, 2}, {3, 4}});

  const auto id = score(host, pattern, Embedding::identity(4));
  CHECK(id.plus == 2);
  CHECK(id.minus == 0);
  CHECK(id.signed_sum == 2);

  // Swapping 2 and 3 sends the pattern onto {13, 24}.
  const auto swapped = score(host, pattern, Embedding({1, 3, 2, 4}));
  CHECK(swapped.plus == 1);
  CHECK(swapped.minus == 1);
  CHECK(swapped.signed_sum == 0);
}

TEST_CASE("all-plus host scores every edge positive") {
  const auto host = SignedCompleteGraph::all_plus(7);
  const auto pattern = generators::pattern_factory(generators::PatternKind::kRandomBounded, 7, 3, 5);
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vertex> images{1, 2, 3, 4, 5, 6, 7};
    rng.shuffle(images);
    const auto s = score(host, pattern, Embedding(images));
    CHECK(s.plus == static_cast<long long>(pattern.m()));
    CHECK(s.minus == 0);
  }
}

TEST_CASE("score rejects mismatched orders") {
  const auto host = SignedCompleteGraph::all_plus(4);
  const auto pattern = pattern_from(5, {{1, 2}});
  CHECK_THROWS_AS(score(host, pattern, Embedding::identity(4)), InputError);
  CHECK_THROWS_AS(score(host, pattern_from(4, {{1, 2}}), Embedding::identity(5)), InputError);
}

TEST_CASE("plus_subgraph") {
  const auto g = plus_subgraph(host_from(4, {{1, 2}, {3, 4}, {1, 3}}));
  CHECK(g.m() == 3);
  CHECK(g.max_degree() == 2);
  CHECK(g.degree(1) == 2);

  const auto empty = plus_subgraph(SignedCompleteGraph::all_minus(4));
  CHECK(empty.m() == 0);
  CHECK(empty.max_degree() == 0);

  const auto full = plus_subgraph(SignedCompleteGraph::all_plus(5));
  CHECK(full.m() == 10);
  CHECK(full.max_degree() == 4);
}

TEST_CASE("score identities hold and are invariant under common relabeling") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 5 + static_cast<int>(seed % 6);
    const auto host = generators::random_labeling(n, 0.5, seed);
    const auto pattern =
        generators::pattern_factory(generators::PatternKind::kRandomBounded, n, 3, seed + 100);
    Rng rng(seed * 7 + 1);
    std::vector<Vertex> pi_images(n), rho_images(n);
    for (int i = 0; i < n; ++i) pi_images[i] = rho_images[i] = i + 1;
    rng.shuffle(pi_images);
    rng.shuffle(rho_images);
    const Embedding pi(pi_images);
    const Embedding rho(rho_images);

    const auto base = score(host, pattern, pi);
    CHECK(base.plus + base.minus == static_cast<long long>(pattern.m()));
    CHECK(base.signed_sum == base.plus - base.minus);
    CHECK(base.plus == testing::count_plus(host, pattern, pi_images));

    const auto moved = score(host.relabeled(rho), pattern, compose(rho.inverse(), pi));
    CHECK(moved == base);
  }
}

TEST_CASE("signed complete graph invariants") {
  const auto host = host_from(5, {{1, 2}, {2, 5}, {3, 4}});
  CHECK(host.plus_count() == 3);
  CHECK(host.minus_count() == 7);
  CHECK(host.plus_count() + host.minus_count() == pair_count(5));
  CHECK(host.density() == Rational(3, 10));
  CHECK(host.sign(5, 2) == 1);
  CHECK(host.sign(1, 5) == -1);
  CHECK(host.plus_degree(2) == 2);
  CHECK(host.negated().plus_count() == 7);
  CHECK(host.with_minus(std::vector<Edge>{{1, 2}}).plus_count() == 2);

  const std::vector<Vertex> keep{2, 5, 1};
  const auto sub = host.induced(keep);
  CHECK(sub.n() == 3);
  CHECK(sub.is_plus(1, 2));  // 2-5
  CHECK(sub.is_plus(1, 3));  // 2-1
  CHECK_FALSE(sub.is_plus(2, 3));

  CHECK_THROWS_AS(host_from(4, {{1, 2}, {2, 1}}), InputError);
  CHECK_THROWS_AS(host_from(4, {{1, 5}}), InputError);
  CHECK_THROWS_AS(make_edge(3, 3), InputError);
  CHECK_FALSE(host.balanced());
}

TEST_CASE("balanced labelings only exist for n mod 4 in {0,1}") {
  for (int n = 2; n <= 13; ++n) {
    const bool feasible = pair_count(n) % 2 == 0;
    CHECK(feasible == (n % 4 == 0 || n % 4 == 1));
  }
}

TEST_CASE("pattern degree data counts isolated vertices") {
  const auto p = pattern_from(5, {{2, 1}, {1, 3}});
  CHECK(p.m() == 2);
  CHECK(p.max_degree() == 2);
  CHECK(p.min_degree() == 0);
  CHECK(p.has_edge(1, 2));
  CHECK(p.has_edge(2, 1));
  CHECK_FALSE(p.has_edge(2, 3));
  CHECK_THROWS_AS(pattern_from(4, {{1, 2}, {2, 1}}), InputError);
  CHECK_THROWS_AS(pattern_from(4, {{0, 2}}), InputError);

  const auto q = p.without_vertex(2);
  CHECK(q.n() == 4);
  CHECK(q.m() == 1);
  CHECK(q.has_edge(1, 2));  // old 1-3

  const auto r = p.relabeled(Embedding({3, 2, 1, 4, 5}));
  CHECK(r.has_edge(3, 2));
  CHECK(r.has_edge(3, 1));
}

TEST_CASE("embedding validation and algebra") {
  CHECK_THROWS_AS(Embedding({1, 1, 2}), InputError);
  CHECK_THROWS_AS(Embedding({1, 4, 2}), InputError);
  const Embedding pi({2, 3, 1});
  CHECK(compose(pi, pi.inverse()) == Embedding::identity(3));
  CHECK(compose(pi, pi)(1) == 3);
}

TEST_CASE("cycle sums") {
  const auto host = host_from(4, {{1, 2}, {3, 4}, {1, 3}});
  const std::vector<Vertex> cycle{1, 2, 4, 3};
  CHECK(cycle_plus_count(host, cycle) == 3);
  CHECK(cycle_signed_sum(host, cycle) == 2);
}
