#pragma once

#include <vector>

#include "signedspan/core.hpp"

namespace signedspan {

// Set of vertex-disjoint pairs, kept sorted.
using Matching = std::vector<Edge>;

bool is_matching(int n, const Matching& matching);
bool is_perfect_matching(int n, const Matching& matching);

// Maximum-cardinality matching of a general graph (Edmonds' blossom search).
// The search ends only once no free vertex has an augmenting path, which
// certifies optimality by Berge's theorem.
Matching max_matching(const Pattern& graph);

// Lexicographic greedy; the result is maximal, so it has at least
// m / (2*Delta - 1) edges.
Matching greedy_maximal_matching(const Pattern& graph);

// Pairs the vertices left uncovered by partial in increasing order.
Matching extend_to_perfect(int n, Matching partial);

// Whether 25m <= 8n^2 - 14n + 3, i.e. the first branch of the Erdos-Gallai
// matching bound applies.
bool erdos_gallai_first_branch(long long n, long long m);

// Lower bound on the matching number of any graph of order n and size m.
double erdos_gallai_bound(long long n, long long m);

struct MatchedPair {
  int n = 0;
  // Perfect matching of the host with as many plus-pairs as possible.
  Matching m_k;
  // Greedy maximal matching of the pattern.
  Matching m_g0;
  // Perfect matching of the pattern's vertex set containing m_g0; the extra
  // pairs are never pattern edges.
  Matching m_g;
  // |m_k ∩ plus-edges| / (n/2).
  Rational p;
  long long plus_pairs = 0;
};

// Rejects odd n and mismatched orders.
MatchedPair build_matched_pair(const SignedCompleteGraph& host, const Pattern& pattern);

// The guaranteed lower bound on p for plus-density d:
// 2 - 2 sqrt(1-d) - 1/n when d*C(n,2) is in the first Erdos-Gallai branch,
// sqrt(d) - 1/n otherwise.
double plus_fraction_lower_bound(long long n, long long plus_count);

}  // namespace signedspan
