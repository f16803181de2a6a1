#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "signedspan/bounds.hpp"
#include "signedspan/core.hpp"
#include "signedspan/matching.hpp"

namespace signedspan {

// The (n/2)! 2^(n/2) permutations that send every pair of m_g onto a pair of
// m_k: a bijection between the two matchings plus one orientation bit each.
struct RestrictedEmbeddingSpace {
  MatchedPair pair;

  int half() const { return pair.n / 2; }
  BigInt size() const;
};

// A member of the restricted family. target[i] indexes m_k for the pair m_g[i]
// and flipped[i] selects the orientation: unflipped sends the smaller vertex of
// m_g[i] to the smaller vertex of its target. target[i] = -1 leaves the pair
// unassigned.
struct MatchedAssignment {
  std::vector<int> target;
  std::vector<bool> flipped;

  static MatchedAssignment empty(int half);
  bool complete() const;
};

Embedding realize(const MatchedPair& pair, const MatchedAssignment& assignment);

// Uniform member of the family (random bijection by Fisher-Yates, independent
// orientation bits); deterministic per seed.
Embedding sample(const RestrictedEmbeddingSpace& space, std::uint64_t seed);

// E[m+(G_pi)] over the family, from the closed form: each pattern edge of m_g0
// is plus with probability p; every other pattern edge joins two m_g pairs and
// lands uniformly on the n(n-2)/2 pairs of the host not in m_k.
Rational exact_expectation(const SignedCompleteGraph& host, const Pattern& pattern,
                           const MatchedPair& pair);

// E[m+(G_pi) | the assigned part of partial] for a uniform completion.
Rational conditional_expectation(const SignedCompleteGraph& host, const Pattern& pattern,
                                 const MatchedPair& pair, const MatchedAssignment& partial);

// Method of conditional expectations over m_g in order: each pair takes the
// (target, orientation) with the largest conditional expectation, ties to the
// smallest target then unflipped. When trace is given it receives the
// conditional expectation after each step, starting with the unconditioned one.
Embedding derandomize(const SignedCompleteGraph& host, const Pattern& pattern,
                      const MatchedPair& pair, std::vector<Rational>* trace = nullptr);

struct EmbedResult {
  Embedding embedding;
  EmbeddingScore score;
  bounds::BoundReport bound;
  // Exact expectation of the even-order subproblem that was derandomized.
  Rational expectation;
  // Vertex fixed by the odd-order reduction.
  std::optional<Vertex> fixed_vertex;
};

// Full pipeline. Even n: matched pair + derandomization. Odd n: fix the host
// vertex x maximizing m+(K - x) (smallest on ties), move a minimum-degree
// pattern vertex onto x by a transposition, solve the order n-1 problem and
// extend by pi(x) = x. Rejects n < 4.
EmbedResult embed_unbalanced(const SignedCompleteGraph& host, const Pattern& pattern);

}  // namespace signedspan
