#pragma once

#include <cstdint>
#include <string>

#include "signedspan/core.hpp"

namespace signedspan::generators {

// Plus-edges: K_{n/2,n/2} on {1..n/2} x {n/2+1..n} minus the pairs
// (i, i + n/2) for i = 1..n/4. Balanced; needs n % 4 == 0.
SignedCompleteGraph bipartite_minus_matching(int n);

// floor(n / sqrt 2), computed exactly.
int minus_clique_order(int n);

// Minus-edges: the clique on the minus_clique_order(n) highest vertices, then
// pairs (u, v) with u outside and v inside the clique in lexicographic order
// until exactly half the pairs are minus. Needs n % 4 in {0, 1}.
SignedCompleteGraph minus_clique(int n);

// Exactly round(d C(n,2)) plus-edges chosen uniformly without replacement.
SignedCompleteGraph random_labeling(int n, double d, std::uint64_t seed);
// Exactly C(n,2)/2 plus-edges; needs n % 4 in {0, 1}.
SignedCompleteGraph random_balanced(int n, std::uint64_t seed);

// Plus-edges form disjoint cliques of order r on consecutive vertices.
SignedCompleteGraph planted_cliques(int n, int r);

enum class GeneratorKind { kBipartiteMinusMatching, kMinusClique, kRandomDensity, kRandomBalanced, kPlanted };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kRandomBalanced;
  int n = 0;
  double d = 0.5;
  std::uint64_t seed = 0;
  int r = 3;
};

GeneratorKind parse_generator_kind(const std::string& name);
std::string to_string(GeneratorKind kind);
// Checks kind-specific feasibility, then builds the instance.
SignedCompleteGraph generate(const GeneratorSpec& spec);

enum class PatternKind { kCliqueFactor, kMatching, kHamiltonian, kTriangleFactor, kPath, kRandomBounded };

PatternKind parse_pattern_kind(const std::string& name);
std::string to_string(PatternKind kind);

// clique_factor: disjoint K_{delta+1} (n % (delta+1) == 0); matching: perfect
// matching (n even); hamiltonian: the cycle 1..n (n >= 3); triangle_factor:
// disjoint triangles (n % 3 == 0); path: 1-2-...-n; random_bounded: seeded
// random greedy insertion keeping every degree <= delta.
Pattern pattern_factory(PatternKind kind, int n, int delta = 2, std::uint64_t seed = 0);

}  // namespace signedspan::generators
