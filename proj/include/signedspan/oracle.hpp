#pragma once

#include <map>
#include <vector>

#include "signedspan/core.hpp"
#include "signedspan/trianglesearch.hpp"

namespace signedspan::oracle {

inline constexpr int kSpectrumCap = 10;
inline constexpr int kHamiltonianCap = 11;
inline constexpr int kFactorCap = 12;

struct SpectrumResult {
  // Achievable m+(G_pi), ascending.
  std::vector<long long> values;
  // value -> number of permutations attaining it; sums to n!.
  std::map<long long, BigInt> multiplicities;
  BigInt permutations;
  Rational mean;
  // Largest difference between consecutive values (0 for a single value).
  long long max_gap = 0;
};

// Exhaustive over all n! permutations, split by the image of vertex 1 across
// workers. Rejects n above cap.
SpectrumResult spectrum(const SignedCompleteGraph& host, const Pattern& pattern,
                        int cap = kSpectrumCap);

// Some value of the spectrum within Delta(G) of the mean d m(G).
bool has_value_near_mean(const SpectrumResult& spectrum, const Pattern& pattern);

struct HamiltonianOptimum {
  std::vector<Vertex> cycle;  // maximizes m+
  long long max_plus = 0;
  long long min_plus = 0;
  long long max_abs_sum = 0;  // max |c(C)|
  BigInt cycles;              // (n-1)!/2 examined
};

HamiltonianOptimum best_hamiltonian(const SignedCompleteGraph& host, int cap = kHamiltonianCap);

struct FactorOptimum {
  TriangleFactor factor;
  long long max_plus = 0;
  long long factors = 0;
};

FactorOptimum best_triangle_factor(const SignedCompleteGraph& host, int cap = kFactorCap);

}  // namespace signedspan::oracle
