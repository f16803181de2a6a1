#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "signedspan/core.hpp"

namespace signedspan {

using Triangle = std::array<Vertex, 3>;

// Partition of 1..n into n/3 triples (n divisible by 3).
struct TriangleFactor {
  int host_n = 0;
  std::vector<Triangle> triangles;

  bool operator==(const TriangleFactor&) const = default;
};

// counts[j] = number of triangles with exactly j plus-edges; t[j] = counts[j]/n.
struct TriangleProfile {
  std::array<long long, 4> counts{};
  std::array<Rational, 4> t;
  long long plus_total = 0;
};

// Throws InputError unless factor partitions the host's vertices.
void validate_factor(const SignedCompleteGraph& host, const TriangleFactor& factor);

int triangle_plus(const SignedCompleteGraph& host, const Triangle& t);
TriangleProfile triangle_profile(const SignedCompleteGraph& host, const TriangleFactor& factor);

// (1,2,3), (4,5,6), ...
TriangleFactor consecutive_factor(int n);
// Consecutive triples of a seeded shuffle of 1..n.
TriangleFactor shuffled_factor(int n, std::uint64_t seed);

struct TriangleSearchResult {
  TriangleFactor factor;
  long long accepted = 0;
};

// Local search over pairwise repartitions: for each pair of triangles (in
// index order) the 10 splits of their six vertices into two triples are tried
// and the first one that raises (m+(F), #triangles with two plus-edges)
// lexicographically is taken; the scan then restarts. Rejects n % 3 != 0.
TriangleSearchResult triangle_local_search(const SignedCompleteGraph& host,
                                           const TriangleFactor& start);
TriangleSearchResult triangle_local_search(const SignedCompleteGraph& host);

// Caps on the plus-edges between two triangles of a fixed point, indexed by
// their plus counts.
inline constexpr std::array<std::array<int, 4>, 4> kPairCaps{{
    {0, 0, 3, 3},
    {0, 1, 4, 6},
    {3, 4, 5, 7},
    {3, 6, 7, 9},
}};

struct TriangleCertificate {
  bool pair_caps = false;
  // m+(K) <= sum_i m+(C_i) + sum_{i<j} cap(C_i, C_j).
  bool global_count = false;
  // m+(F) = (t1 + 2 t2 + 3 t3) n and t0 + t1 + t2 + t3 = 1/3.
  bool profile_consistent = false;
  long long plus_in_host = 0;
  long long counted_bound = 0;
  std::optional<std::array<int, 2>> first_violation;
  std::string failure;

  bool passed() const { return pair_caps && global_count && profile_consistent; }
};

// Checks a factor against the cap table. Failures are reported, not thrown.
TriangleCertificate certify_fixed_point(const SignedCompleteGraph& host,
                                        const TriangleFactor& factor);

}  // namespace signedspan
