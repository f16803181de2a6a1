#include "signedspan/trianglesearch.hpp"

#include <algorithm>
#include <numeric>

#include "signedspan/random.hpp"

namespace signedspan {
namespace {

// The 10 ways to split six slots into two triples, first triple holding slot 0.
constexpr std::array<std::array<int, 3>, 10> kSplits{{
    {0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}, {0, 2, 3},
    {0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {0, 4, 5},
}};

Triangle sorted(Triangle t) {
  std::sort(t.begin(), t.end());
  return t;
}

void check_order(int n) {
  if (n < 3 || n % 3 != 0)
    throw InputError("triangle factor needs n divisible by 3, got " + std::to_string(n));
}

}  // namespace

int triangle_plus(const SignedCompleteGraph& host, const Triangle& t) {
  return host.is_plus(t[0], t[1]) + host.is_plus(t[0], t[2]) + host.is_plus(t[1], t[2]);
}

void validate_factor(const SignedCompleteGraph& host, const TriangleFactor& factor) {
  check_order(host.n());
  if (factor.host_n != host.n()) throw InputError("factor order does not match host");
  if (static_cast<int>(factor.triangles.size()) * 3 != host.n())
    throw InputError("factor must have n/3 triangles");
  std::vector<char> used(host.n() + 1, 0);
  for (const Triangle& t : factor.triangles) {
    for (Vertex v : t) {
      if (v < 1 || v > host.n()) throw InputError("factor vertex outside 1..n");
      if (used[v]) throw InputError("factor repeats vertex " + std::to_string(v));
      used[v] = 1;
    }
  }
}

TriangleProfile triangle_profile(const SignedCompleteGraph& host, const TriangleFactor& factor) {
  validate_factor(host, factor);
  TriangleProfile profile;
  for (const Triangle& t : factor.triangles) {
    const int p = triangle_plus(host, t);
    ++profile.counts[p];
    profile.plus_total += p;
  }
  for (int j = 0; j < 4; ++j) profile.t[j] = Rational(profile.counts[j]) / Rational(host.n());
  return profile;
}

TriangleFactor consecutive_factor(int n) {
  check_order(n);
  TriangleFactor f{n, {}};
  for (Vertex v = 1; v <= n; v += 3) f.triangles.push_back({v, v + 1, v + 2});
  return f;
}

TriangleFactor shuffled_factor(int n, std::uint64_t seed) {
  check_order(n);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  Rng rng(seed);
  rng.shuffle(order);
  TriangleFactor f{n, {}};
  for (int i = 0; i < n; i += 3) f.triangles.push_back(sorted({order[i], order[i + 1], order[i + 2]}));
  return f;
}

TriangleSearchResult triangle_local_search(const SignedCompleteGraph& host,
                                           const TriangleFactor& start) {
  validate_factor(host, start);
  TriangleSearchResult result{start, 0};
  auto& tri = result.factor.triangles;
  for (auto& t : tri) t = sorted(t);
  std::vector<int> plus(tri.size());
  for (std::size_t i = 0; i < tri.size(); ++i) plus[i] = triangle_plus(host, tri[i]);

  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < tri.size() && !moved; ++i) {
      for (std::size_t j = i + 1; j < tri.size() && !moved; ++j) {
        const std::array<Vertex, 6> six{tri[i][0], tri[i][1], tri[i][2],
                                        tri[j][0], tri[j][1], tri[j][2]};
        const int old_plus = plus[i] + plus[j];
        const int old_twos = (plus[i] == 2) + (plus[j] == 2);
        for (const auto& split : kSplits) {
          Triangle a{}, b{};
          std::array<bool, 6> in_a{};
          for (int s : split) in_a[s] = true;
          int ia = 0, ib = 0;
          for (int s = 0; s < 6; ++s) (in_a[s] ? a[ia++] : b[ib++]) = six[s];
          const int pa = triangle_plus(host, a), pb = triangle_plus(host, b);
          const int new_plus = pa + pb;
          const int new_twos = (pa == 2) + (pb == 2);
          if (new_plus > old_plus || (new_plus == old_plus && new_twos > old_twos)) {
            tri[i] = sorted(a);
            tri[j] = sorted(b);
            plus[i] = pa;
            plus[j] = pb;
            ++result.accepted;
            moved = true;
            break;
          }
        }
      }
    }
  }
  return result;
}

TriangleSearchResult triangle_local_search(const SignedCompleteGraph& host) {
  return triangle_local_search(host, consecutive_factor(host.n()));
}

TriangleCertificate certify_fixed_point(const SignedCompleteGraph& host,
                                        const TriangleFactor& factor) {
  const TriangleProfile profile = triangle_profile(host, factor);
  TriangleCertificate cert;
  const auto& tri = factor.triangles;
  std::vector<int> plus(tri.size());
  for (std::size_t i = 0; i < tri.size(); ++i) plus[i] = triangle_plus(host, tri[i]);

  cert.pair_caps = true;
  long long bound = profile.plus_total;
  for (std::size_t i = 0; i < tri.size(); ++i) {
    for (std::size_t j = i + 1; j < tri.size(); ++j) {
      int between = 0;
      for (Vertex a : tri[i])
        for (Vertex b : tri[j]) between += host.is_plus(a, b);
      const int cap = kPairCaps[plus[i]][plus[j]];
      bound += cap;
      if (between > cap && cert.pair_caps) {
        cert.pair_caps = false;
        cert.first_violation = std::array<int, 2>{static_cast<int>(i), static_cast<int>(j)};
        cert.failure = "triangles " + std::to_string(i) + " and " + std::to_string(j) + " (types " +
                       std::to_string(plus[i]) + "," + std::to_string(plus[j]) + ") share " +
                       std::to_string(between) + " plus-edges, cap " + std::to_string(cap);
      }
    }
  }
  cert.plus_in_host = host.plus_count();
  cert.counted_bound = bound;
  cert.global_count = cert.plus_in_host <= cert.counted_bound;
  if (!cert.global_count && cert.failure.empty()) cert.failure = "global count exceeds caps";

  const Rational n(host.n());
  const Rational weighted = profile.t[1] + 2 * profile.t[2] + 3 * profile.t[3];
  const Rational mass = profile.t[0] + profile.t[1] + profile.t[2] + profile.t[3];
  cert.profile_consistent =
      weighted * n == Rational(profile.plus_total) && mass == Rational(1, 3);
  if (!cert.profile_consistent && cert.failure.empty()) cert.failure = "profile inconsistent";
  return cert;
}

}  // namespace signedspan
