#include "signedspan/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "signedspan/workers.hpp"

namespace signedspan::oracle {
namespace {

// Histogram of m+(G_pi) over permutations with pi(1) = first.
std::vector<long long> histogram_with_first(const SignedCompleteGraph& host,
                                            const Pattern& pattern, Vertex first) {
  const int n = host.n();
  std::vector<long long> counts(pattern.m() + 1, 0);
  std::vector<Vertex> image(n + 1);
  std::vector<Vertex> rest;
  for (Vertex v = 1; v <= n; ++v)
    if (v != first) rest.push_back(v);
  image[1] = first;
  const auto edges = pattern.edges();
  do {
    for (int i = 0; i + 1 < n; ++i) image[i + 2] = rest[i];
    std::size_t plus = 0;
    for (const Edge& e : edges) plus += host.is_plus(image[e.u], image[e.v]);
    ++counts[plus];
  } while (std::next_permutation(rest.begin(), rest.end()));
  return counts;
}

}  // namespace

SpectrumResult spectrum(const SignedCompleteGraph& host, const Pattern& pattern, int cap) {
  const int n = host.n();
  if (pattern.n() != n) throw InputError("pattern order does not match host order");
  if (n > cap)
    throw InputError("spectrum enumerates n! permutations; n=" + std::to_string(n) +
                     " exceeds cap " + std::to_string(cap) + " (sample embeddings instead)");

  std::vector<std::vector<long long>> partial(n);
  std::atomic<int> next{1};
  const int workers = std::min(worker_count(), n);
  auto work = [&] {
    for (int first = next++; first <= n; first = next++)
      partial[first - 1] = histogram_with_first(host, pattern, first);
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  SpectrumResult result;
  std::vector<BigInt> total(pattern.m() + 1, 0);
  for (const auto& h : partial)
    for (std::size_t v = 0; v < h.size(); ++v) total[v] += h[v];
  BigInt weighted = 0;
  for (std::size_t v = 0; v < total.size(); ++v) {
    if (total[v] == 0) continue;
    const long long value = static_cast<long long>(v);
    result.values.push_back(value);
    result.multiplicities[value] = total[v];
    result.permutations += total[v];
    weighted += total[v] * value;
  }
  result.mean = Rational(weighted, result.permutations);
  for (std::size_t i = 1; i < result.values.size(); ++i)
    result.max_gap = std::max(result.max_gap, result.values[i] - result.values[i - 1]);
  return result;
}

bool has_value_near_mean(const SpectrumResult& spectrum, const Pattern& pattern) {
  const Rational delta(pattern.max_degree());
  return std::any_of(spectrum.values.begin(), spectrum.values.end(), [&](long long v) {
    const Rational diff = Rational(v) - spectrum.mean;
    return (diff < 0 ? -diff : diff) <= delta;
  });
}

HamiltonianOptimum best_hamiltonian(const SignedCompleteGraph& host, int cap) {
  const int n = host.n();
  if (n < 3) throw InputError("Hamiltonian cycles need n >= 3");
  if (n > cap)
    throw InputError("n=" + std::to_string(n) + " exceeds Hamiltonian oracle cap " +
                     std::to_string(cap));
  HamiltonianOptimum best;
  std::vector<Vertex> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<Vertex> cycle(n);
  cycle[0] = 1;
  bool first = true;
  do {
    // Each cycle is listed once: vertex 1 first, then direction fixed.
    if (rest.front() > rest.back()) continue;
    std::copy(rest.begin(), rest.end(), cycle.begin() + 1);
    const long long plus = cycle_plus_count(host, cycle);
    if (first || plus > best.max_plus) {
      best.max_plus = plus;
      best.cycle = cycle;
    }
    best.min_plus = first ? plus : std::min(best.min_plus, plus);
    first = false;
    ++best.cycles;
  } while (std::next_permutation(rest.begin(), rest.end()));
  best.max_abs_sum = std::max(2 * best.max_plus - n, n - 2 * best.min_plus);
  return best;
}

namespace {

void search_factors(const SignedCompleteGraph& host, std::vector<char>& used,
                    std::vector<Triangle>& current, long long plus, FactorOptimum& best) {
  const int n = host.n();
  Vertex a = 1;
  while (a <= n && used[a]) ++a;
  if (a > n) {
    ++best.factors;
    if (best.factors == 1 || plus > best.max_plus) {
      best.max_plus = plus;
      best.factor.triangles = current;
    }
    return;
  }
  used[a] = 1;
  for (Vertex b = a + 1; b <= n; ++b) {
    if (used[b]) continue;
    used[b] = 1;
    for (Vertex c = b + 1; c <= n; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      current.push_back({a, b, c});
      search_factors(host, used, current, plus + triangle_plus(host, current.back()), best);
      current.pop_back();
      used[c] = 0;
    }
    used[b] = 0;
  }
  used[a] = 0;
}

}  // namespace

FactorOptimum best_triangle_factor(const SignedCompleteGraph& host, int cap) {
  const int n = host.n();
  if (n < 3 || n % 3 != 0)
    throw InputError("triangle factors need n divisible by 3, got " + std::to_string(n));
  if (n > cap)
    throw InputError("n=" + std::to_string(n) + " exceeds triangle-factor oracle cap " +
                     std::to_string(cap));
  FactorOptimum best;
  best.factor.host_n = n;
  std::vector<char> used(n + 1, 0);
  std::vector<Triangle> current;
  search_factors(host, used, current, 0, best);
  return best;
}

}  // namespace signedspan::oracle
