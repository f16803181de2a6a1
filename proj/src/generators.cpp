#include "signedspan/generators.hpp"

#include <cmath>
#include <map>

#include "signedspan/random.hpp"

namespace signedspan::generators {
namespace {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(pair_count(n)));
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) pairs.push_back({u, v});
  return pairs;
}

void require_balanceable(int n, const char* who) {
  if (n < 1 || (n % 4 != 0 && n % 4 != 1))
    throw InputError(std::string(who) + ": a balanced labeling needs n % 4 in {0,1}, got n=" +
                     std::to_string(n));
}

SignedCompleteGraph choose_plus(int n, long long count, std::uint64_t seed) {
  std::vector<Edge> pairs = all_pairs(n);
  Rng rng(seed);
  // Partial Fisher-Yates: the first count slots become a uniform subset.
  for (long long i = 0; i < count; ++i) {
    const auto j = static_cast<std::size_t>(i) +
                   static_cast<std::size_t>(rng.below(pairs.size() - static_cast<std::size_t>(i)));
    std::swap(pairs[static_cast<std::size_t>(i)], pairs[j]);
  }
  pairs.resize(static_cast<std::size_t>(count));
  return SignedCompleteGraph(n, pairs);
}

}  // namespace

SignedCompleteGraph bipartite_minus_matching(int n) {
  if (n < 4 || n % 4 != 0)
    throw InputError("bipartite_minus_matching needs n divisible by 4, got " + std::to_string(n));
  const int half = n / 2;
  std::vector<Edge> plus;
  for (Vertex u = 1; u <= half; ++u)
    for (Vertex v = half + 1; v <= n; ++v)
      if (!(u <= n / 4 && v == u + half)) plus.push_back({u, v});
  SignedCompleteGraph host(n, plus);
  if (!host.balanced()) throw std::logic_error("bipartite_minus_matching not balanced");
  return host;
}

int minus_clique_order(int n) {
  // Largest r with 2 r^2 <= n^2.
  int r = static_cast<int>(std::floor(n / std::sqrt(2.0)));
  while (2LL * (r + 1) * (r + 1) <= 1LL * n * n) ++r;
  while (r > 0 && 2LL * r * r > 1LL * n * n) --r;
  return r;
}

SignedCompleteGraph minus_clique(int n) {
  require_balanceable(n, "minus_clique");
  const int r = minus_clique_order(n);
  const long long half = pair_count(n) / 2;
  const Vertex first_clique = n - r + 1;
  std::vector<std::vector<char>> minus(n + 1, std::vector<char>(n + 1, 0));
  long long minus_count = 0;
  for (Vertex u = first_clique; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) {
      minus[u][v] = 1;
      ++minus_count;
    }
  for (Vertex u = 1; u < first_clique && minus_count < half; ++u)
    for (Vertex v = first_clique; v <= n && minus_count < half; ++v) {
      minus[u][v] = 1;
      ++minus_count;
    }
  if (minus_count != half) throw std::logic_error("minus_clique could not reach balance");
  std::vector<Edge> plus;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (!minus[u][v]) plus.push_back({u, v});
  return SignedCompleteGraph(n, plus);
}

SignedCompleteGraph random_labeling(int n, double d, std::uint64_t seed) {
  if (n < 1) throw InputError("random_labeling: n must be at least 1");
  if (!(d >= 0.0 && d <= 1.0)) throw InputError("random_labeling: d must lie in [0,1]");
  return choose_plus(n, std::llround(d * static_cast<double>(pair_count(n))), seed);
}

SignedCompleteGraph random_balanced(int n, std::uint64_t seed) {
  require_balanceable(n, "random_balanced");
  return choose_plus(n, pair_count(n) / 2, seed);
}

SignedCompleteGraph planted_cliques(int n, int r) {
  if (r < 2 || n < r || n % r != 0)
    throw InputError("planted_cliques needs 2 <= r and r dividing n");
  std::vector<Edge> plus;
  for (Vertex base = 1; base <= n; base += r)
    for (Vertex u = base; u < base + r; ++u)
      for (Vertex v = u + 1; v < base + r; ++v) plus.push_back({u, v});
  return SignedCompleteGraph(n, plus);
}

GeneratorKind parse_generator_kind(const std::string& name) {
  static const std::map<std::string, GeneratorKind> kinds{
      {"bipartite_minus_matching", GeneratorKind::kBipartiteMinusMatching},
      {"minus_clique", GeneratorKind::kMinusClique},
      {"random_density", GeneratorKind::kRandomDensity},
      {"random_balanced", GeneratorKind::kRandomBalanced},
      {"planted", GeneratorKind::kPlanted},
  };
  auto it = kinds.find(name);
  if (it == kinds.end()) throw InputError("unknown generator kind '" + name + "'");
  return it->second;
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kBipartiteMinusMatching: return "bipartite_minus_matching";
    case GeneratorKind::kMinusClique: return "minus_clique";
    case GeneratorKind::kRandomDensity: return "random_density";
    case GeneratorKind::kRandomBalanced: return "random_balanced";
    case GeneratorKind::kPlanted: return "planted";
  }
  return "unknown";
}

SignedCompleteGraph generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::kBipartiteMinusMatching: return bipartite_minus_matching(spec.n);
    case GeneratorKind::kMinusClique: return minus_clique(spec.n);
    case GeneratorKind::kRandomDensity: return random_labeling(spec.n, spec.d, spec.seed);
    case GeneratorKind::kRandomBalanced: return random_balanced(spec.n, spec.seed);
    case GeneratorKind::kPlanted: return planted_cliques(spec.n, spec.r);
  }
  throw InputError("unknown generator kind");
}

PatternKind parse_pattern_kind(const std::string& name) {
  static const std::map<std::string, PatternKind> kinds{
      {"clique_factor", PatternKind::kCliqueFactor},
      {"matching", PatternKind::kMatching},
      {"hamiltonian", PatternKind::kHamiltonian},
      {"triangle_factor", PatternKind::kTriangleFactor},
      {"path", PatternKind::kPath},
      {"random_bounded", PatternKind::kRandomBounded},
  };
  auto it = kinds.find(name);
  if (it == kinds.end()) throw InputError("unknown pattern kind '" + name + "'");
  return it->second;
}

std::string to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::kCliqueFactor: return "clique_factor";
    case PatternKind::kMatching: return "matching";
    case PatternKind::kHamiltonian: return "hamiltonian";
    case PatternKind::kTriangleFactor: return "triangle_factor";
    case PatternKind::kPath: return "path";
    case PatternKind::kRandomBounded: return "random_bounded";
  }
  return "unknown";
}

Pattern pattern_factory(PatternKind kind, int n, int delta, std::uint64_t seed) {
  if (n < 1) throw InputError("pattern needs n >= 1");
  std::vector<Edge> edges;
  auto cliques = [&](int size) {
    if (size < 2 || n % size != 0)
      throw InputError("clique factor of K_" + std::to_string(size) + " needs n divisible by " +
                       std::to_string(size) + ", got n=" + std::to_string(n));
    for (Vertex base = 1; base <= n; base += size)
      for (Vertex u = base; u < base + size; ++u)
        for (Vertex v = u + 1; v < base + size; ++v) edges.push_back({u, v});
  };
  switch (kind) {
    case PatternKind::kCliqueFactor:
      if (delta < 1) throw InputError("clique factor needs delta >= 1");
      cliques(delta + 1);
      break;
    case PatternKind::kMatching:
      if (n % 2 != 0) throw InputError("perfect matching pattern needs even n");
      cliques(2);
      break;
    case PatternKind::kTriangleFactor:
      if (n % 3 != 0) throw InputError("triangle factor pattern needs n divisible by 3");
      cliques(3);
      break;
    case PatternKind::kHamiltonian:
      if (n < 3) throw InputError("Hamiltonian cycle pattern needs n >= 3");
      for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
      edges.push_back({1, n});
      break;
    case PatternKind::kPath:
      for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
      break;
    case PatternKind::kRandomBounded: {
      if (delta < 0) throw InputError("random_bounded needs delta >= 0");
      std::vector<Edge> pairs = all_pairs(n);
      Rng rng(seed);
      rng.shuffle(pairs);
      std::vector<int> degree(n + 1, 0);
      for (const Edge& e : pairs) {
        if (degree[e.u] >= delta || degree[e.v] >= delta) continue;
        ++degree[e.u];
        ++degree[e.v];
        edges.push_back(e);
      }
      break;
    }
  }
  return Pattern(n, std::move(edges));
}

}  // namespace signedspan::generators
