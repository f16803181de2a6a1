#include "signedspan/embedder.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "signedspan/random.hpp"

namespace signedspan {
namespace {

// Pattern edges split by how they sit relative to m_g.
struct Layout {
  std::vector<int> g_pair;       // vertex -> index of its m_g pair
  std::vector<int> inner_pairs;  // m_g pairs that are pattern edges (exactly m_g0)
  std::vector<Edge> crossing;    // pattern edges joining two m_g pairs
};

Layout classify(const Pattern& pattern, const MatchedPair& pair) {
  Layout layout;
  layout.g_pair.assign(pair.n + 1, -1);
  for (int i = 0; i < static_cast<int>(pair.m_g.size()); ++i) {
    layout.g_pair[pair.m_g[i].u] = i;
    layout.g_pair[pair.m_g[i].v] = i;
  }
  for (const Edge& e : pattern.edges()) {
    const int a = layout.g_pair[e.u], b = layout.g_pair[e.v];
    if (a < 0 || b < 0) throw InputError("m_g does not cover the pattern's vertices");
    if (a == b) {
      if (!std::binary_search(pair.m_g0.begin(), pair.m_g0.end(), e))
        throw std::logic_error("pattern edge inside an m_g pair but outside m_g0");
      layout.inner_pairs.push_back(a);
    } else {
      layout.crossing.push_back(e);
    }
  }
  return layout;
}

void check_pair(const SignedCompleteGraph& host, const Pattern& pattern, const MatchedPair& pair) {
  if (host.n() != pattern.n() || host.n() != pair.n)
    throw InputError("host, pattern and matched pair disagree on n");
  if (!is_perfect_matching(pair.n, pair.m_k) || !is_perfect_matching(pair.n, pair.m_g))
    throw InputError("matched pair does not hold two perfect matchings");
}

// Conditional expectation as num / scale with integer arithmetic. With r
// unused m_k pairs the probabilities have denominators r, 2r and 2r(r-1), all
// dividing scale = 2r max(r-1, 1).
struct ScaledValue {
  long long num = 0;
  long long scale = 1;
};

ScaledValue evaluate(const SignedCompleteGraph& host, const MatchedPair& pair,
                     const Layout& layout, const MatchedAssignment& a) {
  const int half = pair.n / 2;
  std::vector<bool> used(half, false);
  std::vector<Vertex> image(pair.n + 1, 0);
  for (int i = 0; i < half; ++i) {
    const int t = a.target[i];
    if (t < 0) continue;
    used[t] = true;
    const Edge& g = pair.m_g[i];
    const Edge& k = pair.m_k[t];
    image[g.u] = a.flipped[i] ? k.v : k.u;
    image[g.v] = a.flipped[i] ? k.u : k.v;
  }
  std::vector<Vertex> free_vertices;
  long long plus_unused_k = 0;
  for (int t = 0; t < half; ++t) {
    if (used[t]) continue;
    free_vertices.push_back(pair.m_k[t].u);
    free_vertices.push_back(pair.m_k[t].v);
    if (host.is_plus(pair.m_k[t].u, pair.m_k[t].v)) ++plus_unused_k;
  }
  const long long r = static_cast<long long>(free_vertices.size()) / 2;
  ScaledValue out;
  out.scale = r == 0 ? 1 : 2 * r * std::max(r - 1, 1LL);
  const long long S = out.scale;

  std::vector<long long> deg_cache(pair.n + 1, -1);
  auto plus_degree_to_free = [&](Vertex x) {
    long long& slot = deg_cache[x];
    if (slot < 0) {
      slot = 0;
      for (Vertex w : free_vertices)
        if (host.is_plus(x, w)) ++slot;
    }
    return slot;
  };
  long long plus_cross_free = -1;
  auto plus_cross = [&]() {
    if (plus_cross_free < 0) {
      long long within = 0;
      for (std::size_t i = 0; i < free_vertices.size(); ++i)
        for (std::size_t j = i + 1; j < free_vertices.size(); ++j)
          if (host.is_plus(free_vertices[i], free_vertices[j])) ++within;
      plus_cross_free = within - plus_unused_k;
    }
    return plus_cross_free;
  };

  for (int i : layout.inner_pairs) {
    const int t = a.target[i];
    if (t >= 0)
      out.num += host.is_plus(pair.m_k[t].u, pair.m_k[t].v) ? S : 0;
    else
      out.num += plus_unused_k * (S / r);
  }
  for (const Edge& e : layout.crossing) {
    const Vertex x = image[e.u], y = image[e.v];
    if (x && y) {
      out.num += host.is_plus(x, y) ? S : 0;
    } else if (x || y) {
      out.num += plus_degree_to_free(x ? x : y) * (S / (2 * r));
    } else {
      out.num += plus_cross() * (S / (2 * r * (r - 1)));
    }
  }
  return out;
}

Rational to_rational(const ScaledValue& v) { return Rational(v.num) / Rational(v.scale); }

}  // namespace

BigInt RestrictedEmbeddingSpace::size() const {
  BigInt out = factorial(static_cast<unsigned>(half()));
  out <<= half();
  return out;
}

MatchedAssignment MatchedAssignment::empty(int half) {
  return {std::vector<int>(half, -1), std::vector<bool>(half, false)};
}

bool MatchedAssignment::complete() const {
  return std::none_of(target.begin(), target.end(), [](int t) { return t < 0; });
}

Embedding realize(const MatchedPair& pair, const MatchedAssignment& assignment) {
  const int half = pair.n / 2;
  if (static_cast<int>(assignment.target.size()) != half || !assignment.complete())
    throw InputError("assignment must map every m_g pair");
  std::vector<Vertex> images(pair.n, 0);
  for (int i = 0; i < half; ++i) {
    const Edge& g = pair.m_g[i];
    const Edge& k = pair.m_k.at(assignment.target[i]);
    images[g.u - 1] = assignment.flipped[i] ? k.v : k.u;
    images[g.v - 1] = assignment.flipped[i] ? k.u : k.v;
  }
  return Embedding(std::move(images));
}

Embedding sample(const RestrictedEmbeddingSpace& space, std::uint64_t seed) {
  const int half = space.half();
  Rng rng(seed);
  MatchedAssignment a = MatchedAssignment::empty(half);
  std::iota(a.target.begin(), a.target.end(), 0);
  rng.shuffle(a.target);
  for (int i = 0; i < half; ++i) a.flipped[i] = rng.coin();
  return realize(space.pair, a);
}

Rational exact_expectation(const SignedCompleteGraph& host, const Pattern& pattern,
                           const MatchedPair& pair) {
  check_pair(host, pattern, pair);
  const Layout layout = classify(pattern, pair);
  const long long n = pair.n;
  Rational expectation = Rational(static_cast<long long>(layout.inner_pairs.size())) * pair.p;
  if (!layout.crossing.empty()) {
    // Each crossing edge hits a given pair outside m_k with probability
    // 2 (h-2)! 2^(h-2) / (h! 2^h) = 2 / (n (n-2)), h = n/2.
    const Rational per_pair = Rational(2) / Rational(n * (n - 2));
    const Rational plus_outside =
        Rational(host.plus_count()) - pair.p * Rational(n / 2);
    expectation += Rational(static_cast<long long>(layout.crossing.size())) * per_pair *
                   plus_outside;
  }
  return expectation;
}

Rational conditional_expectation(const SignedCompleteGraph& host, const Pattern& pattern,
                                 const MatchedPair& pair, const MatchedAssignment& partial) {
  check_pair(host, pattern, pair);
  if (static_cast<int>(partial.target.size()) != pair.n / 2 ||
      partial.flipped.size() != partial.target.size())
    throw InputError("partial assignment has the wrong size");
  return to_rational(evaluate(host, pair, classify(pattern, pair), partial));
}

Embedding derandomize(const SignedCompleteGraph& host, const Pattern& pattern,
                      const MatchedPair& pair, std::vector<Rational>* trace) {
  check_pair(host, pattern, pair);
  const Layout layout = classify(pattern, pair);
  const int half = pair.n / 2;
  MatchedAssignment a = MatchedAssignment::empty(half);
  std::vector<bool> used(half, false);
  if (trace) trace->push_back(to_rational(evaluate(host, pair, layout, a)));
  for (int i = 0; i < half; ++i) {
    int best_target = -1;
    bool best_flip = false;
    ScaledValue best;
    for (int t = 0; t < half; ++t) {
      if (used[t]) continue;
      for (bool flip : {false, true}) {
        a.target[i] = t;
        a.flipped[i] = flip;
        const ScaledValue v = evaluate(host, pair, layout, a);
        // Candidates share the same scale, so numerators compare directly.
        if (best_target < 0 || v.num > best.num) {
          best = v;
          best_target = t;
          best_flip = flip;
        }
      }
    }
    a.target[i] = best_target;
    a.flipped[i] = best_flip;
    used[best_target] = true;
    if (trace) trace->push_back(to_rational(best));
  }
  return realize(pair, a);
}

EmbedResult embed_unbalanced(const SignedCompleteGraph& host, const Pattern& pattern) {
  const int n = host.n();
  if (n < 4) throw InputError("embed_unbalanced needs n >= 4, got " + std::to_string(n));
  if (pattern.n() != n) throw InputError("pattern order does not match host order");
  const int delta = std::max(pattern.max_degree(), 1);
  const auto bound = bounds::theorem0_bound_exact(n, host.plus_count(), delta,
                                                  static_cast<long long>(pattern.m()));

  if (n % 2 == 0) {
    const MatchedPair pair = build_matched_pair(host, pattern);
    Embedding emb = derandomize(host, pattern, pair);
    const EmbeddingScore s = score(host, pattern, emb);
    return {std::move(emb), s, bound, exact_expectation(host, pattern, pair), std::nullopt};
  }

  // x minimizes the plus-degree, i.e. maximizes m+(K - x).
  Vertex x = 1;
  for (Vertex v = 2; v <= n; ++v)
    if (host.plus_degree(v) < host.plus_degree(x)) x = v;
  Vertex w = 1;
  for (Vertex v = 2; v <= n; ++v)
    if (pattern.degree(v) < pattern.degree(w)) w = v;

  std::vector<Vertex> swap_images(n);
  std::iota(swap_images.begin(), swap_images.end(), 1);
  std::swap(swap_images[w - 1], swap_images[x - 1]);
  const Embedding swap(std::move(swap_images));
  const Pattern moved = pattern.relabeled(swap);

  std::vector<Vertex> keep;
  for (Vertex v = 1; v <= n; ++v)
    if (v != x) keep.push_back(v);
  const EmbedResult sub = embed_unbalanced(host.induced(keep), moved.without_vertex(x));

  std::vector<Vertex> images(n);
  for (Vertex v = 1; v <= n; ++v) {
    if (v == x) {
      images[v - 1] = x;
    } else {
      const Vertex compressed = v < x ? v : v - 1;
      images[v - 1] = keep[sub.embedding(compressed) - 1];
    }
  }
  Embedding total = compose(Embedding(std::move(images)), swap);
  const EmbeddingScore s = score(host, pattern, total);
  return {std::move(total), s, bound, sub.expectation, x};
}

}  // namespace signedspan
