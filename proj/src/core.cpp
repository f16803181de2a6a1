#include "signedspan/core.hpp"

#include <algorithm>
#include <numeric>

namespace signedspan {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw InputError("loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

SignedCompleteGraph::SignedCompleteGraph(int n, std::span<const Edge> plus_edges)
    : n_(n) {
  if (n < 1) throw InputError("n must be at least 1, got " + std::to_string(n));
  plus_.assign(static_cast<std::size_t>(pair_count(n)), 0);
  for (const Edge& e : plus_edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
    auto& slot = plus_[index(e.u, e.v)];
    if (slot) {
      throw InputError("duplicate plus edge [" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "]");
    }
    slot = 1;
    ++plus_count_;
  }
}

SignedCompleteGraph::SignedCompleteGraph(int n, std::vector<std::uint8_t> plus)
    : n_(n), plus_(std::move(plus)) {
  plus_count_ = std::count(plus_.begin(), plus_.end(), std::uint8_t{1});
}

SignedCompleteGraph SignedCompleteGraph::all_plus(int n) {
  if (n < 1) throw InputError("n must be at least 1");
  return SignedCompleteGraph(n, std::vector<std::uint8_t>(pair_count(n), 1));
}

SignedCompleteGraph SignedCompleteGraph::all_minus(int n) {
  if (n < 1) throw InputError("n must be at least 1");
  return SignedCompleteGraph(n, std::vector<std::uint8_t>(pair_count(n), 0));
}

void SignedCompleteGraph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw InputError("vertex " + std::to_string(v) + " outside 1.." +
                     std::to_string(n_));
  }
}

Rational SignedCompleteGraph::density() const {
  if (n_ < 2) return Rational(0);
  return Rational(plus_count_) / Rational(pair_count(n_));
}

std::vector<Edge> SignedCompleteGraph::plus_edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(plus_count_));
  for (Vertex u = 1; u <= n_; ++u)
    for (Vertex v = u + 1; v <= n_; ++v)
      if (is_plus(u, v)) out.push_back({u, v});
  return out;
}

int SignedCompleteGraph::plus_degree(Vertex v) const {
  check_vertex(v);
  int deg = 0;
  for (Vertex w = 1; w <= n_; ++w)
    if (w != v && is_plus(v, w)) ++deg;
  return deg;
}

SignedCompleteGraph SignedCompleteGraph::relabeled(const Embedding& rho) const {
  if (rho.n() != n_) throw InputError("relabeling size does not match host");
  std::vector<std::uint8_t> plus(plus_.size());
  for (Vertex u = 1; u <= n_; ++u)
    for (Vertex v = u + 1; v <= n_; ++v)
      plus[index(u, v)] = plus_[index(rho(u), rho(v))];
  return SignedCompleteGraph(n_, std::move(plus));
}

SignedCompleteGraph SignedCompleteGraph::induced(std::span<const Vertex> keep) const {
  const int k = static_cast<int>(keep.size());
  if (k < 1) throw InputError("induced subgraph needs at least one vertex");
  std::vector<bool> seen(n_ + 1, false);
  for (Vertex v : keep) {
    check_vertex(v);
    if (seen[v]) throw InputError("duplicate vertex in induced set");
    seen[v] = true;
  }
  SignedCompleteGraph out = all_minus(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      out.plus_[out.index(i + 1, j + 1)] = plus_[index(keep[i], keep[j])];
  out.plus_count_ = std::count(out.plus_.begin(), out.plus_.end(), std::uint8_t{1});
  return out;
}

SignedCompleteGraph SignedCompleteGraph::negated() const {
  std::vector<std::uint8_t> plus(plus_.size());
  std::transform(plus_.begin(), plus_.end(), plus.begin(),
                 [](std::uint8_t s) { return static_cast<std::uint8_t>(1 - s); });
  return SignedCompleteGraph(n_, std::move(plus));
}

SignedCompleteGraph SignedCompleteGraph::with_minus(std::span<const Edge> pairs) const {
  std::vector<std::uint8_t> plus = plus_;
  for (const Edge& e : pairs) {
    check_vertex(e.u);
    check_vertex(e.v);
    plus[index(e.u, e.v)] = 0;
  }
  return SignedCompleteGraph(n_, std::move(plus));
}

Pattern::Pattern(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw InputError("pattern n must be at least 1");
  for (Edge& e : edges_) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw InputError("pattern edge [" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "] outside 1.." + std::to_string(n));
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw InputError("duplicate pattern edge [" + std::to_string(dup->u) + "," +
                     std::to_string(dup->v) + "]");
  }
  degree_.assign(n, 0);
  for (const Edge& e : edges_) {
    ++degree_[e.u - 1];
    ++degree_[e.v - 1];
  }
  auto [lo, hi] = std::minmax_element(degree_.begin(), degree_.end());
  min_degree_ = *lo;
  max_degree_ = *hi;
}

bool Pattern::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

Pattern Pattern::relabeled(const Embedding& pi) const {
  if (pi.n() != n_) throw InputError("relabeling size does not match pattern");
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(make_edge(pi(e.u), pi(e.v)));
  return Pattern(n_, std::move(out));
}

Pattern Pattern::without_vertex(Vertex x) const {
  if (x < 1 || x > n_) throw InputError("vertex to remove outside pattern");
  if (n_ == 1) throw InputError("cannot remove the only vertex");
  auto shift = [x](Vertex v) { return v > x ? v - 1 : v; };
  std::vector<Edge> out;
  for (const Edge& e : edges_)
    if (e.u != x && e.v != x) out.push_back({shift(e.u), shift(e.v)});
  return Pattern(n_ - 1, std::move(out));
}

Embedding::Embedding(std::vector<Vertex> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> hit(n + 1, false);
  for (Vertex v : images_) {
    if (v < 1 || v > n) throw InputError("embedding image outside 1..n");
    if (hit[v]) throw InputError("embedding is not a bijection");
    hit[v] = true;
  }
}

Embedding Embedding::identity(int n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Embedding(std::move(images));
}

Embedding Embedding::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (int i = 0; i < n(); ++i) inv[images_[i] - 1] = i + 1;
  return Embedding(std::move(inv));
}

Embedding compose(const Embedding& outer, const Embedding& inner) {
  if (outer.n() != inner.n()) throw InputError("composing embeddings of different size");
  std::vector<Vertex> images(inner.n());
  for (Vertex v = 1; v <= inner.n(); ++v) images[v - 1] = outer(inner(v));
  return Embedding(std::move(images));
}

EmbeddingScore score(const SignedCompleteGraph& host, const Pattern& pattern,
                     const Embedding& emb) {
  if (host.n() != pattern.n() || host.n() != emb.n()) {
    throw InputError("dimension mismatch: host n=" + std::to_string(host.n()) +
                     ", pattern n=" + std::to_string(pattern.n()) +
                     ", embedding n=" + std::to_string(emb.n()));
  }
  EmbeddingScore s;
  for (const Edge& e : pattern.edges()) {
    if (host.is_plus(emb(e.u), emb(e.v)))
      ++s.plus;
    else
      ++s.minus;
  }
  s.signed_sum = s.plus - s.minus;
  return s;
}

Pattern plus_subgraph(const SignedCompleteGraph& host) {
  return Pattern(host.n(), host.plus_edges());
}

long long cycle_plus_count(const SignedCompleteGraph& host,
                           std::span<const Vertex> cycle) {
  long long plus = 0;
  const std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len; ++i)
    if (host.is_plus(cycle[i], cycle[(i + 1) % len])) ++plus;
  return plus;
}

long long cycle_signed_sum(const SignedCompleteGraph& host,
                           std::span<const Vertex> cycle) {
  return 2 * cycle_plus_count(host, cycle) - static_cast<long long>(cycle.size());
}

}  // namespace signedspan
