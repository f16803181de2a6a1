#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "signedspan/rational.hpp"

namespace signedspan {

// Vertices are 1-based throughout: a graph of order n has vertices 1..n.
using Vertex = int;

// Thrown for any malformed or out-of-contract input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unordered vertex pair stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

Edge make_edge(Vertex a, Vertex b);

inline long long pair_count(long long n) { return n * (n - 1) / 2; }

class Embedding;

// A complete graph on 1..n with a +1/-1 label on every pair.
class SignedCompleteGraph {
 public:
  // Pairs listed in plus_edges are labeled +1, every other pair -1.
  SignedCompleteGraph(int n, std::span<const Edge> plus_edges);

  static SignedCompleteGraph all_plus(int n);
  static SignedCompleteGraph all_minus(int n);

  int n() const { return n_; }
  bool is_plus(Vertex u, Vertex v) const { return plus_[index(u, v)] != 0; }
  int sign(Vertex u, Vertex v) const { return is_plus(u, v) ? 1 : -1; }

  long long plus_count() const { return plus_count_; }
  long long minus_count() const { return pair_count(n_) - plus_count_; }
  // m+(K) / C(n,2); zero for n < 2.
  Rational density() const;
  bool balanced() const { return plus_count() == minus_count(); }

  std::vector<Edge> plus_edges() const;
  int plus_degree(Vertex v) const;

  // Labeling c'(a,b) = c(rho(a), rho(b)).
  SignedCompleteGraph relabeled(const Embedding& rho) const;
  // Subgraph induced by keep; keep[i] becomes vertex i+1.
  SignedCompleteGraph induced(std::span<const Vertex> keep) const;
  // Every label multiplied by -1.
  SignedCompleteGraph negated() const;
  // Same labeling with the listed pairs forced to -1.
  SignedCompleteGraph with_minus(std::span<const Edge> pairs) const;

  bool operator==(const SignedCompleteGraph&) const = default;

 private:
  SignedCompleteGraph(int n, std::vector<std::uint8_t> plus);
  std::size_t index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(v - 1) * (v - 2) / 2 + (u - 1);
  }
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<std::uint8_t> plus_;
  long long plus_count_ = 0;
};

// Spanning subgraph given by its edge set. Isolated vertices are allowed and
// count towards the minimum degree.
class Pattern {
 public:
  Pattern(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t m() const { return edges_.size(); }
  int degree(Vertex v) const { return degree_[v - 1]; }
  int max_degree() const { return max_degree_; }
  int min_degree() const { return min_degree_; }
  bool has_edge(Vertex a, Vertex b) const;

  // The copy with edge set { pi(u)pi(v) : uv in E }.
  Pattern relabeled(const Embedding& pi) const;
  // Deletes x; vertices above x shift down by one.
  Pattern without_vertex(Vertex x) const;

  bool operator==(const Pattern&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  int max_degree_ = 0;
  int min_degree_ = 0;
};

// A permutation of 1..n.
class Embedding {
 public:
  // images[i] is the image of vertex i+1.
  explicit Embedding(std::vector<Vertex> images);
  static Embedding identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const { return images_[v - 1]; }
  std::span<const Vertex> images() const { return images_; }
  Embedding inverse() const;

  bool operator==(const Embedding&) const = default;

 private:
  std::vector<Vertex> images_;
};

// outer after inner: v -> outer(inner(v)).
Embedding compose(const Embedding& outer, const Embedding& inner);

struct EmbeddingScore {
  long long plus = 0;
  long long minus = 0;
  long long signed_sum = 0;
  bool operator==(const EmbeddingScore&) const = default;
};

EmbeddingScore score(const SignedCompleteGraph& host, const Pattern& pattern,
                     const Embedding& emb);

// Spanning pattern formed by the plus-edges of the host.
Pattern plus_subgraph(const SignedCompleteGraph& host);

// Number of plus-edges among consecutive vertices of a closed vertex cycle.
long long cycle_plus_count(const SignedCompleteGraph& host,
                           std::span<const Vertex> cycle);
long long cycle_signed_sum(const SignedCompleteGraph& host,
                           std::span<const Vertex> cycle);

}  // namespace signedspan
