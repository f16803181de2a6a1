#include "signedspan/matching.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace signedspan {
namespace {

// Gabow-style O(V^3) blossom search on 0-based vertices.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Pattern& graph)
      : n_(graph.n()), adj_(n_), mate_(n_, -1), parent_(n_), base_(n_),
        in_tree_(n_), in_blossom_(n_) {
    for (const Edge& e : graph.edges()) {
      adj_[e.u - 1].push_back(e.v - 1);
      adj_[e.v - 1].push_back(e.u - 1);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

  Matching run() {
    // Greedy warm start; does not affect optimality.
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (int w : adj_[v]) {
        if (mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    // A vertex with no augmenting path stays that way after later
    // augmentations, so one search per free vertex suffices.
    for (int root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      int end = find_augmenting_path(root);
      while (end != -1) {
        const int prev = parent_[end];
        const int next = mate_[prev];
        mate_[end] = prev;
        mate_[prev] = end;
        end = next;
      }
    }
    Matching out;
    for (int v = 0; v < n_; ++v)
      if (mate_[v] > v) out.push_back({v + 1, mate_[v] + 1});
    return out;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(in_tree_.begin(), in_tree_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    in_tree_[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const int shared = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, shared, to);
          mark_path(to, shared, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = shared;
            if (!in_tree_[i]) {
              in_tree_[i] = true;
              queue.push(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          const int next = mate_[to];
          in_tree_[next] = true;
          queue.push(next);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_, parent_, base_;
  std::vector<bool> in_tree_, in_blossom_;
};

}  // namespace

bool is_matching(int n, const Matching& matching) {
  std::vector<bool> used(n + 1, false);
  for (const Edge& e : matching) {
    if (e.u < 1 || e.v > n || e.u >= e.v) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

bool is_perfect_matching(int n, const Matching& matching) {
  return n % 2 == 0 && static_cast<int>(matching.size()) * 2 == n && is_matching(n, matching);
}

Matching max_matching(const Pattern& graph) { return BlossomMatcher(graph).run(); }

Matching greedy_maximal_matching(const Pattern& graph) {
  std::vector<bool> used(graph.n() + 1, false);
  Matching out;
  for (const Edge& e : graph.edges()) {
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = true;
    out.push_back(e);
  }
  return out;
}

Matching extend_to_perfect(int n, Matching partial) {
  if (n % 2 != 0) throw InputError("perfect matching needs even n, got " + std::to_string(n));
  if (!is_matching(n, partial)) throw InputError("partial matching is not a matching");
  std::vector<bool> used(n + 1, false);
  for (const Edge& e : partial) used[e.u] = used[e.v] = true;
  Vertex pending = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (used[v]) continue;
    if (pending == 0) {
      pending = v;
    } else {
      partial.push_back({pending, v});
      pending = 0;
    }
  }
  std::sort(partial.begin(), partial.end());
  return partial;
}

bool erdos_gallai_first_branch(long long n, long long m) {
  return 25 * m <= 8 * n * n - 14 * n + 3;
}

double erdos_gallai_bound(long long n, long long m) {
  if (n < 1) throw InputError("erdos_gallai_bound: n must be at least 1");
  if (m < 0 || m > pair_count(n))
    throw InputError("erdos_gallai_bound: m=" + std::to_string(m) + " outside 0..C(n,2)");
  const long double nn = static_cast<long double>(n);
  const long double mm = static_cast<long double>(m);
  if (erdos_gallai_first_branch(n, m)) {
    // n^2 - 2m - n + 1/4 = ((2n-1)^2 - 8m) / 4, exact in integers.
    const long double radicand = static_cast<long double>((2 * n - 1) * (2 * n - 1) - 8 * m);
    return static_cast<double>(nn - 0.5L - std::sqrt(radicand) / 2.0L);
  }
  return static_cast<double>((std::sqrt(8.0L * mm + 1.0L) - 1.0L) / 4.0L);
}

MatchedPair build_matched_pair(const SignedCompleteGraph& host, const Pattern& pattern) {
  const int n = host.n();
  if (n % 2 != 0)
    throw InputError("matched pair needs even n (use the odd-order reduction), got " +
                     std::to_string(n));
  if (pattern.n() != n) throw InputError("pattern order does not match host order");
  MatchedPair pair;
  pair.n = n;
  pair.m_k = extend_to_perfect(n, max_matching(plus_subgraph(host)));
  pair.plus_pairs = std::count_if(pair.m_k.begin(), pair.m_k.end(),
                                  [&](const Edge& e) { return host.is_plus(e.u, e.v); });
  pair.p = Rational(pair.plus_pairs) / Rational(n / 2);
  pair.m_g0 = greedy_maximal_matching(pattern);
  pair.m_g = extend_to_perfect(n, pair.m_g0);
  return pair;
}

double plus_fraction_lower_bound(long long n, long long plus_count) {
  const double d = static_cast<double>(plus_count) / static_cast<double>(pair_count(n));
  if (erdos_gallai_first_branch(n, plus_count)) return 2.0 - 2.0 * std::sqrt(1.0 - d) - 1.0 / n;
  return std::sqrt(d) - 1.0 / n;
}

}  // namespace signedspan
