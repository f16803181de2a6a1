#include "signedspan/pathsearch.hpp"

#include <algorithm>
#include <numeric>

#include "signedspan/bounds.hpp"

namespace signedspan {
namespace {

// Adjacency of H with at most two neighbours per vertex; 0 marks a free slot.
using Slots = std::vector<std::array<Vertex, 2>>;

int slot_degree(const Slots& s, Vertex v) { return (s[v][0] != 0) + (s[v][1] != 0); }

bool slot_has(const Slots& s, Vertex u, Vertex v) { return s[u][0] == v || s[u][1] == v; }

bool slot_erase(Slots& s, Vertex u, Vertex v) {
  auto drop = [&s](Vertex a, Vertex b) {
    if (s[a][0] == b) {
      s[a][0] = s[a][1];
      s[a][1] = 0;
      return true;
    }
    if (s[a][1] == b) {
      s[a][1] = 0;
      return true;
    }
    return false;
  };
  return drop(u, v) && drop(v, u);
}

bool slot_insert(Slots& s, Vertex u, Vertex v) {
  auto put = [&s](Vertex a, Vertex b) {
    if (s[a][0] == 0) {
      s[a][0] = b;
      return true;
    }
    if (s[a][1] == 0) {
      s[a][1] = b;
      return true;
    }
    return false;
  };
  return put(u, v) && put(v, u);
}

// Paths of H oriented from the smaller endpoint, sorted by first vertex.
// Returns false if H contains a cycle.
bool extract_paths(const Slots& s, int n, std::vector<std::vector<Vertex>>& out,
                   std::vector<char>& seen) {
  out.clear();
  seen.assign(n + 1, 0);
  for (Vertex start = 1; start <= n; ++start) {
    if (seen[start] || slot_degree(s, start) != 1) continue;
    std::vector<Vertex> path{start};
    seen[start] = 1;
    Vertex prev = 0, cur = start;
    for (;;) {
      const Vertex next = s[cur][0] != prev ? s[cur][0] : s[cur][1];
      if (next == 0) break;
      path.push_back(next);
      seen[next] = 1;
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(path));
  }
  for (Vertex v = 1; v <= n; ++v)
    if (!seen[v] && slot_degree(s, v) == 2) return false;
  return true;
}

Slots slots_from(const PathSystem& system) {
  Slots s(system.host_n + 1, {0, 0});
  for (const auto& path : system.paths)
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (!slot_insert(s, path[i], path[i + 1]))
        throw InputError("path system has a vertex of degree above 2");
  return s;
}

class PathSearcher {
 public:
  PathSearcher(const SignedCompleteGraph& host, const PathSystem& start)
      : host_(host), n_(host.n()) {
    validate_path_system(host, start);
    slots_ = slots_from(start);
    refresh();
  }

  bool scan(PathMove kind, bool commit) {
    commit_ = commit;
    switch (kind) {
      case PathMove::kAddEdge: return scan_add();
      case PathMove::kInsert: return scan_insert();
      case PathMove::kMergeViaIsolated: return scan_merge();
      case PathMove::kRerouteInterior: return scan_reroute();
      case PathMove::kEndpointSwap: return scan_endpoint_swap();
    }
    return false;
  }

  PathSystem system() const { return {n_, paths_}; }

 private:
  int degree(Vertex v) const { return slot_degree(slots_, v); }
  bool plus(Vertex a, Vertex b) const { return a != b && host_.is_plus(a, b); }

  void refresh() {
    extract_paths(slots_, n_, paths_, seen_);
    comp_.assign(n_ + 1, -1);
    edges_ = 0;
    for (int i = 0; i < static_cast<int>(paths_.size()); ++i) {
      for (Vertex v : paths_[i]) comp_[v] = i;
      edges_ += static_cast<long long>(paths_[i].size()) - 1;
    }
  }

  // Applies the surgery to a copy of H and accepts it if the result is a path
  // system with (m(H), -k) lexicographically larger.
  bool attempt(std::initializer_list<Edge> remove, std::initializer_list<Edge> add) {
    scratch_ = slots_;
    for (const Edge& e : remove)
      if (!slot_erase(scratch_, e.u, e.v)) return false;
    for (const Edge& e : add) {
      if (!plus(e.u, e.v) || slot_has(scratch_, e.u, e.v)) return false;
      if (!slot_insert(scratch_, e.u, e.v)) return false;
    }
    std::vector<std::vector<Vertex>> paths;
    if (!extract_paths(scratch_, n_, paths, scratch_seen_)) return false;
    const long long edges = edges_ - static_cast<long long>(remove.size()) +
                            static_cast<long long>(add.size());
    const auto k_old = paths_.size(), k_new = paths.size();
    if (!(edges > edges_ || (edges == edges_ && k_new < k_old))) return false;
    if (commit_) {
      slots_.swap(scratch_);
      refresh();
    }
    return true;
  }

  bool scan_add() {
    for (Vertex u = 1; u <= n_; ++u) {
      if (degree(u) >= 2) continue;
      for (Vertex v = u + 1; v <= n_; ++v) {
        if (degree(v) >= 2 || !plus(u, v)) continue;
        if (degree(u) == 1 && degree(v) == 1 && comp_[u] == comp_[v]) continue;
        if (attempt({}, {{u, v}})) return true;
      }
    }
    return false;
  }

  bool scan_insert() {
    for (Vertex u = 1; u <= n_; ++u) {
      if (degree(u) != 0) continue;
      for (const auto& path : paths_) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          const Vertex v = path[i], w = path[i + 1];
          if (plus(u, v) && plus(u, w) && attempt({make_edge(v, w)}, {make_edge(u, v), make_edge(u, w)}))
            return true;
        }
      }
    }
    return false;
  }

  bool scan_merge() {
    struct End {
      int path;
      Vertex end;
      Vertex inner;
    };
    for (Vertex u = 1; u <= n_; ++u) {
      if (degree(u) != 0) continue;
      std::vector<End> ends;
      for (int i = 0; i < static_cast<int>(paths_.size()); ++i) {
        const auto& p = paths_[i];
        if (p.size() < 3) continue;
        if (plus(u, p[1])) ends.push_back({i, p.front(), p[1]});
        if (plus(u, p[p.size() - 2])) ends.push_back({i, p.back(), p[p.size() - 2]});
      }
      for (std::size_t a = 0; a < ends.size(); ++a) {
        for (std::size_t b = a + 1; b < ends.size(); ++b) {
          if (ends[a].path == ends[b].path) continue;
          if (attempt({make_edge(ends[a].end, ends[a].inner), make_edge(ends[b].end, ends[b].inner)},
                      {make_edge(u, ends[a].inner), make_edge(u, ends[b].inner)}))
            return true;
        }
      }
    }
    return false;
  }

  bool scan_reroute() {
    for (Vertex u = 1; u <= n_; ++u) {
      if (degree(u) != 0) continue;
      std::vector<Vertex> interior;
      for (Vertex v = 1; v <= n_; ++v)
        if (degree(v) == 2 && plus(u, v)) interior.push_back(v);
      for (std::size_t i = 0; i < interior.size(); ++i) {
        for (std::size_t j = i + 1; j < interior.size(); ++j) {
          const Vertex v = interior[i], w = interior[j];
          for (Vertex vm : slots_[v]) {
            for (Vertex wm : slots_[w]) {
              if (vm == wm || vm == w || wm == v || !plus(vm, wm)) continue;
              if (attempt({make_edge(v, vm), make_edge(w, wm)},
                          {make_edge(vm, wm), make_edge(v, u), make_edge(u, w)}))
                return true;
            }
          }
        }
      }
    }
    return false;
  }

  bool scan_endpoint_swap() {
    std::vector<Vertex> endpoints;
    for (const auto& p : paths_) {
      endpoints.push_back(p.front());
      endpoints.push_back(p.back());
    }
    std::sort(endpoints.begin(), endpoints.end());
    for (const auto& p : paths_) {
      // Edges u_q u_(q+1) with both ends interior.
      for (std::size_t q = 1; q + 2 < p.size(); ++q) {
        const Vertex uq = p[q], uq1 = p[q + 1];
        for (Vertex a : endpoints) {
          if (!plus(a, uq1)) continue;
          for (Vertex b : endpoints) {
            if (b == a || !plus(b, uq)) continue;
            if (attempt({make_edge(uq, uq1)}, {make_edge(a, uq1), make_edge(b, uq)})) return true;
          }
        }
      }
    }
    return false;
  }

  const SignedCompleteGraph& host_;
  int n_;
  bool commit_ = true;
  Slots slots_, scratch_;
  std::vector<std::vector<Vertex>> paths_;
  std::vector<int> comp_;
  std::vector<char> seen_, scratch_seen_;
  long long edges_ = 0;
};

constexpr std::array<PathMove, 5> kScanOrder{PathMove::kAddEdge, PathMove::kMergeViaIsolated,
                                             PathMove::kInsert, PathMove::kRerouteInterior,
                                             PathMove::kEndpointSwap};

}  // namespace

long long PathSystem::edge_count() const {
  long long m = 0;
  for (const auto& p : paths) m += static_cast<long long>(p.size()) - 1;
  return m;
}

PathSystemStats path_stats(const PathSystem& system) {
  PathSystemStats s;
  s.k = static_cast<int>(system.paths.size());
  s.m_h = system.edge_count();
  for (const auto& p : system.paths) {
    const int interior = static_cast<int>(p.size()) - 2;
    s.n2 += interior;
    if (interior > 0) ++s.ell;
  }
  s.n1 = 2 * s.k;
  s.n0 = system.host_n - s.n1 - s.n2;
  return s;
}

void validate_path_system(const SignedCompleteGraph& host, const PathSystem& system) {
  if (system.host_n != host.n()) throw InputError("path system order does not match host");
  std::vector<char> used(host.n() + 1, 0);
  for (const auto& p : system.paths) {
    if (p.size() < 2) throw InputError("path system contains a trivial path");
    for (Vertex v : p) {
      if (v < 1 || v > host.n()) throw InputError("path vertex outside 1..n");
      if (used[v]) throw InputError("paths are not vertex-disjoint at " + std::to_string(v));
      used[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!host.is_plus(p[i], p[i + 1]))
        throw InputError("path edge [" + std::to_string(p[i]) + "," + std::to_string(p[i + 1]) +
                         "] is not a plus-edge");
  }
}

PathSystem canonicalize(PathSystem system) {
  for (auto& p : system.paths)
    if (!p.empty() && p.back() < p.front()) std::reverse(p.begin(), p.end());
  std::sort(system.paths.begin(), system.paths.end());
  return system;
}

PathSystem greedy_matching_start(const SignedCompleteGraph& host) {
  PathSystem out{host.n(), {}};
  std::vector<char> used(host.n() + 1, 0);
  for (const Edge& e : host.plus_edges()) {
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    out.paths.push_back({e.u, e.v});
  }
  return out;
}

PathSearchResult path_local_search(const SignedCompleteGraph& host, const PathSystem& start) {
  PathSearcher searcher(host, start);
  PathSearchResult result;
  for (;;) {
    bool moved = false;
    for (PathMove kind : kScanOrder) {
      if (searcher.scan(kind, true)) {
        ++result.accepted[static_cast<int>(kind)];
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  result.system = searcher.system();
  return result;
}

PathSearchResult path_local_search(const SignedCompleteGraph& host) {
  return path_local_search(host, PathSystem{host.n(), {}});
}

bool has_improving_move(const SignedCompleteGraph& host, const PathSystem& system, PathMove kind) {
  PathSearcher searcher(host, system);
  return searcher.scan(kind, false);
}

PathCertificate certify_path_system(const SignedCompleteGraph& host, const PathSystem& system) {
  validate_path_system(host, system);
  PathCertificate cert;
  const int n = host.n();
  const PathSystemStats st = path_stats(system);
  auto fail = [&cert](std::string why) {
    if (cert.failure.empty()) cert.failure = std::move(why);
  };

  std::vector<int> degree(n + 1, 0), path_of(n + 1, -1);
  for (int i = 0; i < static_cast<int>(system.paths.size()); ++i) {
    const auto& p = system.paths[i];
    for (std::size_t j = 0; j < p.size(); ++j) {
      path_of[p[j]] = i;
      degree[p[j]] = (j == 0 || j + 1 == p.size()) ? 1 : 2;
    }
  }

  cert.stats_consistent = st.n1 == 2 * st.k && st.n2 == st.m_h - st.k &&
                          st.n0 == n - st.m_h - st.k && st.ell <= st.k && 3 * st.ell <= n;
  if (!cert.stats_consistent) fail("degree-class counts inconsistent");

  cert.claim1 = true;
  for (Vertex u = 1; u <= n && cert.claim1; ++u) {
    if (degree[u] > 1) continue;
    for (Vertex v = u + 1; v <= n; ++v) {
      if (degree[v] > 1 || !host.is_plus(u, v)) continue;
      const bool closes = degree[u] == 1 && degree[v] == 1 && path_of[u] == path_of[v];
      if (!closes) {
        cert.claim1 = false;
        fail("claim1: plus-edge [" + std::to_string(u) + "," + std::to_string(v) +
             "] inside V0+V1");
        break;
      }
    }
  }

  cert.claim2 = true;
  for (Vertex u = 1; u <= n && cert.claim2; ++u) {
    if (degree[u] != 0) continue;
    int to_interior = 0, end_adjacent = 0;
    for (const auto& p : system.paths) {
      if (p.size() < 3) continue;
      const std::size_t last = p.size() - 2;
      for (std::size_t j = 1; j <= last; ++j) {
        if (!host.is_plus(u, p[j])) continue;
        ++to_interior;
        if (j < last && host.is_plus(u, p[j + 1])) {
          cert.claim2 = false;
          fail("claim2: vertex " + std::to_string(u) + " sees consecutive interior vertices");
        }
      }
      if (host.is_plus(u, p[1]) || host.is_plus(u, p[last])) ++end_adjacent;
    }
    if (2 * to_interior > st.n2 - st.ell + 2) {
      cert.claim2 = false;
      fail("claim2: vertex " + std::to_string(u) + " has too many V2 neighbours");
    }
    if (end_adjacent > 1) {
      cert.claim2 = false;
      fail("claim2: vertex " + std::to_string(u) + " sees ends of two interiors");
    }
  }

  cert.claim3_move_free = !has_improving_move(host, system, PathMove::kRerouteInterior);
  if (!cert.claim3_move_free) fail("claim3: a reroute move applies");

  cert.claim4 = true;
  const int k = st.k;
  if (k >= 2) {
    for (int i = 0; i < k && cert.claim4; ++i) {
      const Vertex a = system.paths[i].front();
      const Vertex b = system.paths[(i + 1) % k].back();
      for (const auto& q : system.paths) {
        if (q.size() < 3) continue;
        long long count = 0;
        for (std::size_t j = 1; j + 1 < q.size(); ++j)
          count += host.is_plus(a, q[j]) + host.is_plus(b, q[j]);
        if (count > static_cast<long long>(q.size()) - 2 + 1) {
          cert.claim4 = false;
          fail("claim4: endpoints " + std::to_string(a) + "," + std::to_string(b) +
               " exceed p+1 plus-edges into an interior");
          break;
        }
      }
    }
  }
  return cert;
}

std::vector<Vertex> assemble_hamiltonian(const SignedCompleteGraph& host, const PathSystem& system) {
  const int n = host.n();
  if (n < 3) throw InputError("Hamiltonian cycle needs n >= 3");
  validate_path_system(host, system);

  std::vector<std::vector<Vertex>> pieces = system.paths;
  std::vector<char> covered(n + 1, 0);
  for (const auto& p : pieces)
    for (Vertex v : p) covered[v] = 1;
  for (Vertex v = 1; v <= n; ++v)
    if (!covered[v]) pieces.push_back({v});

  std::vector<Vertex> cycle = pieces.front();
  std::vector<char> taken(pieces.size(), 0);
  taken[0] = 1;
  for (std::size_t placed = 1; placed < pieces.size(); ++placed) {
    const Vertex tail = cycle.back();
    std::size_t pick = pieces.size();
    bool reverse = false;
    for (std::size_t i = 0; i < pieces.size() && pick == pieces.size(); ++i) {
      if (taken[i]) continue;
      if (host.is_plus(tail, pieces[i].front())) {
        pick = i;
      } else if (host.is_plus(tail, pieces[i].back())) {
        pick = i;
        reverse = true;
      }
    }
    if (pick == pieces.size())
      pick = static_cast<std::size_t>(std::find(taken.begin(), taken.end(), 0) - taken.begin());
    taken[pick] = 1;
    if (reverse)
      cycle.insert(cycle.end(), pieces[pick].rbegin(), pieces[pick].rend());
    else
      cycle.insert(cycle.end(), pieces[pick].begin(), pieces[pick].end());
  }
  return cycle;
}

DiscrepancyResult discrepancy_hamiltonian(const SignedCompleteGraph& host) {
  const int n = host.n();
  if (n < 4) throw InputError("discrepancy_hamiltonian needs n >= 4, got " + std::to_string(n));
  DiscrepancyResult result;
  result.negated = host.plus_count() < host.minus_count();
  const SignedCompleteGraph oriented = result.negated ? host.negated() : host;

  // Drop vertices of least plus-degree until the order is 0 or 1 mod 4; this
  // never lowers the plus-density.
  std::vector<Vertex> keep(n);
  std::iota(keep.begin(), keep.end(), 1);
  const int drop = (n % 4 == 2) ? 1 : (n % 4 == 3) ? 2 : 0;
  for (int step = 0; step < drop; ++step) {
    const SignedCompleteGraph current = oriented.induced(keep);
    std::size_t worst = 0;
    for (std::size_t i = 1; i < keep.size(); ++i)
      if (current.plus_degree(static_cast<Vertex>(i + 1)) <
          current.plus_degree(static_cast<Vertex>(worst + 1)))
        worst = i;
    result.removed.push_back(keep[worst]);
    keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(worst));
  }
  const SignedCompleteGraph reduced = oriented.induced(keep);
  const int reduced_n = reduced.n();

  const long long surplus = reduced.plus_count() - reduced.minus_count();
  std::vector<Edge> flip;
  if (surplus > 0) {
    const auto plus = reduced.plus_edges();
    flip.assign(plus.begin(), plus.begin() + surplus / 2);
  }
  result.flips = static_cast<long long>(flip.size());
  const SignedCompleteGraph balanced = reduced.with_minus(flip);

  const PathSystem system = path_local_search(balanced).system;
  result.system_edges = system.edge_count();
  // Connectors prefer plus-edges of the unflipped labeling; the system's edges
  // stay, so m+ under the balanced labeling is still at least m(H).
  std::vector<Vertex> cycle = assemble_hamiltonian(reduced, system);
  result.balanced_plus = cycle_plus_count(balanced, cycle);
  result.reduced_signed_sum = cycle_signed_sum(reduced, cycle);
  result.guarantee = 2 * result.system_edges - reduced_n;

  for (Vertex& v : cycle) v = keep[v - 1];
  if (!result.removed.empty()) {
    // Replace one cycle edge ab by a detour through the removed vertices,
    // choosing the edge and order with the best oriented sum.
    std::vector<Vertex> detour = result.removed;
    std::vector<Vertex> best_order;
    std::size_t best_at = 0;
    long long best_gain = 0;
    bool have = false;
    std::sort(detour.begin(), detour.end());
    do {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        long long gain = oriented.sign(a, detour.front()) + oriented.sign(detour.back(), b) -
                         oriented.sign(a, b);
        for (std::size_t j = 0; j + 1 < detour.size(); ++j)
          gain += oriented.sign(detour[j], detour[j + 1]);
        if (!have || gain > best_gain) {
          have = true;
          best_gain = gain;
          best_at = i;
          best_order = detour;
        }
      }
    } while (std::next_permutation(detour.begin(), detour.end()));
    cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(best_at + 1), best_order.begin(),
                 best_order.end());
    result.guarantee -= 4;
  }
  result.cycle = std::move(cycle);
  result.signed_sum = cycle_signed_sum(host, result.cycle);
  return result;
}

}  // namespace signedspan
