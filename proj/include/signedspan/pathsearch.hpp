#pragma once

#include <array>
#include <string>
#include <vector>

#include "signedspan/core.hpp"

namespace signedspan {

// Vertex-disjoint paths with at least one edge each, all edges plus-edges of
// the host they were built for. Canonical form: each path runs from its
// smaller endpoint, paths sorted by first vertex.
struct PathSystem {
  int host_n = 0;
  std::vector<std::vector<Vertex>> paths;

  long long edge_count() const;
  bool operator==(const PathSystem&) const = default;
};

// Degree classes of H = union of the paths. V_1 are path endpoints, V_2
// interior vertices, V_0 the rest; ell counts paths with an interior (the
// non-empty Q_i = P_i minus its endpoints).
struct PathSystemStats {
  int k = 0;
  long long m_h = 0;
  int n0 = 0;
  int n1 = 0;
  int n2 = 0;
  int ell = 0;
};

PathSystemStats path_stats(const PathSystem& system);

// Throws InputError unless the system is a valid path system of the host.
void validate_path_system(const SignedCompleteGraph& host, const PathSystem& system);

PathSystem canonicalize(PathSystem system);

// Greedy lexicographic plus-edge matching, each pair a one-edge path.
PathSystem greedy_matching_start(const SignedCompleteGraph& host);

enum class PathMove { kAddEdge = 0, kInsert = 1, kMergeViaIsolated = 2, kRerouteInterior = 3, kEndpointSwap = 4 };

struct PathSearchResult {
  PathSystem system;
  // Accepted moves by kind, indexed by PathMove.
  std::array<long long, 5> accepted{};
};

// First-improvement local search maximizing m(H), then minimizing k. Moves,
// scanned in the order add / merge / insert / reroute / endpoint-swap:
//  add:      a plus-edge between two vertices of H-degree <= 1 not closing a path;
//  insert:   isolated u with plus-edges to both ends of a path edge vw: -vw +vu +uw;
//  merge:    isolated u adjacent to the next-to-endpoint vertices x', y' of two
//            paths: -xx' -yy' +x'u +uy' (same edges, one path fewer);
//  reroute:  isolated u adjacent to interior v, w with a plus-edge between path
//            neighbours v-, w-: -vv- -ww- +v-w- +vu +uw, both orientations;
//  endpoint-swap: endpoints a != b and interior path edge u_q u_(q+1):
//            -u_q u_(q+1) +a u_(q+1) +b u_q.
// Every accepted move strictly increases (m(H), -k), so the search terminates.
PathSearchResult path_local_search(const SignedCompleteGraph& host, const PathSystem& start);
PathSearchResult path_local_search(const SignedCompleteGraph& host);

// Whether any move of the given kind would improve the system.
bool has_improving_move(const SignedCompleteGraph& host, const PathSystem& system, PathMove kind);

// Fixed-point inequalities that hold whenever no move applies.
struct PathCertificate {
  // Plus-edges inside V_0 + V_1 are all of the form x_i y_i (so at most k).
  bool claim1 = false;
  // Each V_0 vertex: no plus-edges to two consecutive interior vertices, at most
  // (n_2 - ell + 2)/2 plus-neighbours in V_2, adjacent to an end of at most one Q_i.
  bool claim2 = false;
  // No reroute move applies (the exchange argument bounding non-edges in V_2).
  bool claim3_move_free = false;
  // For k >= 2: at most p + 1 plus-edges between {x_i, y_(i+1)} and any Q_j on
  // p vertices, with x_i / y_i the first / last vertex of path i.
  bool claim4 = false;
  bool stats_consistent = false;
  std::string failure;

  bool passed() const {
    return claim1 && claim2 && claim3_move_free && claim4 && stats_consistent;
  }
};

PathCertificate certify_path_system(const SignedCompleteGraph& host, const PathSystem& system);

// Hamiltonian cycle (as a vertex order, closing edge implied) containing every
// path of the system, joining pieces greedily through plus-edges where
// possible. Rejects n < 3 and systems inconsistent with the host.
std::vector<Vertex> assemble_hamiltonian(const SignedCompleteGraph& host, const PathSystem& system);

struct DiscrepancyResult {
  std::vector<Vertex> cycle;
  // c0(C) under the input labeling.
  long long signed_sum = 0;
  // True when minus-edges were in surplus and the search ran on -c0; the
  // guarantee then applies to -signed_sum.
  bool negated = false;
  // Vertices removed to reach order 0 or 1 mod 4 and patched back in.
  std::vector<Vertex> removed;
  // Plus-labels switched to minus to balance the reduced instance.
  long long flips = 0;
  // m(H) of the balanced fixed point on the reduced instance.
  long long system_edges = 0;
  // m+ of the reduced cycle under the balanced labeling.
  long long balanced_plus = 0;
  // Oriented signed sum of the reduced cycle, before patching.
  long long reduced_signed_sum = 0;
  // 2 m(H) - n' (minus 4 when patched): lower bound on the oriented sum.
  long long guarantee = 0;

  long long oriented_sum() const { return negated ? -signed_sum : signed_sum; }
};

// Hamiltonian cycle with large |c0(C)| for an arbitrary labeling. Rejects n < 4.
DiscrepancyResult discrepancy_hamiltonian(const SignedCompleteGraph& host);

}  // namespace signedspan
