#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "signedspan/core.hpp"

namespace testing {

using namespace signedspan;

inline SignedCompleteGraph host_from(int n, std::initializer_list<std::pair<int, int>> plus) {
  std::vector<Edge> edges;
  for (auto [u, v] : plus) edges.push_back(make_edge(u, v));
  return SignedCompleteGraph(n, edges);
}

inline Pattern pattern_from(int n, std::initializer_list<std::pair<int, int>> list) {
  std::vector<Edge> edges;
  for (auto [u, v] : list) edges.push_back(make_edge(u, v));
  return Pattern(n, edges);
}

// Calls visit(images) for every permutation of 1..n, images[i] = pi(i+1).
template <typename F>
void for_each_permutation(int n, F&& visit) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    visit(images);
  } while (std::next_permutation(images.begin(), images.end()));
}

// Direct plus count of the image of pattern under images, independent of score().
inline long long count_plus(const SignedCompleteGraph& host, const Pattern& pattern,
                            const std::vector<Vertex>& images) {
  long long plus = 0;
  for (const Edge& e : pattern.edges()) plus += host.is_plus(images[e.u - 1], images[e.v - 1]);
  return plus;
}

}  // namespace testing
