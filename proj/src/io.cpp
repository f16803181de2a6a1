#include "signedspan/io.hpp"

#include <cstdio>
#include <fstream>

namespace signedspan::io {
namespace {

int get_int(const json& doc, const char* field) {
  if (!doc.is_object()) throw InputError("top-level value must be an object");
  auto it = doc.find(field);
  if (it == doc.end()) throw InputError(std::string("missing field '") + field + "'");
  if (!it->is_number_integer())
    throw InputError(std::string("field '") + field + "' must be an integer");
  return it->get<int>();
}

std::vector<Edge> get_edges(const json& doc, const char* field, int n, bool strict_order) {
  auto it = doc.find(field);
  if (it == doc.end()) throw InputError(std::string("missing field '") + field + "'");
  if (!it->is_array()) throw InputError(std::string("field '") + field + "' must be an array");
  std::vector<Edge> edges;
  edges.reserve(it->size());
  std::size_t i = 0;
  for (const json& item : *it) {
    const std::string where = std::string(field) + "[" + std::to_string(i++) + "]";
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw InputError("'" + where + "' must be a pair of integers");
    const int u = item[0].get<int>();
    const int v = item[1].get<int>();
    if (u < 1 || v < 1 || u > n || v > n)
      throw InputError("'" + where + "' has a vertex outside 1.." + std::to_string(n));
    if (u == v) throw InputError("'" + where + "' is a loop");
    if (strict_order && u > v) throw InputError("'" + where + "' must satisfy u < v");
    edges.push_back(make_edge(u, v));
  }
  return edges;
}

}  // namespace

SignedCompleteGraph parse_instance(const json& doc) {
  const int n = get_int(doc, "n");
  if (n < 1) throw InputError("field 'n' must be at least 1");
  auto plus = get_edges(doc, "plus_edges", n, true);
  try {
    return SignedCompleteGraph(n, plus);
  } catch (const InputError& e) {
    throw InputError(std::string("field 'plus_edges': ") + e.what());
  }
}

json instance_to_json(const SignedCompleteGraph& host) {
  json edges = json::array();
  for (const Edge& e : host.plus_edges()) edges.push_back({e.u, e.v});
  return json{{"n", host.n()}, {"plus_edges", std::move(edges)}};
}

Pattern parse_pattern(const json& doc) {
  const int n = get_int(doc, "n");
  if (n < 1) throw InputError("field 'n' must be at least 1");
  auto edges = get_edges(doc, "edges", n, false);
  try {
    return Pattern(n, std::move(edges));
  } catch (const InputError& e) {
    throw InputError(std::string("field 'edges': ") + e.what());
  }
}

json pattern_to_json(const Pattern& pattern) {
  json edges = json::array();
  for (const Edge& e : pattern.edges()) edges.push_back({e.u, e.v});
  return json{{"n", pattern.n()}, {"edges", std::move(edges)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << doc.dump() << '\n';
}

std::string digest(const SignedCompleteGraph& host) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint32_t word) {
    for (int b = 0; b < 4; ++b) {
      h ^= (word >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint32_t>(host.n()));
  for (const Edge& e : host.plus_edges()) {
    mix(static_cast<std::uint32_t>(e.u));
    mix(static_cast<std::uint32_t>(e.v));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace signedspan::io
