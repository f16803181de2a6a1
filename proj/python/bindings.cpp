#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "signedspan/bounds.hpp"
#include "signedspan/embedder.hpp"
#include "signedspan/generators.hpp"
#include "signedspan/io.hpp"
#include "signedspan/oracle.hpp"
#include "signedspan/pathsearch.hpp"
#include "signedspan/trianglesearch.hpp"

namespace py = pybind11;
using namespace signedspan;

namespace {

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.str());
}

py::int_ big(const BigInt& b) { return py::int_(py::str(b.str())); }

std::vector<Edge> to_edges(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back(make_edge(a, b));
  return edges;
}

py::list from_edges(std::span<const Edge> edges) {
  py::list out;
  for (const Edge& e : edges) out.append(py::make_tuple(e.u, e.v));
  return out;
}

py::dict score_dict(const EmbeddingScore& s) {
  py::dict d;
  d["plus"] = s.plus;
  d["minus"] = s.minus;
  d["signed_sum"] = s.signed_sum;
  return d;
}

py::dict bound_dict(const bounds::BoundReport& b) {
  py::dict d;
  d["name"] = b.name;
  d["inputs"] = b.inputs;
  d["value"] = b.value;
  d["case"] = b.case_taken;
  return d;
}

py::dict point_dict(const bounds::ProgramPoint& p) {
  py::dict d;
  d["value"] = p.value;
  d["t1"] = p.t1;
  d["t3"] = p.t3;
  d["where"] = p.where;
  return d;
}

py::dict path_certificate_dict(const PathCertificate& c) {
  py::dict d;
  d["claim1"] = c.claim1;
  d["claim2"] = c.claim2;
  d["claim3_move_free"] = c.claim3_move_free;
  d["claim4"] = c.claim4;
  d["stats_consistent"] = c.stats_consistent;
  d["failure"] = c.failure;
  d["passed"] = c.claim1 && c.claim2 && c.claim3_move_free && c.claim4 && c.stats_consistent;
  return d;
}

py::dict triangle_certificate_dict(const TriangleCertificate& c) {
  py::dict d;
  d["pair_caps"] = c.pair_caps;
  d["global_count"] = c.global_count;
  d["profile_consistent"] = c.profile_consistent;
  d["plus_in_host"] = c.plus_in_host;
  d["counted_bound"] = c.counted_bound;
  d["failure"] = c.failure;
  d["passed"] = c.pair_caps && c.global_count && c.profile_consistent;
  return d;
}

py::dict triangle_summary(const SignedCompleteGraph& host, const TriangleFactor& factor) {
  const TriangleProfile profile = triangle_profile(host, factor);
  py::list t;
  for (const Rational& x : profile.t) t.append(fraction(x));
  py::dict d;
  d["factor"] = factor.triangles;
  d["m_plus"] = profile.plus_total;
  d["counts"] = profile.counts;
  d["t"] = t;
  return d;
}

}  // namespace

PYBIND11_MODULE(_signedspan, m) {
  m.doc() = "Plus-heavy embeddings, cycles and triangle factors in +/-1 labeled complete graphs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<SignedCompleteGraph>(m, "SignedGraph")
      .def(py::init([](int n, const std::vector<std::pair<Vertex, Vertex>>& plus) {
             const std::vector<Edge> edges = to_edges(plus);
             return SignedCompleteGraph(n, edges);
           }),
           py::arg("n"), py::arg("plus_edges"))
      .def_static("all_plus", &SignedCompleteGraph::all_plus)
      .def_static("all_minus", &SignedCompleteGraph::all_minus)
      .def_static("from_json", [](const std::string& text) {
        return io::parse_instance(nlohmann::json::parse(text));
      })
      .def("to_json", [](const SignedCompleteGraph& g) { return io::instance_to_json(g).dump(); })
      .def_property_readonly("n", &SignedCompleteGraph::n)
      .def_property_readonly("plus_count", &SignedCompleteGraph::plus_count)
      .def_property_readonly("minus_count", &SignedCompleteGraph::minus_count)
      .def_property_readonly("balanced", &SignedCompleteGraph::balanced)
      .def_property_readonly("density", [](const SignedCompleteGraph& g) { return fraction(g.density()); })
      .def_property_readonly("plus_edges", [](const SignedCompleteGraph& g) { return from_edges(g.plus_edges()); })
      .def_property_readonly("digest", [](const SignedCompleteGraph& g) { return io::digest(g); })
      .def("is_plus", &SignedCompleteGraph::is_plus)
      .def("sign", &SignedCompleteGraph::sign)
      .def("plus_degree", &SignedCompleteGraph::plus_degree)
      .def("negated", &SignedCompleteGraph::negated)
      .def("__eq__", [](const SignedCompleteGraph& a, const SignedCompleteGraph& b) { return a == b; })
      .def("__repr__", [](const SignedCompleteGraph& g) {
        return "SignedGraph(n=" + std::to_string(g.n()) + ", plus=" + std::to_string(g.plus_count()) + ")";
      });

  py::class_<Pattern>(m, "Pattern")
      .def(py::init([](int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return Pattern(n, to_edges(edges));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Pattern::n)
      .def_property_readonly("m", &Pattern::m)
      .def_property_readonly("edges", [](const Pattern& p) { return from_edges(p.edges()); })
      .def_property_readonly("max_degree", &Pattern::max_degree)
      .def_property_readonly("min_degree", &Pattern::min_degree)
      .def("degree", &Pattern::degree)
      .def("has_edge", &Pattern::has_edge)
      .def("__repr__", [](const Pattern& p) {
        return "Pattern(n=" + std::to_string(p.n()) + ", m=" + std::to_string(p.m()) + ")";
      });

  // Generators.
  m.def("bipartite_minus_matching", &generators::bipartite_minus_matching, py::arg("n"));
  m.def("minus_clique", &generators::minus_clique, py::arg("n"));
  m.def("minus_clique_order", &generators::minus_clique_order, py::arg("n"));
  m.def("random_labeling", &generators::random_labeling, py::arg("n"), py::arg("d"), py::arg("seed") = 0);
  m.def("random_balanced", &generators::random_balanced, py::arg("n"), py::arg("seed") = 0);
  m.def("planted_cliques", &generators::planted_cliques, py::arg("n"), py::arg("r"));
  m.def(
      "make_pattern",
      [](const std::string& kind, int n, int delta, std::uint64_t seed) {
        return generators::pattern_factory(generators::parse_pattern_kind(kind), n, delta, seed);
      },
      py::arg("kind"), py::arg("n"), py::arg("delta") = 2, py::arg("seed") = 0);
  m.def("plus_subgraph", &plus_subgraph, py::arg("host"));

  m.def(
      "score",
      [](const SignedCompleteGraph& host, const Pattern& pattern, const std::vector<Vertex>& images) {
        return score_dict(score(host, pattern, Embedding(images)));
      },
      py::arg("host"), py::arg("pattern"), py::arg("images"));
  m.def(
      "cycle_plus_count",
      [](const SignedCompleteGraph& host, const std::vector<Vertex>& cycle) {
        return cycle_plus_count(host, cycle);
      },
      py::arg("host"), py::arg("cycle"));
  m.def(
      "cycle_signed_sum",
      [](const SignedCompleteGraph& host, const std::vector<Vertex>& cycle) {
        return cycle_signed_sum(host, cycle);
      },
      py::arg("host"), py::arg("cycle"));

  m.def(
      "embed",
      [](const SignedCompleteGraph& host, const Pattern& pattern) {
        const EmbedResult r = embed_unbalanced(host, pattern);
        py::dict d;
        const auto images = r.embedding.images();
        d["embedding"] = std::vector<Vertex>(images.begin(), images.end());
        d["score"] = score_dict(r.score);
        d["bound"] = bound_dict(r.bound);
        d["expectation"] = fraction(r.expectation);
        d["fixed_vertex"] = r.fixed_vertex ? py::object(py::int_(*r.fixed_vertex)) : py::object(py::none());
        d["certificate_pass"] = static_cast<double>(r.score.plus) >= std::ceil(r.bound.value - 1e-9);
        return d;
      },
      py::arg("host"), py::arg("pattern"));

  m.def(
      "paths",
      [](const SignedCompleteGraph& host) {
        const PathSearchResult r = path_local_search(host);
        const PathSystemStats s = path_stats(r.system);
        const std::vector<Vertex> cycle = assemble_hamiltonian(host, r.system);
        py::dict stats;
        stats["k"] = s.k;
        stats["m_h"] = s.m_h;
        stats["n0"] = s.n0;
        stats["n1"] = s.n1;
        stats["n2"] = s.n2;
        stats["ell"] = s.ell;
        py::dict d;
        d["paths"] = r.system.paths;
        d["stats"] = stats;
        d["accepted"] = r.accepted;
        d["certificate"] = path_certificate_dict(certify_path_system(host, r.system));
        d["cycle"] = cycle;
        d["cycle_plus"] = cycle_plus_count(host, cycle);
        return d;
      },
      py::arg("host"));

  m.def(
      "triangles",
      [](const SignedCompleteGraph& host, std::optional<std::uint64_t> shuffle_seed) {
        const TriangleSearchResult r =
            shuffle_seed ? triangle_local_search(host, shuffled_factor(host.n(), *shuffle_seed))
                         : triangle_local_search(host);
        py::dict d = triangle_summary(host, r.factor);
        d["accepted"] = r.accepted;
        d["certificate"] = triangle_certificate_dict(certify_fixed_point(host, r.factor));
        return d;
      },
      py::arg("host"), py::arg("shuffle_seed") = py::none());

  m.def(
      "discrepancy",
      [](const SignedCompleteGraph& host) {
        const DiscrepancyResult r = discrepancy_hamiltonian(host);
        py::dict d;
        d["cycle"] = r.cycle;
        d["signed_sum"] = r.signed_sum;
        d["negated"] = r.negated;
        d["removed"] = r.removed;
        d["flips"] = r.flips;
        d["guarantee"] = r.guarantee;
        d["reduced_signed_sum"] = r.reduced_signed_sum;
        return d;
      },
      py::arg("host"));

  // Exhaustive references.
  m.def(
      "spectrum",
      [](const SignedCompleteGraph& host, const Pattern& pattern, int cap) {
        const oracle::SpectrumResult r = oracle::spectrum(host, pattern, cap);
        py::dict mult;
        for (const auto& [value, count] : r.multiplicities) mult[py::int_(value)] = big(count);
        py::dict d;
        d["values"] = r.values;
        d["multiplicities"] = mult;
        d["permutations"] = big(r.permutations);
        d["mean"] = fraction(r.mean);
        d["max_gap"] = r.max_gap;
        d["value_near_mean"] = oracle::has_value_near_mean(r, pattern);
        return d;
      },
      py::arg("host"), py::arg("pattern"), py::arg("cap") = oracle::kSpectrumCap);
  m.def(
      "best_hamiltonian",
      [](const SignedCompleteGraph& host, int cap) {
        const oracle::HamiltonianOptimum r = oracle::best_hamiltonian(host, cap);
        py::dict d;
        d["cycle"] = r.cycle;
        d["max_plus"] = r.max_plus;
        d["min_plus"] = r.min_plus;
        d["max_abs_sum"] = r.max_abs_sum;
        d["cycles"] = big(r.cycles);
        return d;
      },
      py::arg("host"), py::arg("cap") = oracle::kHamiltonianCap);
  m.def(
      "best_triangle_factor",
      [](const SignedCompleteGraph& host, int cap) {
        const oracle::FactorOptimum r = oracle::best_triangle_factor(host, cap);
        py::dict d;
        d["factor"] = r.factor.triangles;
        d["max_plus"] = r.max_plus;
        d["factors"] = r.factors;
        return d;
      },
      py::arg("host"), py::arg("cap") = oracle::kFactorCap);

  // Closed forms.
  m.def(
      "embedding_bound",
      [](long long n, double d, int delta, std::optional<double> edges) {
        return bound_dict(bounds::theorem0_bound(n, d, delta, edges.value_or(static_cast<double>(n))));
      },
      py::arg("n"), py::arg("d"), py::arg("delta"), py::arg("m") = py::none());
  m.def("path_target", &bounds::path_target, py::arg("n"));
  m.def("constants", &bounds::constants, py::arg("max_delta") = 4);
  m.def("triangle_program", []() {
    const bounds::TriangleProgramReport r = bounds::solve_triangle_program();
    py::dict d;
    d["analytic"] = point_dict(r.analytic);
    d["grid"] = point_dict(r.grid);
    return d;
  });
}
