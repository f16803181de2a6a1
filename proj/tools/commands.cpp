#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "signedspan/bounds.hpp"
#include "signedspan/embedder.hpp"
#include "signedspan/generators.hpp"
#include "signedspan/io.hpp"
#include "signedspan/oracle.hpp"
#include "signedspan/pathsearch.hpp"
#include "signedspan/trianglesearch.hpp"
#include "signedspan/workers.hpp"

namespace signedspan::cli {
namespace {

json rational_json(const Rational& q) {
  std::ostringstream text;
  text << q;
  return json{{"exact", text.str()}, {"value", to_double(q)}};
}

json report_json(const bounds::BoundReport& r) {
  return json{{"name", r.name}, {"inputs", r.inputs}, {"value", r.value}, {"case", r.case_taken}};
}

json cycle_json(const std::vector<Vertex>& cycle) { return json(cycle); }

SignedCompleteGraph load_instance(const Options& opt) {
  if (opt.in.empty()) throw InputError("--in is required");
  return io::parse_instance(io::read_json_file(opt.in));
}

Pattern load_pattern(const Options& opt, int n) {
  if (!opt.pattern.empty()) {
    Pattern p = io::parse_pattern(io::read_json_file(opt.pattern));
    if (p.n() != n)
      throw InputError("field 'n' of the pattern file is " + std::to_string(p.n()) +
                       " but the instance has n=" + std::to_string(n));
    return p;
  }
  if (opt.pattern_kind.empty()) throw InputError("--pattern or --pattern-kind is required");
  return generators::pattern_factory(generators::parse_pattern_kind(opt.pattern_kind), n,
                                     opt.delta, opt.seed);
}

json base_record(const std::string& command, const SignedCompleteGraph* host, std::uint64_t seed) {
  json record{{"command", command}, {"seed", seed}};
  record["instance_digest"] = host ? io::digest(*host) : "";
  if (host) record["n"] = host->n();
  return record;
}

void append_jsonl(const std::string& path, const json& record) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::app);
  if (!out) throw InputError("cannot append to '" + path + "'");
  out << record.dump() << '\n';
}

// --- per-command cores, shared by the single-run commands and sweep --------

struct CellResult {
  json outputs;
  double metric = 0;
  double bound = 0;
  double ratio = 0;
  bool pass = false;
};

CellResult embed_core(const SignedCompleteGraph& host, const Pattern& pattern) {
  const auto r = embed_unbalanced(host, pattern);
  CellResult c;
  c.metric = static_cast<double>(r.score.plus);
  c.bound = r.bound.value;
  c.ratio = pattern.m() ? c.metric / static_cast<double>(pattern.m()) : 1.0;
  c.pass = c.metric >= std::ceil(r.bound.value - 1e-9);
  c.outputs = {{"m_plus", r.score.plus},
               {"m_minus", r.score.minus},
               {"signed_sum", r.score.signed_sum},
               {"pattern_m", pattern.m()},
               {"pattern_max_degree", pattern.max_degree()},
               {"bound_value", r.bound.value},
               {"bound", report_json(r.bound)},
               {"expectation", rational_json(r.expectation)},
               {"embedding", json(std::vector<Vertex>(r.embedding.images().begin(),
                                                      r.embedding.images().end()))},
               {"certificate_pass", c.pass}};
  if (r.fixed_vertex) c.outputs["fixed_vertex"] = *r.fixed_vertex;
  return c;
}

CellResult paths_core(const SignedCompleteGraph& host) {
  const auto search = path_local_search(host);
  const auto& system = search.system;
  const auto stats = path_stats(system);
  const auto cert = certify_path_system(host, system);
  const auto cycle = assemble_hamiltonian(host, system);
  const long long cycle_plus = cycle_plus_count(host, cycle);
  const int n = host.n();
  const bool target_applies = host.balanced() && n >= 10;
  const double target = bounds::path_target(n);
  CellResult c;
  c.metric = static_cast<double>(stats.m_h);
  c.bound = target_applies ? target : 0.0;
  c.ratio = static_cast<double>(stats.m_h) / n;
  c.pass = cert.passed() && cycle_plus >= stats.m_h &&
           (!target_applies || static_cast<double>(stats.m_h) >= target);
  json moves = json::object();
  const char* names[] = {"add", "insert", "merge", "reroute", "endpoint_swap"};
  for (int i = 0; i < 5; ++i) moves[names[i]] = search.accepted[i];
  c.outputs = {{"m_h", stats.m_h},
               {"k", stats.k},
               {"stats", {{"n0", stats.n0}, {"n1", stats.n1}, {"n2", stats.n2}, {"ell", stats.ell}}},
               {"paths", system.paths},
               {"accepted_moves", moves},
               {"path_target", target},
               {"target_applies", target_applies},
               {"certificate",
                {{"claim1", cert.claim1},
                 {"claim2", cert.claim2},
                 {"claim3_move_free", cert.claim3_move_free},
                 {"claim4", cert.claim4},
                 {"stats_consistent", cert.stats_consistent},
                 {"failure", cert.failure}}},
               {"cycle", cycle_json(cycle)},
               {"m_plus", cycle_plus},
               {"certificate_pass", c.pass}};
  return c;
}

CellResult triangles_core(const SignedCompleteGraph& host, const Options& opt) {
  const int n = host.n();
  const auto start = opt.shuffled ? shuffled_factor(n, opt.seed) : consecutive_factor(n);
  const auto search = triangle_local_search(host, start);
  const auto profile = triangle_profile(host, search.factor);
  const auto cert = certify_fixed_point(host, search.factor);
  CellResult c;
  c.metric = static_cast<double>(profile.plus_total);
  c.bound = (3 * std::sqrt(2.0) / 4 - 0.5) * n;
  c.ratio = c.metric / n;
  c.pass = cert.passed();
  json t = json::array();
  for (const auto& q : profile.t) t.push_back(rational_json(q));
  c.outputs = {{"m_plus", profile.plus_total},
               {"factor", search.factor.triangles},
               {"accepted_moves", search.accepted},
               {"profile", {{"counts", profile.counts}, {"t", t}}},
               {"certificate",
                {{"pair_caps", cert.pair_caps},
                 {"global_count", cert.global_count},
                 {"profile_consistent", cert.profile_consistent},
                 {"plus_in_host", cert.plus_in_host},
                 {"counted_bound", cert.counted_bound},
                 {"failure", cert.failure}}},
               {"certificate_pass", c.pass}};
  if (cert.first_violation)
    c.outputs["certificate"]["first_violation"] = *cert.first_violation;
  return c;
}

CellResult discrepancy_core(const SignedCompleteGraph& host) {
  const auto r = discrepancy_hamiltonian(host);
  CellResult c;
  c.metric = static_cast<double>(r.oriented_sum());
  c.bound = static_cast<double>(r.guarantee);
  c.ratio = c.metric / host.n();
  c.pass = r.oriented_sum() >= r.guarantee;
  c.outputs = {{"cycle", cycle_json(r.cycle)},
               {"signed_sum", r.signed_sum},
               {"negated", r.negated},
               {"removed", r.removed},
               {"flips", r.flips},
               {"m_h", r.system_edges},
               {"balanced_plus", r.balanced_plus},
               {"reduced_signed_sum", r.reduced_signed_sum},
               {"guarantee", r.guarantee},
               {"bound_value", r.guarantee},
               {"certificate_pass", c.pass}};
  return c;
}

Outcome finish(json record, const CellResult& c) {
  record["outputs"] = c.outputs;
  return {std::move(record), c.pass ? kExitOk : kExitCertificate};
}

}  // namespace

std::vector<int> parse_int_range(const std::string& text) {
  std::vector<int> out;
  try {
    if (text.find(':') != std::string::npos) {
      int a = 0, b = 0, step = 1;
      char c1 = 0, c2 = 0;
      std::istringstream in(text);
      in >> a >> c1 >> b;
      if (in >> c2) in >> step;
      if (!in.eof() && in.fail()) throw InputError("bad range");
      if (c1 != ':' || step <= 0 || b < a) throw InputError("bad range");
      for (int v = a; v <= b; v += step) out.push_back(v);
    } else {
      std::stringstream in(text);
      std::string item;
      while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
    }
  } catch (const std::logic_error&) {
    throw InputError("cannot parse integer range '" + text + "' (use a:b:step or a,b,c)");
  }
  if (out.empty()) throw InputError("empty range '" + text + "'");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  try {
    while (std::getline(in, item, ',')) out.push_back(std::stod(item));
  } catch (const std::logic_error&) {
    throw InputError("cannot parse number list '" + text + "'");
  }
  if (out.empty()) throw InputError("empty list '" + text + "'");
  return out;
}

Outcome run_gen(const Options& opt) {
  if (!opt.n) throw InputError("--n is required");
  if (opt.out.empty()) throw InputError("--out is required");
  if (!opt.pattern_kind.empty()) {
    const Pattern p = generators::pattern_factory(generators::parse_pattern_kind(opt.pattern_kind),
                                                  *opt.n, opt.delta, opt.seed);
    io::write_json_file(opt.out, io::pattern_to_json(p));
    json record = base_record("gen", nullptr, opt.seed);
    record["n"] = p.n();
    record["outputs"] = {{"pattern_kind", opt.pattern_kind},
                         {"m", p.m()},
                         {"max_degree", p.max_degree()},
                         {"min_degree", p.min_degree()},
                         {"file", opt.out}};
    return {record, kExitOk};
  }
  if (opt.kind.empty()) throw InputError("--kind or --pattern-kind is required");
  generators::GeneratorSpec spec;
  spec.kind = generators::parse_generator_kind(opt.kind);
  spec.n = *opt.n;
  spec.d = opt.d.value_or(0.5);
  spec.seed = opt.seed;
  spec.r = opt.r;
  const auto host = generators::generate(spec);
  io::write_json_file(opt.out, io::instance_to_json(host));
  json record = base_record("gen", &host, opt.seed);
  record["outputs"] = {{"kind", opt.kind},
                       {"plus_count", host.plus_count()},
                       {"minus_count", host.minus_count()},
                       {"balanced", host.balanced()},
                       {"file", opt.out}};
  return {record, kExitOk};
}

Outcome run_embed(const Options& opt) {
  const auto host = load_instance(opt);
  return finish(base_record("embed", &host, opt.seed), embed_core(host, load_pattern(opt, host.n())));
}

Outcome run_paths(const Options& opt) {
  const auto host = load_instance(opt);
  return finish(base_record("paths", &host, opt.seed), paths_core(host));
}

Outcome run_triangles(const Options& opt) {
  const auto host = load_instance(opt);
  return finish(base_record("triangles", &host, opt.seed), triangles_core(host, opt));
}

Outcome run_discrepancy(const Options& opt) {
  const auto host = load_instance(opt);
  return finish(base_record("discrepancy", &host, opt.seed), discrepancy_core(host));
}

Outcome run_spectrum(const Options& opt) {
  const auto host = load_instance(opt);
  const Pattern pattern = load_pattern(opt, host.n());
  const auto s = oracle::spectrum(host, pattern, opt.cap > 0 ? opt.cap : oracle::kSpectrumCap);
  const Rational dm = host.density() * Rational(static_cast<long long>(pattern.m()));
  const bool identity = s.mean == dm;
  const bool gaps = s.max_gap <= pattern.max_degree() + pattern.min_degree();
  const bool near = oracle::has_value_near_mean(s, pattern);
  json mult = json::object();
  for (const auto& [value, count] : s.multiplicities) mult[std::to_string(value)] = count.str();
  json record = base_record("spectrum", &host, opt.seed);
  record["outputs"] = {{"values", s.values},
                       {"multiplicities", mult},
                       {"permutations", s.permutations.str()},
                       {"mean", rational_json(s.mean)},
                       {"d_times_m", rational_json(dm)},
                       {"max_gap", s.max_gap},
                       {"gap_cap", pattern.max_degree() + pattern.min_degree()},
                       {"mean_identity", identity},
                       {"gap_bound", gaps},
                       {"value_near_mean", near},
                       {"certificate_pass", identity && gaps && near}};
  return {record, identity && gaps && near ? kExitOk : kExitCertificate};
}

Outcome run_exact(const Options& opt) {
  const auto host = load_instance(opt);
  const int n = host.n();
  json outputs = json::object();
  bool pass = true;
  const auto ham = oracle::best_hamiltonian(host, opt.cap > 0 ? opt.cap : oracle::kHamiltonianCap);
  const auto heuristic = assemble_hamiltonian(host, path_local_search(host).system);
  const long long heuristic_plus = cycle_plus_count(host, heuristic);
  pass = pass && heuristic_plus <= ham.max_plus;
  outputs["hamiltonian"] = {{"cycle", cycle_json(ham.cycle)},
                            {"max_plus", ham.max_plus},
                            {"min_plus", ham.min_plus},
                            {"max_abs_sum", ham.max_abs_sum},
                            {"cycles", ham.cycles.str()},
                            {"heuristic_plus", heuristic_plus}};
  if (n % 3 == 0 && n <= (opt.cap > 0 ? opt.cap : oracle::kFactorCap)) {
    const auto tri = oracle::best_triangle_factor(host, opt.cap > 0 ? opt.cap : oracle::kFactorCap);
    const long long local = triangle_profile(host, triangle_local_search(host).factor).plus_total;
    pass = pass && local <= tri.max_plus;
    outputs["triangle_factor"] = {{"factor", tri.factor.triangles},
                                  {"max_plus", tri.max_plus},
                                  {"factors", tri.factors},
                                  {"heuristic_plus", local}};
  }
  outputs["m_plus"] = ham.max_plus;
  outputs["certificate_pass"] = pass;
  json record = base_record("exact", &host, opt.seed);
  record["outputs"] = outputs;
  return {record, pass ? kExitOk : kExitCertificate};
}

Outcome run_bounds(const Options& opt) {
  json outputs = json::object();
  if (opt.n) {
    const long long n = *opt.n;
    outputs["path_target"] = bounds::path_target(n);
    outputs["d_star"] = bounds::d_star(n);
    if (opt.d) {
      const double m = opt.m.value_or(static_cast<double>(n));
      const auto report = bounds::theorem0_bound(n, *opt.d, opt.delta, m);
      outputs["theorem0"] = report_json(report);
      outputs["value"] = report.value;
      outputs["bound_value"] = report.value;
    }
  }
  outputs["constants"] = bounds::constants(std::max(opt.delta, 4));
  const auto program = bounds::solve_triangle_program();
  auto point = [](const bounds::ProgramPoint& p) {
    return json{{"value", p.value}, {"t1", p.t1}, {"t3", p.t3}, {"where", p.where}};
  };
  outputs["triangle_program"] = {{"analytic", point(program.analytic)},
                                 {"grid", point(program.grid)},
                                 {"side_t3_zero", point(program.side_t3_zero)},
                                 {"side_t1_zero", point(program.side_t1_zero)},
                                 {"side_hypotenuse", point(program.side_hypotenuse)},
                                 {"interior_stationary", program.interior_stationary.size()}};
  json record = base_record("bounds", nullptr, opt.seed);
  record["outputs"] = outputs;
  return {record, kExitOk};
}

Outcome run_sweep(const Options& opt) {
  if (opt.kind.empty()) throw InputError("--kind is required (embed, paths, triangles, discrepancy)");
  if (opt.n_range.empty()) throw InputError("--n is required (e.g. 12:40:4)");
  const std::string kind = opt.kind;
  if (kind != "embed" && kind != "paths" && kind != "triangles" && kind != "discrepancy")
    throw InputError("sweep --kind must be embed, paths, triangles or discrepancy");
  if (opt.seeds < 1) throw InputError("--seeds must be positive");

  struct Cell {
    int n;
    std::optional<double> d;
    int delta;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  const auto ns = parse_int_range(opt.n_range);
  std::vector<std::optional<double>> ds;
  if (!opt.d_list.empty())
    for (double d : parse_double_list(opt.d_list)) ds.push_back(d);
  else
    ds.push_back(std::nullopt);  // balanced
  std::vector<int> deltas{opt.delta};
  if (!opt.delta_list.empty()) deltas = parse_int_range(opt.delta_list);
  if (kind != "embed") deltas.resize(1);
  for (int n : ns)
    for (const auto& d : ds)
      for (int delta : deltas)
        for (int s = 0; s < opt.seeds; ++s)
          cells.push_back({n, d, delta, opt.seed + static_cast<std::uint64_t>(s)});

  // Validate up front so input errors surface before any work.
  for (const Cell& c : cells) {
    if (!c.d && c.n % 4 != 0 && c.n % 4 != 1)
      throw InputError("balanced instances need n % 4 in {0,1}; got n=" + std::to_string(c.n) +
                       " (pass --d for a density sweep)");
    if (kind == "triangles" && c.n % 3 != 0)
      throw InputError("triangles sweep needs n divisible by 3, got " + std::to_string(c.n));
    if ((kind == "embed" || kind == "discrepancy") && c.n < 4)
      throw InputError("n must be at least 4");
  }

  std::vector<json> records(cells.size());
  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_lock;
  std::string first_error;
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const Cell& c = cells[i];
      try {
        const auto host = c.d ? generators::random_labeling(c.n, *c.d, c.seed)
                              : generators::random_balanced(c.n, c.seed);
        CellResult r;
        if (kind == "embed") {
          const auto pk = opt.pattern_kind.empty()
                              ? generators::PatternKind::kRandomBounded
                              : generators::parse_pattern_kind(opt.pattern_kind);
          r = embed_core(host, generators::pattern_factory(pk, c.n, c.delta, c.seed));
        } else if (kind == "paths") {
          r = paths_core(host);
        } else if (kind == "triangles") {
          Options o = opt;
          o.seed = c.seed;
          r = triangles_core(host, o);
        } else {
          r = discrepancy_core(host);
        }
        json record = base_record("sweep:" + kind, &host, c.seed);
        record["params"] = {{"n", c.n}, {"delta", c.delta}};
        record["params"]["d"] = c.d ? json(*c.d) : json("balanced");
        record["outputs"] = r.outputs;
        records[i] = std::move(record);
        results[i] = std::move(r);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> hold(error_lock);
        if (first_error.empty()) first_error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::min<int>(worker_count(), static_cast<int>(cells.size()));
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (!first_error.empty()) throw InputError(first_error);

  std::ofstream csv;
  if (!opt.csv.empty()) {
    csv.open(opt.csv);
    if (!csv) throw InputError("cannot write '" + opt.csv + "'");
    csv << "n,d,delta,seed,metric,bound,ratio,pass\n";
  }
  long long failures = 0;
  double worst_ratio = 1e300;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    append_jsonl(opt.out, records[i]);
    const Cell& c = cells[i];
    const CellResult& r = results[i];
    failures += !r.pass;
    worst_ratio = std::min(worst_ratio, r.ratio);
    if (csv) {
      char line[256];
      std::snprintf(line, sizeof line, "%d,%s,%d,%llu,%.0f,%.6f,%.6f,%s\n", c.n,
                    c.d ? std::to_string(*c.d).c_str() : "balanced", c.delta,
                    static_cast<unsigned long long>(c.seed), r.metric, r.bound, r.ratio,
                    r.pass ? "true" : "false");
      csv << line;
    }
  }
  json record = base_record("sweep", nullptr, opt.seed);
  record["outputs"] = {{"kind", kind},
                       {"cells", cells.size()},
                       {"failures", failures},
                       {"min_ratio", worst_ratio},
                       {"jsonl", opt.out},
                       {"csv", opt.csv},
                       {"certificate_pass", failures == 0}};
  return {record, failures == 0 ? kExitOk : kExitCertificate};
}

}  // namespace signedspan::cli
