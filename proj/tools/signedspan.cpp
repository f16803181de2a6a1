#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"
#include "signedspan/core.hpp"

using namespace signedspan;
using namespace signedspan::cli;

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signedspan: plus-heavy embeddings, cycles and triangle factors in +/-1 labeled complete graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  bool no_meta = false;
  app.add_flag("--no-meta", no_meta, "omit runtime_ms and timestamp from the record");

  using Runner = std::function<Outcome(const Options&)>;
  std::map<CLI::App*, std::pair<std::string, Runner>> commands;
  auto add = [&](const std::string& name, const std::string& help, Runner run) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands[sub] = {name, std::move(run)};
    return sub;
  };
  auto in = [&](CLI::App* s) { s->add_option("--in", opt.in, "instance JSON file"); };
  auto pattern = [&](CLI::App* s) {
    s->add_option("--pattern", opt.pattern, "pattern JSON file");
    s->add_option("--pattern-kind", opt.pattern_kind,
                  "built-in pattern: clique_factor, matching, hamiltonian, triangle_factor, path, random_bounded");
    s->add_option("--delta", opt.delta, "maximum degree for built-in patterns");
  };
  auto seed = [&](CLI::App* s) { s->add_option("--seed", opt.seed, "random seed"); };
  auto out = [&](CLI::App* s) { s->add_option("--out", opt.out, "append the record to this JSONL file"); };

  auto* gen = add("gen", "write a generated instance or pattern", run_gen);
  gen->add_option("--kind", opt.kind,
                  "bipartite_minus_matching, minus_clique, random_density, random_balanced, planted");
  gen->add_option("--n", opt.n, "order")->required();
  gen->add_option("--d", opt.d, "plus-density for random_density");
  gen->add_option("--r", opt.r, "clique order for planted");
  gen->add_option("--out", opt.out, "output JSON file")->required();
  pattern(gen);
  seed(gen);

  auto* embed = add("embed", "derandomized matched embedding of a pattern", run_embed);
  in(embed), pattern(embed), seed(embed), out(embed);

  auto* paths = add("paths", "plus-edge path system local search and Hamiltonian assembly", run_paths);
  in(paths), seed(paths), out(paths);

  auto* tri = add("triangles", "triangle-factor local search with fixed-point certificate", run_triangles);
  in(tri), seed(tri), out(tri);
  tri->add_flag("--shuffled", opt.shuffled, "start from a seed-shuffled factor");

  auto* spec = add("spectrum", "exhaustive embedding spectrum", run_spectrum);
  in(spec), pattern(spec), seed(spec), out(spec);
  spec->add_option("--cap", opt.cap, "largest n to enumerate");

  auto* exact = add("exact", "exhaustive best Hamiltonian cycle and triangle factor", run_exact);
  in(exact), seed(exact), out(exact);
  exact->add_option("--cap", opt.cap, "largest n to enumerate");

  auto* bnd = add("bounds", "closed-form bounds and constants", run_bounds);
  bnd->add_option("--n", opt.n, "order");
  bnd->add_option("--d", opt.d, "plus-density");
  bnd->add_option("--delta", opt.delta, "maximum degree");
  bnd->add_option("--m", opt.m, "pattern edge count (default n)");
  out(bnd);

  auto* disc = add("discrepancy", "Hamiltonian cycle with large |signed sum|", run_discrepancy);
  in(disc), seed(disc), out(disc);

  auto* sweep = add("sweep", "grid over n, d, delta and seeds; JSONL records and CSV summary", run_sweep);
  sweep->add_option("--kind", opt.kind, "embed, paths, triangles or discrepancy")->required();
  sweep->add_option("--n", opt.n_range, "orders: a:b:step or a,b,c")->required();
  sweep->add_option("--d", opt.d_list, "densities a,b,c (default: balanced)");
  sweep->add_option("--delta", opt.delta_list, "maximum degrees for embed");
  sweep->add_option("--pattern-kind", opt.pattern_kind, "pattern for embed (default random_bounded)");
  sweep->add_option("--seeds", opt.seeds, "seeds per cell");
  sweep->add_option("--seed", opt.seed, "first seed");
  sweep->add_option("--out", opt.out, "append per-cell records to this JSONL file");
  sweep->add_option("--csv", opt.csv, "summary CSV: n,d,delta,seed,metric,bound,ratio,pass");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  for (const auto& [sub, entry] : commands) {
    if (!sub->parsed()) continue;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome result = entry.second(opt);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (!no_meta) result.record["meta"] = {{"runtime_ms", ms}, {"timestamp", utc_timestamp()}};
      std::cout << result.record.dump() << std::endl;
      if (entry.first != "gen" && entry.first != "sweep" && !opt.out.empty()) {
        std::ofstream log(opt.out, std::ios::app);
        if (!log) throw InputError("cannot append to '" + opt.out + "'");
        log << result.record.dump() << '\n';
      }
      return result.exit_code;
    } catch (const InputError& e) {
      std::cerr << "input error: " << e.what() << std::endl;
      return kExitInput;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << std::endl;
      return kExitInput;
    }
  }
  return kExitInput;
}
