// linkmu: component number of the medial flat of a plane graph.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkmu/flat_trace.hpp"
#include "linkmu/generators.hpp"
#include "linkmu/laplacian.hpp"
#include "linkmu/medial.hpp"
#include "linkmu/plane_graph.hpp"
#include "linkmu/report.hpp"
#include "linkmu/tutte.hpp"

namespace {

using namespace linkmu;

constexpr const char* kDefaultFamilies =
    "cycles:2..12,paths:2..10,grids:2x2..5x5,theta:2..6,wheel:4..8,complete4,degenerates";

struct Input {
  std::string file;
  std::vector<std::string> gen;
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("file", in.file, ".pg file, or - for standard input");
  cmd->add_option("--gen", in.gen, "generator family and its integer arguments")->expected(1, -1);
}

std::vector<long long> int_args(const std::vector<std::string>& words) {
  std::vector<long long> out;
  for (std::size_t i = 1; i < words.size(); ++i) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(words[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != words[i].size()) throw ParseError("generator argument '" + words[i] + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

std::string join(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
  return s;
}

std::pair<std::string, PlaneGraph> load(const Input& in) {
  PlaneGraph g;
  std::string name;
  if (!in.gen.empty()) {
    if (!in.file.empty()) throw ParseError("give either a file or --gen, not both");
    g = generate(in.gen[0], int_args(in.gen));
    name = join(in.gen);
  } else if (in.file.empty()) {
    throw ParseError("no input: give a .pg file, - for standard input, or --gen");
  } else if (in.file == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    g = parse_plane_graph(text);
    name = "stdin";
  } else {
    std::ifstream is(in.file, std::ios::binary);
    if (!is) throw ParseError("cannot open '" + in.file + "'");
    const std::string text{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
    g = parse_plane_graph(text);
    name = in.file;
  }
  check_planar(g);
  return {name, std::move(g)};
}

int cmd_mu(const Input& in, const std::string& method, bool json, bool timings, const ReportOptions& opt) {
  const auto [name, g] = load(in);
  if (method == "all" || json) {
    const MuReport r = compute_report(name, g, opt);
    if (json) {
      std::cout << report_to_json(r, timings, 2) << "\n";
    } else {
      auto opt_str = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("null"); };
      std::cout << "trace " << r.mu_trace << "\nnullity " << r.mu_nullity << "\nregions " << r.mu_regions
                << "\ncoloring " << opt_str(r.mu_coloring) << "\ntutte " << opt_str(r.mu_tutte) << "\nagree "
                << (r.agree ? "true" : "false") << "\n";
    }
    return r.agree ? 0 : 1;
  }
  int mu = 0;
  if (method == "trace") {
    mu = count_components(medial(g));
  } else if (method == "nullity") {
    mu = mu_nullity(g);
  } else if (method == "regions") {
    mu = region_space_dim(medial(g));
  } else if (method == "coloring") {
    const auto all = enumerate_conservative(g, opt.coloring_dim);
    mu = std::countr_zero(all.size());
  } else if (method == "tutte") {
    mu = mu_tutte(g, opt.max_edges);
  }
  std::cout << mu << "\n";
  return 0;
}

int cmd_check(const std::string& families, int random, std::uint64_t seed, bool json, bool timings,
              bool variants, int jobs, const ReportOptions& opt) {
  std::vector<Instance> instances = expand_families(families);
  for (auto& inst : random_instances(random, seed)) instances.push_back(std::move(inst));
  const CheckResult result = run_check(instances, opt, variants, jobs);
  if (json) {
    std::cout << check_to_json(result, timings, 2) << "\n";
  } else {
    auto opt_str = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
    for (const auto& r : result.reports) {
      std::cout << (r.agree ? "ok   " : "FAIL ") << r.instance << ": V=" << r.n_vertices << " E=" << r.n_edges
                << " trace=" << r.mu_trace << " nullity=" << r.mu_nullity << " regions=" << r.mu_regions
                << " coloring=" << opt_str(r.mu_coloring) << " tutte=" << opt_str(r.mu_tutte) << "\n";
    }
    int bad_pairs = 0;
    for (const auto& p : result.pairs) {
      if (!p.equal) {
        ++bad_pairs;
        std::cout << "FAIL embedding pair " << p.first << " / " << p.second << "\n";
      }
    }
    std::cout << result.reports.size() << " reports, " << result.pairs.size() << " embedding pairs, "
              << (result.all_agree ? "all agree" : "DISAGREEMENT") << "\n";
  }
  return agreement_exit_code(result);
}

int cmd_colorings(const Input& in, int max_dim) {
  const auto [name, g] = load(in);
  for (const auto& c : enumerate_conservative(g, max_dim)) {
    std::string line;
    for (auto b : c) line += b ? '1' : '0';
    std::cout << line << "\n";
  }
  return 0;
}

int cmd_simplify(const Input& in, int budget, bool log, bool json) {
  const auto [name, g] = load(in);
  const Flat f = medial(g);
  if (budget < 0) budget = 10 * f.crossing_count();
  const SimplifyResult r = simplify(f, budget);
  const int mu = count_components(f);
  if (json) {
    nlohmann::ordered_json j;
    j["instance"] = name;
    j["crossings_before"] = f.crossing_count();
    j["crossings_after"] = r.flat.crossing_count();
    j["free_circles"] = r.flat.free_circle_count();
    j["mu_trace"] = mu;
    j["moves"] = r.log.size();
    j["budget"] = budget;
    j["budget_exhausted"] = r.budget_exhausted;
    j["stuck"] = r.stuck;
    if (log) j["log"] = nlohmann::ordered_json::parse(moves_to_json(r.log));
    std::cout << j.dump(2) << "\n";
  } else if (log) {
    std::cout << moves_to_json(r.log, 2) << "\n";
  } else {
    std::cout << "crossings " << f.crossing_count() << " -> " << r.flat.crossing_count() << " in " << r.log.size()
              << " moves (budget " << budget << ")\nfree circles " << r.flat.free_circle_count() << "\nmu_trace "
              << mu << "\n";
  }
  return r.flat.crossing_count() == 0 && r.flat.free_circle_count() == mu ? 0 : 1;
}

int cmd_info(const Input& in, bool json) {
  const auto [name, g] = load(in);
  const Flat f = medial(g);
  if (json) {
    std::cout << flat_to_json(f, 2) << "\n";
    return 0;
  }
  int comps = 0;
  vertex_components(g, &comps);
  const auto shading = checkerboard(f);
  std::cout << "instance " << name << "\nvertices " << g.vertex_count() << "\nedges " << g.edge_count() << "\nfaces "
            << faces(g).size() << "\ncomponents " << comps << "\ncrossings " << f.crossing_count()
            << "\nfree_circles " << f.free_circle_count() << "\nregions " << f.region_count() << " ("
            << shading.shaded_count() << " shaded)\n";
  return 0;
}

int cmd_bench(const std::vector<int>& sizes, int repeat) {
  using Clock = std::chrono::steady_clock;
  for (int n : sizes) {
    for (int k = 0; k < repeat; ++k) {
      const auto t0 = Clock::now();
      const GF2Matrix q = laplacian_mod2(make_grid(n, n));
      const auto t1 = Clock::now();
      const int nul = nullity(q);
      const auto t2 = Clock::now();
      nlohmann::ordered_json row;
      row["n"] = n;
      row["build_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
      row["elim_ms"] = std::chrono::duration<double, std::milli>(t2 - t1).count();
      row["nullity"] = nul;
      std::cout << row.dump() << "\n";
    }
  }
  return 0;
}

int cmd_gen(const std::vector<std::string>& words, const std::string& out) {
  const PlaneGraph g = generate(words.at(0), int_args(words));
  const std::string text = serialize_plane_graph(g);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream os(out, std::ios::binary);
    if (!os) throw ParseError("cannot write '" + out + "'");
    os << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linkmu: component number of the medial flat of a plane graph, five ways"};
  app.require_subcommand(1);

  ReportOptions opt;
  bool json = false, timings = false;

  Input mu_in;
  std::string method = "trace";
  auto* mu = app.add_subcommand("mu", "print mu of one graph");
  add_input(mu, mu_in);
  mu->add_option("--method", method, "trace|nullity|regions|coloring|tutte|all")
      ->check(CLI::IsMember({"trace", "nullity", "regions", "coloring", "tutte", "all"}));
  mu->add_flag("--json", json, "full report as JSON");
  mu->add_flag("--timings", timings, "include per-method times in JSON");
  mu->add_option("--max-edges", opt.max_edges, "edge budget for the Tutte evaluation");
  mu->add_option("--max-dim", opt.coloring_dim, "largest kernel dimension to enumerate");

  std::string families;
  int random = 0, jobs = 1;
  std::uint64_t seed = 1;
  bool no_variants = false;
  auto* check = app.add_subcommand("check", "cross-validate all methods over a sweep");
  check->add_option("--families", families, "sweep, e.g. cycles:2..12,grids:2x2..5x5,complete4");
  check->add_option("--random", random, "number of random grid subgraphs")->check(CLI::NonNegativeNumber);
  check->add_option("--seed", seed, "seed for the random instances");
  check->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  check->add_option("--max-edges", opt.max_edges, "edge budget for the Tutte evaluation");
  check->add_flag("--no-variants", no_variants, "skip embedding-variant pairs");
  check->add_flag("--json", json, "reports as JSON");
  check->add_flag("--timings", timings, "include per-method times in JSON");

  Input col_in;
  auto* colorings = app.add_subcommand("colorings", "list conservative colourings, one 0/1 string per line");
  add_input(colorings, col_in);
  colorings->add_option("--max-dim", opt.coloring_dim, "largest kernel dimension to enumerate");

  Input simp_in;
  int budget = -1;
  bool log = false;
  auto* simp = app.add_subcommand("simplify", "reduce the medial flat to free circles by flat moves");
  add_input(simp, simp_in);
  simp->add_option("--budget", budget, "move budget (default 10 x crossings)");
  simp->add_flag("--log", log, "print the applied moves as JSON");
  simp->add_flag("--json", json, "summary as JSON");

  Input info_in;
  auto* info = app.add_subcommand("info", "graph and medial flat summary");
  add_input(info, info_in);
  info->add_flag("--json", json, "medial flat as JSON");

  std::vector<int> grids{10, 50, 100};
  int repeat = 1;
  auto* bench = app.add_subcommand("bench", "time Laplacian nullity on n x n grids");
  bench->add_option("--grids", grids, "grid sizes")->delimiter(',');
  bench->add_option("--repeat", repeat, "runs per size")->check(CLI::PositiveNumber);

  std::vector<std::string> gen_words;
  std::string out;
  auto* gen = app.add_subcommand("gen", "write a generated graph as .pg");
  gen->add_option("family", gen_words, "family name followed by integer arguments")->required()->expected(1, -1);
  gen->add_option("-o,--output", out, "output file (default standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mu) return cmd_mu(mu_in, method, json, timings, opt);
    if (*check) {
      const std::string sweep = families.empty() && random == 0 ? kDefaultFamilies : families;
      return cmd_check(sweep, random, seed, json, timings, !no_variants, jobs, opt);
    }
    if (*colorings) return cmd_colorings(col_in, opt.coloring_dim);
    if (*simp) return cmd_simplify(simp_in, budget, log, json);
    if (*info) return cmd_info(info_in, json);
    if (*bench) return cmd_bench(grids, repeat);
    if (*gen) return cmd_gen(gen_words, out);
  } catch (const std::exception& e) {
    std::cerr << "linkmu: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
