#include "linkmu/report.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <charconv>
#include <cstdlib>
#include <string_view>
#include <thread>

#include "json.hpp"
#include "linkmu/flat_trace.hpp"
#include "linkmu/generators.hpp"
#include "linkmu/medial.hpp"

namespace linkmu {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::optional<int> coloring_mu(const PlaneGraph& g, int cap) {
  std::vector<std::vector<std::uint8_t>> all;
  try {
    all = enumerate_conservative(g, cap);
  } catch (const TooMany&) {
    return std::nullopt;
  }
  std::uint64_t count = 0;
  for (const auto& c : all)
    if (is_conservative(g, c)) ++count;
  if (!std::has_single_bit(count)) return -1;
  return std::countr_zero(count);
}

}  // namespace

MuReport compute_report(const std::string& name, const PlaneGraph& g, const ReportOptions& opt) {
  MuReport r;
  r.instance = name;
  r.n_vertices = g.vertex_count();
  r.n_edges = g.edge_count();

  auto t0 = Clock::now();
  const Flat f = medial(g);
  r.mu_trace = count_components(f);
  r.elapsed.trace_ms = ms_since(t0);

  t0 = Clock::now();
  r.mu_nullity = mu_nullity(g);
  r.elapsed.nullity_ms = ms_since(t0);

  t0 = Clock::now();
  r.mu_regions = region_space_dim(f);
  r.elapsed.regions_ms = ms_since(t0);

  t0 = Clock::now();
  r.mu_coloring = coloring_mu(g, opt.coloring_dim);
  r.elapsed.coloring_ms = ms_since(t0);

  t0 = Clock::now();
  try {
    r.mu_tutte = mu_tutte(g, opt.max_edges);
  } catch (const EdgeBudgetExceeded&) {
    r.mu_tutte.reset();
  } catch (const InconsistentTutte&) {
    r.mu_tutte = -1;
  }
  r.elapsed.tutte_ms = ms_since(t0);

  r.agree = r.mu_nullity == r.mu_trace && r.mu_regions == r.mu_trace &&
            (!r.mu_coloring || *r.mu_coloring == r.mu_trace) &&
            (!r.mu_tutte || *r.mu_tutte == r.mu_trace);
  return r;
}

namespace {

nlohmann::ordered_json report_json(const MuReport& r, bool with_timings) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance;
  j["n_vertices"] = r.n_vertices;
  j["n_edges"] = r.n_edges;
  j["mu_trace"] = r.mu_trace;
  j["mu_nullity"] = r.mu_nullity;
  j["mu_regions"] = r.mu_regions;
  j["mu_coloring"] = r.mu_coloring ? nlohmann::ordered_json(*r.mu_coloring) : nullptr;
  j["mu_tutte"] = r.mu_tutte ? nlohmann::ordered_json(*r.mu_tutte) : nullptr;
  j["agree"] = r.agree;
  if (with_timings) {
    j["elapsed_ms"] = {{"trace", r.elapsed.trace_ms},
                       {"nullity", r.elapsed.nullity_ms},
                       {"regions", r.elapsed.regions_ms},
                       {"coloring", r.elapsed.coloring_ms},
                       {"tutte", r.elapsed.tutte_ms}};
  }
  return j;
}

int parse_int(std::string_view s, const std::string& item) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw SweepError("bad number '" + std::string(s) + "' in sweep item '" + item + "'");
  }
  return v;
}

std::pair<int, int> parse_range(std::string_view s, const std::string& item) {
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(s, item);
    return {v, v};
  }
  const int lo = parse_int(s.substr(0, dots), item);
  const int hi = parse_int(s.substr(dots + 2), item);
  if (lo > hi) throw SweepError("empty range in sweep item '" + item + "'");
  return {lo, hi};
}

std::pair<int, int> parse_dims(std::string_view s, const std::string& item) {
  const auto x = s.find('x');
  if (x == std::string_view::npos) throw SweepError("expected RxC in sweep item '" + item + "'");
  return {parse_int(s.substr(0, x), item), parse_int(s.substr(x + 1), item)};
}

PlaneGraph build(const std::string& item, PlaneGraph (*make)(int), int n) {
  try {
    return make(n);
  } catch (const InvalidGraph& e) {
    throw SweepError("sweep item '" + item + "': " + e.what());
  }
}

PlaneGraph loop_with_isolated() {
  return PlaneGraph(1, {{0, 1}, {}});
}

PlaneGraph edge_with_loop() {
  // edge 0 joins vertices 0 and 1, edge 1 is a loop at vertex 1
  return PlaneGraph(2, {{0}, {1, 2, 3}});
}

bool has_degree_three(const PlaneGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 3) return true;
  return false;
}

}  // namespace

std::string report_to_json(const MuReport& r, bool with_timings, int indent) {
  return report_json(r, with_timings).dump(indent);
}

std::vector<Instance> degenerate_instances() {
  std::vector<Instance> out;
  out.push_back({"empty", make_empty()});
  out.push_back({"isolated_vertex", make_path(1)});
  out.push_back({"single_loop", make_cycle(1)});
  out.push_back({"two_isolated_vertices", PlaneGraph(0, {{}, {}})});
  out.push_back({"loop_and_isolated_vertex", loop_with_isolated()});
  out.push_back({"edge_with_loop", edge_with_loop()});
  for (int k = 2; k <= 3; ++k) out.push_back({"bouquet " + std::to_string(k), make_loop_bouquet_nested(k)});
  return out;
}

std::vector<Instance> expand_families(const std::string& sweep) {
  std::vector<Instance> out;
  std::size_t start = 0;
  while (start <= sweep.size()) {
    const auto comma = sweep.find(',', start);
    const std::string item = sweep.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    start = comma == std::string::npos ? sweep.size() + 1 : comma + 1;
    if (item.empty()) {
      if (sweep.empty()) break;
      throw SweepError("empty item in sweep '" + sweep + "'");
    }

    const auto colon = item.find(':');
    const std::string family = item.substr(0, colon);
    const std::string_view arg =
        colon == std::string::npos ? std::string_view{} : std::string_view(item).substr(colon + 1);
    auto need_arg = [&] {
      if (colon == std::string::npos) throw SweepError("sweep item '" + item + "' needs a range");
    };

    auto ranged = [&](const char* label, PlaneGraph (*make)(int)) {
      need_arg();
      const auto [lo, hi] = parse_range(arg, item);
      for (int n = lo; n <= hi; ++n) out.push_back({std::string(label) + " " + std::to_string(n), build(item, make, n)});
    };

    if (family == "cycle" || family == "cycles") {
      ranged("cycle", make_cycle);
    } else if (family == "path" || family == "paths") {
      ranged("path", make_path);
    } else if (family == "theta" || family == "thetas") {
      ranged("theta", make_theta);
    } else if (family == "wheel" || family == "wheels") {
      ranged("wheel", make_wheel);
    } else if (family == "bouquet" || family == "bouquets") {
      ranged("bouquet", make_loop_bouquet_nested);
    } else if (family == "grid" || family == "grids") {
      need_arg();
      const auto dots = arg.find("..");
      const auto lo = parse_dims(arg.substr(0, dots), item);
      const auto hi = dots == std::string_view::npos ? lo : parse_dims(arg.substr(dots + 2), item);
      if (lo.first > hi.first || lo.second > hi.second) throw SweepError("empty range in sweep item '" + item + "'");
      for (int r = lo.first; r <= hi.first; ++r) {
        for (int c = lo.second; c <= hi.second; ++c) {
          try {
            out.push_back({"grid " + std::to_string(r) + "x" + std::to_string(c), make_grid(r, c)});
          } catch (const InvalidGraph& e) {
            throw SweepError("sweep item '" + item + "': " + e.what());
          }
        }
      }
    } else if (family == "complete4" && colon == std::string::npos) {
      out.push_back({"complete4", make_complete4()});
    } else if (family == "empty" && colon == std::string::npos) {
      out.push_back({"empty", make_empty()});
    } else if (family == "degenerates" && colon == std::string::npos) {
      for (auto& inst : degenerate_instances()) out.push_back(std::move(inst));
    } else {
      throw SweepError("unknown sweep item '" + item + "'");
    }
  }
  return out;
}

std::vector<Instance> random_instances(int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    const int rows = 2 + static_cast<int>(rng.below(4));
    const int cols = 2 + static_cast<int>(rng.below(4));
    const std::uint64_t sub = rng.next() >> 1;  // fits a signed 64-bit CLI argument
    out.push_back({"random_grid_subgraph " + std::to_string(rows) + " " + std::to_string(cols) + " " +
                       std::to_string(sub),
                   make_random_grid_subgraph(rows, cols, sub)});
  }
  return out;
}

std::vector<Instance> embedding_variants(const Instance& inst) {
  std::vector<Instance> out;
  const auto space = inst.name.find(' ');
  const std::string family = inst.name.substr(0, space);
  const int n = space == std::string::npos ? 0 : std::atoi(inst.name.c_str() + space + 1);

  if (family == "theta" && n >= 3) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::swap(perm[0], perm[1]);
    out.push_back({inst.name + " swapped", make_theta_permuted(perm)});
  }
  if (family == "bouquet" && n >= 2) {
    out.push_back({inst.name + " flat", make_loop_bouquet_flat(n)});
  }
  if (has_degree_three(inst.graph)) {
    out.push_back({inst.name + " mirrored", mirror(inst.graph)});
  }
  return out;
}

CheckResult run_check(const std::vector<Instance>& instances, const ReportOptions& opt, bool with_variants,
                      int jobs) {
  // Work list: every instance, then its variants right after it.
  struct Job {
    const Instance* inst;
    int pair_with;  // index of the base job, or -1
  };
  std::vector<Instance> variants;
  std::vector<std::pair<std::size_t, std::size_t>> variant_of;  // (instance index, variant index)
  if (with_variants) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      for (auto& v : embedding_variants(instances[i])) {
        variants.push_back(std::move(v));
        variant_of.emplace_back(i, variants.size() - 1);
      }
    }
  }
  std::vector<Job> work;
  std::vector<int> base_job(instances.size());
  std::size_t next_variant = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    base_job[i] = static_cast<int>(work.size());
    work.push_back({&instances[i], -1});
    while (next_variant < variant_of.size() && variant_of[next_variant].first == i) {
      work.push_back({&variants[variant_of[next_variant].second], base_job[i]});
      ++next_variant;
    }
  }

  CheckResult result;
  result.reports.resize(work.size());
  auto run = [&](std::size_t k) { result.reports[k] = compute_report(work[k].inst->name, work[k].inst->graph, opt); };
  if (jobs <= 1 || work.size() < 2) {
    for (std::size_t k = 0; k < work.size(); ++k) run(k);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    const int n = std::min<int>(jobs, static_cast<int>(work.size()));
    for (int t = 0; t < n; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = cursor++; k < work.size(); k = cursor++) run(k);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t k = 0; k < work.size(); ++k) {
    const auto& r = result.reports[k];
    if (!r.agree) result.all_agree = false;
    if (work[k].pair_with < 0) continue;
    const auto& b = result.reports[work[k].pair_with];
    const bool equal = r.mu_trace == b.mu_trace && r.mu_nullity == b.mu_nullity && r.mu_regions == b.mu_regions &&
                       r.mu_coloring == b.mu_coloring && r.mu_tutte == b.mu_tutte;
    result.pairs.push_back({b.instance, r.instance, equal});
    if (!equal) result.all_agree = false;
  }
  return result;
}

std::string check_to_json(const CheckResult& r, bool with_timings, int indent) {
  nlohmann::ordered_json j;
  j["instances"] = nlohmann::ordered_json::array();
  for (const auto& rep : r.reports) j["instances"].push_back(report_json(rep, with_timings));
  j["embedding_pairs"] = nlohmann::ordered_json::array();
  for (const auto& p : r.pairs) j["embedding_pairs"].push_back({{"first", p.first}, {"second", p.second}, {"equal", p.equal}});
  j["all_agree"] = r.all_agree;
  return j.dump(indent);
}

int agreement_exit_code(const CheckResult& r) { return r.all_agree ? 0 : 1; }

}  // namespace linkmu
