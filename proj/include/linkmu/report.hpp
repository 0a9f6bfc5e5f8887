#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkmu/plane_graph.hpp"
#include "linkmu/tutte.hpp"
#include "linkmu/laplacian.hpp"

namespace linkmu {

class SweepError : public Error {
 public:
  using Error::Error;
};

struct MethodTimes {
  double trace_ms = 0;
  double nullity_ms = 0;
  double regions_ms = 0;
  double coloring_ms = 0;
  double tutte_ms = 0;
};

struct MuReport {
  std::string instance;
  int n_vertices = 0;
  int n_edges = 0;
  int mu_trace = 0;
  int mu_nullity = 0;
  int mu_regions = 0;
  std::optional<int> mu_coloring;  // empty when the kernel is too large to enumerate
  std::optional<int> mu_tutte;     // empty when over the edge budget
  bool agree = false;
  MethodTimes elapsed;
};

struct ReportOptions {
  int max_edges = kDefaultTutteEdges;
  int coloring_dim = kDefaultEnumerationDim;
};

/// Runs all five methods. The colouring count keeps only enumerated vectors
/// that pass the per-vertex parity scan, so it is not just 2^nullity.
MuReport compute_report(const std::string& name, const PlaneGraph& g, const ReportOptions& opt = {});

/// JSON object; elapsed times only when with_timings is set, so that reports
/// for the same inputs are byte-identical by default.
std::string report_to_json(const MuReport& r, bool with_timings = false, int indent = -1);

struct Instance {
  std::string name;
  PlaneGraph graph;
};

/// Comma-separated sweep items: cycles:2..12, paths:2..10, grids:2x2..5x5,
/// theta:2..6, wheel:4..8 (or wheels:), bouquet:1..4, complete4, empty,
/// degenerates. Singular names (cycle:5, grid:3x4) are accepted too.
std::vector<Instance> expand_families(const std::string& sweep);

/// count random grid subgraphs with 2..5 rows and columns, seeded.
std::vector<Instance> random_instances(int count, std::uint64_t seed);

/// The fixed degenerate set: empty graph, isolated vertex, single loop, two
/// isolated vertices, loop plus isolated vertex, edge with a loop at one end.
std::vector<Instance> degenerate_instances();

/// Other planar rotation systems of the same abstract graph: a reordered theta
/// graph, the flat arrangement of a nested loop bouquet, the mirror image when
/// some vertex has degree >= 3.
std::vector<Instance> embedding_variants(const Instance& inst);

struct EmbeddingPairResult {
  std::string first;
  std::string second;
  bool equal = false;
};

struct CheckResult {
  std::vector<MuReport> reports;
  std::vector<EmbeddingPairResult> pairs;
  bool all_agree = true;
};

/// Reports come back in instance order; pairs compare every method's value.
CheckResult run_check(const std::vector<Instance>& instances, const ReportOptions& opt = {},
                      bool with_variants = true, int jobs = 1);

std::string check_to_json(const CheckResult& r, bool with_timings = false, int indent = -1);

/// 0 when everything agrees, 1 otherwise.
int agreement_exit_code(const CheckResult& r);

}  // namespace linkmu
