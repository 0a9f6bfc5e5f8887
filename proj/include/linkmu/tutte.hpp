#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linkmu/plane_graph.hpp"

namespace linkmu {

class EdgeBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InconsistentTutte : public Error {
 public:
  using Error::Error;
};

constexpr int kDefaultTutteEdges = 16;

/// Abstract multigraph: vertex count plus edge endpoint list.
struct Multigraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

Multigraph abstract_multigraph(const PlaneGraph& g);

/// T(-1,-1) by deletion-contraction: a loop contributes a factor -1, a bridge
/// a factor -1, any other edge splits into T(G-e) + T(G/e). Edges are taken
/// in list order, so permuting the list changes only the recursion path.
std::int64_t tutte_eval_minus1(const Multigraph& g, int max_edges = kDefaultTutteEdges);
std::int64_t tutte_eval_minus1(const PlaneGraph& g, int max_edges = kDefaultTutteEdges);

/// Per-component T(-1,-1) values, components ordered by smallest vertex.
std::vector<std::int64_t> tutte_per_component(const PlaneGraph& g, int max_edges = kDefaultTutteEdges);

/// mu = sum over components of log2|T(-1,-1)| + 1, with the power-of-two
/// and sign checks (sign = (-1)^|E| (-1)^(mu-1) per component) enforced.
int mu_tutte(const PlaneGraph& g, int max_edges = kDefaultTutteEdges);

}  // namespace linkmu
