#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkmu/plane_graph.hpp"

namespace linkmu {

// Instance families. Every generator returns a planar rotation system.

PlaneGraph make_empty();
PlaneGraph make_cycle(int n);   // n >= 1; n = 1 is a single loop, n = 2 a digon
PlaneGraph make_path(int n);    // n >= 1 vertices
PlaneGraph make_grid(int rows, int cols);
PlaneGraph make_wheel(int rim);  // rim >= 3 rim vertices plus a hub
PlaneGraph make_theta(int k);    // two vertices, k >= 2 parallel edges
PlaneGraph make_complete4();
/// One vertex carrying k loops, each drawn inside the previous one.
PlaneGraph make_loop_bouquet_nested(int k);
/// One vertex carrying k loops drawn side by side.
PlaneGraph make_loop_bouquet_flat(int k);
/// Connected edge-subgraph of the rows x cols grid: a random spanning tree plus
/// each remaining grid edge with probability 1/2. Deterministic in seed.
PlaneGraph make_random_grid_subgraph(int rows, int cols, std::uint64_t seed);

/// Straight-line embedding: rotations sorted counterclockwise by angle.
/// Edge i joins edges[i].first (dart 2i) to edges[i].second (dart 2i+1).
PlaneGraph from_straight_line(const std::vector<std::pair<double, double>>& points,
                              const std::vector<std::pair<int, int>>& edges);

/// Theta graph whose edges appear at the first vertex in the cyclic order
/// given by perm (a permutation of 0..k-1); the second vertex mirrors it.
PlaneGraph make_theta_permuted(const std::vector<int>& perm);

/// Dispatch by family name ("cycle", "path", "grid", "wheel", "theta",
/// "complete4", "loop_bouquet_nested", "loop_bouquet_flat",
/// "random_grid_subgraph", "empty"). Throws InvalidGraph on bad parameters.
PlaneGraph generate(const std::string& family, const std::vector<long long>& args);

/// Deterministic 64-bit generator with a portable bounded draw.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound) for bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

}  // namespace linkmu
