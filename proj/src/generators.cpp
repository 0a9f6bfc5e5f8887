#include "linkmu/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace linkmu {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and platform independent.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidGraph(msg);
}

}  // namespace

PlaneGraph from_straight_line(const std::vector<std::pair<double, double>>& points,
                              const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<std::pair<double, Dart>>> around(n);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const auto [a, b] = edges[e];
    require(a != b && a >= 0 && b >= 0 && a < n && b < n, "straight-line edge must join two points");
    const auto [ax, ay] = points[a];
    const auto [bx, by] = points[b];
    around[a].emplace_back(std::atan2(by - ay, bx - ax), 2 * e);
    around[b].emplace_back(std::atan2(ay - by, ax - bx), 2 * e + 1);
  }
  std::vector<std::vector<Dart>> rots(n);
  for (int v = 0; v < n; ++v) {
    std::sort(around[v].begin(), around[v].end());
    for (const auto& [angle, d] : around[v]) rots[v].push_back(d);
  }
  return PlaneGraph(static_cast<int>(edges.size()), std::move(rots));
}

PlaneGraph make_empty() { return PlaneGraph(0, {}); }

PlaneGraph make_cycle(int n) {
  require(n >= 1, "cycle needs n >= 1");
  std::vector<std::vector<Dart>> rots(n);
  // Edge i runs from vertex i to vertex i+1 (mod n).
  for (int i = 0; i < n; ++i) {
    rots[i].push_back(2 * i);
    rots[(i + 1) % n].push_back(2 * i + 1);
  }
  return PlaneGraph(n, std::move(rots));
}

PlaneGraph make_path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<std::vector<Dart>> rots(n);
  for (int i = 0; i + 1 < n; ++i) {
    rots[i].push_back(2 * i);
    rots[i + 1].push_back(2 * i + 1);
  }
  return PlaneGraph(n - 1, std::move(rots));
}

namespace {

std::vector<std::pair<double, double>> grid_points(int rows, int cols) {
  std::vector<std::pair<double, double>> pts;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) pts.emplace_back(c, r);
  return pts;
}

std::vector<std::pair<int, int>> grid_edges(int rows, int cols) {
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) edges.emplace_back(r * cols + c, r * cols + c + 1);
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c) edges.emplace_back(r * cols + c, (r + 1) * cols + c);
  return edges;
}

}  // namespace

PlaneGraph make_grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
  return from_straight_line(grid_points(rows, cols), grid_edges(rows, cols));
}

PlaneGraph make_wheel(int rim) {
  require(rim >= 3, "wheel needs at least 3 rim vertices");
  std::vector<std::pair<double, double>> pts;
  for (int k = 0; k < rim; ++k) {
    const double t = 2.0 * std::numbers::pi * k / rim;
    pts.emplace_back(std::cos(t), std::sin(t));
  }
  pts.emplace_back(0.0, 0.0);
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < rim; ++k) edges.emplace_back(k, (k + 1) % rim);
  for (int k = 0; k < rim; ++k) edges.emplace_back(rim, k);
  return from_straight_line(pts, edges);
}

PlaneGraph make_theta_permuted(const std::vector<int>& perm) {
  const int k = static_cast<int>(perm.size());
  require(k >= 2, "theta needs k >= 2");
  std::vector<int> check(perm);
  std::sort(check.begin(), check.end());
  for (int i = 0; i < k; ++i) require(check[i] == i, "theta permutation is not a permutation");
  std::vector<std::vector<Dart>> rots(2);
  for (int e : perm) rots[0].push_back(2 * e);
  for (auto it = perm.rbegin(); it != perm.rend(); ++it) rots[1].push_back(2 * *it + 1);
  return PlaneGraph(k, std::move(rots));
}

PlaneGraph make_theta(int k) {
  require(k >= 2, "theta needs k >= 2");
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  return make_theta_permuted(perm);
}

PlaneGraph make_complete4() {
  const std::vector<std::pair<double, double>> pts = {
      {0.0, 1.0}, {-0.866, -0.5}, {0.866, -0.5}, {0.0, 0.0}};
  const std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return from_straight_line(pts, edges);
}

PlaneGraph make_loop_bouquet_nested(int k) {
  require(k >= 1, "bouquet needs k >= 1");
  std::vector<Dart> rot;
  for (int i = 0; i < k; ++i) rot.push_back(2 * i);
  for (int i = k - 1; i >= 0; --i) rot.push_back(2 * i + 1);
  return PlaneGraph(k, {rot});
}

PlaneGraph make_loop_bouquet_flat(int k) {
  require(k >= 1, "bouquet needs k >= 1");
  std::vector<Dart> rot(2 * k);
  std::iota(rot.begin(), rot.end(), 0);
  return PlaneGraph(k, {rot});
}

PlaneGraph make_random_grid_subgraph(int rows, int cols, std::uint64_t seed) {
  require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
  const auto all = grid_edges(rows, cols);
  SplitMix64 rng(seed);
  std::vector<int> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  for (size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  // Random Kruskal: shuffled edges, union-find.
  std::vector<int> parent(rows * cols);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> keep(all.size(), 0);
  for (int idx : order) {
    const int a = find(all[idx].first), b = find(all[idx].second);
    if (a != b) {
      parent[a] = b;
      keep[idx] = 1;
    }
  }
  for (size_t idx = 0; idx < all.size(); ++idx)
    if (!keep[idx] && rng.below(2) == 1) keep[idx] = 1;

  std::vector<std::pair<int, int>> edges;
  for (size_t idx = 0; idx < all.size(); ++idx)
    if (keep[idx]) edges.push_back(all[idx]);
  return from_straight_line(grid_points(rows, cols), edges);
}

PlaneGraph generate(const std::string& family, const std::vector<long long>& args) {
  auto arity = [&](size_t n) {
    require(args.size() == n, family + " takes " + std::to_string(n) + " argument(s)");
  };
  auto arg = [&](size_t i) {
    require(args[i] >= 0 && args[i] <= 1'000'000, family + ": argument out of range");
    return static_cast<int>(args[i]);
  };
  if (family == "empty") return arity(0), make_empty();
  if (family == "cycle") return arity(1), make_cycle(arg(0));
  if (family == "path") return arity(1), make_path(arg(0));
  if (family == "grid") return arity(2), make_grid(arg(0), arg(1));
  if (family == "wheel") return arity(1), make_wheel(arg(0));
  if (family == "theta") return arity(1), make_theta(arg(0));
  if (family == "complete4") return arity(0), make_complete4();
  if (family == "loop_bouquet_nested") return arity(1), make_loop_bouquet_nested(arg(0));
  if (family == "loop_bouquet_flat") return arity(1), make_loop_bouquet_flat(arg(0));
  if (family == "random_grid_subgraph") {
    arity(3);
    require(args[2] >= 0, "seed must be non-negative");
    return make_random_grid_subgraph(arg(0), arg(1), static_cast<std::uint64_t>(args[2]));
  }
  throw InvalidGraph("unknown family '" + family + "'");
}

}  // namespace linkmu
