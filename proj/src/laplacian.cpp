#include "linkmu/laplacian.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "linkmu/generators.hpp"

namespace linkmu {

GF2Matrix laplacian_mod2(const PlaneGraph& g) {
  GF2Matrix q(g.vertex_count(), g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    if (a == b) continue;  // a loop adds 2 to the degree
    q.flip(a, b);
    q.flip(b, a);
    q.flip(a, a);
    q.flip(b, b);
  }
  return q;
}

int mu_nullity(const PlaneGraph& g) { return nullity(laplacian_mod2(g)); }

bool is_conservative(const PlaneGraph& g, const std::vector<std::uint8_t>& colors) {
  if (static_cast<int>(colors.size()) != g.vertex_count()) {
    throw std::invalid_argument("one colour per vertex required");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::uint8_t sum = 0;
    for (Dart d : g.rotation(v)) sum ^= colors[g.vertex_of(twin(d))] & 1u;
    if (g.degree(v) % 2 == 1) sum ^= colors[v] & 1u;
    if (sum) return false;
  }
  return true;
}

bool is_conservative_matrix(const PlaneGraph& g, const std::vector<std::uint8_t>& colors) {
  if (static_cast<int>(colors.size()) != g.vertex_count()) {
    throw std::invalid_argument("one colour per vertex required");
  }
  return !laplacian_mod2(g).multiply(BitVector::from_bits(colors)).any();
}

bool crossing_relations_hold(const Flat& f, const std::vector<std::uint8_t>& region_colors) {
  if (static_cast<int>(region_colors.size()) != f.region_count()) {
    throw std::invalid_argument("one colour per region required");
  }
  if (region_colors[Flat::kUnbounded] != 0) return false;
  for (int c = 0; c < f.crossing_count(); ++c) {
    std::uint8_t sum = 0;
    for (int k = 0; k < 4; ++k) sum ^= region_colors[f.region(4 * c + k)] & 1u;
    if (sum) return false;
  }
  return true;
}

Coloring extend_coloring(const PlaneGraph& g, const Flat& f, const std::vector<std::uint8_t>& colors,
                         std::uint64_t tree_seed) {
  if (!f.origin()) throw InvalidFlat("extend_coloring needs a flat built by medial()");
  const auto& origin = *f.origin();
  if (static_cast<int>(colors.size()) != g.vertex_count() ||
      static_cast<int>(origin.vertex_region.size()) != g.vertex_count()) {
    throw std::invalid_argument("vertex colouring does not match the graph");
  }
  const auto shading = checkerboard(f);
  const int regions = f.region_count();

  std::vector<std::uint8_t> rc(regions, 0);
  for (int v = 0; v < g.vertex_count(); ++v) rc[origin.vertex_region[v]] = colors[v] & 1u;

  // Dual edges between the two unshaded corners of each crossing, weighted by
  // the colours of its two shaded corners.
  struct Step {
    int to;
    std::uint8_t weight;
  };
  std::vector<std::vector<Step>> adj(regions);
  for (int c = 0; c < f.crossing_count(); ++c) {
    int light[2], n_light = 0;
    std::uint8_t weight = 0;
    for (int k = 0; k < 4; ++k) {
      const int r = f.region(4 * c + k);
      if (shading.shaded[r]) {
        weight ^= rc[r];
      } else if (n_light < 2) {
        light[n_light++] = r;
      }
    }
    if (n_light != 2) throw InvalidFlat("crossing without two unshaded corners");
    adj[light[0]].push_back({light[1], weight});
    adj[light[1]].push_back({light[0], weight});
  }

  std::vector<char> reached(regions, 0);
  reached[Flat::kUnbounded] = 1;
  rc[Flat::kUnbounded] = 0;
  if (tree_seed == 0) {
    std::vector<int> queue{Flat::kUnbounded};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int r = queue[head];
      for (const auto& s : adj[r]) {
        if (reached[s.to]) continue;
        reached[s.to] = 1;
        rc[s.to] = rc[r] ^ s.weight;
        queue.push_back(s.to);
      }
    }
  } else {
    SplitMix64 rng(tree_seed);
    for (auto& list : adj)
      for (std::size_t i = list.size(); i > 1; --i) std::swap(list[i - 1], list[rng.below(i)]);
    std::vector<int> stack{Flat::kUnbounded};
    while (!stack.empty()) {
      const int r = stack.back();
      stack.pop_back();
      for (const auto& s : adj[r]) {
        if (reached[s.to]) continue;
        reached[s.to] = 1;
        rc[s.to] = rc[r] ^ s.weight;
        stack.push_back(s.to);
      }
    }
  }
  for (int r = 0; r < regions; ++r) {
    if (!shading.shaded[r] && !reached[r]) {
      throw InvalidFlat("unshaded region " + std::to_string(r) + " unreachable from the unbounded region");
    }
  }
  if (!crossing_relations_hold(f, rc)) {
    throw NotConservative("vertex colouring does not extend: a crossing relation fails");
  }
  return Coloring{std::vector<std::uint8_t>(colors.begin(), colors.end()), std::move(rc)};
}

std::vector<std::vector<std::uint8_t>> enumerate_conservative(const PlaneGraph& g, int max_dim) {
  const auto basis = null_space_basis(laplacian_mod2(g));
  const int k = static_cast<int>(basis.size());
  if (k > max_dim) {
    throw TooMany("kernel dimension " + std::to_string(k) + " exceeds enumeration limit " +
                  std::to_string(max_dim));
  }
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(std::size_t{1} << k);
  BitVector cur(g.vertex_count());
  out.push_back(cur.to_bits());
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
    cur ^= basis[std::countr_zero(i)];
    out.push_back(cur.to_bits());
  }
  return out;
}

GF2Matrix crossing_relations(const Flat& f) {
  GF2Matrix m(f.crossing_count(), f.region_count() - 1);
  for (int c = 0; c < f.crossing_count(); ++c) {
    for (int k = 0; k < 4; ++k) {
      const int r = f.region(4 * c + k);
      if (r != Flat::kUnbounded) m.flip(c, r - 1);
    }
  }
  return m;
}

int region_space_dim(const Flat& f) { return nullity(crossing_relations(f)); }

}  // namespace linkmu
