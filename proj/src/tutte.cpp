#include "linkmu/tutte.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace linkmu {

Multigraph abstract_multigraph(const PlaneGraph& g) {
  Multigraph m;
  m.vertices = g.vertex_count();
  for (int e = 0; e < g.edge_count(); ++e) m.edges.push_back(g.endpoints(e));
  return m;
}

namespace {

// Is edge idx the only connection between its endpoints' sides?
bool is_bridge(int vertices, const std::vector<std::pair<int, int>>& edges, std::size_t idx) {
  const auto [a, b] = edges[idx];
  std::vector<std::vector<int>> adj(vertices);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == idx) continue;
    adj[edges[i].first].push_back(edges[i].second);
    adj[edges[i].second].push_back(edges[i].first);
  }
  std::vector<char> seen(vertices, 0);
  std::vector<int> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v == b) return false;
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return true;
}

// Contract (a, b): b merges into a, vertex ids above b shift down by one.
std::vector<std::pair<int, int>> contract(const std::vector<std::pair<int, int>>& edges,
                                          std::size_t idx) {
  const auto [a0, b0] = edges[idx];
  const int keep = std::min(a0, b0), gone = std::max(a0, b0);
  auto map = [&](int v) {
    if (v == gone) v = keep;
    return v > gone ? v - 1 : v;
  };
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size() - 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == idx) continue;
    out.emplace_back(map(edges[i].first), map(edges[i].second));
  }
  return out;
}

std::int64_t eval(int vertices, std::vector<std::pair<int, int>> edges) {
  std::int64_t factor = 1;
  while (!edges.empty()) {
    const auto [a, b] = edges.front();
    if (a == b) {  // loop: y = -1
      factor = -factor;
      edges.erase(edges.begin());
      continue;
    }
    if (is_bridge(vertices, edges, 0)) {  // bridge: x = -1
      factor = -factor;
      edges = contract(edges, 0);
      --vertices;
      continue;
    }
    auto deleted = edges;
    deleted.erase(deleted.begin());
    return factor * (eval(vertices, std::move(deleted)) + eval(vertices - 1, contract(edges, 0)));
  }
  return factor;
}

}  // namespace

std::int64_t tutte_eval_minus1(const Multigraph& g, int max_edges) {
  if (static_cast<int>(g.edges.size()) > max_edges) {
    throw EdgeBudgetExceeded("Tutte evaluation limited to " + std::to_string(max_edges) +
                             " edges, graph has " + std::to_string(g.edges.size()));
  }
  return eval(g.vertices, g.edges);
}

std::int64_t tutte_eval_minus1(const PlaneGraph& g, int max_edges) {
  return tutte_eval_minus1(abstract_multigraph(g), max_edges);
}

std::vector<std::int64_t> tutte_per_component(const PlaneGraph& g, int max_edges) {
  if (g.edge_count() > max_edges) {
    throw EdgeBudgetExceeded("Tutte evaluation limited to " + std::to_string(max_edges) +
                             " edges, graph has " + std::to_string(g.edge_count()));
  }
  int k = 0;
  const auto comp = vertex_components(g, &k);
  std::vector<Multigraph> parts(k);
  std::vector<int> local(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) local[v] = parts[comp[v]].vertices++;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    parts[comp[a]].edges.emplace_back(local[a], local[b]);
  }
  std::vector<std::int64_t> out;
  for (const auto& p : parts) out.push_back(tutte_eval_minus1(p, max_edges));
  return out;
}

int mu_tutte(const PlaneGraph& g, int max_edges) {
  const auto values = tutte_per_component(g, max_edges);
  int k = 0;
  const auto comp = vertex_components(g, &k);
  std::vector<int> edges(k, 0);
  for (int e = 0; e < g.edge_count(); ++e) edges[comp[g.vertex_of(2 * e)]]++;
  int mu = 0;
  for (int c = 0; c < k; ++c) {
    const std::int64_t t = values[c];
    const auto mag = static_cast<std::uint64_t>(t < 0 ? -t : t);
    if (mag == 0 || !std::has_single_bit(mag)) {
      throw InconsistentTutte("|T(-1,-1)| = " + std::to_string(mag) + " is not a power of two");
    }
    const int part_mu = std::countr_zero(mag) + 1;
    const bool negative = ((edges[c] + part_mu - 1) % 2) != 0;
    if ((t < 0) != negative) {
      throw InconsistentTutte("sign of T(-1,-1) = " + std::to_string(t) +
                              " disagrees with (-1)^|E| (-1)^(mu-1)");
    }
    mu += part_mu;
  }
  return mu;
}

}  // namespace linkmu
