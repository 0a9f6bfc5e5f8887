#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linkmu/gf2.hpp"
#include "linkmu/medial.hpp"
#include "linkmu/plane_graph.hpp"

namespace linkmu {

class NotConservative : public Error {
 public:
  using Error::Error;
};

class TooMany : public Error {
 public:
  using Error::Error;
};

/// Colours in {0,1} on the vertices of the graph (the shaded regions of its
/// medial flat) and, once extended, on every region of the flat.
struct Coloring {
  std::vector<std::uint8_t> vertex_colors;
  std::optional<std::vector<std::uint8_t>> region_colors;  // indexed by region label
};

/// Mod-2 Laplacian: q_ii = degree mod 2 (a loop adds 2), q_ij = number of
/// edges joining i and j, mod 2.
GF2Matrix laplacian_mod2(const PlaneGraph& g);

int mu_nullity(const PlaneGraph& g);

/// Parity scan at every vertex over its neighbours listed with multiplicity:
/// even degree needs the neighbour colours to sum to 0, odd degree needs the
/// vertex colour plus its neighbour colours to sum to 0.
bool is_conservative(const PlaneGraph& g, const std::vector<std::uint8_t>& colors);

/// Same question answered as Q2 * c == 0.
bool is_conservative_matrix(const PlaneGraph& g, const std::vector<std::uint8_t>& colors);

/// Extends vertex colours to the unshaded regions of `f` = medial(g) by
/// integrating from the unbounded region along a spanning tree of the
/// unshaded regions: crossing the crossing of edge {a, b} from a region
/// coloured c gives the far region a + b + c. tree_seed 0 walks crossings in
/// index order breadth-first; any other seed walks a seeded shuffle
/// depth-first, giving a different tree. Every crossing relation is checked
/// afterwards; a violation throws NotConservative.
Coloring extend_coloring(const PlaneGraph& g, const Flat& f, const std::vector<std::uint8_t>& colors,
                         std::uint64_t tree_seed = 0);

/// Sum over each crossing's four corners must vanish; unbounded counts as 0.
bool crossing_relations_hold(const Flat& f, const std::vector<std::uint8_t>& region_colors);

constexpr int kDefaultEnumerationDim = 20;

/// All 2^nullity conservative colourings, spanned by the kernel basis of Q2
/// and listed in Gray-code order of the basis coefficients. Throws TooMany
/// when the nullity exceeds max_dim.
std::vector<std::vector<std::uint8_t>> enumerate_conservative(const PlaneGraph& g,
                                                              int max_dim = kDefaultEnumerationDim);

/// Relation matrix of the region space: one row per crossing, column r-1 for
/// bounded region r, entry = number of corners of r at the crossing mod 2.
GF2Matrix crossing_relations(const Flat& f);

/// dim V_F = (#bounded regions) - rank(crossing_relations(f)).
int region_space_dim(const Flat& f);

}  // namespace linkmu
