#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkmu/plane_graph.hpp"

namespace linkmu {

class InvalidFlat : public Error {
 public:
  using Error::Error;
};

class ShadingImpossible : public Error {
 public:
  using Error::Error;
};

/// Crossing-free circle, recorded by the regions on its two sides.
struct FreeCircle {
  int side_a = 0;
  int side_b = 0;
  bool operator==(const FreeCircle&) const = default;
};

enum class RegionKind { Unbounded, Vertex, Face };

struct RegionOrigin {
  RegionKind kind = RegionKind::Unbounded;
  int index = -1;  // vertex or face id of the source plane graph
  bool operator==(const RegionOrigin&) const = default;
};

/// Correspondence between a medial flat and the plane graph it came from.
/// Crossing c is edge c; medial dart 2d+s sits at the crossing of edge(d).
struct MedialOrigin {
  std::vector<int> vertex_region;  // per graph vertex
  std::vector<int> face_region;    // per graph face; unbounded faces map to 0
  std::vector<RegionOrigin> region_origin;
};

/// A flat: a 4-regular plane map on crossings plus crossing-free circles.
///
/// Crossing c owns darts 4c..4c+3 in counterclockwise order; darts 4c+i and
/// 4c+(i^2) are the straight-through pair. link() pairs the two ends of each
/// strand segment. region(d) labels the sector swept counterclockwise from
/// rot_prev(d) to d. Region 0 is the unbounded region. Labels are persistent
/// region identities, so a region touching several connected pieces of the
/// flat carries one label across all of them.
class Flat {
 public:
  static constexpr int kUnbounded = 0;

  Flat();
  /// Validates every structural invariant; throws InvalidFlat.
  Flat(std::vector<int> links, std::vector<int> regions, int region_count,
       std::vector<FreeCircle> free_circles, std::optional<MedialOrigin> origin = std::nullopt);

  int crossing_count() const { return static_cast<int>(links_.size()) / 4; }
  int dart_count() const { return static_cast<int>(links_.size()); }
  int region_count() const { return region_count_; }
  int free_circle_count() const { return static_cast<int>(circles_.size()); }

  int link(int d) const { return links_[d]; }
  int region(int d) const { return regions_[d]; }
  const std::vector<int>& links() const { return links_; }
  const std::vector<int>& regions() const { return regions_; }
  const std::vector<FreeCircle>& free_circles() const { return circles_; }
  const std::optional<MedialOrigin>& origin() const { return origin_; }

  static constexpr int crossing_of(int d) { return d >> 2; }
  static constexpr int opposite(int d) { return d ^ 2; }
  static constexpr int rot_next(int d) { return (d & ~3) | ((d + 1) & 3); }
  static constexpr int rot_prev(int d) { return (d & ~3) | ((d + 3) & 3); }
  /// Face permutation: the sector of face_next(d) continues the region of d.
  int face_next(int d) const { return rot_next(links_[d]); }

  bool operator==(const Flat& o) const {
    return links_ == o.links_ && regions_ == o.regions_ && region_count_ == o.region_count_ &&
           circles_ == o.circles_;
  }

 private:
  std::vector<int> links_;
  std::vector<int> regions_;
  int region_count_ = 1;
  std::vector<FreeCircle> circles_;
  std::optional<MedialOrigin> origin_;
};

/// Face orbits of the 4-regular map, each starting at its smallest dart.
std::vector<std::vector<int>> flat_face_orbits(const Flat& f);

/// Shaded flag per region label.
struct Shading {
  std::vector<std::uint8_t> shaded;
  int shaded_count() const;
  int unshaded_count() const { return static_cast<int>(shaded.size()) - shaded_count(); }
};

/// Medial flat of a planar graph: one crossing per edge, one free circle per
/// isolated vertex. Components are placed side by side in the unbounded region.
/// Throws NonPlanar.
Flat medial(const PlaneGraph& g);

/// Proper two-colouring of regions with the unbounded region unshaded.
Shading checkerboard(const Flat& f);

std::string flat_to_json(const Flat& f, int indent = -1);

}  // namespace linkmu
