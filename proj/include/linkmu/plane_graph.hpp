#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linkmu {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// A rotation system fails Euler's formula on some connected component.
class NonPlanar : public Error {
 public:
  NonPlanar(int component, int characteristic);
  int component() const { return component_; }
  int characteristic() const { return characteristic_; }

 private:
  int component_;
  int characteristic_;
};

/// Half-edge id. Edge e owns darts 2e and 2e+1.
using Dart = int;

constexpr int edge_of(Dart d) { return d >> 1; }
constexpr Dart twin(Dart d) { return d ^ 1; }

struct Face {
  int id = 0;
  std::vector<Dart> darts;
};

/// Plane multigraph given as a rotation system over darts.
///
/// rotations[v] lists the darts leaving v in counterclockwise order. A loop
/// puts both of its darts in the same rotation. The face permutation maps a
/// dart d to the dart following twin(d) in the rotation at twin(d)'s vertex.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  /// Validates that the rotations partition {0, ..., 2*edge_count-1}.
  PlaneGraph(int edge_count, std::vector<std::vector<Dart>> rotations,
             std::optional<Dart> outer_face_hint = std::nullopt);

  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  int edge_count() const { return edge_count_; }
  int dart_count() const { return 2 * edge_count_; }

  const std::vector<std::vector<Dart>>& rotations() const { return rotations_; }
  const std::vector<Dart>& rotation(int v) const { return rotations_[v]; }
  std::optional<Dart> outer_face_hint() const { return outer_hint_; }

  int degree(int v) const { return static_cast<int>(rotations_[v].size()); }
  int vertex_of(Dart d) const { return dart_vertex_[d]; }

  /// Next / previous dart counterclockwise around vertex_of(d).
  Dart rot_next(Dart d) const;
  Dart rot_prev(Dart d) const;

  /// Face permutation successor.
  Dart face_next(Dart d) const { return rot_next(twin(d)); }

  /// Endpoints of edge e: vertex of dart 2e, vertex of dart 2e+1.
  std::pair<int, int> endpoints(int e) const {
    return {dart_vertex_[2 * e], dart_vertex_[2 * e + 1]};
  }

  bool operator==(const PlaneGraph& other) const {
    return edge_count_ == other.edge_count_ && rotations_ == other.rotations_ &&
           outer_hint_ == other.outer_hint_;
  }

 private:
  int edge_count_ = 0;
  std::vector<std::vector<Dart>> rotations_;
  std::optional<Dart> outer_hint_;
  std::vector<int> dart_vertex_;
  std::vector<int> dart_pos_;
};

/// Face orbits, ordered by smallest dart; each orbit starts at its smallest dart.
std::vector<Face> faces(const PlaneGraph& g);

/// face_index[d] = id of the face containing dart d.
std::vector<int> face_index(const PlaneGraph& g, const std::vector<Face>& fs);

/// Connected components: component id per vertex, ids in order of first vertex.
std::vector<int> vertex_components(const PlaneGraph& g, int* count = nullptr);

struct ComponentEuler {
  int component = 0;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int characteristic() const { return vertices - edges + faces; }
};

/// Euler data per connected component. An edgeless component counts one face.
std::vector<ComponentEuler> euler_per_component(const PlaneGraph& g);

/// Throws NonPlanar for the first component with V - E + F != 2.
void check_planar(const PlaneGraph& g);
bool is_planar(const PlaneGraph& g);

/// Face used as the unbounded face of each component that has edges; -1 for
/// edgeless components. Uses the outer face hint where it lies in the
/// component, otherwise the face holding the component's smallest dart.
std::vector<int> outer_faces(const PlaneGraph& g, const std::vector<Face>& fs);

PlaneGraph parse_plane_graph(std::string_view text);
std::string serialize_plane_graph(const PlaneGraph& g);

PlaneGraph disjoint_union(const PlaneGraph& a, const PlaneGraph& b);

/// Reverse every rotation (the mirror-image embedding).
PlaneGraph mirror(const PlaneGraph& g);

}  // namespace linkmu
