#include "linkmu/medial.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace linkmu {

namespace {

// Shades labels by BFS from the unbounded region across segment sides and
// free-circle sides. Returns an error message instead of throwing so the
// constructor and checkerboard() can raise their own error types.
std::optional<std::string> shade_regions(const std::vector<int>& links,
                                         const std::vector<int>& regions, int region_count,
                                         const std::vector<FreeCircle>& circles,
                                         std::vector<std::uint8_t>& shaded) {
  std::vector<std::vector<int>> adj(region_count);
  for (int d = 0; d < static_cast<int>(links.size()); ++d) {
    if (d < links[d]) {
      adj[regions[d]].push_back(regions[links[d]]);
      adj[regions[links[d]]].push_back(regions[d]);
    }
  }
  for (const auto& c : circles) {
    adj[c.side_a].push_back(c.side_b);
    adj[c.side_b].push_back(c.side_a);
  }
  std::vector<int> colour(region_count, -1);
  std::vector<int> queue{Flat::kUnbounded};
  colour[Flat::kUnbounded] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int r = queue[head];
    for (int s : adj[r]) {
      if (colour[s] == -1) {
        colour[s] = 1 - colour[r];
        queue.push_back(s);
      } else if (colour[s] == colour[r]) {
        return "regions " + std::to_string(r) + " and " + std::to_string(s) +
               " are adjacent but share a shade";
      }
    }
  }
  for (int r = 0; r < region_count; ++r) {
    if (colour[r] == -1) return "region " + std::to_string(r) + " is not reachable";
  }
  shaded.assign(colour.begin(), colour.end());
  return std::nullopt;
}

}  // namespace

Flat::Flat() = default;

Flat::Flat(std::vector<int> links, std::vector<int> regions, int region_count,
           std::vector<FreeCircle> free_circles, std::optional<MedialOrigin> origin)
    : links_(std::move(links)),
      regions_(std::move(regions)),
      region_count_(region_count),
      circles_(std::move(free_circles)),
      origin_(std::move(origin)) {
  const int n = dart_count();
  if (n % 4 != 0) throw InvalidFlat("dart count is not a multiple of 4");
  if (static_cast<int>(regions_.size()) != n) throw InvalidFlat("region table size mismatch");
  if (region_count_ < 1) throw InvalidFlat("a flat always has the unbounded region");
  for (int d = 0; d < n; ++d) {
    const int e = links_[d];
    if (e < 0 || e >= n || e == d || links_[e] != d) {
      throw InvalidFlat("link is not a fixed-point-free involution at dart " + std::to_string(d));
    }
    if (regions_[d] < 0 || regions_[d] >= region_count_) {
      throw InvalidFlat("region label out of range at dart " + std::to_string(d));
    }
  }
  std::vector<char> used(region_count_, 0);
  used[kUnbounded] = 1;
  for (int r : regions_) used[r] = 1;
  for (const auto& c : circles_) {
    if (c.side_a < 0 || c.side_a >= region_count_ || c.side_b < 0 || c.side_b >= region_count_) {
      throw InvalidFlat("free circle region out of range");
    }
    used[c.side_a] = used[c.side_b] = 1;
  }
  for (int r = 0; r < region_count_; ++r)
    if (!used[r]) throw InvalidFlat("region " + std::to_string(r) + " is unused");

  // Connected pieces of the crossing graph.
  std::vector<int> piece(crossing_count(), -1);
  int pieces = 0;
  for (int s = 0; s < crossing_count(); ++s) {
    if (piece[s] != -1) continue;
    std::vector<int> stack{s};
    piece[s] = pieces;
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      for (int k = 0; k < 4; ++k) {
        const int t = crossing_of(links_[4 * c + k]);
        if (piece[t] == -1) {
          piece[t] = pieces;
          stack.push_back(t);
        }
      }
    }
    ++pieces;
  }
  std::vector<int> piece_vertices(pieces, 0), piece_faces(pieces, 0);
  for (int c = 0; c < crossing_count(); ++c) piece_vertices[piece[c]]++;
  std::vector<std::vector<int>> piece_labels(pieces);
  for (const auto& orbit : flat_face_orbits(*this)) {
    const int label = regions_[orbit.front()];
    for (int d : orbit) {
      if (regions_[d] != label) {
        throw InvalidFlat("face orbit through dart " + std::to_string(orbit.front()) +
                          " carries two region labels");
      }
    }
    const int p = piece[crossing_of(orbit.front())];
    piece_faces[p]++;
    piece_labels[p].push_back(label);
  }
  int expected_regions = 1 + free_circle_count();
  for (int p = 0; p < pieces; ++p) {
    // 4-regular: E = 2V, so Euler V - E + F = 2 means F = V + 2.
    if (piece_faces[p] != piece_vertices[p] + 2) throw InvalidFlat("a piece of the flat is not planar");
    auto& labels = piece_labels[p];
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
      throw InvalidFlat("two faces of one connected piece share a region label");
    }
    expected_regions += piece_faces[p] - 1;
  }
  if (expected_regions != region_count_) {
    throw InvalidFlat("region count " + std::to_string(region_count_) + " inconsistent with " +
                      std::to_string(expected_regions) + " from the face structure");
  }
  std::vector<std::uint8_t> shaded;
  if (auto err = shade_regions(links_, regions_, region_count_, circles_, shaded)) {
    throw InvalidFlat("no checkerboard shading: " + *err);
  }
}

std::vector<std::vector<int>> flat_face_orbits(const Flat& f) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(f.dart_count(), 0);
  for (int s = 0; s < f.dart_count(); ++s) {
    if (seen[s]) continue;
    std::vector<int> orbit;
    int d = s;
    do {
      seen[d] = 1;
      orbit.push_back(d);
      d = f.face_next(d);
    } while (d != s);
    out.push_back(std::move(orbit));
  }
  return out;
}

int Shading::shaded_count() const {
  return static_cast<int>(std::count(shaded.begin(), shaded.end(), 1));
}

Flat medial(const PlaneGraph& g) {
  check_planar(g);
  const auto fs = faces(g);
  const auto fidx = face_index(g, fs);
  const auto outer = outer_faces(g, fs);

  MedialOrigin origin;
  origin.region_origin.push_back({RegionKind::Unbounded, -1});
  origin.vertex_region.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    origin.vertex_region[v] = static_cast<int>(origin.region_origin.size());
    origin.region_origin.push_back({RegionKind::Vertex, v});
  }
  std::vector<char> is_outer(fs.size(), 0);
  for (int f : outer)
    if (f >= 0) is_outer[f] = 1;
  origin.face_region.resize(fs.size());
  for (const auto& f : fs) {
    if (is_outer[f.id]) {
      origin.face_region[f.id] = Flat::kUnbounded;
    } else {
      origin.face_region[f.id] = static_cast<int>(origin.region_origin.size());
      origin.region_origin.push_back({RegionKind::Face, f.id});
    }
  }

  // Medial dart 2d heads for the corner between d and rot_next(d), dart 2d+1
  // for the corner between rot_prev(d) and d. Around the crossing of edge e
  // that is the counterclockwise order (left of 2e, right of 2e, left of
  // 2e+1, right of 2e+1), and each corner is one strand segment.
  const int n = 2 * g.dart_count();
  std::vector<int> links(n), regions(n);
  for (Dart d = 0; d < g.dart_count(); ++d) {
    const Dart next = g.rot_next(d);
    links[2 * d] = 2 * next + 1;
    links[2 * next + 1] = 2 * d;
    regions[2 * d + 1] = origin.vertex_region[g.vertex_of(d)];
    regions[2 * d] = origin.face_region[fidx[twin(d)]];
  }
  std::vector<FreeCircle> circles;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) circles.push_back({origin.vertex_region[v], Flat::kUnbounded});
  }
  const int region_count = static_cast<int>(origin.region_origin.size());
  return Flat(std::move(links), std::move(regions), region_count, std::move(circles),
              std::move(origin));
}

Shading checkerboard(const Flat& f) {
  Shading s;
  if (auto err = shade_regions(f.links(), f.regions(), f.region_count(), f.free_circles(), s.shaded)) {
    throw ShadingImpossible(*err);
  }
  return s;
}

std::string flat_to_json(const Flat& f, int indent) {
  using nlohmann::json;
  const auto shading = checkerboard(f);
  json j;
  j["crossing_count"] = f.crossing_count();
  json crossings = json::array();
  for (int c = 0; c < f.crossing_count(); ++c) {
    json darts = json::array(), links = json::array(), regions = json::array();
    for (int k = 0; k < 4; ++k) {
      darts.push_back(4 * c + k);
      links.push_back(f.link(4 * c + k));
      regions.push_back(f.region(4 * c + k));
    }
    crossings.push_back({{"id", c}, {"darts", darts}, {"links", links}, {"regions", regions}});
  }
  j["crossings"] = std::move(crossings);
  j["free_circles"] = f.free_circle_count();
  json circles = json::array();
  for (const auto& c : f.free_circles()) circles.push_back({c.side_a, c.side_b});
  j["free_circle_regions"] = std::move(circles);
  j["region_count"] = f.region_count();
  j["unbounded_region"] = Flat::kUnbounded;
  j["shaded_regions"] = json::array();
  for (int r = 0; r < f.region_count(); ++r)
    if (shading.shaded[r]) j["shaded_regions"].push_back(r);
  if (const auto& o = f.origin()) {
    json origin = json::array();
    for (const auto& ro : o->region_origin) {
      const char* kind = ro.kind == RegionKind::Vertex ? "vertex"
                         : ro.kind == RegionKind::Face ? "face"
                                                       : "unbounded";
      origin.push_back({{"kind", kind}, {"index", ro.index}});
    }
    j["region_origin"] = std::move(origin);
  }
  return j.dump(indent);
}

}  // namespace linkmu
