#include "doctest.h"
#include "json.hpp"
#include "linkmu/generators.hpp"
#include "linkmu/medial.hpp"
#include "linkmu/report.hpp"

using namespace linkmu;

namespace {

std::vector<Instance> sweep() {
  auto out = expand_families("cycles:1..8,paths:1..6,grids:1x1..4x4,theta:2..5,wheel:3..7,complete4,degenerates");
  for (auto& inst : random_instances(15, 99)) out.push_back(std::move(inst));
  for (int k = 1; k <= 4; ++k) out.push_back({"flat bouquet", make_loop_bouquet_flat(k)});
  return out;
}

int expected_regions(const PlaneGraph& g) {
  int total = 1 + g.vertex_count();
  for (const auto& c : euler_per_component(g))
    if (c.edges > 0) total += c.faces - 1;
  return total;
}

}  // namespace

TEST_CASE("medial of a 4-cycle") {
  const Flat f = medial(make_cycle(4));
  CHECK(f.crossing_count() == 4);
  CHECK(f.dart_count() / 2 == 8);
  CHECK(f.region_count() == 6);
  const auto s = checkerboard(f);
  CHECK(s.shaded_count() == 4);
  CHECK(s.unshaded_count() == 2);
}

TEST_CASE("medial of an isolated vertex is one free circle") {
  const Flat f = medial(make_path(1));
  CHECK(f.crossing_count() == 0);
  CHECK(f.free_circle_count() == 1);
  const auto s = checkerboard(f);
  CHECK(s.shaded_count() == 1);
  CHECK(s.unshaded_count() == 1);
  CHECK_FALSE(s.shaded[Flat::kUnbounded]);
}

TEST_CASE("medial of a single edge is a figure eight") {
  const Flat f = medial(make_path(2));
  CHECK(f.crossing_count() == 1);
  CHECK(f.free_circle_count() == 0);
  CHECK(f.region_count() == 3);
  const auto s = checkerboard(f);
  CHECK(s.shaded_count() == 2);
  CHECK_FALSE(s.shaded[Flat::kUnbounded]);
  // The unbounded region meets the crossing at two opposite corners.
  int unbounded_corners = 0;
  for (int d = 0; d < 4; ++d) unbounded_corners += f.region(d) == Flat::kUnbounded;
  CHECK(unbounded_corners == 2);
  // Both lobes return to the only crossing.
  for (int d = 0; d < 4; ++d) CHECK(Flat::crossing_of(f.link(d)) == 0);
}

TEST_CASE("medial of a triangle") {
  const auto s = checkerboard(medial(make_cycle(3)));
  CHECK(s.shaded_count() == 3);
  CHECK(s.unshaded_count() == 2);
}

TEST_CASE("medial of the empty graph") {
  const Flat f = medial(make_empty());
  CHECK(f.crossing_count() == 0);
  CHECK(f.free_circle_count() == 0);
  CHECK(f.region_count() == 1);
}

TEST_CASE("medial rejects non-planar rotation systems") {
  CHECK_THROWS_AS(medial(PlaneGraph(2, {{0, 2, 1, 3}})), NonPlanar);
}

TEST_CASE("medial structure over the sweep") {
  for (const auto& inst : sweep()) {
    CAPTURE(inst.name);
    const auto& g = inst.graph;
    const Flat f = medial(g);
    CHECK(f.crossing_count() == g.edge_count());
    CHECK(f.region_count() == expected_regions(g));
    int isolated = 0;
    for (int v = 0; v < g.vertex_count(); ++v) isolated += g.degree(v) == 0;
    CHECK(f.free_circle_count() == isolated);

    // Links form a fixed-point-free involution.
    for (int d = 0; d < f.dart_count(); ++d) {
      CHECK(f.link(d) != d);
      CHECK(f.link(f.link(d)) == d);
    }

    // Shaded regions are exactly the vertex regions.
    REQUIRE(f.origin().has_value());
    const auto& o = *f.origin();
    const auto s = checkerboard(f);
    CHECK(s.shaded_count() == g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      CHECK(s.shaded[o.vertex_region[v]]);
      CHECK(o.region_origin[o.vertex_region[v]] == RegionOrigin{RegionKind::Vertex, v});
    }
    for (int r = 0; r < f.region_count(); ++r) {
      CHECK(s.shaded[r] == (o.region_origin[r].kind == RegionKind::Vertex));
    }
    CHECK(o.region_origin[Flat::kUnbounded].kind == RegionKind::Unbounded);
    const auto outer = outer_faces(g, faces(g));
    for (int fo : outer)
      if (fo >= 0) CHECK(o.face_region[fo] == Flat::kUnbounded);

    // Proper shading: the two sides of every strand segment differ.
    for (int d = 0; d < f.dart_count(); ++d) CHECK(s.shaded[f.region(d)] != s.shaded[f.region(f.link(d))]);
    for (const auto& c : f.free_circles()) CHECK(s.shaded[c.side_a] != s.shaded[c.side_b]);

    // Around a crossing the shading alternates.
    for (int d = 0; d < f.dart_count(); ++d) CHECK(s.shaded[f.region(d)] != s.shaded[f.region(Flat::rot_next(d))]);
  }
}

TEST_CASE("medial is additive over disjoint unions") {
  const auto inst = sweep();
  for (std::size_t i = 0; i + 1 < inst.size(); i += 2) {
    const auto& a = inst[i].graph;
    const auto& b = inst[i + 1].graph;
    const Flat fa = medial(a), fb = medial(b), fu = medial(disjoint_union(a, b));
    CHECK(fu.crossing_count() == fa.crossing_count() + fb.crossing_count());
    CHECK(fu.free_circle_count() == fa.free_circle_count() + fb.free_circle_count());
    CHECK(fu.region_count() - 1 == (fa.region_count() - 1) + (fb.region_count() - 1));
  }
}

TEST_CASE("flat constructor validation") {
  const Flat f = medial(make_cycle(3));
  auto links = f.links();
  auto regions = f.regions();
  const int rc = f.region_count();
  CHECK_NOTHROW(Flat(links, regions, rc, {}));

  auto fixed = links;
  fixed[fixed[0]] = fixed[0];
  fixed[0] = 0;
  CHECK_THROWS_AS(Flat(fixed, regions, rc, {}), InvalidFlat);

  auto not_involution = links;
  std::swap(not_involution[0], not_involution[1]);
  CHECK_THROWS_AS(Flat(not_involution, regions, rc, {}), InvalidFlat);

  CHECK_THROWS_AS(Flat(links, regions, rc + 1, {}), InvalidFlat);

  auto mixed = regions;
  mixed[0] = mixed[0] == 0 ? 1 : 0;
  CHECK_THROWS_AS(Flat(links, mixed, rc, {}), InvalidFlat);

  CHECK_THROWS_AS(Flat({0, 1, 2}, {0, 0, 0}, 1, {}), InvalidFlat);
  CHECK_THROWS_AS(Flat({}, {}, 2, {FreeCircle{0, 0}}), InvalidFlat);
  CHECK_NOTHROW(Flat({}, {}, 2, {FreeCircle{1, 0}}));
}

TEST_CASE("flat JSON carries the crossings and regions") {
  const Flat f = medial(disjoint_union(make_cycle(4), make_path(1)));
  const auto j = nlohmann::json::parse(flat_to_json(f));
  CHECK(j["crossing_count"] == 4);
  CHECK(j["crossings"].size() == 4);
  CHECK(j["crossings"][0]["darts"].size() == 4);
  CHECK(j["free_circles"] == 1);
  CHECK(j["unbounded_region"] == 0);
  CHECK(j["region_count"] == f.region_count());
  CHECK(j["shaded_regions"].size() == 5);
}
