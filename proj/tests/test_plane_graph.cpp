#include <numeric>
#include <set>

#include "doctest.h"
#include "linkmu/generators.hpp"
#include "linkmu/plane_graph.hpp"
#include "linkmu/report.hpp"

using namespace linkmu;

namespace {

std::vector<PlaneGraph> sample_graphs() {
  std::vector<PlaneGraph> out;
  for (int n = 1; n <= 6; ++n) out.push_back(make_cycle(n));
  for (int n = 1; n <= 5; ++n) out.push_back(make_path(n));
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c) out.push_back(make_grid(r, c));
  for (int k = 3; k <= 7; ++k) out.push_back(make_wheel(k));
  for (int k = 2; k <= 5; ++k) out.push_back(make_theta(k));
  for (int k = 1; k <= 4; ++k) out.push_back(make_loop_bouquet_nested(k));
  for (int k = 1; k <= 4; ++k) out.push_back(make_loop_bouquet_flat(k));
  out.push_back(make_complete4());
  out.push_back(make_empty());
  for (std::uint64_t s = 0; s < 10; ++s) out.push_back(make_random_grid_subgraph(4, 5, s));
  for (const auto& inst : degenerate_instances()) out.push_back(inst.graph);
  return out;
}

}  // namespace

TEST_CASE("parse: single edge") {
  const auto g = parse_plane_graph("pg v1\nedges 1\nv 0 : 0\nv 1 : 1\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.endpoints(0) == std::pair{0, 1});
  const auto fs = faces(g);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].darts.size() == 2);
}

TEST_CASE("parse: two loops at one vertex are planar with three faces") {
  const auto g = parse_plane_graph("pg v1\nedges 2\nv 0 : 0 1 2 3\n");
  CHECK(faces(g).size() == 3);
  CHECK(is_planar(g));
}

TEST_CASE("parse: repeated dart") {
  CHECK_THROWS_AS(parse_plane_graph("pg v1\nedges 1\nv 0 : 0 0\n"), ParseError);
}

TEST_CASE("parse: malformed inputs") {
  CHECK_THROWS_AS(parse_plane_graph(""), ParseError);
  CHECK_THROWS_AS(parse_plane_graph("pg v2\nedges 0\n"), ParseError);
  CHECK_THROWS_AS(parse_plane_graph("pg v1\nedges x\n"), ParseError);
  CHECK_THROWS_AS(parse_plane_graph("pg v1\nedges 1\nv 0 : 0 2\nv 1 : 1\n"), ParseError);
  CHECK_THROWS_AS(parse_plane_graph("pg v1\nedges 1\nv 0 : 0\n"), ParseError);
  CHECK_THROWS_AS(parse_plane_graph("pg v1\nedges 1\nv 0 : 0\nv 2 : 1\n"), ParseError);
  CHECK_THROWS_AS(parse_plane_graph("pg v1\nedges 1\nv 0 : 0\nv 1 : 1\nouter 5\n"), ParseError);
  CHECK_THROWS_AS(parse_plane_graph("pg v1\nedges 1\nv 0 0\nv 1 : 1\n"), ParseError);
}

TEST_CASE("parse: comments, blank lines, isolated vertices and outer hint") {
  const auto g = parse_plane_graph("# a comment\npg v1\n\nedges 1\n# inner\nv 0 : 0\nv 1 :\nv 2 : 1\nouter 1\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.degree(1) == 0);
  CHECK(g.outer_face_hint() == 1);
  CHECK(parse_plane_graph(serialize_plane_graph(g)) == g);
}

TEST_CASE("empty graph") {
  const auto g = parse_plane_graph("pg v1\nedges 0\n");
  CHECK(g.vertex_count() == 0);
  CHECK(faces(g).empty());
  CHECK(is_planar(g));
}

TEST_CASE("faces of small graphs") {
  CHECK(faces(make_cycle(3)).size() == 2);
  CHECK(faces(make_cycle(4)).size() == 2);
  CHECK(faces(make_grid(3, 3)).size() == 5);
  CHECK(faces(make_theta(3)).size() == 3);
  CHECK(faces(make_complete4()).size() == 4);
  const auto g = make_grid(3, 3);
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 12);
}

TEST_CASE("face permutation follows the dart after the twin") {
  const auto g = make_cycle(3);
  for (Dart d = 0; d < g.dart_count(); ++d) CHECK(g.face_next(d) == g.rot_next(twin(d)));
  // Triangle faces have three darts each.
  for (const auto& f : faces(g)) CHECK(f.darts.size() == 3);
}

TEST_CASE("interleaved loops are not planar") {
  const PlaneGraph g(2, {{0, 2, 1, 3}});
  CHECK_FALSE(is_planar(g));
  try {
    check_planar(g);
    FAIL("expected NonPlanar");
  } catch (const NonPlanar& e) {
    CHECK(e.component() == 0);
    CHECK(e.characteristic() == 0);
  }
}

TEST_CASE("non-planar component is reported by index") {
  const auto g = disjoint_union(make_cycle(3), PlaneGraph(2, {{0, 2, 1, 3}}));
  try {
    check_planar(g);
    FAIL("expected NonPlanar");
  } catch (const NonPlanar& e) {
    CHECK(e.component() == 1);
  }
}

TEST_CASE("constructor rejects bad rotations") {
  CHECK_THROWS_AS(PlaneGraph(1, {{0}}), InvalidGraph);
  CHECK_THROWS_AS(PlaneGraph(1, {{0, 1, 1}}), InvalidGraph);
  CHECK_THROWS_AS(PlaneGraph(1, {{0, -1}}), InvalidGraph);
  CHECK_THROWS_AS(PlaneGraph(-1, {}), InvalidGraph);
}

TEST_CASE("generator errors") {
  CHECK_THROWS_AS(make_theta(1), InvalidGraph);
  CHECK_THROWS_AS(make_wheel(2), InvalidGraph);
  CHECK_THROWS_AS(make_cycle(0), InvalidGraph);
  CHECK_THROWS_AS(generate("nosuch", {}), InvalidGraph);
  CHECK_THROWS_AS(generate("cycle", {}), InvalidGraph);
  CHECK_THROWS_AS(generate("grid", {3}), InvalidGraph);
}

TEST_CASE("generator shapes") {
  const auto c4 = make_cycle(4);
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  const auto th = make_theta(3);
  CHECK(th.vertex_count() == 2);
  CHECK(th.edge_count() == 3);
  const auto w = make_wheel(5);
  CHECK(w.vertex_count() == 6);
  CHECK(w.edge_count() == 10);
  CHECK(w.degree(5) == 5);
  const auto k4 = make_complete4();
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  const auto one = make_grid(1, 1);
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);
  CHECK(generate("grid", {3, 4}) == make_grid(3, 4));
}

TEST_CASE("properties over all sample graphs") {
  for (const auto& g : sample_graphs()) {
    CAPTURE(serialize_plane_graph(g));
    // Round trip is dart-exact.
    CHECK(parse_plane_graph(serialize_plane_graph(g)) == g);
    CHECK(is_planar(g));

    int degree_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());

    // Face orbits partition the darts.
    std::vector<int> hits(g.dart_count(), 0);
    int face_dart_total = 0;
    for (const auto& f : faces(g)) {
      face_dart_total += static_cast<int>(f.darts.size());
      for (Dart d : f.darts) hits[d]++;
      CHECK(f.darts.front() == *std::min_element(f.darts.begin(), f.darts.end()));
    }
    CHECK(face_dart_total == g.dart_count());
    for (int h : hits) CHECK(h == 1);

    for (Dart d = 0; d < g.dart_count(); ++d) {
      CHECK(twin(d) != d);
      CHECK(twin(twin(d)) == d);
      CHECK(g.rot_prev(g.rot_next(d)) == d);
      CHECK(g.vertex_of(g.rot_next(d)) == g.vertex_of(d));
    }

    const auto m = mirror(g);
    CHECK(is_planar(m));
    CHECK(mirror(m) == g);
    CHECK(faces(m).size() == faces(g).size());
  }
}

TEST_CASE("disjoint union composes per part") {
  const auto parts = sample_graphs();
  for (std::size_t i = 0; i + 1 < parts.size(); i += 3) {
    const auto& a = parts[i];
    const auto& b = parts[i + 1];
    const auto u = disjoint_union(a, b);
    CHECK(u.vertex_count() == a.vertex_count() + b.vertex_count());
    CHECK(u.edge_count() == a.edge_count() + b.edge_count());
    CHECK(faces(u).size() == faces(a).size() + faces(b).size());
    for (int v = 0; v < a.vertex_count(); ++v) CHECK(u.degree(v) == a.degree(v));
    for (int v = 0; v < b.vertex_count(); ++v) CHECK(u.degree(a.vertex_count() + v) == b.degree(v));
    const auto eu = euler_per_component(u);
    const auto ea = euler_per_component(a);
    const auto eb = euler_per_component(b);
    CHECK(eu.size() == ea.size() + eb.size());
    for (const auto& c : eu) CHECK(c.characteristic() == 2);
    CHECK(is_planar(u));
  }
}

TEST_CASE("components and outer faces") {
  const auto g = disjoint_union(disjoint_union(make_cycle(3), make_path(1)), make_theta(3));
  int k = 0;
  const auto comp = vertex_components(g, &k);
  CHECK(k == 3);
  CHECK(comp[0] == 0);
  CHECK(comp[3] == 1);
  CHECK(comp[4] == 2);
  const auto fs = faces(g);
  const auto outer = outer_faces(g, fs);
  REQUIRE(outer.size() == 3);
  CHECK(outer[1] == -1);
  CHECK(outer[0] >= 0);
  CHECK(outer[2] >= 0);
}

TEST_CASE("outer face hint picks the face") {
  const auto g = parse_plane_graph("pg v1\nedges 3\nv 0 : 0 5\nv 1 : 2 1\nv 2 : 4 3\nouter 1\n");
  const auto fs = faces(g);
  const auto idx = face_index(g, fs);
  CHECK(outer_faces(g, fs)[0] == idx[1]);
}

TEST_CASE("random grid subgraphs are connected and reproducible") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto g = make_random_grid_subgraph(5, 4, s);
    CHECK(g == make_random_grid_subgraph(5, 4, s));
    int k = 0;
    vertex_components(g, &k);
    CHECK(k == 1);
    CHECK(g.edge_count() >= 19);
    CHECK(g.edge_count() <= 31);
  }
  CHECK_FALSE(make_random_grid_subgraph(5, 5, 1) == make_random_grid_subgraph(5, 5, 2));
}

TEST_CASE("split mix is reproducible and bounded") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.below(7);
    CHECK(x < 7);
    seen.insert(x);
  }
  CHECK(seen.size() == 7);
}
