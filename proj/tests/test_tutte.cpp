#include "doctest.h"
#include "linkmu/flat_trace.hpp"
#include "linkmu/generators.hpp"
#include "linkmu/report.hpp"
#include "linkmu/tutte.hpp"
#include "oracles.hpp"

using namespace linkmu;

namespace {

std::vector<Instance> small_sweep() {
  auto out = expand_families("cycles:1..12,paths:1..10,grids:1x1..3x4,theta:2..6,wheel:3..7,complete4,degenerates");
  for (auto& inst : random_instances(30, 23)) out.push_back(std::move(inst));
  for (int k = 1; k <= 4; ++k) out.push_back({"flat bouquet", make_loop_bouquet_flat(k)});
  return out;
}

}  // namespace

TEST_CASE("T(-1,-1) examples") {
  CHECK(tutte_eval_minus1(make_cycle(3)) == -1);
  CHECK(tutte_eval_minus1(make_cycle(4)) == -2);
  CHECK(tutte_eval_minus1(make_cycle(1)) == -1);
  CHECK(tutte_eval_minus1(make_empty()) == 1);
  CHECK(tutte_eval_minus1(make_path(1)) == 1);
  CHECK(std::abs(tutte_eval_minus1(make_complete4())) == 4);
}

TEST_CASE("mu from T(-1,-1)") {
  CHECK(mu_tutte(make_cycle(3)) == 1);
  CHECK(mu_tutte(make_cycle(4)) == 2);
  CHECK(mu_tutte(make_complete4()) == 3);
  CHECK(mu_tutte(make_empty()) == 0);
  CHECK(mu_tutte(make_path(1)) == 1);
  CHECK(mu_tutte(disjoint_union(make_cycle(4), make_path(1))) == 3);
}

TEST_CASE("edge budget") {
  CHECK_THROWS_AS(tutte_eval_minus1(make_grid(4, 4)), EdgeBudgetExceeded);
  CHECK_THROWS_AS(mu_tutte(make_grid(4, 4)), EdgeBudgetExceeded);
  CHECK_THROWS_AS(mu_tutte(make_cycle(5), 4), EdgeBudgetExceeded);
  CHECK(mu_tutte(make_grid(4, 4), 24) == count_components(medial(make_grid(4, 4))));
}

TEST_CASE("deletion-contraction matches the subset expansion") {
  for (const auto& inst : small_sweep()) {
    if (inst.graph.edge_count() > 14) continue;
    CAPTURE(inst.name);
    CHECK(tutte_eval_minus1(inst.graph) == oracle::tutte_subset_expansion(inst.graph));
  }
}

TEST_CASE("edge order does not change the value") {
  SplitMix64 rng(4);
  for (const auto& inst : small_sweep()) {
    if (inst.graph.edge_count() > 12) continue;
    auto m = abstract_multigraph(inst.graph);
    const auto expected = tutte_eval_minus1(m);
    for (std::size_t i = m.edges.size(); i > 1; --i) std::swap(m.edges[i - 1], m.edges[rng.below(i)]);
    CHECK(tutte_eval_minus1(m) == expected);
  }
}

TEST_CASE("magnitude and sign against tracing") {
  for (const auto& inst : small_sweep()) {
    const auto& g = inst.graph;
    if (g.edge_count() > 14) continue;
    CAPTURE(inst.name);
    const int mu = count_components(medial(g));
    CHECK(mu_tutte(g) == mu);
    int k = 0;
    vertex_components(g, &k);
    if (k != 1) continue;
    const std::int64_t t = tutte_eval_minus1(g);
    CHECK(std::abs(t) == (std::int64_t{1} << (mu - 1)));
    const bool negative = (g.edge_count() + mu - 1) % 2 == 1;
    CHECK((t < 0) == negative);
  }
}

TEST_CASE("value multiplies over components") {
  const auto a = make_cycle(4), b = make_complete4();
  CHECK(tutte_eval_minus1(disjoint_union(a, b)) == tutte_eval_minus1(a) * tutte_eval_minus1(b));
  const auto parts = tutte_per_component(disjoint_union(a, b));
  CHECK(parts == std::vector<std::int64_t>{tutte_eval_minus1(a), tutte_eval_minus1(b)});
}
