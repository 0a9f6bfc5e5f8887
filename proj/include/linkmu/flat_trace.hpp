#pragma once

#include <string>
#include <vector>

#include "linkmu/medial.hpp"

namespace linkmu {

class InvalidSite : public Error {
 public:
  using Error::Error;
};

struct StrandPartition {
  /// Each strand lists its darts in walking order: entry, exit, entry, ...
  std::vector<std::vector<int>> strands;
  int free_circles = 0;
  int mu() const { return static_cast<int>(strands.size()) + free_circles; }
};

/// Straight-ahead walk: enter at d, leave at opposite(d), follow link().
StrandPartition components(const Flat& f);
int count_components(const Flat& f);

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3 };

const char* move_name(MoveKind k);
MoveKind move_from_name(const std::string& name);

/// A flat Reidemeister move addressed by region label and dart anchors.
///
///  R1Remove / R2Remove / R3: `region` is a bounded monogon / bigon / triangle
///    meeting no other crossing; `darts` may hold one anchor dart on it. Free
///    circles inside ride along into the region that absorbs it.
///  R1Add: `darts = {d}` puts a kink on the segment {d, link(d)} bulging into
///    region(d) when side == 0, into region(link(d)) when side == 1. With
///    free_circle >= 0 the kink goes on that circle instead, bulging into
///    side_b when side == 0 and side_a when side == 1.
///  R2Add: `darts = {x, y}` with region(x) == region(y) == region; a finger of
///    segment {x, link(x)} is pushed across segment {y, link(y)}.
struct MoveSpec {
  MoveKind kind = MoveKind::R1Remove;
  int region = -1;
  std::vector<int> darts;
  int side = 0;
  int free_circle = -1;

  bool operator==(const MoveSpec&) const = default;
};

/// Returns the flat after the move. The result never carries a medial origin.
/// Throws InvalidSite when the site does not fit the move.
Flat apply_move(const Flat& f, const MoveSpec& m);

/// Removal and R3 sites, sorted by region label.
struct MoveSites {
  std::vector<MoveSpec> monogons;
  std::vector<MoveSpec> bigons;
  std::vector<MoveSpec> triangles;
};
MoveSites find_sites(const Flat& f);

struct SimplifyResult {
  Flat flat;
  std::vector<MoveSpec> log;
  bool budget_exhausted = false;
  bool stuck = false;  // crossings remain and no search step helped
};

/// Greedy R1/R2 removal at the lowest region label; when neither applies, a
/// short R3 search looks for a sequence that exposes a monogon or bigon.
SimplifyResult simplify(const Flat& f, int move_budget);

std::string moves_to_json(const std::vector<MoveSpec>& moves, int indent = -1);
std::vector<MoveSpec> moves_from_json(const std::string& text);

}  // namespace linkmu
