#include "linkmu/flat_trace.hpp"

#include <algorithm>
#include <optional>

#include "json.hpp"

namespace linkmu {

StrandPartition components(const Flat& f) {
  StrandPartition out;
  out.free_circles = f.free_circle_count();
  std::vector<char> seen(f.dart_count(), 0);
  for (int start = 0; start < f.dart_count(); ++start) {
    if (seen[start]) continue;
    std::vector<int> strand;
    int entry = start;
    do {
      const int exit = Flat::opposite(entry);
      seen[entry] = seen[exit] = 1;
      strand.push_back(entry);
      strand.push_back(exit);
      entry = f.link(exit);
    } while (entry != start);
    out.strands.push_back(std::move(strand));
  }
  return out;
}

int count_components(const Flat& f) { return components(f).mu(); }

const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1Add: return "R1_add";
    case MoveKind::R1Remove: return "R1_remove";
    case MoveKind::R2Add: return "R2_add";
    case MoveKind::R2Remove: return "R2_remove";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

MoveKind move_from_name(const std::string& name) {
  for (auto k : {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove,
                 MoveKind::R3}) {
    if (name == move_name(k)) return k;
  }
  throw InvalidSite("unknown move '" + name + "'");
}

namespace {

// Mutable copy of a flat used while a move rewires it. Crossings removed by
// a move are only marked dead; finish() compacts crossings and labels.
struct Editor {
  std::vector<int> link;
  std::vector<int> region;
  std::vector<FreeCircle> circles;
  std::vector<char> dead;
  int region_count;

  explicit Editor(const Flat& f)
      : link(f.links()),
        region(f.regions()),
        circles(f.free_circles()),
        dead(f.crossing_count(), 0),
        region_count(f.region_count()) {}

  int add_crossing() {
    const int c = static_cast<int>(dead.size());
    link.resize(link.size() + 4, -1);
    region.resize(region.size() + 4, -1);
    dead.push_back(0);
    return c;
  }
  int new_region() { return region_count++; }
  void connect(int a, int b) {
    link[a] = b;
    link[b] = a;
  }
  std::vector<int> orbit(int d) const {
    std::vector<int> out;
    int x = d;
    do {
      out.push_back(x);
      x = Flat::rot_next(link[x]);
    } while (x != d);
    return out;
  }
  void relabel(int from, int to) {
    std::replace(region.begin(), region.end(), from, to);
    for (auto& c : circles) {
      if (c.side_a == from) c.side_a = to;
      if (c.side_b == from) c.side_b = to;
    }
  }

  // Deletes the crossings, carrying each strand straight through. A strand
  // left with no crossings becomes a free circle whose sides are read off one
  // of its segments that does not border `retired`.
  void splice_out(const std::vector<int>& crossings, int retired) {
    for (int c : crossings) dead[c] = 1;
    auto is_dead = [&](int d) { return dead[Flat::crossing_of(d)] != 0; };
    std::vector<char> visited(link.size(), 0);
    std::vector<int> removed;
    for (int c : crossings)
      for (int k = 0; k < 4; ++k) removed.push_back(4 * c + k);

    for (int d : removed) {
      if (visited[d] || is_dead(link[d])) continue;
      const int outside = link[d];
      int cur = d;
      while (true) {
        visited[cur] = 1;
        const int exit = Flat::opposite(cur);
        visited[exit] = 1;
        const int next = link[exit];
        if (!is_dead(next)) {
          connect(outside, next);
          break;
        }
        cur = next;
      }
    }
    for (int d : removed) {
      if (visited[d]) continue;
      std::optional<FreeCircle> sides;
      int cur = d;
      do {
        visited[cur] = 1;
        const int exit = Flat::opposite(cur);
        visited[exit] = 1;
        const int next = link[exit];
        if (!sides && region[exit] != retired && region[next] != retired) {
          sides = FreeCircle{region[exit], region[next]};
        }
        cur = next;
      } while (cur != d);
      if (!sides) throw InvalidFlat("closed strand borders only the removed region");
      circles.push_back(*sides);
    }
  }

  Flat finish() const {
    const int total = static_cast<int>(dead.size());
    std::vector<int> new_index(total, -1);
    int alive = 0;
    for (int c = 0; c < total; ++c)
      if (!dead[c]) new_index[c] = alive++;
    auto remap = [&](int d) { return 4 * new_index[Flat::crossing_of(d)] + (d & 3); };

    std::vector<int> used(region_count, 0);
    used[Flat::kUnbounded] = 1;
    for (int c = 0; c < total; ++c) {
      if (dead[c]) continue;
      for (int k = 0; k < 4; ++k) used[region[4 * c + k]] = 1;
    }
    for (const auto& fc : circles) used[fc.side_a] = used[fc.side_b] = 1;
    std::vector<int> label(region_count, -1);
    int labels = 0;
    for (int r = 0; r < region_count; ++r)
      if (used[r]) label[r] = labels++;

    std::vector<int> nl(4 * alive), nr(4 * alive);
    for (int c = 0; c < total; ++c) {
      if (dead[c]) continue;
      for (int k = 0; k < 4; ++k) {
        const int d = 4 * c + k;
        if (link[d] < 0 || dead[Flat::crossing_of(link[d])]) {
          throw InvalidFlat("move left a dangling strand end");
        }
        nl[remap(d)] = remap(link[d]);
        nr[remap(d)] = label[region[d]];
      }
    }
    std::vector<FreeCircle> nc;
    for (const auto& fc : circles) nc.push_back({label[fc.side_a], label[fc.side_b]});
    return Flat(std::move(nl), std::move(nr), labels, std::move(nc));
  }
};

std::vector<int> orbit_of(const Flat& f, int d) {
  std::vector<int> out;
  int x = d;
  do {
    out.push_back(x);
    x = f.face_next(x);
  } while (x != d);
  return out;
}

// Boundary orbit of a bounded region, of exactly `length` corners at distinct
// crossings. Free circles may sit inside; any other crossing on the region
// disqualifies it.
std::vector<int> disk_site(const Flat& f, const MoveSpec& m, int length) {
  const std::string what = std::string(move_name(m.kind)) + " at region " + std::to_string(m.region);
  if (m.region <= Flat::kUnbounded || m.region >= f.region_count()) {
    throw InvalidSite(what + ": needs a bounded region");
  }
  int anchor = -1;
  if (!m.darts.empty()) {
    anchor = m.darts.front();
    if (anchor < 0 || anchor >= f.dart_count() || f.region(anchor) != m.region) {
      throw InvalidSite(what + ": anchor dart is not on the region");
    }
  } else {
    const auto& r = f.regions();
    const auto it = std::find(r.begin(), r.end(), m.region);
    if (it == r.end()) throw InvalidSite(what + ": region has no corners");
    anchor = static_cast<int>(it - r.begin());
  }
  auto orbit = orbit_of(f, anchor);
  const auto corners = std::count(f.regions().begin(), f.regions().end(), m.region);
  if (corners != static_cast<long>(orbit.size())) {
    throw InvalidSite(what + ": region meets other crossings besides its boundary");
  }
  if (static_cast<int>(orbit.size()) != length) {
    throw InvalidSite(what + ": region has " + std::to_string(orbit.size()) + " corners, expected " +
                      std::to_string(length));
  }
  std::vector<int> cs;
  for (int d : orbit) cs.push_back(Flat::crossing_of(d));
  std::sort(cs.begin(), cs.end());
  if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) {
    throw InvalidSite(what + ": corners are not at distinct crossings");
  }
  return orbit;
}

Flat r1_remove(const Flat& f, const MoveSpec& m) {
  const auto orbit = disk_site(f, m, 1);
  // The lobe merges with the region across its loop, taking any circles along.
  const int across = f.region(Flat::rot_next(orbit[0]));
  Editor ed(f);
  ed.splice_out({Flat::crossing_of(orbit[0])}, m.region);
  ed.relabel(m.region, across);
  return ed.finish();
}

Flat r2_remove(const Flat& f, const MoveSpec& m) {
  const auto orbit = disk_site(f, m, 2);
  const int c1 = Flat::crossing_of(orbit[0]);
  const int c2 = Flat::crossing_of(orbit[1]);
  // Regions beyond each end of the bigon merge once it is gone.
  const int p = f.region(Flat::opposite(orbit[0]));
  const int q = f.region(Flat::opposite(orbit[1]));
  Editor ed(f);
  ed.splice_out({c1, c2}, m.region);
  if (p != q) ed.relabel(std::max(p, q), std::min(p, q));
  ed.relabel(m.region, std::min(p, q));
  return ed.finish();
}

Flat r3(const Flat& f, const MoveSpec& m) {
  const auto t = disk_site(f, m, 3);
  // Local model: strands A, B, C with crossings P = A x C (at t[0]),
  // Q = A x B (at t[1]) and O = B x C (at t[2]). The six strand ends leaving
  // the triangle's neighbourhood keep their partners; the three crossings are
  // rebuilt on the far side of the triangle.
  const int old_role[6] = {
      Flat::rot_next(t[1]), Flat::opposite(t[1]), Flat::rot_next(t[0]),
      Flat::opposite(t[0]), Flat::rot_next(t[2]), Flat::opposite(t[2]),
  };
  const int u1 = f.region(Flat::opposite(t[1]));
  const int u2 = f.region(Flat::rot_next(t[0]));
  const int u3 = f.region(Flat::opposite(t[0]));
  const int u4 = f.region(Flat::rot_prev(t[0]));
  const int u5 = f.region(Flat::opposite(t[2]));
  const int u6 = f.region(Flat::rot_next(t[1]));

  const int bp = 4 * Flat::crossing_of(t[0]);
  const int bq = 4 * Flat::crossing_of(t[1]);
  const int bo = 4 * Flat::crossing_of(t[2]);
  const int new_role[6] = {bp + 0, bo + 0, bo + 1, bq + 2, bq + 3, bp + 3};

  Editor ed(f);
  int outside[6];
  for (int r = 0; r < 6; ++r) outside[r] = f.link(old_role[r]);
  for (int r = 0; r < 6; ++r) {
    const int* hit = std::find(old_role, old_role + 6, outside[r]);
    if (hit != old_role + 6) {
      ed.connect(new_role[r], new_role[hit - old_role]);
    } else {
      ed.connect(new_role[r], outside[r]);
    }
  }
  ed.connect(bp + 1, bo + 3);
  ed.connect(bp + 2, bq + 0);
  ed.connect(bq + 1, bo + 2);

  const int tri = ed.new_region();
  const int p_regions[4] = {u6, u1, tri, u5};
  const int q_regions[4] = {u5, tri, u3, u4};
  const int o_regions[4] = {u1, u2, u3, tri};
  for (int k = 0; k < 4; ++k) {
    ed.region[bp + k] = p_regions[k];
    ed.region[bq + k] = q_regions[k];
    ed.region[bo + k] = o_regions[k];
  }
  ed.relabel(m.region, tri);
  return ed.finish();
}

Flat r1_add(const Flat& f, const MoveSpec& m) {
  if (m.side != 0 && m.side != 1) throw InvalidSite("R1_add: side must be 0 or 1");
  Editor ed(f);
  const int c = ed.add_crossing();
  const int n0 = 4 * c, n1 = n0 + 1, n2 = n0 + 2, n3 = n0 + 3;
  const int kink = ed.new_region();
  if (m.free_circle >= 0) {
    if (m.free_circle >= f.free_circle_count()) throw InvalidSite("R1_add: no such free circle");
    const auto fc = f.free_circles()[m.free_circle];
    const int inside = m.side == 0 ? fc.side_a : fc.side_b;
    const int outside = m.side == 0 ? fc.side_b : fc.side_a;
    ed.connect(n1, n2);
    ed.connect(n3, n0);
    ed.region[n0] = inside;
    ed.region[n1] = outside;
    ed.region[n2] = kink;
    ed.region[n3] = outside;
    ed.circles.erase(ed.circles.begin() + m.free_circle);
    return ed.finish();
  }
  if (m.darts.size() != 1 || m.darts[0] < 0 || m.darts[0] >= f.dart_count()) {
    throw InvalidSite("R1_add: needs one dart naming a segment");
  }
  const int x = m.darts[0];
  const int y = f.link(x);
  const int rx = f.region(x), ry = f.region(y);
  ed.connect(x, n0);
  ed.region[n0] = ry;
  ed.region[n1] = rx;
  if (m.side == 0) {
    ed.connect(n2, n1);
    ed.connect(n3, y);
    ed.region[n2] = kink;
    ed.region[n3] = rx;
  } else {
    ed.connect(n2, n3);
    ed.connect(n1, y);
    ed.region[n2] = ry;
    ed.region[n3] = kink;
  }
  return ed.finish();
}

Flat r2_add(const Flat& f, const MoveSpec& m) {
  if (m.darts.size() != 2) throw InvalidSite("R2_add: needs two darts");
  const int x = m.darts[0], y = m.darts[1];
  if (x < 0 || y < 0 || x >= f.dart_count() || y >= f.dart_count()) {
    throw InvalidSite("R2_add: dart out of range");
  }
  const int r = f.region(x);
  if (f.region(y) != r || (m.region >= 0 && m.region != r)) {
    throw InvalidSite("R2_add: both segments must border the named region");
  }
  if (y == x || y == f.link(x)) throw InvalidSite("R2_add: needs two distinct segments");
  const int xl = f.link(x), yl = f.link(y);
  const int t1 = f.region(xl), t2 = f.region(yl);

  Editor ed(f);
  const int a = 4 * ed.add_crossing();
  const int b = 4 * ed.add_crossing();
  const int bigon = ed.new_region();
  // a: crossing where the finger goes in, b: where it comes back.
  ed.connect(x, a + 1);
  ed.connect(a + 3, b + 3);
  ed.connect(b + 1, xl);
  ed.connect(y, b + 0);
  ed.connect(b + 2, a + 0);
  ed.connect(a + 2, yl);
  const int a_regions[4] = {bigon, t1, r, t2};
  const int b_regions[4] = {t2, r, t1, bigon};
  for (int k = 0; k < 4; ++k) {
    ed.region[a + k] = a_regions[k];
    ed.region[b + k] = b_regions[k];
  }
  // If both segments sat on one boundary orbit of r, the finger cuts r in two.
  const auto east = ed.orbit(b + 1);
  if (std::find(east.begin(), east.end(), a + 2) == east.end()) {
    const int split = ed.new_region();
    for (int d : east) ed.region[d] = split;
  }
  return ed.finish();
}

}  // namespace

Flat apply_move(const Flat& f, const MoveSpec& m) {
  switch (m.kind) {
    case MoveKind::R1Remove: return r1_remove(f, m);
    case MoveKind::R2Remove: return r2_remove(f, m);
    case MoveKind::R3: return r3(f, m);
    case MoveKind::R1Add: return r1_add(f, m);
    case MoveKind::R2Add: return r2_add(f, m);
  }
  throw InvalidSite("unknown move");
}

MoveSites find_sites(const Flat& f) {
  MoveSites s;
  std::vector<int> orbit_count(f.region_count(), 0);
  const auto orbits = flat_face_orbits(f);
  for (const auto& o : orbits) orbit_count[f.region(o.front())]++;
  for (const auto& o : orbits) {
    const int r = f.region(o.front());
    if (r == Flat::kUnbounded || orbit_count[r] != 1 || o.size() > 3) continue;
    std::vector<int> cs;
    for (int d : o) cs.push_back(Flat::crossing_of(d));
    std::sort(cs.begin(), cs.end());
    if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) continue;
    if (o.size() == 1) s.monogons.push_back({MoveKind::R1Remove, r, {o.front()}});
    if (o.size() == 2) s.bigons.push_back({MoveKind::R2Remove, r, {o.front()}});
    if (o.size() == 3) s.triangles.push_back({MoveKind::R3, r, {o.front()}});
  }
  auto by_region = [](const MoveSpec& a, const MoveSpec& b) { return a.region < b.region; };
  std::sort(s.monogons.begin(), s.monogons.end(), by_region);
  std::sort(s.bigons.begin(), s.bigons.end(), by_region);
  std::sort(s.triangles.begin(), s.triangles.end(), by_region);
  return s;
}

namespace {

bool reducible(const MoveSites& s) { return !s.monogons.empty() || !s.bigons.empty(); }

// Depth-limited search over R3 sequences for one that exposes a monogon or
// bigon; deterministic in site order.
std::optional<std::vector<MoveSpec>> r3_search(const Flat& f, int depth) {
  const auto sites = find_sites(f);
  std::vector<std::pair<MoveSpec, Flat>> next;
  for (const auto& t : sites.triangles) {
    Flat g = apply_move(f, t);
    if (reducible(find_sites(g))) return std::vector<MoveSpec>{t};
    next.emplace_back(t, std::move(g));
  }
  if (depth <= 1) return std::nullopt;
  for (const auto& [t, g] : next) {
    if (auto rest = r3_search(g, depth - 1)) {
      rest->insert(rest->begin(), t);
      return rest;
    }
  }
  return std::nullopt;
}

constexpr int kMaxR3Depth = 3;

}  // namespace

SimplifyResult simplify(const Flat& f, int move_budget) {
  SimplifyResult res{f, {}, false, false};
  auto apply = [&](const MoveSpec& m) {
    res.flat = apply_move(res.flat, m);
    res.log.push_back(m);
  };
  while (res.flat.crossing_count() > 0) {
    if (static_cast<int>(res.log.size()) >= move_budget) {
      res.budget_exhausted = true;
      break;
    }
    const auto sites = find_sites(res.flat);
    if (!sites.monogons.empty()) {
      apply(sites.monogons.front());
      continue;
    }
    if (!sites.bigons.empty()) {
      apply(sites.bigons.front());
      continue;
    }
    std::optional<std::vector<MoveSpec>> plan;
    for (int depth = 1; depth <= kMaxR3Depth && !plan; ++depth) plan = r3_search(res.flat, depth);
    if (!plan) {
      res.stuck = true;
      break;
    }
    for (const auto& m : *plan) {
      if (static_cast<int>(res.log.size()) >= move_budget) break;
      apply(m);
    }
  }
  return res;
}

std::string moves_to_json(const std::vector<MoveSpec>& moves, int indent) {
  using nlohmann::json;
  json arr = json::array();
  for (const auto& m : moves) {
    json j = {{"move", move_name(m.kind)}, {"region", m.region}, {"darts", m.darts}};
    if (m.kind == MoveKind::R1Add) {
      j["side"] = m.side;
      if (m.free_circle >= 0) j["free_circle"] = m.free_circle;
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(indent);
}

std::vector<MoveSpec> moves_from_json(const std::string& text) {
  using nlohmann::json;
  std::vector<MoveSpec> out;
  const auto arr = json::parse(text);
  for (const auto& j : arr) {
    MoveSpec m;
    m.kind = move_from_name(j.at("move").get<std::string>());
    m.region = j.value("region", -1);
    m.darts = j.value("darts", std::vector<int>{});
    m.side = j.value("side", 0);
    m.free_circle = j.value("free_circle", -1);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace linkmu
