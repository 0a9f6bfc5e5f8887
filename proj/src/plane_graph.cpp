#include "linkmu/plane_graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace linkmu {

NonPlanar::NonPlanar(int component, int characteristic)
    : Error("rotation system is not planar: component " + std::to_string(component) +
            " has Euler characteristic " + std::to_string(characteristic)),
      component_(component),
      characteristic_(characteristic) {}

PlaneGraph::PlaneGraph(int edge_count, std::vector<std::vector<Dart>> rotations,
                       std::optional<Dart> outer_face_hint)
    : edge_count_(edge_count), rotations_(std::move(rotations)), outer_hint_(outer_face_hint) {
  if (edge_count_ < 0) throw InvalidGraph("negative edge count");
  const int darts = 2 * edge_count_;
  dart_vertex_.assign(darts, -1);
  dart_pos_.assign(darts, -1);
  for (int v = 0; v < vertex_count(); ++v) {
    const auto& rot = rotations_[v];
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      const Dart d = rot[i];
      if (d < 0 || d >= darts) {
        throw InvalidGraph("dart " + std::to_string(d) + " out of range at vertex " +
                           std::to_string(v));
      }
      if (dart_vertex_[d] != -1) throw InvalidGraph("dart " + std::to_string(d) + " repeated");
      dart_vertex_[d] = v;
      dart_pos_[d] = i;
    }
  }
  for (Dart d = 0; d < darts; ++d) {
    if (dart_vertex_[d] == -1) {
      throw InvalidGraph("dart " + std::to_string(d) + " missing (twin of " +
                         std::to_string(twin(d)) + " dangles)");
    }
  }
  if (outer_hint_ && (*outer_hint_ < 0 || *outer_hint_ >= darts)) {
    throw InvalidGraph("outer dart " + std::to_string(*outer_hint_) + " out of range");
  }
}

Dart PlaneGraph::rot_next(Dart d) const {
  const auto& rot = rotations_[dart_vertex_[d]];
  const int i = dart_pos_[d] + 1;
  return rot[i == static_cast<int>(rot.size()) ? 0 : i];
}

Dart PlaneGraph::rot_prev(Dart d) const {
  const auto& rot = rotations_[dart_vertex_[d]];
  const int i = dart_pos_[d];
  return rot[i == 0 ? rot.size() - 1 : i - 1];
}

std::vector<Face> faces(const PlaneGraph& g) {
  std::vector<Face> out;
  std::vector<char> seen(g.dart_count(), 0);
  for (Dart start = 0; start < g.dart_count(); ++start) {
    if (seen[start]) continue;
    Face f;
    f.id = static_cast<int>(out.size());
    Dart d = start;
    do {
      seen[d] = 1;
      f.darts.push_back(d);
      d = g.face_next(d);
    } while (d != start);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<int> face_index(const PlaneGraph& g, const std::vector<Face>& fs) {
  std::vector<int> idx(g.dart_count(), -1);
  for (const auto& f : fs)
    for (Dart d : f.darts) idx[d] = f.id;
  return idx;
}

std::vector<int> vertex_components(const PlaneGraph& g, int* count) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (Dart d : g.rotation(v)) {
        const int w = g.vertex_of(twin(d));
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

std::vector<ComponentEuler> euler_per_component(const PlaneGraph& g) {
  int k = 0;
  const auto comp = vertex_components(g, &k);
  std::vector<ComponentEuler> out(k);
  for (int c = 0; c < k; ++c) out[c].component = c;
  for (int v = 0; v < g.vertex_count(); ++v) out[comp[v]].vertices++;
  for (int e = 0; e < g.edge_count(); ++e) out[comp[g.vertex_of(2 * e)]].edges++;
  for (const auto& f : faces(g)) out[comp[g.vertex_of(f.darts.front())]].faces++;
  for (auto& c : out)
    if (c.edges == 0) c.faces = 1;
  return out;
}

void check_planar(const PlaneGraph& g) {
  for (const auto& c : euler_per_component(g)) {
    if (c.characteristic() != 2) throw NonPlanar(c.component, c.characteristic());
  }
}

bool is_planar(const PlaneGraph& g) {
  const auto per = euler_per_component(g);
  return std::all_of(per.begin(), per.end(),
                     [](const ComponentEuler& c) { return c.characteristic() == 2; });
}

std::vector<int> outer_faces(const PlaneGraph& g, const std::vector<Face>& fs) {
  int k = 0;
  const auto comp = vertex_components(g, &k);
  const auto fidx = face_index(g, fs);
  std::vector<int> outer(k, -1);
  // Faces are ordered by smallest dart, so the first face seen per component
  // holds that component's smallest dart.
  for (const auto& f : fs) {
    const int c = comp[g.vertex_of(f.darts.front())];
    if (outer[c] == -1) outer[c] = f.id;
  }
  if (auto h = g.outer_face_hint()) outer[comp[g.vertex_of(*h)]] = fidx[*h];
  return outer;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                     std::string(tok) + "'");
  }
  return value;
}

}  // namespace

PlaneGraph parse_plane_graph(std::string_view text) {
  std::vector<std::vector<std::string_view>> lines;
  std::vector<int> line_numbers;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    lines.push_back(std::move(toks));
    line_numbers.push_back(line_no);
  }
  if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "pg" || lines[0][1] != "v1") {
    throw ParseError("missing 'pg v1' header");
  }
  if (lines.size() < 2 || lines[1].size() != 2 || lines[1][0] != "edges") {
    throw ParseError("missing 'edges <m>' line");
  }
  const int m = to_int(lines[1][1], line_numbers[1]);
  if (m < 0) throw ParseError("negative edge count");

  std::vector<std::vector<Dart>> rotations;
  std::optional<Dart> outer;
  for (size_t i = 2; i < lines.size(); ++i) {
    const auto& toks = lines[i];
    const int ln = line_numbers[i];
    if (toks[0] == "v") {
      if (outer) throw ParseError("line " + std::to_string(ln) + ": vertex after 'outer'");
      if (toks.size() < 3 || toks[2] != ":") {
        throw ParseError("line " + std::to_string(ln) + ": expected 'v <id> : <darts>'");
      }
      const int id = to_int(toks[1], ln);
      if (id != static_cast<int>(rotations.size())) {
        throw ParseError("line " + std::to_string(ln) + ": vertex ids must be consecutive from 0");
      }
      std::vector<Dart> rot;
      for (size_t t = 3; t < toks.size(); ++t) rot.push_back(to_int(toks[t], ln));
      rotations.push_back(std::move(rot));
    } else if (toks[0] == "outer") {
      if (toks.size() != 2 || outer) {
        throw ParseError("line " + std::to_string(ln) + ": malformed 'outer' line");
      }
      outer = to_int(toks[1], ln);
    } else {
      throw ParseError("line " + std::to_string(ln) + ": unexpected '" + std::string(toks[0]) +
                       "'");
    }
  }
  try {
    return PlaneGraph(m, std::move(rotations), outer);
  } catch (const InvalidGraph& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_plane_graph(const PlaneGraph& g) {
  std::ostringstream os;
  os << "pg v1\n";
  os << "edges " << g.edge_count() << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "v " << v << " :";
    for (Dart d : g.rotation(v)) os << ' ' << d;
    os << "\n";
  }
  if (auto h = g.outer_face_hint()) os << "outer " << *h << "\n";
  return os.str();
}

PlaneGraph disjoint_union(const PlaneGraph& a, const PlaneGraph& b) {
  auto rots = a.rotations();
  const int shift = a.dart_count();
  for (const auto& r : b.rotations()) {
    std::vector<Dart> shifted(r.size());
    std::transform(r.begin(), r.end(), shifted.begin(), [shift](Dart d) { return d + shift; });
    rots.push_back(std::move(shifted));
  }
  std::optional<Dart> hint = a.outer_face_hint();
  if (!hint && b.outer_face_hint()) hint = *b.outer_face_hint() + shift;
  return PlaneGraph(a.edge_count() + b.edge_count(), std::move(rots), hint);
}

PlaneGraph mirror(const PlaneGraph& g) {
  auto rots = g.rotations();
  for (auto& r : rots) std::reverse(r.begin(), r.end());
  return PlaneGraph(g.edge_count(), std::move(rots), g.outer_face_hint());
}

}  // namespace linkmu
