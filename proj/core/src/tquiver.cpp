#include "annulus/tquiver.hpp"

#include "annulus/errors.hpp"
#include "annulus/faces.hpp"

#include <algorithm>

namespace annulus {

Quiver quiver_of(const Triangulation& t) {
  Quiver q;
  for (const auto& a : t.arcs) q.add_vertex(a.id);
  for (const Face& f : faces(t))
    for (int r = 0; r < 3; ++r) {
      const int x = f.sides[r], y = f.sides[(r + 1) % 3];
      if (x >= 0 && y >= 0) q.add_arrow(t.arcs[x].id, t.arcs[y].id);
    }
  return t.finite() ? cancel_two_cycles(q) : q;
}

std::string left_copy(const std::string& id) { return id + "_L"; }
std::string right_copy(const std::string& id) { return id + "_R"; }

Quiver framed_quiver(const Triangulation& t, const std::string& framing_id) {
  const int fi = t.index_of(framing_id);
  if (fi < 0) raise("UnknownArc", "no arc '" + framing_id + "'");
  if (!t.arcs[fi].arc.is_asymptotic()) raise("NotStrictlyAsymptotic", framing_id + " is not strictly asymptotic");
  const FramePolygon poly = frame_polygon(t, fi);
  Quiver q;
  for (int idx : boundary_part(t, poly.boundary)) {
    if (idx == fi) {
      q.add_vertex(left_copy(framing_id));
      q.add_vertex(right_copy(framing_id));
    } else {
      q.add_vertex(t.arcs[idx].id);
    }
  }
  q.framing_pairs.push_back({left_copy(framing_id), right_copy(framing_id)});
  auto name = [&](const PolyEdge& e) {
    return e.copy == 1 ? left_copy(t.arcs[e.arc].id) : e.copy == 2 ? right_copy(t.arcs[e.arc].id) : t.arcs[e.arc].id;
  };
  for (const auto& tri : poly.triangles)
    for (int r = 0; r < 3; ++r) {
      const PolyEdge& x = poly.edges[tri.edges[r]];
      const PolyEdge& y = poly.edges[tri.edges[(r + 1) % 3]];
      if (x.arc >= 0 && y.arc >= 0) q.add_arrow(name(x), name(y));
    }
  return q;
}

namespace {

std::string glued_name(const std::pair<Vertex, Vertex>& pair) {
  const auto& [l, r] = pair;
  if (l.size() > 2 && r.size() > 2 && l.substr(l.size() - 2) == "_L" && r.substr(r.size() - 2) == "_R" &&
      l.substr(0, l.size() - 2) == r.substr(0, r.size() - 2))
    return l.substr(0, l.size() - 2);
  return l;
}

}  // namespace

Quiver switch_frame(const Quiver& q, const Vertex& j) {
  if (!q.has_vertex(j)) raise("UnknownVertex", "no vertex '" + j + "'");
  if (q.framing_pairs.size() != 1) raise("NoOtherStrictAsymptoticArc", "quiver must carry exactly one framing pair");
  if (q.is_framing(j)) raise("NoOtherStrictAsymptoticArc", "'" + j + "' is already the framing vertex");
  const auto old = q.framing_pairs.front();
  Quiver rest = q;
  rest.remove_vertex(j);
  int comp_l = -1, comp_r = -1;
  const auto comps = weak_components(rest);
  std::map<Vertex, int> comp_of;
  for (int c = 0; c < int(comps.size()); ++c)
    for (const auto& v : comps[c]) {
      comp_of[v] = c;
      if (v == old.first) comp_l = c;
      if (v == old.second) comp_r = c;
    }
  if (comp_l < 0 || comp_r < 0 || comp_l == comp_r)
    raise("NoOtherStrictAsymptoticArc", "'" + j + "' does not separate the frame; we cannot switch frames");
  const std::string g = glued_name(old);
  auto glue = [&](const Vertex& v) { return v == old.first || v == old.second ? g : v; };
  Quiver r;
  for (const auto& v : q.vertices) {
    if (v == old.second) continue;
    if (v == j) {
      r.add_vertex(left_copy(j));
      r.add_vertex(right_copy(j));
    } else {
      r.add_vertex(glue(v));
    }
  }
  auto split = [&](const Vertex& other) {
    const int c = comp_of.at(other);
    if (c == comp_l) return right_copy(j);
    if (c == comp_r) return left_copy(j);
    raise("NoOtherStrictAsymptoticArc", "arrow from '" + j + "' leaves the frame");
  };
  for (const auto& [k, m] : q.arrows) {
    if (k.first == j && k.second == j) raise("NotMutable", "loop at new framing vertex");
    if (k.first == j) r.add_arrow(split(k.second), glue(k.second), m);
    else if (k.second == j) r.add_arrow(glue(k.first), split(k.first), m);
    else r.add_arrow(glue(k.first), glue(k.second), m);
  }
  for (const auto& v : q.frozen) r.frozen.insert(glue(v));
  r.framing_pairs.push_back({left_copy(j), right_copy(j)});
  return r;
}

}  // namespace annulus
