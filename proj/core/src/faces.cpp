#include "annulus/faces.hpp"

#include "annulus/errors.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace annulus {

std::vector<End> ends_at(const Triangulation& t, const MarkedPoint& u) {
  const auto& s = t.shape;
  const Lift n = s.period(u.boundary);
  std::vector<End> ends;
  ends.push_back({0, 0, -1, {u.boundary, u.lift + 1}});
  ends.push_back({6, 0, -1, {u.boundary, u.lift - 1}});
  for (int idx = 0; idx < int(t.arcs.size()); ++idx) {
    const Arc& x = t.arcs[idx].arc;
    if (x.is_bridging()) {
      const Lift d = displacement(x, s);
      if (u.boundary == Boundary::Outer && floor_mod(u.lift - x.a, s.p) == 0) {
        const Lift k = (u.lift - x.a) / s.p;
        ends.push_back({3, -d, idx, {Boundary::Inner, x.b - k * s.q}});
      } else if (u.boundary == Boundary::Inner && floor_mod(x.b - u.lift, s.q) == 0) {
        const Lift k = (x.b - u.lift) / s.q;
        ends.push_back({3, -d, idx, {Boundary::Outer, x.a + k * s.p}});
      }
    } else if (x.is_peripheral() && x.boundary == u.boundary) {
      const Lift len = x.length();
      if (floor_mod(u.lift - x.a, n) == 0) ends.push_back({1, len, idx, {u.boundary, u.lift + len}});
      if (floor_mod(u.lift - x.b, n) == 0) ends.push_back({5, -len, idx, {u.boundary, u.lift - len}});
    }
  }
  std::sort(ends.begin(), ends.end(), [](const End& a, const End& b) {
    return std::tie(a.category, a.key) < std::tie(b.category, b.key);
  });
  return ends;
}

namespace {

using Triple = std::array<MarkedPoint, 3>;

MarkedPoint shift(const MarkedPoint& m, Lift k, const AnnulusShape& s) {
  return m.boundary == Boundary::Outer ? MarkedPoint{m.boundary, m.lift + k * s.p}
                                       : MarkedPoint{m.boundary, m.lift - k * s.q};
}

Lift shift_to_fundamental(const MarkedPoint& m, const AnnulusShape& s) {
  return m.boundary == Boundary::Outer ? -floor_div(m.lift, s.p) : floor_div(m.lift, s.q);
}

std::pair<Triple, Lift> normalize(const Triple& tri, const AnnulusShape& s) {
  std::optional<std::pair<Triple, Lift>> best;
  for (const auto& v : tri) {
    const Lift k = shift_to_fundamental(v, s);
    Triple c{shift(tri[0], k, s), shift(tri[1], k, s), shift(tri[2], k, s)};
    std::sort(c.begin(), c.end());
    if (!best || c < best->first) best = {c, k};
  }
  return *best;
}

using Side = std::pair<MarkedPoint, MarkedPoint>;

Side side(MarkedPoint a, MarkedPoint b) { return a < b ? Side{a, b} : Side{b, a}; }

std::vector<Face> finite_faces(const Triangulation& t) {
  const auto& s = t.shape;
  struct Acc {
    std::map<Side, Side> next;
    std::map<Side, int> arc;
  };
  std::map<Triple, Acc> acc;
  std::vector<Triple> order;
  auto visit = [&](const MarkedPoint& u) {
    const auto ends = ends_at(t, u);
    for (size_t j = 0; j + 1 < ends.size(); ++j) {
      const End& e1 = ends[j];
      const End& e2 = ends[j + 1];
      auto [key, k] = normalize({u, e1.far, e2.far}, s);
      const MarkedPoint u0 = shift(u, k, s), f1 = shift(e1.far, k, s), f2 = shift(e2.far, k, s);
      auto [it, fresh] = acc.try_emplace(key);
      if (fresh) order.push_back(key);
      const Side s1 = side(u0, f1), s2 = side(u0, f2);
      it->second.next[s2] = s1;
      it->second.arc[s1] = e1.arc;
      it->second.arc[s2] = e2.arc;
    }
  };
  for (Lift o = 0; o < s.p; ++o) visit({Boundary::Outer, o});
  for (Lift i = 0; i < s.q; ++i) visit({Boundary::Inner, i});
  std::vector<Face> out;
  for (const auto& key : order) {
    const Acc& a = acc.at(key);
    if (a.next.size() != 3) raise("InternalError", "face with " + std::to_string(a.next.size()) + " corners");
    Side cur = a.next.begin()->first;
    Face f;
    for (int r = 0; r < 3; ++r) {
      f.sides[r] = a.arc.at(cur);
      cur = a.next.at(cur);
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace

int FramePolygon::edge_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (int e = 0; e < int(edges.size()); ++e)
    if (edges[e].i == i && edges[e].j == j) return e;
  return -1;
}

FramePolygon frame_polygon(const Triangulation& t, int framing_index) {
  const Arc& fa = t.arcs.at(framing_index).arc;
  if (!fa.is_asymptotic()) raise("NotStrictlyAsymptotic", t.arcs[framing_index].id + " is not strictly asymptotic");
  FramePolygon poly;
  poly.boundary = fa.boundary;
  poly.n = t.shape.period(fa.boundary);
  poly.m = fa.point();
  poly.framing = framing_index;
  const int n = poly.n, inf = poly.infinity();
  for (int v = 0; v < n; ++v) poly.edges.push_back({v, v + 1, -1, 0});
  poly.edges.push_back({0, inf, framing_index, 1});
  poly.edges.push_back({n, inf, framing_index, 2});
  for (int idx : boundary_part(t, fa.boundary)) {
    if (idx == framing_index) continue;
    const Arc& x = t.arcs[idx].arc;
    if (x.is_asymptotic()) {
      poly.edges.push_back({int(floor_mod(x.point() - poly.m, n)), inf, idx, 0});
    } else {
      const int i = int(floor_mod(x.a - poly.m, n));
      poly.edges.push_back({i, i + int(x.length()), idx, 0});
    }
  }
  for (int i = 0; i <= inf; ++i)
    for (int j = i + 1; j <= inf; ++j) {
      const int ij = poly.edge_index(i, j);
      if (ij < 0) continue;
      for (int k = j + 1; k <= inf; ++k) {
        const int jk = poly.edge_index(j, k), ik = poly.edge_index(i, k);
        if (jk >= 0 && ik >= 0) poly.triangles.push_back({i, j, k, {ij, jk, ik}, k == inf});
      }
    }
  return poly;
}

std::vector<Face> faces(const Triangulation& t) {
  if (t.finite()) return finite_faces(t);
  std::vector<Face> out;
  for (Boundary b : {Boundary::Outer, Boundary::Inner}) {
    const auto asym = asymptotic_on(t, b);
    if (asym.empty()) continue;
    const FramePolygon poly = frame_polygon(t, asym.front());
    for (const auto& tri : poly.triangles) {
      Face f;
      for (int r = 0; r < 3; ++r) f.sides[r] = poly.edges[tri.edges[r]].arc;
      f.at_infinity = tri.at_infinity;
      out.push_back(f);
    }
  }
  return out;
}

}  // namespace annulus
