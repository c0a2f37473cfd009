#pragma once

// Brute-force re-derivations used to cross-check the engine. Nothing here calls the engine's
// crossing, face or mutation code.

#include "annulus/arc.hpp"
#include "annulus/quiver.hpp"
#include "annulus/triangulation.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using annulus::Arc;
using annulus::ArcKind;
using annulus::AnnulusShape;
using annulus::Boundary;
using annulus::Lift;

// A lifted marked point in the strip: outer boundary y = 0 at x = o q, inner y = 1 at x = -i p.
struct Point {
  int y = 0;
  Lift x = 0;
  auto operator<=>(const Point&) const = default;
};

inline Point outer_point(Lift o, const AnnulusShape& s) { return {0, o * s.q}; }
inline Point inner_point(Lift i, const AnnulusShape& s) { return {1, -i * s.p}; }
inline Point boundary_point(Boundary b, Lift v, const AnnulusShape& s) {
  return b == Boundary::Outer ? outer_point(v, s) : inner_point(v, s);
}

// Endpoints of the k-th deck translate; translates move every x by k p q.
inline std::pair<Point, Point> lift(const Arc& a, Lift k, const AnnulusShape& s) {
  const Lift shift = k * s.p * s.q;
  Point u, v;
  if (a.is_bridging()) {
    u = outer_point(a.outer(), s);
    v = inner_point(a.inner(), s);
  } else {
    u = boundary_point(a.boundary, a.a, s);
    v = boundary_point(a.boundary, a.b, s);
  }
  u.x += shift;
  v.x += shift;
  return {u, v};
}

// Open x-interval cut off on the boundary by a peripheral lift.
inline std::pair<Lift, Lift> span(const Arc& a, Lift k, const AnnulusShape& s) {
  auto [u, v] = lift(a, k, s);
  return {std::min(u.x, v.x), std::max(u.x, v.x)};
}

constexpr Lift kTranslates = 12;

inline bool crosses(const Arc& x, const Arc& y, const AnnulusShape& s) {
  if (x == y) return false;
  if (x.is_asymptotic() && y.is_asymptotic()) return x.boundary == y.boundary && x.kind != y.kind;
  if (x.is_asymptotic() || y.is_asymptotic()) {
    const Arc& z = x.is_asymptotic() ? x : y;
    const Arc& o = x.is_asymptotic() ? y : x;
    if (o.is_bridging()) return true;
    if (o.boundary != z.boundary) return false;
    const Lift m = boundary_point(z.boundary, z.point(), s).x;
    const Lift period = s.p * s.q;
    for (Lift k = -kTranslates; k <= kTranslates; ++k) {
      auto [lo, hi] = span(o, k, s);
      for (Lift t = -kTranslates; t <= kTranslates; ++t)
        if (lo < m + t * period && m + t * period < hi) return true;
    }
    return false;
  }
  for (Lift k = -kTranslates; k <= kTranslates; ++k) {
    if (x.is_bridging() && y.is_bridging()) {
      auto [a0, a1] = lift(x, 0, s);
      auto [b0, b1] = lift(y, k, s);
      const Lift dl = a0.x - b0.x, du = a1.x - b1.x;
      if ((dl < 0 && du > 0) || (dl > 0 && du < 0)) return true;
      continue;
    }
    if (x.is_bridging() || y.is_bridging()) {
      const Arc& b = x.is_bridging() ? x : y;
      const Arc& p = x.is_bridging() ? y : x;
      auto [u, v] = lift(b, k, s);
      const Point end = p.boundary == Boundary::Outer ? u : v;
      auto [lo, hi] = span(p, 0, s);
      if (lo < end.x && end.x < hi) return true;
      continue;
    }
    if (x.boundary != y.boundary) continue;
    auto [a, b] = span(x, 0, s);
    auto [c, d] = span(y, k, s);
    if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return true;
  }
  return false;
}

// Canonical arcs with |outer x - inner x| bounded by window, plus every peripheral and asymptotic arc.
inline std::vector<Arc> candidates(const AnnulusShape& s, Lift window, bool asymptotic) {
  std::set<Arc> out;
  for (Lift o = 0; o < s.p; ++o)
    for (Lift i = -window; i <= window; ++i)
      if (std::abs(o * s.q + i * s.p) <= window) out.insert(Arc::bridging(o, i));
  for (Boundary b : {Boundary::Outer, Boundary::Inner}) {
    const Lift n = s.period(b);
    for (Lift a = 0; a < n; ++a) {
      for (Lift len = 2; len <= n; ++len) out.insert(Arc::peripheral(b, a, a + len));
      if (asymptotic) {
        out.insert(Arc::prufer(b, a));
        out.insert(Arc::adic(b, a));
      }
    }
  }
  return {out.begin(), out.end()};
}

// The other arc completing t \ {id}, found by scanning a wide candidate window.
inline std::optional<Arc> flip_by_completion(const annulus::Triangulation& t, const std::string& id) {
  const Arc old = t.arc(id);
  std::optional<Arc> found;
  for (const Arc& c : candidates(t.shape, 8 * t.shape.p * t.shape.q, !t.finite())) {
    if (c == old) continue;
    if (t.finite() && c.is_asymptotic()) continue;
    bool ok = true;
    for (const auto& a : t.arcs)
      if (a.id != id && (a.arc == c || oracle::crosses(a.arc, c, t.shape))) ok = false;
    if (!ok) continue;
    if (found) return std::nullopt;
    found = c;
  }
  return found;
}

// Quiver of a finite triangulation from the triangles of the lifted graph. Every 3-clique of
// the lift is a face since all marked points lie on the boundary lines; arrows run between
// consecutive arc sides in counter-clockwise order around the face.
inline annulus::Quiver finite_quiver(const annulus::Triangulation& t) {
  const AnnulusShape& s = t.shape;
  const Lift period = s.p * s.q;
  std::map<std::pair<Point, Point>, std::string> edge;
  auto add = [&](Point u, Point v, const std::string& name) {
    if (v < u) std::swap(u, v);
    edge[{u, v}] = name;
  };
  for (const auto& a : t.arcs)
    for (Lift k = -kTranslates; k <= kTranslates; ++k) {
      auto [u, v] = lift(a.arc, k, s);
      add(u, v, a.id);
    }
  const Lift reach = kTranslates * period;
  for (Lift o = -reach; o <= reach; ++o) add(outer_point(o, s), outer_point(o + 1, s), "");
  for (Lift i = -reach; i <= reach; ++i) add(inner_point(i, s), inner_point(i + 1, s), "");
  std::map<Point, std::vector<Point>> adj;
  for (const auto& [k, name] : edge) {
    adj[k.first].push_back(k.second);
    adj[k.second].push_back(k.first);
  }
  auto side = [&](Point u, Point v) {
    if (v < u) std::swap(u, v);
    return edge.at({u, v});
  };
  annulus::Quiver q;
  for (const auto& a : t.arcs) q.add_vertex(a.id);
  for (const auto& [u, nu] : adj) {
    if (u.x < 0 || u.x >= period) continue;
    for (const Point& v : nu)
      for (const Point& w : nu) {
        if (!(v < w) || !edge.count({std::min(v, w), std::max(v, w)})) continue;
        std::array<Point, 3> tri{u, v, w};
        // Anchor each face at its leftmost (then lowest) corner.
        if (*std::min_element(tri.begin(), tri.end(), [](const Point& a, const Point& b) {
              return std::tie(a.x, a.y) < std::tie(b.x, b.y);
            }) != u)
          continue;
        // Counter-clockwise order with y pointing down into the strip.
        const Lift area = (v.x - u.x) * (w.y - u.y) - (w.x - u.x) * (v.y - u.y);
        std::array<Point, 3> ccw = tri;
        if (area == 0) {
          std::sort(ccw.begin(), ccw.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
          if (ccw[0].y == 1) std::reverse(ccw.begin(), ccw.end());
        } else if (area < 0) {
          std::swap(ccw[1], ccw[2]);
        }
        const std::array<std::string, 3> sides{side(ccw[0], ccw[1]), side(ccw[1], ccw[2]), side(ccw[2], ccw[0])};
        for (int r = 0; r < 3; ++r) {
          const std::string &from = sides[r], &to = sides[(r + 1) % 3];
          if (!from.empty() && !to.empty()) q.add_arrow(from, to);
        }
      }
  }
  for (const auto& a : t.arcs)
    for (const auto& b : t.arcs) {
      const int m = std::min(q.mult(a.id, b.id), q.mult(b.id, a.id));
      if (a.id < b.id && m) {
        q.arrows[{a.id, b.id}] -= m;
        q.arrows[{b.id, a.id}] -= m;
      }
    }
  q.prune();
  return q;
}

// Fomin-Zelevinsky matrix mutation on the signed adjacency matrix.
inline annulus::Quiver matrix_mutate(const annulus::Quiver& q, const annulus::Vertex& k) {
  const auto& vs = q.vertices;
  auto b = [&](const annulus::Vertex& i, const annulus::Vertex& j) { return q.mult(i, j) - q.mult(j, i); };
  annulus::Quiver r;
  for (const auto& v : vs) r.add_vertex(v);
  for (const auto& i : vs)
    for (const auto& j : vs) {
      int x = b(i, j);
      if (i == k || j == k) x = -x;
      else x += (std::abs(b(i, k)) * b(k, j) + b(i, k) * std::abs(b(k, j))) / 2;
      if (x > 0) r.add_arrow(i, j, x);
    }
  r.frozen = q.frozen;
  return r;
}

}  // namespace oracle
