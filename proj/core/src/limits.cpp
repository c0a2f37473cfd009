#include "annulus/limits.hpp"

#include "annulus/errors.hpp"
#include "annulus/tquiver.hpp"
#include "annulus/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace annulus {

Triangulation cox_limit(const Triangulation& t) {
  if (!t.finite() || !t.all_bridging()) raise("NotBridging", "cox limit needs an all-bridging triangulation");
  return dehn_limit(t, Direction::Plus);
}

std::vector<Vertex> bridging_cyclic_order(const Triangulation& t) {
  std::vector<std::tuple<Lift, Lift, Vertex>> keyed;
  for (const auto& a : t.arcs)
    if (a.arc.is_bridging()) keyed.emplace_back(a.arc.a, displacement(a.arc, t.shape), a.id);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(y), std::get<1>(y)) < std::tie(std::get<0>(x), std::get<1>(x));
  });
  std::vector<Vertex> out;
  for (const auto& k : keyed) out.push_back(std::get<2>(k));
  return out;
}

CyclicQuiverView cyclic_view_of(const Triangulation& t) {
  if (!t.finite() || !t.all_bridging()) raise("NotBridging", "cyclic view needs an all-bridging triangulation");
  return {quiver_of(t), bridging_cyclic_order(t)};
}

std::vector<Vertex> default_cyclic_order(const Quiver& c) {
  if (c.vertices.empty()) return {};
  std::vector<Vertex> order{c.vertices.front()};
  std::set<Vertex> seen{order.front()};
  while (order.size() < c.vertices.size()) {
    const Vertex& cur = order.back();
    std::optional<Vertex> best;
    for (const auto& v : c.vertices) {
      if (seen.count(v) || (!c.mult(cur, v) && !c.mult(v, cur))) continue;
      if (!best || c.index(v) > c.index(*best)) best = v;
    }
    if (!best) raise("NotACycleQuiver", "shape is not a cycle");
    order.push_back(*best);
    seen.insert(*best);
  }
  return order;
}

namespace {

// +1 when the cycle edge k runs order[k] -> order[k+1], -1 when reversed.
std::vector<int> edge_directions(const Quiver& c, const std::vector<Vertex>& order) {
  const size_t n = order.size();
  if (n < 1 || n != c.vertices.size()) raise("NotACycleQuiver", "cyclic order must list every vertex once");
  if (std::set<Vertex>(order.begin(), order.end()).size() != n) raise("NotACycleQuiver", "repeated vertex in cyclic order");
  if (c.arrow_count() != int(n)) raise("NotACycleQuiver", "cycle quiver must have as many arrows as vertices");
  std::vector<int> dir(n, 0);
  if (n == 1) {
    if (c.mult(order[0], order[0]) != 1) raise("NotACycleQuiver", "single vertex needs one loop");
    raise("NotACycleQuiver", "single loop is an oriented cycle");
  }
  if (n == 2) {
    const int ab = c.mult(order[0], order[1]), ba = c.mult(order[1], order[0]);
    if (ab == 2) dir = {1, -1};
    else if (ba == 2) dir = {-1, 1};
    else raise("NotACycleQuiver", "two-vertex cycle is oriented");
    return dir;
  }
  for (size_t k = 0; k < n; ++k) {
    const Vertex &x = order[k], &y = order[(k + 1) % n];
    const int f = c.mult(x, y), b = c.mult(y, x);
    if (f + b != 1) raise("NotACycleQuiver", "consecutive vertices " + x + ", " + y + " need exactly one arrow");
    dir[k] = f ? 1 : -1;
  }
  return dir;
}

struct Grouping {
  std::vector<int> group_of;  // per position in order
  std::vector<std::string> names;
};

// Contract maximal runs of edges with direction `sign`.
Grouping contract_runs(const std::vector<Vertex>& order, const std::vector<int>& dir, int sign, const std::string& stem) {
  const size_t n = order.size();
  if (std::all_of(dir.begin(), dir.end(), [&](int d) { return d == sign; }))
    raise("NotACycleQuiver", "cycle is oriented");
  // Start at a position whose incoming edge is not contracted.
  size_t start = 0;
  while (dir[(start + n - 1) % n] == sign) ++start;
  Grouping g;
  g.group_of.assign(n, -1);
  size_t pos = start;
  for (size_t seen = 0; seen < n;) {
    size_t len = 0;
    while (dir[(pos + len) % n] == sign) ++len;
    const int id = int(g.names.size());
    for (size_t t = 0; t <= len; ++t) g.group_of[(pos + t) % n] = id;
    if (len == 0) {
      g.names.push_back(order[pos]);
    } else {
      const Vertex& head = order[pos];
      const Vertex& tail = order[(pos + len) % n];
      g.names.push_back(sign > 0 ? stem + "_" + head + "_" + tail : stem + "_" + tail + "_" + head);
    }
    seen += len + 1;
    pos = (pos + len + 1) % n;
  }
  return g;
}

struct Branch {
  std::vector<Vertex> vertices;
  size_t edge = 0;
};

Quiver build_copy(const Quiver& q, const std::vector<Vertex>& order, const std::vector<int>& dir, int sign,
                  const std::string& stem, const std::vector<Branch>& branches) {
  const size_t n = order.size();
  const Grouping g = contract_runs(order, dir, sign, stem);
  std::map<Vertex, std::string> name;
  for (size_t k = 0; k < n; ++k) name[order[k]] = g.names[g.group_of[k]];
  Quiver r;
  for (size_t k = 0; k < n; ++k) r.add_vertex(name[order[k]]);
  std::set<Vertex> alive;
  for (const auto& b : branches)
    if (dir[b.edge] != sign) alive.insert(b.vertices.begin(), b.vertices.end());
  for (const auto& v : q.vertices)
    if (alive.count(v)) {
      r.add_vertex(v);
      name[v] = v;
    }
  std::set<Vertex> shape_v(order.begin(), order.end());
  for (size_t k = 0; k < n; ++k) {
    if (dir[k] == sign) continue;
    const Vertex &x = order[k], &y = order[(k + 1) % n];
    if (dir[k] > 0) r.add_arrow(name[x], name[y]);
    else r.add_arrow(name[y], name[x]);
  }
  for (const auto& [key, m] : q.arrows) {
    const auto& [a, b] = key;
    if (shape_v.count(a) && shape_v.count(b)) continue;
    if (!name.count(a) || !name.count(b)) continue;
    r.add_arrow(name[a], name[b], m);
  }
  return r;
}

std::pair<Quiver, Quiver> contract_impl(const Quiver& q, const Quiver& shape, const std::vector<Vertex>& order) {
  const auto dir = edge_directions(shape, order);
  const size_t n = order.size();
  std::map<Vertex, size_t> pos;
  for (size_t k = 0; k < n; ++k) pos[order[k]] = k;
  std::vector<Vertex> others;
  for (const auto& v : q.vertices)
    if (!pos.count(v)) others.push_back(v);
  for (const auto& [key, m] : q.arrows)
    if (pos.count(key.first) && pos.count(key.second) && m != shape.mult(key.first, key.second))
      raise("ShapeNotSubquiver", "shape must be the full subquiver on its vertices");
  std::vector<Branch> branches;
  size_t two_cycle_slot = 0;
  for (const auto& comp : weak_components(induced_subquiver(q, others))) {
    std::set<size_t> att;
    const std::set<Vertex> cs(comp.begin(), comp.end());
    for (const auto& [key, m] : q.arrows) {
      if (cs.count(key.first) && pos.count(key.second)) att.insert(pos[key.second]);
      if (cs.count(key.second) && pos.count(key.first)) att.insert(pos[key.first]);
    }
    if (att.size() != 2) raise("ShapeNotSubquiver", "branch must attach to two consecutive cycle vertices");
    const size_t a = *att.begin(), b = *att.rbegin();
    Branch br{comp, 0};
    if (n == 2) br.edge = two_cycle_slot++ % 2;
    else if (b == a + 1) br.edge = a;
    else if (a == 0 && b == n - 1) br.edge = n - 1;
    else raise("ShapeNotSubquiver", "branch must attach to two consecutive cycle vertices");
    branches.push_back(br);
  }
  return {build_copy(q, order, dir, -1, "w", branches), build_copy(q, order, dir, 1, "u", branches)};
}

}  // namespace

std::pair<Quiver, Quiver> contract_paths(const CyclicQuiverView& view) {
  return contract_impl(view.quiver, view.quiver, view.cyclic_order);
}

std::pair<Quiver, Quiver> contract_with_shape(const Quiver& q, const Quiver& shape,
                                              const std::optional<std::vector<Vertex>>& order) {
  for (const auto& v : shape.vertices)
    if (!q.has_vertex(v)) raise("ShapeNotSubquiver", "shape vertex '" + v + "' missing from quiver");
  for (const auto& [key, m] : shape.arrows)
    if (q.mult(key.first, key.second) < m) raise("ShapeNotSubquiver", "shape arrow missing from quiver");
  return contract_impl(q, shape, order ? *order : default_cyclic_order(shape));
}

Quiver shape_of(const Triangulation& t) {
  if (!t.finite()) raise("NotFinite", "shape needs a finite triangulation");
  std::vector<Vertex> keep;
  for (const auto& a : t.arcs)
    if (a.arc.is_bridging()) keep.push_back(a.id);
  return induced_subquiver(quiver_of(t), keep);
}

Quiver boundary_component(const Triangulation& t, Boundary b) {
  std::vector<Vertex> keep;
  for (int idx : boundary_part(t, b)) keep.push_back(t.arcs[idx].id);
  return induced_subquiver(quiver_of(t), keep);
}

}  // namespace annulus
