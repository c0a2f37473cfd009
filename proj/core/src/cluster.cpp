#include "annulus/cluster.hpp"

#include "annulus/errors.hpp"
#include "annulus/faces.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace annulus {

namespace {

const char* const kPi = "_pi";

Triangulation host(int p, const std::vector<LabeledArc>& arcs) {
  std::vector<LabeledArc> all = arcs;
  all.push_back({kPi, Arc::prufer(Boundary::Inner, 0)});
  return make_triangulation({p, 1}, all);
}

std::vector<LabeledArc> outer_arcs(const Triangulation& t) {
  std::vector<LabeledArc> out;
  for (const auto& a : t.arcs)
    if (a.id != kPi) out.push_back(a);
  return out;
}

std::string downstairs_of(const Vertex& v) { return v.substr(0, v.find('^')); }

}  // namespace

std::string to_string(Tag t) {
  switch (t) {
    case Tag::Plain: return "plain";
    case Tag::Notched: return "notched";
    case Tag::Boundary: return "boundary";
  }
  return "";
}

LimitTriangulation make_limit(int p, std::vector<LabeledArc> arcs) {
  if (p < 1) raise("InvalidShape", "limit component needs p >= 1");
  for (const auto& a : arcs) {
    if (a.arc.is_bridging()) raise("InvalidTriangulation", "bridging arc " + a.id + " in the limit component");
    if (a.arc.boundary != Boundary::Outer) raise("InvalidTriangulation", "arc " + a.id + " is not on the limit boundary");
    if (a.id == kPi || a.id.find('^') != std::string::npos) raise("InvalidTriangulation", "reserved arc id " + a.id);
  }
  return {p, outer_arcs(host(p, arcs))};
}

LimitTriangulation initial_limit(int p) {
  std::vector<LabeledArc> arcs{{"1", Arc::prufer(Boundary::Outer, 0)}};
  for (int k = 2; k <= p; ++k) arcs.push_back({std::to_string(k), Arc::peripheral(Boundary::Outer, 0, k)});
  return make_limit(p, arcs);
}

LimitTriangulation flip(const LimitTriangulation& t, const std::string& id) {
  if (id == kPi) raise("UnknownArcId", "no arc '" + id + "'");
  return {t.p, outer_arcs(flip(host(t.p, t.arcs), id))};
}

TaggedDiscTriangulation tagged(const LimitTriangulation& t) {
  TaggedDiscTriangulation out{t.p, {}};
  for (const auto& a : t.arcs) {
    Tag tag = Tag::Boundary;
    if (a.arc.kind == ArcKind::Prufer) tag = Tag::Plain;
    if (a.arc.kind == ArcKind::Adic) tag = Tag::Notched;
    out.arcs.push_back({a.id, tag, a.arc});
  }
  return out;
}

std::string cluster_variable_name(int p, int i) {
  if (p <= 3) return std::string(1, "xyz"[i - 1]);
  return "x" + std::to_string(i);
}

std::string frozen_variable_name(int p, int segment) {
  if (p <= 3) return std::string(1, char('a' + segment));
  return "c" + std::to_string(segment + 1);
}

std::string lift_name(const std::string& id, int sheet) { return id + "^" + std::to_string(sheet); }

DoubleCover double_cover(const LimitTriangulation& t) {
  const int p = t.p, n = 2 * p;
  std::vector<LabeledArc> lifted;
  for (int sheet = 1; sheet <= 2; ++sheet)
    for (const auto& a : t.arcs) {
      Arc x = a.arc;
      x.a += (sheet - 1) * p;
      if (x.kind == ArcKind::Peripheral) x.b += (sheet - 1) * p;
      lifted.push_back({lift_name(a.id, sheet), x});
    }
  std::vector<LabeledArc> all = lifted;
  all.push_back({kPi, Arc::prufer(Boundary::Inner, 0)});
  const Triangulation cover = make_triangulation({n, 1}, all);
  const auto asym = asymptotic_on(cover, Boundary::Outer);
  const FramePolygon poly = frame_polygon(cover, asym.front());
  auto segment = [&](int v) {
    const int s = int(floor_mod(poly.m + v, n));
    return lift_name(frozen_variable_name(p, s % p), s < p ? 1 : 2);
  };
  DoubleCover dc;
  for (const auto& a : lifted) dc.quiver.add_vertex(a.id);
  for (int s = 0; s < n; ++s) {
    const Vertex v = lift_name(frozen_variable_name(p, s % p), s < p ? 1 : 2);
    dc.quiver.add_vertex(v);
    dc.quiver.frozen.insert(v);
  }
  for (const auto& tri : poly.triangles) {
    Vertex side[3];
    for (int r = 0; r < 3; ++r) {
      const PolyEdge& e = poly.edges[tri.edges[r]];
      side[r] = e.arc < 0 ? segment(e.i) : cover.arcs[e.arc].id;
    }
    for (int r = 0; r < 3; ++r) {
      const Vertex &u = side[r], &w = side[(r + 1) % 3];
      if (dc.quiver.frozen.count(u) && dc.quiver.frozen.count(w)) continue;
      dc.quiver.add_arrow(u, w);
    }
  }
  dc.quiver = cancel_two_cycles(dc.quiver);
  for (const auto& v : dc.quiver.vertices) {
    const auto hat = v.find('^');
    dc.involution[v] = v.substr(0, hat) + (v.substr(hat + 1) == "1" ? "^2" : "^1");
  }
  return dc;
}

Seed initial_seed(int p) {
  Seed s;
  s.downstairs = initial_limit(p);
  s.quiver = double_cover(s.downstairs).quiver;
  for (const auto& v : s.quiver.vertices) {
    const std::string d = downstairs_of(v);
    s.variables[v] = Laurent::variable(s.quiver.frozen.count(v) ? d : cluster_variable_name(p, std::stoi(d)));
  }
  return s;
}

namespace {

void mutate_at(Seed& s, const Vertex& k) {
  Laurent in = Laurent::constant(1), out = Laurent::constant(1);
  for (const auto& [e, m] : s.quiver.arrows) {
    if (e.second == k) in = in * s.variables.at(e.first).pow(m);
    if (e.first == k) out = out * s.variables.at(e.second).pow(m);
  }
  s.variables[k] = Laurent::divide(in + out, s.variables.at(k));
  Quiver q = mutate(s.quiver, k);
  for (auto it = q.arrows.begin(); it != q.arrows.end();)
    it = q.frozen.count(it->first.first) && q.frozen.count(it->first.second) ? q.arrows.erase(it) : std::next(it);
  s.quiver = q;
}

}  // namespace

Seed composite_mutate(const Seed& s, const std::string& i, bool second_sheet_first) {
  const Vertex a = lift_name(i, 1), b = lift_name(i, 2);
  if (!s.quiver.has_vertex(a) || s.quiver.frozen.count(a)) raise("UnknownArc", "no downstairs arc '" + i + "'");
  if (s.quiver.mult(a, b) || s.quiver.mult(b, a))
    raise("NonCommutingPair", a + " and " + b + " are adjacent");
  Seed r = s;
  mutate_at(r, second_sheet_first ? b : a);
  mutate_at(r, second_sheet_first ? a : b);
  r.downstairs = flip(s.downstairs, i);
  return r;
}

bool deck_symmetric(const Seed& s) {
  for (const auto& v : s.quiver.vertices) {
    const std::string d = downstairs_of(v);
    if (!(s.variables.at(v) == s.variables.at(lift_name(d, 1)))) return false;
  }
  return true;
}

bool laurent_property(const Seed& s) {
  std::set<std::string> base;
  for (const auto& v : s.quiver.vertices)
    base.insert(s.quiver.frozen.count(v) ? downstairs_of(v)
                                         : cluster_variable_name(s.downstairs.p, std::stoi(downstairs_of(v))));
  for (const auto& [v, l] : s.variables) {
    if (l.is_zero() || !l.positive()) return false;
    for (const auto& [m, c] : l.terms())
      for (const auto& [x, e] : m)
        if (!base.count(x)) return false;
  }
  return true;
}

std::string LambdaLength::to_string() const {
  if (scale == 1) return variable.to_string();
  const Integer num = numerator(scale), den = denominator(scale);
  bool exact = true;
  for (const auto& [m, c] : variable.terms()) exact = exact && (c * num) % den == 0;
  if (exact) {
    Laurent r;
    for (const auto& [m, c] : variable.terms()) r = r + Laurent::monomial(m, c * num / den);
    return r.to_string();
  }
  return num.str() + "/" + den.str() + "*(" + variable.to_string() + ")";
}

std::map<std::string, LambdaLength> lambda_lengths(const Seed& s) {
  std::map<std::string, LambdaLength> out;
  for (const auto& a : s.downstairs.arcs) {
    LambdaLength l{s.variables.at(lift_name(a.id, 1)), 1};
    if (a.arc.kind == ArcKind::Adic) l.scale = Rational(1, 2);
    out[a.id] = l;
  }
  return out;
}

std::vector<std::string> sorted_variables(const Seed& s) {
  std::vector<std::string> out;
  for (const auto& v : s.quiver.vertices)
    if (!s.quiver.frozen.count(v)) out.push_back(s.variables.at(v).to_string());
  std::sort(out.begin(), out.end());
  return out;
}

bool equivalent(const Seed& a, const Seed& b) {
  if (a.quiver.vertices.size() != b.quiver.vertices.size() || a.quiver.arrow_count() != b.quiver.arrow_count())
    return false;
  if (sorted_variables(a) != sorted_variables(b)) return false;
  const auto& va = a.quiver.vertices;
  std::map<std::string, std::vector<Vertex>> classes;
  for (const auto& v : b.quiver.vertices)
    classes[(b.quiver.frozen.count(v) ? "f:" : "m:") + b.variables.at(v).to_string()].push_back(v);
  std::map<Vertex, Vertex> image;
  std::set<Vertex> used;
  std::function<bool(size_t)> assign = [&](size_t k) -> bool {
    if (k == va.size()) return true;
    const Vertex& v = va[k];
    const std::string key = (a.quiver.frozen.count(v) ? "f:" : "m:") + a.variables.at(v).to_string();
    auto it = classes.find(key);
    if (it == classes.end()) return false;
    for (const auto& w : it->second) {
      if (used.count(w)) continue;
      bool ok = a.quiver.mult(v, v) == b.quiver.mult(w, w);
      for (size_t j = 0; ok && j < k; ++j)
        ok = a.quiver.mult(v, va[j]) == b.quiver.mult(w, image[va[j]]) &&
             a.quiver.mult(va[j], v) == b.quiver.mult(image[va[j]], w);
      if (!ok) continue;
      image[v] = w;
      used.insert(w);
      if (assign(k + 1)) return true;
      used.erase(w);
    }
    return false;
  };
  return assign(0);
}

ExchangeGraph exchange_graph(const Seed& s, int depth, size_t budget) {
  ExchangeGraph g;
  g.seeds.push_back(s);
  std::map<std::vector<std::string>, std::vector<int>> index{{sorted_variables(s), {0}}};
  std::deque<std::pair<int, int>> frontier{{0, 0}};
  bool truncated = false;
  while (!frontier.empty()) {
    const auto [u, d] = frontier.front();
    frontier.pop_front();
    if (d >= depth) {
      truncated = true;
      continue;
    }
    for (const auto& a : g.seeds[u].downstairs.arcs) {
      Seed next = composite_mutate(g.seeds[u], a.id);
      auto& bucket = index[sorted_variables(next)];
      int found = -1;
      for (int c : bucket)
        if (equivalent(g.seeds[c], next)) found = c;
      if (found < 0) {
        if (g.seeds.size() >= budget)
          raise("ExplorationBudgetExceeded", "more than " + std::to_string(budget) + " seeds");
        found = int(g.seeds.size());
        g.seeds.push_back(std::move(next));
        bucket.push_back(found);
        frontier.push_back({found, d + 1});
      }
      const bool seen = std::any_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
        const auto [x, y, l] = e;
        return (x == u && y == found) || (x == found && y == u);
      });
      if (!seen) g.edges.emplace_back(u, found, a.id);
    }
  }
  g.closed = !truncated;
  return g;
}

}  // namespace annulus
