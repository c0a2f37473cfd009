#include "annulus/triangulation.hpp"

#include "annulus/errors.hpp"
#include "annulus/faces.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace annulus {

int Triangulation::index_of(const std::string& id) const {
  for (int i = 0; i < int(arcs.size()); ++i)
    if (arcs[i].id == id) return i;
  return -1;
}

const Arc& Triangulation::arc(const std::string& id) const {
  const int i = index_of(id);
  if (i < 0) raise("UnknownArcId", "no arc '" + id + "'");
  return arcs[i].arc;
}

std::vector<std::string> Triangulation::ids() const {
  std::vector<std::string> out;
  for (const auto& a : arcs) out.push_back(a.id);
  return out;
}

std::vector<Arc> Triangulation::arc_multiset() const {
  std::vector<Arc> out;
  for (const auto& a : arcs) out.push_back(a.arc);
  std::sort(out.begin(), out.end());
  return out;
}

bool Triangulation::all_bridging() const {
  return std::all_of(arcs.begin(), arcs.end(), [](const LabeledArc& a) { return a.arc.is_bridging(); });
}

int Triangulation::count(ArcKind k) const {
  return int(std::count_if(arcs.begin(), arcs.end(), [k](const LabeledArc& a) { return a.arc.kind == k; }));
}

std::string to_string(const Triangulation& t) {
  std::ostringstream os;
  os << "C(" << t.shape.p << "," << t.shape.q << "){";
  for (size_t i = 0; i < t.arcs.size(); ++i) os << (i ? ", " : "") << t.arcs[i].id << ":" << to_string(t.arcs[i].arc);
  os << "}";
  return os.str();
}

bool pairwise_compatible(const std::vector<Arc>& arcs, const AnnulusShape& s) {
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i + 1; j < arcs.size(); ++j)
      if (arcs[i] == arcs[j] || crosses(arcs[i], arcs[j], s)) return false;
  return true;
}

std::vector<int> boundary_part(const Triangulation& t, Boundary b) {
  std::vector<int> out;
  for (int i = 0; i < int(t.arcs.size()); ++i) {
    const Arc& x = t.arcs[i].arc;
    if (!x.is_bridging() && x.boundary == b) out.push_back(i);
  }
  return out;
}

std::vector<int> asymptotic_on(const Triangulation& t, Boundary b) {
  std::vector<int> out;
  for (int i = 0; i < int(t.arcs.size()); ++i) {
    const Arc& x = t.arcs[i].arc;
    if (x.is_asymptotic() && x.boundary == b) out.push_back(i);
  }
  return out;
}

std::optional<std::string> validation_error(const Triangulation& t) {
  const auto& s = t.shape;
  if (s.p < 1 || s.q < 1) return "shape must have p, q >= 1";
  if (int(t.arcs.size()) != s.p + s.q)
    return "expected " + std::to_string(s.p + s.q) + " arcs, got " + std::to_string(t.arcs.size());
  std::set<std::string> ids;
  for (const auto& a : t.arcs) {
    if (a.id.empty()) return std::string("empty arc id");
    if (!ids.insert(a.id).second) return "duplicate arc id '" + a.id + "'";
    if (!is_canonical(a.arc, s)) return "arc " + a.id + " is not canonical";
  }
  for (size_t i = 0; i < t.arcs.size(); ++i)
    for (size_t j = i + 1; j < t.arcs.size(); ++j) {
      if (t.arcs[i].arc == t.arcs[j].arc) return "arcs " + t.arcs[i].id + " and " + t.arcs[j].id + " coincide";
      if (crosses(t.arcs[i].arc, t.arcs[j].arc, s)) return "arcs " + t.arcs[i].id + " and " + t.arcs[j].id + " cross";
    }
  const int asym = t.count(ArcKind::Prufer) + t.count(ArcKind::Adic);
  if (t.finite()) {
    if (asym) return std::string("finite triangulation with asymptotic arc");
    if (t.count(ArcKind::Bridging) < 2) return std::string("finite triangulation needs at least 2 bridging arcs");
    return std::nullopt;
  }
  if (t.count(ArcKind::Bridging)) return std::string("asymptotic triangulation with bridging arc");
  for (Boundary b : {Boundary::Outer, Boundary::Inner}) {
    if (int(boundary_part(t, b).size()) != s.period(b)) return "wrong number of arcs on " + to_string(b) + " boundary";
    const auto as = asymptotic_on(t, b);
    if (as.empty()) return "no strictly asymptotic arc on " + to_string(b) + " boundary";
    for (int i : as)
      if (t.arcs[i].arc.kind != t.arcs[as.front()].arc.kind) return "mixed spiral directions on " + to_string(b) + " boundary";
  }
  return std::nullopt;
}

Triangulation make_triangulation(const AnnulusShape& s, std::vector<LabeledArc> arcs) {
  check_shape(s);
  Triangulation t{s, std::move(arcs), TriangulationKind::Finite};
  for (auto& a : t.arcs) {
    a.arc = canonicalize(a.arc, s);
    if (a.arc.is_asymptotic()) t.kind = TriangulationKind::Asymptotic;
  }
  if (auto err = validation_error(t)) raise("InvalidTriangulation", *err);
  return t;
}

std::vector<LabeledArc> label(const std::vector<Arc>& arcs, const std::string& prefix) {
  std::vector<LabeledArc> out;
  for (size_t i = 0; i < arcs.size(); ++i) out.push_back({prefix + std::to_string(i + 1), arcs[i]});
  return out;
}

namespace {

Arc join(const MarkedPoint& x, const MarkedPoint& y, const AnnulusShape& s) {
  if (x.boundary == y.boundary) return canonicalize(Arc::peripheral(x.boundary, std::min(x.lift, y.lift), std::max(x.lift, y.lift)), s);
  const MarkedPoint& o = x.boundary == Boundary::Outer ? x : y;
  const MarkedPoint& i = x.boundary == Boundary::Outer ? y : x;
  return canonicalize(Arc::bridging(o.lift, i.lift), s);
}

Arc flip_finite(const Triangulation& t, int idx) {
  const Arc& x = t.arcs[idx].arc;
  const MarkedPoint u = x.is_bridging() ? MarkedPoint{Boundary::Outer, x.a} : MarkedPoint{x.boundary, x.a};
  const auto ends = ends_at(t, u);
  for (size_t j = 1; j + 1 < ends.size(); ++j) {
    if (ends[j].arc != idx || (x.is_peripheral() && ends[j].category != 1)) continue;
    return join(ends[j - 1].far, ends[j + 1].far, t.shape);
  }
  raise("InternalError", "arc end not found at its endpoint");
}

Arc flip_asymptotic(const Triangulation& t, int idx) {
  const Arc& x = t.arcs[idx].arc;
  const auto asym = asymptotic_on(t, x.boundary);
  if (x.is_asymptotic() && asym.size() == 1)
    return x.kind == ArcKind::Prufer ? Arc::adic(x.boundary, x.point()) : Arc::prufer(x.boundary, x.point());
  int framing = -1;
  for (int a : asym)
    if (a != idx) {
      framing = a;
      break;
    }
  const FramePolygon poly = frame_polygon(t, framing);
  int e = -1;
  for (int k = 0; k < int(poly.edges.size()); ++k)
    if (poly.edges[k].arc == idx) e = k;
  const PolyEdge& pe = poly.edges.at(e);
  std::vector<int> opposite;
  for (const auto& tri : poly.triangles) {
    if (std::find(tri.edges.begin(), tri.edges.end(), e) == tri.edges.end()) continue;
    for (int v : {tri.i, tri.j, tri.k})
      if (v != pe.i && v != pe.j) opposite.push_back(v);
  }
  if (opposite.size() != 2) raise("InternalError", "flipped edge is not a diagonal of a quadrilateral");
  const int lo = std::min(opposite[0], opposite[1]), hi = std::max(opposite[0], opposite[1]);
  const ArcKind spiral = t.arcs[framing].arc.kind;
  const AnnulusShape& s = t.shape;
  if (hi == poly.infinity()) return canonicalize(Arc{spiral, x.boundary, poly.m + lo, 0}, s);
  return canonicalize(Arc::peripheral(x.boundary, poly.m + lo, poly.m + hi), s);
}

}  // namespace

Arc flipped_arc(const Triangulation& t, const std::string& id) {
  const int idx = t.index_of(id);
  if (idx < 0) raise("UnknownArcId", "no arc '" + id + "'");
  return t.finite() ? flip_finite(t, idx) : flip_asymptotic(t, idx);
}

Triangulation flip(const Triangulation& t, const std::string& id) {
  Arc y = flipped_arc(t, id);
  Triangulation r = t;
  r.arcs[t.index_of(id)].arc = y;
  return r;
}

std::vector<std::string> bounding_arcs(const Triangulation& t) {
  std::vector<std::string> out;
  for (const auto& a : t.arcs) {
    if (!a.arc.is_peripheral()) continue;
    const Arc y = flipped_arc(t, a.id);
    if (t.finite() ? y.is_bridging() : y.is_asymptotic()) out.push_back(a.id);
  }
  return out;
}

namespace {

std::vector<Arc> completion_candidates(const AnnulusShape& s, Lift dmin, Lift dmax) {
  std::vector<Arc> out;
  for (Lift o = 0; o < s.p; ++o) {
    // d = -(i p + o q) within [dmin, dmax]
    const Lift ilo = -floor_div(dmax + o * s.q, s.p);
    const Lift ihi = floor_div(-dmin - o * s.q, s.p);
    for (Lift i = ilo; i <= ihi; ++i) out.push_back(Arc::bridging(o, i));
  }
  for (Boundary b : {Boundary::Outer, Boundary::Inner}) {
    const int n = s.period(b);
    for (Lift a = 0; a < n; ++a)
      for (Lift len = 2; len <= n; ++len) out.push_back(Arc::peripheral(b, a, a + len));
  }
  for (ArcKind k : {ArcKind::Prufer, ArcKind::Adic})
    for (Boundary b : {Boundary::Outer, Boundary::Inner})
      for (Lift m = 0; m < s.period(b); ++m) out.push_back(Arc{k, b, m, 0});
  return out;
}

}  // namespace

Triangulation complete_to_triangulation(const std::vector<LabeledArc>& partial0, const AnnulusShape& s) {
  check_shape(s);
  std::vector<LabeledArc> partial = partial0;
  std::vector<Arc> chosen;
  for (auto& a : partial) {
    a.arc = canonicalize(a.arc, s);
    chosen.push_back(a.arc);
  }
  if (!pairwise_compatible(chosen, s)) raise("IncompatibleInput", "partial arcs are not pairwise compatible");
  if (int(chosen.size()) > s.p + s.q) raise("IncompatibleInput", "too many arcs");
  const Lift pq = Lift(s.p) * s.q;
  Lift dmin = 0, dmax = 0;
  bool any = false;
  for (const auto& a : chosen)
    if (a.is_bridging()) {
      const Lift d = displacement(a, s);
      dmin = any ? std::min(dmin, d) : d;
      dmax = any ? std::max(dmax, d) : d;
      any = true;
    }
  std::set<std::string> used;
  for (const auto& a : partial) used.insert(a.id);
  for (Lift w = 2 * pq; w <= 64 * pq; w *= 2) {
    std::vector<Arc> set = chosen;
    for (const Arc& c : completion_candidates(s, dmin - w, dmax + w)) {
      if (int(set.size()) == s.p + s.q) break;
      if (std::find(set.begin(), set.end(), c) != set.end()) continue;
      bool ok = true;
      for (const Arc& x : set)
        if (crosses(c, x, s)) {
          ok = false;
          break;
        }
      if (ok) set.push_back(c);
    }
    if (int(set.size()) != s.p + s.q) continue;
    std::vector<LabeledArc> arcs = partial;
    int next = 1;
    for (size_t k = chosen.size(); k < set.size(); ++k) {
      std::string id;
      do id = "d" + std::to_string(next++);
      while (used.count(id));
      used.insert(id);
      arcs.push_back({id, set[k]});
    }
    for (size_t k = 0; k < arcs.size(); ++k)
      if (arcs[k].id.empty()) raise("IncompatibleInput", "empty arc id");
    try {
      return make_triangulation(s, arcs);
    } catch (const Error&) {
      continue;
    }
  }
  raise("IncompatibleInput", "partial arcs do not extend to a triangulation");
}

Triangulation complete_to_triangulation(const std::vector<Arc>& partial, const AnnulusShape& s) {
  return complete_to_triangulation(label(partial), s);
}

Triangulation fan_triangulation(const AnnulusShape& s) {
  check_shape(s);
  std::vector<Arc> arcs;
  for (Lift j = 0; j < s.q; ++j) arcs.push_back(Arc::bridging(0, -j));
  for (Lift b = 2; b <= s.p; ++b) arcs.push_back(Arc::peripheral(Boundary::Outer, 0, b));
  arcs.push_back(Arc::bridging(0, 1));
  return make_triangulation(s, label(arcs));
}

}  // namespace annulus
