#include "annulus/transforms.hpp"

#include "annulus/errors.hpp"
#include "annulus/quiver.hpp"
#include "annulus/tquiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace annulus {

Direction parse_direction(const std::string& s) {
  if (s == "plus" || s == "Plus" || s == "+") return Direction::Plus;
  if (s == "minus" || s == "Minus" || s == "-") return Direction::Minus;
  raise("MalformedInput", "direction must be plus or minus, got '" + s + "'");
}

std::string to_string(Direction d) { return d == Direction::Plus ? "plus" : "minus"; }

FlipSequence FlipSequence::inverse() const { return {std::vector<std::string>(steps.rbegin(), steps.rend())}; }

Triangulation replay(const Triangulation& t, const FlipSequence& seq) {
  Triangulation r = t;
  for (const auto& id : seq.steps) r = flip(r, id);
  return r;
}

namespace {

void require_finite(const Triangulation& t) {
  if (!t.finite()) raise("NotFinite", "operation needs a finite triangulation");
}

void require_bridging(const Triangulation& t) {
  require_finite(t);
  if (!t.all_bridging()) raise("NotBridging", "operation needs an all-bridging triangulation");
}

}  // namespace

Triangulation dehn_twist(const Triangulation& t, Direction d, int n) {
  require_finite(t);
  if (n < 0) raise("MalformedInput", "twist count must be non-negative");
  const Lift step = (d == Direction::Plus ? -1 : 1) * Lift(t.shape.q) * n;
  Triangulation r = t;
  for (auto& a : r.arcs)
    if (a.arc.is_bridging()) a.arc.b += step;
  return r;
}

Triangulation dehn_limit(const Triangulation& t, Direction d) {
  require_finite(t);
  const ArcKind spiral = d == Direction::Plus ? ArcKind::Prufer : ArcKind::Adic;
  const std::string stem = d == Direction::Plus ? "pi_" : "alpha_";
  std::vector<LabeledArc> out;
  std::set<Arc> seen;
  auto emit = [&](Boundary b, Lift m, const char* tag) {
    Arc x = canonicalize(Arc{spiral, b, m, 0}, t.shape);
    if (!seen.insert(x).second) return;
    out.push_back({stem + tag + std::to_string(x.point()), x});
  };
  for (const auto& a : t.arcs) {
    if (a.arc.is_bridging()) {
      emit(Boundary::Outer, a.arc.a, "o");
      emit(Boundary::Inner, a.arc.b, "i");
    } else {
      out.push_back(a);
    }
  }
  return make_triangulation(t.shape, out);
}

Triangulation shift_endpoints(const Triangulation& t, Lift by) {
  Triangulation r = t;
  for (auto& a : r.arcs) {
    if (a.arc.is_bridging()) a.arc = canonicalize(Arc::bridging(a.arc.a + by, a.arc.b + by), t.shape);
    else a.arc = canonicalize(Arc{a.arc.kind, a.arc.boundary, a.arc.a + by, a.arc.b + (a.arc.is_peripheral() ? by : 0)}, t.shape);
  }
  return r;
}

namespace {

Triangulation run_ordering(const Triangulation& t, const std::vector<std::string>& ordering) {
  Triangulation r = t;
  for (const auto& id : ordering) r = flip(r, id);
  if (auto w = compare_triangulations(r, shift_endpoints(t, -1)))
    raise("InternalError", "coxeter step did not shift endpoints by -1: " + *w);
  return r;
}

}  // namespace

Triangulation coxeter_bridging(const Triangulation& t) {
  require_bridging(t);
  const auto ord = admissible_ordering(quiver_of(t));
  if (!ord) raise("NoAdmissibleOrdering", "bridging triangulation quiver has an oriented cycle");
  return run_ordering(t, *ord);
}

Triangulation coxeter_bridging(const Triangulation& t, const std::vector<std::string>& ordering) {
  require_bridging(t);
  if (!is_admissible(quiver_of(t), ordering)) raise("NoAdmissibleOrdering", "ordering is not admissible");
  return run_ordering(t, ordering);
}

std::pair<Triangulation, FlipSequence> reduce_to_bridging(const Triangulation& t) {
  require_finite(t);
  Triangulation cur = t;
  FlipSequence seq;
  while (!cur.all_bridging()) {
    auto b = bounding_arcs(cur);
    if (b.empty()) raise("InternalError", "peripheral arcs remain but none is bounding");
    const auto id = *std::min_element(b.begin(), b.end(), natural_less);
    cur = flip(cur, id);
    seq.steps.push_back(id);
  }
  return {cur, seq};
}

Triangulation coxeter(const Triangulation& t) {
  require_finite(t);
  auto [tb, seq] = reduce_to_bridging(t);
  return replay(coxeter_bridging(tb), seq.inverse());
}

Triangulation coxeter_power(const Triangulation& t, int n) {
  if (n < 0) raise("MalformedInput", "power must be non-negative");
  Triangulation r = t;
  for (int k = 0; k < n; ++k) r = coxeter(r);
  return r;
}

CoxeterExponents coxeter_exponents(const AnnulusShape& s) {
  const int m = std::lcm(s.p, s.q);
  return {m, m / s.p, m / s.q};
}

std::optional<std::string> compare_triangulations(const Triangulation& a, const Triangulation& b) {
  if (a.shape != b.shape) return std::string("shapes differ");
  if (a.arcs.size() != b.arcs.size()) return std::string("arc counts differ");
  for (const auto& x : a.arcs) {
    const int j = b.index_of(x.id);
    if (j < 0) return "arc " + x.id + " missing";
    if (canonicalize(x.arc, a.shape) != canonicalize(b.arcs[j].arc, b.shape))
      return "arc " + x.id + ": " + to_string(x.arc) + " vs " + to_string(b.arcs[j].arc);
  }
  if (a.arc_multiset() != b.arc_multiset()) return std::string("arc multisets differ");
  return std::nullopt;
}

RelationReport check_flip_dehn(const Triangulation& t) {
  const auto e = coxeter_exponents(t.shape);
  RelationReport rep{"flip_dehn_commute", true, e.m, e.r, e.s, std::nullopt};
  const Triangulation dt = dehn_twist(t, Direction::Plus);
  for (const auto& a : t.arcs) {
    if (auto w = compare_triangulations(flip(dt, a.id), dehn_twist(flip(t, a.id), Direction::Plus))) {
      rep.pass = false;
      rep.witness = to_string(t) + " flip " + a.id + ": " + *w;
      break;
    }
  }
  return rep;
}

namespace {

RelationReport cox_vs_dehn(const std::string& name, const Triangulation& t) {
  const auto e = coxeter_exponents(t.shape);
  RelationReport rep{name, true, e.m, e.r, e.s, std::nullopt};
  if (auto w = compare_triangulations(coxeter_power(t, e.m), dehn_twist(t, Direction::Plus, e.r + e.s))) {
    rep.pass = false;
    rep.witness = to_string(t) + ": " + *w;
  }
  return rep;
}

}  // namespace

RelationReport check_cox_dehn_reduced(const Triangulation& t) {
  return cox_vs_dehn("cox_m_eq_dehn_rs_reduced", reduce_to_bridging(t).first);
}

RelationReport check_cox_dehn(const Triangulation& t) { return cox_vs_dehn("cox_m_eq_dehn_rs", t); }

std::vector<RelationReport> check_commutativity(const Triangulation& t) {
  require_finite(t);
  if (t.shape.p + t.shape.q > 10) raise("TooLarge", "commutativity check guard p+q <= 10");
  return {check_flip_dehn(t), check_cox_dehn_reduced(t), check_cox_dehn(t)};
}

}  // namespace annulus
