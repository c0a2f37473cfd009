#include "annulus/enumerate.hpp"

#include "annulus/errors.hpp"

#include <boost/dynamic_bitset.hpp>

namespace annulus {

std::vector<Arc> finite_candidates(const AnnulusShape& s, bool bridging_only) {
  const Lift w = 2 * Lift(s.p) * s.q;
  std::vector<Arc> out;
  for (Lift o = 0; o < s.p; ++o) {
    const Lift ilo = -floor_div(w + o * s.q, s.p);
    const Lift ihi = floor_div(w - o * s.q, s.p);
    for (Lift i = ilo; i <= ihi; ++i) out.push_back(Arc::bridging(o, i));
  }
  if (bridging_only) return out;
  for (Boundary b : {Boundary::Outer, Boundary::Inner}) {
    const int n = s.period(b);
    for (Lift a = 0; a < n; ++a)
      for (Lift len = 2; len <= n; ++len) out.push_back(Arc::peripheral(b, a, a + len));
  }
  return out;
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct CliqueSearch {
  const std::vector<Arc>& cand;
  std::vector<Bits> compat;
  size_t want;
  size_t limit;
  size_t found = 0;
  std::vector<int> cur;
  std::function<bool(const std::vector<int>&)> emit;

  CliqueSearch(const std::vector<Arc>& c, const AnnulusShape& s, size_t want, size_t limit,
               std::function<bool(const std::vector<int>&)> emit)
      : cand(c), compat(c.size(), Bits(c.size())), want(want), limit(limit), emit(std::move(emit)) {
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j)
        if (!crosses(c[i], c[j], s)) compat[i].set(j), compat[j].set(i);
  }

  bool rec(const Bits& allowed) {
    if (cur.size() == want) {
      if (emit(cur)) ++found;
      return limit == 0 || found < limit;
    }
    if (allowed.count() < want - cur.size()) return true;
    for (size_t i = allowed.find_first(); i != Bits::npos; i = allowed.find_next(i)) {
      Bits next = allowed & compat[i];
      // Only later candidates, so each clique is produced once in index order.
      for (size_t j = next.find_first(); j != Bits::npos && j <= i; j = next.find_next(j)) next.reset(j);
      cur.push_back(int(i));
      const bool go = rec(next);
      cur.pop_back();
      if (!go) return false;
    }
    return true;
  }

  void run() {
    Bits all(cand.size());
    all.set();
    rec(all);
  }
};

void enumerate_finite(const AnnulusShape& s, const std::function<void(const Triangulation&)>& fn,
                      EnumerationOptions opt) {
  const auto cand = finite_candidates(s, opt.bridging_only);
  CliqueSearch cs(cand, s, size_t(s.p + s.q), opt.limit, [&](const std::vector<int>& idx) {
    std::vector<Arc> arcs;
    for (int i : idx) arcs.push_back(cand[i]);
    Triangulation t{s, label(arcs), TriangulationKind::Finite};
    if (validation_error(t)) return false;
    fn(t);
    return true;
  });
  cs.run();
}

std::vector<std::vector<Arc>> boundary_sets(const AnnulusShape& s, Boundary b) {
  const int n = s.period(b);
  std::vector<std::vector<Arc>> out;
  for (ArcKind spiral : {ArcKind::Prufer, ArcKind::Adic}) {
    std::vector<Arc> cand;
    for (Lift m = 0; m < n; ++m) cand.push_back(Arc{spiral, b, m, 0});
    for (Lift a = 0; a < n; ++a)
      for (Lift len = 2; len <= n; ++len) cand.push_back(Arc::peripheral(b, a, a + len));
    CliqueSearch cs(cand, s, size_t(n), 0, [&](const std::vector<int>& idx) {
      std::vector<Arc> arcs;
      bool asym = false;
      for (int i : idx) {
        arcs.push_back(cand[i]);
        asym = asym || cand[i].is_asymptotic();
      }
      if (!asym) return false;
      out.push_back(arcs);
      return true;
    });
    cs.run();
  }
  return out;
}

void enumerate_asymptotic(const AnnulusShape& s, const std::function<void(const Triangulation&)>& fn,
                          EnumerationOptions opt) {
  const auto outer = boundary_sets(s, Boundary::Outer);
  const auto inner = boundary_sets(s, Boundary::Inner);
  size_t n = 0;
  for (const auto& o : outer)
    for (const auto& i : inner) {
      std::vector<Arc> arcs = o;
      arcs.insert(arcs.end(), i.begin(), i.end());
      fn(Triangulation{s, label(arcs), TriangulationKind::Asymptotic});
      if (opt.limit && ++n >= opt.limit) return;
    }
}

}  // namespace

void for_each_triangulation(const AnnulusShape& s, TriangulationKind kind,
                            const std::function<void(const Triangulation&)>& fn, EnumerationOptions opt) {
  check_shape(s);
  if (s.p + s.q > kMaxEnumerationSize) raise("TooLarge", "enumeration guard p+q <= 12");
  if (kind == TriangulationKind::Finite) enumerate_finite(s, fn, opt);
  else enumerate_asymptotic(s, fn, opt);
}

std::vector<Triangulation> enumerate_triangulations(const AnnulusShape& s, TriangulationKind kind,
                                                    EnumerationOptions opt) {
  std::vector<Triangulation> out;
  for_each_triangulation(s, kind, [&](const Triangulation& t) { out.push_back(t); }, opt);
  return out;
}

Triangulation random_triangulation(const AnnulusShape& s, std::mt19937_64& rng, int steps) {
  Triangulation t = fan_triangulation(s);
  for (int k = 0; k < steps; ++k) {
    std::uniform_int_distribution<size_t> pick(0, t.arcs.size() - 1);
    t = flip(t, t.arcs[pick(rng)].id);
  }
  return t;
}

}  // namespace annulus
