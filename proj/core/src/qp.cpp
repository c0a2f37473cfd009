#include "annulus/qp.hpp"

#include "annulus/errors.hpp"
#include "annulus/faces.hpp"
#include "annulus/tquiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace annulus {

void PathSum::add(const Path& p, const Rational& c) {
  if (c == 0) return;
  Rational& v = terms[p];
  v += c;
  if (v == 0) terms.erase(p);
}

Path least_rotation(const Path& cycle) {
  Path best = cycle;
  for (size_t r = 1; r < cycle.size(); ++r) {
    Path rot(cycle.begin() + r, cycle.end());
    rot.insert(rot.end(), cycle.begin(), cycle.begin() + r);
    if (rot < best) best = rot;
  }
  return best;
}

bool Potential::add(const Path& cycle, const Rational& c) {
  if (c == 0 || cycle.empty()) return true;
  if (int(cycle.size()) > degree) return false;
  const Path key = least_rotation(cycle);
  Rational& v = terms[key];
  v += c;
  if (v == 0) terms.erase(key);
  return true;
}

const QPArrow& QP::arrow(const std::string& id) const {
  for (const auto& a : arrows)
    if (a.id == id) return a;
  raise("UnknownArrow", "no arrow '" + id + "'");
}

bool QP::has_arrow(const std::string& id) const {
  return std::any_of(arrows.begin(), arrows.end(), [&](const QPArrow& a) { return a.id == id; });
}

Quiver QP::quiver() const {
  Quiver q;
  for (const auto& v : vertices) q.add_vertex(v);
  for (const auto& a : arrows) q.add_arrow(a.from, a.to);
  return q;
}

bool QP::is_reduced() const {
  return std::none_of(potential.terms.begin(), potential.terms.end(), [](const auto& t) { return t.first.size() == 2; });
}

std::string star(const std::string& a) {
  if (!a.empty() && a.back() == '*') return a.substr(0, a.size() - 1);
  return a + "*";
}

std::string composite(const std::string& out_arrow, const std::string& in_arrow) {
  return "[" + out_arrow + in_arrow + "]";
}

std::string to_composition_string(const Path& p) {
  std::string s;
  for (auto it = p.rbegin(); it != p.rend(); ++it) s += *it;
  return s;
}

namespace {

std::string coeff_string(const Rational& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

}  // namespace

std::string to_string(const Potential& w) {
  if (w.terms.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : w.terms) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += coeff_string(c) + "*";
    s += to_composition_string(p);
  }
  return s;
}

bool is_cycle(const QP& qp, const Path& p) {
  if (p.empty()) return false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (!qp.has_arrow(p[i])) return false;
    if (qp.arrow(p[i]).to != qp.arrow(p[(i + 1) % p.size()]).from) return false;
  }
  return true;
}

PathSum cyclic_derivative(const Potential& w, const std::string& arrow) {
  PathSum out;
  for (const auto& [c, coeff] : w.terms) {
    const size_t n = c.size();
    for (size_t t = 0; t < n; ++t) {
      if (c[t] != arrow) continue;
      Path p;
      for (size_t s = 1; s < n; ++s) p.push_back(c[(t + s) % n]);
      out.add(p, coeff);
    }
  }
  return out;
}

PathSum cyclic_derivative(const QP& qp, const std::string& arrow) {
  if (!qp.has_arrow(arrow)) raise("UnknownArrow", "no arrow '" + arrow + "'");
  return cyclic_derivative(qp.potential, arrow);
}

std::map<std::string, PathSum> jacobian_generators(const QP& qp) {
  std::map<std::string, PathSum> out;
  for (const auto& a : qp.arrows) out[a.id] = cyclic_derivative(qp.potential, a.id);
  return out;
}

QP potential_of(const Triangulation& t) {
  const Quiver q = quiver_of(t);
  QP qp;
  qp.vertices = q.vertices;
  auto instance = [](const std::pair<Vertex, Vertex>& k, int j) {
    const std::string base = k.first + "->" + k.second;
    return j == 1 ? base : base + "#" + std::to_string(j);
  };
  for (const auto& [k, m] : q.arrows)
    for (int j = 1; j <= m; ++j) qp.arrows.push_back({instance(k, j), k.first, k.second});
  std::map<std::pair<Vertex, Vertex>, int> used;
  for (const Face& f : faces(t)) {
    if (!f.internal()) continue;
    Path cycle;
    for (int r = 0; r < 3; ++r) {
      const std::pair<Vertex, Vertex> k{t.arcs[f.sides[r]].id, t.arcs[f.sides[(r + 1) % 3]].id};
      const int j = ++used[k];
      if (j > q.mult(k.first, k.second)) raise("InternalError", "internal triangle arrow was cancelled");
      cycle.push_back(instance(k, j));
    }
    qp.potential.add(cycle, 1);
  }
  return qp;
}

namespace {

void note_drop(QPReport* report, const std::string& what) {
  if (report) report->truncations.push_back(what);
}

void add_term(Potential& w, const Path& c, const Rational& coeff, QPReport* report) {
  if (!w.add(c, coeff)) note_drop(report, "dropped term of degree " + std::to_string(c.size()));
}

}  // namespace

QP premutate(const QP& qp, const Vertex& k, QPReport* report) {
  if (std::find(qp.vertices.begin(), qp.vertices.end(), k) == qp.vertices.end())
    raise("UnknownVertex", "no vertex '" + k + "'");
  std::vector<QPArrow> ins, outs;
  for (const auto& a : qp.arrows) {
    if (a.from == k && a.to == k) raise("LoopAtVertex", "loop '" + a.id + "' at " + k);
    if (a.to == k) ins.push_back(a);
    if (a.from == k) outs.push_back(a);
  }
  QP r;
  r.vertices = qp.vertices;
  r.potential.degree = qp.potential.degree;
  for (const auto& a : qp.arrows) {
    if (a.from == k || a.to == k) r.arrows.push_back({star(a.id), a.to, a.from});
    else r.arrows.push_back(a);
  }
  for (const auto& b : ins)
    for (const auto& a : outs) r.arrows.push_back({composite(a.id, b.id), b.from, a.to});
  for (const auto& [c, coeff] : qp.potential.terms) {
    const size_t n = c.size();
    size_t start = n;
    for (size_t s = 0; s < n; ++s)
      if (qp.arrow(c[s]).from != k) {
        start = s;
        break;
      }
    if (start == n) raise("LoopAtVertex", "potential cycle lives entirely at " + k);
    Path rot, merged;
    for (size_t s = 0; s < n; ++s) rot.push_back(c[(start + s) % n]);
    for (size_t s = 0; s < n; ++s) {
      if (qp.arrow(rot[s]).to == k) {
        merged.push_back(composite(rot[s + 1], rot[s]));
        ++s;
      } else {
        merged.push_back(rot[s]);
      }
    }
    add_term(r.potential, merged, coeff, report);
  }
  for (const auto& b : ins)
    for (const auto& a : outs) add_term(r.potential, {composite(a.id, b.id), star(a.id), star(b.id)}, 1, report);
  return r;
}

namespace {

// Replaces every occurrence of arrow x by x + delta.
Potential substitute(const Potential& w, const std::string& x, const PathSum& delta, QPReport* report) {
  Potential out;
  out.degree = w.degree;
  for (const auto& [c, coeff] : w.terms) {
    if (std::find(c.begin(), c.end(), x) == c.end()) {
      out.add(c, coeff);
      continue;
    }
    std::vector<std::pair<Path, Rational>> partial{{{}, coeff}};
    for (const auto& a : c) {
      std::vector<std::pair<Path, Rational>> next;
      for (const auto& [p, k] : partial) {
        Path keep = p;
        keep.push_back(a);
        next.push_back({keep, k});
        if (a != x) continue;
        for (const auto& [d, dk] : delta.terms) {
          Path s = p;
          s.insert(s.end(), d.begin(), d.end());
          if (int(s.size()) > w.degree) {
            note_drop(report, "truncated substitution of " + x);
            continue;
          }
          next.push_back({s, k * dk});
        }
      }
      partial = std::move(next);
    }
    for (const auto& [p, k] : partial) add_term(out, p, k, report);
  }
  return out;
}

size_t occurrences(const Path& c, const std::string& a) { return size_t(std::count(c.begin(), c.end(), a)); }

// Sum over terms (other than the 2-cycle) containing `a` of -c/(lambda m) d_a(term).
PathSum correction(const Potential& w, const Path& pair, const std::string& a, const Rational& lambda) {
  PathSum out;
  for (const auto& [c, coeff] : w.terms) {
    if (c == pair) continue;
    const size_t m = occurrences(c, a);
    if (!m) continue;
    Potential single;
    single.degree = w.degree;
    single.terms[c] = coeff;
    const Rational scale = Rational(-1) / (lambda * Rational(long(m)));
    for (const auto& [p, k] : cyclic_derivative(single, a).terms) out.add(p, k * scale);
  }
  return out;
}

bool mentions(const Potential& w, const Path& pair, const std::string& a) {
  for (const auto& [c, coeff] : w.terms)
    if (c != pair && occurrences(c, a)) return true;
  return false;
}

}  // namespace

QP reduce(const QP& qp0, QPReport* report) {
  QP qp = qp0;
  std::set<Path> skipped;
  for (;;) {
    std::optional<Path> pick;
    for (const auto& [c, coeff] : qp.potential.terms)
      if (c.size() == 2 && c[0] != c[1] && !skipped.count(c)) {
        pick = c;
        break;
      }
    if (!pick) break;
    const Path pair = *pick;
    const std::string x = pair[0], y = pair[1];
    const int cap = 2 * qp.potential.degree + 4;
    for (int it = 0; it < cap; ++it) {
      const Rational lambda = qp.potential.terms.at(pair);
      if (mentions(qp.potential, pair, y))
        qp.potential = substitute(qp.potential, x, correction(qp.potential, pair, y, lambda), report);
      const Rational lambda2 = qp.potential.terms.at(pair);
      if (mentions(qp.potential, pair, x))
        qp.potential = substitute(qp.potential, y, correction(qp.potential, pair, x, lambda2), report);
      if (!mentions(qp.potential, pair, x) && !mentions(qp.potential, pair, y)) break;
    }
    Potential rest;
    rest.degree = qp.potential.degree;
    for (const auto& [c, coeff] : qp.potential.terms) {
      if (c == pair) continue;
      if (occurrences(c, x) || occurrences(c, y)) {
        note_drop(report, "residual term through " + x + "/" + y + " dropped at truncation");
        continue;
      }
      rest.terms[c] = coeff;
    }
    qp.potential = rest;
    qp.arrows.erase(std::remove_if(qp.arrows.begin(), qp.arrows.end(),
                                   [&](const QPArrow& a) { return a.id == x || a.id == y; }),
                    qp.arrows.end());
  }
  if (report) {
    std::set<size_t> used;
    for (size_t i = 0; i < qp.arrows.size(); ++i) {
      if (used.count(i) || qp.arrows[i].from == qp.arrows[i].to) continue;
      for (size_t j = i + 1; j < qp.arrows.size(); ++j) {
        if (used.count(j)) continue;
        if (qp.arrows[j].from == qp.arrows[i].to && qp.arrows[j].to == qp.arrows[i].from) {
          used.insert(i);
          used.insert(j);
          report->non_trivializable.push_back({qp.arrows[i].id, qp.arrows[j].id});
          break;
        }
      }
    }
  }
  return qp;
}

QP qp_mutate(const QP& qp, const Vertex& k, QPReport* report) { return reduce(premutate(qp, k, report), report); }

std::vector<std::pair<size_t, std::string>> term_signature(const Potential& w) {
  std::vector<std::pair<size_t, std::string>> out;
  for (const auto& [c, coeff] : w.terms) out.push_back({c.size(), coeff_string(coeff)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace annulus
