#include "annulus/quiver.hpp"

#include "annulus/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace annulus {

bool Quiver::has_vertex(const Vertex& v) const { return index(v) >= 0; }

int Quiver::index(const Vertex& v) const {
  for (int i = 0; i < int(vertices.size()); ++i)
    if (vertices[i] == v) return i;
  return -1;
}

void Quiver::add_vertex(const Vertex& v) {
  if (!has_vertex(v)) vertices.push_back(v);
}

void Quiver::add_arrow(const Vertex& from, const Vertex& to, int mult) {
  if (mult == 0) return;
  add_vertex(from);
  add_vertex(to);
  int& m = arrows[{from, to}];
  m += mult;
  if (m == 0) arrows.erase({from, to});
}

void Quiver::remove_vertex(const Vertex& v) {
  vertices.erase(std::remove(vertices.begin(), vertices.end(), v), vertices.end());
  for (auto it = arrows.begin(); it != arrows.end();)
    it = (it->first.first == v || it->first.second == v) ? arrows.erase(it) : std::next(it);
  frozen.erase(v);
  framing_pairs.erase(std::remove_if(framing_pairs.begin(), framing_pairs.end(),
                                     [&](const auto& p) { return p.first == v || p.second == v; }),
                      framing_pairs.end());
}

int Quiver::mult(const Vertex& from, const Vertex& to) const {
  auto it = arrows.find({from, to});
  return it == arrows.end() ? 0 : it->second;
}

int Quiver::arrow_count() const {
  int n = 0;
  for (const auto& [k, m] : arrows) n += m;
  return n;
}

bool Quiver::is_framing(const Vertex& v) const {
  for (const auto& [a, b] : framing_pairs)
    if (a == v || b == v) return true;
  return false;
}

bool Quiver::has_loop_or_2cycle_at(const Vertex& v) const {
  if (mult(v, v)) return true;
  for (const auto& [k, m] : arrows)
    if (k.first == v && mult(k.second, v)) return true;
  return false;
}

std::vector<Vertex> Quiver::out_neighbors(const Vertex& v) const {
  std::vector<Vertex> out;
  for (const auto& [k, m] : arrows)
    if (k.first == v) out.push_back(k.second);
  return out;
}

std::vector<Vertex> Quiver::in_neighbors(const Vertex& v) const {
  std::vector<Vertex> out;
  for (const auto& [k, m] : arrows)
    if (k.second == v) out.push_back(k.first);
  return out;
}

void Quiver::prune() {
  for (auto it = arrows.begin(); it != arrows.end();) it = it->second == 0 ? arrows.erase(it) : std::next(it);
}

bool Quiver::operator==(const Quiver& o) const {
  auto sorted = [](std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto pairs = [](std::vector<std::pair<Vertex, Vertex>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return sorted(vertices) == sorted(o.vertices) && arrows == o.arrows && frozen == o.frozen &&
         pairs(framing_pairs) == pairs(o.framing_pairs);
}

bool natural_less(const std::string& a, const std::string& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit((unsigned char)a[i]) && std::isdigit((unsigned char)b[j])) {
      size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit((unsigned char)a[i2])) ++i2;
      while (j2 < b.size() && std::isdigit((unsigned char)b[j2])) ++j2;
      const std::string na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
      const auto ta = na.substr(std::min(na.find_first_not_of('0'), na.size()));
      const auto tb = nb.substr(std::min(nb.find_first_not_of('0'), nb.size()));
      if (ta.size() != tb.size()) return ta.size() < tb.size();
      if (ta != tb) return ta < tb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return a.size() - i < b.size() - j;
  return a < b;
}

Quiver make_quiver(const std::vector<Vertex>& vertices, const std::vector<std::pair<Vertex, Vertex>>& arrows) {
  Quiver q;
  for (const auto& v : vertices) q.add_vertex(v);
  for (const auto& [a, b] : arrows) q.add_arrow(a, b);
  return q;
}

std::string to_string(const Quiver& q) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, m] : q.arrows) {
    os << (first ? "" : ", ") << k.first << "->" << k.second;
    if (m != 1) os << "x" << m;
    first = false;
  }
  os << "}";
  return os.str();
}

Quiver cancel_two_cycles(const Quiver& q) {
  Quiver r = q;
  for (auto& [k, m] : r.arrows) {
    if (k.first >= k.second) continue;
    auto it = r.arrows.find({k.second, k.first});
    if (it == r.arrows.end()) continue;
    const int c = std::min(m, it->second);
    m -= c;
    it->second -= c;
  }
  r.prune();
  return r;
}

Quiver mutate(const Quiver& q, const Vertex& k) {
  if (!q.has_vertex(k)) raise("UnknownVertex", "no vertex '" + k + "'");
  if (q.frozen.count(k)) raise("NotMutable", "vertex '" + k + "' is frozen");
  if (q.is_framing(k)) raise("NotMutable", "vertex '" + k + "' is a framing vertex");
  if (q.has_loop_or_2cycle_at(k)) raise("NotMutable", "vertex '" + k + "' has a loop or 2-cycle");
  Quiver r = q;
  std::vector<std::pair<Vertex, int>> ins, outs;
  for (const auto& [key, m] : q.arrows) {
    if (key.second == k) ins.push_back({key.first, m});
    if (key.first == k) outs.push_back({key.second, m});
  }
  std::set<std::pair<Vertex, Vertex>> touched;
  for (const auto& [i, a] : ins)
    for (const auto& [j, b] : outs) {
      r.arrows[{i, j}] += a * b;
      touched.insert(std::minmax(i, j));
    }
  for (const auto& [i, a] : ins) {
    r.arrows.erase({i, k});
    r.arrows[{k, i}] += a;
  }
  for (const auto& [j, b] : outs) {
    r.arrows.erase({k, j});
    r.arrows[{j, k}] += b;
  }
  for (const auto& [x, y] : touched) {
    auto a = r.arrows.find({x, y}), b = r.arrows.find({y, x});
    if (a == r.arrows.end() || b == r.arrows.end()) continue;
    const int c = std::min(a->second, b->second);
    a->second -= c;
    b->second -= c;
  }
  r.prune();
  return r;
}

std::set<Vertex> sources(const Quiver& q) {
  std::set<Vertex> out(q.vertices.begin(), q.vertices.end());
  for (const auto& [k, m] : q.arrows) out.erase(k.second);
  return out;
}

namespace {

std::vector<Vertex> natural_order(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end(), natural_less);
  return v;
}

// Turning a source into a sink.
void reverse_at(Quiver& q, const Vertex& v) {
  std::vector<std::pair<Vertex, int>> outs;
  for (const auto& [k, m] : q.arrows)
    if (k.first == v) outs.push_back({k.second, m});
  for (const auto& [j, m] : outs) {
    q.arrows.erase({v, j});
    q.arrows[{j, v}] += m;
  }
}

}  // namespace

std::optional<std::vector<Vertex>> admissible_ordering(const Quiver& q) {
  std::vector<Vertex> remaining = natural_order(q.vertices), out;
  Quiver cur = q;
  while (!remaining.empty()) {
    const auto src = sources(cur);
    auto it = std::find_if(remaining.begin(), remaining.end(), [&](const Vertex& v) { return src.count(v); });
    if (it == remaining.end()) return std::nullopt;
    out.push_back(*it);
    cur.remove_vertex(*it);
    remaining.erase(it);
  }
  return out;
}

bool is_admissible(const Quiver& q, const std::vector<Vertex>& ordering) {
  if (ordering.size() != q.vertices.size()) return false;
  std::set<Vertex> seen;
  Quiver cur = q;
  for (const auto& v : ordering) {
    if (!q.has_vertex(v) || !seen.insert(v).second) return false;
    if (!sources(cur).count(v)) return false;
    reverse_at(cur, v);
  }
  return true;
}

std::vector<std::vector<Vertex>> all_admissible_orderings(const Quiver& q, size_t limit) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> prefix;
  std::function<void(const Quiver&)> rec = [&](const Quiver& cur) {
    if (out.size() >= limit) return;
    if (cur.vertices.empty()) {
      out.push_back(prefix);
      return;
    }
    for (const auto& v : natural_order(cur.vertices)) {
      if (!sources(cur).count(v)) continue;
      Quiver next = cur;
      next.remove_vertex(v);
      prefix.push_back(v);
      rec(next);
      prefix.pop_back();
    }
  };
  rec(q);
  return out;
}

long long euler_form(const Quiver& q, const DimensionVector& x, const DimensionVector& y) {
  if (x.size() != q.vertices.size() || y.size() != q.vertices.size())
    raise("DimensionMismatch", "dimension vector length differs from vertex count");
  long long s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  for (const auto& [k, m] : q.arrows) s -= (long long)m * x[q.index(k.first)] * y[q.index(k.second)];
  return s;
}

long long sym_form(const Quiver& q, const DimensionVector& x, const DimensionVector& y) {
  return euler_form(q, x, y) + euler_form(q, y, x);
}

DimensionVector unit_vector(const Quiver& q, const Vertex& i) {
  const int idx = q.index(i);
  if (idx < 0) raise("UnknownVertex", "no vertex '" + i + "'");
  DimensionVector e(q.vertices.size(), 0);
  e[idx] = 1;
  return e;
}

DimensionVector reflection(const Quiver& q, const Vertex& i, const DimensionVector& x) {
  if (q.mult(i, i)) raise("LoopAtVertex", "loop at '" + i + "'");
  const DimensionVector e = unit_vector(q, i);
  const long long c = sym_form(q, x, e);
  DimensionVector r = x;
  r[q.index(i)] -= c;
  return r;
}

DimensionVector coxeter_vector(const Quiver& q, const std::vector<Vertex>& ordering, const DimensionVector& x) {
  if (!is_admissible(q, ordering)) raise("NoAdmissibleOrdering", "ordering is not admissible");
  DimensionVector r = x;
  for (const auto& v : ordering) r = reflection(q, v, r);
  return r;
}

std::vector<std::vector<Vertex>> weak_components(const Quiver& q) {
  std::map<Vertex, Vertex> parent;
  for (const auto& v : q.vertices) parent[v] = v;
  std::function<Vertex(const Vertex&)> find = [&](const Vertex& v) -> Vertex {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& [k, m] : q.arrows) parent[find(k.first)] = find(k.second);
  std::vector<std::vector<Vertex>> out;
  std::map<Vertex, int> slot;
  for (const auto& v : q.vertices) {
    const Vertex r = find(v);
    auto [it, fresh] = slot.try_emplace(r, int(out.size()));
    if (fresh) out.emplace_back();
    out[it->second].push_back(v);
  }
  return out;
}

Quiver induced_subquiver(const Quiver& q, const std::vector<Vertex>& keep) {
  const std::set<Vertex> k(keep.begin(), keep.end());
  Quiver r;
  for (const auto& v : q.vertices)
    if (k.count(v)) r.vertices.push_back(v);
  for (const auto& [key, m] : q.arrows)
    if (k.count(key.first) && k.count(key.second)) r.arrows[key] = m;
  for (const auto& v : q.frozen)
    if (k.count(v)) r.frozen.insert(v);
  for (const auto& p : q.framing_pairs)
    if (k.count(p.first) && k.count(p.second)) r.framing_pairs.push_back(p);
  return r;
}

Quiver relabel(const Quiver& q, const std::map<Vertex, Vertex>& names) {
  auto nm = [&](const Vertex& v) {
    auto it = names.find(v);
    return it == names.end() ? v : it->second;
  };
  Quiver r;
  for (const auto& v : q.vertices) r.vertices.push_back(nm(v));
  for (const auto& [k, m] : q.arrows) r.arrows[{nm(k.first), nm(k.second)}] += m;
  for (const auto& v : q.frozen) r.frozen.insert(nm(v));
  for (const auto& [a, b] : q.framing_pairs) r.framing_pairs.push_back({nm(a), nm(b)});
  return r;
}

std::optional<std::map<Vertex, Vertex>> find_isomorphism(const Quiver& a, const Quiver& b, bool respect_frozen) {
  const size_t n = a.vertices.size();
  if (n != b.vertices.size() || a.arrow_count() != b.arrow_count()) return std::nullopt;
  auto matrix = [](const Quiver& q) {
    std::vector<std::vector<int>> m(q.vertices.size(), std::vector<int>(q.vertices.size(), 0));
    for (const auto& [k, c] : q.arrows) m[q.index(k.first)][q.index(k.second)] = c;
    return m;
  };
  const auto ma = matrix(a), mb = matrix(b);
  auto signature = [](const std::vector<std::vector<int>>& m, size_t v, bool frozen) {
    std::vector<int> outs, ins;
    for (size_t u = 0; u < m.size(); ++u) {
      if (m[v][u]) outs.push_back(m[v][u]);
      if (m[u][v]) ins.push_back(m[u][v]);
    }
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    return std::make_tuple(m[v][v], outs, ins, frozen);
  };
  std::vector<decltype(signature(ma, 0, false))> sa, sb;
  for (size_t v = 0; v < n; ++v) {
    sa.push_back(signature(ma, v, respect_frozen && a.frozen.count(a.vertices[v])));
    sb.push_back(signature(mb, v, respect_frozen && b.frozen.count(b.vertices[v])));
  }
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(size_t)> rec = [&](size_t v) -> bool {
    if (v == n) return true;
    for (size_t w = 0; w < n; ++w) {
      if (used[w] || sa[v] != sb[w]) continue;
      bool ok = true;
      for (size_t u = 0; u < v && ok; ++u)
        ok = ma[v][u] == mb[w][map[u]] && ma[u][v] == mb[map[u]][w];
      if (!ok) continue;
      map[v] = int(w);
      used[w] = true;
      if (rec(v + 1)) return true;
      used[w] = false;
    }
    map[v] = -1;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  std::map<Vertex, Vertex> out;
  for (size_t v = 0; v < n; ++v) out[a.vertices[v]] = b.vertices[map[v]];
  return out;
}

bool isomorphic(const Quiver& a, const Quiver& b, bool respect_frozen) {
  return find_isomorphism(a, b, respect_frozen).has_value();
}

}  // namespace annulus
