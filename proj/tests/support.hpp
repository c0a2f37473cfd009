#pragma once

#include "annulus/errors.hpp"
#include "annulus/json_io.hpp"
#include "annulus/quiver.hpp"
#include "annulus/triangulation.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

inline std::string read(const std::string& name) {
  std::ifstream in(std::string(ANNULUS_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline annulus::Json json(const std::string& name) { return annulus::parse_json(read(name)); }
inline annulus::Triangulation triangulation(const std::string& name) {
  return annulus::triangulation_from_json(json(name));
}
inline annulus::Quiver quiver(const std::string& name) { return annulus::quiver_from_json(json(name)); }

}  // namespace fixtures

using Arrows = std::vector<std::pair<std::string, std::string>>;

// Vertices are collected from the arrows (plus extras) in natural order.
inline annulus::Quiver Q(const Arrows& arrows, std::vector<std::string> extra = {}) {
  for (const auto& [a, b] : arrows) {
    extra.push_back(a);
    extra.push_back(b);
  }
  std::sort(extra.begin(), extra.end(), annulus::natural_less);
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  return annulus::make_quiver(extra, arrows);
}

// d1 -> 1 so quivers can be compared with goldens that number arcs.
inline annulus::Quiver numbered(const annulus::Quiver& q, const std::string& prefix = "d") {
  std::map<std::string, std::string> names;
  for (const auto& v : q.vertices) names[v] = v.rfind(prefix, 0) == 0 ? v.substr(prefix.size()) : v;
  return annulus::relabel(q, names);
}

template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const annulus::Error& e) {
    return e.code();
  }
  return "";
}
