#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace annulus {

using Vertex = std::string;
using DimensionVector = std::vector<long long>;

struct Quiver {
  std::vector<Vertex> vertices;
  std::map<std::pair<Vertex, Vertex>, int> arrows;
  std::vector<std::pair<Vertex, Vertex>> framing_pairs;
  std::set<Vertex> frozen;

  bool has_vertex(const Vertex& v) const;
  int index(const Vertex& v) const;
  void add_vertex(const Vertex& v);
  void add_arrow(const Vertex& from, const Vertex& to, int mult = 1);
  void remove_vertex(const Vertex& v);
  int mult(const Vertex& from, const Vertex& to) const;
  int arrow_count() const;
  bool is_framing(const Vertex& v) const;
  bool has_loop_or_2cycle_at(const Vertex& v) const;
  std::vector<Vertex> out_neighbors(const Vertex& v) const;
  std::vector<Vertex> in_neighbors(const Vertex& v) const;
  void prune();

  bool operator==(const Quiver& o) const;
};

bool natural_less(const std::string& a, const std::string& b);

Quiver make_quiver(const std::vector<Vertex>& vertices, const std::vector<std::pair<Vertex, Vertex>>& arrows);
std::string to_string(const Quiver& q);

// Signed-adjacency cancellation of all opposite arrow pairs.
Quiver cancel_two_cycles(const Quiver& q);

Quiver mutate(const Quiver& q, const Vertex& k);

std::set<Vertex> sources(const Quiver& q);
std::optional<std::vector<Vertex>> admissible_ordering(const Quiver& q);
bool is_admissible(const Quiver& q, const std::vector<Vertex>& ordering);
std::vector<std::vector<Vertex>> all_admissible_orderings(const Quiver& q, size_t limit = 100000);

long long euler_form(const Quiver& q, const DimensionVector& x, const DimensionVector& y);
long long sym_form(const Quiver& q, const DimensionVector& x, const DimensionVector& y);
DimensionVector reflection(const Quiver& q, const Vertex& i, const DimensionVector& x);
DimensionVector coxeter_vector(const Quiver& q, const std::vector<Vertex>& ordering, const DimensionVector& x);
DimensionVector unit_vector(const Quiver& q, const Vertex& i);

// Vertex bijection from a to b preserving arrow multiplicities (and frozen sets if asked).
std::optional<std::map<Vertex, Vertex>> find_isomorphism(const Quiver& a, const Quiver& b, bool respect_frozen = false);
bool isomorphic(const Quiver& a, const Quiver& b, bool respect_frozen = false);

std::vector<std::vector<Vertex>> weak_components(const Quiver& q);
Quiver induced_subquiver(const Quiver& q, const std::vector<Vertex>& keep);
Quiver relabel(const Quiver& q, const std::map<Vertex, Vertex>& names);

}  // namespace annulus
