#pragma once

#include "annulus/laurent.hpp"
#include "annulus/qp.hpp"
#include "annulus/quiver.hpp"
#include "annulus/triangulation.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace annulus {

// Partial asymptotic triangulation of the limit component: p arcs on one boundary of period p.
struct LimitTriangulation {
  int p = 1;
  std::vector<LabeledArc> arcs;  // ids "1".."p"; peripheral or asymptotic arcs, boundary Outer
  bool operator==(const LimitTriangulation&) const = default;
};

enum class Tag { Plain, Notched, Boundary };
std::string to_string(Tag t);

struct TaggedArc {
  std::string id;
  Tag tag = Tag::Plain;
  Arc arc;
};

struct TaggedDiscTriangulation {
  int p = 1;
  std::vector<TaggedArc> arcs;
};

// Throws InvalidTriangulation.
LimitTriangulation make_limit(int p, std::vector<LabeledArc> arcs);
LimitTriangulation initial_limit(int p);
LimitTriangulation flip(const LimitTriangulation& t, const std::string& id);
TaggedDiscTriangulation tagged(const LimitTriangulation& t);

std::string cluster_variable_name(int p, int i);  // i is 1-based
std::string frozen_variable_name(int p, int segment);

struct DoubleCover {
  Quiver quiver;
  std::map<Vertex, Vertex> involution;
};

DoubleCover double_cover(const LimitTriangulation& t);
std::string lift_name(const std::string& id, int sheet);

struct Seed {
  LimitTriangulation downstairs;
  Quiver quiver;
  std::map<Vertex, Laurent> variables;
  bool operator==(const Seed& o) const {
    return downstairs == o.downstairs && quiver == o.quiver && variables == o.variables;
  }
};

Seed initial_seed(int p);
// Mutates i^1 then i^2 (or i^2 first); throws NonCommutingPair or UnknownArc.
Seed composite_mutate(const Seed& s, const std::string& i, bool second_sheet_first = false);
bool deck_symmetric(const Seed& s);
bool laurent_property(const Seed& s);

struct LambdaLength {
  Laurent variable;
  Rational scale = 1;
  std::string to_string() const;
};

std::map<std::string, LambdaLength> lambda_lengths(const Seed& s);
// Equality up to relabeling that preserves variables.
bool equivalent(const Seed& a, const Seed& b);
std::vector<std::string> sorted_variables(const Seed& s);

struct ExchangeGraph {
  std::vector<Seed> seeds;
  std::vector<std::tuple<int, int, std::string>> edges;  // (from, to, downstairs index)
  bool closed = false;
};

constexpr size_t kExchangeBudget = 10000;

// Breadth-first over composite mutations; throws ExplorationBudgetExceeded.
ExchangeGraph exchange_graph(const Seed& s, int depth, size_t budget = kExchangeBudget);

}  // namespace annulus
