#pragma once

#include "annulus/triangulation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace annulus {

enum class Direction { Plus, Minus };

Direction parse_direction(const std::string& s);
std::string to_string(Direction d);

struct FlipSequence {
  std::vector<std::string> steps;

  FlipSequence inverse() const;
  bool operator==(const FlipSequence&) const = default;
};

Triangulation replay(const Triangulation& t, const FlipSequence& seq);

Triangulation dehn_twist(const Triangulation& t, Direction d, int n = 1);
Triangulation dehn_limit(const Triangulation& t, Direction d);

// Flips along admissible_ordering(quiver_of(t)) and asserts the -1 endpoint shift.
Triangulation coxeter_bridging(const Triangulation& t);
Triangulation coxeter_bridging(const Triangulation& t, const std::vector<std::string>& ordering);
Triangulation shift_endpoints(const Triangulation& t, Lift by);

std::pair<Triangulation, FlipSequence> reduce_to_bridging(const Triangulation& t);
Triangulation coxeter(const Triangulation& t);
Triangulation coxeter_power(const Triangulation& t, int n);

struct RelationReport {
  std::string relation;
  bool pass = false;
  int m = 0, r = 0, s = 0;
  std::optional<std::string> witness;
};

struct CoxeterExponents {
  int m, r, s;
};
CoxeterExponents coxeter_exponents(const AnnulusShape& s);

// Per-id equality plus canonical multiset equality; returns a witness on mismatch.
std::optional<std::string> compare_triangulations(const Triangulation& a, const Triangulation& b);

RelationReport check_flip_dehn(const Triangulation& t);
RelationReport check_cox_dehn_reduced(const Triangulation& t);
RelationReport check_cox_dehn(const Triangulation& t);
std::vector<RelationReport> check_commutativity(const Triangulation& t);

}  // namespace annulus
