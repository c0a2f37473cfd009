#pragma once

#include "annulus/arc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace annulus {

enum class TriangulationKind { Finite, Asymptotic };

struct LabeledArc {
  std::string id;
  Arc arc;

  bool operator==(const LabeledArc&) const = default;
};

struct Triangulation {
  AnnulusShape shape;
  std::vector<LabeledArc> arcs;
  TriangulationKind kind = TriangulationKind::Finite;

  bool finite() const { return kind == TriangulationKind::Finite; }
  int index_of(const std::string& id) const;
  const Arc& arc(const std::string& id) const;
  std::vector<std::string> ids() const;
  std::vector<Arc> arc_multiset() const;
  bool all_bridging() const;
  int count(ArcKind k) const;

  bool operator==(const Triangulation&) const = default;
};

std::string to_string(const Triangulation& t);

// Canonicalizes every arc, infers the kind and validates; throws InvalidTriangulation.
Triangulation make_triangulation(const AnnulusShape& s, std::vector<LabeledArc> arcs);
std::vector<LabeledArc> label(const std::vector<Arc>& arcs, const std::string& prefix = "d");

std::optional<std::string> validation_error(const Triangulation& t);
bool pairwise_compatible(const std::vector<Arc>& arcs, const AnnulusShape& s);

// Arcs of an asymptotic triangulation living on one boundary (peripheral or asymptotic).
std::vector<int> boundary_part(const Triangulation& t, Boundary b);
std::vector<int> asymptotic_on(const Triangulation& t, Boundary b);

Triangulation flip(const Triangulation& t, const std::string& id);
Arc flipped_arc(const Triangulation& t, const std::string& id);
std::vector<std::string> bounding_arcs(const Triangulation& t);

Triangulation complete_to_triangulation(const std::vector<Arc>& partial, const AnnulusShape& s);
Triangulation complete_to_triangulation(const std::vector<LabeledArc>& partial, const AnnulusShape& s);

Triangulation fan_triangulation(const AnnulusShape& s);

}  // namespace annulus
